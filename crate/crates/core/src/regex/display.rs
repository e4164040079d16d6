//! Canonical printer. Emits the grammar of [`parse`](super::parse) with
//! minimal parentheses; `parse(print(r))` returns `r` for normal-form `r`.

use std::fmt;

use crate::regex::Regex;

// Binding strength of each node kind under the declared precedence.
fn level(r: &Regex) -> u8 {
    match r {
        Regex::Union(_) => 0,
        Regex::SymDiff(_) => 1,
        Regex::Diff(..) => 2,
        Regex::Intersect(_) => 3,
        Regex::Concat(_) => 4,
        Regex::Complement(_) => 5,
        Regex::Star(_) => 6,
        Regex::Empty | Regex::Epsilon | Regex::Letter(_) => 7,
    }
}

fn write_rex(f: &mut fmt::Formatter<'_>, r: &Regex, min: u8) -> fmt::Result {
    if level(r) < min {
        write!(f, "(")?;
        write_rex(f, r, 0)?;
        return write!(f, ")");
    }
    match r {
        Regex::Empty => write!(f, "@"),
        Regex::Epsilon => write!(f, "_"),
        Regex::Letter(c) => write!(f, "{c}"),
        Regex::Union(ops) => write_list(f, ops, "|", 1),
        Regex::SymDiff(ops) => write_list(f, ops, "^", 2),
        Regex::Diff(l, rr) => {
            write_rex(f, l, 2)?;
            write!(f, "-")?;
            write_rex(f, rr, 3)
        }
        Regex::Intersect(ops) => write_list(f, ops, "&", 4),
        Regex::Concat(ops) => {
            for op in ops {
                write_rex(f, op, 5)?;
            }
            Ok(())
        }
        Regex::Complement(inner) => {
            write!(f, "!")?;
            write_rex(f, inner, 5)
        }
        Regex::Star(inner) => {
            write_rex(f, inner, 6)?;
            write!(f, "*")
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, ops: &[Regex], sep: &str, min: u8) -> fmt::Result {
    for (i, op) in ops.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        write_rex(f, op, min)?;
    }
    Ok(())
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rex(f, self, 0)
    }
}

#[cfg(test)]
mod tests {
    use crate::alphabet::Alphabet;
    use crate::regex::{parse, Regex};

    fn lit(c: char) -> Regex {
        Regex::Letter(c)
    }

    #[test]
    fn prints_examples() {
        assert_eq!(
            Regex::union([lit('a'), Regex::star(lit('b'))]).to_string(),
            "a|b*"
        );
        assert_eq!(Regex::Empty.to_string(), "@");
        assert_eq!(Regex::concat([lit('a'), lit('b')]).to_string(), "ab");
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(
            Regex::star(Regex::union([lit('a'), lit('b')])).to_string(),
            "(a|b)*"
        );
        assert_eq!(
            Regex::star(Regex::complement(lit('a'))).to_string(),
            "(!a)*"
        );
        assert_eq!(
            Regex::complement(Regex::star(lit('a'))).to_string(),
            "!a*"
        );
        assert_eq!(
            Regex::star(Regex::star(lit('a'))).to_string(),
            "a**"
        );
        assert_eq!(
            Regex::diff(lit('a'), Regex::diff(lit('b'), lit('a'))).to_string(),
            "a-(b-a)"
        );
        assert_eq!(
            Regex::diff(Regex::diff(lit('a'), lit('b')), lit('a')).to_string(),
            "a-b-a"
        );
        assert_eq!(
            Regex::concat([Regex::complement(lit('a')), lit('b')]).to_string(),
            "!ab"
        );
        assert_eq!(
            Regex::complement(Regex::concat([lit('a'), lit('b')])).to_string(),
            "!(ab)"
        );
    }

    #[test]
    fn round_trips_through_parse() {
        let ab: Alphabet = "ab".parse().unwrap();
        for text in [
            "a|b*",
            "(a|b)*a",
            "!(a|b)*b-ab",
            "a&b&a*",
            "a^b^ab",
            "(!a)*",
            "a**",
            "_|@|ab",
            "a(b|_)(a-b)",
        ] {
            let r = parse(text, &ab).unwrap();
            let printed = r.to_string();
            let reparsed = parse(&printed, &ab).unwrap();
            assert_eq!(reparsed, r, "round trip failed for {text} -> {printed}");
        }
    }
}
