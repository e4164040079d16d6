//! Shared test support: a brute-force membership oracle that evaluates
//! extended regular expressions directly by structural recursion over all
//! splits of the word. Deliberately independent of the derivative
//! machinery it is used to check.

#![allow(dead_code)]

use quotient::alphabet::Alphabet;
use quotient::regex::Regex;

/// Whether `w` belongs to the language of `r`, by direct evaluation.
/// Complement is interpreted relative to the ambient word set, so only
/// query words over the working alphabet.
pub fn matches(r: &Regex, w: &str) -> bool {
    match r {
        Regex::Empty => false,
        Regex::Epsilon => w.is_empty(),
        Regex::Letter(c) => w.len() == 1 && w.starts_with(*c),
        Regex::Union(ops) => ops.iter().any(|r| matches(r, w)),
        Regex::Concat(ops) => concat_matches(ops, w),
        Regex::Star(inner) => star_matches(inner, w),
        Regex::Complement(inner) => !matches(inner, w),
        Regex::Intersect(ops) => ops.iter().all(|r| matches(r, w)),
        Regex::Diff(l, r) => matches(l, w) && !matches(r, w),
        Regex::SymDiff(ops) => ops.iter().filter(|r| matches(r, w)).count() % 2 == 1,
    }
}

fn concat_matches(ops: &[Regex], w: &str) -> bool {
    match ops.split_first() {
        None => w.is_empty(),
        Some((first, rest)) => {
            (0..=w.len()).any(|i| matches(first, &w[..i]) && concat_matches(rest, &w[i..]))
        }
    }
}

fn star_matches(inner: &Regex, w: &str) -> bool {
    if w.is_empty() {
        return true;
    }
    (1..=w.len()).any(|i| matches(inner, &w[..i]) && star_matches(inner, &w[i..]))
}

/// All words over `alphabet` with length at most `max_len`.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<String> {
    alphabet.words_up_to(max_len)
}

/// The language restricted to words of length at most `max_len`.
pub fn language_up_to(r: &Regex, alphabet: &Alphabet, max_len: usize) -> Vec<String> {
    words_up_to(alphabet, max_len)
        .into_iter()
        .filter(|w| matches(r, w))
        .collect()
}
