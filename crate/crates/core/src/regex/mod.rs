//! Extended regular expressions: syntax trees kept in similarity normal
//! form, the nullability test, and derivatives by letter and word.
//!
//! The similarity rules applied are exactly: associativity, commutativity
//! and idempotence of union (realized by flattening, canonical sorting and
//! duplicate removal), the unit/annihilator laws `L ∪ ∅ = L`, `∅L = L∅ = ∅`
//! and `εL = Lε = L`, the same ACI treatment for intersection, and pairwise
//! cancellation `x ⊕ x = ∅` for symmetric difference. Nothing else is
//! rewritten; in particular `(L*)*`, `ε ∪ LL*` and double complement are
//! left alone, so the set of dissimilar derivatives stays meaningful.

mod display;
mod parse;

pub use parse::parse;

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

/// An extended regular expression in similarity normal form.
///
/// Normal-form invariants, maintained by the smart constructors:
/// `Union`/`Intersect`/`SymDiff` lists are flat (no directly nested node of
/// the same kind), sorted by the canonical order and hold at least two
/// operands; `Union` and `Intersect` hold no duplicates, `SymDiff`
/// duplicates cancel in pairs; `Union` holds no `Empty`; `Concat` lists are
/// flat, hold at least two operands and no `Epsilon`, and a `Concat`
/// containing `Empty` collapses to `Empty`.
///
/// The canonical total order on trees is the derived [`Ord`]: variant rank
/// in the declaration order below, then children lexicographically, then
/// letters in character order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(char),
    Union(Vec<Regex>),
    Concat(Vec<Regex>),
    Star(Box<Regex>),
    Complement(Box<Regex>),
    Intersect(Vec<Regex>),
    Diff(Box<Regex>, Box<Regex>),
    SymDiff(Vec<Regex>),
}

impl Regex {
    pub fn letter(c: char) -> Regex {
        Regex::Letter(c)
    }

    /// Union of the operands: flattens, drops `∅`, sorts and removes
    /// duplicates. The empty union is `∅`.
    pub fn union(operands: impl IntoIterator<Item = Regex>) -> Regex {
        let mut flat = Vec::new();
        for r in operands {
            match r {
                Regex::Union(inner) => flat.extend(inner),
                Regex::Empty => {}
                other => flat.push(other),
            }
        }
        flat.sort();
        flat.dedup();
        match flat.len() {
            0 => Regex::Empty,
            1 => flat.pop().unwrap(),
            _ => Regex::Union(flat),
        }
    }

    /// Concatenation of the operands in order: flattens, drops `ε`, and
    /// collapses to `∅` if any factor is `∅`. The empty product is `ε`.
    pub fn concat(operands: impl IntoIterator<Item = Regex>) -> Regex {
        let mut flat = Vec::new();
        for r in operands {
            match r {
                Regex::Concat(inner) => flat.extend(inner),
                Regex::Epsilon => {}
                Regex::Empty => return Regex::Empty,
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Regex::Epsilon,
            1 => flat.pop().unwrap(),
            _ => Regex::Concat(flat),
        }
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    pub fn complement(inner: Regex) -> Regex {
        Regex::Complement(Box::new(inner))
    }

    /// Intersection of the operands: flattens, sorts and removes
    /// duplicates. The empty intersection is the universal language `!∅`.
    pub fn intersect(operands: impl IntoIterator<Item = Regex>) -> Regex {
        let mut flat = Vec::new();
        for r in operands {
            match r {
                Regex::Intersect(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        flat.sort();
        flat.dedup();
        match flat.len() {
            0 => Regex::complement(Regex::Empty),
            1 => flat.pop().unwrap(),
            _ => Regex::Intersect(flat),
        }
    }

    /// Set difference. Kept binary; difference is not commutative and gets
    /// no ACI treatment beyond its children being in normal form.
    pub fn diff(left: Regex, right: Regex) -> Regex {
        Regex::Diff(Box::new(left), Box::new(right))
    }

    /// Symmetric difference of the operands: flattens, sorts, and cancels
    /// duplicates in pairs (`x ⊕ x = ∅`). The empty sum is `∅`.
    pub fn sym_diff(operands: impl IntoIterator<Item = Regex>) -> Regex {
        let mut flat = Vec::new();
        for r in operands {
            match r {
                Regex::SymDiff(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        flat.sort();
        let mut kept: Vec<Regex> = Vec::with_capacity(flat.len());
        for r in flat {
            if kept.last() == Some(&r) {
                kept.pop();
            } else {
                kept.push(r);
            }
        }
        match kept.len() {
            0 => Regex::Empty,
            1 => kept.pop().unwrap(),
            _ => Regex::SymDiff(kept),
        }
    }

    /// Rebuilds the tree bottom-up through the smart constructors,
    /// producing the similarity normal form. Idempotent, and the identity
    /// on trees already built through the constructors.
    pub fn normalize(&self) -> Regex {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => self.clone(),
            Regex::Union(ops) => Regex::union(ops.iter().map(Regex::normalize)),
            Regex::Concat(ops) => Regex::concat(ops.iter().map(Regex::normalize)),
            Regex::Star(r) => Regex::star(r.normalize()),
            Regex::Complement(r) => Regex::complement(r.normalize()),
            Regex::Intersect(ops) => Regex::intersect(ops.iter().map(Regex::normalize)),
            Regex::Diff(l, r) => Regex::diff(l.normalize(), r.normalize()),
            Regex::SymDiff(ops) => Regex::sym_diff(ops.iter().map(Regex::normalize)),
        }
    }

    /// Whether the empty word belongs to the denoted language, computed
    /// structurally: a derivative is accepting exactly when this holds.
    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Letter(_) => false,
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Union(ops) => ops.iter().any(Regex::nullable),
            Regex::Concat(ops) | Regex::Intersect(ops) => ops.iter().all(Regex::nullable),
            Regex::Complement(r) => !r.nullable(),
            Regex::Diff(l, r) => l.nullable() && !r.nullable(),
            Regex::SymDiff(ops) => ops.iter().filter(|r| r.nullable()).count() % 2 == 1,
        }
    }

    /// The nullability test materialized as an expression: `ε` if the
    /// language contains the empty word, `∅` otherwise.
    pub fn eps_rex(&self) -> Regex {
        if self.nullable() {
            Regex::Epsilon
        } else {
            Regex::Empty
        }
    }

    /// Derivative by a single letter, in normal form. The result denotes
    /// the left quotient `a⁻¹L`. Boolean connectives derive componentwise;
    /// the product and star rules thread nullability of the head factor.
    pub fn derive_letter(&self, a: char) -> Regex {
        match self {
            Regex::Empty | Regex::Epsilon => Regex::Empty,
            Regex::Letter(b) => {
                if *b == a {
                    Regex::Epsilon
                } else {
                    Regex::Empty
                }
            }
            Regex::Union(ops) => Regex::union(ops.iter().map(|r| r.derive_letter(a))),
            Regex::Concat(ops) => derive_concat(ops, a),
            Regex::Star(inner) => Regex::concat([inner.derive_letter(a), self.clone()]),
            Regex::Complement(r) => Regex::complement(r.derive_letter(a)),
            Regex::Intersect(ops) => Regex::intersect(ops.iter().map(|r| r.derive_letter(a))),
            Regex::Diff(l, r) => Regex::diff(l.derive_letter(a), r.derive_letter(a)),
            Regex::SymDiff(ops) => Regex::sym_diff(ops.iter().map(|r| r.derive_letter(a))),
        }
    }

    /// Derivative by a word: the identity for the empty word, otherwise
    /// letter derivatives folded left to right.
    pub fn derive_word(&self, w: &str) -> Regex {
        w.chars().fold(self.clone(), |r, a| r.derive_letter(a))
    }

    /// The set of letters occurring in the tree.
    pub fn letters(&self) -> BTreeSet<char> {
        let mut set = BTreeSet::new();
        self.collect_letters(&mut set);
        set
    }

    fn collect_letters(&self, set: &mut BTreeSet<char>) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Letter(c) => {
                set.insert(*c);
            }
            Regex::Union(ops)
            | Regex::Concat(ops)
            | Regex::Intersect(ops)
            | Regex::SymDiff(ops) => {
                for r in ops {
                    r.collect_letters(set);
                }
            }
            Regex::Star(r) | Regex::Complement(r) => r.collect_letters(set),
            Regex::Diff(l, r) => {
                l.collect_letters(set);
                r.collect_letters(set);
            }
        }
    }

    /// Total number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => 1,
            Regex::Union(ops)
            | Regex::Concat(ops)
            | Regex::Intersect(ops)
            | Regex::SymDiff(ops) => 1 + ops.iter().map(Regex::size).sum::<usize>(),
            Regex::Star(r) | Regex::Complement(r) => 1 + r.size(),
            Regex::Diff(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Whether any complement node occurs in the tree. Complemented
    /// expressions only denote a language relative to an explicit alphabet.
    pub fn contains_complement(&self) -> bool {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => false,
            Regex::Complement(_) => true,
            Regex::Union(ops)
            | Regex::Concat(ops)
            | Regex::Intersect(ops)
            | Regex::SymDiff(ops) => ops.iter().any(Regex::contains_complement),
            Regex::Star(r) => r.contains_complement(),
            Regex::Diff(l, r) => l.contains_complement() || r.contains_complement(),
        }
    }
}

/// Product rule over a flattened factor list: with `K` the head factor and
/// `L` the rest, `(KL)_a = K_a L ∪ K^ε L_a`.
fn derive_concat(ops: &[Regex], a: char) -> Regex {
    debug_assert!(ops.len() >= 2);
    let head = &ops[0];
    let tail = &ops[1..];
    let tail_rex = if tail.len() == 1 {
        tail[0].clone()
    } else {
        Regex::Concat(tail.to_vec())
    };
    let first = Regex::concat([head.derive_letter(a), tail_rex]);
    if head.nullable() {
        let second = if tail.len() == 1 {
            tail[0].derive_letter(a)
        } else {
            derive_concat(tail, a)
        };
        Regex::union([first, second])
    } else {
        first
    }
}

impl Serialize for Regex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
