//! Parametric witness families: language pairs (or single languages)
//! whose operated complexity meets a closed-form bound exactly, bundled
//! with the claimed complexity values.

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::regex::Regex;
use crate::verify::Operation;

/// A fully instantiated witness: operands, the operation, and the exact
/// complexities the family claims.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessCase {
    pub family: String,
    pub params: Vec<u64>,
    pub alphabet: Alphabet,
    pub operands: Vec<Regex>,
    pub expected_operand_kappas: Vec<u64>,
    pub operation: Operation,
    pub expected_result_kappa: u64,
}

/// The known family identifiers, in presentation order.
pub fn families() -> &'static [&'static str] {
    &[
        "union.binary",
        "intersection.binary",
        "difference.binary",
        "symdiff.binary",
        "union.unary",
        "product.unary",
        "product.binary",
        "star.binary",
        "star.binary.n2",
        "star.unary",
        "suffixfree.union.binary",
        "suffixfree.intersection.marked",
    ]
}

fn err(family: &str, message: impl Into<String>) -> Error {
    Error::WitnessParams {
        family: family.to_string(),
        message: message.into(),
    }
}

fn two_params(family: &str, params: &[u64]) -> Result<(u64, u64)> {
    match params {
        [m, n] => Ok((*m, *n)),
        _ => Err(err(family, format!("expected 2 parameters, got {}", params.len()))),
    }
}

fn one_param(family: &str, params: &[u64]) -> Result<u64> {
    match params {
        [n] => Ok(*n),
        _ => Err(err(family, format!("expected 1 parameter, got {}", params.len()))),
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lit(c: char) -> Regex {
    Regex::Letter(c)
}

/// `k` concatenated copies of `r`; the empty power is ε.
fn repeat(r: &Regex, k: u64) -> Regex {
    Regex::concat((0..k).map(|_| r.clone()))
}

/// Expression for the words whose count of `letter` is ≡ `residue` mod
/// `modulus`, with every other letter free: `((O*x)^m)* (O*x)^r O*` where
/// `O` ranges over the remaining letters.
pub fn modular_counting_regex(
    letter: char,
    others: &[char],
    residue: u64,
    modulus: u64,
) -> Regex {
    let pad = match others {
        [] => Regex::Epsilon,
        [o] => Regex::star(lit(*o)),
        many => Regex::star(Regex::union(many.iter().map(|&c| lit(c)))),
    };
    let block = Regex::concat([pad.clone(), lit(letter)]);
    Regex::concat([
        Regex::star(repeat(&block, modulus)),
        repeat(&block, residue),
        pad,
    ])
}

/// The cyclic-counter DFA for the words whose count of `letter` is ≡
/// `residue` mod `modulus`: `modulus` states, the counted letter advances
/// the cycle, every other letter self-loops. Minimal by construction.
pub fn modular_counting_dfa(
    letter: char,
    residue: u64,
    modulus: u64,
    alphabet: &Alphabet,
) -> Result<Dfa> {
    if modulus < 1 {
        return Err(Error::BoundDomain("modulus must be positive".into()));
    }
    if residue >= modulus {
        return Err(Error::BoundDomain(
            "residue must be below the modulus".into(),
        ));
    }
    let li = alphabet
        .index_of(letter)
        .ok_or_else(|| Error::LetterOutsideAlphabet {
            letter,
            alphabet: alphabet.to_string(),
        })?;
    let m = modulus as usize;
    let transitions: Vec<Vec<StateId>> = (0..m)
        .map(|q| {
            (0..alphabet.len())
                .map(|a| if a == li { (q + 1) % m } else { q })
                .collect()
        })
        .collect();
    let accepting = (0..m).map(|q| q == residue as usize).collect();
    Dfa::new(alphabet.clone(), transitions, 0, accepting, None)
}

/// Instantiates a witness family at the given parameters.
pub fn witness(family: &str, params: &[u64]) -> Result<WitnessCase> {
    let ab: Alphabet = "ab".parse().expect("static alphabet");
    let unary: Alphabet = "a".parse().expect("static alphabet");
    let abc: Alphabet = "abc".parse().expect("static alphabet");
    let sigma = || Regex::union([lit('a'), lit('b')]);

    let case = |params: &[u64],
                alphabet: Alphabet,
                operands: Vec<Regex>,
                expected_operand_kappas: Vec<u64>,
                operation: Operation,
                expected_result_kappa: u64| {
        WitnessCase {
            family: family.to_string(),
            params: params.to_vec(),
            alphabet,
            operands,
            expected_operand_kappas,
            operation,
            expected_result_kappa,
        }
    };

    match family {
        "union.binary" => {
            let (m, n) = two_params(family, params)?;
            if m < 2 || n < 2 {
                return Err(err(family, "requires m, n >= 2"));
            }
            Ok(case(
                params,
                ab,
                vec![
                    modular_counting_regex('a', &['b'], m - 1, m),
                    modular_counting_regex('b', &['a'], n - 1, n),
                ],
                vec![m, n],
                Operation::Union,
                m * n,
            ))
        }
        "intersection.binary" => {
            let (m, n) = two_params(family, params)?;
            if m < 2 || n < 2 {
                return Err(err(family, "requires m, n >= 2"));
            }
            Ok(case(
                params,
                ab,
                vec![
                    modular_counting_regex('a', &['b'], 0, m),
                    modular_counting_regex('b', &['a'], 0, n),
                ],
                vec![m, n],
                Operation::Intersection,
                m * n,
            ))
        }
        "difference.binary" => {
            let (m, n) = two_params(family, params)?;
            if m < 2 || n < 2 {
                return Err(err(family, "requires m, n >= 2"));
            }
            Ok(case(
                params,
                ab,
                vec![
                    modular_counting_regex('a', &['b'], 0, m),
                    Regex::complement(modular_counting_regex('b', &['a'], 0, n)),
                ],
                vec![m, n],
                Operation::Difference,
                m * n,
            ))
        }
        "symdiff.binary" => {
            let (m, n) = two_params(family, params)?;
            if m < 1 || n < 1 {
                return Err(err(family, "requires m, n >= 1"));
            }
            let k = Regex::concat([
                repeat(&Regex::concat([Regex::star(lit('b')), lit('a')]), m - 1),
                Regex::star(sigma()),
            ]);
            let l = Regex::concat([
                repeat(&Regex::concat([Regex::star(lit('a')), lit('b')]), n - 1),
                Regex::star(sigma()),
            ]);
            Ok(case(params, ab, vec![k, l], vec![m, n], Operation::SymDiff, m * n))
        }
        "union.unary" => {
            let (m, n) = two_params(family, params)?;
            if m < 2 || n < 2 || gcd(m, n) != 1 {
                return Err(err(family, "requires coprime m, n >= 2"));
            }
            Ok(case(
                params,
                unary,
                vec![
                    Regex::star(repeat(&lit('a'), m)),
                    Regex::star(repeat(&lit('a'), n)),
                ],
                vec![m, n],
                Operation::Union,
                m * n,
            ))
        }
        "product.unary" => {
            let (m, n) = two_params(family, params)?;
            if m < 2 || n < 2 || gcd(m, n) != 1 {
                return Err(err(family, "requires coprime m, n >= 2"));
            }
            let mk = |p: u64| {
                Regex::concat([Regex::star(repeat(&lit('a'), p)), repeat(&lit('a'), p - 1)])
            };
            Ok(case(
                params,
                unary,
                vec![mk(m), mk(n)],
                vec![m, n],
                Operation::Product,
                m * n,
            ))
        }
        "product.binary" => {
            let (m, n) = two_params(family, params)?;
            if m < 2 || n < 2 {
                return Err(err(family, "requires m, n >= 2"));
            }
            let k = modular_counting_regex('a', &['b'], m - 1, m);
            // (a*b)^{n-2} (a|b) (b|a(a|b))*
            let l = Regex::concat([
                repeat(&Regex::concat([Regex::star(lit('a')), lit('b')]), n - 2),
                sigma(),
                Regex::star(Regex::union([
                    lit('b'),
                    Regex::concat([lit('a'), sigma()]),
                ])),
            ]);
            Ok(case(
                params,
                ab,
                vec![k, l],
                vec![m, n],
                Operation::Product,
                m * (1 << n) - (1 << (n - 1)),
            ))
        }
        "star.binary" => {
            let n = one_param(family, params)?;
            if n < 3 {
                return Err(err(family, "requires n >= 3"));
            }
            // (b | a Σ^{n-1})* a Σ^{n-2}
            let l = Regex::concat([
                Regex::star(Regex::union([
                    lit('b'),
                    Regex::concat([lit('a'), repeat(&sigma(), n - 1)]),
                ])),
                lit('a'),
                repeat(&sigma(), n - 2),
            ]);
            Ok(case(
                params,
                ab,
                vec![l],
                vec![n],
                Operation::Star,
                (1 << (n - 1)) + (1 << (n - 2)),
            ))
        }
        "star.binary.n2" => {
            if !params.is_empty() {
                return Err(err(family, "takes no parameters"));
            }
            Ok(case(
                params,
                ab,
                vec![modular_counting_regex('a', &['b'], 1, 2)],
                vec![2],
                Operation::Star,
                3,
            ))
        }
        "star.unary" => {
            let n = one_param(family, params)?;
            if n < 2 {
                return Err(err(family, "requires n >= 2"));
            }
            let l = Regex::concat([Regex::star(repeat(&lit('a'), n)), repeat(&lit('a'), n - 1)]);
            Ok(case(
                params,
                unary,
                vec![l],
                vec![n],
                Operation::Star,
                n * n - 2 * n + 2,
            ))
        }
        "suffixfree.union.binary" => {
            let (m, n) = two_params(family, params)?;
            if m < 4 || n < 4 {
                return Err(err(family, "requires m, n >= 4"));
            }
            // K = a ((ba*)^{m-3} b)* (ba*)^{m-3}
            let ba_star = Regex::concat([lit('b'), Regex::star(lit('a'))]);
            let k = Regex::concat([
                lit('a'),
                Regex::star(Regex::concat([repeat(&ba_star, m - 3), lit('b')])),
                repeat(&ba_star, m - 3),
            ]);
            // L = a ((a|b)^{n-3} b)* ((a|b)^{n-3})
            let l = Regex::concat([
                lit('a'),
                Regex::star(Regex::concat([repeat(&sigma(), n - 3), lit('b')])),
                repeat(&sigma(), n - 3),
            ]);
            Ok(case(
                params,
                ab,
                vec![k, l],
                vec![m, n],
                Operation::Union,
                m * n - (m + n - 2),
            ))
        }
        "suffixfree.intersection.marked" => {
            let (m, n) = two_params(family, params)?;
            if m < 3 || n < 3 {
                return Err(err(family, "requires m, n >= 3"));
            }
            let k = Regex::concat([
                lit('c'),
                modular_counting_regex('a', &['b'], 0, m - 2),
            ]);
            let l = Regex::concat([
                lit('c'),
                modular_counting_regex('b', &['a'], 0, n - 2),
            ]);
            Ok(case(
                params,
                abc,
                vec![k, l],
                vec![m, n],
                Operation::Intersection,
                m * n - 2 * (m + n - 3),
            ))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}
