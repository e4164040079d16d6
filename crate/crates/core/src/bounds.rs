//! Closed-form complexity bounds for the regular operations, as pure
//! arithmetic evaluators tagged with their preconditions.
//!
//! Stable bound names:
//! `thm2.complement`, `thm2.boolean`, `thm2.product.a|b|c`,
//! `thm2.star.a|b|c`, `thm3.boolean`, `thm3.product`, `cor1.boolean`,
//! `thm4.<quotient>.<op>` with quotient in `epsilon|sigmaplus|empty|universal`,
//! `thm4.reversal.<flags>`, `cor2.intersection`, `prop5.star`.
//!
//! Values are evaluated exactly as the formulas are written; reduction
//! terms are not clamped, so degenerate inputs outside the documented
//! invariants can legitimately produce values below the true complexity.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::automata::BoolOp;
use crate::error::{Error, Result};

/// The special-quotient flags of one operand, as used by the Theorem 4
/// evaluators.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct QuotientFlags {
    pub epsilon: bool,
    pub sigma_plus: bool,
    pub empty: bool,
    pub universal: bool,
}

/// One evaluated bound: its name, whether its preconditions hold, and the
/// value when they do.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub bound_name: String,
    pub applicable: bool,
    pub preconditions: Vec<Precondition>,
    pub value: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Precondition {
    pub name: String,
    pub holds: bool,
}

fn check(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BoundDomain(msg.to_string()))
    }
}

fn pow2(e: u64) -> Result<i128> {
    check(e <= 100, "exponent too large")?;
    Ok(1i128 << e)
}

fn fit(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::BoundDomain("value overflows".into()))
}

/// `κ(complement L) = n`.
pub fn bound_complement(n: u64) -> Result<i64> {
    check(n >= 1, "n must be positive")?;
    fit(n as i128)
}

/// `κ(K ∘ L) ≤ mn` for any boolean connective.
pub fn bound_boolean(m: u64, n: u64) -> Result<i64> {
    check(m >= 1 && n >= 1, "m and n must be positive")?;
    fit(m as i128 * n as i128)
}

/// Product bound, split by the accepting-quotient counts `k` of K and `l`
/// of L: 1 when `k = 0` or `l = 0`; `m - (k-1)` when `n = 1`;
/// `m·2ⁿ - k·2ⁿ⁻¹` otherwise.
pub fn bound_product(m: u64, n: u64, k: u64, l: u64) -> Result<i64> {
    check(m >= 1 && n >= 1, "m and n must be positive")?;
    check(k <= m, "k must not exceed m")?;
    check(l <= n, "l must not exceed n")?;
    if k == 0 || l == 0 {
        return Ok(1);
    }
    if n == 1 {
        return fit(m as i128 - (k as i128 - 1));
    }
    fit(m as i128 * pow2(n)? - k as i128 * pow2(n - 1)?)
}

/// Star bound: 2 when `n = 1`; exactly `n` when the language itself is the
/// only accepting quotient; `2ⁿ⁻¹ + 2ⁿ⁻ˡ⁻¹` otherwise, with `l > 0` the
/// number of accepting quotients not equal to the language.
pub fn bound_star(n: u64, l: u64, l_itself_only_accepting: bool) -> Result<i64> {
    check(n >= 1, "n must be positive")?;
    if n == 1 {
        return Ok(2);
    }
    if l_itself_only_accepting {
        return fit(n as i128);
    }
    check(
        l >= 1,
        "n > 1 without the only-accepting flag requires l > 0",
    )?;
    check(l < n, "l must be at most n - 1")?;
    fit(pow2(n - 1)? + pow2(n - l - 1)?)
}

/// The three reduction terms of the uniquely-reachable boolean bound:
/// `α = r(m+n) - r(r+1)`, `β = (m_u - r)(n - (r+1))`,
/// `γ = (n_u - r)(m - m_u - 1)`, evaluated exactly as written.
pub fn urbool_terms(m: u64, n: u64, mu: u64, nu: u64, r: u64) -> Result<(i64, i64, i64)> {
    check(mu <= m, "m_u must not exceed m")?;
    check(nu <= n, "n_u must not exceed n")?;
    check(r <= mu.min(nu), "r must not exceed min(m_u, n_u)")?;
    let (m, n, mu, nu, r) = (m as i128, n as i128, mu as i128, nu as i128, r as i128);
    let alpha = r * (m + n) - r * (r + 1);
    let beta = (mu - r) * (n - (r + 1));
    let gamma = (nu - r) * (m - mu - 1);
    Ok((fit(alpha)?, fit(beta)?, fit(gamma)?))
}

/// `κ(K ∘ L) ≤ mn - (α + β + γ)` from the uniquely reachable quotient
/// counts of both operands.
pub fn bound_urbool(m: u64, n: u64, mu: u64, nu: u64, r: u64) -> Result<i64> {
    check(m >= 1 && n >= 1, "m and n must be positive")?;
    let (alpha, beta, gamma) = urbool_terms(m, n, mu, nu, r)?;
    fit(m as i128 * n as i128 - (alpha as i128 + beta as i128 + gamma as i128))
}

/// `κ(KL) ≤ m·2ⁿ - k·2ⁿ⁻¹ - s(2ⁿ - 1) - t(2ⁿ⁻¹ - 1)` where `s` and `t`
/// are K's uniquely reachable rejecting and accepting quotient counts.
pub fn bound_urproduct(m: u64, n: u64, k: u64, s: u64, t: u64) -> Result<i64> {
    check(m >= 1 && n >= 1, "m and n must be positive")?;
    check(k <= m, "k must not exceed m")?;
    check(t <= k, "t must not exceed k")?;
    check(s + t <= m, "s + t must not exceed m")?;
    check(n >= 1, "n must be positive")?;
    let p = pow2(n)?;
    let h = pow2(n - 1)?;
    fit(m as i128 * p - k as i128 * h - s as i128 * (p - 1) - t as i128 * (h - 1))
}

/// `κ(K ∘ L) ≤ mn - (m + n - 2)` for non-empty operands that are each
/// finite or suffix-free, with `m, n > 1`.
pub fn bound_suffixfree_or_finite_boolean(m: u64, n: u64) -> Result<i64> {
    check(m > 1 && n > 1, "m and n must exceed 1")?;
    fit(m as i128 * n as i128 - (m as i128 + n as i128 - 2))
}

/// `κ(K ∩ L) ≤ mn - 2(m + n - 3)` for non-empty suffix-free operands.
pub fn bound_suffixfree_intersection(m: u64, n: u64) -> Result<i64> {
    check(m >= 1 && n >= 1, "m and n must be positive")?;
    fit(m as i128 * n as i128 - 2 * (m as i128 + n as i128 - 3))
}

/// `κ(L*) ≤ 2ⁿ⁻³ + 2ⁿ⁻ˡ⁻¹ + 1` when L has ε as a quotient, `n ≥ 3` and
/// `l > 0` accepting quotients not equal to L.
pub fn bound_star_epsilon(n: u64, l: u64) -> Result<i64> {
    check(n >= 3, "n must be at least 3")?;
    check(l >= 1, "l must be positive")?;
    check(l < n, "l must be at most n - 1")?;
    fit(pow2(n - 3)? + pow2(n - l - 1)? + 1)
}

/// All special-quotient bounds of a boolean operation. A bound applies
/// only when both operands carry the required quotient and both have at
/// least one accepting quotient.
pub fn special_boolean_bounds(
    op: BoolOp,
    m: u64,
    n: u64,
    k: u64,
    l: u64,
    flags_k: QuotientFlags,
    flags_l: QuotientFlags,
) -> Vec<BoundReport> {
    let mi = m as i128;
    let ni = n as i128;
    let mut out = Vec::new();

    let mut emit = |name: &str, quotient: (&str, bool, bool), value: i128| {
        let (qname, in_k, in_l) = quotient;
        let pre: Vec<(String, bool)> = vec![
            ("k > 0".into(), k > 0),
            ("l > 0".into(), l > 0),
            (format!("K has {qname} as a quotient"), in_k),
            (format!("L has {qname} as a quotient"), in_l),
        ];
        let applicable = pre.iter().all(|&(_, h)| h);
        out.push(BoundReport {
            bound_name: name.to_string(),
            applicable,
            preconditions: pre
                .into_iter()
                .map(|(name, holds)| Precondition { name, holds })
                .collect(),
            value: if applicable {
                i64::try_from(value).ok()
            } else {
                None
            },
        });
    };

    let eps = ("ε", flags_k.epsilon, flags_l.epsilon);
    let plus = ("Σ+", flags_k.sigma_plus, flags_l.sigma_plus);
    let empty = ("∅", flags_k.empty, flags_l.empty);
    let univ = ("Σ*", flags_k.universal, flags_l.universal);

    match op {
        BoolOp::Union => {
            emit("thm4.epsilon.union", eps, mi * ni - 2);
            emit("thm4.sigmaplus.union", plus, mi * ni - (2 * mi + 2 * ni - 6));
            emit("thm4.universal.union", univ, mi * ni - (mi + ni - 2));
        }
        BoolOp::Intersection => {
            emit(
                "thm4.epsilon.intersection",
                eps,
                mi * ni - (2 * mi + 2 * ni - 6),
            );
            emit("thm4.sigmaplus.intersection", plus, mi * ni - 2);
            emit("thm4.empty.intersection", empty, mi * ni - (mi + ni - 2));
        }
        BoolOp::Difference => {
            emit(
                "thm4.epsilon.difference",
                eps,
                mi * ni - (mi + 2 * ni - k as i128 - 3),
            );
            emit(
                "thm4.sigmaplus.difference",
                plus,
                mi * ni - (2 * mi + l as i128 - 3),
            );
            emit("thm4.empty.difference", empty, mi * ni - ni + 1);
            emit("thm4.universal.difference", univ, mi * ni - mi + 1);
        }
        BoolOp::SymDiff => {
            emit("thm4.epsilon.symdiff", eps, mi * ni - 2);
            emit("thm4.sigmaplus.symdiff", plus, mi * ni - 2);
        }
    }
    out
}

/// Reversal bounds from the operand's special quotients, including the two
/// stated cumulative cases. A report whose exponent would be negative is
/// emitted as not applicable.
pub fn special_reversal_bounds(n: u64, flags: QuotientFlags) -> Vec<BoundReport> {
    let mut out = Vec::new();
    let mut emit = |name: &str, conds: Vec<(String, bool)>, exponent: i64, add: i128| {
        let exp_ok = exponent >= 0;
        let mut pre = conds;
        pre.push(("n large enough for the exponent".into(), exp_ok));
        let applicable = pre.iter().all(|(_, h)| *h);
        let value = if applicable {
            pow2(exponent as u64)
                .and_then(|p| fit(p + add))
                .ok()
        } else {
            None
        };
        out.push(BoundReport {
            bound_name: name.to_string(),
            applicable: applicable && value.is_some(),
            preconditions: pre
                .into_iter()
                .map(|(name, holds)| Precondition { name, holds })
                .collect(),
            value,
        });
    };

    let n = n as i64;
    emit(
        "thm4.reversal.epsilon",
        vec![("L has ε as a quotient".into(), flags.epsilon)],
        n - 2,
        1,
    );
    emit(
        "thm4.reversal.sigmaplus",
        vec![("L has Σ+ as a quotient".into(), flags.sigma_plus)],
        n - 2,
        1,
    );
    emit(
        "thm4.reversal.empty",
        vec![("L has ∅ as a quotient".into(), flags.empty)],
        n - 1,
        0,
    );
    emit(
        "thm4.reversal.universal",
        vec![("L has Σ* as a quotient".into(), flags.universal)],
        n - 1,
        0,
    );
    emit(
        "thm4.reversal.empty+universal",
        vec![
            ("L has ∅ as a quotient".into(), flags.empty),
            ("L has Σ* as a quotient".into(), flags.universal),
        ],
        n - 2,
        0,
    );
    emit(
        "thm4.reversal.empty+sigmaplus",
        vec![
            ("L has ∅ as a quotient".into(), flags.empty),
            ("L has Σ+ as a quotient".into(), flags.sigma_plus),
        ],
        n - 3,
        1,
    );
    out
}

/// Required argument keys for each bound name the command line can
/// evaluate directly.
pub fn known_bounds() -> &'static [(&'static str, &'static [&'static str])] {
    &[
        ("thm2.complement", &["n"]),
        ("thm2.boolean", &["m", "n"]),
        ("thm2.product.a", &[]),
        ("thm2.product.b", &["m", "k"]),
        ("thm2.product.c", &["m", "n", "k"]),
        ("thm2.star.a", &[]),
        ("thm2.star.b", &["n"]),
        ("thm2.star.c", &["n", "l"]),
        ("thm3.boolean", &["m", "n", "mu", "nu", "r"]),
        ("thm3.product", &["m", "n", "k", "s", "t"]),
        ("cor1.boolean", &["m", "n"]),
        ("thm4.epsilon.union", &["m", "n"]),
        ("thm4.epsilon.intersection", &["m", "n"]),
        ("thm4.epsilon.difference", &["m", "n", "k"]),
        ("thm4.epsilon.symdiff", &["m", "n"]),
        ("thm4.sigmaplus.union", &["m", "n"]),
        ("thm4.sigmaplus.intersection", &["m", "n"]),
        ("thm4.sigmaplus.difference", &["m", "n", "l"]),
        ("thm4.sigmaplus.symdiff", &["m", "n"]),
        ("thm4.empty.intersection", &["m", "n"]),
        ("thm4.empty.difference", &["m", "n"]),
        ("thm4.universal.union", &["m", "n"]),
        ("thm4.universal.difference", &["m", "n"]),
        ("thm4.reversal.epsilon", &["n"]),
        ("thm4.reversal.sigmaplus", &["n"]),
        ("thm4.reversal.empty", &["n"]),
        ("thm4.reversal.universal", &["n"]),
        ("thm4.reversal.empty+universal", &["n"]),
        ("thm4.reversal.empty+sigmaplus", &["n"]),
        ("cor2.intersection", &["m", "n"]),
        ("prop5.star", &["n", "l"]),
    ]
}

/// Evaluates a bound by name from named numeric arguments. The caller
/// asserts the bound's qualitative preconditions (flags, suffix-freeness);
/// numeric range checks still apply.
pub fn evaluate_named(name: &str, args: &BTreeMap<String, u64>) -> Result<i64> {
    let spec = known_bounds()
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownBound(name.to_string()))?;
    for key in spec.1 {
        if !args.contains_key(*key) {
            return Err(Error::Usage(format!(
                "bound {name} requires argument {key}=<value> (needs: {})",
                spec.1.join(", ")
            )));
        }
    }
    for key in args.keys() {
        if !spec.1.contains(&key.as_str()) {
            return Err(Error::Usage(format!(
                "bound {name} does not take argument '{key}' (needs: {})",
                if spec.1.is_empty() {
                    "no arguments".to_string()
                } else {
                    spec.1.join(", ")
                }
            )));
        }
    }
    let get = |key: &str| args[key];
    match name {
        "thm2.complement" => bound_complement(get("n")),
        "thm2.boolean" => bound_boolean(get("m"), get("n")),
        "thm2.product.a" => Ok(1),
        "thm2.product.b" => {
            let (m, k) = (get("m"), get("k"));
            check(k >= 1 && k <= m, "requires 1 <= k <= m")?;
            fit(m as i128 - (k as i128 - 1))
        }
        "thm2.product.c" => {
            let (m, n, k) = (get("m"), get("n"), get("k"));
            check(n > 1, "requires n > 1")?;
            check(k >= 1, "requires k > 0")?;
            bound_product(m, n, k, 1)
        }
        "thm2.star.a" => Ok(2),
        "thm2.star.b" => {
            check(get("n") > 1, "requires n > 1")?;
            fit(get("n") as i128)
        }
        "thm2.star.c" => bound_star(get("n"), get("l"), false),
        "thm3.boolean" => bound_urbool(get("m"), get("n"), get("mu"), get("nu"), get("r")),
        "thm3.product" => bound_urproduct(get("m"), get("n"), get("k"), get("s"), get("t")),
        "cor1.boolean" => bound_suffixfree_or_finite_boolean(get("m"), get("n")),
        "cor2.intersection" => bound_suffixfree_intersection(get("m"), get("n")),
        "prop5.star" => bound_star_epsilon(get("n"), get("l")),
        _ if name.starts_with("thm4.reversal.") => {
            let flags = QuotientFlags {
                epsilon: name.contains("epsilon"),
                sigma_plus: name.contains("sigmaplus"),
                empty: name.contains("empty"),
                universal: name.contains("universal"),
            };
            special_reversal_bounds(get("n"), flags)
                .into_iter()
                .find(|r| r.bound_name == name)
                .and_then(|r| r.value)
                .ok_or_else(|| Error::BoundDomain(format!("{name} not applicable at n={}", get("n"))))
        }
        _ if name.starts_with("thm4.") => {
            let (m, n) = (get("m"), get("n"));
            let k = args.get("k").copied().unwrap_or(1);
            let l = args.get("l").copied().unwrap_or(1);
            let all = QuotientFlags {
                epsilon: true,
                sigma_plus: true,
                empty: true,
                universal: true,
            };
            let op = match name.rsplit('.').next().unwrap() {
                "union" => BoolOp::Union,
                "intersection" => BoolOp::Intersection,
                "difference" => BoolOp::Difference,
                "symdiff" => BoolOp::SymDiff,
                other => return Err(Error::UnknownBound(format!("thm4.*.{other}"))),
            };
            special_boolean_bounds(op, m, n, k, l, all, all)
                .into_iter()
                .find(|r| r.bound_name == name)
                .and_then(|r| r.value)
                .ok_or_else(|| Error::BoundDomain(format!("{name} not applicable")))
        }
        _ => Err(Error::UnknownBound(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_bound() {
        assert_eq!(bound_boolean(2, 3).unwrap(), 6);
        assert_eq!(bound_boolean(1, 1).unwrap(), 1);
        assert_eq!(bound_boolean(7, 5).unwrap(), 35);
    }

    #[test]
    fn product_bound_cases() {
        assert_eq!(bound_product(3, 3, 1, 1).unwrap(), 20);
        assert_eq!(bound_product(5, 1, 2, 1).unwrap(), 4);
        assert_eq!(bound_product(4, 3, 0, 2).unwrap(), 1);
        assert_eq!(bound_product(4, 3, 2, 0).unwrap(), 1);
    }

    #[test]
    fn star_bound_cases() {
        assert_eq!(bound_star(1, 0, false).unwrap(), 2);
        assert_eq!(bound_star(4, 1, false).unwrap(), 12);
        assert_eq!(bound_star(5, 0, true).unwrap(), 5);
        assert!(bound_star(4, 0, false).is_err());
    }

    #[test]
    fn worked_example_values() {
        // the 7×5 example: α=18, β=4, γ=2, bound 11
        assert_eq!(urbool_terms(7, 5, 4, 3, 2).unwrap(), (18, 4, 2));
        assert_eq!(bound_urbool(7, 5, 4, 3, 2).unwrap(), 11);
        // the product refinement: 224 - 32 - 93 - 15 = 84
        assert_eq!(bound_urproduct(7, 5, 2, 3, 1).unwrap(), 84);
        // the r = 0 instance: 707 - 400 = 307
        assert_eq!(bound_urbool(7, 101, 4, 0, 0).unwrap(), 307);
    }

    #[test]
    fn urbool_degenerate_inputs_vanish() {
        assert_eq!(bound_urbool(6, 4, 0, 0, 0).unwrap(), 24);
        assert_eq!(
            bound_urbool(6, 4, 0, 0, 0).unwrap(),
            bound_boolean(6, 4).unwrap()
        );
    }

    #[test]
    fn urproduct_reduces_to_product_bound() {
        for m in 1..6u64 {
            for n in 2..6u64 {
                for k in 1..=m {
                    assert_eq!(
                        bound_urproduct(m, n, k, 0, 0).unwrap(),
                        bound_product(m, n, k, 1).unwrap()
                    );
                }
            }
        }
        assert_eq!(bound_urproduct(3, 2, 1, 1, 0).unwrap(), 7);
    }

    #[test]
    fn suffix_free_bounds() {
        assert_eq!(bound_suffixfree_or_finite_boolean(4, 4).unwrap(), 10);
        assert_eq!(bound_suffixfree_or_finite_boolean(2, 2).unwrap(), 2);
        assert_eq!(bound_suffixfree_or_finite_boolean(4, 5).unwrap(), 13);
        assert!(bound_suffixfree_or_finite_boolean(1, 4).is_err());
        assert_eq!(bound_suffixfree_intersection(4, 4).unwrap(), 6);
        assert_eq!(bound_suffixfree_intersection(4, 5).unwrap(), 8);
        assert_eq!(bound_suffixfree_intersection(3, 3).unwrap(), 3);
    }

    #[test]
    fn star_epsilon_bound() {
        assert_eq!(bound_star_epsilon(4, 1).unwrap(), 7);
        assert_eq!(bound_star_epsilon(3, 1).unwrap(), 4);
        assert_eq!(bound_star_epsilon(5, 2).unwrap(), 9);
        assert!(bound_star_epsilon(2, 1).is_err());
    }

    #[test]
    fn special_boolean_values() {
        let all = QuotientFlags {
            epsilon: true,
            sigma_plus: true,
            empty: true,
            universal: true,
        };
        let get = |op, name: &str, m, n| {
            special_boolean_bounds(op, m, n, 1, 1, all, all)
                .into_iter()
                .find(|r| r.bound_name == name)
                .and_then(|r| r.value)
                .unwrap()
        };
        assert_eq!(get(BoolOp::Union, "thm4.epsilon.union", 4, 5), 18);
        assert_eq!(get(BoolOp::Union, "thm4.universal.union", 4, 5), 13);
        assert_eq!(get(BoolOp::Difference, "thm4.empty.difference", 4, 5), 16);
        assert_eq!(
            get(BoolOp::Intersection, "thm4.sigmaplus.intersection", 4, 5),
            18
        );

        // not applicable when a flag is missing on either side
        let none = QuotientFlags::default();
        let reports = special_boolean_bounds(BoolOp::Union, 4, 5, 1, 1, all, none);
        assert!(reports.iter().all(|r| !r.applicable));
    }

    #[test]
    fn special_reversal_values() {
        let flags = |e, p, z, u| QuotientFlags {
            epsilon: e,
            sigma_plus: p,
            empty: z,
            universal: u,
        };
        let get = |n, f: QuotientFlags, name: &str| {
            special_reversal_bounds(n, f)
                .into_iter()
                .find(|r| r.bound_name == name)
                .unwrap()
        };
        assert_eq!(
            get(5, flags(true, false, false, false), "thm4.reversal.epsilon").value,
            Some(9)
        );
        assert_eq!(
            get(5, flags(false, false, true, false), "thm4.reversal.empty").value,
            Some(16)
        );
        assert_eq!(
            get(5, flags(false, true, true, false), "thm4.reversal.empty+sigmaplus").value,
            Some(5)
        );
        assert_eq!(
            get(4, flags(false, false, true, true), "thm4.reversal.empty+universal").value,
            Some(4)
        );
        // too small for the exponent: not applicable, no negative exponent
        let r = get(1, flags(true, false, false, false), "thm4.reversal.epsilon");
        assert!(!r.applicable && r.value.is_none());
    }

    #[test]
    fn named_evaluation_matches_typed_api() {
        let mut args = BTreeMap::new();
        args.insert("m".to_string(), 7);
        args.insert("n".to_string(), 5);
        args.insert("mu".to_string(), 4);
        args.insert("nu".to_string(), 3);
        args.insert("r".to_string(), 2);
        assert_eq!(evaluate_named("thm3.boolean", &args).unwrap(), 11);

        let mut args = BTreeMap::new();
        args.insert("m".to_string(), 3);
        args.insert("n".to_string(), 3);
        args.insert("k".to_string(), 1);
        assert_eq!(evaluate_named("thm2.product.c", &args).unwrap(), 20);

        let mut args = BTreeMap::new();
        args.insert("n".to_string(), 4);
        args.insert("l".to_string(), 1);
        assert_eq!(evaluate_named("prop5.star", &args).unwrap(), 7);

        assert!(evaluate_named("nope", &BTreeMap::new()).is_err());
        // missing argument
        assert!(evaluate_named("thm2.boolean", &BTreeMap::new()).is_err());
    }
}
