//! Verification harness: measures exact complexities, auto-selects every
//! applicable bound, checks dominance and tightness, cross-checks the
//! derivative and product constructions, and runs seeded randomized
//! campaigns over the word-derivative identities.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::analysis::{profile, shared_ur_count, special_quotients, ComplexityProfile};
use crate::automata::{
    build_dfa, complement_dfa, equivalent, minimize, product_dfa, reverse, BoolOp, Dfa,
    ExplorationConfig, StateId,
};
use crate::bounds::{
    bound_boolean, bound_complement, bound_product, bound_star, bound_star_epsilon,
    bound_suffixfree_intersection, bound_suffixfree_or_finite_boolean, bound_urbool,
    bound_urproduct, special_boolean_bounds, special_reversal_bounds, BoundReport, Precondition,
    QuotientFlags,
};
use crate::error::{Error, Result};
use crate::regex::Regex;

/// A regular operation under verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Union,
    Intersection,
    Difference,
    SymDiff,
    Product,
    Star,
    Reversal,
    Complement,
}

impl Operation {
    pub fn is_binary(self) -> bool {
        matches!(
            self,
            Operation::Union
                | Operation::Intersection
                | Operation::Difference
                | Operation::SymDiff
                | Operation::Product
        )
    }

    pub fn bool_op(self) -> Option<BoolOp> {
        match self {
            Operation::Union => Some(BoolOp::Union),
            Operation::Intersection => Some(BoolOp::Intersection),
            Operation::Difference => Some(BoolOp::Difference),
            Operation::SymDiff => Some(BoolOp::SymDiff),
            _ => None,
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Operation::Union => "union",
            Operation::Intersection => "intersection",
            Operation::Difference => "difference",
            Operation::SymDiff => "symdiff",
            Operation::Product => "product",
            Operation::Star => "star",
            Operation::Reversal => "reversal",
            Operation::Complement => "complement",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "union" => Ok(Operation::Union),
            "intersection" => Ok(Operation::Intersection),
            "difference" => Ok(Operation::Difference),
            "symdiff" => Ok(Operation::SymDiff),
            "product" => Ok(Operation::Product),
            "star" => Ok(Operation::Star),
            "reversal" => Ok(Operation::Reversal),
            "complement" => Ok(Operation::Complement),
            other => Err(Error::Usage(format!(
                "unknown operation '{other}' (expected union, intersection, difference, \
                 symdiff, product, star, reversal or complement)"
            ))),
        }
    }
}

/// One bound compared against the measured complexity.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    pub bound_name: String,
    pub applicable: bool,
    pub preconditions: Vec<Precondition>,
    pub value: Option<i64>,
    /// Whether the bound states an equality rather than an upper bound.
    pub equality: bool,
    pub satisfied: Option<bool>,
    pub tight: Option<bool>,
}

impl BoundCheck {
    fn from_report(report: BoundReport, measured: usize, equality: bool) -> BoundCheck {
        let (satisfied, tight) = match report.value {
            Some(v) if report.applicable => {
                let tight = measured as i64 == v;
                let satisfied = if equality { tight } else { measured as i64 <= v };
                (Some(satisfied), Some(tight))
            }
            _ => (None, None),
        };
        BoundCheck {
            bound_name: report.bound_name,
            applicable: report.applicable,
            preconditions: report.preconditions,
            value: report.value,
            equality,
            satisfied,
            tight,
        }
    }
}

/// Measured-versus-bound comparison for one operation application.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub operands: Vec<String>,
    pub alphabet: Alphabet,
    pub operation: Operation,
    pub measured_kappa: usize,
    pub operand_profiles: Vec<ComplexityProfile>,
    /// Special-quotient flags of the result language (recorded so the
    /// reversal bounds can be audited against both operand and result).
    pub result_flags: QuotientFlags,
    pub bounds: Vec<BoundCheck>,
}

impl VerifyReport {
    pub fn violations(&self) -> Vec<&BoundCheck> {
        self.bounds
            .iter()
            .filter(|b| b.satisfied == Some(false))
            .collect()
    }

    pub fn all_satisfied(&self) -> bool {
        self.violations().is_empty()
    }
}

/// One operand, prepared once: printed form, minimal DFA and profile.
#[derive(Clone, Debug)]
pub struct PreparedOperand {
    pub text: String,
    pub rex: Regex,
    pub dfa: Dfa,
    pub profile: ComplexityProfile,
}

impl PreparedOperand {
    pub fn from_regex(r: &Regex, alphabet: &Alphabet, cfg: ExplorationConfig) -> Result<Self> {
        let rex = r.normalize();
        let dfa = minimize(&build_dfa(&rex, alphabet, cfg)?);
        let profile = profile(&dfa);
        Ok(PreparedOperand {
            text: rex.to_string(),
            rex,
            dfa,
            profile,
        })
    }

    /// For operands given directly as automata (no derivative path).
    pub fn from_dfa(d: &Dfa, text: impl Into<String>) -> Self {
        let dfa = minimize(d);
        let profile = profile(&dfa);
        PreparedOperand {
            text: text.into(),
            rex: Regex::Empty, // unused: automaton operands take the product path
            dfa,
            profile,
        }
    }

    fn initial_accepting(&self) -> bool {
        self.dfa.is_accepting(self.dfa.initial())
    }

    /// Accepting quotients not equal to the language itself (the `l` of
    /// the star bounds).
    fn accepting_not_self(&self) -> u64 {
        self.profile.accepting_count as u64 - u64::from(self.initial_accepting())
    }
}

fn flags_of(p: &ComplexityProfile) -> QuotientFlags {
    QuotientFlags {
        epsilon: p.has_epsilon_quotient,
        sigma_plus: p.has_sigma_plus_quotient,
        empty: p.has_empty_quotient,
        universal: p.has_universal_quotient,
    }
}

/// Builds the operated language, measures its exact complexity, evaluates
/// every bound whose preconditions the operand profiles satisfy, and
/// reports dominance and tightness per bound.
///
/// Binary boolean operations are built along both the derivative path
/// (connective node, derivative closure) and the product construction on
/// the minimal operand automata; the two must agree.
pub fn verify_operation(
    k: &Regex,
    l: Option<&Regex>,
    op: Operation,
    alphabet: &Alphabet,
    cfg: ExplorationConfig,
) -> Result<VerifyReport> {
    let pk = PreparedOperand::from_regex(k, alphabet, cfg)?;
    let pl = match l {
        Some(l) => Some(PreparedOperand::from_regex(l, alphabet, cfg)?),
        None => None,
    };
    verify_prepared(&pk, pl.as_ref(), op, cfg)
}

/// As [`verify_operation`], over operands that are already prepared.
pub fn verify_prepared(
    k: &PreparedOperand,
    l: Option<&PreparedOperand>,
    op: Operation,
    cfg: ExplorationConfig,
) -> Result<VerifyReport> {
    if op.is_binary() != l.is_some() {
        return Err(Error::Usage(format!(
            "operation '{op}' takes {} operand(s)",
            if op.is_binary() { 2 } else { 1 }
        )));
    }
    let alphabet = k.dfa.alphabet().clone();

    let result = match op {
        Operation::Union | Operation::Intersection | Operation::Difference | Operation::SymDiff => {
            let l = l.expect("binary");
            let bop = op.bool_op().expect("boolean");
            let via_product = minimize(&product_dfa(&k.dfa, &l.dfa, bop));
            let via_derivative = minimize(&build_dfa(
                &bop.combine(k.rex.clone(), l.rex.clone()),
                &alphabet,
                cfg,
            )?);
            if !equivalent(&via_derivative, &via_product) {
                return Err(Error::TwoPathMismatch {
                    derivative: via_derivative.state_count(),
                    product: via_product.state_count(),
                });
            }
            via_derivative
        }
        Operation::Product => {
            let l = l.expect("binary");
            minimize(&build_dfa(
                &Regex::concat([k.rex.clone(), l.rex.clone()]),
                &alphabet,
                cfg,
            )?)
        }
        Operation::Star => minimize(&build_dfa(&Regex::star(k.rex.clone()), &alphabet, cfg)?),
        Operation::Complement => {
            let via_derivative = minimize(&build_dfa(
                &Regex::complement(k.rex.clone()),
                &alphabet,
                cfg,
            )?);
            let via_flip = complement_dfa(&k.dfa);
            if !equivalent(&via_derivative, &via_flip) {
                return Err(Error::TwoPathMismatch {
                    derivative: via_derivative.state_count(),
                    product: via_flip.state_count(),
                });
            }
            via_derivative
        }
        Operation::Reversal => reverse(&k.dfa, cfg)?,
    };

    let measured = result.state_count();
    let bounds = bound_checks(op, k, l, measured);
    let mut operands = vec![k.text.clone()];
    let mut operand_profiles = vec![k.profile.clone()];
    if let Some(l) = l {
        operands.push(l.text.clone());
        operand_profiles.push(l.profile.clone());
    }
    let sq = special_quotients(&result);
    Ok(VerifyReport {
        operands,
        alphabet,
        operation: op,
        measured_kappa: measured,
        operand_profiles,
        result_flags: QuotientFlags {
            epsilon: sq.epsilon.is_some(),
            sigma_plus: sq.sigma_plus.is_some(),
            empty: sq.empty.is_some(),
            universal: sq.universal.is_some(),
        },
        bounds,
    })
}

/// Verification over automaton operands: boolean operations go through the
/// product construction, complement flips acceptance, reversal reverses.
/// Product and star need the derivative path and therefore regex operands.
pub fn verify_dfa_operands(
    k: &PreparedOperand,
    l: Option<&PreparedOperand>,
    op: Operation,
    cfg: ExplorationConfig,
) -> Result<VerifyReport> {
    if op.is_binary() != l.is_some() {
        return Err(Error::Usage(format!(
            "operation '{op}' takes {} operand(s)",
            if op.is_binary() { 2 } else { 1 }
        )));
    }
    let result = match op {
        Operation::Union | Operation::Intersection | Operation::Difference | Operation::SymDiff => {
            let l = l.expect("binary");
            if k.dfa.alphabet() != l.dfa.alphabet() {
                return Err(Error::Usage(
                    "operands must share the same alphabet".into(),
                ));
            }
            minimize(&product_dfa(&k.dfa, &l.dfa, op.bool_op().expect("boolean")))
        }
        Operation::Complement => complement_dfa(&k.dfa),
        Operation::Reversal => reverse(&k.dfa, cfg)?,
        Operation::Product | Operation::Star => {
            return Err(Error::Usage(format!(
                "operation '{op}' requires regular-expression operands \
                 (automaton operands support only boolean operations, complement and reversal)"
            )));
        }
    };
    let measured = result.state_count();
    let bounds = bound_checks(op, k, l, measured);
    let mut operands = vec![k.text.clone()];
    let mut operand_profiles = vec![k.profile.clone()];
    if let Some(l) = l {
        operands.push(l.text.clone());
        operand_profiles.push(l.profile.clone());
    }
    let sq = special_quotients(&result);
    Ok(VerifyReport {
        operands,
        alphabet: k.dfa.alphabet().clone(),
        operation: op,
        measured_kappa: measured,
        operand_profiles,
        result_flags: QuotientFlags {
            epsilon: sq.epsilon.is_some(),
            sigma_plus: sq.sigma_plus.is_some(),
            empty: sq.empty.is_some(),
            universal: sq.universal.is_some(),
        },
        bounds,
    })
}

/// Selects and evaluates every bound relevant to `op`, wiring in the
/// measured operand quantities.
fn bound_checks(
    op: Operation,
    k: &PreparedOperand,
    l: Option<&PreparedOperand>,
    measured: usize,
) -> Vec<BoundCheck> {
    let mut out = Vec::new();
    let pk = &k.profile;
    let m = pk.kappa as u64;

    let mut push = |report: BoundReport, equality: bool| {
        out.push(BoundCheck::from_report(report, measured, equality));
    };

    let trivial = |name: &str, value: crate::error::Result<i64>| BoundReport {
        bound_name: name.to_string(),
        applicable: value.is_ok(),
        preconditions: Vec::new(),
        value: value.ok(),
    };

    let conditional = |name: &str, pre: Vec<(String, bool)>, value: Option<i64>| {
        let applicable = pre.iter().all(|(_, h)| *h) && value.is_some();
        BoundReport {
            bound_name: name.to_string(),
            applicable,
            preconditions: pre
                .into_iter()
                .map(|(name, holds)| Precondition { name, holds })
                .collect(),
            value: if applicable { value } else { None },
        }
    };

    match op {
        Operation::Union | Operation::Intersection | Operation::Difference | Operation::SymDiff => {
            let l = l.expect("binary");
            let pl = &l.profile;
            let n = pl.kappa as u64;
            let kk = pk.accepting_count as u64;
            let ll = pl.accepting_count as u64;
            let mu = pk.ur_tree.len() as u64;
            let nu = pl.ur_tree.len() as u64;
            let r = shared_ur_count(&pk.ur_tree, &pl.ur_tree).r as u64;

            push(trivial("thm2.boolean", bound_boolean(m, n)), false);
            push(
                trivial("thm3.boolean", bound_urbool(m, n, mu, nu, r)),
                false,
            );

            let sf_or_fin = |p: &ComplexityProfile| p.is_suffix_free || p.is_finite;
            let cor1_pre = vec![
                ("K non-empty".into(), !pk.is_empty_language),
                ("L non-empty".into(), !pl.is_empty_language),
                ("kappa(K) > 1".into(), m > 1),
                ("kappa(L) > 1".into(), n > 1),
                ("K finite or suffix-free".into(), sf_or_fin(pk)),
                ("L finite or suffix-free".into(), sf_or_fin(pl)),
            ];
            let cor1_value = cor1_pre
                .iter()
                .all(|(_, h)| *h)
                .then(|| bound_suffixfree_or_finite_boolean(m, n).ok())
                .flatten();
            push(conditional("cor1.boolean", cor1_pre, cor1_value), false);

            if op == Operation::Intersection {
                let cor2_pre = vec![
                    ("K non-empty".into(), !pk.is_empty_language),
                    ("L non-empty".into(), !pl.is_empty_language),
                    ("K suffix-free".into(), pk.is_suffix_free),
                    ("L suffix-free".into(), pl.is_suffix_free),
                ];
                let cor2_value = cor2_pre
                    .iter()
                    .all(|(_, h)| *h)
                    .then(|| bound_suffixfree_intersection(m, n).ok())
                    .flatten();
                push(
                    conditional("cor2.intersection", cor2_pre, cor2_value),
                    false,
                );
            }

            for report in special_boolean_bounds(
                op.bool_op().expect("boolean"),
                m,
                n,
                kk,
                ll,
                flags_of(pk),
                flags_of(pl),
            ) {
                push(report, false);
            }
        }
        Operation::Product => {
            let l = l.expect("binary");
            let pl = &l.profile;
            let n = pl.kappa as u64;
            let kk = pk.accepting_count as u64;
            let ll = pl.accepting_count as u64;
            let s = pk.ur_rejecting_count as u64;
            let t = pk.ur_accepting_count as u64;

            push(
                conditional(
                    "thm2.product.a",
                    vec![("k = 0 or l = 0".into(), kk == 0 || ll == 0)],
                    (kk == 0 || ll == 0).then_some(1),
                ),
                true,
            );
            let case_b = kk > 0 && ll > 0 && n == 1;
            push(
                conditional(
                    "thm2.product.b",
                    vec![
                        ("k > 0 and l > 0".into(), kk > 0 && ll > 0),
                        ("kappa(L) = 1".into(), n == 1),
                    ],
                    case_b.then(|| bound_product(m, n, kk, ll).ok()).flatten(),
                ),
                false,
            );
            let case_c = kk > 0 && ll > 0 && n > 1;
            push(
                conditional(
                    "thm2.product.c",
                    vec![
                        ("k > 0 and l > 0".into(), kk > 0 && ll > 0),
                        ("kappa(L) > 1".into(), n > 1),
                    ],
                    case_c.then(|| bound_product(m, n, kk, ll).ok()).flatten(),
                ),
                false,
            );
            push(
                conditional(
                    "thm3.product",
                    vec![
                        ("k > 0 and l > 0".into(), kk > 0 && ll > 0),
                        ("kappa(L) > 1".into(), n > 1),
                    ],
                    case_c
                        .then(|| bound_urproduct(m, n, kk, s, t).ok())
                        .flatten(),
                ),
                false,
            );
        }
        Operation::Star => {
            let n = m;
            let only_self = k.initial_accepting() && pk.accepting_count == 1;
            let ll = k.accepting_not_self();
            push(
                conditional(
                    "thm2.star.a",
                    vec![("kappa(L) = 1".into(), n == 1)],
                    (n == 1).then_some(2),
                ),
                false,
            );
            push(
                conditional(
                    "thm2.star.b",
                    vec![
                        ("kappa(L) > 1".into(), n > 1),
                        ("L itself is the only accepting quotient".into(), only_self),
                    ],
                    (n > 1 && only_self)
                        .then(|| bound_star(n, 0, true).ok())
                        .flatten(),
                ),
                true,
            );
            push(
                conditional(
                    "thm2.star.c",
                    vec![
                        ("kappa(L) > 1".into(), n > 1),
                        ("l > 0 accepting quotients not equal to L".into(), ll > 0),
                    ],
                    (n > 1 && ll > 0)
                        .then(|| bound_star(n, ll, false).ok())
                        .flatten(),
                ),
                false,
            );
            push(
                conditional(
                    "prop5.star",
                    vec![
                        ("kappa(L) >= 3".into(), n >= 3),
                        ("l > 0 accepting quotients not equal to L".into(), ll > 0),
                        ("L has ε as a quotient".into(), pk.has_epsilon_quotient),
                    ],
                    (n >= 3 && ll > 0 && pk.has_epsilon_quotient)
                        .then(|| bound_star_epsilon(n, ll).ok())
                        .flatten(),
                ),
                false,
            );
        }
        Operation::Complement => {
            push(trivial("thm2.complement", bound_complement(m)), true);
        }
        Operation::Reversal => {
            for report in special_reversal_bounds(m, flags_of(pk)) {
                push(report, false);
            }
        }
    }
    out
}

/// The right-hand side of the word-derivative product identity, built
/// literally: `K_w L ∪ K^ε L_w ∪ (⋃_{w=uv, u,v≠ε} K_u^ε L_v)`. For the
/// empty word the product itself is returned.
pub fn theorem1_product_rhs(k: &Regex, l: &Regex, w: &str) -> Regex {
    if w.is_empty() {
        return Regex::concat([k.clone(), l.clone()]);
    }
    let chars: Vec<char> = w.chars().collect();
    let mut terms = vec![
        Regex::concat([k.derive_word(w), l.clone()]),
        Regex::concat([k.eps_rex(), l.derive_word(w)]),
    ];
    for i in 1..chars.len() {
        let u: String = chars[..i].iter().collect();
        let v: String = chars[i..].iter().collect();
        terms.push(Regex::concat([
            k.derive_word(&u).eps_rex(),
            l.derive_word(&v),
        ]));
    }
    Regex::union(terms)
}

/// The right-hand side of the word-derivative star identity, built
/// literally: `(⋃_{w=uv} (L*)_u^ε L_v) L*` over all factorizations with
/// `u, v ∈ Σ*`. Defined for non-empty `w`; for the empty word the star
/// itself is returned.
pub fn theorem1_star_rhs(l: &Regex, w: &str) -> Regex {
    let star = Regex::star(l.clone());
    if w.is_empty() {
        return star;
    }
    let chars: Vec<char> = w.chars().collect();
    let mut terms = Vec::with_capacity(chars.len() + 1);
    for i in 0..=chars.len() {
        let u: String = chars[..i].iter().collect();
        let v: String = chars[i..].iter().collect();
        terms.push(Regex::concat([
            star.derive_word(&u).eps_rex(),
            l.derive_word(&v),
        ]));
    }
    Regex::concat([Regex::union(terms), star])
}

/// Language equality of two normal-form expressions, by structural
/// equality first and automaton equivalence otherwise.
pub fn languages_equal(
    r1: &Regex,
    r2: &Regex,
    alphabet: &Alphabet,
    cfg: ExplorationConfig,
) -> Result<bool> {
    if r1 == r2 {
        return Ok(true);
    }
    let d1 = build_dfa(r1, alphabet, cfg)?;
    let d2 = build_dfa(r2, alphabet, cfg)?;
    Ok(equivalent(&d1, &d2))
}

/// A seeded random normal-form expression with at most `size` operator
/// nodes. Node-kind weights: letter 40%, union 20%, concatenation 20%,
/// star 10%, and 10% split evenly across complement, intersection,
/// difference and symmetric difference.
pub fn random_regex<R: Rng + ?Sized>(rng: &mut R, size: u32, alphabet: &Alphabet) -> Regex {
    let letter = |rng: &mut R| {
        let i = rng.gen_range(0..alphabet.len());
        Regex::Letter(alphabet.letter(i))
    };
    if size == 0 {
        return letter(rng);
    }
    let split = |rng: &mut R, budget: u32| {
        let left = rng.gen_range(0..=budget);
        (left, budget - left)
    };
    match rng.gen_range(0u32..40) {
        0..=15 => letter(rng),
        16..=23 => {
            let (a, b) = split(rng, size - 1);
            Regex::union([
                random_regex(rng, a, alphabet),
                random_regex(rng, b, alphabet),
            ])
        }
        24..=31 => {
            let (a, b) = split(rng, size - 1);
            Regex::concat([
                random_regex(rng, a, alphabet),
                random_regex(rng, b, alphabet),
            ])
        }
        32..=35 => Regex::star(random_regex(rng, size - 1, alphabet)),
        36 => Regex::complement(random_regex(rng, size - 1, alphabet)),
        37 => {
            let (a, b) = split(rng, size - 1);
            Regex::intersect([
                random_regex(rng, a, alphabet),
                random_regex(rng, b, alphabet),
            ])
        }
        38 => {
            let (a, b) = split(rng, size - 1);
            Regex::diff(
                random_regex(rng, a, alphabet),
                random_regex(rng, b, alphabet),
            )
        }
        _ => {
            let (a, b) = split(rng, size - 1);
            Regex::sym_diff([
                random_regex(rng, a, alphabet),
                random_regex(rng, b, alphabet),
            ])
        }
    }
}

/// A random complete DFA with at most `max_states` states, trimmed to its
/// reachable part.
pub fn random_dfa<R: Rng + ?Sized>(rng: &mut R, max_states: usize, alphabet: &Alphabet) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let width = alphabet.len();
    let transitions: Vec<Vec<StateId>> = (0..n)
        .map(|_| (0..width).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();

    // trim to the reachable part, renumbered in BFS order
    let mut order: Vec<StateId> = vec![0];
    let mut renumber = vec![usize::MAX; n];
    renumber[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for &t in &transitions[q] {
            if renumber[t] == usize::MAX {
                renumber[t] = order.len();
                order.push(t);
            }
        }
    }
    let trimmed: Vec<Vec<StateId>> = order
        .iter()
        .map(|&q| (0..width).map(|a| renumber[transitions[q][a]]).collect())
        .collect();
    let trimmed_accepting: Vec<bool> = order.iter().map(|&q| accepting[q]).collect();
    Dfa::new(alphabet.clone(), trimmed, 0, trimmed_accepting, None)
        .expect("trimmed random automaton is valid")
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub seed: u64,
    pub samples: u32,
    pub max_regex_size: u32,
    pub alphabet: Alphabet,
    pub cap: ExplorationConfig,
}

impl CampaignConfig {
    pub fn new(seed: u64, samples: u32, max_regex_size: u32, alphabet: Alphabet) -> Self {
        CampaignConfig {
            seed,
            samples,
            max_regex_size,
            alphabet,
            cap: ExplorationConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BoundStat {
    pub applicable: usize,
    pub tight: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub sample: u32,
    pub seed: u64,
    pub operation: Operation,
    pub operands: Vec<String>,
    pub bound_name: String,
    pub value: i64,
    pub measured: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityFailure {
    pub sample: u32,
    pub seed: u64,
    pub identity: String,
    pub word: String,
    pub operands: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignSummary {
    pub seed: u64,
    pub samples: u32,
    pub operations_verified: usize,
    pub two_path_checks: usize,
    pub identity_checks: usize,
    pub star_equality_checks: usize,
    pub complement_checks: usize,
    pub bound_stats: BTreeMap<String, BoundStat>,
    pub violations: Vec<Violation>,
    pub identity_failures: Vec<IdentityFailure>,
}

impl CampaignSummary {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.identity_failures.is_empty()
    }
}

fn sample_rng(seed: u64, index: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(index) + 1);
    rng
}

/// Runs the randomized verification campaign: seeded random expression
/// pairs, every operation verified against every applicable bound, the
/// derivative/product cross-check on boolean operations, the
/// word-derivative identities for all words of length at most 3, the star
/// equality when the operand's only accepting quotient is itself, and
/// complement involution.
pub fn campaign(cfg: &CampaignConfig) -> Result<CampaignSummary> {
    let mut summary = CampaignSummary {
        seed: cfg.seed,
        samples: cfg.samples,
        operations_verified: 0,
        two_path_checks: 0,
        identity_checks: 0,
        star_equality_checks: 0,
        complement_checks: 0,
        bound_stats: BTreeMap::new(),
        violations: Vec::new(),
        identity_failures: Vec::new(),
    };
    let words = cfg.alphabet.words_up_to(3);

    for sample in 0..cfg.samples {
        let mut rng = sample_rng(cfg.seed, sample);
        let k = random_regex(&mut rng, cfg.max_regex_size, &cfg.alphabet);
        let l = random_regex(&mut rng, cfg.max_regex_size, &cfg.alphabet);
        let pk = PreparedOperand::from_regex(&k, &cfg.alphabet, cfg.cap)?;
        let pl = PreparedOperand::from_regex(&l, &cfg.alphabet, cfg.cap)?;

        for op in [
            Operation::Union,
            Operation::Intersection,
            Operation::Difference,
            Operation::SymDiff,
            Operation::Product,
            Operation::Star,
            Operation::Complement,
            Operation::Reversal,
        ] {
            let (first, second) = if op.is_binary() {
                (&pk, Some(&pl))
            } else {
                (&pk, None)
            };
            let report = verify_prepared(first, second, op, cfg.cap)?;
            summary.operations_verified += 1;
            if op.bool_op().is_some() {
                summary.two_path_checks += 1;
            }
            if op == Operation::Complement {
                summary.complement_checks += 1;
            }
            absorb(&mut summary, sample, cfg.seed, &report);
        }

        // complement involution: two complements restore the complexity
        let double = Regex::complement(Regex::complement(pk.rex.clone()));
        let double_kappa = minimize(&build_dfa(&double, &cfg.alphabet, cfg.cap)?).state_count();
        summary.identity_checks += 1;
        if double_kappa != pk.dfa.state_count() {
            summary.identity_failures.push(IdentityFailure {
                sample,
                seed: cfg.seed,
                identity: "complement.involution".into(),
                word: String::new(),
                operands: vec![pk.text.clone()],
            });
        }

        // word-derivative identities
        for w in &words {
            let mut check = |identity: &str, lhs: &Regex, rhs: &Regex| -> Result<()> {
                summary.identity_checks += 1;
                if !languages_equal(lhs, rhs, &cfg.alphabet, cfg.cap)? {
                    summary.identity_failures.push(IdentityFailure {
                        sample,
                        seed: cfg.seed,
                        identity: identity.to_string(),
                        word: w.clone(),
                        operands: vec![pk.text.clone(), pl.text.clone()],
                    });
                }
                Ok(())
            };

            let complemented = Regex::complement(pk.rex.clone());
            check(
                "eq11.complement",
                &complemented.derive_word(w),
                &Regex::complement(pk.rex.derive_word(w)),
            )?;
            for bop in BoolOp::ALL {
                let name = match bop {
                    BoolOp::Union => "eq12.union",
                    BoolOp::Intersection => "eq12.intersection",
                    BoolOp::Difference => "eq12.difference",
                    BoolOp::SymDiff => "eq12.symdiff",
                };
                check(
                    name,
                    &bop.combine(pk.rex.clone(), pl.rex.clone()).derive_word(w),
                    &bop.combine(pk.rex.derive_word(w), pl.rex.derive_word(w)),
                )?;
            }
            if !w.is_empty() {
                check(
                    "eq13.product",
                    &Regex::concat([pk.rex.clone(), pl.rex.clone()]).derive_word(w),
                    &theorem1_product_rhs(&pk.rex, &pl.rex, w),
                )?;
                check(
                    "eq14.star",
                    &Regex::star(pk.rex.clone()).derive_word(w),
                    &theorem1_star_rhs(&pk.rex, w),
                )?;
            }
        }
    }
    Ok(summary)
}

fn absorb(summary: &mut CampaignSummary, sample: u32, seed: u64, report: &VerifyReport) {
    for bound in &report.bounds {
        if !bound.applicable {
            continue;
        }
        let stat = summary
            .bound_stats
            .entry(bound.bound_name.clone())
            .or_default();
        stat.applicable += 1;
        if bound.tight == Some(true) {
            stat.tight += 1;
        }
        if bound.bound_name == "thm2.star.b" {
            summary.star_equality_checks += 1;
        }
        if bound.satisfied == Some(false) {
            summary.violations.push(Violation {
                sample,
                seed,
                operation: report.operation,
                operands: report.operands.clone(),
                bound_name: bound.bound_name.clone(),
                value: bound.value.unwrap_or_default(),
                measured: report.measured_kappa,
            });
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReversalSummary {
    pub seed: u64,
    pub samples: u32,
    pub checks: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl ReversalSummary {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the special-quotient reversal bounds on random minimal automata
/// with at most `max_states` states, including the cumulative cases
/// whenever the flags co-occur.
pub fn reversal_campaign(
    seed: u64,
    samples: u32,
    max_states: usize,
    alphabet: &Alphabet,
    cfg: ExplorationConfig,
) -> Result<ReversalSummary> {
    let mut summary = ReversalSummary {
        seed,
        samples,
        checks: BTreeMap::new(),
        violations: Vec::new(),
    };
    for sample in 0..samples {
        let mut rng = sample_rng(seed, sample);
        let d = minimize(&random_dfa(&mut rng, max_states, alphabet));
        check_reversal_bounds(&d, sample, seed, cfg, &mut summary)?;
    }
    Ok(summary)
}

/// Evaluates every applicable reversal bound for one minimal automaton and
/// records the outcome in `summary`.
pub fn check_reversal_bounds(
    d: &Dfa,
    sample: u32,
    seed: u64,
    cfg: ExplorationConfig,
    summary: &mut ReversalSummary,
) -> Result<()> {
    let sq = special_quotients(d);
    let flags = QuotientFlags {
        epsilon: sq.epsilon.is_some(),
        sigma_plus: sq.sigma_plus.is_some(),
        empty: sq.empty.is_some(),
        universal: sq.universal.is_some(),
    };
    let rev = reverse(d, cfg)?;
    let measured = rev.state_count();
    for report in special_reversal_bounds(d.state_count() as u64, flags) {
        if !report.applicable {
            continue;
        }
        *summary.checks.entry(report.bound_name.clone()).or_default() += 1;
        let value = report.value.expect("applicable bound has a value");
        if measured as i64 > value {
            summary.violations.push(Violation {
                sample,
                seed,
                operation: Operation::Reversal,
                operands: vec![d.to_text()],
                bound_name: report.bound_name,
                value,
                measured,
            });
        }
    }
    Ok(())
}
