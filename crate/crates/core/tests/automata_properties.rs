//! Randomized structural checks for the automaton layer: the two
//! construction paths agree, minimization preserves languages, reversal
//! respects the subset-construction cardinality, and double reversal is
//! the identity up to minimization.

mod common;

use common::{matches, words_up_to};
use quotient::alphabet::Alphabet;
use quotient::automata::{
    build_dfa, equivalent, kappa, minimize, product_dfa, reverse, BoolOp, ExplorationConfig,
};
use quotient::regex::Regex;
use quotient::verify::{random_dfa, random_regex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ab() -> Alphabet {
    "ab".parse().unwrap()
}

fn cfg() -> ExplorationConfig {
    ExplorationConfig::default()
}

#[test]
fn dfa_agrees_with_membership_oracle() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let r = random_regex(&mut rng, 6, &alphabet);
        let d = build_dfa(&r, &alphabet, cfg()).unwrap();
        for w in words_up_to(&alphabet, 5) {
            assert_eq!(
                d.accepts(&w).unwrap(),
                matches(&r, &w),
                "automaton disagrees with oracle for {r} at {w:?}"
            );
        }
    }
}

#[test]
fn derivative_and_product_paths_agree() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..120 {
        let k = random_regex(&mut rng, 6, &alphabet);
        let l = random_regex(&mut rng, 6, &alphabet);
        let dk = minimize(&build_dfa(&k, &alphabet, cfg()).unwrap());
        let dl = minimize(&build_dfa(&l, &alphabet, cfg()).unwrap());
        for op in BoolOp::ALL {
            let combined = op.combine(k.clone(), l.clone());
            let via_derivative = kappa(&combined, &alphabet, cfg()).unwrap();
            let via_product = minimize(&product_dfa(&dk, &dl, op));
            assert_eq!(
                via_derivative,
                via_product.state_count(),
                "paths disagree for {k} {op:?} {l}"
            );
        }
    }
}

#[test]
fn complementation_preserves_kappa() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..80 {
        let r = random_regex(&mut rng, 6, &alphabet);
        let n = kappa(&r, &alphabet, cfg()).unwrap();
        let c = kappa(&Regex::complement(r.clone()), &alphabet, cfg()).unwrap();
        assert_eq!(n, c, "complement changed kappa for {r}");
    }
}

#[test]
fn minimize_preserves_language_on_random_automata() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..100 {
        let d = random_dfa(&mut rng, 7, &alphabet);
        let m = minimize(&d);
        assert!(equivalent(&d, &m));
        assert!(m.state_count() <= d.state_count());
    }
}

#[test]
fn reversal_stays_within_the_subset_bound() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let d = minimize(&random_dfa(&mut rng, 6, &alphabet));
        let n = d.state_count();
        let r = reverse(&d, cfg()).unwrap();
        assert!(
            r.state_count() <= 1 << n,
            "kappa(reverse) = {} exceeds 2^{}",
            r.state_count(),
            n
        );
    }
}

#[test]
fn double_reversal_is_identity_up_to_minimization() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..100 {
        let d = random_dfa(&mut rng, 6, &alphabet);
        let rr = reverse(&reverse(&d, cfg()).unwrap(), cfg()).unwrap();
        assert!(equivalent(&rr, &minimize(&d)));
    }
}

#[test]
fn reversal_reverses_sampled_words() {
    let alphabet = ab();
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..40 {
        let r = random_regex(&mut rng, 5, &alphabet);
        let d = build_dfa(&r, &alphabet, cfg()).unwrap();
        let rev = reverse(&d, cfg()).unwrap();
        for w in words_up_to(&alphabet, 4) {
            let wr: String = w.chars().rev().collect();
            assert_eq!(
                d.accepts(&w).unwrap(),
                rev.accepts(&wr).unwrap(),
                "reversal wrong for {r} at {w:?}"
            );
        }
    }
}
