//! Exact quotient complexity of regular languages.
//!
//! Regular languages are handled through extended regular expressions
//! (union, concatenation, star, complement, intersection, difference,
//! symmetric difference). Their quotients are represented by derivatives
//! kept in similarity normal form; exploring the derivative closure yields
//! the quotient automaton, and minimizing it gives the exact quotient
//! complexity κ(L) — the number of distinct left quotients of L.
//!
//! On top of that sit structural measurements (accepting quotients,
//! uniquely reachable quotients, special quotients ε, Σ⁺, ∅ and Σ*,
//! suffix-freeness, finiteness), closed-form complexity bounds for the
//! regular operations together with their preconditions, parametric
//! witness families that meet those bounds exactly, and a verification
//! harness that measures languages against every applicable bound.

pub mod alphabet;
pub mod analysis;
pub mod automata;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod regex;
pub mod verify;
pub mod witnesses;

pub use alphabet::Alphabet;
pub use analysis::{profile, ComplexityProfile, PairProfile, SpecialQuotients};
pub use automata::{
    build_dfa, equivalent, equivalent_from, kappa, minimize, product_dfa, reverse, BoolOp, Dfa,
    ExplorationConfig, StateId,
};
pub use error::{Error, Result};
pub use regex::{parse, Regex};
pub use verify::{
    campaign, random_regex, verify_operation, CampaignConfig, CampaignSummary, Operation,
    VerifyReport,
};
pub use witnesses::{modular_counting_dfa, witness, WitnessCase};
