//! Structural measurements of a language's quotients, computed on its
//! minimal DFA: accepting counts, uniquely reachable quotients, the
//! special quotients ε, Σ⁺, ∅ and Σ*, suffix-freeness and finiteness.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::automata::{Dfa, StateId};

/// Per-language measurements. All quantities refer to quotients, i.e. to
/// states of the minimal DFA the profile was computed from.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexityProfile {
    /// Number of distinct quotients (states of the minimal DFA).
    pub kappa: usize,
    /// Number of accepting quotients.
    pub accepting_count: usize,
    pub has_empty_quotient: bool,
    pub has_universal_quotient: bool,
    pub has_epsilon_quotient: bool,
    pub has_sigma_plus_quotient: bool,
    /// Uniquely reachable quotients with their unique reaching word; a
    /// tree rooted at the initial state, or empty.
    pub ur_tree: BTreeMap<StateId, String>,
    /// Uniquely reachable accepting quotients (the `t` of the product
    /// refinement).
    pub ur_accepting_count: usize,
    /// Uniquely reachable rejecting quotients (the `s` of the product
    /// refinement).
    pub ur_rejecting_count: usize,
    pub is_suffix_free: bool,
    pub is_finite: bool,
    pub is_empty_language: bool,
}

/// Count of words reaching a uniquely reachable quotient in both operands.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PairProfile {
    pub r: usize,
}

/// Which states, if any, denote the four special languages.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SpecialQuotients {
    pub empty: Option<StateId>,
    pub universal: Option<StateId>,
    pub epsilon: Option<StateId>,
    pub sigma_plus: Option<StateId>,
}

/// Computes the full profile. The input must be minimal; callers pass
/// [`minimize`](crate::automata::minimize) output.
pub fn profile(d: &Dfa) -> ComplexityProfile {
    let specials = special_quotients(d);
    let ur_tree = unique_reachable(d);
    let ur_accepting_count = ur_tree.keys().filter(|&&q| d.is_accepting(q)).count();
    let ur_rejecting_count = ur_tree.len() - ur_accepting_count;
    ComplexityProfile {
        kappa: d.state_count(),
        accepting_count: d.accepting_count(),
        has_empty_quotient: specials.empty.is_some(),
        has_universal_quotient: specials.universal.is_some(),
        has_epsilon_quotient: specials.epsilon.is_some(),
        has_sigma_plus_quotient: specials.sigma_plus.is_some(),
        ur_tree,
        ur_accepting_count,
        ur_rejecting_count,
        is_suffix_free: is_suffix_free(d),
        is_finite: is_finite(d),
        is_empty_language: d.accepting_count() == 0,
    }
}

/// The uniquely reachable quotients and their unique reaching words.
///
/// The initial state belongs to the map (with the empty word) exactly when
/// it has no incoming transition, self-loops included. A non-initial state
/// belongs exactly when it has a single incoming transition `(p, a)` and
/// `p` is itself uniquely reachable; its word is `word(p)·a`. The result
/// is a tree rooted at the initial state, or empty.
pub fn unique_reachable(d: &Dfa) -> BTreeMap<StateId, String> {
    let n = d.state_count();
    let width = d.alphabet().len();
    let mut incoming: Vec<Vec<(StateId, usize)>> = vec![Vec::new(); n];
    for q in 0..n {
        for a in 0..width {
            incoming[d.target(q, a)].push((q, a));
        }
    }

    let mut tree = BTreeMap::new();
    if !incoming[d.initial()].is_empty() {
        return tree;
    }
    tree.insert(d.initial(), String::new());
    let mut queue = VecDeque::from([d.initial()]);
    while let Some(p) = queue.pop_front() {
        for a in 0..width {
            let t = d.target(p, a);
            if t == d.initial() || tree.contains_key(&t) {
                continue;
            }
            if incoming[t].len() == 1 && incoming[t][0] == (p, a) {
                let mut word = tree[&p].clone();
                word.push(d.alphabet().letter(a));
                tree.insert(t, word);
                queue.push_back(t);
            }
        }
    }
    tree
}

/// Counts the words that reach a uniquely reachable quotient in both
/// operands: the intersection of the two word sets.
pub fn shared_ur_count(
    ur_k: &BTreeMap<StateId, String>,
    ur_l: &BTreeMap<StateId, String>,
) -> PairProfile {
    let words_l: std::collections::BTreeSet<&str> =
        ur_l.values().map(String::as_str).collect();
    let r = ur_k
        .values()
        .filter(|w| words_l.contains(w.as_str()))
        .count();
    PairProfile { r }
}

/// Detects the special quotients ε, Σ⁺, ∅ and Σ*. In a minimal complete
/// DFA these have exact local characterizations: ∅ is a rejecting state
/// looping to itself, Σ* an accepting one; ε is an accepting state whose
/// transitions all enter the ∅ state; Σ⁺ a rejecting state whose
/// transitions all enter the Σ* state.
pub fn special_quotients(d: &Dfa) -> SpecialQuotients {
    let n = d.state_count();
    let width = d.alphabet().len();
    let mut out = SpecialQuotients::default();
    let all_to = |q: StateId, target: StateId| (0..width).all(|a| d.target(q, a) == target);
    for q in 0..n {
        if all_to(q, q) {
            if d.is_accepting(q) {
                out.universal = Some(q);
            } else {
                out.empty = Some(q);
            }
        }
    }
    for q in 0..n {
        if d.is_accepting(q) {
            if let Some(empty) = out.empty {
                if q != empty && all_to(q, empty) {
                    out.epsilon = Some(q);
                }
            }
        } else if let Some(universal) = out.universal {
            if q != universal && all_to(q, universal) {
                out.sigma_plus = Some(q);
            }
        }
    }
    out
}

/// Whether no word of the language is a proper suffix of another word of
/// the language: for every state reachable by a non-empty word, its
/// language must be disjoint from the language of the initial state.
/// Vacuously true for the empty language.
pub fn is_suffix_free(d: &Dfa) -> bool {
    let n = d.state_count();
    let width = d.alphabet().len();
    // states reachable by at least one letter
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for a in 0..width {
        let t = d.target(d.initial(), a);
        if !seen[t] {
            seen[t] = true;
            queue.push_back(t);
        }
    }
    while let Some(q) = queue.pop_front() {
        for a in 0..width {
            let t = d.target(q, a);
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    (0..n)
        .filter(|&q| seen[q])
        .all(|q| !languages_intersect(d, q, d.initial()))
}

/// Whether some word is accepted from both `p` and `q` (pair-construction
/// emptiness check on the intersection).
fn languages_intersect(d: &Dfa, p: StateId, q: StateId) -> bool {
    let n = d.state_count();
    let width = d.alphabet().len();
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::from([(p, q)]);
    seen[p * n + q] = true;
    while let Some((x, y)) = queue.pop_front() {
        if d.is_accepting(x) && d.is_accepting(y) {
            return true;
        }
        for a in 0..width {
            let t = (d.target(x, a), d.target(y, a));
            if !seen[t.0 * n + t.1] {
                seen[t.0 * n + t.1] = true;
                queue.push_back(t);
            }
        }
    }
    false
}

/// Whether the language is finite: the subgraph of states that can reach
/// an accepting state must be acyclic.
pub fn is_finite(d: &Dfa) -> bool {
    let n = d.state_count();
    let width = d.alphabet().len();
    // states that can reach an accepting state (reverse reachability)
    let mut useful = vec![false; n];
    let mut incoming: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for q in 0..n {
        for a in 0..width {
            incoming[d.target(q, a)].push(q);
        }
    }
    let mut queue: VecDeque<StateId> = (0..n).filter(|&q| d.is_accepting(q)).collect();
    for &q in &queue {
        useful[q] = true;
    }
    while let Some(q) = queue.pop_front() {
        for &p in &incoming[q] {
            if !useful[p] {
                useful[p] = true;
                queue.push_back(p);
            }
        }
    }

    // cycle detection restricted to useful states
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let mut color = vec![WHITE; n];
    for start in (0..n).filter(|&q| useful[q]) {
        if color[start] != WHITE {
            continue;
        }
        // iterative DFS with an explicit stack of (state, next letter)
        let mut stack = vec![(start, 0usize)];
        color[start] = GRAY;
        while let Some((q, next)) = stack.last().copied() {
            if next == width {
                color[q] = BLACK;
                stack.pop();
                continue;
            }
            stack.last_mut().expect("non-empty stack").1 += 1;
            let t = d.target(q, next);
            if !useful[t] {
                continue;
            }
            match color[t] {
                GRAY => return false,
                WHITE => {
                    color[t] = GRAY;
                    stack.push((t, 0));
                }
                _ => {}
            }
        }
    }
    true
}
