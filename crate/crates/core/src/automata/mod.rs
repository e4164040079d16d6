//! Quotient automata: derivative-based DFA construction, minimization,
//! boolean product and reversal constructions, equivalence, and the exact
//! quotient complexity κ.

mod format;
mod minimize;

pub use minimize::minimize;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::regex::Regex;

pub type StateId = usize;

/// Safety cap for state-set explorations (derivative closure and subset
/// construction). The number of dissimilar derivatives is always finite,
/// but can be large; exceeding the cap is reported as an error rather than
/// looping on.
#[derive(Clone, Copy, Debug)]
pub struct ExplorationConfig {
    pub max_states: usize,
}

impl Default for ExplorationConfig {
    fn default() -> Self {
        ExplorationConfig {
            max_states: 1_000_000,
        }
    }
}

impl ExplorationConfig {
    pub fn with_max_states(max_states: usize) -> Self {
        ExplorationConfig { max_states }
    }
}

/// A complete deterministic finite automaton in which every state is
/// reachable from the initial state. States produced by [`build_dfa`] carry
/// the derivative that labels them.
#[derive(Clone, Debug, PartialEq)]
pub struct Dfa {
    alphabet: Alphabet,
    transitions: Vec<Vec<StateId>>,
    initial: StateId,
    accepting: Vec<bool>,
    labels: Option<Vec<Regex>>,
}

impl Dfa {
    /// Builds a DFA from explicit parts, validating completeness and
    /// reachability.
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<StateId>>,
        initial: StateId,
        accepting: Vec<bool>,
        labels: Option<Vec<Regex>>,
    ) -> Result<Dfa> {
        let n = transitions.len();
        if n == 0 {
            return Err(Error::InvalidDfa("automaton must have a state".into()));
        }
        if initial >= n {
            return Err(Error::InvalidDfa(format!(
                "initial state {initial} out of range (have {n} states)"
            )));
        }
        if accepting.len() != n {
            return Err(Error::InvalidDfa(
                "accepting flags must cover every state".into(),
            ));
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::InvalidDfa("labels must cover every state".into()));
            }
        }
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidDfa(format!(
                    "state {q} has {} transitions, expected {}",
                    row.len(),
                    alphabet.len()
                )));
            }
            for &t in row {
                if t >= n {
                    return Err(Error::InvalidDfa(format!(
                        "state {q} has transition target {t} out of range"
                    )));
                }
            }
        }
        let dfa = Dfa {
            alphabet,
            transitions,
            initial,
            accepting,
            labels,
        };
        let reached = dfa.reachable_from(initial);
        if reached.iter().filter(|&&r| r).count() != n {
            let dead: Vec<String> = reached
                .iter()
                .enumerate()
                .filter(|(_, &r)| !r)
                .map(|(q, _)| q.to_string())
                .collect();
            return Err(Error::InvalidDfa(format!(
                "unreachable states: {}",
                dead.join(" ")
            )));
        }
        Ok(dfa)
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_count(&self) -> usize {
        self.accepting.iter().filter(|&&a| a).count()
    }

    pub fn accepting_states(&self) -> Vec<StateId> {
        (0..self.state_count())
            .filter(|&q| self.accepting[q])
            .collect()
    }

    /// Transition target for a state and letter index (alphabet order).
    pub fn target(&self, q: StateId, letter_index: usize) -> StateId {
        self.transitions[q][letter_index]
    }

    pub fn label(&self, q: StateId) -> Option<&Regex> {
        self.labels.as_ref().map(|l| &l[q])
    }

    /// Runs the automaton on a word.
    pub fn accepts(&self, word: &str) -> Result<bool> {
        let mut q = self.initial;
        for c in word.chars() {
            let i = self
                .alphabet
                .index_of(c)
                .ok_or_else(|| Error::LetterOutsideAlphabet {
                    letter: c,
                    alphabet: self.alphabet.to_string(),
                })?;
            q = self.transitions[q][i];
        }
        Ok(self.accepting[q])
    }

    /// The state reached from `from` by `word`; letters must be in the
    /// alphabet.
    pub fn step_word(&self, from: StateId, word: &str) -> Result<StateId> {
        let mut q = from;
        for c in word.chars() {
            let i = self
                .alphabet
                .index_of(c)
                .ok_or_else(|| Error::LetterOutsideAlphabet {
                    letter: c,
                    alphabet: self.alphabet.to_string(),
                })?;
            q = self.transitions[q][i];
        }
        Ok(q)
    }

    fn reachable_from(&self, start: StateId) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(q) = queue.pop_front() {
            for &t in &self.transitions[q] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    pub(crate) fn transitions(&self) -> &[Vec<StateId>] {
        &self.transitions
    }
}

/// A two-argument boolean connective on languages, applied pointwise to
/// acceptance in the pair construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymDiff,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [
        BoolOp::Union,
        BoolOp::Intersection,
        BoolOp::Difference,
        BoolOp::SymDiff,
    ];

    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::Union => a || b,
            BoolOp::Intersection => a && b,
            BoolOp::Difference => a && !b,
            BoolOp::SymDiff => a != b,
        }
    }

    /// Combines two expressions with this connective.
    pub fn combine(self, k: Regex, l: Regex) -> Regex {
        match self {
            BoolOp::Union => Regex::union([k, l]),
            BoolOp::Intersection => Regex::intersect([k, l]),
            BoolOp::Difference => Regex::diff(k, l),
            BoolOp::SymDiff => Regex::sym_diff([k, l]),
        }
    }
}

/// Explores the closure of `r`'s normal-form derivatives under letter
/// derivation, breadth-first with letters in alphabet order. Each state is
/// a dissimilar derivative and is accepting exactly when its derivative is
/// nullable. The result recognizes the language of `r` but may be
/// non-minimal: distinct dissimilar derivatives can denote equal quotients.
pub fn build_dfa(r: &Regex, alphabet: &Alphabet, cfg: ExplorationConfig) -> Result<Dfa> {
    for c in r.letters() {
        if !alphabet.contains(c) {
            return Err(Error::LetterOutsideAlphabet {
                letter: c,
                alphabet: alphabet.to_string(),
            });
        }
    }
    let start = r.normalize();
    let mut index: HashMap<Regex, StateId> = HashMap::new();
    let mut labels: Vec<Regex> = Vec::new();
    let mut transitions: Vec<Vec<StateId>> = Vec::new();
    let mut queue: VecDeque<StateId> = VecDeque::new();

    index.insert(start.clone(), 0);
    labels.push(start);
    queue.push_back(0);

    while let Some(q) = queue.pop_front() {
        let mut row = Vec::with_capacity(alphabet.len());
        for a in alphabet.iter() {
            let d = labels[q].derive_letter(a);
            let id = match index.get(&d) {
                Some(&id) => id,
                None => {
                    if labels.len() >= cfg.max_states {
                        return Err(Error::CapExceeded {
                            limit: cfg.max_states,
                        });
                    }
                    let id = labels.len();
                    index.insert(d.clone(), id);
                    labels.push(d);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
        // rows are pushed in BFS order, so `transitions` stays aligned
        debug_assert_eq!(transitions.len() - 1, q);
    }

    let accepting = labels.iter().map(Regex::nullable).collect();
    Ok(Dfa {
        alphabet: alphabet.clone(),
        transitions,
        initial: 0,
        accepting,
        labels: Some(labels),
    })
}

/// The exact quotient complexity of the language of `r`: the state count
/// of the minimized derivative automaton.
pub fn kappa(r: &Regex, alphabet: &Alphabet, cfg: ExplorationConfig) -> Result<usize> {
    Ok(minimize(&build_dfa(r, alphabet, cfg)?).state_count())
}

/// Reachable pair construction for a boolean connective. Both automata
/// must share the same alphabet. State numbering is breadth-first from the
/// initial pair with letters in alphabet order.
pub fn product_dfa(dk: &Dfa, dl: &Dfa, op: BoolOp) -> Dfa {
    assert_eq!(
        dk.alphabet, dl.alphabet,
        "product construction requires a common alphabet"
    );
    let width = dk.alphabet.len();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut transitions: Vec<Vec<StateId>> = Vec::new();
    let mut queue: VecDeque<StateId> = VecDeque::new();

    index.insert((dk.initial, dl.initial), 0);
    pairs.push((dk.initial, dl.initial));
    queue.push_back(0);

    while let Some(q) = queue.pop_front() {
        let (p1, p2) = pairs[q];
        let mut row = Vec::with_capacity(width);
        for a in 0..width {
            let t = (dk.transitions[p1][a], dl.transitions[p2][a]);
            let id = *index.entry(t).or_insert_with(|| {
                let id = pairs.len();
                pairs.push(t);
                queue.push_back(id);
                id
            });
            row.push(id);
        }
        transitions.push(row);
    }

    let accepting = pairs
        .iter()
        .map(|&(p1, p2)| op.apply(dk.accepting[p1], dl.accepting[p2]))
        .collect();
    Dfa {
        alphabet: dk.alphabet.clone(),
        transitions,
        initial: 0,
        accepting,
        labels: None,
    }
}

/// Minimal complete DFA of the reversal language. Transitions are
/// reversed, the accepting set becomes the initial subset, and the result
/// is determinized by the subset construction (the empty subset acts as
/// the sink) and minimized.
pub fn reverse(d: &Dfa, cfg: ExplorationConfig) -> Result<Dfa> {
    let n = d.state_count();
    let width = d.alphabet.len();
    // reversed edges per letter: sources that reach `t` on `a`
    let mut rev: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); width]; n];
    for (q, row) in d.transitions.iter().enumerate() {
        for (a, &t) in row.iter().enumerate() {
            rev[t][a].push(q);
        }
    }

    let start: Vec<StateId> = d.accepting_states();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut transitions: Vec<Vec<StateId>> = Vec::new();
    let mut queue: VecDeque<StateId> = VecDeque::new();

    index.insert(start.clone(), 0);
    subsets.push(start);
    queue.push_back(0);

    while let Some(q) = queue.pop_front() {
        let mut row = Vec::with_capacity(width);
        #[allow(clippy::needless_range_loop)] // `a` also indexes into `rev[s]`
        for a in 0..width {
            let mut next: Vec<StateId> = Vec::new();
            let mut seen = vec![false; n];
            for &s in &subsets[q] {
                for &src in &rev[s][a] {
                    if !seen[src] {
                        seen[src] = true;
                        next.push(src);
                    }
                }
            }
            next.sort_unstable();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= cfg.max_states {
                        return Err(Error::CapExceeded {
                            limit: cfg.max_states,
                        });
                    }
                    let id = subsets.len();
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
    }

    let accepting = subsets
        .iter()
        .map(|s| s.binary_search(&d.initial).is_ok())
        .collect();
    let det = Dfa {
        alphabet: d.alphabet.clone(),
        transitions,
        initial: 0,
        accepting,
        labels: None,
    };
    Ok(minimize(&det))
}

/// The complement automaton: acceptance flipped on every state. Preserves
/// minimality, since complementation preserves distinguishability.
pub fn complement_dfa(d: &Dfa) -> Dfa {
    Dfa {
        alphabet: d.alphabet.clone(),
        transitions: d.transitions.clone(),
        initial: d.initial,
        accepting: d.accepting.iter().map(|&a| !a).collect(),
        labels: None,
    }
}

/// Language equality, decided by pair exploration from the two initial
/// states. Both automata must share the same alphabet.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> bool {
    assert_eq!(
        d1.alphabet, d2.alphabet,
        "equivalence requires a common alphabet"
    );
    equivalent_from(d1, d1.initial, d2, d2.initial)
}

/// Whether the languages of `s1` in `d1` and `s2` in `d2` coincide.
pub fn equivalent_from(d1: &Dfa, s1: StateId, d2: &Dfa, s2: StateId) -> bool {
    let width = d1.alphabet.len();
    let mut seen = vec![false; d1.state_count() * d2.state_count()];
    let mut queue = VecDeque::from([(s1, s2)]);
    seen[s1 * d2.state_count() + s2] = true;
    while let Some((p, q)) = queue.pop_front() {
        if d1.accepting[p] != d2.accepting[q] {
            return false;
        }
        for a in 0..width {
            let t = (d1.transitions[p][a], d2.transitions[q][a]);
            let key = t.0 * d2.state_count() + t.1;
            if !seen[key] {
                seen[key] = true;
                queue.push_back(t);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::parse;

    fn ab() -> Alphabet {
        "ab".parse().unwrap()
    }

    fn rex(s: &str) -> Regex {
        parse(s, &ab()).unwrap()
    }

    fn cfg() -> ExplorationConfig {
        ExplorationConfig::default()
    }

    #[test]
    fn empty_language_is_a_rejecting_sink() {
        let d = build_dfa(&Regex::Empty, &ab(), cfg()).unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(!d.is_accepting(0));
        assert_eq!(d.target(0, 0), 0);
        assert_eq!(d.target(0, 1), 0);
    }

    #[test]
    fn derivative_states_of_a_star_b() {
        let d = build_dfa(&rex("a*b"), &ab(), cfg()).unwrap();
        assert_eq!(d.state_count(), 3);
        let labels: Vec<String> = (0..3).map(|q| d.label(q).unwrap().to_string()).collect();
        assert_eq!(labels, vec!["a*b", "_", "@"]);
        assert!(d.accepts("aab").unwrap());
        assert!(!d.accepts("aba").unwrap());
    }

    #[test]
    fn sigma_star_collapses_to_one_state() {
        let d = build_dfa(&rex("(a|b)*"), &ab(), cfg()).unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(d.is_accepting(0));
    }

    #[test]
    fn cap_is_enforced() {
        let err = build_dfa(&rex("a*b"), &ab(), ExplorationConfig::with_max_states(2));
        assert!(matches!(err, Err(Error::CapExceeded { limit: 2 })));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&Regex::Empty, &ab(), cfg()).unwrap(), 1);
        assert_eq!(kappa(&rex("a*b"), &ab(), cfg()).unwrap(), 3);
        assert_eq!(kappa(&rex("!@"), &ab(), cfg()).unwrap(), 1);
    }

    #[test]
    fn product_identities() {
        let astar = minimize(&build_dfa(&rex("a*"), &ab(), cfg()).unwrap());
        let x_and_x = minimize(&product_dfa(&astar, &astar, BoolOp::Intersection));
        assert!(equivalent(&x_and_x, &astar));

        let universal = minimize(&build_dfa(&rex("!@"), &ab(), cfg()).unwrap());
        let diff = minimize(&product_dfa(&astar, &universal, BoolOp::Difference));
        let empty = minimize(&build_dfa(&Regex::Empty, &ab(), cfg()).unwrap());
        assert!(equivalent(&diff, &empty));

        let xor = minimize(&product_dfa(&astar, &astar, BoolOp::SymDiff));
        assert!(equivalent(&xor, &empty));
    }

    #[test]
    fn reversal_examples() {
        let d = build_dfa(&rex("ab"), &ab(), cfg()).unwrap();
        let r = reverse(&d, cfg()).unwrap();
        assert!(r.accepts("ba").unwrap());
        assert!(!r.accepts("ab").unwrap());
        assert_eq!(r.state_count(), 4);

        let astar = build_dfa(&rex("a*"), &ab(), cfg()).unwrap();
        let rstar = reverse(&astar, cfg()).unwrap();
        assert!(equivalent(&rstar, &minimize(&astar)));
    }

    #[test]
    fn equivalence_examples() {
        let d = build_dfa(&rex("(a|b)*a"), &ab(), cfg()).unwrap();
        assert!(equivalent(&minimize(&d), &d));
        let da = build_dfa(&rex("a"), &ab(), cfg()).unwrap();
        let db = build_dfa(&rex("b"), &ab(), cfg()).unwrap();
        assert!(!equivalent(&da, &db));
        let sigma = build_dfa(&rex("(a|b)*"), &ab(), cfg()).unwrap();
        let not_empty = build_dfa(&rex("!@"), &ab(), cfg()).unwrap();
        assert!(equivalent(&sigma, &not_empty));
    }

    #[test]
    fn labels_follow_derivatives() {
        let d = build_dfa(&rex("(a|b)*a(a|b)"), &ab(), cfg()).unwrap();
        for q in 0..d.state_count() {
            let label = d.label(q).unwrap();
            for (i, a) in d.alphabet().iter().enumerate() {
                let expected = label.derive_letter(a);
                assert_eq!(d.label(d.target(q, i)).unwrap(), &expected);
            }
        }
    }

    #[test]
    fn rejects_malformed_automata() {
        let ab = ab();
        // non-total row
        assert!(Dfa::new(ab.clone(), vec![vec![0]], 0, vec![true], None).is_err());
        // unreachable state
        assert!(Dfa::new(
            ab.clone(),
            vec![vec![0, 0], vec![1, 1]],
            0,
            vec![true, false],
            None
        )
        .is_err());
        // out-of-range target
        assert!(Dfa::new(ab, vec![vec![0, 7]], 0, vec![true], None).is_err());
    }
}
