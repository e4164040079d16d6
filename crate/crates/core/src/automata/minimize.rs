//! DFA minimization by partition refinement (Moore's algorithm) with a
//! canonical renumbering of the result.

use std::collections::HashMap;

use crate::automata::{Dfa, StateId};

/// Returns the language-equivalent DFA in which all states are pairwise
/// inequivalent. States are renumbered canonically: breadth-first from the
/// initial state with letters in alphabet order, so two equal languages
/// minimize to structurally identical automata. Idempotent.
pub fn minimize(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let width = d.alphabet().len();
    let transitions = d.transitions();

    // Initial partition: accepting vs rejecting, classes numbered by first
    // occurrence so the refinement is deterministic.
    let mut class: Vec<usize> = Vec::with_capacity(n);
    let mut class_count = 0;
    let mut first = [usize::MAX; 2];
    for q in 0..n {
        let key = usize::from(d.is_accepting(q));
        if first[key] == usize::MAX {
            first[key] = class_count;
            class_count += 1;
        }
        class.push(first[key]);
    }

    loop {
        let mut signature_ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next_class = vec![0usize; n];
        for q in 0..n {
            let sig = (
                class[q],
                transitions[q].iter().map(|&t| class[t]).collect::<Vec<_>>(),
            );
            let fresh = signature_ids.len();
            let id = *signature_ids.entry(sig).or_insert(fresh);
            next_class[q] = id;
        }
        let next_count = signature_ids.len();
        class = next_class;
        if next_count == class_count {
            break;
        }
        class_count = next_count;
    }

    // Representative per class: the lowest original state id.
    let mut representative = vec![usize::MAX; class_count];
    for q in (0..n).rev() {
        representative[class[q]] = q;
    }

    // Canonical renumbering of classes, breadth-first from the initial
    // class with letters in alphabet order.
    let mut renumber = vec![usize::MAX; class_count];
    let mut order: Vec<usize> = Vec::with_capacity(class_count);
    renumber[class[d.initial()]] = 0;
    order.push(class[d.initial()]);
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        let rep = representative[c];
        for a in 0..width {
            let target = class[transitions[rep][a]];
            if renumber[target] == usize::MAX {
                renumber[target] = order.len();
                order.push(target);
            }
        }
    }
    debug_assert_eq!(order.len(), class_count);

    let mut new_transitions: Vec<Vec<StateId>> = Vec::with_capacity(class_count);
    let mut new_accepting: Vec<bool> = Vec::with_capacity(class_count);
    let mut new_labels = d.label(0).map(|_| Vec::with_capacity(class_count));
    for &c in &order {
        let rep = representative[c];
        new_transitions.push(
            (0..width)
                .map(|a| renumber[class[transitions[rep][a]]])
                .collect(),
        );
        new_accepting.push(d.is_accepting(rep));
        if let Some(labels) = new_labels.as_mut() {
            labels.push(d.label(rep).expect("labelled input").clone());
        }
    }

    Dfa {
        alphabet: d.alphabet().clone(),
        transitions: new_transitions,
        initial: 0,
        accepting: new_accepting,
        labels: new_labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::automata::{build_dfa, equivalent, ExplorationConfig};
    use crate::regex::parse;

    fn ab() -> Alphabet {
        "ab".parse().unwrap()
    }

    #[test]
    fn merges_equivalent_sinks() {
        // two distinct rejecting sinks collapse into one
        let d = Dfa::new(
            ab(),
            vec![vec![1, 2], vec![1, 1], vec![2, 2]],
            0,
            vec![true, false, false],
            None,
        )
        .unwrap();
        let m = minimize(&d);
        assert_eq!(m.state_count(), 2);
        assert!(equivalent(&m, &d));
    }

    #[test]
    fn idempotent_and_canonical() {
        let d = build_dfa(
            &parse("(a|b)*a", &ab()).unwrap(),
            &ab(),
            ExplorationConfig::default(),
        )
        .unwrap();
        let m1 = minimize(&d);
        let m2 = minimize(&m1);
        assert_eq!(m1, m2);
    }

    #[test]
    fn redundant_expressions_minimize_to_the_same_automaton() {
        let cfg = ExplorationConfig::default();
        let simple = minimize(&build_dfa(&parse("(a|b)*", &ab()).unwrap(), &ab(), cfg).unwrap());
        let redundant = minimize(
            &build_dfa(
                &parse("a*|b*|(a|b)*|_", &ab()).unwrap(),
                &ab(),
                cfg,
            )
            .unwrap(),
        );
        // equal language and identical canonical form (ignoring labels)
        assert!(equivalent(&simple, &redundant));
        assert_eq!(simple.to_text(), redundant.to_text());
    }

    #[test]
    fn preserves_language() {
        let cfg = ExplorationConfig::default();
        for text in ["a*b", "(a|b)*a(a|b)", "!(ab)&(a|b)*", "a^ab^ba"] {
            let d = build_dfa(&parse(text, &ab()).unwrap(), &ab(), cfg).unwrap();
            assert!(equivalent(&d, &minimize(&d)), "language changed for {text}");
        }
    }
}
