//! Plain-text exchange format for automata.
//!
//! ```text
//! dfa <state_count> <alphabet-letters-concatenated>
//! initial <id>
//! accepting <space-separated ids, possibly none>
//! <id>: <target-for-letter-1> <target-for-letter-2> ...
//! ```
//!
//! One line per state, ids 0-based and in order, targets in alphabet
//! order. Parsing validates totality and reachability.

use crate::alphabet::Alphabet;
use crate::automata::{Dfa, StateId};
use crate::error::{Error, Result};

impl Dfa {
    pub fn to_text(&self) -> String {
        let mut out = format!("dfa {} {}\n", self.state_count(), self.alphabet());
        out.push_str(&format!("initial {}\n", self.initial()));
        let accepting: Vec<String> = self
            .accepting_states()
            .iter()
            .map(|q| q.to_string())
            .collect();
        out.push_str("accepting");
        for a in &accepting {
            out.push(' ');
            out.push_str(a);
        }
        out.push('\n');
        for q in 0..self.state_count() {
            let row: Vec<String> = (0..self.alphabet().len())
                .map(|a| self.target(q, a).to_string())
                .collect();
            out.push_str(&format!("{q}: {}\n", row.join(" ")));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Dfa> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty());

        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidDfa("missing header line".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("dfa") {
            return Err(Error::InvalidDfa("header must start with 'dfa'".into()));
        }
        let state_count: usize = parts
            .next()
            .ok_or_else(|| Error::InvalidDfa("header missing state count".into()))?
            .parse()
            .map_err(|_| Error::InvalidDfa("bad state count".into()))?;
        let letters = parts
            .next()
            .ok_or_else(|| Error::InvalidDfa("header missing alphabet".into()))?;
        if parts.next().is_some() {
            return Err(Error::InvalidDfa("trailing tokens in header".into()));
        }
        let alphabet: Alphabet = letters.parse()?;

        let initial_line = lines
            .next()
            .ok_or_else(|| Error::InvalidDfa("missing 'initial' line".into()))?;
        let initial: StateId = initial_line
            .strip_prefix("initial")
            .ok_or_else(|| Error::InvalidDfa("expected 'initial <id>'".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::InvalidDfa("bad initial state id".into()))?;

        let accepting_line = lines
            .next()
            .ok_or_else(|| Error::InvalidDfa("missing 'accepting' line".into()))?;
        let rest = accepting_line
            .strip_prefix("accepting")
            .ok_or_else(|| Error::InvalidDfa("expected 'accepting <ids>'".into()))?;
        let mut accepting = vec![false; state_count];
        for tok in rest.split_whitespace() {
            let id: usize = tok
                .parse()
                .map_err(|_| Error::InvalidDfa(format!("bad accepting id '{tok}'")))?;
            if id >= state_count {
                return Err(Error::InvalidDfa(format!(
                    "accepting id {id} out of range"
                )));
            }
            accepting[id] = true;
        }

        let mut transitions: Vec<Vec<StateId>> = Vec::with_capacity(state_count);
        for expected in 0..state_count {
            let line = lines.next().ok_or_else(|| {
                Error::InvalidDfa(format!("missing transition line for state {expected}"))
            })?;
            let (id_part, row_part) = line.split_once(':').ok_or_else(|| {
                Error::InvalidDfa(format!("expected '<id>: targets', got '{line}'"))
            })?;
            let id: usize = id_part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidDfa(format!("bad state id '{id_part}'")))?;
            if id != expected {
                return Err(Error::InvalidDfa(format!(
                    "state lines must appear in order: expected {expected}, got {id}"
                )));
            }
            let row: Vec<StateId> = row_part
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<StateId>()
                        .map_err(|_| Error::InvalidDfa(format!("bad target '{tok}'")))
                })
                .collect::<Result<_>>()?;
            transitions.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::InvalidDfa("trailing lines after state table".into()));
        }

        Dfa::new(alphabet, transitions, initial, accepting, None)
    }
}
