//! Text syntax for extended regular expressions.
//!
//! ```text
//! letters a-z    @ = empty language    _ = empty word
//! postfix *      prefix !              juxtaposition = concatenation
//! infix   &  -  ^  |                   parentheses group
//! ```
//!
//! Precedence, tightest first: `*` and `!`, concatenation, `&`, `-`, `^`,
//! `|`. Binary operators are left-associative. Whitespace between tokens is
//! ignored.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::regex::Regex;

/// Parses `text` over `alphabet` into a normal-form tree.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        alphabet,
    };
    p.skip_ws();
    let r = p.union()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected '{c}'")));
    }
    Ok(r)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn union(&mut self) -> Result<Regex> {
        let mut acc = self.symdiff()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('|') {
                self.bump();
                self.skip_ws();
                let rhs = self.symdiff()?;
                acc = Regex::union([acc, rhs]);
            } else {
                return Ok(acc);
            }
        }
    }

    fn symdiff(&mut self) -> Result<Regex> {
        let mut acc = self.diff()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('^') {
                self.bump();
                self.skip_ws();
                let rhs = self.diff()?;
                acc = Regex::sym_diff([acc, rhs]);
            } else {
                return Ok(acc);
            }
        }
    }

    fn diff(&mut self) -> Result<Regex> {
        let mut acc = self.intersect()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('-') {
                self.bump();
                self.skip_ws();
                let rhs = self.intersect()?;
                acc = Regex::diff(acc, rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn intersect(&mut self) -> Result<Regex> {
        let mut acc = self.concat()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('&') {
                self.bump();
                self.skip_ws();
                let rhs = self.concat()?;
                acc = Regex::intersect([acc, rhs]);
            } else {
                return Ok(acc);
            }
        }
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut factors = vec![self.unary()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c == '!' || c == '(' || Self::is_atom_start(c) => {
                    factors.push(self.unary()?);
                }
                _ => break,
            }
        }
        Ok(Regex::concat(factors))
    }

    fn unary(&mut self) -> Result<Regex> {
        self.skip_ws();
        if self.peek() == Some('!') {
            self.bump();
            let inner = self.unary()?;
            return Ok(Regex::complement(inner));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                r = Regex::star(r);
            } else {
                return Ok(r);
            }
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('@') => {
                self.bump();
                Ok(Regex::Empty)
            }
            Some('_') => {
                self.bump();
                Ok(Regex::Epsilon)
            }
            Some('(') => {
                self.bump();
                let inner = self.union()?;
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.err("expected ')'"))
                }
            }
            Some(c) if c.is_ascii_lowercase() => {
                if !self.alphabet.contains(c) {
                    return Err(Error::LetterNotInAlphabet {
                        letter: c,
                        position: self.pos,
                        alphabet: self.alphabet.to_string(),
                    });
                }
                self.bump();
                Ok(Regex::Letter(c))
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }

    fn is_atom_start(c: char) -> bool {
        c == '@' || c == '_' || c.is_ascii_lowercase()
    }
}
