//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("letter '{letter}' at position {position} is not in alphabet \"{alphabet}\"")]
    LetterNotInAlphabet {
        letter: char,
        position: usize,
        alphabet: String,
    },

    #[error("letter '{letter}' does not belong to alphabet \"{alphabet}\"")]
    LetterOutsideAlphabet { letter: char, alphabet: String },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("state cap exceeded: exploration produced more than {limit} states")]
    CapExceeded { limit: usize },

    #[error("invalid automaton: {0}")]
    InvalidDfa(String),

    #[error("bound arguments out of range: {0}")]
    BoundDomain(String),

    #[error("unknown bound name '{0}'")]
    UnknownBound(String),

    #[error("unknown witness family '{0}'")]
    UnknownFamily(String),

    #[error("invalid parameters for witness family '{family}': {message}")]
    WitnessParams { family: String, message: String },

    #[error(
        "derivative and product constructions disagree: {derivative} vs {product} states \
         (this indicates an internal defect)"
    )]
    TwoPathMismatch { derivative: usize, product: usize },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
