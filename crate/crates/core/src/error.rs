use thiserror::Error;

use crate::chains::Chain;

/// Errors produced by the library. Each variant's message starts with a
/// short stable token (`empty`, `range`, `ambiguous`, ...) so callers and
/// scripts can match on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty: operation requires a non-empty word")]
    Empty,

    #[error("digit-bump-domain: {0}")]
    DigitBumpDomain(&'static str),

    #[error("too-short: word must have length at least {min}, got {len}")]
    TooShort { min: usize, len: usize },

    #[error("range: {0}")]
    Range(String),

    #[error("not-farey: {0} is not a Farey word")]
    NotFarey(String),

    #[error("operand-domain: left operand {0} must be a Lyndon word of length >= 2")]
    OperandDomain(String),

    #[error("oracle-bound: length {len} exceeds the oracle bound {bound}")]
    OracleBound { len: usize, bound: usize },

    #[error("block-parse: {0}")]
    BlockParse(String),

    #[error("modulus: chains have different moduli ({0} vs {1})")]
    Modulus(u64, u64),

    #[error("not-perron: {0} is not a Perron word")]
    NotPerron(String),

    #[error("invalid-chain: {0}")]
    InvalidChain(String),

    #[error("invalid-beta: {0}")]
    InvalidBeta(String),

    #[error("ambiguous: beta enclosure straddles the endpoint{}", chain_suffix(.chain))]
    Ambiguous { chain: Option<Chain> },

    #[error("precision: comparison could not be certified at {bits} bits")]
    Precision { bits: u32 },

    #[error("trivial-subshift: {0}")]
    TrivialSubshift(&'static str),

    #[error("parse: {0}")]
    Parse(String),
}

fn chain_suffix(chain: &Option<Chain>) -> String {
    match chain {
        Some(c) => format!(" of chain {c}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
