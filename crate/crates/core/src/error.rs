use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series whose constant term is not a unit")]
    DivByNonunit,
    #[error("inner series of a composition must have zero constant term")]
    InnerConstantNonzero,
    #[error("series is not revertible: needs zero constant term and a unit linear coefficient")]
    NotRevertible,
    #[error("bad constant term for {0}")]
    BadConstantTerm(&'static str),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("generator `{0}` has no numeric value")]
    UnboundGenerator(String),
    #[error("unknown formal group law `{0}`")]
    UnknownLaw(String),
    #[error("unknown genus series `{0}`")]
    UnknownSeries(String),
    #[error("order {got} is below the minimum {min}")]
    OrderTooSmall { got: usize, min: usize },
    #[error("series order {have} is insufficient, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("chern table is incomplete: missing {0}")]
    IncompleteChernTable(String),
    #[error("expression has odd power-sum content: {0}")]
    OddContent(String),
    #[error("unit axiom fails: {0}")]
    NotAUnit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
