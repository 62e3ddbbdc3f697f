use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("truth table has length {got}, expected {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("truth table entry at index {index} is {value}, expected 0 or 1")]
    NonBitEntry { index: usize, value: u8 },
    #[error("{n} variables exceeds the maximum of {max}")]
    TooManyVariables { n: usize, max: usize },
    #[error("variable index {index} out of range [1, {n}]")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("{operation}: n = {n} exceeds cap {cap}")]
    CapExceeded {
        operation: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("power iteration budget of {budget} iterations exhausted")]
    IterationBudget { budget: usize },
    #[error("set family member {index} is empty")]
    EmptyFamilyMember { index: usize },
    #[error("set family contains duplicate member at index {index}")]
    DuplicateFamilyMember { index: usize },
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("invalid file: {0}")]
    InvalidFile(String),
    #[error("{0}")]
    Invalid(String),
}
