use std::path::PathBuf;

use thiserror::Error;

use crate::presentation::SmallCancellationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("invalid generator name `{0}`")]
    BadName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{name}` at column {column}")]
    UnknownGenerator { name: String, column: usize },
    #[error("bad exponent in `{token}` at column {column}")]
    BadExponent { token: String, column: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: unknown generator `{name}`")]
    UnknownGenerator { name: String, line: usize, column: usize },
    #[error("line {line}: relator is freely trivial")]
    TrivialRelator { line: usize },
    #[error("relator {index} uses generator {gen} outside an alphabet of size {arity}")]
    LetterOutOfRange { index: usize, gen: usize, arity: usize },
    #[error("relator {index} is empty or not cyclically reduced")]
    NotCyclicallyReduced { index: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table is malformed: {0}")]
    Malformed(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("malformed group spec `{spec}`: {reason}")]
    MalformedSpec { spec: String, reason: String },
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Presentation { path: PathBuf, source: PresentationError },
    #[error("{path}: {source}")]
    Table { path: PathBuf, source: TableError },
    #[error("presentation fails C'(1/6): max piece ratio {}", .0.max_ratio_text())]
    NotSmallCancellation(Box<SmallCancellationReport>),
    #[error("letter for generator {gen} is outside arity {arity}")]
    LetterOutOfRange { gen: usize, arity: usize },
    #[error("{0}")]
    NoOracle(String),
}

#[derive(Debug, Error)]
pub enum MarkedError {
    #[error("vertex cap {cap} exceeded (reached {partial} vertices)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("invalid Nielsen move: {0}")]
    InvalidMove(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Error)]
pub enum LogicError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("quantifier budget of {0} evaluations exhausted")]
    BudgetExceeded(u64),
    #[error("formula syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown named formula `{0}`")]
    UnknownFormula(String),
    #[error("bad formula parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Marked(#[from] MarkedError),
}
