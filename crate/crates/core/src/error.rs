use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra has no elements")]
    Empty,
    #[error("algebra has {n} elements, at most {max} are supported")]
    TooLarge { n: usize, max: usize },
    #[error("invalid element name {0:?}: names are non-empty tokens without whitespace or '#'")]
    InvalidName(String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) = {value} is out of range for {n} elements")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("no designated one")]
    MissingOne,
    #[error("designated {constant} = {value} is out of range for {n} elements")]
    ConstantOutOfRange { constant: &'static str, value: usize, n: usize },
    #[error("one and zero coincide in a non-degenerate algebra")]
    OneEqualsZero,
    #[error("no designated zero; derived operations are undefined")]
    NoZero,
    #[error("not involutive: {element}** ≠ {element}")]
    NotInvolutive { element: String },
    #[error("powers start at exponent 1")]
    ZeroExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("unknown axiom {0:?}")]
    UnknownAxiom(String),
    #[error("axiom {axiom} needs derived operations: {source}")]
    DerivedUnavailable {
        axiom: &'static str,
        #[source]
        source: AlgebraError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("unknown suite {0:?}; expected one of be, bounded-be, involutive-be, iom, qw, all")]
    UnknownSuite(String),
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error("exhaustive subset scan needs n ≤ {max}, got {n}")]
    Capacity { n: usize, max: usize },
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("subset is not a filter")]
    NotAFilter,
    #[error("subset is not a deductive system")]
    NotADeductiveSystem,
    #[error("characterizations disagree: {0}")]
    CharacterizationMismatch(String),
    #[error("state assigns {found} values to {expected} elements")]
    StateLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("subset is not a deductive system")]
    NotADeductiveSystem,
    #[error("partition has {found} entries, expected {expected}")]
    PartitionSize { expected: usize, found: usize },
    #[error("partition is not a congruence")]
    NotACongruence,
    #[error("relation fails {property} at {witness:?}")]
    Violation { property: &'static str, witness: Vec<usize> },
    #[error("characterizations of the relation disagree at ({x}, {y})")]
    CharacterizationMismatch { x: usize, y: usize },
    #[error("class of one is not a deductive system")]
    ClassOfOneNotDs,
    #[error("commutativity of the deductive system ({base}) disagrees with its quotient ({quotient})")]
    TransferMismatch { base: bool, quotient: bool },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Filter(#[from] FilterError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("size {n} exceeds the bound {max} for {mode}")]
    TooLarge { n: usize, max: usize, mode: &'static str },
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("class {0} is both required and forbidden")]
    Contradictory(String),
    #[error("unknown class flag {0:?}")]
    UnknownClass(String),
}

/// A diagnostic with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}
