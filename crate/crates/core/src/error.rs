use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("symbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("nondeterministic: two transitions from state {state} on '{symbol}'")]
    DuplicateTransition { state: usize, symbol: char },

    #[error("state {state} out of range (automaton has {count} states)")]
    StateOutOfRange { state: usize, count: usize },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("automaton is not trim")]
    NotTrim,

    #[error("automaton has no states")]
    EmptyAutomaton,

    #[error("language is empty")]
    EmptyLanguage,

    #[error("monoid exceeds the configured cap of {0} elements")]
    MonoidTooLarge(usize),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("no idempotent with i.e = i and e.T = T: {0}")]
    NoSuschkevitchIdempotent(String),

    #[error("operation requires characteristic {expected}, field has characteristic {actual}")]
    WrongCharacteristic { expected: String, actual: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("subspace is not invariant")]
    NotInvariant,

    #[error("algebra is not semisimple")]
    NotSemisimple,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("matrix is not in the algebra")]
    NotInAlgebra,

    #[error("external power order {k} out of range 1..={n}")]
    OrderOutOfRange { k: usize, n: usize },

    #[error("chain is not nested: link {0} is not contained in link {1}")]
    NestingViolated(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("expected a one-letter alphabet, got {0} letters")]
    NotOneLetter(usize),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
