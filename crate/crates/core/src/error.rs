use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("probe set must be non-empty and duplicate-free")]
    BadProbeSet,
    #[error("element {element} does not belong to carrier {carrier}")]
    CarrierMismatch { element: String, carrier: String },
    #[error("unknown carrier `{0}`")]
    UnknownCarrier(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("total evaluation requested in punched structure")]
    NotTotal,
    #[error("exhaustive check requested over a non-enumerable carrier")]
    NotEnumerable,
    #[error("quantifier over `{0}` needs an enumerable carrier")]
    QuantifierOverInfinite(String),
    #[error("ordering is not defined on carrier {0}")]
    Unordered(String),
    #[error("formula is not closed: free variables {0:?}")]
    NotClosed(Vec<String>),
}
