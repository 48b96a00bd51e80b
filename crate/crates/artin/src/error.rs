use thiserror::Error;

/// Errors raised while reading words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown generator symbol {symbol:?} at byte {pos}")]
    UnknownSymbol { symbol: char, pos: usize },
    #[error("generator index {index} at byte {pos} is out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize, pos: usize },
    #[error("malformed exponent at byte {pos}")]
    BadExponent { pos: usize },
}

/// Errors raised while building or loading a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("generator count must be at least 1")]
    Empty,
    #[error("matrix has {rows} rows but n = {n}")]
    RowCount { rows: usize, n: usize },
    #[error("row {row} has {len} entries but n = {n}")]
    RowLength { row: usize, len: usize, n: usize },
    #[error("diagonal entry ({i},{i}) must be 1")]
    Diagonal { i: usize },
    #[error("entry ({i},{j}) differs from ({j},{i})")]
    Asymmetric { i: usize, j: usize },
    #[error("off-diagonal entry ({i},{j}) = {value} is below 2")]
    LabelTooSmall { i: usize, j: usize, value: i64 },
    #[error("unrecognised label {text:?}")]
    BadLabel { text: String },
    #[error("presentation file: {0}")]
    Format(String),
}

/// Errors raised by the group engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("presentation is not of large type")]
    NotLargeType,
    #[error("presentation contains a triangle labelled 3,3,m with m finite")]
    Hypothesis33m,
    #[error("word is not freely reduced")]
    NotFreelyReduced,
    #[error("word involves generators outside the pair ({i},{j})")]
    ForeignLetter { i: usize, j: usize },
    #[error("operation needs a finite label")]
    InfiniteLabel,
    #[error("element is unsigned, so its Garside power is undefined")]
    Unsigned,
    #[error("element is the identity")]
    Identity,
    #[error("word is not critical")]
    NotCritical,
    #[error("subword is not over-critical: {0}")]
    NotOverCritical(&'static str),
    #[error("generator pair ({i},{j}) is invalid")]
    BadPair { i: usize, j: usize },
    #[error("{what} exceeds the configured bound {bound}")]
    Budget { what: &'static str, bound: usize },
    #[error("element lies outside the enumerated ball of radius {radius}")]
    OutsideBall { radius: usize },
    #[error("merger triple does not have a compressible shape: {0}")]
    Shape(&'static str),
    #[error("letter {a} is not unique in the tail of LD; tails end in {a} and {b}")]
    TailNotUnique { a: String, b: String },
    #[error("ball cache: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
