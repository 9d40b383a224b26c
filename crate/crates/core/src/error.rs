use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letters must be positive integers, found {0}")]
    ZeroLetter(u32),

    #[error("invalid pattern {text:?}: {reason}")]
    BadPattern { text: String, reason: String },

    #[error("letter {letter} exceeds the declared alphabet size {n}")]
    AlphabetTooSmall { letter: u32, n: u32 },

    #[error("edge ({i},{j}) must satisfy i < j")]
    BadEdgeOrder { i: u32, j: u32 },

    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("graph must have at least one vertex")]
    BadSize,

    #[error("vertex set {0:?} is empty or not contained in [n]")]
    BadVertexSet(Vec<u32>),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: vertex {vertex} is outside [1, {n}]")]
    Range { line: usize, vertex: u32, n: u32 },

    #[error("line {line}: duplicate edge ({i},{j})")]
    DuplicateEdge { line: usize, i: u32, j: u32 },

    #[error(
        "word alphabet must be exactly [1, {n}] (A(w)=[n]); missing {missing:?}, extra {extra:?}"
    )]
    AlphabetMismatch {
        n: u32,
        missing: Vec<u32>,
        extra: Vec<u32>,
    },

    #[error(
        "pattern {0} has length 2; no universal construction exists, use `urep search` instead"
    )]
    UnsupportedPattern(String),

    #[error("pattern {pattern} does not have the shape required by the {core} construction")]
    WrongCore { pattern: String, core: &'static str },

    #[error("word-length budget {max_len} is smaller than the vertex count {n}")]
    BudgetTooSmall { max_len: usize, n: u32 },

    #[error("labeling sweep over {0}! permutations refused (n must be at most 8)")]
    TooManyLabelings(u32),
}
