use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("position {position} out of range for word length {k}")]
    PositionOutOfRange { position: usize, k: usize },

    #[error("symbol {id} outside alphabet [1..{sigma}]")]
    SymbolOutOfRange { id: u32, sigma: u32 },

    #[error("alphabet size {0} exceeds the supported maximum of {max}", max = crate::MAX_SIGMA)]
    AlphabetTooLarge(u32),

    #[error("word length {0} is not supported (must be 1..={max})", max = crate::MAX_WORD_LEN)]
    UnsupportedWordLength(usize),

    #[error("lexicon is empty")]
    EmptyLexicon,

    #[error("duplicate word {0}")]
    DuplicateWord(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("mask is not consistent with the word")]
    NotConsistent,

    #[error("inconsistent answer: no word of the lexicon remains")]
    InconsistentAnswer,

    #[error("repeated guess {0}")]
    RepeatedGuess(u32),

    #[error("instance too large for oracle: {0}")]
    TooLarge(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("input is not a regular bipartite graph")]
    NotRegularBipartite,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
