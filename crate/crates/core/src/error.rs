use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into two groups: rejected inputs (a precondition of the
/// called operation was violated) and internal invariant failures, which
/// indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type label `{label}`: {reason}")]
    InvalidLabel { label: String, reason: String },

    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("root {root} is not a positive root")]
    NotPositive { root: String },

    #[error("word {word} is not reduced (inversion root at position {position} is negative)")]
    NotReduced { word: String, position: usize },

    #[error("word {word} is not a reduced word of the expected element")]
    WrongElement { word: String },

    #[error("element has more than {limit} reduced words")]
    TooManyReducedWords { limit: usize },

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("window {window} exceeds word length {len}")]
    WindowTooLong { window: usize, len: usize },

    #[error("window {window} is shorter than the pattern length {pattern_len}")]
    WindowTooShort { window: usize, pattern_len: usize },

    #[error(
        "window {window} is unsound: letter {letter} still occurs at position {last}; \
         the earliest sound window is {last}"
    )]
    UnsoundWindow {
        window: usize,
        letter: usize,
        last: usize,
    },

    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that signal a bug rather than a rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
