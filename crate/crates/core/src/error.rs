use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("closed surfaces unsupported except via torus module")]
    ClosedSurface,

    #[error("generator x{generator} is outside the rank-{rank} surface")]
    GeneratorOutOfRange { generator: usize, rank: usize },

    #[error("trivial word has full-group centralizer")]
    TrivialCentralizer,

    #[error("use same-root path")]
    CommonRoot,

    #[error("root violation: rays of distinct passes coincide")]
    RootViolation,

    #[error("use power formula")]
    NotPrimitive,

    #[error("ordered-pair canonicalization undefined; use skew-symmetry")]
    EqualClasses,

    #[error("terms belong to different pairs of free homotopy classes")]
    MixedClassPairs,

    #[error("expected nonempty words")]
    EmptyWord,

    #[error("the class must be nontrivial")]
    TrivialClass,

    #[error("exponents must be distinct and nonzero, got p={p}, q={q}")]
    InvalidExponents { p: i64, q: i64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// True for errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::RootViolation | Error::Invariant(_))
    }
}
