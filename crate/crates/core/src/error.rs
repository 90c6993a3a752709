use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("{what}: size {size} exceeds supported bound {max}")]
    UnsupportedSize {
        what: &'static str,
        size: usize,
        max: usize,
    },

    #[error("{0} requires a connected graph")]
    Disconnected(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two independent computation routes disagreed.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// Strips any line annotation.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            e => e,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
