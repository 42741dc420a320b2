use thiserror::Error;

/// Errors reported by the library. Arithmetic never wraps silently: any
/// computation that would leave the 64-bit range surfaces as [`Error::Overflow`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("enumeration too large: {0}")]
    Capacity(String),

    #[error("invalid generator pair: {0}")]
    InvalidGenerators(String),

    #[error("invalid constraint profile: {0}")]
    InvalidProfile(String),

    /// Gap analysis is refused outright for non-coprime generators: every
    /// integer outside the single residue class gcd·k is a non-member, so the
    /// complement is trivially unbounded and a "maximum gap" does not exist.
    #[error(
        "generators {p} and {q} share the factor {g}; the complement is unbounded \
         and gap analysis is not meaningful"
    )]
    NonCoprimeGenerators { p: u64, q: u64, g: u64 },

    #[error("range error: {0}")]
    Range(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate verification failed: {0}")]
    Certification(String),

    #[error("table parse error: {0}")]
    Parse(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serialize(String),
}

pub type Result<T> = std::result::Result<T, Error>;
