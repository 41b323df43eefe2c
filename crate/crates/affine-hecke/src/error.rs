use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps these onto its two failure exit codes: `BoundExceeded` and
/// `Undetermined` are resource-bound failures (exit 3), everything else is a
/// validation failure (exit 2).
#[derive(Error, Debug)]
pub enum Error {
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("cartan matrix is not of finite type: leading principal minor {minor} of the symmetrized matrix is {det}")]
    NotFiniteType { minor: usize, det: i128 },

    #[error("pairing of coroot {j} with root {i} is {found}, cartan matrix requires {expected}")]
    PairingMismatch { i: usize, j: usize, expected: i64, found: i64 },

    #[error("coweight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("{what} exceeds the configured bound ({needed} > {limit})")]
    BoundExceeded { what: String, limit: u64, needed: u64 },

    #[error("undetermined: {0}")]
    Undetermined(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
