use thiserror::Error;

/// Errors surfaced by the library. Internal-consistency variants signal a
/// transcription bug in the bundled tables or sub-case lists and should never
/// fire for valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse `{0}` as a Cartan type")]
    ParseType(String),

    #[error("{0} is not a root of this system")]
    NotARoot(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition of {got} where a partition of {want} was expected")]
    SizeMismatch { got: u64, want: u64 },

    #[error("very even partition {0} labels two orbits and is not handled")]
    VeryEven(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no sub-case of the orbit tables matches {family}, q = {q} ({case})")]
    NoSubcase {
        family: String,
        q: u64,
        case: String,
    },

    #[error("sub-cases disagree for {family}, q = {q}: {candidates}")]
    AmbiguousSubcase {
        family: String,
        q: u64,
        candidates: String,
    },

    #[error("level -h^ + {p}/{q} is not admissible")]
    NotAdmissible { p: u64, q: u64 },

    #[error("maximal orbit is not unique: {0}")]
    NonUniqueMax(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("{0}")]
    Io(String),
}
