use crate::map::Violation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dart count must be even, got {0}")]
    OddDartCount(usize),
    #[error("sigma is not a permutation of the dart set")]
    NotPermutation,
    #[error("not a valid multiquadrangulation: {}", format_violations(.0))]
    InvalidMap(Vec<Violation>),
    #[error("invalid split walk: {0}")]
    InvalidWalk(String),
    #[error("invalid contraction site: {0}")]
    InvalidContraction(String),
    #[error("map is not bipartite")]
    NotBipartite,
    #[error("colouring is not a proper 2-colouring")]
    ImproperColouring,
    #[error("adjacency rotations describe a non-simple graph; dart pairing is ambiguous")]
    AmbiguousRotations,
    #[error("operation requires a simple map (no parallel edges)")]
    NotSimple,
    #[error("skeleton is not polyhedral (must be simple and 3-connected)")]
    NotPolyhedral,
    #[error("input must be connected, loopless and spherical: {}", format_violations(.0))]
    BadRadialInput(Vec<Violation>),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("census identity violated at n={n}: {msg}")]
    CensusIdentity { n: usize, msg: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub(crate) fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
