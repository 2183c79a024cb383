use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("unrecognized Cartan type `{0}`")]
    UnknownType(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("simple reflection index {index} out of range for rank {rank}")]
    LetterOutOfRange { index: usize, rank: usize },
    #[error("weight is not dominant for the Levi subgroup at node {node}")]
    NotLeviDominant { node: usize },
    #[error("weight is not minuscule for the Levi subgroup: pairing {pairing} with a coroot")]
    NotMinuscule { pairing: String },
    #[error("weight {0} does not descend to the component group")]
    NotDescending(String),
    #[error("weight {0} is outside the root lattice; the adjoint algorithm needs root-lattice weights")]
    OutsideRootLattice(String),
    #[error("class parameter belongs to a different orbit")]
    OrbitMismatch,
    #[error("weight does not descend: no integral exponent solves the torsion equation")]
    NoIntegralSolution,
    #[error("ambiguous exponent modulo {order}: torsion data is inconsistent")]
    AmbiguousExponent { order: u32 },
    #[error("inconsistent traces on class `{class}`: {first} vs {second}")]
    InconsistentTraces {
        class: String,
        first: String,
        second: String,
    },
    #[error("no lift found within norm bound {0}")]
    SearchExhausted(String),
    #[error("unknown orbit `{0}`")]
    UnknownOrbit(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not a subset of the reduced component basis")]
    NotInBasis(String),
    #[error("invalid generator evaluation: {0}")]
    InvalidGenerator(String),
    #[error("cannot parse {what} `{input}`")]
    Parse { what: &'static str, input: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
