//! Error type shared by all kernel modules.
//!
//! Every validation failure carries a witness: the elements, arrows or table
//! entries at which the axiom breaks.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad table: {0}")]
    BadTable(String),
    #[error("no identity: 0 is not neutral against element {0}")]
    NoIdentity(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("not a homomorphism at pair ({a}, {b})")]
    NotHomomorphic { a: usize, b: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("category axiom violated: {0}")]
    AxiomViolation(String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("enumeration bound exceeded: needed {needed}, bound {bound}")]
    SizeBoundExceeded { needed: usize, bound: usize },
    #[error("interchange law violated at arrows (g={g}, h={h}, k={k}, l={l})")]
    InterchangeViolation { g: usize, h: usize, k: usize, l: usize },
    #[error("crossed module axiom violated: {0}")]
    CrossedModuleViolation(String),
    #[error("action is not functorial: {0}")]
    NotFunctorial(String),
    #[error("action unit law violated: {0}")]
    UnitLawViolation(String),
    #[error("action associativity violated: {0}")]
    AssociativityViolation(String),
    #[error("functor is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("2-cell compatibility violated: {0}")]
    NotCompatible(String),
    #[error("coset structure not well-defined: {0}")]
    WellDefinednessViolation(String),
    #[error("invalid orbit morphism or 2-cell: {0}")]
    InvalidMorphism(String),
    #[error("naturality square mismatch: {0}")]
    SquareMismatch(String),
}
