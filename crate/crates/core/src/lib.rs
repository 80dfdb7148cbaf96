//! Finite geometry of the three-qubit Pauli group.
//!
//! The crate builds the symplectic polar space W(5,2) of the factored
//! three-qubit Pauli group, pins down the split Cayley hexagon of order two
//! that is invariant under a fixed order-seven symplectic map, and uses it to
//!
//! - enumerate and classify all 16 383 geometric hyperplanes of the hexagon
//!   into the 25 Frohardt–Johnson types,
//! - compute the hexagon's automorphism group (order 12 096) and the
//!   hyperplane orbits,
//! - check Kochen–Specker ("magic") observable configurations, complete them
//!   along hexagon lines into hyperplanes and transport them by automorphisms,
//! - count the Mermin pentagrams of W(5,2).
//!
//! ```
//! use hexmagic::{hexagon::Hexagon, magic::{builtin, closure}};
//!
//! let hex = Hexagon::build().unwrap();
//! let cfg = builtin("18_2-12_3").unwrap();
//! let trace = closure(cfg.support(), &hex);
//! assert_eq!(trace.final_set.len(), 37);
//! ```

pub mod geometry;
pub mod gf2;
pub mod graph;
pub mod hexagon;
pub mod hyperplanes;
pub mod magic;
pub mod pauli;
pub mod tables;

pub use geometry::{LinearMap, SymplecticSpace};
pub use hexagon::{AutomorphismGroup, Hexagon, PointPermutation};
pub use hyperplanes::{Hyperplane, HyperplaneCatalog, PointSet, Signature, TypeId};
pub use magic::{ClosureTrace, Configuration, Context, MagicVerdict, Pentagram};
pub use pauli::{GfVector, PauliElement};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid Pauli string: {0}")]
    InvalidPauli(String),
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },
    #[error("product is not proportional to the identity (residual {0})")]
    NotIdentity(String),
    #[error("non-commuting pair {0}, {1}")]
    NonCommuting(String, String),
    #[error("linear map is singular")]
    SingularMap,
    #[error("points must be distinct and nonzero")]
    DegeneratePoints,
    #[error("configuration triple is not a totally isotropic line: {0}")]
    NotALine(String),
    #[error("σ table mismatch: {0}")]
    SigmaTable(String),
    #[error("no σ-invariant hexagon extends the seed lines")]
    NoHexagon,
    #[error("incidence matrix nullity is {0}, expected 14")]
    Nullity(usize),
    #[error("signature {0} does not occur in the type catalog")]
    UnknownSignature(String),
    #[error("signature {0} is shared by two types; orbit size required")]
    AmbiguousSignature(String),
    #[error("unknown built-in configuration {0:?}")]
    UnknownBuiltin(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("replica disagrees with the transcribed table: {0}")]
    ReplicaMismatch(String),
    #[error("replica power must be in 0..=6, got {0}")]
    ReplicaPower(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
