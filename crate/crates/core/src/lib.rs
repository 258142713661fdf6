//! Finite-model kernel for L-fuzzy topology.
//!
//! Everything here works on explicit tables over small finite carriers:
//! lattices with a monoidal tensor, the fuzzy powerset `L^X` together with
//! the graded carrier `L^X × L`, fuzzy topologies with their interior
//! operators and neighborhood systems, graded filters, and the compactness
//! oracles built on top of them. Universally quantified axioms are decided
//! by exhaustive sweeps, bounded by [`Limits`].

pub mod compactness;
pub mod corpus;
pub mod error;
pub mod filters;
pub mod lattice;
pub mod limits;
pub mod powerset;
pub mod report;
pub mod residuated;
pub mod topology;

pub use error::{KernelError, Result};
pub use lattice::{build_lattice, Elem, Lattice};
pub use limits::Limits;
pub use powerset::{FuzzySet, GradedSet, PointMap, Powerset};
pub use report::{AxiomCheck, AxiomReport, Outcome};
pub use residuated::{Algebra, Residuum, Tensor, TensorKind};
