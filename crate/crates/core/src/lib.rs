//! Exact Lie-algebraic structure theory for homogeneous Riemannian spaces
//! with a geodesic-orbit analyzer.
//!
//! The crate decides, for metric homogeneous-space data given by rational
//! structure constants, whether every geodesic is the orbit of a
//! one-parameter isometry group, and computes the structural
//! decompositions that constrain such spaces: Killing-orthogonal reductive
//! splittings, radical/nilradical/Levi data, Iwasawa decompositions,
//! solvable-times-nilpotent transitive groups, and Riemannian-submersion
//! splittings. A small numeric integrator cross-validates solved geodesics.
//!
//! Everything structural is exact over arbitrary-precision rationals;
//! floating point appears only in the symmetric eigensolver (whose output
//! is recertified exactly) and the simulator.

pub mod catalog;
pub mod gocheck;
pub mod homspace;
pub mod levi;
pub mod lie;
pub mod linalg;
pub mod nilmanifold;
pub mod numeric;
pub mod rat;
pub mod report;
pub mod sim;
pub mod specfile;
pub mod structure;

pub use lie::{AlgebraError, KillingForm, LieAlgebra};
pub use linalg::{RatMatrix, Subspace};
pub use rat::Rat;
