//! Exact symbolic engine for three-dimensional quantum algebras.
//!
//! The crate implements, over arbitrary-precision rationals:
//!
//! * truncated power series in a deformation parameter `z` with symbolic
//!   structure-constant coefficients ([`series`], [`poly`]);
//! * the deformed enveloping algebra on generators A, B, C with normal
//!   ordering, a symmetrized basis, and generator power series ([`algebra`]);
//! * tensor products, coproducts and verification of every Hopf axiom:
//!   coassociativity, the homomorphism property, counit, antipode and
//!   generalized cocommutativity ([`hopf`]);
//! * first-order constraints on structure constants and order-by-order
//!   reconstruction of deformed commutators as exact linear solves
//!   ([`quantize`]);
//! * the catalog of three-dimensional quantum algebras with their
//!   r-matrices ([`catalog`]);
//! * classical-layer analysis: Jacobson typing, Lie-bialgebra cocycle
//!   checks, Schouten brackets, coboundary solving and coproduct-preserving
//!   transformations ([`classical`], [`transform`]).
//!
//! All values are immutable and all operations are pure; everything can be
//! used from concurrent callers without coordination.

// dense 3x3 / tensor index juggling reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod classical;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod param;
pub mod poly;
pub mod quantize;
pub mod rational;
pub mod series;
pub mod transform;

pub use algebra::{AlgElement, CommutatorTable, Gen, Monomial, Word};
pub use error::{Error, Result};
pub use hopf::{Cocommutator3, HopfData, Tensor3Element, TensorElement};
pub use param::Param;
pub use poly::ParamPoly;
pub use rational::Rat;
pub use series::ZSeries;
