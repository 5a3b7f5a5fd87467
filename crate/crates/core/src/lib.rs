//! Exact signatures of residue pairings for finite abelian quotient singularities.
//!
//! The crate computes, with rational arithmetic throughout, the signature of the
//! `G`-invariant residue pairing of a polynomial 1-form whose singular point at
//! the origin is isolated. That integer is the radial index of the pushed-down
//! form on the real quotient. Alongside it the crate provides Burnside-ring
//! arithmetic, the stratification of the real quotient, sector-wise quantum
//! dimensions and signatures, and a floating-point oracle that checks the
//! signature by deforming the form and counting its singular points.

pub mod burnside;
pub mod error;
pub mod exactlin;
pub mod group;
pub mod localalg;
pub mod oracle;
pub mod poly;
pub mod quantum;
pub mod residue;

pub use error::{Error, Result};

/// Guide chapters compiled as doc-tests so their snippets cannot drift.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/overview.md")]
    pub struct Overview;
    #[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
    pub struct ExactLinearAlgebra;
    #[doc = include_str!("../../../book/src/polynomials.md")]
    pub struct Polynomials;
    #[doc = include_str!("../../../book/src/local-algebras.md")]
    pub struct LocalAlgebras;
    #[doc = include_str!("../../../book/src/group-actions.md")]
    pub struct GroupActions;
    #[doc = include_str!("../../../book/src/residue-pairing.md")]
    pub struct ResiduePairing;
    #[doc = include_str!("../../../book/src/burnside.md")]
    pub struct Burnside;
    #[doc = include_str!("../../../book/src/quantum.md")]
    pub struct Quantum;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
