//! Exact-arithmetic workbench for the representation combinatorics of acyclic quivers.
//!
//! Everything here is computed over the rationals with arbitrary-precision
//! integers — there is no floating point anywhere, and every enumeration is
//! returned in a canonical deterministic order.
//!
//! The crate is organized bottom-up:
//!
//! * [`matrix`] — dense and sparse exact rational linear algebra (rank, kernel,
//!   cokernel, determinant, inverse).
//! * [`quiver`] — finite acyclic quivers, dimension vectors, the Euler bilinear
//!   form and Tits quadratic form, simple reflections, the Coxeter
//!   transformation, and positive-root enumeration for Dynkin diagrams.
//! * [`rep`] — explicit representations (one rational matrix per arrow), Hom/Ext
//!   dimensions via the kernel/cokernel of a single assembled linear map,
//!   Bernstein–Gelfand–Ponomarev reflection functors, Coxeter functors (the
//!   Auslander–Reiten translate), and semi-invariant determinants.
//! * [`catalog`] — catalogs of exceptional modules (bricks without
//!   self-extension) with cached Hom/Ext tables: complete for Dynkin quivers,
//!   length-capped for the rest.
//! * [`tilting`] — rigid sets, tilting-module enumeration, complements, torsion
//!   classification, slice detection, exact-sequence decompositions over
//!   orthogonal exceptional pairs, and volume identities.
//! * [`complex`] — the simplicial complex of partial tilting modules, its
//!   extension by negative-simple vertices, pseudomanifold checks, and the fan
//!   of cones with dual linear forms.
//! * [`cluster_cat`] — a combinatorial model of the cluster category
//!   (modules plus shifted projectives), symmetric extension pairing,
//!   cluster-tilting objects, exchange graph, and cluster-tilted algebra data.
//! * [`cluster_algebra`] — integer Laurent polynomials with exact multivariate
//!   division, seeds, matrix mutation, finite-type enumeration, denominator
//!   vectors, and the correspondence with the module-theoretic complex.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod catalog;
pub mod cluster_algebra;
pub mod cluster_cat;
pub mod complex;
pub mod error;
pub mod matrix;
pub mod quiver;
pub mod rep;
pub mod tilting;

pub use error::Error;

/// Arbitrary-precision rational number used for every matrix entry.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer (coefficients of Laurent polynomials).
pub type Int = num_bigint::BigInt;

/// Convenience constructor for an exact rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Convenience constructor for an exact integer rational.
pub fn rint(value: i64) -> Rat {
    Rat::from_integer(Int::from(value))
}
