//! polyquot: an exact combinatorial toolkit for quotients `N(P, Lambda)` of
//! real moment-angle manifolds over simple 3-polytopes by subgroups of
//! `Z_2^m`.
//!
//! The crate decides whether such a quotient is a manifold, orientable, a
//! 3-sphere, or a rational homology 3-sphere; enumerates hyperelliptic
//! involutions; computes rational Betti numbers by two independent methods;
//! and provides the Hamiltonian-cycle and 1-factorization machinery that
//! parametrizes these phenomena.
//!
//! Everything is exact: GF(2) and integer arithmetic only, deterministic
//! pivot orders, no floating point.

pub mod coloring;
pub mod complex;
pub mod gf2;
pub mod hamilton;
pub mod homology;
pub mod polytope;
pub mod spheres;
