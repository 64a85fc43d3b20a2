//! Exact-arithmetic workbench for the lattice polytopes built from a pair of
//! finite posets: the order polytope `O(P)`, the chain polytope `C(Q)`, and
//! the reflexive combinations `Gamma(A, -B)` of one with the negation of
//! another, plus the quadratic binomial presentation of the toric ideal of
//! `Gamma(O(P), -C(Q))` and machine verification that it is a Groebner
//! basis.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `ocpoly-cli` crate.

#![no_std]

extern crate alloc;

pub mod ehrhart;
pub mod geometry;
pub mod polytopes;
pub mod poset;
pub mod toric;

pub use ehrhart::{delta_vector, ehrhart_counts, is_fano, is_gorenstein_fano, is_normal_up_to,
    DeltaVector, EhrhartCounts};
pub use geometry::{hull_hrep, GeometryError, HRep, HalfSpace, Int, LatticePoint, Rational};
pub use polytopes::{chain_polytope, gamma, order_polytope, rho, GammaKind, LatticePolytope,
    SizeMismatch};
pub use poset::{shares_linear_extension, AntichainSet, IdealSet, Poset, PosetError, Subset};
pub use toric::{build_system, Binomial, BinomialKind, BinomialSystem, GroebnerReport,
    InitialIdealProfile, Monomial, MonomialOrder, TieBreak, Variable};
