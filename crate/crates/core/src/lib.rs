//! Local cohomology invariants of monomial ideals computed by exact linear
//! algebra over squarefree modules.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is a pure function of
//! its inputs: monomial ideals and simplicial complexes go in, Lyubeznik
//! tables, Hochster-Huneke graphs, composition-factor multiplicities and the
//! Bass-number bound come out.
//!
//! The central object is [`sqfree::SquarefreeModule`], a module over
//! `K[x_1, ..., x_n]` stored as finite linear data on the Boolean lattice of
//! `[n]`. `Ext_S^{n-i}(M, omega_S)` is evaluated degreewise from the dual
//! complex of such a module, and every invariant is a dimension of some
//! graded component of an iterated `Ext`.

#![no_std]
#![deny(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod simplicial;
pub mod sqfree;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};

pub use invariants::{HochsterHunekeGraph, LocalCohomology, LyubeznikTable, MultiplicityTable};
pub use linalg::{Field, FieldSpec, Matrix, PrimeField, Rationals};
pub use monomial::{MonomialIdeal, PolarizationResult, PolynomialRing};
pub use simplicial::SimplicialComplex;
pub use sqfree::SquarefreeModule;

pub use subset::Subset;

/// Largest ground set the bitmask representation supports.
pub const MAX_VARIABLES: usize = 62;
