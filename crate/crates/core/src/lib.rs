//! Link-homotopy invariants of welded string links.
//!
//! A welded string link on `n` strands is stored as a [`GaussDiagram`]:
//! signed arrows whose tails mark over-passages and whose heads mark
//! under-passages. From that combinatorial datum the crate computes, exactly
//! over the integers,
//!
//! * the unique coloring of the diagram arcs by the reduced free group
//!   `RF_n` (the quotient of the free group in which every generator
//!   commutes with all of its conjugates),
//! * the longitudes and the induced conjugating automorphism of `RF_n`,
//! * the Milnor numbers with non-repeating indices, which classify welded
//!   string links up to self-virtualization and surface string links up to
//!   link-homotopy.
//!
//! Equality in `RF_n` is decided through the reduced Magnus expansion: the
//! ring of integer polynomials on repeat-free noncommutative monomials (see
//! [`magnus`]). All arithmetic is exact; coefficients are arbitrary-precision
//! integers.
//!
//! ```
//! use linkhom_core::{lh_equivalent, mu, mu_table, realize, BigInt, MilnorIndex, Word};
//!
//! // the diagram whose second longitude is x1: one positive crossing
//! let d = realize(&[Word::empty(2), Word::parse("x1", 2)?])?;
//! assert_eq!(mu(&d, &MilnorIndex::new(vec![1, 2], 2)?)?, BigInt::from(1));
//!
//! // stacking adds linking numbers; the stacked diagram is a new class
//! let doubled = d.stack(&d)?;
//! assert!(!lh_equivalent(&d, &doubled)?);
//! assert_eq!(format!("{}", mu_table(&doubled)?), "mu 12 = 2\nmu 21 = 0\n");
//! # Ok::<(), linkhom_core::Error>(())
//! ```
//!
//! The crate is `no_std` (it requires `alloc`). Input/output, file formats
//! and the command line front end live in the companion `linkhom` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod aut;
mod error;
pub mod gauss;
pub mod magnus;
pub mod milnor;
pub mod spun;
pub mod word;

pub use aut::ConjAut;
pub use error::Error;
pub use gauss::{Arrow, Endpoint, GaussDiagram, MoveKind, MoveSpec};
pub use magnus::{expand, rf_equal, word_from_expansion, Monomial, ReducedPoly};
pub use milnor::{
    color, color_with, invariant_count, lh_equivalent, longitude, mu, mu_table, phi, realize,
    Coloring, InvariantCount, MilnorIndex, MuTable, SweepOrder,
};
pub use num_bigint::{BigInt, BigUint};
pub use spun::{ComponentSurface, DoubleCircle, ObstructionWitness, SpunSurfaceData, Z2Class};
pub use word::{left_normed_commutator, Letter, Sign, Word};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
