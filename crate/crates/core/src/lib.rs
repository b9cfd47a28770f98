//! Finite Ω-algebras, their representations on other finite algebras, and
//! towers of such representations.
//!
//! Everything here works on explicit operation tables over dense element
//! indices `0..n`. Element names only exist in the document layer of the
//! `ualg` crate.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod budget;
pub mod error;
pub mod generation;
pub mod loops;
pub mod oracle;
pub mod representation;
pub mod search;
pub mod tower;

pub use algebra::{
    Congruence, ElemSet, FiniteAlgebra, Mapping, OpDecl, OpWitness, Partition, Signature, Verdict,
};
pub use budget::{Budget, Clock, Meter};
pub use error::Error;
pub use generation::{CoordinateTable, GeneratingTuple, OmegaWord};
pub use representation::{Interp, OpInterpretation, RepMorphism, Representation};
pub use tower::{Tower, TowerMorphism};

pub type Result<T, E = Error> = core::result::Result<T, E>;
