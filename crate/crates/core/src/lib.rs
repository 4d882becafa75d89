//! Exact symbolic engine for the super-Jordanian quantum superalgebra
//! `U_h(osp(2/1))`: PBW rewriting, Hopf structure, representations,
//! deformation maps, twisting elements, tensor operators and the
//! self-duality of the Borel subalgebra.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact
//! over the rationals, truncated in the deformation parameter `h`.

#![no_std]

extern crate alloc;

pub mod defmaps;
pub mod duality;
pub mod error;
pub mod hopf;
pub mod pbw;
pub mod report;
pub mod reps;
pub mod scalars;
pub mod tensorops;
pub mod twist;

pub use error::{Error, Result};
