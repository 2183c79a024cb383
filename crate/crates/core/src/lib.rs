//! Exact root-system arithmetic, nilpotent orbit catalogs, and lifts of
//! component-group representations to Jacobson-Morozov parabolics.

// row operations read best with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod balacarter;
pub mod classical;
pub mod cyclotomic;
pub mod error;
pub mod goldens;
pub mod lifting;
pub mod rootdata;
pub mod snf;

pub use error::{Error, Result};
