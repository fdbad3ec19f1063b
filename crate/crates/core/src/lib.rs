//! Exact symbolic verification of first-order formal deformations of
//! noncommutative *-algebras.

// Tensor formulas read best with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod bicomplex;
pub mod check;
pub mod coeffring;
pub mod crossed;
pub mod deformation;
pub mod dsl;
pub mod error;
pub mod models;
pub mod ncalg;
pub mod report;
pub mod suite;

pub use check::{Check, Status};
pub use coeffring::{GaussianRational, Momentum, Scalar};
pub use error::{Error, Result};
pub use ncalg::{AlgebraSpec, Element, GenId};
