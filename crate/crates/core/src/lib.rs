//! Suslin matrices and the matrix model of the Clifford algebra of the
//! hyperbolic space `H(R^n)`.
//!
//! Everything here is exact and division free. Rings are chosen at runtime
//! through a [`Ring`] descriptor: the integers, `Z/m` for any `m >= 2`
//! (zero divisors included) and multivariate integer polynomials, which are
//! used to check identities symbolically.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod check;
pub mod clifford;
pub mod epin;
mod error;
pub mod forms;
pub mod mat;
pub mod ring;
pub mod spin;
pub mod suslin;

pub use error::{Error, Result};
pub use mat::Mat;
pub use ring::{Elem, Ring};
pub use suslin::{SuslinMatrix, SuslinPair};
