//! Exact arithmetic for Bernoulli numbers, Stirling numbers and power sums,
//! together with the Giuga-Agoh primality criterion and the related searches
//! for Giuga, Carmichael and Butske numbers.
//!
//! Every computation is exact: integers are arbitrary precision and
//! rationals are kept in lowest terms. The crate is `no_std` and only needs
//! `alloc`; file formats, threading and the command line live in the `giuga`
//! crate.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bernoulli;
pub mod congruence;
pub mod conjecture;
mod error;
pub mod exact;
pub mod powersum;
pub mod stirling;

pub use error::{Error, Result};
pub use exact::{Int, Rat};
