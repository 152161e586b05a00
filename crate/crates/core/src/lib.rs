//! Arithmetic functions, sector lattice sums and Euler-product constants for
//! the nine imaginary quadratic fields whose ring of integers is principal,
//! together with exact brute-force evaluation of the Mertens and Mirsky sums
//! they govern.

pub mod cli;
pub mod element;
pub mod error;
pub mod field;
pub mod ideal;
pub mod mirsky;
pub mod primes;
pub mod report;
pub mod ring;
pub mod sector;
pub mod sieve;
pub mod sums;
pub mod zeta;

pub use element::AlgebraicInt;
pub use error::{Error, Result};
pub use field::{lookup_field, Field, PiSurd, FIELDS};
