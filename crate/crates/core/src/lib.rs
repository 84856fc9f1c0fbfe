//! Exact computation of Shintani cone decompositions, signed fundamental
//! domains, higher Dedekind sums, and partial zeta values of totally real
//! fields at nonpositive integers.
//!
//! All arithmetic on the correctness path is exact: arbitrary-precision
//! rationals, Sturm-sequence sign determination for algebraic numbers, and
//! truncated power series over the rationals.  Floating point never enters.

pub mod conegeom;
pub mod error;
pub mod exactmath;
pub mod interval;
pub mod numfield;
pub mod poly;

pub use error::{Error, Result};
