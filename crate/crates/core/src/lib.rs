//! Exact arithmetic for the degree-`r` combinatorial number system.
//!
//! Every natural number `m` has exactly one representation
//! `m = C(c_r, r) + C(c_{r-1}, r-1) + ... + C(c_1, 1)` with
//! `c_r > c_{r-1} > ... > c_1 >= 0`. This crate converts between the two
//! forms, steps representations forward and backward without going through
//! the integer, maps them onto k-subsets (colexicographic rank/unrank), and
//! ships an exhaustive brute-force verifier for the whole construction.
//!
//! All values are arbitrary precision ([`Natural`] is a [`num_bigint::BigUint`]).
//!
//! ```
//! use combinadics::{codec, Natural};
//!
//! let rep = codec::encode(&Natural::from(7u32), 3).unwrap();
//! assert_eq!(rep.to_string(), "4,3,0");
//! assert_eq!(codec::decode(&rep), Natural::from(7u32));
//! assert_eq!(codec::successor(&rep).to_string(), "4,3,1");
//! ```

pub mod binomial;
pub mod cli;
pub mod codec;
mod error;
pub mod ranking;
pub mod verify;

pub use binomial::{binomial, parse_natural, Natural};
pub use codec::Combinadic;
pub use error::{Error, Result};
pub use ranking::Combination;
pub use verify::VerifyReport;
