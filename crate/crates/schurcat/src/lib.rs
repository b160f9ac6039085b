//! q-Schur algebras `S_q(n,d)`, the diagrammatic 2-category `S(n,d)`, its
//! bimodule 2-representation and the diagrammatic Soergel categories.
//!
//! The crate is `no_std` with `alloc`; enable `std` for `std::error::Error`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bimrep;
pub mod diagrams;
pub mod linalg;
pub mod polysym;
pub mod qschur;
pub mod report;
pub mod scalars;
pub mod soergel;
pub mod supersym;
pub mod weights;

use alloc::string::String;
use core::fmt;

/// Errors raised by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    Domain(String),
    /// Boundaries of composed or parsed pieces do not match.
    Mismatch(String),
    /// Malformed textual input.
    Parse(String),
    /// A linear system has no solution in the requested basis.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Mismatch(m) => write!(f, "mismatch: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Inconsistent(m) => write!(f, "inconsistent system: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
