//! Exact computation of the enumerative invariants of linear series with
//! exceptional secant planes: secant-plane counts N_d, the tautological
//! coefficients P_alpha, P_beta, P_c, and the counts N' of series with
//! exceptional secant planes on a general curve, each by several
//! independent routes (closed formulas, generating functions, terminating
//! hypergeometric series, and a brute-force intersection-theory oracle),
//! together with named verification suites that check the routes against
//! each other.
//!
//! Everything is exact: the only scalar is an arbitrary-precision rational.

pub mod closed_forms;
pub mod combinatorics;
pub mod exact;
pub mod porteous;
pub mod series;
pub mod series2;
pub mod suites;

pub use exact::Rational;

use std::fmt;

/// Errors surfaced by operations with data-dependent preconditions.
///
/// Mathematical misuse that cannot arise from well-formed inputs (for
/// example exponentiating a series with the wrong constant term) panics
/// instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A named precondition on the inputs does not hold.
    Precondition {
        op: &'static str,
        message: String,
    },
    /// A requested size exceeds a module cap.
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
        hint: &'static str,
    },
    /// Two supposedly equal computation routes disagreed.
    RouteMismatch {
        op: &'static str,
        details: String,
    },
    /// Unknown verification suite name.
    UnknownSuite {
        name: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition { op, message } => {
                write!(f, "{}: precondition violated: {}", op, message)
            }
            Error::CapExceeded {
                what,
                requested,
                cap,
                hint,
            } => write!(
                f,
                "{} = {} exceeds the cap {}; {}",
                what, requested, cap, hint
            ),
            Error::RouteMismatch { op, details } => {
                write!(f, "{}: independent routes disagree: {}", op, details)
            }
            Error::UnknownSuite { name } => write!(
                f,
                "unknown suite '{}'; known suites: {}",
                name,
                suites::SUITE_NAMES.join(", ")
            ),
        }
    }
}

impl std::error::Error for Error {}
