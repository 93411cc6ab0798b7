//! Exact engine for sl(2)-relative cochain calculus on weighted density
//! modules.
//!
//! The crate implements, over exact scalar fields (big rationals, the real
//! quadratic field of discriminant 19, and rational functions in a formal
//! weight), the following tower:
//!
//! * [`scalars`] — the scalar tower and the deformation-parameter polynomial
//!   ring with its rewrite-based ideal reduction;
//! * [`linalg`] — dense exact linear algebra (rref, rank, nullspace, solve);
//! * [`jets`] — normal-form algebra of multilinear differential expressions
//!   in slots `(X, Y, Z, f)`;
//! * [`cochains`] — coboundaries in degrees 0–2, invariance defects, cup
//!   products, and the coboundary/triviality decision procedure;
//! * [`transvectants`] — the invariant bilinear operators: generic binomial
//!   tables, resonant recurrence solutions, the `J` chain and `I` operators;
//! * [`catalog`] — the named 1-cocycles and 2-cocycles with their identity
//!   suite;
//! * [`reference`] — previously tabulated condition lists and displays used
//!   for cross-checking derived results;
//! * [`deformations`] — the Maurer–Cartan engine: parameter windows, the
//!   degree-2 term, per-block defects, and derivation of the integrability
//!   ideal at orders 2–4;
//! * [`oracle`] — independent brute-force verification on concrete
//!   polynomials plus a rank-based coboundary test.

pub mod catalog;
pub mod cochains;
pub mod deformations;
pub mod jets;
pub mod linalg;
pub mod oracle;
pub mod reference;
pub mod scalars;
pub mod transvectants;

pub use scalars::{Branch, Field, Rat, Weight};

use std::fmt;

/// Errors shared by every module of the engine.
///
/// Rendering is part of the public contract: the exact `Display` strings
/// below are stable and asserted by tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational-function denominator was identically zero.
    DivisionByZeroPolynomial,
    /// A denominator vanished after substituting a numeric weight.
    PoleAtWeight,
    /// An ideal generator had a shape the rewrite engine does not support
    /// (three or more parameter monomials).
    UnsupportedIdealShape,
    /// `coboundary0` was fed an operator that is not sl(2)-invariant.
    NotInvariantZeroCochain,
    /// Cup operands whose weights do not compose.
    NonComposableCup,
    /// The generic coefficient formula was used at resonant weights.
    ResonantWeights,
    /// The low-order invariant operator does not exist at this weight.
    IOperatorUndefined,
    /// No catalog 1-cocycle exists at the requested weight pair.
    NoTableCocycle { weight: String, k: i32 },
    /// No catalog 2-cocycle is defined at the requested weight pair.
    NoCatalogOmega { weight: String, k: i32 },
    /// A Maurer–Cartan block defect could not be written as
    /// `conditions + s·∂J`; this signals an engine bug, not a math outcome.
    DecompositionFailure(String),
    /// A jet derivative order exceeded the configured maximum.
    JetOrderOverflow { order: u32, max: u32 },
    /// A concrete polynomial exceeded the configured degree bound.
    DegreeOverflow { degree: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroPolynomial => write!(f, "division by zero polynomial"),
            Error::PoleAtWeight => write!(f, "pole at weight"),
            Error::UnsupportedIdealShape => write!(f, "unsupported ideal shape"),
            Error::NotInvariantZeroCochain => write!(f, "not an invariant 0-cochain"),
            Error::NonComposableCup => write!(f, "non-composable cup operands"),
            Error::ResonantWeights => write!(f, "resonant weights: use resonant_solutions"),
            Error::IOperatorUndefined => write!(f, "I-operator undefined"),
            Error::NoTableCocycle { weight, k } => {
                write!(f, "no Table-1 cocycle at ({weight},{k})")
            }
            Error::NoCatalogOmega { weight, k } => {
                write!(f, "no catalog 2-cocycle at ({weight},{k})")
            }
            Error::DecompositionFailure(block) => {
                write!(f, "decomposition failure in block {block}")
            }
            Error::JetOrderOverflow { order, max } => {
                write!(f, "jet order {order} exceeds maximum {max}")
            }
            Error::DegreeOverflow { degree, max } => {
                write!(f, "polynomial degree {degree} exceeds bound {max}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
