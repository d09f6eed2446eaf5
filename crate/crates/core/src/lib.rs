//! Deterministic entanglement concentration for finite collections of
//! bipartite pure states.
//!
//! A two-qubit entangled pair √a∣00⟩ + √(1−a)∣11⟩ is described here entirely
//! by the square of its larger Schmidt coefficient, `a ∈ [1/2, 1]`; a general
//! bipartite pure state by its Schmidt spectrum, the eigenvalues of either
//! reduced density matrix sorted in non-increasing order. Local operations
//! and classical communication (LOCC) enter only through Nielsen's criterion:
//! a deterministic transformation between pure states exists if and only if
//! the initial spectrum is majorized by the final one.
//!
//! On top of that order relation the crate provides
//!
//! - Schmidt spectra, tensor products, and the von Neumann / Rényi entropy
//!   functionals ([`spectra`]);
//! - the majorization order and the deterministic-LOCC criterion
//!   ([`majorization`]);
//! - the deterministic entanglement measure `D = −log₂(max eigenvalue)`, in
//!   Bell-pair units, additive over tensor products ([`measure`]);
//! - optimal deterministic concentration plans for ensembles of two-qubit
//!   pairs: how many Bell pairs can be extracted with certainty, an explicit
//!   sequence of two-pair steps that attains it, and the residual pair
//!   ([`concentrate`]);
//! - brute-force verification of steps, plans, extraction counts, and
//!   catalytic variants directly against full-spectrum majorization checks
//!   ([`oracle`]);
//! - a command-line interface over JSON documents ([`cli`]).
//!
//! # Example
//!
//! ```
//! use detcon::concentrate::{self, Strategy};
//! use detcon::spectra::Ensemble;
//! use detcon::DEFAULT_EPS;
//!
//! let pairs = Ensemble::from_values(&[0.6, 0.7, 0.8], DEFAULT_EPS).unwrap();
//! let plan = concentrate::plan(&pairs, Strategy::Chain, DEFAULT_EPS);
//! assert_eq!(plan.bells, 1);
//! assert_eq!(plan.disentangled, 1);
//! assert!((plan.residual.unwrap().a() - 0.672).abs() < 1e-12);
//! ```

use thiserror::Error;

pub mod cli;
pub mod concentrate;
pub mod majorization;
pub mod measure;
pub mod oracle;
pub mod spectra;

pub use concentrate::{ConcentrationPlan, PairwiseStep, StepCase, Strategy, TwoPairOutcome};
pub use oracle::Fig2Report;
pub use spectra::{Ensemble, Probability, QubitPair, Spectrum};

/// Default tolerance for all invariant checks and comparisons.
///
/// Every fallible constructor and every ordering predicate takes an explicit
/// `eps`; pass this unless an invocation has a reason to override it (the CLI
/// exposes `--eps` for exactly that).
pub const DEFAULT_EPS: f64 = 1e-9;

/// Ensemble size beyond which coefficient products are accumulated in
/// log space to avoid underflow.
pub(crate) const LOG_PRODUCT_THRESHOLD: usize = 30;

/// Errors surfaced by validated constructors and resource-capped operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("spectrum must contain at least one probability")]
    EmptySpectrum,

    #[error("spectrum entry {index} is {value}, negative beyond tolerance")]
    NegativeEntry { index: usize, value: f64 },

    #[error("spectrum entry {index} is {value}, not a finite probability")]
    NonFiniteEntry { index: usize, value: f64 },

    #[error("spectrum sums to {sum}, not 1 within tolerance (pass renormalize to rescale)")]
    NotNormalized { sum: f64 },

    #[error("probability {value} lies outside [0, 1] beyond tolerance")]
    InvalidProbability { value: f64 },

    #[error("pair coefficient a = {a} lies outside [1/2, 1] beyond tolerance")]
    PairOutOfRange { a: f64 },

    #[error("ensemble must contain at least one pair")]
    EmptyEnsemble,

    #[error("Renyi order t = {t} must be finite, nonnegative and different from 1")]
    InvalidRenyiOrder { t: f64 },

    #[error("ensemble of {n} pairs exceeds the brute-force cap of {max}")]
    TooManyPairs { n: usize, max: usize },

    #[error("catalyst spectrum of length {len} exceeds the brute-force cap of {max}")]
    CatalystTooLarge { len: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
