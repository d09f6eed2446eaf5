//! Entanglement measures for deterministic concentration.
//!
//! The central quantity is `D = −log₂(max eigenvalue)` in Bell-pair units:
//! `D = 1` for a Bell pair, `0` exactly for product states, additive over
//! tensor products, and non-increasing under deterministic LOCC. For a
//! two-qubit pair it reduces to `−log₂ a`. The extractable Bell-pair count
//! `k_max` is the integer part of the total `D`, evaluated by comparing
//! coefficient products against powers of two directly rather than flooring
//! a floating-point logarithm, which is fragile at exact powers of two.

use crate::spectra::{Ensemble, QubitPair, Spectrum};
use crate::LOG_PRODUCT_THRESHOLD;

/// Bell-pair content of a two-qubit pair: `D = −log₂ a ∈ [0, 1]`.
pub fn d_pair(pair: QubitPair) -> f64 {
    -pair.a().log2()
}

/// Bell-pair content of a general state: `D = −log₂(max eigenvalue) ≥ 0`,
/// zero exactly for product states.
pub fn d_general(spectrum: &Spectrum) -> f64 {
    -spectrum.max_entry().log2()
}

/// Largest `k` with `p ≤ 2⁻ᵏ·(1 + eps)`, found by repeated halving.
///
/// The boundary is inclusive: a product exactly at a power of two counts as
/// achieving that power.
fn largest_power_of_two_below(p: f64, eps: f64) -> usize {
    debug_assert!(p > 0.0 && p <= 1.0 + eps);
    let mut k = 0;
    let mut threshold = 0.5;
    while p <= threshold * (1.0 + eps) {
        k += 1;
        threshold *= 0.5;
    }
    k
}

/// Maximum number of Bell pairs deterministically extractable from an
/// ensemble of two-qubit pairs: `⌊−log₂(a₁⋯aₙ)⌋`.
///
/// Large ensembles are handled in log space so the coefficient product
/// cannot underflow.
pub fn k_max(ensemble: &Ensemble, eps: f64) -> usize {
    if ensemble.len() <= LOG_PRODUCT_THRESHOLD {
        largest_power_of_two_below(ensemble.coefficient_product(), eps)
    } else {
        let log2_product = ensemble.log2_coefficient_product();
        let slack = (1.0 + eps).log2();
        let mut k = 0;
        while log2_product <= -((k + 1) as f64) + slack {
            k += 1;
        }
        k
    }
}

/// Maximum number of Bell pairs deterministically extractable from a single
/// general state: `⌊−log₂(max eigenvalue)⌋` with the same power-of-two
/// comparison rule.
pub fn k_max_general(spectrum: &Spectrum, eps: f64) -> usize {
    largest_power_of_two_below(spectrum.max_entry(), eps)
}
