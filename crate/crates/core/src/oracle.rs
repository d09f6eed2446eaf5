//! Brute-force verification of concentration claims.
//!
//! Nothing in here trusts the closed-form results: every check builds the
//! full joint Schmidt spectrum (exponential in the number of pairs, hence
//! the caps) and runs the complete prefix-sum majorization test on it. The
//! point is independence from the formulas under test, so spectra are sorted
//! explicitly rather than exploiting any product structure.

use crate::concentrate::{ConcentrationPlan, StepCase, TwoPairOutcome};
use crate::majorization::{majorizes, nielsen_allows};
use crate::measure::d_general;
use crate::spectra::{Ensemble, QubitPair, Spectrum};
use crate::{Error, Result};

/// Largest ensemble whose `2ⁿ`-dimensional spectrum the oracle will build.
pub const MAX_VERIFY_PAIRS: usize = 20;
/// Ensemble cap for catalytic searches, where the catalyst multiplies the
/// dimension further.
pub const MAX_CATALYTIC_PAIRS: usize = 12;
/// Catalyst spectrum length cap.
pub const MAX_CATALYST_LEN: usize = 8;

fn bell_spectrum() -> Spectrum {
    Spectrum::from_sorted_unchecked(vec![0.5, 0.5])
}

fn product_spectrum() -> Spectrum {
    Spectrum::from_sorted_unchecked(vec![1.0, 0.0])
}

/// Two-level spectrum with larger entry `max(a, 1−a)`; accepts the residual
/// coefficient of any candidate final state, sorted into canonical order.
fn residual_spectrum(a: f64) -> Spectrum {
    let a = a.clamp(0.0, 1.0);
    Spectrum::from_sorted_unchecked(vec![a.max(1.0 - a), a.min(1.0 - a)])
}

/// Check one claimed two-pair step outcome against the full 4-dimensional
/// majorization relation.
pub fn verify_step(p: QubitPair, q: QubitPair, claimed: &TwoPairOutcome, eps: f64) -> bool {
    let initial = p.spectrum().tensor(&q.spectrum());
    let final_state = if claimed.bell_extracted {
        bell_spectrum().tensor(&claimed.residual.spectrum())
    } else {
        claimed.residual.spectrum().tensor(&product_spectrum())
    };
    nielsen_allows(&initial, &final_state, eps)
}

/// Joint spectrum of `k` Bell pairs, one residual pair with coefficient
/// `residual_a`, and enough product pairs to fill `n` slots. `residual_a`
/// may be `None` only when `k == n`.
fn final_spectrum(n: usize, k: usize, residual_a: Option<f64>) -> Spectrum {
    let mut acc = Spectrum::from_sorted_unchecked(vec![1.0]);
    for _ in 0..k {
        acc = acc.tensor(&bell_spectrum());
    }
    let mut used = k;
    if let Some(a) = residual_a {
        acc = acc.tensor(&residual_spectrum(a));
        used += 1;
    }
    for _ in used..n {
        acc = acc.tensor(&product_spectrum());
    }
    acc
}

/// Check a whole plan against the `2ⁿ`-dimensional majorization relation,
/// re-validating every recorded step along the way.
///
/// Returns `false` when the plan's tally does not account for every pair,
/// when it records more than `n − 1` steps, when any step fails
/// [`verify_step`], or when the claimed final configuration is not
/// deterministically reachable. Ensembles beyond [`MAX_VERIFY_PAIRS`] are
/// rejected with an error.
pub fn verify_plan(ensemble: &Ensemble, plan: &ConcentrationPlan, eps: f64) -> Result<bool> {
    let n = ensemble.len();
    if n > MAX_VERIFY_PAIRS {
        return Err(Error::TooManyPairs { n, max: MAX_VERIFY_PAIRS });
    }

    let residual_count = usize::from(plan.residual.is_some());
    if plan.bells + plan.disentangled + residual_count != n {
        return Ok(false);
    }
    if plan.steps.len() > n.saturating_sub(1) {
        return Ok(false);
    }

    for step in &plan.steps {
        let p = QubitPair::new(step.input_a.get(), eps)?;
        let q = QubitPair::new(step.input_b.get(), eps)?;
        let claimed = TwoPairOutcome {
            bell_extracted: step.case == StepCase::ExtractBell,
            residual: QubitPair::new(step.output_residual_a.get(), eps)?,
        };
        if !verify_step(p, q, &claimed, eps) {
            return Ok(false);
        }
    }

    let initial = ensemble.joint_spectrum();
    let final_state = final_spectrum(n, plan.bells, plan.residual.map(|r| r.a()));
    Ok(nielsen_allows(&initial, &final_state, eps))
}

/// Exhaustive search for the largest `k` such that the ensemble's full
/// spectrum is majorized by `k` Bell pairs together with the conserved
/// residual and product pairs.
///
/// Independent of the closed-form `k_max`: every candidate is checked with
/// complete prefix sums over the `2ⁿ`-dimensional spectra, not the
/// first-inequality shortcut.
pub fn k_max_oracle(ensemble: &Ensemble, eps: f64) -> Result<usize> {
    let n = ensemble.len();
    if n > MAX_VERIFY_PAIRS {
        return Err(Error::TooManyPairs { n, max: MAX_VERIFY_PAIRS });
    }
    let initial = ensemble.joint_spectrum();
    let product = ensemble.coefficient_product();
    let mut best = 0;
    let mut residual_a = product;
    for k in 0..=n {
        if residual_a > 1.0 + eps {
            break;
        }
        let candidate = if k < n {
            Some(final_spectrum(n, k, Some(residual_a.min(1.0))))
        } else if residual_a >= 1.0 - eps {
            // all n slots are Bell pairs; there is no room for a residual
            Some(final_spectrum(n, k, None))
        } else {
            None
        };
        if let Some(final_state) = candidate {
            if majorizes(&initial, &final_state, eps) {
                best = k;
            }
        }
        residual_a *= 2.0;
    }
    Ok(best)
}

/// Largest `k` extractable when a catalyst spectrum is attached and must be
/// returned intact.
///
/// The candidate final states are `k` Bell pairs ⊗ the untouched catalyst ⊗
/// a two-qubit-style residual carrying the conserved product ⊗ product
/// pairs; this residual convention follows the two-qubit scheme since
/// nothing else pins it down.
pub fn catalytic_k_max(ensemble: &Ensemble, catalyst: &Spectrum, eps: f64) -> Result<usize> {
    let n = ensemble.len();
    if n > MAX_CATALYTIC_PAIRS {
        return Err(Error::TooManyPairs { n, max: MAX_CATALYTIC_PAIRS });
    }
    if catalyst.len() > MAX_CATALYST_LEN {
        return Err(Error::CatalystTooLarge { len: catalyst.len(), max: MAX_CATALYST_LEN });
    }
    let initial = ensemble.joint_spectrum().tensor(catalyst);
    let product = ensemble.coefficient_product();
    let mut best = 0;
    let mut residual_a = product;
    for k in 0..=n {
        if residual_a > 1.0 + eps {
            break;
        }
        let candidate = if k < n {
            Some(final_spectrum(n, k, Some(residual_a.min(1.0))))
        } else if residual_a >= 1.0 - eps {
            Some(final_spectrum(n, k, None))
        } else {
            None
        };
        if let Some(final_state) = candidate {
            if majorizes(&initial, &final_state.tensor(catalyst), eps) {
                best = k;
            }
        }
        residual_a *= 2.0;
    }
    Ok(best)
}

/// Report for the built-in three-pair demonstration: a transformation
/// between tensor products of pairs that is deterministically possible yet
/// unreachable by any sequence of two-pair steps, because it raises the
/// entanglement of the least-entangled pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Report {
    /// Larger coefficients of the three input pairs: two Bell pairs and one
    /// weakly entangled pair.
    pub initial_pairs: [f64; 3],
    /// Larger coefficients of the three output pairs.
    pub final_pairs: [f64; 3],
    /// Full 8-dimensional spectrum of the initial state.
    pub lambda_initial: Spectrum,
    /// Full 8-dimensional spectrum of the final state.
    pub lambda_final: Spectrum,
    /// Verdict of the majorization check `λ_initial ≺ λ_final`.
    pub allowed: bool,
    pub entropy_initial: f64,
    pub entropy_final: f64,
    pub d_initial: f64,
    pub d_final: f64,
    /// Larger coefficient of the least-entangled input pair.
    pub least_entangled_initial_a: f64,
    /// Its counterpart in the final state: strictly more entangled, which no
    /// two-pair step sequence can arrange.
    pub least_entangled_final_a: f64,
}

/// Build and check the three-pair demonstration
/// `(0.5, 0.5) ⊗ (0.5, 0.5) ⊗ (0.95, 0.05) → (0.9, 0.1)⊗³`.
pub fn fig2_demo() -> Fig2Report {
    let eps = crate::DEFAULT_EPS;
    let bell = bell_spectrum();
    let weak = residual_spectrum(0.95);
    let strong = residual_spectrum(0.9);
    let lambda_initial = bell.tensor(&bell).tensor(&weak);
    let lambda_final = strong.tensor(&strong).tensor(&strong);
    let allowed = majorizes(&lambda_initial, &lambda_final, eps);
    Fig2Report {
        initial_pairs: [0.5, 0.5, 0.95],
        final_pairs: [0.9, 0.9, 0.9],
        entropy_initial: lambda_initial.entropy(),
        entropy_final: lambda_final.entropy(),
        d_initial: d_general(&lambda_initial),
        d_final: d_general(&lambda_final),
        lambda_initial,
        lambda_final,
        allowed,
        least_entangled_initial_a: 0.95,
        least_entangled_final_a: 0.9,
    }
}
