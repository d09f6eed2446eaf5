//! C ABI for the `detcon` library.
//!
//! The surface follows the usual opaque-handle convention: constructors
//! allocate a handle and hand it back through an out-parameter together with
//! a [`DetconStatus`] code; every handle must be released with its matching
//! `*_free` function. Value accessors return their result directly and
//! tolerate null handles (returning zero or NaN), fallible operations report
//! through status codes. The corresponding header is generated into
//! `include/detcon.h` at build time.
//!
//! All functions are thread-safe as long as a handle is not freed while
//! another thread is using it; the underlying library is purely functional.

use detcon::concentrate::{self, Strategy};
use detcon::majorization;
use detcon::measure;
use detcon::oracle;
use detcon::spectra::{Ensemble, Spectrum};
use detcon::{ConcentrationPlan, Error, StepCase};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetconStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A scalar argument was out of range (tolerance, Rényi order, index).
    InvalidArgument = 2,
    /// Input values violate a domain invariant (normalization, ranges).
    InvalidInput = 3,
    /// The request exceeds a brute-force resource cap.
    TooLarge = 4,
}

impl From<&Error> for DetconStatus {
    fn from(error: &Error) -> Self {
        match error {
            Error::InvalidRenyiOrder { .. } => DetconStatus::InvalidArgument,
            Error::TooManyPairs { .. } | Error::CatalystTooLarge { .. } => DetconStatus::TooLarge,
            _ => DetconStatus::InvalidInput,
        }
    }
}

/// Pairing order for plan construction.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetconStrategy {
    /// Fold pairs left to right, carrying the residual.
    Chain = 0,
    /// Rounds of adjacent pairings.
    Tournament = 1,
}

impl From<DetconStrategy> for Strategy {
    fn from(strategy: DetconStrategy) -> Self {
        match strategy {
            DetconStrategy::Chain => Strategy::Chain,
            DetconStrategy::Tournament => Strategy::Tournament,
        }
    }
}

/// One two-pair concentration event of a plan, by value.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct DetconStep {
    /// Position of the left input in the ensemble.
    pub left_index: usize,
    /// Position of the right input in the ensemble.
    pub right_index: usize,
    /// True when the step extracts a Bell pair, false when it merges.
    pub extracts_bell: bool,
    pub input_a: f64,
    pub input_b: f64,
    pub output_residual_a: f64,
}

/// Opaque canonical Schmidt spectrum.
pub struct DetconSpectrum(Spectrum);

/// Opaque ensemble of two-qubit pairs.
pub struct DetconEnsemble(Ensemble);

/// Opaque concentration plan.
pub struct DetconPlan(ConcentrationPlan);

unsafe fn opt_ref<'a, T>(ptr: *const T) -> Option<&'a T> {
    if ptr.is_null() {
        None
    } else {
        Some(&*ptr)
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> DetconStatus {
    if out.is_null() {
        return DetconStatus::NullPointer;
    }
    out.write(value);
    DetconStatus::Ok
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

/// Build a canonical spectrum from `len` values: validated, clamped,
/// optionally renormalized, and sorted descending.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be a valid
/// location for a pointer. On success `*out` owns the new handle and must be
/// released with [`detcon_spectrum_free`].
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_new(
    values: *const f64,
    len: usize,
    renormalize: bool,
    eps: f64,
    out: *mut *mut DetconSpectrum,
) -> DetconStatus {
    if values.is_null() || out.is_null() {
        return DetconStatus::NullPointer;
    }
    if !eps.is_finite() || eps < 0.0 {
        return DetconStatus::InvalidArgument;
    }
    let slice = std::slice::from_raw_parts(values, len);
    match Spectrum::canonicalize(slice, renormalize, eps) {
        Ok(spectrum) => write_out(out, boxed(DetconSpectrum(spectrum))),
        Err(error) => DetconStatus::from(&error),
    }
}

/// Release a spectrum handle. Null is ignored.
///
/// # Safety
/// `spectrum` must be null or a handle returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_free(spectrum: *mut DetconSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `spectrum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_len(spectrum: *const DetconSpectrum) -> usize {
    opt_ref(spectrum).map_or(0, |s| s.0.len())
}

/// Copy the probabilities into `buffer`, which must hold exactly
/// `detcon_spectrum_len` doubles.
///
/// # Safety
/// `spectrum` must be null or a live handle; `buffer` must point to `len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_probs(
    spectrum: *const DetconSpectrum,
    buffer: *mut f64,
    len: usize,
) -> DetconStatus {
    let Some(spectrum) = opt_ref(spectrum) else {
        return DetconStatus::NullPointer;
    };
    if buffer.is_null() {
        return DetconStatus::NullPointer;
    }
    if len != spectrum.0.len() {
        return DetconStatus::InvalidArgument;
    }
    std::slice::from_raw_parts_mut(buffer, len).copy_from_slice(spectrum.0.probs());
    DetconStatus::Ok
}

/// Von Neumann entropy in bits; NaN for a null handle.
///
/// # Safety
/// `spectrum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_entropy(spectrum: *const DetconSpectrum) -> f64 {
    opt_ref(spectrum).map_or(f64::NAN, |s| s.0.entropy())
}

/// Rényi entropy of order `t` in bits (finite `t ≥ 0`, `t ≠ 1`).
///
/// # Safety
/// `spectrum` must be null or a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_renyi(
    spectrum: *const DetconSpectrum,
    t: f64,
    out: *mut f64,
) -> DetconStatus {
    let Some(spectrum) = opt_ref(spectrum) else {
        return DetconStatus::NullPointer;
    };
    match spectrum.0.renyi(t) {
        Ok(value) => write_out(out, value),
        Err(error) => DetconStatus::from(&error),
    }
}

/// Deterministic entanglement `D = −log₂(max entry)` in Bell-pair units;
/// NaN for a null handle.
///
/// # Safety
/// `spectrum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_d(spectrum: *const DetconSpectrum) -> f64 {
    opt_ref(spectrum).map_or(f64::NAN, |s| measure::d_general(&s.0))
}

/// Bell pairs deterministically extractable from the state; 0 for a null
/// handle.
///
/// # Safety
/// `spectrum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_k_max(
    spectrum: *const DetconSpectrum,
    eps: f64,
) -> usize {
    opt_ref(spectrum).map_or(0, |s| measure::k_max_general(&s.0, eps))
}

/// Tensor product of two spectra.
///
/// # Safety
/// `x` and `y` must be live handles; `out` must be writable. On success
/// `*out` owns the new handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_tensor(
    x: *const DetconSpectrum,
    y: *const DetconSpectrum,
    out: *mut *mut DetconSpectrum,
) -> DetconStatus {
    let (Some(x), Some(y)) = (opt_ref(x), opt_ref(y)) else {
        return DetconStatus::NullPointer;
    };
    write_out(out, boxed(DetconSpectrum(x.0.tensor(&y.0))))
}

/// The drain spectrum: `(m, …, m, 1 − d·m, 0, …)` with `d = ⌊1/m⌋`, padded
/// to the input length.
///
/// # Safety
/// `spectrum` must be a live handle; `out` must be writable. On success
/// `*out` owns the new handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_spectrum_drain(
    spectrum: *const DetconSpectrum,
    eps: f64,
    out: *mut *mut DetconSpectrum,
) -> DetconStatus {
    let Some(spectrum) = opt_ref(spectrum) else {
        return DetconStatus::NullPointer;
    };
    write_out(out, boxed(DetconSpectrum(concentrate::drain(&spectrum.0, eps))))
}

/// Whether `x ≺ y` in the majorization order.
///
/// # Safety
/// `x` and `y` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_majorizes(
    x: *const DetconSpectrum,
    y: *const DetconSpectrum,
    eps: f64,
    out: *mut bool,
) -> DetconStatus {
    let (Some(x), Some(y)) = (opt_ref(x), opt_ref(y)) else {
        return DetconStatus::NullPointer;
    };
    write_out(out, majorization::majorizes(&x.0, &y.0, eps))
}

/// Nielsen's criterion: can `initial` be deterministically transformed into
/// `final_state` by LOCC?
///
/// # Safety
/// `initial` and `final_state` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_nielsen_allows(
    initial: *const DetconSpectrum,
    final_state: *const DetconSpectrum,
    eps: f64,
    out: *mut bool,
) -> DetconStatus {
    let (Some(x), Some(y)) = (opt_ref(initial), opt_ref(final_state)) else {
        return DetconStatus::NullPointer;
    };
    write_out(out, majorization::nielsen_allows(&x.0, &y.0, eps))
}

// ---------------------------------------------------------------------------
// Ensemble
// ---------------------------------------------------------------------------

/// Build an ensemble from the larger Schmidt coefficients squared, each in
/// `[1/2, 1]`.
///
/// # Safety
/// `coefficients` must point to `len` readable doubles; `out` must be
/// writable. On success `*out` owns the new handle and must be released with
/// [`detcon_ensemble_free`].
#[no_mangle]
pub unsafe extern "C" fn detcon_ensemble_new(
    coefficients: *const f64,
    len: usize,
    eps: f64,
    out: *mut *mut DetconEnsemble,
) -> DetconStatus {
    if coefficients.is_null() || out.is_null() {
        return DetconStatus::NullPointer;
    }
    if !eps.is_finite() || eps < 0.0 {
        return DetconStatus::InvalidArgument;
    }
    let slice = std::slice::from_raw_parts(coefficients, len);
    match Ensemble::from_values(slice, eps) {
        Ok(ensemble) => write_out(out, boxed(DetconEnsemble(ensemble))),
        Err(error) => DetconStatus::from(&error),
    }
}

/// Release an ensemble handle. Null is ignored.
///
/// # Safety
/// `ensemble` must be null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn detcon_ensemble_free(ensemble: *mut DetconEnsemble) {
    if !ensemble.is_null() {
        drop(Box::from_raw(ensemble));
    }
}

/// Number of pairs, or 0 for a null handle.
///
/// # Safety
/// `ensemble` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_ensemble_len(ensemble: *const DetconEnsemble) -> usize {
    opt_ref(ensemble).map_or(0, |e| e.0.len())
}

/// Maximum number of Bell pairs deterministically extractable; 0 for a null
/// handle.
///
/// # Safety
/// `ensemble` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_ensemble_k_max(
    ensemble: *const DetconEnsemble,
    eps: f64,
) -> usize {
    opt_ref(ensemble).map_or(0, |e| measure::k_max(&e.0, eps))
}

/// Total deterministic entanglement `Σ D(pairᵢ)` in Bell-pair units; NaN for
/// a null handle.
///
/// # Safety
/// `ensemble` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_ensemble_d_sum(ensemble: *const DetconEnsemble) -> f64 {
    opt_ref(ensemble).map_or(f64::NAN, |e| {
        e.0.pairs().iter().map(|&p| measure::d_pair(p)).sum()
    })
}

/// Brute-force `k_max` by exhaustive majorization search (caps at 20 pairs).
///
/// # Safety
/// `ensemble` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_ensemble_k_max_oracle(
    ensemble: *const DetconEnsemble,
    eps: f64,
    out: *mut usize,
) -> DetconStatus {
    let Some(ensemble) = opt_ref(ensemble) else {
        return DetconStatus::NullPointer;
    };
    match oracle::k_max_oracle(&ensemble.0, eps) {
        Ok(k) => write_out(out, k),
        Err(error) => DetconStatus::from(&error),
    }
}

/// Brute-force `k_max` with a catalyst spectrum that must be returned intact
/// (caps at 12 pairs and catalyst length 8).
///
/// # Safety
/// `ensemble` and `catalyst` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_catalytic_k_max(
    ensemble: *const DetconEnsemble,
    catalyst: *const DetconSpectrum,
    eps: f64,
    out: *mut usize,
) -> DetconStatus {
    let (Some(ensemble), Some(catalyst)) = (opt_ref(ensemble), opt_ref(catalyst)) else {
        return DetconStatus::NullPointer;
    };
    match oracle::catalytic_k_max(&ensemble.0, &catalyst.0, eps) {
        Ok(k) => write_out(out, k),
        Err(error) => DetconStatus::from(&error),
    }
}

// ---------------------------------------------------------------------------
// Plan
// ---------------------------------------------------------------------------

/// Compute the optimal deterministic concentration plan for an ensemble.
///
/// # Safety
/// `ensemble` must be a live handle; `out` must be writable. On success
/// `*out` owns the new handle and must be released with
/// [`detcon_plan_free`].
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_new(
    ensemble: *const DetconEnsemble,
    strategy: DetconStrategy,
    eps: f64,
    out: *mut *mut DetconPlan,
) -> DetconStatus {
    let Some(ensemble) = opt_ref(ensemble) else {
        return DetconStatus::NullPointer;
    };
    if !eps.is_finite() || eps < 0.0 {
        return DetconStatus::InvalidArgument;
    }
    let plan = concentrate::plan(&ensemble.0, strategy.into(), eps);
    write_out(out, boxed(DetconPlan(plan)))
}

/// Release a plan handle. Null is ignored.
///
/// # Safety
/// `plan` must be null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_free(plan: *mut DetconPlan) {
    if !plan.is_null() {
        drop(Box::from_raw(plan));
    }
}

/// Number of Bell pairs the plan extracts; 0 for a null handle.
///
/// # Safety
/// `plan` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_bells(plan: *const DetconPlan) -> usize {
    opt_ref(plan).map_or(0, |p| p.0.bells)
}

/// Number of pairs left disentangled; 0 for a null handle.
///
/// # Safety
/// `plan` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_disentangled(plan: *const DetconPlan) -> usize {
    opt_ref(plan).map_or(0, |p| p.0.disentangled)
}

/// Number of recorded two-pair steps; 0 for a null handle.
///
/// # Safety
/// `plan` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_step_count(plan: *const DetconPlan) -> usize {
    opt_ref(plan).map_or(0, |p| p.0.steps.len())
}

/// Estimated LOCC operation count (four per step); 0 for a null handle.
///
/// # Safety
/// `plan` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_estimated_operations(plan: *const DetconPlan) -> usize {
    opt_ref(plan).map_or(0, |p| p.0.estimated_operations())
}

/// Whether the plan keeps a residual pair; its coefficient is written to
/// `out_a` when non-null.
///
/// # Safety
/// `plan` must be null or a live handle; `out_a` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_residual(
    plan: *const DetconPlan,
    out_a: *mut f64,
) -> bool {
    let Some(plan) = opt_ref(plan) else {
        return false;
    };
    match plan.0.residual {
        Some(residual) => {
            if !out_a.is_null() {
                out_a.write(residual.a());
            }
            true
        }
        None => false,
    }
}

/// Copy step `index` into `out`.
///
/// # Safety
/// `plan` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_step(
    plan: *const DetconPlan,
    index: usize,
    out: *mut DetconStep,
) -> DetconStatus {
    let Some(plan) = opt_ref(plan) else {
        return DetconStatus::NullPointer;
    };
    let Some(step) = plan.0.steps.get(index) else {
        return DetconStatus::InvalidArgument;
    };
    write_out(
        out,
        DetconStep {
            left_index: step.left_index,
            right_index: step.right_index,
            extracts_bell: step.case == StepCase::ExtractBell,
            input_a: step.input_a.get(),
            input_b: step.input_b.get(),
            output_residual_a: step.output_residual_a.get(),
        },
    )
}

/// Brute-force verification of a plan against the full `2ⁿ`-dimensional
/// majorization relation (caps at 20 pairs).
///
/// # Safety
/// `ensemble` and `plan` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn detcon_plan_verify(
    ensemble: *const DetconEnsemble,
    plan: *const DetconPlan,
    eps: f64,
    out: *mut bool,
) -> DetconStatus {
    let (Some(ensemble), Some(plan)) = (opt_ref(ensemble), opt_ref(plan)) else {
        return DetconStatus::NullPointer;
    };
    match oracle::verify_plan(&ensemble.0, &plan.0, eps) {
        Ok(verdict) => write_out(out, verdict),
        Err(error) => DetconStatus::from(&error),
    }
}
