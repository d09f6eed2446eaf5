//! Schmidt spectra, two-qubit pairs, tensor products, and entropy
//! functionals.
//!
//! Everything downstream manipulates states only through these canonical
//! representations. A [`Spectrum`] is a non-increasing list of probabilities
//! summing to 1; a [`QubitPair`] is the special two-level case, stored as the
//! square `a` of its larger Schmidt coefficient. All values are validated on
//! construction and immutable afterwards, so the types are safe to share
//! across threads without synchronization.

use crate::{Error, Result, LOG_PRODUCT_THRESHOLD};

/// A probability, validated to lie in `[0, 1]` within a tolerance.
///
/// Values within `eps` outside the interval are clamped onto its boundary;
/// anything further out is rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64, eps: f64) -> Result<Self> {
        if !value.is_finite() || value < -eps || value > 1.0 + eps {
            return Err(Error::InvalidProbability { value });
        }
        Ok(Self(value.clamp(0.0, 1.0)))
    }

    /// Clamp into `[0, 1]` without range validation. Callers guarantee the
    /// value came out of arithmetic on already-validated probabilities.
    pub(crate) fn clamped(value: f64) -> Self {
        Self(value.clamp(0.0, 1.0))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// A two-qubit partially entangled pair √a∣00⟩ + √(1−a)∣11⟩, represented by
/// the square of its larger Schmidt coefficient, `a ∈ [1/2, 1]`.
///
/// `a = 1/2` is a Bell pair, `a = 1` a disentangled (product) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitPair {
    a: Probability,
}

impl QubitPair {
    pub fn new(a: f64, eps: f64) -> Result<Self> {
        if !a.is_finite() || a < 0.5 - eps || a > 1.0 + eps {
            return Err(Error::PairOutOfRange { a });
        }
        Ok(Self {
            a: Probability(a.clamp(0.5, 1.0)),
        })
    }

    /// Internal constructor for values produced by pair arithmetic, which
    /// stay inside `[1/2, 1]` up to rounding.
    pub(crate) fn from_clamped(a: f64) -> Self {
        Self {
            a: Probability(a.clamp(0.5, 1.0)),
        }
    }

    /// Square of the larger Schmidt coefficient.
    pub fn a(self) -> f64 {
        self.a.get()
    }

    pub fn is_bell(self, eps: f64) -> bool {
        (self.a() - 0.5).abs() <= eps
    }

    pub fn is_product(self, eps: f64) -> bool {
        self.a() >= 1.0 - eps
    }

    /// The pair's two-level Schmidt spectrum `(a, 1 − a)`.
    pub fn spectrum(self) -> Spectrum {
        let a = self.a();
        Spectrum::from_sorted_unchecked(vec![a, 1.0 - a])
    }

    /// Entanglement entropy of the pair in bits: `−a log₂ a − (1−a) log₂ (1−a)`.
    pub fn entropy(self) -> f64 {
        self.spectrum().entropy()
    }
}

/// A canonical Schmidt spectrum: probabilities sorted in non-increasing
/// order, summing to 1 within the construction tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    probs: Vec<f64>,
}

impl Spectrum {
    /// Validate, clamp, optionally renormalize, and sort a list of values
    /// into a canonical spectrum.
    ///
    /// Rejects empty input, entries below `−eps`, non-finite entries, and
    /// sums off 1 by more than `eps` unless `renormalize` is set. Entries
    /// within `eps` outside `[0, 1]` are clamped onto the boundary. Sorting
    /// is descending and stable, so equal eigenvalues keep their input order.
    pub fn canonicalize(values: &[f64], renormalize: bool, eps: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry { index, value });
            }
            if value < -eps {
                return Err(Error::NegativeEntry { index, value });
            }
        }
        let mut probs: Vec<f64> = values.iter().map(|&v| v.max(0.0)).collect();
        let sum: f64 = probs.iter().sum();
        if renormalize {
            if sum <= 0.0 {
                return Err(Error::NotNormalized { sum });
            }
            for p in &mut probs {
                *p /= sum;
            }
        } else if (sum - 1.0).abs() > eps {
            return Err(Error::NotNormalized { sum });
        }
        for p in &mut probs {
            if (*p - 1.0).abs() <= eps && *p > 1.0 {
                *p = 1.0;
            }
        }
        probs.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));
        Ok(Self { probs })
    }

    /// Wrap values already known to be sorted descending and normalized.
    pub(crate) fn from_sorted_unchecked(probs: Vec<f64>) -> Self {
        debug_assert!(!probs.is_empty());
        debug_assert!(probs.windows(2).all(|w| w[0] >= w[1]));
        Self { probs }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Largest eigenvalue; the first entry of the canonical order.
    pub fn max_entry(&self) -> f64 {
        self.probs[0]
    }

    /// Number of nonzero eigenvalues (the Schmidt number).
    pub fn schmidt_number(&self) -> usize {
        self.probs.iter().filter(|&&p| p > 0.0).count()
    }

    /// Tensor product of two spectra: all pairwise products, re-sorted
    /// descending. The result has length `|x|·|y|` and still sums to 1.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut probs = Vec::with_capacity(self.probs.len() * other.probs.len());
        for &a in &self.probs {
            for &b in &other.probs {
                probs.push(a * b);
            }
        }
        probs.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));
        Self { probs }
    }

    /// Von Neumann entropy in bits: `−Σ pᵢ log₂ pᵢ` with `0·log 0 = 0`.
    pub fn entropy(&self) -> f64 {
        -self
            .probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * p.log2())
            .sum::<f64>()
    }

    /// Rényi entropy of order `t` in bits: `[1/(1−t)] log₂ Σ pᵢᵗ`.
    ///
    /// Valid for finite `t ≥ 0`, `t ≠ 1`; at `t = 1` use [`Spectrum::entropy`].
    /// The sum is factored through the largest eigenvalue so that very large
    /// orders do not underflow: the limit `t → ∞` recovers `−log₂ max pᵢ`.
    pub fn renyi(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 || t == 1.0 {
            return Err(Error::InvalidRenyiOrder { t });
        }
        let m = self.max_entry();
        let scaled: f64 = self
            .probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| (p / m).powf(t))
            .sum();
        Ok((t * m.log2() + scaled.log2()) / (1.0 - t))
    }
}

/// An ordered collection of two-qubit pairs shared between the two parties.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    pairs: Vec<QubitPair>,
}

impl Ensemble {
    pub fn new(pairs: Vec<QubitPair>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyEnsemble);
        }
        Ok(Self { pairs })
    }

    pub fn from_values(values: &[f64], eps: f64) -> Result<Self> {
        let pairs = values
            .iter()
            .map(|&a| QubitPair::new(a, eps))
            .collect::<Result<Vec<_>>>()?;
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[QubitPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `Σ log₂ aᵢ` over all pairs.
    pub fn log2_coefficient_product(&self) -> f64 {
        self.pairs.iter().map(|p| p.a().log2()).sum()
    }

    /// The product `a₁⋯aₙ` of the larger coefficients.
    ///
    /// Accumulated directly for small ensembles and in log space beyond 30
    /// pairs, where a direct product would drift toward underflow.
    pub fn coefficient_product(&self) -> f64 {
        if self.pairs.len() <= LOG_PRODUCT_THRESHOLD {
            self.pairs.iter().map(|p| p.a()).product()
        } else {
            self.log2_coefficient_product().exp2()
        }
    }

    /// Full `2ⁿ`-dimensional Schmidt spectrum of the joint state, the tensor
    /// product of all pair spectra. Exponential in the ensemble size; callers
    /// enforce their own caps.
    pub fn joint_spectrum(&self) -> Spectrum {
        let mut acc = self.pairs[0].spectrum();
        for pair in &self.pairs[1..] {
            acc = acc.tensor(&pair.spectrum());
        }
        acc
    }
}
