//! The majorization order on spectra and Nielsen's deterministic-LOCC
//! criterion.
//!
//! `x ≺ y` ("x is majorized by y") holds when every prefix sum of the
//! descending-sorted `x` is at most the corresponding prefix sum of `y`, with
//! equal totals. Nielsen's theorem turns this order into physics: a
//! deterministic LOCC transformation from the state with spectrum `x` to the
//! state with spectrum `y` exists exactly when `x ≺ y`.
//!
//! Spectra of different lengths are compared after zero-padding the shorter
//! one, which makes the relation total over dimensions. Each prefix
//! comparison uses a single `eps`, never an accumulated one, so exact
//! boundary cases (equality in the first inequality, say) are accepted.

use crate::spectra::Spectrum;

/// Whether `x ≺ y`: every prefix sum of `x` is `≤` the corresponding prefix
/// sum of `y` within `eps`, and the totals agree within `eps`.
pub fn majorizes(x: &Spectrum, y: &Spectrum, eps: f64) -> bool {
    let xs = x.probs();
    let ys = y.probs();
    let len = xs.len().max(ys.len());
    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    for k in 0..len {
        sum_x += xs.get(k).copied().unwrap_or(0.0);
        sum_y += ys.get(k).copied().unwrap_or(0.0);
        if sum_x > sum_y + eps {
            return false;
        }
    }
    (sum_x - sum_y).abs() <= eps
}

/// Nielsen's criterion: the deterministic LOCC transformation
/// `initial → final` exists iff the initial spectrum is majorized by the
/// final one.
pub fn nielsen_allows(initial: &Spectrum, final_state: &Spectrum, eps: f64) -> bool {
    majorizes(initial, final_state, eps)
}

/// Prefix-sum evidence for a majorization comparison, for diagnostic output.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationTrace {
    /// Running prefix sums of the zero-padded `x`.
    pub prefix_x: Vec<f64>,
    /// Running prefix sums of the zero-padded `y`.
    pub prefix_y: Vec<f64>,
    /// The verdict, identical to [`majorizes`].
    pub holds: bool,
    /// Zero-based index of the first violated prefix inequality, or the last
    /// index when only the total-sum equality failed.
    pub first_violation: Option<usize>,
}

/// Compute [`majorizes`] together with the full prefix-sum table.
pub fn trace(x: &Spectrum, y: &Spectrum, eps: f64) -> MajorizationTrace {
    let xs = x.probs();
    let ys = y.probs();
    let len = xs.len().max(ys.len());
    let mut prefix_x = Vec::with_capacity(len);
    let mut prefix_y = Vec::with_capacity(len);
    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    let mut first_violation = None;
    for k in 0..len {
        sum_x += xs.get(k).copied().unwrap_or(0.0);
        sum_y += ys.get(k).copied().unwrap_or(0.0);
        prefix_x.push(sum_x);
        prefix_y.push(sum_y);
        if first_violation.is_none() && sum_x > sum_y + eps {
            first_violation = Some(k);
        }
    }
    if first_violation.is_none() && (sum_x - sum_y).abs() > eps {
        first_violation = Some(len - 1);
    }
    MajorizationTrace {
        prefix_x,
        prefix_y,
        holds: first_violation.is_none(),
        first_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::d_general;
    use crate::DEFAULT_EPS as EPS;
    use proptest::prelude::*;

    fn spectrum(values: &[f64]) -> Spectrum {
        Spectrum::canonicalize(values, false, EPS).unwrap()
    }

    #[test]
    fn uniform_is_majorized_by_anything() {
        assert!(majorizes(&spectrum(&[0.5, 0.5]), &spectrum(&[1.0, 0.0]), EPS));
    }

    #[test]
    fn first_prefix_violation_is_detected() {
        assert!(!majorizes(&spectrum(&[0.7, 0.3]), &spectrum(&[0.6, 0.4]), EPS));
    }

    #[test]
    fn three_pair_collective_transformation_is_allowed() {
        // Initial (0.5,0.5)⊗(0.5,0.5)⊗(0.95,0.05), final (0.9,0.1)⊗3.
        let initial = spectrum(&[0.2375, 0.2375, 0.2375, 0.2375, 0.0125, 0.0125, 0.0125, 0.0125]);
        let final_state =
            spectrum(&[0.729, 0.081, 0.081, 0.081, 0.009, 0.009, 0.009, 0.001]);
        assert!(majorizes(&initial, &final_state, EPS));
    }

    #[test]
    fn nielsen_two_pair_instance() {
        let initial = spectrum(&[0.42, 0.28, 0.18, 0.12]);
        let final_state = spectrum(&[0.42, 0.42, 0.08, 0.08]);
        assert!(nielsen_allows(&initial, &final_state, EPS));
    }

    #[test]
    fn nielsen_is_reflexive() {
        let s = spectrum(&[0.42, 0.28, 0.18, 0.12]);
        assert!(nielsen_allows(&s, &s, EPS));
    }

    #[test]
    fn entanglement_cannot_deterministically_increase() {
        let bell = spectrum(&[0.5, 0.5]);
        let partial = spectrum(&[0.6, 0.4]);
        assert!(nielsen_allows(&bell, &partial, EPS));
        assert!(!nielsen_allows(&partial, &bell, EPS));
    }

    #[test]
    fn unequal_lengths_are_zero_padded() {
        let x = spectrum(&[0.4, 0.3, 0.3]);
        let y = spectrum(&[0.5, 0.5]);
        assert!(majorizes(&x, &y, EPS));
        assert!(!majorizes(&y, &x, EPS));
    }

    #[test]
    fn trace_reports_first_violation() {
        let t = trace(&spectrum(&[0.7, 0.3]), &spectrum(&[0.6, 0.4]), EPS);
        assert!(!t.holds);
        assert_eq!(t.first_violation, Some(0));
        assert_eq!(t.prefix_x, vec![0.7, 1.0]);
        assert_eq!(t.prefix_y, vec![0.6, 1.0]);

        let ok = trace(&spectrum(&[0.5, 0.5]), &spectrum(&[1.0, 0.0]), EPS);
        assert!(ok.holds);
        assert_eq!(ok.first_violation, None);
    }

    prop_compose! {
        fn arb_spectrum(max_len: usize)
            (values in proptest::collection::vec(1e-3..1.0f64, 1..=max_len))
            -> Spectrum
        {
            Spectrum::canonicalize(&values, true, EPS).unwrap()
        }
    }

    /// A spectrum guaranteed to be majorized by `s`: averaging against a
    /// rotated copy of itself is a doubly stochastic map.
    fn mixed(s: &Spectrum, rotation: usize, weight: f64) -> Spectrum {
        let n = s.len();
        let values: Vec<f64> = (0..n)
            .map(|i| weight * s.probs()[i] + (1.0 - weight) * s.probs()[(i + rotation) % n])
            .collect();
        Spectrum::canonicalize(&values, false, 1e-6).unwrap()
    }

    proptest! {
        #[test]
        fn reflexive(s in arb_spectrum(8)) {
            prop_assert!(majorizes(&s, &s, EPS));
        }

        #[test]
        fn mixing_is_majorized(s in arb_spectrum(8), r in 0usize..8, w in 0.0..1.0f64) {
            let x = mixed(&s, r, w);
            prop_assert!(majorizes(&x, &s, EPS));
        }

        #[test]
        fn transitive(s in arb_spectrum(8), r1 in 0usize..8, w1 in 0.0..1.0f64,
                      r2 in 0usize..8, w2 in 0.0..1.0f64) {
            let y = mixed(&s, r1, w1);
            let x = mixed(&y, r2, w2);
            prop_assert!(majorizes(&y, &s, EPS));
            prop_assert!(majorizes(&x, &y, EPS));
            prop_assert!(majorizes(&x, &s, EPS));
        }

        #[test]
        fn antisymmetric_up_to_sorting(s in arb_spectrum(8), seed in 0u64..1000) {
            // A permuted copy canonicalizes to the same sorted probabilities.
            let mut values: Vec<f64> = s.probs().to_vec();
            let n = values.len();
            for i in 0..n {
                let j = (seed as usize + i * 7) % n;
                values.swap(i, j);
            }
            let y = Spectrum::canonicalize(&values, false, EPS).unwrap();
            prop_assert!(majorizes(&s, &y, EPS) && majorizes(&y, &s, EPS));
            for (a, b) in s.probs().iter().zip(y.probs()) {
                prop_assert!((a - b).abs() <= EPS);
            }
        }

        #[test]
        fn entropy_is_monotone_under_nielsen(s in arb_spectrum(8), r in 0usize..8, w in 0.0..1.0f64) {
            let x = mixed(&s, r, w);
            // x → s is allowed, so entropy may only decrease along it.
            prop_assert!(nielsen_allows(&x, &s, EPS));
            prop_assert!(x.entropy() >= s.entropy() - 1e-9);
        }

        #[test]
        fn min_entropy_is_monotone_under_nielsen(s in arb_spectrum(8), r in 0usize..8, w in 0.0..1.0f64) {
            let x = mixed(&s, r, w);
            prop_assert!(nielsen_allows(&x, &s, EPS));
            prop_assert!(d_general(&x) >= d_general(&s) - 1e-9);
        }
    }
}
