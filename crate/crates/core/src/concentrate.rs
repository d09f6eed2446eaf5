//! Optimal deterministic concentration of two-qubit ensembles.
//!
//! The primitive is the two-pair step. For pairs with larger coefficients
//! `a` and `b` (both in `(1/2, 1)`):
//!
//! - `ab ≤ 1/2`: a Bell pair can be extracted with certainty, and the
//!   residual pair `√(2ab)∣00⟩ + √(1−2ab)∣11⟩` keeps as much entanglement as
//!   deterministically possible;
//! - `ab > 1/2`: no Bell pair is available, so the entanglement of both
//!   pairs is gathered into one pair with coefficient `ab`, leaving the other
//!   disentangled.
//!
//! Either way the product of the larger coefficients over all pairs (a Bell
//! counts as 1/2, a product pair as 1) is conserved, which is why repeating
//! the step — in any pairing order — extracts the full `⌊−log₂(a₁⋯aₙ)⌋`
//! Bell pairs using at most `n − 1` steps, with the leftover entanglement
//! parked in a single residual pair.
//!
//! [`drain`] is the general-state analogue of the final configuration: the
//! flattest spectrum reachable from a state without lowering its largest
//! eigenvalue.

use crate::spectra::{Ensemble, Probability, QubitPair, Spectrum};

/// Pairing order for [`plan`]. Any order is optimal; exposing two lets the
/// independence be tested rather than assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Fold left to right in input order, carrying the residual.
    #[default]
    Chain,
    /// Rounds of adjacent pairings, the residuals advancing to the next
    /// round, like elimination in a tournament.
    Tournament,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "chain" => Ok(Self::Chain),
            "tournament" => Ok(Self::Tournament),
            other => Err(format!("unknown strategy `{other}` (expected chain or tournament)")),
        }
    }
}

/// Which of the two step outcomes applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// `ab ≤ 1/2`: a Bell pair comes out, the residual keeps `a' = 2ab`.
    ExtractBell,
    /// `ab > 1/2`: entanglement is merged into one pair with `a' = ab`, the
    /// other pair left disentangled.
    Merge,
}

/// One two-pair concentration event inside a plan.
///
/// Indices refer to positions in the input ensemble; the surviving residual
/// keeps the slot of the left input, so later steps can name it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairwiseStep {
    pub left_index: usize,
    pub right_index: usize,
    pub case: StepCase,
    pub input_a: Probability,
    pub input_b: Probability,
    pub output_residual_a: Probability,
}

/// Output of a single two-pair step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPairOutcome {
    /// Whether a Bell pair was extracted (`ab ≤ 1/2`).
    pub bell_extracted: bool,
    /// The surviving pair: `a' = 2ab` after an extraction, `a' = ab` after a
    /// merge. In the merge case the second output pair is disentangled and
    /// accounted by the caller.
    pub residual: QubitPair,
}

/// The optimal deterministic two-pair concentration step.
///
/// The product of the larger coefficients over all outputs (Bell counted as
/// 1/2, product pair as 1) equals `p.a · q.a` exactly. The boundary
/// `ab = 1/2` (within `eps`) yields the Bell pair plus a disentangled
/// residual (`2ab = 1`).
pub fn two_pair_step(p: QubitPair, q: QubitPair, eps: f64) -> TwoPairOutcome {
    let product = p.a() * q.a();
    if product <= 0.5 + eps {
        TwoPairOutcome {
            bell_extracted: true,
            residual: QubitPair::from_clamped(2.0 * product),
        }
    } else {
        TwoPairOutcome {
            bell_extracted: false,
            residual: QubitPair::from_clamped(product),
        }
    }
}

/// A complete concentration plan: the step sequence plus the final tally.
///
/// `bells + disentangled + (1 if residual is present) = n` for an ensemble of
/// `n` pairs, the step count never exceeds `n − 1`, and the residual carries
/// `a = 2^bells · (a₁⋯aₙ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationPlan {
    pub steps: Vec<PairwiseStep>,
    pub bells: usize,
    pub residual: Option<QubitPair>,
    pub disentangled: usize,
}

impl ConcentrationPlan {
    /// Rough LOCC operation count: four elementary operations per two-pair
    /// step.
    pub fn estimated_operations(&self) -> usize {
        4 * self.steps.len()
    }
}

/// A live (still partially entangled) pair during scheduling, remembering
/// its slot in the input ensemble.
#[derive(Debug, Clone, Copy)]
struct LivePair {
    slot: usize,
    a: f64,
}

/// Tally shared by both strategies.
#[derive(Debug, Default)]
struct Tally {
    steps: Vec<PairwiseStep>,
    bells: usize,
    disentangled: usize,
}

impl Tally {
    /// Run one step on two live pairs, record it, and return the surviving
    /// pair unless it degenerated into a Bell or a product pair (which is
    /// tallied immediately).
    fn step(&mut self, left: LivePair, right: LivePair, eps: f64) -> Option<LivePair> {
        let p = QubitPair::from_clamped(left.a);
        let q = QubitPair::from_clamped(right.a);
        let outcome = two_pair_step(p, q, eps);
        let out = outcome.residual.a();
        self.steps.push(PairwiseStep {
            left_index: left.slot,
            right_index: right.slot,
            case: if outcome.bell_extracted {
                StepCase::ExtractBell
            } else {
                StepCase::Merge
            },
            input_a: Probability::clamped(left.a),
            input_b: Probability::clamped(right.a),
            output_residual_a: Probability::clamped(out),
        });
        if outcome.bell_extracted {
            self.bells += 1;
        } else {
            self.disentangled += 1;
        }
        if out >= 1.0 - eps {
            self.disentangled += 1;
            None
        } else if (out - 0.5).abs() <= eps {
            self.bells += 1;
            None
        } else {
            Some(LivePair { slot: left.slot, a: out })
        }
    }
}

/// Compute the optimal deterministic concentration plan for an ensemble.
///
/// Exact Bell pairs and exact product pairs (within `eps`) are tallied up
/// front; the remaining pairs are concentrated pairwise under the chosen
/// strategy until at most one partially entangled pair remains. The result
/// extracts `k_max` Bell pairs, and the residual — when the total `D` is not
/// an integer — carries all the leftover potential.
pub fn plan(ensemble: &Ensemble, strategy: Strategy, eps: f64) -> ConcentrationPlan {
    let mut tally = Tally::default();
    let mut live = Vec::with_capacity(ensemble.len());
    for (slot, pair) in ensemble.pairs().iter().enumerate() {
        if pair.is_bell(eps) {
            tally.bells += 1;
        } else if pair.is_product(eps) {
            tally.disentangled += 1;
        } else {
            live.push(LivePair { slot, a: pair.a() });
        }
    }

    let survivor = match strategy {
        Strategy::Chain => {
            let mut carry: Option<LivePair> = None;
            for pair in live {
                carry = match carry {
                    None => Some(pair),
                    Some(current) => tally.step(current, pair, eps),
                };
            }
            carry
        }
        Strategy::Tournament => {
            let mut current = live;
            while current.len() >= 2 {
                let mut next = Vec::with_capacity(current.len().div_ceil(2));
                for chunk in current.chunks(2) {
                    match *chunk {
                        [left, right] => {
                            if let Some(survivor) = tally.step(left, right, eps) {
                                next.push(survivor);
                            }
                        }
                        [odd] => next.push(odd),
                        _ => unreachable!("chunks of 2"),
                    }
                }
                current = next;
            }
            current.into_iter().next()
        }
    };

    let mut residual = None;
    if let Some(last) = survivor {
        if (last.a - 0.5).abs() <= eps {
            tally.bells += 1;
        } else if last.a >= 1.0 - eps {
            tally.disentangled += 1;
        } else {
            residual = Some(QubitPair::from_clamped(last.a));
        }
    }

    ConcentrationPlan {
        steps: tally.steps,
        bells: tally.bells,
        residual,
        disentangled: tally.disentangled,
    }
}

/// The drain of a general state: the flattest spectrum reachable from every
/// state with the same largest eigenvalue `m`.
///
/// With `d` the largest integer satisfying `d·m ≤ 1 + eps` (found by direct
/// comparison, like `k_max`), the drain is `(m, …, m, 1 − d·m, 0, …)` with
/// `m` repeated `d` times, a zero remainder dropped, and the result padded
/// with zeros to the input length.
pub fn drain(spectrum: &Spectrum, eps: f64) -> Spectrum {
    let m = spectrum.max_entry();
    debug_assert!(m > 0.0);
    let mut d = 1usize;
    while (d + 1) as f64 * m <= 1.0 + eps {
        d += 1;
    }
    let remainder = (1.0 - d as f64 * m).max(0.0);
    let mut probs = vec![m; d];
    if remainder > eps {
        probs.push(remainder);
    }
    debug_assert!(probs.len() <= spectrum.len());
    probs.resize(spectrum.len(), 0.0);
    Spectrum::from_sorted_unchecked(probs)
}
