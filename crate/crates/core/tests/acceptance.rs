//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p detcon --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use detcon::concentrate::{self, Strategy};
use detcon::majorization::{majorizes, nielsen_allows};
use detcon::measure;
use detcon::oracle;
use detcon::spectra::{Ensemble, QubitPair, Spectrum};
use detcon::{ConcentrationPlan, StepCase, DEFAULT_EPS as EPS};

fn criterion(id: u32, name: &str, check: impl FnOnce() -> Result<(), String>) {
    match check() {
        Ok(()) => println!("acceptance criterion {id} ({name}): PASS"),
        Err(reason) => {
            println!("acceptance criterion {id} ({name}): FAIL - {reason}");
            panic!("acceptance criterion {id} ({name}) failed: {reason}");
        }
    }
}

fn ensure(condition: bool, message: impl Into<String>) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message.into())
    }
}

/// A value rounded to 12 significant digits, as a comparable string.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// The randomized ensemble suite shared by criteria 4, 5, and 6.
fn random_ensembles(count: usize, max_len: usize, seed: u64) -> Vec<Ensemble> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_len);
            let values: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..1.0)).collect();
            Ensemble::from_values(&values, EPS).expect("sampled coefficients are valid")
        })
        .collect()
}

fn random_spectra(count: usize, max_len: usize, seed: u64) -> Vec<Spectrum> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_len);
            let values: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            Spectrum::canonicalize(&values, true, EPS).expect("sampled spectrum is valid")
        })
        .collect()
}

#[test]
fn criterion_1_fig2_reproduction() {
    criterion(1, "three-pair demo spectra", || {
        let expected_initial = [0.2375, 0.2375, 0.2375, 0.2375, 0.0125, 0.0125, 0.0125, 0.0125];
        let expected_final = [0.729, 0.081, 0.081, 0.081, 0.009, 0.009, 0.009, 0.001];

        oracle::fig2_demo(); // warm-up
        let started = Instant::now();
        let report = oracle::fig2_demo();
        let elapsed = started.elapsed();

        for (got, want) in report.lambda_initial.probs().iter().zip(expected_initial) {
            ensure(
                sig12(*got) == sig12(want),
                format!("initial spectrum entry {got} != {want} at 12 significant digits"),
            )?;
        }
        for (got, want) in report.lambda_final.probs().iter().zip(expected_final) {
            ensure(
                sig12(*got) == sig12(want),
                format!("final spectrum entry {got} != {want} at 12 significant digits"),
            )?;
        }
        ensure(report.allowed, "majorization verdict must be true")?;
        ensure(
            elapsed.as_secs_f64() < 1e-3,
            format!("demo took {elapsed:?}, budget is 1 ms"),
        )
    });
}

#[test]
fn criterion_2_worked_d_arithmetic() {
    criterion(2, "D = 0.7 + 0.6 concentrates into 1 + 0.3", || {
        let e = Ensemble::from_values(&[2f64.powf(-0.7), 2f64.powf(-0.6)], EPS).unwrap();

        concentrate::plan(&e, Strategy::Chain, EPS); // warm-up
        let started = Instant::now();
        let plan = concentrate::plan(&e, Strategy::Chain, EPS);
        let elapsed = started.elapsed();

        ensure(plan.bells == 1, format!("bells = {}, expected 1", plan.bells))?;
        let residual = plan.residual.ok_or("expected a residual pair")?;
        let residual_d = measure::d_pair(residual);
        ensure(
            (residual_d - 0.3).abs() <= 1e-9,
            format!("residual D = {residual_d}, expected 0.3 within 1e-9"),
        )?;
        ensure(
            elapsed.as_secs_f64() < 1e-3,
            format!("plan took {elapsed:?}, budget is 1 ms"),
        )
    });
}

#[test]
fn criterion_3_schmidt_3_example() {
    criterion(3, "Schmidt-number-3 uniform state", || {
        let third = 1.0 / 3.0;
        let uniform = Spectrum::canonicalize(&[third, third, third], false, EPS).unwrap();
        ensure(
            measure::k_max_general(&uniform, EPS) == 1,
            "k_max of the uniform Schmidt-3 state must be 1",
        )?;
        let d = measure::d_general(&uniform);
        let log2_3 = 3f64.log2();
        ensure(
            (d - log2_3).abs() <= 1e-12,
            format!("D = {d}, expected log2(3) = {log2_3} within 1e-12"),
        )?;
        let bell_extended = Spectrum::canonicalize(&[0.5, 0.5, 0.0], false, EPS).unwrap();
        ensure(
            nielsen_allows(&uniform, &bell_extended, EPS),
            "extracting a Bell pair from the Schmidt-3 state must be allowed",
        )
    });
}

#[test]
fn criterion_4_formula_oracle_equivalence() {
    criterion(4, "closed form vs brute force on 1000 ensembles", || {
        let suite = random_ensembles(1000, 10, 0x5eed_0004);
        let started = Instant::now();
        for (i, e) in suite.iter().enumerate() {
            let formula = measure::k_max(e, EPS);
            let brute = oracle::k_max_oracle(e, EPS).map_err(|err| err.to_string())?;
            ensure(
                formula == brute,
                format!("ensemble {i}: k_max formula {formula} != oracle {brute}"),
            )?;
            let plan = concentrate::plan(e, Strategy::Chain, EPS);
            let verdict = oracle::verify_plan(e, &plan, EPS).map_err(|err| err.to_string())?;
            ensure(verdict, format!("ensemble {i}: plan failed brute-force verification"))?;
        }
        let elapsed = started.elapsed();
        ensure(
            elapsed.as_secs_f64() < 60.0,
            format!("suite took {elapsed:?}, budget is 60 s"),
        )
    });
}

/// Replay a plan and check the running `ΣD` (Bell = 1, product = 0) and the
/// per-step `ΣE` direction.
fn check_conservation(e: &Ensemble, plan: &ConcentrationPlan) -> Result<(), String> {
    let initial_d: f64 = e.pairs().iter().map(|&p| measure::d_pair(p)).sum();
    let mut live: Vec<f64> = e
        .pairs()
        .iter()
        .filter(|p| !p.is_bell(EPS) && !p.is_product(EPS))
        .map(|p| p.a())
        .collect();
    let mut bells = e.pairs().iter().filter(|p| p.is_bell(EPS)).count();
    for (i, step) in plan.steps.iter().enumerate() {
        let a = step.input_a.get();
        let b = step.input_b.get();
        let out = step.output_residual_a.get();
        for value in [a, b] {
            let pos = live
                .iter()
                .position(|&x| (x - value).abs() < 1e-12)
                .ok_or(format!("step {i}: input {value} is not a live pair"))?;
            live.remove(pos);
        }
        live.push(out);
        let entropy_before =
            QubitPair::new(a, EPS).unwrap().entropy() + QubitPair::new(b, EPS).unwrap().entropy();
        let residual_entropy = QubitPair::new(out, EPS).unwrap().entropy();
        let entropy_after = match step.case {
            StepCase::ExtractBell => {
                bells += 1;
                1.0 + residual_entropy
            }
            StepCase::Merge => residual_entropy,
        };
        ensure(
            entropy_after <= entropy_before + 1e-9,
            format!("step {i}: entropy rose from {entropy_before} to {entropy_after}"),
        )?;
        let current_d: f64 = bells as f64 + live.iter().map(|&x| -x.log2()).sum::<f64>();
        ensure(
            (current_d - initial_d).abs() <= 1e-9,
            format!("step {i}: sum of D drifted from {initial_d} to {current_d}"),
        )?;
    }
    Ok(())
}

#[test]
fn criterion_5_conservation_suite() {
    criterion(5, "sum of D conserved, sum of E non-increasing", || {
        let suite = random_ensembles(1000, 10, 0x5eed_0004);
        for (i, e) in suite.iter().enumerate() {
            for strategy in [Strategy::Chain, Strategy::Tournament] {
                let plan = concentrate::plan(e, strategy, EPS);
                check_conservation(e, &plan).map_err(|err| format!("ensemble {i}: {err}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_strategy_independence() {
    criterion(6, "chain and tournament agree", || {
        let suite = random_ensembles(1000, 10, 0x5eed_0004);
        for (i, e) in suite.iter().enumerate() {
            let chain = concentrate::plan(e, Strategy::Chain, EPS);
            let tournament = concentrate::plan(e, Strategy::Tournament, EPS);
            ensure(
                chain.bells == tournament.bells,
                format!("ensemble {i}: bells {} vs {}", chain.bells, tournament.bells),
            )?;
            match (chain.residual, tournament.residual) {
                (Some(x), Some(y)) => ensure(
                    (x.a() - y.a()).abs() <= 1e-9,
                    format!("ensemble {i}: residuals {} vs {}", x.a(), y.a()),
                )?,
                (None, None) => {}
                _ => return Err(format!("ensemble {i}: one strategy lost the residual")),
            }
            ensure(
                chain.steps.len() < e.len(),
                format!("ensemble {i}: chain used {} steps", chain.steps.len()),
            )?;
            ensure(
                tournament.steps.len() < e.len(),
                format!("ensemble {i}: tournament used {} steps", tournament.steps.len()),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_7_residual_optimality() {
    criterion(7, "shaving the residual breaks verification", || {
        let mut rng = StdRng::seed_from_u64(0x5eed_0007);
        let mut tested = 0;
        while tested < 100 {
            let n = rng.random_range(2..=8);
            let values: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..1.0)).collect();
            let e = Ensemble::from_values(&values, EPS).unwrap();
            let plan = concentrate::plan(&e, Strategy::Chain, EPS);
            let Some(residual) = plan.residual else {
                continue;
            };
            // keep the shaved residual a meaningful pair
            if residual.a() <= 0.5 + 2e-6 || residual.a() >= 1.0 - 2e-6 {
                continue;
            }
            let mut shaved = plan.clone();
            shaved.residual = Some(QubitPair::new(residual.a() - 1e-6, EPS).unwrap());
            let verdict = oracle::verify_plan(&e, &shaved, EPS).map_err(|err| err.to_string())?;
            ensure(
                !verdict,
                format!(
                    "shaved residual {} still verified for ensemble {:?}",
                    residual.a() - 1e-6,
                    values
                ),
            )?;
            tested += 1;
        }
        Ok(())
    });
}

#[test]
fn criterion_8_renyi_limits() {
    criterion(8, "Renyi limits and monotonicity", || {
        let grid = [
            0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.99, 1.01, 1.05, 1.1, 1.3, 1.7, 2.5, 4.0, 8.0,
            16.0, 64.0, 256.0, 1e4,
        ];
        for (i, s) in random_spectra(100, 8, 0x5eed_0008).iter().enumerate() {
            let entropy = s.entropy();
            for t in [1.0 + 1e-6, 1.0 - 1e-6] {
                let near_one = s.renyi(t).map_err(|err| err.to_string())?;
                ensure(
                    (near_one - entropy).abs() <= 1e-4,
                    format!("spectrum {i}: renyi({t}) = {near_one} vs entropy {entropy}"),
                )?;
            }
            let large_order = s.renyi(1e4).map_err(|err| err.to_string())?;
            let min_entropy = measure::d_general(s);
            ensure(
                (large_order - min_entropy).abs() <= 1e-3,
                format!("spectrum {i}: renyi(1e4) = {large_order} vs D = {min_entropy}"),
            )?;
            let values: Vec<f64> = grid
                .iter()
                .map(|&t| s.renyi(t))
                .collect::<Result<_, _>>()
                .map_err(|err| err.to_string())?;
            for (j, window) in values.windows(2).enumerate() {
                ensure(
                    window[0] >= window[1] - 1e-9,
                    format!(
                        "spectrum {i}: renyi rose between t = {} and t = {}",
                        grid[j],
                        grid[j + 1]
                    ),
                )?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_drain_dominance() {
    criterion(9, "every state majorizes into its drain", || {
        for (i, s) in random_spectra(1000, 8, 0x5eed_0009).iter().enumerate() {
            let drained = concentrate::drain(s, EPS);
            ensure(
                majorizes(s, &drained, EPS),
                format!("spectrum {i}: drain is not reachable"),
            )?;
            ensure(
                (drained.max_entry() - s.max_entry()).abs() <= 1e-12,
                format!(
                    "spectrum {i}: drain max {} vs input max {}",
                    drained.max_entry(),
                    s.max_entry()
                ),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_10_no_catalytic_enhancement() {
    criterion(10, "catalysts never add Bell pairs", || {
        let mut rng = StdRng::seed_from_u64(0x5eed_000a);
        for i in 0..100 {
            let n = rng.random_range(2..=6);
            let values: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..1.0)).collect();
            let e = Ensemble::from_values(&values, EPS).unwrap();
            let len = rng.random_range(2..=6);
            let raw: Vec<f64> = (0..len).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            let catalyst = Spectrum::canonicalize(&raw, true, EPS).unwrap();
            let plain = measure::k_max(&e, EPS);
            let catalytic =
                oracle::catalytic_k_max(&e, &catalyst, EPS).map_err(|err| err.to_string())?;
            ensure(
                catalytic == plain,
                format!("instance {i}: catalytic k_max {catalytic} != k_max {plain}"),
            )?;
        }
        Ok(())
    });
}
