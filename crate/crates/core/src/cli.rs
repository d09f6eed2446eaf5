//! Command-line surface over JSON documents.
//!
//! Commands: `measure`, `plan`, `verify`, `majorize`, `drain`, `demo-fig2`.
//! Input documents carry either an ensemble of pairs or a single state
//! spectrum (see [`EnsembleDocument`]); `-` reads a document from standard
//! input. Output is a single JSON object with fixed field order and numbers
//! printed at 12 significant digits, so identical invocations produce
//! byte-identical output.
//!
//! Exit codes: `0` success or positive verdict, `1` valid input but negative
//! verdict (`majorize`, `verify`), `2` input or usage error, diagnosed on
//! standard error.

use std::io::Read;

use serde::Deserialize;

use crate::concentrate::{self, ConcentrationPlan, PairwiseStep, StepCase, Strategy};
use crate::majorization;
use crate::measure;
use crate::oracle;
use crate::spectra::{Ensemble, Probability, QubitPair, Spectrum};
use crate::DEFAULT_EPS;

/// Input document: exactly one of `pairs` (an ensemble of two-qubit pairs)
/// or `state` (a general Schmidt spectrum), plus optional `eps` and
/// `renormalize` controls.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleDocument {
    #[serde(default)]
    pub pairs: Option<Vec<PairEntry>>,
    #[serde(default)]
    pub state: Option<StateEntry>,
    #[serde(default)]
    pub eps: Option<f64>,
    #[serde(default)]
    pub renormalize: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairEntry {
    pub a: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateEntry {
    pub p: Vec<f64>,
}

/// Plan document, as emitted by `plan` and consumed by `verify`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanDocument {
    pub steps: Vec<StepDocument>,
    pub bells: usize,
    pub residual: Option<ResidualDocument>,
    pub disentangled: usize,
    #[serde(default)]
    pub estimated_operations: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDocument {
    pub left_index: usize,
    pub right_index: usize,
    pub case_tag: String,
    pub input_a: f64,
    pub input_b: f64,
    pub output_residual_a: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualDocument {
    pub a: f64,
}

/// Run a command line; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    match execute(args) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.verdict {
                0
            } else {
                1
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

struct Outcome {
    output: String,
    verdict: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, verdict: true }
    }
}

const USAGE: &str = "usage: detcon <command> [arguments] [flags]

commands:
  measure <doc>                per-pair D and E, totals, and k_max
  plan <doc>                   optimal concentration plan
  verify <doc> <plan-doc>      brute-force check of a plan
  majorize <spec-x> <spec-y>   does x precede y in the majorization order?
  drain <doc>                  drain spectrum of a state document
  demo-fig2                    built-in three-pair collective demonstration

arguments:
  <doc>        path to a JSON document, or - for standard input
  <spec-...>   inline spectrum like (0.7,0.3), or a state document path

flags:
  --eps <value>            comparison tolerance (default 1e-9)
  --strategy <name>        plan pairing order: chain or tournament
  --trace                  majorize: include prefix-sum evidence
  --renormalize            inline spectra: rescale to unit sum";

fn execute(args: &[String]) -> Result<Outcome, String> {
    let Some((command, rest)) = args.split_first() else {
        return Err(format!("missing command\n{USAGE}"));
    };
    let parsed = match command.as_str() {
        "measure" | "drain" => Parsed::parse(rest, &["eps"], 1)?,
        "plan" => Parsed::parse(rest, &["eps", "strategy"], 1)?,
        "verify" => Parsed::parse(rest, &["eps"], 2)?,
        "majorize" => Parsed::parse(rest, &["eps", "trace", "renormalize"], 2)?,
        "demo-fig2" => Parsed::parse(rest, &["eps"], 0)?,
        "--help" | "-h" | "help" => return Ok(Outcome::ok(format!("{USAGE}\n"))),
        other => return Err(format!("unknown command `{other}`\n{USAGE}")),
    };
    match command.as_str() {
        "measure" => run_measure(&parsed),
        "plan" => run_plan(&parsed),
        "verify" => run_verify(&parsed),
        "majorize" => run_majorize(&parsed),
        "drain" => run_drain(&parsed),
        "demo-fig2" => run_demo_fig2(&parsed),
        _ => unreachable!(),
    }
}

#[derive(Debug, Default)]
struct Parsed {
    positional: Vec<String>,
    eps: Option<f64>,
    strategy: Option<Strategy>,
    trace: bool,
    renormalize: bool,
}

impl Parsed {
    fn parse(args: &[String], allowed: &[&str], positional: usize) -> Result<Self, String> {
        let mut out = Self::default();
        let mut iter = args.iter().peekable();
        while let Some(arg) = iter.next() {
            let (flag, inline_value) = match arg.strip_prefix("--") {
                Some(body) => match body.split_once('=') {
                    Some((name, value)) => (Some(name.to_string()), Some(value.to_string())),
                    None => (Some(body.to_string()), None),
                },
                None => (None, None),
            };
            let Some(flag) = flag else {
                out.positional.push(arg.clone());
                continue;
            };
            if !allowed.contains(&flag.as_str()) {
                return Err(format!("flag --{flag} is not valid here\n{USAGE}"));
            }
            let mut take_value = || -> Result<String, String> {
                if let Some(v) = inline_value.clone() {
                    return Ok(v);
                }
                iter.next()
                    .cloned()
                    .ok_or_else(|| format!("flag --{flag} expects a value"))
            };
            match flag.as_str() {
                "eps" => {
                    let raw = take_value()?;
                    let eps: f64 = raw
                        .parse()
                        .map_err(|_| format!("--eps expects a number, got `{raw}`"))?;
                    if !eps.is_finite() || eps < 0.0 {
                        return Err(format!("--eps must be a nonnegative finite number, got {raw}"));
                    }
                    out.eps = Some(eps);
                }
                "strategy" => {
                    let raw = take_value()?;
                    out.strategy = Some(raw.parse()?);
                }
                "trace" => out.trace = true,
                "renormalize" => out.renormalize = true,
                _ => unreachable!(),
            }
        }
        if out.positional.len() != positional {
            return Err(format!(
                "expected {positional} argument(s), got {}\n{USAGE}",
                out.positional.len()
            ));
        }
        Ok(out)
    }
}

/// Payload of a parsed input document, already validated against the
/// requested tolerance.
enum Payload {
    Pairs(Ensemble),
    State(Spectrum),
}

struct LoadedDocument {
    payload: Payload,
    eps: f64,
}

fn read_source(path: &str, stdin_used: &mut bool) -> Result<String, String> {
    if path == "-" {
        if *stdin_used {
            return Err("standard input may supply at most one document".into());
        }
        *stdin_used = true;
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("failed to read standard input: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("failed to read {path}: {e}"))
    }
}

fn load_document(path: &str, cli_eps: Option<f64>, stdin_used: &mut bool) -> Result<LoadedDocument, String> {
    let text = read_source(path, stdin_used)?;
    let doc: EnsembleDocument = serde_json::from_str(&text)
        .map_err(|e| format!("malformed document {path}: {e}"))?;
    let eps = cli_eps.or(doc.eps).unwrap_or(DEFAULT_EPS);
    let renormalize = doc.renormalize.unwrap_or(false);
    let payload = match (doc.pairs, doc.state) {
        (Some(pairs), None) => {
            let values: Vec<f64> = pairs.iter().map(|p| p.a).collect();
            let ensemble = Ensemble::from_values(&values, eps)
                .map_err(|e| format!("invalid document {path}: {e}"))?;
            Payload::Pairs(ensemble)
        }
        (None, Some(state)) => {
            let spectrum = Spectrum::canonicalize(&state.p, renormalize, eps)
                .map_err(|e| format!("invalid document {path}: {e}"))?;
            Payload::State(spectrum)
        }
        _ => {
            return Err(format!(
                "invalid document {path}: exactly one of `pairs` or `state` must be present"
            ))
        }
    };
    Ok(LoadedDocument { payload, eps })
}

fn run_measure(parsed: &Parsed) -> Result<Outcome, String> {
    let mut stdin_used = false;
    let doc = load_document(&parsed.positional[0], parsed.eps, &mut stdin_used)?;
    let mut out = String::from("{\n");
    match &doc.payload {
        Payload::Pairs(ensemble) => {
            out.push_str("  \"pairs\": [\n");
            let rows: Vec<String> = ensemble
                .pairs()
                .iter()
                .map(|&pair| {
                    format!(
                        "    {{\"a\": {}, \"D\": {}, \"E\": {}}}",
                        fmt_sig(pair.a()),
                        fmt_sig(measure::d_pair(pair)),
                        fmt_sig(pair.entropy())
                    )
                })
                .collect();
            out.push_str(&rows.join(",\n"));
            out.push_str("\n  ],\n");
            let sum_d: f64 = ensemble.pairs().iter().map(|&p| measure::d_pair(p)).sum();
            let sum_e: f64 = ensemble.pairs().iter().map(|&p| p.entropy()).sum();
            out.push_str(&format!("  \"sum_D\": {},\n", fmt_sig(sum_d)));
            out.push_str(&format!("  \"sum_E\": {},\n", fmt_sig(sum_e)));
            out.push_str(&format!("  \"k_max\": {}\n", measure::k_max(ensemble, doc.eps)));
        }
        Payload::State(spectrum) => {
            out.push_str(&format!("  \"D\": {},\n", fmt_sig(measure::d_general(spectrum))));
            out.push_str(&format!("  \"E\": {},\n", fmt_sig(spectrum.entropy())));
            out.push_str(&format!(
                "  \"k_max\": {}\n",
                measure::k_max_general(spectrum, doc.eps)
            ));
        }
    }
    out.push_str("}\n");
    Ok(Outcome::ok(out))
}

fn run_plan(parsed: &Parsed) -> Result<Outcome, String> {
    let mut stdin_used = false;
    let doc = load_document(&parsed.positional[0], parsed.eps, &mut stdin_used)?;
    let Payload::Pairs(ensemble) = &doc.payload else {
        return Err("plan requires a document with `pairs`".into());
    };
    let strategy = parsed.strategy.unwrap_or_default();
    let plan = concentrate::plan(ensemble, strategy, doc.eps);
    Ok(Outcome::ok(render_plan(&plan)))
}

fn render_plan(plan: &ConcentrationPlan) -> String {
    let mut out = String::from("{\n");
    if plan.steps.is_empty() {
        out.push_str("  \"steps\": [],\n");
    } else {
        out.push_str("  \"steps\": [\n");
        let rows: Vec<String> = plan.steps.iter().map(render_step).collect();
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ],\n");
    }
    out.push_str(&format!("  \"bells\": {},\n", plan.bells));
    match plan.residual {
        Some(residual) => {
            out.push_str(&format!("  \"residual\": {{\"a\": {}}},\n", fmt_sig(residual.a())))
        }
        None => out.push_str("  \"residual\": null,\n"),
    }
    out.push_str(&format!("  \"disentangled\": {},\n", plan.disentangled));
    out.push_str(&format!(
        "  \"estimated_operations\": {}\n",
        plan.estimated_operations()
    ));
    out.push_str("}\n");
    out
}

fn render_step(step: &PairwiseStep) -> String {
    let case_tag = match step.case {
        StepCase::ExtractBell => "ExtractBell",
        StepCase::Merge => "Merge",
    };
    format!(
        "    {{\"left_index\": {}, \"right_index\": {}, \"case_tag\": \"{}\", \
         \"input_a\": {}, \"input_b\": {}, \"output_residual_a\": {}}}",
        step.left_index,
        step.right_index,
        case_tag,
        fmt_sig(step.input_a.get()),
        fmt_sig(step.input_b.get()),
        fmt_sig(step.output_residual_a.get())
    )
}

fn plan_from_document(doc: &PlanDocument, eps: f64) -> Result<ConcentrationPlan, String> {
    let mut steps = Vec::with_capacity(doc.steps.len());
    for step in &doc.steps {
        let case = match step.case_tag.as_str() {
            "ExtractBell" => StepCase::ExtractBell,
            "Merge" => StepCase::Merge,
            other => return Err(format!("invalid plan: unknown case_tag `{other}`")),
        };
        steps.push(PairwiseStep {
            left_index: step.left_index,
            right_index: step.right_index,
            case,
            input_a: Probability::new(step.input_a, eps)
                .map_err(|e| format!("invalid plan: {e}"))?,
            input_b: Probability::new(step.input_b, eps)
                .map_err(|e| format!("invalid plan: {e}"))?,
            output_residual_a: Probability::new(step.output_residual_a, eps)
                .map_err(|e| format!("invalid plan: {e}"))?,
        });
    }
    let residual = doc
        .residual
        .as_ref()
        .map(|r| QubitPair::new(r.a, eps))
        .transpose()
        .map_err(|e| format!("invalid plan: {e}"))?;
    Ok(ConcentrationPlan {
        steps,
        bells: doc.bells,
        residual,
        disentangled: doc.disentangled,
    })
}

fn run_verify(parsed: &Parsed) -> Result<Outcome, String> {
    let mut stdin_used = false;
    let doc = load_document(&parsed.positional[0], parsed.eps, &mut stdin_used)?;
    let Payload::Pairs(ensemble) = &doc.payload else {
        return Err("verify requires an ensemble document with `pairs`".into());
    };
    let plan_text = read_source(&parsed.positional[1], &mut stdin_used)?;
    let plan_doc: PlanDocument = serde_json::from_str(&plan_text)
        .map_err(|e| format!("malformed plan document {}: {e}", parsed.positional[1]))?;
    let plan = plan_from_document(&plan_doc, doc.eps)?;
    let verdict = oracle::verify_plan(ensemble, &plan, doc.eps).map_err(|e| e.to_string())?;
    Ok(Outcome {
        output: format!("{{\n  \"verdict\": {verdict}\n}}\n"),
        verdict,
    })
}

/// Inline spectra look like `(0.7,0.3)`, `[0.7,0.3]`, or `0.7,0.3`;
/// anything else is a document path.
fn is_inline_spectrum(arg: &str) -> bool {
    arg.starts_with('(') || arg.starts_with('[') || arg.contains(',')
}

fn parse_inline_spectrum(arg: &str) -> Result<Vec<f64>, String> {
    let trimmed = arg
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    trimmed
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid spectrum entry `{}` in `{arg}`", piece.trim()))
        })
        .collect()
}

fn load_spectrum_argument(
    arg: &str,
    parsed: &Parsed,
    stdin_used: &mut bool,
) -> Result<Spectrum, String> {
    if is_inline_spectrum(arg) {
        let values = parse_inline_spectrum(arg)?;
        let eps = parsed.eps.unwrap_or(DEFAULT_EPS);
        Spectrum::canonicalize(&values, parsed.renormalize, eps)
            .map_err(|e| format!("invalid spectrum `{arg}`: {e}"))
    } else {
        let doc = load_document(arg, parsed.eps, stdin_used)?;
        match doc.payload {
            Payload::State(spectrum) => Ok(spectrum),
            Payload::Pairs(_) => Err(format!(
                "majorize requires state documents or inline spectra, but {arg} holds `pairs`"
            )),
        }
    }
}

fn run_majorize(parsed: &Parsed) -> Result<Outcome, String> {
    let mut stdin_used = false;
    let x = load_spectrum_argument(&parsed.positional[0], parsed, &mut stdin_used)?;
    let y = load_spectrum_argument(&parsed.positional[1], parsed, &mut stdin_used)?;
    let eps = parsed.eps.unwrap_or(DEFAULT_EPS);
    let mut out = String::from("{\n");
    let verdict;
    if parsed.trace {
        let trace = majorization::trace(&x, &y, eps);
        verdict = trace.holds;
        out.push_str(&format!("  \"majorizes\": {},\n", trace.holds));
        out.push_str(&format!("  \"prefix_x\": {},\n", render_array(&trace.prefix_x)));
        out.push_str(&format!("  \"prefix_y\": {},\n", render_array(&trace.prefix_y)));
        match trace.first_violation {
            Some(k) => out.push_str(&format!("  \"first_violation\": {k}\n")),
            None => out.push_str("  \"first_violation\": null\n"),
        }
    } else {
        verdict = majorization::majorizes(&x, &y, eps);
        out.push_str(&format!("  \"majorizes\": {verdict}\n"));
    }
    out.push_str("}\n");
    Ok(Outcome { output: out, verdict })
}

fn run_drain(parsed: &Parsed) -> Result<Outcome, String> {
    let mut stdin_used = false;
    let doc = load_document(&parsed.positional[0], parsed.eps, &mut stdin_used)?;
    let Payload::State(spectrum) = &doc.payload else {
        return Err("drain requires a document with `state`".into());
    };
    let drained = concentrate::drain(spectrum, doc.eps);
    let dimension = drained
        .probs()
        .iter()
        .filter(|&&p| (p - drained.max_entry()).abs() <= doc.eps)
        .count();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"drain\": {},\n", render_array(drained.probs())));
    out.push_str(&format!("  \"d\": {dimension},\n"));
    out.push_str(&format!("  \"D\": {}\n", fmt_sig(measure::d_general(spectrum))));
    out.push_str("}\n");
    Ok(Outcome::ok(out))
}

fn run_demo_fig2(_parsed: &Parsed) -> Result<Outcome, String> {
    let report = oracle::fig2_demo();
    let mut out = String::from("{\n");
    out.push_str(&format!(
        "  \"initial_pairs\": {},\n",
        render_array(&report.initial_pairs)
    ));
    out.push_str(&format!(
        "  \"final_pairs\": {},\n",
        render_array(&report.final_pairs)
    ));
    out.push_str(&format!(
        "  \"lambda_initial\": {},\n",
        render_array(report.lambda_initial.probs())
    ));
    out.push_str(&format!(
        "  \"lambda_final\": {},\n",
        render_array(report.lambda_final.probs())
    ));
    out.push_str(&format!("  \"majorizes\": {},\n", report.allowed));
    out.push_str(&format!(
        "  \"entropy_initial\": {},\n",
        fmt_sig(report.entropy_initial)
    ));
    out.push_str(&format!(
        "  \"entropy_final\": {},\n",
        fmt_sig(report.entropy_final)
    ));
    out.push_str(&format!("  \"D_initial\": {},\n", fmt_sig(report.d_initial)));
    out.push_str(&format!("  \"D_final\": {},\n", fmt_sig(report.d_final)));
    out.push_str(&format!(
        "  \"least_entangled_initial_a\": {},\n",
        fmt_sig(report.least_entangled_initial_a)
    ));
    out.push_str(&format!(
        "  \"least_entangled_final_a\": {},\n",
        fmt_sig(report.least_entangled_final_a)
    ));
    out.push_str(
        "  \"note\": \"the transformation raises the least-entangled pair; \
         no sequence of two-pair steps can do that\"\n",
    );
    out.push_str("}\n");
    Ok(Outcome::ok(out))
}

fn render_array(values: &[f64]) -> String {
    let inner: Vec<String> = values.iter().map(|&v| fmt_sig(v)).collect();
    format!("[{}]", inner.join(", "))
}

/// Format a number at 12 significant digits in plain decimal notation,
/// trimming trailing zeros.
fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    debug_assert!(x.is_finite());
    let exponent: i32 = {
        let sci = format!("{:e}", x.abs());
        sci.split('e')
            .nth(1)
            .expect("scientific notation has an exponent")
            .parse()
            .expect("exponent is an integer")
    };
    let decimals = (11 - exponent).clamp(0, 24) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}
