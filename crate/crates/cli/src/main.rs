//! `bcal` — boolean cumulant calculus over exact rationals.
//!
//! Subcommands convert between JSON moment/cumulant payloads, compute
//! the additive and multiplicative boolean convolutions (scalar and
//! operator-valued), and run the seeded identity-verification suites.
//!
//! Exit codes: 0 on success, 1 for malformed input or usage errors, and
//! 2 when a verification suite finds an identity violation.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bcal_core::boolean::{
    b_transform, bconv_add, bconv_mul, cumulants_to_moments, moments_of_shift,
    moments_to_cumulants,
};
use bcal_core::json::{
    cumulants_from_json, cumulants_to_json, moments_from_json, moments_to_json,
    ov_cumulants_from_json, ov_cumulants_to_json, ov_moments_from_json, ov_moments_to_json,
    series_to_json, CumulantsJson, MomentsJson, OvCumulantsJson, OvMomentsJson,
};
use bcal_core::ov::distribution::{ov_cumulants_to_moments, ov_moments_to_cumulants, ov_shift_one};
use bcal_core::ov::joint::OVJointState;
use bcal_core::verify::{ov_suite, scalar_suite, SuiteReport};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "bcal",
    version,
    about = "Boolean cumulant calculus over exact rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert {"order", "moments"} to {"order", "cumulants"}.
    MomentsToCumulants {
        /// Input payload: a file path or inline JSON.
        input: String,
    },
    /// Convert {"order", "cumulants"} to {"order", "moments"}.
    CumulantsToMoments {
        /// Input payload: a file path or inline JSON.
        input: String,
    },
    /// Moments of X+Y from the moments of boolean independent X and Y.
    BconvAdd {
        /// Moments of X: a file path or inline JSON.
        x: String,
        /// Moments of Y: a file path or inline JSON.
        y: String,
    },
    /// Moments of Z = X+Y+XY, so that 1+Z = (1+X)(1+Y).
    BconvMul {
        /// Moments of X: a file path or inline JSON.
        x: String,
        /// Moments of Y: a file path or inline JSON.
        y: String,
        /// Emit the moments of 1+Z instead of Z.
        #[arg(long)]
        shift: bool,
    },
    /// B-transform of a moment sequence as {"order", "coeffs"},
    /// coefficient k being the cumulant b^{k+1}.
    Btransform {
        /// Input payload: a file path or inline JSON.
        input: String,
    },
    /// Run the scalar identity suite and emit a JSON report.
    Verify {
        /// Truncation order for the conversion and convolution cases.
        #[arg(short = 'n', long, default_value_t = 8)]
        order: usize,
        /// Seed for the random instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances per case.
        #[arg(long, default_value_t = 20)]
        cases: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Convert operator-valued moments to cumulants or back; the
    /// payload key ("moments" or "cumulants") selects the direction.
    OvConvert {
        /// Input payload: a file path or inline JSON.
        input: String,
        /// Expected base-algebra dimension (validated if given).
        #[arg(short = 'd', long)]
        dim: Option<usize>,
        /// Expected order (validated if given).
        #[arg(short = 'n', long)]
        order: Option<usize>,
    },
    /// Cumulant series of X+Y from the operator-valued moments of X and Y.
    OvBconvAdd {
        /// Moments of X: a file path or inline JSON.
        x: String,
        /// Moments of Y: a file path or inline JSON.
        y: String,
    },
    /// Cumulant series of Z = X+Y+XY from operator-valued moments.
    OvBconvMul {
        /// Moments of X: a file path or inline JSON.
        x: String,
        /// Moments of Y: a file path or inline JSON.
        y: String,
        /// Emit the cumulant series of 1+Z instead of Z.
        #[arg(long)]
        shift: bool,
    },
    /// Run the operator-valued identity suite and emit a JSON report.
    OvVerify {
        /// Truncation order for the conversion and convolution cases.
        #[arg(short = 'n', long, default_value_t = 4)]
        order: usize,
        /// Base-algebra dimension.
        #[arg(short = 'd', long, default_value_t = 2)]
        dim: usize,
        /// Seed for the random instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances per case.
        #[arg(long, default_value_t = 8)]
        cases: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ViolationJson {
    context: String,
    value: String,
}

#[derive(Serialize)]
struct CaseJson {
    id: String,
    checks: u64,
    violations: Vec<ViolationJson>,
}

#[derive(Serialize)]
struct ReportJson {
    command: String,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    seed: u64,
    cases: usize,
    results: Vec<CaseJson>,
    total_checks: u64,
    total_violations: usize,
    status: String,
}

fn report_json(
    command: &str,
    order: usize,
    dim: Option<usize>,
    seed: u64,
    cases: usize,
    suite: &SuiteReport,
) -> ReportJson {
    ReportJson {
        command: command.to_string(),
        order,
        dim,
        seed,
        cases,
        results: suite
            .cases
            .iter()
            .map(|c| CaseJson {
                id: c.id.clone(),
                checks: c.report.checks,
                violations: c
                    .report
                    .violations
                    .iter()
                    .map(|v| ViolationJson {
                        context: v.context.clone(),
                        value: v.value.clone(),
                    })
                    .collect(),
            })
            .collect(),
        total_checks: suite.checks(),
        total_violations: suite.violation_count(),
        status: if suite.passed() { "pass" } else { "fail" }.to_string(),
    }
}

/// Anything that should abort with exit code 1.
struct InputError(String);

impl From<bcal_core::Error> for InputError {
    fn from(e: bcal_core::Error) -> Self {
        InputError(e.to_string())
    }
}

/// An argument is inline JSON if it starts with `{`, otherwise a path.
fn read_payload(arg: &str) -> Result<String, InputError> {
    let t = arg.trim_start();
    if t.starts_with('{') {
        Ok(t.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| InputError(format!("cannot read {arg}: {e}")))
    }
}

fn parse_payload<T: DeserializeOwned>(arg: &str) -> Result<T, InputError> {
    let text = read_payload(arg)?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("invalid payload: {e}")))
}

fn emit(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization cannot fail")
    );
}

fn emit_report(report: &ReportJson, path: Option<&PathBuf>) -> Result<(), InputError> {
    let text = serde_json::to_string_pretty(report).expect("serialization cannot fail");
    match path {
        Some(p) => {
            fs::write(p, text + "\n")
                .map_err(|e| InputError(format!("cannot write {}: {e}", p.display())))?;
            eprintln!(
                "{}: {} checks, {} violations",
                report.status, report.total_checks, report.total_violations
            );
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn check_declared(name: &str, declared: Option<usize>, actual: usize) -> Result<(), InputError> {
    match declared {
        Some(d) if d != actual => Err(InputError(format!(
            "payload has {name} {actual}, but {name} {d} was requested"
        ))),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::MomentsToCumulants { input } => {
            let m = moments_from_json(&parse_payload::<MomentsJson>(&input)?)?;
            emit(&cumulants_to_json(&moments_to_cumulants(&m)));
        }
        Command::CumulantsToMoments { input } => {
            let b = cumulants_from_json(&parse_payload::<CumulantsJson>(&input)?)?;
            emit(&moments_to_json(&cumulants_to_moments(&b)));
        }
        Command::BconvAdd { x, y } => {
            let mx = moments_from_json(&parse_payload::<MomentsJson>(&x)?)?;
            let my = moments_from_json(&parse_payload::<MomentsJson>(&y)?)?;
            emit(&moments_to_json(&bconv_add(&mx, &my)?));
        }
        Command::BconvMul { x, y, shift } => {
            let mx = moments_from_json(&parse_payload::<MomentsJson>(&x)?)?;
            let my = moments_from_json(&parse_payload::<MomentsJson>(&y)?)?;
            let mut mz = bconv_mul(&mx, &my)?;
            if shift {
                mz = moments_of_shift(&mz);
            }
            emit(&moments_to_json(&mz));
        }
        Command::Btransform { input } => {
            let m = moments_from_json(&parse_payload::<MomentsJson>(&input)?)?;
            emit(&series_to_json(&b_transform(&m)));
        }
        Command::Verify {
            order,
            seed,
            cases,
            report,
        } => {
            let suite = scalar_suite(order, seed, cases)?;
            let json = report_json("verify", order, None, seed, cases, &suite);
            emit_report(&json, report.as_ref())?;
            if !suite.passed() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::OvConvert { input, dim, order } => {
            let value: serde_json::Value =
                serde_json::from_str(&read_payload(&input)?)
                    .map_err(|e| InputError(format!("invalid payload: {e}")))?;
            let object = value
                .as_object()
                .ok_or_else(|| InputError("payload must be a JSON object".into()))?;
            if object.contains_key("moments") {
                let j: OvMomentsJson = serde_json::from_value(value.clone())
                    .map_err(|e| InputError(format!("invalid payload: {e}")))?;
                let dist = ov_moments_from_json(&j)?;
                check_declared("dim", dim, dist.dim())?;
                check_declared("order", order, dist.order())?;
                emit(&ov_cumulants_to_json(&ov_moments_to_cumulants(&dist)));
            } else if object.contains_key("cumulants") {
                let j: OvCumulantsJson = serde_json::from_value(value.clone())
                    .map_err(|e| InputError(format!("invalid payload: {e}")))?;
                let series = ov_cumulants_from_json(&j)?;
                check_declared("dim", dim, series.dim())?;
                check_declared("order", order, series.order())?;
                emit(&ov_moments_to_json(&ov_cumulants_to_moments(&series)));
            } else {
                return Err(InputError(
                    "payload has neither \"moments\" nor \"cumulants\"".into(),
                ));
            }
        }
        Command::OvBconvAdd { x, y } => {
            let dx = ov_moments_from_json(&parse_payload::<OvMomentsJson>(&x)?)?;
            let dy = ov_moments_from_json(&parse_payload::<OvMomentsJson>(&y)?)?;
            let state = OVJointState::new(dx, dy)?;
            emit(&ov_cumulants_to_json(&state.bconv_add()?));
        }
        Command::OvBconvMul { x, y, shift } => {
            let dx = ov_moments_from_json(&parse_payload::<OvMomentsJson>(&x)?)?;
            let dy = ov_moments_from_json(&parse_payload::<OvMomentsJson>(&y)?)?;
            let state = OVJointState::new(dx, dy)?;
            let mut bz = state.bconv_mul()?;
            if shift {
                bz = ov_shift_one(&bz)?;
            }
            emit(&ov_cumulants_to_json(&bz));
        }
        Command::OvVerify {
            order,
            dim,
            seed,
            cases,
            report,
        } => {
            if dim == 0 {
                return Err(InputError("dim must be at least 1".into()));
            }
            let suite = ov_suite(order, dim, seed, cases)?;
            let json = report_json("ov-verify", order, Some(dim), seed, cases, &suite);
            emit_report(&json, report.as_ref())?;
            if !suite.passed() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // Usage errors are malformed input: exit 1, not clap's 2.
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
