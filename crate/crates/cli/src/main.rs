//! `brank`: command-line front end.
//!
//! Every command prints one JSON report `{command, inputs, results,
//! certificate}`. Exit status is 0 on success, 1 for malformed input and 2
//! when the mathematics fails (a divergent combination, an insufficient
//! degree cap, dependent generators).

use std::fs;
use std::process::ExitCode;

use brank::algebra::{parse_rat, Rat};
use brank::degeneration::{cw_coefficients, cw_curves, laurent_combination_limit, verify_algorithm};
use brank::koszul::{koszul_bound, mm_bound_pipeline};
use brank::schemes::{local_hilbert_report, SchemeReportJson};
use brank::substitution::{dropped_coordinate, project_factor};
use brank::tensor::{cw_tensor, flattening_ranks, Factor};
use brank::{io, Error};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "brank", version, about = "Exact border-rank bounds, algorithm checks and limit schemes")]
struct Cli {
    /// Pretty-print the report.
    #[arg(long, global = true)]
    human: bool,

    /// Worker threads for matrix assembly (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Border-rank lower bound for n x n matrix multiplication.
    MmBound {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Koszul flattening bound for a tensor file.
    KoszulBound {
        #[arg(long)]
        tensor: String,
        #[arg(short = 'p')]
        p: usize,
        /// Matrix file restricting factor A before flattening.
        #[arg(long)]
        restrict: Option<String>,
    },
    /// Does the limit plane of a curve family contain a target tensor?
    VerifyLimit {
        #[arg(long)]
        curves: String,
        #[arg(long)]
        target: String,
    },
    /// Limit scheme of a collapsing point configuration.
    SchemeLimit {
        #[arg(long)]
        points: String,
    },
    /// Upper and lower border-rank bounds for the Coppersmith–Winograd tensor.
    Cw {
        #[arg(long)]
        q: usize,
    },
    /// Quotient one factor of a tensor by a vector.
    Reduce {
        #[arg(long)]
        tensor: String,
        #[arg(long)]
        factor: Factor,
        /// Comma-separated rationals, e.g. `0,1,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Also write the projected tensor file here.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Value,
    results: Value,
    certificate: Value,
}

enum Failure {
    Input(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            Failure::Math(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read `{path}`: {e}")))
}

fn in_file<T>(path: &str, parsed: brank::Result<T>) -> Result<T, Failure> {
    parsed.map_err(|e| match e {
        Error::Parse { field, reason } => Failure::Input(format!("{path}: field `{field}`: {reason}")),
        other => other.into(),
    })
}

fn parse_vector(s: &str) -> Result<Vec<Rat>, Failure> {
    s.split(',')
        .enumerate()
        .map(|(n, x)| parse_rat(x.trim()).map_err(|e| Failure::Input(format!("field `vector[{n}]`: {e}"))))
        .collect()
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn execute(command: &Command) -> Result<Report, Failure> {
    let report = match command {
        Command::MmBound { n } => {
            let b = mm_bound_pipeline(*n)?;
            Report {
                command: "mm-bound".into(),
                inputs: json!({ "n": n }),
                results: to_value(&b),
                certificate: Value::Null,
            }
        }
        Command::KoszulBound { tensor, p, restrict } => {
            let t = in_file(tensor, io::parse_tensor(&read(tensor)?))?;
            let r = match restrict {
                Some(path) => Some(in_file(path, io::parse_matrix(&read(path)?))?),
                None => None,
            };
            let b = koszul_bound(&t, *p, r.as_ref(), tensor)?;
            Report {
                command: "koszul-bound".into(),
                inputs: json!({ "tensor": tensor, "p": p, "restrict": restrict }),
                results: to_value(&b),
                certificate: Value::Null,
            }
        }
        Command::VerifyLimit { curves, target } => {
            let f = in_file(curves, io::parse_curves(&read(curves)?))?;
            let t = in_file(target, io::parse_tensor(&read(target)?))?;
            let v = verify_algorithm(&f, &t)?;
            Report {
                command: "verify-limit".into(),
                inputs: json!({ "curves": curves, "target": target }),
                results: json!({ "r": v.r, "e0_dim": v.e0_dim, "contains_target": v.contains_target }),
                certificate: to_value(&v.certificate),
            }
        }
        Command::SchemeLimit { points } => {
            let p = in_file(points, io::parse_points(&read(points)?))?;
            let s = local_hilbert_report(&p)?;
            Report {
                command: "scheme-limit".into(),
                inputs: json!({ "points": points }),
                results: to_value(&SchemeReportJson::from(&s)),
                certificate: Value::Null,
            }
        }
        Command::Cw { q } => {
            let t = cw_tensor(*q)?;
            let family = cw_curves(*q)?;
            let v = verify_algorithm(&family, &t)?;
            let combination = laurent_combination_limit(&cw_coefficients(*q), &family)?;
            let ranks = flattening_ranks(&t);
            let koszul = koszul_bound(&t, 1, None, &format!("cw{q}"))?;
            let lower = ranks.iter().copied().max().unwrap_or(0).max(koszul.bound);
            Report {
                command: "cw".into(),
                inputs: json!({ "q": q }),
                results: json!({
                    "r": v.r,
                    "e0_dim": v.e0_dim,
                    "contains_target": v.contains_target,
                    "combination_limit_equals_target": combination == t,
                    "flattening_ranks": ranks,
                    "koszul": to_value(&koszul),
                    "lower_bound": lower,
                    "upper_bound": if v.contains_target { Some(v.r) } else { None },
                }),
                certificate: json!({
                    "limit_plane": to_value(&v.certificate),
                    "coefficients": cw_coefficients(*q).iter().map(io::poly_json).collect::<Vec<_>>(),
                }),
            }
        }
        Command::Reduce {
            tensor,
            factor,
            vector,
            out,
        } => {
            let t = in_file(tensor, io::parse_tensor(&read(tensor)?))?;
            let a = parse_vector(vector)?;
            let projected = project_factor(&t, *factor, &a)?;
            let text = io::write_tensor(&projected);
            if let Some(path) = out {
                fs::write(path, &text).map_err(|e| Failure::Input(format!("cannot write `{path}`: {e}")))?;
            }
            Report {
                command: "reduce".into(),
                inputs: json!({ "tensor": tensor, "factor": factor.to_string(), "vector": vector }),
                results: json!({
                    "dropped_coordinate": dropped_coordinate(&a),
                    "tensor": serde_json::from_str::<Value>(&text).expect("valid json"),
                }),
                certificate: Value::Null,
            }
        }
    };
    Ok(report)
}

/// Runs the program on `args` (program name first) and returns the exit
/// status with the text for standard output and standard error.
fn run(args: &[String]) -> (u8, String, String) {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, String::new(), e.render().to_string());
        }
    };
    if let Some(k) = cli.threads {
        if k == 0 {
            return (1, String::new(), "error: --threads must be at least 1\n".into());
        }
        // a second initialisation (tests running in one process) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    match execute(&cli.command) {
        Ok(report) => {
            let text = if cli.human {
                serde_json::to_string_pretty(&report)
            } else {
                serde_json::to_string(&report)
            }
            .expect("report serializes");
            (0, text + "\n", String::new())
        }
        Err(Failure::Input(msg)) => (1, String::new(), format!("error: {msg}\n")),
        Err(Failure::Math(msg)) => (2, String::new(), format!("mathematical failure: {msg}\n")),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (code, out, err) = run(&args);
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code)
}
