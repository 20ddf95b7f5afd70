//! `alexzero`: command-line access to words, polynomials, zeros,
//! certificates and sweeps. Results go to stdout as JSON.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 usage, input or
//! I/O error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use alexzero::stability::BlockTheorem;
use alexzero::*;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const JOBS_ENV: &str = "ALEXZERO_JOBS";

#[derive(Parser)]
#[command(name = "alexzero", version, about = "Zeros of Alexander polynomials of two-bridge knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Even continued fraction of β/α.
    Expand {
        #[arg(long, value_name = "B/A")]
        frac: String,
    },
    /// Alexander polynomial of a word.
    Poly {
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        cf: CfWord,
    },
    /// Zeros of the Alexander polynomial.
    Zeros {
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        cf: CfWord,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Lyapunov certificate for a bound on the real parts.
    Certify {
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        cf: CfWord,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, value_name = "K")]
        bound: String,
        #[arg(long, value_enum, default_value_t = VArg::Identity)]
        v: VArg,
    },
    /// Checks one theorem on one word.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        theorem: u8,
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        cf: CfWord,
    },
    /// Family report for r(m, c).
    Family {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        c: i64,
        /// Also report the largest zero of P_2m for c = 1.
        #[arg(long)]
        remark2: bool,
    },
    /// Every word up to a length and entry bound, written as JSONL.
    Sweep {
        #[arg(long)]
        max_m: usize,
        #[arg(long)]
        max_a: i64,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; `ALEXZERO_JOBS` takes precedence.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// CSV of every zero with columns re,im,cf.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Copy, ValueEnum)]
enum VArg {
    Identity,
    DiagA,
}

/// Command outcome: the JSON to print and whether every check passed.
struct Outcome {
    value: Value,
    ok: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.value).expect("serializable");
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant { .. } | Error::RootCheck(_) | Error::NoConvergence(_) => 1,
        _ => 2,
    }
}

fn zeros_json(zs: &[Complex64]) -> Value {
    json!(zs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Expand { frac } => expand(&frac),
        Command::Poly { cf } => {
            let delta = alexander_poly(&cf);
            Ok(Outcome::ok(json!({
                "cf": cf,
                "delta": delta.to_string(),
                "coeffs": delta.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "normalized": normalized_alexander(&delta).to_string(),
                "flags": classify(&cf),
            })))
        }
        Command::Zeros { cf, tol } => {
            let zs = find_zeros(&alexander_poly(&cf), tol)?;
            Ok(Outcome::ok(json!({
                "cf": cf,
                "zeros": zeros_json(zs.zeros()),
                "report": zero_report(&zs),
            })))
        }
        Command::Certify { cf, side, bound, v } => {
            let b = parse_rational(&bound)?;
            let side = match side {
                Side::Lower => BoundSide::Lower(b),
                Side::Upper => BoundSide::Upper(b),
            };
            let v = match v {
                VArg::Identity => VChoice::Identity,
                VArg::DiagA => VChoice::DiagA,
            };
            let cert = lyapunov_certificate(&cf, side, v)?;
            let mut value = cert.to_json();
            value["cf"] = json!(cf);
            Ok(Outcome::ok(value))
        }
        Command::Verify { theorem, cf } => verify(theorem, &cf),
        Command::Family { m, c, remark2 } => {
            let report = theorem5_verify(m, c)?;
            let mut value = serde_json::to_value(&report).expect("serializable");
            if remark2 {
                value["remark2"] = json!(remark2_extremal(m)?);
            }
            Ok(Outcome { value, ok: report.checks.all() })
        }
        Command::Sweep { max_m, max_a, out, jobs, plot } => sweep(max_m, max_a, &out, jobs, plot.as_deref()),
    }
}

fn expand(frac: &str) -> Result<Outcome> {
    let bad = || Error::InvalidArgument(format!("expected B/A with integers, got {frac:?}"));
    let (b, a) = frac.split_once('/').ok_or_else(bad)?;
    let beta: BigInt = b.trim().parse().map_err(|_| bad())?;
    let alpha: BigInt = a.trim().parse().map_err(|_| bad())?;
    let ((nb, na), mirrored) = normalize_fraction(&beta, &alpha)?;
    let w = even_cf_expand(&nb, &na)?;
    Ok(Outcome::ok(json!({
        "fraction": format!("{beta}/{alpha}"),
        "expanded": format!("{nb}/{na}"),
        "mirrored": mirrored,
        "cf": w,
        "even_cf": w.a().iter().map(|x| 2 * x).collect::<Vec<_>>(),
    })))
}

fn verify(theorem: u8, w: &CfWord) -> Result<Outcome> {
    let zs = find_zeros(&alexander_poly(w), DEFAULT_TOL)?;
    let report = zero_report(&zs);
    let mut value = json!({ "theorem": theorem, "cf": w, "min_re": report.min_re, "max_re": report.max_re });
    let ok = match theorem {
        1 => {
            let lower = theorem_blocks(w, BlockTheorem::T1Lower)?.lemma_ok;
            let upper = theorem_blocks(w, BlockTheorem::T1Upper)?.lemma_ok;
            value["blocks_lower"] = json!(lower);
            value["blocks_upper"] = json!(upper);
            lower && upper && report.thm1_ok
        }
        2 => {
            let m = w.len();
            let delta = alexander_poly(w);
            let positive = sturm_real_root_count(&delta, &Endpoint::At(rat_int(0)), &Endpoint::PosInfinity)?;
            let eig = symmetric_companion_eigenvalues(w)?;
            let mut re: Vec<f64> = zs.zeros().iter().map(|z| z.re).collect();
            re.sort_by(f64::total_cmp);
            let gap = re.iter().zip(&eig).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            value["positive_real_zeros"] = json!(positive);
            value["eigenvalues"] = json!(eig);
            value["max_gap"] = json!(gap);
            positive == m && report.all_real && gap < 1e-8
        }
        3 => {
            let blocks = theorem_blocks(w, BlockTheorem::T3)?;
            value["lemma_ok"] = json!(blocks.lemma_ok);
            let mut ok = blocks.lemma_ok && report.hoste_ok;
            if classify(w).thm3_strong {
                let c = lyapunov_certificate(w, BoundSide::Upper(rat_int(3)), VChoice::DiagA)?;
                value["upper3"] = json!(c.certified());
                ok &= c.certified() && report.max_re < 3.0;
            }
            ok
        }
        _ => {
            let ok = theorem4_check(w)?;
            value["hypothesis"] = json!(classify(w).thm4_applicable);
            ok && report.hoste_ok
        }
    };
    value["ok"] = json!(ok);
    Ok(Outcome { value, ok })
}

fn jobs_override(cli_jobs: usize) -> Result<usize> {
    match std::env::var(JOBS_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{JOBS_ENV} must be a positive integer, got {s:?}"))),
        Err(_) => Ok(cli_jobs),
    }
}

fn sweep(max_m: usize, max_a: i64, out: &std::path::Path, jobs: usize, plot: Option<&std::path::Path>) -> Result<Outcome> {
    let cfg = SweepConfig { max_m, max_a, jobs: jobs_override(jobs)? };
    cfg.validate()?;
    let mut writer = BufWriter::new(File::create(out)?);
    let mut plot_writer = plot.map(File::create).transpose()?.map(BufWriter::new);
    let summary = run_sweep(cfg, &mut writer, plot_writer.as_mut().map(|w| w as &mut dyn Write))?;
    let ok = summary.clean() && summary.hoste_violations == 0;
    let mut value = serde_json::to_value(&summary).expect("serializable");
    value["jobs"] = json!(cfg.jobs);
    value["out"] = json!(out.display().to_string());
    Ok(Outcome { value, ok })
}
