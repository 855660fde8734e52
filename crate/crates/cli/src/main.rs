use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use wps_cli::{exit, run_survey, run_verify, Filter, Format};
use wps_core::arith::format_rational;
use wps_core::{
    classify, dedekind_cotangent_float, dedekind_sum, dedekind_sum_bruteforce, Weights,
};

/// Exact invariants, Einstein obstructions and Yamabe bounds for weighted
/// projective planes CP^2(r,q,p).
#[derive(Debug, Parser)]
#[command(name = "wps", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one weight triple (r <= q <= p, pairwise coprime).
    Classify {
        r: String,
        q: String,
        p: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// Exact Dedekind sum s(q, p).
    #[command(allow_negative_numbers = true)]
    Dedekind {
        q: String,
        p: String,
        /// Use the O(p) sawtooth sum instead of the reciprocity algorithm.
        #[arg(long)]
        brute: bool,
        /// Also print the floating cotangent sum and its distance to the exact value.
        #[arg(long)]
        check: bool,
    },
    /// Classify every valid triple with p <= max-p.
    Survey {
        #[arg(long)]
        max_p: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Keep only records with this Einstein status or conformal regime.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Check the exact identities on pseudorandom inputs.
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = wps_cli::verify::DEFAULT_MAX_INT)]
        max_int: u64,
    },
}

fn parse_int(name: &str, s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{name}: {s:?} is not an integer"))
}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(exit::INVALID_INPUT)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(exit::INVALID_INPUT);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => invalid(e),
    }
}

fn run(command: Command) -> io::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Classify {
            r,
            q,
            p,
            format,
            json,
        } => {
            let parsed = (|| {
                Ok::<_, String>((
                    parse_int("r", &r)?,
                    parse_int("q", &q)?,
                    parse_int("p", &p)?,
                ))
            })();
            let (r, q, p) = match parsed {
                Ok(t) => t,
                Err(msg) => return Ok(invalid(msg)),
            };
            let w = match Weights::new(r, q, p) {
                Ok(w) => w,
                Err(e) => return Ok(invalid(e)),
            };
            let format = if json { Format::Json } else { format };
            wps_cli::format::write_classification(&classify(&w), format, &mut out)?;
        }
        Command::Dedekind { q, p, brute, check } => {
            let (q, p) = match (parse_int("q", &q), parse_int("p", &p)) {
                (Ok(q), Ok(p)) => (q, p),
                (Err(msg), _) | (_, Err(msg)) => return Ok(invalid(msg)),
            };
            let exact = if brute {
                dedekind_sum_bruteforce(&q, &p)
            } else {
                dedekind_sum(&q, &p)
            };
            let exact = match exact {
                Ok(v) => v,
                Err(e) => return Ok(invalid(e)),
            };
            writeln!(out, "{}", format_rational(&exact))?;
            if check {
                match dedekind_cotangent_float(&q, &p) {
                    Ok(f) => {
                        let diff = (f - exact.to_f64().unwrap_or(f64::NAN)).abs();
                        writeln!(out, "cotangent {f:.17e}")?;
                        writeln!(out, "abs_diff {diff:.3e}")?;
                    }
                    Err(e) => return Ok(invalid(e)),
                }
            }
        }
        Command::Survey {
            max_p,
            format,
            filter,
        } => {
            if max_p < 1 {
                return Ok(invalid("--max-p must be at least 1"));
            }
            let filter = match filter.as_deref().map(|name| (name, Filter::parse(name))) {
                None => None,
                Some((_, Some(f))) => Some(f),
                Some((name, None)) => {
                    return Ok(invalid(format!(
                        "unknown filter {name:?}; expected one of {}",
                        Filter::names().join(", ")
                    )))
                }
            };
            let summary = run_survey(max_p, format, filter, &mut out)?;
            out.flush()?;
            summary.write_histogram(&mut io::stderr())?;
        }
        Command::Verify {
            samples,
            seed,
            max_int,
        } => {
            if samples < 1 {
                return Ok(invalid("--samples must be at least 1"));
            }
            let report = run_verify(samples, seed, max_int);
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            if !report.passed() {
                eprintln!("verification failed: {} failure(s)", report.failures.len());
                return Ok(ExitCode::from(exit::VERIFICATION_FAILED));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
