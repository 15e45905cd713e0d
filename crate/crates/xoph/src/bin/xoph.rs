//! Command-line front end: generate, verify, and inspect recurrence
//! relations for exceptional Hermite polynomials.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 invalid
//! stabilizer, 3 internal invariant breach, 64 usage error.

use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};

use xoph::json::{
    poly_to_json, polydiffop_to_json, ratdiffop_to_json, recurrence_from_json,
    recurrence_to_json, report_to_json, shiftop_to_json,
};
use xoph::render::{
    poly_latex, polydiffop_latex, ratdiffop_latex, relation_latex, relation_text, report_text,
    shiftop_factored_text, shiftop_latex,
};
use xoph::{
    bfa, eta, exceptional_hermite, flat, integer_normalized, is_stabilizer, minimal_stabilizer,
    op_a, op_b, pi, recurrence, verify_recurrence, Error, Partition, XPoly,
};

const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_NOT_STABILIZER: i32 = 2;
const EXIT_INTERNAL: i32 = 3;
const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "xoph",
    version,
    about = "Exact recurrence relations for exceptional Hermite polynomials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Fmt {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// Seed Wronskian eta(x)
    Eta,
    /// Raising operator A
    A,
    /// Lowering operator B
    B,
    /// Exceptional polynomial hhat(n,x); requires --n
    Hhat,
    /// Eigenvalue polynomial pi(n)
    Pi,
    /// Image of B o f o A under the bispectral map
    FlatBfa,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct the relation f(x) hhat(n,x) = sum_k a_k(n) hhat(n+k,x)
    Gen {
        /// Partition as a comma-separated non-decreasing list, e.g. "1,1"
        #[arg(long, default_value = "")]
        partition: String,
        /// Stabilizer: "auto", "auto-int", or coefficients low-to-high
        #[arg(long, default_value = "auto")]
        f: String,
        #[arg(long, value_enum, default_value_t = Fmt::Text)]
        format: Fmt,
    },
    /// Check the relation exactly on all permitted degrees up to --n-max
    Verify {
        #[arg(long, default_value = "")]
        partition: String,
        #[arg(long, default_value = "auto")]
        f: String,
        #[arg(long, default_value_t = 25)]
        n_max: i64,
        /// Verify a recurrence loaded from a JSON file instead of generating
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Fmt::Text)]
        format: Fmt,
    },
    /// Print an intermediate object
    Show {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value = "")]
        partition: String,
        #[arg(long, default_value = "auto")]
        f: String,
        /// Degree for the hhat target
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = Fmt::Text)]
        format: Fmt,
    },
    /// Report whether f lies in the stabilizer ring of the partition
    StabCheck {
        #[arg(long, default_value = "")]
        partition: String,
        #[arg(long, default_value = "auto")]
        f: String,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|_| fail(EXIT_USAGE, format!("cannot parse partition {s:?}")))?;
    Partition::new(parts).map_err(|e| fail(EXIT_USAGE, e.to_string()))
}

fn resolve_f(lam: &Partition, spec: &str) -> Result<XPoly, Failure> {
    match spec.trim() {
        "auto" => Ok(minimal_stabilizer(lam)),
        "auto-int" => Ok(integer_normalized(&minimal_stabilizer(lam))),
        csv => {
            let coeffs: Result<Vec<_>, _> =
                csv.split(',').map(|c| xoph::rat::parse_rat(c)).collect();
            let coeffs =
                coeffs.map_err(|e| fail(EXIT_USAGE, format!("cannot parse --f {csv:?}: {e}")))?;
            let f = XPoly::new(coeffs);
            if f.is_zero() {
                return Err(fail(EXIT_USAGE, "--f must be a nonzero polynomial"));
            }
            Ok(f)
        }
    }
}

fn gen_error(e: Error) -> Failure {
    match e {
        Error::NotAStabilizer => fail(
            EXIT_NOT_STABILIZER,
            "f is not a stabilizer: eta does not divide f'",
        ),
        Error::DenominatorNotCleared => fail(
            EXIT_INTERNAL,
            "internal invariant breach: denominators did not clear",
        ),
        other => fail(EXIT_INTERNAL, other.to_string()),
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Gen {
            partition,
            f,
            format,
        } => {
            let lam = parse_partition(&partition)?;
            let f = resolve_f(&lam, &f)?;
            let rec = recurrence(&lam, &f).map_err(gen_error)?;
            match format {
                Fmt::Text => println!("{}", relation_text(&rec)),
                Fmt::Json => println!("{}", recurrence_to_json(&rec)),
                Fmt::Latex => println!("{}", relation_latex(&rec)),
            }
            Ok(0)
        }
        Cmd::Verify {
            partition,
            f,
            n_max,
            input,
            format,
        } => {
            let rec = match input {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        fail(EXIT_USAGE, format!("cannot read {}: {e}", path.display()))
                    })?;
                    recurrence_from_json(&text)
                        .map_err(|e| fail(EXIT_USAGE, e.to_string()))?
                }
                None => {
                    let lam = parse_partition(&partition)?;
                    let f = resolve_f(&lam, &f)?;
                    recurrence(&lam, &f).map_err(gen_error)?
                }
            };
            let report = verify_recurrence(&rec, n_max);
            match format {
                Fmt::Json => println!("{}", report_to_json(&report)),
                _ => println!("{}", report_text(&report)),
            }
            Ok(if report.verified() {
                0
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Cmd::Show {
            target,
            partition,
            f,
            n,
            format,
        } => {
            let lam = parse_partition(&partition)?;
            let out = match target {
                Target::Eta => render_poly(&eta(&lam), format),
                Target::Pi => render_poly(&pi(&lam), format),
                Target::Hhat => {
                    let n = n.ok_or_else(|| {
                        fail(EXIT_USAGE, "show hhat requires --n <degree>")
                    })?;
                    render_poly(&exceptional_hermite(&lam, n), format)
                }
                Target::A => {
                    let a = op_a(&lam);
                    match format {
                        Fmt::Text => a.to_string(),
                        Fmt::Json => polydiffop_to_json(&a),
                        Fmt::Latex => polydiffop_latex(&a),
                    }
                }
                Target::B => {
                    let b = op_b(&lam);
                    match format {
                        Fmt::Text => b.to_string(),
                        Fmt::Json => ratdiffop_to_json(&b),
                        Fmt::Latex => ratdiffop_latex(&b),
                    }
                }
                Target::FlatBfa => {
                    let f = resolve_f(&lam, &f)?;
                    if !is_stabilizer(&lam, &f) {
                        return Err(fail(
                            EXIT_NOT_STABILIZER,
                            "f is not a stabilizer: eta does not divide f'",
                        ));
                    }
                    let image = flat(&bfa(&lam, &f).map_err(gen_error)?);
                    match format {
                        Fmt::Text => shiftop_factored_text(&image),
                        Fmt::Json => shiftop_to_json(&image),
                        Fmt::Latex => shiftop_latex(&image),
                    }
                }
            };
            println!("{out}");
            Ok(0)
        }
        Cmd::StabCheck { partition, f } => {
            let lam = parse_partition(&partition)?;
            let f = resolve_f(&lam, &f)?;
            let e = eta(&lam);
            let ok = is_stabilizer(&lam, &f);
            println!(
                "partition {} : N = {}, l = {}, K = {:?}, even = {}",
                lam,
                lam.weight(),
                lam.len(),
                lam.k_values(),
                lam.is_even()
            );
            println!("eta(x) = {e}");
            println!("f(x)   = {f}");
            println!("f'(x)  = {}", f.derivative());
            println!("stabilizer: {}", if ok { "yes" } else { "no" });
            Ok(if ok { 0 } else { EXIT_NOT_STABILIZER })
        }
    }
}

fn render_poly<V: xoph::poly::Variable>(p: &xoph::Poly<V>, format: Fmt) -> String {
    match format {
        Fmt::Text => p.to_string(),
        Fmt::Json => poly_to_json(p),
        Fmt::Latex => poly_latex(p),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            exit(code);
        }
    };
    match run(cli) {
        Ok(code) => exit(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            exit(f.code);
        }
    }
}
