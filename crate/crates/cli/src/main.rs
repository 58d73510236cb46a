use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vecpart::exact::parse_rational_vec;
use vecpart::*;

#[derive(Parser)]
#[command(name = "vecpart", version, about = "Exact vector partition functions, volumes and Ehrhart quasi-polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VolumeMode {
    /// {x ≥ 0 : Mx = b}, relative volume.
    Eq,
    /// {x ≥ 0 : Ax ≤ b}.
    Ineq,
}

#[derive(Subcommand)]
enum Command {
    /// Number of nonnegative integer solutions of Mβ = α.
    Count {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Quasi-polynomial of every chamber (s ≤ 2) or of the chamber of a witness.
    Formula {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        witness: Option<String>,
    },
    /// Chambers of the column arrangement (s ≤ 2).
    Chambers {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// The characters θ with spanning M_θ.
    Characters {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Exact polytope volume.
    Volume {
        #[arg(long, value_enum)]
        mode: VolumeMode,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        b: String,
    },
    /// Ehrhart quasi-polynomial of {β ≥ 0 : Mβ = b}.
    Ehrhart {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        b: String,
    },
    /// Volume of the Pitman–Stanley polytope, computed two ways.
    PitmanStanley {
        #[arg(long)]
        x: String,
    },
    /// Number of ways to write n as ax + by with x, y ≥ 0.
    Popoviciu {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n: u64,
    },
}

/// An error with its exit code: 1 for violated preconditions, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read_matrix(path: &Path) -> CliResult<IntMatrix> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        // well-formed JSON that fails validation is a domain error
        let code = if e.is_data() { 1 } else { 2 };
        Failure { code, message: format!("{}: {e}", path.display()) }
    })
}

fn parse_ints(s: &str) -> CliResult<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("not an integer: {t:?}")))).collect()
}

fn ints_to_rat(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// `t(α|M)` through the chamber formulas. On a wall shared by two chambers
/// both are evaluated and must agree.
fn count_by_formula(m: &IntMatrix, alpha: &[i64]) -> CliResult<u64> {
    let a = ints_to_rat(alpha);
    let chambers = if m.s() <= 2 {
        enumerate_chambers(m)?.into_iter().filter(|c| in_closure(&a, c)).take(2).collect()
    } else {
        match nearby_chamber(&a, m) {
            Ok(c) => vec![c],
            Err(Error::OutsideCone) => Vec::new(),
            Err(e) => return Err(e.into()),
        }
    };
    let mut value = None;
    for c in &chambers {
        let v = evaluate_quasi(&quasi_formula(m, c)?, alpha)?;
        if let Some(prev) = value {
            if prev != v {
                return Err(Error::Mismatch(format!("chambers on a shared wall disagree: {prev} vs {v}")).into());
            }
        }
        value = Some(v);
    }
    // no chamber closure contains α exactly when α lies outside cone(M)
    Ok(value.unwrap_or(0))
}

fn run(cli: Cli) -> CliResult<String> {
    let json_out = cli.format == Format::Json;
    let out = match cli.command {
        Command::Count { matrix, alpha, method } => {
            let m = read_matrix(&matrix)?;
            let alpha = parse_ints(&alpha)?;
            if alpha.len() != m.s() {
                return Err(Error::DimensionMismatch { expected: m.s(), found: alpha.len() }.into());
            }
            let count = match method {
                Method::Brute => brute_t(&m, &alpha),
                Method::Formula => count_by_formula(&m, &alpha)?,
                Method::Both => {
                    let (b, f) = (brute_t(&m, &alpha), count_by_formula(&m, &alpha)?);
                    if b != f {
                        return Err(Error::Mismatch(format!("brute force {b}, formula {f}")).into());
                    }
                    b
                }
            };
            if json_out {
                json!({ "alpha": alpha, "count": count }).to_string()
            } else {
                count.to_string()
            }
        }
        Command::Formula { matrix, witness } => {
            let m = read_matrix(&matrix)?;
            let chambers = match witness {
                Some(w) => vec![chamber_of(&parse_rational_vec(&w)?, &m)?],
                None if m.s() <= 2 => enumerate_chambers(&m)?,
                None => return Err(usage("--witness is required when the matrix has more than 2 rows")),
            };
            let fs = chambers.iter().map(|c| quasi_formula(&m, c)).collect::<Result<Vec<_>>>()?;
            if json_out {
                Value::Array(fs.iter().map(QuasiPolynomial::to_json).collect()).to_string()
            } else {
                fs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n").trim_end().to_string()
            }
        }
        Command::Chambers { matrix } => {
            let m = read_matrix(&matrix)?;
            let cs = enumerate_chambers(&m)?;
            if json_out {
                serde_json::to_string(&cs.iter().map(Chamber::to_record).collect::<Vec<_>>()).expect("records serialize")
            } else {
                cs.iter().map(|c| format!("{c}  signs {}", c.sign_string())).collect::<Vec<_>>().join("\n")
            }
        }
        Command::Characters { matrix } => {
            let m = read_matrix(&matrix)?;
            let cs = characters(&m);
            if json_out {
                let rows: Vec<Value> = cs
                    .iter()
                    .map(|c| {
                        json!({
                            "modulus": c.theta.modulus(),
                            "character": c.theta.exponents(),
                            "m_theta": c.theta_columns,
                            "kappa": c.kappa,
                            "r": c.r,
                        })
                    })
                    .collect();
                Value::Array(rows).to_string()
            } else {
                cs.iter()
                    .map(|c| format!("θ = {}  #M_θ = {}  κ = {}  r = {}", c.theta, c.theta_columns.len(), c.kappa, c.r))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::Volume { mode, matrix, b } => {
            let m = read_matrix(&matrix)?;
            let b = parse_rational_vec(&b)?;
            let v = match mode {
                VolumeMode::Eq => volume_eq(&m, &b)?,
                VolumeMode::Ineq => volume_ineq(&m, &b)?,
            };
            if json_out {
                json!({ "volume": v.to_string() }).to_string()
            } else {
                v.to_string()
            }
        }
        Command::Ehrhart { matrix, b } => {
            let m = read_matrix(&matrix)?;
            let e = ehrhart(&m, &parse_ints(&b)?)?;
            if json_out {
                serde_json::to_string(&e).expect("table serializes")
            } else {
                e.to_string().trim_end().to_string()
            }
        }
        Command::PitmanStanley { x } => {
            let x = parse_rational_vec(&x)?;
            let (tp, closed) = pitman_stanley(&x)?;
            if json_out {
                json!({ "x": x.iter().map(ToString::to_string).collect::<Vec<_>>(), "truncated_power": tp.to_string(), "closed_form": closed.to_string() })
                    .to_string()
            } else {
                format!("truncated power: {tp}\nclosed form:     {closed}")
            }
        }
        Command::Popoviciu { a, b, n } => {
            let count = popoviciu(a, b, n)?;
            if json_out {
                json!({ "a": a, "b": b, "n": n, "count": count }).to_string()
            } else {
                count.to_string()
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
