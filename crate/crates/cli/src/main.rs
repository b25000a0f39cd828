//! `geomcrystal`: evaluate and verify the D_6^(1) spin-node geometric crystal.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use geomcrystal_core::d6_spin_crystal::{
    act_e_v1, act_e_v2, epsilon_v1, epsilon_v2, gamma_v1, gamma_v2, sigma_bar, sigma_bar_inv,
};
use geomcrystal_core::spin_module::{build_v1, build_v2};
use geomcrystal_core::verifier::{run_suite, DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS};
use geomcrystal_core::{Error, PointV1, PointV2, Rational, SpinBasis, SpinVector};

#[derive(Parser)]
#[command(name = "geomcrystal", version, about = "Positive geometric crystal of D6^(1) at the spin node")]
struct Cli {
    /// Emit JSON for every command (coefficient listings and scalars included).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variety {
    V1,
    V2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Gamma,
    Epsilon,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 32 coefficients of V_1(x) or V_2(y), in basis-index order.
    Expand {
        #[arg(long, value_enum)]
        variety: Variety,
        /// Point JSON file, or `-` for standard input.
        #[arg(long)]
        point: String,
    },
    /// Apply e_k^c and print the new point.
    Act {
        #[arg(long, value_enum)]
        variety: Variety,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long)]
        point: String,
    },
    /// Evaluate γ_k or ε_k.
    Eval {
        #[arg(long = "fn", value_enum)]
        function: Function,
        #[arg(long, value_enum)]
        variety: Variety,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        point: String,
    },
    /// Map a V1 point to V2 through σ̄; the output carries the scalar `a`.
    SigmaBar {
        #[arg(long)]
        point: String,
    },
    /// Map a V2 point back to V1.
    SigmaBarInv {
        #[arg(long)]
        point: String,
    },
    /// Run verification checks and print a JSON report.
    Verify {
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = "GEOMCRYSTAL_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        #[arg(long)]
        include_exploratory: bool,
        /// Report every elapsed time as 0 so repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("verification failed")]
    Verification,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Core(Error::Domain(_)) => 3,
            _ => 2,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn read_json(path: &str) -> Result<Value, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        buf
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?
    };
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

fn read_v1(path: &str) -> Result<PointV1, CliError> {
    Ok(PointV1::from_json(&read_json(path)?)?)
}

fn read_v2(path: &str) -> Result<PointV2, CliError> {
    Ok(PointV2::from_json(&read_json(path)?)?)
}

fn to_json_text<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn expansion_output(vec: &SpinVector, json: bool) -> String {
    if json {
        let map: Map<String, Value> =
            SpinBasis::all().map(|b| (b.to_string(), Value::String(vec.get(b).to_string()))).collect();
        return to_json_text(&Value::Object(map));
    }
    SpinBasis::all()
        .map(|b| format!("{b} {}", vec.get(b)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: Cli) -> Result<String, CliError> {
    let out = match cli.command {
        Command::Expand { variety, point } => {
            let vec = match variety {
                Variety::V1 => build_v1(&read_v1(&point)?)?,
                Variety::V2 => build_v2(&read_v2(&point)?)?,
            };
            expansion_output(&vec, cli.json)
        }
        Command::Act { variety, k, c, point } => match variety {
            Variety::V1 => to_json_text(&act_e_v1(k, &c, &read_v1(&point)?)?),
            Variety::V2 => to_json_text(&act_e_v2(k, &c, &read_v2(&point)?)?),
        },
        Command::Eval { function, variety, k, point } => {
            let value = match (function, variety) {
                (Function::Gamma, Variety::V1) => gamma_v1(k, &read_v1(&point)?)?,
                (Function::Epsilon, Variety::V1) => epsilon_v1(k, &read_v1(&point)?)?,
                (Function::Gamma, Variety::V2) => gamma_v2(k, &read_v2(&point)?)?,
                (Function::Epsilon, Variety::V2) => epsilon_v2(k, &read_v2(&point)?)?,
            };
            if cli.json {
                to_json_text(&value)
            } else {
                value.to_string()
            }
        }
        Command::SigmaBar { point } => {
            let (y, a) = sigma_bar(&read_v1(&point)?)?;
            let mut obj = y.coords_json();
            obj.insert("a".into(), Value::String(a.to_string()));
            to_json_text(&Value::Object(obj))
        }
        Command::SigmaBarInv { point } => to_json_text(&sigma_bar_inv(&read_v2(&point)?)?),
        Command::Verify { suite, trials, seed, bound, include_exploratory, no_timing } => {
            let mut report = run_suite(&suite, trials, seed, bound, include_exploratory)?;
            if no_timing {
                report.strip_timing();
            }
            let text = to_json_text(&report);
            if !report.pass {
                println!("{text}");
                return Err(CliError::Verification);
            }
            text
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not worth reporting
            let _ = writeln!(stdout, "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("geomcrystal: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
