//! `okc`: run the exact-arithmetic computations and verification suites
//! from the command line.
//!
//! Exit codes: 0 = all checks pass, 1 = a mathematical identity failed,
//! 2 = input or usage error. JSON (`--json`) is the canonical machine
//! format; the text output is rendered from the same data.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use okc_core::comparison::{verify_fundamental_triangle, CompleteIntersection};
use okc_core::divisor::{sample_config, verify_divclass, verify_recursion, SncConfig, SncConfigFile};
use okc_core::fgl::{support_decompose, FormalGroupLaw};
use okc_core::json;
use okc_core::lazard::{lazard_truncation, universal_fgl};
use okc_core::proj::MultiProj;

mod render;

/// Desk-scale caps; `OKC_MAX_TRUNC` raises them.
const LAZARD_DEFAULT_CAP: usize = 8;
const LAZARD_WARN_ABOVE: usize = 6;
const SERIES_DEFAULT_CAP: usize = 16;

#[derive(Parser)]
#[command(name = "okc", version, about = "Exact formal group law and K-theory model calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the truncated universal coefficient ring degree by degree.
    Lazard(LazardArgs),
    /// Formal group law computations.
    #[command(subcommand)]
    Fgl(FglCommand),
    /// SNC divisor-class verification.
    #[command(subcommand)]
    Divclass(DivclassCommand),
    /// Fundamental-class comparisons.
    #[command(subcommand)]
    Compare(CompareCommand),
}

#[derive(Args)]
struct LazardArgs {
    /// Truncation degree N (ranks reported for degrees 0..-N).
    #[arg(long, value_name = "N")]
    max_degree: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Law {
    Mult,
    Add,
    Universal,
}

#[derive(Args)]
struct FglArgs {
    #[arg(long, value_enum)]
    law: Law,
    /// Series truncation degree.
    #[arg(long, default_value_t = 6)]
    trunc: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum FglCommand {
    /// The n-series [n]u.
    Nseries {
        #[command(flatten)]
        common: FglArgs,
        #[arg(short, allow_negative_numbers = true)]
        n: i64,
    },
    /// The multi-sum [n1]u1 +_F ... +_F [nr]ur.
    Multisum {
        #[command(flatten)]
        common: FglArgs,
        /// Multiplicities n1 .. nr.
        #[arg(required = true, allow_negative_numbers = true)]
        multiplicities: Vec<i64>,
    },
    /// The support decomposition G_I of a multi-sum.
    Decompose {
        #[command(flatten)]
        common: FglArgs,
        #[arg(required = true, allow_negative_numbers = true)]
        multiplicities: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum DivclassCommand {
    /// Verify the divisor-class formula and its recursion.
    Verify {
        /// JSON config: {"dims":[...],"components":[{"multidegree":[...],"multiplicity":n},...]}.
        #[arg(long)]
        config: Option<String>,
        /// Number of random desk-scale configs to verify instead.
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CompareCommand {
    /// Fundamental-class triangle for a complete intersection.
    Fundclass {
        /// Ambient dimensions, comma separated (e.g. "2" or "1,2").
        #[arg(long)]
        dims: String,
        /// One multidegree per hypersurface, comma separated; repeat for
        /// several hypersurfaces.
        #[arg(long = "degrees", value_name = "MULTIDEGREE")]
        degrees: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn env_cap(default: usize) -> usize {
    match std::env::var("OKC_MAX_TRUNC") {
        Ok(v) => v.parse::<usize>().map(|c| c.max(default)).unwrap_or(default),
        Err(_) => default,
    }
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Lazard(args) => cmd_lazard(args),
        Command::Fgl(cmd) => cmd_fgl(cmd),
        Command::Divclass(DivclassCommand::Verify {
            config,
            trials,
            seed,
            json,
        }) => cmd_divclass(config, trials, seed, json),
        Command::Compare(CompareCommand::Fundclass { dims, degrees, json }) => {
            cmd_compare(&dims, &degrees, json)
        }
    }
}

fn cmd_lazard(args: LazardArgs) -> Result<bool, String> {
    let cap = env_cap(LAZARD_DEFAULT_CAP);
    if args.max_degree < 1 || args.max_degree > cap {
        return Err(format!(
            "--max-degree must lie in 1..={cap} (set OKC_MAX_TRUNC to raise the cap)"
        ));
    }
    if args.max_degree > LAZARD_WARN_ABOVE {
        eprintln!(
            "warning: N = {} is above the desk-scale default of {LAZARD_WARN_ABOVE}; this may take a while",
            args.max_degree
        );
    }
    let ring = lazard_truncation(args.max_degree).map_err(|e| e.to_string())?;
    let value = json::lazard_json(&ring);
    if args.json {
        println!("{}", to_pretty(&value));
    } else {
        render::lazard_table(&value);
    }
    Ok(true)
}

fn build_law(law: Law, trunc: usize) -> Result<FormalGroupLaw, String> {
    let cap = env_cap(SERIES_DEFAULT_CAP);
    if trunc < 1 || trunc > cap {
        return Err(format!(
            "--trunc must lie in 1..={cap} (set OKC_MAX_TRUNC to raise the cap)"
        ));
    }
    let law = match law {
        Law::Mult => FormalGroupLaw::multiplicative(trunc),
        Law::Add => FormalGroupLaw::additive(trunc),
        Law::Universal => universal_fgl(trunc),
    };
    law.map_err(|e| e.to_string())
}

fn law_name(law: Law) -> &'static str {
    match law {
        Law::Mult => "mult",
        Law::Add => "add",
        Law::Universal => "universal",
    }
}

fn cmd_fgl(cmd: FglCommand) -> Result<bool, String> {
    match cmd {
        FglCommand::Nseries { common, n } => {
            let law = build_law(common.law, common.trunc)?;
            let series = law.n_series(n);
            let value = serde_json::json!({
                "law": law_name(common.law),
                "trunc": common.trunc,
                "n": n,
                "series": json::series_json(&series),
                "display": series.to_string(),
            });
            if common.json {
                println!("{}", to_pretty(&value));
            } else {
                println!("[{n}]u = {series}");
            }
            Ok(true)
        }
        FglCommand::Multisum {
            common,
            multiplicities,
        } => {
            let law = build_law(common.law, common.trunc)?;
            let series = law.multi_sum(&multiplicities).map_err(|e| e.to_string())?;
            let value = serde_json::json!({
                "law": law_name(common.law),
                "trunc": common.trunc,
                "multiplicities": multiplicities,
                "series": json::series_json(&series),
                "display": series.to_string(),
            });
            if common.json {
                println!("{}", to_pretty(&value));
            } else {
                println!("F_{multiplicities:?} = {series}");
            }
            Ok(true)
        }
        FglCommand::Decompose {
            common,
            multiplicities,
        } => {
            let law = build_law(common.law, common.trunc)?;
            let series = law.multi_sum(&multiplicities).map_err(|e| e.to_string())?;
            let decomposition = support_decompose(&series).map_err(|e| e.to_string())?;
            let value = serde_json::json!({
                "law": law_name(common.law),
                "trunc": common.trunc,
                "multiplicities": multiplicities,
                "series": json::series_json(&series),
                "parts": json::decomposition_json(&decomposition)["parts"],
            });
            if common.json {
                println!("{}", to_pretty(&value));
            } else {
                println!("F_{multiplicities:?} = {series}");
                render::decomposition_table(&value["parts"]);
            }
            Ok(true)
        }
    }
}

fn cmd_divclass(
    config_path: Option<String>,
    trials: u64,
    seed: u64,
    json_out: bool,
) -> Result<bool, String> {
    match config_path {
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            let file: SncConfigFile =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            let config = SncConfig::from_file(&file).map_err(|e| e.to_string())?;
            if config.has_empty_deep_strata() {
                eprintln!(
                    "warning: more components than the ambient dimension; deeper strata are empty"
                );
            }
            let result = verify_divclass(&config).map_err(|e| e.to_string())?;
            let recursion = verify_recursion(&config).map_err(|e| e.to_string())?;
            let verified = result.verified && recursion.verified;
            let value = json::divisor_report_json(&config, &result, Some(&recursion));
            if json_out {
                println!("{}", to_pretty(&value));
            } else {
                render::divisor_report(&value);
            }
            Ok(verified)
        }
        None => {
            if trials == 0 {
                return Err("give --config PATH, or --trials N for random verification".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut failures = Vec::new();
            for trial in 0..trials {
                let config = sample_config(&mut rng);
                let result = verify_divclass(&config).map_err(|e| e.to_string())?;
                let recursion = verify_recursion(&config).map_err(|e| e.to_string())?;
                if !(result.verified && recursion.verified) {
                    failures.push(serde_json::json!({
                        "trial": trial,
                        "config": {
                            "dims": config.ambient().dims(),
                            "components": config.components(),
                        },
                        "divclass_verified": result.verified,
                        "recursion_verified": recursion.verified,
                    }));
                }
            }
            let verified = failures.is_empty();
            let value = serde_json::json!({
                "mode": "random",
                "trials": trials,
                "seed": seed,
                "verified": trials - failures.len() as u64,
                "failures": failures,
            });
            if json_out {
                println!("{}", to_pretty(&value));
            } else {
                println!(
                    "verified {}/{} seeded configs (seed {})",
                    value["verified"], trials, seed
                );
                if !verified {
                    println!("failures: {}", to_pretty(&value["failures"]));
                }
            }
            Ok(verified)
        }
    }
}

fn cmd_compare(dims: &str, degrees: &[String], json_out: bool) -> Result<bool, String> {
    let dims = parse_u32_list(dims)?;
    let ambient = MultiProj::new(dims).map_err(|e| e.to_string())?;
    let degrees = degrees
        .iter()
        .map(|d| parse_u32_list(d))
        .collect::<Result<Vec<_>, _>>()?;
    let x = CompleteIntersection::new(ambient, degrees).map_err(|e| e.to_string())?;
    let report = verify_fundamental_triangle(&x);
    let value = json::triangle_report_json(&x, &report);
    if json_out {
        println!("{}", to_pretty(&value));
    } else {
        render::triangle_report(&value);
    }
    Ok(report.verified)
}

fn parse_u32_list(text: &str) -> Result<Vec<u32>, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid number in list: {part:?}"))
        })
        .collect()
}

fn to_pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
