use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vkf::harness::{
    compute_invariant, moment_curve_configuration, parse_face, run_verification, sample_configuration, ConfigFile,
    InvariantKind, InvariantRequest, RunConfig, Statement, DEFAULT_BOUND,
};
use vkf::Error;

#[derive(Parser)]
#[command(name = "vkf", version, about = "Mod-2 van Kampen / Conway-Gordon-Sachs invariants and seeded verification runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded verification suite and write a JSON report.
    Verify {
        #[arg(long)]
        statement: Statement,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        #[arg(long, default_value_t = vkf::constructions::DEFAULT_EPSILON_EXPONENT)]
        epsilon_exponent: u32,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        verbose: bool,
    },
    /// Evaluate one invariant of a configuration file.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        invariant: InvariantKind,
        /// Comma-separated vertex list, for `lk`.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long)]
        tau: Option<String>,
        /// Skeleton dimension for `v-skeleton`.
        #[arg(long)]
        skeleton: Option<usize>,
        #[arg(long)]
        verbose: bool,
    },
    /// Print a random general-position configuration.
    Sample {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Print a named fixture configuration.
    Fixture {
        #[arg(long)]
        name: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        points: usize,
    },
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::RetryCapExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { statement, dim, trials, seed, bound, epsilon_exponent, workers, out, verbose } => {
            let rc = match RunConfig::new(statement, dim, trials, seed) {
                Ok(rc) => rc.with_bound(bound).with_epsilon_exponent(epsilon_exponent).with_workers(workers).with_verbose(verbose),
                Err(e) => return fail(&e),
            };
            let report = match run_verification(&rc) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            let json = report.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, json + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{json}"),
            }
            let passed = report.trials.iter().filter(|t| t.pass).count();
            eprintln!("{statement} d={dim}: {passed}/{trials} trials passed in {:.2?}", report.duration);
            if report.retry_cap_exceeded() {
                ExitCode::from(3)
            } else if report.aggregate_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Compute { input, invariant, sigma, tau, skeleton, verbose } => {
            let text = match fs::read_to_string(&input) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", input.display());
                    return ExitCode::from(2);
                }
            };
            let request = match invariant {
                InvariantKind::V => InvariantRequest::V,
                InvariantKind::VSkeleton => InvariantRequest::VSkeleton(skeleton),
                InvariantKind::C => InvariantRequest::C,
                InvariantKind::Mixed => InvariantRequest::Mixed,
                InvariantKind::Lk => {
                    let (Some(s), Some(t)) = (sigma, tau) else {
                        eprintln!("error: lk needs --sigma and --tau");
                        return ExitCode::from(2);
                    };
                    match (parse_face(&s), parse_face(&t)) {
                        (Ok(s), Ok(t)) => InvariantRequest::Lk(s, t),
                        (Err(e), _) | (_, Err(e)) => return fail(&e),
                    }
                }
            };
            match ConfigFile::from_json(&text).and_then(|file| compute_invariant(&file, &request, verbose)) {
                Ok(value) => {
                    println!("{value}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Sample { dim, points, seed, bound } => match sample_configuration(dim, points, bound, seed) {
            Ok(cfg) => {
                println!("{}", ConfigFile::Points(cfg).to_json());
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Fixture { name, dim, points } => {
            if name != "moment-curve" {
                eprintln!("error: unknown fixture {name:?} (available: moment-curve)");
                return ExitCode::from(2);
            }
            match moment_curve_configuration(dim, points) {
                Ok(cfg) => {
                    println!("{}", ConfigFile::Points(cfg).to_json());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
    }
}
