use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dualtrace::cli::{self, Coefficients};
use dualtrace::laws::{SuiteConfig, EXHAUSTIVE_CAP};

#[derive(Parser)]
#[command(
    name = "dualtrace",
    version,
    about = "Traces in symmetric monoidal categories"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lefschetz number of a simplicial self-map.
    Lefschetz {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// Q, Z or Zp:<p>
        #[arg(long, default_value = "Q")]
        coeff: String,
    },
    /// Fixed-point index and fixed set of an endofunction.
    Fixedpoints {
        #[arg(long = "fn")]
        function: PathBuf,
    },
    /// Trace of the inverse-image map of a monotone endomap on down-sets.
    Alexandrov {
        #[arg(long)]
        space: PathBuf,
        /// Images of the points, e.g. "1 1 0".
        #[arg(long)]
        map: String,
    },
    /// Evaluate a cobordism program.
    Cob1 {
        #[arg(long)]
        program: PathBuf,
        /// Evaluate through the field theory of this dimension.
        #[arg(long)]
        tft: Option<usize>,
    },
    /// Run the trace-law suite on an instance.
    Laws {
        instance: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per law; the enumeration cap with --exhaustive.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        exhaustive: bool,
        /// Directory for failure witnesses.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        #[arg(long, hide = true)]
        corrupt_symmetry: bool,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<(String, bool), String> {
    let ok = |r: dualtrace::Result<String>| r.map(|s| (s, true)).map_err(|e| e.to_string());
    match command {
        Command::Lefschetz {
            complex,
            map,
            coeff,
        } => {
            let coeff: Coefficients = coeff.parse().map_err(|e: dualtrace::Error| e.to_string())?;
            ok(cli::cmd_lefschetz(&read(&complex)?, &read(&map)?, coeff))
        }
        Command::Fixedpoints { function } => ok(cli::cmd_fixedpoints(&read(&function)?)),
        Command::Alexandrov { space, map } => ok(cli::cmd_alexandrov(&read(&space)?, &map)),
        Command::Cob1 { program, tft } => ok(cli::cmd_cob1(&read(&program)?, tft)),
        Command::Laws {
            instance,
            seed,
            cases,
            exhaustive,
            witness_dir,
            corrupt_symmetry,
        } => {
            let defaults = SuiteConfig::default();
            let config = SuiteConfig {
                seed,
                cases: cases.unwrap_or(if exhaustive {
                    EXHAUSTIVE_CAP
                } else {
                    defaults.cases
                }),
                exhaustive,
                corrupted: corrupt_symmetry,
                witness_dir: witness_dir.unwrap_or(defaults.witness_dir),
            };
            cli::cmd_laws(&instance, &config).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
