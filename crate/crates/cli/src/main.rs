use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperpolar_cli::{run_analyze, run_catalog, run_verify, Outcome, Suite, DEFAULT_SEED, EXIT_INPUT};
use hyperpolar_core::liealg::Tolerance;

/// Hyperpolarity and cohomogeneity of isometric actions on products of
/// compact symmetric spaces.
///
/// Exit status: 0 success, 1 verification failure, 2 invalid input,
/// 3 inconclusive hyperpolarity verdict.
#[derive(Parser)]
#[command(name = "hyperpolar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in algebras and embeddings.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Analyze the action described by a spec file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Relative tolerance, optionally followed by an absolute one: `1e-8` or `1e-8,1e-10`.
        #[arg(long)]
        tol: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a built-in verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table1,
    Section7,
    Section9,
    All,
}

fn parse_tol(s: &str) -> Result<Tolerance, String> {
    let nums: Vec<f64> = s
        .split(',')
        .map(|w| w.trim().parse::<f64>().map_err(|_| format!("`{w}` is not a number")))
        .collect::<Result<_, _>>()?;
    let t = match nums.as_slice() {
        [rel] => Tolerance::new(*rel, (*rel * 1e-2).min(Tolerance::default().abs_eps)),
        [rel, abs] => Tolerance::new(*rel, *abs),
        _ => return Err("--tol takes one or two comma-separated numbers".into()),
    };
    t.map_err(|e| e.to_string())
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Catalog { json } => run_catalog(json),
        Command::Analyze { file, seed, tol, json } => {
            let tol = match tol.as_deref().map(parse_tol).transpose() {
                Ok(t) => t,
                Err(e) => return error(e),
            };
            match std::fs::read_to_string(&file) {
                Ok(text) => run_analyze(&text, seed, tol, json),
                Err(e) => error(format!("{}: {e}", file.display())),
            }
        }
        Command::Verify { suite, seed, json } => {
            let suite = match suite {
                SuiteArg::Table1 => Suite::Table1,
                SuiteArg::Section7 => Suite::Section7,
                SuiteArg::Section9 => Suite::Section9,
                SuiteArg::All => Suite::All,
            };
            run_verify(suite, seed, json)
        }
    }
}

fn error(msg: impl std::fmt::Display) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_INPUT }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let out = dispatch(cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
