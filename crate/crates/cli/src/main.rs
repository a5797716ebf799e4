//! `gfcodes`: analyze linear codes, build the example families, check
//! blocking sets and reproduce the reference tables.
//!
//! Exit codes: 0 ok, 1 reproduction or verification mismatch, 2 input error,
//! 3 enumeration budget exceeded.

mod analyze;
mod blocking;
mod construct;
mod load;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gfcodes::reproduce::{reproduce, Target};
use gfcodes::Budget;

#[derive(Parser)]
#[command(name = "gfcodes", version, about = "Generalized Hamming weights and s-minimality of linear codes")]
struct Cli {
    /// Worker threads (output does not depend on this).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight hierarchy, maximum weights and s-minimality of a code.
    Analyze(analyze::Args),
    /// Build a code from one of the constructions.
    Construct(construct::Args),
    /// Check blocking sets or print size bounds.
    Blocking(blocking::Args),
    /// Recompute a reference table and compare it with the stored values.
    Reproduce {
        /// t1, t2, t3, t4, t5, ex4_8, ex8_2, ex8_3 or all.
        target: String,
    },
}

pub enum Failure {
    Mismatch(String),
    Input(String),
    Budget(String),
}

impl From<gfcodes::Error> for Failure {
    fn from(e: gfcodes::Error) -> Self {
        match e {
            gfcodes::Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

fn run_reproduce(target: &str, budget: &Budget, out: &mut dyn Write) -> CliResult {
    let targets: Vec<Target> = if target == "all" { Target::ALL.to_vec() } else { vec![target.parse()?] };
    let mut failed = Vec::new();
    for t in targets {
        let r = reproduce(t, budget)?;
        out.write_all(r.render().as_bytes())?;
        if !r.passed() {
            failed.push(t.name());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("mismatch in {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> CliResult {
    let budget = Budget::from_env();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze(a) => analyze::run(&a, &budget, &mut out),
        Command::Construct(a) => construct::run(&a, &budget, &mut out),
        Command::Blocking(a) => blocking::run(&a, &budget, &mut out),
        Command::Reproduce { target } => run_reproduce(&target, &budget, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.workers {
        pool = pool.num_threads(n.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}; raise GFCODES_BUDGET to continue");
            ExitCode::from(3)
        }
    }
}
