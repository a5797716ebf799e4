use std::io::Write;

use clap::{Subcommand, ValueEnum};
use gfcodes::blocking::{blocking_bounds, is_cutting_s_blocking, is_t_fold_s_blocking, min_length_bound};
use gfcodes::Budget;

use crate::{load, CliResult};

#[derive(clap::Args)]
pub struct Args {
    #[command(subcommand)]
    pub action: Action,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Complement {
    Spans,
    NotSpans,
    Both,
}

#[derive(Subcommand)]
pub enum Action {
    /// Check a point set against every codimension-s subspace.
    Verify {
        /// Point file (`q k m` header, then m points).
        #[arg(long)]
        points: String,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        s: usize,
        /// Check the cutting property instead of t-fold blocking.
        #[arg(long)]
        cutting: bool,
    },
    /// Lower bounds on the size of t-fold s-blocking sets in PG(k-1, q).
    Bounds {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u32,
        /// Whether the complement of the set spans the whole space.
        #[arg(long, value_enum, default_value = "both")]
        complement: Complement,
    },
}

pub fn run(args: &Args, budget: &Budget, out: &mut dyn Write) -> CliResult {
    match &args.action {
        Action::Verify { points, t, s, cutting } => {
            let b = load::points(points)?;
            let (what, v) = if *cutting {
                (format!("cutting {s}-blocking"), is_cutting_s_blocking(&b, *s, budget)?)
            } else {
                (format!("{t}-fold {s}-blocking"), is_t_fold_s_blocking(&b, *t, *s, budget)?)
            };
            writeln!(out, "{} points in PG({}, {}): {what}: {}", b.len(), b.k() - 1, b.field().q(), v.holds)?;
            if let Some(w) = &v.witness {
                writeln!(out, "witness subspace: {}", load::basis(w))?;
            }
        }
        Action::Bounds { t, s, k, q, complement } => {
            let cases: &[bool] = match complement {
                Complement::Spans => &[true],
                Complement::NotSpans => &[false],
                Complement::Both => &[false, true],
            };
            for &spanning in cases {
                out.write_all(blocking_bounds(*t, *s, *k, *q, spanning)?.render().as_bytes())?;
            }
            let m = min_length_bound(*k, *s, *q)?;
            writeln!(out, "length of a {s}-minimal [n,{k}]_{q} code: n >= {}", m.best())?;
        }
    }
    Ok(())
}
