use std::io::Write;

use clap::{Subcommand, ValueEnum};
use gfcodes::constructions::{
    ab_violating_extend, cyclic_code, min_padding_ts, pad_with_simplex, paper_example, punctured_simplex, simplex,
    solomon_stiffler, CyclicSpec, SolomonStifflerSpec,
};
use gfcodes::ghw::weight_report;
use gfcodes::io::{emit_code, emit_matrix};
use gfcodes::minimality::{gab_check, is_s_minimal, yes_no};
use gfcodes::{Algorithm, Budget, LinearCode};

use crate::analyze::{Bundle, Format};
use crate::load::{self, List};
use crate::{CliResult, Failure};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    CodeFile,
    Matrix,
    Report,
}

#[derive(clap::Args)]
pub struct Args {
    #[command(subcommand)]
    pub family: Family,
    /// Output file (stdout if omitted).
    #[arg(short, long, global = true)]
    pub output: Option<String>,
    /// Check the minimality claims of the construction before writing.
    #[arg(long, global = true)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "code-file", global = true)]
    pub emit: Emit,
}

#[derive(clap::Args)]
pub struct Source {
    /// Input code file.
    #[arg(long, conflicts_with = "example")]
    pub input: Option<String>,
    /// Built-in example name.
    #[arg(long)]
    pub example: Option<String>,
}

impl Source {
    fn load(&self) -> CliResult<LinearCode> {
        match (&self.input, &self.example) {
            (Some(p), _) => load::code(p),
            (None, Some(n)) => Ok(paper_example(n)?),
            (None, None) => Err(Failure::Input("give --input or --example".into())),
        }
    }
}

#[derive(Subcommand)]
pub enum Family {
    /// Simplex code S_{q,k}.
    Simplex {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
    },
    /// Simplex code with coordinates removed.
    PuncturedSimplex {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        /// Comma-separated coordinates to remove.
        #[arg(long, default_value = "")]
        coords: List,
    },
    /// Solomon-Stiffler code: simplex without disjoint coordinate blocks.
    Ss {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        /// Block sizes, strictly increasing, comma separated.
        #[arg(long)]
        u: List,
    },
    /// Append t copies of the simplex matrix.
    Pad {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t: usize,
    },
    /// Extension that stays s-minimal but fails the Ashikhmin-Barg test.
    Abx {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        s: usize,
    },
    /// Cyclic code from excluded cyclotomic cosets.
    Cyclic {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Leaders of the cosets whose roots form the check polynomial.
        #[arg(long)]
        exclude: List,
    },
    /// A built-in example code.
    Example {
        #[arg(long)]
        name: String,
    },
}

/// The built code and the checks `--verify` runs: levels that must be
/// minimal, and levels that must fail the Ashikhmin-Barg test.
struct Built {
    code: LinearCode,
    minimal: Vec<usize>,
    gab_fails: Vec<usize>,
    note: Option<String>,
}

fn build(f: &Family, budget: &Budget) -> CliResult<Built> {
    let plain = |code: LinearCode| Built { code, minimal: Vec::new(), gab_fails: Vec::new(), note: None };
    Ok(match f {
        Family::Simplex { q, k } => {
            let code = simplex(*q, *k)?;
            Built { minimal: (1..*k).collect(), ..plain(code) }
        }
        Family::PuncturedSimplex { q, k, coords } => {
            let p = punctured_simplex(*q, *k, &coords.0)?;
            Built { minimal: p.guaranteed, ..plain(p.code) }
        }
        Family::Ss { q, k, u } => {
            let ss = solomon_stiffler(&SolomonStifflerSpec::new(*q, *k, u.0.clone())?)?;
            Built { minimal: ss.guaranteed, ..plain(ss.code) }
        }
        Family::Pad { source, t } => {
            let base = source.load()?;
            let r = weight_report(&base, None, budget)?;
            let mut minimal = Vec::new();
            for s in 1..base.k() {
                if min_padding_ts(&r, s)? <= *t {
                    minimal.push(s);
                }
            }
            Built { minimal, ..plain(pad_with_simplex(&base, *t)?) }
        }
        Family::Abx { source, s } => {
            let e = ab_violating_extend(&source.load()?, *s, budget)?;
            let note = format!(
                "n' = {}; input d_{s} = {}, D_1 = {}; ratio hypothesis on input: {}",
                e.n_prime,
                e.d_s,
                e.big_d1,
                yes_no(e.ratio_hypothesis)
            );
            Built { minimal: vec![*s], gab_fails: vec![*s], note: Some(note), ..plain(e.code) }
        }
        Family::Cyclic { q, n, exclude } => plain(cyclic_code(&CyclicSpec { q: *q, n: *n, exclude: exclude.0.clone() })?),
        Family::Example { name } => plain(paper_example(name)?),
    })
}

fn verify(b: &Built, budget: &Budget) -> CliResult {
    let mut bad = Vec::new();
    for &s in &b.minimal {
        let v = is_s_minimal(&b.code, s, Algorithm::Brute, budget)?;
        eprintln!("verify: {s}-minimal {}", yes_no(v.minimal));
        if !v.minimal {
            bad.push(format!("not {s}-minimal"));
        }
    }
    if !b.gab_fails.is_empty() {
        let smax = b.gab_fails.iter().max().unwrap() + 1;
        let r = weight_report(&b.code, Some(smax), budget)?;
        for &s in &b.gab_fails {
            let g = gab_check(&r, s)?;
            eprintln!("verify: Ashikhmin-Barg test at s={s}: {}", g.label());
            if g.holds() {
                bad.push(format!("Ashikhmin-Barg test holds at s={s}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("verification failed: {}", bad.join(", "))))
    }
}

pub fn run(args: &Args, budget: &Budget, out: &mut dyn Write) -> CliResult {
    let b = build(&args.family, budget)?;
    if let Some(n) = &b.note {
        eprintln!("{n}");
    }
    if args.verify {
        verify(&b, budget)?;
    }
    let text = match args.emit {
        Emit::CodeFile => emit_code(&b.code),
        Emit::Matrix => emit_matrix(b.code.original()),
        Emit::Report => {
            let bundle = Bundle::compute(b.code.clone(), None, Algorithm::Rank, budget, false)?;
            let mut buf = Vec::new();
            bundle.emit(Format::Text, false, &mut buf)?;
            String::from_utf8(buf).expect("report is UTF-8")
        }
    };
    match &args.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{p}: {e}")))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
