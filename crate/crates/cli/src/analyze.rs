use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use gfcodes::ghw::{check_bounds, sswd, sswd_csv, WeightReport, Level};
use gfcodes::minimality::{gab_check, is_s_minimal, yes_no, Gab, SMinimality};
use gfcodes::{Algorithm, Budget, LinearCode, SswdTable};

use crate::{load, CliResult, Failure};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(clap::Args)]
pub struct Args {
    /// Code file (`q k n` header, then k rows), or a built-in example name.
    pub code: String,
    /// Highest level s to report.
    #[arg(long)]
    pub smax: Option<usize>,
    /// Also print the subcode support weight distributions.
    #[arg(long)]
    pub sswd: bool,
    /// s-minimality decider.
    #[arg(long, default_value = "rank")]
    pub alg: Algorithm,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Print stage timings to stderr.
    #[arg(long)]
    pub timings: bool,
}

/// Everything `analyze` reports about one code. Entries stop at the first
/// level the budget did not allow.
pub struct Bundle {
    pub code: LinearCode,
    pub smax: usize,
    pub tables: Vec<SswdTable>,
    pub verdicts: Vec<SMinimality>,
    pub stopped: Option<String>,
}

impl Bundle {
    pub fn compute(code: LinearCode, smax: Option<usize>, alg: Algorithm, budget: &Budget, timings: bool) -> CliResult<Self> {
        let k = code.k();
        let smax = smax.unwrap_or(k).clamp(1, k);
        let mut b = Bundle { code, smax, tables: Vec::new(), verdicts: Vec::new(), stopped: None };
        let start = Instant::now();
        for s in 1..=(smax + 1).min(k) {
            match sswd(&b.code, s, budget) {
                Ok(t) => b.tables.push(t),
                Err(e) => return b.stop(e),
            }
        }
        if timings {
            eprintln!("weights: {:.3}s", start.elapsed().as_secs_f64());
        }
        let start = Instant::now();
        for s in 1..=smax.min(k - 1) {
            match is_s_minimal(&b.code, s, alg, budget) {
                Ok(v) => b.verdicts.push(v),
                Err(e) => return b.stop(e),
            }
        }
        if timings {
            eprintln!("minimality: {:.3}s", start.elapsed().as_secs_f64());
        }
        Ok(b)
    }

    fn stop(mut self, e: gfcodes::Error) -> CliResult<Self> {
        match e {
            gfcodes::Error::BudgetExceeded { .. } => {
                self.stopped = Some(e.to_string());
                Ok(self)
            }
            e => Err(e.into()),
        }
    }

    pub fn report(&self) -> WeightReport {
        let levels = self
            .tables
            .iter()
            .map(|t| Level { s: t.s, d: t.min_weight(), big_d: t.max_weight(), strategy: t.strategy })
            .collect();
        WeightReport { n: self.code.n(), k: self.code.k(), q: self.code.q(), levels, tables: self.tables.clone() }
    }

    fn gab(&self, r: &WeightReport, s: usize) -> Option<Gab> {
        gab_check(r, s).ok()
    }

    pub fn text(&self, with_sswd: bool) -> String {
        let c = &self.code;
        let r = self.report();
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let mut out = match r.d(1) {
            Some(d) => format!("[{},{},{}]_{}\n", c.n(), c.k(), d, c.q()),
            None => format!("[{},{}]_{}\n", c.n(), c.k(), c.q()),
        };
        out.push_str(&format!("{:>3} {:>6} {:>6} {:>6} {:>9} {:>5}\n", "s", "d_s", "d_s+1", "D_s", "s-minimal", "gAB"));
        for s in 1..=self.smax {
            if r.d(s).is_none() {
                break;
            }
            let v = self.verdicts.get(s - 1).map_or("-", |v| yes_no(v.minimal));
            let g = self.gab(&r, s).map_or("-", Gab::label);
            out.push_str(&format!(
                "{:>3} {:>6} {:>6} {:>6} {:>9} {:>5}\n",
                s,
                opt(r.d(s)),
                opt(r.d(s + 1)),
                opt(r.big_d(s)),
                v,
                g
            ));
        }
        for v in &self.verdicts {
            if let Some(w) = &v.witness {
                out.push_str(&format!(
                    "s={} witness: subcode #{} {} support {:?} lies in subcode #{} {} support {:?}\n",
                    v.s,
                    w.ord1,
                    load::basis(&w.u1),
                    w.support1.ones().collect::<Vec<_>>(),
                    w.ord2,
                    load::basis(&w.u2),
                    w.support2.ones().collect::<Vec<_>>(),
                ));
            }
        }
        if with_sswd {
            for t in self.tables.iter().filter(|t| t.s <= self.smax) {
                let cells: Vec<String> = t.nonzero().iter().map(|(j, a)| format!("{j}:{a}")).collect();
                out.push_str(&format!("A^{} {}\n", t.s, cells.join(" ")));
            }
        }
        for v in check_bounds(&r) {
            out.push_str(&format!("violation: {v}\n"));
        }
        out
    }

    pub fn csv(&self, with_sswd: bool) -> String {
        let r = self.report();
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let mut out = String::from("s,d_s,D_s\n");
        for l in r.levels.iter().filter(|l| l.s <= self.smax) {
            out.push_str(&format!("{},{},{}\n", l.s, l.d, l.big_d));
        }
        out.push_str("\ns,d_s1,D_s,verdict,condition\n");
        for v in &self.verdicts {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                v.s,
                opt(r.d(v.s + 1)),
                opt(r.big_d(v.s)),
                yes_no(v.minimal),
                self.gab(&r, v.s).map_or("", Gab::label)
            ));
        }
        if with_sswd {
            let tables: Vec<SswdTable> = self.tables.iter().filter(|t| t.s <= self.smax).cloned().collect();
            out.push('\n');
            out.push_str(&sswd_csv(&tables));
        }
        out
    }

    /// Writes the report; a budget stop is surfaced after the partial output.
    pub fn emit(&self, format: Format, with_sswd: bool, out: &mut dyn Write) -> CliResult {
        let text = match format {
            Format::Text => self.text(with_sswd),
            Format::Csv => self.csv(with_sswd),
        };
        out.write_all(text.as_bytes())?;
        out.flush()?;
        match &self.stopped {
            Some(m) => Err(Failure::Budget(m.clone())),
            None => Ok(()),
        }
    }
}

pub fn run(args: &Args, budget: &Budget, out: &mut dyn Write) -> CliResult {
    let code = load::code(&args.code)?;
    if args.smax == Some(0) {
        return Err(Failure::Input("--smax must be at least 1".into()));
    }
    let b = Bundle::compute(code, args.smax, args.alg, budget, args.timings)?;
    b.emit(args.format, args.sswd, out)
}
