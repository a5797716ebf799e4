//! Generalized Hamming weights `d_s`, maximum support weights `D_s` and the
//! subcode support weight distributions `A_j^s`.
//!
//! Every quantity is a fold over the subspaces of the message space. Two scans
//! give the same histogram: over `s`-dimensional `V`, taking the support of
//! the subcode spanned by the images of a basis, or over `(k-s)`-dimensional
//! `W`, taking `n - m_G(W)`. The two sides have equally many subspaces, so
//! the scan with the cheaper per-item work is used.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::budget::Budget;
use crate::code::{LinearCode, SupportTable};
use crate::error::{Error, Result};
use crate::subspace::{ColumnMultiset, SubspaceEnumerator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// `n - m_G(W)` over `(k-s)`-dimensional `W`.
    ComplementScan,
    /// Union of basis codeword supports over `s`-dimensional `V`.
    SubcodeScan,
}

/// Histogram `A_j^s`, `j ∈ [0, n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SswdTable {
    pub s: usize,
    pub counts: Vec<u64>,
    pub strategy: Strategy,
}

impl SswdTable {
    pub fn get(&self, j: usize) -> u64 {
        self.counts.get(j).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest occurring support weight.
    pub fn min_weight(&self) -> usize {
        self.counts.iter().position(|&c| c > 0).unwrap_or(0)
    }

    /// Largest occurring support weight.
    pub fn max_weight(&self) -> usize {
        self.counts.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// `(j, A_j^s)` for nonzero cells.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(j, &c)| (j, c)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub s: usize,
    pub d: usize,
    pub big_d: usize,
    pub strategy: Strategy,
}

/// `d_s` and `D_s` for `s = 1..=smax`, with the tables they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub levels: Vec<Level>,
    pub tables: Vec<SswdTable>,
}

impl WeightReport {
    pub fn smax(&self) -> usize {
        self.levels.len()
    }

    /// `d_s`, if computed.
    pub fn d(&self, s: usize) -> Option<usize> {
        self.levels.get(s.checked_sub(1)?).map(|l| l.d)
    }

    /// `D_s`, if computed.
    pub fn big_d(&self, s: usize) -> Option<usize> {
        self.levels.get(s.checked_sub(1)?).map(|l| l.big_d)
    }

    pub fn hierarchy(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.d).collect()
    }

    pub fn table(&self, s: usize) -> Option<&SswdTable> {
        self.tables.get(s.checked_sub(1)?)
    }

    /// CSV with header `s,d_s,D_s`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,d_s,D_s\n");
        for l in &self.levels {
            out.push_str(&format!("{},{},{}\n", l.s, l.d, l.big_d));
        }
        out
    }
}

/// CSV with header `s,j,A_j`, nonzero cells only.
pub fn sswd_csv(tables: &[SswdTable]) -> String {
    let mut out = String::from("s,j,A_j\n");
    for t in tables {
        for (j, c) in t.nonzero() {
            out.push_str(&format!("{},{},{}\n", t.s, j, c));
        }
    }
    out
}

/// Precomputed state shared by the scans of one code.
pub(crate) struct Scanner<'a> {
    pub code: &'a LinearCode,
    pub columns: ColumnMultiset,
    pub supports: Option<SupportTable>,
}

impl<'a> Scanner<'a> {
    pub fn new(code: &'a LinearCode) -> Self {
        Scanner { code, columns: code.column_multiset(), supports: code.support_table() }
    }

    /// The cheaper scan for level `s`, by a rough per-item cost.
    pub fn choose(&self, s: usize) -> Strategy {
        let (k, n) = (self.code.k(), self.code.n());
        let Some(t) = &self.supports else {
            return Strategy::ComplementScan;
        };
        let q = self.code.q() as u64;
        let c = (k - s) as u64;
        let complement = q.saturating_pow(c as u32).min(n as u64 * (c + 1)) * k as u64;
        let subcode = s as u64 * (t.words as u64 + k as u64);
        if subcode < complement {
            Strategy::SubcodeScan
        } else {
            Strategy::ComplementScan
        }
    }

    pub fn sswd(&self, s: usize, strategy: Strategy, budget: &Budget) -> Result<SswdTable> {
        let (k, n) = (self.code.k(), self.code.n());
        if s == 0 || s > k {
            return Err(Error::OutOfRange(format!("s = {s} must lie in [1, {k}]")));
        }
        let f = self.code.field();
        let counts = match (strategy, &self.supports) {
            (Strategy::SubcodeScan, Some(table)) => {
                let en = SubspaceEnumerator::new(f, k, s, budget.subspaces)?;
                en.par_fold(
                    || (vec![0u64; n + 1], vec![0u64; table.words]),
                    |acc, _, v| {
                        table.span_support(v, &mut acc.1);
                        let w: u32 = acc.1.iter().map(|x| x.count_ones()).sum();
                        acc.0[w as usize] += 1;
                    },
                    merge_hist,
                )
                .0
            }
            (Strategy::SubcodeScan, None) => {
                let en = SubspaceEnumerator::new(f, k, s, budget.subspaces)?;
                en.par_fold(
                    || (vec![0u64; n + 1], ()),
                    |acc, _, v| acc.0[self.code.support_of_view(v).count_ones()] += 1,
                    merge_hist,
                )
                .0
            }
            (Strategy::ComplementScan, _) => {
                let en = SubspaceEnumerator::new(f, k, k - s, budget.subspaces)?;
                en.par_fold(
                    || (vec![0u64; n + 1], ()),
                    |acc, _, w| acc.0[n - self.columns.count_in(w)] += 1,
                    merge_hist,
                )
                .0
            }
        };
        Ok(SswdTable { s, counts, strategy })
    }
}

fn merge_hist<T>(mut a: (Vec<u64>, T), b: (Vec<u64>, T)) -> (Vec<u64>, T) {
    a.0.iter_mut().zip(&b.0).for_each(|(x, y)| *x += y);
    a
}

/// `A_j^s` with the automatically chosen scan.
pub fn sswd(code: &LinearCode, s: usize, budget: &Budget) -> Result<SswdTable> {
    let sc = Scanner::new(code);
    let strategy = sc.choose(s.min(code.k()));
    sc.sswd(s, strategy, budget)
}

/// `A_j^s` with a fixed scan.
pub fn sswd_with(code: &LinearCode, s: usize, strategy: Strategy, budget: &Budget) -> Result<SswdTable> {
    Scanner::new(code).sswd(s, strategy, budget)
}

/// `d_s`.
pub fn ghw_ds(code: &LinearCode, s: usize, budget: &Budget) -> Result<usize> {
    Ok(sswd(code, s, budget)?.min_weight())
}

/// `D_s`.
pub fn max_weight_ds(code: &LinearCode, s: usize, budget: &Budget) -> Result<usize> {
    Ok(sswd(code, s, budget)?.max_weight())
}

/// Levels `1..=smax` (all of them when `smax` is `None`).
pub fn weight_report(code: &LinearCode, smax: Option<usize>, budget: &Budget) -> Result<WeightReport> {
    let k = code.k();
    let smax = smax.unwrap_or(k).min(k);
    let sc = Scanner::new(code);
    let mut levels = Vec::with_capacity(smax);
    let mut tables = Vec::with_capacity(smax);
    for s in 1..=smax {
        let t = sc.sswd(s, sc.choose(s), budget)?;
        levels.push(Level { s, d: t.min_weight(), big_d: t.max_weight(), strategy: t.strategy });
        tables.push(t);
    }
    Ok(WeightReport { n: code.n(), k, q: code.q(), levels, tables })
}

/// Checks monotonicity, the Singleton bound, both Griesmer-type bounds on
/// the hierarchy and the table invariants. Returns one message per
/// violation.
pub fn check_bounds(r: &WeightReport) -> Vec<String> {
    let mut v = Vec::new();
    let (n, k) = (r.n, r.k);
    let q = BigUint::from(r.q);
    let qp = |e: usize| q.pow(e as u32);
    for l in &r.levels {
        let s = l.s;
        if l.d > l.big_d || l.big_d > n {
            v.push(format!("s={s}: need d_s <= D_s <= n, got d_s={} D_s={}", l.d, l.big_d));
        }
        if l.d + k > n + s {
            v.push(format!("s={s}: Singleton bound d_s <= n-k+s fails (d_s={})", l.d));
        }
        if s == 1 && l.d < 1 {
            v.push("d_1 must be at least 1".into());
        }
        // d_s + Σ_{i=1}^{k-s} ceil((q-1) d_s / (q^i (q^s - 1))) <= n
        let num = (&q - 1u32) * l.d;
        let mut total = BigUint::from(l.d);
        for i in 1..=k - s {
            let den = qp(i) * (qp(s) - 1u32);
            total += num.div_ceil(&den);
        }
        if total > BigUint::from(n) {
            v.push(format!("s={s}: Griesmer sum {total} exceeds n={n}"));
        }
    }
    for a in &r.levels {
        for b in &r.levels {
            let (s, rr) = (a.s, b.s);
            if s < rr {
                if a.d >= b.d {
                    v.push(format!("monotonicity fails: d_{s}={} >= d_{rr}={}", a.d, b.d));
                }
                // (q^r - 1) d_s <= (q^r - q^{r-s}) d_r
                if (qp(rr) - 1u32) * a.d > (qp(rr) - qp(rr - s)) * b.d {
                    v.push(format!("s={s}, r={rr}: ratio bound between d_s={} and d_r={} fails", a.d, b.d));
                }
            }
        }
    }
    for t in &r.tables {
        let expected = crate::subspace::gaussian_binomial(k, t.s, r.q).unwrap_or_default();
        if BigUint::from(t.total()) != expected {
            v.push(format!("s={}: table sums to {} instead of {expected}", t.s, t.total()));
        }
        if let Some(l) = r.levels.get(t.s - 1) {
            if t.min_weight() != l.d || t.max_weight() != l.big_d {
                v.push(format!("s={}: table extremes disagree with d_s, D_s", t.s));
            }
        }
    }
    v
}

/// `A_j = (q-1) A_j^1` for `j >= 1`.
pub fn check_weight_relation(distribution: &[u64], level1: &SswdTable, q: u32) -> Vec<String> {
    (1..distribution.len())
        .filter(|&j| distribution[j] != (q as u64 - 1) * level1.get(j))
        .map(|j| format!("A_{j}={} but (q-1)A_{j}^1={}", distribution[j], (q as u64 - 1) * level1.get(j)))
        .collect()
}
