//! s-minimality of subcodes and codes.
//!
//! A subcode `U` of dimension `s` is minimal when no other `s`-dimensional
//! subcode has support inside `supp(U)`. Two deciders are provided: a rank
//! test on the parity-check columns indexed by the support, and the direct
//! pairwise support comparison, kept as an oracle. Both report the same
//! witness for a failure: `u2` is the first non-minimal subcode in
//! enumeration order and `u1` the first other subcode whose support lies in
//! `supp(u2)`.
//!
//! The rank test uses `rank H(S) = |S| - k + rank G(S̄)`, so `U` is minimal
//! exactly when the columns of `G` outside `supp(U)` span a space of
//! dimension `k - s`. The parity-check form is kept as
//! [`is_minimal_subcode_pcheck`].

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bits::{subset_words, Bits};
use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::ghw::{Level, Scanner, WeightReport};
use crate::gf::Elem;
use crate::matrix::{BitEchelon, EchelonBasis};
use crate::subspace::{BasisView, SubspaceBasis, SubspaceEnumerator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Rank,
    Brute,
}

impl std::str::FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rank" => Ok(Algorithm::Rank),
            "brute" => Ok(Algorithm::Brute),
            _ => Err(format!("unknown algorithm `{s}` (rank|brute)")),
        }
    }
}

/// Two distinct `s`-dimensional subcodes with `supp(u1) ⊆ supp(u2)`, given by
/// their message subspaces and enumeration ordinals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u1: SubspaceBasis,
    pub u2: SubspaceBasis,
    pub ord1: u64,
    pub ord2: u64,
    pub support1: Bits,
    pub support2: Bits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMinimality {
    pub s: usize,
    pub minimal: bool,
    pub witness: Option<Witness>,
}

fn check_subspace(code: &LinearCode, v: &SubspaceBasis) -> Result<()> {
    if v.k() != code.k() || v.field() != code.field() {
        return Err(Error::DimensionMismatch(format!("subspace of GF(q)^{} for a code with k = {}", v.k(), code.k())));
    }
    if v.dim() == 0 {
        return Err(Error::OutOfRange("the zero subspace has no subcode".into()));
    }
    Ok(())
}

/// Rank test through the columns outside the support.
pub fn is_minimal_subcode(code: &LinearCode, v: &SubspaceBasis) -> Result<bool> {
    check_subspace(code, v)?;
    let rc = RankChecker::new(code);
    let supp = code.support_of_view(v.view());
    let minimal = rc.minimal(supp.words(), v.dim());
    debug_assert!(!minimal || supp.count_ones() + code.k() <= code.n() + v.dim());
    Ok(minimal)
}

/// Rank test on the parity-check columns indexed by the support:
/// `rank H(S) = |S| - s`.
pub fn is_minimal_subcode_pcheck(code: &LinearCode, v: &SubspaceBasis) -> Result<bool> {
    check_subspace(code, v)?;
    let supp: Vec<usize> = code.subcode_support(v)?.ones().collect();
    let h = code.pcheck().submatrix_columns(&supp)?;
    let rank = if h.rows() == 0 || h.cols() == 0 { 0 } else { h.rank() };
    Ok(rank + v.dim() == supp.len())
}

/// Columns of the generator, prepared for repeated span tests.
struct RankChecker {
    k: usize,
    n: usize,
    field: crate::gf::Field,
    cols: Vec<Elem>,
    /// Packed columns for GF(2) with `k <= 64`.
    packed: Option<Vec<u64>>,
}

impl RankChecker {
    fn new(code: &LinearCode) -> Self {
        let g = code.generator();
        let (k, n) = (code.k(), code.n());
        let mut cols = Vec::with_capacity(k * n);
        for j in 0..n {
            cols.extend(g.column(j));
        }
        let packed = (code.q() == 2 && k <= 64).then(|| {
            (0..n).map(|j| (0..k).fold(0u64, |a, i| a | (cols[j * k + i] as u64) << i)).collect()
        });
        RankChecker { k, n, field: code.field().clone(), cols, packed }
    }

    /// True if the columns outside `support` span a `(k - s)`-dimensional
    /// space.
    fn minimal(&self, support: &[u64], s: usize) -> bool {
        let target = self.k - s;
        if target == 0 {
            return true;
        }
        let outside = (0..self.n).filter(|&j| support[j / 64] >> (j % 64) & 1 == 0);
        if let Some(p) = &self.packed {
            let mut e = BitEchelon::new();
            for j in outside {
                if e.insert(&[p[j]]) && e.rank() == target {
                    return true;
                }
            }
        } else {
            let mut e = EchelonBasis::new(&self.field);
            for j in outside {
                if e.insert(&self.cols[j * self.k..(j + 1) * self.k]) && e.rank() == target {
                    return true;
                }
            }
        }
        false
    }
}

fn support_into(sc: &Scanner<'_>, v: BasisView<'_>, buf: &mut Vec<u64>) {
    match &sc.supports {
        Some(t) => t.span_support(v, buf),
        None => {
            let s = sc.code.support_of_view(v);
            buf.clear();
            buf.extend_from_slice(s.words());
        }
    }
}

/// Decides whether every `s`-dimensional subcode is minimal.
pub fn is_s_minimal(code: &LinearCode, s: usize, alg: Algorithm, budget: &Budget) -> Result<SMinimality> {
    let sc = Scanner::new(code);
    s_minimal_with(&sc, s, alg, budget)
}

pub(crate) fn s_minimal_with(sc: &Scanner<'_>, s: usize, alg: Algorithm, budget: &Budget) -> Result<SMinimality> {
    let code = sc.code;
    let k = code.k();
    if s == 0 || s >= k {
        return Err(Error::OutOfRange(format!("s = {s} must lie in [1, {}]", k.saturating_sub(1))));
    }
    let en = SubspaceEnumerator::new(code.field(), k, s, budget.subspaces)?;
    let words = crate::bits::words_for(code.n());
    let first_bad = match alg {
        Algorithm::Rank => {
            let rc = RankChecker::new(code);
            en.par_find_first(|_, v| {
                let mut buf = vec![0u64; words];
                support_into(sc, v, &mut buf);
                (!rc.minimal(&buf, s)).then_some(buf)
            })
        }
        Algorithm::Brute => brute_first_bad(sc, &en, words),
    };
    let Some((ord2, supp2)) = first_bad else {
        return Ok(SMinimality { s, minimal: true, witness: None });
    };
    // first other subcode, in enumeration order, with support inside supp2
    let (ord1, supp1) = en
        .par_find_first(|ord, v| {
            if ord == ord2 {
                return None;
            }
            let mut buf = vec![0u64; words];
            support_into(sc, v, &mut buf);
            subset_words(&buf, &supp2).then_some(buf)
        })
        .expect("a non-minimal subcode has a witness");
    let bits = |w: Vec<u64>| {
        let mut b = Bits::zeros(code.n());
        b.words_mut().copy_from_slice(&w);
        b
    };
    Ok(SMinimality {
        s,
        minimal: false,
        witness: Some(Witness {
            u1: en.get(ord1).unwrap(),
            u2: en.get(ord2).unwrap(),
            ord1,
            ord2,
            support1: bits(supp1),
            support2: bits(supp2),
        }),
    })
}

/// For each support weight `j`, the number of `s`-subcodes of weight `j`
/// that are minimal (rank test).
pub fn minimal_by_weight(code: &LinearCode, s: usize, budget: &Budget) -> Result<Vec<u64>> {
    let k = code.k();
    if s == 0 || s >= k {
        return Err(Error::OutOfRange(format!("s = {s} must lie in [1, {}]", k.saturating_sub(1))));
    }
    let sc = Scanner::new(code);
    let rc = RankChecker::new(code);
    let en = SubspaceEnumerator::new(code.field(), k, s, budget.subspaces)?;
    let words = crate::bits::words_for(code.n());
    let n = code.n();
    let (hist, _) = en.par_fold(
        || (vec![0u64; n + 1], vec![0u64; words]),
        |acc, _, v| {
            support_into(&sc, v, &mut acc.1);
            if rc.minimal(&acc.1, s) {
                let w: u32 = acc.1.iter().map(|x| x.count_ones()).sum();
                acc.0[w as usize] += 1;
            }
        },
        |mut a, b| {
            a.0.iter_mut().zip(&b.0).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(hist)
}

/// Pairwise support comparison over all `s`-subcodes.
fn brute_first_bad(sc: &Scanner<'_>, en: &SubspaceEnumerator, words: usize) -> Option<(u64, Vec<u64>)> {
    let total = en.len() as usize;
    let mut all = vec![0u64; total * words];
    let mut buf = vec![0u64; words];
    en.for_each_in(0, en.len(), |ord, v| {
        support_into(sc, v, &mut buf);
        all[ord as usize * words..(ord as usize + 1) * words].copy_from_slice(&buf);
    });
    let supp = |i: usize| &all[i * words..(i + 1) * words];
    let weight = |i: usize| supp(i).iter().map(|w| w.count_ones()).sum::<u32>();
    let weights: Vec<u32> = (0..total).map(weight).collect();
    let mut by_weight: Vec<usize> = (0..total).collect();
    by_weight.sort_by_key(|&i| (weights[i], i));
    let sorted_weights: Vec<u32> = by_weight.iter().map(|&i| weights[i]).collect();
    (0..total)
        .into_par_iter()
        .find_first(|&i| {
            let upto = sorted_weights.partition_point(|&w| w <= weights[i]);
            let si = supp(i);
            by_weight[..upto].iter().any(|&j| j != i && subset_words(supp(j), si))
        })
        .map(|i| (i as u64, supp(i).to_vec()))
}

/// Outcome of the generalized Ashikhmin–Barg test at level `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gab {
    /// `D_s < d_{s+1}`.
    HoldsByGap,
    /// `D_s (q^{s+1} - q) < d_s (q^{s+1} - 1)`.
    HoldsByRatio,
    Inconclusive,
}

impl Gab {
    pub fn holds(self) -> bool {
        self != Gab::Inconclusive
    }

    pub fn label(self) -> &'static str {
        match self {
            Gab::HoldsByGap => "gap",
            Gab::HoldsByRatio => "ratio",
            Gab::Inconclusive => "none",
        }
    }
}

fn q_terms(q: u32, s: usize) -> (BigUint, BigUint) {
    let qs1 = BigUint::from(q).pow(s as u32 + 1);
    (&qs1 - 1u32, qs1 - q)
}

fn gab_from(q: u32, s: usize, d_s: usize, big_d_s: usize, d_next: usize) -> Gab {
    let (num, den) = q_terms(q, s);
    if big_d_s < d_next {
        Gab::HoldsByGap
    } else if BigUint::from(big_d_s) * den < BigUint::from(d_s) * num {
        Gab::HoldsByRatio
    } else {
        Gab::Inconclusive
    }
}

/// Sufficient condition for s-minimality from `d_s`, `D_s` and `d_{s+1}`.
pub fn gab_check(report: &WeightReport, s: usize) -> Result<Gab> {
    match (report.d(s), report.big_d(s), report.d(s + 1)) {
        (Some(d), Some(big), Some(next)) => Ok(gab_from(report.q, s, d, big, next)),
        _ => Err(Error::OutOfRange(format!("the report lacks levels {s} and {}", s + 1))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubcodeVerdict {
    /// `|supp(U)| < d_{s+1}`.
    MinimalByT1a,
    /// `|supp(U)| (q^{s+1} - q) < d_s (q^{s+1} - 1)`.
    MinimalByT1b,
    /// `|supp(U)| > n - k + s`, which no minimal subcode can exceed.
    NotMinimal,
    Undecided,
}

/// The two hypotheses under which the conditions above are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `d_{s+1} = n - k + s + 1`.
    TopGap,
    /// `(n - k + s)(q^{s+1} - q) < d_s (q^{s+1} - 1)`.
    Ratio,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubcodeCondition {
    pub verdict: SubcodeVerdict,
    /// Set when the verdict is a characterization for this code and level.
    pub exact: Option<Regime>,
}

/// Classifies an `s`-subcode of support weight `w` from the hierarchy alone.
pub fn subcode_condition(report: &WeightReport, s: usize, w: usize) -> Result<SubcodeCondition> {
    let (Some(d_s), Some(d_next)) = (report.d(s), report.d(s + 1)) else {
        return Err(Error::OutOfRange(format!("the report lacks levels {s} and {}", s + 1)));
    };
    let (n, k, q) = (report.n, report.k, report.q);
    let (num, den) = q_terms(q, s);
    let top = n - k + s;
    let ratio = |x: usize| BigUint::from(x) * &den < BigUint::from(d_s) * &num;
    let exact = if d_next == top + 1 {
        Some(Regime::TopGap)
    } else if ratio(top) {
        Some(Regime::Ratio)
    } else {
        None
    };
    let verdict = if w < d_next {
        SubcodeVerdict::MinimalByT1a
    } else if ratio(w) {
        SubcodeVerdict::MinimalByT1b
    } else if w > top {
        SubcodeVerdict::NotMinimal
    } else {
        SubcodeVerdict::Undecided
    };
    Ok(SubcodeCondition { verdict, exact })
}

/// One row of a minimality profile. `None` marks a value that was not
/// computed because a budget was exceeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileLevel {
    pub s: usize,
    pub d_s: Option<usize>,
    pub d_next: Option<usize>,
    pub big_d: Option<usize>,
    pub minimal: Option<bool>,
    pub witness: Option<Witness>,
    pub gab: Option<Gab>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityProfile {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub algorithm: Algorithm,
    /// `d_s`, `D_s` for every level that fit the budget.
    pub weights: Vec<Option<Level>>,
    pub levels: Vec<ProfileLevel>,
    /// Levels skipped, with the reason.
    pub gaps: Vec<(usize, String)>,
    /// Broken invariants; nonempty means a bug.
    pub violations: Vec<String>,
}

impl MinimalityProfile {
    pub fn verdict(&self, s: usize) -> Option<bool> {
        self.levels.get(s.checked_sub(1)?)?.minimal
    }

    pub fn is_complete(&self) -> bool {
        self.gaps.is_empty()
    }

    /// CSV with header `s,d_s1,D_s,verdict,condition`; empty cells for gaps.
    pub fn to_csv(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let mut out = String::from("s,d_s1,D_s,verdict,condition\n");
        for l in &self.levels {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                l.s,
                opt(l.d_next),
                opt(l.big_d),
                l.minimal.map(yes_no).unwrap_or(""),
                l.gab.map(Gab::label).unwrap_or("")
            ));
        }
        out
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn budget_gap<T>(r: Result<T>, s: usize, gaps: &mut Vec<(usize, String)>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::BudgetExceeded { .. }) => {
            gaps.push((s, e.to_string()));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Weights, verdicts and conditions for `s = 1..k-1`, with invariant checks.
pub fn minimality_profile(code: &LinearCode, alg: Algorithm, budget: &Budget) -> Result<MinimalityProfile> {
    let sc = Scanner::new(code);
    let (n, k, q) = (code.n(), code.k(), code.q());
    let mut gaps = Vec::new();
    let mut weights = Vec::with_capacity(k);
    for s in 1..=k {
        let t = budget_gap(sc.sswd(s, sc.choose(s), budget), s, &mut gaps)?;
        weights.push(t.map(|t| Level { s, d: t.min_weight(), big_d: t.max_weight(), strategy: t.strategy }));
    }
    let mut levels = Vec::with_capacity(k.saturating_sub(1));
    for s in 1..k {
        let res = budget_gap(s_minimal_with(&sc, s, alg, budget), s, &mut gaps)?;
        let w = &weights[s - 1];
        let next = &weights[s];
        let gab = match (w, next) {
            (Some(a), Some(b)) => Some(gab_from(q, s, a.d, a.big_d, b.d)),
            _ => None,
        };
        let (minimal, witness) = match res {
            Some(r) => (Some(r.minimal), r.witness),
            None => (None, None),
        };
        levels.push(ProfileLevel {
            s,
            d_s: w.as_ref().map(|l| l.d),
            d_next: next.as_ref().map(|l| l.d),
            big_d: w.as_ref().map(|l| l.big_d),
            minimal,
            witness,
            gab,
        });
    }
    gaps.sort_by_key(|g| g.0);
    gaps.dedup_by_key(|g| g.0);
    let mut p = MinimalityProfile { n, k, q, algorithm: alg, weights, levels, gaps, violations: Vec::new() };
    p.violations = profile_violations(&p);
    Ok(p)
}

/// Downward monotonicity of verdicts, sufficiency of the gAB test and the
/// minimum distance bound for codes minimal at some level.
pub fn profile_violations(p: &MinimalityProfile) -> Vec<String> {
    let mut v = Vec::new();
    for pair in p.levels.windows(2) {
        if pair[1].minimal == Some(true) && pair[0].minimal == Some(false) {
            v.push(format!("{}-minimal but not {}-minimal", pair[1].s, pair[0].s));
        }
    }
    for l in &p.levels {
        if l.gab.is_some_and(Gab::holds) && l.minimal == Some(false) {
            v.push(format!("s={}: gAB condition holds but the code is not s-minimal", l.s));
        }
    }
    if p.levels.iter().any(|l| l.minimal == Some(true)) {
        if let Some(Some(l1)) = p.weights.first() {
            let bound = (p.q as usize - 1) * (p.k - 1) + 1;
            if l1.d < bound {
                v.push(format!("minimal at some level yet d_1 = {} < (q-1)(k-1)+1 = {bound}", l1.d));
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ghw::weight_report;
    use crate::gf::Field;
    use crate::matrix::Matrix;

    fn code(q: u32, rows: &[&str]) -> LinearCode {
        let f = Field::prime(q).unwrap();
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.bytes().map(|b| (b - b'0') as u32).collect()).collect();
        LinearCode::from_generator(&Matrix::from_rows(&f, &rows).unwrap()).unwrap()
    }

    fn ex953() -> LinearCode {
        code(2, &["100010111", "010010110", "001010101", "000110011", "000001111"])
    }

    #[test]
    fn table_annotations_for_953() {
        let c = ex953();
        let f = c.field().clone();
        let r = weight_report(&c, None, &Budget::default()).unwrap();
        // heaviest minimal weight per level, from the example's annotations
        let heaviest_minimal = [5, 6, 7, 8];
        for s in 1..5 {
            for v in SubspaceEnumerator::new(&f, 5, s, u64::MAX).unwrap().iter() {
                let w = c.subcode_support(&v).unwrap().count_ones();
                let rank = is_minimal_subcode(&c, &v).unwrap();
                assert_eq!(rank, is_minimal_subcode_pcheck(&c, &v).unwrap());
                assert_eq!(rank, w <= heaviest_minimal[s - 1], "s={s} w={w}");
                let cond = subcode_condition(&r, s, w).unwrap();
                match cond.verdict {
                    SubcodeVerdict::MinimalByT1a | SubcodeVerdict::MinimalByT1b => assert!(rank),
                    SubcodeVerdict::NotMinimal => assert!(!rank),
                    SubcodeVerdict::Undecided => assert!(cond.exact.is_none()),
                }
            }
        }
    }

    #[test]
    fn witnesses_agree() {
        let c = ex953();
        for s in 1..5 {
            let a = is_s_minimal(&c, s, Algorithm::Rank, &Budget::default()).unwrap();
            let b = is_s_minimal(&c, s, Algorithm::Brute, &Budget::default()).unwrap();
            assert_eq!(a, b);
            assert!(!a.minimal);
            let w = a.witness.unwrap();
            assert_ne!(w.u1, w.u2);
            assert!(w.support1.is_subset_of(&w.support2));
            assert_eq!(c.subcode_support(&w.u2).unwrap(), w.support2);
        }
    }

    #[test]
    fn simplex_is_minimal_everywhere() {
        let c = code(2, &["000000011111111", "000111100001111", "011001100110011", "101010101010101"]);
        let p = minimality_profile(&c, Algorithm::Brute, &Budget::default()).unwrap();
        assert!(p.levels.iter().all(|l| l.minimal == Some(true) && l.gab == Some(Gab::HoldsByGap)));
        assert!(p.violations.is_empty());
        assert_eq!(p.to_csv(), "s,d_s1,D_s,verdict,condition\n1,12,8,yes,gap\n2,14,12,yes,gap\n3,15,14,yes,gap\n");
    }

    #[test]
    fn pcheck_route_on_full_space() {
        let f = Field::prime(3).unwrap();
        let c = LinearCode::from_generator(&Matrix::identity(&f, 3)).unwrap();
        for v in SubspaceEnumerator::new(&f, 3, 1, 100).unwrap().iter() {
            let w = c.subcode_support(&v).unwrap().count_ones();
            assert_eq!(is_minimal_subcode(&c, &v).unwrap(), w == 1);
            assert_eq!(is_minimal_subcode_pcheck(&c, &v).unwrap(), w == 1);
        }
    }

    #[test]
    fn budget_gaps_are_reported() {
        let p = minimality_profile(&ex953(), Algorithm::Rank, &Budget::uniform(100)).unwrap();
        assert!(!p.is_complete());
        assert_eq!(p.verdict(1), Some(false));
        assert_eq!(p.verdict(2), None);
        assert!(p.to_csv().contains("\n2,,,,\n"));
    }

    #[test]
    fn argument_errors() {
        let c = ex953();
        assert!(is_s_minimal(&c, 0, Algorithm::Rank, &Budget::default()).is_err());
        assert!(is_s_minimal(&c, 5, Algorithm::Rank, &Budget::default()).is_err());
        let f = c.field().clone();
        assert!(is_minimal_subcode(&c, &SubspaceBasis::zero(&f, 5)).is_err());
        assert!(is_minimal_subcode(&c, &SubspaceBasis::full(&f, 4)).is_err());
    }
}
