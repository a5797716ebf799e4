//! Point sets of PG(k-1, q), t-fold and cutting s-blocking checks, the
//! correspondence with projective codes, and lower bounds on blocking set
//! sizes.
//!
//! Projective subspaces of codimension `s` are the `(k-s)`-dimensional
//! subspaces of GF(q)^k; points are normalized so the first nonzero
//! coordinate is 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::budget::Budget;
use crate::code::{normalize, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{EchelonBasis, Matrix};
use crate::subspace::{BasisView, SubspaceBasis, SubspaceEnumerator};

/// A set of points of PG(k-1, q), sorted, without repetition.
#[derive(Clone, PartialEq, Eq)]
pub struct PGPointSet {
    field: Field,
    k: usize,
    points: Vec<Vec<Elem>>,
}

impl std::fmt::Debug for PGPointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} points of PG({}, {})", self.points.len(), self.k - 1, self.field.q())
    }
}

impl PGPointSet {
    /// Normalizes each vector. Zero vectors and repeated points are errors.
    pub fn new(field: &Field, k: usize, vectors: &[Vec<Elem>]) -> Result<Self> {
        let mut points = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != k {
                return Err(Error::DimensionMismatch(format!("point {i} has {} coordinates, expected {k}", v.len())));
            }
            for &x in v {
                field.check(x as u32)?;
            }
            points.push(normalize(field, v).ok_or(Error::ZeroColumn(i))?);
        }
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::OutOfRange(format!("point {:?} is listed twice", w[0])));
        }
        Ok(PGPointSet { field: field.clone(), k, points })
    }

    /// Every point of PG(k-1, q), in lexicographic order.
    pub fn full(field: &Field, k: usize) -> Self {
        PGPointSet { field: field.clone(), k, points: projective_points(field, k) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn contains(&self, p: &[Elem]) -> bool {
        normalize(&self.field, p).is_some_and(|n| self.points.binary_search(&n).is_ok())
    }

    /// PG(k-1, q) minus this set.
    pub fn complement(&self) -> PGPointSet {
        let points = projective_points(&self.field, self.k)
            .into_iter()
            .filter(|p| self.points.binary_search(p).is_err())
            .collect();
        PGPointSet { field: self.field.clone(), k: self.k, points }
    }

    /// True if the points span GF(q)^k.
    pub fn spans(&self) -> bool {
        !self.points.is_empty() && self.matrix().rank() == self.k
    }

    /// `k × |B|` matrix with the points as columns.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.k, &self.points).expect("consistent point length")
    }

    fn check_s(&self, s: usize) -> Result<()> {
        if s == 0 || s >= self.k {
            return Err(Error::OutOfRange(format!("s = {s} must lie in [1, {}]", self.k - 1)));
        }
        Ok(())
    }

    fn count_in(&self, v: BasisView<'_>) -> usize {
        self.points.iter().filter(|p| v.contains(&self.field, p)).count()
    }

    fn spans_subspace(&self, v: BasisView<'_>) -> bool {
        let target = v.dim();
        let mut e = EchelonBasis::new(&self.field);
        for p in &self.points {
            if v.contains(&self.field, p) && e.insert(p) && e.rank() == target {
                return true;
            }
        }
        target == 0
    }
}

/// Normalized points of PG(k-1, q) in lexicographic order.
pub fn projective_points(field: &Field, k: usize) -> Vec<Vec<Elem>> {
    let q = field.q() as u64;
    let total = q.pow(k as u32);
    let mut out = Vec::with_capacity(((total - 1) / (q - 1)) as usize);
    for o in 1..total {
        let mut v = vec![0 as Elem; k];
        let mut x = o;
        for d in v.iter_mut().rev() {
            *d = (x % q) as Elem;
            x /= q;
        }
        if v.iter().find(|&&d| d != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// The columns of a projective code as a point set.
pub fn pointset_from_code(code: &LinearCode) -> Result<PGPointSet> {
    if !code.is_projective() {
        return Err(Error::NotProjective);
    }
    let g = code.generator();
    let cols: Vec<Vec<Elem>> = (0..g.cols()).map(|j| g.column(j)).collect();
    PGPointSet::new(code.field(), code.k(), &cols)
}

/// The code whose generator has the points as columns, in sorted order.
pub fn code_from_pointset(b: &PGPointSet) -> Result<LinearCode> {
    if !b.spans() {
        return Err(Error::DoesNotGenerate { k: b.k });
    }
    LinearCode::from_generator(&b.matrix())
}

/// Outcome of a blocking check; on failure, the first failing subspace in
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingVerdict {
    pub holds: bool,
    pub witness: Option<SubspaceBasis>,
}

fn scan(b: &PGPointSet, s: usize, budget: &Budget, fails: impl Fn(BasisView<'_>) -> bool + Sync + Send) -> Result<BlockingVerdict> {
    b.check_s(s)?;
    let en = SubspaceEnumerator::new(&b.field, b.k, b.k - s, budget.subspaces)?;
    let hit = en.par_find_first(|_, v| fails(v).then_some(()));
    Ok(match hit {
        Some((ord, ())) => BlockingVerdict { holds: false, witness: en.get(ord) },
        None => BlockingVerdict { holds: true, witness: None },
    })
}

/// Every codimension-`s` subspace contains at least `t` points of `b`.
pub fn is_t_fold_s_blocking(b: &PGPointSet, t: usize, s: usize, budget: &Budget) -> Result<BlockingVerdict> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    scan(b, s, budget, |v| b.count_in(v) < t)
}

/// Every codimension-`s` subspace is spanned by the points of `b` in it.
pub fn is_cutting_s_blocking(b: &PGPointSet, s: usize, budget: &Budget) -> Result<BlockingVerdict> {
    scan(b, s, budget, |v| !b.spans_subspace(v))
}

/// Lower bounds on the size of a t-fold s-blocking set of PG(k-1, q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub t: u64,
    pub s: usize,
    pub k: usize,
    pub q: u32,
    pub spanning: bool,
    /// `t (q^k - 1) / (q^{k-s} - 1)`, always.
    pub bound_a: BigRational,
    /// `q^{k-1}`, when the complement does not span.
    pub bound_b: Option<BigRational>,
    /// `min{ t (q^{s+1}-1)/(q-1), t + q^2 (q^s - 1)/(q-1) }`, when the
    /// complement spans.
    pub bound_c: Option<BigRational>,
    /// True when `t <= q`, where the first term of `bound_c` is the minimum.
    pub c_simplifies: bool,
}

pub fn ceil(r: &BigRational) -> BigInt {
    r.numer().div_ceil(r.denom())
}

impl BoundReport {
    /// The strongest applicable bound, rounded up.
    pub fn best(&self) -> BigInt {
        [Some(&self.bound_a), self.bound_b.as_ref(), self.bound_c.as_ref()]
            .into_iter()
            .flatten()
            .map(ceil)
            .max()
            .expect("bound_a is always present")
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "t={} s={} k={} q={} complement {}\n",
            self.t,
            self.s,
            self.k,
            self.q,
            if self.spanning { "spans" } else { "does not span" }
        );
        out.push_str(&format!("bound_a = {} (>= {})\n", self.bound_a, ceil(&self.bound_a)));
        match &self.bound_b {
            Some(b) => out.push_str(&format!("bound_b = {} (>= {})\n", b, ceil(b))),
            None => out.push_str("bound_b not applicable\n"),
        }
        match &self.bound_c {
            Some(c) => out.push_str(&format!(
                "bound_c = {} (>= {}){}\n",
                c,
                ceil(c),
                if self.c_simplifies { ", equal to t(q^(s+1)-1)/(q-1) since t <= q" } else { "" }
            )),
            None => out.push_str("bound_c not applicable\n"),
        }
        out.push_str(&format!("best = {}\n", self.best()));
        out
    }
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn qpow(q: u32, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(q), e)
}

fn check_params(s: usize, k: usize, q: u32) -> Result<()> {
    if q < 2 || s == 0 || s >= k {
        return Err(Error::OutOfRange(format!("need q >= 2 and 1 <= s <= k-1, got q={q} s={s} k={k}")));
    }
    Ok(())
}

pub fn blocking_bounds(t: u64, s: usize, k: usize, q: u32, spanning: bool) -> Result<BoundReport> {
    check_params(s, k, q)?;
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    let tb = BigInt::from(t);
    let one = BigInt::one();
    let bound_a = BigRational::new(&tb * (qpow(q, k) - &one), qpow(q, k - s) - &one);
    let (bound_b, bound_c) = if spanning {
        let qm1 = BigInt::from(q - 1);
        let c1 = BigRational::new(&tb * (qpow(q, s + 1) - &one), qm1.clone());
        let c2 = rat(tb.clone()) + BigRational::new(qpow(q, 2) * (qpow(q, s) - &one), qm1);
        (None, Some(c1.min(c2)))
    } else {
        (Some(rat(qpow(q, k - 1))), None)
    };
    Ok(BoundReport { t, s, k, q, spanning, bound_a, bound_b, bound_c, c_simplifies: t <= q as u64 })
}

/// Lower bounds on the shortest length of an s-minimal `[n, k]_q` code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinLengthBound {
    pub k: usize,
    pub s: usize,
    pub q: u32,
    /// `(k-s)(q^k - 1)/(q^{k-s} - 1)`.
    pub general: BigRational,
    /// `(k-s)(q^{s+1} - 1)/(q - 1)`, only when `k - s <= q`.
    pub small_codim: Option<BigRational>,
}

impl MinLengthBound {
    pub fn best(&self) -> BigInt {
        [Some(&self.general), self.small_codim.as_ref()].into_iter().flatten().map(ceil).max().unwrap()
    }
}

pub fn min_length_bound(k: usize, s: usize, q: u32) -> Result<MinLengthBound> {
    check_params(s, k, q)?;
    let c = BigInt::from(k - s);
    let one = BigInt::one();
    let general = BigRational::new(&c * (qpow(q, k) - &one), qpow(q, k - s) - &one);
    let small_codim =
        (k - s <= q as usize).then(|| BigRational::new(&c * (qpow(q, s + 1) - &one), BigInt::from(q - 1)));
    Ok(MinLengthBound { k, s, q, general, small_codim })
}

/// Exhaustive search over subsets of PG(k-1, q) in increasing size.
struct SubsetSearch {
    field: Field,
    k: usize,
    points: Vec<Vec<Elem>>,
    /// For each codimension-s subspace, the indices of points inside it.
    members: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl SubsetSearch {
    fn new(k: usize, q: u32, s: usize, max_size: usize) -> Result<Self> {
        check_params(s, k, q)?;
        let field = Field::of_order(q)?;
        let points = projective_points(&field, k);
        if points.len() > 15 && max_size > 5 {
            return Err(Error::budget("subsets", format!("2^{}", points.len()), 1 << 15));
        }
        if points.len() > 64 {
            return Err(Error::OutOfRange("at most 64 points are supported".into()));
        }
        let en = SubspaceEnumerator::new(&field, k, k - s, Budget::default().subspaces)?;
        let mut members = Vec::new();
        en.for_each_in(0, en.len(), |_, v| {
            members.push((0..points.len()).filter(|&i| v.contains(&field, &points[i])).collect::<Vec<_>>())
        });
        let masks = members.iter().map(|m| m.iter().fold(0u64, |a, &i| a | 1 << i)).collect();
        Ok(SubsetSearch { field, k, points, members, masks })
    }

    fn set(&self, mask: u64) -> PGPointSet {
        let pts = (0..self.points.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.points[i].clone()).collect();
        PGPointSet { field: self.field.clone(), k: self.k, points: pts }
    }

    /// First subset, by size then lexicographic index order, passing `ok`.
    fn first(&self, max_size: usize, ok: impl Fn(u64) -> bool) -> Option<PGPointSet> {
        let n = self.points.len();
        for size in 0..=max_size.min(n) {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let mask = idx.iter().fold(0u64, |a, &i| a | 1 << i);
                if ok(mask) {
                    return Some(self.set(mask));
                }
                let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                    break;
                };
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        None
    }

    fn is_t_fold(&self, mask: u64, t: usize) -> bool {
        self.masks.iter().all(|m| (m & mask).count_ones() as usize >= t)
    }

    fn is_cutting(&self, mask: u64, s: usize) -> bool {
        let target = self.k - s;
        self.members.iter().all(|m| {
            let mut e = EchelonBasis::new(&self.field);
            m.iter().filter(|&&i| mask >> i & 1 == 1).any(|&i| e.insert(&self.points[i]) && e.rank() == target)
        })
    }
}

/// A smallest t-fold s-blocking set of size at most `max_size`.
pub fn exhaustive_min_blocking(k: usize, q: u32, t: usize, s: usize, max_size: usize) -> Result<Option<PGPointSet>> {
    let search = SubsetSearch::new(k, q, s, max_size)?;
    Ok(search.first(max_size, |m| search.is_t_fold(m, t)))
}

/// A smallest cutting s-blocking set of size at most `max_size`.
pub fn exhaustive_min_cutting(k: usize, q: u32, s: usize, max_size: usize) -> Result<Option<PGPointSet>> {
    let search = SubsetSearch::new(k, q, s, max_size)?;
    Ok(search.first(max_size, |m| search.is_cutting(m, s)))
}

/// Every t-fold s-blocking subset of PG(k-1, q) (for small geometries).
pub fn all_t_fold_blocking(k: usize, q: u32, t: usize, s: usize) -> Result<Vec<PGPointSet>> {
    let search = SubsetSearch::new(k, q, s, usize::MAX)?;
    let n = search.points.len();
    Ok((0..1u64 << n).filter(|&m| search.is_t_fold(m, t)).map(|m| search.set(m)).collect())
}

/// Bounds that apply to a concrete t-fold s-blocking set `b`: the spanning
/// case is read off its complement.
pub fn bounds_for(b: &PGPointSet, t: u64, s: usize) -> Result<BoundReport> {
    blocking_bounds(t, s, b.k, b.field.q(), b.complement().spans())
}
