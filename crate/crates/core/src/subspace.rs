//! Subspaces of GF(q)^k in canonical form, their deterministic enumeration,
//! Gaussian binomials, orthogonal complements and the column multiplicity
//! function `m_G(V)`.
//!
//! # Enumeration order
//!
//! An `s`-dimensional subspace is identified with its reduced row echelon
//! basis. Subspaces are listed first by pivot-column set, ordered
//! lexicographically by indicator vector (column 0 most significant, so the
//! sets with late pivots come first), then by base-q counting over the free
//! entries taken in row-major order with the first free entry as the most
//! significant digit. The order is frozen: ordinals are stable across runs and
//! machines, and any ordinal range can be scanned on its own.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{axpy, Matrix};

/// Number of `s`-dimensional subspaces of GF(q)^k, exactly.
pub fn gaussian_binomial(k: usize, s: usize, q: u32) -> Result<BigUint> {
    if s > k {
        return Err(Error::OutOfRange(format!("subspace dimension {s} exceeds ambient dimension {k}")));
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..s {
        num *= q.pow((k - i) as u32) - 1u32;
        den *= q.pow((s - i) as u32) - 1u32;
    }
    Ok(num / den)
}

/// Canonical basis of a subspace: RREF rows, `s × k`, with pivot columns.
#[derive(Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    k: usize,
    rows: Vec<Elem>,
    pivots: Vec<usize>,
}

/// Borrowed view of a canonical basis, used in hot enumeration loops.
#[derive(Clone, Copy)]
pub struct BasisView<'a> {
    pub k: usize,
    pub rows: &'a [Elem],
    pub pivots: &'a [usize],
}

impl<'a> BasisView<'a> {
    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    #[inline]
    pub fn row(&self, i: usize) -> &'a [Elem] {
        &self.rows[i * self.k..(i + 1) * self.k]
    }

    /// Membership by reduction against the RREF basis.
    #[inline]
    pub fn contains(&self, f: &Field, x: &[Elem]) -> bool {
        let mut acc = vec![0; self.k];
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = x[p];
            if c != 0 {
                axpy(f, &mut acc, c, self.row(i));
            }
        }
        acc == x
    }
}

impl SubspaceBasis {
    /// Span of the rows of `m`, in canonical form.
    pub fn span(m: &Matrix) -> Self {
        let r = m.rref();
        let k = m.cols();
        let rows = r.matrix.data()[..r.rank * k].to_vec();
        SubspaceBasis { field: m.field().clone(), k, rows, pivots: r.pivots }
    }

    pub fn zero(field: &Field, k: usize) -> Self {
        SubspaceBasis { field: field.clone(), k, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, k: usize) -> Self {
        Self::span(&Matrix::identity(field, k))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Ambient dimension.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Subspace dimension.
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.rows[i * self.k..(i + 1) * self.k]
    }

    pub fn basis(&self) -> Matrix {
        Matrix::from_flat(&self.field, self.dim(), self.k, self.rows.clone()).expect("valid basis")
    }

    pub fn view(&self) -> BasisView<'_> {
        BasisView { k: self.k, rows: &self.rows, pivots: &self.pivots }
    }

    pub fn contains(&self, x: &[Elem]) -> bool {
        x.len() == self.k && self.view().contains(&self.field, x)
    }

    /// Canonical basis of the Euclidean orthogonal complement.
    pub fn orthogonal_complement(&self) -> SubspaceBasis {
        if self.dim() == 0 {
            return Self::full(&self.field, self.k);
        }
        Self::span(&self.basis().nullspace())
    }

    /// Position in the enumeration of all `dim()`-dimensional subspaces of
    /// GF(q)^k.
    pub fn ordinal(&self) -> BigUint {
        let q = self.field.q();
        let (k, s) = (self.k, self.dim());
        let qb = BigUint::from(q);
        let base = (s * s.saturating_sub(1) / 2) as i64;
        let mut total = BigUint::zero();
        let mut prefix_exp = 0i64;
        let mut used = 0usize;
        for c in 0..k {
            let in_set = self.pivots.contains(&c);
            if in_set {
                // patterns that agree before c and skip c
                let r = s - used;
                let m = k - 1 - c;
                if r <= m {
                    let exp = prefix_exp + (r * r.saturating_sub(1) / 2) as i64 - base;
                    debug_assert!(exp >= 0);
                    total += qb.pow(exp as u32) * gaussian_binomial(m, r, q).unwrap();
                }
                prefix_exp += (k - 1 - c) as i64;
                used += 1;
            }
        }
        // free digits, first most significant
        let mut local = BigUint::zero();
        for (i, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..k {
                if !self.pivots.contains(&c) {
                    local = local * q + self.rows[i * k + c] as u32;
                }
            }
        }
        total + local
    }
}

impl std::fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<&[Elem]> = (0..self.dim()).map(|i| self.row(i)).collect();
        f.debug_struct("SubspaceBasis").field("k", &self.k).field("rows", &rows).finish()
    }
}

#[derive(Clone, Debug)]
struct Pattern {
    pivots: Vec<usize>,
    /// Flat `row * k + col` positions of the free entries, row-major.
    free: Vec<usize>,
}

/// Deterministic enumeration of all `s`-dimensional subspaces of GF(q)^k.
#[derive(Clone, Debug)]
pub struct SubspaceEnumerator {
    field: Field,
    k: usize,
    s: usize,
    patterns: Vec<Pattern>,
    /// `offsets[i]` is the ordinal of the first subspace with pattern `i`;
    /// the last entry is the total.
    offsets: Vec<u64>,
}

impl SubspaceEnumerator {
    /// Fails if the number of subspaces exceeds `budget`.
    pub fn new(field: &Field, k: usize, s: usize, budget: u64) -> Result<Self> {
        if s > k {
            return Err(Error::OutOfRange(format!("subspace dimension {s} exceeds ambient dimension {k}")));
        }
        let count = gaussian_binomial(k, s, field.q())?;
        if count > BigUint::from(budget) {
            return Err(Error::budget("subspaces", count, budget));
        }
        let mut patterns = Vec::new();
        let mut current = Vec::with_capacity(s);
        collect_patterns(k, s, 0, &mut current, &mut patterns);
        let q = field.q() as u64;
        let mut offsets = Vec::with_capacity(patterns.len() + 1);
        let mut acc = 0u64;
        for p in &patterns {
            offsets.push(acc);
            acc += q.pow(p.free.len() as u32);
        }
        offsets.push(acc);
        debug_assert_eq!(BigUint::from(acc), count);
        Ok(SubspaceEnumerator { field: field.clone(), k, s, patterns, offsets })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> u64 {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, ordinal: u64) -> Option<SubspaceBasis> {
        (ordinal < self.len()).then(|| {
            let cur = Cursor::new(self, ordinal, ordinal + 1);
            SubspaceBasis {
                field: self.field.clone(),
                k: self.k,
                rows: cur.rows.clone(),
                pivots: self.patterns[cur.pattern].pivots.clone(),
            }
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = SubspaceBasis> + '_ {
        self.range(0, self.len())
    }

    pub fn range(&self, lo: u64, hi: u64) -> impl Iterator<Item = SubspaceBasis> + '_ {
        let mut cur = Cursor::new(self, lo, hi.min(self.len()));
        std::iter::from_fn(move || {
            let (_, view) = cur.next()?;
            Some(SubspaceBasis {
                field: self.field.clone(),
                k: self.k,
                rows: view.rows.to_vec(),
                pivots: view.pivots.to_vec(),
            })
        })
    }

    /// Calls `f(ordinal, basis)` for each subspace in `[lo, hi)` without
    /// allocating per item.
    pub fn for_each_in<F: FnMut(u64, BasisView<'_>)>(&self, lo: u64, hi: u64, mut f: F) {
        let mut cur = Cursor::new(self, lo, hi.min(self.len()));
        while let Some((ord, view)) = cur.next() {
            f(ord, view);
        }
    }

    fn chunks(&self) -> Vec<(u64, u64)> {
        let total = self.len();
        let threads = rayon::current_num_threads() as u64;
        let size = (total / (threads * 16)).clamp(512, 1 << 16);
        (0..total.div_ceil(size)).map(|i| (i * size, ((i + 1) * size).min(total))).collect()
    }

    /// Parallel fold over all subspaces. `reduce` must be associative and
    /// commutative; the result does not depend on the partitioning.
    pub fn par_fold<A, I, F, R>(&self, identity: I, fold: F, reduce: R) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, u64, BasisView<'_>) + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        self.chunks()
            .into_par_iter()
            .map(|(lo, hi)| {
                let mut acc = identity();
                self.for_each_in(lo, hi, |ord, v| fold(&mut acc, ord, v));
                acc
            })
            .reduce(&identity, &reduce)
    }

    /// Smallest ordinal whose subspace satisfies `pred`, with its value.
    pub fn par_find_first<T, F>(&self, pred: F) -> Option<(u64, T)>
    where
        T: Send,
        F: Fn(u64, BasisView<'_>) -> Option<T> + Sync + Send,
    {
        self.chunks().into_par_iter().find_map_first(|(lo, hi)| {
            let mut cur = Cursor::new(self, lo, hi);
            while let Some((ord, v)) = cur.next() {
                if let Some(t) = pred(ord, v) {
                    return Some((ord, t));
                }
            }
            None
        })
    }
}

fn collect_patterns(k: usize, s: usize, col: usize, current: &mut Vec<usize>, out: &mut Vec<Pattern>) {
    if current.len() == s {
        let mut free = Vec::new();
        for (i, &p) in current.iter().enumerate() {
            for c in p + 1..k {
                if !current.contains(&c) {
                    free.push(i * k + c);
                }
            }
        }
        out.push(Pattern { pivots: current.clone(), free });
        return;
    }
    if k - col < s - current.len() {
        return;
    }
    // indicator 0 at `col` sorts before 1
    collect_patterns(k, s, col + 1, current, out);
    current.push(col);
    collect_patterns(k, s, col + 1, current, out);
    current.pop();
}

struct Cursor<'a> {
    en: &'a SubspaceEnumerator,
    pattern: usize,
    digits: Vec<Elem>,
    rows: Vec<Elem>,
    next_ord: u64,
    end: u64,
    fresh: bool,
}

impl<'a> Cursor<'a> {
    fn new(en: &'a SubspaceEnumerator, lo: u64, hi: u64) -> Self {
        let mut c = Cursor {
            en,
            pattern: 0,
            digits: Vec::new(),
            rows: vec![0; en.s * en.k],
            next_ord: lo,
            end: hi,
            fresh: true,
        };
        if lo < hi {
            c.seek(lo);
        }
        c
    }

    fn seek(&mut self, ord: u64) {
        let en = self.en;
        let pattern = en.offsets.partition_point(|&o| o <= ord) - 1;
        self.load_pattern(pattern);
        let q = en.field.q() as u64;
        let mut local = ord - en.offsets[pattern];
        for i in (0..self.digits.len()).rev() {
            let d = (local % q) as Elem;
            local /= q;
            self.digits[i] = d;
            self.rows[en.patterns[pattern].free[i]] = d;
        }
    }

    fn load_pattern(&mut self, pattern: usize) {
        let en = self.en;
        let pat = &en.patterns[pattern];
        self.pattern = pattern;
        self.rows.iter_mut().for_each(|x| *x = 0);
        for (i, &p) in pat.pivots.iter().enumerate() {
            self.rows[i * en.k + p] = 1;
        }
        self.digits.clear();
        self.digits.resize(pat.free.len(), 0);
    }

    fn advance(&mut self) {
        let en = self.en;
        let q = en.field.q() as Elem;
        let free = &en.patterns[self.pattern].free;
        for i in (0..self.digits.len()).rev() {
            let d = self.digits[i] + 1;
            if d < q {
                self.digits[i] = d;
                self.rows[free[i]] = d;
                return;
            }
            self.digits[i] = 0;
            self.rows[free[i]] = 0;
        }
        if self.pattern + 1 < en.patterns.len() {
            self.load_pattern(self.pattern + 1);
        }
    }

    fn next(&mut self) -> Option<(u64, BasisView<'_>)> {
        if self.next_ord >= self.end {
            return None;
        }
        if !self.fresh {
            self.advance();
        }
        self.fresh = false;
        let ord = self.next_ord;
        self.next_ord += 1;
        let en = self.en;
        Some((ord, BasisView { k: en.k, rows: &self.rows, pivots: &en.patterns[self.pattern].pivots }))
    }
}

/// Number of columns of `g` lying in `v` (columns live in GF(q)^k).
pub fn multiplicity(g: &Matrix, v: &SubspaceBasis) -> Result<usize> {
    if g.rows() != v.k() {
        return Err(Error::DimensionMismatch(format!(
            "columns of length {} against a subspace of GF(q)^{}",
            g.rows(),
            v.k()
        )));
    }
    let view = v.view();
    Ok((0..g.cols()).filter(|&j| view.contains(g.field(), &g.column(j))).count())
}

/// The columns of a `k × n` matrix as a multiset, prepared for fast
/// `m_G(V)` evaluation over many subspaces `V`.
pub struct ColumnMultiset {
    field: Field,
    k: usize,
    n: usize,
    /// Column-major copy: column `j` is `cols[j*k..(j+1)*k]`.
    cols: Vec<Elem>,
    /// Count of columns equal to each vector, indexed by base-q ordinal with
    /// coordinate 0 most significant. Present when q^k is small.
    counts: Option<Vec<u32>>,
}

const COUNT_TABLE_LIMIT: u64 = 1 << 22;

impl ColumnMultiset {
    pub fn new(g: &Matrix) -> Self {
        let (k, n) = (g.rows(), g.cols());
        let f = g.field().clone();
        let mut cols = Vec::with_capacity(k * n);
        for j in 0..n {
            cols.extend(g.column(j));
        }
        let q = f.q() as u64;
        let counts = q.checked_pow(k as u32).filter(|&t| t <= COUNT_TABLE_LIMIT).map(|t| {
            let mut counts = vec![0u32; t as usize];
            for j in 0..n {
                counts[vector_ordinal(q, &cols[j * k..(j + 1) * k])] += 1;
            }
            counts
        });
        ColumnMultiset { field: f, k, n, cols, counts }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `m_G(V)`: number of columns lying in `v`.
    pub fn count_in(&self, v: BasisView<'_>) -> usize {
        let dim = v.dim();
        let q = self.field.q() as u64;
        if let Some(counts) = &self.counts {
            let enum_cost = q.saturating_pow(dim as u32);
            if enum_cost <= (self.n as u64) * (dim as u64 + 1) {
                return self.count_by_span(v, counts);
            }
        }
        (0..self.n).filter(|&j| v.contains(&self.field, &self.cols[j * self.k..(j + 1) * self.k])).count()
    }

    fn count_by_span(&self, v: BasisView<'_>, counts: &[u32]) -> usize {
        let f = &self.field;
        let q = f.q() as u64;
        let (k, dim) = (self.k, v.dim());
        // odometer over coefficient vectors with prefix sums
        let mut coeffs = vec![0 as Elem; dim];
        let mut partial = vec![0 as Elem; (dim + 1) * k];
        let mut total = counts[0] as usize;
        loop {
            // advance the least significant coefficient
            let mut i = dim;
            loop {
                if i == 0 {
                    return total;
                }
                i -= 1;
                if (coeffs[i] as u64) + 1 < q {
                    coeffs[i] += 1;
                    break;
                }
                coeffs[i] = 0;
            }
            for level in i..dim {
                let (head, tail) = partial.split_at_mut((level + 1) * k);
                let src = &head[level * k..];
                let dst = &mut tail[..k];
                dst.copy_from_slice(src);
                if coeffs[level] != 0 {
                    axpy(f, dst, coeffs[level], v.row(level));
                }
            }
            total += counts[vector_ordinal(q, &partial[dim * k..])] as usize;
        }
    }
}

/// Base-q ordinal of a vector, coordinate 0 most significant.
#[inline]
pub(crate) fn vector_ordinal(q: u64, x: &[Elem]) -> usize {
    x.iter().fold(0u64, |acc, &d| acc * q + d as u64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(7, 0, 3).unwrap(), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(5, 2, 2).unwrap(), BigUint::from(155u32));
        assert_eq!(gaussian_binomial(5, 2, 5).unwrap(), BigUint::from(20306u32));
        assert_eq!(gaussian_binomial(8, 3, 2).unwrap(), BigUint::from(97155u32));
        assert_eq!(gaussian_binomial(5, 2, 3).unwrap(), BigUint::from(1210u32));
        assert!(gaussian_binomial(2, 3, 2).is_err());
    }

    /// Counts subspaces by collecting the distinct spans of all s-tuples of
    /// vectors; independent of the pattern enumeration.
    fn brute_force_count(q: u32, k: usize, s: usize) -> usize {
        let f = gf(q);
        let vectors: Vec<Vec<u32>> = (0..(q as usize).pow(k as u32))
            .map(|mut o| {
                let mut v = vec![0u32; k];
                for x in v.iter_mut().rev() {
                    *x = (o % q as usize) as u32;
                    o /= q as usize;
                }
                v
            })
            .collect();
        let mut seen = HashSet::new();
        let mut idx = vec![0usize; s];
        loop {
            let rows: Vec<Vec<u32>> = idx.iter().map(|&i| vectors[i].clone()).collect();
            let m = Matrix::from_rows(&f, &rows).unwrap();
            let span = SubspaceBasis::span(&m);
            if span.dim() == s {
                seen.insert(span.rows.clone());
            }
            let mut p = s;
            loop {
                if p == 0 {
                    return seen.len();
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < vectors.len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    #[test]
    fn brute_force_counts_match_binomials() {
        assert_eq!(brute_force_count(2, 5, 2), 155);
        assert_eq!(brute_force_count(3, 3, 2), 13);
        assert_eq!(brute_force_count(2, 4, 3), 15);
    }

    #[test]
    fn stream_counts_match_binomials() {
        for q in [2u32, 3, 4, 5] {
            for k in 0..=6usize {
                for s in 0..=k {
                    let expected = gaussian_binomial(k, s, q).unwrap();
                    if expected > BigUint::from(40_000u32) {
                        continue;
                    }
                    let en = SubspaceEnumerator::new(&gf(q), k, s, u64::MAX).unwrap();
                    assert_eq!(BigUint::from(en.len()), expected);
                    let mut seen = HashSet::new();
                    let mut n = 0u64;
                    en.for_each_in(0, en.len(), |ord, v| {
                        assert_eq!(ord, n);
                        n += 1;
                        let m = Matrix::from_flat(&gf(q), s, k, v.rows.to_vec()).unwrap();
                        let r = m.rref();
                        assert_eq!(r.rank, s);
                        assert_eq!(r.matrix, m, "emitted basis is not in RREF");
                        assert!(seen.insert(v.rows.to_vec()), "repeated basis");
                    });
                    assert_eq!(n, en.len());
                }
            }
        }
    }

    #[test]
    fn documented_order_first_items() {
        let en = SubspaceEnumerator::new(&gf(2), 3, 1, 100).unwrap();
        assert_eq!(en.len(), 7);
        let all: Vec<Vec<Elem>> = en.iter().map(|b| b.row(0).to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![1, 0, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![1, 1, 1]
            ]
        );
        let full = SubspaceEnumerator::new(&gf(3), 4, 4, 10).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full.get(0).unwrap().basis(), Matrix::identity(&gf(3), 4));
        assert_eq!(SubspaceEnumerator::new(&gf(3), 5, 2, 5000).unwrap().len(), 1210);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            SubspaceEnumerator::new(&gf(2), 8, 3, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ordinals_roundtrip_and_ranges_agree() {
        for (q, k, s) in [(2u32, 5usize, 2usize), (3, 4, 2), (4, 3, 1), (5, 3, 2), (2, 6, 3)] {
            let en = SubspaceEnumerator::new(&gf(q), k, s, u64::MAX).unwrap();
            let all: Vec<SubspaceBasis> = en.iter().collect();
            for (i, b) in all.iter().enumerate() {
                assert_eq!(b.ordinal(), BigUint::from(i));
                assert_eq!(&en.get(i as u64).unwrap(), b);
            }
            let mid = en.len() / 3;
            let tail: Vec<SubspaceBasis> = en.range(mid, en.len()).collect();
            assert_eq!(&tail[..], &all[mid as usize..]);
        }
    }

    #[test]
    fn complement_examples() {
        let f = gf(2);
        let e1 = SubspaceBasis::span(&Matrix::from_rows(&f, &[[1, 0, 0]]).unwrap());
        let c = e1.orthogonal_complement();
        assert_eq!(c.basis(), Matrix::from_rows(&f, &[[0, 1, 0], [0, 0, 1]]).unwrap());
        let full = SubspaceBasis::full(&f, 3);
        assert_eq!(full.orthogonal_complement().dim(), 0);
        assert_eq!(SubspaceBasis::zero(&f, 3).orthogonal_complement(), full);
    }

    #[test]
    fn double_complement_is_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for i in 0..1000 {
            let q = [2u32, 3, 4, 5, 7][i % 5];
            let f = gf(q);
            let k = rng.gen_range(1..7);
            let s = rng.gen_range(0..=k);
            let data: Vec<Elem> = (0..s * k).map(|_| rng.gen_range(0..q) as Elem).collect();
            let v = SubspaceBasis::span(&Matrix::from_flat(&f, s, k, data).unwrap());
            let c = v.orthogonal_complement();
            assert_eq!(c.dim(), k - v.dim());
            assert_eq!(c.orthogonal_complement(), v);
            // every basis pair is orthogonal
            for a in 0..v.dim() {
                for b in 0..c.dim() {
                    let dot = v.row(a).iter().zip(c.row(b)).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                    assert_eq!(dot, 0);
                }
            }
        }
    }

    fn simplex_matrix(q: u32, k: usize) -> Matrix {
        let f = gf(q);
        let mut cols = Vec::new();
        for o in 1..(q as usize).pow(k as u32) {
            let mut v = vec![0 as Elem; k];
            let mut x = o;
            for d in v.iter_mut().rev() {
                *d = (x % q as usize) as Elem;
                x /= q as usize;
            }
            if v.iter().find(|&&d| d != 0) == Some(&1) {
                cols.push(v);
            }
        }
        Matrix::from_columns(&f, k, &cols).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let f = gf(2);
        let s23 = simplex_matrix(2, 3);
        let plane = SubspaceBasis::span(&Matrix::from_rows(&f, &[[1, 0, 0], [0, 1, 0]]).unwrap());
        assert_eq!(multiplicity(&s23, &plane).unwrap(), 3);
        let g = Matrix::from_rows(&f, &[[1, 0, 0, 1], [0, 0, 1, 1], [1, 0, 0, 0]]).unwrap();
        assert_eq!(multiplicity(&g, &SubspaceBasis::zero(&f, 3)).unwrap(), 1);
        assert!(multiplicity(&g, &SubspaceBasis::zero(&f, 2)).is_err());
    }

    #[test]
    fn simplex_multiplicity_is_projective_point_count() {
        for q in [2u32, 3] {
            for k in 2..=5usize {
                let g = simplex_matrix(q, k);
                let ms = ColumnMultiset::new(&g);
                for d in 0..=k {
                    let expected = ((q as usize).pow(d as u32) - 1) / (q as usize - 1);
                    let en = SubspaceEnumerator::new(&gf(q), k, d, 2_000).unwrap();
                    en.for_each_in(0, en.len(), |_, v| {
                        assert_eq!(ms.count_in(v), expected);
                    });
                    if d <= 2 {
                        for v in en.iter().take(20) {
                            assert_eq!(multiplicity(&g, &v).unwrap(), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn double_count_identity() {
        // Σ_V m_G(V) over (k-s)-subspaces = n [k-1 choose k-s-1]_q for nonzero columns
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for q in [2u32, 3, 4] {
            let f = gf(q);
            for k in 2..=4usize {
                let n = rng.gen_range(1..10);
                let mut data = Vec::new();
                for _ in 0..n {
                    let mut col: Vec<Elem>;
                    loop {
                        col = (0..k).map(|_| rng.gen_range(0..q) as Elem).collect();
                        if col.iter().any(|&x| x != 0) {
                            break;
                        }
                    }
                    data.push(col);
                }
                let g = Matrix::from_columns(&f, k, &data).unwrap();
                let ms = ColumnMultiset::new(&g);
                for s in 1..k {
                    let en = SubspaceEnumerator::new(&f, k, k - s, u64::MAX).unwrap();
                    let sum = en.par_fold(|| 0u64, |acc, _, v| *acc += ms.count_in(v) as u64, |a, b| a + b);
                    let expected = gaussian_binomial(k - 1, k - s - 1, q).unwrap() * n as u64;
                    assert_eq!(BigUint::from(sum), expected);
                }
            }
        }
    }

    #[test]
    fn column_multiset_strategies_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for q in [2u32, 3, 5, 4] {
            let f = gf(q);
            let k = 4;
            let n = rng.gen_range(1..30);
            let data: Vec<Elem> = (0..k * n).map(|_| rng.gen_range(0..q) as Elem).collect();
            let g = Matrix::from_flat(&f, k, n, data).unwrap();
            let ms = ColumnMultiset::new(&g);
            for d in 0..=k {
                let en = SubspaceEnumerator::new(&f, k, d, u64::MAX).unwrap();
                for v in en.iter() {
                    let direct = multiplicity(&g, &v).unwrap();
                    assert_eq!(ms.count_in(v.view()), direct);
                    assert_eq!(ms.count_by_span(v.view(), ms.counts.as_ref().unwrap()), direct);
                }
            }
        }
    }

    #[test]
    fn par_find_first_is_earliest() {
        let en = SubspaceEnumerator::new(&gf(3), 5, 2, u64::MAX).unwrap();
        let hit = en.par_find_first(|ord, _| (ord % 97 == 96).then_some(())).unwrap();
        assert_eq!(hit.0, 96);
        assert!(en.par_find_first(|_, _| None::<()>).is_none());
    }
}
