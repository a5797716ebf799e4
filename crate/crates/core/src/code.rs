//! Linear codes given by a generator matrix.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::bits::{words_for, Bits};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::{axpy, Matrix};
use crate::subspace::{BasisView, ColumnMultiset, SubspaceBasis};

/// An `[n, k]_q` linear code.
///
/// The generator is kept in reduced row echelon form; messages are taken
/// relative to it, so message ordinals do not depend on the input basis.
/// The input matrix is retained for echoing.
#[derive(Clone)]
pub struct LinearCode {
    field: Field,
    original: Matrix,
    gen: Matrix,
    pivots: Vec<usize>,
    dependent_rows: bool,
    pcheck: OnceLock<Matrix>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]_{} code", self.n(), self.k(), self.field.q())
    }
}

/// Minimum and maximum weight nonzero codewords and the full weight
/// distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremal {
    /// `(message ordinal, codeword)` of the lightest nonzero codeword.
    pub min: (u64, Vec<Elem>),
    /// `(message ordinal, codeword)` of the heaviest codeword.
    pub max: (u64, Vec<Elem>),
    /// `distribution[w]` = number of codewords of weight `w`, `w ∈ [0, n]`.
    pub distribution: Vec<u64>,
}

impl Extremal {
    pub fn min_weight(&self) -> usize {
        weight(&self.min.1)
    }

    pub fn max_weight(&self) -> usize {
        weight(&self.max.1)
    }

    /// Nonzero weights that occur, with multiplicities.
    pub fn nonzero_weights(&self) -> Vec<(usize, u64)> {
        self.distribution.iter().enumerate().skip(1).filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c)).collect()
    }
}

#[inline]
pub(crate) fn weight(x: &[Elem]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

impl LinearCode {
    /// Builds the code spanned by the rows of `m`. Dependent rows are dropped
    /// and flagged.
    pub fn from_generator(m: &Matrix) -> Result<Self> {
        if m.rows() == 0 || m.cols() == 0 {
            return Err(Error::ZeroCode);
        }
        let r = m.rref();
        if r.rank == 0 {
            return Err(Error::ZeroCode);
        }
        let n = m.cols();
        let gen = Matrix::from_flat(m.field(), r.rank, n, r.matrix.data()[..r.rank * n].to_vec())?;
        Ok(LinearCode {
            field: m.field().clone(),
            original: m.clone(),
            gen,
            pivots: r.pivots,
            dependent_rows: r.rank < m.rows(),
            pcheck: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Reduced generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// The matrix the code was built from.
    pub fn original(&self) -> &Matrix {
        &self.original
    }

    /// Information set of the reduced generator.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// True if the input had linearly dependent rows.
    pub fn had_dependent_rows(&self) -> bool {
        self.dependent_rows
    }

    /// Parity-check matrix, `(n-k) × n`, computed once.
    pub fn pcheck(&self) -> &Matrix {
        self.pcheck.get_or_init(|| self.gen.nullspace())
    }

    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::FullSpaceDual { n: self.n() });
        }
        LinearCode::from_generator(self.pcheck())
    }

    /// `y · G` for a message `y` of length `k`.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k() {
            return Err(Error::DimensionMismatch(format!("message of length {} for k = {}", msg.len(), self.k())));
        }
        Ok(self.gen.vec_mul(msg))
    }

    /// Message vector with the given ordinal (first coordinate most significant).
    pub fn message(&self, ordinal: u64) -> Vec<Elem> {
        let q = self.q() as u64;
        let mut out = vec![0; self.k()];
        let mut x = ordinal;
        for d in out.iter_mut().rev() {
            *d = (x % q) as Elem;
            x /= q;
        }
        out
    }

    /// Number of messages, `q^k`, if it fits in a `u64`.
    pub fn message_count(&self) -> Option<u64> {
        (self.q() as u64).checked_pow(self.k() as u32)
    }

    /// All columns nonzero and pairwise independent.
    pub fn is_projective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        (0..self.n()).all(|j| match normalize(&self.field, &self.gen.column(j)) {
            Some(p) => seen.insert(p),
            None => false,
        })
    }

    /// Keeps the first column of each projective class.
    pub fn projectivize(&self) -> Result<LinearCode> {
        let mut seen = std::collections::HashSet::new();
        let mut keep = Vec::new();
        for j in 0..self.n() {
            let p = normalize(&self.field, &self.gen.column(j)).ok_or(Error::ZeroColumn(j))?;
            if seen.insert(p) {
                keep.push(j);
            }
        }
        LinearCode::from_generator(&self.original.columns_unchecked(&keep))
    }

    /// Deletes the given coordinates. The dimension must not drop.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        let n = self.n();
        let mut drop = vec![false; n];
        for &c in coords {
            if c >= n {
                return Err(Error::IndexOutOfRange { index: c, len: n });
            }
            drop[c] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&j| !drop[j]).collect();
        let m = self.original.columns_unchecked(&keep);
        let rank = if keep.is_empty() { 0 } else { m.rank() };
        if rank < self.k() {
            return Err(Error::RankDrop { from: self.k(), to: rank });
        }
        LinearCode::from_generator(&m)
    }

    /// Support of the subcode `{ y·G : y ∈ V }`.
    pub fn subcode_support(&self, v: &SubspaceBasis) -> Result<Bits> {
        if v.k() != self.k() || v.field() != &self.field {
            return Err(Error::DimensionMismatch(format!("subspace of GF(q)^{} for a code with k = {}", v.k(), self.k())));
        }
        if v.dim() == 0 {
            return Err(Error::OutOfRange("the zero subspace has no subcode".into()));
        }
        let s = self.support_of_view(v.view());
        debug_assert_eq!(
            s.count_ones(),
            self.n() - crate::subspace::multiplicity(&self.gen, &v.orthogonal_complement()).unwrap()
        );
        Ok(s)
    }

    pub(crate) fn support_of_view(&self, v: BasisView<'_>) -> Bits {
        let mut s = Bits::zeros(self.n());
        for i in 0..v.dim() {
            let cw = self.gen.vec_mul(v.row(i));
            for (j, &x) in cw.iter().enumerate() {
                if x != 0 {
                    s.set(j);
                }
            }
        }
        s
    }

    pub fn column_multiset(&self) -> ColumnMultiset {
        ColumnMultiset::new(&self.gen)
    }

    fn check_codeword_budget(&self, budget: &Budget) -> Result<u64> {
        match self.message_count() {
            Some(t) if t <= budget.codewords => Ok(t),
            _ => Err(Error::budget(
                "codewords",
                num_bigint::BigUint::from(self.q()).pow(self.k() as u32),
                budget.codewords,
            )),
        }
    }

    /// Calls `f(message ordinal, codeword)` for messages in `[lo, hi)`.
    pub fn for_each_codeword_in<F: FnMut(u64, &[Elem])>(&self, lo: u64, hi: u64, mut f: F) {
        let (k, n) = (self.k(), self.n());
        let q = self.q() as u64;
        if lo >= hi {
            return;
        }
        let fld = &self.field;
        let mut digits = self.message(lo);
        let mut partial = vec![0 as Elem; (k + 1) * n];
        let refresh = |partial: &mut Vec<Elem>, digits: &[Elem], from: usize| {
            for level in from..k {
                let (head, tail) = partial.split_at_mut((level + 1) * n);
                let dst = &mut tail[..n];
                dst.copy_from_slice(&head[level * n..]);
                if digits[level] != 0 {
                    axpy(fld, dst, digits[level], self.gen.row(level));
                }
            }
        };
        refresh(&mut partial, &digits, 0);
        let mut ord = lo;
        loop {
            f(ord, &partial[k * n..]);
            ord += 1;
            if ord >= hi {
                return;
            }
            let mut i = k;
            loop {
                i -= 1;
                if (digits[i] as u64) + 1 < q {
                    digits[i] += 1;
                    break;
                }
                digits[i] = 0;
            }
            refresh(&mut partial, &digits, i);
        }
    }

    fn message_chunks(&self, total: u64) -> Vec<(u64, u64)> {
        let size = (total / (rayon::current_num_threads() as u64 * 16)).clamp(256, 1 << 16);
        (0..total.div_ceil(size)).map(|i| (i * size, ((i + 1) * size).min(total))).collect()
    }

    /// Extremal codewords and weight distribution by full enumeration.
    /// Ties are broken by the smallest message ordinal.
    pub fn extremal_codewords(&self, budget: &Budget) -> Result<Extremal> {
        let total = self.check_codeword_budget(budget)?;
        let n = self.n();
        type Acc = (Vec<u64>, Option<(usize, u64)>, Option<(usize, u64)>);
        let better_min = |a: Option<(usize, u64)>, b: Option<(usize, u64)>| match (a, b) {
            (Some(x), Some(y)) => Some(if (x.0, x.1) <= (y.0, y.1) { x } else { y }),
            (x, None) => x,
            (None, y) => y,
        };
        let better_max = |a: Option<(usize, u64)>, b: Option<(usize, u64)>| match (a, b) {
            (Some(x), Some(y)) => Some(if x.0 > y.0 || (x.0 == y.0 && x.1 <= y.1) { x } else { y }),
            (x, None) => x,
            (None, y) => y,
        };
        let (dist, min, max): Acc = self
            .message_chunks(total)
            .into_par_iter()
            .map(|(lo, hi)| {
                let mut acc: Acc = (vec![0; n + 1], None, None);
                self.for_each_codeword_in(lo, hi, |ord, cw| {
                    let w = weight(cw);
                    acc.0[w] += 1;
                    if w > 0 {
                        acc.1 = better_min(acc.1, Some((w, ord)));
                        acc.2 = better_max(acc.2, Some((w, ord)));
                    }
                });
                acc
            })
            .reduce(
                || (vec![0; n + 1], None, None),
                |mut a, b| {
                    a.0.iter_mut().zip(&b.0).for_each(|(x, y)| *x += y);
                    (a.0, better_min(a.1, b.1), better_max(a.2, b.2))
                },
            );
        let pick = |o: (usize, u64)| (o.1, self.gen.vec_mul(&self.message(o.1)));
        Ok(Extremal { min: pick(min.expect("k >= 1")), max: pick(max.expect("k >= 1")), distribution: dist })
    }

    /// Weight distribution `A_w`, `w ∈ [0, n]`.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<Vec<u64>> {
        Ok(self.extremal_codewords(budget)?.distribution)
    }

    /// Support of every codeword, indexed by message ordinal, packed as
    /// `words_for(n)` words each. `None` if the table would be too large.
    pub(crate) fn support_table(&self) -> Option<SupportTable> {
        let total = self.message_count()?;
        let words = words_for(self.n());
        if total > SUPPORT_TABLE_LIMIT || total * words as u64 > SUPPORT_TABLE_LIMIT * 4 {
            return None;
        }
        let mut data = vec![0u64; total as usize * words];
        self.for_each_codeword_in(0, total, |ord, cw| {
            let row = &mut data[ord as usize * words..(ord as usize + 1) * words];
            for (j, &x) in cw.iter().enumerate() {
                if x != 0 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        });
        Some(SupportTable { q: self.q() as u64, words, data })
    }
}

const SUPPORT_TABLE_LIMIT: u64 = 1 << 20;

pub(crate) struct SupportTable {
    q: u64,
    pub words: usize,
    data: Vec<u64>,
}

impl SupportTable {
    #[inline]
    pub fn get(&self, msg: &[Elem]) -> &[u64] {
        let o = crate::subspace::vector_ordinal(self.q, msg);
        &self.data[o * self.words..(o + 1) * self.words]
    }

    /// Support of the span of the basis rows of `v`, written into `out`.
    #[inline]
    pub fn span_support(&self, v: BasisView<'_>, out: &mut [u64]) {
        out.iter_mut().for_each(|w| *w = 0);
        for i in 0..v.dim() {
            for (o, &x) in out.iter_mut().zip(self.get(v.row(i))) {
                *o |= x;
            }
        }
    }
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub(crate) fn normalize(f: &Field, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv_nz(lead);
    Some(v.iter().map(|&x| f.mul(x, inv)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::{multiplicity, SubspaceEnumerator};

    fn gf(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    fn ex953() -> LinearCode {
        let f = gf(2);
        let rows: Vec<Vec<u32>> = ["100010111", "010010110", "001010101", "000110011", "000001111"]
            .iter()
            .map(|r| r.bytes().map(|b| (b - b'0') as u32).collect())
            .collect();
        LinearCode::from_generator(&Matrix::from_rows(&f, &rows).unwrap()).unwrap()
    }

    #[test]
    fn construction_and_dependent_rows() {
        let c = ex953();
        assert_eq!((c.n(), c.k()), (9, 5));
        assert!(!c.had_dependent_rows());
        let f = gf(3);
        let m = Matrix::from_rows(&f, &[[1, 2, 0], [2, 1, 0], [0, 0, 1]]).unwrap();
        let c = LinearCode::from_generator(&m).unwrap();
        assert_eq!(c.k(), 2);
        assert!(c.had_dependent_rows());
        assert_eq!(LinearCode::from_generator(&Matrix::zeros(&f, 2, 3)), Err(Error::ZeroCode));
        assert_eq!(LinearCode::from_generator(&Matrix::zeros(&f, 0, 3)), Err(Error::ZeroCode));
    }

    #[test]
    fn pcheck_is_orthogonal() {
        let c = ex953();
        let h = c.pcheck();
        assert_eq!(h.rows(), 4);
        assert!(c.generator().mul(&h.transpose()).unwrap().is_zero());
        assert_eq!(h.rank(), 4);
    }

    #[test]
    fn dual_of_simplex_is_hamming() {
        let f = gf(2);
        let s = Matrix::from_rows(&f, &[[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]]).unwrap();
        let c = LinearCode::from_generator(&s).unwrap();
        let d = c.dual().unwrap();
        assert_eq!((d.n(), d.k()), (7, 4));
        let e = d.extremal_codewords(&Budget::default()).unwrap();
        assert_eq!(e.min_weight(), 3);
        assert_eq!(e.distribution, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(d.dual().unwrap(), c);
        let full = LinearCode::from_generator(&Matrix::identity(&f, 3)).unwrap();
        assert_eq!(full.dual(), Err(Error::FullSpaceDual { n: 3 }));
    }

    #[test]
    fn projectivity() {
        let f = gf(2);
        let c = LinearCode::from_generator(&Matrix::from_rows(&f, &[[1, 0, 1], [0, 1, 0]]).unwrap()).unwrap();
        assert!(!c.is_projective());
        let p = c.projectivize().unwrap();
        assert_eq!(p.generator(), &Matrix::identity(&f, 2));
        assert!(p.is_projective());
        assert_eq!(p.projectivize().unwrap(), p);
        let z = LinearCode::from_generator(&Matrix::from_rows(&f, &[[1, 0, 0], [0, 1, 0]]).unwrap()).unwrap();
        assert!(!z.is_projective());
        assert_eq!(z.projectivize(), Err(Error::ZeroColumn(2)));
        let f3 = gf(3);
        let c3 = LinearCode::from_generator(&Matrix::from_rows(&f3, &[[1, 2, 0], [0, 0, 1]]).unwrap()).unwrap();
        assert!(!c3.is_projective());
        assert_eq!(c3.projectivize().unwrap().n(), 2);
    }

    #[test]
    fn puncturing() {
        let c = ex953();
        assert_eq!(c.puncture(&[]).unwrap(), c);
        let p = c.puncture(&[8]).unwrap();
        assert_eq!((p.n(), p.k()), (8, 5));
        assert!(matches!(c.puncture(&[0, 1, 2, 3, 4]), Err(Error::RankDrop { .. })));
        assert!(matches!(c.puncture(&[9]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn subcode_support_examples() {
        let c = ex953();
        let f = gf(2);
        let e1 = SubspaceBasis::span(&Matrix::from_rows(&f, &[[1, 0, 0, 0, 0]]).unwrap());
        let s = c.subcode_support(&e1).unwrap();
        assert_eq!(s.ones().collect::<Vec<_>>(), vec![0, 4, 6, 7, 8]);
        assert!(c.subcode_support(&SubspaceBasis::zero(&f, 5)).is_err());
        assert!(c.subcode_support(&SubspaceBasis::full(&f, 4)).is_err());
    }

    /// Support weight of every subcode equals n - m_G(V^⊥).
    #[test]
    fn support_weight_identity_exhaustive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for q in [2u32, 3, 5] {
            let f = gf(q);
            for k in 1..=5usize {
                if q == 5 && k > 4 {
                    continue;
                }
                let n = rng.gen_range(k..k + 6);
                let data: Vec<Elem> = (0..k * n).map(|_| rng.gen_range(0..q) as Elem).collect();
                let Ok(c) = LinearCode::from_generator(&Matrix::from_flat(&f, k, n, data).unwrap()) else {
                    continue;
                };
                let k = c.k();
                let table = c.support_table().unwrap();
                let mut buf = vec![0u64; table.words];
                for s in 1..=k {
                    for v in SubspaceEnumerator::new(&f, k, s, u64::MAX).unwrap().iter() {
                        let direct = c.subcode_support(&v).unwrap();
                        let via_m = n - multiplicity(c.generator(), &v.orthogonal_complement()).unwrap();
                        assert_eq!(direct.count_ones(), via_m);
                        table.span_support(v.view(), &mut buf);
                        assert_eq!(&buf[..], direct.words());
                    }
                }
            }
        }
    }

    #[test]
    fn codeword_enumeration_matches_encode() {
        let c = ex953();
        let mut seen = 0;
        c.for_each_codeword_in(3, 29, |ord, cw| {
            assert_eq!(cw, &c.encode(&c.message(ord)).unwrap()[..]);
            seen += 1;
        });
        assert_eq!(seen, 26);
        let e = c.extremal_codewords(&Budget::default()).unwrap();
        assert_eq!(e.distribution.iter().sum::<u64>(), 32);
        assert_eq!(e.distribution[0], 1);
        assert_eq!(e.min_weight(), 3);
        assert!(matches!(c.extremal_codewords(&Budget::uniform(31)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn extremal_ties_take_smallest_message() {
        let f = gf(3);
        let c = LinearCode::from_generator(&Matrix::from_rows(&f, &[[1, 0, 1], [0, 1, 1]]).unwrap()).unwrap();
        let e = c.extremal_codewords(&Budget::default()).unwrap();
        // messages in order: 01 -> 011 (w2), 02, 10 -> 101 (w2), 11 -> 112 (w3)
        assert_eq!(e.min.0, 1);
        assert_eq!(e.max.0, 4);
        assert_eq!(e.max.1, vec![1, 1, 2]);
    }
}
