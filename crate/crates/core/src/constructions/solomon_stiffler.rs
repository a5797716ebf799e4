use std::collections::BTreeMap;

use crate::blocking::projective_points;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::Matrix;

/// Block sizes `u_1 < ... < u_t`. Block `i` is spanned by the unit vectors
/// following those of the earlier blocks, so blocks are disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolomonStifflerSpec {
    pub q: u32,
    pub k: usize,
    pub u: Vec<usize>,
}

impl SolomonStifflerSpec {
    pub fn new(q: u32, k: usize, u: Vec<usize>) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::OutOfRange("at least one block is required".into()));
        }
        if u.iter().any(|&x| x < 1) {
            return Err(Error::OutOfRange("block sizes must be at least 1".into()));
        }
        if u.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange("block sizes must be strictly increasing".into()));
        }
        if u.iter().sum::<usize>() > k {
            return Err(Error::OutOfRange(format!("block sizes sum to {} > k = {k}", u.iter().sum::<usize>())));
        }
        if k < 2 {
            return Err(Error::OutOfRange(format!("k must be at least 2, got {k}")));
        }
        Ok(Self { q, k, u })
    }

    pub fn t(&self) -> usize {
        self.u.len()
    }

    /// Coordinate ranges of the blocks.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut a = 0;
        self.u
            .iter()
            .map(|&ui| {
                let r = a..a + ui;
                a += ui;
                r
            })
            .collect()
    }

    /// Levels `s` covered by the s-minimality theorem: needs `t <= q-1` and
    /// `u_t <= k-s-1`.
    pub fn guaranteed_levels(&self) -> Vec<usize> {
        if self.t() > self.q as usize - 1 {
            return Vec::new();
        }
        let ut = *self.u.last().unwrap();
        (1..self.k).filter(|&s| ut + s < self.k).collect()
    }

    pub fn length(&self) -> u64 {
        let q = self.q as u64;
        let pts = |m: usize| (q.pow(m as u32) - 1) / (q - 1);
        pts(self.k) - self.u.iter().map(|&x| pts(x)).sum::<u64>()
    }

    pub fn min_distance(&self) -> u64 {
        let q = self.q as u64;
        q.pow(self.k as u32 - 1) - self.u.iter().map(|&x| q.pow(x as u32 - 1)).sum::<u64>()
    }
}

#[derive(Clone, Debug)]
pub struct SolomonStiffler {
    pub code: LinearCode,
    pub guaranteed: Vec<usize>,
}

/// The simplex matrix with every point lying in one of the blocks removed.
pub fn solomon_stiffler(spec: &SolomonStifflerSpec) -> Result<SolomonStiffler> {
    let spec = SolomonStifflerSpec::new(spec.q, spec.k, spec.u.clone())?;
    let f = Field::of_order(spec.q)?;
    let blocks = spec.blocks();
    let keep: Vec<Vec<_>> = projective_points(&f, spec.k)
        .into_iter()
        .filter(|p| {
            let nz: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
            !blocks.iter().any(|b| nz.iter().all(|i| b.contains(i)))
        })
        .collect();
    if keep.is_empty() {
        return Err(Error::ZeroCode);
    }
    let code = LinearCode::from_generator(&Matrix::from_columns(&f, spec.k, &keep)?)?;
    Ok(SolomonStiffler { code, guaranteed: spec.guaranteed_levels() })
}

/// Nonzero weights and multiplicities, ascending by weight.
///
/// A codeword `y` loses `q^{u_i - 1}` of the `q^{k-1}` simplex coordinates
/// where it is nonzero for each block on which it does not vanish. Summing
/// over the vanishing pattern gives the table; for one block it is the
/// two-weight table, for two blocks with `q >= 3` it has up to four weights.
pub fn ss_predicted_weights(spec: &SolomonStifflerSpec) -> Result<Vec<(u64, u64)>> {
    let spec = SolomonStifflerSpec::new(spec.q, spec.k, spec.u.clone())?;
    let q = spec.q as u64;
    let t = spec.t();
    if t > 16 {
        return Err(Error::OutOfRange(format!("t = {t} blocks")));
    }
    let rest = (spec.k - spec.u.iter().sum::<usize>()) as u32;
    let mut table = BTreeMap::new();
    for pattern in 0u32..1 << t {
        let mut weight = q.pow(spec.k as u32 - 1);
        let mut mult = q.pow(rest);
        for (i, &ui) in spec.u.iter().enumerate() {
            if pattern >> i & 1 == 1 {
                weight -= q.pow(ui as u32 - 1);
                mult *= q.pow(ui as u32) - 1;
            }
        }
        if pattern == 0 {
            weight = q.pow(spec.k as u32 - 1);
            mult -= 1;
        }
        if mult > 0 {
            *table.entry(weight).or_insert(0) += mult;
        }
    }
    Ok(table.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;

    fn enumerated(c: &LinearCode) -> Vec<(u64, u64)> {
        let d = c.weight_distribution(&Budget::default()).unwrap();
        d.iter().enumerate().skip(1).filter(|(_, &m)| m > 0).map(|(w, &m)| (w as u64, m)).collect()
    }

    #[test]
    fn binary_one_block() {
        let spec = SolomonStifflerSpec::new(2, 5, vec![2]).unwrap();
        let ss = solomon_stiffler(&spec).unwrap();
        assert_eq!((ss.code.n(), ss.code.k()), (28, 5));
        assert!(ss.code.is_projective());
        assert_eq!(ss_predicted_weights(&spec).unwrap(), vec![(14, 24), (16, 7)]);
        assert_eq!(enumerated(&ss.code), vec![(14, 24), (16, 7)]);
        assert_eq!(ss.guaranteed, vec![1, 2]);
    }

    #[test]
    fn ternary_two_blocks() {
        let spec = SolomonStifflerSpec::new(3, 5, vec![1, 2]).unwrap();
        let ss = solomon_stiffler(&spec).unwrap();
        assert_eq!((ss.code.n(), spec.min_distance()), (116, 77));
        let got = enumerated(&ss.code);
        assert_eq!(got[0].0, 77);
        assert_eq!(ss_predicted_weights(&spec).unwrap(), got);
        let total: u64 = got.iter().map(|x| x.1).sum();
        assert_eq!(total, 242);
        let moment: u64 = got.iter().map(|x| x.0 * x.1).sum();
        assert_eq!(moment, 116 * 2 * 81);
    }

    #[test]
    fn hypothesis_flags() {
        let spec = SolomonStifflerSpec::new(2, 5, vec![2, 3]).unwrap();
        let ss = solomon_stiffler(&spec).unwrap();
        assert!(ss.guaranteed.is_empty());
        assert_eq!(ss.code.n(), 31 - 3 - 7);
    }

    #[test]
    fn invalid_specs() {
        assert!(SolomonStifflerSpec::new(3, 5, vec![2, 1]).is_err());
        assert!(SolomonStifflerSpec::new(3, 5, vec![0]).is_err());
        assert!(SolomonStifflerSpec::new(3, 5, vec![2, 4]).is_err());
        assert!(SolomonStifflerSpec::new(3, 5, vec![]).is_err());
    }
}
