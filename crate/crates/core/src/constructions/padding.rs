use super::simplex::{simplex_matrix, simplex_support_weight};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::ghw::WeightReport;

/// `[G, S_{q,k}, ..., S_{q,k}]` with `t` copies of the simplex matrix
/// appended to the input matrix of `code`.
pub fn pad_with_simplex(code: &LinearCode, t: usize) -> Result<LinearCode> {
    let base = if code.had_dependent_rows() { code.generator() } else { code.original() };
    if t == 0 {
        return Ok(code.clone());
    }
    if code.k() < 2 {
        return Err(Error::OutOfRange("padding needs k >= 2".into()));
    }
    let s = simplex_matrix(code.field(), base.rows());
    let mut m = base.clone();
    for _ in 0..t {
        m = m.hcat(&s)?;
    }
    LinearCode::from_generator(&m)
}

/// Smallest `t` with `d_{s+1} - D_s + t·q^{k-s-1} > 0`.
pub fn min_padding_ts(report: &WeightReport, s: usize) -> Result<usize> {
    if s == 0 || s >= report.k {
        return Err(Error::OutOfRange(format!("s = {s} must lie in [1, {}]", report.k.saturating_sub(1))));
    }
    let (Some(big_d), Some(d_next)) = (report.big_d(s), report.d(s + 1)) else {
        return Err(Error::OutOfRange(format!("the report does not cover level {}", s + 1)));
    };
    if d_next > big_d {
        return Ok(0);
    }
    let step = (report.q as u64).pow((report.k - s - 1) as u32);
    Ok(((big_d - d_next) as u64 / step) as usize + 1)
}

/// `(d_s, D_s)` of the code padded with `t` simplex blocks, for each level
/// of `report`. Every `s`-dimensional subcode gains the same
/// `t(q^k - q^{k-s})/(q-1)` coordinates.
pub fn padded_levels(report: &WeightReport, t: usize) -> Vec<(usize, usize)> {
    report
        .levels
        .iter()
        .map(|l| {
            let shift = t * simplex_support_weight(report.q, report.k, l.s) as usize;
            (l.d + shift, l.big_d + shift)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructions::paper_example;
    use crate::ghw::weight_report;

    #[test]
    fn golay_padding() {
        let g = paper_example("golay12_3").unwrap();
        let b = Budget::default();
        let r = weight_report(&g, None, &b).unwrap();
        for s in 1..=5 {
            assert_eq!(min_padding_ts(&r, s).unwrap(), 1);
        }
        let p = pad_with_simplex(&g, 1).unwrap();
        assert_eq!((p.n(), p.k()), (376, 6));
        let pr = weight_report(&p, Some(2), &b).unwrap();
        assert_eq!(pr.d(2), Some(332));
        assert_eq!(pr.big_d(1), Some(255));
        let pred = padded_levels(&r, 1);
        assert_eq!(pred[0], (pr.d(1).unwrap(), pr.big_d(1).unwrap()));
        assert_eq!(pred[1], (pr.d(2).unwrap(), pr.big_d(2).unwrap()));
    }

    #[test]
    fn zero_padding_is_identity() {
        let g = paper_example("ex9_5_3").unwrap();
        assert_eq!(pad_with_simplex(&g, 0).unwrap(), g);
    }
}
