use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::ghw::ghw_ds;
use crate::matrix::{EchelonBasis, Matrix};
use crate::minimality::{is_s_minimal, Algorithm};

#[derive(Clone, Debug)]
pub struct Extension {
    pub code: LinearCode,
    /// Number of appended coordinates.
    pub n_prime: usize,
    /// `d_s` and `D_1` of the input code.
    pub d_s: usize,
    pub big_d1: usize,
    /// Whether the input satisfied `d_s/D_s > (q^{s+1}-q)/(q^{s+1}-1)`.
    pub ratio_hypothesis: bool,
}

/// Appends `n'` coordinates so that one codeword becomes heavy enough to push
/// `D_s` past the Ashikhmin–Barg ratio while `d_s` stays put.
///
/// The basis is a heaviest codeword, a lightest codeword, then codewords in
/// message-ordinal order completing a basis. The first row gets `n'` ones
/// appended, the others `n'` zeros. The input must be s-minimal; the ratio
/// condition on the input is reported, not required.
pub fn ab_violating_extend(code: &LinearCode, s: usize, budget: &Budget) -> Result<Extension> {
    let k = code.k();
    if k < 2 {
        return Err(Error::Hypothesis(format!("k = {k}, need k >= 2")));
    }
    if s == 0 || s >= k {
        return Err(Error::OutOfRange(format!("s = {s} must lie in [1, {}]", k - 1)));
    }
    if !is_s_minimal(code, s, Algorithm::Rank, budget)?.minimal {
        return Err(Error::Hypothesis(format!("the code is not {s}-minimal")));
    }
    let q = code.q() as u64;
    let d_s = ghw_ds(code, s, budget)?;
    let big_d_s = crate::ghw::max_weight_ds(code, s, budget)?;
    let ext = code.extremal_codewords(budget)?;
    let big_d1 = ext.max_weight();
    let hi = q.pow(s as u32 + 1);
    let num = (hi - 1) * d_s as u64;
    let den = hi - q;
    let target = num.div_ceil(den);
    if target <= big_d1 as u64 {
        return Err(Error::Hypothesis(format!("n' = {target} - {big_d1} is not positive")));
    }
    let n_prime = (target - big_d1 as u64) as usize;
    let ratio_hypothesis = (d_s as u64) * (hi - 1) > (big_d_s as u64) * (hi - q);

    let f = code.field();
    let mut echelon = EchelonBasis::new(f);
    let mut basis = Vec::with_capacity(k);
    for cw in [&ext.max.1, &ext.min.1] {
        if !echelon.insert(cw) {
            return Err(Error::Hypothesis("the extremal codewords are linearly dependent".into()));
        }
        basis.push(cw.clone());
    }
    let total = code.message_count().ok_or_else(|| Error::budget("codewords", format!("{}^{k}", q), budget.codewords))?;
    if total > budget.codewords {
        return Err(Error::budget("codewords", total, budget.codewords));
    }
    let mut ord = 1;
    while basis.len() < k {
        let cw = code.encode(&code.message(ord))?;
        if echelon.insert(&cw) {
            basis.push(cw);
        }
        ord += 1;
    }
    let n = code.n();
    let rows: Vec<Vec<u32>> = basis
        .iter()
        .enumerate()
        .map(|(i, cw)| {
            let lead = if i == 0 { 1 } else { 0 };
            std::iter::repeat_n(lead, n_prime).chain(cw.iter().map(|&x| x as u32)).collect()
        })
        .collect();
    debug_assert_eq!(rows[0].len(), n + n_prime);
    let code = LinearCode::from_generator(&Matrix::from_rows(f, &rows)?)?;
    Ok(Extension { code, n_prime, d_s, big_d1, ratio_hypothesis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::paper_example;
    use crate::ghw::weight_report;
    use crate::minimality::gab_check;

    fn check(name: &str, n_prime: usize, n: usize, d: usize, d2: usize, big_d2: usize, ratio: bool) {
        let b = Budget::default();
        let c = paper_example(name).unwrap();
        let e = ab_violating_extend(&c, 2, &b).unwrap();
        assert_eq!(e.n_prime, n_prime);
        assert_eq!(e.ratio_hypothesis, ratio);
        let r = weight_report(&e.code, None, &b).unwrap();
        assert_eq!((e.code.n(), e.code.k(), r.d(1).unwrap()), (n, 5, d));
        assert_eq!((r.d(2).unwrap(), r.big_d(2).unwrap()), (d2, big_d2));
        assert!(!gab_check(&r, 2).unwrap().holds());
        assert!(is_s_minimal(&e.code, 2, Algorithm::Brute, &b).unwrap().minimal);
    }

    #[test]
    fn binary_solomon_stiffler_extension() {
        check("ss28_5_2", 9, 37, 14, 21, 33, true);
    }

    #[test]
    fn extension_outside_ratio_regime() {
        check("xie26_5_2", 7, 33, 12, 19, 30, false);
    }

    #[test]
    fn non_minimal_input_rejected() {
        let c = paper_example("golay12_3").unwrap();
        assert!(matches!(ab_violating_extend(&c, 1, &Budget::default()), Err(Error::Hypothesis(_))));
    }
}
