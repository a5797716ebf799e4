use crate::blocking::projective_points;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::Matrix;

/// `k × (q^k-1)/(q-1)` matrix whose columns are the normalized points of
/// PG(k-1, q) in lexicographic order.
pub fn simplex_matrix(field: &Field, k: usize) -> Matrix {
    Matrix::from_columns(field, k, &projective_points(field, k)).expect("points have length k")
}

/// The simplex code `S_{q,k}`, `[(q^k-1)/(q-1), k, q^{k-1}]_q`.
pub fn simplex(q: u32, k: usize) -> Result<LinearCode> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("simplex codes need k >= 2, got {k}")));
    }
    let f = Field::of_order(q)?;
    LinearCode::from_generator(&simplex_matrix(&f, k))
}

/// Support weight of every `s`-dimensional subcode of `S_{q,k}`:
/// `(q^k - q^{k-s})/(q-1)`.
pub fn simplex_support_weight(q: u32, k: usize, s: usize) -> u64 {
    let q = q as u64;
    (q.pow(k as u32) - q.pow((k - s) as u32)) / (q - 1)
}

#[derive(Clone, Debug)]
pub struct PuncturedSimplex {
    pub code: LinearCode,
    /// Levels `s` with `t < q^{k-s-1}`, where the punctured code is known to
    /// be s-minimal.
    pub guaranteed: Vec<usize>,
}

/// `S_{q,k}` with the given coordinates removed.
pub fn punctured_simplex(q: u32, k: usize, coords: &[usize]) -> Result<PuncturedSimplex> {
    let s = simplex(q, k)?;
    let mut c = coords.to_vec();
    c.sort_unstable();
    c.dedup();
    let t = c.len() as u64;
    let qq = q as u64;
    if t >= qq.pow(k as u32 - 1) {
        return Err(Error::OutOfRange(format!("cannot puncture {t} coordinates: need t < q^(k-1) = {}", qq.pow(k as u32 - 1))));
    }
    let code = s.puncture(&c)?;
    let guaranteed = (1..k).filter(|&s| t < qq.pow((k - s - 1) as u32)).collect();
    Ok(PuncturedSimplex { code, guaranteed })
}
