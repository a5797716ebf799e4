use super::simplex::simplex_matrix;
use crate::code::{normalize, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;

pub const EXAMPLE_NAMES: &[&str] =
    &["ex9_5_3", "ex12_5_5", "golay12_3", "ss28_5_2", "ss24_5_2", "ss117_5_3", "ss116_5_3", "xie26_5_2"];

fn from_digits(q: u32, rows: &[&str]) -> Result<LinearCode> {
    let f = Field::prime(q)?;
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.bytes().map(|b| (b - b'0') as u32).collect()).collect();
    LinearCode::from_generator(&Matrix::from_rows(&f, &rows)?)
}

/// `S_{q,k}` without the listed columns (given as column vectors).
fn simplex_minus(q: u32, k: usize, removed: &[&str]) -> Result<LinearCode> {
    let f = Field::prime(q)?;
    let drop: Vec<Vec<Elem>> = removed
        .iter()
        .map(|c| normalize(&f, &c.bytes().map(|b| (b - b'0') as Elem).collect::<Vec<_>>()).expect("nonzero column"))
        .collect();
    let s = simplex_matrix(&f, k);
    let keep: Vec<usize> = (0..s.cols()).filter(|&j| !drop.contains(&s.column(j))).collect();
    debug_assert_eq!(keep.len() + drop.len(), s.cols());
    LinearCode::from_generator(&s.submatrix_columns(&keep)?)
}

/// The fixed example codes, by name.
pub fn paper_example(name: &str) -> Result<LinearCode> {
    match name {
        "ex9_5_3" => from_digits(2, &["100010111", "010010110", "001010101", "000110011", "000001111"]),
        "ex12_5_5" => from_digits(5, &["100023014301", "010013013144", "001012012020", "000111000113", "000000111111"]),
        "golay12_3" => from_digits(
            3,
            &["100000011111", "010000101221", "001000110122", "000100121012", "000010122101", "000001112210"],
        ),
        "ss28_5_2" => simplex_minus(2, 5, &["10000", "01000", "11000"]),
        "ss24_5_2" => simplex_minus(2, 5, &["00100", "00010", "00110", "00001", "00101", "00011", "00111"]),
        "ss117_5_3" => simplex_minus(3, 5, &["00100", "01000", "01100", "01200"]),
        "ss116_5_3" => simplex_minus(3, 5, &["10000", "00100", "01000", "01100", "01200"]),
        "xie26_5_2" => simplex_minus(2, 5, &["10000", "01000", "11000", "00100", "00010"]),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::constructions::{solomon_stiffler, SolomonStifflerSpec};

    #[test]
    fn parameters() {
        let b = Budget::default();
        for (name, q, n, k, d) in [
            ("ex9_5_3", 2, 9, 5, 3),
            ("ex12_5_5", 5, 12, 5, 6),
            ("golay12_3", 3, 12, 6, 6),
            ("ss28_5_2", 2, 28, 5, 14),
            ("ss24_5_2", 2, 24, 5, 12),
            ("ss117_5_3", 3, 117, 5, 78),
            ("ss116_5_3", 3, 116, 5, 77),
            ("xie26_5_2", 2, 26, 5, 12),
        ] {
            let c = paper_example(name).unwrap();
            let e = c.extremal_codewords(&b).unwrap();
            assert_eq!((c.q(), c.n(), c.k(), e.min_weight()), (q, n, k, d), "{name}");
        }
    }

    #[test]
    fn golay_is_self_dual() {
        let g = paper_example("golay12_3").unwrap();
        assert_eq!(g.dual().unwrap(), g);
    }

    #[test]
    fn solomon_stiffler_examples_match_constructor() {
        let ss = solomon_stiffler(&SolomonStifflerSpec::new(2, 5, vec![2]).unwrap()).unwrap();
        assert_eq!(ss.code, paper_example("ss28_5_2").unwrap());
        let ss = solomon_stiffler(&SolomonStifflerSpec::new(3, 5, vec![1, 2]).unwrap()).unwrap();
        assert_eq!(ss.code, paper_example("ss116_5_3").unwrap());
    }

    #[test]
    fn unknown_name() {
        assert_eq!(paper_example("nope"), Err(Error::UnknownExample("nope".into())));
    }
}
