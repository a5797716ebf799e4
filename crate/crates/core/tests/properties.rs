mod common;

use gfcodes::constructions::{
    min_padding_ts, pad_with_simplex, padded_levels, punctured_simplex, simplex, solomon_stiffler, SolomonStifflerSpec,
};
use gfcodes::ghw::{check_weight_relation, sswd, sswd_with, weight_report, Strategy as Scan};
use gfcodes::io::{emit_code, parse_code};
use gfcodes::minimality::{is_minimal_subcode, is_minimal_subcode_pcheck, is_s_minimal, Algorithm};
use gfcodes::{Budget, Field, LinearCode, Matrix, SubspaceEnumerator};
use proptest::prelude::*;

fn minimal(c: &LinearCode, s: usize) -> bool {
    is_s_minimal(c, s, Algorithm::Rank, &Budget::default()).unwrap().minimal
}

#[test]
fn padding_shift_laws() {
    let b = Budget::default();
    for c in common::random_codes(40, 11) {
        let r = weight_report(&c, None, &b).unwrap();
        for t in 1..=2 {
            let p = pad_with_simplex(&c, t).unwrap();
            let pr = weight_report(&p, None, &b).unwrap();
            let got: Vec<(usize, usize)> = pr.levels.iter().map(|l| (l.d, l.big_d)).collect();
            assert_eq!(got, padded_levels(&r, t));
        }
    }
}

#[test]
fn padding_by_t_s_gives_minimality() {
    let b = Budget::default();
    for c in common::random_codes(40, 12) {
        let r = weight_report(&c, None, &b).unwrap();
        for s in 1..c.k() {
            let t = min_padding_ts(&r, s).unwrap();
            let p = pad_with_simplex(&c, t).unwrap();
            assert!(minimal(&p, s), "t_{s} = {t}");
            if t > 0 {
                let pr = weight_report(&pad_with_simplex(&c, t - 1).unwrap(), None, &b).unwrap();
                assert!(pr.d(s + 1).unwrap() <= pr.big_d(s).unwrap());
            }
        }
    }
}

#[test]
fn projectivize_preserves_minimality() {
    for c in common::random_codes(80, 13) {
        let Ok(p) = c.projectivize() else { continue };
        assert!(p.is_projective());
        for s in 1..c.k() {
            assert_eq!(minimal(&c, s), minimal(&p, s));
        }
    }
}

#[test]
fn simplex_codes_are_minimal_everywhere() {
    for (q, k) in [(2, 3), (2, 5), (3, 3), (3, 4), (5, 3)] {
        let c = simplex(q, k).unwrap();
        let b = Budget::default();
        let r = weight_report(&c, None, &b).unwrap();
        for s in 1..=k {
            let w = ((q as usize).pow(k as u32) - (q as usize).pow((k - s) as u32)) / (q as usize - 1);
            assert_eq!((r.d(s), r.big_d(s)), (Some(w), Some(w)));
        }
        for s in 1..k {
            assert!(minimal(&c, s));
        }
    }
}

#[test]
fn punctured_simplex_flags_hold() {
    let p = punctured_simplex(2, 5, &[0]).unwrap();
    assert_eq!((p.code.n(), p.guaranteed.clone()), (30, vec![1, 2, 3]));
    let p = punctured_simplex(2, 5, &[0, 5, 9]).unwrap();
    assert_eq!(p.guaranteed, vec![1, 2]);
    for (q, k, coords) in [(2, 5, vec![0]), (2, 5, vec![0, 5, 9]), (3, 4, vec![1, 2]), (2, 4, vec![3])] {
        let p = punctured_simplex(q, k, &coords).unwrap();
        for &s in &p.guaranteed {
            assert!(minimal(&p.code, s));
        }
    }
    assert_eq!(punctured_simplex(2, 4, &[]).unwrap().code, simplex(2, 4).unwrap());
    assert!(punctured_simplex(2, 3, &[0, 1, 2, 3]).is_err());
}

#[test]
fn solomon_stiffler_flags_hold() {
    for (q, k, u) in [(2, 5, vec![2]), (3, 5, vec![1, 2]), (3, 4, vec![1]), (5, 4, vec![1, 2]), (2, 6, vec![3])] {
        let ss = solomon_stiffler(&SolomonStifflerSpec::new(q, k, u).unwrap()).unwrap();
        assert!(ss.code.is_projective());
        for &s in &ss.guaranteed {
            assert!(minimal(&ss.code, s));
        }
    }
}

#[test]
fn codeword_and_level_one_distributions_agree() {
    let b = Budget::default();
    for c in common::random_codes(60, 14) {
        let dist = c.weight_distribution(&b).unwrap();
        let t = sswd(&c, 1, &b).unwrap();
        assert!(check_weight_relation(&dist, &t, c.q()).is_empty());
    }
}

#[test]
fn scan_strategies_agree_on_corpus() {
    let b = Budget::default();
    for c in common::random_codes(40, 15) {
        for s in 1..=c.k() {
            let a = sswd_with(&c, s, Scan::ComplementScan, &b).unwrap();
            let d = sswd_with(&c, s, Scan::SubcodeScan, &b).unwrap();
            assert_eq!(a.counts, d.counts);
        }
    }
}

fn arb_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u32, 3, 5]), 2usize..=4, 0usize..=6)
        .prop_flat_map(|(q, k, extra)| {
            let n = k + extra;
            (Just(q), Just(k), prop::collection::vec(0..q, k * n))
        })
        .prop_filter_map("rank deficient", |(q, k, data)| {
            let f = Field::prime(q).unwrap();
            let n = data.len() / k;
            let rows: Vec<&[u32]> = data.chunks(n).collect();
            let m = Matrix::from_rows(&f, &rows).unwrap();
            (m.rank() == k).then(|| LinearCode::from_generator(&m).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_routes_agree(c in arb_code()) {
        for s in 1..c.k() {
            let en = SubspaceEnumerator::new(c.field(), c.k(), s, 1 << 20).unwrap();
            for v in en.iter() {
                prop_assert_eq!(is_minimal_subcode(&c, &v).unwrap(), is_minimal_subcode_pcheck(&c, &v).unwrap());
            }
        }
    }

    #[test]
    fn code_file_round_trip(c in arb_code()) {
        let text = emit_code(&c);
        prop_assert_eq!(parse_code(&text).unwrap(), c);
    }

    #[test]
    fn dual_of_dual(c in arb_code()) {
        if c.k() < c.n() {
            prop_assert_eq!(c.dual().unwrap().dual().unwrap(), c);
        }
    }
}
