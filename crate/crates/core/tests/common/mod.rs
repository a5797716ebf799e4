#![allow(dead_code)]

use gfcodes::constructions::{paper_example, simplex, solomon_stiffler, SolomonStifflerSpec, EXAMPLE_NAMES};
use gfcodes::{Field, LinearCode, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Full-rank random codes with q ∈ {2,3,5}, 2 <= k <= 5, k <= n <= 14.
pub fn random_codes(count: usize, seed: u64) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = [2u32, 3, 5][rng.gen_range(0..3)];
        let k = rng.gen_range(2..=5);
        let n = rng.gen_range(k..=14);
        let f = Field::prime(q).unwrap();
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        let m = Matrix::from_rows(&f, &rows).unwrap();
        if m.rank() == k {
            out.push(LinearCode::from_generator(&m).unwrap());
        }
    }
    out
}

pub fn registry() -> Vec<(String, LinearCode)> {
    EXAMPLE_NAMES.iter().map(|n| (n.to_string(), paper_example(n).unwrap())).collect()
}

/// Small named codes from the constructions, used alongside the registry.
pub fn constructed() -> Vec<(String, LinearCode)> {
    let mut out = Vec::new();
    for (q, k) in [(2, 3), (2, 4), (3, 3)] {
        out.push((format!("simplex({q},{k})"), simplex(q, k).unwrap()));
    }
    for (q, k, u) in [(2, 4, vec![1]), (2, 5, vec![2]), (3, 4, vec![1]), (5, 3, vec![1])] {
        let spec = SolomonStifflerSpec::new(q, k, u.clone()).unwrap();
        out.push((format!("ss({q},{k},{u:?})"), solomon_stiffler(&spec).unwrap().code));
    }
    out
}

/// Random codes, registry and constructed codes, named.
pub fn corpus(random: usize, seed: u64) -> Vec<(String, LinearCode)> {
    let mut out: Vec<(String, LinearCode)> =
        random_codes(random, seed).into_iter().enumerate().map(|(i, c)| (format!("random#{i}"), c)).collect();
    out.extend(registry());
    out.extend(constructed());
    out
}
