use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{is_prime, Elem, Field};
use crate::matrix::Matrix;

/// Cyclic code of length `n` over prime `q` whose check polynomial has as
/// roots `β^j` for `j` in the excluded cosets, `β` of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSpec {
    pub q: u32,
    pub n: usize,
    /// Coset leaders of the cosets left out of the defining set.
    pub exclude: Vec<usize>,
}

fn check_qn(q: u32, n: usize) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if n < 1 {
        return Err(Error::OutOfRange("length must be positive".into()));
    }
    if num_integer::gcd(n as u64, q as u64) != 1 {
        return Err(Error::OutOfRange(format!("gcd({n}, {q}) != 1")));
    }
    Ok(())
}

/// The q-cyclotomic cosets mod `n`, ordered by leader. Each coset lists
/// `a, aq, aq^2, ...` starting at its leader.
pub fn cyclotomic_cosets(q: u32, n: usize) -> Result<Vec<Vec<usize>>> {
    check_qn(q, n)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = a;
        while !seen[x] {
            seen[x] = true;
            coset.push(x);
            x = x * q as usize % n;
        }
        out.push(coset);
    }
    Ok(out)
}

/// Multiplicative order of `q` mod `n`.
fn order_mod(q: u32, n: usize) -> u32 {
    if n == 1 {
        return 1;
    }
    let mut x = q as usize % n;
    let mut e = 1;
    while x != 1 {
        x = x * q as usize % n;
        e += 1;
    }
    e
}

/// Product of `(x - r)` over the roots, low degree first.
fn poly_from_roots(f: &Field, roots: &[Elem]) -> Vec<Elem> {
    let mut p = vec![1 as Elem];
    for &r in roots {
        let mut next = vec![0 as Elem; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(c, r));
        }
        p = next;
    }
    p
}

/// Quotient of `a` by monic `b`; `None` unless the division is exact.
fn exact_div(f: &Field, a: &[Elem], b: &[Elem]) -> Option<Vec<Elem>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.to_vec();
    let mut quo = vec![0 as Elem; a.len() - db];
    for i in (0..quo.len()).rev() {
        let c = r[i + db];
        quo[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = f.sub(r[i + j], f.mul(c, bj));
            }
        }
    }
    r.iter().all(|&x| x == 0).then_some(quo)
}

/// Generator matrix rows are the first `k` cyclic shifts of `g(x)`.
pub fn cyclic_code(spec: &CyclicSpec) -> Result<LinearCode> {
    let (q, n) = (spec.q, spec.n);
    let cosets = cyclotomic_cosets(q, n)?;
    let mut roots_exp = Vec::new();
    for &leader in &spec.exclude {
        let c = cosets
            .iter()
            .find(|c| c[0] == leader)
            .ok_or_else(|| Error::OutOfRange(format!("{leader} is not a cyclotomic coset leader mod {n}")))?;
        roots_exp.extend_from_slice(c);
    }
    roots_exp.sort_unstable();
    roots_exp.dedup();
    if roots_exp.is_empty() {
        return Err(Error::ZeroCode);
    }
    let m = order_mod(q, n);
    let big = Field::new(q, m, None)?;
    let beta = big.pow(big.primitive_element(), (big.q() as u64 - 1) / n as u64);
    debug_assert_eq!(big.order(beta), Some(n as u32));
    let roots: Vec<Elem> = roots_exp.iter().map(|&j| big.pow(beta, j as u64)).collect();
    let h = poly_from_roots(&big, &roots);
    if h.iter().any(|&c| c as u32 >= q) {
        return Err(Error::OutOfRange("excluded cosets do not give a polynomial over the base field".into()));
    }
    let f = Field::prime(q)?;
    let mut xn1 = vec![0 as Elem; n + 1];
    xn1[0] = f.neg(1);
    xn1[n] = 1;
    let g = exact_div(&f, &xn1, &h).expect("h divides x^n - 1");
    let k = h.len() - 1;
    let mut m = Matrix::zeros(&f, k, n);
    for i in 0..k {
        for (j, &c) in g.iter().enumerate() {
            m.set(i, i + j, c);
        }
    }
    LinearCode::from_generator(&m)
}
