//! Arithmetic in GF(p^m).
//!
//! Elements are integer codes in `[0, q)`. For `m > 1` the code `c` stands
//! for the polynomial `Σ cᵢ xⁱ` where `c = Σ cᵢ pⁱ` (base-p digits, lowest
//! degree first). Code 0 is the additive identity and code 1 the
//! multiplicative identity.
//!
//! When no modulus is given, the built-in modulus for `(p, m)` is the monic
//! irreducible polynomial of degree `m` whose lower coefficients
//! `(c₀, …, c_{m-1})` have the smallest ordinal `Σ cᵢ pⁱ`. The rule is fixed,
//! so element codes are reproducible; for example GF(2^8) gets
//! `x^8 + x^4 + x^3 + x + 1` and GF(3^2) gets `x^2 + 1`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Element code of a field of order at most 2^16.
pub type Elem = u16;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Arithmetic context for GF(p^m). Cheap to clone; immutable and shareable
/// across threads.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic, low degree first, length `m + 1`.
    modulus: Vec<u32>,
    primitive: Elem,
    /// `exp[i] = g^i` for `i < 2(q-1)`.
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    inv: Vec<Elem>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

// Polynomials over GF(p), low degree first, no trailing zeros (zero poly = []).

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = pow_mod(b[db], p - 2, p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - c * bi % p) % p;
            }
        }
        trim(&mut r);
    }
    r
}

fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1u32;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let mut f = poly.to_vec();
    trim(&mut f);
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for ord in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = ord;
            for _ in 0..d {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The built-in modulus for GF(p^m): smallest irreducible by lower-coefficient
/// ordinal. `m = 1` yields `x`.
pub fn builtin_modulus(p: u32, m: u32) -> Result<Vec<u32>> {
    check_order(p, m)?;
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    let count = (p as u64).pow(m);
    for ord in 0..count {
        let mut poly = Vec::with_capacity(m as usize + 1);
        let mut x = ord;
        for _ in 0..m {
            poly.push((x % p as u64) as u32);
            x /= p as u64;
        }
        poly.push(1);
        if poly[0] != 0 && is_irreducible(p, &poly) {
            return Ok(poly);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn check_order(p: u32, m: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::OutOfRange("extension degree must be at least 1".into()));
    }
    let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER as u64);
    q.map(|q| q as u32).ok_or(Error::FieldTooLarge { p, m })
}

impl Field {
    /// Builds GF(p^m). `modulus` is a monic degree-`m` polynomial over GF(p),
    /// low degree first; it is checked for irreducibility.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        let q = check_order(p, m)?;
        let modulus = match modulus {
            None => builtin_modulus(p, m)?,
            Some(poly) => {
                let mut poly = poly.to_vec();
                trim(&mut poly);
                if poly.len() != m as usize + 1 || poly[m as usize] != 1 {
                    return Err(Error::ModulusDegree {
                        expected: m,
                        got: poly.len().saturating_sub(1),
                    });
                }
                if let Some(&c) = poly.iter().find(|&&c| c >= p) {
                    return Err(Error::ModulusCoefficient { p, coeff: c });
                }
                if !is_irreducible(p, &poly) {
                    return Err(Error::ReducibleModulus { p });
                }
                poly
            }
        };

        // Multiplication by polynomial arithmetic, used only to build tables.
        let mulmod = |a: u32, b: u32| -> u32 {
            if m == 1 {
                return a * b % p;
            }
            let da = digits(a, p, m);
            let db = digits(b, p, m);
            let mut prod = vec![0u32; 2 * m as usize];
            for (i, &x) in da.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let r = poly_rem(&prod, &modulus, p);
            undigits(&r, p)
        };

        let order = q - 1;
        let factors = prime_factors(order);
        let powmod = |g: u32, mut e: u32| {
            let mut acc = 1u32;
            let mut b = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, b);
                }
                b = mulmod(b, b);
                e >>= 1;
            }
            acc
        };
        let primitive = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| factors.iter().all(|&r| powmod(g, order / r) != 1))
                .expect("multiplicative group is cyclic")
        };

        let mut exp = vec![0 as Elem; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x as Elem;
            log[x as usize] = i;
            x = mulmod(x, primitive);
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }
        let mut inv = vec![0 as Elem; q as usize];
        for a in 1..q {
            inv[a as usize] = exp[((order - log[a as usize]) % order) as usize];
        }

        Ok(Field {
            inner: Arc::new(Inner {
                p,
                m,
                q,
                modulus,
                primitive: primitive as Elem,
                exp,
                log,
                inv,
            }),
        })
    }

    /// GF(p) for a prime `p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) with the built-in modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::new(p, m, None)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.inner.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    #[inline]
    pub fn is_prime_field(&self) -> bool {
        self.inner.m == 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn primitive_element(&self) -> Elem {
        self.inner.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(|a| a as Elem)
    }

    pub fn check(&self, a: u32) -> Result<Elem> {
        if a < self.inner.q {
            Ok(a as Elem)
        } else {
            Err(Error::ElementOutOfRange { value: a, q: self.inner.q })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.m == 1 {
            let s = a as u32 + b as u32;
            (if s >= inner.p { s - inner.p } else { s }) as Elem
        } else if inner.p == 2 {
            a ^ b
        } else {
            let p = inner.p;
            let (mut x, mut y) = (a as u32, b as u32);
            let (mut out, mut place) = (0u32, 1u32);
            while x > 0 || y > 0 {
                out += (x % p + y % p) % p * place;
                x /= p;
                y /= p;
                place *= p;
            }
            out as Elem
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.inner;
        if a == 0 || inner.p == 2 {
            a
        } else if inner.m == 1 {
            (inner.p - a as u32) as Elem
        } else {
            let p = inner.p;
            let mut x = a as u32;
            let (mut out, mut place) = (0u32, 1u32);
            while x > 0 {
                out += (p - x % p) % p * place;
                x /= p;
                place *= p;
            }
            out as Elem
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.m == 1 {
            (a as u32 * b as u32 % inner.p) as Elem
        } else if a == 0 || b == 0 {
            0
        } else {
            inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.inner.inv[a as usize])
        }
    }

    /// Inverse of a known-nonzero element.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Elem) -> Elem {
        debug_assert!(a != 0);
        self.inner.inv[a as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; `pow(0, 0) = 1`.
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc: Elem = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Discrete logarithm to the base of [`Field::primitive_element`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.inner.log[a as usize])
    }

    pub fn antilog(&self, i: u64) -> Elem {
        self.inner.exp[(i % (self.inner.q as u64 - 1)) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.inner.q - 1;
        Some(n / num_integer::gcd(l, n))
    }
}

fn digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(a % p);
        a /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(4, 3), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.neg(2), 3);
        assert_eq!(f.inv(0), Err(Error::ZeroInverse));
        for a in 1..5 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn rejects_non_prime_characteristic() {
        assert_eq!(Field::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(1, 1, None).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn rejects_bad_modulus() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::ReducibleModulus { p: 2 });
        assert!(matches!(
            Field::new(2, 3, Some(&[1, 1, 1])),
            Err(Error::ModulusDegree { expected: 3, got: 2 })
        ));
        assert!(Field::new(2, 2, Some(&[1, 1, 1])).is_ok());
        assert!(matches!(Field::new(2, 17, None), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn builtin_moduli_are_frozen() {
        assert_eq!(builtin_modulus(2, 8).unwrap(), vec![1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert_eq!(builtin_modulus(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(builtin_modulus(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(builtin_modulus(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(builtin_modulus(2, 4).unwrap(), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn gf256_primitive_order() {
        let f = Field::new(2, 8, None).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.pow(g, 255), 1);
        // walk the powers: no earlier return to 1
        let mut x = g;
        for _ in 1..255 {
            assert_ne!(x, 1);
            x = f.mul(x, g);
        }
        assert_eq!(x, 1);
        assert_eq!(f.order(g), Some(255));
        // 85 | 255, so an element of order 85 exists
        assert_eq!(f.order(f.pow(g, 3)), Some(85));
    }

    #[test]
    fn log_antilog_roundtrip() {
        for (p, m) in [(2, 4), (3, 3), (5, 2), (2, 8), (7, 1)] {
            let f = Field::new(p, m, None).unwrap();
            for a in 1..f.q() as Elem {
                assert_eq!(f.antilog(f.log(a).unwrap() as u64), a);
            }
        }
    }

    fn exhaustive_axioms(f: &Field) {
        let q = f.q() as Elem;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small_orders() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            exhaustive_axioms(&Field::of_order(q).unwrap());
        }
    }

    #[test]
    fn user_modulus_changes_codes_but_not_structure() {
        let f = Field::new(2, 4, Some(&[1, 0, 0, 1, 1])).unwrap();
        exhaustive_axioms(&f);
        assert_ne!(f, Field::new(2, 4, None).unwrap());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(256), Some((2, 8)));
        assert_eq!(prime_power(125), Some((5, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
