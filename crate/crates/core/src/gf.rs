//! Arithmetic in the finite field GF(p^k).
//!
//! Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
//! encoding are the coefficients of a polynomial of degree `< k`, lowest
//! degree in the lowest digit. Multiplication reduces modulo the
//! lexicographically least monic irreducible polynomial of degree `k`, so the
//! field for a given `(p, k)` is fully determined without external tables.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default upper bound on `q = p^k`.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} is out of range")]
    DegreeOutOfRange(u64),
    #[error("field of order {p}^{k} exceeds the bound {bound}")]
    FieldTooLarge { p: u64, k: u64, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {value} is not in GF({q})")]
    NotAnElement { value: u64, q: u64 },
}

/// An element of a finite field, as its integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: Self = FieldElement(0);
    pub const ONE: Self = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serialized form of a field: the modulus is recomputed on load.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub k: u64,
}

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for a fixed primitive element g, i in [0, q-1)
    exp: Vec<u32>,
    // log[x] for x != 0
    log: Vec<u32>,
    // p^i, i in [0, k)
    digit_weight: Vec<u32>,
}

/// The finite field GF(p^k). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p())
            .field("k", &self.k())
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.k() == other.k()
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

/// If `n = p^e` for a prime `p` and `e >= 1`, returns `(p, e)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let primes = prime_factors(n);
    if primes.len() != 1 {
        return None;
    }
    let p = primes[0];
    let mut e = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        e += 1;
    }
    Some((p, e))
}

// Polynomials over Z/p, coefficient lists low-degree-first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let t = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    if r.is_empty() {
        r.push(0);
    }
    poly_trim(&mut r);
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    out
}

fn monic_from_code(code: u64, degree: u32, p: u32) -> Vec<u32> {
    let mut c = code;
    let mut poly = Vec::with_capacity(degree as usize + 1);
    for _ in 0..degree {
        poly.push((c % p as u64) as u32);
        c /= p as u64;
    }
    poly.push(1);
    poly
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = (poly.len() - 1) as u32;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d) {
            let divisor = monic_from_code(code, d, p);
            let r = poly_rem(poly, &divisor, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    (0..(p as u64).pow(k))
        .map(|code| monic_from_code(code, k, p))
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial exists in every degree")
}

impl Field {
    /// GF(p^k) with the default bound `q <= 2^16`.
    pub fn new(p: u64, k: u64) -> Result<Self, FieldError> {
        Self::with_bound(p, k, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u64, k: u64, bound: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 || k > 64 {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        let q = p
            .checked_pow(k as u32)
            .filter(|&q| q <= bound && q <= u32::MAX as u64)
            .ok_or(FieldError::FieldTooLarge { p, k, bound })?;
        let (p, k, q) = (p as u32, k as u32, q as u32);
        let modulus = least_irreducible(p, k);
        let digit_weight: Vec<u32> = (0..k).map(|i| p.pow(i)).collect();

        let raw_mul = |a: u32, b: u32| -> u32 {
            let pa = digits(a, p, k);
            let pb = digits(b, p, k);
            let prod = poly_rem(&poly_mul(&pa, &pb, p), &modulus, p);
            undigits(&prod, p)
        };

        // primitive element: least g whose multiplicative order is q - 1
        let order = q - 1;
        let mut exp = Vec::with_capacity(order as usize);
        for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = raw_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() as u32 == order {
                break;
            }
        }
        debug_assert_eq!(exp.len() as u32, order);
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }

        Ok(Field {
            inner: Arc::new(Tables {
                p,
                k,
                q,
                modulus,
                exp,
                log,
                digit_weight,
            }),
        })
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn k(&self) -> u32 {
        self.inner.k
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Monic irreducible modulus, low-degree-first (`x` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p() as u64,
            k: self.k() as u64,
        }
    }

    pub fn from_descriptor(d: FieldDescriptor) -> Result<Self, FieldError> {
        Self::new(d.p, d.k)
    }

    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value < self.q() as u64 {
            Ok(FieldElement(value as u32))
        } else {
            Err(FieldError::NotAnElement {
                value,
                q: self.q() as u64,
            })
        }
    }

    /// All `q` elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(FieldElement)
    }

    // Raw-code arithmetic used by the algebra hot loops.

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        let t = &*self.inner;
        if t.k == 1 {
            let s = a + b;
            if s >= t.p {
                s - t.p
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            for &w in &t.digit_weight {
                let d = (a % t.p + b % t.p) % t.p;
                out += d * w;
                a /= t.p;
                b /= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        let t = &*self.inner;
        if t.k == 1 {
            if a == 0 {
                0
            } else {
                t.p - a
            }
        } else {
            let mut a = a;
            let mut out = 0;
            for &w in &t.digit_weight {
                let d = (t.p - a % t.p) % t.p;
                out += d * w;
                a /= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.inner;
        if t.k == 1 {
            return ((a as u64 * b as u64) % t.p as u64) as u32;
        }
        let n = t.q - 1;
        let s = t.log[a as usize] + t.log[b as usize];
        t.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv_raw(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let t = &*self.inner;
        let n = t.q - 1;
        Ok(t.exp[((n - t.log[a as usize]) % n) as usize])
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.inner;
        let n = (t.q - 1) as u64;
        t.exp[((t.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// `c * 1`, the image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p() as i64) as u32
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_raw(a.0, b.0))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.sub_raw(a.0, b.0))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_raw(a.0, b.0))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg_raw(a.0))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.inv_raw(a.0).map(FieldElement)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        FieldElement(self.pow_raw(a.0, e))
    }

    /// The sum of `f^r` over every element `f` of the field.
    ///
    /// Summed by direct field arithmetic; for `r >= 1` the result is `-1`
    /// when `(q - 1) | r` and `0` otherwise.
    pub fn power_sum(&self, r: u64) -> FieldElement {
        self.elements()
            .fold(FieldElement::ZERO, |acc, f| self.add(acc, self.pow(f, r)))
    }
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    out
}

fn undigits(poly: &[u32], p: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Base-`p` digits of a field element encoding, low digit first.
pub fn element_digits(field: &Field, a: u32) -> Vec<u32> {
    digits(a, field.p(), field.k())
}

pub fn make_field(p: u64, k: u64) -> Result<Field, FieldError> {
    Field::new(p, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent multiplication route: schoolbook product reduced by the
    // modulus, no log tables.
    fn slow_mul(f: &Field, a: u32, b: u32) -> u32 {
        let (p, k) = (f.p(), f.k());
        let prod = poly_mul(&digits(a, p, k), &digits(b, p, k), p);
        undigits(&poly_rem(&prod, f.modulus(), p), p)
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), FieldError::NotPrime(1));
        assert_eq!(Field::new(2, 0).unwrap_err(), FieldError::DegreeOutOfRange(0));
        assert!(matches!(
            Field::new(2, 17),
            Err(FieldError::FieldTooLarge { .. })
        ));
        assert!(Field::new(2, 16).is_ok());
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // Oracle: over Z/3 a monic quadratic is irreducible iff it has no
        // root; scan them in encoding order.
        let oracle = (0..9u32)
            .map(|code| [code % 3, code / 3, 1])
            .find(|m| (0..3).all(|x| (m[0] + m[1] * x + x * x) % 3 != 0))
            .unwrap();
        assert_eq!(oracle, [1, 0, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &oracle);
    }

    #[test]
    fn small_examples() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.mul(FieldElement(2), FieldElement(2)), FieldElement(1));
        let f4 = Field::new(2, 2).unwrap();
        // x * x = x + 1
        assert_eq!(f4.mul(FieldElement(2), FieldElement(2)), FieldElement(3));
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.inv(FieldElement(3)).unwrap(), FieldElement(2));
        assert_eq!(f5.inv(FieldElement(0)), Err(FieldError::DivisionByZero));
        assert_eq!(f5.pow(FieldElement(0), 0), FieldElement(1));
    }

    #[test]
    fn enumeration_order() {
        let f4 = Field::new(2, 2).unwrap();
        let els: Vec<u32> = f4.elements().map(|e| e.0).collect();
        assert_eq!(els, vec![0, 1, 2, 3]);
        assert_eq!(Field::new(3, 1).unwrap().elements().count(), 3);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = Field::new(p, k).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add_raw(a, f.neg_raw(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul_raw(a, f.inv_raw(a).unwrap()), 1);
                }
                assert_eq!(f.pow_raw(a, q as u64), a);
                for b in 0..q {
                    assert_eq!(f.mul_raw(a, b), slow_mul(&f, a, b), "GF({q}) {a}*{b}");
                    assert_eq!(f.add_raw(a, b), f.add_raw(b, a));
                    assert_eq!(f.mul_raw(a, b), f.mul_raw(b, a));
                    for c in 0..q {
                        assert_eq!(
                            f.mul_raw(a, f.add_raw(b, c)),
                            f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c))
                        );
                        assert_eq!(
                            f.add_raw(f.add_raw(a, b), c),
                            f.add_raw(a, f.add_raw(b, c))
                        );
                        assert_eq!(
                            f.mul_raw(f.mul_raw(a, b), c),
                            f.mul_raw(a, f.mul_raw(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.power_sum(2), FieldElement(2));
        assert_eq!(f3.power_sum(1), FieldElement(0));
        assert_eq!(f3.power_sum(0), FieldElement(0));
        let f4 = Field::new(2, 2).unwrap();
        // cubes of 0, 1, x, x+1 summed with slow_mul
        let cube = |a| slow_mul(&f4, slow_mul(&f4, a, a), a);
        let oracle = (0..4).fold(0, |acc, a| acc ^ cube(a));
        assert_eq!(oracle, 1);
        assert_eq!(f4.power_sum(3), FieldElement(oracle));
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }
}
