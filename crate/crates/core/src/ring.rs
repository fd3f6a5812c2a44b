//! The element-level contract shared by [`Algebra`] and [`FiniteRing`].
//!
//! Every ring here is a finite additive group `⊕ Z_i` presented by
//! coordinates: coordinate `i` ranges over `[0, radix(i))`. Elements are
//! plain coordinate vectors and are identified with their mixed-radix
//! encoding (coordinate 0 is the least significant digit), which is also the
//! canonical enumeration order.

use thiserror::Error;

use crate::algebra::Algebra;
use crate::budget::enumeration_budget;
use crate::finring::FiniteRing;

pub type Coords = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ring of {size} elements exceeds the enumeration budget {budget}")]
pub struct BudgetExceeded {
    pub size: u128,
    pub budget: u64,
}

pub trait Ring: Sync {
    /// Number of coordinates.
    fn width(&self) -> usize;

    /// Range of each coordinate.
    fn radices(&self) -> &[u32];

    fn one(&self) -> Coords;

    fn add(&self, x: &[u32], y: &[u32]) -> Coords;

    fn neg(&self, x: &[u32]) -> Coords;

    fn mul(&self, x: &[u32], y: &[u32]) -> Coords;

    /// `c · x` where `c` is a coordinate value: a field scalar for algebras,
    /// an integer for finite rings.
    fn scalar_action(&self, c: u32, x: &[u32]) -> Coords;

    /// Elements `f · 1` that a subalgebra must contain besides the subring
    /// generated by `1`; empty for plain rings.
    fn scalar_line(&self) -> Vec<Coords>;

    /// Order of the base field when the ring is an F_q-algebra.
    fn field_order(&self) -> Option<u64>;

    /// The same ring presented as a [`FiniteRing`].
    fn to_finite_ring(&self) -> FiniteRing;

    /// Prime-power orders of a cyclic decomposition of the additive group,
    /// ascending.
    fn elementary_divisors(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &m in self.radices() {
            let mut m = m as u64;
            for p in crate::gf::prime_factors(m) {
                let mut pk = 1;
                while m % p == 0 {
                    m /= p;
                    pk *= p;
                }
                out.push(pk);
            }
        }
        out.sort_unstable();
        out
    }

    fn zero(&self) -> Coords {
        vec![0; self.width()]
    }

    fn sub(&self, x: &[u32], y: &[u32]) -> Coords {
        self.add(x, &self.neg(y))
    }

    fn cardinality(&self) -> u128 {
        self.radices().iter().map(|&m| m as u128).product()
    }

    /// Additive generators: the coordinate unit vectors.
    fn basis(&self) -> Vec<Coords> {
        (0..self.width())
            .map(|i| {
                let mut v = self.zero();
                v[i] = 1;
                v
            })
            .collect()
    }

    fn encode(&self, x: &[u32]) -> u64 {
        let mut code = 0u64;
        for (i, &m) in self.radices().iter().enumerate().rev() {
            code = code * m as u64 + x[i] as u64;
        }
        code
    }

    fn decode(&self, mut code: u64) -> Coords {
        self.radices()
            .iter()
            .map(|&m| {
                let d = (code % m as u64) as u32;
                code /= m as u64;
                d
            })
            .collect()
    }

    /// Left-associated repeated multiplication, `x^0 = 1`.
    fn pow(&self, x: &[u32], e: u64) -> Coords {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    fn commutes(&self, x: &[u32], y: &[u32]) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    fn is_central(&self, x: &[u32]) -> bool {
        self.basis().iter().all(|g| self.commutes(x, g))
    }

    fn is_commutative(&self) -> bool {
        let basis = self.basis();
        basis
            .iter()
            .enumerate()
            .all(|(i, a)| basis[i + 1..].iter().all(|b| self.commutes(a, b)))
    }

    /// Least `c >= 1` with `c · x = 0`.
    fn additive_order(&self, x: &[u32]) -> u64 {
        let zero = self.zero();
        let mut acc = x.to_vec();
        let mut c = 1;
        while acc != zero {
            acc = self.add(&acc, x);
            c += 1;
        }
        c
    }

    /// Additive order of the unity.
    fn characteristic(&self) -> u64 {
        self.additive_order(&self.one())
    }

    fn check_budget(&self) -> Result<u64, BudgetExceeded> {
        let size = self.cardinality();
        let budget = enumeration_budget();
        if size > budget as u128 {
            Err(BudgetExceeded { size, budget })
        } else {
            Ok(size as u64)
        }
    }

    /// All elements in encoding order, after checking the enumeration budget.
    fn elements(&self) -> Result<ElementIter, BudgetExceeded> {
        self.check_budget()?;
        Ok(ElementIter::new(self.radices().to_vec()))
    }
}

/// Mixed-radix counter over all coordinate vectors.
pub struct ElementIter {
    radices: Vec<u32>,
    next: Option<Coords>,
}

impl ElementIter {
    pub fn new(radices: Vec<u32>) -> Self {
        let next = Some(vec![0; radices.len()]);
        ElementIter { radices, next }
    }
}

impl Iterator for ElementIter {
    type Item = Coords;

    fn next(&mut self) -> Option<Coords> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut carried = true;
        for (d, &m) in succ.iter_mut().zip(&self.radices) {
            *d += 1;
            if *d < m {
                carried = false;
                break;
            }
            *d = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

/// Tail length and cycle length of `x, x^2, x^3, ...` (Brent's method).
///
/// Returns `(index, period)` with `x^(index+1) = x^(index+1+period)` and both
/// minimal; `index = 0` means the sequence is purely periodic.
pub fn power_cycle<R: Ring + ?Sized>(ring: &R, x: &[u32]) -> (usize, usize) {
    let step = |y: &[u32]| ring.mul(y, x);
    let mut power = 1;
    let mut period = 1;
    let mut tortoise = x.to_vec();
    let mut hare = step(x);
    while tortoise != hare {
        if power == period {
            tortoise = hare.clone();
            power *= 2;
            period = 0;
        }
        hare = step(&hare);
        period += 1;
    }
    let mut tortoise = x.to_vec();
    let mut hare = x.to_vec();
    for _ in 0..period {
        hare = step(&hare);
    }
    let mut index = 0;
    while tortoise != hare {
        tortoise = step(&tortoise);
        hare = step(&hare);
        index += 1;
    }
    (index, period)
}

/// `x` is a unit iff its powers are purely periodic and return to `1`;
/// `x^(period-1)` is then a two-sided inverse.
pub fn is_unit<R: Ring + ?Sized>(ring: &R, x: &[u32]) -> bool {
    let (index, period) = power_cycle(ring, x);
    index == 0 && ring.pow(x, period as u64) == ring.one()
}

pub fn is_nilpotent<R: Ring + ?Sized>(ring: &R, x: &[u32]) -> bool {
    let (index, period) = power_cycle(ring, x);
    period == 1 && ring.pow(x, index as u64 + 1) == ring.zero()
}

/// Either representation, for operations that accept both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyRing {
    Algebra(Algebra),
    Finite(FiniteRing),
}

impl AnyRing {
    pub fn as_algebra(&self) -> Option<&Algebra> {
        match self {
            AnyRing::Algebra(a) => Some(a),
            AnyRing::Finite(_) => None,
        }
    }

}

impl From<Algebra> for AnyRing {
    fn from(a: Algebra) -> Self {
        AnyRing::Algebra(a)
    }
}

impl From<FiniteRing> for AnyRing {
    fn from(r: FiniteRing) -> Self {
        AnyRing::Finite(r)
    }
}

macro_rules! dispatch {
    ($self:ident, $r:ident => $e:expr) => {
        match $self {
            AnyRing::Algebra($r) => $e,
            AnyRing::Finite($r) => $e,
        }
    };
}

impl Ring for AnyRing {
    fn width(&self) -> usize {
        dispatch!(self, r => r.width())
    }
    fn radices(&self) -> &[u32] {
        dispatch!(self, r => r.radices())
    }
    fn one(&self) -> Coords {
        dispatch!(self, r => r.one())
    }
    fn add(&self, x: &[u32], y: &[u32]) -> Coords {
        dispatch!(self, r => r.add(x, y))
    }
    fn neg(&self, x: &[u32]) -> Coords {
        dispatch!(self, r => r.neg(x))
    }
    fn mul(&self, x: &[u32], y: &[u32]) -> Coords {
        dispatch!(self, r => r.mul(x, y))
    }
    fn scalar_action(&self, c: u32, x: &[u32]) -> Coords {
        dispatch!(self, r => r.scalar_action(c, x))
    }
    fn scalar_line(&self) -> Vec<Coords> {
        dispatch!(self, r => r.scalar_line())
    }
    fn field_order(&self) -> Option<u64> {
        dispatch!(self, r => r.field_order())
    }
    fn to_finite_ring(&self) -> FiniteRing {
        dispatch!(self, r => r.to_finite_ring())
    }
    fn elementary_divisors(&self) -> Vec<u64> {
        dispatch!(self, r => r.elementary_divisors())
    }
}
