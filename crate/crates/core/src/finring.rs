//! General finite rings: additive group `⊕ Z/m_i` with integer structure
//! constants. Covers rings of mixed or prime-power characteristic that are
//! not algebras over a field.

use num_integer::Integer;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::gf::{element_digits, is_prime, Field};
use crate::ring::{Coords, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteRingError {
    #[error("ring table shape does not match {width} generators")]
    ShapeMismatch { width: usize },
    #[error("modulus {0} is below 2")]
    BadModulus(u64),
    #[error("g_{i} g_{j} has coordinate {k} incompatible with the generator orders")]
    BilinearityViolation { i: usize, j: usize, k: usize },
    #[error("(g_{i} g_{j}) g_{k} != g_{i} (g_{j} g_{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unity does not act as identity on g_{0}")]
    NotUnital(usize),
    #[error("ring has no generators")]
    Empty,
}

/// A finite ring with unity. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    moduli: Vec<u32>,
    // table[(i * n + j) * n + k] = coordinate k of g_i g_j, reduced mod m_k
    table: Vec<u32>,
    unity: Vec<u32>,
}

impl FiniteRing {
    /// Builds a ring from nested tables; entries are reduced modulo the
    /// target modulus first, so negative values are accepted.
    pub fn new(
        moduli: &[u64],
        table: &[Vec<Vec<i64>>],
        unity: &[i64],
    ) -> Result<Self, FiniteRingError> {
        let n = moduli.len();
        if n == 0 {
            return Err(FiniteRingError::Empty);
        }
        if let Some(&m) = moduli.iter().find(|&&m| !(2..=u32::MAX as u64).contains(&m)) {
            return Err(FiniteRingError::BadModulus(m));
        }
        let shape_ok = table.len() == n
            && table
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && unity.len() == n;
        if !shape_ok {
            return Err(FiniteRingError::ShapeMismatch { width: n });
        }
        let reduce = |v: i64, k: usize| v.rem_euclid(moduli[k] as i64) as u32;
        let flat = table
            .iter()
            .flatten()
            .flat_map(|v| v.iter().enumerate().map(|(k, &x)| reduce(x, k)))
            .collect();
        let unity = unity.iter().enumerate().map(|(k, &x)| reduce(x, k)).collect();
        Self::from_parts(moduli.iter().map(|&m| m as u32).collect(), flat, unity)
    }

    /// Validates already-reduced flat data.
    pub(crate) fn from_parts(
        moduli: Vec<u32>,
        table: Vec<u32>,
        unity: Vec<u32>,
    ) -> Result<Self, FiniteRingError> {
        let n = moduli.len();
        if n == 0 {
            return Err(FiniteRingError::Empty);
        }
        if table.len() != n * n * n || unity.len() != n {
            return Err(FiniteRingError::ShapeMismatch { width: n });
        }
        let ring = FiniteRing {
            moduli,
            table,
            unity,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<(), FiniteRingError> {
        let n = self.moduli.len();
        for i in 0..n {
            for j in 0..n {
                let entry = self.product_of_basis(i, j);
                for (k, &t) in entry.iter().enumerate() {
                    let mk = self.moduli[k] as u64;
                    if (self.moduli[i] as u64 * t as u64) % mk != 0
                        || (self.moduli[j] as u64 * t as u64) % mk != 0
                    {
                        return Err(FiniteRingError::BilinearityViolation { i, j, k });
                    }
                }
            }
        }
        let basis = self.basis();
        for (i, g) in basis.iter().enumerate() {
            if self.mul(&self.unity, g) != *g || self.mul(g, &self.unity) != *g {
                return Err(FiniteRingError::NotUnital(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let gij = self.product_of_basis(i, j);
                for k in 0..n {
                    if self.mul(&gij, &basis[k]) != self.mul(&basis[i], &self.product_of_basis(j, k)) {
                        return Err(FiniteRingError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z/m`.
    pub fn zm(m: u64) -> Result<Self, FiniteRingError> {
        Self::new(&[m], &[vec![vec![1]]], &[1])
    }

    /// `Z/m_1 × ... × Z/m_r` with componentwise operations.
    pub fn product_of_cyclic(moduli: &[u64]) -> Result<Self, FiniteRingError> {
        let n = moduli.len();
        let mut table = vec![vec![vec![0i64; n]; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            row[i][i] = 1;
        }
        Self::new(moduli, &table, &vec![1; n])
    }

    /// Direct product; generators of `a` come first.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> FiniteRing {
        let (na, nb) = (a.width(), b.width());
        let n = na + nb;
        let mut table = vec![0u32; n * n * n];
        for i in 0..na {
            for j in 0..na {
                let start = (i * n + j) * n;
                table[start..start + na].copy_from_slice(&a.product_of_basis(i, j));
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                let start = ((na + i) * n + na + j) * n + na;
                table[start..start + nb].copy_from_slice(&b.product_of_basis(i, j));
            }
        }
        FiniteRing {
            moduli: a.moduli.iter().chain(&b.moduli).copied().collect(),
            table,
            unity: a.unity.iter().chain(&b.unity).copied().collect(),
        }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn unity(&self) -> &[u32] {
        &self.unity
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> Coords {
        let n = self.moduli.len();
        let start = (i * n + j) * n;
        self.table[start..start + n].to_vec()
    }

    pub fn table(&self) -> Vec<Vec<Vec<u32>>> {
        let n = self.moduli.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.product_of_basis(i, j)).collect())
            .collect()
    }

    /// The same ring as an algebra over GF(p) when every modulus is the prime
    /// `p`.
    pub fn to_prime_field_algebra(&self) -> Option<Result<Algebra, AlgebraError>> {
        let p = self.moduli[0];
        if !is_prime(p as u64) || self.moduli.iter().any(|&m| m != p) {
            return None;
        }
        let field = Field::new(p as u64, 1).expect("p is prime");
        Some(Algebra::from_flat(
            field,
            self.width(),
            self.table.clone(),
            self.unity.clone(),
        ))
    }
}

impl Ring for FiniteRing {
    fn width(&self) -> usize {
        self.moduli.len()
    }

    fn radices(&self) -> &[u32] {
        &self.moduli
    }

    fn one(&self) -> Coords {
        self.unity.clone()
    }

    fn add(&self, x: &[u32], y: &[u32]) -> Coords {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| ((a as u64 + b as u64) % m as u64) as u32)
            .collect()
    }

    fn neg(&self, x: &[u32]) -> Coords {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| if a == 0 { 0 } else { m - a })
            .collect()
    }

    fn mul(&self, x: &[u32], y: &[u32]) -> Coords {
        let n = self.moduli.len();
        let mut acc = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = xi as u64 * yj as u64;
                let row = &self.table[(i * n + j) * n..(i * n + j + 1) * n];
                for ((a, &t), &m) in acc.iter_mut().zip(row).zip(&self.moduli) {
                    *a = (*a + c % m as u64 * t as u64) % m as u64;
                }
            }
        }
        acc.into_iter().map(|a| a as u32).collect()
    }

    fn scalar_action(&self, c: u32, x: &[u32]) -> Coords {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| ((c as u64 * a as u64) % m as u64) as u32)
            .collect()
    }

    fn scalar_line(&self) -> Vec<Coords> {
        Vec::new()
    }

    fn field_order(&self) -> Option<u64> {
        None
    }

    fn to_finite_ring(&self) -> FiniteRing {
        self.clone()
    }

    fn characteristic(&self) -> u64 {
        self.unity
            .iter()
            .zip(&self.moduli)
            .map(|(&u, &m)| m as u64 / (u as u64).gcd(&(m as u64)))
            .fold(1, |acc, o| acc.lcm(&o))
    }
}

/// Restricts scalars of an F_q-algebra to Z/p.
///
/// Algebra coordinate `i` (a field element with base-`p` digits
/// `d_0..d_{k-1}`) becomes ring coordinates `i*k .. i*k + k`, so generator
/// `(i, t)` is `x^t e_i`.
pub fn as_finite_ring(alg: &Algebra) -> FiniteRing {
    let field = alg.field();
    let (p, k, n) = (field.p(), field.k() as usize, alg.dim());
    let width = n * k;
    let to_ring = |coords: &[u32]| -> Vec<u32> {
        coords
            .iter()
            .flat_map(|&c| element_digits(field, c))
            .collect()
    };
    let mut table = vec![0u32; width * width * width];
    for i in 0..n {
        for t in 0..k {
            let xt = p.pow(t as u32);
            for j in 0..n {
                for s in 0..k {
                    let xs = p.pow(s as u32);
                    let scale = field.mul_raw(xt, xs);
                    let prod = alg.scalar_action(scale, &alg.product_of_basis(i, j));
                    let (a, b) = (i * k + t, j * k + s);
                    let start = (a * width + b) * width;
                    table[start..start + width].copy_from_slice(&to_ring(&prod));
                }
            }
        }
    }
    FiniteRing {
        moduli: vec![p; width],
        table,
        unity: to_ring(alg.unity()),
    }
}

/// Maps algebra coordinates to the coordinates used by [`as_finite_ring`].
pub fn algebra_coords_to_ring(alg: &Algebra, coords: &[u32]) -> Coords {
    coords
        .iter()
        .flat_map(|&c| element_digits(alg.field(), c))
        .collect()
}

pub fn characteristic<R: Ring + ?Sized>(ring: &R) -> u64 {
    ring.characteristic()
}
