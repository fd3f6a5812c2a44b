//! Finite-dimensional unital associative algebras over GF(q), given by
//! structure constants in a fixed basis `e_0, ..., e_{n-1}`.

use thiserror::Error;

use crate::budget::enumeration_budget;
use crate::finring::{as_finite_ring, FiniteRing};
use crate::gf::{Field, FieldElement};
use crate::ring::{BudgetExceeded, Coords, ElementIter, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure table shape does not match dimension {dim}")]
    ShapeMismatch { dim: usize },
    #[error("coordinate value {value} is not an element of GF({q})")]
    ValueOutOfRange { value: u32, q: u32 },
    #[error("(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unity does not act as identity on e_{0}")]
    NotUnital(usize),
    #[error("element does not belong to this algebra")]
    AlgebraMismatch,
    #[error("operands are algebras over different fields")]
    FieldMismatch,
    #[error("dimension {dim} over GF({q}) exceeds the enumeration budget")]
    DimensionTooLarge { dim: usize, q: u32 },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// A unital associative algebra over a finite field. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    // table[(i * dim + j) * dim + k] = coordinate k of e_i e_j
    table: Vec<u32>,
    unity: Vec<u32>,
    radices: Vec<u32>,
}

impl Algebra {
    /// Builds and validates an algebra from a nested `dim × dim × dim` table.
    pub fn new(
        field: Field,
        dim: usize,
        table: &[Vec<Vec<u32>>],
        unity: &[u32],
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let shape_ok = table.len() == dim
            && table
                .iter()
                .all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim))
            && unity.len() == dim;
        if !shape_ok {
            return Err(AlgebraError::ShapeMismatch { dim });
        }
        let flat: Vec<u32> = table.iter().flatten().flatten().copied().collect();
        Self::from_flat(field, dim, flat, unity.to_vec())
    }

    /// Same as [`Algebra::new`] with the table already flattened row-major.
    pub fn from_flat(
        field: Field,
        dim: usize,
        table: Vec<u32>,
        unity: Vec<u32>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if table.len() != dim * dim * dim || unity.len() != dim {
            return Err(AlgebraError::ShapeMismatch { dim });
        }
        let q = field.q();
        if let Some(&value) = table.iter().chain(&unity).find(|&&v| v >= q) {
            return Err(AlgebraError::ValueOutOfRange { value, q });
        }
        let alg = Algebra {
            radices: vec![q; dim],
            field,
            dim,
            table,
            unity,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let basis = self.basis();
        for (i, ei) in basis.iter().enumerate() {
            if self.mul(&self.unity, ei) != *ei || self.mul(ei, &self.unity) != *ei {
                return Err(AlgebraError::NotUnital(i));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let eij = self.product_of_basis(i, j);
                for k in 0..self.dim {
                    let left = self.mul(&eij, &basis[k]);
                    let right = self.mul(&basis[i], &self.product_of_basis(j, k));
                    if left != right {
                        return Err(AlgebraError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn unity(&self) -> &[u32] {
        &self.unity
    }

    /// Coordinates of `e_i e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Coords {
        let start = (i * self.dim + j) * self.dim;
        self.table[start..start + self.dim].to_vec()
    }

    pub fn flat_table(&self) -> &[u32] {
        &self.table
    }

    /// Nested `dim × dim × dim` table.
    pub fn table(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.product_of_basis(i, j)).collect())
            .collect()
    }

    /// Validates a coordinate vector as an element of this algebra.
    pub fn element(&self, coords: &[u32]) -> Result<Coords, AlgebraError> {
        if coords.len() != self.dim || coords.iter().any(|&c| c >= self.q()) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(coords.to_vec())
    }

    pub fn scalar(&self, f: FieldElement, x: &[u32]) -> Coords {
        x.iter().map(|&c| self.field.mul_raw(f.0, c)).collect()
    }

    /// `Σ coeffs[i] · x^i`, with `x^0` the unity.
    pub fn eval_poly(&self, coeffs: &[FieldElement], x: &[u32]) -> Coords {
        let mut acc = self.zero();
        let mut power = self.one();
        for (i, &c) in coeffs.iter().enumerate() {
            if i > 0 {
                power = self.mul(&power, x);
            }
            acc = self.add(&acc, &self.scalar(c, &power));
        }
        acc
    }

    /// `x^q - x`.
    pub fn frobenius_defect(&self, x: &[u32]) -> Coords {
        self.sub(&self.pow(x, self.q() as u64), x)
    }

    pub fn enumerate(&self) -> Result<ElementIter, AlgebraError> {
        Ok(self.elements()?)
    }
}

impl Ring for Algebra {
    fn width(&self) -> usize {
        self.dim
    }

    fn radices(&self) -> &[u32] {
        &self.radices
    }

    fn one(&self) -> Coords {
        self.unity.clone()
    }

    fn add(&self, x: &[u32], y: &[u32]) -> Coords {
        x.iter().zip(y).map(|(&a, &b)| self.field.add_raw(a, b)).collect()
    }

    fn neg(&self, x: &[u32]) -> Coords {
        x.iter().map(|&a| self.field.neg_raw(a)).collect()
    }

    fn mul(&self, x: &[u32], y: &[u32]) -> Coords {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let n = self.dim;
        let f = &self.field;
        let mut out = vec![0u32; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul_raw(xi, yj);
                let row = &self.table[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, &t) in out.iter_mut().zip(row) {
                    if t != 0 {
                        *o = f.add_raw(*o, f.mul_raw(c, t));
                    }
                }
            }
        }
        out
    }

    fn scalar_action(&self, c: u32, x: &[u32]) -> Coords {
        self.scalar(FieldElement(c), x)
    }

    fn scalar_line(&self) -> Vec<Coords> {
        self.field
            .elements()
            .map(|f| self.scalar(f, &self.unity))
            .collect()
    }

    fn field_order(&self) -> Option<u64> {
        Some(self.q() as u64)
    }

    fn to_finite_ring(&self) -> FiniteRing {
        as_finite_ring(self)
    }

    fn elementary_divisors(&self) -> Vec<u64> {
        vec![self.field.p() as u64; self.dim * self.field.k() as usize]
    }
}

fn check_dimension(field: &Field, dim: usize) -> Result<(), AlgebraError> {
    let fits = (field.q() as u128)
        .checked_pow(dim as u32)
        .is_some_and(|size| size <= enumeration_budget() as u128);
    if fits {
        Ok(())
    } else {
        Err(AlgebraError::DimensionTooLarge { dim, q: field.q() })
    }
}

fn unit(dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// The 3-dimensional algebra with basis `{1, e_1, e_2}` and `e_i e_j = e_i`.
pub fn make_s(field: &Field) -> Result<Algebra, AlgebraError> {
    check_dimension(field, 3)?;
    let table: Vec<Vec<Vec<u32>>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| match (i, j) {
                    (0, j) => unit(3, j),
                    (i, _) => unit(3, i),
                })
                .collect()
        })
        .collect();
    Algebra::new(field.clone(), 3, &table, &unit(3, 0))
}

/// `M_n(F_q)` in the matrix-unit basis `E_ij`, index `i * n + j`.
pub fn make_matrix(field: &Field, n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let dim = n * n;
    check_dimension(field, dim)?;
    let mut table = vec![vec![vec![0; dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                table[i * n + j][j * n + l][i * n + l] = 1;
            }
        }
    }
    let mut unity = vec![0; dim];
    for i in 0..n {
        unity[i * n + i] = 1;
    }
    Algebra::new(field.clone(), dim, &table, &unity)
}

/// Upper triangular `n × n` matrices, basis `E_ij` (`i <= j`) in
/// lexicographic order of `(i, j)`.
pub fn make_triangular(field: &Field, n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let dim = pairs.len();
    check_dimension(field, dim)?;
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let mut table = vec![vec![vec![0; dim]; dim]; dim];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                table[a][b][index(i, l)] = 1;
            }
        }
    }
    let mut unity = vec![0; dim];
    for i in 0..n {
        unity[index(i, i)] = 1;
    }
    Algebra::new(field.clone(), dim, &table, &unity)
}

/// Direct product `A × B`; the basis of `A` comes first.
pub fn make_product(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
    if a.field != b.field {
        return Err(AlgebraError::FieldMismatch);
    }
    let (na, nb) = (a.dim, b.dim);
    let dim = na + nb;
    check_dimension(&a.field, dim)?;
    let mut table = vec![vec![vec![0; dim]; dim]; dim];
    for i in 0..na {
        for j in 0..na {
            table[i][j][..na].copy_from_slice(&a.product_of_basis(i, j));
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            table[na + i][na + j][na..].copy_from_slice(&b.product_of_basis(i, j));
        }
    }
    let unity: Vec<u32> = a.unity.iter().chain(&b.unity).copied().collect();
    Algebra::new(a.field.clone(), dim, &table, &unity)
}

/// `F_q^n` with componentwise operations.
pub fn make_qring(field: &Field, n: usize) -> Result<Algebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDimension);
    }
    check_dimension(field, n)?;
    let mut table = vec![vec![vec![0; n]; n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        row[i][i] = 1;
    }
    Algebra::new(field.clone(), n, &table, &vec![1; n])
}
