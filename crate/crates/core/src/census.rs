//! Exhaustive enumeration of unital algebras of dimension at most 3 over a
//! small field, classified up to isomorphism.
//!
//! Basis element 0 is pinned to the unity, so a candidate is determined by
//! the products `e_i e_j` with `i, j >= 1`. Candidates are indexed by
//! reading those `(dim-1)^2 · dim` coordinates as a big-endian base-`q`
//! number, which makes index order the lexicographic order of tables.
//!
//! Every isomorphism between two pinned algebras maps unity to unity, so it
//! is a change of basis by a matrix whose first column is `e_0`. Classes
//! are therefore orbits of that group acting on the valid candidates.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::budget::enumeration_budget;
use crate::gf::{Field, FieldDescriptor};
use crate::ring::{BudgetExceeded, Coords, Ring};
use crate::structure::{profile, Profile, StructureError};

pub const MAX_CENSUS_DIM: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census dimension must be between 1 and {MAX_CENSUS_DIM}, got {0}")]
    DimensionOutOfRange(usize),
    #[error("algebra is not over the census field, or its unity is not e_0")]
    NotPinned,
    #[error("census of {candidates} candidates exceeds the enumeration budget {budget}")]
    Budget { candidates: u128, budget: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl From<BudgetExceeded> for CensusError {
    fn from(e: BudgetExceeded) -> Self {
        CensusError::Budget {
            candidates: e.size,
            budget: e.budget,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusClass {
    /// Lexicographically least table in the class.
    pub representative: Algebra,
    pub orbit_size: u64,
    pub profile: Profile,
    pub noncommutative: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusResult {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub candidates_scanned: u64,
    pub valid_count: u64,
    pub classes: Vec<CensusClass>,
}

impl CensusResult {
    pub fn noncommutative_classes(&self) -> Vec<&CensusClass> {
        self.classes.iter().filter(|c| c.noncommutative).collect()
    }

    pub fn commutative_classes(&self) -> Vec<&CensusClass> {
        self.classes.iter().filter(|c| !c.noncommutative).collect()
    }
}

/// Maps candidate indices to flat structure-constant tables and back.
struct Codec {
    field: Field,
    dim: usize,
    candidates: u64,
}

impl Codec {
    fn new(field: &Field, dim: usize) -> Result<Self, CensusError> {
        if dim == 0 || dim > MAX_CENSUS_DIM {
            return Err(CensusError::DimensionOutOfRange(dim));
        }
        let free = ((dim - 1) * (dim - 1) * dim) as u32;
        let candidates = (field.q() as u128).pow(free);
        let budget = enumeration_budget();
        if candidates > budget as u128 {
            return Err(CensusError::Budget { candidates, budget });
        }
        Ok(Codec {
            field: field.clone(),
            dim,
            candidates: candidates as u64,
        })
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    fn decode(&self, mut index: u64) -> Vec<u32> {
        let n = self.dim;
        let q = self.field.q() as u64;
        let mut table = vec![0; n * n * n];
        for j in 0..n {
            table[self.slot(0, j, j)] = 1;
            table[self.slot(j, 0, j)] = 1;
        }
        for i in (1..n).rev() {
            for j in (1..n).rev() {
                for k in (0..n).rev() {
                    table[self.slot(i, j, k)] = (index % q) as u32;
                    index /= q;
                }
            }
        }
        table
    }

    fn encode(&self, table: &[u32]) -> u64 {
        let n = self.dim;
        let q = self.field.q() as u64;
        let mut index = 0;
        for i in 1..n {
            for j in 1..n {
                for k in 0..n {
                    index = index * q + table[self.slot(i, j, k)] as u64;
                }
            }
        }
        index
    }

    /// Associativity on triples of non-unity basis elements; triples
    /// involving `e_0` hold by construction.
    fn associative(&self, table: &[u32]) -> bool {
        let n = self.dim;
        let f = &self.field;
        let t = |i: usize, j: usize, k: usize| table[self.slot(i, j, k)];
        for i in 1..n {
            for j in 1..n {
                for k in 1..n {
                    for out in 0..n {
                        let mut left = 0;
                        let mut right = 0;
                        for m in 0..n {
                            left = f.add_raw(left, f.mul_raw(t(i, j, m), t(m, k, out)));
                            right = f.add_raw(right, f.mul_raw(t(j, k, m), t(i, m, out)));
                        }
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn build(&self, table: Vec<u32>) -> Result<Algebra, AlgebraError> {
        let mut unity = vec![0; self.dim];
        unity[0] = 1;
        Algebra::from_flat(self.field.clone(), self.dim, table, unity)
    }
}

/// Inverse of a square matrix over `field` (`m[row][col]`), if invertible.
fn invert(field: &Field, m: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut ext = row.clone();
            ext.extend((0..n).map(|c| u32::from(c == r)));
            ext
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = field.inv_raw(a[col][col]).ok()?;
        for x in a[col].iter_mut() {
            *x = field.mul_raw(*x, inv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                for c in 0..2 * n {
                    let sub = field.mul_raw(factor, a[col][c]);
                    a[r][c] = field.sub_raw(a[r][c], sub);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A unity-fixing change of basis: new basis vectors and the inverse matrix.
struct BasisChange {
    columns: Vec<Coords>,
    inverse: Vec<Vec<u32>>,
}

/// All invertible matrices over `field` whose first column is `e_0`.
fn unity_fixing_group(field: &Field, dim: usize) -> Vec<BasisChange> {
    let q = field.q() as u64;
    let vectors = q.pow(dim as u32);
    let digits = |mut code: u64| -> Coords {
        (0..dim)
            .map(|_| {
                let d = (code % q) as u32;
                code /= q;
                d
            })
            .collect()
    };
    let mut e0 = vec![0; dim];
    e0[0] = 1;
    let mut out = Vec::new();
    let free = dim - 1;
    for code in 0..vectors.pow(free as u32) {
        let mut columns = vec![e0.clone()];
        let mut rest = code;
        for _ in 0..free {
            columns.push(digits(rest % vectors));
            rest /= vectors;
        }
        let matrix: Vec<Vec<u32>> = (0..dim)
            .map(|r| columns.iter().map(|c| c[r]).collect())
            .collect();
        if let Some(inverse) = invert(field, &matrix) {
            out.push(BasisChange { columns, inverse });
        }
    }
    out
}

/// Index of the table of `alg` rewritten in the basis `g.columns`.
fn transformed_index(codec: &Codec, alg: &Algebra, g: &BasisChange) -> u64 {
    let n = codec.dim;
    let f = &codec.field;
    let mut table = codec.decode(0);
    for i in 1..n {
        for j in 1..n {
            let prod = alg.mul(&g.columns[i], &g.columns[j]);
            for k in 0..n {
                let coord = (0..n).fold(0, |acc, c| f.add_raw(acc, f.mul_raw(g.inverse[k][c], prod[c])));
                table[codec.slot(i, j, k)] = coord;
            }
        }
    }
    codec.encode(&table)
}

fn valid_indices(codec: &Codec) -> Vec<u64> {
    (0..codec.candidates)
        .into_par_iter()
        .filter(|&idx| codec.associative(&codec.decode(idx)))
        .collect()
}

/// Every associative table over `field` of dimension `dim` with unity
/// `e_0`, in lexicographic order.
pub fn enumerate_algebras(field: &Field, dim: usize) -> Result<Vec<Algebra>, CensusError> {
    let codec = Codec::new(field, dim)?;
    valid_indices(&codec)
        .into_par_iter()
        .map(|idx| Ok(codec.build(codec.decode(idx))?))
        .collect()
}

/// Partitions pinned algebras into isomorphism classes by orbit enumeration.
///
/// The first unvisited algebra in lexicographic order starts a class; its
/// images under every unity-fixing basis change form the class.
pub fn classify(field: &Field, dim: usize, algebras: &[Algebra]) -> Result<CensusResult, CensusError> {
    let codec = Codec::new(field, dim)?;
    let mut unity = vec![0; dim];
    unity[0] = 1;
    let mut indices = Vec::with_capacity(algebras.len());
    for alg in algebras {
        if alg.field() != field || alg.dim() != dim || alg.unity() != unity.as_slice() {
            return Err(CensusError::NotPinned);
        }
        indices.push(codec.encode(alg.flat_table()));
    }
    let mut order: Vec<usize> = (0..algebras.len()).collect();
    order.sort_by_key(|&i| indices[i]);
    order.dedup_by_key(|i| indices[*i]);

    let group = unity_fixing_group(field, dim);
    let mut visited = vec![false; codec.candidates as usize];
    let mut classes = Vec::new();
    for &pos in &order {
        if visited[indices[pos] as usize] {
            continue;
        }
        let rep = &algebras[pos];
        let mut orbit: Vec<u64> = group
            .par_iter()
            .map(|g| transformed_index(&codec, rep, g))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &idx in &orbit {
            visited[idx as usize] = true;
        }
        classes.push(CensusClass {
            representative: rep.clone(),
            orbit_size: orbit.len() as u64,
            profile: profile(rep)?,
            noncommutative: !rep.is_commutative(),
        });
    }
    Ok(CensusResult {
        field: field.descriptor(),
        dim,
        candidates_scanned: codec.candidates,
        valid_count: order.len() as u64,
        classes,
    })
}

/// [`enumerate_algebras`] followed by [`classify`].
pub fn census(field: &Field, dim: usize) -> Result<CensusResult, CensusError> {
    let algebras = enumerate_algebras(field, dim)?;
    classify(field, dim, &algebras)
}
