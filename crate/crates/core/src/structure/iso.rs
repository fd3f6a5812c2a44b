//! Isomorphism search between two rings of the same representation.
//!
//! A candidate isomorphism is fixed by the images `y_i` of the source's
//! additive generators `g_i` and extended by the scalar action, so for
//! algebras this is a search over coordinate changes (F_q-linear maps) and
//! for plain rings over additive homomorphisms. Images are chosen one
//! generator at a time from target elements with the same
//! [`ElementSignature`], and every product relation `g_i g_j` is checked as
//! soon as all generators it mentions have images.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::search_budget;
use crate::ring::{power_cycle, AnyRing, Coords, Ring};

use super::{additive_span, profile, StructureError};

/// Per-element data preserved by every ring isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementSignature {
    pub additive_order: u64,
    pub central: bool,
    /// Tail and cycle length of the power sequence `x, x^2, ...`.
    pub power_index: usize,
    pub power_period: usize,
    pub square_zero: bool,
}

pub fn element_signature<R: Ring + ?Sized>(ring: &R, x: &[u32]) -> ElementSignature {
    let (power_index, power_period) = power_cycle(ring, x);
    ElementSignature {
        additive_order: ring.additive_order(x),
        central: ring.is_central(x),
        power_index,
        power_period,
        square_zero: ring.mul(x, x) == ring.zero(),
    }
}

/// Images of the source generators; column `i` of the coordinate-change
/// matrix is `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub images: Vec<Coords>,
}

impl Isomorphism {
    pub fn identity<R: Ring + ?Sized>(ring: &R) -> Self {
        Isomorphism {
            images: ring.basis(),
        }
    }

    pub fn apply<R: Ring + ?Sized>(&self, target: &R, x: &[u32]) -> Coords {
        x.iter()
            .zip(&self.images)
            .fold(target.zero(), |acc, (&c, y)| {
                if c == 0 {
                    acc
                } else {
                    target.add(&acc, &target.scalar_action(c, y))
                }
            })
    }

    /// `matrix[k][i]` = coordinate `k` of the image of generator `i`.
    pub fn matrix(&self) -> Vec<Vec<u32>> {
        let width = self.images.first().map_or(0, Vec::len);
        (0..width)
            .map(|k| self.images.iter().map(|y| y[k]).collect())
            .collect()
    }
}

struct Relation {
    left: usize,
    right: usize,
    product: Coords,
}

struct Search<'a, R: Ring + ?Sized> {
    target: &'a R,
    candidates: Vec<Vec<Coords>>,
    // relations checkable once generators 0..=step have images
    relations: Vec<Vec<Relation>>,
    unity: Coords,
    unity_step: usize,
    source_size: u64,
    target_size: u64,
    nodes: u64,
    budget: u64,
}

fn last_support(x: &[u32]) -> usize {
    x.iter().rposition(|&c| c != 0).unwrap_or(0)
}

impl<R: Ring + ?Sized> Search<'_, R> {
    fn combine(&self, coeffs: &[u32], images: &[Coords]) -> Coords {
        Isomorphism {
            images: images.to_vec(),
        }
        .apply(self.target, &coeffs[..images.len()])
    }

    fn consistent(&self, step: usize, images: &[Coords]) -> bool {
        let t = self.target;
        if step == self.unity_step && self.combine(&self.unity, images) != t.one() {
            return false;
        }
        self.relations[step].iter().all(|r| {
            t.mul(&images[r.left], &images[r.right]) == self.combine(&r.product, images)
        })
    }

    fn injective(&self, images: &[Coords]) -> bool {
        let t = self.target;
        let mut gens = Vec::new();
        for (y, &m) in images.iter().zip(t.radices()) {
            for c in 1..m {
                gens.push(t.scalar_action(c, y));
            }
        }
        additive_span(t, &gens, self.target_size).len() as u64 == self.source_size
    }

    fn extend(&mut self, images: &mut Vec<Coords>) -> Result<bool, StructureError> {
        let depth = images.len();
        if depth == self.candidates.len() {
            return Ok(self.injective(images));
        }
        for idx in 0..self.candidates[depth].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(StructureError::SearchBudgetExceeded(self.budget));
            }
            images.push(self.candidates[depth][idx].clone());
            if self.consistent(depth, images) && self.extend(images)? {
                return Ok(true);
            }
            images.pop();
        }
        Ok(false)
    }
}

/// Searches for a unity-preserving isomorphism `a → b`.
///
/// Cheap invariants (size, additive group type, base field, [`profile`])
/// are compared first; any mismatch returns `None` without searching.
pub fn is_isomorphic<R>(a: &R, b: &R) -> Result<Option<Isomorphism>, StructureError>
where
    R: Ring + PartialEq + ?Sized,
{
    if a == b {
        return Ok(Some(Isomorphism::identity(a)));
    }
    let source_size = a.check_budget()?;
    let target_size = b.check_budget()?;
    if source_size != target_size
        || a.width() != b.width() && a.field_order().is_some()
        || a.field_order() != b.field_order()
        || a.elementary_divisors() != b.elementary_divisors()
    {
        return Ok(None);
    }
    if profile(a)? != profile(b)? {
        return Ok(None);
    }

    let generators = a.basis();
    let signatures: Vec<ElementSignature> =
        generators.iter().map(|g| element_signature(a, g)).collect();
    let target_signatures: Vec<(u64, ElementSignature)> = (0..target_size)
        .into_par_iter()
        .map(|code| (code, element_signature(b, &b.decode(code))))
        .collect();
    let candidates: Vec<Vec<Coords>> = signatures
        .iter()
        .map(|s| {
            target_signatures
                .iter()
                .filter(|(_, t)| t == s)
                .map(|&(code, _)| b.decode(code))
                .collect()
        })
        .collect();

    let n = generators.len();
    let mut relations: Vec<Vec<Relation>> = (0..n).map(|_| Vec::new()).collect();
    for i in 0..n {
        for j in 0..n {
            let product = a.mul(&generators[i], &generators[j]);
            let step = i.max(j).max(last_support(&product));
            relations[step].push(Relation {
                left: i,
                right: j,
                product,
            });
        }
    }
    let unity = a.one();
    let mut search = Search {
        target: b,
        candidates,
        relations,
        unity_step: last_support(&unity),
        unity,
        source_size,
        target_size,
        nodes: 0,
        budget: search_budget(),
    };
    let mut images = Vec::with_capacity(n);
    if search.extend(&mut images)? {
        Ok(Some(Isomorphism { images }))
    } else {
        Ok(None)
    }
}

/// Algebra pairs are compared as algebras; anything else as plain rings.
pub fn is_isomorphic_any(a: &AnyRing, b: &AnyRing) -> Result<Option<Isomorphism>, StructureError> {
    match (a, b) {
        (AnyRing::Algebra(x), AnyRing::Algebra(y)) => is_isomorphic(x, y),
        _ => is_isomorphic(&a.to_finite_ring(), &b.to_finite_ring()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_matrix, make_qring, make_s, make_triangular, Algebra};
    use crate::finring::FiniteRing;
    use crate::gf::Field;

    fn gf(p: u64) -> Field {
        Field::new(p, 1).unwrap()
    }

    fn check_witness<R: Ring>(a: &R, b: &R, iso: &Isomorphism) {
        let all: Vec<Coords> = a.elements().unwrap().collect();
        for x in &all {
            for y in &all {
                assert_eq!(iso.apply(b, &a.mul(x, y)), b.mul(&iso.apply(b, x), &iso.apply(b, y)));
            }
        }
        assert_eq!(iso.apply(b, &a.one()), b.one());
    }

    #[test]
    fn s_is_upper_triangular() {
        for p in [2, 3] {
            let s = make_s(&gf(p)).unwrap();
            let t = make_triangular(&gf(p), 2).unwrap();
            let iso = is_isomorphic(&s, &t).unwrap().expect("isomorphic");
            check_witness(&s, &t, &iso);
            let back = is_isomorphic(&t, &s).unwrap().expect("symmetric");
            check_witness(&t, &s, &back);
        }
    }

    #[test]
    fn field_versus_split_algebra() {
        let f2 = gf(2);
        // F_4 as a 2-dimensional F_2-algebra
        let f4 = Algebra::new(
            f2.clone(),
            2,
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
            &[1, 0],
        )
        .unwrap();
        let split = make_qring(&f2, 2).unwrap();
        assert!(is_isomorphic(&f4, &split).unwrap().is_none());
    }

    #[test]
    fn identity_witness() {
        let m2 = make_matrix(&gf(2), 2).unwrap();
        assert_eq!(
            is_isomorphic(&m2, &m2.clone()).unwrap().unwrap(),
            Isomorphism::identity(&m2)
        );
    }

    #[test]
    fn relabelled_matrix_ring() {
        // M_2(F_3) in the basis E_11, E_21, E_12, E_22
        let f3 = gf(3);
        let m2 = make_matrix(&f3, 2).unwrap();
        let perm = [0usize, 2, 1, 3];
        let mut table = vec![vec![vec![0; 4]; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let prod = m2.product_of_basis(perm[i], perm[j]);
                for k in 0..4 {
                    table[i][j][k] = prod[perm[k]];
                }
            }
        }
        let relabelled = Algebra::new(f3, 4, &table, &[1, 0, 0, 1]).unwrap();
        assert_ne!(relabelled, m2);
        let iso = is_isomorphic(&m2, &relabelled).unwrap().unwrap();
        check_witness(&m2, &relabelled, &iso);
    }

    #[test]
    fn mixed_presentations_of_the_same_ring() {
        let z6 = FiniteRing::zm(6).unwrap();
        let f3f2 = FiniteRing::product_of_cyclic(&[3, 2]).unwrap();
        let iso = is_isomorphic(&z6, &f3f2).unwrap().unwrap();
        check_witness(&z6, &f3f2, &iso);
        let z4 = FiniteRing::zm(4).unwrap();
        let f2f2 = FiniteRing::product_of_cyclic(&[2, 2]).unwrap();
        assert!(is_isomorphic(&z4, &f2f2).unwrap().is_none());
    }

    #[test]
    fn any_ring_dispatch() {
        let s = AnyRing::from(make_s(&gf(2)).unwrap());
        let t = AnyRing::from(make_triangular(&gf(2), 2).unwrap().to_finite_ring());
        assert!(is_isomorphic_any(&s, &t).unwrap().is_some());
    }
}
