//! Presenting a finite abelian group, known only by its element list and
//! addition, as a direct sum of cyclic groups; and turning such a group
//! with a multiplication into a [`FiniteRing`].

use std::collections::HashMap;

use crate::finring::FiniteRing;
use crate::gf::prime_factors;

use super::StructureError;

type Id = u64;

fn order(x: Id, zero: Id, add: &dyn Fn(Id, Id) -> Id) -> u64 {
    let mut acc = x;
    let mut n = 1;
    while acc != zero {
        acc = add(acc, x);
        n += 1;
    }
    n
}

fn multiple(c: u64, x: Id, zero: Id, add: &dyn Fn(Id, Id) -> Id) -> Id {
    (0..c).fold(zero, |acc, _| add(acc, x))
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Generators with their orders such that every element is uniquely
/// `Σ c_i g_i` with `0 <= c_i < order_i`.
///
/// Works prime by prime. Within a p-primary part, repeatedly picks the
/// element of largest order modulo the span so far and corrects it by that
/// span so its order drops to the quotient order, which makes the new
/// cyclic subgroup meet the span trivially.
pub(crate) fn cyclic_decomposition(
    elements: &[Id],
    zero: Id,
    add: &dyn Fn(Id, Id) -> Id,
) -> Result<Vec<(Id, u64)>, StructureError> {
    let size = elements.len() as u64;
    let mut basis = Vec::new();
    for p in prime_factors(size) {
        let part: Vec<Id> = elements
            .iter()
            .copied()
            .filter(|&x| is_power_of(order(x, zero, add), p))
            .collect();
        let mut span: HashMap<Id, Vec<u64>> = HashMap::from([(zero, Vec::new())]);
        let mut gens: Vec<(Id, u64)> = Vec::new();
        while span.len() < part.len() {
            let mut best: Option<(Id, u64, Id)> = None;
            for &h in &part {
                if span.contains_key(&h) {
                    continue;
                }
                let (mut acc, mut o) = (h, 1);
                while !span.contains_key(&acc) {
                    acc = add(acc, h);
                    o += 1;
                }
                if best.is_none_or(|(_, bo, _)| o > bo) {
                    best = Some((h, o, acc));
                }
            }
            let (h, o, landing) = best.expect("part not yet spanned");
            let coeffs = &span[&landing];
            let mut lifted = h;
            for (&(g, og), &s) in gens.iter().zip(coeffs) {
                if s % o != 0 {
                    return Err(StructureError::DecompositionFailed);
                }
                let c = s / o;
                lifted = add(lifted, multiple((og - c % og) % og, g, zero, add));
            }
            let mut extended = HashMap::with_capacity(span.len() * o as usize);
            for (&x, cs) in &span {
                let mut y = x;
                for t in 0..o {
                    let mut c = cs.clone();
                    c.push(t);
                    extended.insert(y, c);
                    y = add(y, lifted);
                }
            }
            if extended.len() != span.len() * o as usize {
                return Err(StructureError::DecompositionFailed);
            }
            span = extended;
            gens.push((lifted, o));
        }
        basis.extend(gens);
    }
    let total: u64 = basis.iter().map(|&(_, o)| o).product();
    if total != size {
        return Err(StructureError::DecompositionFailed);
    }
    Ok(basis)
}

/// A ring given by closures over element ids, re-presented as a
/// [`FiniteRing`]. Returns the ring and the ids of its generators.
pub(crate) fn build_ring(
    elements: &[Id],
    zero: Id,
    unity: Id,
    add: &dyn Fn(Id, Id) -> Id,
    mul: &dyn Fn(Id, Id) -> Id,
) -> Result<(FiniteRing, Vec<Id>), StructureError> {
    let basis = cyclic_decomposition(elements, zero, add)?;
    let mut coords: HashMap<Id, Vec<u32>> = HashMap::from([(zero, Vec::new())]);
    for &(g, o) in &basis {
        let mut next = HashMap::with_capacity(coords.len() * o as usize);
        for (&x, cs) in &coords {
            let mut y = x;
            for t in 0..o {
                let mut c = cs.clone();
                c.push(t as u32);
                next.insert(y, c);
                y = add(y, g);
            }
        }
        coords = next;
    }
    let n = basis.len();
    let mut table = Vec::with_capacity(n * n * n);
    for &(a, _) in &basis {
        for &(b, _) in &basis {
            table.extend_from_slice(&coords[&mul(a, b)]);
        }
    }
    let moduli = basis.iter().map(|&(_, o)| o as u32).collect();
    let ring = FiniteRing::from_parts(moduli, table, coords[&unity].clone())?;
    Ok((ring, basis.into_iter().map(|(g, _)| g).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Z/m_1 × ... encoded mixed-radix, for exercising the decomposition.
    fn group(moduli: &[u64]) -> (Vec<Id>, impl Fn(Id, Id) -> Id) {
        let size: u64 = moduli.iter().product();
        let m = moduli.to_vec();
        let add = move |a: Id, b: Id| {
            let (mut a, mut b, mut out, mut w) = (a, b, 0, 1);
            for &mi in &m {
                out += ((a % mi + b % mi) % mi) * w;
                a /= mi;
                b /= mi;
                w *= mi;
            }
            out
        };
        ((0..size).collect(), add)
    }

    #[test]
    fn decomposes_into_expected_orders() {
        for (moduli, expect) in [
            (vec![4u64], vec![4u64]),
            (vec![6], vec![2, 3]),
            (vec![2, 4], vec![4, 2]),
            (vec![2, 2, 2], vec![2, 2, 2]),
            (vec![4, 8, 3], vec![8, 4, 3]),
            (vec![9, 3, 2], vec![2, 9, 3]),
        ] {
            let (els, add) = group(&moduli);
            let basis = cyclic_decomposition(&els, 0, &add).unwrap();
            let orders: Vec<u64> = basis.iter().map(|&(_, o)| o).collect();
            assert_eq!(orders, expect, "{moduli:?}");
        }
    }
}
