#![allow(dead_code)]

use fqring::algebra::{make_product, make_qring, Algebra};
use fqring::gf::Field;

pub fn gf(p: u64) -> Field {
    Field::new(p, 1).unwrap()
}

/// `F_q[x]/(f)` for monic `f` of degree `n` (coefficients low first,
/// leading 1 omitted), in the basis `1, x, ..., x^(n-1)`.
pub fn polynomial_quotient(field: &Field, f: &[u32]) -> Algebra {
    let n = f.len();
    let reduce = |mut c: Vec<u32>| {
        for d in (n..c.len()).rev() {
            let lead = c[d];
            c[d] = 0;
            for (i, &fi) in f.iter().enumerate() {
                let sub = field.mul_raw(lead, fi);
                c[d - n + i] = field.sub_raw(c[d - n + i], sub);
            }
        }
        c.truncate(n);
        c
    };
    let mut table = vec![vec![vec![0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut c = vec![0; 2 * n];
            c[i + j] = 1;
            table[i][j] = reduce(c);
        }
    }
    let mut unity = vec![0; n];
    unity[0] = 1;
    Algebra::new(field.clone(), n, &table, &unity).unwrap()
}

/// A monic irreducible polynomial of degree 2 or 3 (one without roots).
pub fn irreducible_low_degree(field: &Field, n: usize) -> Vec<u32> {
    let q = field.q();
    let mut coeffs = vec![0u32; n];
    loop {
        let has_root = (0..q).any(|x| {
            let mut v = 1;
            for c in coeffs.iter().rev() {
                v = field.add_raw(field.mul_raw(v, x), *c);
            }
            v == 0
        });
        if !has_root {
            return coeffs;
        }
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// `F_q[u, v]/(u, v)^2`.
pub fn square_zero_radical(field: &Field) -> Algebra {
    let e = |k: usize| {
        let mut v = vec![0; 3];
        v[k] = 1;
        v
    };
    let z = vec![0; 3];
    let table = vec![
        vec![e(0), e(1), e(2)],
        vec![e(1), z.clone(), z.clone()],
        vec![e(2), z.clone(), z],
    ];
    Algebra::new(field.clone(), 3, &table, &e(0)).unwrap()
}

/// The six commutative unital 3-dimensional algebras over `F_q`, built by
/// hand: `F_q^3`, `F_q × F_{q^2}`, `F_{q^3}`, `F_q × F_q[t]/t^2`,
/// `F_q[t]/t^3` and the square-zero radical algebra.
pub fn commutative_dim3_oracle(field: &Field) -> Vec<(&'static str, Algebra)> {
    let line = make_qring(field, 1).unwrap();
    let quadratic = polynomial_quotient(field, &irreducible_low_degree(field, 2));
    let dual = polynomial_quotient(field, &[0, 0]);
    vec![
        ("F_q^3", make_qring(field, 3).unwrap()),
        ("F_q x F_q^2", make_product(&line, &quadratic).unwrap()),
        ("F_q^3 field", polynomial_quotient(field, &irreducible_low_degree(field, 3))),
        ("F_q x F_q[t]/t^2", make_product(&line, &dual).unwrap()),
        ("F_q[t]/t^3", polynomial_quotient(field, &[0, 0, 0])),
        ("square-zero radical", square_zero_radical(field)),
    ]
}
