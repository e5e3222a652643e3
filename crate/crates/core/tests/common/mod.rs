//! Independent reference implementations used only by the tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type Mat = Vec<Vec<Q>>;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_mat(m: &qwzeta::algebra::RationalMatrix) -> Mat {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![Q::zero(); p]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += aik * &b[k][j];
            }
        }
    }
    out
}

/// Faddeev-LeVerrier: ascending coefficients of det(xI - a).
pub fn faddeev_leverrier(a: &Mat) -> Vec<Q> {
    let n = a.len();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut m = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mul(a, &m);
        let trace: Q = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / Q::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Cofactor expansion along the first row. Only for small matrices.
pub fn laplace_det(a: &Mat) -> Q {
    let n = a.len();
    if n == 0 {
        return Q::one();
    }
    let mut total = Q::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Mat = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &a[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Transition matrix built straight from the edge list: arc i is edge i
/// forwards, arc i + m is edge i backwards.
pub fn grover_matrix(n: usize, edges: &[(usize, usize)]) -> Mat {
    let m = edges.len();
    let mut degree = vec![0i64; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let arc = |a: usize| if a < m { edges[a] } else { (edges[a - m].1, edges[a - m].0) };
    (0..2 * m)
        .map(|e| {
            (0..2 * m)
                .map(|f| {
                    let (oe, _) = arc(e);
                    let (_, tf) = arc(f);
                    if tf != oe {
                        return Q::zero();
                    }
                    let back = if (f + m) % (2 * m) == e { Q::one() } else { Q::zero() };
                    q(2, degree[tf]) - back
                })
                .collect()
        })
        .collect()
}

/// Ascending coefficients of a product of `(poly, exponent)` factors.
pub fn product(factors: &[(&[Q], u32)]) -> Vec<Q> {
    let mut out = vec![Q::one()];
    for (p, e) in factors {
        for _ in 0..*e {
            let mut next = vec![Q::zero(); out.len() + p.len() - 1];
            for (i, a) in out.iter().enumerate() {
                for (j, b) in p.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            out = next;
        }
    }
    out
}
