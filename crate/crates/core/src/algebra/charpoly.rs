use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{bareiss_det, RatPolynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Square matrix whose entries are polynomials in one indeterminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<RatPolynomial>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> RatPolynomial) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// `constant + x * linear` for two square matrices of the same size.
    pub fn affine(constant: &RationalMatrix, linear: &RationalMatrix) -> Result<Self> {
        Self::quadratic(constant, linear, &RationalMatrix::zeros(constant.rows(), constant.cols()))
    }

    /// `c0 + x * c1 + x^2 * c2`.
    pub fn quadratic(
        c0: &RationalMatrix,
        c1: &RationalMatrix,
        c2: &RationalMatrix,
    ) -> Result<Self> {
        for m in [c0, c1, c2] {
            if !m.is_square() {
                return Err(Error::NotSquare {
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if m.rows() != c0.rows() {
                return Err(Error::DimensionMismatch {
                    left: (c0.rows(), c0.cols()),
                    right: (m.rows(), m.cols()),
                });
            }
        }
        Ok(Self::from_fn(c0.rows(), |i, j| {
            RatPolynomial::new(vec![
                c0.get(i, j).clone(),
                c1.get(i, j).clone(),
                c2.get(i, j).clone(),
            ])
        }))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatPolynomial {
        &self.entries[i * self.n + j]
    }

    pub fn eval(&self, x: &Rational) -> RationalMatrix {
        RationalMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j).eval(x))
    }
}

/// Determinant of a polynomial matrix by exact evaluation at the integers
/// `0..=bound` and interpolation.
///
/// One extra probe at `bound + 1` guards the caller's degree bound: if it
/// disagrees with the interpolant the bound was too small.
pub fn polymat_det(p: &PolyMatrix, bound: usize) -> Result<RatPolynomial> {
    let values: Vec<Rational> = (0..=bound + 1)
        .into_par_iter()
        .map(|c| {
            let x = Rational::from_integer(BigInt::from(c));
            p.eval(&x).det_exact()
        })
        .collect::<Result<_>>()?;
    let interp = interpolate_consecutive(&values[..=bound]);
    let probe = bound + 1;
    if interp.eval(&Rational::from_integer(BigInt::from(probe))) != values[probe] {
        return Err(Error::InconsistentBound { bound, probe });
    }
    Ok(interp)
}

/// Characteristic polynomial `det(x I - M)`, monic of degree `M.rows()`.
///
/// `det(c I - M)` is computed exactly at `c = 0..=s` on a row-wise integer
/// lift of `M` and the values are interpolated.
pub fn charpoly_exact(m: &RationalMatrix) -> Result<RatPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let s = m.rows();
    let (lifted, mults) = m.row_lift();
    let scale = mults.iter().fold(BigInt::one(), |acc, x| acc * x);
    let values: Vec<Rational> = (0..=s)
        .into_par_iter()
        .map(|c| {
            let c = BigInt::from(c);
            let shifted: Vec<Vec<BigInt>> = lifted
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut row: Vec<BigInt> = row.iter().map(|x| -x).collect();
                    row[i] += &c * &mults[i];
                    row
                })
                .collect();
            Rational::new(bareiss_det(shifted), scale.clone())
        })
        .collect();
    Ok(interpolate_consecutive(&values))
}

/// The unique polynomial of degree `< values.len()` taking `values[k]` at
/// `x = k`, via Newton forward differences.
pub fn interpolate_consecutive(values: &[Rational]) -> RatPolynomial {
    let n = values.len();
    if n == 0 {
        return RatPolynomial::zero();
    }
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    let mut factorial = BigInt::one();
    for k in 0..n {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        newton.push(&diffs[0] / Rational::from_integer(factorial.clone()));
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    // Horner evaluation of the Newton form sum a_k x(x-1)...(x-k+1).
    let mut coeffs: Vec<Rational> = vec![newton[n - 1].clone()];
    for k in (0..n - 1).rev() {
        let shift = Rational::from_integer(BigInt::from(k));
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &shift;
        }
        next[0] += &newton[k];
        coeffs = next;
    }
    RatPolynomial::new(coeffs)
}
