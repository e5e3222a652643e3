use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::{rational_to_string, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                left: (r, c),
                right: (1, bad.len()),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|x| x * factor)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        // Integer lifts keep the inner loop free of gcd reductions.
        let (a, a_scale) = self.row_lift();
        let (b, b_scale) = other.col_lift();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    if !a[i][k].is_zero() && !b[j][k].is_zero() {
                        acc += &a[i][k] * &b[j][k];
                    }
                }
                if !acc.is_zero() {
                    let den = &a_scale[i] * &b_scale[j];
                    out.set(i, j, Rational::new(acc, den));
                }
            }
        }
        Ok(out)
    }

    /// Integer lift by rows: `lifted[i] = mult[i] * self.row(i)` with `mult[i]`
    /// the least common denominator of row `i`.
    pub fn row_lift(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        (0..self.rows)
            .map(|i| lift_slice(self.row(i)))
            .unzip()
    }

    fn col_lift(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        (0..self.cols)
            .map(|j| {
                let col: Vec<Rational> = (0..self.rows).map(|i| self.get(i, j).clone()).collect();
                lift_slice(&col)
            })
            .unzip()
    }

    /// Exact determinant: each row is scaled to integers by its common
    /// denominator, the integer matrix is reduced with fraction-free
    /// elimination and the scaling is divided back out.
    pub fn det_exact(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (lifted, mults) = self.row_lift();
        let scale = mults.iter().fold(BigInt::one(), |acc, m| acc * m);
        Ok(Rational::new(bareiss_det(lifted), scale))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(Rational::zero(), |acc, x| acc + x))
            .collect()
    }

    /// Elementwise indicator of strict positivity.
    pub fn positive_support(&self) -> Self {
        self.map(|x| {
            if x.is_positive() {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(rational_to_string).collect())
            .collect()
    }
}

fn lift_slice(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mult = values
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let lifted = values
        .iter()
        .map(|x| x.numer() * (&mult / x.denom()))
        .collect();
    (lifted, mult)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
///
/// A zero pivot is replaced by a nonzero entry from the same column if one
/// exists, otherwise from anywhere in the trailing block via a column swap.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                a.swap(i, k);
                negate = !negate;
            } else {
                let found = (k..n)
                    .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = found else {
                    return BigInt::zero();
                };
                if i != k {
                    a.swap(i, k);
                    negate = !negate;
                }
                for row in a.iter_mut() {
                    row.swap(j, k);
                }
                negate = !negate;
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let divide = !prev.is_one();
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            if factor.is_zero() {
                for x in row[k + 1..].iter_mut().filter(|x| !x.is_zero()) {
                    *x *= pivot;
                    if divide {
                        *x /= &prev;
                    }
                }
            } else {
                for (x, p) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                    *x *= pivot;
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                    if divide && !x.is_zero() {
                        *x /= &prev;
                    }
                }
            }
        }
        prev = pivot.clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for row in self.to_string_rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
