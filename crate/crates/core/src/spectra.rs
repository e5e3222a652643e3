//! Numeric spectra from exact characteristic polynomials.
//!
//! Roots are found in double precision by Aberth-Ehrlich iteration, but only
//! after the exact polynomial has been split: roots at 0 and ±1 are divided
//! out exactly and the rest is separated into square-free parts, so every
//! numeric solve sees simple roots. Repeated roots are then reproduced with
//! their exact multiplicities.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::algebra::{RatPolynomial, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
/// Convergence threshold on the Newton correction `|p(z) / p'(z)|`.
pub const STEP_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 2000;
/// Radius used to group numerically equal roots for display.
pub const CLUSTER_RADIUS: f64 = 1e-6;

/// Multiset of complex values compared up to a pairing tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumMultiset {
    values: Vec<Complex64>,
    tolerance: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Comparison {
    pub equal: bool,
    /// Largest distance between matched values; infinite when the
    /// cardinalities differ.
    pub max_pair_distance: f64,
}

impl SpectrumMultiset {
    pub fn new(values: Vec<Complex64>) -> Self {
        Self {
            values,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Real parts, provided every imaginary part is within the tolerance.
    pub fn real_values(&self) -> Result<Vec<f64>> {
        self.values
            .iter()
            .map(|z| {
                if z.im.abs() <= self.tolerance {
                    Ok(z.re)
                } else {
                    Err(Error::OutOfRange(format!("eigenvalue {z} is not real")))
                }
            })
            .collect()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            values: self.values.iter().map(Complex64::conj).collect(),
            tolerance: self.tolerance,
        }
    }

    pub fn is_conjugate_closed(&self) -> bool {
        compare(self, &self.conjugate()).equal
    }

    /// Values grouped within [`CLUSTER_RADIUS`], with counts.
    pub fn clustered(&self) -> Vec<(Complex64, usize)> {
        let mut clusters: Vec<(Complex64, usize)> = Vec::new();
        for &z in &self.values {
            match clusters.iter_mut().find(|(c, _)| (c - z).norm() <= CLUSTER_RADIUS) {
                Some((_, count)) => *count += 1,
                None => clusters.push((z, 1)),
            }
        }
        clusters
    }
}

impl Serialize for SpectrumMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Point(Complex64);
        impl Serialize for Point {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut st = serializer.serialize_struct("Complex", 2)?;
                st.serialize_field("re", &self.0.re)?;
                st.serialize_field("im", &self.0.im)?;
                st.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.values.len()))?;
        for &z in &self.values {
            seq.serialize_element(&Point(z))?;
        }
        seq.end()
    }
}

fn greedy_max_distance(from: &[Complex64], to: &[Complex64]) -> f64 {
    let mut used = vec![false; to.len()];
    let mut worst: f64 = 0.0;
    for z in from {
        let best = to
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, w)| (j, (z - w).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((j, d)) = best {
            used[j] = true;
            worst = worst.max(d);
        }
    }
    worst
}

/// Greedy nearest-neighbour matching run from both sides; equal when every
/// matched pair lies within the larger of the two tolerances.
pub fn compare(a: &SpectrumMultiset, b: &SpectrumMultiset) -> Comparison {
    if a.len() != b.len() {
        return Comparison {
            equal: false,
            max_pair_distance: f64::INFINITY,
        };
    }
    let tolerance = a.tolerance.max(b.tolerance);
    let distance = greedy_max_distance(&a.values, &b.values).max(greedy_max_distance(&b.values, &a.values));
    Comparison {
        equal: distance <= tolerance,
        max_pair_distance: distance,
    }
}

/// Roots with the worst normalized residual `|p(z)| / sum |a_i| |z|^i` seen
/// over the numerically solved factors.
#[derive(Clone, Debug)]
pub struct RootReport {
    pub spectrum: SpectrumMultiset,
    pub max_residual: f64,
    pub iterations: usize,
}

pub fn roots(p: &RatPolynomial) -> Result<SpectrumMultiset> {
    Ok(roots_with_report(p)?.spectrum)
}

pub fn roots_with_report(p: &RatPolynomial) -> Result<RootReport> {
    let degree = p.degree().unwrap_or(0);
    if degree == 0 {
        return Err(Error::OutOfRange("roots need a polynomial of degree >= 1".into()));
    }
    let mut values = Vec::with_capacity(degree);
    let mut rest = p.monic();

    let zeros = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    values.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zeros));
    rest = RatPolynomial::new(rest.coeffs()[zeros..].to_vec());
    for unit in [1i64, -1] {
        let linear = RatPolynomial::from_i64(&[-unit, 1]);
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&int(unit)).is_zero() {
            rest = rest.divexact(&linear)?;
            values.push(Complex64::new(unit as f64, 0.0));
        }
    }

    let mut max_residual: f64 = 0.0;
    let mut iterations = 0;
    for (factor, multiplicity) in rest.squarefree_decomposition() {
        let solved = solve_squarefree(&factor)?;
        max_residual = max_residual.max(solved.max_residual);
        iterations = iterations.max(solved.iterations);
        for z in solved.roots {
            values.extend(std::iter::repeat_n(z, multiplicity));
        }
    }
    debug_assert_eq!(values.len(), degree);
    Ok(RootReport {
        spectrum: SpectrumMultiset::new(values),
        max_residual,
        iterations,
    })
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

struct Solved {
    roots: Vec<Complex64>,
    max_residual: f64,
    iterations: usize,
}

fn solve_squarefree(f: &RatPolynomial) -> Result<Solved> {
    let coeffs = f.monic().to_f64_coeffs();
    let n = coeffs.len() - 1;
    if n == 1 {
        let root = -f.coeff(0) / f.coeff(1);
        return Ok(Solved {
            roots: vec![Complex64::new(rational_to_f64(&root), 0.0)],
            max_residual: 0.0,
            iterations: 0,
        });
    }
    let (mut roots, iterations) = aberth(&coeffs)?;
    snap_integer_roots(f, &mut roots);
    let max_residual = roots
        .iter()
        .map(|&z| normalized_residual(&coeffs, z))
        .fold(0.0, f64::max);
    Ok(Solved {
        roots,
        max_residual,
        iterations,
    })
}

fn rational_to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Real roots within `1e-6` of an integer are replaced by that integer when
/// it is an exact root.
fn snap_integer_roots(f: &RatPolynomial, roots: &mut [Complex64]) {
    for z in roots.iter_mut() {
        let nearest = z.re.round();
        if z.im.abs() < 1e-6 && (z.re - nearest).abs() < 1e-6 && nearest.abs() < 1e15
            && f.eval(&int(nearest as i64)).is_zero() {
                *z = Complex64::new(nearest, 0.0);
            }
    }
}

fn normalized_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale: f64 = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * r + c.abs());
    let value = coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c);
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

/// Newton correction `p(z) / p'(z)`, evaluated through the reversed
/// polynomial outside the unit disk to avoid overflow.
fn newton_step(coeffs: &[f64], z: Complex64) -> Complex64 {
    let n = coeffs.len() - 1;
    if z.norm() <= 1.0 {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        p / dp
    } else {
        // p(z) = z^n q(y), y = 1/z, q(y) = sum a_i y^(n-i).
        let y = z.inv();
        let mut q = Complex64::zero();
        let mut dq = Complex64::zero();
        for &c in coeffs.iter() {
            dq = dq * y + q;
            q = q * y + c;
        }
        if q.is_zero() {
            return Complex64::zero();
        }
        // p'(z) / p(z) = (n - y q'(y) / q(y)) / z
        z / (Complex64::new(n as f64, 0.0) - y * dq / q)
    }
}

/// Aberth-Ehrlich simultaneous iteration for a monic square-free polynomial
/// given by ascending `f64` coefficients.
fn aberth(coeffs: &[f64]) -> Result<(Vec<Complex64>, usize)> {
    let n = coeffs.len() - 1;
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    let mut converged = vec![false; n];
    let mut max_step = f64::INFINITY;
    for iteration in 1..=MAX_ITERATIONS {
        max_step = 0.0;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let w = newton_step(coeffs, z[i]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = w / (Complex64::new(1.0, 0.0) - w * repulsion);
            if step.is_finite() {
                z[i] -= step;
            }
            let size = w.norm();
            max_step = max_step.max(size);
            if size < STEP_TOLERANCE * z[i].norm().max(1.0) {
                converged[i] = true;
            }
        }
        if converged.iter().all(|&c| c) {
            // One Newton polish per root.
            for zi in z.iter_mut() {
                let w = newton_step(coeffs, *zi);
                if w.is_finite() {
                    *zi -= w;
                }
            }
            return Ok((z, iteration));
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        max_step,
    })
}

/// `{λ_T ± i sqrt(1 - λ_T^2)}` over the eigenvalues of `T`, plus `m - n`
/// copies each of `+1` and `-1`.
pub fn map_t_spectrum(t_spectrum: &[f64], m: usize, n: usize, tolerance: f64) -> Result<SpectrumMultiset> {
    if m < n {
        return Err(Error::Hypothesis(format!("needs m >= n, got m = {m}, n = {n}")));
    }
    let mut values = Vec::with_capacity(2 * m);
    for &lambda in t_spectrum {
        if lambda.abs() > 1.0 + tolerance {
            return Err(Error::OutOfRange(format!("eigenvalue {lambda} of T outside [-1, 1]")));
        }
        let lambda = lambda.clamp(-1.0, 1.0);
        let im = (1.0 - lambda * lambda).sqrt();
        values.push(Complex64::new(lambda, im));
        values.push(Complex64::new(lambda, -im));
    }
    push_padding(&mut values, m - n);
    Ok(SpectrumMultiset::new(values).with_tolerance(tolerance))
}

/// Roots of `λ^2 - λ_A λ + (k - 1)` over the adjacency eigenvalues of a
/// `k`-regular graph, plus `m - n` copies each of `+1` and `-1`.
pub fn map_a_spectrum(a_spectrum: &[f64], k: usize, m: usize, n: usize, tolerance: f64) -> Result<SpectrumMultiset> {
    if k < 2 {
        return Err(Error::Hypothesis(format!("degree {k} is below 2")));
    }
    if m < n {
        return Err(Error::Hypothesis(format!("needs m >= n, got m = {m}, n = {n}")));
    }
    let mut values = Vec::with_capacity(2 * m);
    for &lambda in a_spectrum {
        let half = lambda / 2.0;
        let radicand = (k - 1) as f64 - half * half;
        if radicand >= 0.0 {
            let im = radicand.sqrt();
            values.push(Complex64::new(half, im));
            values.push(Complex64::new(half, -im));
        } else {
            let re = (-radicand).sqrt();
            values.push(Complex64::new(half + re, 0.0));
            values.push(Complex64::new(half - re, 0.0));
        }
    }
    push_padding(&mut values, m - n);
    Ok(SpectrumMultiset::new(values).with_tolerance(tolerance))
}

fn push_padding(values: &mut Vec<Complex64>, count: usize) {
    for _ in 0..count {
        values.push(Complex64::new(1.0, 0.0));
        values.push(Complex64::new(-1.0, 0.0));
    }
}
