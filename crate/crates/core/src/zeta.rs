//! Ihara zeta and second weighted zeta reciprocals in their edge-matrix and
//! vertex-matrix determinant forms, plus an enumeration of prime reduced
//! cycles that expands the Euler product directly.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{polymat_det, PolyMatrix, RatPolynomial, Rational, RationalFunction, RationalMatrix};
use crate::error::{Error, Result};
use crate::graph::{ArcSet, Graph};
use crate::walk::{edge_matrices, weighted_edge_matrix, WeightedMatrix};

/// Largest arc count the cycle enumeration accepts.
pub const ORACLE_MAX_ARCS: usize = 20;
/// Largest truncation order the cycle enumeration accepts.
pub const ORACLE_MAX_ORDER: usize = 12;
pub const DEFAULT_ORDER: usize = 8;

/// Formal power series truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_poly(p: &RatPolynomial, order: usize) -> Self {
        Self {
            coeffs: (0..=order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for k in 1..=self.order() {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    /// Logarithm of a series with constant term 1, as the integral of `f'/f`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::OutOfRange("log needs constant term 1".into()));
        }
        let order = self.order();
        let derivative = Self::from_coeffs(
            (1..=order)
                .map(|k| &self.coeffs[k] * Rational::from_integer(BigInt::from(k)))
                .collect(),
            order,
        );
        let quotient = derivative.mul(&self.inverse()?);
        let mut out = Self::zero(order);
        for k in 1..=order {
            out.coeffs[k] = &quotient.coeffs[k - 1] / Rational::from_integer(BigInt::from(k));
        }
        Ok(out)
    }
}

/// `det(I_2m - t (B - J0))`.
pub fn ihara_reciprocal_edge_form(arcs: &ArcSet) -> Result<RatPolynomial> {
    let edge = edge_matrices(arcs).edge_matrix();
    edge_form(&edge)
}

fn edge_form(edge: &RationalMatrix) -> Result<RatPolynomial> {
    let size = edge.rows();
    let p = PolyMatrix::affine(&RationalMatrix::identity(size), &edge.scale(&-Rational::one()))?;
    polymat_det(&p, size)
}

fn one_minus_t_squared() -> RatPolynomial {
    RatPolynomial::from_i64(&[1, 0, -1])
}

/// `(1 - t^2)^exponent * det(I_n - t X + t^2 (Y - I_n))`.
fn bass_form(exponent: i64, x: &RationalMatrix, y: &RationalMatrix) -> Result<RationalFunction> {
    let n = x.rows();
    let identity = RationalMatrix::identity(n);
    let p = PolyMatrix::quadratic(&identity, &x.scale(&-Rational::one()), &y.sub(&identity)?)?;
    let det = polymat_det(&p, 2 * n)?;
    RationalFunction::power(&one_minus_t_squared(), exponent)?.mul(&RationalFunction::from_poly(det))
}

/// `(1 - t^2)^(r - 1) det(I - t A + t^2 (D - I))` with `r` the Betti number;
/// trees give a negative exponent, hence the rational function.
pub fn ihara_reciprocal_bass_form(g: &Graph) -> Result<RationalFunction> {
    let r = g.betti()? as i64;
    bass_form(r - 1, &g.adjacency_matrix(), &g.degree_matrix())
}

/// Both determinant forms of the second weighted zeta reciprocal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedZeta {
    pub edge_form: RatPolynomial,
    pub bass_form: RationalFunction,
}

impl WeightedZeta {
    pub fn forms_agree(&self) -> bool {
        self.bass_form.as_polynomial() == Some(&self.edge_form)
    }
}

/// `det(I_2m - t (B_w - J0))` and `(1 - t^2)^(m-n) det(I_n - t W + t^2 (D_w - I_n))`.
///
/// On multigraphs the vertex form uses the arc-summed weights, so that unit
/// weights reproduce the adjacency matrix with multiplicities.
pub fn weighted_zeta_reciprocal(g: &Graph, w: &WeightedMatrix) -> Result<WeightedZeta> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let arcs = g.arcs();
    let bw = weighted_edge_matrix(&arcs, w);
    let edge = bw.sub(&edge_matrices(&arcs).j0)?;
    let exponent = g.edge_count() as i64 - g.vertex_count() as i64;
    Ok(WeightedZeta {
        edge_form: edge_form(&edge)?,
        bass_form: bass_form(exponent, &w.arc_summed(g), &w.out_weight_diagonal(g))?,
    })
}

/// An equivalence class of closed reduced cycles, stored as the least
/// rotation of its arc sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleClass {
    pub representative: Vec<usize>,
    pub prime: bool,
}

impl CycleClass {
    pub fn from_cycle(arcs: &[usize]) -> Self {
        let representative = least_rotation(arcs);
        let prime = minimal_period(&representative) == representative.len();
        Self {
            representative,
            prime,
        }
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    /// Class of the reversed cycle `(e_n^-1, ..., e_1^-1)`.
    pub fn inverse(&self, arcs: &ArcSet) -> Self {
        let reversed: Vec<usize> = self
            .representative
            .iter()
            .rev()
            .map(|&a| arcs.inverse(a))
            .collect();
        Self::from_cycle(&reversed)
    }

    /// Checks that consecutive arcs chain and never backtrack, including the
    /// wrap-around pair.
    pub fn is_reduced_cycle(&self, arcs: &ArcSet) -> bool {
        let seq = &self.representative;
        let n = seq.len();
        n > 0
            && (0..n).all(|i| {
                let (a, b) = (seq[i], seq[(i + 1) % n]);
                arcs.terminus(a) == arcs.origin(b) && b != arcs.inverse(a)
            })
    }
}

fn least_rotation(seq: &[usize]) -> Vec<usize> {
    (0..seq.len().max(1))
        .map(|k| {
            let mut r = seq[k.min(seq.len())..].to_vec();
            r.extend_from_slice(&seq[..k.min(seq.len())]);
            r
        })
        .min()
        .unwrap_or_default()
}

fn minimal_period(seq: &[usize]) -> usize {
    let n = seq.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| seq[i] == seq[(i + p) % n]))
        .unwrap_or(n)
}

/// Product of the arc weights along the class representative.
pub fn cycle_norm(c: &CycleClass, arcs: &ArcSet, w: &WeightedMatrix) -> Rational {
    c.representative
        .iter()
        .fold(Rational::one(), |acc, &a| acc * w.arc_weight(arcs, a))
}

/// Every closed reduced cycle of length `1..=order`, as classes and as raw
/// rooted sequences.
#[derive(Clone, Debug, Default)]
pub struct CycleEnumeration {
    /// All rotation classes, prime or not.
    pub classes: BTreeSet<CycleClass>,
    /// `walk_counts[k]` is the number of rooted closed reduced sequences of
    /// length `k`, i.e. `tr((B - J0)^k)`.
    pub walk_counts: Vec<u64>,
}

impl CycleEnumeration {
    pub fn prime_classes(&self) -> impl Iterator<Item = &CycleClass> {
        self.classes.iter().filter(|c| c.prime)
    }

    /// Per length: `(classes paired with a distinct inverse class,
    /// self-inverse classes)` among the prime classes.
    pub fn inverse_pairing(&self, arcs: &ArcSet) -> BTreeMap<usize, (usize, usize)> {
        let primes: BTreeSet<&CycleClass> = self.prime_classes().collect();
        let mut out: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for c in &primes {
            let inv = c.inverse(arcs);
            let entry = out.entry(c.len()).or_default();
            if inv == **c {
                entry.1 += 1;
            } else {
                debug_assert!(primes.contains(&inv));
                entry.0 += 1;
            }
        }
        out
    }
}

fn check_oracle_size(arcs: &ArcSet, order: usize) -> Result<()> {
    if arcs.len() > ORACLE_MAX_ARCS {
        return Err(Error::SizeGuard(format!(
            "{} arcs exceeds the cycle enumeration limit of {ORACLE_MAX_ARCS}",
            arcs.len()
        )));
    }
    if order > ORACLE_MAX_ORDER {
        return Err(Error::SizeGuard(format!(
            "order {order} exceeds the cycle enumeration limit of {ORACLE_MAX_ORDER}"
        )));
    }
    Ok(())
}

/// Depth-first enumeration of closed non-backtracking arc sequences.
pub fn enumerate_reduced_cycles(arcs: &ArcSet, order: usize) -> Result<CycleEnumeration> {
    check_oracle_size(arcs, order)?;
    let successors: Vec<Vec<usize>> = (0..arcs.len()).map(|a| arcs.successors(a).collect()).collect();
    let mut result = CycleEnumeration {
        classes: BTreeSet::new(),
        walk_counts: vec![0; order + 1],
    };
    let mut path = Vec::with_capacity(order);
    for start in 0..arcs.len() {
        path.clear();
        path.push(start);
        extend(&successors, &mut path, order, &mut result);
    }
    Ok(result)
}

fn extend(successors: &[Vec<usize>], path: &mut Vec<usize>, order: usize, out: &mut CycleEnumeration) {
    let last = *path.last().expect("path is never empty");
    let start = path[0];
    if successors[last].contains(&start) {
        out.walk_counts[path.len()] += 1;
        out.classes.insert(CycleClass::from_cycle(path));
    }
    if path.len() == order {
        return;
    }
    for &next in &successors[last] {
        path.push(next);
        extend(successors, path, order, out);
        path.pop();
    }
}

/// Truncation of `prod_[C] (1 - t^|C|)^-1` over prime reduced cycle classes.
pub fn euler_product_oracle(arcs: &ArcSet, order: usize) -> Result<PowerSeries> {
    let cycles = enumerate_reduced_cycles(arcs, order)?;
    Ok(euler_product(cycles.prime_classes().map(CycleClass::len), order))
}

fn euler_product(lengths: impl Iterator<Item = usize>, order: usize) -> PowerSeries {
    lengths.fold(PowerSeries::one(order), |acc, len| {
        let mut geometric = PowerSeries::zero(order);
        for k in (0..=order).step_by(len) {
            geometric.coeffs[k] = Rational::one();
        }
        acc.mul(&geometric)
    })
}

/// `tr(M^k)` for `k = 0..=order`.
pub fn power_traces(m: &RationalMatrix, order: usize) -> Result<Vec<Rational>> {
    let mut traces = vec![Rational::from_integer(BigInt::from(m.rows()))];
    let mut power = RationalMatrix::identity(m.rows());
    for _ in 1..=order {
        power = power.matmul(m)?;
        traces.push((0..m.rows()).fold(Rational::zero(), |acc, i| acc + power.get(i, i)));
    }
    Ok(traces)
}
