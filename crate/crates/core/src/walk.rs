//! Arc-indexed operators of the Grover-coined discrete-time quantum walk and
//! the vertex-level matrices they reduce to.
//!
//! All arc-indexed matrices use the order of [`ArcSet`]: edges first, then
//! their inverses.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::graph::{ArcSet, Graph};

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The `2m x 2m` transition matrix `U` of the walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix(RationalMatrix);

impl TransitionMatrix {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.0
    }
}

/// `U[e][f] = 2/d(t(f)) - [f = e^-1]` whenever `t(f) = o(e)`, else 0.
pub fn transition_matrix(g: &Graph, arcs: &ArcSet) -> Result<TransitionMatrix> {
    g.require_connected()?;
    let degrees = g.degree_info().degrees;
    let two = int(2);
    let u = RationalMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        if arcs.terminus(f) != arcs.origin(e) {
            return Rational::zero();
        }
        let coin = &two / int(degrees[arcs.terminus(f)]);
        if f == arcs.inverse(e) {
            coin - Rational::one()
        } else {
            coin
        }
    });
    Ok(TransitionMatrix(u))
}

/// Elementwise indicator of strictly positive entries.
pub fn positive_support(m: &RationalMatrix) -> RationalMatrix {
    m.positive_support()
}

/// Positive support of `m^k` for `k` in `1..=3`, from exact products.
pub fn power_support(m: &RationalMatrix, k: u32) -> Result<RationalMatrix> {
    if !(1..=3).contains(&k) {
        return Err(Error::OutOfRange(format!("power {k} not in 1..=3")));
    }
    let mut power = m.clone();
    for _ in 1..k {
        power = power.matmul(m)?;
    }
    Ok(power.positive_support())
}

/// `B[e][f] = [t(e) = o(f)]` and `J0[e][f] = [f = e^-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMatrixPair {
    pub b: RationalMatrix,
    pub j0: RationalMatrix,
}

impl EdgeMatrixPair {
    /// The non-backtracking edge matrix `B - J0`.
    pub fn edge_matrix(&self) -> RationalMatrix {
        self.b.sub(&self.j0).expect("B and J0 share a shape")
    }
}

pub fn edge_matrices(arcs: &ArcSet) -> EdgeMatrixPair {
    let size = arcs.len();
    let indicator = |cond: bool| if cond { Rational::one() } else { Rational::zero() };
    EdgeMatrixPair {
        b: RationalMatrix::from_fn(size, size, |e, f| {
            indicator(arcs.terminus(e) == arcs.origin(f))
        }),
        j0: RationalMatrix::from_fn(size, size, |e, f| indicator(f == arcs.inverse(e))),
    }
}

/// Checks `B - J0 = (U^T)^+` on a simple connected graph of minimum degree
/// at least 2; other graphs are rejected.
pub fn verify_edge_matrix_support(g: &Graph) -> Result<bool> {
    let report = g.validate();
    if !report.connected {
        return Err(Error::Disconnected);
    }
    if !report.simple {
        return Err(Error::Hypothesis("graph is not simple".into()));
    }
    if !report.md2 {
        return Err(Error::Hypothesis("minimum degree is below 2".into()));
    }
    let arcs = g.arcs();
    let u = transition_matrix(g, &arcs)?;
    Ok(edge_matrices(&arcs).edge_matrix() == u.matrix().transpose().positive_support())
}

/// Vertex-indexed weights `W[i][j]`, nonzero only where `(i, j)` is an arc.
///
/// Parallel arcs between the same ordered pair share the weight `W[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMatrix {
    w: RationalMatrix,
}

impl WeightedMatrix {
    pub fn new(g: &Graph, w: RationalMatrix) -> Result<Self> {
        let n = g.vertex_count();
        if w.rows() != n || w.cols() != n {
            return Err(Error::DimensionMismatch {
                left: (n, n),
                right: (w.rows(), w.cols()),
            });
        }
        let a = g.adjacency_matrix();
        for i in 0..n {
            for j in 0..n {
                if a.get(i, j).is_zero() && !w.get(i, j).is_zero() {
                    return Err(Error::WeightSupport { row: i, col: j });
                }
            }
        }
        Ok(Self { w })
    }

    /// Weight 1 on every arc.
    pub fn unit(g: &Graph) -> Self {
        Self {
            w: g.adjacency_matrix().positive_support(),
        }
    }

    /// `W_d[u][v] = 2/d(u)` on arcs.
    pub fn degree_scaled(g: &Graph) -> Self {
        let degrees = g.degree_info().degrees;
        let support = g.adjacency_matrix().positive_support();
        Self {
            w: RationalMatrix::from_fn(g.vertex_count(), g.vertex_count(), |i, j| {
                if support.get(i, j).is_zero() {
                    Rational::zero()
                } else {
                    int(2) / int(degrees[i])
                }
            }),
        }
    }

    /// Nonzero weights `p/q` with `1 <= |p| <= 5` and `1 <= q <= 4`, drawn
    /// independently for each ordered adjacent pair.
    pub fn random(g: &Graph, rng: &mut impl Rng) -> Self {
        let support = g.adjacency_matrix().positive_support();
        let n = g.vertex_count();
        Self {
            w: RationalMatrix::from_fn(n, n, |i, j| {
                if support.get(i, j).is_zero() {
                    return Rational::zero();
                }
                let mut num: i64 = rng.gen_range(1..=5);
                if rng.gen_bool(0.5) {
                    num = -num;
                }
                Rational::new(num.into(), rng.gen_range(1i64..=4).into())
            }),
        }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.w
    }

    /// `w(e) = W[o(e)][t(e)]`.
    pub fn arc_weight(&self, arcs: &ArcSet, a: usize) -> &Rational {
        self.w.get(arcs.origin(a), arcs.terminus(a))
    }

    /// Sum of arc weights from `i` to `j`: `W[i][j]` times the edge
    /// multiplicity. Equals `W` on simple graphs.
    pub fn arc_summed(&self, g: &Graph) -> RationalMatrix {
        let a = g.adjacency_matrix();
        let n = g.vertex_count();
        RationalMatrix::from_fn(n, n, |i, j| self.w.get(i, j) * a.get(i, j))
    }

    /// Diagonal `D_w` with `D_w[i][i]` the total weight of arcs leaving `i`.
    pub fn out_weight_diagonal(&self, g: &Graph) -> RationalMatrix {
        RationalMatrix::diagonal(&self.arc_summed(g).row_sums())
    }
}

/// `B_w[e][f] = w(f)` when `t(e) = o(f)`, else 0.
pub fn weighted_edge_matrix(arcs: &ArcSet, w: &WeightedMatrix) -> RationalMatrix {
    RationalMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        if arcs.terminus(e) == arcs.origin(f) {
            w.arc_weight(arcs, f).clone()
        } else {
            Rational::zero()
        }
    })
}

/// Random-walk matrix `T[u][v] = (#edges uv) / d(u)`, read off the arc set.
pub fn t_matrix(g: &Graph) -> Result<RationalMatrix> {
    g.require_connected()?;
    let n = g.vertex_count();
    let degrees = g.degree_info().degrees;
    let mut t = RationalMatrix::zeros(n, n);
    for &(u, v) in g.arcs().arcs() {
        let entry = t.get(u, v) + Rational::new(BigInt::one(), BigInt::from(degrees[u]));
        t.set(u, v, entry);
    }
    Ok(t)
}

/// `T = D^-1 A`, computed as a matrix product.
pub fn t_matrix_via_degrees(g: &Graph) -> Result<RationalMatrix> {
    g.require_connected()?;
    let d_inv = g.degree_matrix().map(|x| {
        if x.is_zero() {
            Rational::zero()
        } else {
            x.recip()
        }
    });
    d_inv.matmul(&g.adjacency_matrix())
}
