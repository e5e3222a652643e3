//! Finite undirected multigraphs, their arc sets and vertex-level matrices.

mod arcs;
pub mod families;
mod graph6;

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

pub use arcs::ArcSet;
pub use graph6::{encode_graph6, parse_graph6};

use crate::algebra::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// A finite loopless multigraph on vertices `0..n`.
///
/// Edge order is significant: it fixes the arc order of [`ArcSet`] and hence
/// the row/column order of every arc-indexed matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub connected: bool,
    pub simple: bool,
    pub md2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeInfo {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    /// `Some(k)` iff every vertex has degree `k`.
    pub regular_degree: Option<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        Ok(Self { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree_info(&self) -> DegreeInfo {
        let mut degrees = vec![0; self.n];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let regular_degree = degrees
            .iter()
            .all(|&d| d == degrees[0])
            .then_some(degrees[0]);
        DegreeInfo {
            degrees,
            min_degree,
            regular_degree,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            connected: self.is_connected(),
            simple: self.is_simple(),
            md2: self.degree_info().min_degree >= 2,
        }
    }

    pub fn arcs(&self) -> ArcSet {
        ArcSet::new(self)
    }

    /// `A[u][v]` counts the edges joining `u` and `v`.
    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let mut counts = vec![0i64; self.n * self.n];
        for &(u, v) in &self.edges {
            counts[u * self.n + v] += 1;
            counts[v * self.n + u] += 1;
        }
        RationalMatrix::from_fn(self.n, self.n, |i, j| {
            Rational::from_integer(BigInt::from(counts[i * self.n + j]))
        })
    }

    pub fn degree_matrix(&self) -> RationalMatrix {
        let degrees: Vec<Rational> = self
            .degree_info()
            .degrees
            .iter()
            .map(|&d| Rational::from_integer(BigInt::from(d)))
            .collect();
        RationalMatrix::diagonal(&degrees)
    }

    /// Cycle-space dimension `m - n + 1` of a connected graph.
    pub fn betti(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.n)
    }

    /// Image of the graph under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Self::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        )
    }

    /// Errors unless the graph is connected without isolated vertices.
    pub(crate) fn require_connected(&self) -> Result<()> {
        if let Some(v) = self.degree_info().degrees.iter().position(Zero::is_zero) {
            return Err(Error::IsolatedVertex(v));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_vertex(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_error(line, format!("expected a nonnegative integer, got {token:?}")))
}

/// Parses `u v` lines with 0-based vertices. Blank lines and `#` comments are
/// skipped; the first content line may be `n <count>` to fix the vertex count.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut first = true;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if first && tokens.first() == Some(&"n") {
            first = false;
            let [_, count] = tokens[..] else {
                return Err(parse_error(line_no, "expected `n <count>`"));
            };
            declared = Some(parse_vertex(count, line_no)?);
            continue;
        }
        first = false;
        let [a, b] = tokens[..] else {
            return Err(parse_error(line_no, format!("expected two vertices, got {line:?}")));
        };
        let (u, v) = (parse_vertex(a, line_no)?, parse_vertex(b, line_no)?);
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if let Some(n) = declared {
            if let Some(&w) = [u, v].iter().find(|&&w| w >= n) {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        edges.push((u, v));
    }
    let n = match declared {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or(Error::EmptyGraph)?,
    };
    Graph::new(n, edges)
}

/// Inverse of [`parse_edge_list`]; always writes the `n` header.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n);
    for &(u, v) in &g.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
