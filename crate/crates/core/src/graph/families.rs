//! Named graph families used by the built-in corpus and the tests.

use super::{parse_graph6, Graph};

/// Shrikhande graph, SRG(16,6,2,2): Cayley graph of Z4 x Z4 with connection
/// set {±(1,0), ±(0,1), ±(1,1)}.
pub const SHRIKHANDE_G6: &str = "OlfJHsHBGK_\\oHWKeBK_\\";

/// 4x4 rook's graph K4 □ K4, SRG(16,6,2,2).
pub const ROOK_4X4_G6: &str = "O~`HW}GPHDaNaGPCcPWaN";

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("family members are valid graphs")
}

pub fn complete(n: usize) -> Graph {
    let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    build(n, edges)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    build(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect())
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    build(a + b, edges)
}

/// Outer 5-cycle, inner pentagram, and spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// Triangle with the edge {0,1} doubled.
pub fn doubled_triangle() -> Graph {
    build(3, vec![(0, 1), (1, 2), (2, 0), (0, 1)])
}

pub fn shrikhande() -> Graph {
    parse_graph6(SHRIKHANDE_G6).expect("embedded graph6 is valid")
}

pub fn rook_4x4() -> Graph {
    parse_graph6(ROOK_4X4_G6).expect("embedded graph6 is valid")
}
