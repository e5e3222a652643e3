use super::Graph;

/// The symmetric arc set of a graph.
///
/// Arc `i < m` is edge `i` in its stored orientation `(u_i, v_i)`; arc
/// `i + m` is its inverse `(v_i, u_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSet {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl ArcSet {
    pub fn new(g: &Graph) -> Self {
        let forward = g.edges().iter().copied();
        let backward = g.edges().iter().map(|&(u, v)| (v, u));
        Self {
            n: g.vertex_count(),
            arcs: forward.chain(backward).collect(),
        }
    }

    /// Number of arcs, `2m`.
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn origin(&self, a: usize) -> usize {
        self.arcs[a].0
    }

    pub fn terminus(&self, a: usize) -> usize {
        self.arcs[a].1
    }

    pub fn inverse(&self, a: usize) -> usize {
        let m = self.edge_count();
        (a + m) % (2 * m)
    }

    /// Arcs leaving each vertex, in arc order.
    pub fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for (a, &(u, _)) in self.arcs.iter().enumerate() {
            out[u].push(a);
        }
        out
    }

    /// Non-backtracking successors of `a`: arcs `f` with `o(f) = t(a)` and
    /// `f != a^{-1}`.
    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let t = self.terminus(a);
        let inv = self.inverse(a);
        (0..self.len()).filter(move |&f| f != inv && self.origin(f) == t)
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::families;

    #[test]
    fn k2_arcs() {
        let arcs = families::complete(2).arcs();
        assert_eq!(arcs.arcs(), &[(0, 1), (1, 0)]);
        assert_eq!(arcs.inverse(0), 1);
        assert_eq!(arcs.inverse(1), 0);
    }

    #[test]
    fn c3_inverse_offsets() {
        let arcs = families::cycle(3).arcs();
        assert_eq!(arcs.len(), 6);
        for i in 0..3 {
            assert_eq!(arcs.inverse(i), i + 3);
        }
    }

    #[test]
    fn p3_origins_and_termini() {
        let arcs = families::path(3).arcs();
        let origins: Vec<usize> = (0..4).map(|a| arcs.origin(a)).collect();
        let termini: Vec<usize> = (0..4).map(|a| arcs.terminus(a)).collect();
        assert_eq!(origins, vec![0, 1, 1, 2]);
        assert_eq!(termini, vec![1, 2, 0, 1]);
    }

    #[test]
    fn inverse_is_fixed_point_free_involution() {
        let arcs = families::petersen().arcs();
        for a in 0..arcs.len() {
            let b = arcs.inverse(a);
            assert_ne!(a, b);
            assert_eq!(arcs.inverse(b), a);
            assert_eq!(arcs.origin(b), arcs.terminus(a));
            assert_eq!(arcs.terminus(b), arcs.origin(a));
        }
    }
}
