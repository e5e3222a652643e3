use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{families, Graph};

pub const DEFAULT_SEED: u64 = 42;

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusTags {
    pub regular_k: Option<usize>,
    pub simple: bool,
    pub md2: bool,
    pub tree: bool,
    pub srg_params: Option<SrgParams>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
    pub tags: CorpusTags,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        let report = graph.validate();
        let regular_k = graph.degree_info().regular_degree;
        let tags = CorpusTags {
            regular_k,
            simple: report.simple,
            md2: report.md2,
            tree: report.connected && graph.edge_count() + 1 == graph.vertex_count(),
            srg_params: srg_params(&graph),
        };
        Self {
            name: name.into(),
            graph,
            tags,
        }
    }
}

/// Parameters of a connected, simple, regular graph that is neither complete
/// nor edgeless and has constant common-neighbour counts.
fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.vertex_count();
    let k = g.degree_info().regular_degree?;
    if !g.is_simple() || !g.is_connected() || k == 0 || k + 1 == n {
        return None;
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = (0..n).filter(|&w| adjacent[u * n + w] && adjacent[v * n + w]).count();
            let slot = if adjacent[u * n + v] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams {
        n,
        k,
        lambda: lambda?,
        mu: mu?,
    })
}

/// Connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability 0.3, vertices shuffled.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u * n + v] = true;
        edges.push((labels[u], labels[v]));
    }
    for v in 1..n {
        for u in 0..v {
            if !present[u * n + v] && rng.gen_bool(0.3) {
                edges.push((labels[u], labels[v]));
            }
        }
    }
    Graph::new(n, edges).expect("labels are in range and distinct")
}

/// Complete graphs K2..K7, cycles C3..C12, paths P3..P6, K2,3, K3,3,
/// Petersen, the doubled-edge triangle, the Shrikhande and 4x4 rook's graphs,
/// and 20 random connected graphs on 3..=8 vertices drawn from `seed`.
pub fn builtin_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut corpus = Vec::new();
    for n in 2..=7 {
        corpus.push(CorpusEntry::new(format!("K{n}"), families::complete(n)));
    }
    for n in 3..=12 {
        corpus.push(CorpusEntry::new(format!("C{n}"), families::cycle(n)));
    }
    for n in 3..=6 {
        corpus.push(CorpusEntry::new(format!("P{n}"), families::path(n)));
    }
    corpus.push(CorpusEntry::new("K2,3", families::complete_bipartite(2, 3)));
    corpus.push(CorpusEntry::new("K3,3", families::complete_bipartite(3, 3)));
    corpus.push(CorpusEntry::new("Petersen", families::petersen()));
    corpus.push(CorpusEntry::new("doubled-triangle", families::doubled_triangle()));
    corpus.push(CorpusEntry::new("Shrikhande", families::shrikhande()));
    corpus.push(CorpusEntry::new("Rook4x4", families::rook_4x4()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..20 {
        let n = rng.gen_range(3..=8);
        corpus.push(CorpusEntry::new(format!("random-{i:02}"), random_connected_graph(&mut rng, n)));
    }
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let corpus = builtin_corpus(DEFAULT_SEED);
        assert_eq!(corpus.len(), 46);
        assert!(corpus.iter().all(|e| e.graph.is_connected()));
        assert!(corpus.iter().all(|e| 2 * e.graph.edge_count() <= 96));
        let names: std::collections::HashSet<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), corpus.len());
    }

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(builtin_corpus(7), builtin_corpus(7));
        assert_ne!(builtin_corpus(7), builtin_corpus(8));
    }

    #[test]
    fn tags() {
        let p4 = CorpusEntry::new("P4", families::path(4));
        assert!(p4.tags.tree && !p4.tags.md2 && p4.tags.regular_k.is_none());
        let pet = CorpusEntry::new("Petersen", families::petersen());
        assert_eq!(pet.tags.srg_params, Some(SrgParams { n: 10, k: 3, lambda: 0, mu: 1 }));
        let shr = CorpusEntry::new("S", families::shrikhande());
        let rook = CorpusEntry::new("R", families::rook_4x4());
        assert_eq!(shr.tags.srg_params, Some(SrgParams { n: 16, k: 6, lambda: 2, mu: 2 }));
        assert_eq!(shr.tags.srg_params, rook.tags.srg_params);
        assert_eq!(CorpusEntry::new("K4", families::complete(4)).tags.srg_params, None);
        assert_eq!(CorpusEntry::new("C6", families::cycle(6)).tags.srg_params, None);
        let doubled = CorpusEntry::new("d", families::doubled_triangle());
        assert!(!doubled.tags.simple && doubled.tags.md2);
    }
}
