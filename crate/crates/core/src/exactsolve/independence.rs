//! Maximum independent sets of hypergraphs (vertex sets containing no
//! hyperedge).

use super::graph::{max_clique, BitGraph};
use crate::bits::{self, Bits};

/// Maximum independent set given hyperedge masks over `n` vertices.
pub fn max_independent_set(n: usize, edges: &[Bits]) -> Vec<usize> {
    if edges.iter().all(|&e| bits::count(e) <= 2) {
        return graph_mis(n, edges);
    }
    let mut by_vertex: Vec<Vec<Bits>> = vec![Vec::new(); n];
    for &e in edges {
        for v in bits::iter(e) {
            by_vertex[v].push(e);
        }
    }
    let mut st = HyperMis {
        by_vertex,
        best: 0,
        best_size: 0,
    };
    // Singleton hyperedges exclude their vertex outright.
    let mut cand = bits::full(n);
    for &e in edges {
        if bits::count(e) == 1 {
            cand &= !e;
        }
    }
    st.search(0, 0, cand);
    bits::to_vec(st.best)
}

/// Graphs (plus singleton hyperedges) go through max clique on the
/// complement of the graph induced by the unblocked vertices.
fn graph_mis(n: usize, edges: &[Bits]) -> Vec<usize> {
    let mut blocked: Bits = 0;
    for &e in edges {
        if bits::count(e) == 1 {
            blocked |= e;
        }
    }
    let alive: Vec<usize> = (0..n).filter(|&v| !bits::contains(blocked, v)).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in alive.iter().enumerate() {
        index[v] = i;
    }
    let mut g = BitGraph::new(alive.len()).expect("caller checked width");
    for &e in edges {
        if bits::count(e) == 2 {
            let u = e.trailing_zeros() as usize;
            let v = 127 - e.leading_zeros() as usize;
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v]);
            }
        }
    }
    max_clique(&g.complement()).into_iter().map(|i| alive[i]).collect()
}

struct HyperMis {
    by_vertex: Vec<Vec<Bits>>,
    best: Bits,
    best_size: usize,
}

impl HyperMis {
    fn search(&mut self, set: Bits, size: usize, cand: Bits) {
        if cand == 0 {
            if size > self.best_size {
                self.best = set;
                self.best_size = size;
            }
            return;
        }
        if size + bits::count(cand) <= self.best_size {
            return;
        }
        // Branch on the candidate in the most hyperedges.
        let v = bits::iter(cand)
            .max_by_key(|&v| (self.by_vertex[v].len(), std::cmp::Reverse(v)))
            .expect("cand nonempty");
        let rest = cand & !bits::bit(v);
        // Include v: any hyperedge through v left with a single outside
        // vertex blocks that vertex.
        let with = set | bits::bit(v);
        let mut next = rest;
        for &e in &self.by_vertex[v] {
            let missing = e & !with;
            if bits::count(missing) == 1 {
                next &= !missing;
            }
        }
        self.search(with, size + 1, next);
        self.search(set, size, rest);
    }
}
