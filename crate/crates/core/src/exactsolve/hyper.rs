//! Proper coloring of general hypergraphs (no monochromatic hyperedge).

use super::graph::SearchOutcome;
use crate::hyperstruct::Hypergraph;

/// Greedy first-fit in order of decreasing degree. Requires no singleton
/// hyperedges.
pub fn greedy_hyper_coloring(h: &Hypergraph) -> Vec<usize> {
    let n = h.n();
    let inc = h.incidence();
    let deg = h.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut color = vec![usize::MAX; n];
    for &v in &order {
        let mut c = 0;
        loop {
            let clash = inc[v].iter().any(|&e| {
                h.edge(e)
                    .iter()
                    .all(|&u| u == v || color[u] == c)
            });
            if !clash {
                break;
            }
            c += 1;
        }
        color[v] = c;
    }
    color
}

/// Backtracking `k`-coloring with forward checking: an edge whose assigned
/// members share one color forbids that color on its last free member.
pub fn k_color_hypergraph(
    h: &Hypergraph,
    k: usize,
    node_limit: Option<u64>,
    nodes: &mut u64,
) -> SearchOutcome<Vec<usize>> {
    let n = h.n();
    if n == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    if k == 0 || h.has_singleton_edge() {
        return SearchOutcome::Exhausted;
    }
    let m = h.num_edges();
    let mut st = HyperColor {
        h,
        k,
        inc: h.incidence(),
        deg: h.degrees(),
        color: vec![usize::MAX; n],
        assigned: vec![0; m],
        edge_color_count: vec![0; m * k],
        forbid: vec![0; n * k],
        forbid_mask: vec![0; n],
        nodes,
        node_limit,
    };
    match st.search(0, n) {
        Some(true) => SearchOutcome::Found(st.color),
        Some(false) => SearchOutcome::Exhausted,
        None => SearchOutcome::NodeLimit,
    }
}

struct HyperColor<'a> {
    h: &'a Hypergraph,
    k: usize,
    inc: Vec<Vec<usize>>,
    deg: Vec<usize>,
    color: Vec<usize>,
    assigned: Vec<usize>,
    edge_color_count: Vec<usize>,
    forbid: Vec<u32>,
    forbid_mask: Vec<u128>,
    nodes: &'a mut u64,
    node_limit: Option<u64>,
}

impl HyperColor<'_> {
    /// Assigns and reports whether some hyperedge became monochromatic.
    /// Forced exclusions are appended to `trail`.
    fn assign(&mut self, v: usize, c: usize, trail: &mut Vec<(usize, usize)>) -> bool {
        self.color[v] = c;
        let mut conflict = false;
        for i in 0..self.inc[v].len() {
            let e = self.inc[v][i];
            let size = self.h.edge(e).len();
            self.assigned[e] += 1;
            self.edge_color_count[e * self.k + c] += 1;
            let same = self.edge_color_count[e * self.k + c];
            if same == size {
                conflict = true;
            } else if same == size - 1 && self.assigned[e] == size - 1 {
                let u = *self
                    .h
                    .edge(e)
                    .iter()
                    .find(|&&u| self.color[u] == usize::MAX)
                    .expect("one member unassigned");
                self.forbid[u * self.k + c] += 1;
                if self.forbid[u * self.k + c] == 1 {
                    self.forbid_mask[u] |= 1u128 << c;
                }
                trail.push((u, c));
            }
        }
        conflict
    }

    fn unassign(&mut self, v: usize, c: usize, trail: &[(usize, usize)]) {
        for &(u, fc) in trail {
            self.forbid[u * self.k + fc] -= 1;
            if self.forbid[u * self.k + fc] == 0 {
                self.forbid_mask[u] &= !(1u128 << fc);
            }
        }
        for &e in &self.inc[v] {
            self.assigned[e] -= 1;
            self.edge_color_count[e * self.k + c] -= 1;
        }
        self.color[v] = usize::MAX;
    }

    fn search(&mut self, used: usize, remaining: usize) -> Option<bool> {
        if remaining == 0 {
            return Some(true);
        }
        *self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if *self.nodes > limit {
                return None;
            }
        }
        let mut v = usize::MAX;
        let mut key = (0u32, 0usize);
        for u in 0..self.h.n() {
            if self.color[u] != usize::MAX {
                continue;
            }
            let f = self.forbid_mask[u].count_ones();
            if f as usize >= self.k {
                return Some(false);
            }
            if v == usize::MAX || (f, self.deg[u]) > key {
                v = u;
                key = (f, self.deg[u]);
            }
        }
        let limit = (used + 1).min(self.k);
        let mut trail = Vec::new();
        for c in 0..limit {
            if self.forbid_mask[v] >> c & 1 == 1 {
                continue;
            }
            trail.clear();
            let conflict = self.assign(v, c, &mut trail);
            if !conflict {
                match self.search(used.max(c + 1), remaining - 1) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.unassign(v, c, &trail);
        }
        Some(false)
    }
}
