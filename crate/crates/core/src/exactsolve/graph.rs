//! Bitset graphs, maximum clique and exact vertex coloring.

use crate::bits::{self, Bits, MAX_BITS};
use crate::error::{Error, Result};
use crate::hyperstruct::Hypergraph;

/// Simple undirected graph on at most 128 vertices stored as adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    adj: Vec<Bits>,
}

impl BitGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_BITS {
            return Err(Error::cap("graph vertices (bitset width)", MAX_BITS, n));
        }
        Ok(BitGraph { n, adj: vec![0; n] })
    }

    /// From a 2-uniform hypergraph; parallel edges collapse.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if !h.is_uniform(2) {
            return Err(Error::NotUniform { expected: 2 });
        }
        let mut g = BitGraph::new(h.n())?;
        for e in h.edges() {
            g.add_edge(e[0], e[1]);
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::contains(self.adj[u], v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.adj[v])
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|&a| bits::count(a)).sum::<usize>() / 2
    }

    pub fn all(&self) -> Bits {
        bits::full(self.n)
    }

    pub fn complement(&self) -> BitGraph {
        let all = self.all();
        BitGraph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !bits::bit(v)).collect(),
        }
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in bits::iter(self.adj[u] >> u >> 1) {
                edges.push(vec![u, u + 1 + v]);
            }
        }
        Hypergraph::new(self.n, edges).expect("bitgraph edges are valid")
    }
}

/// Maximum clique by branch and bound with a greedy-coloring bound.
pub fn max_clique(g: &BitGraph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut cur = Vec::new();
    clique_expand(g, g.all(), &mut cur, &mut best);
    best.sort_unstable();
    best
}

fn clique_expand(g: &BitGraph, cand: Bits, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand == 0 {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    // Greedy color classes give, per vertex, an upper bound on the clique
    // size reachable from it.
    let (order, colors) = color_sort(g, cand);
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if cur.len() + colors[i] <= best.len() {
            return;
        }
        let v = order[i];
        cur.push(v);
        clique_expand(g, cand & g.adj[v], cur, best);
        cur.pop();
        cand &= !bits::bit(v);
    }
}

fn color_sort(g: &BitGraph, cand: Bits) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(bits::count(cand));
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bits::bit(v) & !g.adj[v];
            uncolored &= !bits::bit(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// DSATUR greedy coloring, ties broken by larger degree then lowest id.
pub fn dsatur(g: &BitGraph) -> Vec<usize> {
    let n = g.n;
    let mut color = vec![usize::MAX; n];
    let mut sat: Vec<u128> = vec![0; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = (!sat[v]).trailing_zeros() as usize;
        color[v] = c;
        for u in bits::iter(g.adj[v]) {
            sat[u] |= 1u128 << c;
        }
    }
    color
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Exhausted,
    NodeLimit,
}

/// Decides `k`-colorability by DSATUR-ordered backtracking. The vertices of
/// `clique` are precolored `0, 1, ...`; new colors open in order.
pub fn k_color(
    g: &BitGraph,
    k: usize,
    clique: &[usize],
    node_limit: Option<u64>,
    nodes: &mut u64,
) -> SearchOutcome<Vec<usize>> {
    let n = g.n;
    if n == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    if k == 0 || clique.len() > k || k > 128 {
        return if k > 128 {
            SearchOutcome::Found(dsatur(g))
        } else {
            SearchOutcome::Exhausted
        };
    }
    let mut st = KColor {
        g,
        k,
        color: vec![usize::MAX; n],
        nb_count: vec![0u16; n * k],
        sat: vec![0u128; n],
        uncolored: g.all(),
        nodes,
        node_limit,
    };
    for (c, &v) in clique.iter().enumerate() {
        st.assign(v, c);
    }
    for v in bits::iter(st.uncolored) {
        if st.sat[v].count_ones() as usize >= k {
            return SearchOutcome::Exhausted;
        }
    }
    match st.search(clique.len()) {
        Some(true) => SearchOutcome::Found(st.color),
        Some(false) => SearchOutcome::Exhausted,
        None => SearchOutcome::NodeLimit,
    }
}

struct KColor<'a> {
    g: &'a BitGraph,
    k: usize,
    color: Vec<usize>,
    nb_count: Vec<u16>,
    sat: Vec<u128>,
    uncolored: Bits,
    nodes: &'a mut u64,
    node_limit: Option<u64>,
}

impl KColor<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.uncolored &= !bits::bit(v);
        for u in bits::iter(self.g.adj[v]) {
            let slot = &mut self.nb_count[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] |= 1u128 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        self.uncolored |= bits::bit(v);
        for u in bits::iter(self.g.adj[v]) {
            let slot = &mut self.nb_count[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] &= !(1u128 << c);
            }
        }
    }

    /// `Some(true)` when a coloring was found, `None` on node limit.
    fn search(&mut self, used: usize) -> Option<bool> {
        if self.uncolored == 0 {
            return Some(true);
        }
        *self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if *self.nodes > limit {
                return None;
            }
        }
        let mut best = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in bits::iter(self.uncolored) {
            let s = self.sat[v].count_ones();
            let d = (self.g.adj[v] & self.uncolored).count_ones();
            if best == usize::MAX || (s, d) > key {
                best = v;
                key = (s, d);
            }
        }
        let v = best;
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.sat[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            let dead = bits::iter(self.g.adj[v] & self.uncolored)
                .any(|u| self.sat[u].count_ones() as usize >= self.k);
            if !dead {
                match self.search(used.max(c + 1)) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => {
                        self.unassign(v, c);
                        return None;
                    }
                }
            }
            self.unassign(v, c);
        }
        Some(false)
    }
}
