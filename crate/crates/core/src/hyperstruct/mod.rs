//! (Multi)hypergraphs and the small value types the rest of the crate is
//! built on.
//!
//! A [`Hypergraph`] is a vertex count plus an ordered list of hyperedges.
//! Hyperedge identity is positional: two ids may carry the same member set,
//! which is how multigraphs are represented. Isolated vertices are kept.

pub(crate) mod families;
pub(crate) mod signs;

pub use families::{build_multigraph, build_named_family, parallel_classes, NamedFamily};
pub use signs::{apply_ordering, LinearOrdering, SignVector};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Bits, MAX_BITS};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphDoc", into = "HypergraphDoc")]
pub struct Hypergraph {
    n: usize,
    labels: Option<Vec<String>>,
    edges: Vec<Vec<usize>>,
}

/// Wire form: `{"n": int, "labels": [str]?, "edges": [[int,...],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct HypergraphDoc {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphDoc> for Hypergraph {
    type Error = Error;

    fn try_from(doc: HypergraphDoc) -> Result<Self> {
        let h = Hypergraph::new(doc.n, doc.edges)?;
        match doc.labels {
            Some(labels) => h.with_labels(labels),
            None => Ok(h),
        }
    }
}

impl From<Hypergraph> for HypergraphDoc {
    fn from(h: Hypergraph) -> Self {
        HypergraphDoc {
            n: h.n,
            labels: h.labels,
            edges: h.edges,
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each member list. Empty hyperedges,
    /// repeated members and out-of-range vertices are rejected.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (id, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph(format!("hyperedge {id} is empty")));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {id} repeats a vertex"
                )));
            }
            if let Some(&v) = e.last() {
                if v >= n {
                    return Err(Error::InvalidHypergraph(format!(
                        "hyperedge {id} uses vertex {v} outside [0, {n})"
                    )));
                }
            }
            out.push(e);
        }
        Ok(Hypergraph {
            n,
            labels: None,
            edges: out,
        })
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            labels: None,
            edges: Vec::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &[usize] {
        &self.edges[id]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Ids of the hyperedges containing each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(id);
            }
        }
        inc
    }

    /// True when every hyperedge has exactly `k` members (vacuously true
    /// without hyperedges).
    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub fn has_repeated_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().any(|e| !seen.insert(e))
    }

    pub fn has_singleton_edge(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let d = self.degrees();
        (0..self.n).filter(|&v| d[v] == 0).collect()
    }

    /// Drops isolated vertices, renumbering the rest in increasing order.
    pub fn strip_isolated(&self) -> Hypergraph {
        let d = self.degrees();
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut labels = self.labels.as_ref().map(|_| Vec::new());
        for v in 0..self.n {
            if d[v] > 0 {
                map[v] = next;
                next += 1;
                if let (Some(out), Some(src)) = (labels.as_mut(), self.labels.as_ref()) {
                    out.push(src[v].clone());
                }
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| map[v]).collect())
            .collect();
        Hypergraph {
            n: next,
            labels,
            edges,
        }
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Hypergraph {
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.extend((self.n..self.n + k).map(|v| v.to_string()));
            l
        });
        Hypergraph {
            n: self.n + k,
            labels,
            edges: self.edges.clone(),
        }
    }

    /// Renames vertex `v` to `perm[v]`; hyperedge ids are kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: perm.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Hypergraph::new(self.n, edges)
    }

    /// Sub-hypergraph on the same vertex set keeping only the listed ids.
    pub fn spanning_subgraph(&self, ids: &[usize]) -> Hypergraph {
        Hypergraph {
            n: self.n,
            labels: self.labels.clone(),
            edges: ids.iter().map(|&id| self.edges[id].clone()).collect(),
        }
    }

    /// Collapses parallel hyperedges to one copy each, in order of first
    /// appearance.
    pub fn simplify(&self) -> Hypergraph {
        let mut seen = std::collections::HashSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert(e.to_vec()))
            .cloned()
            .collect();
        Hypergraph {
            n: self.n,
            labels: self.labels.clone(),
            edges,
        }
    }

    /// Multiplicity of each distinct member set.
    pub fn multiplicities(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            *m.entry(e.clone()).or_insert(0) += 1;
        }
        m
    }

    pub fn check_bitset_cap(&self) -> Result<()> {
        if self.n > MAX_BITS {
            Err(Error::cap("vertex count (bitset width)", MAX_BITS, self.n))
        } else {
            Ok(())
        }
    }

    /// Member sets as bitmasks. Requires `n <= 128`.
    pub fn edge_masks(&self) -> Result<Vec<Bits>> {
        self.check_bitset_cap()?;
        Ok(self
            .edges
            .iter()
            .map(|e| bits::from_indices(e.iter().copied()))
            .collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidHypergraph(e.to_string()))
    }
}

/// Pairwise-disjoint vertex subsets `N_1, ..., N_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionSpec {
    parts: Vec<Vec<usize>>,
}

impl RestrictionSpec {
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
            p.dedup();
            for &v in p.iter() {
                if !seen.insert(v) {
                    return Err(Error::InvalidParameter(format!(
                        "restriction parts overlap at vertex {v}"
                    )));
                }
            }
        }
        Ok(RestrictionSpec { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }
}

/// Result of [`induced_restriction`]: the restricted hypergraph plus maps
/// back to the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub hypergraph: Hypergraph,
    /// `vertex_map[new] = old`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[new_id] = old_id`.
    pub edge_map: Vec<usize>,
}

/// Keeps the hyperedges lying entirely inside a single part. The vertex set
/// becomes the union of the parts, renumbered in increasing host order.
pub fn induced_restriction(h: &Hypergraph, spec: &RestrictionSpec) -> Result<Restriction> {
    let mut part_of = vec![usize::MAX; h.n()];
    for (i, p) in spec.parts().iter().enumerate() {
        for &v in p {
            if v >= h.n() {
                return Err(Error::InvalidParameter(format!(
                    "restriction vertex {v} outside host"
                )));
            }
            part_of[v] = i;
        }
    }
    let vertex_map: Vec<usize> = (0..h.n()).filter(|&v| part_of[v] != usize::MAX).collect();
    let mut new_index = vec![usize::MAX; h.n()];
    for (new, &old) in vertex_map.iter().enumerate() {
        new_index[old] = new;
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (id, e) in h.edges().iter().enumerate() {
        let p = part_of[e[0]];
        if p != usize::MAX && e.iter().all(|&v| part_of[v] == p) {
            edges.push(e.iter().map(|&v| new_index[v]).collect());
            edge_map.push(id);
        }
    }
    let mut hypergraph = Hypergraph::new(vertex_map.len(), edges)?;
    if let Some(labels) = h.labels() {
        hypergraph = hypergraph.with_labels(vertex_map.iter().map(|&v| labels[v].clone()).collect())?;
    }
    Ok(Restriction {
        hypergraph,
        vertex_map,
        edge_map,
    })
}
