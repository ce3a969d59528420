//! Closed-form checks: the golden chromatic-number tables, the path-graph
//! coloring with its triangle factors, and the `P2` counting bound.

mod golden;

pub use golden::{
    formula_value, run_golden_suite, CaseOutcome, CaseStatus, Construction, GoldenCase, GoldenManifest,
    GoldenOptions, GoldenReport, TuranBounds, GOLDEN_MANIFEST_V1,
};

use serde::{Deserialize, Serialize};

use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::exactsolve::{BitGraph, ColoringCertificate, ColoringKind};
use crate::hyperstruct::{Hypergraph, NamedFamily};
use crate::kneser::{kneser_power, KneserOptions};
use crate::patterns::{pattern_hypergraph, PatternFamily, PatternOptions};

pub const DEFAULT_MAX_FACTOR_VERTICES: usize = 15;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct P2Count {
    pub count: usize,
    /// `(2e/n)(e - n/2)`.
    pub bound: f64,
    pub holds: bool,
}

fn simple_graph(g: &Hypergraph) -> Result<()> {
    if !g.is_uniform(2) {
        return Err(Error::NotUniform { expected: 2 });
    }
    if g.has_repeated_edges() {
        return Err(Error::NotSimple);
    }
    Ok(())
}

/// Number of `P2` subgraphs, `sum_v C(deg v, 2)`, against the convexity
/// bound `(2e/n)(e - n/2)`.
pub fn count_p2(g: &Hypergraph) -> Result<P2Count> {
    simple_graph(g)?;
    let count = g.degrees().iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
    let (n, e) = (g.n() as f64, g.num_edges() as f64);
    let bound = if g.n() == 0 { 0.0 } else { 2.0 * e / n * (e - n / 2.0) };
    Ok(P2Count {
        count,
        bound,
        holds: count as f64 + 1e-9 >= bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    K2,
    K3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

/// Spanning family of vertex-disjoint triangles followed by at most two
/// tail components, each an edge or a triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorWitness {
    pub components: Vec<FactorComponent>,
}

impl FactorWitness {
    pub fn validate(&self, g: &Hypergraph) -> Result<()> {
        simple_graph(g)?;
        let bad = |why: String| Err(Error::InvalidCertificate(why));
        let edges: std::collections::HashSet<&[usize]> = g.edges().iter().map(Vec::as_slice).collect();
        let mut seen = vec![false; g.n()];
        let c = &self.components;
        for (i, comp) in c.iter().enumerate() {
            let want = match comp.kind {
                ComponentKind::K2 => 2,
                ComponentKind::K3 => 3,
            };
            if comp.vertices.len() != want {
                return bad(format!("component {i} has {} vertices", comp.vertices.len()));
            }
            if comp.kind == ComponentKind::K2 && i + 2 < c.len() {
                return bad(format!("edge component {i} is not among the last two"));
            }
            for (a, &u) in comp.vertices.iter().enumerate() {
                if u >= g.n() || seen[u] {
                    return bad(format!("vertex {u} repeated or out of range"));
                }
                seen[u] = true;
                for &v in &comp.vertices[a + 1..] {
                    if !edges.contains([u.min(v), u.max(v)].as_slice()) {
                        return bad(format!("component {i} uses the non-edge {{{u}, {v}}}"));
                    }
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return bad(format!("vertex {v} is not covered"));
        }
        Ok(())
    }

    pub fn num_triangles(&self) -> usize {
        self.components.iter().filter(|c| c.kind == ComponentKind::K3).count()
    }

    /// Edges of the factor as sorted pairs.
    fn edge_set(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for comp in &self.components {
            let v = &comp.vertices;
            for a in 0..v.len() {
                for b in a + 1..v.len() {
                    out.push([v[a].min(v[b]), v[a].max(v[b])]);
                }
            }
        }
        out
    }
}

/// Exhaustive search for a factor of the shape above: the lowest uncovered
/// vertex goes into a triangle or, while fewer than two are used, an edge.
pub fn find_triangle_factor(g: &Hypergraph, max_vertices: usize) -> Result<Option<FactorWitness>> {
    simple_graph(g)?;
    if g.n() > max_vertices.min(bits::MAX_BITS) {
        return Err(Error::cap("factor search vertices", max_vertices, g.n()));
    }
    if g.n() == 0 {
        return Ok(Some(FactorWitness { components: vec![] }));
    }
    let bg = BitGraph::from_hypergraph(g)?;
    fn rec(g: &BitGraph, left: Bits, k2: usize, out: &mut Vec<FactorComponent>) -> bool {
        if left == 0 {
            return true;
        }
        let v = left.trailing_zeros() as usize;
        let nb = g.neighbors(v) & left;
        for u in bits::iter(nb) {
            for w in bits::iter(nb & g.neighbors(u)) {
                if w <= u {
                    continue;
                }
                out.push(FactorComponent {
                    kind: ComponentKind::K3,
                    vertices: vec![v, u, w],
                });
                if rec(g, left & !bits::bit(v) & !bits::bit(u) & !bits::bit(w), k2, out) {
                    return true;
                }
                out.pop();
            }
        }
        if k2 < 2 {
            for u in bits::iter(nb) {
                out.push(FactorComponent {
                    kind: ComponentKind::K2,
                    vertices: vec![v, u],
                });
                if rec(g, left & !bits::bit(v) & !bits::bit(u), k2 + 1, out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }
    let mut comps = Vec::new();
    if !rec(&bg, bg.all(), 0, &mut comps) {
        return Ok(None);
    }
    // Triangles first, edge components last.
    comps.sort_by_key(|c| c.kind == ComponentKind::K2);
    let w = FactorWitness { components: comps };
    w.validate(g)?;
    Ok(Some(w))
}

/// `KG(g, {P2})` with its representation, vertices in occurrence order.
pub fn path_kneser_graph(g: &Hypergraph) -> Result<(Hypergraph, Hypergraph)> {
    let rep = pattern_hypergraph(g, &PatternFamily::named(NamedFamily::Path { len: 2 })?, &PatternOptions::default())?
        .hypergraph;
    let kg = kneser_power(&rep, 2, &KneserOptions::default())?.result;
    Ok((rep, kg))
}

/// Coloring of `KG(g, {P2})` from a factor: with `e_1, ..., e_l` the edges
/// outside the factor, a `P2` inside the `i`-th triangle gets color `l + i`
/// and any other `P2` gets the least `j` with `e_j` in it. Uses
/// `|E| - floor(2n/3)` colors and is validated before being returned.
pub fn path_graph_coloring(g: &Hypergraph, factor: &FactorWitness) -> Result<ColoringCertificate> {
    factor.validate(g)?;
    let inside: std::collections::HashSet<[usize; 2]> = factor.edge_set().into_iter().collect();
    let outside: Vec<usize> = (0..g.num_edges())
        .filter(|&id| !inside.contains(&[g.edge(id)[0], g.edge(id)[1]]))
        .collect();
    let l = outside.len();
    let mut out_index = vec![usize::MAX; g.num_edges()];
    for (j, &id) in outside.iter().enumerate() {
        out_index[id] = j;
    }
    let mut triangle_of = vec![usize::MAX; g.n()];
    for (i, comp) in factor.components.iter().filter(|c| c.kind == ComponentKind::K3).enumerate() {
        for &v in &comp.vertices {
            triangle_of[v] = i;
        }
    }
    let (rep, kg) = path_kneser_graph(g)?;
    let mut assignment = Vec::with_capacity(rep.num_edges());
    for p in rep.edges() {
        let color = match p.iter().map(|&id| out_index[id]).filter(|&j| j != usize::MAX).min() {
            Some(j) => j,
            None => {
                // Both edges lie in the factor, hence in one triangle.
                let t = triangle_of[g.edge(p[0])[0]];
                if t == usize::MAX {
                    return Err(Error::InvalidCertificate("P2 inside an edge component".into()));
                }
                l + t
            }
        };
        assignment.push(color);
    }
    let cert = ColoringCertificate {
        kind: ColoringKind::ProperGraph,
        num_colors: l + factor.num_triangles(),
        assignment,
    };
    cert.validate(&kg)?;
    debug_assert_eq!(cert.num_colors, g.num_edges() - 2 * g.n() / 3);
    Ok(cert)
}

/// Largest independent set of `KG(g, {P2})` whose members share no common
/// edge, by exhaustive enumeration of pairwise edge-sharing families.
pub fn max_non_intersecting_independent_set(g: &Hypergraph) -> Result<usize> {
    let (rep, kg) = path_kneser_graph(g)?;
    let meet = BitGraph::from_hypergraph(&kg)?.complement();
    let masks = rep.edge_masks()?;
    fn rec(meet: &BitGraph, masks: &[Bits], cand: Bits, common: Bits, size: usize, best: &mut usize) {
        if common == 0 && size > *best {
            *best = size;
        }
        for v in bits::iter(cand) {
            let next = cand & meet.neighbors(v) & !bits::full(v + 1);
            rec(meet, masks, next, common & masks[v], size + 1, best);
        }
    }
    let mut best = 0;
    rec(&meet, &masks, meet.all(), Bits::MAX, 0, &mut best);
    Ok(best)
}
