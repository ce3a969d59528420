//! Exact independence, covering and chromatic numbers of graphs and
//! hypergraphs, and the constructive colorings of Kneser hypergraphs.

mod graph;
mod hyper;
mod independence;

pub use graph::{dsatur, k_color, max_clique, BitGraph, SearchOutcome};
pub use hyper::{greedy_hyper_coloring, k_color_hypergraph};
pub use independence::max_independent_set;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::hyperstruct::Hypergraph;
use crate::kneser::{kneser_power, KneserOptions};

pub const DEFAULT_MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Vertex cap; never above 128.
    pub max_vertices: usize,
    /// Backtracking node budget; `None` searches to completion.
    pub node_limit: Option<u64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            node_limit: None,
        }
    }
}

impl SolverOptions {
    fn check(&self, n: usize) -> Result<()> {
        let cap = self.max_vertices.min(bits::MAX_BITS);
        if n > cap {
            Err(Error::cap("solver vertices", cap, n))
        } else {
            Ok(())
        }
    }
}

/// A chromatic number, with `Unbounded` ordered above every integer. It
/// supports comparison only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChromaticValue {
    Finite(usize),
    Unbounded,
}

impl ChromaticValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            ChromaticValue::Finite(v) => Some(v),
            ChromaticValue::Unbounded => None,
        }
    }
}

impl std::fmt::Display for ChromaticValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChromaticValue::Finite(v) => write!(f, "{v}"),
            ChromaticValue::Unbounded => write!(f, "unbounded"),
        }
    }
}

impl Serialize for ChromaticValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ChromaticValue::Finite(v) => s.serialize_u64(*v as u64),
            ChromaticValue::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for ChromaticValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ChromaticValue::Finite(v)),
            Raw::Str(s) if s == "unbounded" => Ok(ChromaticValue::Unbounded),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad chromatic value '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringKind {
    ProperGraph,
    ProperHypergraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub kind: ColoringKind,
    pub num_colors: usize,
    pub assignment: Vec<usize>,
}

impl ColoringCertificate {
    /// Direct scan: every color in range and no hyperedge monochromatic.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        if self.assignment.len() != h.n() {
            return Err(Error::LengthMismatch {
                expected: h.n(),
                actual: self.assignment.len(),
            });
        }
        if let Some(v) = self.assignment.iter().position(|&c| c >= self.num_colors) {
            return Err(Error::ImproperColoring(format!(
                "vertex {v} has color {} outside 0..{}",
                self.assignment[v], self.num_colors
            )));
        }
        if self.kind == ColoringKind::ProperGraph && !h.is_uniform(2) {
            return Err(Error::NotUniform { expected: 2 });
        }
        for (id, e) in h.edges().iter().enumerate() {
            let c = self.assignment[e[0]];
            if e.iter().all(|&v| self.assignment[v] == c) {
                return Err(Error::ImproperColoring(format!(
                    "hyperedge {id} {e:?} is monochromatic (color {c})"
                )));
            }
        }
        Ok(())
    }
}

/// Why the reported lower bound holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LowerBoundWitness {
    /// 0 without vertices, 1 with vertices, 2 when a hyperedge exists.
    Trivial,
    Clique { vertices: Vec<usize> },
    /// Exhaustive search found no coloring with `refuted_colors` colors.
    Exhausted { refuted_colors: usize, nodes: u64 },
    SingletonEdge { edge: usize },
}

/// Outcome of an exact chromatic-number computation. Serializes as the
/// certificate document `{"value", "assignment", "witness", ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    /// Exact value when `exact`, otherwise the best upper bound found.
    pub value: ChromaticValue,
    pub exact: bool,
    /// Proven lower bound.
    pub lower_bound: usize,
    pub kind: ColoringKind,
    /// Coloring achieving `value`; empty when unbounded.
    pub assignment: Vec<usize>,
    pub witness: LowerBoundWitness,
    pub nodes: u64,
}

impl ChromaticResult {
    pub fn coloring(&self) -> Option<ColoringCertificate> {
        self.value.finite().map(|k| ColoringCertificate {
            kind: self.kind,
            num_colors: k,
            assignment: self.assignment.clone(),
        })
    }

    /// Exact finite value, if known.
    pub fn exact_value(&self) -> Option<usize> {
        if self.exact {
            self.value.finite()
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetResult {
    pub size: usize,
    pub witness: Vec<usize>,
}

pub fn independence_number(h: &Hypergraph, opts: &SolverOptions) -> Result<SetResult> {
    opts.check(h.n())?;
    let masks = h.edge_masks()?;
    let witness = max_independent_set(h.n(), &masks);
    Ok(SetResult {
        size: witness.len(),
        witness,
    })
}

/// Minimum vertex cover, computed as the complement of a maximum
/// independent set.
pub fn covering_number(h: &Hypergraph, opts: &SolverOptions) -> Result<SetResult> {
    let alpha = independence_number(h, opts)?;
    let mask = bits::from_indices(alpha.witness.iter().copied());
    let witness: Vec<usize> = (0..h.n()).filter(|&v| !bits::contains(mask, v)).collect();
    debug_assert_eq!(alpha.size + witness.len(), h.n());
    Ok(SetResult {
        size: witness.len(),
        witness,
    })
}

pub fn is_independent(h: &Hypergraph, set: &[usize]) -> bool {
    let mut inside = vec![false; h.n()];
    for &v in set {
        if v >= h.n() {
            return false;
        }
        inside[v] = true;
    }
    h.edges().iter().all(|e| e.iter().any(|&v| !inside[v]))
}

pub fn is_cover(h: &Hypergraph, set: &[usize]) -> bool {
    let mut inside = vec![false; h.n()];
    for &v in set {
        if v >= h.n() {
            return false;
        }
        inside[v] = true;
    }
    h.edges().iter().all(|e| e.iter().any(|&v| inside[v]))
}

/// Exact chromatic number of a simple graph given as a 2-uniform
/// hypergraph.
pub fn chromatic_number_graph(g: &Hypergraph, opts: &SolverOptions) -> Result<ChromaticResult> {
    if !g.is_uniform(2) {
        return Err(Error::NotUniform { expected: 2 });
    }
    if g.has_repeated_edges() {
        return Err(Error::NotSimple);
    }
    opts.check(g.n())?;
    Ok(solve_graph(&BitGraph::from_hypergraph(g)?, opts))
}

pub fn chromatic_number_bitgraph(g: &BitGraph, opts: &SolverOptions) -> Result<ChromaticResult> {
    opts.check(g.n())?;
    Ok(solve_graph(g, opts))
}

fn solve_graph(g: &BitGraph, opts: &SolverOptions) -> ChromaticResult {
    let n = g.n();
    if n == 0 {
        return ChromaticResult {
            value: ChromaticValue::Finite(0),
            exact: true,
            lower_bound: 0,
            kind: ColoringKind::ProperGraph,
            assignment: Vec::new(),
            witness: LowerBoundWitness::Trivial,
            nodes: 0,
        };
    }
    let clique = max_clique(g);
    let mut best = dsatur(g);
    let mut value = best.iter().max().map_or(0, |&c| c + 1);
    let mut lower = clique.len();
    let mut witness = LowerBoundWitness::Clique {
        vertices: clique.clone(),
    };
    let mut nodes = 0u64;
    for k in clique.len()..value {
        match k_color(g, k, &clique, opts.node_limit, &mut nodes) {
            SearchOutcome::Found(c) => {
                best = c;
                value = k;
                break;
            }
            SearchOutcome::Exhausted => {
                lower = k + 1;
                witness = LowerBoundWitness::Exhausted {
                    refuted_colors: k,
                    nodes,
                };
            }
            SearchOutcome::NodeLimit => break,
        }
    }
    ChromaticResult {
        value: ChromaticValue::Finite(value),
        exact: lower == value,
        lower_bound: lower,
        kind: ColoringKind::ProperGraph,
        assignment: best,
        witness,
        nodes,
    }
}

/// Least `t` admitting a coloring with no monochromatic hyperedge;
/// `Unbounded` when a singleton hyperedge exists. Zero vertices give 0.
pub fn chromatic_number_hypergraph(h: &Hypergraph, opts: &SolverOptions) -> Result<ChromaticResult> {
    if let Some(edge) = h.edges().iter().position(|e| e.len() == 1) {
        return Ok(ChromaticResult {
            value: ChromaticValue::Unbounded,
            exact: true,
            lower_bound: 0,
            kind: ColoringKind::ProperHypergraph,
            assignment: Vec::new(),
            witness: LowerBoundWitness::SingletonEdge { edge },
            nodes: 0,
        });
    }
    opts.check(h.n())?;
    if h.num_edges() > 0 && h.is_uniform(2) {
        let mut r = solve_graph(&BitGraph::from_hypergraph(h)?, opts);
        r.kind = ColoringKind::ProperHypergraph;
        return Ok(r);
    }
    let n = h.n();
    if n == 0 || h.num_edges() == 0 {
        let v = n.min(1);
        return Ok(ChromaticResult {
            value: ChromaticValue::Finite(v),
            exact: true,
            lower_bound: v,
            kind: ColoringKind::ProperHypergraph,
            assignment: vec![0; n],
            witness: LowerBoundWitness::Trivial,
            nodes: 0,
        });
    }
    let mut best = greedy_hyper_coloring(h);
    let mut value = best.iter().max().map_or(0, |&c| c + 1);
    let mut lower = 2;
    let mut witness = LowerBoundWitness::Trivial;
    let mut nodes = 0u64;
    for k in 2..value {
        match k_color_hypergraph(h, k, opts.node_limit, &mut nodes) {
            SearchOutcome::Found(c) => {
                best = c;
                value = k;
                break;
            }
            SearchOutcome::Exhausted => {
                lower = k + 1;
                witness = LowerBoundWitness::Exhausted {
                    refuted_colors: k,
                    nodes,
                };
            }
            SearchOutcome::NodeLimit => break,
        }
    }
    Ok(ChromaticResult {
        value: ChromaticValue::Finite(value),
        exact: lower == value,
        lower_bound: lower,
        kind: ColoringKind::ProperHypergraph,
        assignment: best,
        witness,
        nodes,
    })
}

/// Coloring of `KG^r(rep)` from a maximum independent set `S` of `rep`:
/// `V \ S` is cut into consecutive blocks of `r - 1` vertices and each
/// hyperedge takes the index of the first block it meets. Uses
/// `ceil((|V| - alpha) / (r - 1))` colors and is validated against
/// `KG^r(rep)` before being returned.
pub fn cover_coloring(rep: &Hypergraph, r: usize, opts: &SolverOptions) -> Result<ColoringCertificate> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity r must be >= 2, got {r}")));
    }
    let alpha = independence_number(rep, opts)?;
    let in_s = bits::from_indices(alpha.witness.iter().copied());
    let rest: Vec<usize> = (0..rep.n()).filter(|&v| !bits::contains(in_s, v)).collect();
    let mut block = vec![usize::MAX; rep.n()];
    for (i, &v) in rest.iter().enumerate() {
        block[v] = i / (r - 1);
    }
    let num_colors = rest.len().div_ceil(r - 1);
    let assignment = rep
        .edges()
        .iter()
        .map(|e| {
            e.iter()
                .map(|&v| block[v])
                .min()
                .filter(|&b| b != usize::MAX)
                .expect("independent set contains no hyperedge")
        })
        .collect();
    let cert = ColoringCertificate {
        kind: if r == 2 {
            ColoringKind::ProperGraph
        } else {
            ColoringKind::ProperHypergraph
        },
        num_colors,
        assignment,
    };
    let kg = kneser_power(rep, r, &KneserOptions::default())?;
    cert.validate(&kg.result)?;
    Ok(cert)
}

/// Adds one vertex per color and appends the color vertex of `c(e)` to
/// every hyperedge `e`. `KG` of the result equals `KG(rep)` and the color
/// vertices form a cover, so its covering number is at most the number of
/// colors.
pub fn augment_representation(rep: &Hypergraph, coloring: &ColoringCertificate) -> Result<Hypergraph> {
    let kg = kneser_power(rep, 2, &KneserOptions::default())?;
    coloring.validate(&kg.result)?;
    let n = rep.n();
    let edges = rep
        .edges()
        .iter()
        .zip(&coloring.assignment)
        .map(|(e, &c)| {
            let mut e = e.clone();
            e.push(n + c);
            e
        })
        .collect();
    let out = Hypergraph::new(n + coloring.num_colors, edges)?;
    match rep.labels() {
        Some(l) => {
            let mut l = l.to_vec();
            l.extend((0..coloring.num_colors).map(|c| format!("color{c}")));
            out.with_labels(l)
        }
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstruct::{build_named_family, NamedFamily};
    use crate::kneser::kneser_power;
    use crate::patterns::{pattern_hypergraph, PatternFamily, PatternOptions};

    fn named(kind: NamedFamily) -> Hypergraph {
        build_named_family(kind).unwrap()
    }

    fn ph(host: NamedFamily, pat: NamedFamily) -> Hypergraph {
        pattern_hypergraph(&named(host), &PatternFamily::named(pat).unwrap(), &PatternOptions::default())
            .unwrap()
            .hypergraph
    }

    fn kg(rep: &Hypergraph, r: usize) -> Hypergraph {
        kneser_power(rep, r, &KneserOptions::default()).unwrap().result
    }

    fn chi(h: &Hypergraph) -> usize {
        let r = chromatic_number_hypergraph(h, &SolverOptions::default()).unwrap();
        assert!(r.exact);
        r.coloring().unwrap().validate(h).unwrap();
        r.value.finite().unwrap()
    }

    #[test]
    fn independence_examples() {
        let o = SolverOptions::default();
        let k4p2 = ph(NamedFamily::Complete { n: 4 }, NamedFamily::Path { len: 2 });
        let a = independence_number(&k4p2, &o).unwrap();
        assert_eq!(a.size, 2);
        assert!(is_independent(&k4p2, &a.witness));
        assert_eq!(independence_number(&Hypergraph::empty(5), &o).unwrap().size, 5);
        let k5k3 = ph(NamedFamily::Complete { n: 5 }, NamedFamily::Complete { n: 3 });
        assert_eq!(independence_number(&k5k3, &o).unwrap().size, 6);
    }

    #[test]
    fn covering_examples() {
        let o = SolverOptions::default();
        let k4 = named(NamedFamily::Complete { n: 4 });
        let b = covering_number(&k4, &o).unwrap();
        assert_eq!(b.size, 3);
        assert!(is_cover(&k4, &b.witness));
        assert_eq!(covering_number(&Hypergraph::empty(4), &o).unwrap().size, 0);
        let k4p2 = ph(NamedFamily::Complete { n: 4 }, NamedFamily::Path { len: 2 });
        assert_eq!(covering_number(&k4p2, &o).unwrap().size, 4);
    }

    #[test]
    fn graph_chromatic_examples() {
        let petersen = kg(&named(NamedFamily::CompleteUniform { n: 5, s: 2 }), 2);
        assert_eq!(petersen.n(), 10);
        assert_eq!(chi(&petersen), 3);
        let sg62 = kg(&ph(NamedFamily::Cycle { n: 6 }, NamedFamily::Matching { r: 2 }), 2);
        assert_eq!(chi(&sg62), 4);
        let k4p2 = kg(&ph(NamedFamily::Complete { n: 4 }, NamedFamily::Path { len: 2 }), 2);
        let r = chromatic_number_graph(&k4p2, &SolverOptions::default()).unwrap();
        assert_eq!(r.exact_value(), Some(4));
    }

    #[test]
    fn graph_solver_rejects() {
        let o = SolverOptions::default();
        let multi = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(chromatic_number_graph(&multi, &o).unwrap_err(), Error::NotSimple);
        let tri = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(chromatic_number_graph(&tri, &o), Err(Error::NotUniform { .. })));
        let big = Hypergraph::empty(65);
        assert!(chromatic_number_graph(&big, &o).unwrap_err().is_cap());
    }

    #[test]
    fn hypergraph_chromatic_examples() {
        let o = SolverOptions::default();
        let kg3 = kg(&named(NamedFamily::Matching { r: 7 }).with_isolated(0), 3);
        // KG^3(7K2, 2K2) through the pattern hypergraph.
        let rep = ph(NamedFamily::Matching { r: 7 }, NamedFamily::Matching { r: 2 });
        let kg3p = kg(&rep, 3);
        assert_eq!(chi(&kg3p), 2);
        assert_eq!(kg3.num_edges(), 35);

        let single = Hypergraph::new(1, vec![vec![0]]).unwrap();
        let r = chromatic_number_hypergraph(&single, &o).unwrap();
        assert_eq!(r.value, ChromaticValue::Unbounded);
        assert!(ChromaticValue::Unbounded > ChromaticValue::Finite(usize::MAX));

        let triple = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(chi(&triple), 2);
        assert_eq!(chi(&Hypergraph::empty(0)), 0);
        assert_eq!(chi(&Hypergraph::empty(3)), 1);
    }

    #[test]
    fn node_limit_reports_bounds() {
        let o = SolverOptions {
            node_limit: Some(1),
            ..SolverOptions::default()
        };
        let sg = kg(&ph(NamedFamily::Cycle { n: 7 }, NamedFamily::Matching { r: 2 }), 2);
        let r = chromatic_number_graph(&sg, &o).unwrap();
        assert!(r.lower_bound <= 5 && r.value.finite().unwrap() >= 5);
        r.coloring().unwrap().validate(&sg).unwrap();
    }

    #[test]
    fn certificate_json_shape() {
        let petersen = kg(&named(NamedFamily::CompleteUniform { n: 5, s: 2 }), 2);
        let r = chromatic_number_graph(&petersen, &SolverOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["value"], 3);
        assert_eq!(v["assignment"].as_array().unwrap().len(), 10);
        assert_eq!(v["witness"]["type"], "exhausted");
        let back: ChromaticResult = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let u = serde_json::to_string(&ChromaticValue::Unbounded).unwrap();
        assert_eq!(u, "\"unbounded\"");
    }

    #[test]
    fn validate_rejects_tampering() {
        let petersen = kg(&named(NamedFamily::CompleteUniform { n: 5, s: 2 }), 2);
        let r = chromatic_number_graph(&petersen, &SolverOptions::default()).unwrap();
        let mut c = r.coloring().unwrap();
        c.validate(&petersen).unwrap();
        let e = petersen.edge(0).to_vec();
        c.assignment[e[0]] = c.assignment[e[1]];
        assert!(matches!(c.validate(&petersen), Err(Error::ImproperColoring(_))));
    }

    #[test]
    fn cover_coloring_examples() {
        let o = SolverOptions::default();
        let rep = named(NamedFamily::CompleteUniform { n: 5, s: 2 });
        // alpha = 1 here, so the construction spends n - k + 1 = 4 colors
        // although chi(KG(5, 2)) = 3.
        let c = cover_coloring(&rep, 2, &o).unwrap();
        assert_eq!(c.num_colors, 4);

        let star = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        let c = cover_coloring(&star, 2, &o).unwrap();
        let alpha = independence_number(&star, &o).unwrap().size;
        assert_eq!(c.num_colors, star.n() - alpha);

        let c5 = named(NamedFamily::Cycle { n: 5 });
        let c = cover_coloring(&c5, 2, &o).unwrap();
        assert_eq!(c.num_colors, 3);
        assert!(chi(&kg(&c5, 2)) <= 3);

        let rep3 = ph(NamedFamily::Matching { r: 6 }, NamedFamily::Matching { r: 2 });
        let c = cover_coloring(&rep3, 3, &o).unwrap();
        assert_eq!(c.num_colors, (6 - 1usize).div_ceil(2));
        assert!(cover_coloring(&rep3, 1, &o).is_err());
    }

    #[test]
    fn augment_examples() {
        let o = SolverOptions::default();
        // KG(5K2, 2K2) representation with an optimal coloring.
        let rep = ph(NamedFamily::Matching { r: 5 }, NamedFamily::Matching { r: 2 });
        let kgr = kg(&rep, 2);
        let col = chromatic_number_graph(&kgr, &o).unwrap().coloring().unwrap();
        let aug = augment_representation(&rep, &col).unwrap();
        assert_eq!(kg(&aug, 2), kgr);
        assert_eq!(covering_number(&aug, &o).unwrap().size, 3);

        // Edgeless KG, one color.
        let star = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        let one = ColoringCertificate {
            kind: ColoringKind::ProperGraph,
            num_colors: 1,
            assignment: vec![0, 0],
        };
        assert_eq!(covering_number(&augment_representation(&star, &one).unwrap(), &o).unwrap().size, 1);

        // Five-cycle representation with 5 isolated vertices.
        let h = named(NamedFamily::Cycle { n: 5 }).with_isolated(5);
        let col = chromatic_number_graph(&kg(&h, 2), &o).unwrap().coloring().unwrap();
        assert_eq!(col.num_colors, 3);
        let aug = augment_representation(&h, &col).unwrap();
        assert_eq!(aug.n(), 13);
        assert_eq!(covering_number(&aug, &o).unwrap().size, 3);

        let bad = ColoringCertificate {
            kind: ColoringKind::ProperGraph,
            num_colors: 1,
            assignment: vec![0; 5],
        };
        assert!(augment_representation(&h, &bad).is_err());
    }
}
