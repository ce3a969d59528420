//! General Kneser hypergraphs `KG^r(rep)` and the named Kneser-type graph
//! families with their representations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactsolve::BitGraph;
use crate::hyperstruct::families::k_subsets;
use crate::hyperstruct::{build_named_family, Hypergraph, NamedFamily};
use crate::patterns::{find_isomorphism, is_isomorphism, pattern_hypergraph, PatternFamily, PatternOptions};

pub const DEFAULT_MAX_REP_EDGES_GRAPH: usize = 4096;
pub const DEFAULT_MAX_REP_EDGES_HYPER: usize = 512;
pub const DEFAULT_MAX_RESULT_EDGES: usize = 20_000_000;
/// Vertex cap of the exhaustive representation check.
pub const DEFAULT_MAX_ISO_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KneserOptions {
    /// Cap on representation hyperedges when `r == 2`.
    pub max_rep_edges_graph: usize,
    /// Cap on representation hyperedges when `r >= 3`.
    pub max_rep_edges_hyper: usize,
    pub max_result_edges: usize,
}

impl Default for KneserOptions {
    fn default() -> Self {
        KneserOptions {
            max_rep_edges_graph: DEFAULT_MAX_REP_EDGES_GRAPH,
            max_rep_edges_hyper: DEFAULT_MAX_REP_EDGES_HYPER,
            max_result_edges: DEFAULT_MAX_RESULT_EDGES,
        }
    }
}

/// `KG^r(representation)`: vertices are the representation's hyperedge ids,
/// hyperedges the `r`-sets of pairwise disjoint representation hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneserInstance {
    pub representation: Hypergraph,
    pub r: usize,
    pub result: Hypergraph,
}

impl KneserInstance {
    /// Adjacency bit matrix of a `r = 2` result.
    pub fn bit_graph(&self) -> Result<BitGraph> {
        if self.r != 2 {
            return Err(Error::NotUniform { expected: 2 });
        }
        BitGraph::from_hypergraph(&self.result)
    }
}

/// Growable bitset over representation edge ids.
#[derive(Clone)]
struct IdSet(Vec<u64>);

impl IdSet {
    fn ones(m: usize) -> Self {
        let mut w = vec![u64::MAX; m.div_ceil(64)];
        if !m.is_multiple_of(64) {
            *w.last_mut().unwrap() = (1u64 << (m % 64)) - 1;
        }
        IdSet(w)
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }

    /// `self & other`, restricted to ids above `after`.
    fn and_above(&self, other: &IdSet, after: usize) -> IdSet {
        let mut out: Vec<u64> = self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect();
        let w = after / 64;
        for x in &mut out[..w] {
            *x = 0;
        }
        let keep = after % 64;
        out[w] &= if keep == 63 { 0 } else { u64::MAX << (keep + 1) };
        IdSet(out)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Disjointness rows: `rows[a]` holds every id whose members avoid those of
/// `a`. Identical nonempty member sets intersect, so copies never appear.
fn disjointness_rows(rep: &Hypergraph) -> Vec<IdSet> {
    let m = rep.num_edges();
    let inc = rep.incidence();
    (0..m)
        .map(|a| {
            let mut row = IdSet::ones(m);
            for &v in rep.edge(a) {
                for &b in &inc[v] {
                    row.clear(b);
                }
            }
            row
        })
        .collect()
}

pub fn kneser_power(rep: &Hypergraph, r: usize, opts: &KneserOptions) -> Result<KneserInstance> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("uniformity r must be >= 2, got {r}")));
    }
    let m = rep.num_edges();
    let cap = if r == 2 {
        opts.max_rep_edges_graph
    } else {
        opts.max_rep_edges_hyper
    };
    if m > cap {
        return Err(Error::cap("representation hyperedges", cap, m));
    }
    let rows = disjointness_rows(rep);
    let mut edges = Vec::new();
    let mut chosen = Vec::with_capacity(r);
    let all = IdSet::ones(m);
    for a in 0..m {
        chosen.push(a);
        let cand = all.and_above(&rows[a], a);
        extend(&rows, r, &cand, &mut chosen, &mut edges, opts.max_result_edges)?;
        chosen.pop();
    }
    Ok(KneserInstance {
        representation: rep.clone(),
        r,
        result: Hypergraph::new(m, edges)?,
    })
}

fn extend(
    rows: &[IdSet],
    r: usize,
    cand: &IdSet,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if chosen.len() + 1 == r {
        for b in cand.iter() {
            if out.len() == cap {
                return Err(Error::cap("Kneser hyperedges", cap, cap + 1));
            }
            let mut e = chosen.clone();
            e.push(b);
            out.push(e);
        }
        return Ok(());
    }
    for b in cand.iter() {
        chosen.push(b);
        let next = cand.and_above(&rows[b], b);
        extend(rows, r, &next, chosen, out, cap)?;
        chosen.pop();
    }
    Ok(())
}

/// Kneser-type graph families, each with a direct definition and a Kneser
/// representation `KG(host, pattern)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NamedKneser {
    /// `KG(n, k)` via `KG(nK2, kK2)`.
    Kneser { n: usize, k: usize },
    /// `SG(n, k)` via `KG(C_n, kK2)`.
    Schrijver { n: usize, k: usize },
    /// `K_{n/d}` via `KG(C_n, P_d)`.
    Circular { n: usize, d: usize },
    /// `KG(n, k, s)` via `KG(K_n^{s+1}, K_k^{s+1})`.
    GeneralizedKneser { n: usize, k: usize, s: usize },
    /// `S_r(m, n)` via `KG(K_{m,n}, rK2)`.
    Permutation { m: usize, n: usize, r: usize },
}

impl NamedKneser {
    /// Parses a tag with named parameters; unknown tags and missing
    /// parameters are errors.
    pub fn from_tag(tag: &str, get: impl Fn(&str) -> Option<usize>) -> Result<Self> {
        let need = |p: &str| {
            get(p).ok_or_else(|| Error::InvalidParameter(format!("family '{tag}' needs parameter --{p}")))
        };
        let kind = match tag.replace('-', "_").as_str() {
            "kneser" => NamedKneser::Kneser {
                n: need("n")?,
                k: need("k")?,
            },
            "schrijver" => NamedKneser::Schrijver {
                n: need("n")?,
                k: need("k")?,
            },
            "circular" => NamedKneser::Circular {
                n: need("n")?,
                d: need("d")?,
            },
            "generalized_kneser" => NamedKneser::GeneralizedKneser {
                n: need("n")?,
                k: need("k")?,
                s: need("s")?,
            },
            "permutation" => NamedKneser::Permutation {
                m: need("m")?,
                n: need("n")?,
                r: need("r")?,
            },
            other => return Err(Error::InvalidParameter(format!("unknown Kneser family '{other}'"))),
        };
        kind.check()?;
        Ok(kind)
    }

    pub fn check(&self) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidParameter(why));
        match *self {
            NamedKneser::Kneser { n, k } | NamedKneser::Schrijver { n, k } => {
                if k == 0 || n < 2 * k {
                    return bad(format!("need n >= 2k and k >= 1, got n={n}, k={k}"));
                }
                if matches!(self, NamedKneser::Schrijver { .. }) && n < 3 {
                    return bad(format!("cycle needs n >= 3, got {n}"));
                }
            }
            NamedKneser::Circular { n, d } => {
                if d == 0 || n < 2 * d || n < 3 {
                    return bad(format!("need n >= 2d, d >= 1 and n >= 3, got n={n}, d={d}"));
                }
            }
            NamedKneser::GeneralizedKneser { n, k, s } => {
                if !(n >= k && k > s) {
                    return bad(format!("need n >= k > s, got n={n}, k={k}, s={s}"));
                }
            }
            NamedKneser::Permutation { m, n, r } => {
                if r == 0 || m < r || n < r {
                    return bad(format!("need m, n >= r >= 1, got m={m}, n={n}, r={r}"));
                }
            }
        }
        Ok(())
    }

    /// Host and pattern of the representation.
    pub fn representation(&self) -> Result<(Hypergraph, Hypergraph)> {
        self.check()?;
        let b = build_named_family;
        Ok(match *self {
            NamedKneser::Kneser { n, k } => (b(NamedFamily::Matching { r: n })?, b(NamedFamily::Matching { r: k })?),
            NamedKneser::Schrijver { n, k } => (b(NamedFamily::Cycle { n })?, b(NamedFamily::Matching { r: k })?),
            NamedKneser::Circular { n, d } => (b(NamedFamily::Cycle { n })?, b(NamedFamily::Path { len: d })?),
            NamedKneser::GeneralizedKneser { n, k, s } => (
                b(NamedFamily::CompleteUniform { n, s: s + 1 })?,
                b(NamedFamily::CompleteUniform { n: k, s: s + 1 })?,
            ),
            NamedKneser::Permutation { m, n, r } => (
                b(NamedFamily::CompleteBipartite { m, n })?,
                b(NamedFamily::Matching { r })?,
            ),
        })
    }

    /// Closed-form chromatic number where one is known.
    pub fn known_chromatic_number(&self) -> Option<usize> {
        match *self {
            NamedKneser::Kneser { n, k } | NamedKneser::Schrijver { n, k } => Some(n - 2 * k + 2),
            _ => None,
        }
    }
}

/// A named family built through its representation, next to the graph
/// from the direct definition and a vertex bijection between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedKneserInstance {
    pub family: NamedKneser,
    pub host: Hypergraph,
    pub pattern: Hypergraph,
    pub instance: KneserInstance,
    pub direct: Hypergraph,
    /// `witness[v]` is the direct-definition vertex of representation
    /// vertex `v`.
    pub witness: Vec<usize>,
}

pub fn build_named_kneser(family: NamedKneser, opts: &PatternOptions) -> Result<NamedKneserInstance> {
    let (host, pattern) = family.representation()?;
    let rep = pattern_hypergraph(&host, &PatternFamily::single(pattern.clone())?, opts)?;
    let instance = kneser_power(&rep.hypergraph, 2, &KneserOptions::default())?;
    let (direct_sets, direct) = direct_graph(family);
    let index: HashMap<&[usize], usize> = direct_sets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut witness = Vec::with_capacity(rep.hypergraph.num_edges());
    for occ in rep.hypergraph.edges() {
        let key = natural_key(family, &host, occ);
        let v = index.get(key.as_slice()).copied().ok_or_else(|| {
            Error::InvalidHypergraph(format!("occurrence {occ:?} has no direct-definition counterpart"))
        })?;
        witness.push(v);
    }
    if !is_isomorphism(&instance.result, &direct, &witness) {
        return Err(Error::InvalidHypergraph(format!(
            "natural map is not an isomorphism for {family:?}"
        )));
    }
    Ok(NamedKneserInstance {
        family,
        host,
        pattern,
        instance,
        direct,
        witness,
    })
}

/// Key of an occurrence (sorted host edge ids) in the direct definition's
/// vertex encoding.
fn natural_key(family: NamedKneser, host: &Hypergraph, occ: &[usize]) -> Vec<usize> {
    match family {
        NamedKneser::Kneser { .. } | NamedKneser::Schrijver { .. } => occ.to_vec(),
        NamedKneser::Circular { n, .. } => {
            let start = occ.iter().copied().find(|&e| !occ.contains(&((e + n - 1) % n)));
            vec![start.expect("a path in a cycle has a first edge")]
        }
        NamedKneser::GeneralizedKneser { .. } => {
            let mut u: Vec<usize> = occ.iter().flat_map(|&e| host.edge(e).iter().copied()).collect();
            u.sort_unstable();
            u.dedup();
            u
        }
        NamedKneser::Permutation { m, .. } => {
            let mut pairs: Vec<(usize, usize)> = occ.iter().map(|&e| (host.edge(e)[0], host.edge(e)[1] - m)).collect();
            pairs.sort_unstable();
            pairs.into_iter().flat_map(|(a, b)| [a, b]).collect()
        }
    }
}

type Adjacency = Box<dyn Fn(&[usize], &[usize]) -> bool>;

/// Vertex encodings and graph of the direct definition.
fn direct_graph(family: NamedKneser) -> (Vec<Vec<usize>>, Hypergraph) {
    let (sets, adjacent): (Vec<Vec<usize>>, Adjacency) = match family {
        NamedKneser::Kneser { n, k } => (k_subsets(n, k), Box::new(|a, b| intersection(a, b) == 0)),
        NamedKneser::Schrijver { n, k } => {
            let stable = k_subsets(n, k)
                .into_iter()
                .filter(|s| {
                    s.iter()
                        .enumerate()
                        .all(|(i, &x)| s[i + 1..].iter().all(|&y| y - x >= 2 && y - x <= n - 2))
                })
                .collect();
            (stable, Box::new(|a, b| intersection(a, b) == 0))
        }
        NamedKneser::Circular { n, d } => (
            (0..n).map(|i| vec![i]).collect(),
            Box::new(move |a, b| {
                let diff = a[0].abs_diff(b[0]);
                d <= diff && diff <= n - d
            }),
        ),
        NamedKneser::GeneralizedKneser { n, k, s } => {
            (k_subsets(n, k), Box::new(move |a, b| intersection(a, b) <= s))
        }
        NamedKneser::Permutation { m, n, r } => {
            let mut out = Vec::new();
            for dom in k_subsets(m, r) {
                let mut img = Vec::with_capacity(r);
                let mut used = vec![false; n];
                injections(&dom, n, &mut img, &mut used, &mut out);
            }
            // Two partial permutations agree somewhere iff they share a pair.
            (
                out,
                Box::new(|a, b| !a.chunks(2).any(|p| b.chunks(2).any(|q| p == q))),
            )
        }
    };
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if adjacent(&sets[i], &sets[j]) {
                edges.push(vec![i, j]);
            }
        }
    }
    let g = Hypergraph::new(sets.len(), edges).expect("direct graph is well formed");
    (sets, g)
}

fn intersection(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

fn injections(dom: &[usize], n: usize, img: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if img.len() == dom.len() {
        out.push(dom.iter().zip(img.iter()).flat_map(|(&a, &b)| [a, b]).collect());
        return;
    }
    for b in 0..n {
        if !used[b] {
            used[b] = true;
            img.push(b);
            injections(dom, n, img, used, out);
            img.pop();
            used[b] = false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationCheck {
    pub family: NamedKneser,
    pub holds: bool,
    /// Bijection from representation-built vertices to direct vertices.
    pub witness: Option<Vec<usize>>,
}

/// Exhaustive isomorphism search between the representation-built graph
/// and the direct definition, independent of the natural map.
pub fn verify_representation(family: NamedKneser, max_vertices: usize) -> Result<RepresentationCheck> {
    let (host, pattern) = family.representation()?;
    let rep = pattern_hypergraph(&host, &PatternFamily::single(pattern)?, &PatternOptions::default())?;
    if rep.hypergraph.num_edges() > max_vertices {
        return Err(Error::cap("isomorphism check vertices", max_vertices, rep.hypergraph.num_edges()));
    }
    let built = kneser_power(&rep.hypergraph, 2, &KneserOptions::default())?.result;
    let (_, direct) = direct_graph(family);
    let witness = find_isomorphism(&built, &direct);
    Ok(RepresentationCheck {
        family,
        holds: witness.is_some(),
        witness,
    })
}

/// DIMACS edge format: `p edge n m` then 1-indexed `e u v` lines.
pub fn to_dimacs(g: &Hypergraph) -> Result<String> {
    if !g.is_uniform(2) {
        return Err(Error::NotUniform { expected: 2 });
    }
    let mut out = format!("p edge {} {}\n", g.n(), g.num_edges());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e[0] + 1, e[1] + 1));
    }
    Ok(out)
}

/// Reads the DIMACS edge format; `c` lines are comments.
pub fn from_dimacs(text: &str) -> Result<Hypergraph> {
    let bad = |line: usize, why: &str| Error::InvalidHypergraph(format!("DIMACS line {line}: {why}"));
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let no = no + 1;
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(bad(no, "duplicate header"));
                }
                if tok.next() != Some("edge") {
                    return Err(bad(no, "expected 'p edge n m'"));
                }
                let n = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(no, "bad vertex count"))?;
                let m = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(no, "bad edge count"))?;
                header = Some((n, m));
            }
            Some("e") => {
                let n = header.ok_or_else(|| bad(no, "edge before header"))?.0;
                let mut end = || -> Result<usize> {
                    let v: usize = tok.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(no, "bad endpoint"))?;
                    if v == 0 || v > n {
                        return Err(bad(no, "endpoint out of range"));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (end()?, end()?);
                edges.push(vec![u, v]);
            }
            Some(other) => return Err(bad(no, &format!("unknown line type '{other}'"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::InvalidHypergraph("DIMACS input has no header".into()))?;
    if edges.len() != m {
        return Err(Error::InvalidHypergraph(format!(
            "DIMACS header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Hypergraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kg(rep: &Hypergraph, r: usize) -> Hypergraph {
        kneser_power(rep, r, &KneserOptions::default()).unwrap().result
    }

    fn brute_kg2(rep: &Hypergraph) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for a in 0..rep.num_edges() {
            for b in a + 1..rep.num_edges() {
                if rep.edge(a).iter().all(|v| !rep.edge(b).contains(v)) {
                    out.push(vec![a, b]);
                }
            }
        }
        out
    }

    #[test]
    fn petersen_from_pairs() {
        let rep = build_named_family(NamedFamily::CompleteUniform { n: 5, s: 2 }).unwrap();
        let g = kg(&rep, 2);
        assert_eq!((g.n(), g.num_edges()), (10, 15));
        assert_eq!(g.edges(), brute_kg2(&rep).as_slice());
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn copies_never_adjacent() {
        let rep = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(kg(&rep, 2).num_edges(), 0);
    }

    #[test]
    fn three_disjoint_edges() {
        let rep = build_named_family(NamedFamily::Matching { r: 3 }).unwrap();
        let h = kg(&rep, 3);
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_small_r_and_caps() {
        let rep = build_named_family(NamedFamily::Matching { r: 3 }).unwrap();
        assert!(kneser_power(&rep, 1, &KneserOptions::default()).is_err());
        let tight = KneserOptions {
            max_rep_edges_hyper: 2,
            ..KneserOptions::default()
        };
        assert!(kneser_power(&rep, 3, &tight).unwrap_err().is_cap());
        let tiny = KneserOptions {
            max_result_edges: 1,
            ..KneserOptions::default()
        };
        let rep4 = build_named_family(NamedFamily::Matching { r: 4 }).unwrap();
        assert!(kneser_power(&rep4, 2, &tiny).unwrap_err().is_cap());
    }

    #[test]
    fn invariants_on_larger_ids() {
        // More than 64 representation edges exercises multi-word rows.
        let rep = build_named_family(NamedFamily::Matching { r: 70 }).unwrap();
        let g = kg(&rep, 2);
        assert_eq!(g.num_edges(), 70 * 69 / 2);
        let rep = build_named_family(NamedFamily::CompleteUniform { n: 7, s: 2 }).unwrap();
        let h = kg(&rep, 3);
        for e in h.edges() {
            assert_eq!(e.len(), 3);
            for i in 0..3 {
                for j in i + 1..3 {
                    assert!(rep.edge(e[i]).iter().all(|v| !rep.edge(e[j]).contains(v)));
                }
            }
        }
        // Seven points, three disjoint pairs: 7!/(2^3 3! 1!) = 105.
        assert_eq!(h.num_edges(), 105);
        let g = kg(&rep, 2);
        for v in 0..rep.num_edges() {
            let disjoint = (0..rep.num_edges())
                .filter(|&u| rep.edge(u).iter().all(|x| !rep.edge(v).contains(x)))
                .count();
            assert_eq!(g.degree(v), disjoint);
        }
    }

    #[test]
    fn isolated_rep_vertices_do_not_matter() {
        let rep = build_named_family(NamedFamily::Cycle { n: 6 }).unwrap();
        assert_eq!(kg(&rep, 2), kg(&rep.with_isolated(4), 2));
        assert_eq!(kg(&rep, 3), kg(&rep.with_isolated(2), 3));
    }

    #[test]
    fn named_instances() {
        let o = PatternOptions::default();
        let k52 = build_named_kneser(NamedKneser::Kneser { n: 5, k: 2 }, &o).unwrap();
        let petersen = kg(&build_named_family(NamedFamily::CompleteUniform { n: 5, s: 2 }).unwrap(), 2);
        assert!(find_isomorphism(&k52.instance.result, &petersen).is_some());

        let sg = build_named_kneser(NamedKneser::Schrijver { n: 6, k: 2 }, &o).unwrap();
        assert_eq!(sg.instance.result.n(), 9);

        let circ = build_named_kneser(NamedKneser::Circular { n: 5, d: 2 }, &o).unwrap();
        let c5 = build_named_family(NamedFamily::Cycle { n: 5 }).unwrap();
        assert!(find_isomorphism(&circ.instance.result, &c5).is_some());

        for fam in [
            NamedKneser::Kneser { n: 6, k: 3 },
            NamedKneser::Schrijver { n: 7, k: 3 },
            NamedKneser::Circular { n: 7, d: 3 },
            NamedKneser::GeneralizedKneser { n: 5, k: 3, s: 1 },
            NamedKneser::GeneralizedKneser { n: 4, k: 2, s: 0 },
            NamedKneser::Permutation { m: 3, n: 3, r: 2 },
            NamedKneser::Permutation { m: 2, n: 3, r: 2 },
        ] {
            let b = build_named_kneser(fam, &o).unwrap();
            assert!(is_isomorphism(&b.instance.result, &b.direct, &b.witness), "{fam:?}");
        }
    }

    #[test]
    fn verify_representation_examples() {
        let c = verify_representation(NamedKneser::Kneser { n: 5, k: 2 }, 16).unwrap();
        assert!(c.holds);
        let p = verify_representation(NamedKneser::Permutation { m: 2, n: 2, r: 2 }, 16).unwrap();
        assert!(p.holds);
        let (_, g) = direct_graph(NamedKneser::Permutation { m: 2, n: 2, r: 2 });
        assert_eq!((g.n(), g.num_edges()), (2, 1));
        let gk = verify_representation(NamedKneser::GeneralizedKneser { n: 4, k: 2, s: 0 }, 16).unwrap();
        assert!(gk.holds);
        let big = verify_representation(NamedKneser::Kneser { n: 7, k: 3 }, 16);
        assert!(big.unwrap_err().is_cap());
    }

    #[test]
    fn parameter_errors() {
        assert!(NamedKneser::Kneser { n: 3, k: 2 }.check().is_err());
        assert!(NamedKneser::Circular { n: 5, d: 3 }.check().is_err());
        assert!(NamedKneser::GeneralizedKneser { n: 4, k: 2, s: 2 }.check().is_err());
        assert!(NamedKneser::Permutation { m: 1, n: 3, r: 2 }.check().is_err());
        let get = |p: &str| if p == "n" { Some(5) } else { None };
        assert!(NamedKneser::from_tag("kneser", get).is_err());
        assert!(NamedKneser::from_tag("nope", get).is_err());
        let get = |p: &str| match p {
            "n" => Some(5),
            "k" => Some(2),
            _ => None,
        };
        assert_eq!(NamedKneser::from_tag("kneser", get).unwrap(), NamedKneser::Kneser { n: 5, k: 2 });
    }

    #[test]
    fn dimacs_round_trip() {
        let g = kg(&build_named_family(NamedFamily::CompleteUniform { n: 5, s: 2 }).unwrap(), 2);
        let text = to_dimacs(&g).unwrap();
        assert!(text.starts_with("p edge 10 15\n"));
        assert!(text.lines().nth(1).unwrap().starts_with("e "));
        assert_eq!(from_dimacs(&text).unwrap(), g);
        assert!(from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(from_dimacs("p edge 2 2\ne 1 2\n").is_err());
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(to_dimacs(&h).is_err());
    }
}
