//! Subhypergraph occurrences of a pattern family inside a host, and the
//! pattern hypergraph `(H choose L)` whose vertices are host hyperedge ids.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperstruct::{Hypergraph, NamedFamily};

pub const DEFAULT_MAX_OCCURRENCES: usize = 2_000_000;
pub const DEFAULT_MAX_HOST_EDGES: usize = 4096;

/// A finite list of patterns, none with an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Hypergraph>", into = "Vec<Hypergraph>")]
pub struct PatternFamily {
    patterns: Vec<Hypergraph>,
}

impl TryFrom<Vec<Hypergraph>> for PatternFamily {
    type Error = Error;

    fn try_from(v: Vec<Hypergraph>) -> Result<Self> {
        PatternFamily::new(v)
    }
}

impl From<PatternFamily> for Vec<Hypergraph> {
    fn from(f: PatternFamily) -> Self {
        f.patterns
    }
}

impl PatternFamily {
    pub fn new(patterns: Vec<Hypergraph>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidParameter("pattern family is empty".into()));
        }
        for (i, p) in patterns.iter().enumerate() {
            if p.num_edges() == 0 {
                return Err(Error::InvalidParameter(format!("pattern {i} has no hyperedge")));
            }
            if !p.isolated_vertices().is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "pattern {i} has an isolated vertex"
                )));
            }
        }
        Ok(PatternFamily { patterns })
    }

    pub fn single(pattern: Hypergraph) -> Result<Self> {
        PatternFamily::new(vec![pattern])
    }

    /// Single named pattern; isolated vertices are dropped first.
    pub fn named(kind: NamedFamily) -> Result<Self> {
        PatternFamily::single(kind.build()?.strip_isolated())
    }

    pub fn patterns(&self) -> &[Hypergraph] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PatternOccurrence {
    #[serde(rename = "pattern")]
    pub pattern_index: usize,
    /// Sorted host hyperedge ids.
    #[serde(rename = "edges")]
    pub edge_ids: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternOptions {
    pub max_occurrences: usize,
    pub max_host_edges: usize,
}

impl Default for PatternOptions {
    fn default() -> Self {
        PatternOptions {
            max_occurrences: DEFAULT_MAX_OCCURRENCES,
            max_host_edges: DEFAULT_MAX_HOST_EDGES,
        }
    }
}

/// Every subhypergraph of `host` isomorphic to a member of `family`, one per
/// distinct edge-id set, ordered lexicographically by edge-id set.
pub fn enumerate_occurrences(
    host: &Hypergraph,
    family: &PatternFamily,
    opts: &PatternOptions,
) -> Result<Vec<PatternOccurrence>> {
    if host.num_edges() > opts.max_host_edges {
        return Err(Error::cap("host hyperedges", opts.max_host_edges, host.num_edges()));
    }
    let mut found: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (idx, pattern) in family.patterns().iter().enumerate() {
        let mut matcher = Matcher::new(host, pattern);
        let mut sink = |ids: Vec<usize>| -> Result<()> {
            found.entry(ids).or_insert(idx);
            if found.len() > opts.max_occurrences {
                return Err(Error::cap("pattern occurrences", opts.max_occurrences, found.len()));
            }
            Ok(())
        };
        matcher.search(0, &mut sink)?;
    }
    Ok(found
        .into_iter()
        .map(|(edge_ids, pattern_index)| PatternOccurrence {
            pattern_index,
            edge_ids,
        })
        .collect())
}

/// Edge-by-edge backtracking embedding of one pattern into the host.
struct Matcher<'a> {
    host: &'a Hypergraph,
    host_inc: Vec<Vec<usize>>,
    pattern: &'a Hypergraph,
    order: Vec<usize>,
    pattern_degree: Vec<usize>,
    p2h: Vec<usize>,
    host_vertex_used: Vec<bool>,
    host_edge_used: Vec<bool>,
    chosen: Vec<usize>,
}

const UNMAPPED: usize = usize::MAX;

impl<'a> Matcher<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Hypergraph) -> Self {
        let pattern_degree = pattern.degrees();
        Matcher {
            host,
            host_inc: host.incidence(),
            pattern,
            order: edge_order(pattern, &pattern_degree),
            pattern_degree,
            p2h: vec![UNMAPPED; pattern.n()],
            host_vertex_used: vec![false; host.n()],
            host_edge_used: vec![false; host.num_edges()],
            chosen: Vec::with_capacity(pattern.num_edges()),
        }
    }

    fn search(&mut self, k: usize, sink: &mut dyn FnMut(Vec<usize>) -> Result<()>) -> Result<()> {
        if k == self.order.len() {
            let mut ids = self.chosen.clone();
            ids.sort_unstable();
            return sink(ids);
        }
        let pe: Vec<usize> = self.pattern.edge(self.order[k]).to_vec();
        let anchor = pe.iter().copied().find(|&u| self.p2h[u] != UNMAPPED);
        let candidates: Vec<usize> = match anchor {
            Some(u) => self.host_inc[self.p2h[u]].clone(),
            None => (0..self.host.num_edges()).collect(),
        };
        for h in candidates {
            if self.host_edge_used[h] || self.host.edge(h).len() != pe.len() {
                continue;
            }
            let he = self.host.edge(h);
            if pe
                .iter()
                .any(|&u| self.p2h[u] != UNMAPPED && he.binary_search(&self.p2h[u]).is_err())
            {
                continue;
            }
            let mapped_images: Vec<usize> = pe
                .iter()
                .filter(|&&u| self.p2h[u] != UNMAPPED)
                .map(|&u| self.p2h[u])
                .collect();
            let free_h: Vec<usize> = he
                .iter()
                .copied()
                .filter(|w| !mapped_images.contains(w))
                .collect();
            if free_h.iter().any(|&w| self.host_vertex_used[w]) {
                continue;
            }
            let free_p: Vec<usize> = pe.iter().copied().filter(|&u| self.p2h[u] == UNMAPPED).collect();
            if free_p.len() != free_h.len() {
                continue;
            }
            // Vertices private to this pattern edge are interchangeable, so
            // only the shared ones need every placement.
            let (shared, private): (Vec<usize>, Vec<usize>) =
                free_p.iter().partition(|&&u| self.pattern_degree[u] > 1);
            self.host_edge_used[h] = true;
            self.chosen.push(h);
            self.place(&shared, 0, &private, &free_h, k, sink)?;
            self.chosen.pop();
            self.host_edge_used[h] = false;
        }
        Ok(())
    }

    fn place(
        &mut self,
        shared: &[usize],
        i: usize,
        private: &[usize],
        free_h: &[usize],
        k: usize,
        sink: &mut dyn FnMut(Vec<usize>) -> Result<()>,
    ) -> Result<()> {
        if i == shared.len() {
            let rest: Vec<usize> = free_h
                .iter()
                .copied()
                .filter(|&w| !self.host_vertex_used[w])
                .collect();
            for (&u, &w) in private.iter().zip(&rest) {
                self.p2h[u] = w;
                self.host_vertex_used[w] = true;
            }
            let r = self.search(k + 1, sink);
            for (&u, &w) in private.iter().zip(&rest) {
                self.p2h[u] = UNMAPPED;
                self.host_vertex_used[w] = false;
            }
            return r;
        }
        let u = shared[i];
        for &w in free_h {
            if self.host_vertex_used[w] {
                continue;
            }
            self.p2h[u] = w;
            self.host_vertex_used[w] = true;
            let r = self.place(shared, i + 1, private, free_h, k, sink);
            self.p2h[u] = UNMAPPED;
            self.host_vertex_used[w] = false;
            r?;
        }
        Ok(())
    }
}

/// Pattern edges by descending size then descending incidence, preferring at
/// each step an edge that touches already placed vertices.
fn edge_order(pattern: &Hypergraph, degree: &[usize]) -> Vec<usize> {
    let m = pattern.num_edges();
    let weight = |id: usize| -> (usize, usize) {
        let e = pattern.edge(id);
        (e.len(), e.iter().map(|&v| degree[v]).sum())
    };
    let mut placed = vec![false; pattern.n()];
    let mut used = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let best = (0..m)
            .filter(|&id| !used[id])
            .max_by_key(|&id| {
                let touch = pattern.edge(id).iter().filter(|&&v| placed[v]).count();
                let (size, inc) = weight(id);
                (touch > 0, size, inc, std::cmp::Reverse(id))
            })
            .expect("unused edge remains");
        used[best] = true;
        for &v in pattern.edge(best) {
            placed[v] = true;
        }
        order.push(best);
    }
    order
}

/// `(H choose L)`: vertex set `E(host)`, one hyperedge per distinct
/// occurrence edge-id set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternHypergraph {
    pub hypergraph: Hypergraph,
    /// Pattern index of each hyperedge.
    pub pattern_of: Vec<usize>,
}

pub fn pattern_hypergraph(
    host: &Hypergraph,
    family: &PatternFamily,
    opts: &PatternOptions,
) -> Result<PatternHypergraph> {
    let occ = enumerate_occurrences(host, family, opts)?;
    let pattern_of = occ.iter().map(|o| o.pattern_index).collect();
    let hypergraph = Hypergraph::new(host.num_edges(), occ.into_iter().map(|o| o.edge_ids).collect())?;
    Ok(PatternHypergraph {
        hypergraph,
        pattern_of,
    })
}

/// Occurrence list as JSON lines: `{"pattern": int, "edges": [int,...]}`.
pub fn occurrences_to_json_lines(occ: &[PatternOccurrence]) -> String {
    let mut out = String::new();
    for o in occ {
        out.push_str(&serde_json::to_string(o).expect("occurrence serialization cannot fail"));
        out.push('\n');
    }
    out
}

/// Isomorphism test. With `keep_isolated == false` both sides are compared
/// after dropping isolated vertices.
pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph, keep_isolated: bool) -> bool {
    if keep_isolated {
        find_isomorphism(a, b).is_some()
    } else {
        find_isomorphism(&a.strip_isolated(), &b.strip_isolated()).is_some()
    }
}

/// A vertex bijection `map` with `{map[v] : v in e}` ranging over the
/// hyperedge multiset of `b` as `e` ranges over that of `a`, if one exists.
pub fn find_isomorphism(a: &Hypergraph, b: &Hypergraph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.num_edges() != b.num_edges() {
        return None;
    }
    let da = a.degrees();
    let db = b.degrees();
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut za: Vec<usize> = a.edges().iter().map(Vec::len).collect();
    let mut zb: Vec<usize> = b.edges().iter().map(Vec::len).collect();
    za.sort_unstable();
    zb.sort_unstable();
    if za != zb {
        return None;
    }

    let n = a.n();
    let ma = a.multiplicities();
    let mb: HashMap<Vec<usize>, usize> = b.multiplicities().into_iter().collect();
    let codeg = |h: &Hypergraph| -> Vec<Vec<u32>> {
        let mut c = vec![vec![0u32; n]; n];
        for e in h.edges() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    c[u][v] += 1;
                    c[v][u] += 1;
                }
            }
        }
        c
    };
    let ca = codeg(a);
    let cb = codeg(b);

    // Vertex order: greedily maximise links to already ordered vertices.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut in_order = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !in_order[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| ca[u][v] > 0).count();
                (links, da[v], std::cmp::Reverse(v))
            })
            .expect("vertex remains");
        in_order[v] = true;
        order.push(v);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Distinct member sets of `a`, bucketed by the step at which they become
    // fully mapped.
    let mut completes: Vec<Vec<(Vec<usize>, usize)>> = vec![Vec::new(); n];
    for (e, &mult) in &ma {
        let step = e.iter().map(|&v| pos[v]).max().expect("nonempty edge");
        completes[step].push((e.clone(), mult));
    }

    let mut map = vec![UNMAPPED; n];
    let mut used = vec![false; n];
    if iso_extend(0, &order, &completes, &da, &db, &ca, &cb, &mb, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    step: usize,
    order: &[usize],
    completes: &[Vec<(Vec<usize>, usize)>],
    da: &[usize],
    db: &[usize],
    ca: &[Vec<u32>],
    cb: &[Vec<u32>],
    mb: &HashMap<Vec<usize>, usize>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if step == order.len() {
        return true;
    }
    let v = order[step];
    for w in 0..map.len() {
        if used[w] || db[w] != da[v] {
            continue;
        }
        if order[..step].iter().any(|&u| ca[u][v] != cb[map[u]][w]) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        let ok = completes[step].iter().all(|(e, mult)| {
            let mut img: Vec<usize> = e.iter().map(|&x| map[x]).collect();
            img.sort_unstable();
            mb.get(&img) == Some(mult)
        });
        if ok && iso_extend(step + 1, order, completes, da, db, ca, cb, mb, map, used) {
            return true;
        }
        map[v] = UNMAPPED;
        used[w] = false;
    }
    false
}

/// Checks that `map` is an isomorphism from `a` onto `b`.
pub fn is_isomorphism(a: &Hypergraph, b: &Hypergraph, map: &[usize]) -> bool {
    if a.n() != b.n() || a.num_edges() != b.num_edges() || map.len() != a.n() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &w in map {
        if w >= b.n() || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    let mut img: Vec<Vec<usize>> = a
        .edges()
        .iter()
        .map(|e| {
            let mut x: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            x.sort_unstable();
            x
        })
        .collect();
    let mut target = b.edges().to_vec();
    img.sort();
    target.sort();
    img == target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstruct::{build_multigraph, build_named_family};

    fn fam(kind: NamedFamily) -> PatternFamily {
        PatternFamily::named(kind).unwrap()
    }

    fn host(kind: NamedFamily) -> Hypergraph {
        build_named_family(kind).unwrap()
    }

    /// Brute force: every edge subset of the pattern's size whose spanned
    /// subhypergraph is isomorphic to the pattern.
    fn brute_occurrences(host: &Hypergraph, pattern: &Hypergraph) -> Vec<Vec<usize>> {
        let m = host.num_edges();
        let k = pattern.num_edges();
        let mut out = Vec::new();
        for mask in 0u64..(1 << m) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let ids: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let sub = host.spanning_subgraph(&ids).strip_isolated();
            if find_isomorphism(&sub, pattern).is_some() {
                out.push(ids);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn family_validation() {
        let iso = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        assert!(PatternFamily::single(iso).is_err());
        assert!(PatternFamily::single(Hypergraph::empty(0)).is_err());
        assert!(PatternFamily::new(vec![]).is_err());
    }

    #[test]
    fn occurrence_examples() {
        let p2 = fam(NamedFamily::Path { len: 2 });
        let k4 = host(NamedFamily::Complete { n: 4 });
        let occ = enumerate_occurrences(&k4, &p2, &PatternOptions::default()).unwrap();
        assert_eq!(occ.len(), 12);
        let ids: Vec<Vec<usize>> = occ.iter().map(|o| o.edge_ids.clone()).collect();
        assert_eq!(ids, brute_occurrences(&k4, &p2.patterns()[0]));

        let c5 = host(NamedFamily::Cycle { n: 5 });
        let m2 = fam(NamedFamily::Matching { r: 2 });
        let occ = enumerate_occurrences(&c5, &m2, &PatternOptions::default()).unwrap();
        assert_eq!(occ.len(), 5);

        let tri = host(NamedFamily::Cycle { n: 3 });
        let doubled = build_multigraph(&tri, &[2, 2, 2]).unwrap();
        let k3 = fam(NamedFamily::Complete { n: 3 });
        let occ = enumerate_occurrences(&doubled, &k3, &PatternOptions::default()).unwrap();
        assert_eq!(occ.len(), 8);
        for o in &occ {
            let classes: Vec<usize> = o.edge_ids.iter().map(|&id| id / 2).collect();
            assert_eq!(classes, vec![0, 1, 2]);
        }
    }

    #[test]
    fn occurrences_agree_with_brute_force() {
        let hosts = [
            host(NamedFamily::Complete { n: 5 }),
            host(NamedFamily::CompleteBipartite { m: 2, n: 3 }),
            host(NamedFamily::CompleteUniform { n: 5, s: 3 }),
            build_multigraph(&host(NamedFamily::Cycle { n: 4 }), &[2, 1, 2, 1]).unwrap(),
        ];
        let patterns = [
            host(NamedFamily::Path { len: 2 }),
            host(NamedFamily::Path { len: 3 }),
            host(NamedFamily::Matching { r: 2 }),
            host(NamedFamily::Cycle { n: 4 }),
            host(NamedFamily::Complete { n: 3 }),
            Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap(),
            Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap(),
        ];
        for h in &hosts {
            for p in &patterns {
                let f = PatternFamily::single(p.clone()).unwrap();
                let got: Vec<Vec<usize>> = enumerate_occurrences(h, &f, &PatternOptions::default())
                    .unwrap()
                    .into_iter()
                    .map(|o| o.edge_ids)
                    .collect();
                assert_eq!(got, brute_occurrences(h, p), "host {h:?} pattern {p:?}");
            }
        }
    }

    #[test]
    fn pattern_hypergraph_examples() {
        let c5 = host(NamedFamily::Cycle { n: 5 });
        let ph = pattern_hypergraph(&c5, &fam(NamedFamily::Matching { r: 2 }), &PatternOptions::default()).unwrap();
        assert_eq!((ph.hypergraph.n(), ph.hypergraph.num_edges()), (5, 5));
        assert!(ph.hypergraph.is_uniform(2));

        let m4 = host(NamedFamily::Matching { r: 4 });
        let ph = pattern_hypergraph(&m4, &fam(NamedFamily::Matching { r: 2 }), &PatternOptions::default()).unwrap();
        assert_eq!((ph.hypergraph.n(), ph.hypergraph.num_edges()), (4, 6));

        let k4 = host(NamedFamily::Complete { n: 4 });
        let ph = pattern_hypergraph(&k4, &fam(NamedFamily::Complete { n: 3 }), &PatternOptions::default()).unwrap();
        assert_eq!((ph.hypergraph.n(), ph.hypergraph.num_edges()), (6, 4));
        assert!(ph.hypergraph.is_uniform(3));
    }

    #[test]
    fn uncovered_host_edges_become_isolated() {
        // P3 host with a K3 pattern: nothing matches, all 3 edges isolated.
        let p3 = host(NamedFamily::Path { len: 3 });
        let ph = pattern_hypergraph(&p3, &fam(NamedFamily::Complete { n: 3 }), &PatternOptions::default()).unwrap();
        assert_eq!(ph.hypergraph.n(), 3);
        assert_eq!(ph.hypergraph.num_edges(), 0);
    }

    #[test]
    fn duplicate_patterns_collapse() {
        let p2 = host(NamedFamily::Path { len: 2 });
        let f = PatternFamily::new(vec![p2.clone(), p2]).unwrap();
        let k4 = host(NamedFamily::Complete { n: 4 });
        let occ = enumerate_occurrences(&k4, &f, &PatternOptions::default()).unwrap();
        assert_eq!(occ.len(), 12);
        assert!(occ.iter().all(|o| o.pattern_index == 0));
    }

    #[test]
    fn cap_is_an_error() {
        let k6 = host(NamedFamily::Complete { n: 6 });
        let opts = PatternOptions {
            max_occurrences: 10,
            ..PatternOptions::default()
        };
        let err = enumerate_occurrences(&k6, &fam(NamedFamily::Path { len: 2 }), &opts).unwrap_err();
        assert!(err.is_cap());
        let opts = PatternOptions {
            max_host_edges: 5,
            ..PatternOptions::default()
        };
        assert!(enumerate_occurrences(&k6, &fam(NamedFamily::Path { len: 2 }), &opts)
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn json_lines_format() {
        let occ = vec![PatternOccurrence {
            pattern_index: 0,
            edge_ids: vec![1, 3],
        }];
        assert_eq!(occurrences_to_json_lines(&occ), "{\"pattern\":0,\"edges\":[1,3]}\n");
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = host(NamedFamily::Cycle { n: 4 });
        let relabeled = c4.relabel(&[2, 0, 3, 1]).unwrap();
        let map = find_isomorphism(&c4, &relabeled).unwrap();
        assert!(is_isomorphism(&c4, &relabeled, &map));
        assert!(!are_isomorphic(
            &host(NamedFamily::Path { len: 2 }),
            &host(NamedFamily::Matching { r: 2 }),
            false
        ));
        // Isolated vertices matter only when kept.
        let a = c4.with_isolated(2);
        assert!(are_isomorphic(&a, &c4, false));
        assert!(!are_isomorphic(&a, &c4, true));
        // Multiplicity matters.
        let d1 = build_multigraph(&host(NamedFamily::Path { len: 2 }), &[2, 1]).unwrap();
        let d2 = build_multigraph(&host(NamedFamily::Path { len: 2 }), &[1, 2]).unwrap();
        let d3 = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![1, 2]]).unwrap();
        assert!(are_isomorphic(&d1, &d2, true));
        assert!(are_isomorphic(&d2, &d3, true));
        let c6 = host(NamedFamily::Cycle { n: 6 });
        let two_triangles = Hypergraph::new(
            6,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4], vec![4, 5], vec![3, 5]],
        )
        .unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles, true));
    }

    #[test]
    fn occurrence_count_is_relabel_invariant() {
        let h = Hypergraph::new(
            6,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0], vec![0, 2], vec![4, 5], vec![2, 4]],
        )
        .unwrap();
        let perm = [5, 3, 1, 0, 2, 4];
        let r = h.relabel(&perm).unwrap();
        for f in [
            fam(NamedFamily::Path { len: 2 }),
            fam(NamedFamily::Complete { n: 3 }),
            fam(NamedFamily::Matching { r: 2 }),
            fam(NamedFamily::Cycle { n: 4 }),
        ] {
            let a = enumerate_occurrences(&h, &f, &PatternOptions::default()).unwrap();
            let b = enumerate_occurrences(&r, &f, &PatternOptions::default()).unwrap();
            assert_eq!(a, b);
        }
    }
}
