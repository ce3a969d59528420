use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::engine::{Engine, Rule};
use super::{interval_ordering, AlternatingColoring, Color, ReportMode, TuranQuantity, TuranReport, TuranWitness};
use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::exactsolve::max_independent_set;
use crate::hyperstruct::{Hypergraph, LinearOrdering};
use crate::patterns::{enumerate_occurrences, PatternFamily, PatternOccurrence, PatternOptions};

pub const DEFAULT_MAX_EXACT_EDGES: usize = 24;
pub const DEFAULT_MAX_ORDERING_EDGES: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Exact within the caps, heuristic beyond them.
    #[default]
    Auto,
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranOptions {
    pub mode: SearchMode,
    /// Host hyperedge cap for exact `ex` and for `ex_alt` at a fixed ordering.
    pub max_exact_edges: usize,
    /// Host hyperedge cap for the exhaustive ordering scan.
    pub max_ordering_edges: usize,
    pub seed: u64,
    /// Random orderings (or greedy restarts) tried in heuristic mode.
    pub restarts: usize,
    pub pattern: PatternOptions,
}

impl Default for TuranOptions {
    fn default() -> Self {
        TuranOptions {
            mode: SearchMode::Auto,
            max_exact_edges: DEFAULT_MAX_EXACT_EDGES,
            max_ordering_edges: DEFAULT_MAX_ORDERING_EDGES,
            seed: 0,
            restarts: 200,
            pattern: PatternOptions::default(),
        }
    }
}

/// Occurrences of a pattern family in a host as bitsets over host hyperedge
/// ids. A set of hyperedges is F-free iff it contains no mask.
#[derive(Clone, Debug)]
pub struct OccurrenceIndex {
    pub num_edges: usize,
    pub occurrences: Vec<PatternOccurrence>,
    pub masks: Vec<Bits>,
}

impl OccurrenceIndex {
    pub fn build(host: &Hypergraph, family: &PatternFamily, opts: &PatternOptions) -> Result<Self> {
        if host.num_edges() > bits::MAX_BITS {
            return Err(Error::cap("host hyperedges for Turan search", bits::MAX_BITS, host.num_edges()));
        }
        let occurrences = enumerate_occurrences(host, family, opts)?;
        let masks = occurrences.iter().map(|o| bits::from_indices(o.edge_ids.iter().copied())).collect();
        Ok(OccurrenceIndex {
            num_edges: host.num_edges(),
            occurrences,
            masks,
        })
    }

    pub fn is_free(&self, set: Bits) -> bool {
        self.masks.iter().all(|&m| !bits::is_subset(m, set))
    }
}

pub fn turan_number(host: &Hypergraph, family: &PatternFamily, opts: &TuranOptions) -> Result<TuranReport> {
    let idx = OccurrenceIndex::build(host, family, &opts.pattern)?;
    turan_from_index(&idx, opts)
}

pub(crate) fn turan_from_index(idx: &OccurrenceIndex, opts: &TuranOptions) -> Result<TuranReport> {
    let m = idx.num_edges;
    let exact = match opts.mode {
        SearchMode::Exact if m > opts.max_exact_edges => {
            return Err(Error::cap("host hyperedges for exact ex", opts.max_exact_edges, m))
        }
        SearchMode::Exact => true,
        SearchMode::Auto => m <= opts.max_exact_edges,
        SearchMode::Heuristic => false,
    };
    let (edges, mode) = if exact {
        let edges = exact_free_set(idx);
        // Same value as the independence number of the pattern hypergraph.
        let alpha = max_independent_set(m, &idx.masks).len();
        assert_eq!(edges.len(), alpha, "subset search and independence search disagree");
        (edges, ReportMode::Exact)
    } else {
        (greedy_free_set(idx, opts.seed, opts.restarts), ReportMode::LowerBound)
    };
    Ok(TuranReport {
        quantity: TuranQuantity::Ex,
        value: edges.len(),
        mode,
        witness: TuranWitness::Extremal { edges },
        orderings_examined: None,
    })
}

/// Branch and bound over hyperedge ids: include or exclude each id in turn,
/// including only while no occurrence is completed.
fn exact_free_set(idx: &OccurrenceIndex) -> Vec<usize> {
    struct St<'a> {
        m: usize,
        through: Vec<Vec<Bits>>,
        idx: &'a OccurrenceIndex,
        best: Bits,
        best_size: usize,
    }
    fn rec(st: &mut St, i: usize, chosen: Bits, size: usize) {
        if size + (st.m - i) <= st.best_size {
            return;
        }
        if i == st.m {
            st.best = chosen;
            st.best_size = size;
            return;
        }
        let with = chosen | bits::bit(i);
        if st.through[i].iter().all(|&o| !bits::is_subset(o, with)) {
            rec(st, i + 1, with, size + 1);
        }
        rec(st, i + 1, chosen, size);
    }
    let mut through = vec![Vec::new(); idx.num_edges];
    for &mask in &idx.masks {
        for e in bits::iter(mask) {
            through[e].push(mask);
        }
    }
    let mut st = St {
        m: idx.num_edges,
        through,
        idx,
        best: 0,
        best_size: 0,
    };
    rec(&mut st, 0, 0, 0);
    debug_assert!(st.idx.is_free(st.best));
    bits::to_vec(st.best)
}

fn greedy_free_set(idx: &OccurrenceIndex, seed: u64, restarts: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..idx.num_edges).collect();
    let mut best: Bits = 0;
    for round in 0..restarts.max(1) {
        if round > 0 {
            order.shuffle(&mut rng);
        }
        let mut set: Bits = 0;
        for &e in &order {
            if idx.is_free(set | bits::bit(e)) {
                set |= bits::bit(e);
            }
        }
        if bits::count(set) > bits::count(best) {
            best = set;
        }
    }
    bits::to_vec(best)
}

/// `ex_alt(H, F, sigma)` (both color classes F-free) or, with `strong`,
/// `ex_salt(H, F, sigma)` (at least one class F-free).
pub fn ex_alt_sigma(
    host: &Hypergraph,
    family: &PatternFamily,
    sigma: &LinearOrdering,
    strong: bool,
    opts: &TuranOptions,
) -> Result<TuranReport> {
    let idx = OccurrenceIndex::build(host, family, &opts.pattern)?;
    ex_alt_sigma_from_index(&idx, sigma, strong, opts)
}

pub(crate) fn ex_alt_sigma_from_index(
    idx: &OccurrenceIndex,
    sigma: &LinearOrdering,
    strong: bool,
    opts: &TuranOptions,
) -> Result<TuranReport> {
    let m = idx.num_edges;
    if sigma.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            actual: sigma.len(),
        });
    }
    if m > opts.max_exact_edges {
        return Err(Error::cap("host hyperedges for alternating search", opts.max_exact_edges, m));
    }
    let (value, coloring) = alternating_at(idx, sigma, strong, None);
    Ok(TuranReport {
        quantity: quantity(strong),
        value,
        mode: ReportMode::Exact,
        witness: TuranWitness::Alternating { coloring },
        orderings_examined: None,
    })
}

fn quantity(strong: bool) -> TuranQuantity {
    if strong {
        TuranQuantity::ExSalt
    } else {
        TuranQuantity::ExAlt
    }
}

fn alternating_at(
    idx: &OccurrenceIndex,
    sigma: &LinearOrdering,
    strong: bool,
    target: Option<usize>,
) -> (usize, AlternatingColoring) {
    let rule = if strong { Rule::OneSide } else { Rule::Free };
    let mut engine = Engine::new(sigma.sequence(), &idx.masks, rule);
    if let Some(t) = target {
        engine = engine.with_target(t);
    }
    let out = engine.run();
    let colored = out
        .picks
        .iter()
        .enumerate()
        .map(|(j, &p)| (sigma.at(p), if j % 2 == 0 { Color::Red } else { Color::Blue }))
        .collect();
    (
        out.best,
        AlternatingColoring {
            ordering: sigma.clone(),
            colored,
        },
    )
}

/// Minimum of `ex_alt` (or `ex_salt`) over all host orderings. Exact mode
/// scans every ordering up to reversal; heuristic mode tries interval
/// orderings, the identity and seeded random orderings and reports an upper
/// bound unless the value meets the floor `ex` (resp. `ex + 1`), in which
/// case it is exact.
pub fn ex_alt_min(host: &Hypergraph, family: &PatternFamily, strong: bool, opts: &TuranOptions) -> Result<TuranReport> {
    let idx = OccurrenceIndex::build(host, family, &opts.pattern)?;
    let m = idx.num_edges;
    if m > opts.max_exact_edges {
        return Err(Error::cap("host hyperedges for alternating search", opts.max_exact_edges, m));
    }
    let exhaustive = match opts.mode {
        SearchMode::Exact if m > opts.max_ordering_edges => {
            return Err(Error::cap("host hyperedges for ordering scan", opts.max_ordering_edges, m))
        }
        SearchMode::Exact => true,
        SearchMode::Auto => m <= opts.max_ordering_edges,
        SearchMode::Heuristic => false,
    };
    let ex = turan_from_index(&idx, opts)?.value;
    // ex_alt >= ex and ex_salt >= min(ex + 1, |E|) at every ordering.
    let floor = if strong { (ex + 1).min(m) } else { ex };

    let mut best: Option<(usize, AlternatingColoring)> = None;
    let mut examined = 0u64;
    let mut consider = |sigma: LinearOrdering, best: &mut Option<(usize, AlternatingColoring)>| {
        examined += 1;
        let target = best.as_ref().map(|b| b.0);
        let (v, c) = alternating_at(&idx, &sigma, strong, target);
        if target.is_none_or(|t| v < t) {
            *best = Some((v, c));
        }
        best.as_ref().is_some_and(|b| b.0 <= floor)
    };

    if exhaustive {
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            if m < 2 || perm[0] < perm[m - 1] {
                let sigma = LinearOrdering::new(perm.clone())?;
                if consider(sigma, &mut best) {
                    break;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    } else {
        let mut candidates = Vec::new();
        if host.is_uniform(2) {
            candidates.push(interval_ordering(host, true)?);
            candidates.push(interval_ordering(host, false)?);
        }
        candidates.push(LinearOrdering::identity(m));
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut perm: Vec<usize> = (0..m).collect();
        for _ in 0..opts.restarts {
            perm.shuffle(&mut rng);
            candidates.push(LinearOrdering::new(perm.clone())?);
        }
        for sigma in candidates {
            if consider(sigma, &mut best) {
                break;
            }
        }
    }
    let (value, coloring) = best.expect("at least one ordering examined");
    let mode = if exhaustive || value <= floor {
        ReportMode::Exact
    } else {
        ReportMode::UpperBound
    };
    Ok(TuranReport {
        quantity: quantity(strong),
        value,
        mode,
        witness: TuranWitness::Alternating { coloring },
        orderings_examined: Some(examined),
    })
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstruct::{build_multigraph, build_named_family, NamedFamily};

    fn host(kind: NamedFamily) -> Hypergraph {
        build_named_family(kind).unwrap()
    }

    fn fam(kind: NamedFamily) -> PatternFamily {
        PatternFamily::named(kind).unwrap()
    }

    /// Brute force over all spanning subsets.
    fn brute_ex(h: &Hypergraph, f: &PatternFamily) -> usize {
        let idx = OccurrenceIndex::build(h, f, &PatternOptions::default()).unwrap();
        (0u64..1 << h.num_edges())
            .filter(|&s| idx.is_free(s as Bits))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    /// Brute force over all red/blue/uncolored assignments.
    fn brute_alt(h: &Hypergraph, f: &PatternFamily, sigma: &[usize], strong: bool) -> usize {
        let idx = OccurrenceIndex::build(h, f, &PatternOptions::default()).unwrap();
        let m = h.num_edges();
        let mut best = 0;
        for code in 0..3usize.pow(m as u32) {
            let mut c = code;
            let mut x = vec![0i8; m];
            for xi in x.iter_mut() {
                *xi = (c % 3) as i8 - 1;
                c /= 3;
            }
            // x indexed by position
            let mut last = 0;
            let mut ok = true;
            for &s in &x {
                if s != 0 {
                    if s == last {
                        ok = false;
                    }
                    last = s;
                }
            }
            if !ok {
                continue;
            }
            let red = bits::from_indices((0..m).filter(|&p| x[p] == 1).map(|p| sigma[p]));
            let blue = bits::from_indices((0..m).filter(|&p| x[p] == -1).map(|p| sigma[p]));
            let good = if strong {
                idx.is_free(red) || idx.is_free(blue)
            } else {
                idx.is_free(red) && idx.is_free(blue)
            };
            if good {
                best = best.max(x.iter().filter(|&&s| s != 0).count());
            }
        }
        best
    }

    #[test]
    fn ex_examples() {
        let o = TuranOptions::default();
        let r = turan_number(&host(NamedFamily::Complete { n: 4 }), &fam(NamedFamily::Path { len: 2 }), &o).unwrap();
        assert_eq!((r.value, r.mode), (2, ReportMode::Exact));
        let r = turan_number(&host(NamedFamily::Complete { n: 5 }), &fam(NamedFamily::Complete { n: 3 }), &o).unwrap();
        assert_eq!(r.value, 6);
        let dt = build_multigraph(&host(NamedFamily::Cycle { n: 3 }), &[2, 2, 2]).unwrap();
        let r = turan_number(&dt, &fam(NamedFamily::Complete { n: 3 }), &o).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.value, brute_ex(&dt, &fam(NamedFamily::Complete { n: 3 })));
        if let TuranWitness::Extremal { edges } = &r.witness {
            let idx = OccurrenceIndex::build(&dt, &fam(NamedFamily::Complete { n: 3 }), &o.pattern).unwrap();
            assert!(idx.is_free(bits::from_indices(edges.iter().copied())));
        } else {
            panic!("expected an extremal witness");
        }
    }

    #[test]
    fn ex_modes_and_caps() {
        let k7 = host(NamedFamily::Complete { n: 7 });
        let f = fam(NamedFamily::Complete { n: 3 });
        let exact = TuranOptions {
            mode: SearchMode::Exact,
            ..TuranOptions::default()
        };
        assert_eq!(turan_number(&k7, &f, &exact).unwrap().value, 12);
        let tight = TuranOptions {
            mode: SearchMode::Exact,
            max_exact_edges: 10,
            ..TuranOptions::default()
        };
        assert!(turan_number(&k7, &f, &tight).unwrap_err().is_cap());
        let heur = TuranOptions {
            mode: SearchMode::Heuristic,
            ..TuranOptions::default()
        };
        let r = turan_number(&k7, &f, &heur).unwrap();
        assert_eq!(r.mode, ReportMode::LowerBound);
        assert!(r.value <= 12 && r.value >= 9);
    }

    #[test]
    fn ex_matches_brute_force() {
        let hosts = [
            host(NamedFamily::Complete { n: 5 }),
            host(NamedFamily::Cycle { n: 6 }),
            host(NamedFamily::CompleteBipartite { m: 3, n: 3 }),
            build_multigraph(&host(NamedFamily::Complete { n: 4 }), &[2, 1, 1, 2, 1, 1]).unwrap(),
        ];
        let fams = [
            fam(NamedFamily::Path { len: 2 }),
            fam(NamedFamily::Matching { r: 2 }),
            fam(NamedFamily::Complete { n: 3 }),
            fam(NamedFamily::Cycle { n: 4 }),
        ];
        for h in &hosts {
            for f in &fams {
                let r = turan_number(h, f, &TuranOptions::default()).unwrap();
                assert_eq!(r.value, brute_ex(h, f));
            }
        }
    }

    #[test]
    fn worked_example_matching_pairs() {
        // K4 edges ordered so that consecutive pairs are perfect matchings.
        let k4 = host(NamedFamily::Complete { n: 4 });
        // Lexicographic ids: 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}
        let sigma = LinearOrdering::new(vec![0, 5, 1, 4, 2, 3]).unwrap();
        let p2 = fam(NamedFamily::Path { len: 2 });
        let o = TuranOptions::default();
        let r = ex_alt_sigma(&k4, &p2, &sigma, false, &o).unwrap();
        assert_eq!(r.value, 2);
        let r = ex_alt_min(&k4, &p2, false, &o).unwrap();
        assert_eq!((r.value, r.mode), (2, ReportMode::Exact));
    }

    #[test]
    fn alternating_matches_brute_force() {
        let cases = [
            (host(NamedFamily::Cycle { n: 5 }), fam(NamedFamily::Matching { r: 2 })),
            (host(NamedFamily::Complete { n: 4 }), fam(NamedFamily::Path { len: 2 })),
            (host(NamedFamily::Complete { n: 4 }), fam(NamedFamily::Complete { n: 3 })),
            (
                build_multigraph(&host(NamedFamily::Cycle { n: 3 }), &[2, 2, 2]).unwrap(),
                fam(NamedFamily::Complete { n: 3 }),
            ),
        ];
        let o = TuranOptions::default();
        for (h, f) in &cases {
            let m = h.num_edges();
            for sigma in [LinearOrdering::identity(m), LinearOrdering::identity(m).reversed()] {
                for strong in [false, true] {
                    let r = ex_alt_sigma(h, f, &sigma, strong, &o).unwrap();
                    assert_eq!(r.value, brute_alt(h, f, sigma.sequence(), strong));
                    if let TuranWitness::Alternating { coloring } = &r.witness {
                        coloring.validate().unwrap();
                        assert_eq!(coloring.len(), r.value);
                    }
                }
            }
        }
        // C5 with 2K2 at the identity ordering: at least ex = 2.
        let c5 = host(NamedFamily::Cycle { n: 5 });
        let r = ex_alt_sigma(&c5, &fam(NamedFamily::Matching { r: 2 }), &LinearOrdering::identity(5), false, &o)
            .unwrap();
        assert!(r.value >= 2);
    }

    #[test]
    fn pattern_free_host_colors_everything() {
        let c5 = host(NamedFamily::Cycle { n: 5 });
        let k3 = fam(NamedFamily::Complete { n: 3 });
        let o = TuranOptions::default();
        for strong in [false, true] {
            let r = ex_alt_sigma(&c5, &k3, &LinearOrdering::identity(5), strong, &o).unwrap();
            assert_eq!(r.value, 5);
        }
    }

    #[test]
    fn min_scan_agrees_with_heuristic_bound() {
        let k4 = host(NamedFamily::Complete { n: 4 });
        let p2 = fam(NamedFamily::Path { len: 2 });
        let exact = ex_alt_min(&k4, &p2, true, &TuranOptions::default()).unwrap();
        let heur = ex_alt_min(
            &k4,
            &p2,
            true,
            &TuranOptions {
                mode: SearchMode::Heuristic,
                restarts: 20,
                ..TuranOptions::default()
            },
        )
        .unwrap();
        assert!(heur.value >= exact.value);
        assert!(exact.value >= 3 && exact.value <= 5);
        let big = host(NamedFamily::Complete { n: 5 });
        let capped = TuranOptions {
            mode: SearchMode::Exact,
            ..TuranOptions::default()
        };
        assert!(ex_alt_min(&big, &p2, false, &capped).unwrap_err().is_cap());
    }

    #[test]
    fn permutations_enumerate() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
