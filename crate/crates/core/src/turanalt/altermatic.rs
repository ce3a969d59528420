use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::engine::{Engine, Rule};
use super::turan::next_permutation;
use super::SearchMode;
use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::exactsolve::{chromatic_number_hypergraph, ChromaticValue, SolverOptions};
use crate::hyperstruct::signs::alt_of;
use crate::hyperstruct::{induced_restriction, Hypergraph, LinearOrdering, RestrictionSpec, SignVector};
use crate::kneser::{kneser_power, KneserOptions};

pub const DEFAULT_MAX_ALT_VERTICES: usize = 24;
/// Cap of the literal `3^n` scan behind `alt'`.
pub const DEFAULT_MAX_PRIME_VERTICES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AltOptions {
    pub max_vertices: usize,
    /// Vertex cap of the exhaustive ordering scan.
    pub max_ordering_vertices: usize,
    pub mode: SearchMode,
    pub seed: u64,
    pub restarts: usize,
}

impl Default for AltOptions {
    fn default() -> Self {
        AltOptions {
            max_vertices: DEFAULT_MAX_ALT_VERTICES,
            max_ordering_vertices: 8,
            mode: SearchMode::Auto,
            seed: 0,
            restarts: 200,
        }
    }
}

/// Result of one `alt_sigma` or `salt_sigma` search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltValue {
    pub value: usize,
    /// Position-indexed `X` with `alt(X) = value`; absent when no nonzero
    /// `X` qualifies and the value is 0.
    pub witness: Option<SignVector>,
    pub nodes: u64,
}

fn prepare(rep: &Hypergraph, sigma: &LinearOrdering, level: Option<usize>, opts: &AltOptions) -> Result<Vec<Bits>> {
    if level == Some(0) {
        return Err(Error::InvalidParameter("level i must be >= 1".into()));
    }
    let cap = opts.max_vertices.min(bits::MAX_BITS);
    if rep.n() > cap {
        return Err(Error::cap("representation vertices for alt search", cap, rep.n()));
    }
    if sigma.len() != rep.n() {
        return Err(Error::LengthMismatch {
            expected: rep.n(),
            actual: sigma.len(),
        });
    }
    if level.is_some_and(|i| i >= 3) && rep.num_edges() > bits::MAX_BITS {
        return Err(Error::cap("representation hyperedges for level >= 3", bits::MAX_BITS, rep.num_edges()));
    }
    rep.edge_masks()
}

fn search(rep: &Hypergraph, sigma: &LinearOrdering, rule: Rule, masks: &[Bits]) -> AltValue {
    let out = Engine::new(sigma.sequence(), masks, rule).run();
    let witness = (out.best > 0).then(|| {
        let mut x = vec![0i8; rep.n()];
        for (j, &p) in out.picks.iter().enumerate() {
            x[p] = if j % 2 == 0 { 1 } else { -1 };
        }
        SignVector::new(x).expect("nonzero witness")
    });
    AltValue {
        value: out.best,
        witness,
        nodes: out.nodes,
    }
}

/// `alt_sigma(rep, i)`: the largest `alt(X)` over nonzero `X` such that
/// `KG(rep|X_sigma)` is `(i - 1)`-colorable, where `rep|X_sigma` keeps the
/// hyperedges inside `X+_sigma` or inside `X-_sigma`. For `i = 1` this says
/// neither side contains a hyperedge. The value is 0 when no `X` qualifies.
pub fn alt_sigma_level(rep: &Hypergraph, sigma: &LinearOrdering, i: usize, opts: &AltOptions) -> Result<AltValue> {
    let masks = prepare(rep, sigma, Some(i), opts)?;
    let rule = if i == 1 { Rule::Free } else { Rule::Level(i) };
    Ok(search(rep, sigma, rule, &masks))
}

/// `salt_sigma(rep)`: as `alt_sigma(rep, 1)` but at most one side may
/// contain a hyperedge.
pub fn salt_sigma(rep: &Hypergraph, sigma: &LinearOrdering, opts: &AltOptions) -> Result<AltValue> {
    let masks = prepare(rep, sigma, None, opts)?;
    Ok(search(rep, sigma, Rule::OneSide, &masks))
}

/// Whether `chi(KG(rep|(plus, minus))) <= i - 1`, computed through the
/// general restriction, Kneser and coloring code rather than the search
/// engine.
fn restricted_kg_colorable(rep: &Hypergraph, plus: &[usize], minus: &[usize], i: usize) -> Result<bool> {
    let spec = RestrictionSpec::new(vec![plus.to_vec(), minus.to_vec()])?;
    let restricted = induced_restriction(rep, &spec)?.hypergraph;
    let kg = kneser_power(&restricted, 2, &KneserOptions::default())?.result;
    let chi = chromatic_number_hypergraph(
        &kg,
        &SolverOptions {
            max_vertices: bits::MAX_BITS,
            node_limit: None,
        },
    )?;
    Ok(chi.value <= ChromaticValue::Finite(i - 1))
}

/// Vertex-indexed vectors `Y` (as `(Y+, Y-)`) passing the level-`i` test,
/// by a literal scan over all `3^n - 1` vectors.
fn prime_feasible(rep: &Hypergraph, i: usize) -> Result<Vec<Vec<i8>>> {
    if i == 0 {
        return Err(Error::InvalidParameter("level i must be >= 1".into()));
    }
    let n = rep.n();
    if n > DEFAULT_MAX_PRIME_VERTICES {
        return Err(Error::cap("vertices for the literal sign-vector scan", DEFAULT_MAX_PRIME_VERTICES, n));
    }
    let mut out = Vec::new();
    let mut y = vec![0i8; n];
    for code in 1..3usize.pow(n as u32) {
        let mut c = code;
        for yi in y.iter_mut() {
            *yi = (c % 3) as i8 - 1;
            c /= 3;
        }
        let plus: Vec<usize> = (0..n).filter(|&v| y[v] == 1).collect();
        let minus: Vec<usize> = (0..n).filter(|&v| y[v] == -1).collect();
        if restricted_kg_colorable(rep, &plus, &minus, i)? {
            out.push(y.clone());
        }
    }
    Ok(out)
}

fn prime_value(feasible: &[Vec<i8>], sigma: &LinearOrdering) -> usize {
    feasible
        .iter()
        .map(|y| {
            let read: Vec<i8> = sigma.sequence().iter().map(|&v| y[v]).collect();
            alt_of(&read)
        })
        .max()
        .unwrap_or(0)
}

/// `alt'_sigma(rep, i)`: the largest `alt((y_{sigma(1)}, ..., y_{sigma(n)}))`
/// over vertex-indexed nonzero `Y` with `chi(KG(rep|Y)) <= i - 1`. Literal
/// `3^n` scan, independent of the search engine.
pub fn alt_prime_sigma_level(rep: &Hypergraph, sigma: &LinearOrdering, i: usize) -> Result<usize> {
    if sigma.len() != rep.n() {
        return Err(Error::LengthMismatch {
            expected: rep.n(),
            actual: sigma.len(),
        });
    }
    Ok(prime_value(&prime_feasible(rep, i)?, sigma))
}

/// `min_sigma alt'_sigma(rep, i)` over all `n!` orderings.
pub fn alt_prime_min(rep: &Hypergraph, i: usize) -> Result<usize> {
    let feasible = prime_feasible(rep, i)?;
    let mut perm: Vec<usize> = (0..rep.n()).collect();
    let mut best = usize::MAX;
    loop {
        best = best.min(prime_value(&feasible, &LinearOrdering::new(perm.clone())?));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltMinReport {
    pub value: usize,
    /// True when every ordering (up to reversal) was examined.
    pub exact: bool,
    pub ordering: LinearOrdering,
    pub orderings_examined: u64,
}

/// Minimum of `alt_sigma(rep, i)` (or `salt_sigma` with `strong`) over
/// orderings: every ordering up to reversal within the cap, otherwise the
/// identity plus seeded random orderings (an upper bound on the minimum).
pub fn alt_min(rep: &Hypergraph, i: usize, strong: bool, opts: &AltOptions) -> Result<AltMinReport> {
    let n = rep.n();
    let masks = prepare(rep, &LinearOrdering::identity(n), (!strong).then_some(i), opts)?;
    let rule = match (strong, i) {
        (true, _) => Rule::OneSide,
        (false, 1) => Rule::Free,
        (false, i) => Rule::Level(i),
    };
    let exhaustive = match opts.mode {
        SearchMode::Exact if n > opts.max_ordering_vertices => {
            return Err(Error::cap("vertices for ordering scan", opts.max_ordering_vertices, n))
        }
        SearchMode::Exact => true,
        SearchMode::Auto => n <= opts.max_ordering_vertices,
        SearchMode::Heuristic => false,
    };
    let mut best: Option<(usize, LinearOrdering)> = None;
    let mut examined = 0u64;
    let mut consider = |perm: &[usize]| {
        examined += 1;
        let mut engine = Engine::new(perm, &masks, rule);
        if let Some((t, _)) = &best {
            engine = engine.with_target(*t);
        }
        let v = engine.run().best;
        if best.as_ref().is_none_or(|(t, _)| v < *t) {
            best = Some((v, LinearOrdering::new(perm.to_vec()).expect("permutation")));
        }
    };
    let mut perm: Vec<usize> = (0..n).collect();
    if exhaustive {
        loop {
            if n < 2 || perm[0] < perm[n - 1] {
                consider(&perm);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    } else {
        consider(&perm);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.restarts {
            perm.shuffle(&mut rng);
            consider(&perm);
        }
    }
    let (value, ordering) = best.expect("one ordering examined");
    Ok(AltMinReport {
        value,
        exact: exhaustive,
        ordering,
        orderings_examined: examined,
    })
}

/// Lower bound on `chi(KG(representation))` from one ordering:
/// `|V| - alt_sigma(rep, i) + i - 1`, or `|V| + 1 - salt_sigma(rep)` when
/// strong. Any ordering gives a bound because `alt(rep, i)` is the minimum
/// over orderings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltermaticCertificate {
    pub representation: Hypergraph,
    /// Level `i`; absent for the strong variant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    pub strong: bool,
    pub ordering: LinearOrdering,
    /// `alt_sigma(rep, i)` or `salt_sigma(rep)`.
    pub alt: usize,
    pub value: usize,
    /// Position-indexed sign vector attaining `alt`.
    pub witness: Option<SignVector>,
    /// Nodes of the exhausted search.
    pub nodes: u64,
}

impl AltermaticCertificate {
    /// The bound `chi(KG(rep)) >= value` is claimed only when
    /// `chi(KG(rep)) >= premise()`: level `i` needs `i <= chi + 1`, and the
    /// strong variant needs at least one hyperedge.
    pub fn premise(&self) -> usize {
        match (self.strong, self.level) {
            (true, _) => 1,
            (false, Some(i)) => i.saturating_sub(1),
            (false, None) => 0,
        }
    }

    pub fn formula(n: usize, alt: usize, level: Option<usize>, strong: bool) -> Result<usize> {
        let v = if strong {
            (n + 1).checked_sub(alt)
        } else {
            let i = level.ok_or_else(|| Error::InvalidCertificate("non-strong certificate needs a level".into()))?;
            (n + i - 1).checked_sub(alt)
        };
        v.ok_or_else(|| Error::InvalidCertificate(format!("alt value {alt} exceeds the vertex count {n}")))
    }
}

pub fn altermatic_certificate(
    rep: &Hypergraph,
    sigma: &LinearOrdering,
    i: usize,
    strong: bool,
    opts: &AltOptions,
) -> Result<AltermaticCertificate> {
    let r = if strong {
        salt_sigma(rep, sigma, opts)?
    } else {
        alt_sigma_level(rep, sigma, i, opts)?
    };
    let level = (!strong).then_some(i);
    Ok(AltermaticCertificate {
        representation: rep.clone(),
        level,
        strong,
        ordering: sigma.clone(),
        alt: r.value,
        value: AltermaticCertificate::formula(rep.n(), r.value, level, strong)?,
        witness: r.witness,
        nodes: r.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstruct::{apply_ordering, build_named_family, NamedFamily};

    fn stable_pairs(n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 2..n {
                if b - a <= n - 2 {
                    edges.push(vec![a, b]);
                }
            }
        }
        Hypergraph::new(n, edges).unwrap()
    }

    fn five_cycle_h() -> (Hypergraph, LinearOrdering) {
        let h = build_named_family(NamedFamily::Cycle { n: 5 }).unwrap().with_isolated(5);
        // 1, a, 2, b, ... with 1..5 -> 0..4 and a..e -> 5..9.
        let sigma = LinearOrdering::new(vec![0, 5, 1, 6, 2, 7, 3, 8, 4, 9]).unwrap();
        (h, sigma)
    }

    #[test]
    fn stable_set_examples() {
        let o = AltOptions::default();
        let rep = stable_pairs(6);
        assert_eq!(rep.num_edges(), 9);
        let id = LinearOrdering::identity(6);
        assert_eq!(alt_sigma_level(&rep, &id, 1, &o).unwrap().value, 3);
        assert_eq!(salt_sigma(&rep, &id, &o).unwrap().value, 3);
        let c = altermatic_certificate(&rep, &id, 1, true, &o).unwrap();
        assert_eq!(c.value, 4);
    }

    #[test]
    fn five_cycle_examples() {
        let o = AltOptions::default();
        let f = build_named_family(NamedFamily::Cycle { n: 5 }).unwrap();
        let m = alt_min(&f, 1, false, &o).unwrap();
        assert_eq!((m.value, m.exact), (3, true));
        let c = altermatic_certificate(&f, &m.ordering, 1, false, &o).unwrap();
        assert_eq!(c.value, 2);

        let (h, sigma) = five_cycle_h();
        let r = alt_sigma_level(&h, &sigma, 1, &o).unwrap();
        assert_eq!(r.value, 7);
        let x = r.witness.unwrap();
        assert_eq!(x.alt(), 7);
        let (plus, minus) = apply_ordering(&x, &sigma).unwrap();
        for e in h.edges() {
            assert!(!e.iter().all(|v| plus.contains(v)) && !e.iter().all(|v| minus.contains(v)));
        }
        let c = altermatic_certificate(&h, &sigma, 1, false, &o).unwrap();
        assert_eq!(c.value, 3);
        assert!(salt_sigma(&h, &sigma, &o).unwrap().value >= 7);
    }

    #[test]
    fn degenerate_cases() {
        let o = AltOptions::default();
        let singles = Hypergraph::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let id = LinearOrdering::identity(3);
        let r = alt_sigma_level(&singles, &id, 1, &o).unwrap();
        assert_eq!((r.value, r.witness), (0, None));
        let empty = Hypergraph::empty(4);
        assert_eq!(salt_sigma(&empty, &LinearOrdering::identity(4), &o).unwrap().value, 4);
        assert!(alt_sigma_level(&empty, &LinearOrdering::identity(4), 0, &o).is_err());
        assert!(alt_sigma_level(&empty, &LinearOrdering::identity(3), 1, &o).is_err());
        assert!(alt_sigma_level(&Hypergraph::empty(30), &LinearOrdering::identity(30), 1, &o)
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn chain_between_levels() {
        let o = AltOptions::default();
        let reps = [
            stable_pairs(7),
            build_named_family(NamedFamily::Cycle { n: 6 }).unwrap(),
            build_named_family(NamedFamily::CompleteUniform { n: 6, s: 3 }).unwrap(),
        ];
        for rep in &reps {
            let s = LinearOrdering::identity(rep.n()).reversed();
            let a1 = alt_sigma_level(rep, &s, 1, &o).unwrap().value;
            let a2 = alt_sigma_level(rep, &s, 2, &o).unwrap().value;
            let a3 = alt_sigma_level(rep, &s, 3, &o).unwrap().value;
            let st = salt_sigma(rep, &s, &o).unwrap().value;
            assert!(a1 <= a2 && a2 <= st && a2 <= a3, "{a1} {a2} {st} {a3}");
        }
    }

    #[test]
    fn prime_equals_sigma_form() {
        let o = AltOptions::default();
        let rep = Hypergraph::new(5, vec![vec![0, 1], vec![1, 2, 3], vec![3, 4], vec![0, 4]]).unwrap();
        let sigma = LinearOrdering::new(vec![3, 0, 4, 1, 2]).unwrap();
        for i in 1..=3 {
            let a = alt_sigma_level(&rep, &sigma, i, &o).unwrap().value;
            assert_eq!(alt_prime_sigma_level(&rep, &sigma, i).unwrap(), a);
            let id = LinearOrdering::identity(5);
            assert_eq!(
                alt_prime_sigma_level(&rep, &id, i).unwrap(),
                alt_sigma_level(&rep, &id, i, &o).unwrap().value
            );
        }
        assert_eq!(alt_prime_min(&rep, 1).unwrap(), alt_min(&rep, 1, false, &o).unwrap().value);
    }

    #[test]
    fn heuristic_min_is_an_upper_bound() {
        let rep = stable_pairs(7);
        let exact = alt_min(&rep, 1, false, &AltOptions::default()).unwrap();
        let heur = alt_min(
            &rep,
            1,
            false,
            &AltOptions {
                mode: SearchMode::Heuristic,
                restarts: 10,
                ..AltOptions::default()
            },
        )
        .unwrap();
        assert!(!heur.exact && heur.value >= exact.value);
    }
}
