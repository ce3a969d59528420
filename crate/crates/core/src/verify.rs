//! Independent re-checking of serialized certificates.
//!
//! Each bundle carries its own instance. Checks use direct scans and small
//! brute-force searches rather than the search code that produced the
//! certificate.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::exactsolve::{ChromaticResult, ChromaticValue, ColoringKind, LowerBoundWitness};
use crate::hyperstruct::signs::alt_of;
use crate::hyperstruct::{apply_ordering, induced_restriction, Hypergraph, LinearOrdering, RestrictionSpec};
use crate::kneser::{kneser_power, KneserOptions};
use crate::patterns::{enumerate_occurrences, PatternFamily, PatternOptions};
use crate::turanalt::{AltermaticCertificate, Color, ReportMode, TuranQuantity, TuranReport, TuranWitness};

/// Largest instance for which exhaustive claims are re-derived by brute
/// force; beyond it they are reported as unchecked.
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertificateBundle {
    /// A chromatic-number result for `instance`.
    Coloring { instance: Hypergraph, result: ChromaticResult },
    Turan {
        host: Hypergraph,
        family: PatternFamily,
        report: TuranReport,
    },
    Altermatic { certificate: AltermaticCertificate },
}

impl CertificateBundle {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("bundle serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidCertificate(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    /// Too large to re-derive; not counted against validity.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub checks: Vec<Check>,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            status: if ok { CheckStatus::Passed } else { CheckStatus::Failed },
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            status: CheckStatus::Unchecked,
            detail: detail.into(),
        });
    }

    fn result(&mut self, name: &str, r: Result<()>) {
        match r {
            Ok(()) => self.add(name, true, ""),
            Err(e) => self.add(name, false, e.to_string()),
        }
    }

    fn finish(self) -> VerifyReport {
        VerifyReport {
            valid: self.0.iter().all(|c| c.status != CheckStatus::Failed),
            checks: self.0,
        }
    }
}

pub fn verify(bundle: &CertificateBundle) -> VerifyReport {
    let mut c = Checks::default();
    match bundle {
        CertificateBundle::Coloring { instance, result } => verify_coloring(instance, result, &mut c),
        CertificateBundle::Turan { host, family, report } => verify_turan(host, family, report, &mut c),
        CertificateBundle::Altermatic { certificate } => verify_altermatic(certificate, &mut c),
    }
    c.finish()
}

fn verify_coloring(h: &Hypergraph, r: &ChromaticResult, c: &mut Checks) {
    if let LowerBoundWitness::SingletonEdge { edge } = r.witness {
        let ok = r.value == ChromaticValue::Unbounded && h.edges().get(edge).is_some_and(|e| e.len() == 1);
        c.add("singleton hyperedge", ok, format!("hyperedge {edge}"));
        return;
    }
    let Some(coloring) = r.coloring() else {
        c.add("finite value", false, "unbounded value without a singleton hyperedge");
        return;
    };
    c.result("proper coloring", coloring.validate(h));
    let used = coloring.assignment.iter().max().map_or(0, |&m| m + 1);
    c.add(
        "color count",
        used <= coloring.num_colors,
        format!("{used} colors used, {} claimed", coloring.num_colors),
    );
    c.add(
        "bounds ordered",
        r.lower_bound <= coloring.num_colors && (!r.exact || r.lower_bound == coloring.num_colors),
        format!("lower {} value {} exact {}", r.lower_bound, coloring.num_colors, r.exact),
    );
    match &r.witness {
        LowerBoundWitness::Trivial => {
            let trivial = if h.num_edges() > 0 {
                2
            } else {
                h.n().min(1)
            };
            c.add("trivial lower bound", r.lower_bound <= trivial, format!("claimed {}", r.lower_bound));
        }
        LowerBoundWitness::Clique { vertices } => {
            let ok = r.kind == ColoringKind::ProperGraph || h.is_uniform(2);
            let pairs: std::collections::HashSet<(usize, usize)> =
                h.edges().iter().filter(|e| e.len() == 2).map(|e| (e[0], e[1])).collect();
            let clique = ok
                && vertices.iter().enumerate().all(|(i, &u)| {
                    vertices[i + 1..].iter().all(|&v| pairs.contains(&(u.min(v), u.max(v))))
                });
            c.add("clique witness", clique, format!("{} vertices", vertices.len()));
            c.add(
                "clique bound",
                vertices.len() >= r.lower_bound,
                format!("clique {} vs lower {}", vertices.len(), r.lower_bound),
            );
        }
        LowerBoundWitness::Exhausted { refuted_colors, .. } => {
            c.add(
                "refutation matches bound",
                refuted_colors + 1 == r.lower_bound,
                format!("refuted {refuted_colors}"),
            );
            if h.n() <= BRUTE_FORCE_LIMIT + 4 {
                let colorable = plain_colorable(h, *refuted_colors);
                c.add(
                    "refutation",
                    !colorable,
                    format!("plain backtracking on {refuted_colors} colors"),
                );
            } else {
                c.skip("refutation", format!("{} vertices exceed the re-check limit", h.n()));
            }
        }
        LowerBoundWitness::SingletonEdge { .. } => unreachable!("handled above"),
    }
}

/// Plain backtracking in vertex order with no heuristics.
fn plain_colorable(h: &Hypergraph, k: usize) -> bool {
    fn rec(h: &Hypergraph, inc: &[Vec<usize>], k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == h.n() {
            return true;
        }
        let top = col.iter().copied().filter(|&x| x != usize::MAX).max().map_or(0, |m| m + 1);
        for c in 0..k.min(top + 1) {
            col[v] = c;
            let mono = inc[v].iter().any(|&e| {
                let edge = h.edge(e);
                edge.iter().all(|&u| u <= v && col[u] == c)
            });
            if !mono && rec(h, inc, k, v + 1, col) {
                return true;
            }
        }
        col[v] = usize::MAX;
        false
    }
    if h.n() == 0 {
        return true;
    }
    let inc = h.incidence();
    let mut col = vec![usize::MAX; h.n()];
    rec(h, &inc, k, 0, &mut col)
}

fn verify_turan(host: &Hypergraph, family: &PatternFamily, r: &TuranReport, c: &mut Checks) {
    let occ = match enumerate_occurrences(host, family, &PatternOptions::default()) {
        Ok(o) => o,
        Err(e) => return c.add("occurrences", false, e.to_string()),
    };
    let m = host.num_edges();
    let free = |ids: &[usize]| {
        let mut inside = vec![false; m];
        for &i in ids {
            inside[i] = true;
        }
        occ.iter().all(|o| o.edge_ids.iter().any(|&e| !inside[e]))
    };
    match &r.witness {
        TuranWitness::Extremal { edges } => {
            let mut sorted = edges.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let ids_ok = sorted.len() == edges.len() && edges.iter().all(|&e| e < m);
            c.add("edge ids", ids_ok, format!("{} ids", edges.len()));
            if !ids_ok {
                return;
            }
            c.add("quantity", r.quantity == TuranQuantity::Ex, format!("{:?}", r.quantity));
            c.add("length", edges.len() == r.value, format!("{} vs value {}", edges.len(), r.value));
            c.add("F-free", free(edges), "");
            if r.mode == ReportMode::Exact {
                if m <= 2 * BRUTE_FORCE_LIMIT {
                    let best = (0u64..1 << m)
                        .filter(|&s| {
                            occ.iter().all(|o| o.edge_ids.iter().any(|&e| s >> e & 1 == 0))
                        })
                        .map(|s| s.count_ones() as usize)
                        .max()
                        .unwrap_or(0);
                    c.add("maximality", best == r.value, format!("brute force gives {best}"));
                } else {
                    c.skip("maximality", format!("{m} hyperedges exceed the re-check limit"));
                }
            }
        }
        TuranWitness::Alternating { coloring } => {
            c.add("ordering length", coloring.ordering.len() == m, format!("{} vs {m}", coloring.ordering.len()));
            if coloring.ordering.len() != m {
                return;
            }
            c.result("alternation", coloring.validate());
            c.add("length", coloring.len() == r.value, format!("{} vs value {}", coloring.len(), r.value));
            let red = coloring.ids_of(Color::Red);
            let blue = coloring.ids_of(Color::Blue);
            let ok = match r.quantity {
                TuranQuantity::ExAlt => free(&red) && free(&blue),
                TuranQuantity::ExSalt => free(&red) || free(&blue),
                TuranQuantity::Ex => false,
            };
            c.add("color classes", ok, format!("{:?}", r.quantity));
            // A fixed-ordering exact claim is re-derived by brute force.
            if r.mode == ReportMode::Exact && r.orderings_examined.is_none() {
                if m <= BRUTE_FORCE_LIMIT {
                    let best = brute_alternating(m, &coloring.ordering, r.quantity == TuranQuantity::ExSalt, &free);
                    c.add("maximality", best == r.value, format!("brute force gives {best}"));
                } else {
                    c.skip("maximality", format!("{m} hyperedges exceed the re-check limit"));
                }
            } else if r.orderings_examined.is_some() {
                c.skip("minimality over orderings", "not re-derived");
            }
        }
    }
}

fn brute_alternating(m: usize, sigma: &LinearOrdering, strong: bool, free: &dyn Fn(&[usize]) -> bool) -> usize {
    let mut best = 0;
    let mut x = vec![0i8; m];
    for code in 0..3usize.pow(m as u32) {
        let mut k = code;
        for xi in x.iter_mut() {
            *xi = (k % 3) as i8 - 1;
            k /= 3;
        }
        let len = x.iter().filter(|&&s| s != 0).count();
        if len <= best || alt_of(&x) != len {
            continue;
        }
        let red: Vec<usize> = (0..m).filter(|&p| x[p] == 1).map(|p| sigma.at(p)).collect();
        let blue: Vec<usize> = (0..m).filter(|&p| x[p] == -1).map(|p| sigma.at(p)).collect();
        let ok = if strong {
            free(&red) || free(&blue)
        } else {
            free(&red) && free(&blue)
        };
        if ok {
            best = len;
        }
    }
    best
}

/// Whether the restriction of `rep` to `(plus, minus)` passes the level
/// test (or the strong one-side test).
fn restriction_ok(rep: &Hypergraph, plus: &[usize], minus: &[usize], level: Option<usize>) -> Result<bool> {
    let inside = |side: &[usize]| {
        let s = bits::from_indices(side.iter().copied());
        rep.edges().iter().any(|e| e.iter().all(|&v| bits::contains(s, v)))
    };
    match level {
        None => Ok(!(inside(plus) && inside(minus))),
        Some(i) => {
            let spec = RestrictionSpec::new(vec![plus.to_vec(), minus.to_vec()])?;
            let restricted = induced_restriction(rep, &spec)?.hypergraph;
            let kg = kneser_power(&restricted, 2, &KneserOptions::default())?.result;
            if kg.n() < i {
                return Ok(true);
            }
            Ok(plain_colorable(&kg, i - 1))
        }
    }
}

fn verify_altermatic(cert: &AltermaticCertificate, c: &mut Checks) {
    let rep = &cert.representation;
    let n = rep.n();
    c.add("ordering length", cert.ordering.len() == n, format!("{} vs {n}", cert.ordering.len()));
    if cert.ordering.len() != n || n > bits::MAX_BITS {
        return;
    }
    if !cert.strong && cert.level.is_none_or(|i| i == 0) {
        return c.add("level", false, "non-strong certificate needs a level >= 1");
    }
    let formula = AltermaticCertificate::formula(n, cert.alt, cert.level, cert.strong);
    c.add(
        "value formula",
        formula.as_ref().is_ok_and(|&v| v == cert.value),
        format!("{formula:?} vs {}", cert.value),
    );
    match &cert.witness {
        None => c.add("witness", cert.alt == 0, "no witness given"),
        Some(x) => {
            c.add("witness alt", x.alt() == cert.alt, format!("alt(X) = {}", x.alt()));
            match apply_ordering(x, &cert.ordering) {
                Ok((plus, minus)) => match restriction_ok(rep, &plus, &minus, cert.level.filter(|_| !cert.strong)) {
                    Ok(ok) => c.add("witness feasible", ok, ""),
                    Err(e) => c.add("witness feasible", false, e.to_string()),
                },
                Err(e) => c.add("witness feasible", false, e.to_string()),
            }
        }
    }
    let p = cert.premise();
    match kneser_power(rep, 2, &KneserOptions::default()) {
        Ok(kg) if kg.result.n() <= 16 => c.add(
            "premise",
            p == 0 || !plain_colorable(&kg.result, p - 1),
            format!("needs chi(KG) >= {p}"),
        ),
        Ok(kg) if p <= 2 => c.add(
            "premise",
            p == 0 || (p == 1 && kg.result.n() > 0) || kg.result.num_edges() > 0,
            format!("needs chi(KG) >= {p}"),
        ),
        Ok(kg) => c.skip("premise", format!("KG has {} vertices; needs chi >= {p}", kg.result.n())),
        Err(e) => c.skip("premise", e.to_string()),
    }
    // Maximality by a literal scan over vertex-indexed sign vectors.
    if n <= BRUTE_FORCE_LIMIT - 2 {
        let level = cert.level.filter(|_| !cert.strong);
        let mut best = 0;
        let mut y = vec![0i8; n];
        for code in 1..3usize.pow(n as u32) {
            let mut k = code;
            for yi in y.iter_mut() {
                *yi = (k % 3) as i8 - 1;
                k /= 3;
            }
            let read: Vec<i8> = cert.ordering.sequence().iter().map(|&v| y[v]).collect();
            let a = alt_of(&read);
            if a <= best {
                continue;
            }
            let plus: Vec<usize> = (0..n).filter(|&v| y[v] == 1).collect();
            let minus: Vec<usize> = (0..n).filter(|&v| y[v] == -1).collect();
            if restriction_ok(rep, &plus, &minus, level).unwrap_or(false) {
                best = a;
            }
        }
        c.add("maximality", best == cert.alt, format!("literal scan gives {best}"));
    } else {
        c.skip("maximality", format!("{n} vertices exceed the re-check limit"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactsolve::{chromatic_number_graph, SolverOptions};
    use crate::hyperstruct::{build_named_family, NamedFamily};
    use crate::turanalt::{altermatic_certificate, ex_alt_sigma, turan_number, AltOptions, TuranOptions};

    fn petersen() -> Hypergraph {
        let rep = build_named_family(NamedFamily::CompleteUniform { n: 5, s: 2 }).unwrap();
        kneser_power(&rep, 2, &KneserOptions::default()).unwrap().result
    }

    #[test]
    fn coloring_bundle_round_trip_and_tamper() {
        let g = petersen();
        let result = chromatic_number_graph(&g, &SolverOptions::default()).unwrap();
        let b = CertificateBundle::Coloring {
            instance: g.clone(),
            result: result.clone(),
        };
        let back = CertificateBundle::from_json(&b.to_json()).unwrap();
        assert_eq!(back, b);
        let rep = verify(&b);
        assert!(rep.valid, "{rep:?}");

        let mut bad = result.clone();
        let e = g.edge(0);
        bad.assignment[e[0]] = bad.assignment[e[1]];
        assert!(!verify(&CertificateBundle::Coloring {
            instance: g.clone(),
            result: bad
        })
        .valid);

        let mut low = result;
        low.value = ChromaticValue::Finite(2);
        low.lower_bound = 2;
        low.witness = LowerBoundWitness::Exhausted {
            refuted_colors: 1,
            nodes: 0,
        };
        assert!(!verify(&CertificateBundle::Coloring { instance: g, result: low }).valid);
    }

    #[test]
    fn turan_bundles() {
        let k4 = build_named_family(NamedFamily::Complete { n: 4 }).unwrap();
        let fam = PatternFamily::named(NamedFamily::Path { len: 2 }).unwrap();
        let o = TuranOptions::default();
        let r = turan_number(&k4, &fam, &o).unwrap();
        let b = CertificateBundle::Turan {
            host: k4.clone(),
            family: fam.clone(),
            report: r.clone(),
        };
        assert!(verify(&b).valid);
        let mut inflated = r;
        inflated.value = 3;
        inflated.witness = TuranWitness::Extremal { edges: vec![0, 1, 5] };
        assert!(!verify(&CertificateBundle::Turan {
            host: k4.clone(),
            family: fam.clone(),
            report: inflated
        })
        .valid);

        let sigma = LinearOrdering::new(vec![0, 5, 1, 4, 2, 3]).unwrap();
        for strong in [false, true] {
            let r = ex_alt_sigma(&k4, &fam, &sigma, strong, &o).unwrap();
            let b = CertificateBundle::Turan {
                host: k4.clone(),
                family: fam.clone(),
                report: r,
            };
            assert!(verify(&b).valid);
        }
    }

    #[test]
    fn altermatic_bundles() {
        let h = build_named_family(NamedFamily::Cycle { n: 5 }).unwrap().with_isolated(5);
        let sigma = LinearOrdering::new(vec![0, 5, 1, 6, 2, 7, 3, 8, 4, 9]).unwrap();
        let cert = altermatic_certificate(&h, &sigma, 1, false, &AltOptions::default()).unwrap();
        let b = CertificateBundle::Altermatic { certificate: cert.clone() };
        let rep = verify(&b);
        assert!(rep.valid, "{rep:?}");
        assert!(rep.checks.iter().any(|c| c.name == "maximality" && c.status == CheckStatus::Passed));

        let mut inflated = cert;
        inflated.alt = 6;
        inflated.value = 4;
        assert!(!verify(&CertificateBundle::Altermatic { certificate: inflated }).valid);

        let f = build_named_family(NamedFamily::Cycle { n: 5 }).unwrap();
        let strong = altermatic_certificate(&f, &LinearOrdering::identity(5), 1, true, &AltOptions::default()).unwrap();
        assert!(verify(&CertificateBundle::Altermatic { certificate: strong }).valid);
        let lvl2 = altermatic_certificate(&f, &LinearOrdering::identity(5), 2, false, &AltOptions::default()).unwrap();
        assert!(verify(&CertificateBundle::Altermatic { certificate: lvl2 }).valid);
    }

    #[test]
    fn level_above_chi_plus_one_is_rejected() {
        let rep = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let sigma = LinearOrdering::identity(3);
        let c = altermatic_certificate(&rep, &sigma, 3, false, &AltOptions::default()).unwrap();
        // Every sign vector qualifies, so the value 2 exceeds chi = 1.
        assert_eq!((c.alt, c.value, c.premise()), (3, 2, 2));
        let r = verify(&CertificateBundle::Altermatic { certificate: c });
        assert!(!r.valid);
        assert!(r.checks.iter().any(|k| k.name == "premise" && k.status == CheckStatus::Failed));
        let ok = altermatic_certificate(&rep, &sigma, 2, false, &AltOptions::default()).unwrap();
        assert!(verify(&CertificateBundle::Altermatic { certificate: ok }).valid);
    }
}
