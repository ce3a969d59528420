use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactsolve::{chromatic_number_hypergraph, SolverOptions};
use crate::hyperstruct::{build_multigraph, Hypergraph, NamedFamily};
use crate::kneser::{build_named_kneser, kneser_power, KneserOptions, NamedKneser};
use crate::patterns::{pattern_hypergraph, PatternFamily, PatternOptions};
use crate::turanalt::{turan_number, SearchMode, TuranOptions};
use crate::verify::CertificateBundle;

/// The frozen golden manifest shipped with the crate.
pub const GOLDEN_MANIFEST_V1: &str = include_str!("../../data/golden_v1.json");

/// Host edges up to which the Turán bounds are computed next to `χ`.
const MAX_BOUND_EDGES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Construction {
    Named {
        family: NamedKneser,
    },
    /// `KG^r(host choose pattern)`; `multiplicity` replicates every host edge.
    Pattern {
        host: NamedFamily,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multiplicity: Option<usize>,
        pattern: NamedFamily,
        #[serde(default = "two")]
        r: usize,
    },
}

fn two() -> usize {
    2
}

impl Construction {
    fn host(&self) -> Result<Option<Hypergraph>> {
        match *self {
            Construction::Named { .. } => Ok(None),
            Construction::Pattern { host, multiplicity, .. } => {
                let base = host.build()?;
                match multiplicity {
                    Some(m) if m != 1 => Ok(Some(build_multigraph(&base, &vec![m; base.num_edges()])?)),
                    _ => Ok(Some(base)),
                }
            }
        }
    }

    /// The representation hypergraph and its Kneser power.
    pub fn build(&self) -> Result<(Hypergraph, Hypergraph)> {
        match *self {
            Construction::Named { family } => {
                let inst = build_named_kneser(family, &PatternOptions::default())?;
                Ok((inst.instance.representation, inst.instance.result))
            }
            Construction::Pattern { pattern, r, .. } => {
                let host = self.host()?.expect("pattern construction has a host");
                let rep = pattern_hypergraph(&host, &PatternFamily::named(pattern)?, &PatternOptions::default())?;
                let kg = kneser_power(&rep.hypergraph, r, &KneserOptions::default())?;
                Ok((rep.hypergraph, kg.result))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCase {
    pub id: String,
    pub construction: Construction,
    pub expected: usize,
    /// Closed form that reproduces `expected` from the parameters.
    pub formula: String,
    pub source: String,
    /// Probe cases are recorded but never asserted.
    #[serde(default)]
    pub informational: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_limit: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenManifest {
    pub version: u32,
    pub cases: Vec<GoldenCase>,
}

impl GoldenManifest {
    pub fn v1() -> Self {
        Self::from_json(GOLDEN_MANIFEST_V1).expect("bundled manifest parses")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidParameter(format!("golden manifest: {e}")))
    }

    /// Cases whose id, id prefix or source tag is in `selection`; all cases
    /// when it is empty.
    pub fn select(&self, selection: &[String]) -> Vec<&GoldenCase> {
        self.cases
            .iter()
            .filter(|c| selection.is_empty() || selection.iter().any(|s| c.id.starts_with(s.as_str()) || &c.source == s))
            .collect()
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn exact_ex(host: &Hypergraph, pattern: NamedFamily) -> Result<usize> {
    let opts = TuranOptions {
        mode: SearchMode::Exact,
        ..TuranOptions::default()
    };
    Ok(turan_number(host, &PatternFamily::named(pattern)?, &opts)?.value)
}

/// Evaluates the case's recorded formula from its parameters.
pub fn formula_value(case: &GoldenCase) -> Result<usize> {
    let unsupported = || {
        Err(Error::InvalidParameter(format!(
            "case '{}': formula '{}' does not apply to its construction",
            case.id, case.formula
        )))
    };
    let c = &case.construction;
    match (case.formula.as_str(), c) {
        ("stated", _) => Ok(case.expected),
        (
            "n-2k+2",
            Construction::Named {
                family: NamedKneser::Kneser { n, k } | NamedKneser::Schrijver { n, k },
            },
        ) => Ok(n + 2 - 2 * k),
        (
            "ceil((n-r(k-1))/(r-1))",
            Construction::Pattern {
                host: NamedFamily::Matching { r: n },
                pattern: NamedFamily::Matching { r: k },
                r,
                multiplicity: None,
            },
        ) => Ok((n.saturating_sub(r * (k - 1))).div_ceil(r - 1)),
        ("floor((n-1)^2/4)", Construction::Pattern { host: NamedFamily::Complete { n }, .. }) => {
            Ok((n - 1) * (n - 1) / 4)
        }
        (
            "frankl",
            Construction::Pattern {
                host: NamedFamily::Complete { n },
                pattern: NamedFamily::Complete { n: k },
                ..
            },
        ) if *k >= 2 => {
            let (s, r) = (n / (k - 1), n % (k - 1));
            Ok((k - 1) * binom(s, 2) + r * s)
        }
        ("C(q^2+q+1,2)-q(q+1)^2/2", Construction::Pattern { host: NamedFamily::Complete { n }, .. }) => {
            match (1..*n).find(|q| q * q + q + 1 == *n) {
                Some(q) => Ok(binom(*n, 2) - q * (q + 1) * (q + 1) / 2),
                None => unsupported(),
            }
        }
        ("|E|-floor(2n/3)", Construction::Pattern { .. }) => {
            let host = c.host()?.expect("pattern host");
            Ok(host.num_edges() - 2 * host.n() / 3)
        }
        ("|E|-ex", Construction::Pattern { pattern, .. }) => {
            let host = c.host()?.expect("pattern host");
            Ok(host.num_edges() - exact_ex(&host, *pattern)?)
        }
        _ => unsupported(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseStatus {
    Pass,
    Fail,
    /// A cap or node budget stopped the computation.
    Capped,
    /// Probe case; the value is recorded only.
    Info,
}

/// `|E| - 2 ex <= χ <= |E| - ex` for graph hosts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranBounds {
    pub edges: usize,
    pub ex: usize,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub id: String,
    pub source: String,
    pub formula: String,
    pub expected: usize,
    pub status: CaseStatus,
    /// Exact `χ` when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    pub lower_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<usize>,
    pub vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub turan_bounds: Option<TuranBounds>,
    pub detail: String,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateBundle>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenReport {
    pub manifest_version: u32,
    /// No asserted case failed.
    pub passed: bool,
    pub cases: Vec<CaseOutcome>,
}

impl GoldenReport {
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<28} {:<7} {:>8} {:>8} {:>9} {:>9}  {}\n",
            "case", "status", "expected", "chi", "vertices", "seconds", "detail"
        );
        for c in &self.cases {
            let chi = match (c.chi, c.upper_bound) {
                (Some(v), _) => v.to_string(),
                (None, Some(u)) => format!("{}..{}", c.lower_bound, u),
                (None, None) => "-".into(),
            };
            let status = serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(str::to_owned));
            out.push_str(&format!(
                "{:<28} {:<7} {:>8} {:>8} {:>9} {:>9.3}  {}\n",
                c.id,
                status.unwrap_or_default(),
                c.expected,
                chi,
                c.vertices,
                c.seconds,
                c.detail
            ));
        }
        out.push_str(if self.passed { "suite: pass\n" } else { "suite: FAIL\n" });
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenOptions {
    /// Vertex cap handed to the exact solver.
    pub max_vertices: usize,
    pub certificates: bool,
    /// Cases run concurrently on this many threads.
    pub workers: usize,
}

impl Default for GoldenOptions {
    fn default() -> Self {
        GoldenOptions {
            max_vertices: crate::bits::MAX_BITS,
            certificates: false,
            workers: 1,
        }
    }
}

fn turan_bounds(case: &GoldenCase) -> Result<Option<TuranBounds>> {
    let Construction::Pattern { pattern, r: 2, .. } = case.construction else {
        return Ok(None);
    };
    let host = case.construction.host()?.expect("pattern host");
    if host.num_edges() > MAX_BOUND_EDGES {
        return Ok(None);
    }
    let ex = exact_ex(&host, pattern)?;
    let edges = host.num_edges();
    Ok(Some(TuranBounds {
        edges,
        ex,
        lower: edges.saturating_sub(2 * ex),
        upper: edges - ex,
    }))
}

fn run_case(case: &GoldenCase, opts: &GoldenOptions) -> CaseOutcome {
    let start = Instant::now();
    let mut out = CaseOutcome {
        id: case.id.clone(),
        source: case.source.clone(),
        formula: case.formula.clone(),
        expected: case.expected,
        status: CaseStatus::Fail,
        chi: None,
        lower_bound: 0,
        upper_bound: None,
        vertices: 0,
        turan_bounds: None,
        detail: String::new(),
        seconds: 0.0,
        certificate: None,
    };
    if let Err(e) = evaluate(case, opts, &mut out) {
        out.status = if e.is_cap() { CaseStatus::Capped } else { CaseStatus::Fail };
        out.detail = e.to_string();
    }
    out.seconds = start.elapsed().as_secs_f64();
    out
}

fn evaluate(case: &GoldenCase, opts: &GoldenOptions, out: &mut CaseOutcome) -> Result<()> {
    let formula = formula_value(case)?;
    if formula != case.expected {
        return Err(Error::InvalidParameter(format!(
            "manifest expects {} but the formula gives {formula}",
            case.expected
        )));
    }
    let (_, kg) = case.construction.build()?;
    out.vertices = kg.n();
    let solver = SolverOptions {
        max_vertices: opts.max_vertices,
        node_limit: case.node_limit,
    };
    let res = chromatic_number_hypergraph(&kg, &solver)?;
    out.lower_bound = res.lower_bound;
    out.upper_bound = res.value.finite();
    out.chi = res.exact_value();
    out.turan_bounds = turan_bounds(case)?;
    if opts.certificates {
        out.certificate = Some(CertificateBundle::Coloring {
            instance: kg,
            result: res.clone(),
        });
    }
    let bounds_ok = match (&out.turan_bounds, out.chi) {
        (Some(b), Some(chi)) => b.lower <= chi && chi <= b.upper,
        _ => true,
    };
    let mut notes = Vec::new();
    if let Some(b) = &out.turan_bounds {
        notes.push(format!("ex={} bounds {}..{}", b.ex, b.lower, b.upper));
    }
    (out.status, out.detail) = match out.chi {
        None => {
            notes.push("node budget exhausted".into());
            (CaseStatus::Capped, notes.join("; "))
        }
        Some(_) if !bounds_ok => {
            notes.push("chi outside the Turán bounds".into());
            (CaseStatus::Fail, notes.join("; "))
        }
        Some(chi) if case.informational => {
            notes.push(if chi == case.expected { "matches formula" } else { "differs from formula" }.into());
            (CaseStatus::Info, notes.join("; "))
        }
        Some(chi) if chi == case.expected => (CaseStatus::Pass, notes.join("; ")),
        Some(chi) => {
            notes.push(format!("chi {chi} != expected {}", case.expected));
            (CaseStatus::Fail, notes.join("; "))
        }
    };
    Ok(())
}

/// Runs the selected cases; report order follows the manifest. A capped
/// asserted case does not fail the suite but is reported as such.
pub fn run_golden_suite(manifest: &GoldenManifest, selection: &[String], opts: &GoldenOptions) -> GoldenReport {
    let cases = manifest.select(selection);
    let workers = opts.workers.clamp(1, cases.len().max(1));
    let mut slots: Vec<Option<CaseOutcome>> = vec![None; cases.len()];
    if workers == 1 {
        for (slot, case) in slots.iter_mut().zip(&cases) {
            *slot = Some(run_case(case, opts));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let done = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= cases.len() {
                        break;
                    }
                    let o = run_case(cases[i], opts);
                    done.lock().expect("result lock")[i] = Some(o);
                });
            }
        });
    }
    let cases: Vec<CaseOutcome> = slots.into_iter().map(|o| o.expect("every case ran")).collect();
    GoldenReport {
        manifest_version: manifest.version,
        passed: cases.iter().all(|c| c.status != CaseStatus::Fail),
        cases,
    }
}
