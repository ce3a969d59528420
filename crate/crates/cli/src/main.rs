//! `kgturan`: build Kneser hypergraph instances, compute chromatic,
//! Turán and altermatic quantities, verify certificates, run the golden
//! suite and export instances.

mod cache;
mod instance;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kgturan::exactsolve::{chromatic_number_hypergraph, covering_number, independence_number, SolverOptions};
use kgturan::harness::{run_golden_suite, GoldenManifest, GoldenOptions};
use kgturan::kneser::{to_dimacs, KneserOptions, DEFAULT_MAX_REP_EDGES_GRAPH, DEFAULT_MAX_REP_EDGES_HYPER};
use kgturan::patterns::{enumerate_occurrences, occurrences_to_json_lines, PatternOptions, DEFAULT_MAX_HOST_EDGES};
use kgturan::turanalt::{
    alt_min, alt_sigma_level, altermatic_certificate, ex_alt_min, ex_alt_sigma, salt_sigma, turan_number,
    AltOptions, SearchMode, TuranOptions, DEFAULT_MAX_ALT_VERTICES, DEFAULT_MAX_EXACT_EDGES,
    DEFAULT_MAX_ORDERING_EDGES,
};
use kgturan::verify::{verify, CertificateBundle};
use kgturan::{LinearOrdering, SignVector};
use serde::Serialize;
use serde_json::{json, Value};

use crate::instance::{Instance, InstanceArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Json(String),
    Io(String),
    Core(kgturan::Error),
}

impl From<kgturan::Error> for CliError {
    fn from(e: kgturan::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Json(m) => write!(f, "malformed JSON: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Core(e) if e.is_cap() => write!(f, "cap exceeded: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Parser)]
#[command(name = "kgturan", version, about = "Kneser hypergraphs, Turán numbers and exact chromatic numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an instance and print host, representation and Kneser power.
    Build {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute one quantity of an instance.
    Compute {
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        options: ComputeArgs,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-check a certificate document; exit 1 when it does not verify.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the golden chromatic-number suite; exit 1 on any mismatch.
    Golden {
        /// Case ids, id prefixes or source tags; all cases when absent.
        #[arg(long = "select")]
        select: Vec<String>,
        /// Manifest JSON; defaults to the bundled version 1.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Embed a coloring certificate per case.
        #[arg(long)]
        certificates: bool,
        /// Report wall-clock seconds (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export an instance as JSON, DIMACS or occurrence lines.
    Export {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Part::Kneser)]
        what: Part,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Quantity {
    Chi,
    Alpha,
    Beta,
    Ex,
    ExAlt,
    ExSalt,
    AltSigma,
    SaltSigma,
    Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Json,
    Dimacs,
    Occurrences,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Part {
    Host,
    Representation,
    Kneser,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Mode {
    Auto,
    Exact,
    Heuristic,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Auto => SearchMode::Auto,
            Mode::Exact => SearchMode::Exact,
            Mode::Heuristic => SearchMode::Heuristic,
        }
    }
}

#[derive(Args, Clone, Debug, Serialize)]
struct ComputeArgs {
    /// Level i of alt_sigma and of altermatic certificates.
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Linear ordering: comma list of vertex ids or a JSON array file.
    #[arg(long)]
    ordering: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Strong variant of certificates.
    #[arg(long)]
    strong: bool,
    /// Random restarts in heuristic mode.
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    /// Accepted for reproducible configs; computations are single-threaded.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Also write the certificate bundle to this file.
    #[arg(long)]
    certificate_out: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
struct CapArgs {
    /// Vertex cap of the exact solvers (hard limit 128).
    #[arg(long, default_value_t = kgturan::exactsolve::DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Host hyperedges for exact ex and ex_alt at a fixed ordering.
    #[arg(long, default_value_t = DEFAULT_MAX_EXACT_EDGES)]
    max_exact_edges: usize,
    /// Host hyperedges for the exhaustive ordering scan.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDERING_EDGES)]
    max_ordering_edges: usize,
    /// Representation vertices for alt/salt searches.
    #[arg(long, default_value_t = DEFAULT_MAX_ALT_VERTICES)]
    max_alt_vertices: usize,
    /// Representation vertices for the exhaustive ordering scan of alt.
    #[arg(long, default_value_t = 8)]
    max_ordering_vertices: usize,
    /// Representation hyperedges for building a Kneser power.
    #[arg(long)]
    max_rep_edges: Option<usize>,
    /// Host hyperedges for pattern enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_HOST_EDGES)]
    max_host_edges: usize,
    /// Allow caps above their defaults.
    #[arg(long)]
    i_know_this_is_huge: bool,
}

impl CapArgs {
    fn check(&self) -> Result<(), CliError> {
        let rep_default = DEFAULT_MAX_REP_EDGES_GRAPH.max(DEFAULT_MAX_REP_EDGES_HYPER);
        let caps = [
            ("--max-vertices", self.max_vertices, kgturan::exactsolve::DEFAULT_MAX_VERTICES),
            ("--max-exact-edges", self.max_exact_edges, DEFAULT_MAX_EXACT_EDGES),
            ("--max-ordering-edges", self.max_ordering_edges, DEFAULT_MAX_ORDERING_EDGES),
            ("--max-alt-vertices", self.max_alt_vertices, DEFAULT_MAX_ALT_VERTICES),
            ("--max-ordering-vertices", self.max_ordering_vertices, 8),
            ("--max-rep-edges", self.max_rep_edges.unwrap_or(0), rep_default),
            ("--max-host-edges", self.max_host_edges, DEFAULT_MAX_HOST_EDGES),
        ];
        for (flag, value, default) in caps {
            if value > default && !self.i_know_this_is_huge {
                return Err(CliError::Usage(format!(
                    "{flag} {value} is above its default {default}; add --i-know-this-is-huge"
                )));
            }
        }
        Ok(())
    }

    fn solver(&self) -> SolverOptions {
        SolverOptions {
            max_vertices: self.max_vertices,
            node_limit: self.node_limit,
        }
    }

    fn pattern(&self) -> PatternOptions {
        PatternOptions {
            max_host_edges: self.max_host_edges,
            ..PatternOptions::default()
        }
    }

    fn kneser(&self) -> KneserOptions {
        let mut k = KneserOptions::default();
        if let Some(m) = self.max_rep_edges {
            k.max_rep_edges_graph = m;
            k.max_rep_edges_hyper = m;
        }
        k
    }

    fn turan(&self, c: &ComputeArgs) -> TuranOptions {
        TuranOptions {
            mode: c.mode.into(),
            max_exact_edges: self.max_exact_edges,
            max_ordering_edges: self.max_ordering_edges,
            seed: c.seed,
            restarts: c.restarts,
            pattern: self.pattern(),
        }
    }

    fn alt(&self, c: &ComputeArgs) -> AltOptions {
        AltOptions {
            max_vertices: self.max_alt_vertices,
            max_ordering_vertices: self.max_ordering_vertices,
            mode: c.mode.into(),
            seed: c.seed,
            restarts: c.restarts,
        }
    }
}

#[derive(Args, Clone, Debug, Serialize)]
struct OutputArgs {
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

fn parse_ordering(spec: &str) -> Result<LinearOrdering, CliError> {
    let seq: Vec<usize> = if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| CliError::Io(format!("{spec}: {e}")))?;
        serde_json::from_str(&text).map_err(|e| CliError::Json(format!("{spec}: {e}")))?
    } else {
        spec.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad ordering entry '{p}'")))
            })
            .collect::<Result<_, _>>()?
    };
    Ok(LinearOrdering::new(seq)?)
}

fn ordering_or_identity(c: &ComputeArgs, n: usize) -> Result<LinearOrdering, CliError> {
    match &c.ordering {
        Some(s) => parse_ordering(s),
        None => Ok(LinearOrdering::identity(n)),
    }
}

/// Renders top-level entries as `key: value` lines; nested values are
/// printed compactly and embedded certificates are left to the JSON view.
fn table(doc: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = doc {
        let width = map.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in map.iter().filter(|(k, _)| k.as_str() != "certificate") {
            let text = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k:<width$}  {text}\n"));
        }
    }
    out
}

fn emit(doc: &Value, output: &OutputArgs) {
    let text = if output.pretty {
        table(doc)
    } else {
        let mut s = serde_json::to_string(doc).expect("JSON output");
        s.push('\n');
        s
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn signs(x: &Option<SignVector>) -> Value {
    json!(x.as_ref().map(|v| v.entries().to_vec()))
}

fn compute(
    quantity: Quantity,
    inst_args: &InstanceArgs,
    c: &ComputeArgs,
    caps: &CapArgs,
) -> Result<Value, CliError> {
    caps.check()?;
    if c.i == 0 {
        return Err(CliError::Usage("--i must be at least 1".into()));
    }
    let mut inst: Instance = inst_args.resolve()?;
    let cache = cache::cache_dir(inst_args.cache_dir.as_deref());
    let cache = cache.as_deref();
    let config = json!({
        "verb": "compute",
        "quantity": quantity,
        "instance": inst_args,
        "resolved": inst.resolved,
        "options": c,
        "caps": caps,
    });
    let mut doc = serde_json::Map::new();
    doc.insert("config".into(), config);
    let popts = caps.pattern();
    let mut certificate: Option<CertificateBundle> = None;
    match quantity {
        Quantity::Chi => {
            let g = inst.target(cache, &popts, &caps.kneser())?;
            let res = chromatic_number_hypergraph(&g, &caps.solver())?;
            doc.insert("chi".into(), json!(res.exact_value()));
            doc.insert("exact".into(), json!(res.exact));
            doc.insert("lower_bound".into(), json!(res.lower_bound));
            doc.insert("upper_bound".into(), serde_json::to_value(res.value).expect("value"));
            doc.insert("vertices".into(), json!(g.n()));
            doc.insert("edges".into(), json!(g.num_edges()));
            certificate = Some(CertificateBundle::Coloring {
                instance: g,
                result: res,
            });
        }
        Quantity::Alpha | Quantity::Beta => {
            let h = inst.base(cache, &popts)?;
            let (key, r) = if quantity == Quantity::Alpha {
                ("alpha", independence_number(&h, &caps.solver())?)
            } else {
                ("beta", covering_number(&h, &caps.solver())?)
            };
            doc.insert(key.into(), json!(r.size));
            doc.insert("witness".into(), json!(r.witness));
            doc.insert("vertices".into(), json!(h.n()));
        }
        Quantity::Ex | Quantity::ExAlt | Quantity::ExSalt => {
            let (host, family) = inst.host_and_family()?;
            let topts = caps.turan(c);
            let strong = quantity == Quantity::ExSalt;
            let report = match (quantity, &c.ordering) {
                (Quantity::Ex, _) => turan_number(host, family, &topts)?,
                (_, Some(s)) => ex_alt_sigma(host, family, &parse_ordering(s)?, strong, &topts)?,
                (_, None) => ex_alt_min(host, family, strong, &topts)?,
            };
            let key = match quantity {
                Quantity::Ex => "ex",
                Quantity::ExAlt => "ex_alt",
                _ => "ex_salt",
            };
            doc.insert(key.into(), json!(report.value));
            doc.insert("mode".into(), serde_json::to_value(report.mode).expect("mode"));
            doc.insert("edges".into(), json!(host.num_edges()));
            certificate = Some(CertificateBundle::Turan {
                host: host.clone(),
                family: family.clone(),
                report,
            });
        }
        Quantity::AltSigma | Quantity::SaltSigma => {
            let rep = inst.representation(cache, &popts)?.clone();
            let sigma = ordering_or_identity(c, rep.n())?;
            let v = if quantity == Quantity::AltSigma {
                alt_sigma_level(&rep, &sigma, c.i, &caps.alt(c))?
            } else {
                salt_sigma(&rep, &sigma, &caps.alt(c))?
            };
            let key = if quantity == Quantity::AltSigma { "alt_sigma" } else { "salt_sigma" };
            doc.insert(key.into(), json!(v.value));
            doc.insert("ordering".into(), json!(sigma));
            doc.insert("witness".into(), signs(&v.witness));
        }
        Quantity::Certificate => {
            let rep = inst.representation(cache, &popts)?.clone();
            let aopts = caps.alt(c);
            let sigma = match &c.ordering {
                Some(s) => parse_ordering(s)?,
                None if rep.n() <= aopts.max_ordering_vertices => alt_min(&rep, c.i, c.strong, &aopts)?.ordering,
                None => LinearOrdering::identity(rep.n()),
            };
            let cert = altermatic_certificate(&rep, &sigma, c.i, c.strong, &aopts)?;
            doc.insert("value".into(), json!(cert.value));
            doc.insert("alt".into(), json!(cert.alt));
            doc.insert("premise".into(), json!(cert.premise()));
            certificate = Some(CertificateBundle::Altermatic { certificate: cert });
        }
    }
    if let Some(b) = certificate {
        if let Some(path) = &c.certificate_out {
            write_file(path, &b.to_json())?;
        }
        doc.insert("certificate".into(), serde_json::to_value(&b).expect("bundle"));
    }
    Ok(Value::Object(doc))
}

fn build(inst_args: &InstanceArgs, caps: &CapArgs) -> Result<Value, CliError> {
    caps.check()?;
    let mut inst = inst_args.resolve()?;
    let cache = cache::cache_dir(inst_args.cache_dir.as_deref());
    let kg = inst.target(cache.as_deref(), &caps.pattern(), &caps.kneser())?;
    Ok(json!({
        "config": { "verb": "build", "instance": inst_args, "resolved": inst.resolved, "caps": caps },
        "host": inst.host,
        "pattern_family": inst.family,
        "representation": inst.rep,
        "kneser": kg,
        "r": inst.r,
        "vertices": kg.n(),
        "edges": kg.num_edges(),
    }))
}

fn export(inst_args: &InstanceArgs, format: Format, what: Part, caps: &CapArgs) -> Result<String, CliError> {
    caps.check()?;
    let mut inst = inst_args.resolve()?;
    let cache = cache::cache_dir(inst_args.cache_dir.as_deref());
    let cache = cache.as_deref();
    if format == Format::Occurrences {
        let (host, family) = inst.host_and_family()?;
        return Ok(occurrences_to_json_lines(&enumerate_occurrences(host, family, &caps.pattern())?));
    }
    let g = match what {
        Part::Host => inst
            .host
            .clone()
            .ok_or_else(|| CliError::Usage("this instance has no host".into()))?,
        Part::Representation => inst.base(cache, &caps.pattern())?,
        Part::Kneser => inst.target(cache, &caps.pattern(), &caps.kneser())?,
    };
    Ok(match format {
        Format::Json => g.to_json() + "\n",
        Format::Dimacs => to_dimacs(&g)?,
        Format::Occurrences => unreachable!(),
    })
}

/// A bare bundle, or a compute document carrying one under "certificate".
fn load_bundle(path: &Path) -> Result<CertificateBundle, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let bad = |e: String| CliError::Json(format!("{}: {e}", path.display()));
    let value: Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let inner = match value.get("certificate") {
        Some(c) if value.get("type").is_none() => c.clone(),
        _ => value,
    };
    serde_json::from_value(inner).map_err(|e| bad(e.to_string()))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Build {
            instance,
            caps,
            output,
        } => emit(&build(&instance, &caps)?, &output),
        Command::Compute {
            quantity,
            instance,
            options,
            caps,
            output,
        } => emit(&compute(quantity, &instance, &options, &caps)?, &output),
        Command::Verify { file, output } => {
            let bundle = load_bundle(&file)?;
            let report = verify(&bundle);
            let doc = json!({
                "config": { "verb": "verify", "file": file },
                "valid": report.valid,
                "checks": report.checks,
            });
            emit(&doc, &output);
            if !report.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Golden {
            select,
            manifest,
            workers,
            certificates,
            timing,
            output,
        } => {
            let m = match &manifest {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    GoldenManifest::from_json(&text).map_err(|e| CliError::Json(e.to_string()))?
                }
                None => GoldenManifest::v1(),
            };
            let opts = GoldenOptions {
                certificates,
                workers,
                ..GoldenOptions::default()
            };
            let mut report = run_golden_suite(&m, &select, &opts);
            if !timing {
                report.cases.iter_mut().for_each(|c| c.seconds = 0.0);
            }
            if output.pretty {
                print!("{}", report.to_table());
            } else {
                let doc = json!({
                    "config": {
                        "verb": "golden",
                        "select": select,
                        "manifest": manifest,
                        "manifest_version": m.version,
                        "workers": workers,
                        "certificates": certificates,
                    },
                    "report": report,
                });
                emit(&doc, &output);
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export {
            instance,
            format,
            what,
            out,
            caps,
        } => {
            let text = export(&instance, format, what, &caps)?;
            match out {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("kgturan: {e}");
            ExitCode::from(2)
        }
    }
}
