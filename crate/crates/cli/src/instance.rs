//! Resolution of the instance flags into a host, pattern family,
//! representation and Kneser power.

use std::path::{Path, PathBuf};

use clap::Args;
use kgturan::hyperstruct::build_multigraph;
use kgturan::kneser::{kneser_power, KneserOptions, NamedKneser};
use kgturan::patterns::{PatternFamily, PatternOptions};
use kgturan::{Hypergraph, NamedFamily};
use serde::Serialize;

use crate::cache::pattern_hypergraph_cached;
use crate::CliError;

#[derive(Args, Clone, Debug, Default, Serialize)]
pub struct InstanceArgs {
    /// Named Kneser family: kneser, schrijver, circular, generalized-kneser,
    /// permutation.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Kneser power r (default 2); for `--family permutation`, the matching
    /// size of the family.
    #[arg(long)]
    pub r: Option<usize>,
    /// Host family, `tag` or `tag:p1,p2` (cycle, path, complete,
    /// complete-bipartite, matching, complete-uniform). Without inline
    /// parameters it reads --n (--m --n, --n --s).
    #[arg(long)]
    pub host: Option<String>,
    /// Pattern family, `tag` or `tag:p1,...`. Without inline parameters a
    /// path reads --len, and complete, cycle and matching read --k.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub len: Option<usize>,
    /// Edge multiplicities of a graph host: one value for every edge, or a
    /// comma list in edge order.
    #[arg(long)]
    pub multiplicity: Option<String>,
    /// Host hypergraph as JSON.
    #[arg(long)]
    pub host_file: Option<PathBuf>,
    /// Pattern family as JSON: one hypergraph or a list.
    #[arg(long)]
    pub pattern_file: Option<PathBuf>,
    /// Representation hypergraph as JSON.
    #[arg(long)]
    pub rep_file: Option<PathBuf>,
    /// A target hypergraph taken as is (JSON, or DIMACS with a .col or
    /// .dimacs extension); chi, alpha and beta then refer to it.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
    /// Directory memoizing pattern hypergraphs; defaults to $KGTURAN_CACHE_DIR.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

pub struct Instance {
    pub host: Option<Hypergraph>,
    pub family: Option<PatternFamily>,
    pub rep: Option<Hypergraph>,
    pub graph: Option<Hypergraph>,
    pub r: usize,
    /// Resolved description echoed into the output.
    pub resolved: serde_json::Value,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    let text = read(path)?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    if matches!(ext, "col" | "dimacs") {
        return Ok(kgturan::kneser::from_dimacs(&text)?);
    }
    Hypergraph::from_json(&text).map_err(|e| CliError::Json(format!("{}: {e}", path.display())))
}

fn read_family(path: &Path) -> Result<PatternFamily, CliError> {
    let text = read(path)?;
    let bad = |e: String| CliError::Json(format!("{}: {e}", path.display()));
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let list = if value.is_array() { value } else { serde_json::Value::Array(vec![value]) };
    serde_json::from_value(list).map_err(|e| bad(e.to_string()))
}

fn split_tag(spec: &str) -> Result<(String, Option<Vec<usize>>), CliError> {
    match spec.split_once(':') {
        None => Ok((spec.to_string(), None)),
        Some((tag, rest)) => {
            let params = rest
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad parameter '{p}' in '{spec}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((tag.to_string(), Some(params)))
        }
    }
}

fn need(v: Option<usize>, flag: &str, what: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

impl InstanceArgs {
    fn host_family(&self, spec: &str) -> Result<NamedFamily, CliError> {
        let (tag, inline) = split_tag(spec)?;
        let what = format!("host '{tag}'");
        let params = match inline {
            Some(p) => p,
            None => match tag.replace('-', "_").as_str() {
                "complete_bipartite" | "bipartite" => vec![need(self.m, "m", &what)?, need(self.n, "n", &what)?],
                "complete_uniform" => vec![need(self.n, "n", &what)?, need(self.s, "s", &what)?],
                _ => vec![need(self.n, "n", &what)?],
            },
        };
        Ok(NamedFamily::from_tag(&tag, &params)?)
    }

    fn pattern_family(&self, spec: &str) -> Result<NamedFamily, CliError> {
        let (tag, inline) = split_tag(spec)?;
        let what = format!("pattern '{tag}'");
        let params = match inline {
            Some(p) => p,
            None => match tag.replace('-', "_").as_str() {
                "path" => vec![need(self.len, "len", &what)?],
                "complete_uniform" => vec![need(self.k, "k", &what)?, need(self.s, "s", &what)?],
                "complete_bipartite" | "bipartite" => {
                    return Err(CliError::Usage(format!("{what} takes inline parameters, e.g. bipartite:2,2")))
                }
                _ => vec![need(self.k, "k", &what)?],
            },
        };
        Ok(NamedFamily::from_tag(&tag, &params)?)
    }

    fn apply_multiplicity(&self, host: Hypergraph) -> Result<Hypergraph, CliError> {
        let Some(spec) = &self.multiplicity else {
            return Ok(host);
        };
        let counts = spec
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad multiplicity '{p}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let counts = if counts.len() == 1 { vec![counts[0]; host.num_edges()] } else { counts };
        Ok(build_multigraph(&host, &counts)?)
    }

    pub fn resolve(&self) -> Result<Instance, CliError> {
        let sources = [
            self.family.is_some(),
            self.host.is_some() || self.host_file.is_some(),
            self.rep_file.is_some(),
            self.graph_file.is_some(),
        ];
        match sources.iter().filter(|&&b| b).count() {
            0 => {
                return Err(CliError::Usage(
                    "no instance: give --family, --host/--host-file with a pattern, --rep-file or --graph-file".into(),
                ))
            }
            1 => {}
            _ => {
                return Err(CliError::Usage(
                    "give exactly one of --family, --host/--host-file, --rep-file, --graph-file".into(),
                ))
            }
        }
        if self.host.is_some() && self.host_file.is_some() {
            return Err(CliError::Usage("--host and --host-file are exclusive".into()));
        }
        let mut inst = Instance {
            host: None,
            family: None,
            rep: None,
            graph: None,
            r: self.r.unwrap_or(2),
            resolved: serde_json::Value::Null,
        };
        if let Some(tag) = &self.family {
            let get = |p: &str| match p {
                "n" => self.n,
                "k" => self.k,
                "d" => self.d,
                "s" => self.s,
                "m" => self.m,
                "r" => self.r,
                _ => None,
            };
            let named = NamedKneser::from_tag(tag, get)?;
            let (host, pattern) = named.representation()?;
            inst.r = 2;
            inst.host = Some(host);
            inst.family = Some(PatternFamily::single(pattern)?);
            inst.resolved = serde_json::json!({ "family": named, "r": 2 });
        } else if self.host.is_some() || self.host_file.is_some() {
            let (host, host_desc) = match (&self.host, &self.host_file) {
                (Some(spec), _) => {
                    let f = self.host_family(spec)?;
                    (f.build()?, serde_json::to_value(f).expect("family serializes"))
                }
                (None, Some(path)) => (read_hypergraph(path)?, serde_json::json!({ "file": path })),
                (None, None) => unreachable!(),
            };
            let host = self.apply_multiplicity(host)?;
            let (family, pattern_desc) = match (&self.pattern, &self.pattern_file) {
                (Some(_), Some(_)) => return Err(CliError::Usage("--pattern and --pattern-file are exclusive".into())),
                (Some(spec), None) => {
                    let f = self.pattern_family(spec)?;
                    (PatternFamily::named(f)?, serde_json::to_value(f).expect("family serializes"))
                }
                (None, Some(path)) => (read_family(path)?, serde_json::json!({ "file": path })),
                (None, None) => {
                    // Without a pattern the host is the representation.
                    inst.resolved = serde_json::json!({
                        "representation": host_desc,
                        "multiplicity": self.multiplicity,
                        "r": inst.r,
                    });
                    inst.rep = Some(host);
                    return Ok(inst);
                }
            };
            inst.resolved = serde_json::json!({
                "host": host_desc,
                "multiplicity": self.multiplicity,
                "pattern": pattern_desc,
                "r": inst.r,
            });
            inst.host = Some(host);
            inst.family = Some(family);
        } else if let Some(path) = &self.rep_file {
            inst.rep = Some(read_hypergraph(path)?);
            inst.resolved = serde_json::json!({ "representation": path, "r": inst.r });
        } else if let Some(path) = &self.graph_file {
            inst.graph = Some(read_hypergraph(path)?);
            inst.resolved = serde_json::json!({ "graph": path });
        }
        Ok(inst)
    }
}

impl Instance {
    pub fn host_and_family(&self) -> Result<(&Hypergraph, &PatternFamily), CliError> {
        match (&self.host, &self.family) {
            (Some(h), Some(f)) => Ok((h, f)),
            _ => Err(CliError::Usage(
                "this quantity needs a host with a pattern (--host with --pattern, or --family)".into(),
            )),
        }
    }

    /// The representation hypergraph, building the pattern hypergraph when
    /// the instance is given as host plus pattern.
    pub fn representation(&mut self, cache: Option<&Path>, opts: &PatternOptions) -> Result<&Hypergraph, CliError> {
        if self.rep.is_none() {
            let (host, family) = self.host_and_family()?;
            let rep = pattern_hypergraph_cached(host, family, opts, cache)?;
            self.rep = Some(rep.hypergraph);
        }
        Ok(self.rep.as_ref().expect("just set"))
    }

    /// The target hypergraph: the given graph, or `KG^r` of the representation.
    pub fn target(
        &mut self,
        cache: Option<&Path>,
        popts: &PatternOptions,
        kopts: &KneserOptions,
    ) -> Result<Hypergraph, CliError> {
        if let Some(g) = &self.graph {
            return Ok(g.clone());
        }
        let r = self.r;
        let rep = self.representation(cache, popts)?;
        Ok(kneser_power(rep, r, kopts)?.result)
    }

    /// Hypergraph whose alpha and beta are reported: the given graph or the
    /// representation.
    pub fn base(&mut self, cache: Option<&Path>, opts: &PatternOptions) -> Result<Hypergraph, CliError> {
        if let Some(g) = &self.graph {
            return Ok(g.clone());
        }
        Ok(self.representation(cache, opts)?.clone())
    }
}
