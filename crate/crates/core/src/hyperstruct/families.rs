use serde::{Deserialize, Serialize};

use super::Hypergraph;
use crate::error::{Error, Result};

/// Named (hyper)graph families with a frozen vertex numbering:
///
/// * `Cycle { n }`: vertices `0..n` in cyclic order, edge `i` is `{i, i+1 mod n}`.
/// * `Path { len }`: `len` edges on vertices `0..=len`, edge `i` is `{i, i+1}`.
/// * `Complete { n }`: edges are the 2-subsets of `0..n` in lexicographic order.
/// * `CompleteBipartite { m, n }`: parts `0..m` and `m..m+n`, edges `(i, m+j)`
///   lexicographic.
/// * `Matching { r }`: edge `i` is `{2i, 2i+1}`.
/// * `CompleteUniform { n, s }`: all `s`-subsets of `0..n`, lexicographic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NamedFamily {
    Cycle { n: usize },
    Path { len: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Matching { r: usize },
    CompleteUniform { n: usize, s: usize },
}

impl NamedFamily {
    /// Parses a family tag plus positional parameters, e.g. `("cycle", [5])`
    /// or `("complete_uniform", [5, 3])`.
    pub fn from_tag(tag: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "family '{tag}' takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let f = match tag.replace('-', "_").as_str() {
            "cycle" => {
                want(1)?;
                NamedFamily::Cycle { n: params[0] }
            }
            "path" => {
                want(1)?;
                NamedFamily::Path { len: params[0] }
            }
            "complete" => {
                want(1)?;
                NamedFamily::Complete { n: params[0] }
            }
            "complete_bipartite" | "bipartite" => {
                want(2)?;
                NamedFamily::CompleteBipartite {
                    m: params[0],
                    n: params[1],
                }
            }
            "matching" => {
                want(1)?;
                NamedFamily::Matching { r: params[0] }
            }
            "complete_uniform" => {
                want(2)?;
                NamedFamily::CompleteUniform {
                    n: params[0],
                    s: params[1],
                }
            }
            other => return Err(Error::InvalidParameter(format!("unknown family '{other}'"))),
        };
        Ok(f)
    }

    pub fn build(self) -> Result<Hypergraph> {
        build_named_family(self)
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn build_named_family(kind: NamedFamily) -> Result<Hypergraph> {
    match kind {
        NamedFamily::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
        }
        NamedFamily::Path { len } => {
            positive("path length", len)?;
            Hypergraph::new(len + 1, (0..len).map(|i| vec![i, i + 1]).collect())
        }
        NamedFamily::Complete { n } => {
            positive("complete graph order", n)?;
            Hypergraph::new(n, k_subsets(n, 2))
        }
        NamedFamily::CompleteBipartite { m, n } => {
            positive("bipartite part m", m)?;
            positive("bipartite part n", n)?;
            let edges = (0..m)
                .flat_map(|i| (0..n).map(move |j| vec![i, m + j]))
                .collect();
            Hypergraph::new(m + n, edges)
        }
        NamedFamily::Matching { r } => {
            positive("matching size", r)?;
            Hypergraph::new(2 * r, (0..r).map(|i| vec![2 * i, 2 * i + 1]).collect())
        }
        NamedFamily::CompleteUniform { n, s } => {
            positive("uniform order n", n)?;
            positive("uniformity s", s)?;
            if s > n {
                return Err(Error::InvalidParameter(format!(
                    "complete uniform hypergraph needs s <= n, got s={s}, n={n}"
                )));
            }
            Hypergraph::new(n, k_subsets(n, s))
        }
    }
}

/// Replicates base edge `i` into `counts[i]` parallel copies with
/// consecutive ids.
pub fn build_multigraph(base: &Hypergraph, counts: &[usize]) -> Result<Hypergraph> {
    if !base.is_uniform(2) {
        return Err(Error::NotUniform { expected: 2 });
    }
    if base.has_repeated_edges() {
        return Err(Error::NotSimple);
    }
    if counts.len() != base.num_edges() {
        return Err(Error::LengthMismatch {
            expected: base.num_edges(),
            actual: counts.len(),
        });
    }
    if let Some(i) = counts.iter().position(|&c| c == 0) {
        return Err(Error::InvalidParameter(format!("edge {i} has multiplicity 0")));
    }
    let mut edges = Vec::with_capacity(counts.iter().sum());
    for (e, &c) in base.edges().iter().zip(counts) {
        for _ in 0..c {
            edges.push(e.clone());
        }
    }
    let h = Hypergraph::new(base.n(), edges)?;
    match base.labels() {
        Some(l) => h.with_labels(l.to_vec()),
        None => Ok(h),
    }
}

/// Partition of hyperedge ids into classes of identical member sets, in
/// order of first appearance.
pub fn parallel_classes(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut index: std::collections::HashMap<&[usize], usize> = std::collections::HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (id, e) in h.edges().iter().enumerate() {
        match index.get(e.as_slice()) {
            Some(&c) => classes[c].push(id),
            None => {
                index.insert(e, classes.len());
                classes.push(vec![id]);
            }
        }
    }
    classes
}
