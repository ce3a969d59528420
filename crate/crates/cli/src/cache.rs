//! On-disk memo of pattern hypergraphs, keyed by the SHA-256 of the
//! canonical host/family JSON.

use std::fs;
use std::path::{Path, PathBuf};

use kgturan::patterns::{pattern_hypergraph, PatternFamily, PatternHypergraph, PatternOptions};
use kgturan::Hypergraph;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "KGTURAN_CACHE_DIR";

const KEY_VERSION: &str = "pattern-hypergraph-v1";

pub fn cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

fn key(host: &Hypergraph, family: &PatternFamily) -> String {
    let doc = serde_json::json!({ "v": KEY_VERSION, "host": host, "family": family });
    hex::encode(Sha256::digest(doc.to_string().as_bytes()))
}

#[derive(serde::Serialize, serde::Deserialize)]
struct Entry {
    host: Hypergraph,
    family: PatternFamily,
    result: PatternHypergraph,
}

/// Pattern hypergraph of `host`, read from or written to `dir` when given.
/// Unreadable or mismatching entries are recomputed and overwritten.
pub fn pattern_hypergraph_cached(
    host: &Hypergraph,
    family: &PatternFamily,
    opts: &PatternOptions,
    dir: Option<&Path>,
) -> kgturan::Result<PatternHypergraph> {
    let Some(dir) = dir else {
        return pattern_hypergraph(host, family, opts);
    };
    let path = dir.join(format!("{}.json", key(host, family)));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(e) = serde_json::from_str::<Entry>(&text) {
            if &e.host == host && &e.family == family {
                return Ok(e.result);
            }
        }
    }
    let result = pattern_hypergraph(host, family, opts)?;
    let entry = Entry {
        host: host.clone(),
        family: family.clone(),
        result,
    };
    // A failed write only costs the memo.
    if fs::create_dir_all(dir).is_ok() {
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let text = serde_json::to_string(&entry).expect("cache entry serializes");
        if fs::write(&tmp, text).is_ok() && fs::rename(&tmp, &path).is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }
    Ok(entry.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kgturan::NamedFamily;

    #[test]
    fn second_lookup_reads_the_memo() {
        let dir = tempfile::tempdir().unwrap();
        let host = NamedFamily::Complete { n: 5 }.build().unwrap();
        let fam = PatternFamily::named(NamedFamily::Path { len: 2 }).unwrap();
        let opts = PatternOptions::default();
        let a = pattern_hypergraph_cached(&host, &fam, &opts, Some(dir.path())).unwrap();
        let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(files.len(), 1);
        let b = pattern_hypergraph_cached(&host, &fam, &opts, Some(dir.path())).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.hypergraph.num_edges(), 30);
    }
}
