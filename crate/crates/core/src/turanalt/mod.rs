//! Generalized, alternating and strong alternating Turan numbers, the
//! `alt`/`salt` parameters of representations and altermatic lower-bound
//! certificates.

mod altermatic;
mod engine;
mod turan;

pub use altermatic::{
    alt_min, alt_prime_min, alt_prime_sigma_level, alt_sigma_level, altermatic_certificate, salt_sigma,
    AltMinReport, AltOptions, AltermaticCertificate, DEFAULT_MAX_ALT_VERTICES, DEFAULT_MAX_PRIME_VERTICES,
};
pub use turan::{
    ex_alt_min, ex_alt_sigma, turan_number, OccurrenceIndex, SearchMode, TuranOptions, DEFAULT_MAX_EXACT_EDGES,
    DEFAULT_MAX_ORDERING_EDGES,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperstruct::{parallel_classes, Hypergraph, LinearOrdering};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Red,
    Blue,
}

/// Partial red/blue coloring of host hyperedges that alternates along
/// `ordering`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingColoring {
    pub ordering: LinearOrdering,
    /// Colored hyperedge ids in ordering order, with their colors.
    pub colored: Vec<(usize, Color)>,
}

impl AlternatingColoring {
    pub fn len(&self) -> usize {
        self.colored.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colored.is_empty()
    }

    pub fn ids_of(&self, color: Color) -> Vec<usize> {
        let mut v: Vec<usize> = self.colored.iter().filter(|c| c.1 == color).map(|c| c.0).collect();
        v.sort_unstable();
        v
    }

    /// Colored ids appear in ordering order and consecutive ones differ in
    /// color.
    pub fn validate(&self) -> Result<()> {
        let pos = self.ordering.inverse();
        let mut last: Option<(usize, Color)> = None;
        for &(id, c) in &self.colored {
            if id >= self.ordering.len() {
                return Err(Error::InvalidCertificate(format!("hyperedge id {id} outside the ordering")));
            }
            if let Some((prev, pc)) = last {
                if pos.at(prev) >= pos.at(id) {
                    return Err(Error::InvalidCertificate(format!(
                        "hyperedges {prev} and {id} are not listed in ordering order"
                    )));
                }
                if pc == c {
                    return Err(Error::InvalidCertificate(format!(
                        "consecutive colored hyperedges {prev} and {id} share a color"
                    )));
                }
            }
            last = Some((id, c));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportMode {
    Exact,
    LowerBound,
    UpperBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TuranQuantity {
    Ex,
    ExAlt,
    ExSalt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TuranWitness {
    /// Hyperedge ids of an F-free spanning subhypergraph.
    Extremal { edges: Vec<usize> },
    Alternating { coloring: AlternatingColoring },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranReport {
    pub quantity: TuranQuantity,
    pub value: usize,
    pub mode: ReportMode,
    pub witness: TuranWitness,
    /// Orderings examined (ordering minimization only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orderings_examined: Option<u64>,
}

/// Host ordering listing each parallel class contiguously, classes in order
/// of first appearance. With `singles_last`, classes of multiplicity one go
/// to the end.
pub fn interval_ordering(host: &Hypergraph, singles_last: bool) -> Result<LinearOrdering> {
    if !host.is_uniform(2) {
        return Err(Error::NotUniform { expected: 2 });
    }
    let classes = parallel_classes(host);
    let (mut multi, single): (Vec<_>, Vec<_>) = if singles_last {
        classes.into_iter().partition(|c| c.len() > 1)
    } else {
        (classes, Vec::new())
    };
    multi.extend(single);
    LinearOrdering::new(multi.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstruct::{build_multigraph, build_named_family, NamedFamily};

    #[test]
    fn interval_orderings() {
        let c4 = build_named_family(NamedFamily::Cycle { n: 4 }).unwrap();
        let g = build_multigraph(&c4, &[1, 2, 1, 2]).unwrap();
        // ids: class0 = [0], class1 = [1,2], class2 = [3], class3 = [4,5]
        let o = interval_ordering(&g, true).unwrap();
        assert_eq!(o.sequence(), &[1, 2, 4, 5, 0, 3]);
        let o = interval_ordering(&g, false).unwrap();
        assert_eq!(o.sequence(), &[0, 1, 2, 3, 4, 5]);
        let k4 = build_named_family(NamedFamily::Complete { n: 4 }).unwrap();
        assert_eq!(interval_ordering(&k4, true).unwrap().len(), 6);
        let tri = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(interval_ordering(&tri, false).is_err());
    }

    #[test]
    fn coloring_validation() {
        let o = LinearOrdering::new(vec![2, 0, 1]).unwrap();
        let ok = AlternatingColoring {
            ordering: o.clone(),
            colored: vec![(2, Color::Red), (1, Color::Blue)],
        };
        ok.validate().unwrap();
        assert_eq!(ok.ids_of(Color::Red), vec![2]);
        let same = AlternatingColoring {
            ordering: o.clone(),
            colored: vec![(2, Color::Red), (0, Color::Red)],
        };
        assert!(same.validate().is_err());
        let order = AlternatingColoring {
            ordering: o,
            colored: vec![(1, Color::Red), (0, Color::Blue)],
        };
        assert!(order.validate().is_err());
    }
}
