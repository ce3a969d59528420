use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonzero vector over `{-1, 0, +1}`, equivalently a signed pair
/// `(X+, X-)` of disjoint index sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct SignVector(Vec<i8>);

impl TryFrom<Vec<i8>> for SignVector {
    type Error = Error;

    fn try_from(v: Vec<i8>) -> Result<Self> {
        SignVector::new(v)
    }
}

impl From<SignVector> for Vec<i8> {
    fn from(x: SignVector) -> Self {
        x.0
    }
}

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&x| !(-1..=1).contains(&x)) {
            return Err(Error::InvalidParameter(format!("sign entry {bad} not in {{-1,0,+1}}")));
        }
        if entries.iter().all(|&x| x == 0) {
            return Err(Error::InvalidParameter("sign vector is all zero".into()));
        }
        Ok(SignVector(entries))
    }

    /// Builds the vector of length `n` with `+1` on `plus` and `-1` on `minus`.
    pub fn from_supports(n: usize, plus: &[usize], minus: &[usize]) -> Result<Self> {
        let mut v = vec![0i8; n];
        for &i in plus {
            if i >= n {
                return Err(Error::InvalidParameter(format!("index {i} out of range")));
            }
            v[i] = 1;
        }
        for &i in minus {
            if i >= n {
                return Err(Error::InvalidParameter(format!("index {i} out of range")));
            }
            if v[i] == 1 {
                return Err(Error::InvalidParameter(format!("index {i} is in both supports")));
            }
            v[i] = -1;
        }
        SignVector::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn plus(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == 1).collect()
    }

    pub fn minus(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == -1).collect()
    }

    /// Length of the longest sign-alternating subsequence of nonzero
    /// entries, which is the number of maximal runs of equal nonzero sign.
    pub fn alt(&self) -> usize {
        alt_of(&self.0)
    }
}

pub(crate) fn alt_of(entries: &[i8]) -> usize {
    let mut last = 0i8;
    let mut runs = 0;
    for &x in entries {
        if x != 0 && x != last {
            runs += 1;
            last = x;
        }
    }
    runs
}

/// A permutation of `0..n`, read as the sequence `v_{i_1} < v_{i_2} < ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LinearOrdering(Vec<usize>);

impl TryFrom<Vec<usize>> for LinearOrdering {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        LinearOrdering::new(v)
    }
}

impl From<LinearOrdering> for Vec<usize> {
    fn from(s: LinearOrdering) -> Self {
        s.0
    }
}

impl LinearOrdering {
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut seen = vec![false; n];
        for &v in &sequence {
            if v >= n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "ordering is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(LinearOrdering(sequence))
    }

    pub fn identity(n: usize) -> Self {
        LinearOrdering((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.0
    }

    /// Element at position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.0[j]
    }

    /// `inverse()[v]` is the position of `v`.
    pub fn inverse(&self) -> LinearOrdering {
        let mut inv = vec![0; self.0.len()];
        for (j, &v) in self.0.iter().enumerate() {
            inv[v] = j;
        }
        LinearOrdering(inv)
    }

    /// Ordering obtained by renaming each element `v` to `pi[v]`.
    pub fn relabel(&self, pi: &LinearOrdering) -> Result<LinearOrdering> {
        if pi.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: pi.len(),
            });
        }
        Ok(LinearOrdering(self.0.iter().map(|&v| pi.0[v]).collect()))
    }

    pub fn reversed(&self) -> LinearOrdering {
        LinearOrdering(self.0.iter().rev().copied().collect())
    }
}

/// `(X+_sigma, X-_sigma)`: the ground elements at the positions where `x` is
/// `+1` (resp. `-1`), each returned sorted.
pub fn apply_ordering(x: &SignVector, sigma: &LinearOrdering) -> Result<(Vec<usize>, Vec<usize>)> {
    if x.len() != sigma.len() {
        return Err(Error::LengthMismatch {
            expected: sigma.len(),
            actual: x.len(),
        });
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (j, &s) in x.entries().iter().enumerate() {
        match s {
            1 => plus.push(sigma.at(j)),
            -1 => minus.push(sigma.at(j)),
            _ => {}
        }
    }
    plus.sort_unstable();
    minus.sort_unstable();
    Ok((plus, minus))
}
