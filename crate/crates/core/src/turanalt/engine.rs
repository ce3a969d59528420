//! Longest sign-alternating selection along a sequence, subject to a
//! monotone constraint on the sets captured by the two sides.
//!
//! Because every constraint used here survives deleting selected items, the
//! best value over sign vectors equals the longest alternating selection of
//! single items, so the search enumerates increasing position sequences
//! with alternating sides. The first side is fixed, as all constraints are
//! symmetric in the two sides.

use crate::bits::{self, Bits};
use crate::exactsolve::{k_color, BitGraph, SearchOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rule {
    /// Neither side contains a set.
    Free,
    /// At most one side contains a set.
    OneSide,
    /// `KG` of the sets inside either side is `(i - 1)`-colorable, `i >= 2`.
    Level(usize),
}

pub(crate) struct Outcome {
    pub best: usize,
    /// Selected positions; sides alternate starting with side 0.
    pub picks: Vec<usize>,
    pub nodes: u64,
}

pub(crate) struct Engine<'a> {
    seq: &'a [usize],
    sets: &'a [Bits],
    through: Vec<Vec<usize>>,
    rule: Rule,
    target: Option<usize>,
    best: usize,
    picks: Vec<usize>,
    cur: Vec<usize>,
    side: [Bits; 2],
    full: [bool; 2],
    contained: Vec<usize>,
    nodes: u64,
}

impl<'a> Engine<'a> {
    /// `seq` lists item ids (all below 128) in order; `sets` are bitsets
    /// over item ids.
    pub fn new(seq: &'a [usize], sets: &'a [Bits], rule: Rule) -> Self {
        let width = seq.iter().max().map_or(0, |&m| m + 1);
        let mut through = vec![Vec::new(); width];
        for (id, &s) in sets.iter().enumerate() {
            for v in bits::iter(s) {
                if v < width {
                    through[v].push(id);
                }
            }
        }
        Engine {
            seq,
            sets,
            through,
            rule,
            target: None,
            best: 0,
            picks: Vec::new(),
            cur: Vec::new(),
            side: [0, 0],
            full: [false, false],
            contained: Vec::new(),
            nodes: 0,
        }
    }

    /// Stop as soon as a selection of this length is found.
    pub fn with_target(mut self, target: usize) -> Self {
        self.target = Some(target);
        self
    }

    pub fn run(mut self) -> Outcome {
        self.dfs(0, 0);
        Outcome {
            best: self.best,
            picks: self.picks,
            nodes: self.nodes,
        }
    }

    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best >= t)
    }

    fn dfs(&mut self, start: usize, s: usize) {
        self.nodes += 1;
        let len = self.seq.len();
        for p in start..len {
            if self.done() || self.cur.len() + 1 + (len - 1 - p) <= self.best {
                return;
            }
            let v = self.seq[p];
            let saved_full = self.full;
            let saved_contained = self.contained.len();
            if self.try_add(v, s) {
                self.cur.push(p);
                if self.cur.len() > self.best {
                    self.best = self.cur.len();
                    self.picks = self.cur.clone();
                }
                self.dfs(p + 1, 1 - s);
                self.cur.pop();
            }
            self.side[s] &= !bits::bit(v);
            self.full = saved_full;
            self.contained.truncate(saved_contained);
        }
    }

    /// Puts `v` on side `s` and reports whether the constraint still holds.
    /// The caller undoes the side bit, `full` and `contained`.
    fn try_add(&mut self, v: usize, s: usize) -> bool {
        self.side[s] |= bits::bit(v);
        let side = self.side[s];
        let new: Vec<usize> = self.through[v]
            .iter()
            .copied()
            .filter(|&e| bits::is_subset(self.sets[e], side))
            .collect();
        match self.rule {
            Rule::Free => new.is_empty(),
            Rule::OneSide => {
                if !new.is_empty() {
                    self.full[s] = true;
                }
                !(self.full[0] && self.full[1])
            }
            Rule::Level(i) => {
                if new.is_empty() {
                    return true;
                }
                let before = self.contained.len();
                self.contained.extend(new);
                if i == 2 {
                    // Every pair involving a new set must intersect.
                    let c = &self.contained;
                    (before..c.len()).all(|a| (0..c.len()).all(|b| a == b || self.sets[c[a]] & self.sets[c[b]] != 0))
                } else {
                    colorable(self.sets, &self.contained, i - 1)
                }
            }
        }
    }
}

/// Whether `KG` of the listed sets has a proper `k`-coloring.
pub(crate) fn colorable(sets: &[Bits], ids: &[usize], k: usize) -> bool {
    if ids.is_empty() {
        return true;
    }
    if k == 0 || ids.len() > bits::MAX_BITS {
        return k > 0 && ids.len() <= k;
    }
    let mut g = BitGraph::new(ids.len()).expect("within bitset cap");
    for a in 0..ids.len() {
        for b in a + 1..ids.len() {
            if sets[ids[a]] & sets[ids[b]] == 0 {
                g.add_edge(a, b);
            }
        }
    }
    let mut nodes = 0;
    matches!(k_color(&g, k, &[], None, &mut nodes), SearchOutcome::Found(_))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(seq: &[usize], sets: &[Bits], rule: Rule) -> usize {
        let n = seq.len();
        let mut best = 0;
        let mut x = vec![0i8; n];
        let total = 3usize.pow(n as u32);
        for code in 1..total {
            let mut c = code;
            for xi in x.iter_mut() {
                *xi = (c % 3) as i8 - 1;
                c /= 3;
            }
            let plus = bits::from_indices((0..n).filter(|&p| x[p] == 1).map(|p| seq[p]));
            let minus = bits::from_indices((0..n).filter(|&p| x[p] == -1).map(|p| seq[p]));
            let inside: Vec<usize> = (0..sets.len())
                .filter(|&e| bits::is_subset(sets[e], plus) || bits::is_subset(sets[e], minus))
                .collect();
            let has = |side: Bits| sets.iter().any(|&s| bits::is_subset(s, side));
            let ok = match rule {
                Rule::Free => inside.is_empty(),
                Rule::OneSide => !(has(plus) && has(minus)),
                Rule::Level(i) => colorable(sets, &inside, i - 1),
            };
            if ok {
                best = best.max(crate::hyperstruct::signs::alt_of(&x));
            }
        }
        best
    }

    #[test]
    fn matches_sign_vector_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(0..=6);
            let sets: Vec<Bits> = (0..m)
                .map(|_| {
                    let k = rng.gen_range(1..=n.min(3));
                    let mut s = 0;
                    while bits::count(s) < k {
                        s |= bits::bit(rng.gen_range(0..n));
                    }
                    s
                })
                .collect();
            let mut seq: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                seq.swap(i, rng.gen_range(0..=i));
            }
            for rule in [Rule::Free, Rule::OneSide, Rule::Level(2), Rule::Level(3)] {
                let got = Engine::new(&seq, &sets, rule).run();
                assert_eq!(got.best, brute(&seq, &sets, rule), "{rule:?} {seq:?} {sets:?}");
                assert_eq!(got.picks.len(), got.best);
            }
        }
    }

    #[test]
    fn target_stops_early() {
        let seq = [0, 1, 2, 3];
        let out = Engine::new(&seq, &[], Rule::Free).with_target(2).run();
        assert!(out.best >= 2);
    }
}
