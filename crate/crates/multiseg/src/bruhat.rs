//! Symmetric-group combinatorics backing the coset comparison layer:
//! the prefix statistic `w[k,l]`, the Bruhat order decided through it, an
//! independent cover-relation oracle, and minimal coset representatives
//! for two-block parabolic quotients.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::Error;

/// Upper bound on the degree accepted by the down-set oracle; |S_9| is
/// already out of reach for the materialized order.
pub const ORACLE_BOUND: usize = 8;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::BadPermutation { n, images });
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `w(k)` for `k` in `1..=n`.
    pub fn image(&self, k: usize) -> u32 {
        self.images[k - 1]
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// All elements covered by `self`: swap an inverted pair of positions
    /// such that the length drops by exactly one.
    fn covered(&self) -> Vec<Permutation> {
        let l = self.length();
        let mut out = Vec::new();
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    let mut v = self.clone();
                    v.images.swap(i, j);
                    if v.length() + 1 == l {
                        out.push(v);
                    }
                }
            }
        }
        out
    }
}

/// One-line notation: plain digits up to n = 9 (`"213"`), comma-separated
/// beyond (`"10,2,..."`).
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.len() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.images.iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let images: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim().parse::<u32>().map_err(|_| Error::Parse {
                        pos: 0,
                        msg: format!("invalid permutation entry {part:?}"),
                    })
                })
                .collect::<Result<_, _>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10).filter(|d| *d > 0).ok_or(Error::Parse {
                        pos: 0,
                        msg: format!("invalid permutation digit {c:?}"),
                    })
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_images(images)
    }
}

fn check_same_n(wp: &Permutation, w: &Permutation) -> Result<usize, Error> {
    if wp.n() != w.n() {
        return Err(Error::PermutationSizeMismatch(wp.n(), w.n()));
    }
    Ok(w.n())
}

/// `w[k,l] = |{a <= k : w(a) >= l}|`.
pub fn w_stat(w: &Permutation, k: usize, l: usize) -> Result<usize, Error> {
    let n = w.n();
    if k < 1 || k > n || l < 1 || l > n {
        return Err(Error::StatIndexRange { k, l, n });
    }
    Ok((1..=k).filter(|&a| w.image(a) as usize >= l).count())
}

/// Bruhat comparison by the statistic criterion: `wp <= w` iff
/// `wp[k,l] <= w[k,l]` for all index pairs.
pub fn bruhat_leq(wp: &Permutation, w: &Permutation) -> Result<bool, Error> {
    let n = check_same_n(wp, w)?;
    for k in 1..=n {
        for l in 1..=n {
            if w_stat(wp, k, l)? > w_stat(w, k, l)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The full down-set `{v : v <= w}` in Bruhat order, materialized by
/// breadth-first search over the cover relation.
pub fn bruhat_lower_set(w: &Permutation) -> Result<BTreeSet<Permutation>, Error> {
    if w.n() > ORACLE_BOUND {
        return Err(Error::OracleBound { n: w.n(), bound: ORACLE_BOUND });
    }
    let mut out = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for v in cur.covered() {
            if out.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    Ok(out)
}

/// Independent Bruhat decision: membership in the materialized down-set.
pub fn bruhat_leq_oracle(wp: &Permutation, w: &Permutation) -> Result<bool, Error> {
    check_same_n(wp, w)?;
    Ok(bruhat_lower_set(w)?.contains(wp))
}

/// Minimal-length representatives of the cosets of the block subgroup
/// fixing `{1..n-i}` and `{n-i+1..n}`: permutations increasing on each
/// block. One per choice of the back block's value set, in lexicographic
/// order of that choice.
pub fn min_coset_reps(n: usize, i: usize) -> Result<Vec<Permutation>, Error> {
    if i > n {
        return Err(Error::BadBlockSplit { front: n.wrapping_sub(i), back: i, n });
    }
    let mut out = Vec::new();
    for back in (1..=n as u32).combinations(i) {
        let back_set: BTreeSet<u32> = back.iter().copied().collect();
        let mut images: Vec<u32> = (1..=n as u32).filter(|v| !back_set.contains(v)).collect();
        images.extend(&back);
        out.push(Permutation::from_images(images).expect("blocks partition 1..=n"));
    }
    Ok(out)
}

/// Whether `w` is increasing on both blocks of the `(n-i, i)` split.
pub fn is_min_coset_rep(w: &Permutation, i: usize) -> Result<bool, Error> {
    let n = w.n();
    if i > n {
        return Err(Error::BadBlockSplit { front: n.wrapping_sub(i), back: i, n });
    }
    let split = n - i;
    let front_ok = (1..split).all(|k| w.image(k) < w.image(k + 1));
    let back_ok = (split + 1..n).all(|k| w.image(k) < w.image(k + 1));
    Ok(front_ok && back_ok)
}

/// The three comparison criteria evaluated on a pair of minimal coset
/// representatives.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CosetCriteria {
    pub leq: bool,
    pub front: bool,
    pub back: bool,
}

/// For `wp`, `w` minimal representatives of the `(n-i, i)` split: Bruhat
/// comparison, the coordinatewise condition `wp(k) <= w(k)` on the front
/// block, and `wp(k) >= w(k)` on the back block.
pub fn coset_criteria_check(
    wp: &Permutation,
    w: &Permutation,
    i: usize,
) -> Result<CosetCriteria, Error> {
    let n = check_same_n(wp, w)?;
    for cand in [wp, w] {
        if !is_min_coset_rep(cand, i)? {
            return Err(Error::NotCosetRep { w: cand.clone(), front: n - i, back: i });
        }
    }
    let split = n - i;
    Ok(CosetCriteria {
        leq: bruhat_leq(wp, w)?,
        front: (1..=split).all(|k| wp.image(k) <= w.image(k)),
        back: (split + 1..=n).all(|k| wp.image(k) >= w.image(k)),
    })
}
