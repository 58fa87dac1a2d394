//! Segment removal and its fine-grained decomposition.
//!
//! `remove_segment` follows the defining recursion: pick the shortest
//! segment of `h` starting at `a(d)` that covers `b(d)`, shorten the
//! problem, and recurse on the left-truncated remainder of `d`. The
//! recursion either consumes `d` completely or gets stuck, which is the
//! absorbing `Infinity` outcome. `removal_trace` computes the same result
//! in one pass and additionally reports which segments were consumed and
//! what they were cut down to.

use std::fmt;

use crate::core::{ascending_sort, Multisegment, Segment};
use crate::error::Error;

/// Result of removing from a multisegment: either a multisegment or the
/// absorbing failure state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RemovalOutcome {
    Finite(Multisegment),
    Infinity,
}

impl RemovalOutcome {
    pub fn is_infinity(&self) -> bool {
        matches!(self, RemovalOutcome::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Multisegment> {
        match self {
            RemovalOutcome::Finite(m) => Some(m),
            RemovalOutcome::Infinity => None,
        }
    }

    /// Removal applied to an outcome; `Infinity` absorbs.
    pub fn remove_segment(&self, d: Segment) -> RemovalOutcome {
        match self {
            RemovalOutcome::Finite(h) => remove_segment(d, h),
            RemovalOutcome::Infinity => RemovalOutcome::Infinity,
        }
    }

    /// Sequence removal applied to an outcome; `Infinity` absorbs.
    pub fn remove_multi(&self, n: &Multisegment) -> RemovalOutcome {
        match self {
            RemovalOutcome::Finite(h) => remove_multi(n, h),
            RemovalOutcome::Infinity => RemovalOutcome::Infinity,
        }
    }
}

impl fmt::Display for RemovalOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RemovalOutcome::Finite(m) => write!(f, "{m}"),
            RemovalOutcome::Infinity => write!(f, "infinity"),
        }
    }
}

/// The shortest segment of `h` with left endpoint `a(d)` reaching at least
/// `b(d)`, if any. Segments sharing a left endpoint are ordered by right
/// endpoint, so the first qualifying element of the sorted scan is shortest.
pub fn upsilon(d: Segment, h: &Multisegment) -> Option<Segment> {
    h.iter().find(|s| s.a() == d.a() && s.b() >= d.b()).copied()
}

/// Whether `h` has a segment `[a(d), c]` with `c >= b(d)`.
pub fn is_admissible_segment(d: Segment, h: &Multisegment) -> bool {
    upsilon(d, h).is_some()
}

/// Removes `d` from `h` by the step recursion. Each step swaps the chosen
/// cover for its left truncation and shortens `d` from the left; `d`
/// shrinking to empty ends the recursion.
pub fn remove_segment(d: Segment, h: &Multisegment) -> RemovalOutcome {
    let mut cur = h.clone();
    let mut rest = Some(d);
    while let Some(d) = rest {
        let Some(picked) = upsilon(d, &cur) else {
            return RemovalOutcome::Infinity;
        };
        cur.remove_one(picked);
        if let Some(trunc) = picked.left_truncate() {
            cur.insert(trunc);
        }
        rest = d.left_truncate();
    }
    RemovalOutcome::Finite(cur)
}

/// Consumed segments and their truncations.
///
/// `picked[i]` starts strictly right of `picked[i-1]` but no later than
/// `b(d)`, and ends strictly lower while still covering `b(d)`. The
/// recursion only ever works at levels inside `d`, so a candidate starting
/// past `b(d)` can never be picked. `truncated[i]` is what survives of
/// `picked[i]`: cut at the next pick's left endpoint, or for the last pick
/// at `b(d) + 1`, where it may vanish entirely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RemovalTrace {
    pub picked: Vec<Segment>,
    pub truncated: Vec<Option<Segment>>,
    pub result: Multisegment,
}

/// Single-pass removal. Returns `None` when no segment of `h` covers `d`
/// from its left endpoint, which is exactly when the recursion diverges.
pub fn removal_trace(d: Segment, h: &Multisegment) -> Option<RemovalTrace> {
    let first = upsilon(d, h)?;
    let mut picked = vec![first];
    loop {
        let prev = *picked.last().expect("picked is nonempty");
        let next = h
            .iter()
            .filter(|s| {
                s.a() > prev.a() && s.a() <= d.b() && d.b() <= s.b() && s.b() < prev.b()
            })
            .min()
            .copied();
        match next {
            Some(s) => picked.push(s),
            None => break,
        }
    }
    let mut truncated: Vec<Option<Segment>> = picked
        .windows(2)
        .map(|w| Some(Segment::new(w[1].a(), w[0].b()).expect("staircase picks overlap")))
        .collect();
    let last = *picked.last().expect("picked is nonempty");
    if d.b() < last.b() {
        truncated.push(Some(Segment::new(d.b() + 1, last.b()).expect("checked nonempty")));
    } else {
        truncated.push(None);
    }
    let mut result = h.clone();
    for p in &picked {
        if !result.remove_one(*p) {
            return None;
        }
    }
    for t in truncated.iter().flatten() {
        result.insert(*t);
    }
    Some(RemovalTrace { picked, truncated, result })
}

/// Removes the segments of `n` in ascending order, propagating failure.
pub fn remove_multi(n: &Multisegment, h: &Multisegment) -> RemovalOutcome {
    let mut cur = h.clone();
    for d in ascending_sort(n) {
        match remove_segment(d, &cur) {
            RemovalOutcome::Finite(next) => cur = next,
            RemovalOutcome::Infinity => return RemovalOutcome::Infinity,
        }
    }
    RemovalOutcome::Finite(cur)
}

/// Whether every removal in the ascending sequence succeeds.
pub fn is_admissible(n: &Multisegment, h: &Multisegment) -> bool {
    !remove_multi(n, h).is_infinity()
}

/// First picks of the iterated removals at the minimal left endpoint of
/// `n`: processing `n[a]` in order, each entry contributes the cover chosen
/// on the intermediate multisegment left by its predecessors.
///
/// Every pick starts at `a` and each removal step only adds segments
/// starting strictly right of the segments it consumes at `a`, so the picks
/// form a submultisegment of `h[a]`.
pub fn fs(n: &Multisegment, h: &Multisegment) -> Result<Multisegment, Error> {
    let a = n.min_a().ok_or(Error::EmptyMultisegment)?;
    let mut cur = h.clone();
    let mut firsts = Multisegment::new();
    for d in n.select_a(a).iter().copied() {
        let Some(first) = upsilon(d, &cur) else {
            return Err(Error::SequenceNotAdmissible(n.clone(), h.clone()));
        };
        firsts.insert(first);
        match remove_segment(d, &cur) {
            RemovalOutcome::Finite(next) => cur = next,
            RemovalOutcome::Infinity => {
                return Err(Error::SequenceNotAdmissible(n.clone(), h.clone()))
            }
        }
    }
    Ok(firsts)
}

/// Left truncations of a multisegment, dropping those that vanish.
fn truncate_all(m: &Multisegment) -> Multisegment {
    m.iter().filter_map(|s| s.left_truncate()).collect()
}

/// `h` with the first picks swapped for their left truncations.
pub fn trr(n: &Multisegment, h: &Multisegment) -> Result<Multisegment, Error> {
    let picks = fs(n, h)?;
    Ok(h.minus(&picks)
        .expect("first picks form a submultisegment of h")
        .plus(&truncate_all(&picks)))
}

/// `n` with its leftmost layer swapped for that layer's left truncations.
pub fn trd(n: &Multisegment, h: &Multisegment) -> Result<Multisegment, Error> {
    fs(n, h)?;
    let a = n.min_a().ok_or(Error::EmptyMultisegment)?;
    let layer = n.select_a(a);
    Ok(n.minus(&layer).expect("layer comes from n").plus(&truncate_all(&layer)))
}

/// One state of the fine decomposition walk, with the first picks its
/// transition consumes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FineStep {
    pub n: Multisegment,
    pub h: Multisegment,
    pub fs: Multisegment,
}

/// The walk from `(n, h)` until `n` empties, one step per nonempty state.
/// Each transition leaves the removal result unchanged, so applying
/// `remove_multi` at any step reproduces `remove_multi(n, h)`.
pub fn fine_chain(n: &Multisegment, h: &Multisegment) -> Result<Vec<FineStep>, Error> {
    if !is_admissible(n, h) {
        return Err(Error::SequenceNotAdmissible(n.clone(), h.clone()));
    }
    let mut steps = Vec::new();
    let mut cur_n = n.clone();
    let mut cur_h = h.clone();
    while !cur_n.is_empty() {
        let picks = fs(&cur_n, &cur_h)?;
        let next_n = trd(&cur_n, &cur_h)?;
        let next_h = trr(&cur_n, &cur_h)?;
        steps.push(FineStep { n: cur_n, h: cur_h, fs: picks });
        cur_n = next_n;
        cur_h = next_h;
    }
    Ok(steps)
}
