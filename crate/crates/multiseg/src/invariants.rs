//! Counting invariants of removals: the ε counts, the η vector and its
//! entry sum, the mx aggregate, and the pairwise non-overlapping and
//! intermediate-segment tests they support.

use std::fmt;

use crate::core::{precedes, Multisegment, Segment};
use crate::error::Error;
use crate::minimality::is_minimal;
use crate::removal::{is_admissible_segment, remove_segment, RemovalOutcome};

/// Number of segments of `h` starting at `a(d)` and containing `d`,
/// counted with multiplicity.
pub fn epsilon(d: Segment, h: &Multisegment) -> u64 {
    h.select_a(d.a()).iter().filter(|s| s.b() >= d.b()).count() as u64
}

/// The vector `(ε_{[a,b]}, ε_{[a+1,b]}, ..., ε_{[b,b]})` for a base
/// segment `[a,b]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaVector {
    base: Segment,
    counts: Vec<u64>,
}

impl EtaVector {
    pub fn base(&self) -> Segment {
        self.base
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn sum(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Renders as a parenthesized tuple, e.g. `(2,2,0)`.
impl fmt::Display for EtaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn eta(d: Segment, h: &Multisegment) -> EtaVector {
    let counts = (d.a()..=d.b())
        .map(|ap| epsilon(Segment::new(ap, d.b()).expect("ap <= b"), h))
        .collect();
    EtaVector { base: d, counts }
}

/// Entry sum of the η vector.
pub fn abs_eta(d: Segment, h: &Multisegment) -> u64 {
    eta(d, h).sum()
}

/// The multisegment carrying `ε_{[a',b]}(h)` copies of `[a',b]` for each
/// `a(d) <= a' <= b(d)`.
pub fn mx(h: &Multisegment, d: Segment) -> Multisegment {
    let mut out = Multisegment::new();
    for (j, count) in eta(d, h).counts.iter().enumerate() {
        let s = Segment::new(d.a() + j as i32, d.b()).expect("within base");
        for _ in 0..*count {
            out.insert(s);
        }
    }
    out
}

fn require_ordered(d: Segment, dp: Segment) -> Result<(), Error> {
    if precedes(d, dp) {
        Ok(())
    } else {
        Err(Error::PairNotOrdered(d, dp))
    }
}

/// Whether some segment of `h` starts in `[a(d), a(dp))` while straddling
/// `b(d)` and stopping short of `b(dp)`.
pub fn has_intermediate_segment(
    d: Segment,
    dp: Segment,
    h: &Multisegment,
) -> Result<bool, Error> {
    require_ordered(d, dp)?;
    Ok(h.iter().any(|s| {
        d.a() <= s.a() && s.a() < dp.a() && s.a() <= d.b() && d.b() <= s.b() && s.b() < dp.b()
    }))
}

/// Whether removing `d` leaves the η vector of `dp` unchanged.
pub fn non_overlapping(d: Segment, dp: Segment, h: &Multisegment) -> Result<bool, Error> {
    require_ordered(d, dp)?;
    match remove_segment(d, h) {
        RemovalOutcome::Finite(rest) => Ok(eta(dp, &rest) == eta(dp, h)),
        RemovalOutcome::Infinity => Err(Error::NotAdmissible(d, h.clone())),
    }
}

/// The three equivalent characterizations of a well-separated linked pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairReport {
    pub non_overlapping: bool,
    pub intermediate: bool,
    pub pair_minimal: bool,
}

/// Evaluates all three pair conditions independently. Requires `d` before
/// `dp` and both individually admissible for `h`.
pub fn pair_equivalence_report(
    d: Segment,
    dp: Segment,
    h: &Multisegment,
) -> Result<PairReport, Error> {
    require_ordered(d, dp)?;
    if !is_admissible_segment(d, h) {
        return Err(Error::NotAdmissible(d, h.clone()));
    }
    if !is_admissible_segment(dp, h) {
        return Err(Error::NotAdmissible(dp, h.clone()));
    }
    let pair = Multisegment::from_segments(vec![d, dp]);
    Ok(PairReport {
        non_overlapping: non_overlapping(d, dp, h)?,
        intermediate: has_intermediate_segment(d, dp, h)?,
        pair_minimal: is_minimal(&pair, h),
    })
}
