//! Segments, multisegments, and their canonical forms.
//!
//! A segment `[a,b]` is a nonempty integer interval; a multisegment is a
//! finite multiset of segments kept as a `(a,b)`-lexicographically sorted
//! sequence, so equality of the sorted sequences is equality of multisets.
//! The empty segment is never stored: operations that may produce one
//! (`left_truncate`, the intersection of an adjacent linked pair) return an
//! optional value instead.

use std::fmt;

use crate::error::Error;
use crate::text;

/// A nonempty integer interval `[a, b]`, `a <= b`.
///
/// The derived ordering is lexicographic by `(a, b)`, which is the order
/// written `≺^L` below: first by left endpoint, then by right endpoint.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    a: i32,
    b: i32,
}

impl Segment {
    /// Endpoints stay one step inside the `i32` limits so that `a - 1` and
    /// `b + 1` are always representable.
    pub fn new(a: i32, b: i32) -> Result<Self, Error> {
        if b < a {
            return Err(Error::EmptySegment { a: a.into(), b: b.into() });
        }
        if a == i32::MIN || b == i32::MAX {
            return Err(Error::EndpointRange { a: a.into(), b: b.into() });
        }
        Ok(Segment { a, b })
    }

    pub fn singleton(c: i32) -> Result<Self, Error> {
        Segment::new(c, c)
    }

    pub fn a(self) -> i32 {
        self.a
    }

    pub fn b(self) -> i32 {
        self.b
    }

    /// Number of integer points, `b - a + 1`. Never zero: `a <= b` holds
    /// by construction, so there is no `is_empty` to pair this with.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> u64 {
        (i64::from(self.b) - i64::from(self.a) + 1) as u64
    }

    /// `l_abs` of a single segment: `(b - a + 1) * deg(rho)`.
    pub fn l_abs(self, cfg: Config) -> u64 {
        self.len() * u64::from(cfg.rho_degree())
    }

    /// Set containment `other ⊆ self`.
    pub fn contains(self, other: Segment) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// `⁻Δ = [a+1, b]`; a singleton truncates to the empty segment, which is
    /// not a value of this type.
    pub fn left_truncate(self) -> Option<Segment> {
        (self.a < self.b).then(|| Segment { a: self.a + 1, b: self.b })
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_segment(*self))
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Two segments are linked when one reaches past the other and they touch or
/// overlap: `a < a' <= b+1 <= b'` or the same with the roles swapped.
/// Nested or equal segments are unlinked, as are segments with a gap.
pub fn is_linked(d1: Segment, d2: Segment) -> bool {
    precedes(d1, d2) || precedes(d2, d1)
}

/// The oriented half of linkedness: `d < dp` in the sense `a(d) < a(dp) <=
/// b(d)+1 <= b(dp)`. For a linked pair exactly one orientation holds.
// The chained `<= b+1 <=` mirrors the defining inequality; `b+1` cannot
// overflow because `i32::MAX` endpoints are rejected at construction.
#[allow(clippy::int_plus_one)]
pub fn precedes(d: Segment, dp: Segment) -> bool {
    d.a < dp.a && dp.a <= d.b + 1 && d.b + 1 <= dp.b
}

/// Union and intersection of a linked pair: `([a,b'], [a',b])` after
/// orienting the pair as `d < d'`. The intersection is absent exactly when
/// the segments are adjacent (`a' = b + 1`).
pub fn union_intersection(d1: Segment, d2: Segment) -> Result<(Segment, Option<Segment>), Error> {
    let (lo, hi) = if precedes(d1, d2) {
        (d1, d2)
    } else if precedes(d2, d1) {
        (d2, d1)
    } else {
        return Err(Error::NotLinked(d1, d2));
    };
    let union = Segment { a: lo.a, b: hi.b };
    let inter = (hi.a <= lo.b).then_some(Segment { a: hi.a, b: lo.b });
    Ok((union, inter))
}

/// A finite multiset of segments in canonical (sorted) form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    pub fn new() -> Self {
        Multisegment::default()
    }

    pub fn from_segments(mut segs: Vec<Segment>) -> Self {
        segs.sort_unstable();
        Multisegment { segs }
    }

    /// The segments in canonical `(a,b)`-lex order, repeats meaning
    /// multiplicity.
    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Segment> {
        self.segs.iter()
    }

    /// Number of segments counted with multiplicity.
    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    pub fn contains(&self, d: Segment) -> bool {
        self.segs.binary_search(&d).is_ok()
    }

    pub fn multiplicity(&self, d: Segment) -> usize {
        let lo = self.segs.partition_point(|s| *s < d);
        self.segs[lo..].iter().take_while(|s| **s == d).count()
    }

    /// Insert one occurrence, keeping the canonical order.
    pub fn insert(&mut self, d: Segment) {
        let at = self.segs.partition_point(|s| *s <= d);
        self.segs.insert(at, d);
    }

    /// Remove one occurrence; `false` when absent.
    pub fn remove_one(&mut self, d: Segment) -> bool {
        match self.segs.binary_search(&d) {
            Ok(at) => {
                self.segs.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    /// `self + d` as a fresh multisegment.
    pub fn with(&self, d: Segment) -> Multisegment {
        let mut out = self.clone();
        out.insert(d);
        out
    }

    /// `self - d`, failing when `d` is absent.
    pub fn without(&self, d: Segment) -> Result<Multisegment, Error> {
        let mut out = self.clone();
        if out.remove_one(d) {
            Ok(out)
        } else {
            Err(Error::SegmentAbsent(d, self.clone()))
        }
    }

    /// Multiset sum.
    pub fn plus(&self, other: &Multisegment) -> Multisegment {
        let mut segs = Vec::with_capacity(self.segs.len() + other.segs.len());
        segs.extend_from_slice(&self.segs);
        segs.extend_from_slice(&other.segs);
        Multisegment::from_segments(segs)
    }

    /// Multiset difference; `None` when `other` is not contained in `self`.
    pub fn minus(&self, other: &Multisegment) -> Option<Multisegment> {
        let mut out = self.clone();
        for d in other.iter() {
            if !out.remove_one(*d) {
                return None;
            }
        }
        Some(out)
    }

    /// `m[c]`: the segments with left endpoint `c`, with multiplicity.
    pub fn select_a(&self, c: i32) -> Multisegment {
        Multisegment {
            segs: self.segs.iter().copied().filter(|s| s.a() == c).collect(),
        }
    }

    /// `m⟨c⟩`: the segments with right endpoint `c`, with multiplicity.
    pub fn select_b(&self, c: i32) -> Multisegment {
        Multisegment {
            segs: self.segs.iter().copied().filter(|s| s.b() == c).collect(),
        }
    }

    pub fn l_abs(&self, cfg: Config) -> u64 {
        self.segs.iter().map(|s| s.l_abs(cfg)).sum()
    }

    /// Multiset containment with multiplicities.
    pub fn is_submultisegment_of(&self, m: &Multisegment) -> bool {
        m.minus(self).is_some()
    }

    /// Smallest left endpoint, if any. First in canonical order.
    pub fn min_a(&self) -> Option<i32> {
        self.segs.first().map(|s| s.a())
    }

    /// Largest right endpoint, if any.
    pub fn max_b(&self) -> Option<i32> {
        self.segs.iter().map(|s| s.b()).max()
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::from_segments(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Multisegment {
    type Item = &'a Segment;
    type IntoIter = std::slice::Iter<'a, Segment>;
    fn into_iter(self) -> Self::IntoIter {
        self.segs.iter()
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_multisegment(self))
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Scalar configuration: the degree of the underlying cuspidal datum. It
/// scales `l_abs` and nothing else.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Config {
    rho_degree: u32,
}

impl Config {
    pub fn new(rho_degree: u32) -> Result<Self, Error> {
        if rho_degree == 0 {
            return Err(Error::BadDegree);
        }
        Ok(Config { rho_degree })
    }

    pub fn rho_degree(self) -> u32 {
        self.rho_degree
    }
}

impl Default for Config {
    fn default() -> Self {
        Config { rho_degree: 1 }
    }
}

/// The canonical ascending order: `(a,b)`-lex. Same-`a` segments are nested
/// or equal, hence unlinked, so the lex sort always passes `is_ascending`.
pub fn ascending_sort(m: &Multisegment) -> Vec<Segment> {
    let mut segs = m.segments().to_vec();
    segs.sort_unstable();
    segs
}

/// A sequence is ascending when every earlier-vs-later pair is unlinked or
/// has strictly increasing left endpoints.
pub fn is_ascending(s: &[Segment]) -> bool {
    for (i, di) in s.iter().enumerate() {
        for dj in &s[i + 1..] {
            if is_linked(*di, *dj) && di.a() >= dj.a() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_multisegment;

    fn seg(a: i32, b: i32) -> Segment {
        Segment::new(a, b).unwrap()
    }

    fn ms(s: &str) -> Multisegment {
        parse_multisegment(s).unwrap()
    }

    #[test]
    fn linked_examples() {
        assert!(is_linked(seg(2, 3), seg(4, 5)));
        assert!(!is_linked(seg(1, 3), seg(1, 5)));
        assert!(!is_linked(seg(1, 4), seg(2, 3)));
        // symmetry
        assert!(is_linked(seg(4, 5), seg(2, 3)));
    }

    #[test]
    fn union_intersection_examples() {
        assert_eq!(
            union_intersection(seg(1, 2), seg(2, 3)).unwrap(),
            (seg(1, 3), Some(seg(2, 2)))
        );
        assert_eq!(union_intersection(seg(1, 2), seg(3, 5)).unwrap(), (seg(1, 5), None));
        assert_eq!(
            union_intersection(seg(0, 3), seg(2, 5)).unwrap(),
            (seg(0, 5), Some(seg(2, 3)))
        );
        // argument order is irrelevant
        assert_eq!(
            union_intersection(seg(2, 3), seg(1, 2)).unwrap(),
            (seg(1, 3), Some(seg(2, 2)))
        );
        assert!(union_intersection(seg(1, 4), seg(2, 3)).is_err());
    }

    #[test]
    fn ascending_sort_examples() {
        assert_eq!(
            ascending_sort(&ms("[2,3]+[1,2]+[4,5]")),
            vec![seg(1, 2), seg(2, 3), seg(4, 5)]
        );
        assert_eq!(ascending_sort(&ms("0")), Vec::new());
        let sorted = ascending_sort(&ms("[1,5]+[1,3]"));
        assert_eq!(sorted, vec![seg(1, 3), seg(1, 5)]);
        assert!(is_ascending(&sorted));
    }

    #[test]
    fn is_ascending_examples() {
        assert!(is_ascending(&[seg(1, 2), seg(2, 3)]));
        assert!(!is_ascending(&[seg(2, 3), seg(1, 2)]));
        assert!(is_ascending(&[seg(1, 4), seg(2, 3)]));
        assert!(is_ascending(&[seg(2, 3), seg(1, 4)]));
    }

    #[test]
    fn selectors() {
        let m = ms("[1,4]+[1,3]+[2,5]");
        assert_eq!(m.select_a(1), ms("[1,4]+[1,3]"));
        assert_eq!(ms("[1,4]+[2,5]+[2,4]").select_b(4), ms("[1,4]+[2,4]"));
        assert_eq!(Multisegment::new().select_a(0), Multisegment::new());
    }

    #[test]
    fn l_abs_examples() {
        assert_eq!(ms("[1,3]").l_abs(Config::default()), 3);
        assert_eq!(ms("[1,3]+[2]").l_abs(Config::new(2).unwrap()), 8);
        assert_eq!(Multisegment::new().l_abs(Config::default()), 0);
    }

    #[test]
    fn left_truncate_examples() {
        assert_eq!(seg(1, 3).left_truncate(), Some(seg(2, 3)));
        assert_eq!(seg(2, 2).left_truncate(), None);
        assert_eq!(seg(0, 5).left_truncate(), Some(seg(1, 5)));
    }

    #[test]
    fn submultisegment_examples() {
        assert!(ms("[1,2]").is_submultisegment_of(&ms("[1,2]+[1,2]")));
        assert!(!ms("[1,2]+[1,2]+[1,2]").is_submultisegment_of(&ms("[1,2]+[1,2]")));
        assert!(Multisegment::new().is_submultisegment_of(&ms("[1,2]")));
        assert!(Multisegment::new().is_submultisegment_of(&Multisegment::new()));
    }

    #[test]
    fn multiplicity_and_edits() {
        let m = ms("[1,2]+[1,2]+[2,3]");
        assert_eq!(m.multiplicity(seg(1, 2)), 2);
        assert_eq!(m.multiplicity(seg(2, 3)), 1);
        assert_eq!(m.multiplicity(seg(0, 0)), 0);
        assert_eq!(m.without(seg(1, 2)).unwrap(), ms("[1,2]+[2,3]"));
        assert!(m.without(seg(3, 3)).is_err());
        assert_eq!(m.with(seg(0, 0)), ms("[0]+[1,2]+[1,2]+[2,3]"));
        assert_eq!(m.minus(&ms("[1,2]+[2,3]")).unwrap(), ms("[1,2]"));
        assert_eq!(m.minus(&ms("[2,3]+[2,3]")), None);
    }

    #[test]
    fn rejects_empty_segment() {
        assert!(Segment::new(3, 2).is_err());
        assert!(Segment::new(i32::MIN, 0).is_err());
        assert!(Segment::new(0, i32::MAX).is_err());
    }
}
