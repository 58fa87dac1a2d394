//! The intersection-union partial order on multisegments.
//!
//! An elementary move replaces a linked pair by its union and (when nonempty)
//! intersection; `n <= m` holds when `n` arises from `m` by a chain of such
//! moves. The order is decided operationally: breadth-first search over
//! one-move successors. Every move preserves the total length and the
//! multiset of covered integer points, which bounds the search and justifies
//! the quick rejection in `zel_leq`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::core::{is_linked, union_intersection, Multisegment, Segment};
use crate::error::Error;

/// One elementary intersection-union move, identified by the linked pair it
/// consumes. Construction normalizes the pair into `first < second` order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IUMove {
    first: Segment,
    second: Segment,
}

impl IUMove {
    pub fn new(d1: Segment, d2: Segment) -> Result<Self, Error> {
        if !is_linked(d1, d2) {
            return Err(Error::NotLinked(d1, d2));
        }
        let (first, second) = if d1 < d2 { (d1, d2) } else { (d2, d1) };
        Ok(IUMove { first, second })
    }

    pub fn first(self) -> Segment {
        self.first
    }

    pub fn second(self) -> Segment {
        self.second
    }
}

/// `m - first - second + union + intersection`, the intersection dropped
/// when empty. Both move segments must occur in `m`.
pub fn iu_move(m: &Multisegment, mv: IUMove) -> Result<Multisegment, Error> {
    let mut out = m.clone();
    if !(out.remove_one(mv.first) && out.remove_one(mv.second)) {
        return Err(Error::MoveSegmentsAbsent(mv.first, mv.second, m.clone()));
    }
    let (union, inter) = union_intersection(mv.first, mv.second)?;
    out.insert(union);
    if let Some(i) = inter {
        out.insert(i);
    }
    Ok(out)
}

/// All distinct results of a single elementary move.
pub fn iu_successors(m: &Multisegment) -> BTreeSet<Multisegment> {
    let mut out = BTreeSet::new();
    let segs = m.segments();
    for (i, d1) in segs.iter().enumerate() {
        for d2 in &segs[i + 1..] {
            if is_linked(*d1, *d2) {
                let mv = IUMove::new(*d1, *d2).expect("pair is linked");
                out.insert(iu_move(m, mv).expect("pair occurs in m"));
            }
        }
    }
    out
}

/// Covered integer points with multiplicity; invariant under elementary
/// moves, so differing point multisets decide incomparability outright.
fn point_multiset(m: &Multisegment) -> BTreeMap<i32, u64> {
    let mut pts = BTreeMap::new();
    for s in m.iter() {
        for c in s.a()..=s.b() {
            *pts.entry(c).or_insert(0) += 1;
        }
    }
    pts
}

/// Decides `n <= m` in the intersection-union order.
pub fn zel_leq(n: &Multisegment, m: &Multisegment) -> bool {
    if n == m {
        return true;
    }
    if point_multiset(n) != point_multiset(m) {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([m.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in iu_successors(&cur) {
            if next == *n {
                return true;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// The full down-set `{n : n <= m}`, including `m`. Finite: each move
/// strictly increases the sum of squared segment lengths, which is bounded
/// on a fixed point multiset.
pub fn lower_set(m: &Multisegment) -> BTreeSet<Multisegment> {
    let mut out = BTreeSet::from([m.clone()]);
    let mut queue = VecDeque::from([m.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in iu_successors(&cur) {
            if out.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    out
}

/// `{x : lo <= x <= hi}`; the endpoints must be comparable.
pub fn interval(lo: &Multisegment, hi: &Multisegment) -> Result<BTreeSet<Multisegment>, Error> {
    if !zel_leq(lo, hi) {
        return Err(Error::NotComparable(lo.clone(), hi.clone()));
    }
    Ok(lower_set(hi).into_iter().filter(|x| zel_leq(lo, x)).collect())
}

/// Memoized down-sets, keyed by canonical form. Shared handles are cheap to
/// clone; the cache only grows.
#[derive(Default)]
pub struct DownSetCache {
    map: HashMap<Multisegment, Arc<BTreeSet<Multisegment>>>,
}

impl DownSetCache {
    pub fn new() -> Self {
        DownSetCache::default()
    }

    pub fn lower_set(&mut self, m: &Multisegment) -> Arc<BTreeSet<Multisegment>> {
        if let Some(hit) = self.map.get(m) {
            return Arc::clone(hit);
        }
        let computed = Arc::new(lower_set(m));
        self.map.insert(m.clone(), Arc::clone(&computed));
        computed
    }

    pub fn leq(&mut self, n: &Multisegment, m: &Multisegment) -> bool {
        n == m || self.lower_set(m).contains(n)
    }
}

/// DOT digraph of the order restricted to `nodes`: one edge per covering
/// pair (transitive reduction), aimed from the larger to the smaller node.
/// One-move successors can skip levels, so the reduction is computed from
/// the full comparability relation, not from the move graph.
pub fn hasse_dot(nodes: &BTreeSet<Multisegment>) -> String {
    let nodes: Vec<&Multisegment> = nodes.iter().collect();
    let k = nodes.len();
    let mut cache = DownSetCache::new();
    let mut below = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            below[i][j] = i != j && cache.leq(nodes[j], nodes[i]);
        }
    }
    let mut dot = String::from("digraph hasse {\n");
    for n in &nodes {
        let _ = writeln!(dot, "  \"{n}\";");
    }
    for i in 0..k {
        for j in 0..k {
            let covers = below[i][j] && !(0..k).any(|w| below[i][w] && below[w][j]);
            if covers {
                let _ = writeln!(dot, "  \"{}\" -> \"{}\";", nodes[i], nodes[j]);
            }
        }
    }
    dot.push_str("}\n");
    dot
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
    fn iu_move_examples() {
        let m = ms("[1,2]+[2,3]+[4,5]");
        let mv = IUMove::new(seg(1, 2), seg(2, 3)).unwrap();
        assert_eq!(iu_move(&m, mv).unwrap(), ms("[1,3]+[2]+[4,5]"));
        let mv = IUMove::new(seg(2, 3), seg(4, 5)).unwrap();
        assert_eq!(iu_move(&m, mv).unwrap(), ms("[1,2]+[2,5]"));
        let mv = IUMove::new(seg(1, 2), seg(3, 4)).unwrap();
        assert_eq!(iu_move(&ms("[1,2]+[3,4]"), mv).unwrap(), ms("[1,4]"));
        assert!(iu_move(&ms("[1,2]"), mv).is_err());
        assert!(IUMove::new(seg(1, 4), seg(2, 3)).is_err());
    }

    #[test]
    fn successor_examples() {
        assert!(iu_successors(&ms("[1,3]+[2]")).is_empty());
        let one = iu_successors(&ms("[1,2]+[2,3]"));
        assert_eq!(one, BTreeSet::from([ms("[1,3]+[2]")]));
        // [1,2]/[4,5] is not linked, so exactly two moves exist
        let two = iu_successors(&ms("[1,2]+[2,3]+[4,5]"));
        assert_eq!(two.len(), 2);
        assert!(two.contains(&ms("[1,3]+[2]+[4,5]")));
        assert!(two.contains(&ms("[1,2]+[2,5]")));
    }

    #[test]
    fn leq_examples() {
        assert!(zel_leq(&ms("[1,3]+[2]+[4,5]"), &ms("[1,2]+[2,3]+[4,5]")));
        assert!(zel_leq(&ms("[1,2]+[2,5]"), &ms("[1,2]+[2,3]+[4,5]")));
        let m = ms("[0,2]+[1,3]");
        assert!(zel_leq(&m, &m));
        assert!(zel_leq(&ms("[1,3]+[2]"), &ms("[1,2]+[2,3]")));
        assert!(!zel_leq(&ms("[1,2]+[2,3]"), &ms("[1,3]+[2]")));
    }

    #[test]
    fn lower_set_examples() {
        assert_eq!(lower_set(&ms("[1,3]+[2]")), BTreeSet::from([ms("[1,3]+[2]")]));
        assert_eq!(
            lower_set(&ms("[1,2]+[2,3]")),
            BTreeSet::from([ms("[1,2]+[2,3]"), ms("[1,3]+[2]")])
        );
        assert_eq!(lower_set(&Multisegment::new()), BTreeSet::from([Multisegment::new()]));
    }

    #[test]
    fn interval_examples() {
        let m = ms("[1,2]+[2,3]");
        assert_eq!(interval(&m, &m).unwrap(), BTreeSet::from([m.clone()]));
        assert_eq!(
            interval(&ms("[1,3]+[2]"), &m).unwrap(),
            BTreeSet::from([m.clone(), ms("[1,3]+[2]")])
        );
        assert!(interval(&m, &ms("[1,3]+[2]")).is_err());
    }

    #[test]
    fn hasse_edges() {
        let nodes = lower_set(&ms("[1,2]+[2,3]"));
        let dot = hasse_dot(&nodes);
        assert!(dot.contains("\"[1,2]+[2,3]\" -> \"[1,3]+[2]\";"), "{dot}");
        let single = hasse_dot(&BTreeSet::from([ms("[1,2]")]));
        assert!(single.contains("\"[1,2]\";"));
        assert!(!single.contains("->"));
    }

    #[test]
    fn hasse_skips_transitive_edges() {
        // chain of three: top, middle, bottom; only two cover edges survive
        let top = ms("[1]+[2]+[3]");
        let mid = ms("[1,2]+[3]");
        let mid2 = ms("[1]+[2,3]");
        let bot = ms("[1,3]");
        let dot = hasse_dot(&BTreeSet::from([top.clone(), mid.clone(), mid2, bot.clone()]));
        assert!(!dot.contains(&format!("\"{top}\" -> \"{bot}\";")), "{dot}");
        assert!(dot.contains(&format!("\"{mid}\" -> \"{bot}\";")), "{dot}");
    }
}
