//! Minimal removal sequences: the local criterion on fine chains, the
//! brute-force order-theoretic oracle, descent to the minimal element,
//! fiber enumeration, consecutive pairs, extension and subsequence checks,
//! and realization by Speh parameters.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::campaign::CampaignReport;
use crate::core::{ascending_sort, is_linked, Multisegment, Segment};
use crate::error::Error;
use crate::invariants::eta;
use crate::removal::{fine_chain, fs, remove_multi, RemovalOutcome};
use crate::zelevinsky::{iu_successors, lower_set};

/// Whether the first fine-chain transition out of `(n, h)` wastes a cover:
/// some segment of the next layer `n[a+1]` sits inside more first picks
/// than inside segments of the current layer `n[a]`.
pub fn is_locally_minimizable(n: &Multisegment, h: &Multisegment) -> Result<bool, Error> {
    let a = n.min_a().ok_or(Error::EmptyMultisegment)?;
    let picks = fs(n, h)?;
    let layer = n.select_a(a);
    let next_layer = n.select_a(a + 1);
    Ok(next_layer.iter().any(|d| {
        let in_layer = layer.iter().filter(|s| s.contains(*d)).count();
        let in_picks = picks.iter().filter(|s| s.contains(*d)).count();
        in_layer < in_picks
    }))
}

/// Whether `n` is minimal for `h`: no state of the fine chain is locally
/// minimizable. Inadmissible `n` is not minimal by convention.
pub fn is_minimal(n: &Multisegment, h: &Multisegment) -> bool {
    let Ok(chain) = fine_chain(n, h) else {
        return false;
    };
    chain
        .iter()
        .all(|st| !is_locally_minimizable(&st.n, &st.h).expect("chain states are admissible"))
}

/// Order-theoretic definition of minimality, decided by scanning the whole
/// down-set of `n` for a strictly smaller multisegment with the same
/// removal result. Independent of the fine-chain criterion.
pub fn is_minimal_bruteforce(n: &Multisegment, h: &Multisegment) -> bool {
    let target = remove_multi(n, h);
    if target.is_infinity() {
        return false;
    }
    lower_set(n)
        .iter()
        .all(|np| np == n || remove_multi(np, h) != target)
}

/// Greedy descent to the minimal element of `S(h, remove_multi(n, h))`:
/// step to the first one-move successor preserving the removal result
/// until none exists. Deterministic: successors come in canonical order.
pub fn find_minimal(n: &Multisegment, h: &Multisegment) -> Result<Multisegment, Error> {
    let target = remove_multi(n, h);
    if target.is_infinity() {
        return Err(Error::SequenceNotAdmissible(n.clone(), h.clone()));
    }
    let mut cur = n.clone();
    loop {
        let next = iu_successors(&cur)
            .into_iter()
            .find(|np| remove_multi(np, h) == target);
        match next {
            Some(np) => cur = np,
            None => return Ok(cur),
        }
    }
}

/// All multisegments with segments inside `window` whose removal from `h`
/// yields `target`. `window` defaults to the support of `h`. The total
/// length is forced, so the search space is finite even though per-segment
/// multiplicity is unbounded.
pub fn enumerate_s(
    h: &Multisegment,
    target: &Multisegment,
    window: Option<(i32, i32)>,
) -> Result<BTreeSet<Multisegment>, Error> {
    let lh: u64 = h.iter().map(|s| s.len()).sum();
    let lt: u64 = target.iter().map(|s| s.len()).sum();
    if lh < lt {
        return Err(Error::LengthMismatch { h: h.clone(), target: target.clone() });
    }
    let need = lh - lt;
    let mut out = BTreeSet::new();
    if need == 0 {
        if h == target {
            out.insert(Multisegment::new());
        }
        return Ok(out);
    }
    let (lo, hi) = match window {
        Some((lo, hi)) => {
            if lo > hi {
                return Err(Error::BadWindow { lo: i64::from(lo), hi: i64::from(hi) });
            }
            (lo, hi)
        }
        None => (
            h.min_a().expect("h is nonempty when need > 0"),
            h.max_b().expect("h is nonempty when need > 0"),
        ),
    };
    let mut pool = Vec::new();
    for a in lo..=hi {
        for b in a..=hi {
            let s = Segment::new(a, b)?;
            if s.len() <= need {
                pool.push(s);
            }
        }
    }
    let mut stack = Vec::new();
    enumerate_rec(&pool, 0, need, &mut stack, h, target, &mut out);
    Ok(out)
}

fn enumerate_rec(
    pool: &[Segment],
    start: usize,
    remaining: u64,
    stack: &mut Vec<Segment>,
    h: &Multisegment,
    target: &Multisegment,
    out: &mut BTreeSet<Multisegment>,
) {
    if remaining == 0 {
        let cand = Multisegment::from_segments(stack.clone());
        if remove_multi(&cand, h).as_finite() == Some(target) {
            out.insert(cand);
        }
        return;
    }
    for i in start..pool.len() {
        let s = pool[i];
        if s.len() <= remaining {
            stack.push(s);
            enumerate_rec(pool, i, remaining - s.len(), stack, h, target, out);
            stack.pop();
        }
    }
}

/// All submultisegments of `n` (the empty one and `n` itself included), in
/// a deterministic order.
pub fn submultisegments(n: &Multisegment) -> Vec<Multisegment> {
    let mut values: Vec<(Segment, usize)> = Vec::new();
    for s in n.iter() {
        match values.last_mut() {
            Some((v, k)) if v == s => *k += 1,
            _ => values.push((*s, 1)),
        }
    }
    let mut out = vec![Multisegment::new()];
    for (v, k) in values {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for base in &out {
            let mut cur = base.clone();
            next.push(cur.clone());
            for _ in 0..k {
                cur.insert(v);
                next.push(cur.clone());
            }
        }
        out = next;
    }
    out
}

/// Linked pairs of `m` with nothing in between: no third occurrence lies in
/// the coordinate rectangle spanned by the pair while being linked to
/// either member. Pairs are reported with the earlier segment first; a
/// repeated value can block its own pair.
pub fn consecutive_pairs(m: &Multisegment) -> Vec<(Segment, Segment)> {
    let values: Vec<Segment> = m.iter().copied().dedup().collect();
    let mut out = Vec::new();
    for (i, &d1) in values.iter().enumerate() {
        for &d2 in &values[i + 1..] {
            if !is_linked(d1, d2) {
                continue;
            }
            let mut rest = m.clone();
            rest.remove_one(d1);
            rest.remove_one(d2);
            let blocked = rest.iter().any(|s| {
                d1.a() <= s.a()
                    && s.a() <= d2.a()
                    && d1.b() <= s.b()
                    && s.b() <= d2.b()
                    && (is_linked(*s, d1) || is_linked(*s, d2))
            });
            if !blocked {
                out.push((d1, d2));
            }
        }
    }
    out
}

/// The two sides of the extension criterion for appending a dominating
/// segment to an already minimal sequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DaggerCheck {
    pub minimal_with: bool,
    pub eta_equal: bool,
}

/// For minimal `n` and a segment `d` strictly dominating every member of
/// `n` in both endpoints: whether `n + d` stays minimal, and whether the
/// η vector of `d` survives the removal of `n`.
pub fn check_dagger_extension(
    n: &Multisegment,
    h: &Multisegment,
    d: Segment,
) -> Result<DaggerCheck, Error> {
    if !is_minimal(n, h) {
        return Err(Error::NotMinimal(n.clone(), h.clone()));
    }
    if !n.iter().all(|s| s.a() < d.a() && s.b() < d.b()) {
        return Err(Error::BadExtension { d, n: n.clone() });
    }
    let rest = match remove_multi(n, h) {
        RemovalOutcome::Finite(rest) => rest,
        RemovalOutcome::Infinity => unreachable!("minimal implies admissible"),
    };
    Ok(DaggerCheck {
        minimal_with: is_minimal(&n.with(d), h),
        eta_equal: eta(d, &rest) == eta(d, h),
    })
}

/// Checks that minimality survives passing to any submultisegment, and in
/// the split form: every ascending-order prefix stays minimal for `h` and
/// every suffix stays minimal for the prefix's removal result.
pub fn check_subsequent(n: &Multisegment, h: &Multisegment) -> Result<CampaignReport, Error> {
    if !is_minimal(n, h) {
        return Err(Error::NotMinimal(n.clone(), h.clone()));
    }
    let mut report = CampaignReport::new(0);
    for sub in submultisegments(n) {
        report.record(
            is_minimal(&sub, h),
            || format!("n={n} h={h} sub={sub}"),
            "minimal",
            "not minimal",
        );
    }
    let asc = ascending_sort(n);
    for split in 0..=asc.len() {
        let prefix: Multisegment = asc[..split].iter().copied().collect();
        let suffix: Multisegment = asc[split..].iter().copied().collect();
        report.record(
            is_minimal(&prefix, h),
            || format!("n={n} h={h} prefix={prefix}"),
            "minimal",
            "not minimal",
        );
        match remove_multi(&prefix, h) {
            RemovalOutcome::Finite(rest) => {
                report.record(
                    is_minimal(&suffix, &rest),
                    || format!("n={n} h={h} prefix={prefix} suffix={suffix} rest={rest}"),
                    "minimal",
                    "not minimal",
                );
            }
            RemovalOutcome::Infinity => {
                report.record(
                    false,
                    || format!("n={n} h={h} prefix={prefix}"),
                    "admissible prefix",
                    "infinity",
                );
            }
        }
    }
    Ok(report)
}

/// Applies the single-segment removals of `n` in every distinct order and
/// records, per order, whether the outcome matches the ascending-order
/// result. Disagreements are reported, not asserted: the orders are not
/// required to commute at this combinatorial level.
pub fn check_order_shadow(n: &Multisegment, h: &Multisegment) -> CampaignReport {
    let target = remove_multi(n, h);
    let mut report = CampaignReport::new(0);
    let orders: BTreeSet<Vec<Segment>> = n
        .segments()
        .iter()
        .copied()
        .permutations(n.len())
        .collect();
    for order in orders {
        let mut cur = RemovalOutcome::Finite(h.clone());
        for d in &order {
            cur = cur.remove_segment(*d);
        }
        let rendered: String = order.iter().map(|s| s.to_string()).join(";");
        report.record(
            cur == target,
            || format!("n={n} h={h} order={rendered}"),
            &target.to_string(),
            &cur.to_string(),
        );
    }
    report
}

/// Parameters `(c, d, m)` of an essentially Speh representation: `d` the
/// segment length, `m` the number of rows, matching parity so the center
/// `c` is integral.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpehParams {
    c: i64,
    d: u64,
    m: u64,
}

impl SpehParams {
    pub fn new(c: i64, d: u64, m: u64) -> Result<Self, Error> {
        if d == 0 || m == 0 || d % 2 != m % 2 {
            return Err(Error::BadSpehParams { d, m });
        }
        let p = SpehParams { c, d, m };
        let (lo, hi) = p.hd_endpoints();
        if i32::try_from(lo).is_err() || i32::try_from(hi).is_err() {
            return Err(Error::EndpointRange { a: lo, b: hi });
        }
        Segment::new(lo as i32, hi as i32)?;
        Ok(p)
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    fn hd_endpoints(&self) -> (i64, i64) {
        let d = self.d as i64;
        let m = self.m as i64;
        (self.c - (d - m) / 2, self.c + (d + m - 2) / 2)
    }

    /// The single segment of the highest-derivative multisegment:
    /// `[c - (d-m)/2, c + (d+m-2)/2]`, of length `d`.
    pub fn hd_segment(&self) -> Segment {
        let (lo, hi) = self.hd_endpoints();
        Segment::new(lo as i32, hi as i32).expect("validated at construction")
    }

    /// Exponent range of the cuspidal support, `[b - (d+m-2), b]` for
    /// `b` the right endpoint of the segment.
    pub fn support_window(&self) -> (i64, i64) {
        let hi = i64::from(self.hd_segment().b());
        (hi - (self.d as i64 + self.m as i64 - 2), hi)
    }
}

/// Realizes `m` as the highest-derivative data of a product of Speh
/// representations: segments are processed by increasing right endpoint,
/// each taking the smallest admissible row count `m_i` so that its support
/// window covers all previous ones.
pub fn speh_realization(input: &Multisegment) -> Vec<SpehParams> {
    let mut by_b: Vec<Segment> = input.segments().to_vec();
    by_b.sort_unstable_by_key(|s| (s.b(), s.a()));
    let mut out = Vec::with_capacity(by_b.len());
    let mut prev_lo: Option<i64> = None;
    for s in by_b {
        let d = s.len() as i64;
        let b = i64::from(s.b());
        let mut m = match prev_lo {
            None => 1,
            Some(lo) => (b - lo - d + 2).max(1),
        };
        if (m - d).rem_euclid(2) != 0 {
            m += 1;
        }
        let c = b - (d + m - 2) / 2;
        let params =
            SpehParams::new(c, d as u64, m as u64).expect("constructed to satisfy invariants");
        prev_lo = Some(params.support_window().0);
        out.push(params);
    }
    out
}
