//! Verification campaigns. Each campaign cross-checks one family of claims
//! by independent routes, either exhaustively over a bounded universe or on
//! seeded random instances, and produces a deterministic report.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::bruhat::{
    bruhat_leq, bruhat_leq_oracle, bruhat_lower_set, coset_criteria_check, min_coset_reps,
    Permutation,
};
use crate::core::{is_linked, precedes, Multisegment, Segment};
use crate::error::Error;
use crate::gen::{enumerate_universe, gen_from_rng, segments_in_window, GenParams};
use crate::invariants::pair_equivalence_report;
use crate::minimality::{
    check_dagger_extension, check_order_shadow, check_subsequent, enumerate_s, find_minimal,
    is_minimal, is_minimal_bruteforce, speh_realization,
};
use crate::removal::{
    is_admissible, is_admissible_segment, remove_multi, remove_segment, removal_trace, upsilon,
    RemovalOutcome,
};
use crate::zelevinsky::{iu_successors, DownSetCache};

/// One failed check: the inputs that produced it and both sides of the
/// disagreement, all in parseable text form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Counterexample {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Tally of a campaign run. `passes + counterexamples.len() == instances`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CampaignReport {
    pub seed: u64,
    pub instances: u64,
    pub passes: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl CampaignReport {
    pub fn new(seed: u64) -> Self {
        CampaignReport { seed, ..CampaignReport::default() }
    }

    /// Tallies one check. The inputs closure runs only on failure, so hot
    /// loops pay no formatting cost for passing instances.
    pub fn record(&mut self, pass: bool, inputs: impl FnOnce() -> String, expected: &str, actual: &str) {
        self.instances += 1;
        if pass {
            self.passes += 1;
        } else {
            self.counterexamples.push(Counterexample {
                inputs: inputs(),
                expected: expected.to_owned(),
                actual: actual.to_owned(),
            });
        }
    }

    /// Folds a sub-report into this one.
    pub fn absorb(&mut self, other: CampaignReport) {
        self.instances += other.instances;
        self.passes += other.passes;
        self.counterexamples.extend(other.counterexamples);
    }

    /// Sorts counterexamples so equal runs serialize identically.
    pub fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Generation bounds plus an instance budget for the seeded campaigns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CampaignParams {
    pub gen: GenParams,
    pub count: u64,
}

impl Default for CampaignParams {
    fn default() -> Self {
        CampaignParams { gen: GenParams::default(), count: 200 }
    }
}

pub const CAMPAIGNS: &[&str] = &[
    "removal-equivalence",
    "lemma-properties",
    "pair-equivalence",
    "minimality-criterion",
    "unique-minimal",
    "convexity",
    "subsequent",
    "dagger",
    "order-shadow",
    "bruhat-equivalence",
    "speh-roundtrip",
];

/// Exploratory campaigns report disagreements without treating them as
/// failures; their counterexample list is data, not a verdict.
pub fn is_exploratory(name: &str) -> bool {
    name == "order-shadow"
}

pub fn run_campaign(name: &str, params: &CampaignParams) -> Result<CampaignReport, Error> {
    let report = match name {
        "removal-equivalence" => removal_equivalence(params)?,
        "lemma-properties" => lemma_properties(params)?,
        "pair-equivalence" => pair_equivalence(params)?,
        "minimality-criterion" => minimality_criterion(params)?,
        "unique-minimal" => unique_minimal(params)?,
        "convexity" => convexity(params)?,
        "subsequent" => subsequent(params)?,
        "dagger" => dagger(params)?,
        "order-shadow" => order_shadow(params)?,
        "bruhat-equivalence" => bruhat_equivalence(params)?,
        "speh-roundtrip" => speh_roundtrip(params)?,
        other => return Err(Error::UnknownCampaign(other.to_owned())),
    };
    Ok(report.finish())
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: u32,
    campaign: &'a str,
    seed: u64,
    count: u64,
    window: [i32; 2],
    max_segments: u32,
    max_multiplicity: u32,
    instances: u64,
    passes: u64,
    counterexamples: &'a [Counterexample],
}

/// Renders a finished report as JSON. Field order is fixed and the
/// counterexamples are sorted, so equal runs are byte-identical.
pub fn report_json(name: &str, params: &CampaignParams, report: &CampaignReport) -> String {
    let env = Envelope {
        schema: 1,
        campaign: name,
        seed: report.seed,
        count: params.count,
        window: [params.gen.window.0, params.gen.window.1],
        max_segments: params.gen.max_segments,
        max_multiplicity: params.gen.max_multiplicity,
        instances: report.instances,
        passes: report.passes,
        counterexamples: &report.counterexamples,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("report serialization cannot fail");
    s.push('\n');
    s
}

/// Single-pass trace against the recursive removal, both directions, for
/// every segment in the window against every universe element.
fn removal_equivalence(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let segs = segments_in_window(params.gen.window.0, params.gen.window.1)?;
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        for d in segs.iter().copied() {
            let rec = remove_segment(d, h);
            let tr = removal_trace(d, h);
            let (pass, actual) = match (&rec, &tr) {
                (RemovalOutcome::Finite(m), Some(t)) => {
                    (t.result == *m, format!("recursion {m}, trace {}", t.result))
                }
                (RemovalOutcome::Infinity, None) => (true, String::new()),
                (RemovalOutcome::Finite(m), None) => (false, format!("recursion {m}, no trace")),
                (RemovalOutcome::Infinity, Some(t)) => {
                    (false, format!("recursion infinity, trace {}", t.result))
                }
            };
            report.record(
                pass,
                || format!("d={d} h={h}"),
                "trace agrees with recursion",
                &actual,
            );
        }
    }
    Ok(report)
}

/// The four structural removal properties: untouched low left endpoints,
/// member removal, pick exchange for equal left endpoints, and unlinked
/// commutation under absorbing composition.
fn lemma_properties(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let segs = segments_in_window(params.gen.window.0, params.gen.window.1)?;
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        for d in segs.iter().copied() {
            if let RemovalOutcome::Finite(r) = remove_segment(d, h) {
                let left_r: Multisegment = r.iter().copied().filter(|s| s.a() < d.a()).collect();
                let left_h: Multisegment = h.iter().copied().filter(|s| s.a() < d.a()).collect();
                report.record(
                    left_r == left_h,
                    || format!("item=low-left d={d} h={h}"),
                    &left_h.to_string(),
                    &left_r.to_string(),
                );
            }
        }
        let mut seen = BTreeSet::new();
        for d in h.iter().copied() {
            if !seen.insert(d) {
                continue;
            }
            let got = remove_segment(d, h);
            let want = h.without(d).expect("d is a member of h");
            report.record(
                got.as_finite() == Some(&want),
                || format!("item=member d={d} h={h}"),
                &want.to_string(),
                &got.to_string(),
            );
        }
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let (d1, d2) = (segs[i], segs[j]);
                if d1.a() == d2.a() {
                    let (Some(p1), Some(p2)) = (upsilon(d1, h), upsilon(d2, h)) else { continue };
                    let RemovalOutcome::Finite(r1) = remove_segment(d1, h) else { continue };
                    let RemovalOutcome::Finite(r2) = remove_segment(d2, h) else { continue };
                    let (Some(q12), Some(q21)) = (upsilon(d2, &r1), upsilon(d1, &r2)) else {
                        continue;
                    };
                    let lhs = Multisegment::from_segments(vec![p1, q12]);
                    let rhs = Multisegment::from_segments(vec![p2, q21]);
                    report.record(
                        lhs == rhs,
                        || format!("item=exchange d1={d1} d2={d2} h={h}"),
                        &lhs.to_string(),
                        &rhs.to_string(),
                    );
                }
                if !is_linked(d1, d2) {
                    let ab = remove_segment(d1, h).remove_segment(d2);
                    let ba = remove_segment(d2, h).remove_segment(d1);
                    report.record(
                        ab == ba,
                        || format!("item=commute d1={d1} d2={d2} h={h}"),
                        &ab.to_string(),
                        &ba.to_string(),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// The three pair conditions must agree on every ordered linked pair with
/// both segments individually admissible.
fn pair_equivalence(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let segs = segments_in_window(params.gen.window.0, params.gen.window.1)?;
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        for d in segs.iter().copied() {
            for dp in segs.iter().copied() {
                if !precedes(d, dp)
                    || !is_admissible_segment(d, h)
                    || !is_admissible_segment(dp, h)
                {
                    continue;
                }
                let rep = pair_equivalence_report(d, dp, h)?;
                let pass = rep.non_overlapping == rep.intermediate
                    && rep.intermediate == rep.pair_minimal;
                report.record(
                    pass,
                    || format!("d={d} dp={dp} h={h}"),
                    "all three indicators equal",
                    &format!(
                        "non_overlapping={} intermediate={} pair_minimal={}",
                        rep.non_overlapping, rep.intermediate, rep.pair_minimal
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// The chain criterion against the order-theoretic definition on every
/// admissible pair in the universe.
fn minimality_criterion(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        for n in &universe {
            if !is_admissible(n, h) {
                continue;
            }
            let direct = is_minimal(n, h);
            let brute = is_minimal_bruteforce(n, h);
            report.record(
                direct == brute,
                || format!("n={n} h={h}"),
                &format!("criterion={direct}"),
                &format!("bruteforce={brute}"),
            );
        }
    }
    Ok(report)
}

/// All removal fibers over one base, keyed by the removal result. The
/// candidate pool is the base's own support window, which contains every
/// admissible sequence, so each realized fiber is complete.
fn fibers_for(
    h: &Multisegment,
    universe: &[Multisegment],
) -> Result<Vec<(Multisegment, Vec<Multisegment>)>, Error> {
    let mut targets: BTreeSet<Multisegment> = BTreeSet::new();
    for n in universe {
        if let RemovalOutcome::Finite(t) = remove_multi(n, h) {
            targets.insert(t);
        }
    }
    let pool = match (h.min_a(), h.max_b()) {
        (Some(lo), Some(hi)) => segments_in_window(lo, hi)?,
        _ => Vec::new(),
    };
    let budget: u64 = h.iter().map(|s| s.len()).sum();
    let mut buckets: BTreeMap<Multisegment, Vec<Multisegment>> = BTreeMap::new();
    let mut stack = Vec::new();
    bucket_rec(&pool, 0, budget, &mut stack, h, &mut buckets);
    let mut out = Vec::new();
    for t in targets {
        let fiber = buckets.remove(&t).unwrap_or_default();
        out.push((t, fiber));
    }
    Ok(out)
}

fn bucket_rec(
    pool: &[Segment],
    start: usize,
    budget: u64,
    stack: &mut Vec<Segment>,
    h: &Multisegment,
    buckets: &mut BTreeMap<Multisegment, Vec<Multisegment>>,
) {
    let n = Multisegment::from_segments(stack.clone());
    if let RemovalOutcome::Finite(t) = remove_multi(&n, h) {
        buckets.entry(t).or_default().push(n);
    }
    for i in start..pool.len() {
        let l = pool[i].len();
        if l <= budget {
            stack.push(pool[i]);
            bucket_rec(pool, i, budget - l, stack, h, buckets);
            stack.pop();
        }
    }
}

/// Every realized fiber has exactly one minimal element. Minimality inside
/// a fiber is read off move successors (sound once fibers are convex, which
/// the convexity campaign checks on the same fibers); small fibers are
/// audited against the raw order, and small removals against the public
/// fiber enumeration.
fn unique_minimal(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        let lh: u64 = h.iter().map(|s| s.len()).sum();
        let mut cache = DownSetCache::new();
        for (target, fiber) in fibers_for(h, &universe)? {
            let fset: BTreeSet<Multisegment> = fiber.iter().cloned().collect();
            let minimal: Vec<&Multisegment> = fiber
                .iter()
                .filter(|f| iu_successors(f).iter().all(|s| !fset.contains(s)))
                .collect();
            report.record(
                minimal.len() == 1,
                || format!("h={h} target={target}"),
                "exactly one minimal element",
                &format!("{} minimal elements of {}", minimal.len(), fiber.len()),
            );
            if fiber.len() <= 40 {
                let oracle_minimal = fiber
                    .iter()
                    .filter(|f| fiber.iter().all(|g| g == *f || !cache.leq(g, f)))
                    .count();
                report.record(
                    oracle_minimal == minimal.len(),
                    || format!("h={h} target={target} audit"),
                    &format!("{} minimal by successor test", minimal.len()),
                    &format!("{oracle_minimal} minimal by order"),
                );
            }
            let lt: u64 = target.iter().map(|s| s.len()).sum();
            if lh - lt <= 5 {
                let via = enumerate_s(h, &target, None)?;
                report.record(
                    via == fset,
                    || format!("h={h} target={target} enumeration"),
                    &format!("{} candidates", fset.len()),
                    &format!("{} candidates", via.len()),
                );
            }
        }
    }
    Ok(report)
}

/// Every realized fiber is interval-closed: nothing strictly between two
/// fiber elements escapes the fiber.
fn convexity(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        let mut cache = DownSetCache::new();
        for (target, fiber) in fibers_for(h, &universe)? {
            let fset: BTreeSet<Multisegment> = fiber.iter().cloned().collect();
            let mut below: BTreeSet<Multisegment> = BTreeSet::new();
            for f in &fiber {
                below.extend(cache.lower_set(f).iter().cloned());
            }
            let mut violation = None;
            for n in below.iter() {
                if fset.contains(n) {
                    continue;
                }
                if cache.lower_set(n).iter().any(|g| fset.contains(g)) {
                    violation = Some(n.clone());
                    break;
                }
            }
            report.record(
                violation.is_none(),
                || format!("h={h} target={target}"),
                "fiber is interval-closed",
                &match &violation {
                    Some(n) => format!("{n} lies between fiber elements but outside it"),
                    None => String::new(),
                },
            );
        }
    }
    Ok(report)
}

/// Minimality passes to submultisegments and to every ascending split, for
/// every minimal pair in the universe.
fn subsequent(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        for n in &universe {
            if !is_minimal(n, h) {
                continue;
            }
            report.absorb(check_subsequent(n, h)?);
        }
    }
    Ok(report)
}

/// For minimal `n` and a strictly dominating admissible `d`, appending `d`
/// preserves minimality exactly when the removal of `n` leaves the counting
/// vector of `d` unchanged.
fn dagger(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let segs = segments_in_window(params.gen.window.0, params.gen.window.1)?;
    let universe = enumerate_universe(&params.gen)?;
    for h in &universe {
        for n in &universe {
            if !is_minimal(n, h) {
                continue;
            }
            for d in segs.iter().copied() {
                if !n.iter().all(|s| s.a() < d.a() && s.b() < d.b()) {
                    continue;
                }
                if !is_admissible_segment(d, h) {
                    continue;
                }
                let check = check_dagger_extension(n, h, d)?;
                report.record(
                    check.minimal_with == check.eta_equal,
                    || format!("n={n} h={h} d={d}"),
                    &format!("minimal_with={}", check.minimal_with),
                    &format!("eta_equal={}", check.eta_equal),
                );
            }
        }
    }
    Ok(report)
}

/// Seeded exploration: apply removals in every order on minimized random
/// instances and report disagreements with the ascending-order result.
fn order_shadow(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let mut rng = params.gen.rng();
    let mut produced = 0;
    while produced < params.count {
        let h = gen_from_rng(&params.gen, &mut rng);
        let raw = gen_from_rng(&params.gen, &mut rng);
        if !is_admissible(&raw, &h) {
            continue;
        }
        let n = find_minimal(&raw, &h)?;
        report.absorb(check_order_shadow(&n, &h));
        produced += 1;
    }
    Ok(report)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for j in 0..k.min(n - k) {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(|v| Permutation::from_images(v).expect("images form a bijection"))
        .collect()
}

/// Statistic comparison against reachability for small symmetric groups,
/// the three-way coset criterion with representative counts, and least-ness
/// of each representative inside its coset.
fn bruhat_equivalence(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    for n in 1..=5 {
        let perms = all_permutations(n);
        let mut lower = BTreeMap::new();
        for w in &perms {
            lower.insert(w.clone(), bruhat_lower_set(w)?);
        }
        for w in &perms {
            let set = &lower[w];
            for wp in &perms {
                let stat = bruhat_leq(wp, w)?;
                let reach = set.contains(wp);
                report.record(
                    stat == reach,
                    || format!("n={n} wp={wp} w={w}"),
                    &format!("statistic={stat}"),
                    &format!("reachable={reach}"),
                );
            }
        }
    }
    for n in 1..=6usize {
        for i in 0..=n {
            let reps = min_coset_reps(n, i)?;
            report.record(
                reps.len() as u64 == binom(n as u64, i as u64),
                || format!("n={n} i={i} count"),
                &binom(n as u64, i as u64).to_string(),
                &reps.len().to_string(),
            );
            for w in &reps {
                for wp in &reps {
                    let cc = coset_criteria_check(wp, w, i)?;
                    report.record(
                        cc.leq == cc.front && cc.front == cc.back,
                        || format!("n={n} i={i} wp={wp} w={w}"),
                        "all three criteria equal",
                        &format!("leq={} front={} back={}", cc.leq, cc.front, cc.back),
                    );
                }
            }
        }
    }
    for n in 1..=4usize {
        for i in 0..=n {
            for rep in min_coset_reps(n, i)? {
                let front = rep.images()[..n - i].to_vec();
                let back = rep.images()[n - i..].to_vec();
                let mut least = true;
                for fp in front.iter().copied().permutations(front.len()) {
                    for bp in back.iter().copied().permutations(back.len()) {
                        let mut images = fp.clone();
                        images.extend(bp);
                        let member = Permutation::from_images(images)?;
                        if !bruhat_leq_oracle(&rep, &member)? {
                            least = false;
                        }
                    }
                }
                report.record(
                    least,
                    || format!("n={n} i={i} rep={rep}"),
                    "representative below every coset member",
                    "some member is not above it",
                );
            }
        }
    }
    Ok(report)
}

/// Seeded roundtrip: decompose, rebuild from the decomposition, and check
/// the support windows widen monotonically.
fn speh_roundtrip(params: &CampaignParams) -> Result<CampaignReport, Error> {
    let mut report = CampaignReport::new(params.gen.seed);
    let mut rng = params.gen.rng();
    for _ in 0..params.count {
        let m = loop {
            let c = gen_from_rng(&params.gen, &mut rng);
            if !c.is_empty() {
                break c;
            }
        };
        let ps = speh_realization(&m);
        let rebuilt: Multisegment = ps.iter().map(|q| q.hd_segment()).collect();
        let nested = ps.windows(2).all(|w| {
            let (alo, ahi) = w[0].support_window();
            let (blo, bhi) = w[1].support_window();
            blo <= alo && ahi <= bhi
        });
        report.record(
            rebuilt == m && nested,
            || format!("m={m}"),
            &m.to_string(),
            &format!("rebuilt={rebuilt} nested={nested}"),
        );
    }
    Ok(report)
}
