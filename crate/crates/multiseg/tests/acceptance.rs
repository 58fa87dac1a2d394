//! Acceptance suite. Each test runs one verification campaign (or a fixed
//! regression set), prints a single pass/fail line, and asserts the
//! outcome. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines for passing criteria too; cargo shows them on failure either
//! way.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use multiseg::{
    abs_eta, consecutive_pairs, parse_multisegment, report_json, run_campaign, zel_leq,
    CampaignParams, CampaignReport, GenParams, Multisegment, Segment,
};

fn exhaustive() -> CampaignParams {
    CampaignParams { gen: GenParams::default(), count: 0 }
}

fn line(idx: u32, pass: bool, label: &str, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {idx:02} {verdict} {label}: {detail}");
}

fn summarize(r: &CampaignReport, elapsed: Duration) -> String {
    format!(
        "{} instances, {} counterexamples, {:.2}s",
        r.instances,
        r.counterexamples.len(),
        elapsed.as_secs_f64()
    )
}

fn assert_clean(idx: u32, label: &str, r: &CampaignReport, elapsed: Duration) {
    let pass = r.counterexamples.is_empty();
    line(idx, pass, label, &summarize(r, elapsed));
    assert!(
        pass,
        "criterion {idx:02} counterexamples (first 3): {:#?}",
        &r.counterexamples[..r.counterexamples.len().min(3)]
    );
}

fn ms(text: &str) -> Multisegment {
    parse_multisegment(text).expect("fixture parses")
}

fn seg(a: i32, b: i32) -> Segment {
    Segment::new(a, b).expect("fixture segment")
}

#[test]
fn criterion_01_removal_cross_check() {
    let t = Instant::now();
    let r = run_campaign("removal-equivalence", &exhaustive()).unwrap();
    let elapsed = t.elapsed();
    assert_clean(1, "trace equals recursion on U", &r, elapsed);
    assert!(elapsed < Duration::from_secs(30), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_02_removal_lemma_items() {
    let t = Instant::now();
    let r = run_campaign("lemma-properties", &exhaustive()).unwrap();
    assert_clean(2, "removal lemma items 2-5 on U", &r, t.elapsed());
}

#[test]
fn criterion_03_pair_equivalence() {
    let t = Instant::now();
    let r = run_campaign("pair-equivalence", &exhaustive()).unwrap();
    let elapsed = t.elapsed();
    assert_clean(3, "non-overlap, intermediate, pair-minimal agree on U", &r, elapsed);
    assert!(elapsed < Duration::from_secs(120), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_04_minimality_criterion() {
    let t = Instant::now();
    let r = run_campaign("minimality-criterion", &exhaustive()).unwrap();
    assert_clean(4, "chain criterion equals brute force on U", &r, t.elapsed());
}

#[test]
fn criterion_05_unique_minimal_and_convexity() {
    let t = Instant::now();
    let mut r = run_campaign("unique-minimal", &exhaustive()).unwrap();
    r.absorb(run_campaign("convexity", &exhaustive()).unwrap());
    assert_clean(5, "each fiber has one minimal element and is interval-closed", &r, t.elapsed());
}

#[test]
fn criterion_06_subsequent_property() {
    let t = Instant::now();
    let r = run_campaign("subsequent", &exhaustive()).unwrap();
    assert_clean(6, "submultisegments and splits of minimal pairs stay minimal", &r, t.elapsed());
}

#[test]
fn criterion_07_dagger_biconditional() {
    let t = Instant::now();
    let r = run_campaign("dagger", &exhaustive()).unwrap();
    assert_clean(7, "extension minimality iff eta agreement on U", &r, t.elapsed());
}

#[test]
fn criterion_08_fixed_regressions() {
    let t = Instant::now();
    let mut failures: Vec<String> = Vec::new();

    let eta_base = ms("[1,4]+[1,3]+[1,2]+[2,5]+[2,4]");
    if abs_eta(seg(1, 3), &eta_base) != 4 {
        failures.push(format!("abs_eta([1,3], {eta_base}) != 4"));
    }

    let cp = |text: &str| -> BTreeSet<(Segment, Segment)> {
        consecutive_pairs(&ms(text)).into_iter().collect()
    };
    let got = cp("[0,3]+[1,4]+[2,5]");
    let want: BTreeSet<_> =
        [(seg(0, 3), seg(1, 4)), (seg(1, 4), seg(2, 5))].into_iter().collect();
    if got != want {
        failures.push(format!("consecutive pairs of [0,3]+[1,4]+[2,5]: {got:?}"));
    }
    let got = cp("[0,4]+[1,2]+[2,5]");
    let want: BTreeSet<_> =
        [(seg(0, 4), seg(2, 5)), (seg(1, 2), seg(2, 5))].into_iter().collect();
    if got != want {
        failures.push(format!("consecutive pairs of [0,4]+[1,2]+[2,5]: {got:?}"));
    }
    let got = cp("[0,3]+[1,3]+[2,4]+[2,5]");
    if !got.contains(&(seg(1, 3), seg(2, 4))) || got.contains(&(seg(0, 3), seg(2, 4))) {
        failures.push(format!("consecutive pairs of [0,3]+[1,3]+[2,4]+[2,5]: {got:?}"));
    }

    let top = ms("[1,2]+[2,3]+[4,5]");
    for below in ["[1,3]+[2]+[4,5]", "[1,2]+[2,5]"] {
        if !zel_leq(&ms(below), &top) {
            failures.push(format!("{below} not below {top}"));
        }
    }

    let pass = failures.is_empty();
    line(
        8,
        pass,
        "worked-example regressions",
        &format!("7 fixtures, {} failures, {:.2}s", failures.len(), t.elapsed().as_secs_f64()),
    );
    assert!(pass, "criterion 08 failures: {failures:#?}");
}

#[test]
fn criterion_09_bruhat_orders() {
    let t = Instant::now();
    let r = run_campaign("bruhat-equivalence", &exhaustive()).unwrap();
    let elapsed = t.elapsed();
    assert_clean(9, "statistic order, coset criteria, and counts agree", &r, elapsed);
    assert!(elapsed < Duration::from_secs(60), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_10_speh_roundtrip() {
    let t = Instant::now();
    let params = CampaignParams { gen: GenParams::default(), count: 200 };
    let r = run_campaign("speh-roundtrip", &params).unwrap();
    assert!(r.instances >= 200, "expected 200 instances, ran {}", r.instances);
    assert_clean(10, "highest-derivative segments rebuild 200 seeded inputs", &r, t.elapsed());
}

#[test]
fn criterion_11_order_shadow_report() {
    let t = Instant::now();
    let gen = GenParams { seed: 42, ..GenParams::default() };
    let params = CampaignParams { gen, count: 500 };
    let r = run_campaign("order-shadow", &params).unwrap();
    let json = report_json("order-shadow", &params, &r);
    let value: serde_json::Value = serde_json::from_str(&json).expect("report is valid JSON");
    // 500 generated instances, each contributing one check per ascending ordering
    let shaped = value["schema"] == 1
        && value["campaign"] == "order-shadow"
        && value["seed"] == 42
        && value["counterexamples"].is_array()
        && r.instances >= 500;
    // exploratory: disagreements are logged with reproducing inputs, never asserted away
    line(
        11,
        shaped,
        "order-shadow exploration reports cleanly",
        &format!(
            "{} instances, {} logged disagreements, {:.2}s",
            r.instances,
            r.counterexamples.len(),
            t.elapsed().as_secs_f64()
        ),
    );
    assert!(shaped, "malformed report: {json}");
    for cx in &r.counterexamples {
        assert!(!cx.inputs.is_empty(), "disagreement without reproducing input");
    }
}

#[test]
fn criterion_12_text_roundtrip_and_determinism() {
    let t = Instant::now();
    let mut failures = 0u32;
    for i in 0..10_000u64 {
        let gen = GenParams {
            window: (-20, 20),
            max_segments: 6,
            max_multiplicity: 3,
            seed: i,
        };
        let m = multiseg::gen_multisegment(&gen).unwrap();
        let text = multiseg::format_multisegment(&m);
        if parse_multisegment(&text).ok().as_ref() != Some(&m) {
            failures += 1;
        }
    }

    let gen = GenParams { seed: 7, ..GenParams::default() };
    let params = CampaignParams { gen, count: 50 };
    let a = run_campaign("order-shadow", &params).unwrap();
    let b = run_campaign("order-shadow", &params).unwrap();
    let deterministic =
        report_json("order-shadow", &params, &a) == report_json("order-shadow", &params, &b);

    let pass = failures == 0 && deterministic;
    line(
        12,
        pass,
        "text round-trip and report determinism",
        &format!(
            "10000 round-trips, {failures} failures, deterministic={deterministic}, {:.2}s",
            t.elapsed().as_secs_f64()
        ),
    );
    assert_eq!(failures, 0, "round-trip failures");
    assert!(deterministic, "same seed produced different reports");
}
