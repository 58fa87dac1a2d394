//! Command line front end: parse canonical multisegment text, run one
//! library operation or a verification campaign, print the result.
//!
//! Exit codes: 0 for success (clean campaigns and exploratory runs
//! included), 1 when an assertive campaign finds a counterexample, 2 for
//! usage or parse errors.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use multiseg::{
    bruhat_leq, coset_criteria_check, enumerate_s, eta, find_minimal, hasse_dot, is_exploratory,
    is_minimal, lower_set, mx, parse_multisegment, parse_segment, remove_segment, removal_trace,
    report_json, run_campaign, speh_realization, zel_leq, CampaignParams, Config, Multisegment,
    Permutation, Segment,
};

#[derive(Parser)]
#[command(
    name = "multiseg",
    version,
    about = "Multisegment calculus: removals, the move order, minimal sequences, Bruhat order, and verification campaigns"
)]
struct Cli {
    /// Degree of the fixed cuspidal unit; only scales absolute lengths.
    #[arg(long, default_value_t = 1, global = true)]
    deg: u32,

    /// JSON output where supported (enumerate-s, speh-realize; verify always emits JSON).
    #[arg(long, global = true)]
    json: bool,

    /// DOT graph output where supported (enumerate-s; hasse always emits DOT).
    #[arg(long, global = true)]
    dot: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Remove a segment from a multisegment; prints the result or `infinity`.
    Remove { d: String, h: String },
    /// Show the removal staircase: picked segments, truncations, result.
    Trace { d: String, h: String },
    /// Print the eta vector of a base segment against a multisegment.
    Eta { d: String, h: String },
    /// Print the mx aggregate of a multisegment at a base segment.
    Mx { h: String, d: String },
    /// Decide whether n is below m in the move order.
    Zle { n: String, m: String },
    /// DOT Hasse diagram of the down-set of a multisegment.
    Hasse { m: String },
    /// Decide whether n is a minimal removal sequence for h.
    MinimalCheck { n: String, h: String },
    /// Find the minimal sequence with the same removal result as n over h.
    MinimalFind { n: String, h: String },
    /// List the sequences over h whose removal result is the target.
    EnumerateS {
        h: String,
        target: String,
        /// Candidate segment window `lo:hi`; defaults to the support of h.
        #[arg(long, value_parser = parse_window)]
        window: Option<(i32, i32)>,
    },
    /// Factor a multisegment into Speh parameters realizing it.
    SpehRealize { m: String },
    /// Bruhat order queries on permutations in one-line notation.
    Bruhat {
        #[command(subcommand)]
        query: BruhatCmd,
    },
    /// Run a verification campaign and print its JSON report.
    Verify {
        /// Campaign name, e.g. `removal-equivalence` or `order-shadow`.
        name: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<u64>,
        /// Universe window `lo:hi` for the campaign generator.
        #[arg(long, value_parser = parse_window)]
        window: Option<(i32, i32)>,
    },
}

#[derive(Subcommand)]
enum BruhatCmd {
    /// Is wp below w in Bruhat order? Prints true or false.
    Leq { wp: String, w: String },
    /// Evaluate the three coset criteria for minimal (n-i, i) representatives.
    Coset {
        #[arg(long)]
        i: usize,
        wp: String,
        w: String,
    },
}

fn parse_window(text: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got {text:?}"))?;
    let lo: i32 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: i32 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn seg(text: &str) -> Result<Segment, String> {
    parse_segment(text).map_err(|e| e.to_string())
}

fn multi(text: &str) -> Result<Multisegment, String> {
    parse_multisegment(text).map_err(|e| e.to_string())
}

fn perm(text: &str) -> Result<Permutation, String> {
    text.parse().map_err(|e: multiseg::Error| e.to_string())
}

// Output is buffered so the final write can treat a broken pipe (the reader
// of `multiseg ... | head` going away) as success instead of a panic.
fn run(cli: Cli, out: &mut String) -> Result<u8, String> {
    Config::new(cli.deg).map_err(|e| e.to_string())?;
    let (json, dot) = (cli.json, cli.dot);
    match cli.cmd {
        Cmd::Remove { d, h } => {
            let _ = writeln!(out, "{}", remove_segment(seg(&d)?, &multi(&h)?));
            Ok(0)
        }
        Cmd::Trace { d, h } => {
            match removal_trace(seg(&d)?, &multi(&h)?) {
                None => {
                    let _ = writeln!(out, "infinity");
                }
                Some(tr) => {
                    for (p, t) in tr.picked.iter().zip(&tr.truncated) {
                        match t {
                            Some(t) => {
                                let _ = writeln!(out, "picked {p} -> truncated {t}");
                            }
                            None => {
                                let _ = writeln!(out, "picked {p} -> consumed");
                            }
                        }
                    }
                    let _ = writeln!(out, "result {}", tr.result);
                }
            }
            Ok(0)
        }
        Cmd::Eta { d, h } => {
            let _ = writeln!(out, "{}", eta(seg(&d)?, &multi(&h)?));
            Ok(0)
        }
        Cmd::Mx { h, d } => {
            let _ = writeln!(out, "{}", mx(&multi(&h)?, seg(&d)?));
            Ok(0)
        }
        Cmd::Zle { n, m } => {
            let _ = writeln!(out, "{}", zel_leq(&multi(&n)?, &multi(&m)?));
            Ok(0)
        }
        Cmd::Hasse { m } => {
            let _ = writeln!(out, "{}", hasse_dot(&lower_set(&multi(&m)?)).trim_end());
            Ok(0)
        }
        Cmd::MinimalCheck { n, h } => {
            let _ = writeln!(out, "{}", is_minimal(&multi(&n)?, &multi(&h)?));
            Ok(0)
        }
        Cmd::MinimalFind { n, h } => {
            let found = find_minimal(&multi(&n)?, &multi(&h)?).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "{found}");
            Ok(0)
        }
        Cmd::EnumerateS { h, target, window } => {
            let fiber =
                enumerate_s(&multi(&h)?, &multi(&target)?, window).map_err(|e| e.to_string())?;
            if dot {
                let _ = writeln!(out, "{}", hasse_dot(&fiber).trim_end());
            } else if json {
                let names: Vec<String> = fiber.iter().map(|m| m.to_string()).collect();
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&names).expect("strings serialize"));
            } else {
                for m in &fiber {
                    let _ = writeln!(out, "{m}");
                }
            }
            Ok(0)
        }
        Cmd::SpehRealize { m } => {
            let params = speh_realization(&multi(&m)?);
            if json {
                let arr: Vec<serde_json::Value> = params
                    .iter()
                    .map(|p| {
                        serde_json::json!({
                            "c": p.c(),
                            "d": p.d(),
                            "m": p.m(),
                            "segment": p.hd_segment().to_string(),
                        })
                    })
                    .collect();
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("values serialize"));
            } else {
                for p in &params {
                    let _ = writeln!(out, "c={} d={} m={} segment={}", p.c(), p.d(), p.m(), p.hd_segment());
                }
            }
            Ok(0)
        }
        Cmd::Bruhat { query } => match query {
            BruhatCmd::Leq { wp, w } => {
                let ok = bruhat_leq(&perm(&wp)?, &perm(&w)?).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "{ok}");
                Ok(0)
            }
            BruhatCmd::Coset { i, wp, w } => {
                let cc =
                    coset_criteria_check(&perm(&wp)?, &perm(&w)?, i).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "(leq={}, front={}, back={})", cc.leq, cc.front, cc.back);
                Ok(0)
            }
        },
        Cmd::Verify { name, seed, count, window } => {
            let mut params = CampaignParams::default();
            if let Some(w) = window {
                params.gen.window = w;
            }
            if let Some(s) = seed {
                params.gen.seed = s;
            }
            if let Some(c) = count {
                params.count = c;
            }
            let report = run_campaign(&name, &params).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "{}", report_json(&name, &params, &report).trim_end());
            if report.counterexamples.is_empty() || is_exploratory(&name) {
                Ok(0)
            } else {
                Ok(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli, &mut out) {
        Ok(code) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
