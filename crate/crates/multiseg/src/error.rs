use crate::bruhat::Permutation;
use crate::core::{Multisegment, Segment};

/// Errors shared across the crate.
///
/// Inadmissibility during a removal is *not* always an error: `remove_segment`
/// and `remove_multi` encode failure as `RemovalOutcome::Infinity`. The
/// `NotAdmissible` variant is reserved for operations whose contract demands
/// an admissible input (`upsilon`, `removal_trace`, fine chains, ...).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty segment: right endpoint {b} precedes left endpoint {a}")]
    EmptySegment { a: i64, b: i64 },
    #[error("segment endpoint out of supported range: [{a},{b}]")]
    EndpointRange { a: i64, b: i64 },
    #[error("segments {0} and {1} are not linked")]
    NotLinked(Segment, Segment),
    #[error("move segments {0} and {1} do not both occur in {2}")]
    MoveSegmentsAbsent(Segment, Segment, Multisegment),
    #[error("segment {0} does not occur in {1}")]
    SegmentAbsent(Segment, Multisegment),
    #[error("segment {0} is not admissible to {1}")]
    NotAdmissible(Segment, Multisegment),
    #[error("{0} is not admissible to {1}")]
    SequenceNotAdmissible(Multisegment, Multisegment),
    #[error("{0} is not below {1} in the intersection-union order")]
    NotComparable(Multisegment, Multisegment),
    #[error("expected a nonempty multisegment")]
    EmptyMultisegment,
    #[error("pair {0}, {1} is not linked in increasing order")]
    PairNotOrdered(Segment, Segment),
    #[error("{0} is not minimal to {1}")]
    NotMinimal(Multisegment, Multisegment),
    #[error("extension segment {d} must lie strictly past every segment of {n}")]
    BadExtension { d: Segment, n: Multisegment },
    #[error("total length of target {target} exceeds total length of {h}")]
    LengthMismatch { h: Multisegment, target: Multisegment },
    #[error("invalid window: {lo} > {hi}")]
    BadWindow { lo: i64, hi: i64 },
    #[error("rho degree must be positive")]
    BadDegree,
    #[error("speh parameters d={d}, m={m} must be positive and of equal parity")]
    BadSpehParams { d: u64, m: u64 },
    #[error("not a permutation of 1..{n}: {images:?}")]
    BadPermutation { n: usize, images: Vec<u32> },
    #[error("permutations act on different sets: {0} vs {1}")]
    PermutationSizeMismatch(usize, usize),
    #[error("index ({k},{l}) out of range for a permutation of 1..{n}")]
    StatIndexRange { k: usize, l: usize, n: usize },
    #[error("permutation degree {n} exceeds the oracle bound {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("invalid block split ({front},{back}) for a permutation of 1..{n}")]
    BadBlockSplit { front: usize, back: usize, n: usize },
    #[error("{w} is not increasing on both blocks of the ({front},{back}) split")]
    NotCosetRep { w: Permutation, front: usize, back: usize },
    #[error("parse error at character {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator caps must be positive")]
    BadGenParams,
    #[error("unknown campaign {0:?}")]
    UnknownCampaign(String),
}
