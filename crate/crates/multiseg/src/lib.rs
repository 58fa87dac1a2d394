//! Combinatorics of multisegments: segment removal and its single-pass
//! trace, counting vectors, the Zelevinsky move order, minimality of
//! removal sequences, fiber enumeration, Speh decompositions, and Bruhat
//! order on permutations with minimal coset representatives. A campaign
//! layer cross-checks the independent routes against each other and emits
//! deterministic JSON reports.

pub mod bruhat;
pub mod campaign;
pub mod core;
pub mod error;
pub mod gen;
pub mod invariants;
pub mod minimality;
pub mod removal;
pub mod text;
pub mod zelevinsky;

pub use crate::bruhat::{
    bruhat_leq, bruhat_leq_oracle, bruhat_lower_set, coset_criteria_check, is_min_coset_rep,
    min_coset_reps, w_stat, CosetCriteria, Permutation,
};
pub use crate::campaign::{
    is_exploratory, report_json, run_campaign, CampaignParams, CampaignReport, Counterexample,
    CAMPAIGNS,
};
pub use crate::core::{
    ascending_sort, is_ascending, is_linked, precedes, union_intersection, Config, Multisegment,
    Segment,
};
pub use crate::error::Error;
pub use crate::gen::{enumerate_universe, gen_multisegment, segments_in_window, GenParams};
pub use crate::invariants::{
    abs_eta, epsilon, eta, has_intermediate_segment, mx, non_overlapping, pair_equivalence_report,
    EtaVector, PairReport,
};
pub use crate::minimality::{
    check_dagger_extension, check_order_shadow, check_subsequent, consecutive_pairs, enumerate_s,
    find_minimal, is_locally_minimizable, is_minimal, is_minimal_bruteforce, speh_realization,
    submultisegments, DaggerCheck, SpehParams,
};
pub use crate::removal::{
    fine_chain, fs, is_admissible, is_admissible_segment, remove_multi, remove_segment,
    removal_trace, trd, trr, upsilon, FineStep, RemovalOutcome, RemovalTrace,
};
pub use crate::text::{format_multisegment, format_segment, parse_multisegment, parse_segment};
pub use crate::zelevinsky::{
    hasse_dot, interval, iu_move, iu_successors, lower_set, zel_leq, DownSetCache, IUMove,
};
