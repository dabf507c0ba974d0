//! The reduction system: rule catalog, matching modulo exchange, and
//! normalization with traces.

mod matching;
mod reduce;
mod rules;

pub use matching::{apply_match, check_match, find_matches, Match};
pub use reduce::{
    all_normal_forms, normalize, verify_trace, verify_trace_capped, GraphEdge, ReductionGraph,
    ReductionStep, ReductionTrace, Rewriter, TraceReport, Violation, ViolationKind,
};
pub use rules::{builtin_rules, Rule};
