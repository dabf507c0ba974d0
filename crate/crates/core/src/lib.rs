//! Reversible boolean circuits over the Toffoli basis (`SWAP`, `NOT`, `T2`,
//! `T3`) as string diagrams, together with a terminating rewrite system on
//! them and the measure that proves it terminates.
//!
//! * [`diagram`] builds circuits and decides equality modulo exchange.
//! * [`semantics`] evaluates circuits as bijections on bit vectors.
//! * [`moves`] is the ordered monoid of move words and the maps between
//!   its powers.
//! * [`functor`] interprets circuits as move maps and checks that every rule
//!   strictly decreases the interpretation.
//! * [`rewrite`] holds the twelve reductions, matching modulo exchange,
//!   normalization with traces and normal-form enumeration.
//! * [`format`] and [`cli`] are the text formats and the command-line tool.
//!
//! ```
//! use rbc::{normalize, verify_trace, Diagram};
//!
//! let d = Diagram::from_compact(4, "t3@0 sw@2 sw@1 sw@0 t3@1").unwrap();
//! let (nf, trace) = normalize(&d).unwrap();
//! assert_eq!(nf, Diagram::from_compact(4, "sw@2 sw@1 sw@0").unwrap());
//! assert_eq!(trace.rule_names(), ["s_t3_R", "a_t3"]);
//! assert!(verify_trace(&trace).is_ok());
//! ```

pub mod cli;
pub mod diagram;
mod error;
pub mod format;
pub mod functor;
pub mod moves;
pub mod rewrite;
pub mod semantics;

pub use diagram::{commute, DependencyDag, Diagram, GateKind, Layer, PositionedGate};
pub use error::{Error, Result};
pub use functor::{phi, phi_gate, phi_rule, verify_strict, StrictnessReport};
pub use moves::{
    map_apply, map_compare, map_par, map_seq, word_compare, word_rank, Letter, MapOrdering,
    MoveMap, MoveStep, MoveWord,
};
pub use rewrite::{
    all_normal_forms, apply_match, builtin_rules, find_matches, normalize, verify_trace, Match,
    ReductionTrace, Rewriter, Rule, TraceReport,
};
pub use semantics::{eval, truth_table, BitVec, TruthTable};
