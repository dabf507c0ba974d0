//! Normalization, reduction traces and exploration of the reduction graph.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::functor::phi;
use crate::moves::{vector_compare, MapOrdering, MoveStep};
use crate::rewrite::matching::{apply_match, find_matches, Match};
use crate::rewrite::{builtin_rules, Rule};
use crate::semantics::{truth_table_capped, DEFAULT_MAX_WIDTH};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: String,
    pub at: Match,
    pub before: Diagram,
    pub after: Diagram,
}

/// A chain of rewrites; each step starts where the previous one ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    initial: Diagram,
    steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn new(initial: Diagram) -> Self {
        ReductionTrace {
            initial,
            steps: Vec::new(),
        }
    }

    /// Builds a trace from arbitrary steps without checking that they chain;
    /// [`verify_trace`] reports any break.
    pub fn from_steps(initial: Diagram, steps: Vec<ReductionStep>) -> Self {
        ReductionTrace { initial, steps }
    }

    pub fn initial(&self) -> &Diagram {
        &self.initial
    }

    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_diagram(&self) -> &Diagram {
        self.steps.last().map_or(&self.initial, |s| &s.after)
    }

    pub fn rule_names(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.rule.as_str()).collect()
    }

    /// The measure of the whole trace: per-step `⟨φ(before), φ(after)⟩`
    /// composed along the chain.
    pub fn measure(&self) -> Result<MoveStep> {
        let start = phi(&self.initial);
        self.steps
            .iter()
            .try_fold(MoveStep::identity(start), |acc, s| {
                let step = MoveStep::new(phi(&s.before), phi(&s.after))?;
                acc.compose_2(&step)
            })
    }
}

/// One line per step:
/// `step <k>: <rule> @ wires[<offset>] gates[<indices>] rank <before> -> <after>`.
impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            writeln!(
                f,
                "step {}: {} rank {} -> {}",
                k + 1,
                s.at,
                phi(&s.before).epsilon_rank(),
                phi(&s.after).epsilon_rank()
            )?;
        }
        Ok(())
    }
}

/// A rule catalog plus the limits used while rewriting with it.
#[derive(Debug, Clone)]
pub struct Rewriter {
    rules: Vec<Rule>,
    /// Overrides the default normalization step cap.
    pub max_steps: Option<usize>,
}

impl Default for Rewriter {
    fn default() -> Self {
        Rewriter::new(builtin_rules())
    }
}

impl Rewriter {
    pub fn new(rules: Vec<Rule>) -> Self {
        Rewriter {
            rules,
            max_steps: None,
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn find_matches(&self, d: &Diagram) -> Vec<Match> {
        find_matches(d, &self.rules)
    }

    pub fn apply(&self, d: &Diagram, m: &Match) -> Result<Diagram> {
        let rule = self.rules.get(m.rule_index).ok_or(Error::StaleMatch)?;
        apply_match(d, rule, m)
    }

    /// Ten times the gate count times the ε-rank of the start; every step
    /// lowers that rank, so hitting the cap means a bug.
    pub fn step_cap(&self, d: &Diagram) -> usize {
        if let Some(cap) = self.max_steps {
            return cap;
        }
        let bound =
            BigUint::from(10u32) * BigUint::from(d.len().max(1)) * (phi(d).epsilon_rank() + 1u32);
        usize::try_from(&bound).unwrap_or(usize::MAX)
    }

    /// The match normalization rewrites next: lowest rule index, then
    /// topmost, then leftmost.
    pub fn preferred_match(&self, d: &Diagram) -> Option<Match> {
        self.find_matches(d)
            .into_iter()
            .min_by_key(|m| (m.rule_index, m.first_gate(), m.offset))
    }

    pub fn normalize(&self, d: &Diagram) -> Result<(Diagram, ReductionTrace)> {
        d.validate()?;
        let start = d.canonicalize();
        let cap = self.step_cap(&start);
        let mut trace = ReductionTrace::new(start.clone());
        let mut current = start;
        while let Some(m) = self.preferred_match(&current) {
            if trace.len() >= cap {
                return Err(Error::StepLimitExceeded(cap));
            }
            let next = self.apply(&current, &m)?;
            trace.steps.push(ReductionStep {
                rule: m.rule.clone(),
                at: m,
                before: current,
                after: next.clone(),
            });
            current = next;
        }
        Ok((current, trace))
    }

    /// Breadth-first exploration of every diagram reachable from `d`.
    pub fn reduction_graph(&self, d: &Diagram, max_states: usize) -> Result<ReductionGraph> {
        d.validate()?;
        let start = d.canonicalize();
        let mut index: HashMap<Diagram, usize> = HashMap::from([(start.clone(), 0)]);
        let mut states = vec![start];
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        if max_states == 0 {
            return Err(Error::StateLimitExceeded(max_states));
        }
        while let Some(s) = queue.pop_front() {
            let here = states[s].clone();
            for m in self.find_matches(&here) {
                let next = self.apply(&here, &m)?;
                let t = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        if states.len() >= max_states {
                            return Err(Error::StateLimitExceeded(max_states));
                        }
                        let t = states.len();
                        index.insert(next.clone(), t);
                        states.push(next);
                        queue.push_back(t);
                        t
                    }
                };
                edges.push(GraphEdge {
                    from: s,
                    to: t,
                    at: m,
                });
            }
        }
        Ok(ReductionGraph { states, edges })
    }

    pub fn all_normal_forms(&self, d: &Diagram, max_states: usize) -> Result<Vec<Diagram>> {
        Ok(self.reduction_graph(d, max_states)?.normal_forms())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub at: Match,
}

/// States are canonical diagrams; state 0 is the start.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub states: Vec<Diagram>,
    pub edges: Vec<GraphEdge>,
}

impl ReductionGraph {
    pub fn out_degree(&self, state: usize) -> usize {
        self.edges.iter().filter(|e| e.from == state).count()
    }

    /// States without outgoing edges, sorted.
    pub fn normal_forms(&self) -> Vec<Diagram> {
        let mut has_out = vec![false; self.states.len()];
        for e in &self.edges {
            has_out[e.from] = true;
        }
        self.states
            .iter()
            .zip(has_out)
            .filter(|(_, out)| !out)
            .map(|(d, _)| d.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

pub fn normalize(d: &Diagram) -> Result<(Diagram, ReductionTrace)> {
    Rewriter::default().normalize(d)
}

pub fn all_normal_forms(d: &Diagram, max_states: usize) -> Result<Vec<Diagram>> {
    Rewriter::default().all_normal_forms(d, max_states)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// The step's start differs from the previous step's end.
    Broken,
    /// Truth tables before and after differ.
    Semantics,
    /// Truth tables could not be built under the width cap.
    Unchecked,
    /// `φ(after)` is not strictly below `φ(before)`.
    Measure(MapOrdering),
    /// The ε-evaluated suffix vector did not strictly decrease.
    EpsilonVector,
    /// The total ε-rank did not strictly decrease.
    Rank,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based step number.
    pub step: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    /// ε-rank of the initial diagram followed by the rank after every step.
    pub ranks: Vec<BigUint>,
    pub violations: Vec<Violation>,
}

impl TraceReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for TraceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        writeln!(f, "ranks: {}", ranks.join(" -> "))?;
        for v in &self.violations {
            writeln!(f, "violation at step {}: {:?}", v.step, v.kind)?;
        }
        if self.is_ok() {
            writeln!(f, "verified: {} steps", self.ranks.len() - 1)
        } else {
            writeln!(f, "FAILED: {} violations", self.violations.len())
        }
    }
}

pub fn verify_trace(trace: &ReductionTrace) -> TraceReport {
    verify_trace_capped(trace, DEFAULT_MAX_WIDTH)
}

/// Checks every step for semantic preservation and strict measure decrease.
pub fn verify_trace_capped(trace: &ReductionTrace, width_cap: usize) -> TraceReport {
    let mut ranks = vec![phi(trace.initial()).epsilon_rank()];
    let mut violations = Vec::new();
    let mut expected_start = trace.initial();
    for (k, s) in trace.steps().iter().enumerate() {
        let step = k + 1;
        let mut flag = |kind| violations.push(Violation { step, kind });
        if !s.before.equivalent(expected_start) {
            flag(ViolationKind::Broken);
        }
        match (
            truth_table_capped(&s.before, width_cap),
            truth_table_capped(&s.after, width_cap),
        ) {
            (Ok(a), Ok(b)) if a != b => flag(ViolationKind::Semantics),
            (Ok(_), Ok(_)) => {}
            _ => flag(ViolationKind::Unchecked),
        }
        let before = phi(&s.before);
        let after = phi(&s.after);
        let verdict = after.compare(&before).unwrap_or(MapOrdering::Incomparable);
        if verdict != MapOrdering::Less {
            flag(ViolationKind::Measure(verdict));
        }
        if vector_compare(after.at_epsilon(), before.at_epsilon()) != MapOrdering::Less {
            flag(ViolationKind::EpsilonVector);
        }
        let rank = after.epsilon_rank();
        if rank >= before.epsilon_rank() {
            flag(ViolationKind::Rank);
        }
        ranks.push(rank);
        expected_start = &s.after;
    }
    TraceReport { ranks, violations }
}
