//! Occurrences of rule left-hand sides modulo exchange.
//!
//! An occurrence at wire offset `k` assigns each left-hand gate to a host
//! gate equal to it shifted by `k`, keeping every ordered (overlapping) pair
//! of left-hand gates in host order. The chosen host gates must be convex in
//! the host dependency order: no other gate may sit on a path between two of
//! them. Convexity is exactly what lets some exchange-equivalent reordering
//! bring the occurrence together as a contiguous block.

use std::fmt;

use crate::diagram::{DependencyDag, Diagram, IndexSet};
use crate::error::{Error, Result};
use crate::rewrite::Rule;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Match {
    /// Index of the rule in the catalog the match was found with.
    pub rule_index: usize,
    pub rule: String,
    /// Wire offset of the rule window in the host.
    pub offset: usize,
    /// Host gate positions; `gates[i]` realizes left-hand gate `i`.
    pub gates: Vec<usize>,
}

impl Match {
    /// Topmost host gate of the occurrence.
    pub fn first_gate(&self) -> usize {
        self.gates.iter().copied().min().unwrap_or(0)
    }

    pub fn sorted_gates(&self) -> Vec<usize> {
        let mut g = self.gates.clone();
        g.sort_unstable();
        g
    }
}

impl fmt::Display for Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gates: Vec<String> = self.gates.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "{} @ wires[{}] gates[{}]",
            self.rule,
            self.offset,
            gates.join(",")
        )
    }
}

/// Every occurrence of every rule, ordered by topmost matched gate, then
/// wire offset, then rule index.
pub fn find_matches(d: &Diagram, rules: &[Rule]) -> Vec<Match> {
    let dag = d.dependency_dag();
    let mut out = Vec::new();
    for (rule_index, rule) in rules.iter().enumerate() {
        if rule.lhs().is_empty() || rule.width() > d.width() {
            continue;
        }
        for offset in 0..=d.width() - rule.width() {
            let mut search = Search {
                host: d,
                dag: &dag,
                rule,
                offset,
                chosen: Vec::with_capacity(rule.lhs().len()),
                used: vec![false; d.len()],
                found: Vec::new(),
            };
            search.extend();
            out.extend(search.found.into_iter().map(|gates| Match {
                rule_index,
                rule: rule.name().to_string(),
                offset,
                gates,
            }));
        }
    }
    out.sort_by_key(|m| (m.first_gate(), m.offset, m.rule_index, m.sorted_gates()));
    out
}

struct Search<'a> {
    host: &'a Diagram,
    dag: &'a DependencyDag,
    rule: &'a Rule,
    offset: usize,
    chosen: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn extend(&mut self) {
        let lhs = self.rule.lhs().gates();
        let a = self.chosen.len();
        if a == lhs.len() {
            if self.dag.is_convex(&self.chosen) {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let want = lhs[a].shifted(self.offset);
        for (h, g) in self.host.gates().iter().enumerate() {
            if self.used[h] || *g != want {
                continue;
            }
            let ordered = (0..a)
                .filter(|&b| !lhs[b].commutes_with(&lhs[a]))
                .all(|b| self.chosen[b] < h);
            if !ordered {
                continue;
            }
            self.used[h] = true;
            self.chosen.push(h);
            self.extend();
            self.chosen.pop();
            self.used[h] = false;
        }
    }
}

/// Checks that `m` still describes an occurrence of `rule` in `d`.
pub fn check_match(d: &Diagram, rule: &Rule, m: &Match) -> Result<()> {
    let lhs = rule.lhs().gates();
    let stale = || Error::StaleMatch;
    if m.gates.len() != lhs.len() || m.offset + rule.width() > d.width() || rule.name() != m.rule {
        return Err(stale());
    }
    let mut seen = vec![false; d.len()];
    for (a, &h) in m.gates.iter().enumerate() {
        if h >= d.len() || std::mem::replace(&mut seen[h], true) {
            return Err(stale());
        }
        if d.gates()[h] != lhs[a].shifted(m.offset) {
            return Err(stale());
        }
        for b in 0..a {
            if !lhs[b].commutes_with(&lhs[a]) && m.gates[b] > h {
                return Err(stale());
            }
        }
    }
    if !d.dependency_dag().is_convex(&m.gates) {
        return Err(stale());
    }
    Ok(())
}

/// Replaces the occurrence by the rule's right-hand side.
///
/// The host is rearranged into the gates that must stay above the
/// occurrence, then the occurrence itself, then everything else; the
/// occurrence is swapped for the shifted right-hand side and the result is
/// canonicalized.
pub fn apply_match(d: &Diagram, rule: &Rule, m: &Match) -> Result<Diagram> {
    check_match(d, rule, m)?;
    let dag = d.dependency_dag();
    let mut selected = IndexSet::new(d.len());
    for &h in &m.gates {
        selected.insert(h);
    }
    let (above, below): (Vec<usize>, Vec<usize>) = (0..d.len())
        .filter(|&c| !selected.contains(c))
        .partition(|&c| dag.precedes_any(c, &selected));
    let gates = above
        .iter()
        .map(|&c| d.gates()[c])
        .chain(rule.rhs().gates().iter().map(|g| g.shifted(m.offset)))
        .chain(below.iter().map(|&c| d.gates()[c]))
        .collect();
    Ok(Diagram::new(d.width(), gates)?.canonicalize())
}
