//! The interpretation of circuits into move maps, and the strictness check
//! that turns it into a termination measure.

use std::fmt;

use crate::diagram::{Diagram, GateKind, PositionedGate};
use crate::error::{Error, Result};
use crate::moves::{Letter, MapOrdering, MoveMap, MoveStep, MoveWord};
use crate::rewrite::Rule;

/// Image of a single generator.
///
/// A swap sends its right input to the left with an `l` and its left input
/// to the right with an `r`; every other gate appends `t` to each wire it
/// touches.
pub fn phi_gate(kind: GateKind) -> MoveMap {
    let t = || MoveWord::single(Letter::T);
    match kind {
        GateKind::Swap => MoveMap::new(
            vec![1, 0],
            vec![MoveWord::single(Letter::L), MoveWord::single(Letter::R)],
        )
        .expect("swap routing is a permutation"),
        GateKind::Not => MoveMap::from_suffixes(vec![t()]),
        GateKind::T2 => MoveMap::from_suffixes(vec![t(), t()]),
        GateKind::T3 => MoveMap::from_suffixes(vec![t(), t(), t()]),
    }
}

/// Image of a gate whiskered with identity wires on both sides.
pub fn phi_positioned(gate: &PositionedGate, width: usize) -> MoveMap {
    MoveMap::identity(gate.offset)
        .beside(&phi_gate(gate.kind))
        .beside(&MoveMap::identity(width - gate.end()))
}

/// Folds the gate list top to bottom. Exchange invariance is a property of
/// the result, not something this relies on.
pub fn phi(d: &Diagram) -> MoveMap {
    d.gates()
        .iter()
        .fold(MoveMap::identity(d.width()), |acc, g| {
            acc.then(&phi_positioned(g, d.width()))
                .expect("whiskered gate has the diagram width")
        })
}

/// `⟨φ(lhs), φ(rhs)⟩`, rejected unless the right side sits below the left.
pub fn phi_rule(rule: &Rule) -> Result<MoveStep> {
    MoveStep::new(phi(rule.lhs()), phi(rule.rhs()))
        .map_err(|_| Error::NotDecreasing(rule.name().to_string()))
}

/// Renders a vector of words as `(ll, lr, rr)`, with `ε` for the unit.
pub fn format_vector(words: &[MoveWord]) -> String {
    let parts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub wire: usize,
    pub lhs: MoveWord,
    pub rhs: MoveWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleStrictness {
    pub name: String,
    pub lhs: MoveMap,
    pub rhs: MoveMap,
    /// `φ(lhs)` compared against `φ(rhs)`; `Greater` means strict.
    pub verdict: MapOrdering,
    /// First wire whose left-hand word strictly dominates.
    pub witness: Option<Witness>,
}

impl RuleStrictness {
    pub fn is_strict(&self) -> bool {
        self.verdict == MapOrdering::Greater
    }

    /// `(lt, lt, lt, rrr) > (tl, tl, tl, rrr)`
    pub fn vectors(&self) -> String {
        let rel = match self.verdict {
            MapOrdering::Greater => ">",
            MapOrdering::Less => "<",
            MapOrdering::Equal => "=",
            MapOrdering::Incomparable => "<>",
        };
        format!(
            "{} {rel} {}",
            format_vector(self.lhs.suffixes()),
            format_vector(self.rhs.suffixes())
        )
    }
}

impl fmt::Display for RuleStrictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, self.is_strict()) {
            (Some(w), true) => write!(
                f,
                "RULE {}: STRICT (witness: {} > {} at wire {})",
                self.name, w.lhs, w.rhs, w.wire
            ),
            _ => write!(
                f,
                "RULE {}: NOT STRICT (verdict: {:?})",
                self.name, self.verdict
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictnessReport {
    pub entries: Vec<RuleStrictness>,
}

impl StrictnessReport {
    pub fn all_strict(&self) -> bool {
        self.entries.iter().all(RuleStrictness::is_strict)
    }

    pub fn strict_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_strict()).count()
    }

    pub fn get(&self, name: &str) -> Option<&RuleStrictness> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl fmt::Display for StrictnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn rule_strictness(rule: &Rule) -> RuleStrictness {
    let lhs = phi(rule.lhs());
    let rhs = phi(rule.rhs());
    let verdict = lhs.compare(&rhs).unwrap_or(MapOrdering::Incomparable);
    let witness = lhs
        .suffixes()
        .iter()
        .zip(rhs.suffixes())
        .position(|(a, b)| a > b)
        .filter(|_| verdict == MapOrdering::Greater)
        .map(|wire| Witness {
            wire,
            lhs: lhs.suffixes()[wire].clone(),
            rhs: rhs.suffixes()[wire].clone(),
        });
    RuleStrictness {
        name: rule.name().to_string(),
        lhs,
        rhs,
        verdict,
        witness,
    }
}

/// Checks every rule; failures are recorded, never raised.
pub fn verify_strict(rules: &[Rule]) -> StrictnessReport {
    StrictnessReport {
        entries: rules.iter().map(rule_strictness).collect(),
    }
}
