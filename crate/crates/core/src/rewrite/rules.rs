use std::fmt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::functor::phi;
use crate::moves::MapOrdering;
use crate::semantics::{truth_table_capped, DEFAULT_MAX_WIDTH};

/// An oriented reduction `lhs ⇛ rhs` between circuits of the same width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    name: String,
    lhs: Diagram,
    rhs: Diagram,
}

impl Rule {
    /// Builds a rule and checks that it preserves semantics and strictly
    /// decreases the move measure.
    pub fn new(name: impl Into<String>, lhs: Diagram, rhs: Diagram) -> Result<Self> {
        let rule = Rule::unchecked(name, lhs, rhs)?;
        let invalid = |reason: String| Error::InvalidRule {
            name: rule.name.clone(),
            reason,
        };
        if rule.lhs.is_empty() {
            return Err(invalid("left-hand side has no gates".into()));
        }
        let cap = DEFAULT_MAX_WIDTH.max(rule.lhs.width());
        if truth_table_capped(&rule.lhs, cap)? != truth_table_capped(&rule.rhs, cap)? {
            return Err(invalid("sides compute different boolean functions".into()));
        }
        if phi(&rule.lhs).compare(&phi(&rule.rhs))? != MapOrdering::Greater {
            return Err(Error::NotDecreasing(rule.name.clone()));
        }
        Ok(rule)
    }

    /// Only checks that both sides share a width.
    pub fn unchecked(name: impl Into<String>, lhs: Diagram, rhs: Diagram) -> Result<Self> {
        let name = name.into();
        if lhs.width() != rhs.width() {
            return Err(Error::InvalidRule {
                name,
                reason: format!("widths differ: {} vs {}", lhs.width(), rhs.width()),
            });
        }
        Ok(Rule { name, lhs, rhs })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lhs(&self) -> &Diagram {
        &self.lhs
    }

    pub fn rhs(&self) -> &Diagram {
        &self.rhs
    }

    pub fn width(&self) -> usize {
        self.lhs.width()
    }

    /// The same rule read right to left, unchecked.
    pub fn reversed(&self) -> Rule {
        Rule {
            name: format!("{}_rev", self.name),
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} => {}", self.name, self.lhs, self.rhs)
    }
}

// (name, width, lhs, rhs), in priority order: annihilation, permutation,
// sliding, swapped Toffoli.
const CATALOG: [(&str, usize, &str, &str); 12] = [
    ("a_not", 1, "not@0 not@0", ""),
    ("a_t2", 2, "t2@0 t2@0", ""),
    ("a_t3", 3, "t3@0 t3@0", ""),
    ("p_swap2", 2, "sw@0 sw@0", ""),
    ("p_yang_baxter", 3, "sw@0 sw@1 sw@0", "sw@1 sw@0 sw@1"),
    ("s_not_L", 2, "sw@0 not@0", "not@1 sw@0"),
    ("s_not_R", 2, "sw@0 not@1", "not@0 sw@0"),
    ("s_t2_L", 3, "sw@0 sw@1 t2@0", "t2@1 sw@0 sw@1"),
    ("s_t2_R", 3, "sw@1 sw@0 t2@1", "t2@0 sw@1 sw@0"),
    ("s_t3_L", 4, "sw@0 sw@1 sw@2 t3@0", "t3@1 sw@0 sw@1 sw@2"),
    ("s_t3_R", 4, "sw@2 sw@1 sw@0 t3@1", "t3@0 sw@2 sw@1 sw@0"),
    ("t_swapped_t3", 3, "sw@0 t3@0", "t3@0 sw@0"),
];

/// The twelve reductions of the Toffoli-basis system, highest priority first.
pub fn builtin_rules() -> Vec<Rule> {
    CATALOG
        .iter()
        .map(|&(name, width, lhs, rhs)| {
            let lhs = Diagram::from_compact(width, lhs).expect("catalog lhs");
            let rhs = Diagram::from_compact(width, rhs).expect("catalog rhs");
            Rule::new(name, lhs, rhs).expect("catalog rule is sound and decreasing")
        })
        .collect()
}
