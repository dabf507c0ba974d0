//! Circuits as 2-cells: a wire count plus a top-to-bottom list of gates
//! placed at wire offsets.
//!
//! Parallel composition is absorbed into offsets, so identity wires are never
//! stored. Two gate lists denote the same circuit when one can be turned into
//! the other by swapping adjacent gates with disjoint supports; the layered
//! [`Diagram::canonicalize`] form picks one representative per class.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The four generators of the Toffoli basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Swap,
    Not,
    T2,
    T3,
}

impl GateKind {
    pub const ALL: [GateKind; 4] = [GateKind::Swap, GateKind::Not, GateKind::T2, GateKind::T3];

    pub fn arity(self) -> usize {
        match self {
            GateKind::Swap => 2,
            GateKind::Not => 1,
            GateKind::T2 => 2,
            GateKind::T3 => 3,
        }
    }

    /// Keyword used in circuit files.
    pub fn keyword(self) -> &'static str {
        match self {
            GateKind::Swap => "swap",
            GateKind::Not => "not",
            GateKind::T2 => "t2",
            GateKind::T3 => "t3",
        }
    }

    /// Short form used in compact gate lists (`sw@0`).
    pub fn short(self) -> &'static str {
        match self {
            GateKind::Swap => "sw",
            _ => self.keyword(),
        }
    }

    pub fn from_keyword(s: &str) -> Option<GateKind> {
        match s {
            "swap" | "sw" => Some(GateKind::Swap),
            "not" => Some(GateKind::Not),
            "t2" => Some(GateKind::T2),
            "t3" => Some(GateKind::T3),
            _ => None,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A gate acting on the wires `offset .. offset + arity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionedGate {
    pub kind: GateKind,
    pub offset: usize,
}

impl PositionedGate {
    pub const fn new(kind: GateKind, offset: usize) -> Self {
        PositionedGate { kind, offset }
    }

    pub fn support(&self) -> Range<usize> {
        self.offset..self.offset + self.kind.arity()
    }

    /// Last wire touched, exclusive.
    pub fn end(&self) -> usize {
        self.offset + self.kind.arity()
    }

    /// Gates commute exactly when their supports are disjoint.
    pub fn commutes_with(&self, other: &PositionedGate) -> bool {
        self.end() <= other.offset || other.end() <= self.offset
    }

    pub fn shifted(&self, by: usize) -> PositionedGate {
        PositionedGate::new(self.kind, self.offset + by)
    }
}

pub fn commute(a: &PositionedGate, b: &PositionedGate) -> bool {
    a.commutes_with(b)
}

impl fmt::Display for PositionedGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.short(), self.offset)
    }
}

impl FromStr for PositionedGate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, offset) = s
            .trim()
            .split_once('@')
            .ok_or_else(|| format!("expected <gate>@<offset>, got `{s}`"))?;
        let kind = GateKind::from_keyword(kind).ok_or_else(|| format!("unknown gate `{kind}`"))?;
        let offset = offset
            .parse()
            .map_err(|_| format!("bad offset `{offset}`"))?;
        Ok(PositionedGate::new(kind, offset))
    }
}

/// Gates with pairwise disjoint supports, sorted by offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    gates: Vec<PositionedGate>,
}

impl Layer {
    pub fn gates(&self) -> &[PositionedGate] {
        &self.gates
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    width: usize,
    gates: Vec<PositionedGate>,
}

impl Diagram {
    /// Builds a diagram, rejecting gates that stick out of the wire range.
    pub fn new(width: usize, gates: Vec<PositionedGate>) -> Result<Self> {
        validate(width, &gates)?;
        Ok(Diagram { width, gates })
    }

    pub fn identity(width: usize) -> Self {
        Diagram {
            width,
            gates: Vec::new(),
        }
    }

    /// A single generator on exactly its own wires.
    pub fn generator(kind: GateKind) -> Self {
        Diagram {
            width: kind.arity(),
            gates: vec![PositionedGate::new(kind, 0)],
        }
    }

    /// Parses a whitespace or comma separated list such as `sw@0 t3@1`.
    pub fn from_compact(width: usize, gates: &str) -> Result<Self> {
        let parsed = gates
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(i, tok)| {
                tok.parse::<PositionedGate>()
                    .map_err(|message| Error::Parse {
                        line: 1,
                        column: i + 1,
                        message,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::new(width, parsed)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[PositionedGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        validate(self.width, &self.gates)
    }

    /// Series composition: `self` on top, `below` underneath.
    pub fn compose_seq(&self, below: &Diagram) -> Result<Diagram> {
        if self.width != below.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: below.width,
            });
        }
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&below.gates);
        Ok(Diagram {
            width: self.width,
            gates,
        })
    }

    /// Parallel composition: `right` placed on fresh wires after ours.
    pub fn compose_par(&self, right: &Diagram) -> Diagram {
        let mut gates = self.gates.clone();
        gates.extend(right.gates.iter().map(|g| g.shifted(self.width)));
        Diagram {
            width: self.width + right.width,
            gates,
        }
    }

    /// Layer index of every gate in the greedy earliest layering.
    pub fn layer_indices(&self) -> Vec<usize> {
        let mut next_free = vec![0usize; self.width];
        self.gates
            .iter()
            .map(|g| {
                let layer = g.support().map(|w| next_free[w]).max().unwrap_or(0);
                for w in g.support() {
                    next_free[w] = layer + 1;
                }
                layer
            })
            .collect()
    }

    pub fn layers(&self) -> Vec<Layer> {
        let idx = self.layer_indices();
        let depth = idx.iter().map(|l| l + 1).max().unwrap_or(0);
        let mut layers = vec![Layer { gates: Vec::new() }; depth];
        for (g, l) in self.gates.iter().zip(idx) {
            layers[l].gates.push(*g);
        }
        for layer in &mut layers {
            layer.gates.sort_by_key(|g| g.offset);
        }
        layers
    }

    /// Foata normal form: the concatenation of [`Diagram::layers`].
    pub fn canonicalize(&self) -> Diagram {
        Diagram {
            width: self.width,
            gates: self.layers().into_iter().flat_map(|l| l.gates).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize().gates == self.gates
    }

    /// Equality modulo exchange and units.
    pub fn equivalent(&self, other: &Diagram) -> bool {
        self.width == other.width
            && self.gates.len() == other.gates.len()
            && self.canonicalize().gates == other.canonicalize().gates
    }

    pub fn dependency_dag(&self) -> DependencyDag {
        DependencyDag::build(&self.gates)
    }
}

fn validate(width: usize, gates: &[PositionedGate]) -> Result<()> {
    match gates.iter().position(|g| g.end() > width) {
        Some(i) => Err(Error::OutOfRange(i)),
        None => Ok(()),
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{} [", self.width)?;
        for (i, g) in self.gates.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}

/// Fixed-size bitset over gate indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IndexSet {
    words: Vec<u64>,
}

impl IndexSet {
    pub(crate) fn new(n: usize) -> Self {
        IndexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn union_with(&mut self, other: &IndexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub(crate) fn intersects(&self, other: &IndexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }
}

/// The happens-before order of a gate list: `i` precedes `j` when every
/// exchange-equivalent reordering keeps `i` above `j`.
#[derive(Debug, Clone)]
pub struct DependencyDag {
    len: usize,
    /// `ancestors[j]` holds every `i` that must come before `j`.
    ancestors: Vec<IndexSet>,
    /// `descendants[i]` holds every `j` that must come after `i`.
    descendants: Vec<IndexSet>,
    edges: Vec<(usize, usize)>,
}

impl DependencyDag {
    fn build(gates: &[PositionedGate]) -> Self {
        let n = gates.len();
        let mut ancestors: Vec<IndexSet> = Vec::with_capacity(n);
        let mut edges = Vec::new();
        for j in 0..n {
            let mut anc = IndexSet::new(n);
            // Scan predecessors from nearest to farthest; an overlapping
            // predecessor already reachable through a nearer one is redundant.
            for i in (0..j).rev() {
                if gates[i].commutes_with(&gates[j]) {
                    continue;
                }
                if !anc.contains(i) {
                    edges.push((i, j));
                }
                anc.insert(i);
                anc.union_with(&ancestors[i]);
            }
            ancestors.push(anc);
        }
        let mut descendants = vec![IndexSet::new(n); n];
        for (j, anc) in ancestors.iter().enumerate() {
            for (i, desc) in descendants.iter_mut().enumerate().take(j) {
                if anc.contains(i) {
                    desc.insert(j);
                }
            }
        }
        edges.sort_unstable();
        DependencyDag {
            len: n,
            ancestors,
            descendants,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Covering edges (the transitive reduction), sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.ancestors[j].contains(i)
    }

    /// True when no gate outside `selected` sits on a dependency path
    /// between two selected gates.
    pub fn is_convex(&self, selected: &[usize]) -> bool {
        let mut sel = IndexSet::new(self.len);
        for &i in selected {
            sel.insert(i);
        }
        (0..self.len)
            .filter(|c| !sel.contains(*c))
            .all(|c| !(self.ancestors[c].intersects(&sel) && self.descendants[c].intersects(&sel)))
    }

    /// Whether `c` must come before some gate of `selected`.
    pub(crate) fn precedes_any(&self, c: usize, selected: &IndexSet) -> bool {
        self.descendants[c].intersects(selected)
    }
}
