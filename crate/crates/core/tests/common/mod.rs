//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;
use rbc::{Diagram, GateKind, MoveWord, PositionedGate, Rule};

pub fn d(width: usize, gates: &str) -> Diagram {
    Diagram::from_compact(width, gates).unwrap()
}

pub fn random_gate<R: Rng>(rng: &mut R, width: usize) -> PositionedGate {
    loop {
        let kind = GateKind::ALL[rng.gen_range(0..4)];
        if kind.arity() <= width {
            return PositionedGate::new(kind, rng.gen_range(0..=width - kind.arity()));
        }
    }
}

pub fn random_diagram<R: Rng>(rng: &mut R, width: usize, max_gates: usize) -> Diagram {
    let n = if width == 0 {
        0
    } else {
        rng.gen_range(0..=max_gates)
    };
    let gates = (0..n).map(|_| random_gate(rng, width)).collect();
    Diagram::new(width, gates).unwrap()
}

/// Every gate order reachable from the list order by swapping adjacent
/// commuting gates, as permutations of gate indices.
pub fn linearizations(d: &Diagram) -> Vec<Vec<usize>> {
    let g = d.gates();
    let start: Vec<usize> = (0..g.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(order) = queue.pop_front() {
        for p in 0..order.len().saturating_sub(1) {
            let (a, b) = (g[order[p]], g[order[p + 1]]);
            let disjoint =
                a.offset + a.kind.arity() <= b.offset || b.offset + b.kind.arity() <= a.offset;
            if disjoint {
                let mut next = order.clone();
                next.swap(p, p + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Exchange equivalence by exhaustive reordering.
pub fn equivalent_oracle(a: &Diagram, b: &Diagram) -> bool {
    if a.width() != b.width() || a.len() != b.len() {
        return false;
    }
    linearizations(a).iter().any(|order| {
        order
            .iter()
            .map(|&i| a.gates()[i])
            .eq(b.gates().iter().copied())
    })
}

/// (rule index, matched host gates sorted, offset)
pub type MatchKey = (usize, Vec<usize>, usize);

/// Scans every linearization for each left-hand side as a contiguous block
/// at every wire offset.
pub fn brute_force_matches(d: &Diagram, rules: &[Rule]) -> BTreeSet<MatchKey> {
    let mut out = BTreeSet::new();
    for order in linearizations(d) {
        for (ri, rule) in rules.iter().enumerate() {
            let lhs = rule.lhs().gates();
            if lhs.is_empty() || rule.width() > d.width() || lhs.len() > order.len() {
                continue;
            }
            for k in 0..=d.width() - rule.width() {
                for window in order.windows(lhs.len()) {
                    let hit = window
                        .iter()
                        .zip(lhs)
                        .all(|(&h, l)| d.gates()[h] == PositionedGate::new(l.kind, l.offset + k));
                    if hit {
                        let mut set = window.to_vec();
                        set.sort_unstable();
                        out.insert((ri, set, k));
                    }
                }
            }
        }
    }
    out
}

/// Output `i` of the circuit carries input `routing[i]`, found by pushing
/// wire labels through every swap.
pub fn swap_routing(d: &Diagram) -> Vec<usize> {
    let mut labels: Vec<usize> = (0..d.width()).collect();
    for g in d.gates() {
        if g.kind == GateKind::Swap {
            labels.swap(g.offset, g.offset + 1);
        }
    }
    labels
}

/// All words up to `len` letters, sorted by the comparison alone.
pub fn words_sorted_by_compare(len: usize) -> Vec<MoveWord> {
    let mut words: Vec<MoveWord> = vec![MoveWord::empty()];
    let mut frontier = vec![String::new()];
    for _ in 0..len {
        frontier = frontier
            .iter()
            .flat_map(|w| ["l", "r", "t"].map(|c| format!("{w}{c}")))
            .collect();
        words.extend(frontier.iter().map(|s| s.parse::<MoveWord>().unwrap()));
    }
    words.sort_by(rbc::word_compare);
    words
}

/// Runs the circuit on an input packed as an integer, wire 0 in the top bit.
pub fn oracle_eval(d: &Diagram, input: u64) -> u64 {
    let n = d.width();
    let bit = |x: u64, w: usize| (x >> (n - 1 - w)) & 1;
    let flip = |x: u64, w: usize| x ^ (1 << (n - 1 - w));
    let mut x = input;
    for g in d.gates() {
        let o = g.offset;
        x = match g.kind {
            GateKind::Swap if bit(x, o) != bit(x, o + 1) => flip(flip(x, o), o + 1),
            GateKind::Not => flip(x, o),
            GateKind::T2 if bit(x, o) == 1 => flip(x, o + 1),
            GateKind::T3 if bit(x, o) & bit(x, o + 1) == 1 => flip(x, o + 2),
            _ => x,
        };
    }
    x
}

pub fn oracle_table(d: &Diagram) -> Vec<u64> {
    (0..1u64 << d.width()).map(|x| oracle_eval(d, x)).collect()
}
