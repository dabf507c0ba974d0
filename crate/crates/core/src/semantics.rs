//! Boolean semantics of circuits.
//!
//! Bit vectors are read with wire 0 first; truth tables list inputs in
//! ascending binary order with wire 0 as the most significant bit.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::diagram::{Diagram, GateKind};
use crate::error::{Error, Result};

/// Default cap on the width accepted by [`truth_table`].
pub const DEFAULT_MAX_WIDTH: usize = 12;

/// Environment variable overriding [`DEFAULT_MAX_WIDTH`].
pub const MAX_WIDTH_ENV: &str = "RBC_MAX_WIDTH";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec(pub Vec<bool>);

impl BitVec {
    pub fn zeros(n: usize) -> Self {
        BitVec(vec![false; n])
    }

    /// The `n`-bit vector whose binary value is `value`, wire 0 most significant.
    pub fn from_index(value: u64, n: usize) -> Self {
        BitVec((0..n).map(|w| (value >> (n - 1 - w)) & 1 == 1).collect())
    }

    pub fn to_index(&self) -> u64 {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid bit `{other}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitVec)
    }
}

/// Applies one generator to the bits of its own wires.
pub fn apply_gate(kind: GateKind, window: &[bool]) -> Result<Vec<bool>> {
    if window.len() != kind.arity() {
        return Err(Error::ArityMismatch {
            kind: kind.keyword(),
            expected: kind.arity(),
            got: window.len(),
        });
    }
    let mut out = window.to_vec();
    apply_in_place(kind, &mut out);
    Ok(out)
}

fn apply_in_place(kind: GateKind, w: &mut [bool]) {
    match kind {
        GateKind::Swap => w.swap(0, 1),
        GateKind::Not => w[0] = !w[0],
        GateKind::T2 => w[1] ^= w[0],
        GateKind::T3 => w[2] ^= w[0] & w[1],
    }
}

pub fn eval(d: &Diagram, input: &BitVec) -> Result<BitVec> {
    if input.len() != d.width() {
        return Err(Error::WidthMismatch {
            left: d.width(),
            right: input.len(),
        });
    }
    let mut bits = input.0.clone();
    for g in d.gates() {
        apply_in_place(g.kind, &mut bits[g.support()]);
    }
    Ok(BitVec(bits))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    width: usize,
    rows: Vec<BitVec>,
}

impl TruthTable {
    /// A table given by its output rows; `rows[i]` is the image of input `i`.
    pub fn from_rows(width: usize, rows: Vec<BitVec>) -> Result<Self> {
        if rows.len() != 1usize << width {
            return Err(Error::LengthMismatch {
                expected: 1 << width,
                got: rows.len(),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::WidthMismatch {
                left: width,
                right: bad.len(),
            });
        }
        Ok(TruthTable { width, rows })
    }

    pub fn identity(width: usize) -> Self {
        TruthTable {
            width,
            rows: (0..1u64 << width)
                .map(|i| BitVec::from_index(i, width))
                .collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Rows are pairwise distinct, so the table is a bijection.
    pub fn is_permutation(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.rows.len());
        self.rows.iter().all(|r| seen.insert(r))
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, out) in self.rows.iter().enumerate() {
            writeln!(f, "{} -> {}", BitVec::from_index(i as u64, self.width), out)?;
        }
        Ok(())
    }
}

pub fn is_permutation(t: &TruthTable) -> bool {
    t.is_permutation()
}

/// Width cap from `RBC_MAX_WIDTH`, falling back to [`DEFAULT_MAX_WIDTH`].
pub fn configured_max_width() -> usize {
    std::env::var(MAX_WIDTH_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WIDTH)
}

pub fn truth_table(d: &Diagram) -> Result<TruthTable> {
    truth_table_capped(d, DEFAULT_MAX_WIDTH)
}

pub fn truth_table_capped(d: &Diagram, cap: usize) -> Result<TruthTable> {
    let n = d.width();
    // 2^n rows must stay addressable.
    if n > cap || n >= 63 {
        return Err(Error::WidthTooLarge { width: n, cap });
    }
    let rows = (0..1u64 << n)
        .map(|i| eval(d, &BitVec::from_index(i, n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruthTable { width: n, rows })
}
