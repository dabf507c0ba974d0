//! The ordered monoid of move words and the permutation-plus-suffix maps
//! between their cartesian powers.
//!
//! A move word records what happened to a value as it travelled down one
//! wire: `l`/`r` for the two crossing directions of a swap, `t` for passing
//! through any other gate. Words are ordered by length first, then
//! lexicographically with `t < r < l`. That order is isomorphic to the
//! naturals, which is what makes the measure well founded.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T,
    R,
    L,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::T, Letter::R, Letter::L];

    pub fn as_char(self) -> char {
        match self {
            Letter::T => 't',
            Letter::R => 'r',
            Letter::L => 'l',
        }
    }

    /// Digit in the bijective base-3 numbering used by [`word_rank`].
    fn digit(self) -> u32 {
        match self {
            Letter::T => 1,
            Letter::R => 2,
            Letter::L => 3,
        }
    }
}

/// An element of the free monoid over `{l, r, t}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MoveWord(Vec<Letter>);

impl MoveWord {
    pub fn empty() -> Self {
        MoveWord(Vec::new())
    }

    pub fn single(letter: Letter) -> Self {
        MoveWord(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &MoveWord) -> MoveWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MoveWord(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// The bare letters; empty for the unit.
    pub fn to_letters(&self) -> String {
        self.0.iter().map(|l| l.as_char()).collect()
    }

    /// Every word of exactly `len` letters, in increasing order.
    pub fn all_of_length(len: usize) -> Vec<MoveWord> {
        let mut out = vec![MoveWord::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Letter::ALL.into_iter().map(move |l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// Every word of at most `len` letters, in increasing order.
    pub fn all_up_to(len: usize) -> Vec<MoveWord> {
        (0..=len).flat_map(MoveWord::all_of_length).collect()
    }
}

impl Ord for MoveWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MoveWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints the letters, or `ε` for the unit.
impl fmt::Display for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.to_letters())
        }
    }
}

impl FromStr for MoveWord {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ε" {
            return Ok(MoveWord::empty());
        }
        s.chars()
            .map(|c| match c {
                't' => Ok(Letter::T),
                'r' => Ok(Letter::R),
                'l' => Ok(Letter::L),
                other => Err(format!("invalid move letter `{other}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(MoveWord)
    }
}

pub fn word_compare(a: &MoveWord, b: &MoveWord) -> Ordering {
    a.cmp(b)
}

/// Position of `w` in the increasing enumeration of all words.
///
/// This is the bijective base-3 value of `w` with digits `t = 1`, `r = 2`,
/// `l = 3`, so `ε ↦ 0`, `t ↦ 1`, `l ↦ 3`, `tt ↦ 4`.
pub fn word_rank(w: &MoveWord) -> BigUint {
    w.0.iter()
        .fold(BigUint::default(), |acc, l| acc * 3u32 + l.digit())
}

/// Outcome of comparing two 2-cells in the pointwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl MapOrdering {
    pub fn reverse(self) -> Self {
        match self {
            MapOrdering::Less => MapOrdering::Greater,
            MapOrdering::Greater => MapOrdering::Less,
            other => other,
        }
    }
}

/// Componentwise order on vectors of words: `Less` when every component is
/// `<=` and at least one is `<`.
pub fn vector_compare(a: &[MoveWord], b: &[MoveWord]) -> MapOrdering {
    if a.len() != b.len() {
        return MapOrdering::Incomparable;
    }
    let (mut less, mut greater) = (false, false);
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    match (less, greater) {
        (false, false) => MapOrdering::Equal,
        (true, false) => MapOrdering::Less,
        (false, true) => MapOrdering::Greater,
        (true, true) => MapOrdering::Incomparable,
    }
}

/// A map `Mⁿ → Mⁿ` whose output `i` is input `src[i]` followed by `suffix[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveMap {
    src: Vec<usize>,
    suffix: Vec<MoveWord>,
}

impl MoveMap {
    pub fn new(src: Vec<usize>, suffix: Vec<MoveWord>) -> Result<Self> {
        if src.len() != suffix.len() {
            return Err(Error::LengthMismatch {
                expected: src.len(),
                got: suffix.len(),
            });
        }
        let mut seen = vec![false; src.len()];
        for &s in &src {
            if s >= src.len() || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidMoveMap(format!(
                    "source indices {src:?} are not a permutation"
                )));
            }
        }
        Ok(MoveMap { src, suffix })
    }

    pub fn identity(n: usize) -> Self {
        MoveMap {
            src: (0..n).collect(),
            suffix: vec![MoveWord::empty(); n],
        }
    }

    /// Same routing as the identity, with the given suffixes appended.
    pub fn from_suffixes(suffix: Vec<MoveWord>) -> Self {
        MoveMap {
            src: (0..suffix.len()).collect(),
            suffix,
        }
    }

    pub fn width(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self) -> &[usize] {
        &self.src
    }

    pub fn suffixes(&self) -> &[MoveWord] {
        &self.suffix
    }

    pub fn is_identity(&self) -> bool {
        self.src.iter().enumerate().all(|(i, &s)| i == s)
            && self.suffix.iter().all(|w| w.is_empty())
    }

    pub fn apply(&self, xs: &[MoveWord]) -> Result<Vec<MoveWord>> {
        if xs.len() != self.width() {
            return Err(Error::LengthMismatch {
                expected: self.width(),
                got: xs.len(),
            });
        }
        Ok(self
            .src
            .iter()
            .zip(&self.suffix)
            .map(|(&s, w)| xs[s].concat(w))
            .collect())
    }

    /// The image of the all-ε vector, i.e. the suffix vector.
    pub fn at_epsilon(&self) -> &[MoveWord] {
        &self.suffix
    }

    /// Sum of word ranks of [`MoveMap::at_epsilon`].
    pub fn epsilon_rank(&self) -> BigUint {
        self.suffix.iter().map(word_rank).sum()
    }

    /// `self` then `next` (1-composition).
    pub fn then(&self, next: &MoveMap) -> Result<MoveMap> {
        if self.width() != next.width() {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: next.width(),
            });
        }
        let (src, suffix) = next
            .src
            .iter()
            .zip(&next.suffix)
            .map(|(&j, w)| (self.src[j], self.suffix[j].concat(w)))
            .unzip();
        Ok(MoveMap { src, suffix })
    }

    /// Cartesian product (0-composition).
    pub fn beside(&self, right: &MoveMap) -> MoveMap {
        let n = self.width();
        MoveMap {
            src: self
                .src
                .iter()
                .copied()
                .chain(right.src.iter().map(|s| s + n))
                .collect(),
            suffix: self.suffix.iter().chain(&right.suffix).cloned().collect(),
        }
    }

    /// Pointwise order, decided on the permutation-plus-suffix form.
    pub fn compare(&self, other: &MoveMap) -> Result<MapOrdering> {
        if self.width() != other.width() {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        if self.src != other.src {
            return Ok(MapOrdering::Incomparable);
        }
        Ok(vector_compare(&self.suffix, &other.suffix))
    }

    /// First wire on which the suffixes differ, with both words.
    pub fn first_difference<'a>(
        &'a self,
        other: &'a MoveMap,
    ) -> Option<(usize, &'a MoveWord, &'a MoveWord)> {
        self.suffix
            .iter()
            .zip(&other.suffix)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a, b))
    }
}

impl fmt::Display for MoveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, w)) in self.src.iter().zip(&self.suffix).enumerate() {
            writeln!(f, "out[{i}] <- in[{s}] ++ \"{}\"", w.to_letters())?;
        }
        Ok(())
    }
}

pub fn map_apply(f: &MoveMap, xs: &[MoveWord]) -> Result<Vec<MoveWord>> {
    f.apply(xs)
}

pub fn map_seq(f: &MoveMap, g: &MoveMap) -> Result<MoveMap> {
    f.then(g)
}

pub fn map_par(f: &MoveMap, g: &MoveMap) -> MoveMap {
    f.beside(g)
}

pub fn map_compare(f: &MoveMap, g: &MoveMap) -> Result<MapOrdering> {
    f.compare(g)
}

/// A 3-cell of the move category: the pair `⟨source, target⟩` with the
/// target no greater than the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveStep {
    source: MoveMap,
    target: MoveMap,
}

impl MoveStep {
    pub fn new(source: MoveMap, target: MoveMap) -> Result<Self> {
        match target.compare(&source)? {
            MapOrdering::Less | MapOrdering::Equal => Ok(MoveStep { source, target }),
            _ => Err(Error::InvalidMoveMap(
                "step target is not below its source".into(),
            )),
        }
    }

    pub fn identity(f: MoveMap) -> Self {
        MoveStep {
            source: f.clone(),
            target: f,
        }
    }

    pub fn source(&self) -> &MoveMap {
        &self.source
    }

    pub fn target(&self) -> &MoveMap {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }

    /// `⟨f,g⟩ ⋆₀ ⟨f′,g′⟩ = ⟨f×f′, g×g′⟩`
    pub fn compose_0(&self, other: &MoveStep) -> MoveStep {
        MoveStep {
            source: self.source.beside(&other.source),
            target: self.target.beside(&other.target),
        }
    }

    /// `⟨f,g⟩ ⋆₁ ⟨f′,g′⟩ = ⟨f′f, g′g⟩`
    pub fn compose_1(&self, other: &MoveStep) -> Result<MoveStep> {
        Ok(MoveStep {
            source: self.source.then(&other.source)?,
            target: self.target.then(&other.target)?,
        })
    }

    /// `⟨f,g⟩ ⋆₂ ⟨g,h⟩ = ⟨f,h⟩`
    pub fn compose_2(&self, other: &MoveStep) -> Result<MoveStep> {
        if self.target.width() != other.source.width() {
            return Err(Error::WidthMismatch {
                left: self.target.width(),
                right: other.source.width(),
            });
        }
        if self.target != other.source {
            return Err(Error::NotComposable);
        }
        Ok(MoveStep {
            source: self.source.clone(),
            target: other.target.clone(),
        })
    }
}
