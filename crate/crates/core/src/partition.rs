//! Integer partitions and generalized (valence) partitions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ParseError;

/// An integer partition, stored as a weakly decreasing list of positive parts.
///
/// The empty list is the unique partition of 0. Partitions are ordered by
/// size first and then reverse-lexicographically, so for size 3 the order is
/// `[3] < [2,1] < [1,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `1^k`, the partition with `k` parts equal to one.
    pub fn ones(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn single(part: u32) -> Self {
        Partition::new(vec![part])
    }

    /// Builds a partition from multiplicities: `mults[i]` copies of `i + 1`.
    pub fn from_multiplicities(mults: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in mults.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i as u32 + 1).take(m as usize));
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// The sum of the parts, |μ|.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Pairs `(i, m_i)` with `m_i > 0`, in increasing `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((i, m)) if *i == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_μ = ∏ i^{m_i} m_i!`, the centralizer order of cycle type μ.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Multiset difference `self - other`, or `None` when `other` is not
    /// contained in `self`.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        let mut parts = Vec::with_capacity(self.parts.len());
        let mut j = 0;
        for &p in &self.parts {
            if j < other.parts.len() && other.parts[j] == p {
                j += 1;
            } else if j < other.parts.len() && other.parts[j] > p {
                return None;
            } else {
                parts.push(p);
            }
        }
        (j == other.parts.len()).then_some(Partition { parts })
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }

    /// All partitions of `n`, in canonical order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Comma-separated parts, `""` for the empty partition.
    pub fn to_csv(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a comma-separated list of parts, optionally wrapped in brackets.
    pub fn parse(text: &str) -> Result<Partition, ParseError> {
        let t = text.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let p: u32 = piece.trim().parse().map_err(|_| {
                ParseError::new(format!(
                    "bad partition part `{}` in `{}`",
                    piece.trim(),
                    text
                ))
            })?;
            if p == 0 {
                return Err(ParseError::new(format!("zero part in partition `{text}`")));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_csv())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle type of a permutation given in one-line form.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// A generalized partition: multiplicities `ν_i` for `i ≥ 0`, where parts of
/// size zero are allowed. Used as the valence profile of a graph.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GenPartition {
    // mults[i] = ν_i; no trailing zeros
    mults: Vec<u32>,
}

impl GenPartition {
    pub fn new(mut mults: Vec<u32>) -> Self {
        while mults.last() == Some(&0) {
            mults.pop();
        }
        GenPartition { mults }
    }

    /// Profile of a list of valences.
    pub fn from_valences(valences: impl IntoIterator<Item = usize>) -> Self {
        let mut mults = Vec::new();
        for v in valences {
            if mults.len() <= v {
                mults.resize(v + 1, 0);
            }
            mults[v] += 1;
        }
        GenPartition::new(mults)
    }

    /// `ν_i`.
    pub fn get(&self, i: usize) -> u32 {
        self.mults.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// Largest `i` with `ν_i > 0`, plus one.
    pub fn width(&self) -> usize {
        self.mults.len()
    }

    pub fn vertex_count(&self) -> u32 {
        self.mults.iter().sum()
    }

    pub fn half_edge_count(&self) -> u32 {
        self.mults
            .iter()
            .enumerate()
            .map(|(i, &m)| i as u32 * m)
            .sum()
    }

    /// Valences in weakly decreasing order.
    pub fn valences(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &m) in self.mults.iter().enumerate().rev() {
            out.extend(std::iter::repeat(i).take(m as usize));
        }
        out
    }

    /// `|S_ν| = ∏_i (i!)^{ν_i} ν_i!`.
    pub fn group_order(&self) -> BigUint {
        let mut order = BigUint::one();
        for (i, &m) in self.mults.iter().enumerate() {
            let fi = factorial(i as u32);
            for k in 1..=m {
                order *= &fi;
                order *= BigUint::from(k);
            }
        }
        order
    }

    /// Parses `2^3,3^2`, `0^1`, or a bare list of valences `3,3,2`.
    pub fn parse(text: &str) -> Result<GenPartition, ParseError> {
        let t = text.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        let mut mults: Vec<u32> = Vec::new();
        if t.is_empty() {
            return Ok(GenPartition::default());
        }
        for piece in t.split(',') {
            let piece = piece.trim();
            let (base, exp) = match piece.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (piece, "1"),
            };
            let bad = || ParseError::new(format!("bad profile entry `{piece}` in `{text}`"));
            let i: usize = base.parse().map_err(|_| bad())?;
            let m: u32 = exp.parse().map_err(|_| bad())?;
            if mults.len() <= i {
                mults.resize(i + 1, 0);
            }
            mults[i] += m;
        }
        Ok(GenPartition::new(mults))
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self
            .mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, m)| format!("{i}^{m}"))
            .collect();
        write!(f, "({})", pieces.join(","))
    }
}

impl fmt::Debug for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
