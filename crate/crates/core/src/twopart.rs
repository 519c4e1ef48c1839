//! 2-partitions: finitely supported maps from partitions to partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::ParseError;
use crate::partition::{GenPartition, Partition};

/// A 2-partition Θ, stored as a map `μ ↦ Θ(μ)` with no empty values.
///
/// For a class of `S_ν`, a key `μ ⊢ i` records the cycle type of the
/// composed local permutation at valence-`i` vertices and the value records
/// the lengths of the vertex cycles carrying that type.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TwoPartition {
    map: BTreeMap<Partition, Partition>,
}

impl TwoPartition {
    pub fn empty() -> Self {
        TwoPartition::default()
    }

    /// Builds Θ from pairs, merging repeated keys and stripping empty values.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Partition, Partition)>) -> Self {
        let mut map: BTreeMap<Partition, Partition> = BTreeMap::new();
        for (k, v) in pairs {
            if v.is_empty() {
                continue;
            }
            let merged = match map.get(&k) {
                Some(old) => old.union(&v),
                None => v,
            };
            map.insert(k, merged);
        }
        TwoPartition { map }
    }

    /// The one-entry map `μ ↦ λ`.
    pub fn single(mu: Partition, lambda: Partition) -> Self {
        TwoPartition::from_pairs([(mu, lambda)])
    }

    pub fn get(&self, mu: &Partition) -> Option<&Partition> {
        self.map.get(mu)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition)> {
        self.map.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `||Θ|| = Σ |μ|·|Θ(μ)|`.
    pub fn norm(&self) -> u32 {
        self.map.iter().map(|(k, v)| k.size() * v.size()).sum()
    }

    /// The profile `ν(Θ)` with `ν_i = Σ_{μ ⊢ i} |Θ(μ)|`.
    pub fn profile(&self) -> GenPartition {
        let mut mults = Vec::new();
        for (k, v) in &self.map {
            let i = k.size() as usize;
            if mults.len() <= i {
                mults.resize(i + 1, 0);
            }
            mults[i] += v.size();
        }
        GenPartition::new(mults)
    }

    /// Key-wise multiset union; this is the product `p_Θ · p_Θ'`.
    pub fn merge(&self, other: &TwoPartition) -> TwoPartition {
        TwoPartition::from_pairs(
            self.map
                .iter()
                .chain(other.map.iter())
                .map(|(k, v)| (k.clone(), v.clone())),
        )
    }

    /// Parses `{[1,1]:[1,1,1], [1,1,1]:[1,1]}`; `->` is accepted in place of `:`.
    pub fn parse(text: &str) -> Result<TwoPartition, ParseError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| {
                ParseError::new(format!("2-partition must be enclosed in braces: `{text}`"))
            })?;
        let mut pairs = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let (key, after) = take_bracketed(rest)
                .ok_or_else(|| ParseError::new(format!("expected `[..]` key in `{text}`")))?;
            let after = after.trim_start();
            let after = after
                .strip_prefix("->")
                .or_else(|| after.strip_prefix(':'))
                .ok_or_else(|| ParseError::new(format!("expected `:` after key in `{text}`")))?;
            let (value, after) = take_bracketed(after.trim_start())
                .ok_or_else(|| ParseError::new(format!("expected `[..]` value in `{text}`")))?;
            pairs.push((Partition::parse(key)?, Partition::parse(value)?));
            let after = after.trim_start();
            rest = after.strip_prefix(',').unwrap_or(after).trim_start();
        }
        Ok(TwoPartition::from_pairs(pairs))
    }
}

fn take_bracketed(s: &str) -> Option<(&str, &str)> {
    let s = s.strip_prefix('[')?;
    let end = s.find(']')?;
    Some((&s[..end], &s[end + 1..]))
}

impl Ord for TwoPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.map.iter().cmp(other.map.iter()))
    }
}

impl PartialOrd for TwoPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self.map.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}}", pieces.join(", "))
    }
}

impl fmt::Debug for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn serialization_is_canonical() {
        let theta =
            TwoPartition::from_pairs([(p(&[1, 1, 1]), p(&[1, 1])), (p(&[1, 1]), p(&[1, 1, 1]))]);
        assert_eq!(theta.to_string(), "{[1,1]:[1,1,1], [1,1,1]:[1,1]}");
        assert_eq!(TwoPartition::parse(&theta.to_string()).unwrap(), theta);
        assert_eq!(
            TwoPartition::parse("{[1,1,1] -> [1,1], [1,1]->[1,1,1]}").unwrap(),
            theta
        );
        assert_eq!(TwoPartition::empty().to_string(), "{}");
        assert_eq!(TwoPartition::parse("{}").unwrap(), TwoPartition::empty());
        assert_eq!(
            TwoPartition::parse("{[]:[1]}").unwrap().to_string(),
            "{[]:[1]}"
        );
    }

    #[test]
    fn empty_values_are_stripped() {
        let theta = TwoPartition::from_pairs([(p(&[2]), p(&[])), (p(&[1]), p(&[1]))]);
        assert_eq!(theta, TwoPartition::single(p(&[1]), p(&[1])));
    }

    #[test]
    fn norm_and_profile() {
        let theta = TwoPartition::parse("{[1,1]:[1,1,1], [1,1,1]:[1,1]}").unwrap();
        assert_eq!(theta.norm(), 12);
        assert_eq!(theta.profile(), GenPartition::parse("2^3,3^2").unwrap());
        assert_eq!(theta.profile().half_edge_count(), theta.norm());
        let vertex = TwoPartition::parse("{[]:[1]}").unwrap();
        assert_eq!(vertex.norm(), 0);
        assert_eq!(vertex.profile(), GenPartition::parse("0^1").unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(TwoPartition::parse("[1]:[1]").is_err());
        assert!(TwoPartition::parse("{[1]}").is_err());
        assert!(TwoPartition::parse("{[1]:[x]}").is_err());
    }
}
