//! Elements of `S_ν = ∏_i S_i ≀ S_{ν_i}` and Specht's labelling of their
//! conjugacy classes by 2-partitions.
//!
//! Elements act on *slots* `(i, k, j)`: slot `j` of the `k`-th block of size
//! `i`. The factor for valence `i` sends `(k, j)` to
//! `(outer[k], inner[k][j])`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{cycle_type, GenPartition, Partition};
use crate::twopart::TwoPartition;

/// The `S_i ≀ S_{ν_i}` component of an element of `S_ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathFactor {
    pub outer: Vec<usize>,
    pub inner: Vec<Vec<usize>>,
}

/// An element of `S_ν` in explicit one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    profile: GenPartition,
    factors: Vec<WreathFactor>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn identity_perm(n: usize) -> Vec<usize> {
    (0..n).collect()
}

impl WreathElement {
    pub fn identity(profile: &GenPartition) -> Self {
        let factors = (0..profile.width())
            .map(|i| {
                let m = profile.get(i) as usize;
                WreathFactor {
                    outer: identity_perm(m),
                    inner: vec![identity_perm(i); m],
                }
            })
            .collect();
        WreathElement {
            profile: profile.clone(),
            factors,
        }
    }

    /// Validates shapes and permutations. `factors[i]` is the valence-`i` factor.
    pub fn new(profile: GenPartition, factors: Vec<WreathFactor>) -> Result<Self> {
        if factors.len() != profile.width() {
            return Err(Error::InvalidArgument(format!(
                "expected {} wreath factors for profile {profile}, got {}",
                profile.width(),
                factors.len()
            )));
        }
        for (i, f) in factors.iter().enumerate() {
            let m = profile.get(i) as usize;
            let ok = f.outer.len() == m
                && is_permutation(&f.outer)
                && f.inner.len() == m
                && f.inner.iter().all(|p| p.len() == i && is_permutation(p));
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "malformed S_{i} wr S_{m} factor in element of S_{profile}"
                )));
            }
        }
        Ok(WreathElement { profile, factors })
    }

    pub fn profile(&self) -> &GenPartition {
        &self.profile
    }

    pub fn factors(&self) -> &[WreathFactor] {
        &self.factors
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &WreathElement) -> WreathElement {
        assert_eq!(self.profile, other.profile, "profiles differ");
        let factors = self
            .factors
            .iter()
            .zip(&other.factors)
            .map(|(a, b)| {
                let m = a.outer.len();
                let outer = (0..m).map(|k| a.outer[b.outer[k]]).collect();
                let inner = (0..m)
                    .map(|k| {
                        let target = b.outer[k];
                        b.inner[k].iter().map(|&j| a.inner[target][j]).collect()
                    })
                    .collect();
                WreathFactor { outer, inner }
            })
            .collect();
        WreathElement {
            profile: self.profile.clone(),
            factors,
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let factors = self
            .factors
            .iter()
            .map(|f| {
                let m = f.outer.len();
                let mut outer = vec![0; m];
                let mut inner = vec![Vec::new(); m];
                for k in 0..m {
                    let t = f.outer[k];
                    outer[t] = k;
                    let mut inv = vec![0; f.inner[k].len()];
                    for (j, &x) in f.inner[k].iter().enumerate() {
                        inv[x] = j;
                    }
                    inner[t] = inv;
                }
                WreathFactor { outer, inner }
            })
            .collect();
        WreathElement {
            profile: self.profile.clone(),
            factors,
        }
    }

    /// Flattened action on all `Σ i·ν_i` slots, blocks ordered by valence
    /// and then by block index.
    pub fn slot_permutation(&self) -> Vec<usize> {
        let offsets = slot_offsets(&self.profile);
        let mut perm = vec![0; self.profile.half_edge_count() as usize];
        for (i, f) in self.factors.iter().enumerate() {
            for k in 0..f.outer.len() {
                for j in 0..i {
                    perm[offsets[i] + k * i + j] = offsets[i] + f.outer[k] * i + f.inner[k][j];
                }
            }
        }
        perm
    }

    /// Enumerates every element of `S_ν`. Only sensible for small groups.
    pub fn all(profile: &GenPartition) -> Vec<WreathElement> {
        let per_factor: Vec<Vec<WreathFactor>> = (0..profile.width())
            .map(|i| all_factors(i, profile.get(i) as usize))
            .collect();
        let mut out = Vec::new();
        let mut current: Vec<WreathFactor> = Vec::new();
        fn rec(
            per_factor: &[Vec<WreathFactor>],
            current: &mut Vec<WreathFactor>,
            profile: &GenPartition,
            out: &mut Vec<WreathElement>,
        ) {
            if current.len() == per_factor.len() {
                out.push(WreathElement {
                    profile: profile.clone(),
                    factors: current.clone(),
                });
                return;
            }
            for f in &per_factor[current.len()] {
                current.push(f.clone());
                rec(per_factor, current, profile, out);
                current.pop();
            }
        }
        rec(&per_factor, &mut current, profile, &mut out);
        out
    }
}

fn slot_offsets(profile: &GenPartition) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(profile.width());
    let mut acc = 0;
    for i in 0..profile.width() {
        offsets.push(acc);
        acc += i * profile.get(i) as usize;
    }
    offsets
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(perm.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

fn all_factors(i: usize, m: usize) -> Vec<WreathFactor> {
    let inner_perms = permutations(i);
    let mut out = Vec::new();
    for outer in permutations(m) {
        let mut idx = vec![0usize; m];
        loop {
            out.push(WreathFactor {
                outer: outer.clone(),
                inner: idx.iter().map(|&x| inner_perms[x].clone()).collect(),
            });
            let mut pos = 0;
            while pos < m {
                idx[pos] += 1;
                if idx[pos] < inner_perms.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == m {
                break;
            }
        }
    }
    out
}

/// The 2-partition labelling the conjugacy class of `w`.
///
/// Each cycle of length `ℓ` in the outer permutation of the valence-`i`
/// factor contributes a part `ℓ` to `Θ(μ)`, where `μ ⊢ i` is the cycle type
/// of the inner permutations composed around that cycle.
pub fn conjugacy_type(w: &WreathElement) -> TwoPartition {
    let mut pairs = Vec::new();
    for (i, f) in w.factors.iter().enumerate() {
        let m = f.outer.len();
        let mut seen = vec![false; m];
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut product: Vec<usize> = (0..i).collect();
            let mut len = 0u32;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                product = product.iter().map(|&j| f.inner[k][j]).collect();
                k = f.outer[k];
                len += 1;
            }
            pairs.push((cycle_type(&product), Partition::single(len)));
        }
    }
    TwoPartition::from_pairs(pairs)
}

/// Every 2-partition with profile `ν`, i.e. the conjugacy classes of `S_ν`,
/// in canonical order.
pub fn class_enumeration(profile: &GenPartition) -> Vec<TwoPartition> {
    let mut classes = vec![TwoPartition::empty()];
    for i in 0..profile.width() {
        let count = profile.get(i);
        if count == 0 {
            continue;
        }
        let keys = Partition::all_of(i as u32);
        let local = distribute(&keys, count);
        classes = classes
            .iter()
            .flat_map(|c| local.iter().map(move |l| c.merge(l)))
            .collect();
    }
    classes.sort();
    classes
}

// All ways to assign partitions Θ(μ) to the keys μ with Σ|Θ(μ)| = total.
fn distribute(keys: &[Partition], total: u32) -> Vec<TwoPartition> {
    fn rec(
        keys: &[Partition],
        remaining: u32,
        acc: Vec<(Partition, Partition)>,
        out: &mut Vec<TwoPartition>,
    ) {
        match keys.split_first() {
            None => {
                if remaining == 0 {
                    out.push(TwoPartition::from_pairs(acc));
                }
            }
            Some((key, rest)) => {
                let max = if rest.is_empty() { remaining } else { 0 };
                for take in max..=remaining {
                    for lambda in Partition::all_of(take) {
                        let mut next = acc.clone();
                        next.push((key.clone(), lambda));
                        rec(rest, remaining - take, next, out);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(keys, total, Vec::new(), &mut out);
    out
}

/// `z_Θ = ∏_μ z_{Θ(μ)} · z_μ^{ℓ(Θ(μ))}`, the order of the centralizer of
/// any element of class Θ.
pub fn centralizer_order(theta: &TwoPartition) -> BigUint {
    let mut z = BigUint::one();
    for (mu, lambda) in theta.iter() {
        z *= lambda.z();
        let zmu = mu.z();
        for _ in 0..lambda.len() {
            z *= &zmu;
        }
    }
    z
}

/// A fixed element of the class labelled by Θ.
pub fn class_representative(theta: &TwoPartition) -> WreathElement {
    let profile = theta.profile();
    let mut factors: Vec<WreathFactor> = (0..profile.width())
        .map(|_| WreathFactor {
            outer: Vec::new(),
            inner: Vec::new(),
        })
        .collect();
    for (mu, lambda) in theta.iter() {
        let i = mu.size() as usize;
        let local = perm_of_type(mu);
        for &len in lambda.parts() {
            let f = &mut factors[i];
            let base = f.outer.len();
            let len = len as usize;
            for step in 0..len {
                f.outer.push(base + (step + 1) % len);
                f.inner.push(if step == 0 {
                    local.clone()
                } else {
                    identity_perm(i)
                });
            }
        }
    }
    WreathElement { profile, factors }
}

/// A permutation of `0..|μ|` with cycle type μ.
pub fn perm_of_type(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.size() as usize);
    let mut start = 0;
    for &len in mu.parts() {
        let len = len as usize;
        for step in 0..len {
            perm.push(start + (step + 1) % len);
        }
        start += len;
    }
    perm
}
