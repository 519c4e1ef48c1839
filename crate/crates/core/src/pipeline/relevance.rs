use std::collections::BTreeSet;

use crate::graph::{aut_type_census, enumerate_graphs_filtered, GraphFilter};
use crate::partition::{GenPartition, Partition};
use crate::twopart::TwoPartition;

/// Which vertices a graph term may contain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexFloor {
    /// Every vertex is a stable curve: genus-0 vertices of valence `i`
    /// carry at least `3 - i` markings, genus-1 vertices at least `1 - i`.
    Stable,
    /// Vertices of genus 0 with one or two special points are allowed
    /// (the `h_1`, `h_2` terms); graphs are loop-free with `1..=max_edges`
    /// edges.
    Formal { max_edges: u32 },
}

// Fewest markings needed to make every vertex stable when at most `budget`
// units of genus can be spread over the vertices.
fn min_markings(valences: &[usize], budget: i64) -> u32 {
    let cost = |i: usize, genus: i64| -> u32 {
        match genus {
            0 => 3u32.saturating_sub(i as u32),
            1 => 1u32.saturating_sub(i as u32),
            _ => 0,
        }
    };
    let budget = budget.max(0) as usize;
    let mut best = vec![0u32; budget + 1];
    for &i in valences {
        let mut next = vec![u32::MAX; budget + 1];
        for (spent, &b) in best.iter().enumerate() {
            if b == u32::MAX {
                continue;
            }
            for genus in 0..=2.min(budget - spent) {
                let total = b + cost(i, genus as i64);
                let slot = &mut next[spent + genus];
                *slot = (*slot).min(total);
            }
        }
        best = next;
    }
    best.into_iter().min().unwrap_or(0)
}

fn valence_profiles(edges: u32, vertices: usize) -> Vec<GenPartition> {
    if edges == 0 {
        return if vertices == 1 {
            vec![GenPartition::from_valences([0])]
        } else {
            Vec::new()
        };
    }
    Partition::all_of(2 * edges)
        .into_iter()
        .filter(|p| p.len() == vertices)
        .map(|p| GenPartition::from_valences(p.parts().iter().map(|&x| x as usize)))
        .collect()
}

/// Valence profiles of connected graphs that can contribute to some
/// coefficient with `t`-exponent `<= g_max - 1` and degree `<= n_max`.
pub fn relevant_profiles(g_max: i64, n_max: u32, floor: VertexFloor) -> Vec<GenPartition> {
    let mut out = Vec::new();
    match floor {
        VertexFloor::Stable => {
            let max_edges = 3 * g_max - 3 + n_max as i64;
            for e in 0..=max_edges.max(-1) {
                for v in 1..=(e + 1) {
                    let betti = e - v + 1;
                    if betti > g_max {
                        continue;
                    }
                    for profile in valence_profiles(e as u32, v as usize) {
                        if min_markings(&profile.valences(), g_max - betti) <= n_max {
                            out.push(profile);
                        }
                    }
                }
            }
        }
        VertexFloor::Formal { max_edges } => {
            for e in 1..=max_edges as i64 {
                for v in 2..=(e + 1) {
                    if e - v + 1 <= g_max {
                        out.extend(valence_profiles(e as u32, v as usize));
                    }
                }
            }
        }
    }
    out.sort_by_key(|p| (p.half_edge_count(), p.vertex_count(), p.clone()));
    out
}

/// Every Θ realized by an automorphism of a connected graph with a
/// relevant profile, in canonical order.
pub fn relevant_thetas(g_max: i64, n_max: u32, floor: VertexFloor) -> Vec<TwoPartition> {
    let filter = GraphFilter {
        connected: true,
        loop_free: matches!(floor, VertexFloor::Formal { .. }),
    };
    let mut out = BTreeSet::new();
    for profile in relevant_profiles(g_max, n_max, floor) {
        for g in enumerate_graphs_filtered(&profile, filter) {
            out.extend(aut_type_census(&g).into_keys());
        }
    }
    out.into_iter().collect()
}
