use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{
    canonical_form, census_labeled, enumerate_graphs_filtered, parse_fields, parse_list,
    polya_petersen_labeled, CanonicalForm, GraphFilter, HalfEdgeGraph,
};
use crate::error::{Error, ParseError, Result};
use crate::partition::{GenPartition, Partition};
use crate::rational::Q;
use crate::twopart::TwoPartition;
use crate::wreath::WreathSymFunc;

/// A graph with a proper vertex colouring and positive edge weights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    base: HalfEdgeGraph,
    colors: Vec<u32>,
    weights: Vec<u32>,
}

impl DecoratedGraph {
    pub fn new(base: HalfEdgeGraph, colors: Vec<u32>, weights: Vec<u32>) -> Result<Self> {
        if colors.len() != base.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "{} colors given for {} vertices",
                colors.len(),
                base.vertex_count()
            )));
        }
        if weights.len() != base.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "{} weights given for {} edges",
                weights.len(),
                base.edge_count()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidArgument(
                "edge weights must be positive".into(),
            ));
        }
        if let Some(&(u, v)) = base.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) joins two vertices of color {}",
                colors[u]
            )));
        }
        Ok(DecoratedGraph {
            base,
            colors,
            weights,
        })
    }

    pub fn base(&self) -> &HalfEdgeGraph {
        &self.base
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// `Σ δ(e)`.
    pub fn degree(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(&self.base, &self.colors, &self.weights).0
    }

    /// Order of the decoration-preserving automorphism group.
    pub fn automorphism_count(&self) -> usize {
        super::automorphisms_labeled(&self.base, &self.colors, &self.weights).len()
    }

    /// `ζ` of the decoration-preserving automorphism group.
    pub fn polya_petersen(&self) -> WreathSymFunc {
        polya_petersen_labeled(&self.base, &self.colors, &self.weights)
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let base = HalfEdgeGraph::parse(text)?;
        let fields = parse_fields(text)?;
        let get = |key: &str| -> std::result::Result<Vec<u32>, ParseError> {
            let (_, v) = fields.iter().find(|(k, _)| k == key).ok_or_else(|| {
                ParseError::new(format!("decorated graph needs a `{key}:` field"))
            })?;
            parse_list(v)
        };
        let colors = get("colors")?;
        let weights = get("weights")?;
        DecoratedGraph::new(base, colors, weights).map_err(|e| ParseError::new(e.to_string()))
    }
}

impl fmt::Display for DecoratedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{}; colors: [{}]; weights: [{}]",
            self.base,
            list(&self.colors),
            list(&self.weights)
        )
    }
}

impl fmt::Debug for DecoratedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Compositions of `total` into `parts` positive integers.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts as u32 - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn proper_colorings(graph: &HalfEdgeGraph, colors: u32) -> Vec<Vec<u32>> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(
        v: usize,
        graph: &HalfEdgeGraph,
        colors: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if v == current.len() {
            out.push(current.clone());
            return;
        }
        for c in 0..colors {
            let clash = graph.edges().iter().any(|&(a, b)| {
                (a == v && b < v && current[b] == c) || (b == v && a < v && current[a] == c)
            });
            if !clash {
                current[v] = c;
                rec(v + 1, graph, colors, current, out);
            }
        }
    }
    rec(0, graph, colors, &mut current, &mut out);
    out
}

/// Profiles of connected loop-free graphs with `edges` edges.
pub fn loop_free_profiles(edges: u32) -> Vec<GenPartition> {
    let mut out = Vec::new();
    for v in 2..=edges as usize + 1 {
        for lambda in Partition::all_of(2 * edges) {
            if lambda.len() == v {
                out.push(GenPartition::from_valences(
                    lambda.parts().iter().map(|&x| x as usize),
                ));
            }
        }
    }
    out
}

/// Isomorphism classes of connected graphs with a proper colouring by
/// `{0..r}` and positive edge weights summing to `d`, in canonical order.
pub fn enumerate_stable_map_graphs(r: u32, d: u32) -> Vec<DecoratedGraph> {
    let filter = GraphFilter {
        connected: true,
        loop_free: true,
    };
    let mut found: BTreeMap<CanonicalForm, DecoratedGraph> = BTreeMap::new();
    for e in 1..=d {
        for profile in loop_free_profiles(e) {
            for base in enumerate_graphs_filtered(&profile, filter) {
                let weightings = compositions(d, base.edge_count());
                for colors in proper_colorings(&base, r + 1) {
                    for weights in &weightings {
                        let (form, _) = canonical_form(&base, &colors, weights);
                        found.entry(form).or_insert_with_key(|form| {
                            DecoratedGraph::new(
                                form.graph(),
                                form.vertex_labels.clone(),
                                form.edge_labels(),
                            )
                            .expect("canonical relabelling keeps the decoration valid")
                        });
                    }
                }
            }
        }
    }
    found.into_values().collect()
}

/// `Θ ↦ O_{P^r,d}(Θ)` over all classes that occur.
pub fn colored_table(r: u32, d: u32) -> BTreeMap<TwoPartition, Q> {
    let mut table: BTreeMap<TwoPartition, Q> = BTreeMap::new();
    for g in enumerate_stable_map_graphs(r, d) {
        let (census, order) = census_labeled(&g.base, &g.colors, &g.weights);
        for (theta, count) in census {
            *table.entry(theta).or_insert_with(Q::zero) +=
                Q::new(BigInt::from(count), BigInt::from(order));
        }
    }
    table
}

/// `O_{P^r,d}(Θ)`, using decoration-preserving automorphisms throughout.
pub fn o_theta_colored(theta: &TwoPartition, r: u32, d: u32) -> Q {
    colored_table(r, d).remove(theta).unwrap_or_else(Q::zero)
}
