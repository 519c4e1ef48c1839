use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{
    automorphisms_labeled, enumerate_graphs, vertex_automorphisms, GraphAutomorphism, HalfEdgeGraph,
};
use crate::partition::{cycle_type, GenPartition};
use crate::rational::Q;
use crate::specht::{conjugacy_type, WreathElement, WreathFactor};
use crate::symfunc::SymFunc;
use crate::twopart::TwoPartition;
use crate::wreath::WreathSymFunc;

/// The image of `a` under `Aut(G) ↪ S_{ν(G)}`.
///
/// Vertices of valence `i` become the blocks of the valence-`i` factor in
/// increasing vertex order; the half-edges at a vertex fill its slots in
/// increasing order.
pub fn automorphism_to_wreath(graph: &HalfEdgeGraph, a: &GraphAutomorphism) -> WreathElement {
    let profile = graph.profile();
    let valences = graph.valences();
    let mut block_of = vec![0usize; graph.vertex_count()];
    let mut counts = vec![0usize; profile.width()];
    for v in 0..graph.vertex_count() {
        block_of[v] = counts[valences[v]];
        counts[valences[v]] += 1;
    }
    let at: Vec<Vec<usize>> = (0..graph.vertex_count())
        .map(|v| graph.half_edges_at(v))
        .collect();
    let mut factors: Vec<WreathFactor> = (0..profile.width())
        .map(|i| WreathFactor {
            outer: vec![0; profile.get(i) as usize],
            inner: vec![Vec::new(); profile.get(i) as usize],
        })
        .collect();
    for v in 0..graph.vertex_count() {
        let w = a.vertices[v];
        let f = &mut factors[valences[v]];
        f.outer[block_of[v]] = block_of[w];
        f.inner[block_of[v]] = at[v]
            .iter()
            .map(|&h| {
                let img = a.half_edges[h];
                at[w]
                    .iter()
                    .position(|&x| x == img)
                    .expect("automorphism respects incidence")
            })
            .collect();
    }
    WreathElement::new(profile, factors).expect("automorphism gives a valid wreath element")
}

/// `Θ ↦ |Aut^Θ(G)|` for automorphisms preserving the given labels.
pub fn census_labeled(
    graph: &HalfEdgeGraph,
    vertex_labels: &[u32],
    edge_labels: &[u32],
) -> (BTreeMap<TwoPartition, u64>, u64) {
    let auts = automorphisms_labeled(graph, vertex_labels, edge_labels);
    let mut census = BTreeMap::new();
    for a in &auts {
        *census
            .entry(conjugacy_type(&automorphism_to_wreath(graph, a)))
            .or_insert(0) += 1;
    }
    (census, auts.len() as u64)
}

/// `Θ ↦ |Aut^Θ(G)|`.
pub fn aut_type_census(graph: &HalfEdgeGraph) -> BTreeMap<TwoPartition, u64> {
    census_labeled(
        graph,
        &vec![0; graph.vertex_count()],
        &vec![0; graph.edge_count()],
    )
    .0
}

/// `ζ_G` for the label-preserving automorphism group.
pub fn polya_petersen_labeled(
    graph: &HalfEdgeGraph,
    vertex_labels: &[u32],
    edge_labels: &[u32],
) -> WreathSymFunc {
    let (census, order) = census_labeled(graph, vertex_labels, edge_labels);
    let mut out = WreathSymFunc::zero();
    for (theta, count) in census {
        out.add_term(theta, Q::new(BigInt::from(count), BigInt::from(order)));
    }
    out
}

/// The Pólya–Petersen character `ζ_G = (1/|Aut G|) Σ_a p_{Θ^a}`.
pub fn polya_petersen(graph: &HalfEdgeGraph) -> WreathSymFunc {
    polya_petersen_labeled(
        graph,
        &vec![0; graph.vertex_count()],
        &vec![0; graph.edge_count()],
    )
}

/// Cycle index of `Aut(G)` acting on vertices, computed from vertex
/// permutations alone. Each vertex automorphism has the same number of
/// half-edge lifts, so averaging over vertex automorphisms suffices.
pub fn vertex_cycle_index(graph: &HalfEdgeGraph) -> SymFunc {
    let perms = vertex_automorphisms(
        graph,
        &vec![0; graph.vertex_count()],
        &vec![0; graph.edge_count()],
    );
    let weight = Q::new(BigInt::from(1), BigInt::from(perms.len()));
    let mut out = SymFunc::zero();
    for p in perms {
        out.add_term(cycle_type(&p), weight.clone());
    }
    out
}

/// `Θ ↦ O(Θ)` for every class of `S_ν`, summing over connected graphs of
/// profile `ν`. Classes not realized are present with value zero.
pub fn profile_table(profile: &GenPartition) -> BTreeMap<TwoPartition, Q> {
    let mut table: BTreeMap<TwoPartition, Q> = crate::specht::class_enumeration(profile)
        .into_iter()
        .map(|t| (t, Q::zero()))
        .collect();
    for g in enumerate_graphs(profile, true) {
        let (census, order) =
            census_labeled(&g, &vec![0; g.vertex_count()], &vec![0; g.edge_count()]);
        for (theta, count) in census {
            *table
                .get_mut(&theta)
                .expect("census types have the graph's profile") +=
                Q::new(BigInt::from(count), BigInt::from(order));
        }
    }
    table
}

/// `O(Θ) = Σ_{G connected, ν(G) = ν(Θ)} |Aut^Θ(G)| / |Aut(G)|`.
pub fn o_theta(theta: &TwoPartition) -> Q {
    if theta.norm() % 2 == 1 {
        return Q::zero();
    }
    profile_table(&theta.profile())
        .remove(theta)
        .unwrap_or_else(Q::zero)
}
