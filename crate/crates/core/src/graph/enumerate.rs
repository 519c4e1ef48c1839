use std::collections::BTreeMap;

use super::{canonical_form, CanonicalForm, HalfEdgeGraph};
use crate::partition::GenPartition;

/// Which isomorphism classes to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GraphFilter {
    pub connected: bool,
    pub loop_free: bool,
}

/// One representative per isomorphism class of multigraphs with valence
/// profile exactly `ν`, optionally only the connected ones. Representatives
/// are in canonical form and listed in canonical order.
pub fn enumerate_graphs(profile: &GenPartition, connected_only: bool) -> Vec<HalfEdgeGraph> {
    enumerate_graphs_filtered(
        profile,
        GraphFilter {
            connected: connected_only,
            loop_free: false,
        },
    )
}

/// Fills the symmetric multiplicity matrix over valence-sorted vertices row
/// by row and keeps the canonical representative of each result.
pub fn enumerate_graphs_filtered(
    profile: &GenPartition,
    filter: GraphFilter,
) -> Vec<HalfEdgeGraph> {
    if profile.half_edge_count() % 2 == 1 {
        return Vec::new();
    }
    let valences = profile.valences();
    let n = valences.len();
    let mut found: BTreeMap<CanonicalForm, HalfEdgeGraph> = BTreeMap::new();
    let mut remaining = valences.clone();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let vertex_labels = vec![0; n];

    struct Ctx<'a> {
        n: usize,
        filter: GraphFilter,
        vertex_labels: &'a [u32],
        found: &'a mut BTreeMap<CanonicalForm, HalfEdgeGraph>,
    }

    fn rec(
        i: usize,
        j: usize,
        remaining: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        ctx: &mut Ctx,
    ) {
        if i == ctx.n {
            let g = HalfEdgeGraph::new(ctx.n, edges.clone()).expect("valid vertices");
            if ctx.filter.connected && !g.is_connected() {
                return;
            }
            let (form, _) = canonical_form(&g, ctx.vertex_labels, &vec![0; g.edge_count()]);
            ctx.found
                .entry(form.clone())
                .or_insert_with(|| form.graph());
            return;
        }
        if j == ctx.n {
            if remaining[i] == 0 {
                rec(i + 1, i + 1, remaining, edges, ctx);
            }
            return;
        }
        let max = if i == j {
            if ctx.filter.loop_free {
                0
            } else {
                remaining[i] / 2
            }
        } else {
            remaining[i].min(remaining[j])
        };
        for m in 0..=max {
            if i == j {
                remaining[i] -= 2 * m;
            } else {
                remaining[i] -= m;
                remaining[j] -= m;
            }
            let before = edges.len();
            edges.extend(std::iter::repeat((i, j)).take(m));
            rec(i, j + 1, remaining, edges, ctx);
            edges.truncate(before);
            if i == j {
                remaining[i] += 2 * m;
            } else {
                remaining[i] += m;
                remaining[j] += m;
            }
        }
    }

    let mut ctx = Ctx {
        n,
        filter,
        vertex_labels: &vertex_labels,
        found: &mut found,
    };
    rec(0, 0, &mut remaining, &mut edges, &mut ctx);
    found.into_values().collect()
}
