use super::HalfEdgeGraph;
use crate::specht::permutations;

/// Isomorphism invariant of a labelled graph: vertex labels in canonical
/// vertex order and the sorted list of `(u, v, edge label)` with `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_labels: Vec<u32>,
    pub edges: Vec<(usize, usize, u32)>,
}

impl CanonicalForm {
    pub fn graph(&self) -> HalfEdgeGraph {
        let edges = self.edges.iter().map(|&(u, v, _)| (u, v)).collect();
        HalfEdgeGraph::new(self.vertex_labels.len(), edges).expect("canonical form is well formed")
    }

    pub fn edge_labels(&self) -> Vec<u32> {
        self.edges.iter().map(|&(_, _, l)| l).collect()
    }
}

// Colour refinement: start from (label, valence) and repeatedly split by the
// multiset of (neighbour class, edge label). Returns a class id per vertex;
// ids are ordered by invariant value, so they are isomorphism invariant.
fn refine(graph: &HalfEdgeGraph, vertex_labels: &[u32], edge_labels: &[u32]) -> Vec<usize> {
    let n = graph.vertex_count();
    let valences = graph.valences();
    let mut class = rank(
        &(0..n)
            .map(|v| {
                (
                    vertex_labels[v],
                    valences[v],
                    Vec::<(usize, u32, bool)>::new(),
                )
            })
            .collect::<Vec<_>>(),
    );
    loop {
        let keys: Vec<(u32, usize, Vec<(usize, u32, bool)>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<(usize, u32, bool)> = Vec::new();
                for (e, &(a, b)) in graph.edges().iter().enumerate() {
                    if a == v && b == v {
                        nbrs.push((class[v], edge_labels[e], true));
                    } else if a == v {
                        nbrs.push((class[b], edge_labels[e], false));
                    } else if b == v {
                        nbrs.push((class[a], edge_labels[e], false));
                    }
                }
                nbrs.sort_unstable();
                (class[v] as u32, 0, nbrs)
            })
            .collect();
        let next = rank(&keys);
        let before = class.iter().max().map_or(0, |m| m + 1);
        let after = next.iter().max().map_or(0, |m| m + 1);
        class = next;
        if after == before {
            return class;
        }
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect()
}

/// Canonical form of a labelled graph, together with the position of every
/// vertex in the canonical order.
///
/// Vertices are sorted by refined class; within a class every ordering is
/// tried and the lexicographically smallest edge list wins.
pub fn canonical_form(
    graph: &HalfEdgeGraph,
    vertex_labels: &[u32],
    edge_labels: &[u32],
) -> (CanonicalForm, Vec<usize>) {
    let n = graph.vertex_count();
    let class = refine(graph, vertex_labels, edge_labels);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| class[v]);
    for v in order {
        match blocks.last_mut() {
            Some(b) if class[b[0]] == class[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let block_perms: Vec<Vec<Vec<usize>>> = blocks.iter().map(|b| permutations(b.len())).collect();
    let mut best: Option<(CanonicalForm, Vec<usize>)> = None;
    let mut choice = vec![0usize; blocks.len()];
    loop {
        let mut position = vec![0usize; n];
        let mut next = 0;
        for (bi, block) in blocks.iter().enumerate() {
            let perm = &block_perms[bi][choice[bi]];
            for &k in perm {
                position[block[k]] = next;
                next += 1;
            }
        }
        let mut labels = vec![0; n];
        for v in 0..n {
            labels[position[v]] = vertex_labels[v];
        }
        let mut edges: Vec<(usize, usize, u32)> = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| {
                let (x, y) = (position[a], position[b]);
                (x.min(y), x.max(y), edge_labels[e])
            })
            .collect();
        edges.sort_unstable();
        let form = CanonicalForm {
            vertex_labels: labels,
            edges,
        };
        if best.as_ref().map_or(true, |(b, _)| form < *b) {
            best = Some((form, position));
        }
        // advance the mixed-radix counter over block permutations
        let mut k = 0;
        loop {
            if k == blocks.len() {
                return best.expect("at least one ordering");
            }
            choice[k] += 1;
            if choice[k] < block_perms[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(g: &HalfEdgeGraph) -> CanonicalForm {
        canonical_form(g, &vec![0; g.vertex_count()], &vec![0; g.edge_count()]).0
    }

    #[test]
    fn relabelled_graphs_agree() {
        let a = HalfEdgeGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        let b = HalfEdgeGraph::new(4, vec![(3, 2), (2, 1), (1, 0), (0, 0)]).unwrap();
        let c = HalfEdgeGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 0)]).unwrap();
        assert_eq!(plain(&a), plain(&b));
        assert_eq!(plain(&a), plain(&c));
        let d = HalfEdgeGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (1, 1)]).unwrap();
        assert_ne!(plain(&a), plain(&d));
    }

    #[test]
    fn regular_graphs_are_handled() {
        // two non-isomorphic 3-regular graphs on 6 vertices
        let prism = HalfEdgeGraph::new(
            6,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = HalfEdgeGraph::new(
            6,
            vec![
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let prism2 = HalfEdgeGraph::new(
            6,
            vec![
                (0, 2),
                (2, 4),
                (4, 0),
                (1, 3),
                (3, 5),
                (5, 1),
                (0, 1),
                (2, 3),
                (4, 5),
            ],
        )
        .unwrap();
        assert_ne!(plain(&prism), plain(&k33));
        assert_eq!(plain(&prism), plain(&prism2));
    }

    #[test]
    fn labels_matter() {
        let e = HalfEdgeGraph::new(2, vec![(0, 1)]).unwrap();
        let (a, _) = canonical_form(&e, &[0, 1], &[1]);
        let (b, _) = canonical_form(&e, &[1, 0], &[1]);
        let (c, _) = canonical_form(&e, &[0, 2], &[1]);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.graph().edge_count(), 1);
    }
}
