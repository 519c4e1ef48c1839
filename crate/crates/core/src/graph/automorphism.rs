use std::collections::BTreeMap;

use super::HalfEdgeGraph;
use crate::specht::permutations;

/// A graph automorphism acting on half-edges, with its induced vertex map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphAutomorphism {
    pub half_edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl GraphAutomorphism {
    /// `self ∘ other`.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            half_edges: other
                .half_edges
                .iter()
                .map(|&h| self.half_edges[h])
                .collect(),
            vertices: other.vertices.iter().map(|&v| self.vertices[v]).collect(),
        }
    }

    /// Commutes with the pairing and respects incidence.
    pub fn is_valid_for(&self, graph: &HalfEdgeGraph) -> bool {
        let n = graph.half_edge_count();
        self.half_edges.len() == n
            && self.vertices.len() == graph.vertex_count()
            && (0..n).all(|h| {
                self.half_edges[graph.partner(h)] == graph.partner(self.half_edges[h])
                    && graph.vertex_of(self.half_edges[h]) == self.vertices[graph.vertex_of(h)]
            })
    }
}

// Edge ids grouped by unordered endpoint pair, plus loops per vertex.
struct Incidence {
    between: BTreeMap<(usize, usize), Vec<usize>>,
    loops: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(graph: &HalfEdgeGraph) -> Self {
        let mut between: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut loops = vec![Vec::new(); graph.vertex_count()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            if u == v {
                loops[u].push(e);
            } else {
                between.entry((u.min(v), u.max(v))).or_default().push(e);
            }
        }
        Incidence { between, loops }
    }

    fn edges_between(&self, u: usize, v: usize) -> &[usize] {
        self.between
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

fn sorted_labels(edges: &[usize], labels: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = edges.iter().map(|&e| labels[e]).collect();
    out.sort_unstable();
    out
}

/// Vertex permutations preserving vertex labels and the labelled edge
/// multiset between every pair of vertices.
pub fn vertex_automorphisms(
    graph: &HalfEdgeGraph,
    vertex_labels: &[u32],
    edge_labels: &[u32],
) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let inc = Incidence::new(graph);
    let valences = graph.valences();
    let signature: Vec<(u32, usize, Vec<u32>)> = (0..n)
        .map(|v| {
            (
                vertex_labels[v],
                valences[v],
                sorted_labels(&inc.loops[v], edge_labels),
            )
        })
        .collect();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn rec(
        v: usize,
        n: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        signature: &[(u32, usize, Vec<u32>)],
        inc: &Incidence,
        edge_labels: &[u32],
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == n {
            out.push(image.clone());
            return;
        }
        for w in 0..n {
            if used[w] || signature[w] != signature[v] {
                continue;
            }
            let compatible = (0..v).all(|u| {
                sorted_labels(inc.edges_between(u, v), edge_labels)
                    == sorted_labels(inc.edges_between(image[u], w), edge_labels)
            });
            if !compatible {
                continue;
            }
            image[v] = w;
            used[w] = true;
            rec(v + 1, n, image, used, signature, inc, edge_labels, out);
            used[w] = false;
        }
        image[v] = usize::MAX;
    }

    rec(
        0,
        n,
        &mut image,
        &mut used,
        &signature,
        &inc,
        edge_labels,
        &mut out,
    );
    out
}

fn half_at(graph: &HalfEdgeGraph, e: usize, v: usize) -> usize {
    if graph.edges()[e].0 == v {
        2 * e
    } else {
        2 * e + 1
    }
}

/// Ways to carry the edges of one incidence group onto their images; each
/// way is a list of `(half-edge, image)` pairs.
fn local_lifts(
    graph: &HalfEdgeGraph,
    source: &[usize],
    target: &[usize],
    ends: (usize, usize),
    image_ends: (usize, usize),
    edge_labels: &[u32],
) -> Vec<Vec<(usize, usize)>> {
    let is_loop = ends.0 == ends.1;
    let mut by_label: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for &e in source {
        by_label.entry(edge_labels[e]).or_default().0.push(e);
    }
    for &e in target {
        by_label.entry(edge_labels[e]).or_default().1.push(e);
    }
    let mut ways: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for (src, tgt) in by_label.values() {
        let m = src.len();
        let mut group = Vec::new();
        for perm in permutations(m) {
            let flips = if is_loop { 1usize << m } else { 1 };
            for mask in 0..flips {
                let mut way = Vec::with_capacity(2 * m);
                for (i, &e) in src.iter().enumerate() {
                    let f = tgt[perm[i]];
                    if is_loop {
                        let flip = (mask >> i) & 1;
                        way.push((2 * e, 2 * f + flip));
                        way.push((2 * e + 1, 2 * f + 1 - flip));
                    } else {
                        way.push((half_at(graph, e, ends.0), half_at(graph, f, image_ends.0)));
                        way.push((half_at(graph, e, ends.1), half_at(graph, f, image_ends.1)));
                    }
                }
                group.push(way);
            }
        }
        ways = ways
            .iter()
            .flat_map(|w| {
                group.iter().map(move |g| {
                    let mut x = w.clone();
                    x.extend_from_slice(g);
                    x
                })
            })
            .collect();
    }
    ways
}

/// The full automorphism group of a labelled graph in half-edge form.
/// Automorphisms preserve vertex and edge labels.
pub fn automorphisms_labeled(
    graph: &HalfEdgeGraph,
    vertex_labels: &[u32],
    edge_labels: &[u32],
) -> Vec<GraphAutomorphism> {
    let inc = Incidence::new(graph);
    let mut out = Vec::new();
    for pi in vertex_automorphisms(graph, vertex_labels, edge_labels) {
        let mut choices: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
        for (&(u, v), src) in &inc.between {
            let tgt = inc.edges_between(pi[u], pi[v]);
            choices.push(local_lifts(
                graph,
                src,
                tgt,
                (u, v),
                (pi[u], pi[v]),
                edge_labels,
            ));
        }
        for (v, src) in inc.loops.iter().enumerate() {
            if !src.is_empty() {
                choices.push(local_lifts(
                    graph,
                    src,
                    &inc.loops[pi[v]],
                    (v, v),
                    (pi[v], pi[v]),
                    edge_labels,
                ));
            }
        }
        let mut sigma = vec![usize::MAX; graph.half_edge_count()];
        expand(&choices, 0, &mut sigma, &pi, &mut out);
    }
    out
}

fn expand(
    choices: &[Vec<Vec<(usize, usize)>>],
    k: usize,
    sigma: &mut Vec<usize>,
    pi: &[usize],
    out: &mut Vec<GraphAutomorphism>,
) {
    if k == choices.len() {
        out.push(GraphAutomorphism {
            half_edges: sigma.clone(),
            vertices: pi.to_vec(),
        });
        return;
    }
    for way in &choices[k] {
        for &(h, x) in way {
            sigma[h] = x;
        }
        expand(choices, k + 1, sigma, pi, out);
    }
}

/// The full automorphism group in half-edge form.
pub fn automorphisms(graph: &HalfEdgeGraph) -> Vec<GraphAutomorphism> {
    let vl = vec![0; graph.vertex_count()];
    let el = vec![0; graph.edge_count()];
    automorphisms_labeled(graph, &vl, &el)
}
