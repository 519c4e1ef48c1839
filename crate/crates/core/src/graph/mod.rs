//! Multigraphs in half-edge form, their automorphism groups and the
//! weighted counts built from them.
//!
//! Edge `k` owns half-edges `2k` (at its first endpoint) and `2k + 1` (at
//! its second), so the pairing involution is `h ↦ h ^ 1`.

mod automorphism;
mod canonical;
mod census;
mod decorated;
mod enumerate;

use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::partition::GenPartition;

pub use automorphism::{
    automorphisms, automorphisms_labeled, vertex_automorphisms, GraphAutomorphism,
};
pub use canonical::{canonical_form, CanonicalForm};
pub use census::{
    aut_type_census, automorphism_to_wreath, census_labeled, o_theta, polya_petersen,
    polya_petersen_labeled, profile_table, vertex_cycle_index,
};
pub use decorated::{
    colored_table, enumerate_stable_map_graphs, loop_free_profiles, o_theta_colored, DecoratedGraph,
};
pub use enumerate::{enumerate_graphs, enumerate_graphs_filtered, GraphFilter};

/// A finite multigraph; loops and parallel edges are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HalfEdgeGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl HalfEdgeGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u >= vertex_count || v >= vertex_count)
        {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) refers to a vertex outside 0..{vertex_count}"
            )));
        }
        Ok(HalfEdgeGraph {
            vertex_count,
            edges,
        })
    }

    /// Builds a graph from a vertex assignment of half-edges and a pairing.
    pub fn from_half_edges(
        vertex_count: usize,
        vertex_of: &[usize],
        pairing: &[usize],
    ) -> Result<Self> {
        if vertex_of.len() != pairing.len() {
            return Err(Error::InvalidArgument(
                "vertex map and pairing have different lengths".into(),
            ));
        }
        let n = pairing.len();
        let mut edges = Vec::new();
        for h in 0..n {
            let o = pairing[h];
            if o >= n || o == h || pairing[o] != h {
                return Err(Error::InvalidArgument(format!(
                    "pairing is not a fixed-point-free involution at half-edge {h}"
                )));
            }
            if h < o {
                edges.push((vertex_of[h], vertex_of[o]));
            }
        }
        HalfEdgeGraph::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        let (u, v) = self.edges[h / 2];
        if h % 2 == 0 {
            u
        } else {
            v
        }
    }

    pub fn partner(&self, h: usize) -> usize {
        h ^ 1
    }

    /// Half-edges incident to `v`, increasing.
    pub fn half_edges_at(&self, v: usize) -> Vec<usize> {
        (0..self.half_edge_count())
            .filter(|&h| self.vertex_of(h) == v)
            .collect()
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            val[u] += 1;
            val[v] += 1;
        }
        val
    }

    pub fn profile(&self) -> GenPartition {
        GenPartition::from_valences(self.valences())
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        let mut components = self.vertex_count;
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// `|E| - |V| + 1` for a connected graph.
    pub fn first_betti(&self) -> i64 {
        self.edges.len() as i64 - self.vertex_count as i64 + 1
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let fields = parse_fields(text)?;
        let vertices = fields
            .iter()
            .find(|(k, _)| k == "vertices")
            .ok_or_else(|| ParseError::new("graph text needs a `vertices:` field"))?;
        let vertex_count: usize = vertices
            .1
            .parse()
            .map_err(|_| ParseError::new(format!("bad vertex count `{}`", vertices.1)))?;
        let edges = match fields.iter().find(|(k, _)| k == "edges") {
            Some((_, v)) => parse_pairs(v)?,
            None => Vec::new(),
        };
        if let Some((k, _)) = fields
            .iter()
            .find(|(k, _)| !matches!(k.as_str(), "vertices" | "edges" | "colors" | "weights"))
        {
            return Err(ParseError::new(format!("unknown graph field `{k}`")));
        }
        HalfEdgeGraph::new(vertex_count, edges).map_err(|e| ParseError::new(e.to_string()))
    }
}

impl fmt::Display for HalfEdgeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect();
        write!(
            f,
            "vertices: {}; edges: [{}]",
            self.vertex_count,
            edges.join(",")
        )
    }
}

impl fmt::Debug for HalfEdgeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// `key: value` fields separated by `;` or newlines.
pub(crate) fn parse_fields(text: &str) -> std::result::Result<Vec<(String, String)>, ParseError> {
    let mut out = Vec::new();
    for piece in text.split([';', '\n']) {
        let piece = piece.trim();
        if piece.is_empty() || piece.starts_with('#') {
            continue;
        }
        let (k, v) = piece
            .split_once(':')
            .ok_or_else(|| ParseError::new(format!("expected `key: value`, found `{piece}`")))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn strip_brackets(text: &str) -> std::result::Result<&str, ParseError> {
    text.trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .map(str::trim)
        .ok_or_else(|| ParseError::new(format!("expected a bracketed list, found `{text}`")))
}

fn parse_pairs(text: &str) -> std::result::Result<Vec<(usize, usize)>, ParseError> {
    let inner = strip_brackets(text)?;
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| ParseError::new(format!("expected `(u,v)` in `{text}`")))?;
        let close = rest[open..]
            .find(')')
            .map(|c| c + open)
            .ok_or_else(|| ParseError::new(format!("unclosed edge in `{text}`")))?;
        if !rest[..open].trim().trim_matches(',').trim().is_empty() {
            return Err(ParseError::new(format!(
                "unexpected text before edge in `{text}`"
            )));
        }
        let body = &rest[open + 1..close];
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| ParseError::new(format!("edge `({body})` needs two endpoints")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| ParseError::new(format!("bad vertex id `{}`", s.trim())))
        };
        out.push((parse(a)?, parse(b)?));
        rest = rest[close + 1..].trim_start_matches([',', ' ']).trim();
    }
    Ok(out)
}

pub(crate) fn parse_list(text: &str) -> std::result::Result<Vec<u32>, ParseError> {
    let inner = strip_brackets(text)?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| ParseError::new(format!("bad list entry `{}`", s.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = HalfEdgeGraph::parse("vertices: 2; edges: [(0,1), (1,1)]").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.valences(), vec![1, 3]);
        assert_eq!(g.to_string(), "vertices: 2; edges: [(0,1),(1,1)]");
        assert_eq!(HalfEdgeGraph::parse(&g.to_string()).unwrap(), g);
        assert!(g.has_loops());
        assert!(g.is_connected());
    }

    #[test]
    fn half_edge_view() {
        let g = HalfEdgeGraph::new(2, vec![(0, 1), (1, 1)]).unwrap();
        assert_eq!(g.half_edges_at(1), vec![1, 2, 3]);
        assert_eq!(g.partner(2), 3);
        let vertex_of: Vec<usize> = (0..4).map(|h| g.vertex_of(h)).collect();
        let pairing: Vec<usize> = (0..4).map(|h| g.partner(h)).collect();
        assert_eq!(
            HalfEdgeGraph::from_half_edges(2, &vertex_of, &pairing).unwrap(),
            g
        );
        assert!(HalfEdgeGraph::from_half_edges(2, &vertex_of, &[0, 1, 3, 2]).is_err());
    }

    #[test]
    fn rejects_bad_text() {
        assert!(HalfEdgeGraph::parse("edges: [(0,1)]").is_err());
        assert!(HalfEdgeGraph::parse("vertices: 1; edges: [(0,1)]").is_err());
        assert!(HalfEdgeGraph::parse("vertices: 2; edges: [(0 1)]").is_err());
        assert!(HalfEdgeGraph::parse("vertices: 2; shape: round").is_err());
    }

    #[test]
    fn connectivity() {
        assert!(HalfEdgeGraph::new(1, vec![]).unwrap().is_connected());
        assert!(!HalfEdgeGraph::new(2, vec![]).unwrap().is_connected());
        assert!(!HalfEdgeGraph::new(3, vec![(0, 1), (2, 2)])
            .unwrap()
            .is_connected());
    }
}
