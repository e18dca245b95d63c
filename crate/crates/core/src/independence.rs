//! Independence number of a bipartite plane graph.
//!
//! The primary route is König's theorem: a maximum matching of size ν gives a
//! minimum vertex cover of the same size, and its complement is a maximum
//! independent set of size |V| − ν. A subset search serves as the
//! cross-check.

use crate::error::{Error, Result};
use crate::plane_graph::{Bipartition, PlaneGraph, Side, VertexId};

pub const BRUTEFORCE_VERTEX_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched pairs as `(black, white)`, sorted by black vertex.
    pub pairs: Vec<(VertexId, VertexId)>,
    /// Minimum vertex cover, sorted.
    pub cover: Vec<VertexId>,
}

impl MatchingResult {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Complement of the cover.
    pub fn independent_set(&self, n: usize) -> Vec<VertexId> {
        let mut in_cover = vec![false; n];
        for &v in &self.cover {
            in_cover[v] = true;
        }
        (0..n).filter(|&v| !in_cover[v]).collect()
    }

    fn verify(&self, g: &PlaneGraph) {
        let mut used = vec![false; g.vertex_count()];
        for &(u, v) in &self.pairs {
            assert!(g.are_adjacent(u, v), "matched pair {u}-{v} is not an edge");
            assert!(!used[u] && !used[v], "matching edges overlap");
            used[u] = true;
            used[v] = true;
        }
        let mut in_cover = vec![false; g.vertex_count()];
        for &v in &self.cover {
            in_cover[v] = true;
        }
        for &(u, v) in g.edges() {
            assert!(in_cover[u] || in_cover[v], "edge {u}-{v} is uncovered");
        }
        assert_eq!(self.cover.len(), self.pairs.len(), "König certificate mismatch");
    }
}

fn try_augment(
    g: &PlaneGraph,
    v: VertexId,
    visited: &mut [bool],
    mate: &mut [Option<VertexId>],
) -> bool {
    for &w in g.rotation(v) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        let free = match mate[w] {
            None => true,
            Some(u) => try_augment(g, u, visited, mate),
        };
        if free {
            mate[w] = Some(v);
            mate[v] = Some(w);
            return true;
        }
    }
    false
}

/// Maximum matching by repeated augmenting-path search from the black side,
/// with a König vertex cover extracted from alternating reachability.
pub fn maximum_matching(g: &PlaneGraph, b: &Bipartition) -> MatchingResult {
    let n = g.vertex_count();
    let black = b.class(Side::Black);
    let mut mate: Vec<Option<VertexId>> = vec![None; n];
    for &v in &black {
        let mut visited = vec![false; n];
        try_augment(g, v, &mut visited, &mut mate);
    }

    // Alternating search from unmatched black vertices: non-matching edges
    // black→white, matching edges white→black.
    let mut reached = vec![false; n];
    let mut stack: Vec<VertexId> = black.iter().copied().filter(|&v| mate[v].is_none()).collect();
    for &v in &stack {
        reached[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &w in g.rotation(v) {
            if reached[w] || mate[v] == Some(w) {
                continue;
            }
            reached[w] = true;
            if let Some(u) = mate[w] {
                if !reached[u] {
                    reached[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    let cover: Vec<VertexId> = (0..n)
        .filter(|&v| match b.side[v] {
            Side::Black => !reached[v],
            Side::White => reached[v],
        })
        .collect();
    let pairs: Vec<(VertexId, VertexId)> = black
        .iter()
        .filter_map(|&v| mate[v].map(|w| (v, w)))
        .collect();

    let result = MatchingResult { pairs, cover };
    result.verify(g);
    result
}

pub fn alpha_via_konig(g: &PlaneGraph, b: &Bipartition) -> usize {
    let n = g.vertex_count();
    let alpha = n - maximum_matching(g, b).size();
    assert!(2 * alpha >= n, "independence number below |V|/2");
    alpha
}

/// Maximum independent set size by branching on the lowest remaining vertex
/// (take it and drop its neighbors, or drop it).
pub fn alpha_bruteforce(g: &PlaneGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_VERTEX_CAP {
        return Err(Error::SizeCapExceeded {
            vertices: n,
            cap: BRUTEFORCE_VERTEX_CAP,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.rotation(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    fn best(adj: &[u32], candidates: u32, size: usize, record: &mut usize) {
        if candidates == 0 {
            *record = (*record).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *record {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let rest = candidates & !(1 << v);
        best(adj, rest & !adj[v], size + 1, record);
        best(adj, rest, size, record);
    }
    let mut record = 0;
    best(&adj, (1u32 << n) - 1, 0, &mut record);
    Ok(record)
}
