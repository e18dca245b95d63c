//! Medial graph of a plane graph.
//!
//! Medial vertex `e` sits on edge `e` of G. Inside face `f` with boundary darts
//! `d_0, …, d_{2n-1}`, the medial edge at position `i` joins the midpoints of
//! `d_i` and `d_{i+1}` and cuts off the corner vertex `head(d_i)`. Parallel
//! medial edges (the two arcs around a degree-2 vertex) are kept distinct,
//! keyed by `(face, position)`.

use crate::plane_graph::{EdgeId, FaceId, PlaneGraph, VertexId};

pub type MedialEdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedialEdge {
    pub endpoints: (EdgeId, EdgeId),
    pub face: FaceId,
    pub position: usize,
    pub corner: VertexId,
}

#[derive(Debug, Clone)]
pub struct MedialGraph {
    graph_vertex_count: usize,
    vertex_count: usize,
    edges: Vec<MedialEdge>,
    face_offsets: Vec<usize>,
    face_cycles: Vec<Vec<EdgeId>>,
    incident: Vec<Vec<MedialEdgeId>>,
}

impl MedialGraph {
    pub fn new(g: &PlaneGraph) -> Self {
        let mut edges = Vec::with_capacity(2 * g.edge_count());
        let mut face_offsets = Vec::with_capacity(g.face_count());
        let mut face_cycles = Vec::with_capacity(g.face_count());
        let mut incident = vec![Vec::with_capacity(4); g.edge_count()];

        for face in g.faces() {
            face_offsets.push(edges.len());
            let len = face.degree();
            face_cycles.push(face.boundary.iter().map(|&d| g.dart(d).edge).collect());
            for i in 0..len {
                let d = g.dart(face.boundary[i]);
                let nd = g.dart(face.boundary[(i + 1) % len]);
                let id = edges.len();
                incident[d.edge].push(id);
                incident[nd.edge].push(id);
                edges.push(MedialEdge {
                    endpoints: (d.edge, nd.edge),
                    face: face.id,
                    position: i,
                    corner: d.head,
                });
            }
        }

        MedialGraph {
            graph_vertex_count: g.vertex_count(),
            vertex_count: g.edge_count(),
            edges,
            face_offsets,
            face_cycles,
            incident,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of vertices of the underlying plane graph.
    pub fn graph_vertex_count(&self) -> usize {
        self.graph_vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_offsets.len()
    }

    pub fn edges(&self) -> &[MedialEdge] {
        &self.edges
    }

    pub fn edge(&self, id: MedialEdgeId) -> &MedialEdge {
        &self.edges[id]
    }

    /// Id of the medial edge at `position` inside face `f`.
    pub fn edge_at(&self, f: FaceId, position: usize) -> MedialEdgeId {
        debug_assert!(position < self.face_degree(f));
        self.face_offsets[f] + position
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.face_cycles[f].len()
    }

    /// Medial vertices around face `f`, in boundary order.
    pub fn face_cycle(&self, f: FaceId) -> &[EdgeId] {
        &self.face_cycles[f]
    }

    /// Medial edges incident to a medial vertex (four, counted with the two
    /// incident faces).
    pub fn incident_edges(&self, v: EdgeId) -> &[MedialEdgeId] {
        &self.incident[v]
    }

    /// Medial edges of face `f` inside the given matching. Parity 0 takes the
    /// even positions, parity 1 the odd ones.
    pub fn matching(&self, f: FaceId, parity: u8) -> impl Iterator<Item = MedialEdgeId> + '_ {
        let base = self.face_offsets[f];
        (parity as usize..self.face_degree(f))
            .step_by(2)
            .map(move |i| base + i)
    }

    /// The two perfect matchings of the medial cycle of face `f`.
    pub fn face_matchings(&self, f: FaceId) -> (Vec<MedialEdgeId>, Vec<MedialEdgeId>) {
        (self.matching(f, 0).collect(), self.matching(f, 1).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::Side;

    fn c4() -> PlaneGraph {
        PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap()
    }

    #[test]
    fn c4_medial_counts_and_tags() {
        let g = c4();
        let m = MedialGraph::new(&g);
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(m.edge_count(), 8);
        // Edges sorted: 0=(0,1) 1=(0,3) 2=(1,2) 3=(2,3).
        // Inner walk 0→1→2→3: medial cycle [0,2,3,1], corners 1,2,3,0.
        assert_eq!(m.face_cycle(0), &[0, 2, 3, 1]);
        let corners: Vec<_> = (0..4).map(|i| m.edge(m.edge_at(0, i)).corner).collect();
        assert_eq!(corners, vec![1, 2, 3, 0]);
        assert_eq!(m.edge(m.edge_at(0, 0)).endpoints, (0, 2));
        // Outer walk 0→3→2→1: corners 3,2,1,0.
        let corners: Vec<_> = (0..4).map(|i| m.edge(m.edge_at(1, i)).corner).collect();
        assert_eq!(corners, vec![3, 2, 1, 0]);
        // Every midpoint pair around a corner is doubled.
        for v in 0..4 {
            assert_eq!(m.incident_edges(v).len(), 4);
        }
    }

    #[test]
    fn c4_matchings_cut_alternation_classes() {
        let g = c4();
        let m = MedialGraph::new(&g);
        let (m0, m1) = m.face_matchings(0);
        assert_eq!(m0, vec![0, 2]);
        assert_eq!(m1, vec![1, 3]);
        let cut = |ids: &[usize]| {
            let mut c: Vec<_> = ids.iter().map(|&e| m.edge(e).corner).collect();
            c.sort_unstable();
            c
        };
        assert_eq!(cut(&m0), vec![1, 3]);
        assert_eq!(cut(&m1), vec![0, 2]);
    }

    #[test]
    fn grid_hexagon_matchings_cut_one_class_each() {
        let g = PlaneGraph::new(vec![
            vec![1, 3],
            vec![2, 4, 0],
            vec![5, 1],
            vec![4, 0],
            vec![5, 3, 1],
            vec![4, 2],
        ])
        .unwrap();
        let m = MedialGraph::new(&g);
        assert_eq!(m.vertex_count(), 7);
        assert_eq!(m.edge_count(), 14);
        let b = g.compute_bipartition().unwrap();
        let hex = (0..g.face_count()).find(|&f| g.face(f).degree() == 6).unwrap();
        let (m0, m1) = m.face_matchings(hex);
        assert_eq!((m0.len(), m1.len()), (3, 3));
        let sides = |ids: &[usize]| -> Vec<Side> { ids.iter().map(|&e| b.side[m.edge(e).corner]).collect() };
        let s0 = sides(&m0);
        let s1 = sides(&m1);
        assert!(s0.iter().all(|&s| s == s0[0]));
        assert!(s1.iter().all(|&s| s == s0[0].opposite()));
    }

    #[test]
    fn corner_is_shared_by_both_endpoint_edges() {
        let g = c4();
        let m = MedialGraph::new(&g);
        for me in m.edges() {
            let (a, b) = me.endpoints;
            let (ea, eb) = (g.edges()[a], g.edges()[b]);
            assert!(ea.0 == me.corner || ea.1 == me.corner);
            assert!(eb.0 == me.corner || eb.1 == me.corner);
        }
    }
}
