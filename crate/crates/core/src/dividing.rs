//! Dividing systems, their regions, and the division tree.
//!
//! A dividing system picks one of the two perfect matchings of every face's
//! medial cycle. Regions are computed without geometry: the faces of the
//! medial graph are one cell per vertex of G and one cell per face of G, and
//! every medial edge separates the cell of its corner from the cell of its
//! face. Cells on both sides of an unselected medial edge belong to the same
//! region.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::medial::{MedialEdgeId, MedialGraph};
use crate::plane_graph::{EdgeId, FaceId, PlaneGraph, VertexId};
use crate::union_find::UnionFind;

/// One matching choice per face, written as a bit string (face 0 first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parities(Vec<u8>);

impl Parities {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::BadParameter(format!("parity bit {b} is not 0 or 1")));
        }
        Ok(Parities(bits))
    }

    pub fn zeros(len: usize) -> Self {
        Parities(vec![0; len])
    }

    /// Decodes `mask` with face 0 as the most significant bit, so numeric
    /// order of masks is lexicographic order of parity vectors.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        Parities((0..len).map(|f| ((mask >> (len - 1 - f)) & 1) as u8).collect())
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, f: FaceId) -> u8 {
        self.0[f]
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Parities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Parities {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::BadParameter(format!("'{c}' in parity string"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Parities)
    }
}

#[derive(Debug, Clone)]
pub struct DividingSystem {
    pub parities: Parities,
    /// Indexed by medial edge id.
    pub selected: Vec<bool>,
    /// Selected medial edge ids in increasing order.
    pub edge_set: Vec<MedialEdgeId>,
}

impl DividingSystem {
    pub fn assemble(m: &MedialGraph, parities: Parities) -> Result<Self> {
        if parities.len() != m.face_count() {
            return Err(Error::ParityLength {
                expected: m.face_count(),
                found: parities.len(),
            });
        }
        let mut selected = vec![false; m.edge_count()];
        for f in 0..m.face_count() {
            for e in m.matching(f, parities.get(f)) {
                selected[e] = true;
            }
        }
        for v in 0..m.vertex_count() {
            let degree = m.incident_edges(v).iter().filter(|&&e| selected[e]).count();
            if degree != 2 {
                return Err(Error::InternalDegreeViolation {
                    medial_vertex: v,
                    degree,
                });
            }
        }
        let edge_set = (0..selected.len()).filter(|&e| selected[e]).collect();
        Ok(DividingSystem {
            parities,
            selected,
            edge_set,
        })
    }

    /// How many selected edges cut off each vertex of G.
    pub fn corner_counts(&self, m: &MedialGraph) -> Vec<usize> {
        let mut counts = vec![0; m.graph_vertex_count()];
        for &e in &self.edge_set {
            counts[m.edge(e).corner] += 1;
        }
        counts
    }
}

/// A closed curve of a dividing system: medial vertices in order, and the
/// medial edge leaving each of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<EdgeId>,
    pub edges: Vec<MedialEdgeId>,
}

fn other_end(m: &MedialGraph, e: MedialEdgeId, v: EdgeId) -> EdgeId {
    let (a, b) = m.edge(e).endpoints;
    if a == v {
        b
    } else {
        a
    }
}

/// Splits the selected edges into closed curves, ordered by their smallest
/// medial vertex. Each walk starts at that vertex along its smaller selected
/// edge.
pub fn extract_cycles(m: &MedialGraph, d: &DividingSystem) -> Vec<Cycle> {
    let mut visited = vec![false; m.vertex_count()];
    let mut cycles = Vec::new();
    for start in 0..m.vertex_count() {
        if visited[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut v = start;
        let mut prev: Option<MedialEdgeId> = None;
        loop {
            visited[v] = true;
            vertices.push(v);
            let e = m
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|&e| d.selected[e] && Some(e) != prev)
                .min()
                .expect("every medial vertex has two selected edges");
            edges.push(e);
            v = other_end(m, e, v);
            prev = Some(e);
            if v == start {
                break;
            }
        }
        cycles.push(Cycle { vertices, edges });
    }
    cycles
}

/// Joins the two cells beside every unselected medial edge. Vertex cells are
/// `0..n`, face cells `n..n + |F|`.
pub(crate) fn join_cells(
    uf: &mut UnionFind,
    m: &MedialGraph,
    mut is_selected: impl FnMut(MedialEdgeId) -> bool,
) {
    let n = m.graph_vertex_count();
    for (id, me) in m.edges().iter().enumerate() {
        if !is_selected(id) {
            uf.union(me.corner, n + me.face);
        }
    }
}

#[derive(Debug, Clone)]
pub struct RegionDecomposition {
    graph_vertex_count: usize,
    region_of_cell: Vec<usize>,
    pub lambda: usize,
    pub cycles: Vec<Cycle>,
    /// `members[x]` is R(x), the vertices of G lying in region `x`.
    pub members: Vec<Vec<VertexId>>,
}

impl RegionDecomposition {
    /// Region ids are numbered by first appearance over the vertex cells,
    /// so region 0 holds vertex 0.
    pub fn compute(m: &MedialGraph, d: &DividingSystem) -> Result<Self> {
        let n = m.graph_vertex_count();
        let cells = n + m.face_count();
        let mut uf = UnionFind::new(cells);
        join_cells(&mut uf, m, |e| d.selected[e]);

        let mut id_of_root = vec![usize::MAX; cells];
        let mut region_of_cell = vec![0; cells];
        let mut lambda = 0;
        for (c, slot) in region_of_cell.iter_mut().enumerate() {
            let r = uf.find(c);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = lambda;
                lambda += 1;
            }
            *slot = id_of_root[r];
        }
        let mut members = vec![Vec::new(); lambda];
        for v in 0..n {
            members[region_of_cell[v]].push(v);
        }

        let cycles = extract_cycles(m, d);
        if lambda != cycles.len() + 1 {
            return Err(Error::RegionCycleMismatch {
                regions: lambda,
                cycles: cycles.len(),
            });
        }
        Ok(RegionDecomposition {
            graph_vertex_count: n,
            region_of_cell,
            lambda,
            cycles,
            members,
        })
    }

    pub fn region_of_vertex(&self, v: VertexId) -> usize {
        self.region_of_cell[v]
    }

    pub fn region_of_face(&self, f: FaceId) -> usize {
        self.region_of_cell[self.graph_vertex_count + f]
    }
}

#[derive(Debug, Clone)]
pub struct DivisionTree {
    pub node_count: usize,
    /// One edge per curve, in curve order, as `(min, max)` region ids.
    pub edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl DivisionTree {
    /// Each curve joins the regions on its two sides, read off from the
    /// curve's smallest medial edge: its corner cell on one side, its face
    /// cell on the other.
    pub fn build(r: &RegionDecomposition, m: &MedialGraph) -> Result<Self> {
        let mut edges = Vec::with_capacity(r.cycles.len());
        let mut adjacency = vec![Vec::new(); r.lambda];
        let mut uf = UnionFind::new(r.lambda);
        for (i, cycle) in r.cycles.iter().enumerate() {
            let e = *cycle.edges.iter().min().expect("cycles are non-empty");
            let me = m.edge(e);
            let x = r.region_of_vertex(me.corner);
            let y = r.region_of_face(me.face);
            if x == y {
                return Err(Error::NotATree(format!(
                    "curve {i} has region {x} on both sides"
                )));
            }
            if !uf.union(x, y) {
                return Err(Error::NotATree(format!("curve {i} closes a cycle")));
            }
            edges.push((x.min(y), x.max(y)));
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
        if uf.components() != 1 {
            return Err(Error::NotATree(format!(
                "{} components",
                uf.components()
            )));
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(DivisionTree {
            node_count: r.lambda,
            edges,
            adjacency,
        })
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn are_adjacent(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].binary_search(&y).is_ok()
    }

    /// V_i for every degree i that occurs.
    pub fn degree_classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.node_count {
            classes.entry(self.degree(x)).or_default().push(x);
        }
        classes
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.node_count).filter(|&x| self.degree(x) == 1).count()
    }
}

/// First edge of G whose endpoints are not in distinct, tree-adjacent
/// regions. Covers both independence of each R(x) and the statement that
/// G-edges only join regions adjacent in the tree.
pub fn edge_law_violation(
    g: &PlaneGraph,
    r: &RegionDecomposition,
    t: &DivisionTree,
) -> Option<(VertexId, VertexId)> {
    g.edges().iter().copied().find(|&(u, v)| {
        let (x, y) = (r.region_of_vertex(u), r.region_of_vertex(v));
        x == y || !t.are_adjacent(x, y)
    })
}

/// First tree node of degree at least 2 holding a single vertex of G.
pub fn inner_node_violation(r: &RegionDecomposition, t: &DivisionTree) -> Option<usize> {
    (0..t.node_count).find(|&x| t.degree(x) >= 2 && r.members[x].len() < 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(len: usize) -> PlaneGraph {
        PlaneGraph::new(
            (0..len)
                .map(|i| vec![(i + 1) % len, (i + len - 1) % len])
                .collect(),
        )
        .unwrap()
    }

    fn decompose(g: &PlaneGraph, bits: &str) -> (MedialGraph, DividingSystem, RegionDecomposition) {
        let m = MedialGraph::new(g);
        let d = DividingSystem::assemble(&m, bits.parse().unwrap()).unwrap();
        let r = RegionDecomposition::compute(&m, &d).unwrap();
        (m, d, r)
    }

    #[test]
    fn parity_mask_is_lexicographic() {
        let p = Parities::from_mask(0b011, 3);
        assert_eq!(p.to_string(), "011");
        assert_eq!(p.to_mask(), 3);
        assert!(Parities::from_mask(1, 3) < Parities::from_mask(4, 3));
        assert!("012".parse::<Parities>().is_err());
    }

    #[test]
    fn c4_double_digon() {
        // Parity 0 cuts corners {1, 3} inside and outside.
        let g = cycle_graph(4);
        let (m, d, r) = decompose(&g, "00");
        assert_eq!(d.edge_set.len(), 4);
        assert_eq!(d.corner_counts(&m), vec![0, 2, 0, 2]);
        let cycles = extract_cycles(&m, &d);
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.vertices.len() == 2));
        assert_eq!(r.lambda, 3);
        assert_eq!(r.members, vec![vec![0, 2], vec![1], vec![3]]);

        let t = DivisionTree::build(&r, &m).unwrap();
        assert_eq!(t.edges, vec![(0, 1), (0, 2)]);
        assert_eq!(t.degree(0), 2);
        assert_eq!(t.leaf_count(), 2);
    }

    #[test]
    fn c4_single_curve() {
        let g = cycle_graph(4);
        let (m, d, r) = decompose(&g, "01");
        let cycles = extract_cycles(&m, &d);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices.len(), 4);
        assert_eq!(r.lambda, 2);
        assert_eq!(r.members, vec![vec![0, 2], vec![1, 3]]);
        let t = DivisionTree::build(&r, &m).unwrap();
        assert_eq!(t.edges, vec![(0, 1)]);
    }

    #[test]
    fn c6_triple_digon_is_a_star() {
        let g = cycle_graph(6);
        let (m, _, r) = decompose(&g, "00");
        assert_eq!(r.lambda, 4);
        assert_eq!(r.members, vec![vec![0, 2, 4], vec![1], vec![3], vec![5]]);
        let t = DivisionTree::build(&r, &m).unwrap();
        let classes = t.degree_classes();
        assert_eq!(classes[&1], vec![1, 2, 3]);
        assert_eq!(classes[&3], vec![0]);
    }

    #[test]
    fn laws_hold_for_every_c6_system() {
        let g = cycle_graph(6);
        let m = MedialGraph::new(&g);
        for mask in 0..4 {
            let d = DividingSystem::assemble(&m, Parities::from_mask(mask, 2)).unwrap();
            let r = RegionDecomposition::compute(&m, &d).unwrap();
            let t = DivisionTree::build(&r, &m).unwrap();
            assert_eq!(edge_law_violation(&g, &r, &t), None);
            assert_eq!(inner_node_violation(&r, &t), None);
            assert!(r.members.iter().all(|x| !x.is_empty()));
        }
    }

    #[test]
    fn wrong_parity_length_is_rejected() {
        let g = cycle_graph(4);
        let m = MedialGraph::new(&g);
        assert!(matches!(
            DividingSystem::assemble(&m, Parities::zeros(3)),
            Err(Error::ParityLength { expected: 2, found: 3 })
        ));
    }
}
