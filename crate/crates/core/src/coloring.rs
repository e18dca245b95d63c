use std::collections::HashMap;

use crate::dividing::RegionDecomposition;
use crate::plane_graph::{Bipartition, FaceId, PlaneGraph, Side, VertexId};

/// A surjective vertex coloring with dense colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Relabels arbitrary color labels densely in order of first appearance.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            k: ids.len(),
        }
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

pub fn check_proper(g: &PlaneGraph, c: &Coloring) -> bool {
    g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// Some color covers at least half of every face boundary.
pub fn check_half_monochromatic(g: &PlaneGraph, c: &Coloring) -> bool {
    (0..g.face_count()).all(|f| {
        let degree = g.face(f).degree();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for v in g.face_vertices(f) {
            *counts.entry(c.color(v)).or_default() += 1;
        }
        counts.values().any(|&k| 2 * k >= degree)
    })
}

/// Which alternation class of face `f` (0: even boundary positions, 1: odd)
/// is monochromatic, if any. For proper colorings this is equivalent to the
/// half-monochromatic condition on that face.
pub fn monochromatic_class(g: &PlaneGraph, c: &Coloring, f: FaceId) -> Option<u8> {
    let verts: Vec<VertexId> = g.face_vertices(f).collect();
    (0..2u8).find(|&p| {
        let mut class = verts.iter().skip(p as usize).step_by(2);
        let first = c.color(*class.next().expect("faces have degree >= 4"));
        class.all(|&v| c.color(v) == first)
    })
}

/// Number of distinct colors on the boundary of face `f`.
pub fn face_color_count(g: &PlaneGraph, c: &Coloring, f: FaceId) -> usize {
    let mut seen: Vec<usize> = g.face_vertices(f).map(|v| c.color(v)).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// One color per region.
pub fn coloring_from_regions(r: &RegionDecomposition) -> Coloring {
    let n: usize = r.members.iter().map(Vec::len).sum();
    let regions: Vec<usize> = (0..n).map(|v| r.region_of_vertex(v)).collect();
    Coloring::from_labels(&regions)
}

/// Every vertex of the larger side (ties: the side of vertex 0) gets its own
/// color, and the other side shares a single color.
pub fn baseline_coloring(b: &Bipartition) -> Coloring {
    let (black, white) = (b.count(Side::Black), b.count(Side::White));
    let fresh = if white > black {
        Side::White
    } else if black > white {
        Side::Black
    } else {
        b.side[0]
    };
    let labels: Vec<usize> = b
        .side
        .iter()
        .enumerate()
        .map(|(v, &s)| if s == fresh { v + 1 } else { 0 })
        .collect();
    Coloring::from_labels(&labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> PlaneGraph {
        PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap()
    }

    fn grid_2x3() -> PlaneGraph {
        PlaneGraph::new(vec![
            vec![1, 3],
            vec![2, 4, 0],
            vec![5, 1],
            vec![4, 0],
            vec![5, 3, 1],
            vec![4, 2],
        ])
        .unwrap()
    }

    #[test]
    fn properness() {
        let g = c4();
        assert!(check_proper(&g, &Coloring::from_labels(&[0, 1, 0, 2])));
        assert!(!check_proper(&g, &Coloring::from_labels(&[0, 0, 1, 2])));
        assert!(check_proper(&g, &Coloring::from_labels(&[0, 1, 2, 3])));
    }

    #[test]
    fn half_monochromatic_on_c4() {
        let g = c4();
        let c = Coloring::from_labels(&[0, 1, 0, 2]);
        assert!(check_half_monochromatic(&g, &c));
        assert_eq!(monochromatic_class(&g, &c, 0), Some(0));
        let rainbow = Coloring::from_labels(&[0, 1, 2, 3]);
        assert!(!check_half_monochromatic(&g, &rainbow));
        assert_eq!(monochromatic_class(&g, &rainbow, 0), None);
        assert_eq!(face_color_count(&g, &rainbow, 1), 4);
    }

    #[test]
    fn labels_are_densified() {
        let c = Coloring::from_labels(&[7, 3, 7, 9]);
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(c.k(), 3);
    }

    #[test]
    fn baseline_counts() {
        let g = c4();
        let c = baseline_coloring(&g.compute_bipartition().unwrap());
        assert_eq!(c.k(), 3);
        assert!(check_proper(&g, &c) && check_half_monochromatic(&g, &c));

        let g = grid_2x3();
        let c = baseline_coloring(&g.compute_bipartition().unwrap());
        assert_eq!(c.k(), 4);
        assert!(check_proper(&g, &c) && check_half_monochromatic(&g, &c));
    }

    #[test]
    fn baseline_prefers_larger_side() {
        let b = Bipartition {
            side: vec![Side::Black, Side::White, Side::White, Side::White],
        };
        assert_eq!(baseline_coloring(&b).k(), 4);
    }
}
