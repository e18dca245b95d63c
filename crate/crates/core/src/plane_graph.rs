//! Plane graphs given by rotation systems.
//!
//! Each vertex lists its neighbors in counterclockwise order. Faces are traced
//! with the rule `next(u→v) = (v→w)` where `w` follows `u` in the rotation at
//! `v`. With counterclockwise rotations this keeps the face on the right of
//! each dart: bounded faces are walked clockwise and the outer face
//! counterclockwise.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
    pub twin: DartId,
    /// Successor of this dart along its face boundary.
    pub next: DartId,
    pub edge: EdgeId,
    pub face: FaceId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Boundary darts, starting at the dart with the smallest `(tail, head)`.
    pub boundary: Vec<DartId>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    n: usize,
    rotations: Vec<Vec<VertexId>>,
    darts: Vec<Dart>,
    /// Undirected edges as `(min, max)`, sorted.
    edges: Vec<(VertexId, VertexId)>,
    faces: Vec<Face>,
    coords: Option<Vec<[f64; 2]>>,
}

impl PlaneGraph {
    /// Builds the embedding from counterclockwise neighbor lists and traces
    /// its faces. Fails if the rotations are malformed, the graph is
    /// disconnected, or the traced faces violate Euler's formula.
    pub fn new(rotations: Vec<Vec<VertexId>>) -> Result<Self> {
        let n = rotations.len();
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(Error::NeighborOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(Error::SelfLoop { vertex: v });
                }
                if rot[..i].contains(&u) {
                    return Err(Error::RepeatedNeighbor { vertex: v, neighbor: u });
                }
            }
        }

        let mut dart_of: HashMap<(VertexId, VertexId), DartId> = HashMap::new();
        let mut darts = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                dart_of.insert((v, u), darts.len());
                darts.push(Dart {
                    tail: v,
                    head: u,
                    twin: usize::MAX,
                    next: usize::MAX,
                    edge: usize::MAX,
                    face: usize::MAX,
                });
            }
        }
        if darts.is_empty() {
            return Err(Error::EmptyGraph);
        }
        for dart in darts.iter_mut() {
            let (v, u) = (dart.tail, dart.head);
            match dart_of.get(&(u, v)) {
                Some(&t) => dart.twin = t,
                None => return Err(Error::InconsistentRotation { u: v, v: u }),
            }
        }

        let mut edges: Vec<(VertexId, VertexId)> = darts
            .iter()
            .filter(|d| d.tail < d.head)
            .map(|d| (d.tail, d.head))
            .collect();
        edges.sort_unstable();
        for (e, &(u, v)) in edges.iter().enumerate() {
            darts[dart_of[&(u, v)]].edge = e;
            darts[dart_of[&(v, u)]].edge = e;
        }

        let components = count_components(&rotations);
        if components != 1 {
            return Err(Error::NotConnected { components });
        }

        for dart in darts.iter_mut() {
            let (u, v) = (dart.tail, dart.head);
            let rot = &rotations[v];
            let i = rot.iter().position(|&x| x == u).expect("twin checked");
            let w = rot[(i + 1) % rot.len()];
            dart.next = dart_of[&(v, w)];
        }

        let mut seen = vec![false; darts.len()];
        let mut walks: Vec<Vec<DartId>> = Vec::new();
        for start in 0..darts.len() {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = darts[d].next;
            }
            let key = |d: &DartId| (darts[*d].tail, darts[*d].head);
            let first = (0..walk.len()).min_by_key(|&i| key(&walk[i])).unwrap();
            walk.rotate_left(first);
            walks.push(walk);
        }
        walks.sort_by_key(|w| (darts[w[0]].tail, darts[w[0]].head));

        let faces: Vec<Face> = walks
            .into_iter()
            .enumerate()
            .map(|(id, boundary)| Face { id, boundary })
            .collect();
        for f in &faces {
            for &d in &f.boundary {
                darts[d].face = f.id;
            }
        }

        let (v_count, e_count, f_count) = (n, edges.len(), faces.len());
        if v_count + f_count != e_count + 2 {
            return Err(Error::EulerViolation {
                vertices: v_count,
                edges: e_count,
                faces: f_count,
            });
        }

        Ok(PlaneGraph {
            n,
            rotations,
            darts,
            edges,
            faces,
            coords: None,
        })
    }

    /// Attaches planar coordinates, one point per vertex.
    pub fn with_coords(mut self, coords: Vec<[f64; 2]>) -> Result<Self> {
        if coords.len() != self.n {
            return Err(Error::BadParameter(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                self.n
            )));
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotations
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn dart(&self, d: DartId) -> &Dart {
        &self.darts[d]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    /// Boundary vertices of a face in walk order (the tail of each dart).
    pub fn face_vertices(&self, f: FaceId) -> impl Iterator<Item = VertexId> + '_ {
        self.faces[f].boundary.iter().map(|&d| self.darts[d].tail)
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.rotations[u].contains(&v)
    }

    /// Checks that every face is bounded by a simple cycle of even length and
    /// reports every offending face.
    pub fn validate_even_polygonal(&self) -> ValidationReport {
        let mut defects = Vec::new();
        for f in &self.faces {
            let mut verts: Vec<VertexId> = self.face_vertices(f.id).collect();
            verts.sort_unstable();
            if verts.windows(2).any(|w| w[0] == w[1]) {
                defects.push(FaceDefect {
                    face: f.id,
                    kind: DefectKind::FaceNotCycle,
                });
            }
            if f.degree() % 2 == 1 {
                defects.push(FaceDefect {
                    face: f.id,
                    kind: DefectKind::OddFace,
                });
            }
        }
        ValidationReport { defects }
    }

    /// Two-colors the vertices by breadth-first search from vertex 0 (black).
    pub fn compute_bipartition(&self) -> Result<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        side[0] = Some(Side::Black);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for &u in &self.rotations[v] {
                match side[u] {
                    None => {
                        side[u] = Some(s.opposite());
                        queue.push_back(u);
                    }
                    Some(t) if t == s => return Err(Error::OddCycleFound { u: v, v: u }),
                    Some(_) => {}
                }
            }
        }
        Ok(Bipartition {
            side: side.into_iter().map(|s| s.expect("connected")).collect(),
        })
    }
}

fn count_components(rotations: &[Vec<VertexId>]) -> usize {
    let n = rotations.len();
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &rotations[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    components
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectKind {
    /// The boundary walk revisits a vertex.
    FaceNotCycle,
    OddFace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceDefect {
    pub face: FaceId,
    pub kind: DefectKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub defects: Vec<FaceDefect>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidFaces(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.defects.is_empty() {
            return write!(f, "all faces are even simple cycles");
        }
        let parts: Vec<String> = self
            .defects
            .iter()
            .map(|d| match d.kind {
                DefectKind::FaceNotCycle => format!("FaceNotCycle(face {})", d.face),
                DefectKind::OddFace => format!("OddFace(face {})", d.face),
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Black,
    White,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Black => Side::White,
            Side::White => Side::Black,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
}

impl Bipartition {
    pub fn class(&self, s: Side) -> Vec<VertexId> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn count(&self, s: Side) -> usize {
        self.side.iter().filter(|&&x| x == s).count()
    }
}
