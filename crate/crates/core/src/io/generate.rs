//! Instance families with even faces, and random instances grown from them.

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::io::instance::InstanceFile;
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Even cycle of the given length, two faces.
    Cycle(usize),
    /// `rows × cols` vertices on a lattice.
    Grid(usize, usize),
    /// Two concentric even cycles joined by spokes; `Prism(4)` is the cube.
    Prism(usize),
}

/// Counterclockwise rotations of a straight-line drawing.
pub fn rotations_from_coords(adjacency: &[Vec<usize>], coords: &[[f64; 2]]) -> Vec<Vec<usize>> {
    adjacency
        .iter()
        .enumerate()
        .map(|(v, nbrs)| {
            let [x, y] = coords[v];
            let mut keyed: Vec<(f64, usize)> = nbrs
                .iter()
                .map(|&u| ((coords[u][1] - y).atan2(coords[u][0] - x), u))
                .collect();
            keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
            keyed.into_iter().map(|(_, u)| u).collect()
        })
        .collect()
}

fn polygon(len: usize, radius: f64) -> Vec<[f64; 2]> {
    (0..len)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / len as f64;
            // Snap rounding noise so exact axis points print as integers.
            let snap = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
            [snap(radius * t.cos()), snap(radius * t.sin())]
        })
        .collect()
}

fn link(adj: &mut [Vec<usize>], u: usize, v: usize) {
    adj[u].push(v);
    adj[v].push(u);
}

fn even_length(len: usize, what: &str) -> Result<()> {
    if len < 4 || len % 2 == 1 {
        return Err(Error::BadParameter(format!(
            "{what} length must be even and at least 4, got {len}"
        )));
    }
    Ok(())
}

pub fn generate_instance(family: Family) -> Result<InstanceFile> {
    let (name, adj, coords) = match family {
        Family::Cycle(len) => {
            even_length(len, "cycle")?;
            let mut adj = vec![Vec::new(); len];
            for i in 0..len {
                link(&mut adj, i, (i + 1) % len);
            }
            (format!("cycle-{len}"), adj, polygon(len, 1.0))
        }
        Family::Grid(rows, cols) => {
            if rows < 2 || cols < 2 {
                return Err(Error::BadParameter(format!(
                    "grid needs at least 2 rows and 2 columns, got {rows}x{cols}"
                )));
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut adj = vec![Vec::new(); rows * cols];
            let mut coords = Vec::with_capacity(rows * cols);
            for r in 0..rows {
                for c in 0..cols {
                    coords.push([c as f64, r as f64]);
                    if c + 1 < cols {
                        link(&mut adj, id(r, c), id(r, c + 1));
                    }
                    if r + 1 < rows {
                        link(&mut adj, id(r, c), id(r + 1, c));
                    }
                }
            }
            (format!("grid-{rows}x{cols}"), adj, coords)
        }
        Family::Prism(len) => {
            even_length(len, "prism base")?;
            let mut adj = vec![Vec::new(); 2 * len];
            for i in 0..len {
                link(&mut adj, i, (i + 1) % len);
                link(&mut adj, len + i, len + (i + 1) % len);
                link(&mut adj, i, len + i);
            }
            let mut coords = polygon(len, 2.0);
            coords.extend(polygon(len, 1.0));
            (format!("prism-{len}"), adj, coords)
        }
    };
    let rotations = rotations_from_coords(&adj, &coords);
    Ok(InstanceFile::new(name, rotations).with_coords(coords))
}

fn insert_after(rot: &mut Vec<usize>, after: usize, new: usize) {
    let i = rot.iter().position(|&x| x == after).expect("neighbor present");
    rot.insert(i + 1, new);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    /// Replace an edge by a path of length three.
    SubdivideTwice,
    /// Split a face by an edge between boundary vertices at odd distance.
    Chord,
    /// Split a face by a path of length two through a new vertex.
    Spoke,
}

/// Applies one random move to `g`, keeping every face an even simple cycle.
/// Returns `None` if no move fits within `max_vertices`.
fn random_move(
    g: &PlaneGraph,
    rng: &mut impl Rng,
    max_vertices: usize,
    allowed: &[Move],
) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut moves: Vec<Move> = allowed
        .iter()
        .copied()
        .filter(|mv| match mv {
            Move::Chord => true,
            Move::Spoke => n < max_vertices,
            Move::SubdivideTwice => n + 2 <= max_vertices,
        })
        .collect();
    moves.shuffle(rng);
    let mut rot = g.rotations().to_vec();
    for mv in moves {
        match mv {
            Move::SubdivideTwice => {
                let &(u, v) = g.edges().choose(rng)?;
                let (a, b) = (n, n + 1);
                *rot[u].iter_mut().find(|x| **x == v).unwrap() = a;
                *rot[v].iter_mut().find(|x| **x == u).unwrap() = b;
                rot.push(vec![u, b]);
                rot.push(vec![a, v]);
                return Some(rot);
            }
            Move::Chord | Move::Spoke => {
                let want_odd = mv == Move::Chord;
                let mut options = Vec::new();
                for f in 0..g.face_count() {
                    let verts: Vec<usize> = g.face_vertices(f).collect();
                    let len = verts.len();
                    for i in 0..len {
                        for j in i + 2..len {
                            let gap = j - i;
                            if (gap % 2 == 1) != want_odd || len - gap < 2 {
                                continue;
                            }
                            if want_odd && (gap < 3 || len - gap < 3 || g.are_adjacent(verts[i], verts[j])) {
                                continue;
                            }
                            options.push((verts[i], verts[(i + len - 1) % len], verts[j], verts[j - 1]));
                        }
                    }
                }
                let Some(&(x, px, y, py)) = options.choose(rng) else {
                    continue;
                };
                if want_odd {
                    insert_after(&mut rot[x], px, y);
                    insert_after(&mut rot[y], py, x);
                } else {
                    let z = n;
                    insert_after(&mut rot[x], px, z);
                    insert_after(&mut rot[y], py, z);
                    rot.push(vec![x, y]);
                }
                return Some(rot);
            }
        }
    }
    None
}

/// Grows `count` instances from the bases that fit in `max_vertices`, each by
/// one to `max_steps` moves drawn from `allowed`.
fn grow(
    seed: u64,
    count: usize,
    max_vertices: usize,
    bases: &[Family],
    allowed: &[Move],
    max_steps: usize,
    prefix: &str,
) -> Vec<InstanceFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases: Vec<InstanceFile> = bases
        .iter()
        .map(|&f| generate_instance(f).expect("family parameters are valid"))
        .filter(|inst| inst.rotations.len() <= max_vertices)
        .collect();
    assert!(!bases.is_empty(), "max_vertices below the smallest family member");

    (0..count)
        .map(|i| {
            let base = bases.choose(&mut rng).unwrap();
            let mut g = base.to_graph().expect("family members build");
            let steps = rng.gen_range(1..=max_steps);
            for _ in 0..steps {
                match random_move(&g, &mut rng, max_vertices, allowed) {
                    Some(rot) => g = PlaneGraph::new(rot).expect("moves keep a plane embedding"),
                    None => break,
                }
            }
            let mut inst = InstanceFile::from_graph(format!("{prefix}-{seed}-{i}"), &g);
            inst.coords = None;
            inst
        })
        .collect()
}

/// Small random instances: a family member with at most `max_vertices`
/// vertices, then one to four random moves. Deterministic in `seed`.
pub fn random_corpus(seed: u64, count: usize, max_vertices: usize) -> Vec<InstanceFile> {
    let bases = [
        Family::Cycle(4),
        Family::Cycle(6),
        Family::Cycle(8),
        Family::Grid(2, 2),
        Family::Grid(2, 3),
        Family::Grid(2, 4),
        Family::Grid(3, 3),
        Family::Prism(4),
    ];
    let moves = [Move::SubdivideTwice, Move::Chord, Move::Spoke];
    grow(seed, count, max_vertices, &bases, &moves, 4, "random")
}

/// Grids with one to three edges each replaced by a path of length three.
/// Every face stays a quadrangle or grows by two. Deterministic in `seed`.
pub fn subdivided_grids(seed: u64, count: usize, max_vertices: usize) -> Vec<InstanceFile> {
    let bases = [Family::Grid(2, 2), Family::Grid(2, 3), Family::Grid(2, 4)];
    grow(seed, count, max_vertices, &bases, &[Move::SubdivideTwice], 3, "subdivided")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(f: Family) -> PlaneGraph {
        let g = generate_instance(f).unwrap().to_graph().unwrap();
        assert!(g.validate_even_polygonal().is_valid(), "{f:?}");
        g
    }

    #[test]
    fn families_have_expected_sizes() {
        let g = build(Family::Cycle(4));
        assert_eq!((g.vertex_count(), g.face_count()), (4, 2));
        let g = build(Family::Grid(2, 3));
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (6, 7, 3));
        let g = build(Family::Prism(4));
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (8, 12, 6));
        assert!(g.faces().iter().all(|f| f.degree() == 4));
        let g = build(Family::Prism(6));
        assert_eq!(g.face_count(), 8);
        let g = build(Family::Grid(4, 5));
        assert_eq!(g.face_count(), 13);
    }

    #[test]
    fn grid_rotation_matches_hand_order() {
        let inst = generate_instance(Family::Grid(2, 3)).unwrap();
        assert_eq!(inst.rotations[1], vec![2, 4, 0]);
        // Cyclically equal to 5, 3, 1.
        assert_eq!(inst.rotations[4], vec![1, 5, 3]);
    }

    #[test]
    fn bad_parameters() {
        assert!(generate_instance(Family::Cycle(5)).is_err());
        assert!(generate_instance(Family::Cycle(2)).is_err());
        assert!(generate_instance(Family::Grid(1, 4)).is_err());
        assert!(generate_instance(Family::Prism(3)).is_err());
    }

    #[test]
    fn subdivided_grids_only_add_vertex_pairs() {
        for inst in subdivided_grids(3, 25, 10) {
            let g = inst.to_graph().unwrap();
            assert!((6..=10).contains(&g.vertex_count()) && g.vertex_count() % 2 == 0);
            assert!(g.validate_even_polygonal().is_valid(), "{}", inst.name);
            // A subdivision pair keeps the face count of the base grid.
            assert!([2, 3, 4].contains(&g.face_count()), "{}", inst.name);
        }
    }

    #[test]
    fn random_corpus_is_valid_and_reproducible() {
        let a = random_corpus(7, 30, 10);
        let b = random_corpus(7, 30, 10);
        assert_eq!(a, b);
        for inst in &a {
            let g = inst.to_graph().unwrap();
            assert!(g.vertex_count() <= 10);
            assert!(g.validate_even_polygonal().is_valid(), "{}", inst.name);
        }
    }
}
