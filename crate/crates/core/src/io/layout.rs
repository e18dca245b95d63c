//! Barycentric (Tutte) layout, generic over the float type.

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_traits::{Float, FromPrimitive};

use crate::error::{Error, Result};
use crate::plane_graph::{FaceId, PlaneGraph};

pub trait Scalar: Float + FromPrimitive + Debug + Send + Sync + 'static {
    /// Largest accepted residual of the barycentric system.
    fn residual_tolerance() -> Self;
    /// Points closer than this (relative to the outer radius) coincide.
    fn separation_tolerance() -> Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("representable literal")
    }
}

impl Scalar for f64 {
    fn residual_tolerance() -> Self {
        1e-9
    }
    fn separation_tolerance() -> Self {
        1e-6
    }
}

impl Scalar for f32 {
    fn residual_tolerance() -> Self {
        1e-4
    }
    fn separation_tolerance() -> Self {
        1e-4
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn dist(self, o: Self) -> T {
        (self.x - o.x).hypot(self.y - o.y)
    }

    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn midpoint(self, o: Self) -> Self {
        (self + o) * T::lit(0.5)
    }
}

impl<T: Scalar> Add for Point<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> Sub for Point<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Point::new(self.x * s, self.y * s)
    }
}

/// A face of maximum degree, smallest id on ties.
pub fn default_outer_face(g: &PlaneGraph) -> FaceId {
    let max = g.faces().iter().map(|f| f.degree()).max().unwrap_or(0);
    g.faces().iter().position(|f| f.degree() == max).unwrap_or(0)
}

/// Solves `a x = b` for several right-hand sides by Gaussian elimination
/// with partial pivoting.
fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut rhs: Vec<Vec<T>>) -> Result<Vec<Vec<T>>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[pivot][col].abs() < T::epsilon() {
            return Err(Error::SingularLayout);
        }
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let (pivot_rows, rest) = a.split_at_mut(col + 1);
        let (pivot_rhs, rest_rhs) = rhs.split_at_mut(col + 1);
        let (pivot, pivot_b) = (&pivot_rows[col], &pivot_rhs[col]);
        for (row, b) in rest.iter_mut().zip(rest_rhs.iter_mut()) {
            let factor = row[col] / pivot[col];
            if factor == T::zero() {
                continue;
            }
            for (x, &p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = *x - factor * p;
            }
            for (x, &p) in b.iter_mut().zip(pivot_b) {
                *x = *x - factor * p;
            }
        }
    }
    let width = rhs.first().map_or(0, Vec::len);
    let mut x = vec![vec![T::zero(); width]; n];
    for row in (0..n).rev() {
        for k in 0..width {
            let mut s = rhs[row][k];
            for c in row + 1..n {
                s = s - a[row][c] * x[c][k];
            }
            x[row][k] = s / a[row][row];
        }
    }
    Ok(x)
}

/// Pins the outer face to a regular polygon of radius 1 and places every
/// other vertex at the average of its neighbors.
///
/// The outer face is laid out counterclockwise so that the resulting drawing
/// agrees with the counterclockwise rotations.
pub fn tutte_embedding<T: Scalar>(g: &PlaneGraph, outer: FaceId) -> Result<Vec<Point<T>>> {
    let n = g.vertex_count();
    let boundary: Vec<usize> = g.face_vertices(outer).collect();
    let mut pos: Vec<Option<Point<T>>> = vec![None; n];
    let len = T::from_usize(boundary.len()).unwrap();
    for (k, &v) in boundary.iter().enumerate() {
        let t = T::lit(std::f64::consts::FRAC_PI_2)
            + T::lit(2.0 * std::f64::consts::PI) * T::from_usize(k).unwrap() / len;
        pos[v] = Some(Point::new(t.cos(), t.sin()));
    }

    let interior: Vec<usize> = (0..n).filter(|&v| pos[v].is_none()).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in interior.iter().enumerate() {
        index[v] = i;
    }
    let m = interior.len();
    let mut a = vec![vec![T::zero(); m]; m];
    let mut rhs = vec![vec![T::zero(); 2]; m];
    for (i, &v) in interior.iter().enumerate() {
        a[i][i] = T::from_usize(g.degree(v)).unwrap();
        for &u in g.rotation(v) {
            match pos[u] {
                Some(p) => {
                    rhs[i][0] = rhs[i][0] + p.x;
                    rhs[i][1] = rhs[i][1] + p.y;
                }
                None => a[i][index[u]] = a[i][index[u]] - T::one(),
            }
        }
    }
    let sol = solve(a.clone(), rhs.clone())?;
    for (i, row) in a.iter().enumerate() {
        for k in 0..2 {
            let r = row
                .iter()
                .zip(&sol)
                .fold(T::zero(), |s, (&aij, xj)| s + aij * xj[k])
                - rhs[i][k];
            if r.abs() >= T::residual_tolerance() {
                return Err(Error::SingularLayout);
            }
        }
    }
    for (i, &v) in interior.iter().enumerate() {
        pos[v] = Some(Point::new(sol[i][0], sol[i][1]));
    }
    let pts: Vec<Point<T>> = pos.into_iter().map(Option::unwrap).collect();

    for u in 0..n {
        for v in u + 1..n {
            if pts[u].dist(pts[v]) < T::separation_tolerance() {
                return Err(Error::DegenerateLayout { u, v });
            }
        }
    }
    Ok(pts)
}

/// Signed area of the polygon through `face`'s boundary (positive when
/// counterclockwise).
pub fn signed_area<T: Scalar>(g: &PlaneGraph, pts: &[Point<T>], face: FaceId) -> T {
    let vs: Vec<usize> = g.face_vertices(face).collect();
    let twice = (0..vs.len()).fold(T::zero(), |s, i| {
        s + pts[vs[i]].cross(pts[vs[(i + 1) % vs.len()]])
    });
    twice * T::lit(0.5)
}

/// Number of pairs of edges that cross at an interior point.
pub fn edge_crossings<T: Scalar>(g: &PlaneGraph, pts: &[Point<T>]) -> usize {
    let orient = |a: Point<T>, b: Point<T>, c: Point<T>| (b - a).cross(c - a);
    let edges = g.edges();
    let mut count = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (p, q, r, s) = (pts[a], pts[b], pts[c], pts[d]);
            let d1 = orient(p, q, r);
            let d2 = orient(p, q, s);
            let d3 = orient(r, s, p);
            let d4 = orient(r, s, q);
            if d1 * d2 < T::zero() && d3 * d4 < T::zero() {
                count += 1;
            }
        }
    }
    count
}
