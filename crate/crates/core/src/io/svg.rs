//! SVG drawings of a graph, optionally with a dividing system and a coloring.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::dividing::{DividingSystem, Parities, RegionDecomposition};
use crate::error::{Error, Result};
use crate::io::layout::{default_outer_face, tutte_embedding, Point};
use crate::medial::MedialGraph;
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Clone)]
pub struct Style {
    pub size: f64,
    pub margin: f64,
    pub vertex_radius: f64,
    pub edge_width: f64,
    pub curve_width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            size: 600.0,
            margin: 40.0,
            vertex_radius: 7.0,
            edge_width: 2.0,
            curve_width: 2.5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RenderSpec<'a> {
    pub graph: &'a PlaneGraph,
    pub parities: Option<Parities>,
    pub coloring: Option<Coloring>,
    pub style: Style,
}

impl<'a> RenderSpec<'a> {
    pub fn new(graph: &'a PlaneGraph) -> Self {
        RenderSpec {
            graph,
            parities: None,
            coloring: None,
            style: Style::default(),
        }
    }
}

fn vertex_fill(color: usize) -> String {
    format!("hsl({},70%,60%)", (color * 137) % 360)
}

fn curve_stroke(index: usize) -> String {
    format!("hsl({},85%,35%)", (index * 97 + 200) % 360)
}

/// Layout coordinates: the graph's own, or a barycentric layout pinned on a
/// largest face.
pub fn layout_points(g: &PlaneGraph) -> Result<Vec<Point<f64>>> {
    match g.coords() {
        Some(c) => Ok(c.iter().map(|&[x, y]| Point::new(x, y)).collect()),
        None => tutte_embedding(g, default_outer_face(g)),
    }
}

/// Renders the drawing. Each closed curve of the dividing system is a path
/// through the midpoints of the edges it meets, bending around the corner
/// it cuts off inside the face that contains it.
pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    let g = spec.graph;
    let st = &spec.style;
    let pts = layout_points(g)?;

    let curves = match &spec.parities {
        None => Vec::new(),
        Some(p) => {
            let m = MedialGraph::new(g);
            let d = DividingSystem::assemble(&m, p.clone())?;
            let r = RegionDecomposition::compute(&m, &d)?;
            r.cycles
                .iter()
                .map(|c| curve_path(g, &m, &pts, &c.vertices, &c.edges))
                .collect()
        }
    };
    if let Some(c) = &spec.coloring {
        if c.len() != g.vertex_count() {
            return Err(Error::BadParameter(format!(
                "coloring covers {} of {} vertices",
                c.len(),
                g.vertex_count()
            )));
        }
    }

    let (min_x, max_x) = pts.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.x), b.max(p.x)));
    let (min_y, max_y) = pts.iter().fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.y), b.max(p.y)));
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (st.size - 2.0 * st.margin) / span;
    let to_svg = |p: Point<f64>| -> (f64, f64) {
        (
            st.margin + (p.x - min_x) * scale,
            st.size - st.margin - (p.y - min_y) * scale,
        )
    };

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s:.6}" height="{s:.6}" viewBox="0 0 {s:.6} {s:.6}">"#,
        s = st.size
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    writeln!(out, r##"<g id="edges" stroke="#444444" stroke-width="{:.6}">"##, st.edge_width).unwrap();
    for &(u, v) in g.edges() {
        let (x1, y1) = to_svg(pts[u]);
        let (x2, y2) = to_svg(pts[v]);
        writeln!(out, r#"<line x1="{x1:.6}" y1="{y1:.6}" x2="{x2:.6}" y2="{y2:.6}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    if !curves.is_empty() {
        writeln!(out, r#"<g id="curves" fill="none" stroke-width="{:.6}">"#, st.curve_width).unwrap();
        for (i, segs) in curves.iter().enumerate() {
            let mut d = String::new();
            for (k, (from, ctrl, to)) in segs.iter().enumerate() {
                let (fx, fy) = to_svg(*from);
                let (cx, cy) = to_svg(*ctrl);
                let (tx, ty) = to_svg(*to);
                if k == 0 {
                    write!(d, "M {fx:.6} {fy:.6} ").unwrap();
                }
                write!(d, "Q {cx:.6} {cy:.6} {tx:.6} {ty:.6} ").unwrap();
            }
            d.push('Z');
            writeln!(out, r#"<path class="curve" stroke="{}" d="{}"/>"#, curve_stroke(i), d).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }

    writeln!(out, r##"<g id="vertices" stroke="#000000" stroke-width="1.000000">"##).unwrap();
    for (v, &p) in pts.iter().enumerate() {
        let (x, y) = to_svg(p);
        let fill = spec
            .coloring
            .as_ref()
            .map_or_else(|| "#ffffff".to_string(), |c| vertex_fill(c.color(v)));
        writeln!(
            out,
            r#"<circle cx="{x:.6}" cy="{y:.6}" r="{:.6}" fill="{fill}"/>"#,
            st.vertex_radius
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

/// Quadratic segments `(from, control, to)` for one closed curve.
fn curve_path(
    g: &PlaneGraph,
    m: &MedialGraph,
    pts: &[Point<f64>],
    vertices: &[usize],
    edges: &[usize],
) -> Vec<(Point<f64>, Point<f64>, Point<f64>)> {
    let mid = |e: usize| {
        let (u, v) = g.edges()[e];
        pts[u].midpoint(pts[v])
    };
    let unit = |p: Point<f64>| {
        let l = p.x.hypot(p.y).max(1e-12);
        p * (1.0 / l)
    };
    // Faces lie to the right of their boundary darts.
    let right = |p: Point<f64>| Point::new(p.y, -p.x);
    (0..vertices.len())
        .map(|k| {
            let me = m.edge(edges[k]);
            let from = mid(vertices[k]);
            let to = mid(vertices[(k + 1) % vertices.len()]);
            let face = g.face(me.face);
            let dart_in = g.dart(face.boundary[me.position]);
            let dart_out = g.dart(face.boundary[(me.position + 1) % face.degree()]);
            let corner = pts[me.corner];
            let before = pts[dart_in.tail];
            let after = pts[dart_out.head];
            let inward = unit(right(unit(corner - before)) + right(unit(after - corner)));
            let reach = 0.5 * corner.dist(from).min(corner.dist(to));
            (from, corner + inward * reach, to)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::coloring_from_regions;
    use crate::io::generate::{generate_instance, Family};

    fn c4() -> PlaneGraph {
        generate_instance(Family::Cycle(4)).unwrap().to_graph().unwrap()
    }

    #[test]
    fn c4_double_digon_drawing() {
        let g = c4();
        let m = MedialGraph::new(&g);
        let d = DividingSystem::assemble(&m, "00".parse().unwrap()).unwrap();
        let r = RegionDecomposition::compute(&m, &d).unwrap();
        let mut spec = RenderSpec::new(&g);
        spec.parities = Some("00".parse().unwrap());
        spec.coloring = Some(coloring_from_regions(&r));
        let svg = render_svg(&spec).unwrap();
        assert_eq!(svg.matches(r#"class="curve""#).count(), 2);
        assert_eq!(svg.matches("<circle").count(), 4);
        let fills: std::collections::BTreeSet<_> = svg
            .lines()
            .filter(|l| l.starts_with("<circle"))
            .map(|l| l.split("fill=").nth(1).unwrap().to_string())
            .collect();
        assert_eq!(fills.len(), 3);
        assert_eq!(svg, render_svg(&spec).unwrap());
    }

    #[test]
    fn plain_drawing_has_no_curves() {
        let g = c4();
        let svg = render_svg(&RenderSpec::new(&g)).unwrap();
        assert!(!svg.contains("curve"));
        assert_eq!(svg.matches("<line").count(), 4);
    }

    #[test]
    fn wrong_parity_length_is_an_error() {
        let g = c4();
        let mut spec = RenderSpec::new(&g);
        spec.parities = Some("000".parse().unwrap());
        assert!(matches!(render_svg(&spec), Err(Error::ParityLength { .. })));
    }

    #[test]
    fn renders_without_coordinates() {
        let mut inst = generate_instance(Family::Prism(4)).unwrap();
        inst.coords = None;
        let g = inst.to_graph().unwrap();
        let mut spec = RenderSpec::new(&g);
        spec.parities = Some(crate::dividing::Parities::zeros(g.face_count()));
        assert!(render_svg(&spec).unwrap().contains("<path"));
    }
}
