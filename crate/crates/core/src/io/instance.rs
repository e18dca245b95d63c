//! Line-oriented instance format.
//!
//! ```text
//! # comment
//! name cycle-4
//! vertices 4
//! rotations
//! 0: 1 3
//! 1: 2 0
//! 2: 3 1
//! 3: 0 2
//! coords
//! 0: 1 0
//! ...
//! ```
//!
//! Rotations list neighbors counterclockwise. The `coords` section is
//! optional; when present it must give every vertex.

use std::fmt::Write as _;

use crate::error::{Error, ParseIssue, Result};
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub name: String,
    pub rotations: Vec<Vec<usize>>,
    pub coords: Option<Vec<[f64; 2]>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Rotations,
    Coords,
}

fn issue(line: usize, column: usize, message: impl Into<String>) -> ParseIssue {
    ParseIssue {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - text.as_ptr() as usize;
        (text[..offset].chars().count() + 1, tok)
    })
}

impl InstanceFile {
    pub fn new(name: impl Into<String>, rotations: Vec<Vec<usize>>) -> Self {
        InstanceFile {
            name: name.into(),
            rotations,
            coords: None,
        }
    }

    pub fn with_coords(mut self, coords: Vec<[f64; 2]>) -> Self {
        self.coords = Some(coords);
        self
    }

    pub fn from_graph(name: impl Into<String>, g: &PlaneGraph) -> Self {
        InstanceFile {
            name: name.into(),
            rotations: g.rotations().to_vec(),
            coords: g.coords().map(<[_]>::to_vec),
        }
    }

    /// Parses instance text, collecting every problem found rather than
    /// stopping at the first.
    pub fn parse(text: &str) -> Result<Self> {
        let mut issues = Vec::new();
        let mut name = None;
        let mut vertices: Option<usize> = None;
        let mut rotations: Vec<Option<Vec<usize>>> = Vec::new();
        let mut coords: Vec<Option<[f64; 2]>> = Vec::new();
        let mut saw_coords = false;
        let mut section = Section::Header;
        let mut last_line = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("");
            let mut toks = tokens(line);
            let Some((col, head)) = toks.next() else {
                continue;
            };
            match head {
                "name" => {
                    let rest = line[col - 1 + head.len()..].trim();
                    if rest.is_empty() {
                        issues.push(issue(line_no, col, "name is empty"));
                    }
                    name = Some(rest.to_string());
                    section = Section::Header;
                }
                "vertices" => {
                    section = Section::Header;
                    match toks.next() {
                        Some((c, t)) => match t.parse::<usize>() {
                            Ok(n) => {
                                vertices = Some(n);
                                rotations = vec![None; n];
                                coords = vec![None; n];
                            }
                            Err(_) => issues.push(issue(line_no, c, format!("bad vertex count '{t}'"))),
                        },
                        None => issues.push(issue(line_no, col + head.len(), "missing vertex count")),
                    }
                }
                "rotations" => section = Section::Rotations,
                "coords" => {
                    section = Section::Coords;
                    saw_coords = true;
                }
                _ if head.ends_with(':') && section != Section::Header => {
                    let Some(n) = vertices else {
                        issues.push(issue(line_no, col, "vertex line before 'vertices'"));
                        continue;
                    };
                    let v = match head[..head.len() - 1].parse::<usize>() {
                        Ok(v) if v < n => v,
                        _ => {
                            issues.push(issue(line_no, col, format!("bad vertex index '{head}'")));
                            continue;
                        }
                    };
                    let mut values = Vec::new();
                    let mut ok = true;
                    for (c, t) in toks {
                        match section {
                            Section::Rotations => match t.parse::<usize>() {
                                Ok(u) => values.push(u as f64),
                                Err(_) => {
                                    issues.push(issue(line_no, c, format!("bad neighbor '{t}'")));
                                    ok = false;
                                }
                            },
                            _ => match t.parse::<f64>() {
                                Ok(x) if x.is_finite() => values.push(x),
                                _ => {
                                    issues.push(issue(line_no, c, format!("bad coordinate '{t}'")));
                                    ok = false;
                                }
                            },
                        }
                    }
                    if !ok {
                        continue;
                    }
                    match section {
                        Section::Rotations => {
                            if rotations[v].is_some() {
                                issues.push(issue(line_no, col, format!("duplicate rotation for {v}")));
                            }
                            rotations[v] = Some(values.iter().map(|&x| x as usize).collect());
                        }
                        _ => {
                            if values.len() != 2 {
                                issues.push(issue(line_no, col, "expected two coordinates"));
                                continue;
                            }
                            if coords[v].is_some() {
                                issues.push(issue(line_no, col, format!("duplicate coords for {v}")));
                            }
                            coords[v] = Some([values[0], values[1]]);
                        }
                    }
                }
                other => issues.push(issue(line_no, col, format!("unexpected '{other}'"))),
            }
        }

        let end = last_line + 1;
        if name.is_none() {
            issues.push(issue(end, 1, "missing 'name'"));
        }
        if vertices.is_none() {
            issues.push(issue(end, 1, "missing 'vertices'"));
        }
        for (v, r) in rotations.iter().enumerate() {
            if r.is_none() {
                issues.push(issue(end, 1, format!("missing rotation for vertex {v}")));
            }
        }
        if saw_coords {
            for (v, c) in coords.iter().enumerate() {
                if c.is_none() {
                    issues.push(issue(end, 1, format!("missing coords for vertex {v}")));
                }
            }
        }
        if !issues.is_empty() {
            return Err(Error::Parse(issues));
        }
        Ok(InstanceFile {
            name: name.unwrap(),
            rotations: rotations.into_iter().map(Option::unwrap).collect(),
            coords: saw_coords.then(|| coords.into_iter().map(Option::unwrap).collect()),
        })
    }

    /// Floats are written in shortest round-trip form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "name {}", self.name).unwrap();
        writeln!(out, "vertices {}", self.rotations.len()).unwrap();
        writeln!(out, "rotations").unwrap();
        for (v, rot) in self.rotations.iter().enumerate() {
            let ns: Vec<String> = rot.iter().map(ToString::to_string).collect();
            writeln!(out, "{v}: {}", ns.join(" ")).unwrap();
        }
        if let Some(coords) = &self.coords {
            writeln!(out, "coords").unwrap();
            for (v, [x, y]) in coords.iter().enumerate() {
                writeln!(out, "{v}: {x} {y}").unwrap();
            }
        }
        out
    }

    /// Builds the embedding (without face validation).
    pub fn to_graph(&self) -> Result<PlaneGraph> {
        let g = PlaneGraph::new(self.rotations.clone())?;
        match &self.coords {
            Some(c) => g.with_coords(c.clone()),
            None => Ok(g),
        }
    }
}

/// Parses, builds and validates an instance.
pub fn parse_instance(text: &str) -> Result<PlaneGraph> {
    let g = InstanceFile::parse(text)?.to_graph()?;
    g.validate_even_polygonal().into_result()?;
    g.compute_bipartition()?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::DefectKind;

    const C4: &str = "\
# the four-cycle
name cycle-4
vertices 4
rotations
0: 1 3
1: 2 0
2: 3 1
3: 0 2
coords
0: 1 0
1: 0 1
2: -1 0
3: 0 -1
";

    #[test]
    fn parses_c4() {
        let inst = InstanceFile::parse(C4).unwrap();
        assert_eq!(inst.name, "cycle-4");
        assert_eq!(inst.rotations[1], vec![2, 0]);
        assert_eq!(inst.coords.as_ref().unwrap()[2], [-1.0, 0.0]);
        let g = parse_instance(C4).unwrap();
        assert_eq!(g.face_count(), 2);
    }

    #[test]
    fn round_trips_text() {
        let inst = InstanceFile::parse(C4).unwrap();
        let again = InstanceFile::parse(&inst.to_text()).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn triangle_face_is_reported() {
        let text = "name k4\nvertices 4\nrotations\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n";
        match parse_instance(text) {
            Err(Error::InvalidFaces(report)) => {
                assert_eq!(report.defects.len(), 4);
                assert!(report.defects.iter().all(|d| d.kind == DefectKind::OddFace));
            }
            other => panic!("expected OddFace defects, got {other:?}"),
        }
    }

    #[test]
    fn truncated_text_reports_position() {
        let text = "name c4\nvertices 4\nrotations\n0: 1 3\n1: 2 0\n";
        match InstanceFile::parse(text) {
            Err(Error::Parse(issues)) => {
                assert_eq!(issues.len(), 2);
                assert!(issues.iter().all(|i| i.line == 6 && i.column == 1));
                assert!(issues[0].message.contains("vertex 2"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn every_bad_token_is_reported() {
        let text = "name x\nvertices 2\nrotations\n0: 1 z\n1: q\nbogus\n";
        match InstanceFile::parse(text) {
            Err(Error::Parse(issues)) => {
                let at: Vec<_> = issues.iter().map(|i| (i.line, i.column)).collect();
                assert_eq!(at, vec![(4, 6), (5, 4), (6, 1), (7, 1), (7, 1)]);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
