use std::fmt;

use thiserror::Error;

use crate::plane_graph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single problem found while reading instance text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseIssue {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

fn join_issues(issues: &[ParseIssue]) -> String {
    issues
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists itself as a neighbor")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {u} lists {v} but {v} does not list {u}")]
    InconsistentRotation { u: usize, v: usize },
    #[error("graph is not connected ({components} components)")]
    NotConnected { components: usize },
    #[error("Euler's formula fails: {vertices} - {edges} + {faces} != 2")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("{0}")]
    InvalidFaces(ValidationReport),
    #[error("odd cycle through edge {u}-{v}")]
    OddCycleFound { u: usize, v: usize },
    #[error("medial vertex {medial_vertex} has degree {degree} in the dividing system")]
    InternalDegreeViolation { medial_vertex: usize, degree: usize },
    #[error("{regions} regions but {cycles} closed curves")]
    RegionCycleMismatch { regions: usize, cycles: usize },
    #[error("division tree is not a tree: {0}")]
    NotATree(String),
    #[error("{faces} faces exceeds the exhaustive-search cap of {cap}")]
    FaceCapExceeded { faces: usize, cap: usize },
    #[error("{vertices} vertices exceeds the cap of {cap}")]
    SizeCapExceeded { vertices: usize, cap: usize },
    #[error("claim violated: {0}")]
    ClaimViolated(String),
    #[error("bound violated: 2*{chi_f} > 3*{alpha}")]
    BoundViolated { chi_f: usize, alpha: usize },
    #[error("parse error: {}", join_issues(.0))]
    Parse(Vec<ParseIssue>),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parity vector has length {found}, expected {expected}")]
    ParityLength { expected: usize, found: usize },
    #[error("degenerate layout: vertices {u} and {v} coincide")]
    DegenerateLayout { u: usize, v: usize },
    #[error("linear system for the layout is singular")]
    SingularLayout,
}

impl Error {
    /// Process exit code for this error: 1 for a bad instance or usage,
    /// 2 for a broken internal invariant, 3 for an exceeded cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OddCycleFound { .. }
            | Error::InternalDegreeViolation { .. }
            | Error::RegionCycleMismatch { .. }
            | Error::NotATree(_)
            | Error::ClaimViolated(_)
            | Error::BoundViolated { .. } => 2,
            Error::FaceCapExceeded { .. } | Error::SizeCapExceeded { .. } => 3,
            _ => 1,
        }
    }
}
