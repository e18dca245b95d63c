//! JSON form of a solver result.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::plane_graph::PlaneGraph;
use crate::search::{ProofCase, SearchResult};

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditJson {
    pub no_two_color_faces: bool,
    pub regions_independent: bool,
    pub nonadjacent_regions_separated: bool,
    pub inner_regions_large: bool,
    pub leaves: usize,
    pub degree_classes: BTreeMap<usize, usize>,
    pub case: &'static str,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChiFReport {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi_f: usize,
    pub alpha: usize,
    pub bound_satisfied: bool,
    pub witness_parities: String,
    pub systems_explored: u64,
    pub regions: Vec<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_coloring: Option<Vec<usize>>,
    pub audit: AuditJson,
}

impl ChiFReport {
    pub fn new(name: &str, g: &PlaneGraph, r: &SearchResult, with_coloring: bool) -> Self {
        ChiFReport {
            name: name.to_string(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            faces: g.face_count(),
            chi_f: r.chi_f,
            alpha: r.alpha,
            bound_satisfied: r.bound_satisfied,
            witness_parities: r.witness_parities.to_string(),
            systems_explored: r.systems_explored,
            regions: r.regions.members.clone(),
            cycles: r.regions.cycles.iter().map(|c| c.vertices.clone()).collect(),
            witness_coloring: with_coloring.then(|| r.witness_coloring.colors().to_vec()),
            audit: AuditJson {
                no_two_color_faces: r.audit.two_color_faces_absent,
                regions_independent: r.audit.regions_independent,
                nonadjacent_regions_separated: r.audit.nonadjacent_regions_separated,
                inner_regions_large: r.audit.inner_regions_large,
                leaves: r.audit.leaves,
                degree_classes: r.audit.degree_classes.clone(),
                case: match r.audit.case {
                    ProofCase::ManyLeaves => "i",
                    ProofCase::FewLeaves => "ii",
                },
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
