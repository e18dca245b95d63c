//! Exact maximization of the region count over all dividing systems.
//!
//! The maximum number of colors of a half-monochromatic coloring equals the
//! maximum number of regions cut out by a dividing system, so χ_f is found
//! by scanning all 2^|F| parity vectors. The scan is split into contiguous
//! blocks of the lexicographic order; any schedule reduces to the same
//! `(max λ, smallest parity vector)` pair.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::coloring::{
    check_half_monochromatic, check_proper, coloring_from_regions, face_color_count, Coloring,
};
use crate::dividing::{
    edge_law_violation, inner_node_violation, join_cells, DividingSystem, DivisionTree, Parities,
    RegionDecomposition,
};
use crate::error::{Error, Result};
use crate::independence::alpha_via_konig;
use crate::medial::MedialGraph;
use crate::plane_graph::PlaneGraph;
use crate::union_find::UnionFind;

pub const DEFAULT_FACE_CAP: usize = 24;
/// Largest face count for which every dividing system is checked against
/// the region and tree laws.
pub const SWEEP_FACE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub face_cap: usize,
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            face_cap: DEFAULT_FACE_CAP,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub chi_f: usize,
    pub witness_parities: Parities,
    pub witness_coloring: Coloring,
    pub regions: RegionDecomposition,
    pub tree: DivisionTree,
    pub alpha: usize,
    pub bound_satisfied: bool,
    pub audit: AuditReport,
    pub systems_explored: u64,
}

/// Counts regions for parity masks, reusing one union-find.
struct RegionCounter<'a> {
    medial: &'a MedialGraph,
    faces: usize,
    uf: UnionFind,
}

impl<'a> RegionCounter<'a> {
    fn new(medial: &'a MedialGraph) -> Self {
        RegionCounter {
            medial,
            faces: medial.face_count(),
            uf: UnionFind::new(medial.graph_vertex_count() + medial.face_count()),
        }
    }

    fn count(&mut self, mask: u64) -> usize {
        self.uf.reset();
        let (m, faces) = (self.medial, self.faces);
        join_cells(&mut self.uf, m, |e| {
            let me = m.edge(e);
            let parity = (mask >> (faces - 1 - me.face)) & 1;
            (me.position as u64 & 1) == parity
        });
        self.uf.components()
    }

    /// Best `(λ, mask)` over `masks`, first mask on ties.
    fn scan(&mut self, masks: std::ops::Range<u64>) -> (usize, u64) {
        let mut best = (0, masks.start);
        for mask in masks {
            let lambda = self.count(mask);
            if lambda > best.0 {
                best = (lambda, mask);
            }
        }
        best
    }
}

fn better(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    if a.0 > b.0 || (a.0 == b.0 && a.1 < b.1) {
        a
    } else {
        b
    }
}

fn check_searchable(g: &PlaneGraph, face_cap: usize) -> Result<()> {
    g.validate_even_polygonal().into_result()?;
    if g.face_count() > face_cap || g.face_count() >= 64 {
        return Err(Error::FaceCapExceeded {
            faces: g.face_count(),
            cap: face_cap.min(63),
        });
    }
    Ok(())
}

fn max_regions(m: &MedialGraph, parallel: bool) -> (usize, u64) {
    let total: u64 = 1 << m.face_count();
    if !parallel || total < 1024 {
        return RegionCounter::new(m).scan(0..total);
    }
    let block = (total / 512).max(1);
    (0..total.div_ceil(block))
        .into_par_iter()
        .map_init(
            || RegionCounter::new(m),
            |counter, b| counter.scan(b * block..((b + 1) * block).min(total)),
        )
        .reduce(|| (0, u64::MAX), better)
}

/// Computes χ_f(G) as the largest region count of any dividing system, with
/// the lexicographically smallest optimal parity vector as witness.
pub fn exact_chi_f(g: &PlaneGraph, opts: SearchOptions) -> Result<SearchResult> {
    check_searchable(g, opts.face_cap)?;
    let bipartition = g.compute_bipartition()?;
    let medial = MedialGraph::new(g);
    let faces = g.face_count();

    let (chi_f, mask) = max_regions(&medial, opts.parallel);
    let witness_parities = Parities::from_mask(mask, faces);
    let system = DividingSystem::assemble(&medial, witness_parities.clone())?;
    let regions = RegionDecomposition::compute(&medial, &system)?;
    let tree = DivisionTree::build(&regions, &medial)?;
    let witness_coloring = coloring_from_regions(&regions);
    debug_assert_eq!(regions.lambda, chi_f);

    let alpha = alpha_via_konig(g, &bipartition);
    let audit = audit_claims(g, &witness_coloring, &regions, &tree);
    Ok(SearchResult {
        chi_f,
        witness_parities,
        witness_coloring,
        regions,
        tree,
        alpha,
        bound_satisfied: bound_holds(chi_f, alpha),
        audit,
        systems_explored: 1 << faces,
    })
}

/// χ_f ≤ (3/2)·α in integers.
pub fn bound_holds(chi_f: usize, alpha: usize) -> bool {
    2 * chi_f <= 3 * alpha
}

/// Re-checks the bound recorded in a search result.
pub fn verify_bound(result: &SearchResult) -> bool {
    bound_holds(result.chi_f, result.alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofCase {
    /// At least two thirds of the regions are leaves of the division tree.
    ManyLeaves,
    FewLeaves,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    /// No face boundary carries exactly two colors.
    pub two_color_faces_absent: bool,
    /// Every region is an independent set.
    pub regions_independent: bool,
    /// G-edges only join regions adjacent in the division tree.
    pub nonadjacent_regions_separated: bool,
    /// Tree nodes of degree at least 2 hold at least two vertices.
    pub inner_regions_large: bool,
    /// |V_i| for each occurring tree degree i.
    pub degree_classes: BTreeMap<usize, usize>,
    pub leaves: usize,
    pub case: ProofCase,
}

impl AuditReport {
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.two_color_faces_absent {
            v.push("a face carries exactly two colors");
        }
        if !self.regions_independent {
            v.push("a region contains an edge");
        }
        if !self.nonadjacent_regions_separated {
            v.push("an edge joins regions that are not adjacent in the tree");
        }
        if !self.inner_regions_large {
            v.push("an inner tree node holds a single vertex");
        }
        v
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn ensure(&self) -> Result<()> {
        match self.violations().first() {
            None => Ok(()),
            Some(v) => Err(Error::ClaimViolated(v.to_string())),
        }
    }
}

/// Checks the structural claims about an optimal coloring and its division
/// tree, and records which leaf-count case the instance falls in.
pub fn audit_claims(
    g: &PlaneGraph,
    coloring: &Coloring,
    regions: &RegionDecomposition,
    tree: &DivisionTree,
) -> AuditReport {
    let two_color_faces_absent = (0..g.face_count()).all(|f| face_color_count(g, coloring, f) != 2);
    let regions_independent = g
        .edges()
        .iter()
        .all(|&(u, v)| regions.region_of_vertex(u) != regions.region_of_vertex(v));
    let nonadjacent_regions_separated = edge_law_violation(g, regions, tree).is_none();
    let inner_regions_large = inner_node_violation(regions, tree).is_none();
    let degree_classes = tree
        .degree_classes()
        .into_iter()
        .map(|(i, xs)| (i, xs.len()))
        .collect();
    let leaves = tree.leaf_count();
    let case = if 3 * leaves >= 2 * coloring.k() {
        ProofCase::ManyLeaves
    } else {
        ProofCase::FewLeaves
    };
    AuditReport {
        two_color_faces_absent,
        regions_independent,
        nonadjacent_regions_separated,
        inner_regions_large,
        degree_classes,
        leaves,
        case,
    }
}

/// Failure counts from checking every dividing system of one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawSweep {
    pub systems: u64,
    pub region_count_failures: u64,
    pub tree_failures: u64,
    pub edge_law_failures: u64,
    pub inner_node_failures: u64,
    pub empty_region_failures: u64,
    pub coloring_failures: u64,
}

impl LawSweep {
    pub fn failures(&self) -> u64 {
        self.region_count_failures
            + self.tree_failures
            + self.edge_law_failures
            + self.inner_node_failures
            + self.empty_region_failures
            + self.coloring_failures
    }

    fn merge(mut self, o: LawSweep) -> LawSweep {
        self.systems += o.systems;
        self.region_count_failures += o.region_count_failures;
        self.tree_failures += o.tree_failures;
        self.edge_law_failures += o.edge_law_failures;
        self.inner_node_failures += o.inner_node_failures;
        self.empty_region_failures += o.empty_region_failures;
        self.coloring_failures += o.coloring_failures;
        self
    }
}

fn check_system(g: &PlaneGraph, m: &MedialGraph, mask: u64) -> LawSweep {
    let mut out = LawSweep {
        systems: 1,
        ..LawSweep::default()
    };
    let system = match DividingSystem::assemble(m, Parities::from_mask(mask, m.face_count())) {
        Ok(s) => s,
        Err(_) => {
            out.region_count_failures += 1;
            return out;
        }
    };
    let regions = match RegionDecomposition::compute(m, &system) {
        Ok(r) => r,
        Err(_) => {
            out.region_count_failures += 1;
            return out;
        }
    };
    if regions.members.iter().any(Vec::is_empty) {
        out.empty_region_failures += 1;
    }
    let coloring = coloring_from_regions(&regions);
    if coloring.k() != regions.lambda
        || !check_proper(g, &coloring)
        || !check_half_monochromatic(g, &coloring)
    {
        out.coloring_failures += 1;
    }
    match DivisionTree::build(&regions, m) {
        Err(_) => out.tree_failures += 1,
        Ok(tree) => {
            if tree.node_count != regions.lambda || tree.edges.len() + 1 != tree.node_count {
                out.tree_failures += 1;
            }
            if edge_law_violation(g, &regions, &tree).is_some() {
                out.edge_law_failures += 1;
            }
            if inner_node_violation(&regions, &tree).is_some() {
                out.inner_node_failures += 1;
            }
        }
    }
    out
}

/// Checks the region-count law, the tree laws, and the coloring derived
/// from regions on every dividing system of `g`.
pub fn sweep_dividing_systems(g: &PlaneGraph, face_cap: usize) -> Result<LawSweep> {
    check_searchable(g, face_cap.min(SWEEP_FACE_CAP))?;
    let m = MedialGraph::new(g);
    let total: u64 = 1 << g.face_count();
    Ok((0..total)
        .into_par_iter()
        .map(|mask| check_system(g, &m, mask))
        .reduce(LawSweep::default, LawSweep::merge))
}
