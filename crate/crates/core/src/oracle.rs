//! Brute-force χ_f over set partitions of the vertex set.
//!
//! Partitions are enumerated as restricted-growth strings, so each coloring
//! is visited once up to renaming of colors. Nothing here touches medial
//! graphs or dividing systems.

use crate::coloring::{check_half_monochromatic, check_proper, Coloring};
use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;

pub const DEFAULT_VERTEX_CAP: usize = 12;

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub chi_f: usize,
    pub witness: Coloring,
    /// Complete proper partitions that were tested for the face condition.
    pub partitions_scanned: u64,
}

struct Scan<'a> {
    g: &'a PlaneGraph,
    blocks: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
    scanned: u64,
}

impl Scan<'_> {
    fn extend(&mut self, v: usize, used: usize) {
        let n = self.blocks.len();
        if v == n {
            self.scanned += 1;
            let record = self.best.as_ref().map_or(0, |b| b.0);
            let c = Coloring::from_labels(&self.blocks);
            if used > record && check_proper(self.g, &c) && check_half_monochromatic(self.g, &c) {
                self.best = Some((used, self.blocks.clone()));
            }
            return;
        }
        // Even with a fresh block for every remaining vertex this branch
        // cannot beat the record.
        if let Some((record, _)) = &self.best {
            if used + (n - v) <= *record {
                return;
            }
        }
        for b in (0..=used).rev() {
            let clash = self.g.rotation(v).iter().any(|&u| u < v && self.blocks[u] == b);
            if clash {
                continue;
            }
            self.blocks[v] = b;
            self.extend(v + 1, used.max(b + 1));
        }
    }
}

/// Largest number of blocks in a partition of V(G) that is a proper,
/// half-monochromatic coloring.
pub fn chi_f_bruteforce(g: &PlaneGraph, vertex_cap: usize) -> Result<OracleResult> {
    let n = g.vertex_count();
    if n > vertex_cap {
        return Err(Error::SizeCapExceeded {
            vertices: n,
            cap: vertex_cap,
        });
    }
    let mut scan = Scan {
        g,
        blocks: vec![0; n],
        best: None,
        scanned: 0,
    };
    scan.extend(0, 0);
    let (chi_f, blocks) = scan
        .best
        .expect("the bipartite baseline coloring always qualifies");
    Ok(OracleResult {
        chi_f,
        witness: Coloring::from_labels(&blocks),
        partitions_scanned: scan.scanned,
    })
}
