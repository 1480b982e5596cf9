use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use log::debug;

use super::{min_chain_cover, require_coverable, CoverError};
use crate::graph::{is_chain, stitch_chain, StPath, Vertex};
use crate::instance::{PcrpInstance, RequiredPair};
use crate::maxrpsp::{max_rpsp_dp, MaxRpspError};

/// Repeatedly adds a path covering as many still-uncovered pairs as
/// possible, then covers the vertices no path has visited with a minimum
/// chain cover of just those vertices. No optimality guarantee.
///
/// When the exact single-path program refuses a residual instance because
/// its overlap parameter is too large, the path is built from a greedily
/// grown clique of mutually compatible pairs instead.
pub fn greedy_minpcrp(inst: &PcrpInstance) -> Result<Vec<StPath>, CoverError> {
    require_coverable(inst)?;
    let dag = inst.dag();
    let reach = inst.reach();
    let mut residual: Vec<RequiredPair> = inst.pairs().to_vec();
    let mut paths = Vec::new();
    while !residual.is_empty() {
        let sub = inst.with_pairs(residual.iter().map(|p| (p.first, p.second)))?;
        let path = match max_rpsp_dp(&sub) {
            Ok(out) => out.witness,
            Err(MaxRpspError::ParameterTooLarge { .. }) => {
                debug!("overlap parameter too large, growing a clique instead");
                clique_path(&sub)?
            }
            Err(MaxRpspError::Graph(e)) => return Err(e.into()),
            Err(MaxRpspError::Instance(e)) => return Err(e.into()),
        };
        let before = residual.len();
        residual.retain(|p| !(path.contains(p.first) && path.contains(p.second)));
        debug_assert!(residual.len() < before, "each greedy path covers a new pair");
        paths.push(path);
    }

    let mut seen = FixedBitSet::with_capacity(dag.vertex_count());
    for p in &paths {
        seen.extend(p.vertices().iter().copied());
    }
    seen.toggle_range(..);
    let missing: Vec<Vertex> = seen.ones().collect();
    for chain in min_chain_cover(&missing, reach) {
        paths.push(stitch_chain(dag, reach, &chain)?);
    }
    Ok(paths)
}

/// Path through a maximal set of mutually compatible pairs, grown from the
/// first pair in input order.
fn clique_path(inst: &PcrpInstance) -> Result<StPath, CoverError> {
    let mut vertices: Vec<Vertex> = Vec::new();
    for p in inst.pairs() {
        let mut trial = vertices.clone();
        trial.extend([p.first, p.second]);
        if is_chain(&trial, inst.reach()).is_some() {
            vertices = trial;
        }
    }
    let chain = is_chain(&vertices, inst.reach()).expect("grown set is a chain");
    Ok(stitch_chain(inst.dag(), inst.reach(), &chain)?)
}
