use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{InstanceError, PcrpInstance, RequiredPair};
use crate::graph::{StPath, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every vertex and every required pair must be covered.
    CoverAll,
    /// Only required pairs are checked.
    PairsOnly,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Always empty in [`VerifyMode::PairsOnly`].
    pub uncovered_vertices: Vec<Vertex>,
    pub uncovered_pairs: Vec<RequiredPair>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.uncovered_vertices.is_empty() && self.uncovered_pairs.is_empty()
    }
}

/// Checks each path against the DAG, then reports what the paths miss.
pub fn verify_solution(
    inst: &PcrpInstance,
    paths: &[StPath],
    mode: VerifyMode,
) -> Result<VerifyReport, InstanceError> {
    let n = inst.dag().vertex_count();
    let mut members = Vec::with_capacity(paths.len());
    for (index, path) in paths.iter().enumerate() {
        path.check(inst.dag()).map_err(|defect| InstanceError::MalformedPath { index, defect })?;
        let mut set = FixedBitSet::with_capacity(n);
        set.extend(path.vertices().iter().copied());
        members.push(set);
    }
    let mut report = VerifyReport::default();
    if mode == VerifyMode::CoverAll {
        let mut seen = FixedBitSet::with_capacity(n);
        for set in &members {
            seen.union_with(set);
        }
        seen.toggle_range(..);
        report.uncovered_vertices = seen.ones().collect();
    }
    report.uncovered_pairs = inst
        .pairs()
        .iter()
        .copied()
        .filter(|p| !members.iter().any(|m| m.contains(p.first) && m.contains(p.second)))
        .collect();
    Ok(report)
}
