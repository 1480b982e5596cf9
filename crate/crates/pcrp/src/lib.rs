//! File formats, random generators and report rendering for the `pcrp`
//! command-line tool. The solvers themselves live in `pcrp-core`.

pub mod format;
pub mod gen;
pub mod report;
