//! Covering directed acyclic graphs with source-to-sink paths subject to
//! required pairs.
//!
//! A *required pair* is two vertices that must appear together on at least
//! one path of a solution. This crate provides:
//!
//! - [`graph`]: the DAG model, reachability, SCC condensation, vertex
//!   contraction, and path utilities shared by every solver.
//! - [`instance`]: required pairs, overlap classification, the pair ordering
//!   and `OP` sets used by the dynamic program, and solution verification.
//! - [`cover`]: minimum path cover (Dilworth), the 1- and 2-path decision
//!   procedures, exact search oracles, and a greedy heuristic.
//! - [`maxrpsp`]: the single-path maximisation problem, solved by a dynamic
//!   program that is exponential only in the maximum overlapping degree.
//! - [`reductions`]: instance generators from 3-colouring and h-clique with
//!   solution mappings in both directions, and exact oracles for the source
//!   problems.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, random
//! generators and the command-line front end live in the `pcrp` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cover;
pub mod graph;
pub mod instance;
pub mod maxrpsp;
pub mod reductions;

pub use graph::{Dag, GraphError, ReachabilityIndex, StPath, TopoOrder, Vertex};
pub use instance::{PcrpInstance, RequiredPair};
