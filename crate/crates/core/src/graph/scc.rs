use alloc::vec;
use alloc::vec::Vec;

use super::{check_id, Dag, GraphError, Vertex};

/// Condenses every strongly connected component of a directed graph into a
/// single vertex. Returns the quotient DAG and the map from original to
/// collapsed ids.
///
/// Components are numbered by their smallest original vertex, so an acyclic
/// input maps to itself. Self-loops and arcs inside a component vanish;
/// parallel arcs between components are merged.
pub fn collapse_sccs(
    vertex_count: usize,
    arcs: &[(Vertex, Vertex)],
    source: Vertex,
    sink: Vertex,
) -> Result<(Dag, Vec<Vertex>), GraphError> {
    if vertex_count == 0 {
        return Err(GraphError::Empty);
    }
    let mut succ = vec![Vec::new(); vertex_count];
    for &(u, v) in arcs {
        check_id(u, vertex_count)?;
        check_id(v, vertex_count)?;
        succ[u].push(v);
    }
    for list in &mut succ {
        list.sort_unstable();
        list.dedup();
    }
    let raw = tarjan(&succ);

    // Renumber components by their minimum member.
    let comp_count = raw.iter().copied().max().map_or(0, |c| c + 1);
    let mut min_member = vec![usize::MAX; comp_count];
    for (v, &c) in raw.iter().enumerate() {
        min_member[c] = min_member[c].min(v);
    }
    let mut by_min: Vec<usize> = (0..comp_count).collect();
    by_min.sort_unstable_by_key(|&c| min_member[c]);
    let mut rename = vec![0; comp_count];
    for (new, &old) in by_min.iter().enumerate() {
        rename[old] = new;
    }
    let map: Vec<Vertex> = raw.iter().map(|&c| rename[c]).collect();

    let quotient = succ
        .iter()
        .enumerate()
        .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
        .filter_map(|(u, v)| (map[u] != map[v]).then_some((map[u], map[v])));
    let dag = Dag::new(comp_count, quotient, map[source], map[sink])?;
    Ok((dag, map))
}

/// Iterative Tarjan. Returns a component index per vertex (in completion
/// order, which is reverse topological).
fn tarjan(succ: &[Vec<Vertex>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut comp_count = 0;
    // (vertex, next successor slot)
    let mut call: Vec<(Vertex, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&(u, slot)) = call.last() {
            if slot == 0 && index[u] == UNSEEN {
                index[u] = next_index;
                low[u] = next_index;
                next_index += 1;
                stack.push(u);
                on_stack[u] = true;
            }
            if let Some(&v) = succ[u].get(slot) {
                if let Some(top) = call.last_mut() {
                    top.1 += 1;
                }
                if index[v] == UNSEEN {
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    if w == u {
                        break;
                    }
                }
                comp_count += 1;
            }
        }
    }
    comp
}
