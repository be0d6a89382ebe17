use std::collections::VecDeque;

use crate::error::{infeasible, input, Error, Result};
use crate::hypergraph::MultiHypergraph;
use crate::partition::CoverPartition;

/// Splits a hypergraph with edges of size at most `r` and minimum degree at
/// least `r·k` into `k` covering classes.
///
/// Every vertex gets `k` slots, one per class, and slots are matched to
/// distinct edge instances containing the vertex. Hall's condition holds
/// because each slot sees at least `rk` instances while each instance is seen
/// by at most `rk` slots. Unmatched instances go to class 0.
pub fn hall_cover(h: &MultiHypergraph, k: usize) -> Result<CoverPartition> {
    if k == 0 {
        return input("k must be positive");
    }
    let r = h.max_edge_size().max(1);
    let delta = h.min_degree().unwrap_or(0);
    if h.n_vertices() > 0 && delta < r * k {
        return infeasible(format!("minimum degree {delta} is below r·k = {}", r * k));
    }
    let n = h.n_vertices();
    let instances = h.instances();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (flat, &inst) in instances.iter().enumerate() {
        for &v in h.instance_vertices(inst) {
            incident[v].push(flat);
        }
    }

    let slots = n * k;
    let mut slot_match: Vec<Option<usize>> = vec![None; slots];
    let mut inst_match: Vec<Option<usize>> = vec![None; instances.len()];
    for s in 0..slots {
        if !augment(s, k, &incident, &mut slot_match, &mut inst_match) {
            return Err(Error::Internal(format!(
                "no augmenting path for slot {s} although the degree condition holds"
            )));
        }
    }

    let classes = inst_match
        .into_iter()
        .map(|m| m.map_or(0, |slot| slot % k))
        .collect();
    CoverPartition::from_flat(h, k, classes)
}

/// Breadth-first search for an augmenting path from free slot `start`.
fn augment(
    start: usize,
    k: usize,
    incident: &[Vec<usize>],
    slot_match: &mut [Option<usize>],
    inst_match: &mut [Option<usize>],
) -> bool {
    let mut parent_slot: Vec<Option<usize>> = vec![None; inst_match.len()];
    let mut visited = vec![false; slot_match.len()];
    visited[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for &i in &incident[s / k] {
            if parent_slot[i].is_some() {
                continue;
            }
            parent_slot[i] = Some(s);
            match inst_match[i] {
                None => {
                    // flip the path back to start
                    let mut inst = i;
                    loop {
                        let slot = parent_slot[inst].unwrap();
                        let prev = slot_match[slot];
                        slot_match[slot] = Some(inst);
                        inst_match[inst] = Some(slot);
                        match prev {
                            Some(p) if slot != start => inst = p,
                            _ => return true,
                        }
                    }
                }
                Some(next) => {
                    if !visited[next] {
                        visited[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}
