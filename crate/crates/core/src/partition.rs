//! Edge partitions into classes and the covering-class verifier.

use std::collections::HashSet;

use crate::error::{input, Result};
use crate::hypergraph::{EdgeInstance, MultiHypergraph};

/// Assignment of every edge instance of a host hypergraph to one of `k` classes.
///
/// The assignment is stored in the host's flat instance order (edge-major,
/// copy-minor); `shape` records the host's multiplicities so that a partition
/// can be checked against the hypergraph it is applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPartition {
    k: usize,
    shape: Vec<usize>,
    offsets: Vec<usize>,
    assignment: Vec<usize>,
}

/// Result of [`verify_cover_partition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Valid,
    /// `vertex` meets no instance of `class`.
    Uncovered {
        class: usize,
        vertex: usize,
    },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

impl CoverPartition {
    /// Builds a partition from the flat assignment vector.
    pub fn from_flat(h: &MultiHypergraph, k: usize, assignment: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return input("partition needs at least one class");
        }
        if assignment.len() != h.instance_count() {
            return input(format!(
                "assignment covers {} instances, hypergraph has {}",
                assignment.len(),
                h.instance_count()
            ));
        }
        if let Some(&c) = assignment.iter().find(|&&c| c >= k) {
            return input(format!("class {c} out of range for k = {k}"));
        }
        Ok(Self {
            k,
            shape: h.edges().iter().map(|e| e.multiplicity()).collect(),
            offsets: h.offsets().to_vec(),
            assignment,
        })
    }

    pub fn from_fn(
        h: &MultiHypergraph,
        k: usize,
        mut class_of: impl FnMut(EdgeInstance) -> usize,
    ) -> Result<Self> {
        let flat = h.instances().into_iter().map(&mut class_of).collect();
        Self::from_flat(h, k, flat)
    }

    /// Every instance in `class`.
    pub fn constant(h: &MultiHypergraph, k: usize, class: usize) -> Result<Self> {
        Self::from_flat(h, k, vec![class; h.instance_count()])
    }

    /// Builds a partition from explicit class lists. Each instance of `h` must
    /// appear in exactly one list.
    pub fn from_classes(h: &MultiHypergraph, classes: &[Vec<EdgeInstance>]) -> Result<Self> {
        let k = classes.len();
        let mut flat = vec![usize::MAX; h.instance_count()];
        for (c, members) in classes.iter().enumerate() {
            for &inst in members {
                if !h.contains_instance(inst) {
                    return input(format!(
                        "instance ({}, {}) does not exist",
                        inst.edge_index, inst.copy_index
                    ));
                }
                let slot = &mut flat[h.flat_index(inst)];
                if *slot != usize::MAX {
                    return input(format!(
                        "instance ({}, {}) assigned twice",
                        inst.edge_index, inst.copy_index
                    ));
                }
                *slot = c;
            }
        }
        if let Some(i) = flat.iter().position(|&c| c == usize::MAX) {
            let inst = h.instances()[i];
            return input(format!(
                "instance ({}, {}) is not assigned",
                inst.edge_index, inst.copy_index
            ));
        }
        Self::from_flat(h, k, flat)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_of(&self, inst: EdgeInstance) -> usize {
        self.assignment[self.offsets[inst.edge_index] + inst.copy_index]
    }

    /// Whether this partition was built for a hypergraph with `h`'s edge multiplicities.
    pub fn fits(&self, h: &MultiHypergraph) -> bool {
        self.shape.len() == h.edge_count()
            && self
                .shape
                .iter()
                .zip(h.edges())
                .all(|(&m, e)| m == e.multiplicity())
    }

    /// Instances of each class, in flat order.
    pub fn classes(&self) -> Vec<Vec<EdgeInstance>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, &m) in self.shape.iter().enumerate() {
            for c in 0..m {
                let inst = EdgeInstance::new(e, c);
                out[self.class_of(inst)].push(inst);
            }
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }
}

/// Checks that every class of `p` is a covering class of `h`.
///
/// Classes are scanned in order and vertices in increasing order within each
/// class; the first uncovered pair is reported.
pub fn verify_cover_partition(h: &MultiHypergraph, p: &CoverPartition) -> Result<Verification> {
    if !p.fits(h) {
        return input("partition does not match the hypergraph's edge instances");
    }
    let n = h.n_vertices();
    let mut covered = vec![false; n * p.k];
    for inst in h.instances() {
        let c = p.class_of(inst);
        for &v in h.instance_vertices(inst) {
            covered[c * n + v] = true;
        }
    }
    for class in 0..p.k {
        if let Some(vertex) = (0..n).find(|&v| !covered[class * n + v]) {
            return Ok(Verification::Uncovered { class, vertex });
        }
    }
    Ok(Verification::Valid)
}

/// Whether a vertex colouring of `dual` makes every dual edge see all `k` colours.
pub fn is_rainbow_colouring(dual: &MultiHypergraph, colours: &[usize], k: usize) -> bool {
    dual.edges().iter().all(|e| {
        let seen: HashSet<usize> = e.vertices().iter().map(|&v| colours[v]).collect();
        (0..k).all(|c| seen.contains(&c))
    })
}
