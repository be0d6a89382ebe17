//! Multihypergraphs on dense vertex indices.

use std::collections::HashMap;

use crate::error::{input, Error, Result};

/// One stored edge: a strictly increasing vertex list and a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    vertices: Vec<usize>,
    multiplicity: usize,
}

impl Edge {
    /// Builds an edge from any vertex order. Repeated vertices are rejected.
    pub fn new(mut vertices: Vec<usize>, multiplicity: usize) -> Result<Self> {
        if multiplicity == 0 {
            return input("edge multiplicity must be at least 1");
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return input(format!("edge {vertices:?} repeats a vertex"));
        }
        Ok(Self {
            vertices,
            multiplicity,
        })
    }

    pub fn simple(vertices: Vec<usize>) -> Result<Self> {
        Self::new(vertices, 1)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Addresses one copy of a (possibly repeated) edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeInstance {
    pub edge_index: usize,
    pub copy_index: usize,
}

impl EdgeInstance {
    pub fn new(edge_index: usize, copy_index: usize) -> Self {
        Self {
            edge_index,
            copy_index,
        }
    }
}

/// A finite hypergraph whose edges carry multiplicities.
///
/// Vertices are `0..n_vertices`. Edges keep the order they were given in; the
/// position of an edge in that order is its `edge_index`. Empty edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiHypergraph {
    n_vertices: usize,
    edges: Vec<Edge>,
    r_cap: Option<usize>,
    // prefix sums of multiplicities, len = edges.len() + 1
    offsets: Vec<usize>,
}

impl MultiHypergraph {
    pub fn new(n_vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if let Some(&v) = e.vertices.last() {
                if v >= n_vertices {
                    return input(format!("vertex {v} out of range for {n_vertices} vertices"));
                }
            }
        }
        let mut offsets = Vec::with_capacity(edges.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for e in &edges {
            acc += e.multiplicity;
            offsets.push(acc);
        }
        Ok(Self {
            n_vertices,
            edges,
            r_cap: None,
            offsets,
        })
    }

    /// Convenience constructor for simple edge lists.
    pub fn from_sets<I, S>(n_vertices: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let edges = sets
            .into_iter()
            .map(|s| Edge::simple(s.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_vertices, edges)
    }

    /// Attaches a maximum edge size; fails if an existing edge is larger.
    pub fn with_r_cap(mut self, r: usize) -> Result<Self> {
        if let Some(e) = self.edges.iter().find(|e| e.len() > r) {
            return input(format!("edge of size {} exceeds cap {r}", e.len()));
        }
        self.r_cap = Some(r);
        Ok(self)
    }

    pub fn r_cap(&self) -> Option<usize> {
        self.r_cap
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total number of edge instances (sum of multiplicities).
    pub fn instance_count(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Position of an instance in the edge-major, copy-minor enumeration.
    pub fn flat_index(&self, inst: EdgeInstance) -> usize {
        self.offsets[inst.edge_index] + inst.copy_index
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn contains_instance(&self, inst: EdgeInstance) -> bool {
        inst.edge_index < self.edges.len()
            && inst.copy_index < self.edges[inst.edge_index].multiplicity
    }

    /// All instances, edge-major then copy-minor.
    pub fn instances(&self) -> Vec<EdgeInstance> {
        let mut out = Vec::with_capacity(self.instance_count());
        for (i, e) in self.edges.iter().enumerate() {
            for c in 0..e.multiplicity {
                out.push(EdgeInstance::new(i, c));
            }
        }
        out
    }

    pub fn instance_vertices(&self, inst: EdgeInstance) -> &[usize] {
        &self.edges[inst.edge_index].vertices
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n_vertices {
            return input(format!(
                "vertex {v} out of range for {} vertices",
                self.n_vertices
            ));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.multiplicity)
            .sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for e in &self.edges {
            for &v in &e.vertices {
                deg[v] += e.multiplicity;
            }
        }
        deg
    }

    /// `None` when there are no vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Edge::len).max().unwrap_or(0)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.degrees().iter().position(|&d| d == 0)
    }

    /// For each vertex, the indices of edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n_vertices];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in &e.vertices {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    /// All multiplicities 1 and pairwise distinct vertex sets.
    pub fn is_simple(&self) -> bool {
        if self.edges.iter().any(|e| e.multiplicity != 1) {
            return false;
        }
        let mut sets: Vec<&[usize]> = self.edges.iter().map(|e| e.vertices()).collect();
        sets.sort_unstable();
        sets.windows(2).all(|w| w[0] != w[1])
    }

    /// Every edge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.is_uniform(2)
    }

    /// Sorted copy with identical vertex sets kept as separate entries.
    ///
    /// Edges are ordered by vertex list, then multiplicity. Returns the new
    /// hypergraph and `old_to_new[i]`, the position of old edge `i`.
    pub fn canonicalized(&self) -> (Self, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| {
            (&self.edges[a].vertices, self.edges[a].multiplicity, a).cmp(&(
                &self.edges[b].vertices,
                self.edges[b].multiplicity,
                b,
            ))
        });
        let mut old_to_new = vec![0; self.edges.len()];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges = order.iter().map(|&i| self.edges[i].clone()).collect();
        let mut h = Self::new(self.n_vertices, edges).expect("same vertex range");
        h.r_cap = self.r_cap;
        (h, old_to_new)
    }

    /// Canonical order with identical vertex sets merged into one entry.
    pub fn merged(&self) -> Self {
        let mut acc: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut pos: HashMap<&[usize], usize> = HashMap::new();
        for e in &self.edges {
            match pos.get(e.vertices()) {
                Some(&i) => acc[i].1 += e.multiplicity,
                None => {
                    pos.insert(e.vertices(), acc.len());
                    acc.push((e.vertices.clone(), e.multiplicity));
                }
            }
        }
        acc.sort();
        let edges = acc
            .into_iter()
            .map(|(vertices, multiplicity)| Edge {
                vertices,
                multiplicity,
            })
            .collect();
        let mut h = Self::new(self.n_vertices, edges).expect("same vertex range");
        h.r_cap = self.r_cap;
        h
    }

    /// Sub-hypergraph on the same vertex set keeping only the given instances.
    ///
    /// Copies of one source edge stay together in a single entry. Returns the
    /// sub-hypergraph and, for each of its instances (flat order), the source instance.
    pub fn restrict_to_instances(&self, keep: &[EdgeInstance]) -> (Self, Vec<EdgeInstance>) {
        let mut by_edge: Vec<Vec<EdgeInstance>> = vec![Vec::new(); self.edges.len()];
        for &inst in keep {
            by_edge[inst.edge_index].push(inst);
        }
        let mut edges = Vec::new();
        let mut provenance = Vec::new();
        for (i, mut insts) in by_edge.into_iter().enumerate() {
            if insts.is_empty() {
                continue;
            }
            insts.sort_unstable();
            edges.push(Edge {
                vertices: self.edges[i].vertices.clone(),
                multiplicity: insts.len(),
            });
            provenance.extend(insts);
        }
        let h = Self::new(self.n_vertices, edges).expect("same vertex range");
        (h, provenance)
    }

    /// The dual hypergraph: vertex `i` of the result is edge `i` of `self`, and
    /// edge `j` of the result is the set of edges containing vertex `j`.
    ///
    /// Requires multiplicity 1 everywhere, no isolated vertices and no empty edges.
    /// Two vertices with the same incidence produce two separate dual entries.
    pub fn dualize(&self) -> Result<Self> {
        if let Some(e) = self.edges.iter().find(|e| e.multiplicity > 1) {
            return Err(Error::Unsupported(format!(
                "dualize needs multiplicity 1, found edge {:?} with multiplicity {}",
                e.vertices, e.multiplicity
            )));
        }
        if let Some(v) = self.isolated_vertex() {
            return input(format!("vertex {v} is isolated"));
        }
        if let Some(i) = self.edges.iter().position(Edge::is_empty) {
            return input(format!("edge {i} is empty"));
        }
        let edges = self
            .incidence()
            .into_iter()
            .map(|inc| Edge {
                vertices: inc,
                multiplicity: 1,
            })
            .collect();
        Self::new(self.edges.len(), edges)
    }
}
