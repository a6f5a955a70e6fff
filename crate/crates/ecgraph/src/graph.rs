//! Edge-colored graphs and color-neighborhood queries.
//!
//! Vertices are dense ids `0..n`. Colors are arbitrary nonnegative integers;
//! no contiguity is assumed. Graphs are immutable after construction and all
//! invariants (simple, fully colored) are validated eagerly, so every query
//! below can assume a well-formed value.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by graph construction and queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("vertices must be distinct, got {0} twice")]
    IdenticalVertices(u32),
    #[error("need at least two vertices, graph has {0}")]
    TooFewVertices(usize),
    #[error("vertex sequence of length {0} is not a cycle (need length >= 3)")]
    CycleTooShort(usize),
    #[error("vertex {0} repeats in cycle")]
    RepeatedCycleVertex(u32),
    #[error("vertices {0} and {1} are consecutive in the cycle but not adjacent")]
    NotACycle(u32, u32),
    #[error("sides are not a partition of the vertex set (vertex {0})")]
    NotAPartition(u32),
    #[error("only cycle lengths 3 and 4 are supported, got {0}")]
    UnsupportedCycleLength(usize),
    #[error("partition covers {partition_n} vertices but graph has {graph_n}")]
    PartitionSizeMismatch { graph_n: usize, partition_n: usize },
}

/// An undirected simple graph with a total edge coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    /// Canonical edge list: `(u, v, color)` with `u < v`, sorted by `(u, v)`.
    edges: Vec<(u32, u32, u32)>,
    /// Per-vertex `(neighbor, color)` pairs, sorted by neighbor.
    adj: Vec<Vec<(u32, u32)>>,
}

impl EdgeColoredGraph {
    /// Builds a graph from `(u, v, color)` triples, validating simplicity.
    pub fn new(n: usize, edges: &[(u32, u32, u32)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut canon: Vec<(u32, u32, u32)> = Vec::with_capacity(edges.len());
        for &(u, v, c) in edges {
            if u as usize >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            canon.push((a, b, c));
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v, c) in &canon {
            adj[u as usize].push((v, c));
            adj[v as usize].push((u, c));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: canon,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted by `(min endpoint, max endpoint)`.
    pub fn edges(&self) -> &[(u32, u32, u32)] {
        &self.edges
    }

    /// `(neighbor, color)` pairs of `v`, sorted by neighbor id.
    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.color_of(u, v).is_some()
    }

    /// Color of edge `uv`, or `None` when the edge is absent.
    pub fn color_of(&self, u: u32, v: u32) -> Option<u32> {
        let list = &self.adj[u as usize];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    fn check_vertex(&self, v: u32) -> Result<(), GraphError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.n))
        }
    }

    /// CN(v): the set of colors on edges incident to `v`.
    pub fn color_neighborhood(&self, v: u32) -> Result<ColorSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v as usize].iter().map(|&(_, c)| c).collect())
    }

    /// d^c(v) = |CN(v)|.
    pub fn color_degree(&self, v: u32) -> Result<usize, GraphError> {
        Ok(self.color_neighborhood(v)?.len())
    }

    /// CN restricted to a vertex subset `S`: the colors of edges joining `v`
    /// to members of `S`. This covers both conventions (`v` inside or outside
    /// `S`) since an edge incident to `v` with both ends in `S` is exactly an
    /// edge from `v` to another member of `S`.
    pub fn restricted_color_neighborhood(
        &self,
        v: u32,
        subset: &[u32],
    ) -> Result<ColorSet, GraphError> {
        self.check_vertex(v)?;
        let mut members = vec![false; self.n];
        for &s in subset {
            self.check_vertex(s)?;
            members[s as usize] = true;
        }
        Ok(self.adj[v as usize]
            .iter()
            .filter(|&&(u, _)| members[u as usize])
            .map(|&(_, c)| c)
            .collect())
    }

    /// |CN(u) ∪ CN(v)| for a pair of distinct vertices.
    pub fn pairwise_color_union(&self, u: u32, v: u32) -> Result<usize, GraphError> {
        if u == v {
            return Err(GraphError::IdenticalVertices(u));
        }
        let cu = self.color_neighborhood(u)?;
        let cv = self.color_neighborhood(v)?;
        Ok(cu.union_size(&cv))
    }

    /// δ^c(G): minimum color degree over all vertices.
    pub fn min_color_degree(&self) -> usize {
        (0..self.n as u32)
            .map(|v| self.color_degree(v).expect("vertex in range"))
            .min()
            .expect("n >= 1")
    }

    /// Minimum of |CN(u) ∪ CN(v)| over all unordered pairs.
    pub fn min_pairwise_color_union(&self) -> Result<usize, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooFewVertices(self.n));
        }
        let sets: Vec<ColorSet> = (0..self.n as u32)
            .map(|v| self.color_neighborhood(v).expect("vertex in range"))
            .collect();
        let mut min = usize::MAX;
        for u in 0..self.n {
            for v in u + 1..self.n {
                min = min.min(sets[u].union_size(&sets[v]));
            }
        }
        Ok(min)
    }

    /// True iff no two edges sharing a vertex have equal colors,
    /// equivalently d^c(v) = d(v) at every vertex.
    pub fn is_properly_colored(&self) -> bool {
        (0..self.n as u32).all(|v| self.color_degree(v).expect("vertex in range") == self.degree(v))
    }

    /// True iff some three vertices are pairwise adjacent.
    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v, _)| {
            self.adj[u as usize]
                .iter()
                .any(|&(w, _)| w != v && self.has_edge(v, w))
        })
    }

    /// Two-colorability check by BFS; returns a side assignment when bipartite.
    pub fn bipartition_classes(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start as u32);
            while let Some(v) = queue.pop_front() {
                let sv = side[v as usize].unwrap();
                for &(u, _) in &self.adj[v as usize] {
                    match side[u as usize] {
                        None => {
                            side[u as usize] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition_classes().is_some()
    }
}

/// A finite set of color ids with set semantics.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ColorSet(BTreeSet<u32>);

impl ColorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, color: u32) -> bool {
        self.0.insert(color)
    }

    pub fn contains(&self, color: u32) -> bool {
        self.0.contains(&color)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn union_size(&self, other: &ColorSet) -> usize {
        self.0.union(&other.0).count()
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// A cycle given as an ordered list of distinct vertices, read cyclically.
///
/// Adjacency of consecutive vertices is a property of a host graph and is
/// validated where cycles meet graphs (`rainbow::is_rainbow`, witnesses).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<u32>,
}

impl Cycle {
    pub fn new(vertices: Vec<u32>) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::CycleTooShort(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(GraphError::RepeatedCycleVertex(v));
            }
        }
        Ok(Self { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Consecutive vertex pairs, wrapping around.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// True iff every consecutive pair is an edge of `g`.
    pub fn is_cycle_of(&self, g: &EdgeColoredGraph) -> bool {
        self.vertices.iter().all(|&v| (v as usize) < g.n())
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// Canonical form: rotated so the least vertex comes first, then
    /// reflected so its smaller cycle-neighbor comes second.
    pub fn canonical(&self) -> Cycle {
        let k = self.vertices.len();
        let min_pos = (0..k)
            .min_by_key(|&i| self.vertices[i])
            .expect("cycle is nonempty");
        let forward: Vec<u32> = (0..k).map(|i| self.vertices[(min_pos + i) % k]).collect();
        let backward: Vec<u32> = (0..k)
            .map(|i| self.vertices[(min_pos + k - i) % k])
            .collect();
        let vertices = if forward[1] <= backward[1] {
            forward
        } else {
            backward
        };
        Cycle { vertices }
    }
}
