//! Spanning bipartite subgraphs via potential-function local search.
//!
//! Two guarantees are produced here. The stronger one: a bipartition whose
//! crossing subgraph H satisfies `2 d^c_H(v) + 3 d_H(v) >= d^c_G(v) + d_G(v)`
//! at every vertex, obtained by greedily moving violating vertices while the
//! potential `f(H) = |E(H)| + sum_v d^c_H(v)` strictly increases. The classic
//! max-cut style search (`erdos_bipartize`) gives `2 d_H(v) >= d_G(v)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{EdgeColoredGraph, GraphError};

/// A two-sided split of `0..n`. Side `false` is X (left), `true` is Y.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    side: Vec<bool>,
}

impl Bipartition {
    /// Builds from explicit sides, checking they partition `0..n`.
    pub fn from_sides(n: usize, left: &[u32], right: &[u32]) -> Result<Self, GraphError> {
        let mut side = vec![None; n];
        for (vs, s) in [(left, false), (right, true)] {
            for &v in vs {
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange(v, n));
                }
                if side[v as usize].replace(s).is_some() {
                    return Err(GraphError::NotAPartition(v));
                }
            }
        }
        match side.iter().position(Option::is_none) {
            Some(v) => Err(GraphError::NotAPartition(v as u32)),
            None => Ok(Self {
                side: side.into_iter().map(Option::unwrap).collect(),
            }),
        }
    }

    /// Even ids left, odd ids right.
    pub fn parity(n: usize) -> Self {
        Self {
            side: (0..n).map(|v| v % 2 == 1).collect(),
        }
    }

    /// Every vertex on the left (the empty cut).
    pub fn all_left(n: usize) -> Self {
        Self {
            side: vec![false; n],
        }
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        Self {
            side: (0..n).map(|_| rng.gen::<bool>()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn is_right(&self, v: u32) -> bool {
        self.side[v as usize]
    }

    /// True iff `u` and `v` lie on opposite sides.
    pub fn crosses(&self, u: u32, v: u32) -> bool {
        self.side[u as usize] != self.side[v as usize]
    }

    pub fn left(&self) -> Vec<u32> {
        (0..self.side.len() as u32)
            .filter(|&v| !self.is_right(v))
            .collect()
    }

    pub fn right(&self) -> Vec<u32> {
        (0..self.side.len() as u32)
            .filter(|&v| self.is_right(v))
            .collect()
    }

    fn flip(&mut self, v: u32) {
        let s = &mut self.side[v as usize];
        *s = !*s;
    }
}

fn check_sizes(g: &EdgeColoredGraph, b: &Bipartition) -> Result<(), GraphError> {
    if b.n() != g.n() {
        return Err(GraphError::PartitionSizeMismatch {
            graph_n: g.n(),
            partition_n: b.n(),
        });
    }
    Ok(())
}

/// Degree of `v` in the crossing subgraph H.
pub fn cross_degree(g: &EdgeColoredGraph, b: &Bipartition, v: u32) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&(u, _)| b.crosses(u, v))
        .count()
}

/// Color degree of `v` in the crossing subgraph H.
pub fn cross_color_degree(g: &EdgeColoredGraph, b: &Bipartition, v: u32) -> usize {
    let mut colors: Vec<u32> = g
        .neighbors(v)
        .iter()
        .filter(|&&(u, _)| b.crosses(u, v))
        .map(|&(_, c)| c)
        .collect();
    colors.sort_unstable();
    colors.dedup();
    colors.len()
}

/// The search potential `f(H) = |E(H)| + sum_v d^c_H(v)`.
pub fn potential(g: &EdgeColoredGraph, b: &Bipartition) -> Result<u64, GraphError> {
    check_sizes(g, b)?;
    let crossing_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v, _)| b.crosses(u, v))
        .count() as u64;
    let color_sum: u64 = (0..g.n() as u32)
        .map(|v| cross_color_degree(g, b, v) as u64)
        .sum();
    Ok(crossing_edges + color_sum)
}

/// One accepted local-search move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceMove {
    pub vertex: u32,
    pub before: u64,
    pub after: u64,
}

/// The move sequence of a search run; potentials strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTrace {
    pub moves: Vec<TraceMove>,
    pub final_potential: u64,
}

impl SearchTrace {
    /// Line-oriented rendering: one `move <v> <before> <after>` per move,
    /// then `potential=<final>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.moves {
            out.push_str(&format!("move {} {} {}\n", m.vertex, m.before, m.after));
        }
        out.push_str(&format!("potential={}\n", self.final_potential));
        out
    }
}

/// Least vertex violating `2 d^c_H(v) + 3 d_H(v) >= d^c_G(v) + d_G(v)`,
/// or `None` when the guarantee holds everywhere.
pub fn verify_lemma7_guarantee(
    g: &EdgeColoredGraph,
    b: &Bipartition,
) -> Result<Option<u32>, GraphError> {
    check_sizes(g, b)?;
    for v in 0..g.n() as u32 {
        let lhs = 2 * cross_color_degree(g, b, v) + 3 * cross_degree(g, b, v);
        let rhs = g.color_degree(v).expect("vertex in range") + g.degree(v);
        if lhs < rhs {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Runs the potential-increasing search from a given start.
pub fn lemma7_bipartize_from(
    g: &EdgeColoredGraph,
    init: Bipartition,
) -> Result<(Bipartition, SearchTrace), GraphError> {
    check_sizes(g, &init)?;
    let mut b = init;
    let mut moves = Vec::new();
    let mut f = potential(g, &b).expect("sizes checked");
    // f grows strictly and is bounded by 3|E|, so this terminates.
    let cap = 3 * g.m() + 1;
    loop {
        let violator = verify_lemma7_guarantee(g, &b).expect("sizes checked");
        let Some(v) = violator else { break };
        b.flip(v);
        let after = potential(g, &b).expect("sizes checked");
        assert!(after > f, "potential must strictly increase on a move");
        moves.push(TraceMove {
            vertex: v,
            before: f,
            after,
        });
        f = after;
        assert!(moves.len() <= cap, "exceeded the 3|E| move bound");
    }
    let trace = SearchTrace {
        moves,
        final_potential: f,
    };
    Ok((b, trace))
}

/// Potential search from the parity start.
pub fn lemma7_bipartize(g: &EdgeColoredGraph) -> (Bipartition, SearchTrace) {
    lemma7_bipartize_from(g, Bipartition::parity(g.n())).expect("parity split matches n")
}

/// Least vertex violating `2 d_H(v) >= d_G(v)`, or `None`.
pub fn verify_cut_guarantee(
    g: &EdgeColoredGraph,
    b: &Bipartition,
) -> Result<Option<u32>, GraphError> {
    check_sizes(g, b)?;
    for v in 0..g.n() as u32 {
        if 2 * cross_degree(g, b, v) < g.degree(v) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Classic local search: while some vertex has more neighbors on its own
/// side than across, move it (the cut size strictly increases).
pub fn erdos_bipartize_from(
    g: &EdgeColoredGraph,
    init: Bipartition,
) -> Result<Bipartition, GraphError> {
    check_sizes(g, &init)?;
    let mut b = init;
    loop {
        match verify_cut_guarantee(g, &b).expect("sizes checked") {
            Some(v) => b.flip(v),
            None => return Ok(b),
        }
    }
}

/// Cut search from the parity start.
pub fn erdos_bipartize(g: &EdgeColoredGraph) -> Bipartition {
    erdos_bipartize_from(g, Bipartition::parity(g.n())).expect("parity split matches n")
}
