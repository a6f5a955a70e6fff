//! Counterexample search harnesses.
//!
//! Two open questions are probed empirically. The first asks whether every
//! edge-colored graph has a bipartition whose crossing subgraph keeps at
//! least half of every vertex's color degree; `problem9_exhaustive` settles
//! single instances by enumeration and `problem9_hunt` samples instances.
//! The second concerns directed bipartite graphs with all out-degrees
//! around a third of the opposite part: `conjecture10_check` tests the
//! degree hypothesis and hunts for a directed C4, and `conjecture10_hunt`
//! samples orientations at the degree boundary.
//!
//! Hunts are deterministic: sample i uses its own generator seeded with
//! `seed + i`, so reports are byte-identical across runs and independent of
//! any evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bipartize::{cross_color_degree, Bipartition};
use crate::format::{parse_dcg, parse_ecg, serialize_dcg, serialize_ecg};
use crate::gen::{boundary_orientation, er_graph, Palette};
use crate::graph::EdgeColoredGraph;

pub const MAX_EXHAUSTIVE_N: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HuntError {
    #[error("exhaustive bipartition search supports n <= {MAX_EXHAUSTIVE_N}, got {0}; use the sampling hunt for larger orders")]
    TooLarge(usize),
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("part sizes below 2 make the degree thresholds degenerate; use min >= 2")]
    PartTooSmall(usize),
    #[error("empty size range: {0}..{1}")]
    EmptyRange(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(u32, usize),
    #[error("arc {0}->{1} stays within one part")]
    ArcWithinPart(u32, u32),
    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(u32, u32),
}

/// A directed bipartite graph. Part A is ids `0..a_size`, part B is
/// `a_size..a_size+b_size`; every arc crosses parts. Both directions of a
/// pair may be present, but each ordered pair at most once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    a_size: usize,
    b_size: usize,
    /// Sorted by ordered pair.
    arcs: Vec<(u32, u32)>,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
}

impl Digraph {
    pub fn new(a_size: usize, b_size: usize, arcs: &[(u32, u32)]) -> Result<Self, DigraphError> {
        let n = a_size + b_size;
        let in_a = |v: u32| (v as usize) < a_size;
        let mut sorted = arcs.to_vec();
        sorted.sort_unstable();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (i, &(u, v)) in sorted.iter().enumerate() {
            if u as usize >= n {
                return Err(DigraphError::VertexOutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(DigraphError::VertexOutOfRange(v, n));
            }
            if in_a(u) == in_a(v) {
                return Err(DigraphError::ArcWithinPart(u, v));
            }
            if i > 0 && sorted[i - 1] == (u, v) {
                return Err(DigraphError::DuplicateArc(u, v));
            }
            out_adj[u as usize].push(v);
            in_adj[v as usize].push(u);
        }
        Ok(Self {
            a_size,
            b_size,
            arcs: sorted,
            out_adj,
            in_adj,
        })
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn b_size(&self) -> usize {
        self.b_size
    }

    pub fn n(&self) -> usize {
        self.a_size + self.b_size
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs sorted by ordered pair.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.out_adj[u as usize].binary_search(&v).is_ok()
    }

    /// Sorted out-neighbors of `v`.
    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out_adj[v as usize]
    }

    /// Sorted in-neighbors of `v`.
    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        &self.in_adj[v as usize]
    }

    pub fn out_degree(&self, v: u32) -> usize {
        self.out_adj[v as usize].len()
    }
}

/// A directed 4-cycle `a -> b -> a2 -> b2 -> a` with `a, a2` in part A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedC4 {
    pub a: u32,
    pub b: u32,
    pub a2: u32,
    pub b2: u32,
}

impl DirectedC4 {
    pub fn is_cycle_of(&self, d: &Digraph) -> bool {
        let Self { a, b, a2, b2 } = *self;
        a != a2
            && b != b2
            && d.has_arc(a, b)
            && d.has_arc(b, a2)
            && d.has_arc(a2, b2)
            && d.has_arc(b2, a)
    }
}

impl std::fmt::Display for DirectedC4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} -> {} -> {} -> {} -> {}",
            self.a, self.b, self.a2, self.b2, self.a
        )
    }
}

/// Sorted-slice intersection.
fn intersect(xs: &[u32], ys: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(xs[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Finds a directed C4 by scanning ordered pairs (a, a2) of A-vertices and
/// intersecting out-neighbors of one with in-neighbors of the other in both
/// directions. First hit in scan order wins.
pub fn find_directed_c4(d: &Digraph) -> Option<DirectedC4> {
    for a in 0..d.a_size as u32 {
        for a2 in 0..d.a_size as u32 {
            if a == a2 {
                continue;
            }
            // b candidates: a -> b -> a2; b2 candidates: a2 -> b2 -> a.
            let forward = intersect(d.out_neighbors(a), d.in_neighbors(a2));
            if forward.is_empty() {
                continue;
            }
            let backward = intersect(d.out_neighbors(a2), d.in_neighbors(a));
            if backward.is_empty() {
                continue;
            }
            let (b, b2) = if backward[0] != forward[0] {
                (forward[0], backward[0])
            } else if backward.len() > 1 {
                (forward[0], backward[1])
            } else if forward.len() > 1 {
                (forward[1], backward[0])
            } else {
                continue;
            };
            return Some(DirectedC4 { a, b, a2, b2 });
        }
    }
    None
}

/// Independent ground truth: scan all ordered 4-tuples.
pub fn directed_c4_brute_force(d: &Digraph) -> Option<DirectedC4> {
    let a_ids = 0..d.a_size as u32;
    let b_ids = d.a_size as u32..(d.a_size + d.b_size) as u32;
    for a in a_ids.clone() {
        for b in b_ids.clone() {
            for a2 in a_ids.clone() {
                if a2 == a {
                    continue;
                }
                for b2 in b_ids.clone() {
                    if b2 == b {
                        continue;
                    }
                    let cand = DirectedC4 { a, b, a2, b2 };
                    if cand.is_cycle_of(d) {
                        return Some(cand);
                    }
                }
            }
        }
    }
    None
}

/// Hypothesis/conclusion readout for one digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjecture10Verdict {
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub witness: Option<DirectedC4>,
}

/// Tests the two mixed strict/non-strict out-degree threshold variants
/// (disjunctively) and runs the cycle detector. Graphs with an empty part
/// fail the hypothesis by definition.
pub fn conjecture10_check(d: &Digraph) -> Conjecture10Verdict {
    let hypothesis_holds = d.a_size > 0 && d.b_size > 0 && {
        let a_ids = || 0..d.a_size as u32;
        let b_ids = || d.a_size as u32..(d.a_size + d.b_size) as u32;
        // 3 d+(u) > |B| is the strict form, 3 d+(u) >= |B| the weak one.
        let a_strict = a_ids().all(|u| 3 * d.out_degree(u) > d.b_size);
        let a_weak = a_ids().all(|u| 3 * d.out_degree(u) >= d.b_size);
        let b_strict = b_ids().all(|v| 3 * d.out_degree(v) > d.a_size);
        let b_weak = b_ids().all(|v| 3 * d.out_degree(v) >= d.a_size);
        (a_strict && b_weak) || (a_weak && b_strict)
    };
    let witness = find_directed_c4(d);
    Conjecture10Verdict {
        hypothesis_holds,
        conclusion_holds: witness.is_some(),
        witness,
    }
}

/// Enumerates bipartitions (vertex 0 pinned to one side; swapping sides
/// changes nothing) until one satisfies `2 d^c_H(v) >= d^c_G(v)` for all v.
pub fn problem9_exhaustive(g: &EdgeColoredGraph) -> Result<Option<Bipartition>, HuntError> {
    let n = g.n();
    if n > MAX_EXHAUSTIVE_N {
        return Err(HuntError::TooLarge(n));
    }
    let target: Vec<usize> = (0..n as u32)
        .map(|v| g.color_degree(v).expect("vertex in range"))
        .collect();
    for mask in 0u64..1u64 << (n - 1) {
        let right: Vec<u32> = (1..n as u32)
            .filter(|&v| mask >> (v - 1) & 1 == 1)
            .collect();
        let left: Vec<u32> = (0..n as u32).filter(|v| !right.contains(v)).collect();
        let b = Bipartition::from_sides(n, &left, &right).expect("mask covers 0..n");
        let ok = (0..n as u32).all(|v| 2 * cross_color_degree(g, &b, v) >= target[v as usize]);
        if ok {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// One rechecked counterexample candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    /// Sample index within the hunt.
    pub index: u64,
    /// Full serialized instance (`.ecg` or `.dcg`).
    pub instance: String,
    /// Whether a fresh parse of `instance` reproduced the verdict.
    pub confirmed: bool,
}

/// Summary of one hunt run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub kind: String,
    pub seed: u64,
    pub budget: u64,
    pub params: String,
    pub instances: u64,
    pub candidates: Vec<Candidate>,
}

impl HuntReport {
    pub fn confirmed_count(&self) -> usize {
        self.candidates.iter().filter(|c| c.confirmed).count()
    }

    /// Line-oriented rendering; instance lines are indented two spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("hunt={}\n", self.kind));
        out.push_str(&format!("seed={}\n", self.seed));
        out.push_str(&format!("budget={}\n", self.budget));
        out.push_str(&format!("params={}\n", self.params));
        out.push_str(&format!("instances={}\n", self.instances));
        out.push_str(&format!("candidates={}\n", self.candidates.len()));
        out.push_str(&format!("confirmed={}\n", self.confirmed_count()));
        for c in &self.candidates {
            out.push_str(&format!(
                "candidate index={} recheck={}\n",
                c.index,
                if c.confirmed { "confirmed" } else { "refuted" }
            ));
            for line in c.instance.lines() {
                out.push_str("  ");
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }
}

/// Size range for problem9_hunt instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Problem9Params {
    pub min_n: usize,
    pub max_n: usize,
}

/// Samples random edge-colored graphs across the Erdős–Rényi model grid and
/// reports any instance where NO bipartition meets the half color-degree
/// bound, rechecked from a fresh parse of its serialization.
pub fn problem9_hunt(
    params: Problem9Params,
    budget: u64,
    seed: u64,
) -> Result<HuntReport, HuntError> {
    if budget == 0 {
        return Err(HuntError::ZeroBudget);
    }
    let Problem9Params { min_n, max_n } = params;
    if min_n < 1 || min_n > max_n {
        return Err(HuntError::EmptyRange(min_n, max_n));
    }
    if max_n > MAX_EXHAUSTIVE_N {
        return Err(HuntError::TooLarge(max_n));
    }
    let probs = [0.3, 0.5, 0.8];
    let palettes = [Palette::Fixed(2), Palette::HalfEdges, Palette::Edges];
    let mut candidates = Vec::new();
    for i in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i));
        let n = rng.gen_range(min_n..=max_n);
        let edge_prob = probs[(i % 3) as usize];
        let palette = palettes[((i / 3) % 3) as usize];
        let g = er_graph(n, edge_prob, palette, &mut rng);
        if problem9_exhaustive(&g)?.is_some() {
            continue;
        }
        let instance = serialize_ecg(&g);
        let reparsed = parse_ecg(&instance).expect("serialized instance reparses");
        let confirmed = problem9_exhaustive(&reparsed)?.is_none();
        candidates.push(Candidate {
            index: i,
            instance,
            confirmed,
        });
    }
    Ok(HuntReport {
        kind: "problem9".into(),
        seed,
        budget,
        params: format!("n={min_n}..{max_n}"),
        instances: budget,
        candidates,
    })
}

/// Part-size range for conjecture10_hunt instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conjecture10Params {
    pub min_part: usize,
    pub max_part: usize,
}

/// Samples digon-free boundary orientations and reports hypothesis-true,
/// cycle-free instances, rechecked from a fresh parse with both detectors.
pub fn conjecture10_hunt(
    params: Conjecture10Params,
    budget: u64,
    seed: u64,
) -> Result<HuntReport, HuntError> {
    if budget == 0 {
        return Err(HuntError::ZeroBudget);
    }
    let Conjecture10Params { min_part, max_part } = params;
    if min_part < 2 {
        return Err(HuntError::PartTooSmall(min_part));
    }
    if min_part > max_part {
        return Err(HuntError::EmptyRange(min_part, max_part));
    }
    let mut candidates = Vec::new();
    for i in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i));
        let a = rng.gen_range(min_part..=max_part);
        let b = rng.gen_range(min_part..=max_part);
        let d = boundary_orientation(a, b, &mut rng);
        let verdict = conjecture10_check(&d);
        if !verdict.hypothesis_holds || verdict.conclusion_holds {
            continue;
        }
        let instance = serialize_dcg(&d);
        let reparsed = parse_dcg(&instance).expect("serialized instance reparses");
        let recheck = conjecture10_check(&reparsed);
        let confirmed = recheck.hypothesis_holds
            && !recheck.conclusion_holds
            && directed_c4_brute_force(&reparsed).is_none();
        candidates.push(Candidate {
            index: i,
            instance,
            confirmed,
        });
    }
    Ok(HuntReport {
        kind: "conjecture10".into(),
        seed,
        budget,
        params: format!("parts={min_part}..{max_part}"),
        instances: budget,
        candidates,
    })
}
