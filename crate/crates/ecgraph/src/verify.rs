//! Hypothesis/conclusion checkers for the six theorems and the exhaustive
//! proper-coloring engine for small complete graphs.
//!
//! A theorem check is an implication: hypothesis (order bound plus a
//! color-degree or pairwise-union threshold) and conclusion (a rainbow C3
//! and/or C4 exists) are evaluated independently and reported side by side.
//! A verdict with a false hypothesis carries no judgment.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::EdgeColoredGraph;
use crate::rainbow::{find_rainbow_c3, find_rainbow_c4, RainbowWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("T4 applies to triangle-free graphs; this graph has a triangle")]
    NotTriangleFree,
    #[error("T5 applies to bipartite graphs; this graph has an odd cycle")]
    NotBipartite,
    #[error("graph is not complete")]
    NotComplete,
    #[error("graph is not properly edge-colored")]
    NotProperlyColored,
    #[error("exhaustive enumeration supports 4 <= n <= 6, got {0}")]
    OrderOutOfRange(usize),
    #[error("unknown theorem id {0:?} (expected T1..T6)")]
    UnknownTheorem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [Self::T1, Self::T2, Self::T3, Self::T4, Self::T5, Self::T6];
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", *self as u8 + 1)
    }
}

impl FromStr for TheoremId {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digit = s
            .strip_prefix('T')
            .or_else(|| s.strip_prefix('t'))
            .unwrap_or(s);
        match digit {
            "1" => Ok(Self::T1),
            "2" => Ok(Self::T2),
            "3" => Ok(Self::T3),
            "4" => Ok(Self::T4),
            "5" => Ok(Self::T5),
            "6" => Ok(Self::T6),
            _ => Err(CheckError::UnknownTheorem(s.to_string())),
        }
    }
}

/// Slack used when comparing integer quantities against irrational
/// thresholds: `value >= θ` is decided as `value >= ceil(θ - ε)`.
pub const THRESHOLD_EPSILON: f64 = 1e-9;

/// Outcome of checking one theorem on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub witness: Option<RainbowWitness>,
    /// Slack of the binding condition: order shortfall when the order bound
    /// fails, otherwise minimum threshold slack over vertices/pairs.
    pub margin: f64,
}

enum Condition {
    /// `|CN(u) ∪ CN(v)| >= n - 1` for every pair.
    PairwiseUnion,
    /// `d^c(v) >= θ` for every vertex.
    ColorDegree(f64),
}

fn hypothesis_condition(
    g: &EdgeColoredGraph,
    id: TheoremId,
) -> Result<(usize, Condition), CheckError> {
    let n = g.n() as f64;
    let s5 = 5f64.sqrt();
    let s7 = 7f64.sqrt();
    Ok(match id {
        TheoremId::T1 => (4, Condition::PairwiseUnion),
        TheoremId::T2 => (
            3,
            Condition::ColorDegree((4.0 * s7 / 7.0 - 1.0) * n + 3.0 - 4.0 * s7 / 7.0),
        ),
        TheoremId::T3 => (3, Condition::ColorDegree((s7 + 1.0) / 6.0 * n)),
        TheoremId::T4 => {
            if g.has_triangle() {
                return Err(CheckError::NotTriangleFree);
            }
            (9, Condition::ColorDegree((3.0 - s5) / 2.0 * n + 1.0))
        }
        TheoremId::T5 => {
            if !g.is_bipartite() {
                return Err(CheckError::NotBipartite);
            }
            (6, Condition::ColorDegree((s5 - 1.0) * n / 4.0 + 1.0))
        }
        TheoremId::T6 => (60, Condition::PairwiseUnion),
    })
}

/// Evaluates the order bound and threshold condition of one theorem.
/// Returns `(holds, margin)`.
pub fn check_hypothesis(g: &EdgeColoredGraph, id: TheoremId) -> Result<(bool, f64), CheckError> {
    let (n_min, cond) = hypothesis_condition(g, id)?;
    let n = g.n();
    if n < n_min {
        return Ok((false, n as f64 - n_min as f64));
    }
    match cond {
        Condition::PairwiseUnion => {
            let min_union = g
                .min_pairwise_color_union()
                .expect("order bound implies n >= 2") as i64;
            let need = n as i64 - 1;
            Ok((min_union >= need, (min_union - need) as f64))
        }
        Condition::ColorDegree(theta) => {
            let min_dc = g.min_color_degree() as i64;
            let need = (theta - THRESHOLD_EPSILON).ceil() as i64;
            Ok((min_dc >= need, min_dc as f64 - theta))
        }
    }
}

/// Runs hypothesis and conclusion checks for one theorem.
pub fn check_theorem(g: &EdgeColoredGraph, id: TheoremId) -> Result<Verdict, CheckError> {
    let (hypothesis_holds, margin) = check_hypothesis(g, id)?;
    let witness = match id {
        TheoremId::T1 | TheoremId::T2 => find_rainbow_c3(g).or_else(|| find_rainbow_c4(g)),
        TheoremId::T3 => find_rainbow_c3(g),
        TheoremId::T4 | TheoremId::T5 | TheoremId::T6 => find_rainbow_c4(g),
    };
    Ok(Verdict {
        theorem: id,
        hypothesis_holds,
        conclusion_holds: witness.is_some(),
        witness,
        margin,
    })
}

/// Report of one exhaustive enumeration run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case1Report {
    pub n: usize,
    /// Proper edge colorings of K_n, counted up to color relabeling.
    pub colorings: u64,
    /// Colorings with no rainbow C4.
    pub failures: Vec<EdgeColoredGraph>,
}

/// Enumerates every proper edge coloring of K_n up to color relabeling
/// (greedy canonical form: a new color always takes the smallest unused id)
/// and records the colorings with no rainbow C4.
pub fn case1_exhaustive(n: usize) -> Result<Case1Report, CheckError> {
    if !(4..=6).contains(&n) {
        return Err(CheckError::OrderOutOfRange(n));
    }
    let mut pairs = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    let m = pairs.len();
    let mut colors = vec![0u32; m];
    // used[v] is a bitmask of colors on edges at v; colors never exceed m.
    let mut used = vec![0u32; n];
    let mut report = Case1Report {
        n,
        colorings: 0,
        failures: Vec::new(),
    };

    fn recurse(
        idx: usize,
        max_used: u32,
        pairs: &[(u32, u32)],
        colors: &mut [u32],
        used: &mut [u32],
        report: &mut Case1Report,
    ) {
        if idx == pairs.len() {
            report.colorings += 1;
            let edges: Vec<(u32, u32, u32)> = pairs
                .iter()
                .zip(colors.iter())
                .map(|(&(u, v), &c)| (u, v, c))
                .collect();
            let g = EdgeColoredGraph::new(report.n, &edges).expect("K_n is simple");
            debug_assert!(g.is_properly_colored());
            if find_rainbow_c4(&g).is_none() {
                report.failures.push(g);
            }
            return;
        }
        let (u, v) = pairs[idx];
        let blocked = used[u as usize] | used[v as usize];
        // Existing colors, then exactly one fresh color (canonical labels).
        for c in 0..=max_used {
            if blocked & (1 << c) == 0 {
                colors[idx] = c;
                used[u as usize] |= 1 << c;
                used[v as usize] |= 1 << c;
                recurse(idx + 1, max_used.max(c + 1), pairs, colors, used, report);
                used[u as usize] &= !(1 << c);
                used[v as usize] &= !(1 << c);
            }
        }
    }

    recurse(0, 0, &pairs, &mut colors, &mut used, &mut report);
    Ok(report)
}

/// Scans ordered vertex quadruples (x1,x2,x3,x4) of a properly colored
/// complete graph for one with `C(x1x2) != C(x3x4)` but
/// `C(x2x3) != C(x1x4)`; returns the first such quadruple or `None`.
pub fn claim9_check(g: &EdgeColoredGraph) -> Result<Option<[u32; 4]>, CheckError> {
    let n = g.n();
    if g.m() != n * (n - 1) / 2 {
        return Err(CheckError::NotComplete);
    }
    if !g.is_properly_colored() {
        return Err(CheckError::NotProperlyColored);
    }
    let color = |a: u32, b: u32| g.color_of(a, b).expect("complete graph");
    for x1 in 0..n as u32 {
        for x2 in 0..n as u32 {
            if x2 == x1 {
                continue;
            }
            for x3 in 0..n as u32 {
                if x3 == x1 || x3 == x2 {
                    continue;
                }
                for x4 in 0..n as u32 {
                    if x4 == x1 || x4 == x2 || x4 == x3 {
                        continue;
                    }
                    if color(x1, x2) != color(x3, x4) && color(x2, x3) != color(x1, x4) {
                        return Ok(Some([x1, x2, x3, x4]));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::proper_complete;
    use crate::rainbow::{is_rainbow, oracle_rainbow_ck};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn rainbow_k4() -> EdgeColoredGraph {
        EdgeColoredGraph::new(
            4,
            &[
                (0, 1, 1),
                (0, 2, 2),
                (0, 3, 3),
                (1, 2, 4),
                (1, 3, 5),
                (2, 3, 6),
            ],
        )
        .unwrap()
    }

    fn mono_kn(n: usize) -> EdgeColoredGraph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v, 0));
            }
        }
        EdgeColoredGraph::new(n, &edges).unwrap()
    }

    /// K4's proper 3-edge-coloring: color classes are perfect matchings.
    fn matched_k4() -> EdgeColoredGraph {
        EdgeColoredGraph::new(
            4,
            &[
                (0, 1, 0),
                (2, 3, 0),
                (0, 2, 1),
                (1, 3, 1),
                (0, 3, 2),
                (1, 2, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn theorem_id_round_trips() {
        for id in TheoremId::ALL {
            assert_eq!(id.to_string().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("3".parse::<TheoremId>().unwrap(), TheoremId::T3);
        assert_eq!("t5".parse::<TheoremId>().unwrap(), TheoremId::T5);
        assert!(matches!(
            "T7".parse::<TheoremId>(),
            Err(CheckError::UnknownTheorem(_))
        ));
    }

    #[test]
    fn proper_k60_satisfies_t6() {
        let g = proper_complete(60);
        let (holds, margin) = check_hypothesis(&g, TheoremId::T6).unwrap();
        assert!(holds);
        assert!(margin >= 0.0);
        let v = check_theorem(&g, TheoremId::T6).unwrap();
        assert!(v.hypothesis_holds && v.conclusion_holds);
        let w = v.witness.unwrap();
        assert_eq!(is_rainbow(&g, &w.cycle), Ok(true));
    }

    #[test]
    fn monochromatic_k60_fails_t6() {
        let g = mono_kn(60);
        let (holds, margin) = check_hypothesis(&g, TheoremId::T6).unwrap();
        assert!(!holds);
        // Unions are all 1; slack is 1 - 59.
        assert_eq!(margin, 1.0 - 59.0);
    }

    #[test]
    fn rainbow_complete_bipartite_satisfies_t5() {
        // K_{10,10}, all 100 edges distinct colors.
        let mut edges = Vec::new();
        for u in 0..10u32 {
            for v in 10..20u32 {
                edges.push((u, v, u * 10 + (v - 10)));
            }
        }
        let g = EdgeColoredGraph::new(20, &edges).unwrap();
        let (holds, margin) = check_hypothesis(&g, TheoremId::T5).unwrap();
        assert!(holds);
        // Threshold (√5−1)·20/4+1 ≈ 7.18, every d^c = 10.
        assert!((margin - (10.0 - ((5f64.sqrt() - 1.0) * 20.0 / 4.0 + 1.0))).abs() < 1e-12);
        let v = check_theorem(&g, TheoremId::T5).unwrap();
        assert!(v.conclusion_holds);
    }

    #[test]
    fn t5_rejects_odd_cycles_and_t4_rejects_triangles() {
        let tri = EdgeColoredGraph::new(3, &[(0, 1, 0), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert_eq!(
            check_hypothesis(&tri, TheoremId::T5),
            Err(CheckError::NotBipartite)
        );
        assert_eq!(
            check_hypothesis(&tri, TheoremId::T4),
            Err(CheckError::NotTriangleFree)
        );
    }

    #[test]
    fn rainbow_k4_satisfies_t1() {
        let g = rainbow_k4();
        let (holds, margin) = check_hypothesis(&g, TheoremId::T1).unwrap();
        assert!(holds);
        // Unions are d(u)+d(v)-1 = 5 against n-1 = 3.
        assert_eq!(margin, 2.0);
        let v = check_theorem(&g, TheoremId::T1).unwrap();
        assert!(v.conclusion_holds);
        assert!(v.witness.unwrap().validate(&g));
    }

    #[test]
    fn undersized_graph_fails_on_order() {
        let g = rainbow_k4();
        let (holds, margin) = check_hypothesis(&g, TheoremId::T6).unwrap();
        assert!(!holds);
        assert_eq!(margin, 4.0 - 60.0);
    }

    #[test]
    fn fano_t5_is_vacuous_and_consistent() {
        let g = crate::projective::rainbow_color(&crate::projective::incidence_graph(
            &crate::projective::build_plane(2).unwrap(),
        ));
        let v = check_theorem(&g, TheoremId::T5).unwrap();
        assert!(!v.hypothesis_holds);
        assert!(!v.conclusion_holds);
        assert!(v.witness.is_none());
    }

    #[test]
    fn case1_rejects_out_of_range_orders() {
        assert_eq!(case1_exhaustive(3), Err(CheckError::OrderOutOfRange(3)));
        assert_eq!(case1_exhaustive(7), Err(CheckError::OrderOutOfRange(7)));
    }

    #[test]
    fn case1_k4_counts_and_failures() {
        let report = case1_exhaustive(4).unwrap();
        assert_eq!(report.colorings, 8);
        assert_eq!(report.failures.len(), 4);
        // The proper 3-edge-coloring is among the failures.
        assert!(report.failures.iter().any(|g| {
            let mut cs: Vec<u32> = g.edges().iter().map(|&(_, _, c)| c).collect();
            cs.sort_unstable();
            cs.dedup();
            cs.len() == 3
        }));
        for g in &report.failures {
            assert!(g.is_properly_colored());
            assert!(oracle_rainbow_ck(g, 4).unwrap().is_empty());
        }
    }

    #[test]
    fn case1_k5_has_no_failures() {
        let report = case1_exhaustive(5).unwrap();
        assert_eq!(report.colorings, 332);
        assert!(report.failures.is_empty());
    }

    /// Independent ground truth for the K4 canonical-coloring count: filter
    /// all raw assignments and canonicalize by first-appearance relabeling.
    #[test]
    fn case1_k4_counts_match_raw_enumeration() {
        let pairs = [(0u32, 1u32), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut canonical = std::collections::BTreeSet::new();
        let mut failing = std::collections::BTreeSet::new();
        for code in 0..6u64.pow(6) {
            let mut x = code;
            let mut colors = [0u32; 6];
            for c in colors.iter_mut() {
                *c = (x % 6) as u32;
                x /= 6;
            }
            let proper = pairs.iter().enumerate().all(|(i, &(u1, v1))| {
                pairs.iter().enumerate().all(|(j, &(u2, v2))| {
                    i == j
                        || colors[i] != colors[j]
                        || (u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2)
                })
            });
            if !proper {
                continue;
            }
            // First-appearance relabeling in edge order.
            let mut map = std::collections::BTreeMap::new();
            let relabeled: Vec<u32> = colors
                .iter()
                .map(|&c| {
                    let next = map.len() as u32;
                    *map.entry(c).or_insert(next)
                })
                .collect();
            let edges: Vec<(u32, u32, u32)> = pairs
                .iter()
                .zip(&relabeled)
                .map(|(&(u, v), &c)| (u, v, c))
                .collect();
            let g = EdgeColoredGraph::new(4, &edges).unwrap();
            if find_rainbow_c4(&g).is_none() {
                failing.insert(relabeled.clone());
            }
            canonical.insert(relabeled);
        }
        assert_eq!(canonical.len(), 8);
        assert_eq!(failing.len(), 4);
    }

    #[test]
    fn claim9_on_matched_k4_holds() {
        assert_eq!(claim9_check(&matched_k4()), Ok(None));
    }

    #[test]
    fn claim9_on_rainbow_k4_finds_a_quadruple() {
        // Properly colored but not rainbow-C4-free: the claim's conclusion
        // fails somewhere.
        let got = claim9_check(&rainbow_k4()).unwrap();
        assert!(got.is_some());
    }

    #[test]
    fn claim9_preconditions() {
        assert_eq!(
            claim9_check(&mono_kn(4)),
            Err(CheckError::NotProperlyColored)
        );
        let path = EdgeColoredGraph::new(3, &[(0, 1, 0), (1, 2, 1)]).unwrap();
        assert_eq!(claim9_check(&path), Err(CheckError::NotComplete));
    }

    #[test]
    fn case1_failures_satisfy_claim9() {
        for g in &case1_exhaustive(4).unwrap().failures {
            assert_eq!(claim9_check(g), Ok(None));
        }
    }

    proptest! {
        #[test]
        fn proper_coloring_iff_color_degree_equals_degree(g in arb_graph(8, 8)) {
            let by_def = g.is_properly_colored();
            let by_degrees = (0..g.n() as u32)
                .all(|v| g.color_degree(v).unwrap() == g.degree(v));
            prop_assert_eq!(by_def, by_degrees);
        }

        #[test]
        fn splitting_color_classes_preserves_hypotheses(g in arb_graph(9, 3), salt in 0u32..16) {
            // Recolor a pseudo-random subset of one color class with a
            // fresh color; color degrees never decrease.
            let edges = g.edges();
            if edges.is_empty() {
                return Ok(());
            }
            let target = edges[salt as usize % edges.len()].2;
            let fresh = edges.iter().map(|e| e.2).max().unwrap() + 1;
            let recolored: Vec<(u32, u32, u32)> = edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v, c))| {
                    if c == target && (i as u32).wrapping_mul(2654435761) % 2 == salt % 2 {
                        (u, v, fresh)
                    } else {
                        (u, v, c)
                    }
                })
                .collect();
            let h = EdgeColoredGraph::new(g.n(), &recolored).unwrap();
            for id in [TheoremId::T1, TheoremId::T2, TheoremId::T3] {
                let (before, _) = check_hypothesis(&g, id).unwrap();
                if before {
                    let (after, _) = check_hypothesis(&h, id).unwrap();
                    prop_assert!(after, "refinement broke {}", id);
                }
            }
        }

        #[test]
        fn conclusion_implies_valid_witness(g in arb_graph(8, 6)) {
            for id in [TheoremId::T1, TheoremId::T3, TheoremId::T6] {
                let v = check_theorem(&g, id).unwrap();
                match v.witness {
                    Some(w) => {
                        prop_assert!(v.conclusion_holds);
                        prop_assert!(w.validate(&g));
                    }
                    None => prop_assert!(!v.conclusion_holds),
                }
            }
        }
    }
}
