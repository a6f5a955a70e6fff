//! Heterochromatic (rainbow) C3 and C4 detection.
//!
//! `find_rainbow_c3`/`find_rainbow_c4` are the pruned detectors used
//! everywhere; `oracle_rainbow_ck` is the exhaustive ground truth they are
//! tested against. A cycle is rainbow when its edge colors are pairwise
//! distinct.

use serde::{Deserialize, Serialize};

use crate::graph::{Cycle, EdgeColoredGraph, GraphError};

/// A rainbow cycle together with its edge colors, in canonical cycle form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    pub cycle: Cycle,
    /// `colors[i]` is the color of the edge from `vertices[i]` to the next
    /// vertex (cyclically).
    pub colors: Vec<u32>,
}

impl RainbowWitness {
    /// Builds a witness from a cycle of `g`, canonicalizing it; `None` when
    /// the cycle is not rainbow.
    fn from_cycle(g: &EdgeColoredGraph, cycle: &Cycle) -> Option<Self> {
        let canonical = cycle.canonical();
        let colors: Vec<u32> = canonical
            .edges()
            .map(|(u, v)| g.color_of(u, v).expect("witness cycle edge exists"))
            .collect();
        if pairwise_distinct(&colors) {
            Some(Self {
                cycle: canonical,
                colors,
            })
        } else {
            None
        }
    }

    /// Re-validates this witness against a host graph.
    pub fn validate(&self, g: &EdgeColoredGraph) -> bool {
        self.cycle.is_cycle_of(g)
            && pairwise_distinct(&self.colors)
            && self
                .cycle
                .edges()
                .zip(&self.colors)
                .all(|((u, v), &c)| g.color_of(u, v) == Some(c))
    }
}

fn pairwise_distinct(colors: &[u32]) -> bool {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// True iff `cyc` is a cycle of `g` whose edge colors are pairwise distinct.
/// Errors when `cyc` is not a cycle of `g`.
pub fn is_rainbow(g: &EdgeColoredGraph, cyc: &Cycle) -> Result<bool, GraphError> {
    for &v in cyc.vertices() {
        if v as usize >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
    }
    for (u, v) in cyc.edges() {
        if !g.has_edge(u, v) {
            return Err(GraphError::NotACycle(u, v));
        }
    }
    let colors: Vec<u32> = cyc
        .edges()
        .map(|(u, v)| g.color_of(u, v).expect("edge checked above"))
        .collect();
    Ok(pairwise_distinct(&colors))
}

/// Sorted intersection of two neighbor lists (ids only).
fn common_neighbors(g: &EdgeColoredGraph, u: u32, v: u32) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].0);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Finds a rainbow C4, scanning unordered vertex pairs in lexicographic
/// order as cycle diagonals and testing pairs of their common neighbors.
/// Stops at the first pair that yields a witness; among that pair's
/// witnesses the canonically least one is returned.
pub fn find_rainbow_c4(g: &EdgeColoredGraph) -> Option<RainbowWitness> {
    let n = g.n() as u32;
    for u in 0..n {
        for v in u + 1..n {
            let common = common_neighbors(g, u, v);
            if common.len() < 2 {
                continue;
            }
            let mut best: Option<RainbowWitness> = None;
            for (i, &a) in common.iter().enumerate() {
                let ca = g.color_of(u, a).expect("common neighbor");
                let cb = g.color_of(a, v).expect("common neighbor");
                if ca == cb {
                    continue;
                }
                for &b in &common[i + 1..] {
                    let cc = g.color_of(v, b).expect("common neighbor");
                    let cd = g.color_of(b, u).expect("common neighbor");
                    if ca != cc && ca != cd && cb != cc && cb != cd && cc != cd {
                        let cycle = Cycle::new(vec![u, a, v, b]).expect("four distinct");
                        let w = RainbowWitness::from_cycle(g, &cycle).expect("checked rainbow");
                        best = match best {
                            Some(cur) if cur.cycle.vertices() <= w.cycle.vertices() => Some(cur),
                            _ => Some(w),
                        };
                    }
                }
            }
            if best.is_some() {
                return best;
            }
        }
    }
    None
}

/// Finds a rainbow C3 by scanning edges in canonical order and testing each
/// common neighbor of the endpoints. Same first-hit/least-witness policy as
/// the C4 search.
pub fn find_rainbow_c3(g: &EdgeColoredGraph) -> Option<RainbowWitness> {
    for &(u, v, cuv) in g.edges() {
        let mut best: Option<RainbowWitness> = None;
        for w in common_neighbors(g, u, v) {
            let cuw = g.color_of(u, w).expect("common neighbor");
            let cvw = g.color_of(v, w).expect("common neighbor");
            if cuv != cuw && cuv != cvw && cuw != cvw {
                let cycle = Cycle::new(vec![u, v, w]).expect("three distinct");
                let wit = RainbowWitness::from_cycle(g, &cycle).expect("checked rainbow");
                best = match best {
                    Some(cur) if cur.cycle.vertices() <= wit.cycle.vertices() => Some(cur),
                    _ => Some(wit),
                };
            }
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Exhaustive ground truth: every rainbow k-cycle (k in {3, 4}), one entry
/// per cycle up to rotation and reflection, sorted by canonical vertex list.
/// Quadratic-ish in subsets, intended for small graphs.
pub fn oracle_rainbow_ck(
    g: &EdgeColoredGraph,
    k: usize,
) -> Result<Vec<RainbowWitness>, GraphError> {
    if k != 3 && k != 4 {
        return Err(GraphError::UnsupportedCycleLength(k));
    }
    let n = g.n() as u32;
    let mut found = Vec::new();
    let push_if_cycle = |vertices: Vec<u32>, found: &mut Vec<RainbowWitness>| {
        let cycle = Cycle::new(vertices).expect("distinct vertices");
        if cycle.is_cycle_of(g) {
            if let Some(w) = RainbowWitness::from_cycle(g, &cycle) {
                found.push(w);
            }
        }
    };
    if k == 3 {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    push_if_cycle(vec![a, b, c], &mut found);
                }
            }
        }
    } else {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        // The three distinct cyclic orderings of {a,b,c,d}.
                        push_if_cycle(vec![a, b, c, d], &mut found);
                        push_if_cycle(vec![a, b, d, c], &mut found);
                        push_if_cycle(vec![a, c, b, d], &mut found);
                    }
                }
            }
        }
    }
    found.sort_by(|x, y| x.cycle.vertices().cmp(y.cycle.vertices()));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn mono_k5() -> EdgeColoredGraph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            for j in i + 1..5 {
                edges.push((i, j, 0));
            }
        }
        EdgeColoredGraph::new(5, &edges).unwrap()
    }

    #[test]
    fn is_rainbow_cases() {
        let g = EdgeColoredGraph::new(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)]).unwrap();
        let c = Cycle::new(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(is_rainbow(&g, &c), Ok(true));

        let g = EdgeColoredGraph::new(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 2), (0, 3, 3)]).unwrap();
        assert_eq!(is_rainbow(&g, &c), Ok(false));

        let g = EdgeColoredGraph::new(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 1)]).unwrap();
        let t = Cycle::new(vec![0, 1, 2]).unwrap();
        assert_eq!(is_rainbow(&g, &t), Ok(false));
    }

    #[test]
    fn is_rainbow_rejects_non_cycles() {
        let g = EdgeColoredGraph::new(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3)]).unwrap();
        let c = Cycle::new(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(is_rainbow(&g, &c), Err(GraphError::NotACycle(3, 0)));
    }

    #[test]
    fn rainbow_k4_has_a_c4_witness() {
        let w = find_rainbow_c4(&rainbow_k4()).expect("witness");
        assert!(w.validate(&rainbow_k4()));
        assert_eq!(w.cycle.len(), 4);
    }

    #[test]
    fn monochromatic_k5_has_no_rainbow_cycles() {
        assert!(find_rainbow_c4(&mono_k5()).is_none());
        assert!(find_rainbow_c3(&mono_k5()).is_none());
        assert!(oracle_rainbow_ck(&mono_k5(), 4).unwrap().is_empty());
    }

    #[test]
    fn oracle_counts_on_rainbow_k4() {
        let g = rainbow_k4();
        // K4 has exactly 3 distinct 4-cycles and 4 triangles; under an
        // all-distinct coloring each is rainbow.
        assert_eq!(oracle_rainbow_ck(&g, 4).unwrap().len(), 3);
        assert_eq!(oracle_rainbow_ck(&g, 3).unwrap().len(), 4);
        let mono = EdgeColoredGraph::new(
            4,
            &[
                (0, 1, 0),
                (0, 2, 0),
                (0, 3, 0),
                (1, 2, 0),
                (1, 3, 0),
                (2, 3, 0),
            ],
        )
        .unwrap();
        assert_eq!(oracle_rainbow_ck(&mono, 4).unwrap().len(), 0);
    }

    #[test]
    fn oracle_rejects_other_lengths() {
        assert_eq!(
            oracle_rainbow_ck(&rainbow_k4(), 5),
            Err(GraphError::UnsupportedCycleLength(5))
        );
    }

    #[test]
    fn detector_returns_least_witness_of_first_hit() {
        let w = find_rainbow_c4(&rainbow_k4()).unwrap();
        // First diagonal pair {0,1} yields cycles 0-2-1-3 and 0-3-1-2; the
        // canonical least is [0,2,1,3].
        assert_eq!(w.cycle.vertices(), &[0, 2, 1, 3]);
        let w3 = find_rainbow_c3(&rainbow_k4()).unwrap();
        assert_eq!(w3.cycle.vertices(), &[0, 1, 2]);
    }

    proptest! {
        #[test]
        fn oracle_agrees_with_pruned_detectors(g in arb_graph(8, 6)) {
            let c4 = find_rainbow_c4(&g);
            let oracle4 = oracle_rainbow_ck(&g, 4).unwrap();
            prop_assert_eq!(c4.is_some(), !oracle4.is_empty());
            if let Some(w) = &c4 {
                prop_assert!(w.validate(&g));
                prop_assert!(oracle4.contains(w));
            }
            let c3 = find_rainbow_c3(&g);
            let oracle3 = oracle_rainbow_ck(&g, 3).unwrap();
            prop_assert_eq!(c3.is_some(), !oracle3.is_empty());
            if let Some(w) = &c3 {
                prop_assert!(w.validate(&g));
                prop_assert!(oracle3.contains(w));
            }
        }

        #[test]
        fn recoloring_injectively_preserves_existence(g in arb_graph(7, 5)) {
            // x -> 3x + 11 is injective on color ids.
            let edges: Vec<(u32, u32, u32)> = g
                .edges()
                .iter()
                .map(|&(u, v, c)| (u, v, 3 * c + 11))
                .collect();
            let h = EdgeColoredGraph::new(g.n(), &edges).unwrap();
            prop_assert_eq!(find_rainbow_c4(&g).is_some(), find_rainbow_c4(&h).is_some());
            prop_assert_eq!(find_rainbow_c3(&g).is_some(), find_rainbow_c3(&h).is_some());
        }

        #[test]
        fn vertex_relabeling_maps_witnesses_to_witnesses(g in arb_graph(7, 5), rot in 0usize..7) {
            // Rotate vertex ids by `rot`; a cyclic shift is a permutation.
            let n = g.n() as u32;
            let perm = |v: u32| (v + rot as u32) % n;
            let edges: Vec<(u32, u32, u32)> = g
                .edges()
                .iter()
                .map(|&(u, v, c)| (perm(u), perm(v), c))
                .collect();
            let h = EdgeColoredGraph::new(g.n(), &edges).unwrap();
            prop_assert_eq!(find_rainbow_c4(&g).is_some(), find_rainbow_c4(&h).is_some());
            if let Some(w) = find_rainbow_c4(&g) {
                let mapped: Vec<u32> = w.cycle.vertices().iter().map(|&v| perm(v)).collect();
                let cyc = Cycle::new(mapped).unwrap();
                prop_assert_eq!(is_rainbow(&h, &cyc), Ok(true));
            }
        }
    }
}
