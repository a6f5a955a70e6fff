//! Projective planes of prime order, their incidence graphs, and rainbow
//! colorings.
//!
//! Points and lines are homogeneous coordinate triples over the integers mod
//! p, one canonical representative per projective class (first nonzero
//! coordinate scaled to 1). A point lies on a line iff the dot product of
//! their triples vanishes mod p. The resulting incidence graph is bipartite,
//! (p+1)-regular, and contains no 4-cycle, which makes its rainbow coloring
//! an extremal instance for pairwise color-neighborhood unions.

use thiserror::Error;

use crate::graph::EdgeColoredGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("{0} is not a prime; no plane construction available")]
    NotPrime(u32),
    #[error("{0} is a prime power but not a prime; only prime orders are supported")]
    UnsupportedPrimePower(u32),
}

/// A finite projective plane of order `t`, stored as point sets per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePlane {
    order: u32,
    n_points: usize,
    /// `lines[l]` is the sorted list of point ids on line `l`.
    lines: Vec<Vec<u32>>,
}

impl ProjectivePlane {
    /// Assembles a plane from raw parts without validating the axioms;
    /// pair with `verify_plane_axioms`.
    pub fn from_parts(order: u32, n_points: usize, lines: Vec<Vec<u32>>) -> Self {
        Self {
            order,
            n_points,
            lines,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn n_lines(&self) -> usize {
        self.lines.len()
    }

    /// Sorted point ids on line `l`.
    pub fn line(&self, l: usize) -> &[u32] {
        &self.lines[l]
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    /// The dual plane: roles of points and lines swapped.
    pub fn dual(&self) -> ProjectivePlane {
        let mut lines = vec![Vec::new(); self.n_points];
        for (l, pts) in self.lines.iter().enumerate() {
            for &p in pts {
                lines[p as usize].push(l as u32);
            }
        }
        ProjectivePlane {
            order: self.order,
            n_points: self.lines.len(),
            lines,
        }
    }
}

fn is_prime(x: u32) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_power_base(x: u32) -> Option<u32> {
    if x < 2 {
        return None;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            let mut y = x;
            while y.is_multiple_of(d) {
                y /= d;
            }
            return (y == 1).then_some(d);
        }
        d += 1;
    }
    Some(x)
}

/// Canonical projective representatives over Z_p: all nonzero triples whose
/// first nonzero coordinate is 1, in lexicographic order.
fn canonical_triples(p: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity((p * p + p + 1) as usize);
    out.push([0, 0, 1]);
    for z in 0..p {
        out.push([0, 1, z]);
    }
    for y in 0..p {
        for z in 0..p {
            out.push([1, y, z]);
        }
    }
    out
}

/// Builds the plane of prime order `p` from homogeneous coordinates.
pub fn build_plane(p: u32) -> Result<ProjectivePlane, PlaneError> {
    if !is_prime(p) {
        return Err(match prime_power_base(p) {
            Some(_) => PlaneError::UnsupportedPrimePower(p),
            None => PlaneError::NotPrime(p),
        });
    }
    let triples = canonical_triples(p);
    let dot = |a: &[u32; 3], b: &[u32; 3]| -> u32 { (0..3).map(|i| a[i] * b[i]).sum::<u32>() % p };
    let lines = triples
        .iter()
        .map(|line| {
            (0..triples.len() as u32)
                .filter(|&pt| dot(&triples[pt as usize], line) == 0)
                .collect()
        })
        .collect();
    Ok(ProjectivePlane {
        order: p,
        n_points: triples.len(),
        lines,
    })
}

/// First axiom violation found, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneViolation {
    WrongCounts {
        points: usize,
        lines: usize,
        expected: usize,
    },
    LineSize {
        line: u32,
        size: usize,
        expected: usize,
    },
    PointDegree {
        point: u32,
        degree: usize,
        expected: usize,
    },
    PointsOnNoCommonLine {
        p: u32,
        q: u32,
    },
    PointsOnTwoCommonLines {
        p: u32,
        q: u32,
    },
    LinesWithNoCommonPoint {
        l1: u32,
        l2: u32,
    },
    LinesWithTwoCommonPoints {
        l1: u32,
        l2: u32,
    },
    NoQuadrilateral,
}

/// Exhaustively checks the plane axioms plus the regularity counts.
/// Returns the first violation in a fixed check order, or `None`.
pub fn verify_plane_axioms(plane: &ProjectivePlane) -> Option<PlaneViolation> {
    let t = plane.order as usize;
    let expected = t * t + t + 1;
    if plane.n_points != expected || plane.lines.len() != expected {
        return Some(PlaneViolation::WrongCounts {
            points: plane.n_points,
            lines: plane.lines.len(),
            expected,
        });
    }
    for (l, pts) in plane.lines.iter().enumerate() {
        if pts.len() != t + 1 {
            return Some(PlaneViolation::LineSize {
                line: l as u32,
                size: pts.len(),
                expected: t + 1,
            });
        }
    }
    let mut degree = vec![0usize; plane.n_points];
    let mut on_line = vec![vec![false; plane.n_points]; plane.lines.len()];
    for (l, pts) in plane.lines.iter().enumerate() {
        for &p in pts {
            degree[p as usize] += 1;
            on_line[l][p as usize] = true;
        }
    }
    for (p, &d) in degree.iter().enumerate() {
        if d != t + 1 {
            return Some(PlaneViolation::PointDegree {
                point: p as u32,
                degree: d,
                expected: t + 1,
            });
        }
    }
    // line_through[p][q]: the unique common line, filled while checking.
    let np = plane.n_points;
    let mut line_through = vec![u32::MAX; np * np];
    for p in 0..np {
        for q in p + 1..np {
            let mut found = None;
            for (l, row) in on_line.iter().enumerate() {
                if row[p] && row[q] {
                    if found.is_some() {
                        return Some(PlaneViolation::PointsOnTwoCommonLines {
                            p: p as u32,
                            q: q as u32,
                        });
                    }
                    found = Some(l as u32);
                }
            }
            match found {
                Some(l) => {
                    line_through[p * np + q] = l;
                    line_through[q * np + p] = l;
                }
                None => {
                    return Some(PlaneViolation::PointsOnNoCommonLine {
                        p: p as u32,
                        q: q as u32,
                    })
                }
            }
        }
    }
    for l1 in 0..plane.lines.len() {
        for l2 in l1 + 1..plane.lines.len() {
            let common = (0..np)
                .filter(|&p| on_line[l1][p] && on_line[l2][p])
                .count();
            match common {
                0 => {
                    return Some(PlaneViolation::LinesWithNoCommonPoint {
                        l1: l1 as u32,
                        l2: l2 as u32,
                    })
                }
                1 => {}
                _ => {
                    return Some(PlaneViolation::LinesWithTwoCommonPoints {
                        l1: l1 as u32,
                        l2: l2 as u32,
                    })
                }
            }
        }
    }
    // Four points, no three collinear.
    let collinear = |a: usize, b: usize, c: usize| -> bool {
        let l = line_through[a * np + b];
        l != u32::MAX && on_line[l as usize][c]
    };
    for a in 0..np {
        for b in a + 1..np {
            for c in b + 1..np {
                if collinear(a, b, c) {
                    continue;
                }
                for d in c + 1..np {
                    if !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d) {
                        return None;
                    }
                }
            }
        }
    }
    Some(PlaneViolation::NoQuadrilateral)
}

/// The bipartite point-line incidence graph, all edges colored 0. Point
/// vertices take ids `0..n_points`, line vertices follow.
pub fn incidence_graph(plane: &ProjectivePlane) -> EdgeColoredGraph {
    let np = plane.n_points as u32;
    let mut edges = Vec::new();
    for (l, pts) in plane.lines.iter().enumerate() {
        for &p in pts {
            edges.push((p, np + l as u32, 0));
        }
    }
    let n = plane.n_points + plane.lines.len();
    EdgeColoredGraph::new(n, &edges).expect("incidence pairs are simple")
}

/// Recolors `g` with all-distinct colors `0..m-1` in canonical edge order.
pub fn rainbow_color(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    let edges: Vec<(u32, u32, u32)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v, _))| (u, v, i as u32))
        .collect();
    EdgeColoredGraph::new(g.n(), &edges).expect("same vertex set and edge set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::{find_rainbow_c4, oracle_rainbow_ck};

    /// Shortest cycle length via BFS from every vertex; `None` if acyclic.
    fn girth(g: &EdgeColoredGraph) -> Option<usize> {
        let n = g.n();
        let mut best: Option<usize> = None;
        for s in 0..n as u32 {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![u32::MAX; n];
            let mut queue = std::collections::VecDeque::new();
            dist[s as usize] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in g.neighbors(x) {
                    if dist[y as usize] == usize::MAX {
                        dist[y as usize] = dist[x as usize] + 1;
                        parent[y as usize] = x;
                        queue.push_back(y);
                    } else if parent[x as usize] != y {
                        let len = dist[x as usize] + dist[y as usize] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn primality_classification() {
        assert!(matches!(
            build_plane(4),
            Err(PlaneError::UnsupportedPrimePower(4))
        ));
        assert!(matches!(
            build_plane(8),
            Err(PlaneError::UnsupportedPrimePower(8))
        ));
        assert!(matches!(
            build_plane(9),
            Err(PlaneError::UnsupportedPrimePower(9))
        ));
        assert!(matches!(build_plane(6), Err(PlaneError::NotPrime(6))));
        assert!(matches!(build_plane(1), Err(PlaneError::NotPrime(1))));
        assert!(matches!(build_plane(0), Err(PlaneError::NotPrime(0))));
    }

    #[test]
    fn fano_plane_shape() {
        let plane = build_plane(2).unwrap();
        assert_eq!(plane.n_points(), 7);
        assert_eq!(plane.n_lines(), 7);
        assert!(plane.lines().iter().all(|l| l.len() == 3));
        assert_eq!(verify_plane_axioms(&plane), None);
    }

    #[test]
    fn order_three_plane_shape() {
        let plane = build_plane(3).unwrap();
        assert_eq!(plane.n_points(), 13);
        assert_eq!(plane.n_lines(), 13);
        assert!(plane.lines().iter().all(|l| l.len() == 4));
        assert_eq!(verify_plane_axioms(&plane), None);
    }

    #[test]
    fn order_five_plane_passes_axioms() {
        let plane = build_plane(5).unwrap();
        assert_eq!(plane.n_points(), 31);
        assert_eq!(verify_plane_axioms(&plane), None);
    }

    #[test]
    fn incidence_graph_shape_and_girth() {
        let g = incidence_graph(&build_plane(2).unwrap());
        assert_eq!(g.n(), 14);
        assert_eq!(g.m(), 21);
        assert!((0..14).all(|v| g.degree(v) == 3));
        assert!(g.is_bipartite());
        assert_eq!(girth(&g), Some(6));

        let g3 = incidence_graph(&build_plane(3).unwrap());
        assert_eq!(g3.n(), 26);
        assert_eq!(g3.m(), 52);
        assert!((0..26).all(|v| g3.degree(v) == 4));
        assert_eq!(girth(&g3), Some(6));
    }

    #[test]
    fn bipartition_recovers_points_and_lines() {
        let plane = build_plane(3).unwrap();
        let g = incidence_graph(&plane);
        let classes = g.bipartition_classes().expect("bipartite");
        // Points 0..13 on one side, lines 13..26 on the other.
        assert!(classes[..13].iter().all(|&s| !s));
        assert!(classes[13..].iter().all(|&s| s));
    }

    #[test]
    fn rainbow_coloring_makes_color_degree_equal_degree() {
        let g = rainbow_color(&incidence_graph(&build_plane(2).unwrap()));
        for v in 0..g.n() as u32 {
            assert_eq!(g.color_degree(v).unwrap(), g.degree(v));
        }
    }

    #[test]
    fn rainbow_incidence_graphs_have_no_rainbow_c4() {
        for p in [2, 3] {
            let g = rainbow_color(&incidence_graph(&build_plane(p).unwrap()));
            assert!(find_rainbow_c4(&g).is_none());
            assert!(oracle_rainbow_ck(&g, 4).unwrap().is_empty());
        }
    }

    #[test]
    fn minimum_pairwise_color_union_is_extremal() {
        for (p, want) in [(2u32, 5), (3, 7)] {
            let g = rainbow_color(&incidence_graph(&build_plane(p).unwrap()));
            assert_eq!(g.min_pairwise_color_union().unwrap(), want);
            // The extremal identity (2t+1)^2 = 2n-3.
            assert_eq!((2 * p as usize + 1).pow(2), 2 * g.n() - 3);
        }
    }

    #[test]
    fn neighborhood_unions_match_case_analysis() {
        let plane = build_plane(3).unwrap();
        let g = incidence_graph(&plane);
        let t = 3usize;
        let nbrs = |v: u32| -> std::collections::BTreeSet<u32> {
            g.neighbors(v).iter().map(|&(u, _)| u).collect()
        };
        let np = plane.n_points() as u32;
        // Two distinct points share exactly one line: |N(u) ∪ N(v)| = 2t+1.
        for u in 0..np {
            for v in u + 1..np {
                assert_eq!(nbrs(u).union(&nbrs(v)).count(), 2 * t + 1);
            }
        }
        // Two distinct lines meet in exactly one point: union is 2t+1 again.
        for l1 in np..g.n() as u32 {
            for l2 in l1 + 1..g.n() as u32 {
                assert_eq!(nbrs(l1).union(&nbrs(l2)).count(), 2 * t + 1);
            }
        }
        // Point-line pairs: the sides are disjoint, so always 2t+2.
        for pt in 0..np {
            for l in np..g.n() as u32 {
                assert_eq!(
                    nbrs(pt).union(&nbrs(l)).count(),
                    2 * t + 2,
                    "pair ({pt},{l})"
                );
            }
        }
    }

    #[test]
    fn extremal_identity_is_exact() {
        for t in 1usize..200 {
            let n = 2 * (t * t + t + 1);
            assert_eq!((2 * t + 1) * (2 * t + 1), 2 * n - 3);
        }
    }

    #[test]
    fn dual_plane_satisfies_axioms() {
        for p in [2, 3, 5] {
            let plane = build_plane(p).unwrap();
            assert_eq!(verify_plane_axioms(&plane.dual()), None);
        }
    }

    #[test]
    fn deleted_incidence_is_caught() {
        let plane = build_plane(2).unwrap();
        let mut lines = plane.lines().to_vec();
        lines[0].pop();
        let broken = ProjectivePlane::from_parts(2, 7, lines);
        assert_eq!(
            verify_plane_axioms(&broken),
            Some(PlaneViolation::LineSize {
                line: 0,
                size: 2,
                expected: 3
            })
        );
    }

    #[test]
    fn separated_points_are_caught() {
        // Substitute a point on one line so sizes stay right but one pair
        // loses its common line: take Fano, swap a point on line 0 for a
        // point already on it... instead drop to a hand-built structure:
        // 3 "points", 3 "lines" of the wrong shape for order 1.
        let broken = ProjectivePlane::from_parts(1, 3, vec![vec![0, 1], vec![0, 2], vec![1, 0]]);
        // Point degrees: 0 appears 3 times -> degree violation first.
        assert_eq!(
            verify_plane_axioms(&broken),
            Some(PlaneViolation::PointDegree {
                point: 0,
                degree: 3,
                expected: 2
            })
        );

        let no_common = ProjectivePlane::from_parts(1, 3, vec![vec![0, 1], vec![0, 1], vec![2, 2]]);
        // Sizes and degrees pass (2 each); pair check fires.
        assert!(matches!(
            verify_plane_axioms(&no_common),
            Some(
                PlaneViolation::PointsOnTwoCommonLines { .. }
                    | PlaneViolation::PointsOnNoCommonLine { .. }
            )
        ));
    }

    #[test]
    fn duplicated_line_is_caught() {
        let plane = build_plane(2).unwrap();
        let mut lines = plane.lines().to_vec();
        lines[1] = lines[0].clone();
        let broken = ProjectivePlane::from_parts(2, 7, lines);
        assert!(matches!(
            verify_plane_axioms(&broken),
            Some(
                PlaneViolation::PointDegree { .. } | PlaneViolation::PointsOnTwoCommonLines { .. }
            )
        ));
    }
}
