//! Seeded instance generators shared by test suites, hunts, and the CLI.
//!
//! All generators are deterministic functions of their RNG; suites derive a
//! fresh ChaCha stream per sample so results are independent of iteration
//! order.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::EdgeColoredGraph;
use crate::hunt::Digraph;

/// Color palette sizes for random colorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Palette {
    /// Exactly this many colors.
    Fixed(u32),
    /// ⌊m/2⌋ colors (at least 1).
    HalfEdges,
    /// m colors (at least 1) — near-rainbow but collisions allowed.
    Edges,
}

impl Palette {
    fn size(self, m: usize) -> u32 {
        match self {
            Palette::Fixed(k) => k.max(1),
            Palette::HalfEdges => ((m / 2) as u32).max(1),
            Palette::Edges => (m as u32).max(1),
        }
    }
}

/// Instance distributions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphModel {
    /// Independent edges with this probability, colors uniform from the
    /// palette.
    Er { edge_prob: f64, palette: Palette },
    /// K_n with a proper edge coloring (round-robin schedule).
    ProperComplete,
    /// K_n with all edges distinctly colored.
    RainbowComplete,
}

/// The model lineup used by the seeded suites: nine Erdős–Rényi
/// combinations plus the two complete-graph colorings.
pub fn suite_models() -> Vec<GraphModel> {
    let mut models = Vec::new();
    for &edge_prob in &[0.3, 0.5, 0.8] {
        for &palette in &[Palette::Fixed(2), Palette::HalfEdges, Palette::Edges] {
            models.push(GraphModel::Er { edge_prob, palette });
        }
    }
    models.push(GraphModel::ProperComplete);
    models.push(GraphModel::RainbowComplete);
    models
}

/// Samples an Erdős–Rényi edge set and colors it uniformly from the palette.
pub fn er_graph(
    n: usize,
    edge_prob: f64,
    palette: Palette,
    rng: &mut impl Rng,
) -> EdgeColoredGraph {
    let mut pairs = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(edge_prob) {
                pairs.push((u, v));
            }
        }
    }
    let k = palette.size(pairs.len());
    let edges: Vec<(u32, u32, u32)> = pairs
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen_range(0..k)))
        .collect();
    EdgeColoredGraph::new(n, &edges).expect("distinct pairs, no loops")
}

/// K_n with a proper edge coloring. Odd n: color(i,j) = (i+j) mod n.
/// Even n: the odd scheme on the first n-1 vertices, with edge {i, n-1}
/// colored (2i) mod (n-1).
pub fn proper_complete(n: usize) -> EdgeColoredGraph {
    assert!(n >= 1, "need at least one vertex");
    let mut edges = Vec::new();
    if n % 2 == 1 {
        for i in 0..n as u32 {
            for j in i + 1..n as u32 {
                edges.push((i, j, (i + j) % n as u32));
            }
        }
    } else {
        let r = (n - 1) as u32;
        for i in 0..r {
            for j in i + 1..r {
                edges.push((i, j, (i + j) % r));
            }
            edges.push((i, r, (2 * i) % r));
        }
    }
    let g = EdgeColoredGraph::new(n, &edges).expect("K_n is simple");
    debug_assert!(g.is_properly_colored());
    g
}

/// K_n with all-distinct edge colors.
pub fn rainbow_complete(n: usize) -> EdgeColoredGraph {
    let mut edges = Vec::new();
    let mut c = 0;
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            edges.push((i, j, c));
            c += 1;
        }
    }
    EdgeColoredGraph::new(n, &edges).expect("K_n is simple")
}

/// Draws one instance of the given model.
pub fn generate(model: GraphModel, n: usize, rng: &mut impl Rng) -> EdgeColoredGraph {
    match model {
        GraphModel::Er { edge_prob, palette } => er_graph(n, edge_prob, palette, rng),
        GraphModel::ProperComplete => proper_complete(n),
        GraphModel::RainbowComplete => rainbow_complete(n),
    }
}

/// Bipartite digraph with independent arcs: each ordered cross pair is
/// present with probability `arc_prob` (digons allowed).
pub fn random_digraph(a_size: usize, b_size: usize, arc_prob: f64, rng: &mut impl Rng) -> Digraph {
    let mut arcs = Vec::new();
    for a in 0..a_size as u32 {
        for b in a_size as u32..(a_size + b_size) as u32 {
            if rng.gen_bool(arc_prob) {
                arcs.push((a, b));
            }
            if rng.gen_bool(arc_prob) {
                arcs.push((b, a));
            }
        }
    }
    Digraph::new(a_size, b_size, &arcs).expect("cross pairs, no duplicates")
}

/// Digon-free bipartite orientation with out-degrees concentrated at the
/// one-third boundary: every vertex aims for an out-degree in
/// [⌊part/3⌋, ⌈part/3⌉+1], where `part` is the opposite side's size. A-side
/// targets are drawn first; each B vertex then picks from the A vertices
/// not already pointing at it.
pub fn boundary_orientation(a_size: usize, b_size: usize, rng: &mut impl Rng) -> Digraph {
    let degree_range =
        |part: usize| -> (usize, usize) { (part / 3, (part.div_ceil(3) + 1).min(part)) };
    let mut arcs = Vec::new();
    let mut hit_by: Vec<Vec<u32>> = vec![Vec::new(); b_size];
    let b_ids: Vec<u32> = (a_size as u32..(a_size + b_size) as u32).collect();
    for a in 0..a_size as u32 {
        let (lo, hi) = degree_range(b_size);
        let d = rng.gen_range(lo..=hi);
        let mut targets = b_ids.clone();
        targets.shuffle(rng);
        for &b in &targets[..d] {
            arcs.push((a, b));
            hit_by[(b as usize) - a_size].push(a);
        }
    }
    for (i, &b) in b_ids.iter().enumerate() {
        let pool: Vec<u32> = (0..a_size as u32)
            .filter(|a| !hit_by[i].contains(a))
            .collect();
        let (lo, hi) = degree_range(a_size);
        let d = rng.gen_range(lo..=hi).min(pool.len());
        let mut targets = pool;
        targets.shuffle(rng);
        for &a in &targets[..d] {
            arcs.push((b, a));
        }
    }
    Digraph::new(a_size, b_size, &arcs).expect("cross pairs, no duplicates")
}
