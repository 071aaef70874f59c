//! Seeded random inputs for property checks. Same seed, same corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::f2::{F2Matrix, LinSystem};
use crate::graph::{Color, ColoredGraph, VertexLabel};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with each vertex colored uniformly from `colors` colors
/// `(0,0), …, (colors-1, 0)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, colors: usize) -> ColoredGraph {
    let mut g = ColoredGraph::new();
    for v in 0..n {
        let c = rng.gen_range(0..colors.max(1)) as i64;
        g.add_vertex(Color(c, 0), VertexLabel::Plain(v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// A uniformly random labeled tree (random attachment order, then a random
/// relabeling).
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> ColoredGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent, order[i]));
    }
    ColoredGraph::from_edges(n, &edges).expect("a tree is simple")
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> F2Matrix {
    let data: Vec<Vec<bool>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_bool(0.5)).collect())
        .collect();
    if rows == 0 {
        return F2Matrix::zeros(0, cols);
    }
    F2Matrix::from_rows(&data).expect("rows have equal length")
}

/// A random system with a nonzero right-hand side.
pub fn random_inhomogeneous<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> LinSystem {
    let m = random_matrix(rng, rows.max(1), cols);
    let mut b: Vec<bool> = (0..m.rows()).map(|_| rng.gen_bool(0.5)).collect();
    if !b.contains(&true) {
        let k = rng.gen_range(0..b.len());
        b[k] = true;
    }
    LinSystem::new(m, b).expect("lengths agree")
}
