#![allow(dead_code)]

use proptest::prelude::*;
use solgroup::graph::{Color, ColoredGraph, VertexLabel};
use solgroup::{F2Matrix, LinSystem};

pub fn cycle(n: usize) -> ColoredGraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    ColoredGraph::from_edges(n, &edges).unwrap()
}

pub fn path(n: usize) -> ColoredGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    ColoredGraph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> ColoredGraph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    ColoredGraph::from_edges(n, &edges).unwrap()
}

pub fn matrix(rows: &[&str]) -> F2Matrix {
    let bits: Vec<Vec<bool>> = rows.iter().map(|r| r.bytes().map(|b| b == b'1').collect()).collect();
    F2Matrix::from_rows(&bits).unwrap()
}

/// Colored graph with up to `max_n` vertices and up to `max_colors` colors.
pub fn arb_graph(max_n: usize, max_colors: i64) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(0..max_colors, n),
            prop::collection::vec(any::<bool>(), pairs),
        )
            .prop_map(move |(colors, edges)| {
                let mut g = ColoredGraph::new();
                for (v, c) in colors.iter().enumerate() {
                    g.add_vertex(Color(*c, 0), VertexLabel::Plain(v));
                }
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if edges[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
    })
}

pub fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = F2Matrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), c), r).prop_map(move |rows| {
            if rows.is_empty() {
                F2Matrix::zeros(0, c)
            } else {
                F2Matrix::from_rows(&rows).unwrap()
            }
        })
    })
}

/// Systems whose rows all have at least one variable.
pub fn arb_system(max_rows: usize, max_cols: usize) -> impl Strategy<Value = LinSystem> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(prop::collection::vec(any::<bool>(), c), r),
            prop::collection::vec(any::<bool>(), r),
            prop::collection::vec(0..c, r),
        )
            .prop_map(|(mut rows, b, forced)| {
                for (row, &f) in rows.iter_mut().zip(&forced) {
                    row[f] = true;
                }
                LinSystem::new(F2Matrix::from_rows(&rows).unwrap(), b).unwrap()
            })
    })
}
