//! Decoloring: replace vertex colors by pendant paths of color-dependent
//! length, so that the uncolored result keeps the same symmetries.
//!
//! The steps are exposed individually. [`decolor`] chains them.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::f2::LinSystem;
use crate::graph::{build_g, Color, ColoredGraph, VertexLabel};

/// Bookkeeping for one decoloring run. Vertex ids refer to the input graph
/// (`removed_vertices`, `embedding` keys) or the output graph (everything
/// else).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecolorTrace {
    /// Original color ↦ index in `1..=k`.
    pub color_normalization: BTreeMap<Color, usize>,
    pub removed_vertices: Vec<usize>,
    /// `(vertex the leaf hangs off, leaf)`, both output ids.
    pub added_leaves: Vec<(usize, usize)>,
    /// Color index `c` ↦ the `c + 2` gadget vertices, head first.
    pub gadget_paths: BTreeMap<usize, Vec<usize>>,
    /// Input vertex ↦ output vertex, `None` if removed.
    pub embedding: Vec<Option<usize>>,
}

impl DecolorTrace {
    /// Output vertices that came from the input graph.
    pub fn inner_vertices(&self) -> Vec<usize> {
        self.embedding.iter().flatten().copied().collect()
    }

    /// Output vertices that belong to a gadget path.
    pub fn outer_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.gadget_paths.values().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Renumbers colors to `(1,0), …, (k,0)`. Colors are ordered by second then
/// first coordinate, so variable colors `(i,0)` precede equation colors
/// `(k,1)`.
pub fn normalize_colors(g: &ColoredGraph) -> (ColoredGraph, BTreeMap<Color, usize>) {
    let mut distinct: Vec<Color> = g.colors().to_vec();
    distinct.sort_by_key(|c| (c.1, c.0));
    distinct.dedup();
    let map: BTreeMap<Color, usize> = distinct
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i + 1))
        .collect();
    let mut out = g.clone();
    for v in 0..g.vertex_count() {
        out.set_color(v, Color(map[&g.color(v)] as i64, 0));
    }
    (out, map)
}

fn class_sizes(g: &ColoredGraph) -> BTreeMap<Color, usize> {
    let mut sizes = BTreeMap::new();
    for &c in g.colors() {
        *sizes.entry(c).or_insert(0) += 1;
    }
    sizes
}

/// Drops isolated vertices whose color occurs once. Returns the smaller
/// graph and, per input vertex, its new id.
pub fn remove_isolated_unique(g: &ColoredGraph) -> (ColoredGraph, Vec<Option<usize>>) {
    let sizes = class_sizes(g);
    let keep: Vec<bool> = (0..g.vertex_count())
        .map(|v| !(g.degree(v) == 0 && sizes[&g.color(v)] == 1))
        .collect();
    let mut out = ColoredGraph::new();
    let mut map = vec![None; g.vertex_count()];
    for v in (0..g.vertex_count()).filter(|&v| keep[v]) {
        map[v] = Some(out.add_vertex(g.color(v), g.label(v).clone()));
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (map[u], map[v]) {
            out.add_edge(a, b).expect("subgraph of a simple graph");
        }
    }
    (out, map)
}

/// Hangs a same-colored leaf off every vertex whose color occurs once.
pub fn attach_leaves(g: &ColoredGraph) -> (ColoredGraph, Vec<(usize, usize)>) {
    let sizes = class_sizes(g);
    let mut out = g.clone();
    let mut added = Vec::new();
    for v in 0..g.vertex_count() {
        if sizes[&g.color(v)] == 1 {
            let leaf = out.add_vertex(
                g.color(v),
                VertexLabel::Leaf {
                    of: Box::new(g.label(v).clone()),
                },
            );
            out.add_edge(v, leaf).expect("fresh vertex");
            added.push((v, leaf));
        }
    }
    (out, added)
}

/// For every color `(c,0)` present, adds a path of `c + 2` vertices colored
/// `(c,1), …, (c,c+2)` whose head is joined to the whole class.
pub fn add_gadgets(g: &ColoredGraph) -> (ColoredGraph, BTreeMap<usize, Vec<usize>>) {
    let classes = g.color_classes();
    let mut out = g.clone();
    let mut paths = BTreeMap::new();
    for (color, members) in classes {
        let c = color.0 as usize;
        let path: Vec<usize> = (1..=c + 2)
            .map(|j| out.add_vertex(Color(c as i64, j as i64), VertexLabel::Gadget { color: c, pos: j }))
            .collect();
        for w in path.windows(2) {
            out.add_edge(w[0], w[1]).expect("fresh path");
        }
        for &v in &members {
            out.add_edge(path[0], v).expect("fresh head");
        }
        paths.insert(c, path);
    }
    (out, paths)
}

/// All steps except forgetting the colors: the intermediate graph in which
/// inner vertices carry `(c,0)` and gadget vertices `(c,j)`.
pub fn decolor_colored(g: &ColoredGraph) -> (ColoredGraph, DecolorTrace) {
    let (g1, color_normalization) = normalize_colors(g);
    let (g2, embedding) = remove_isolated_unique(&g1);
    let removed_vertices = embedding
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_none())
        .map(|(v, _)| v)
        .collect();
    let (g3, added_leaves) = attach_leaves(&g2);
    let (g4, gadget_paths) = add_gadgets(&g3);
    let trace = DecolorTrace {
        color_normalization,
        removed_vertices,
        added_leaves,
        gadget_paths,
        embedding,
    };
    (g4, trace)
}

/// The decoloring of `g`: a monochromatic graph plus the trace.
pub fn decolor(g: &ColoredGraph) -> (ColoredGraph, DecolorTrace) {
    let (colored, trace) = decolor_colored(g);
    (colored.uncolored(), trace)
}

/// Homogenize, build the colored system graph, decolor.
pub fn pipeline_uncolored(sys: &LinSystem) -> Result<ColoredGraph> {
    Ok(pipeline_with_trace(sys)?.0)
}

/// Like [`pipeline_uncolored`] but keeps the colored graph and the trace.
pub fn pipeline_with_trace(sys: &LinSystem) -> Result<(ColoredGraph, DecolorTrace, ColoredGraph)> {
    let colored = build_g(&sys.homogenize())?;
    let (g, trace) = decolor(&colored);
    Ok((g, trace, colored))
}

/// Number of vertices [`decolor`] will produce, without building it.
pub fn decolored_size(g: &ColoredGraph) -> usize {
    let sizes = class_sizes(g);
    let removed = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 0 && sizes[&g.color(v)] == 1)
        .count();
    let mut remaining = sizes.clone();
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 && sizes[&g.color(v)] == 1 {
            remaining.remove(&g.color(v));
        }
    }
    let leaves = remaining.values().filter(|&&s| s == 1).count();
    let k: BTreeMap<Color, usize> = {
        let mut d: Vec<Color> = sizes.keys().copied().collect();
        d.sort_by_key(|c| (c.1, c.0));
        d.into_iter().enumerate().map(|(i, c)| (c, i + 1)).collect()
    };
    let gadgets: usize = remaining.keys().map(|c| k[c] + 2).sum();
    g.vertex_count() - removed + leaves + gadgets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::F2Matrix;

    fn cycle(n: usize) -> ColoredGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn two_isolated_unique_vanish() {
        let mut g = ColoredGraph::new();
        g.add_vertex(Color(1, 0), VertexLabel::Plain(0));
        g.add_vertex(Color(2, 0), VertexLabel::Plain(1));
        let (out, trace) = decolor(&g);
        assert_eq!(out.vertex_count(), 0);
        assert_eq!(trace.removed_vertices, vec![0, 1]);
        assert!(trace.gadget_paths.is_empty());
    }

    #[test]
    fn c4_gets_one_gadget() {
        let (out, trace) = decolor(&cycle(4));
        assert_eq!(out.vertex_count(), 7);
        assert_eq!(out.edge_count(), 4 + 2 + 4);
        assert!(out.is_monochromatic());
        let path = &trace.gadget_paths[&1];
        assert_eq!(path.len(), 3);
        assert_eq!(out.neighbors(path[0]), &[0, 1, 2, 3, path[1]]);
        assert_eq!(decolored_size(&cycle(4)), 7);
    }

    #[test]
    fn unique_color_gets_leaf() {
        // an edge between two distinct colors: both unique, neither isolated
        let mut g = ColoredGraph::new();
        g.add_vertex(Color(5, 0), VertexLabel::Plain(0));
        g.add_vertex(Color(3, 1), VertexLabel::Plain(1));
        g.add_edge(0, 1).unwrap();
        let (out, trace) = decolor_colored(&g);
        assert_eq!(trace.color_normalization[&Color(5, 0)], 1);
        assert_eq!(trace.color_normalization[&Color(3, 1)], 2);
        assert_eq!(trace.added_leaves, vec![(0, 2), (1, 3)]);
        assert_eq!(out.color(2), Color(1, 0));
        // 4 inner + 3 + 4 gadget vertices
        assert_eq!(out.vertex_count(), 11);
        assert_eq!(decolored_size(&g), 11);
    }

    #[test]
    fn gadget_path_is_induced() {
        let g = build_g(&LinSystem::homogeneous(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap())).unwrap();
        let (out, trace) = decolor(&g);
        // colors (1,0),(2,0),(3,0) then (1,1): 3+4+5+3 gadget vertices
        assert_eq!(out.vertex_count(), 10 + 3 + 4 + 5 + 6);
        for (&c, path) in &trace.gadget_paths {
            assert_eq!(path.len(), c + 2);
            for (i, &v) in path.iter().enumerate().skip(1) {
                let expect = if i + 1 < path.len() { 2 } else { 1 };
                assert_eq!(out.degree(v), expect);
            }
        }
    }

    #[test]
    fn pipeline_homogenizes_first() {
        let sys = LinSystem::new(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap(), vec![true]).unwrap();
        let (_, trace, colored) = pipeline_with_trace(&sys).unwrap();
        assert_eq!(colored.vertex_count(), 2 * 5 + 8 + 2);
        assert_eq!(trace.color_normalization.len(), 7);
    }
}
