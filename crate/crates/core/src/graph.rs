//! Vertex-colored simple graphs and the builders for every graph family
//! used by the toolkit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::LinSystem;
use crate::group::FiniteGroup;

/// A vertex color: a pair of integers, e.g. `(i, 0)` for variable `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub i64, pub i64);

impl Color {
    pub const PLAIN: Color = Color(0, 0);
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A sign function on a sorted variable set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    support: Vec<usize>,
    signs: Vec<i8>,
}

impl Assignment {
    pub fn new(support: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if support.len() != signs.len() {
            return Err(Error::input("support and signs differ in length"));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("assignment support must be strictly increasing"));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::input("signs must be +1 or -1"));
        }
        Ok(Assignment { support, signs })
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The sign assigned to variable `i`, if it is in the support.
    pub fn value(&self, i: usize) -> Option<i8> {
        self.support
            .binary_search(&i)
            .ok()
            .map(|pos| self.signs[pos])
    }

    /// Product of all signs.
    pub fn parity(&self) -> i8 {
        self.signs.iter().product()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .support
            .iter()
            .zip(&self.signs)
            .map(|(i, s)| format!("{}{}", i + 1, if *s > 0 { '+' } else { '-' }))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All sign functions on `support` with product `+1` (parity 0) or `-1`
/// (parity 1), in lexicographic order with `+1` before `-1`.
pub fn enumerate_assignments(support: &[usize], parity: u8) -> Result<Vec<Assignment>> {
    if support.is_empty() {
        return Err(Error::input("assignment support must be nonempty"));
    }
    if support.len() > 30 {
        return Err(Error::Size {
            what: "assignment support",
            limit: 30,
            actual: support.len(),
        });
    }
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let k = sorted.len();
    let want = if parity & 1 == 0 { 1 } else { -1 };
    Ok((0u32..(1 << k))
        .map(|bits| {
            // most significant bit is the first variable
            let signs = (0..k)
                .map(|p| if (bits >> (k - 1 - p)) & 1 == 1 { -1 } else { 1 })
                .collect();
            Assignment {
                support: sorted.clone(),
                signs,
            }
        })
        .filter(|a| a.parity() == want)
        .collect())
}

/// `α △ β`: the pointwise product on the common support.
pub fn triangle(a: &Assignment, b: &Assignment) -> Result<Assignment> {
    let mut support = Vec::new();
    let mut signs = Vec::new();
    for (pos, &i) in a.support.iter().enumerate() {
        if let Some(s) = b.value(i) {
            support.push(i);
            signs.push(a.signs[pos] * s);
        }
    }
    if support.is_empty() {
        return Err(Error::input("assignments have disjoint supports"));
    }
    Ok(Assignment { support, signs })
}

/// Where a vertex came from. Indices are 0-based internally and printed
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// Variable vertex `(i, s)`.
    Variable { var: usize, sign: i8 },
    /// Equation vertex `(k, α)`.
    Equation { eq: usize, assignment: Assignment },
    /// Gadget path vertex `x_(c, pos)`.
    Gadget { color: usize, pos: usize },
    /// Leaf attached to a uniquely colored vertex.
    Leaf { of: Box<VertexLabel> },
    /// Kneser vertex.
    Subset(Vec<usize>),
    FruchtP(usize),
    FruchtQ(usize, usize, usize),
    FruchtR(usize, usize, usize),
    /// Vertex of component `component` in a disjoint union.
    Tagged {
        component: usize,
        inner: Box<VertexLabel>,
    },
    Plain(usize),
    /// Label read back from a file.
    Text(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Variable { var, sign } => {
                write!(f, "x{}{}", var + 1, if *sign > 0 { '+' } else { '-' })
            }
            VertexLabel::Equation { eq, assignment } => write!(f, "e{}{}", eq + 1, assignment),
            VertexLabel::Gadget { color, pos } => write!(f, "gadget({},{})", color, pos),
            VertexLabel::Leaf { of } => write!(f, "leaf[{of}]"),
            VertexLabel::Subset(s) => {
                let pts: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
                write!(f, "{{{}}}", pts.join(","))
            }
            VertexLabel::FruchtP(i) => write!(f, "p{}", i + 1),
            VertexLabel::FruchtQ(i, j, k) => write!(f, "q{},{},{}", i + 1, j + 1, k),
            VertexLabel::FruchtR(i, j, l) => write!(f, "r{},{},{}", i + 1, j + 1, l),
            VertexLabel::Tagged { component, inner } => write!(f, "{component}:{inner}"),
            VertexLabel::Plain(v) => write!(f, "v{v}"),
            VertexLabel::Text(s) => f.write_str(s),
        }
    }
}

/// An undirected simple graph with vertex colors, structured vertex labels,
/// and optional edge colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    colors: Vec<Color>,
    labels: Vec<VertexLabel>,
    adj: Vec<Vec<usize>>,
    edge_colors: Option<BTreeMap<(usize, usize), Assignment>>,
}

impl Default for ColoredGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl ColoredGraph {
    pub fn new() -> Self {
        ColoredGraph {
            colors: Vec::new(),
            labels: Vec::new(),
            adj: Vec::new(),
            edge_colors: None,
        }
    }

    /// An uncolored graph on `n` vertices with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(Color::PLAIN, VertexLabel::Plain(v));
        }
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, color: Color, label: VertexLabel) -> usize {
        self.colors.push(color);
        self.labels.push(label);
        self.adj.push(Vec::new());
        self.colors.len() - 1
    }

    /// Adds the edge `{u, v}`; loops and duplicates are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::input(format!("edge ({u},{v}) references a missing vertex")));
        }
        if u == v {
            return Err(Error::input(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::input(format!("duplicate edge ({u},{v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn edge_colors(&self) -> Option<&BTreeMap<(usize, usize), Assignment>> {
        self.edge_colors.as_ref()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Vertices grouped by color, colors ascending.
    pub fn color_classes(&self) -> BTreeMap<Color, Vec<usize>> {
        let mut classes: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        classes
    }

    pub fn is_monochromatic(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] == w[1])
    }

    /// Replaces the edge colors; every key must be an edge `(u, v)` with
    /// `u < v`.
    pub fn set_edge_colors(&mut self, colors: Option<BTreeMap<(usize, usize), Assignment>>) -> Result<()> {
        if let Some(map) = &colors {
            if let Some(&(u, v)) = map.keys().find(|&&(u, v)| u >= v || v >= self.vertex_count() || !self.has_edge(u, v)) {
                return Err(Error::input(format!("edge color on non-edge ({u},{v})")));
            }
        }
        self.edge_colors = colors;
        Ok(())
    }

    pub fn set_color(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
    }

    /// A copy with every vertex recolored `Color::PLAIN`.
    pub fn uncolored(&self) -> ColoredGraph {
        let mut g = self.clone();
        g.colors.iter_mut().for_each(|c| *c = Color::PLAIN);
        g.edge_colors = None;
        g
    }

    /// Whether `images` (vertex `v` ↦ `images[v]`) is a color-preserving
    /// automorphism.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        let n = self.vertex_count();
        if images.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        (0..n).all(|v| {
            self.colors[v] == self.colors[images[v]]
                && self.adj[v].len() == self.adj[images[v]].len()
                && self.adj[v]
                    .iter()
                    .all(|&w| self.has_edge(images[v], images[w]))
        })
    }

    /// The graph with vertex `v` renamed to `images[v]`.
    pub fn permuted(&self, images: &[usize]) -> ColoredGraph {
        let n = self.vertex_count();
        let mut inv = vec![0; n];
        for (v, &x) in images.iter().enumerate() {
            inv[x] = v;
        }
        let mut g = ColoredGraph::new();
        for &old in &inv {
            g.add_vertex(self.colors[old], self.labels[old].clone());
        }
        for (u, v) in self.edges() {
            g.add_edge(images[u], images[v]).expect("permutation preserves simplicity");
        }
        g
    }
}

fn check_rows_nonempty(sys: &LinSystem) -> Result<()> {
    if let Some(k) = (0..sys.rows()).find(|&k| sys.matrix().row_weight(k) == 0) {
        return Err(Error::input(format!(
            "equation {} has empty support",
            k + 1
        )));
    }
    Ok(())
}

/// The vertex-colored graph of a linear system: two vertices `(i, ±1)` per
/// variable in color `(i, 0)`, one vertex per satisfying local assignment of
/// each equation in color `(k, 1)`, and edges where the two agree.
pub fn build_g(sys: &LinSystem) -> Result<ColoredGraph> {
    check_rows_nonempty(sys)?;
    let mut g = ColoredGraph::new();
    for i in 0..sys.cols() {
        for sign in [1, -1] {
            g.add_vertex(
                Color(i as i64 + 1, 0),
                VertexLabel::Variable { var: i, sign },
            );
        }
    }
    let var_vertex = |i: usize, s: i8| 2 * i + usize::from(s < 0);
    for k in 0..sys.rows() {
        let parity = u8::from(sys.rhs()[k]);
        for a in enumerate_assignments(&sys.support(k), parity)? {
            let v = g.add_vertex(
                Color(k as i64 + 1, 1),
                VertexLabel::Equation {
                    eq: k,
                    assignment: a.clone(),
                },
            );
            for (&i, &s) in a.support().iter().zip(a.signs()) {
                g.add_edge(v, var_vertex(i, s))?;
            }
        }
    }
    Ok(g)
}

/// The equation-only graph: one clique per equation, complete joins between
/// equations sharing a variable, and edge colors `α △ β`.
pub fn build_ghat(sys: &LinSystem) -> Result<ColoredGraph> {
    check_rows_nonempty(sys)?;
    if let Some(i) = (0..sys.cols()).find(|&i| sys.occurrences(i).is_empty()) {
        return Err(Error::input(format!(
            "variable {} appears in no equation",
            i + 1
        )));
    }
    let mut g = ColoredGraph::new();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(sys.rows());
    for k in 0..sys.rows() {
        let parity = u8::from(sys.rhs()[k]);
        let ids = enumerate_assignments(&sys.support(k), parity)?
            .into_iter()
            .map(|a| {
                g.add_vertex(
                    Color(k as i64 + 1, 0),
                    VertexLabel::Equation { eq: k, assignment: a },
                )
            })
            .collect();
        blocks.push(ids);
    }
    let supports: Vec<BTreeSet<usize>> = (0..sys.rows())
        .map(|k| sys.support(k).into_iter().collect())
        .collect();
    let mut edge_colors = BTreeMap::new();
    for l in 0..sys.rows() {
        for k in l..sys.rows() {
            if supports[l].is_disjoint(&supports[k]) {
                continue;
            }
            for &u in &blocks[l] {
                for &v in &blocks[k] {
                    if u >= v {
                        continue;
                    }
                    g.add_edge(u, v)?;
                    let (VertexLabel::Equation { assignment: a, .. }, VertexLabel::Equation { assignment: b, .. }) =
                        (&g.labels[u], &g.labels[v])
                    else {
                        unreachable!("equation vertices only");
                    };
                    edge_colors.insert((u, v), triangle(a, b)?);
                }
            }
        }
    }
    g.edge_colors = Some(edge_colors);
    Ok(g)
}

/// `ℓ`-subsets of `[n]` in lexicographic order.
fn subsets(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..l).collect();
    if l > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..l).rev().find(|&i| cur[i] < n - l + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..l {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Kneser graph `K(n, ℓ)`: `ℓ`-subsets of `[n]`, adjacent when disjoint.
pub fn kneser(n: usize, l: usize) -> Result<ColoredGraph> {
    if l == 0 || l > n {
        return Err(Error::input(format!(
            "Kneser parameters need 1 <= l <= n, got n={n} l={l}"
        )));
    }
    let sets = subsets(n, l);
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let mut g = ColoredGraph::new();
    for s in &sets {
        g.add_vertex(Color::PLAIN, VertexLabel::Subset(s.clone()));
    }
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if masks[a] & masks[b] == 0 {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// `(n, k, λ, μ)` if the graph is strongly regular: `k`-regular, adjacent
/// pairs share `λ` neighbors, non-adjacent pairs share `μ`. Complete and
/// empty graphs report `None` for the missing parameter.
pub fn srg_parameters(g: &ColoredGraph) -> Option<(usize, usize, Option<usize>, Option<usize>)> {
    let n = g.vertex_count();
    let k = if n == 0 { 0 } else { g.degree(0) };
    if (0..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).iter().filter(|w| g.has_edge(v, **w)).count();
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda, mu))
}

/// Vertex ids of one Frucht graph, for mapping group elements onto it.
#[derive(Debug, Clone)]
pub struct FruchtLayout {
    /// `p[i]` is the vertex of group element `i`.
    pub p: Vec<usize>,
    /// `chains[(i, j)] = (q chain, r chain)` for `i ≠ j`.
    pub chains: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)>,
}

/// `m(i, j) = 1 + index of g_i g_j⁻¹`, so `m ≥ 2` and equal exactly on equal
/// quotients.
pub fn frucht_multiplicity(g: &FiniteGroup, i: usize, j: usize) -> usize {
    1 + g.mul(i, g.inv(j))
}

/// The Frucht graph of a group: a hub `p_i` per element and, per ordered
/// pair, two hanging chains whose lengths encode `g_i g_j⁻¹`.
pub fn frucht_graph(g: &FiniteGroup) -> ColoredGraph {
    frucht_graph_with_layout(g).0
}

pub fn frucht_graph_with_layout(g: &FiniteGroup) -> (ColoredGraph, FruchtLayout) {
    let n = g.order();
    let mut graph = ColoredGraph::new();
    let p: Vec<usize> = (0..n)
        .map(|i| graph.add_vertex(Color::PLAIN, VertexLabel::FruchtP(i)))
        .collect();
    let mut chains = BTreeMap::new();
    if n <= 2 {
        if n == 2 {
            graph.add_edge(p[0], p[1]).expect("fresh vertices");
        }
        return (graph, FruchtLayout { p, chains });
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = frucht_multiplicity(g, i, j);
            let q: Vec<usize> = (1..=2 * m - 2)
                .map(|k| graph.add_vertex(Color::PLAIN, VertexLabel::FruchtQ(i, j, k)))
                .collect();
            let r: Vec<usize> = (1..=2 * m - 1)
                .map(|l| graph.add_vertex(Color::PLAIN, VertexLabel::FruchtR(i, j, l)))
                .collect();
            let mut edges = vec![(p[i], q[0]), (p[j], r[0]), (q[0], r[0])];
            edges.extend(q.windows(2).map(|w| (w[0], w[1])));
            edges.extend(r.windows(2).map(|w| (w[0], w[1])));
            for (a, b) in edges {
                graph.add_edge(a, b).expect("chains are simple");
            }
            chains.insert((i, j), (q, r));
        }
    }
    (graph, FruchtLayout { p, chains })
}

/// Vertex-disjoint union; `a`'s vertices keep their ids, `b`'s are shifted.
pub fn disjoint_union(a: &ColoredGraph, b: &ColoredGraph) -> ColoredGraph {
    let mut g = ColoredGraph::new();
    for (tag, part) in [(0, a), (1, b)] {
        for v in 0..part.vertex_count() {
            g.add_vertex(
                part.colors[v],
                VertexLabel::Tagged {
                    component: tag,
                    inner: Box::new(part.labels[v].clone()),
                },
            );
        }
    }
    let off = a.vertex_count();
    for (u, v) in a.edges() {
        g.add_edge(u, v).expect("disjoint copy");
    }
    for (u, v) in b.edges() {
        g.add_edge(u + off, v + off).expect("disjoint copy");
    }
    if let (Some(ea), Some(eb)) = (&a.edge_colors, &b.edge_colors) {
        let mut merged = ea.clone();
        merged.extend(eb.iter().map(|(&(u, v), c)| ((u + off, v + off), c.clone())));
        g.edge_colors = Some(merged);
    }
    g
}

/// Adds an isolated vertex in a color not used elsewhere.
pub fn add_isolated(g: &ColoredGraph, color: Color) -> Result<ColoredGraph> {
    if g.colors.contains(&color) {
        return Err(Error::input(format!(
            "add_isolated: color {color} already occurs"
        )));
    }
    let mut out = g.clone();
    out.add_vertex(color, VertexLabel::Plain(g.vertex_count()));
    Ok(out)
}

/// Joins every vertex colored in `s_colors` to every vertex colored in
/// `t_colors`.
pub fn join_classes(g: &ColoredGraph, s_colors: &[Color], t_colors: &[Color]) -> Result<ColoredGraph> {
    let s_set: BTreeSet<Color> = s_colors.iter().copied().collect();
    let t_set: BTreeSet<Color> = t_colors.iter().copied().collect();
    if !s_set.is_disjoint(&t_set) {
        return Err(Error::input("join_classes: S and T must be disjoint"));
    }
    let pick = |set: &BTreeSet<Color>| -> Vec<usize> {
        (0..g.vertex_count())
            .filter(|&v| set.contains(&g.colors[v]))
            .collect()
    };
    let (s, t) = (pick(&s_set), pick(&t_set));
    let union: Vec<usize> = s.iter().chain(&t).copied().collect();
    for (a, &u) in union.iter().enumerate() {
        if union[a + 1..].iter().any(|&v| g.has_edge(u, v)) {
            return Err(Error::input(
                "join_classes: S ∪ T must be an independent set",
            ));
        }
    }
    let mut out = g.clone();
    for &u in &s {
        for &v in &t {
            out.add_edge(u, v)?;
        }
    }
    Ok(out)
}

/// Recolors a monochromatic vertex set that is a union of stable
/// refinement classes with a fresh color.
pub fn recolor_class(g: &ColoredGraph, class: &[usize], fresh: Color) -> Result<ColoredGraph> {
    let Some(&first) = class.first() else {
        return Err(Error::input("recolor_class: empty vertex set"));
    };
    if class.iter().any(|&v| v >= g.vertex_count()) {
        return Err(Error::input("recolor_class: vertex out of range"));
    }
    if class.iter().any(|&v| g.colors[v] != g.colors[first]) {
        return Err(Error::input("recolor_class: set is not monochromatic"));
    }
    if g.colors.contains(&fresh) {
        return Err(Error::input(format!(
            "recolor_class: color {fresh} already occurs"
        )));
    }
    let members: BTreeSet<usize> = class.iter().copied().collect();
    let stable = crate::refine::stable_refinement(g);
    for c in &stable.classes {
        let inside = c.iter().filter(|v| members.contains(v)).count();
        if inside != 0 && inside != c.len() {
            return Err(Error::input(
                "recolor_class: set is not a union of stable refinement classes",
            ));
        }
    }
    let mut out = g.clone();
    for &v in &members {
        out.colors[v] = fresh;
    }
    Ok(out)
}
