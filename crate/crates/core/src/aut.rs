//! Automorphism groups of colored graphs.
//!
//! [`automorphism_group`] is an individualization–refinement search: walk a
//! first path down to a discrete partition, then for each level look for
//! automorphisms that move the individualized vertex, pruning by refinement
//! traces and by the orbits of automorphisms already found. The group order
//! is the product of the orbit sizes along the first path, and is checked
//! against a Schreier–Sims recomputation from the generators.
//!
//! [`brute_automorphisms`] is the exhaustive oracle used in tests.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{frucht_graph_with_layout, ColoredGraph};
use crate::group::{FiniteGroup, Perm};
use crate::refine::{Csr, OrderedPartition, Scratch};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_BRUTE_WINDOW: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutOptions {
    /// Maximum number of search-tree nodes before giving up.
    pub node_budget: u64,
    /// Search sibling subtrees on the rayon pool. Results are identical to
    /// the sequential mode.
    pub parallel: bool,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutReport {
    pub generators: Vec<Perm>,
    pub order: BigUint,
    pub rigid: bool,
    pub node_count: u64,
    /// Vertices individualized along the first path.
    pub base: Vec<usize>,
    /// Orbit of each base point under the stabilizer of the earlier ones.
    pub orbit_sizes: Vec<usize>,
}

struct Level {
    part: OrderedPartition,
    cell: Vec<usize>,
    chosen: usize,
    trace: u64,
    cells: usize,
}

struct Search<'a> {
    g: &'a ColoredGraph,
    csr: Csr,
    levels: Vec<Level>,
    first_leaf: Vec<u32>,
}

/// Outcome of searching one subtree.
struct Probe {
    nodes: u64,
    found: Option<Vec<usize>>,
    aborted: bool,
}

impl Search<'_> {
    fn leaf_perm(&self, leaf: &[u32]) -> Vec<usize> {
        let mut images = vec![0; leaf.len()];
        for (a, b) in self.first_leaf.iter().zip(leaf) {
            images[*a as usize] = *b as usize;
        }
        images
    }

    /// Individualizes `w` in the level-`d` partition and looks for a leaf
    /// below it that is an automorphism image of the first leaf.
    fn probe(&self, d: usize, w: usize, limit: u64) -> Probe {
        let mut scratch = Scratch::new(self.g.vertex_count());
        let mut nodes = 0u64;
        let mut part = self.levels[d].part.clone();
        let found = self.descend(&mut part, d, w, &mut scratch, &mut nodes, limit);
        match found {
            Ok(found) => Probe { nodes, found, aborted: false },
            Err(()) => Probe { nodes, found: None, aborted: true },
        }
    }

    fn descend(
        &self,
        part: &mut OrderedPartition,
        d: usize,
        w: usize,
        scratch: &mut Scratch,
        nodes: &mut u64,
        limit: u64,
    ) -> Result<Option<Vec<usize>>, ()> {
        *nodes += 1;
        if *nodes > limit {
            return Err(());
        }
        let trace = part.individualize(w, &self.csr, scratch);
        let lvl = &self.levels[d];
        if trace != lvl.trace || part.cell_count() != lvl.cells {
            return Ok(None);
        }
        if part.is_discrete() {
            let images = self.leaf_perm(&part.elems);
            return Ok(self.g.is_automorphism(&images).then_some(images));
        }
        if d + 1 >= self.levels.len() {
            return Ok(None);
        }
        let (s, e) = part.target_cell().expect("not discrete");
        for u in part.cell_members(s, e) {
            let mut child = part.clone();
            if let Some(found) = self.descend(&mut child, d + 1, u, scratch, nodes, limit)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// The automorphism group with default options.
pub fn automorphism_group(g: &ColoredGraph) -> Result<AutReport> {
    automorphism_group_with(g, AutOptions::default())
}

pub fn automorphism_group_with(g: &ColoredGraph, opts: AutOptions) -> Result<AutReport> {
    let n = g.vertex_count();
    let limit = opts.node_budget;
    let csr = Csr::new(g);
    let mut scratch = Scratch::new(n);
    let mut part = OrderedPartition::from_colors(g);
    part.refine_all(&csr, &mut scratch);
    let mut used = 1u64;

    // first path
    let mut levels = Vec::new();
    while let Some((s, e)) = part.target_cell() {
        let cell = part.cell_members(s, e);
        let chosen = cell[0];
        let before = part.clone();
        let trace = part.individualize(chosen, &csr, &mut scratch);
        used += 1;
        if used > limit {
            return Err(Error::Budget { limit, explored: used, depth: levels.len() });
        }
        levels.push(Level { part: before, cell, chosen, trace, cells: part.cell_count() });
    }
    let search = Search { g, csr, first_leaf: part.elems.clone(), levels };

    let mut generators: Vec<Perm> = Vec::new();
    let mut uf = UnionFind((0..n).collect());
    let mut orbit_sizes = vec![1usize; search.levels.len()];
    for d in (0..search.levels.len()).rev() {
        let lvl = &search.levels[d];
        let candidates: Vec<usize> = lvl.cell.iter().copied().filter(|&w| w != lvl.chosen).collect();
        let mut precomputed: Option<Vec<Probe>> = opts.parallel.then(|| {
            let remaining = limit - used;
            candidates.par_iter().map(|&w| search.probe(d, w, remaining)).collect()
        });
        for (k, &w) in candidates.iter().enumerate() {
            if uf.find(w) == uf.find(lvl.chosen) {
                continue;
            }
            let probe = match precomputed.as_mut() {
                Some(all) => std::mem::replace(&mut all[k], Probe { nodes: 0, found: None, aborted: false }),
                None => search.probe(d, w, limit - used),
            };
            if probe.aborted || used + probe.nodes > limit {
                return Err(Error::Budget { limit, explored: limit + 1, depth: d });
            }
            used += probe.nodes;
            if let Some(images) = probe.found {
                for (v, &x) in images.iter().enumerate() {
                    uf.union(v, x);
                }
                generators.push(Perm::from_images(images).expect("automorphism is a permutation"));
            }
        }
        let root = uf.find(lvl.chosen);
        orbit_sizes[d] = lvl.cell.iter().filter(|&&w| uf.find(w) == root).count();
    }

    let order = orbit_sizes.iter().fold(BigUint::one(), |acc, &s| acc * s);
    Ok(AutReport {
        rigid: order.is_one(),
        generators,
        order,
        node_count: used,
        base: search.levels.iter().map(|l| l.chosen).collect(),
        orbit_sizes,
    })
}

/// Whether the colored graph has no nontrivial automorphism.
pub fn is_rigid(g: &ColoredGraph) -> Result<bool> {
    Ok(automorphism_group(g)?.rigid)
}

pub fn is_rigid_with(g: &ColoredGraph, opts: AutOptions) -> Result<bool> {
    Ok(automorphism_group_with(g, opts)?.rigid)
}

/// Exhaustive automorphism enumeration for graphs of at most
/// [`DEFAULT_BRUTE_WINDOW`] vertices.
pub fn brute_automorphisms(g: &ColoredGraph) -> Result<AutReport> {
    brute_automorphisms_within(g, DEFAULT_BRUTE_WINDOW)
}

/// Counts every color-preserving automorphism by backtracking over vertex
/// images. Only partial maps that respect colors, degrees and adjacency
/// among assigned vertices are extended.
pub fn brute_automorphisms_within(g: &ColoredGraph, window: usize) -> Result<AutReport> {
    let n = g.vertex_count();
    if n > window {
        return Err(Error::Size { what: "brute-force graph", limit: window, actual: n });
    }
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0u64;
    let mut nodes = 0u64;
    let mut generators: Vec<Perm> = Vec::new();
    let mut chain = StabChain::new(n, &[]);

    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &ColoredGraph,
        v: usize,
        images: &mut [usize],
        used: &mut [bool],
        count: &mut u64,
        nodes: &mut u64,
        generators: &mut Vec<Perm>,
        chain: &mut StabChain,
    ) {
        let n = g.vertex_count();
        *nodes += 1;
        if v == n {
            *count += 1;
            let p = Perm::from_images(images.to_vec()).expect("bijection");
            if !chain.contains(&p) {
                chain.extend_with(&p);
                generators.push(p);
            }
            return;
        }
        for x in 0..n {
            if used[x] || g.color(x) != g.color(v) || g.degree(x) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(images[u], x)) {
                continue;
            }
            images[v] = x;
            used[x] = true;
            go(g, v + 1, images, used, count, nodes, generators, chain);
            used[x] = false;
        }
        images[v] = usize::MAX;
    }

    go(g, 0, &mut images, &mut used, &mut count, &mut nodes, &mut generators, &mut chain);
    debug_assert_eq!(chain.order(), BigUint::from(count));
    let order = BigUint::from(count);
    Ok(AutReport {
        rigid: count == 1,
        base: chain.base(),
        orbit_sizes: chain.orbit_sizes(),
        generators,
        order,
        node_count: nodes,
    })
}

/// Order of the group generated by `generators` on `n` points.
pub fn group_order(n: usize, generators: &[Perm]) -> BigUint {
    StabChain::new(n, generators).order()
}

/// Recomputes a report's group order from its generators and checks every
/// generator is a color-preserving automorphism of `g`.
pub fn certify(g: &ColoredGraph, report: &AutReport) -> bool {
    report
        .generators
        .iter()
        .all(|p| g.is_automorphism(&p.images()))
        && group_order(g.vertex_count(), &report.generators) == report.order
}

struct ChainLevel {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[u]` maps `point` to `u`.
    transversal: HashMap<usize, Perm>,
}

/// A stabilizer chain built by the deterministic Schreier–Sims algorithm.
pub struct StabChain {
    n: usize,
    levels: Vec<ChainLevel>,
}

impl StabChain {
    pub fn new(n: usize, generators: &[Perm]) -> Self {
        let mut chain = StabChain { n, levels: Vec::new() };
        for g in generators {
            chain.extend_with(g);
        }
        chain
    }

    /// Adds `g` to the group if it is not already a member.
    pub fn extend_with(&mut self, g: &Perm) {
        if !self.contains(g) {
            self.extend(0, g.clone());
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (h, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    fn strip(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for j in from..self.levels.len() {
            let lvl = &self.levels[j];
            let x = h.apply(lvl.point);
            match lvl.transversal.get(&x) {
                Some(u) => h = u.inverse().compose(&h),
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    fn extend(&mut self, j: usize, g: Perm) {
        if j == self.levels.len() {
            let point = (0..self.n).find(|&x| g.apply(x) != x).expect("nonidentity");
            self.levels.push(ChainLevel {
                point,
                gens: Vec::new(),
                orbit: vec![point],
                transversal: HashMap::from([(point, Perm::identity(self.n))]),
            });
        }
        self.levels[j].gens.push(g);
        // grow the orbit with all generators at this level
        let lvl = &mut self.levels[j];
        let mut i = 0;
        while i < lvl.orbit.len() {
            let u = lvl.orbit[i];
            for s in &lvl.gens {
                let x = s.apply(u);
                if !lvl.transversal.contains_key(&x) {
                    let t = s.compose(&lvl.transversal[&u]);
                    lvl.transversal.insert(x, t);
                    lvl.orbit.push(x);
                }
            }
            i += 1;
        }
        // Schreier generators must lie in the next stabilizer
        let orbit = self.levels[j].orbit.clone();
        let mut s_idx = 0;
        while s_idx < self.levels[j].gens.len() {
            for &u in &orbit {
                let lvl = &self.levels[j];
                let s = &lvl.gens[s_idx];
                let x = s.apply(u);
                let t = lvl.transversal[&x].inverse().compose(&s.compose(&lvl.transversal[&u]));
                let (h, k) = self.strip(t, j + 1);
                if k < self.levels.len() || !h.is_identity() {
                    self.extend(j + 1, h);
                }
            }
            s_idx += 1;
        }
    }
}

/// Outcome of [`verify_frucht`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FruchtCheck {
    pub group_order: usize,
    /// Every right multiplication induces an automorphism.
    pub induced_are_automorphisms: bool,
    /// Distinct elements induce distinct automorphisms.
    pub induced_distinct: bool,
    /// Order found by the search on the Frucht graph.
    pub search_order: BigUint,
}

impl FruchtCheck {
    pub fn ok(&self) -> bool {
        self.induced_are_automorphisms
            && self.induced_distinct
            && self.search_order == BigUint::from(self.group_order)
    }
}

/// The map of the Frucht graph induced by right multiplication with
/// element `gamma`: `p_i ↦ p_i'` where `g_i' = g_i · gamma`, chains along.
pub fn frucht_induced_map(g: &FiniteGroup, gamma: usize) -> Vec<usize> {
    let (graph, layout) = frucht_graph_with_layout(g);
    induced(g, gamma, &graph, &layout)
}

fn induced(g: &FiniteGroup, gamma: usize, graph: &ColoredGraph, layout: &crate::graph::FruchtLayout) -> Vec<usize> {
    let mut images: Vec<usize> = (0..graph.vertex_count()).collect();
    let right = |i: usize| g.mul(i, gamma);
    for (i, &p) in layout.p.iter().enumerate() {
        images[p] = layout.p[right(i)];
    }
    for (&(i, j), (q, r)) in &layout.chains {
        let (q2, r2) = &layout.chains[&(right(i), right(j))];
        for (a, b) in q.iter().zip(q2).chain(r.iter().zip(r2)) {
            images[*a] = *b;
        }
    }
    images
}

/// Checks that the automorphism group of the Frucht graph of `g` is `g`:
/// right multiplications induce distinct automorphisms, and the search
/// finds no others.
pub fn verify_frucht(g: &FiniteGroup) -> Result<FruchtCheck> {
    verify_frucht_with(g, AutOptions::default())
}

pub fn verify_frucht_with(g: &FiniteGroup, opts: AutOptions) -> Result<FruchtCheck> {
    let (graph, layout) = frucht_graph_with_layout(g);
    let maps: Vec<Vec<usize>> = (0..g.order()).map(|x| induced(g, x, &graph, &layout)).collect();
    let induced_are_automorphisms = maps.iter().all(|m| graph.is_automorphism(m));
    let induced_distinct = maps.iter().collect::<HashSet<_>>().len() == maps.len();
    let report = automorphism_group_with(&graph, opts)?;
    Ok(FruchtCheck {
        group_order: g.order(),
        induced_are_automorphisms,
        induced_distinct,
        search_order: report.order,
    })
}

/// SHA-256 over a canonical text form of the graph (vertex count, colors,
/// sorted edges).
pub fn graph_hash(g: &ColoredGraph) -> String {
    let mut h = Sha256::new();
    h.update(format!("n {}\n", g.vertex_count()));
    for c in g.colors() {
        h.update(format!("c {} {}\n", c.0, c.1));
    }
    for (u, v) in g.edges() {
        h.update(format!("e {u} {v}\n"));
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// A permutation as the list of images, 0-based, space separated.
pub fn one_line(p: &Perm) -> String {
    p.images().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Plain-text certificate: graph hash, order, and every generator in
/// one-line (0-based) and cycle (1-based, as GAP prints them) notation.
pub fn certificate(g: &ColoredGraph, report: &AutReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph_sha256={}", graph_hash(g));
    let _ = writeln!(s, "vertices={} edges={}", g.vertex_count(), g.edge_count());
    let _ = writeln!(s, "order={} rigid={} nodes={}", report.order, report.rigid, report.node_count);
    let base: Vec<String> = report.base.iter().map(|b| b.to_string()).collect();
    let orbits: Vec<String> = report.orbit_sizes.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(s, "base={} orbits={}", base.join(","), orbits.join(","));
    for (k, p) in report.generators.iter().enumerate() {
        let _ = writeln!(s, "gen {k} oneline: {}", one_line(p));
        let _ = writeln!(s, "gen {k} cycles (1-based): {p}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{kneser, Color, VertexLabel};
    use crate::group::named_group;

    fn cycle(n: usize) -> ColoredGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    fn order(g: &ColoredGraph) -> u64 {
        automorphism_group(g).unwrap().order.try_into().unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = ColoredGraph::from_edges(1, &[]).unwrap();
        let r = automorphism_group(&g).unwrap();
        assert!(r.rigid);
        assert_eq!(r.order, BigUint::one());
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&cycle(4)), 8);
        assert_eq!(order(&cycle(7)), 14);
        assert_eq!(order(&ColoredGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()), 2);
        assert_eq!(order(&ColoredGraph::from_edges(5, &[]).unwrap()), 120);
        assert_eq!(order(&kneser(5, 2).unwrap()), 120);
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute_automorphisms(&cycle(4)).unwrap().order, BigUint::from(8u32));
        let p3 = ColoredGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_automorphisms(&p3).unwrap().order, BigUint::from(2u32));
        let mut k3 = ColoredGraph::new();
        for i in 0..3 {
            k3.add_vertex(Color(i, 0), VertexLabel::Plain(i as usize));
        }
        k3.add_edge(0, 1).unwrap();
        k3.add_edge(1, 2).unwrap();
        k3.add_edge(0, 2).unwrap();
        assert!(brute_automorphisms(&k3).unwrap().rigid);
        assert!(matches!(
            brute_automorphisms(&cycle(11)),
            Err(Error::Size { limit: 10, actual: 11, .. })
        ));
    }

    #[test]
    fn asymmetric_tree() {
        // spider with legs of lengths 1, 2, 3
        let t = ColoredGraph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        assert!(is_rigid(&t).unwrap());
        assert!(brute_automorphisms(&t).unwrap().rigid);
        assert!(!is_rigid(&cycle(3)).unwrap());
    }

    #[test]
    fn report_certifies() {
        let g = kneser(5, 2).unwrap();
        let r = automorphism_group(&g).unwrap();
        assert!(certify(&g, &r));
        let cert = certificate(&g, &r);
        assert!(cert.contains("order=120"));
        assert_eq!(graph_hash(&g).len(), 64);
    }

    #[test]
    fn parallel_is_identical() {
        for g in [kneser(5, 2).unwrap(), cycle(9), kneser(6, 2).unwrap()] {
            let seq = automorphism_group(&g).unwrap();
            let par = automorphism_group_with(&g, AutOptions { parallel: true, ..Default::default() }).unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn budget_exceeded() {
        let err = automorphism_group_with(&kneser(6, 2).unwrap(), AutOptions { node_budget: 3, parallel: false })
            .unwrap_err();
        assert!(matches!(err, Error::Budget { limit: 3, .. }));
    }

    #[test]
    fn schreier_sims_orders() {
        let s5 = named_group("S5").unwrap();
        assert_eq!(group_order(5, s5.generators()), BigUint::from(120u32));
        let a7 = named_group("A7").unwrap();
        assert_eq!(group_order(7, a7.generators()), BigUint::from(2520u32));
        assert_eq!(group_order(4, &[]), BigUint::one());
    }

    #[test]
    fn frucht_small() {
        for (spec, n) in [("Z1", 1usize), ("Z2", 2), ("Z3", 3), ("S3", 6)] {
            let check = verify_frucht(&named_group(spec).unwrap()).unwrap();
            assert!(check.ok(), "{spec}: {check:?}");
            assert_eq!(check.search_order, BigUint::from(n));
        }
    }
}
