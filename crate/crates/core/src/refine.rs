//! Color refinement (1-dimensional Weisfeiler–Leman) and topological paths.
//!
//! Two implementations live here. [`refine_step`] is the textbook round:
//! regroup vertices by their color and the multiset of neighbor colors.
//! [`stable_refinement`] runs a worklist refinement over an ordered
//! partition ([`OrderedPartition`]) which is also the engine behind the
//! automorphism search. Both reach the same coarsest equitable partition.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use crate::graph::ColoredGraph;

/// A partition of the vertex set into classes with contiguous ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Orders classes by `(size, key, smallest member)` and assigns ids.
    fn from_keyed<K: Ord>(mut keyed: Vec<(K, Vec<usize>)>, n: usize) -> Self {
        for (_, c) in keyed.iter_mut() {
            c.sort_unstable();
        }
        keyed.sort_by(|(ka, a), (kb, b)| {
            a.len().cmp(&b.len()).then_with(|| ka.cmp(kb)).then_with(|| a[0].cmp(&b[0]))
        });
        let classes: Vec<Vec<usize>> = keyed.into_iter().map(|(_, c)| c).collect();
        let mut class_of = vec![0; n];
        for (id, c) in classes.iter().enumerate() {
            for &v in c {
                class_of[v] = id;
            }
        }
        Partition { class_of, classes }
    }

    /// The partition of `g` by vertex color.
    pub fn from_colors(g: &ColoredGraph) -> Self {
        Self::from_keyed(g.color_classes().into_iter().collect(), g.vertex_count())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&v| coarser.class_of[v] == coarser.class_of[c[0]]))
    }

    /// The classes as a set of sets, for order-insensitive comparison.
    pub fn as_sets(&self) -> Vec<Vec<usize>> {
        let mut sets = self.classes.clone();
        sets.sort();
        sets
    }

    /// Whether every vertex of a class has the same number of neighbors in
    /// every other class.
    pub fn is_equitable(&self, g: &ColoredGraph) -> bool {
        let k = self.classes.len();
        self.classes.iter().all(|class| {
            let profile = |v: usize| {
                let mut counts = vec![0usize; k];
                for &w in g.neighbors(v) {
                    counts[self.class_of[w]] += 1;
                }
                counts
            };
            let first = profile(class[0]);
            class[1..].iter().all(|&v| profile(v) == first)
        })
    }

    /// Lines `class <id>: v1 v2 …`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (id, c) in self.classes.iter().enumerate() {
            let _ = write!(s, "class {id}:");
            for v in c {
                let _ = write!(s, " {v}");
            }
            s.push('\n');
        }
        s
    }
}

/// One refinement round: split classes by the multiset of neighbor classes.
pub fn refine_step(g: &ColoredGraph, p: &Partition) -> Partition {
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| p.class_of[w]).collect();
        sig.sort_unstable();
        groups.entry((p.class_of[v], sig)).or_default().push(v);
    }
    Partition::from_keyed(groups.into_iter().collect(), g.vertex_count())
}

/// Iterates [`refine_step`] from the vertex coloring until it stabilizes.
pub fn stable_refinement_rounds(g: &ColoredGraph) -> Partition {
    let mut p = Partition::from_colors(g);
    loop {
        let next = refine_step(g, &p);
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}

/// The coarsest equitable partition refining the vertex coloring.
pub fn stable_refinement(g: &ColoredGraph) -> Partition {
    let csr = Csr::new(g);
    let mut op = OrderedPartition::from_colors(g);
    let mut scratch = Scratch::new(g.vertex_count());
    op.refine_all(&csr, &mut scratch);
    op.to_partition()
}

/// Whether color refinement separates `u` and `v`.
pub fn distinguished(g: &ColoredGraph, u: usize, v: usize) -> bool {
    let p = stable_refinement(g);
    p.class_of[u] != p.class_of[v]
}

/// A maximal path whose endpoints have degree ≠ 2 and whose interior
/// vertices all have degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoPath {
    pub endpoint_a: usize,
    pub endpoint_b: usize,
    pub interior: Vec<usize>,
}

impl TopoPath {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.interior.len() + 1
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.endpoint_a];
        v.extend(&self.interior);
        v.push(self.endpoint_b);
        v
    }
}

/// All topological paths, each reported once with the lexicographically
/// smaller orientation. Degree-2 vertices on topological cycles are skipped.
pub fn topological_paths(g: &ColoredGraph) -> Vec<TopoPath> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        if g.degree(a) == 2 {
            continue;
        }
        for &first in g.neighbors(a) {
            let mut seq = vec![a];
            let (mut prev, mut cur) = (a, first);
            while g.degree(cur) == 2 && cur != a {
                seq.push(cur);
                let nbrs = g.neighbors(cur);
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                prev = cur;
                cur = next;
            }
            if cur == a {
                // closes up on its own endpoint: not a simple path
                continue;
            }
            seq.push(cur);
            let rev: Vec<usize> = seq.iter().rev().copied().collect();
            if seq <= rev {
                out.push(TopoPath {
                    endpoint_a: seq[0],
                    endpoint_b: *seq.last().expect("nonempty"),
                    interior: seq[1..seq.len() - 1].to_vec(),
                });
            }
        }
    }
    out.sort_by_key(TopoPath::vertices);
    out
}

/// Compressed adjacency lists.
#[derive(Debug, Clone)]
pub(crate) struct Csr {
    offs: Vec<u32>,
    nbrs: Vec<u32>,
}

impl Csr {
    pub(crate) fn new(g: &ColoredGraph) -> Self {
        let mut offs = Vec::with_capacity(g.vertex_count() + 1);
        let mut nbrs = Vec::with_capacity(2 * g.edge_count());
        offs.push(0);
        for v in 0..g.vertex_count() {
            nbrs.extend(g.neighbors(v).iter().map(|&w| w as u32));
            offs.push(nbrs.len() as u32);
        }
        Csr { offs, nbrs }
    }

    #[inline]
    fn neighbors(&self, v: u32) -> &[u32] {
        &self.nbrs[self.offs[v as usize] as usize..self.offs[v as usize + 1] as usize]
    }
}

/// Reusable buffers for [`OrderedPartition::refine`].
#[derive(Debug, Clone)]
pub(crate) struct Scratch {
    count: Vec<u32>,
    in_queue: Vec<bool>,
    touched: Vec<u32>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Self {
        Scratch {
            count: vec![0; n],
            in_queue: vec![false; n],
            touched: Vec::new(),
        }
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(23) ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// An ordered partition: cells are contiguous runs of `elems`, ordered by
/// start position. Cell ids are storage slots only; everything observable
/// (cell order, split trace) depends on positions, so isomorphic inputs give
/// identical traces.
#[derive(Debug, Clone)]
pub(crate) struct OrderedPartition {
    pub(crate) elems: Vec<u32>,
    pos: Vec<u32>,
    cell_of: Vec<u32>,
    start: Vec<u32>,
    end: Vec<u32>,
    cells: usize,
}

impl OrderedPartition {
    /// Cells are the color classes in ascending color order.
    pub(crate) fn from_colors(g: &ColoredGraph) -> Self {
        let n = g.vertex_count();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (g.color(v as usize), v));
        let mut op = OrderedPartition {
            pos: vec![0; n],
            cell_of: vec![0; n],
            start: vec![0; n],
            end: vec![0; n],
            cells: 0,
            elems,
        };
        let mut i = 0;
        while i < n {
            let c = g.color(op.elems[i] as usize);
            let mut j = i;
            while j < n && g.color(op.elems[j] as usize) == c {
                j += 1;
            }
            let id = op.cells as u32;
            op.start[id as usize] = i as u32;
            op.end[id as usize] = j as u32;
            for p in i..j {
                let v = op.elems[p] as usize;
                op.pos[v] = p as u32;
                op.cell_of[v] = id;
            }
            op.cells += 1;
            i = j;
        }
        op
    }

    pub(crate) fn cell_count(&self) -> usize {
        self.cells
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    /// Refines against every cell; returns the split trace hash.
    pub(crate) fn refine_all(&mut self, csr: &Csr, scratch: &mut Scratch) -> u64 {
        let mut starts: Vec<(u32, u32)> = (0..self.cells as u32)
            .map(|id| (self.start[id as usize], id))
            .collect();
        starts.sort_unstable();
        let ids: Vec<u32> = starts.into_iter().map(|(_, id)| id).collect();
        self.refine(csr, scratch, ids)
    }

    /// Splits `v` off the front of its cell and refines.
    pub(crate) fn individualize(&mut self, v: usize, csr: &Csr, scratch: &mut Scratch) -> u64 {
        let id = self.cell_of[v] as usize;
        let (s, e) = (self.start[id], self.end[id]);
        if e - s == 1 {
            return mix(0, self.cells as u64);
        }
        let other = self.elems[s as usize];
        let pv = self.pos[v];
        self.elems.swap(s as usize, pv as usize);
        self.pos[other as usize] = pv;
        self.pos[v] = s;
        let new_id = self.cells as u32;
        self.cells += 1;
        self.start[new_id as usize] = s;
        self.end[new_id as usize] = s + 1;
        self.cell_of[v] = new_id;
        self.start[id] = s + 1;
        self.refine(csr, scratch, vec![new_id])
    }

    fn refine(&mut self, csr: &Csr, scratch: &mut Scratch, initial: Vec<u32>) -> u64 {
        let mut hash = 0u64;
        let mut queue: VecDeque<u32> = VecDeque::with_capacity(initial.len());
        for id in initial {
            scratch.in_queue[id as usize] = true;
            queue.push_back(id);
        }
        let mut fragments: Vec<(u32, u32)> = Vec::new();
        while let Some(splitter) = queue.pop_front() {
            scratch.in_queue[splitter as usize] = false;
            if self.cells == self.elems.len() {
                continue;
            }
            let (s, e) = (self.start[splitter as usize], self.end[splitter as usize]);
            scratch.touched.clear();
            for p in s..e {
                let v = self.elems[p as usize];
                for &w in csr.neighbors(v) {
                    if scratch.count[w as usize] == 0 {
                        scratch.touched.push(w);
                    }
                    scratch.count[w as usize] += 1;
                }
            }
            hash = mix(hash, s as u64);
            let mut touched = std::mem::take(&mut scratch.touched);
            {
                let count = &scratch.count;
                let start = &self.start;
                let cell_of = &self.cell_of;
                touched.sort_unstable_by_key(|&w| (start[cell_of[w as usize] as usize], count[w as usize], w));
            }
            let mut i = 0;
            while i < touched.len() {
                let id = self.cell_of[touched[i] as usize];
                let mut j = i;
                while j < touched.len() && self.cell_of[touched[j] as usize] == id {
                    j += 1;
                }
                self.split_cell(id, &touched[i..j], &scratch.count, &mut queue, &mut scratch.in_queue, &mut hash, &mut fragments);
                i = j;
            }
            for &w in &touched {
                scratch.count[w as usize] = 0;
            }
            scratch.touched = touched;
        }
        mix(hash, self.cells as u64)
    }

    /// Splits cell `id` by neighbor count; `touched` holds its vertices with
    /// nonzero count, sorted by count. Untouched vertices (count 0) keep the
    /// cell id and move to the back.
    #[allow(clippy::too_many_arguments)]
    fn split_cell(
        &mut self,
        id: u32,
        touched: &[u32],
        count: &[u32],
        queue: &mut VecDeque<u32>,
        in_queue: &mut [bool],
        hash: &mut u64,
        fragments: &mut Vec<(u32, u32)>,
    ) {
        let (s, e) = (self.start[id as usize], self.end[id as usize]);
        let size = e - s;
        let t = touched.len() as u32;
        let first = count[touched[0] as usize];
        let last = count[touched[touched.len() - 1] as usize];
        if size == 1 || (t == size && first == last) {
            return;
        }
        // move touched vertices to the front, in count order
        for (k, &w) in touched.iter().enumerate() {
            let target = s + k as u32;
            let pw = self.pos[w as usize];
            let displaced = self.elems[target as usize];
            self.elems.swap(target as usize, pw as usize);
            self.pos[displaced as usize] = pw;
            self.pos[w as usize] = target;
        }
        fragments.clear();
        let mut a = 0usize;
        while a < touched.len() {
            let c = count[touched[a] as usize];
            let mut b = a;
            while b < touched.len() && count[touched[b] as usize] == c {
                b += 1;
            }
            fragments.push((s + a as u32, s + b as u32));
            a = b;
        }
        if t < size {
            fragments.push((s + t, e));
        }
        *hash = mix(*hash, ((s as u64) << 32) | size as u64);
        let mut seen_zero = t < size;
        for (k, &(fs, fe)) in fragments.iter().enumerate() {
            let c = if seen_zero && k == fragments.len() - 1 {
                0
            } else {
                count[self.elems[fs as usize] as usize]
            };
            *hash = mix(*hash, ((c as u64) << 32) | (fe - fs) as u64);
        }
        seen_zero = t < size;

        // the untouched fragment (if any) keeps `id`; otherwise the last
        // fragment does
        let keep = fragments.len() - 1;
        let was_queued = in_queue[id as usize];
        let largest = fragments
            .iter()
            .enumerate()
            .max_by(|(ka, (sa, ea)), (kb, (sb, eb))| (ea - sa).cmp(&(eb - sb)).then(kb.cmp(ka)))
            .map(|(k, _)| k)
            .expect("at least two fragments");
        for (k, &(fs, fe)) in fragments.iter().enumerate() {
            let fid = if k == keep {
                id
            } else {
                let nid = self.cells as u32;
                self.cells += 1;
                for p in fs..fe {
                    self.cell_of[self.elems[p as usize] as usize] = nid;
                }
                nid
            };
            self.start[fid as usize] = fs;
            self.end[fid as usize] = fe;
            let push = if was_queued { fid != id } else { k != largest };
            if push && !in_queue[fid as usize] {
                in_queue[fid as usize] = true;
                queue.push_back(fid);
            }
        }
        let _ = seen_zero;
    }

    /// First smallest non-singleton cell in position order: `(start, end)`.
    pub(crate) fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut p = 0;
        while p < self.elems.len() {
            let id = self.cell_of[self.elems[p] as usize] as usize;
            let (s, e) = (self.start[id] as usize, self.end[id] as usize);
            let size = e - s;
            if size > 1 && best.is_none_or(|(bs, be)| size < be - bs) {
                best = Some((s, e));
                if size == 2 {
                    break;
                }
            }
            p = e;
        }
        best
    }

    pub(crate) fn cell_members(&self, s: usize, e: usize) -> Vec<usize> {
        let mut m: Vec<usize> = self.elems[s..e].iter().map(|&v| v as usize).collect();
        m.sort_unstable();
        m
    }

    pub(crate) fn to_partition(&self) -> Partition {
        let mut keyed: Vec<(u32, Vec<usize>)> = Vec::with_capacity(self.cells);
        let mut p = 0;
        while p < self.elems.len() {
            let id = self.cell_of[self.elems[p] as usize] as usize;
            let e = self.end[id] as usize;
            keyed.push((p as u32, self.elems[p..e].iter().map(|&v| v as usize).collect()));
            p = e;
        }
        Partition::from_keyed(keyed, self.elems.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::{F2Matrix, LinSystem};
    use crate::graph::{build_g, Color, VertexLabel};

    fn cycle(n: usize) -> ColoredGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> ColoredGraph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    fn star3() -> ColoredGraph {
        ColoredGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn single_round_examples() {
        let c5 = cycle(5);
        let p = Partition::from_colors(&c5);
        assert_eq!(refine_step(&c5, &p).len(), 1);

        let p3 = path(3);
        let r = refine_step(&p3, &Partition::from_colors(&p3));
        assert_eq!(r.as_sets(), vec![vec![0, 2], vec![1]]);

        let discrete = refine_step(&p3, &r);
        let again = refine_step(&p3, &discrete);
        assert_eq!(again, discrete);
    }

    #[test]
    fn stable_examples() {
        let k4 = ColoredGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(stable_refinement(&k4).len(), 1);
        let s = stable_refinement(&star3());
        assert_eq!(s.as_sets(), vec![vec![0], vec![1, 2, 3]]);
        assert!(!distinguished(&star3(), 1, 2));
        assert!(distinguished(&star3(), 0, 1));

        let g = build_g(&LinSystem::homogeneous(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap())).unwrap();
        let s = stable_refinement(&g);
        for v in 6..10 {
            for u in 0..6 {
                assert_ne!(s.class_of[u], s.class_of[v]);
            }
        }
    }

    #[test]
    fn worklist_matches_rounds_on_paths() {
        for n in 1..12 {
            let g = path(n);
            assert_eq!(stable_refinement(&g).as_sets(), stable_refinement_rounds(&g).as_sets());
        }
    }

    #[test]
    fn topo_paths() {
        let p5 = topological_paths(&path(5));
        assert_eq!(p5.len(), 1);
        assert_eq!((p5[0].endpoint_a, p5[0].endpoint_b), (0, 4));
        assert_eq!(p5[0].interior, vec![1, 2, 3]);
        assert!(topological_paths(&cycle(6)).is_empty());
        let star = topological_paths(&star3());
        assert_eq!(star.len(), 3);
        assert!(star.iter().all(|p| p.interior.is_empty()));
    }

    #[test]
    fn topo_paths_loop_through_branch() {
        // a triangle hanging off a branch vertex closes on itself
        let g = ColoredGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]).unwrap();
        let paths = topological_paths(&g);
        assert_eq!(paths.len(), 2);
    }

    #[test]
    fn dump_format() {
        let mut g = ColoredGraph::new();
        g.add_vertex(Color(1, 0), VertexLabel::Plain(0));
        g.add_vertex(Color(0, 0), VertexLabel::Plain(1));
        g.add_vertex(Color(0, 0), VertexLabel::Plain(2));
        let p = stable_refinement(&g);
        assert_eq!(p.dump(), "class 0: 0\nclass 1: 1 2\n");
    }

    #[test]
    fn individualization_splits() {
        let g = cycle(6);
        let csr = Csr::new(&g);
        let mut sc = Scratch::new(6);
        let mut op = OrderedPartition::from_colors(&g);
        op.refine_all(&csr, &mut sc);
        assert_eq!(op.cell_count(), 1);
        op.individualize(0, &csr, &mut sc);
        assert_eq!(op.to_partition().as_sets(), vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(op.target_cell().map(|(s, e)| e - s), Some(2));
    }
}
