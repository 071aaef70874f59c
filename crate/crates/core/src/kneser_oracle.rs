//! A combinatorial second opinion on the `A_7` system.
//!
//! Each edge of `K(n, 2)` is a variable, green (+1) or red (−1). Every
//! triangle and every "square" (the three perfect matchings of a 4-set)
//! must carry an even number of red edges. For `n = 7` no coloring with a
//! red edge exists. The solver here is parity propagation with
//! backtracking, deliberately independent of Gaussian elimination.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::group::{build_mh, commuting_triples, named_group, Perm};

/// Edge variables of `K(n, 2)` and the two constraint families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeConstraintSystem {
    pub n: usize,
    /// Each edge as a pair of disjoint 2-subsets `[[a, b], [c, d]]`, with
    /// `a < b`, `c < d`, `(a, b) < (c, d)`; lexicographic order.
    pub edges: Vec<[[usize; 2]; 2]>,
    /// Triangles `{ab, cd, ef}` from the partitions of 6-subsets into pairs.
    pub rel1_triples: Vec<[usize; 3]>,
    /// The three matchings of each 4-subset.
    pub rel2_triples: Vec<[usize; 3]>,
}

impl EdgeConstraintSystem {
    pub fn constraints(&self) -> impl Iterator<Item = &[usize; 3]> {
        self.rel1_triples.iter().chain(&self.rel2_triples)
    }

    pub fn constraint_count(&self) -> usize {
        self.rel1_triples.len() + self.rel2_triples.len()
    }

    /// Whether a total coloring (`true` = red) satisfies every constraint.
    pub fn satisfied_by(&self, red: &[bool]) -> bool {
        self.constraints().all(|t| !(red[t[0]] ^ red[t[1]] ^ red[t[2]]))
    }

    /// The constraint incidence matrix, one row per constraint.
    pub fn matrix(&self) -> F2Matrix {
        let mut m = F2Matrix::zeros(self.constraint_count(), self.edges.len());
        for (r, t) in self.constraints().enumerate() {
            for &e in t {
                m.set(r, e, true);
            }
        }
        m
    }
}

fn pairs(n: usize) -> Vec<[usize; 2]> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect()
}

fn disjoint(p: [usize; 2], q: [usize; 2]) -> bool {
    p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]
}

/// The system for `K(7, 2)`.
pub fn build_constraints() -> EdgeConstraintSystem {
    build_constraints_for(7).expect("n = 7 is valid")
}

/// The same system over `[n]`.
pub fn build_constraints_for(n: usize) -> Result<EdgeConstraintSystem> {
    if !(4..=12).contains(&n) {
        return Err(Error::input(format!("edge constraint systems need 4 <= n <= 12, got {n}")));
    }
    let ps = pairs(n);
    let mut edges = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for &q in &ps[i + 1..] {
            if disjoint(p, q) {
                edges.push([p, q]);
            }
        }
    }
    let index: HashMap<[[usize; 2]; 2], usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let edge = |p: [usize; 2], q: [usize; 2]| index[&if p < q { [p, q] } else { [q, p] }];

    let mut rel1_triples = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for (j, &q) in ps.iter().enumerate().skip(i + 1) {
            for &r in &ps[j + 1..] {
                if disjoint(p, q) && disjoint(p, r) && disjoint(q, r) {
                    let mut t = [edge(p, q), edge(p, r), edge(q, r)];
                    t.sort_unstable();
                    rel1_triples.push(t);
                }
            }
        }
    }
    let mut rel2_triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let mut t = [
                        edge([a, b], [c, d]),
                        edge([a, c], [b, d]),
                        edge([a, d], [b, c]),
                    ];
                    t.sort_unstable();
                    rel2_triples.push(t);
                }
            }
        }
    }
    rel1_triples.sort_unstable();
    rel2_triples.sort_unstable();
    Ok(EdgeConstraintSystem { n, edges, rel1_triples, rel2_triples })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    /// No coloring with the seed red; `nodes` counts branching decisions.
    Contradiction { nodes: u64 },
    /// A full coloring, `true` = red.
    Consistent(Vec<bool>),
}

impl Propagation {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, Propagation::Contradiction { .. })
    }
}

struct Solver {
    /// constraints touching each edge
    watch: Vec<Vec<usize>>,
    triples: Vec<[usize; 3]>,
    value: Vec<Option<bool>>,
    trail: Vec<usize>,
    nodes: u64,
}

impl Solver {
    fn new(sys: &EdgeConstraintSystem) -> Self {
        let triples: Vec<[usize; 3]> = sys.constraints().copied().collect();
        let mut watch = vec![Vec::new(); sys.edges.len()];
        for (k, t) in triples.iter().enumerate() {
            for &e in t {
                watch[e].push(k);
            }
        }
        Solver { watch, triples, value: vec![None; sys.edges.len()], trail: Vec::new(), nodes: 0 }
    }

    /// Assigns and propagates; `false` on a violated constraint.
    fn assign(&mut self, e: usize, red: bool) -> bool {
        let mut queue = vec![(e, red)];
        while let Some((e, red)) = queue.pop() {
            match self.value[e] {
                Some(v) if v == red => continue,
                Some(_) => return false,
                None => {
                    self.value[e] = Some(red);
                    self.trail.push(e);
                }
            }
            for &k in &self.watch[e] {
                let t = self.triples[k];
                let vals = t.map(|x| self.value[x]);
                match vals.iter().filter(|v| v.is_none()).count() {
                    0 => {
                        if vals[0].unwrap() ^ vals[1].unwrap() ^ vals[2].unwrap() {
                            return false;
                        }
                    }
                    1 => {
                        let free = (0..3).find(|&i| vals[i].is_none()).expect("one free");
                        let forced = vals.iter().flatten().fold(false, |acc, &v| acc ^ v);
                        queue.push((t[free], forced));
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("nonempty");
            self.value[e] = None;
        }
    }

    fn search(&mut self) -> bool {
        let Some(e) = self.value.iter().position(Option::is_none) else {
            return true;
        };
        for red in [false, true] {
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(e, red) && self.search() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Colors `seed_edge` red and searches for a consistent total coloring.
pub fn propagate_red_edge(sys: &EdgeConstraintSystem, seed_edge: usize) -> Result<Propagation> {
    if seed_edge >= sys.edges.len() {
        return Err(Error::input(format!(
            "seed edge {seed_edge} out of range (have {})",
            sys.edges.len()
        )));
    }
    let mut s = Solver::new(sys);
    let ok = s.assign(seed_edge, true) && s.search();
    Ok(if ok {
        let coloring: Vec<bool> = s.value.iter().map(|v| v.expect("total")).collect();
        debug_assert!(sys.satisfied_by(&coloring));
        Propagation::Consistent(coloring)
    } else {
        Propagation::Contradiction { nodes: s.nodes }
    })
}

/// Runs every seed, in parallel; output is in seed order.
pub fn all_seeds(sys: &EdgeConstraintSystem) -> Vec<Propagation> {
    (0..sys.edges.len())
        .into_par_iter()
        .map(|e| propagate_red_edge(sys, e).expect("seed in range"))
        .collect()
}

/// Both certificates for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KneserCertificate {
    pub n: usize,
    pub edges: usize,
    pub constraints: usize,
    pub contradictions: usize,
    pub rank: usize,
    pub nullity: usize,
}

impl KneserCertificate {
    /// Propagation says "no red edge anywhere" exactly when elimination says
    /// "only the zero solution".
    pub fn agree(&self) -> bool {
        (self.contradictions == self.edges) == (self.nullity == 0)
    }
}

/// Propagation over all seeds plus rank and nullity of `M_{A_n}`.
pub fn certify_an(n: usize) -> Result<KneserCertificate> {
    let sys = build_constraints_for(n)?;
    let contradictions = all_seeds(&sys).iter().filter(|p| p.is_contradiction()).count();
    let mh = build_mh(&named_group(&format!("A{n}"))?);
    Ok(KneserCertificate {
        n,
        edges: sys.edges.len(),
        constraints: sys.constraint_count(),
        contradictions,
        rank: mh.matrix().rank(),
        nullity: mh.matrix().nullity(),
    })
}

/// Whether the constraint matrix equals `M_{A_n}` after renaming each edge
/// `{ab, cd}` to the involution `(a b)(c d)`. Only meaningful for `n ≤ 7`,
/// where those are all the involutions of `A_n`.
pub fn matches_mh(sys: &EdgeConstraintSystem) -> Result<bool> {
    let g = named_group(&format!("A{}", sys.n))?;
    let set = commuting_triples(&g);
    if set.members.len() != sys.edges.len() {
        return Ok(false);
    }
    let position: HashMap<usize, usize> =
        set.members.iter().enumerate().map(|(p, &e)| (e, p)).collect();
    let mut column = Vec::with_capacity(sys.edges.len());
    for &[p, q] in &sys.edges {
        let perm = Perm::from_cycles(sys.n, &[p.to_vec(), q.to_vec()])?;
        let Some(&pos) = g.index_of(&perm).and_then(|i| position.get(&i)) else {
            return Ok(false);
        };
        column.push(pos);
    }
    let mut ours: Vec<[usize; 3]> = sys
        .constraints()
        .map(|t| {
            let mut r = t.map(|e| column[e]);
            r.sort_unstable();
            r
        })
        .collect();
    ours.sort_unstable();
    Ok(ours == set.triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_for_seven() {
        let sys = build_constraints();
        assert_eq!(sys.edges.len(), 105);
        assert_eq!(sys.rel1_triples.len(), 105);
        assert_eq!(sys.rel2_triples.len(), 35);
        for t in sys.constraints() {
            assert!(t[0] < t[1] && t[1] < t[2]);
        }
    }

    #[test]
    fn rel1_are_triangles() {
        let sys = build_constraints();
        for t in &sys.rel1_triples {
            let mut verts: Vec<[usize; 2]> = t.iter().flat_map(|&e| sys.edges[e]).collect();
            verts.sort_unstable();
            verts.dedup();
            assert_eq!(verts.len(), 3);
        }
    }

    #[test]
    fn all_green_is_consistent() {
        let sys = build_constraints();
        assert!(sys.satisfied_by(&vec![false; sys.edges.len()]));
    }

    #[test]
    fn red_seed_contradicts_for_seven() {
        let sys = build_constraints();
        assert!(propagate_red_edge(&sys, 0).unwrap().is_contradiction());
        assert!(propagate_red_edge(&sys, 104).unwrap().is_contradiction());
        assert!(propagate_red_edge(&sys, 105).is_err());
    }

    #[test]
    fn five_admits_red_edges() {
        let sys = build_constraints_for(5).unwrap();
        assert_eq!(sys.edges.len(), 15);
        assert!(sys.rel1_triples.is_empty());
        match propagate_red_edge(&sys, 0).unwrap() {
            Propagation::Consistent(c) => {
                assert!(c[0]);
                assert!(sys.satisfied_by(&c));
            }
            other => panic!("expected a coloring, got {other:?}"),
        }
    }

    #[test]
    fn matrix_is_mh_up_to_relabeling() {
        assert!(matches_mh(&build_constraints()).unwrap());
        assert!(matches_mh(&build_constraints_for(5).unwrap()).unwrap());
    }
}
