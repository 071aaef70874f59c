//! Explicit finite permutation groups, their involutions, and the linear
//! system built from commuting involution triples.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, LinSystem};

/// Default cap on the size of a generated group.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// A permutation of `{0, …, d-1}`, stored by images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return Err(Error::input(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation on `degree` points from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::input(format!("point {} outside domain", a + 1)));
                }
                if std::mem::replace(&mut used[a], true) {
                    return Err(Error::input(format!("point {} repeated in cycles", a + 1)));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Extends the permutation to a larger domain, fixing the new points.
    fn padded(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Perm { images }
    }

    fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Perm { images }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// A finite permutation group with its elements listed in canonical order
/// (lexicographic by image tuple, so the identity sits at index 0).
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverse: Vec<usize>,
    generators: Vec<Perm>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` (default cap).
    pub fn closure(generators: &[Perm]) -> Result<Self> {
        Self::closure_with_cap(generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn closure_with_cap(generators: &[Perm], cap: usize) -> Result<Self> {
        let degree = generators.first().map_or(0, Perm::degree);
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::input(format!(
                "generator {bad} acts on {} points, expected {degree}",
                bad.degree()
            )));
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::Size {
                            what: "group closure",
                            limit: cap,
                            actual: seen.len() + 1,
                        });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_keys().collect();
        elements.sort();
        Ok(Self::from_sorted(degree, elements, generators.to_vec()))
    }

    fn from_sorted(degree: usize, elements: Vec<Perm>, generators: Vec<Perm>) -> Self {
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        FiniteGroup {
            degree,
            elements,
            index,
            inverse,
            generators,
        }
    }

    pub fn trivial() -> Self {
        Self::from_sorted(1, vec![Perm::identity(1)], Vec::new())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Full multiplication table, row-major; only sensible for small groups.
    pub fn mult_table(&self) -> Vec<usize> {
        let n = self.order();
        let mut t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t.push(self.mul(a, b));
            }
        }
        t
    }

    /// Direct product acting on the disjoint union of the two domains.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let d = self.degree + other.degree;
        let mut gens: Vec<Perm> = self.generators().iter().map(|g| g.padded(d)).collect();
        gens.extend(
            other
                .generators()
                .iter()
                .map(|g| g.shifted(self.degree, d)),
        );
        if gens.is_empty() {
            gens.push(Perm::identity(d));
        }
        FiniteGroup::closure(&gens)
    }

    /// The generators the group was built from.
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

/// Parses the group mini-language: `An`, `Sn`, `Zn`, `Dn`, products joined
/// by `x` (e.g. `Z2xZ2`), or `gens: (1 2)(3 4), (1 2 3)`.
pub fn named_group(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("gens:") {
        return FiniteGroup::closure(&parse_generators(rest)?);
    }
    let mut factors = spec.split('x').map(named_factor);
    let first = factors
        .next()
        .ok_or_else(|| Error::input("empty group spec"))??;
    factors.try_fold(first, |acc, f| acc.direct_product(&f?))
}

fn named_factor(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    let unknown = || Error::input(format!("unknown group {name:?}"));
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(unknown());
    }
    let cycle = |pts: std::ops::Range<usize>| Perm::from_cycles(n, &[pts.collect()]);
    let gens = match family {
        'Z' => vec![cycle(0..n)?],
        'S' => {
            if n < 2 {
                vec![Perm::identity(n)]
            } else {
                vec![cycle(0..2)?, cycle(0..n)?]
            }
        }
        'A' => {
            let mut g: Vec<Perm> = (2..n)
                .map(|k| Perm::from_cycles(n, &[vec![0, 1, k]]))
                .collect::<Result<_>>()?;
            if g.is_empty() {
                g.push(Perm::identity(n));
            }
            g
        }
        'D' => {
            if n < 3 {
                return Err(Error::input("dihedral groups need n >= 3"));
            }
            let reflection: Vec<Vec<usize>> = (1..n.div_ceil(2)).map(|i| vec![i, n - i]).collect();
            vec![cycle(0..n)?, Perm::from_cycles(n, &reflection)?]
        }
        _ => return Err(unknown()),
    };
    FiniteGroup::closure(&gens)
}

fn parse_generators(text: &str) -> Result<Vec<Perm>> {
    let mut cycle_lists: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut degree = 0;
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::input("empty generator in gens list"));
        }
        let mut cycles = Vec::new();
        let mut rest = part;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::input(format!("expected '(' in {part:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::input(format!("unclosed cycle in {part:?}")))?;
            let pts: Vec<usize> = body[..close]
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(p) if p >= 1 => Ok(p - 1),
                    _ => Err(Error::input(format!("bad point {t:?}"))),
                })
                .collect::<Result<_>>()?;
            degree = degree.max(pts.iter().map(|p| p + 1).max().unwrap_or(0));
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = body[close + 1..].trim_start();
        }
        cycle_lists.push(cycles);
    }
    let degree = degree.max(1);
    cycle_lists
        .iter()
        .map(|c| Perm::from_cycles(degree, c))
        .collect()
}

/// The involutions `O_2(H)` of a group and the commuting triples `T_2(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionSet {
    /// Element indices of order 2, ascending.
    pub members: Vec<usize>,
    /// Sorted positions into `members`, in lexicographic order.
    pub triples: Vec<[usize; 3]>,
}

pub fn involutions(g: &FiniteGroup) -> InvolutionSet {
    let members = (1..g.order()).filter(|&i| g.mul(i, i) == 0).collect();
    InvolutionSet {
        members,
        triples: Vec::new(),
    }
}

/// Involutions together with every triple of pairwise commuting involutions
/// whose product is the identity.
pub fn commuting_triples(g: &FiniteGroup) -> InvolutionSet {
    let mut set = involutions(g);
    let position: HashMap<usize, usize> = set
        .members
        .iter()
        .enumerate()
        .map(|(pos, &e)| (e, pos))
        .collect();
    let mut triples = BTreeSet::new();
    for (a, &ha) in set.members.iter().enumerate() {
        for (b, &hb) in set.members.iter().enumerate().skip(a + 1) {
            if !g.commute(ha, hb) {
                continue;
            }
            // the product of two distinct commuting involutions is an involution
            let c = position[&g.mul(ha, hb)];
            let mut t = [a, b, c];
            t.sort_unstable();
            triples.insert(t);
        }
    }
    set.triples = triples.into_iter().collect();
    set
}

/// The system `x_a + x_b + x_c = 0` over all commuting involution triples.
pub fn build_mh(g: &FiniteGroup) -> LinSystem {
    let set = commuting_triples(g);
    mh_from_set(&set)
}

pub(crate) fn mh_from_set(set: &InvolutionSet) -> LinSystem {
    let mut m = F2Matrix::zeros(set.triples.len(), set.members.len());
    for (row, t) in set.triples.iter().enumerate() {
        for &c in t {
            m.set(row, c, true);
        }
    }
    LinSystem::homogeneous(m)
}

/// Checks that sending each generator `x_h` to `h` respects every relation
/// of the homogeneous solution group of `M_H`.
pub fn natural_hom_check(g: &FiniteGroup) -> bool {
    let set = commuting_triples(g);
    let sys = mh_from_set(&set);
    let pres = presentation_of(&sys);
    let id = Perm::identity(g.degree());
    let image = |gen: Generator| match gen {
        Generator::X(i) => g.element(set.members[i]).clone(),
        Generator::Gamma => id.clone(),
    };
    let relations_hold = pres
        .relations
        .iter()
        .all(|r| evaluate(&r.lhs, &image, &id) == evaluate(&r.rhs, &image, &id));
    // commutation whenever the group elements commute, not only within equations
    let commuting_hold = set.members.iter().all(|&a| {
        set.members
            .iter()
            .filter(|&&b| g.commute(a, b))
            .all(|&b| {
                let (pa, pb) = (g.element(a), g.element(b));
                pa.compose(pb) == pb.compose(pa)
            })
    });
    relations_hold && commuting_hold
}

fn evaluate(word: &Word, image: &dyn Fn(Generator) -> Perm, id: &Perm) -> Perm {
    word.iter().fold(id.clone(), |acc, letter| {
        let p = image(letter.gen);
        let p = if letter.inverse { p.inverse() } else { p };
        acc.compose(&p)
    })
}

/// A generator of a solution group: a variable `x_i` or the central `γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X(usize),
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl Letter {
    fn x(i: usize) -> Self {
        Letter {
            gen: Generator::X(i),
            inverse: false,
        }
    }

    fn gamma() -> Self {
        Letter {
            gen: Generator::Gamma,
            inverse: false,
        }
    }
}

pub type Word = Vec<Letter>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `x_i^2 = 1`
    Order2,
    /// `x_i x_j = x_j x_i` for variables sharing an equation
    Commuting,
    /// `∏_{i ∈ S_k} x_i = γ^{b_k}`
    Product,
    /// `x_i γ = γ x_i`
    Central,
    /// `γ^2 = 1`
    GammaSquared,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    /// `lhs · rhs⁻¹`
    pub fn relator(&self) -> Word {
        let mut w = self.lhs.clone();
        w.extend(self.rhs.iter().rev().map(|l| Letter {
            gen: l.gen,
            inverse: !l.inverse,
        }));
        w
    }
}

/// A finite presentation of a solution group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub variables: usize,
    pub has_gamma: bool,
    pub relations: Vec<Relation>,
}

/// The presentation of `Γ(M, b)`; for `b = 0` the homogeneous variant with
/// `γ` eliminated.
pub fn presentation_of(sys: &LinSystem) -> Presentation {
    let n = sys.cols();
    let has_gamma = !sys.is_homogeneous();
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push(Relation {
            kind: RelationKind::Order2,
            lhs: vec![Letter::x(i), Letter::x(i)],
            rhs: vec![],
        });
    }
    let mut pairs = BTreeSet::new();
    for k in 0..sys.rows() {
        let s = sys.support(k);
        for (a, &i) in s.iter().enumerate() {
            for &j in &s[a + 1..] {
                pairs.insert((i, j));
            }
        }
    }
    for (i, j) in pairs {
        relations.push(Relation {
            kind: RelationKind::Commuting,
            lhs: vec![Letter::x(i), Letter::x(j)],
            rhs: vec![Letter::x(j), Letter::x(i)],
        });
    }
    for k in 0..sys.rows() {
        let rhs = if sys.rhs()[k] {
            vec![Letter::gamma()]
        } else {
            vec![]
        };
        relations.push(Relation {
            kind: RelationKind::Product,
            lhs: sys.support(k).into_iter().map(Letter::x).collect(),
            rhs,
        });
    }
    if has_gamma {
        relations.push(Relation {
            kind: RelationKind::GammaSquared,
            lhs: vec![Letter::gamma(), Letter::gamma()],
            rhs: vec![],
        });
        for i in 0..n {
            relations.push(Relation {
                kind: RelationKind::Central,
                lhs: vec![Letter::x(i), Letter::gamma()],
                rhs: vec![Letter::gamma(), Letter::x(i)],
            });
        }
    }
    Presentation {
        variables: n,
        has_gamma,
        relations,
    }
}

fn gen_name(g: Generator, pretty: bool) -> String {
    match g {
        Generator::X(i) => format!("x{}", i + 1),
        Generator::Gamma if pretty => "γ".to_string(),
        Generator::Gamma => "g".to_string(),
    }
}

/// Renders a word with runs of equal letters collapsed into powers.
fn render_word(w: &Word, pretty: bool) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let sep = if pretty { "" } else { "*" };
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let power = (j - i) as i64 * if w[i].inverse { -1 } else { 1 };
        let name = gen_name(w[i].gen, pretty);
        parts.push(match power {
            1 => name,
            p => format!("{name}^{p}"),
        });
        i = j;
    }
    parts.join(sep)
}

impl Presentation {
    pub fn generator_names(&self, pretty: bool) -> Vec<String> {
        let mut names: Vec<String> = (0..self.variables)
            .map(|i| gen_name(Generator::X(i), pretty))
            .collect();
        if self.has_gamma {
            names.push(gen_name(Generator::Gamma, pretty));
        }
        names
    }

    pub fn count(&self, kind: RelationKind) -> usize {
        self.relations.iter().filter(|r| r.kind == kind).count()
    }

    /// One relator word per line, letters `x<i>` and `g` for `γ`.
    pub fn to_relator_lines(&self) -> String {
        self.relations
            .iter()
            .map(|r| render_word(&r.relator(), false) + "\n")
            .collect()
    }

    /// A GAP snippet constructing the finitely presented group.
    pub fn to_gap(&self) -> String {
        let names = self.generator_names(false);
        let quoted: Vec<String> = names.iter().map(|n| format!("\"{n}\"")).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| render_word(&r.relator(), false))
            .collect();
        format!(
            "F := FreeGroup({});\nAssignGeneratorVariables(F);\nG := F / [{}];\n",
            quoted.join(", "),
            rels.join(", ")
        )
    }
}

/// `⟨x1,…,xn | r1, …⟩`
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| format!("{} = {}", render_word(&r.lhs, true), render_word(&r.rhs, true)))
            .collect();
        write!(
            f,
            "⟨{} | {}⟩",
            self.generator_names(true).join(","),
            rels.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &[&[usize]]) -> Perm {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
        Perm::from_cycles(degree, &c).unwrap()
    }

    #[test]
    fn closure_orders() {
        let g = FiniteGroup::closure(&[p(4, &[&[1, 2], &[3, 4]])]).unwrap();
        assert_eq!(g.order(), 2);
        let a4 = FiniteGroup::closure(&[p(4, &[&[1, 2, 3]]), p(4, &[&[2, 3, 4]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.element(0).is_identity());
    }

    #[test]
    fn closure_errors() {
        let err = FiniteGroup::closure(&[Perm::identity(3), Perm::identity(4)]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
        let t = Perm::from_cycles(5, &[vec![0, 1]]).unwrap();
        let c = Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let err = FiniteGroup::closure_with_cap(&[t, c], 10).unwrap_err();
        assert!(matches!(err, Error::Size { limit: 10, .. }));
    }

    #[test]
    fn named_groups() {
        assert_eq!(named_group("Z3").unwrap().order(), 3);
        assert_eq!(named_group("Z1").unwrap().order(), 1);
        assert_eq!(named_group("S3").unwrap().order(), 6);
        assert_eq!(named_group("A5").unwrap().order(), 60);
        assert_eq!(named_group("D4").unwrap().order(), 8);
        let k4 = named_group("Z2xZ2").unwrap();
        assert_eq!(k4.order(), 4);
        assert_eq!(involutions(&k4).members.len(), 3);
        assert_eq!(named_group("gens: (1 2)(3 4), (1 2 3)").unwrap().order(), 12);
        assert_eq!(named_group("Z2xZ3").unwrap().order(), 6);
        for bad in ["Q8", "", "Zx", "Z0", "gens: (1 2", "gens: (1 1)"] {
            assert!(named_group(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn involution_counts() {
        assert!(involutions(&named_group("Z3").unwrap()).members.is_empty());
        let a4 = named_group("A4").unwrap();
        assert_eq!(involutions(&a4).members.len(), 3);
        let t = commuting_triples(&a4);
        assert_eq!(t.triples, vec![[0, 1, 2]]);
        assert!(commuting_triples(&named_group("Z2").unwrap()).triples.is_empty());
    }

    #[test]
    fn mh_of_small_groups() {
        let a4 = build_mh(&named_group("A4").unwrap());
        assert_eq!(a4.matrix(), &F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap());
        let z3 = build_mh(&named_group("Z3").unwrap());
        assert_eq!((z3.rows(), z3.cols()), (0, 0));
        assert_eq!(a4.matrix().nullity(), 2);
    }

    #[test]
    fn natural_hom_small() {
        for name in ["A4", "Z2xZ2", "S4", "D5", "Z3"] {
            assert!(natural_hom_check(&named_group(name).unwrap()), "{name}");
        }
    }

    #[test]
    fn presentation_homogeneous() {
        let sys = LinSystem::homogeneous(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap());
        let pres = presentation_of(&sys);
        assert_eq!(pres.count(RelationKind::Order2), 3);
        assert_eq!(pres.count(RelationKind::Commuting), 3);
        assert_eq!(pres.count(RelationKind::Product), 1);
        assert!(!pres.has_gamma);
        assert_eq!(
            pres.to_string(),
            "⟨x1,x2,x3 | x1^2 = 1, x2^2 = 1, x3^2 = 1, x1x2 = x2x1, x1x3 = x3x1, x2x3 = x3x2, x1x2x3 = 1⟩"
        );
        assert_eq!(
            pres.to_relator_lines(),
            "x1^2\nx2^2\nx3^2\nx1*x2*x1^-1*x2^-1\nx1*x3*x1^-1*x3^-1\nx2*x3*x2^-1*x3^-1\nx1*x2*x3\n"
        );
    }

    #[test]
    fn presentation_inhomogeneous() {
        let sys = LinSystem::new(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap(), vec![true]).unwrap();
        let pres = presentation_of(&sys);
        assert!(pres.has_gamma);
        assert_eq!(pres.count(RelationKind::GammaSquared), 1);
        assert_eq!(pres.count(RelationKind::Central), 3);
        let product = pres
            .relations
            .iter()
            .find(|r| r.kind == RelationKind::Product)
            .unwrap();
        assert_eq!(render_word(&product.relator(), false), "x1*x2*x3*g^-1");
        assert!(pres.to_gap().contains("FreeGroup(\"x1\", \"x2\", \"x3\", \"g\")"));
    }

    #[test]
    fn presentation_empty() {
        let pres = presentation_of(&LinSystem::homogeneous(F2Matrix::zeros(0, 0)));
        assert!(pres.relations.is_empty());
        assert_eq!(pres.to_string(), "⟨ | ⟩");
    }

    #[test]
    fn perm_display() {
        assert_eq!(p(4, &[&[1, 2], &[3, 4]]).to_string(), "(1 2)(3 4)");
        assert_eq!(Perm::identity(3).to_string(), "()");
    }
}
