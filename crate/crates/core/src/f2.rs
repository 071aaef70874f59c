//! Dense linear algebra over F_2.
//!
//! Matrices are stored row-major, one bit per entry, packed into `u64`
//! words. Bits past `cols` in the last word of a row are always zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A dense `rows × cols` matrix over F_2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

/// Column order used when searching for pivots during elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotOrder {
    Forward,
    Reverse,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        F2Matrix {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of booleans. All rows must share one length.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::input(format!(
                    "ragged matrix: row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from 0/1 integer rows, e.g. `&[[1, 1, 0], [0, 1, 1]]`.
    pub fn from_u8_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let bools: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| v & 1 == 1).collect())
            .collect();
        Self::from_rows(&bools)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index out of range");
        (self.bits[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let w = &mut self.bits[r * self.stride + c / WORD];
        let mask = 1u64 << (c % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.stride..(r + 1) * self.stride]
    }

    /// Row `r` as a boolean vector.
    pub fn row(&self, r: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    /// Column indices with a one in row `r` (the support `S_k`).
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.row_words(r).iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Row indices with a one in column `c` (the set `T_i`).
    pub fn col_support(&self, c: usize) -> Vec<usize> {
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let s = self.stride;
        if src == dst {
            return;
        }
        let (a, b) = if src < dst {
            let (lo, hi) = self.bits.split_at_mut(dst * s);
            (&lo[src * s..src * s + s], &mut hi[..s])
        } else {
            let (lo, hi) = self.bits.split_at_mut(src * s);
            (&hi[..s] as &[u64], &mut lo[dst * s..dst * s + s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= *x;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.bits.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Computes `M x` for a vector of length `cols`.
    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        let packed = pack(x);
        (0..self.rows)
            .map(|r| {
                let ones: u32 = self
                    .row_words(r)
                    .iter()
                    .zip(&packed)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                ones % 2 == 1
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns in row order.
    fn reduce(&mut self, order: PivotOrder) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        let cols: Vec<usize> = match order {
            PivotOrder::Forward => (0..self.cols).collect(),
            PivotOrder::Reverse => (0..self.cols).rev().collect(),
        };
        for c in cols {
            if next_row == self.rows {
                break;
            }
            let Some(p) = (next_row..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(p, next_row);
            for r in 0..self.rows {
                if r != next_row && self.get(r, c) {
                    self.xor_row_into(next_row, r);
                }
            }
            pivots.push(c);
            next_row += 1;
        }
        pivots
    }

    /// Row rank over F_2.
    pub fn rank(&self) -> usize {
        self.rank_with(PivotOrder::Forward)
    }

    pub fn rank_with(&self, order: PivotOrder) -> usize {
        self.clone().reduce(order).len()
    }

    /// A basis of `{x : M x = 0}`, one vector per free column (ascending).
    pub fn nullspace_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.reduce(PivotOrder::Forward);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![false; self.cols];
                v[f] = true;
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        v[p] = true;
                    }
                }
                v
            })
            .collect()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_support(r) {
                t.set(c, r, true);
            }
        }
        t
    }
}

fn pack(x: &[bool]) -> Vec<u64> {
    let mut out = vec![0u64; words_for(x.len())];
    for (i, &b) in x.iter().enumerate() {
        if b {
            out[i / WORD] |= 1 << (i % WORD);
        }
    }
    out
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let s: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// A linear system `M x = b` over F_2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinSystem {
    matrix: F2Matrix,
    rhs: Vec<bool>,
}

impl LinSystem {
    pub fn new(matrix: F2Matrix, rhs: Vec<bool>) -> Result<Self> {
        if rhs.len() != matrix.rows() {
            return Err(Error::input(format!(
                "right-hand side has length {}, matrix has {} rows",
                rhs.len(),
                matrix.rows()
            )));
        }
        Ok(LinSystem { matrix, rhs })
    }

    pub fn homogeneous(matrix: F2Matrix) -> Self {
        let rhs = vec![false; matrix.rows()];
        LinSystem { matrix, rhs }
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[bool] {
        &self.rhs
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rhs.iter().all(|&b| !b)
    }

    /// `S_k`: the variables appearing in equation `k`.
    pub fn support(&self, k: usize) -> Vec<usize> {
        self.matrix.row_support(k)
    }

    /// `T_i`: the equations mentioning variable `i`.
    pub fn occurrences(&self, i: usize) -> Vec<usize> {
        self.matrix.col_support(i)
    }

    /// Reduces an inhomogeneous system to a homogeneous one with an
    /// isomorphic solution group.
    ///
    /// Appends the columns `1 + b` and `1`, then the row `0 … 0 1 1`.
    /// Homogeneous input is returned unchanged.
    pub fn homogenize(&self) -> LinSystem {
        if self.is_homogeneous() {
            return self.clone();
        }
        let (m, n) = (self.rows(), self.cols());
        let mut out = F2Matrix::zeros(m + 1, n + 2);
        for r in 0..m {
            for c in self.matrix.row_support(r) {
                out.set(r, c, true);
            }
            out.set(r, n, !self.rhs[r]);
            out.set(r, n + 1, true);
        }
        out.set(m, n, true);
        out.set(m, n + 1, true);
        LinSystem::homogeneous(out)
    }

    /// Exhaustively checks that the nullspace of the homogenized matrix is
    /// exactly `{(y, t, t) : M y = t·b}`.
    pub fn solve_correspondence_check(&self) -> Result<bool> {
        const WINDOW: usize = 20;
        if self.is_homogeneous() {
            return Err(Error::input(
                "correspondence check needs a nonzero right-hand side",
            ));
        }
        if self.cols() > WINDOW {
            return Err(Error::Size {
                what: "variable count",
                limit: WINDOW,
                actual: self.cols(),
            });
        }
        let n = self.cols();
        let hom = self.homogenize();
        let total = n + 2;
        let mut x = vec![false; total];
        for bits in 0u64..(1u64 << total) {
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = (bits >> i) & 1 == 1;
            }
            let in_kernel = hom.matrix.mul_vec(&x).iter().all(|&v| !v);
            let (y, tail) = x.split_at(n);
            let expected = tail[0] == tail[1] && {
                let t = tail[0];
                self.matrix
                    .mul_vec(y)
                    .iter()
                    .zip(&self.rhs)
                    .all(|(&lhs, &b)| lhs == (t && b))
            };
            if in_kernel != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renders the system in the plain text format accepted by [`FromStr`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows(), self.cols());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                s.push(if self.matrix.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        if !self.is_homogeneous() {
            s.push_str("b ");
            s.extend(self.rhs.iter().map(|&b| if b { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }
}

fn parse_bits(line_no: usize, text: &str, expected: usize) -> Result<Vec<bool>> {
    if text.chars().count() != expected {
        return Err(Error::parse(
            line_no,
            format!("expected {expected} characters, found {}", text.chars().count()),
        ));
    }
    text.chars()
        .map(|ch| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::parse(line_no, format!("unexpected character {other:?}"))),
        })
        .collect()
}

impl FromStr for LinSystem {
    type Err = Error;

    /// Parses `m n`, then `m` lines of `n` bits, then an optional `b <bits>`.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::parse(hl, format!("bad header: {e}")))?;
        let [m, n] = dims[..] else {
            return Err(Error::parse(hl, "header must be `m n`"));
        };
        let mut matrix = F2Matrix::zeros(m, n);
        // with no columns the rows are blank lines, already skipped
        for r in (0..m).filter(|_| n > 0) {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| Error::parse(hl + r + 1, "missing matrix row"))?;
            for (c, bit) in parse_bits(ln, line, n)?.into_iter().enumerate() {
                matrix.set(r, c, bit);
            }
        }
        let rhs = match lines.next() {
            None => vec![false; m],
            Some((ln, line)) => {
                let rest = line
                    .strip_prefix('b')
                    .ok_or_else(|| Error::parse(ln, "expected `b <bits>` or end of input"))?;
                parse_bits(ln, rest.trim(), m)?
            }
        };
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "trailing content"));
        }
        LinSystem::new(matrix, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_kernel(m: &F2Matrix) -> Vec<Vec<bool>> {
        let n = m.cols();
        (0u32..(1 << n))
            .map(|bits| (0..n).map(|i| (bits >> i) & 1 == 1).collect::<Vec<_>>())
            .filter(|x| m.mul_vec(x).iter().all(|&v| !v))
            .collect()
    }

    #[test]
    fn zero_and_identity_ranks() {
        assert_eq!(F2Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(F2Matrix::identity(4).rank(), 4);
        assert!(F2Matrix::identity(4).nullspace_basis().is_empty());
    }

    #[test]
    fn empty_shapes_are_legal() {
        for (r, c) in [(0, 0), (0, 5), (4, 0)] {
            let m = F2Matrix::zeros(r, c);
            assert_eq!(m.rank(), 0);
            assert_eq!(m.nullspace_basis().len(), c);
        }
    }

    #[test]
    fn all_ones_row_nullspace() {
        let m = F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap();
        // brute force: kernel has 4 elements, so dimension 2
        assert_eq!(brute_kernel(&m).len(), 4);
        let basis = m.nullspace_basis();
        assert_eq!(
            basis,
            vec![vec![true, true, false], vec![true, false, true]]
        );
    }

    #[test]
    fn homogenize_single_equation() {
        let sys = LinSystem::new(F2Matrix::from_u8_rows(&[[1, 1, 1]]).unwrap(), vec![true]).unwrap();
        let h = sys.homogenize();
        let expected = F2Matrix::from_u8_rows(&[[1, 1, 1, 0, 1], [0, 0, 0, 1, 1]]).unwrap();
        assert_eq!(h.matrix(), &expected);
        assert!(h.is_homogeneous());
    }

    #[test]
    fn homogenize_two_equations() {
        let sys = LinSystem::new(
            F2Matrix::from_u8_rows(&[[1, 1], [0, 1]]).unwrap(),
            vec![false, true],
        )
        .unwrap();
        let expected =
            F2Matrix::from_u8_rows(&[[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1]]).unwrap();
        assert_eq!(sys.homogenize().matrix(), &expected);
    }

    #[test]
    fn homogenize_passthrough() {
        let sys = LinSystem::homogeneous(F2Matrix::from_u8_rows(&[[1, 0, 1]]).unwrap());
        assert_eq!(sys.homogenize(), sys);
    }

    #[test]
    fn correspondence_small_cases() {
        for (rows, b) in [
            (vec![vec![1u8, 1, 1]], vec![true]),
            (vec![vec![1, 0]], vec![true]),
            (vec![vec![1]], vec![true]),
        ] {
            let sys = LinSystem::new(F2Matrix::from_u8_rows(&rows).unwrap(), b).unwrap();
            assert!(sys.solve_correspondence_check().unwrap());
        }
    }

    #[test]
    fn correspondence_window() {
        let sys = LinSystem::new(F2Matrix::zeros(1, 21), vec![true]).unwrap();
        assert!(matches!(
            sys.solve_correspondence_check(),
            Err(Error::Size { .. })
        ));
        let hom = LinSystem::homogeneous(F2Matrix::zeros(1, 2));
        assert!(matches!(hom.solve_correspondence_check(), Err(Error::Input(_))));
    }

    #[test]
    fn text_format() {
        let sys: LinSystem = "2 3\n110\n011\nb 10\n".parse().unwrap();
        assert_eq!(sys.rhs(), &[true, false]);
        assert_eq!(sys.support(1), vec![1, 2]);
        assert_eq!(sys.occurrences(1), vec![0, 1]);
        assert_eq!(sys.to_text().parse::<LinSystem>().unwrap(), sys);

        let hom: LinSystem = "1 2\n11\n".parse().unwrap();
        assert!(hom.is_homogeneous());
        assert_eq!(hom.to_text(), "1 2\n11\n");

        assert!("2 3\n110\n01\n".parse::<LinSystem>().is_err());
        assert!("1 2\n12\n".parse::<LinSystem>().is_err());
        assert!("1 2\n11\nb 1\nextra\n".parse::<LinSystem>().is_err());
        assert!("1 2\n11\nb 11\n".parse::<LinSystem>().is_err());
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = F2Matrix::zeros(3, 130);
        for c in [0, 63, 64, 129] {
            m.set(0, c, true);
        }
        m.set(1, 64, true);
        m.set(2, 129, true);
        assert_eq!(m.row_support(0), vec![0, 63, 64, 129]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.nullspace_basis().len(), 127);
        for v in m.nullspace_basis() {
            assert!(m.mul_vec(&v).iter().all(|&b| !b));
        }
    }
}
