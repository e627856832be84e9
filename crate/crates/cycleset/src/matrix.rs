//! Dense integer matrices with exact (arbitrary-precision) entries and the
//! Smith normal form machinery underlying all finite-abelian-group linear
//! algebra in this crate.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense `rows × cols` matrix over the integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(fm, "  ")?;
            for c in 0..self.cols {
                write!(fm, "{} ", self.at(r, c))?;
            }
            writeln!(fm)?;
        }
        write!(fm, "]")
    }
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMat { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given coordinate vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = IntMat::zero(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for r in 0..rows {
                m.set(r, c, col[r].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        IntMat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "mul dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let cur = out.at(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * &v[c]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(a, c) + q * self.at(b, c);
            self.set(a, c, v);
        }
    }

    /// col[a] += q * col[b]
    fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, a) + q * self.at(r, b);
            self.set(r, a, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c);
            self.set(r, c, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }
}

/// Result of a Smith normal form computation: `u * m * v = s` with `u`, `v`
/// unimodular, `s` diagonal with non-negative entries and `s[i][i]`
/// dividing `s[i+1][i+1]`. The inverses of the transforms are tracked
/// alongside so that callers can move vectors in both directions without
/// re-solving.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMat,
    pub u: IntMat,
    pub v: IntMat,
    pub u_inv: IntMat,
    pub v_inv: IntMat,
}

impl Snf {
    /// Diagonal entries of `s` (length `min(rows, cols)`).
    pub fn diag(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.at(i, i).clone()).collect()
    }

    /// Number of non-zero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Computes the Smith normal form of `m`, choosing at each step the pivot of
/// minimal non-zero absolute value in the remaining submatrix to keep
/// intermediate entries small.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMat::identity(rows);
    let mut u_inv = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut v_inv = IntMat::identity(cols);

    // Elementary operations on `s`, mirrored on the transforms.
    // Row op on s => same row op on u, inverse column op on u_inv.
    // Col op on s => same col op on v, inverse row op on v_inv.
    macro_rules! srow_swap {
        ($a:expr, $b:expr) => {{
            s.swap_rows($a, $b);
            u.swap_rows($a, $b);
            u_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! scol_swap {
        ($a:expr, $b:expr) => {{
            s.swap_cols($a, $b);
            v.swap_cols($a, $b);
            v_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! srow_add {
        ($a:expr, $b:expr, $q:expr) => {{
            let q: BigInt = $q;
            s.add_row_multiple($a, $b, &q);
            u.add_row_multiple($a, $b, &q);
            u_inv.add_col_multiple($b, $a, &(-&q));
        }};
    }
    macro_rules! scol_add {
        ($a:expr, $b:expr, $q:expr) => {{
            let q: BigInt = $q;
            s.add_col_multiple($a, $b, &q);
            v.add_col_multiple($a, $b, &q);
            v_inv.add_row_multiple($b, $a, &(-&q));
        }};
    }

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // Min-abs non-zero pivot in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !s.at(r, c).is_zero()
                    && pivot.is_none_or(|(pr, pc)| s.at(r, c).abs() < s.at(pr, pc).abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        srow_swap!(t, pr);
        scol_swap!(t, pc);

        'clear: loop {
            // Reduce the pivot column.
            for r in t + 1..rows {
                if !s.at(r, t).is_zero() {
                    let q = s.at(r, t) / s.at(t, t);
                    srow_add!(r, t, -q);
                    if !s.at(r, t).is_zero() {
                        // Remainder became the smaller pivot; promote it.
                        srow_swap!(t, r);
                        continue 'clear;
                    }
                }
            }
            // Reduce the pivot row.
            for c in t + 1..cols {
                if !s.at(t, c).is_zero() {
                    let q = s.at(t, c) / s.at(t, t);
                    scol_add!(c, t, -q);
                    if !s.at(t, c).is_zero() {
                        scol_swap!(t, c);
                        continue 'clear;
                    }
                }
            }
            // Pivot must divide every remaining entry for the divisibility
            // chain; if not, fold the offending row in and restart.
            for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(s.at(r, c) % s.at(t, t)).is_zero() {
                        srow_add!(t, r, BigInt::one());
                        continue 'clear;
                    }
                }
            }
            break;
        }

        if s.at(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
            for r in 0..rows {
                let vneg = -u_inv.at(r, t);
                u_inv.set(r, t, vneg);
            }
        }
        t += 1;
    }

    Snf { s, u, v, u_inv, v_inv }
}

/// Solves `a · x = rhs` over the integers. Returns a particular solution, or
/// `None` when the system has no integral solution.
pub fn solve(a: &IntMat, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
    SnfSolver::new(a).solve(rhs)
}

/// Pre-factored solver for repeated `a · x = rhs` queries against a fixed
/// matrix.
pub struct SnfSolver {
    cols: usize,
    snf: Snf,
}

impl SnfSolver {
    pub fn new(a: &IntMat) -> Self {
        SnfSolver { cols: a.cols(), snf: smith_normal_form(a) }
    }

    pub fn solve(&self, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.snf.u.mul_vec(rhs);
        let n = self.snf.s.rows().min(self.snf.s.cols());
        let mut y = vec![BigInt::zero(); self.cols];
        for (i, wi) in w.iter().enumerate() {
            if i < n && !self.snf.s.at(i, i).is_zero() {
                let d = self.snf.s.at(i, i);
                if !(wi % d).is_zero() {
                    return None;
                }
                y[i] = wi / d;
            } else if !wi.is_zero() {
                return None;
            }
        }
        Some(self.snf.v.mul_vec(&y))
    }
}

/// Returns a matrix whose columns form a basis of the lattice
/// `{x : a · x = 0}`.
pub fn kernel_basis(a: &IntMat) -> IntMat {
    let snf = smith_normal_form(a);
    let n = a.rows().min(a.cols());
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..a.cols() {
        if j >= n || snf.s.at(j, j).is_zero() {
            cols.push(snf.v.column(j));
        }
    }
    IntMat::from_columns(a.cols(), &cols)
}
