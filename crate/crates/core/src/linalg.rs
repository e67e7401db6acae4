//! Dense matrices over a prime field `F_p` and the subspace helpers built on them.
//!
//! Subspaces of `F_p^n` are carried as matrices whose columns form a basis.

use std::fmt;

/// Modular exponentiation.
pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero element of `F_p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

/// Trial-division primality check, enough for field characteristics.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} over F_{} [", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        Matrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, p: u32, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(rows, cols, p);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c) % p;
            }
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, p, |r, c| rows[r][c])
    }

    /// Builds a `rows x k` matrix whose columns are the given vectors.
    pub fn from_cols(p: u32, rows: usize, cols: &[Vec<u32>]) -> Self {
        Self::from_fn(rows, cols.len(), p, |r, c| cols[c][r])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j) as u64;
                    if b != 0 {
                        let idx = i * other.cols + j;
                        out.data[idx] = ((out.data[idx] as u64 + a * b) % p) as u32;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc += self.get(r, c) as u64 * v[c] as u64;
                }
                (acc % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % p).collect();
        Matrix { rows: self.rows, cols: self.cols, p, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + p - b) % p).collect();
        Matrix { rows: self.rows, cols: self.cols, p, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let p = self.p as u64;
        let s = s as u64 % p;
        let data = self.data.iter().map(|&a| (a as u64 * s % p) as u32).collect();
        Matrix { rows: self.rows, cols: self.cols, p: self.p, data }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.p, |r, c| self.get(c, r))
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = inv_mod(m.get(row, col), self.p) as u64;
            for c in col..m.cols {
                let v = m.get(row, c) as u64 * inv % p;
                m.data[row * m.cols + c] = v as u32;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col) as u64;
                if f == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let sub = f * m.get(row, c) as u64 % p;
                    let cur = m.get(r, c) as u64;
                    m.data[r * m.cols + c] = ((cur + p - sub) % p) as u32;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}` as the columns of a `cols x k` matrix.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len(), p);
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if v != 0 {
                    out.set(pc, k, p - v);
                }
            }
        }
        out
    }

    /// Basis of the column space, chosen among the original columns.
    pub fn col_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), self.p, |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, self.p, |r, c| self.get(rows[r], c))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::hstack(&[self, &Matrix::identity(n, self.p)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, self.p, |i, j| r.get(i, n + j)))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some `X` with `self * X = b`, if one exists.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let n = self.cols;
        let aug = Matrix::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, b.cols, self.p);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, n + j));
            }
        }
        Some(x)
    }

    pub fn hstack(ms: &[&Matrix]) -> Matrix {
        let rows = ms[0].rows;
        let p = ms[0].p;
        let cols = ms.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols, p);
        let mut off = 0;
        for m in ms {
            assert_eq!(m.rows, rows);
            for r in 0..rows {
                for c in 0..m.cols {
                    out.data[r * cols + off + c] = m.get(r, c);
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(ms: &[&Matrix]) -> Matrix {
        let cols = ms[0].cols;
        let p = ms[0].p;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in ms {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix { rows, cols, p, data }
    }

    /// Block-diagonal sum of square or rectangular blocks.
    pub fn block_diag(ms: &[&Matrix], p: u32) -> Matrix {
        let rows = ms.iter().map(|m| m.rows).sum();
        let cols = ms.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols, p);
        let (mut r0, mut c0) = (0, 0);
        for m in ms {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r0 + r, c0 + c, m.get(r, c));
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn slice(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, self.p, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }
}

/// Basis of `span(a) + span(b)`.
pub fn span_sum(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::hstack(&[a, b]).col_space()
}

/// Basis of `span(a) ∩ span(b)`.
pub fn span_intersection(a: &Matrix, b: &Matrix) -> Matrix {
    let p = a.p();
    if a.cols() == 0 || b.cols() == 0 {
        return Matrix::zeros(a.rows(), 0, p);
    }
    let stacked = Matrix::hstack(&[a, &b.scale(p - 1)]);
    let ns = stacked.nullspace();
    let coeff = ns.slice(0, a.cols(), 0, ns.cols());
    a.mul(&coeff).col_space()
}

/// Columns `C` such that `[a | C]` is invertible (`a` must have independent columns).
pub fn complement(a: &Matrix) -> Matrix {
    let n = a.rows();
    let p = a.p();
    let full = Matrix::hstack(&[a, &Matrix::identity(n, p)]);
    let (_, pivots) = full.rref();
    let extra: Vec<usize> = pivots.into_iter().filter(|&c| c >= a.cols()).collect();
    full.select_cols(&extra)
}

/// Coordinates of `v` in the basis given by the columns of `basis`.
pub fn coordinates(basis: &Matrix, v: &[u32]) -> Option<Vec<u32>> {
    let b = Matrix::from_cols(basis.p(), basis.rows(), &[v.to_vec()]);
    basis.solve(&b).map(|x| x.col(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(7, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, 7));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = Matrix::from_rows(5, &[vec![1, 2, 3], vec![2, 4, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 1);
        assert!(m.mul(&ns).is_zero());
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let p = 11;
        let a = Matrix::from_cols(p, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Matrix::from_cols(p, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = span_intersection(&a, &b);
        assert_eq!(i.cols(), 1);
        assert_eq!(span_sum(&a, &b).cols(), 3);
    }

    #[test]
    fn complement_completes_basis() {
        let a = Matrix::from_cols(13, 3, &[vec![1, 1, 0]]);
        let c = complement(&a);
        assert_eq!(c.cols(), 2);
        assert!(Matrix::hstack(&[&a, &c]).is_invertible());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Matrix::from_rows(3, &[vec![1, 1], vec![1, 1]]);
        let b = Matrix::from_rows(3, &[vec![1], vec![2]]);
        assert!(a.solve(&b).is_none());
    }
}
