//! Dense matrices over `F_p`.
//!
//! Throughout the crate, vectors are rows and linear maps act on the right:
//! the image of `v` under the map with matrix `m` is `v * m`. Subspaces are
//! stored as row-span matrices; the reduced row echelon form of a spanning
//! matrix is the canonical form of the subspace it spans.

use crate::fp::Fp;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>, // row-major residues
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, p: u32) -> Matrix {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Matrix {
        let mut m = Matrix::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize, p: u32) -> Matrix {
        let mut m = Matrix::zero(rows.len(), cols, p);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
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

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<u32> {
        self.row(i).to_vec()
    }

    pub fn push_row(&mut self, r: &[u32]) {
        assert_eq!(r.len(), self.cols);
        self.data.extend(r.iter().map(|&v| v % self.p));
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// `self * other`, acting on row vectors left to right.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = Matrix::zero(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j) as u64;
                    out.set(i, j, ((cur + a * other.get(k, j) as u64) % p) as u32);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = (self.data[i] + other.data[i]) % self.p;
        }
        out
    }

    pub fn scale(&self, c: Fp) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = ((*v as u64 * c.val() as u64) % self.p as u64) as u32;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(Fp::new(-1, self.p)))
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows, self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        out
    }

    /// Concatenate `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(self.rows, self.cols + other.cols, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p64 = self.p as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut sel = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else { continue };
            for j in 0..self.cols {
                let (a, b) = (self.get(r, j), self.get(i, j));
                self.set(r, j, b);
                self.set(i, j, a);
            }
            let inv = Fp::new(self.get(r, c) as i64, self.p).inv().val() as u64;
            for j in 0..self.cols {
                self.set(r, j, ((self.get(r, j) as u64 * inv) % p64) as u32);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let f = self.get(i, c) as u64;
                    for j in 0..self.cols {
                        let v = (self.get(i, j) as u64 + (p64 - f) * self.get(r, j) as u64) % p64;
                        self.set(i, j, v as u32);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Canonical basis of the row space: RREF with zero rows dropped.
    pub fn row_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut out = Matrix::zero(0, self.cols, self.p);
        for i in 0..pivots.len() {
            out.push_row(m.row(i));
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of `{ x : x * self = 0 }` (row vectors of length `rows`).
    pub fn left_nullspace(&self) -> Matrix {
        self.transpose().right_kernel_as_rows()
    }

    /// Basis of `{ y : self * y^T = 0 }`, returned as rows of length `cols`.
    fn right_kernel_as_rows(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Matrix::zero(0, self.cols, self.p);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (self.p - m.get(r, free)) % self.p;
            }
            out.push_row(&v);
        }
        out
    }

    /// Reduces `v` against the RREF rows of `self` (which must be in RREF).
    pub fn reduce_against(&self, pivots: &[usize], v: &[u32]) -> Vec<u32> {
        let p64 = self.p as u64;
        let mut w = v.to_vec();
        for (r, &c) in pivots.iter().enumerate() {
            let f = w[c] as u64;
            if f != 0 {
                for j in 0..self.cols {
                    w[j] = ((w[j] as u64 + (p64 - f) * self.get(r, j) as u64) % p64) as u32;
                }
            }
        }
        w
    }

    /// Solve `x * self = target` for each row of `target`.
    /// Returns the coefficient matrix, or None if some row is not in the row span.
    pub fn solve_rows(&self, target: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, target.cols);
        // Augment each spanning row with the unit vector recording coefficients.
        let n = self.rows;
        let mut aug = Matrix::zero(n, self.cols + n, self.p);
        for i in 0..n {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols + i, 1);
        }
        let mut red = aug;
        let mut pivots = Vec::new();
        // Partial RREF only on the first `cols` columns.
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let mut sel = None;
            for i in r..n {
                if red.get(i, c) != 0 {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else { continue };
            for j in 0..red.cols {
                let (a, b) = (red.get(r, j), red.get(i, j));
                red.set(r, j, b);
                red.set(i, j, a);
            }
            let inv = Fp::new(red.get(r, c) as i64, self.p).inv().val() as u64;
            for j in 0..red.cols {
                red.set(r, j, ((red.get(r, j) as u64 * inv) % self.p as u64) as u32);
            }
            for i in 0..n {
                if i != r && red.get(i, c) != 0 {
                    let f = red.get(i, c) as u64;
                    for j in 0..red.cols {
                        let v = (red.get(i, j) as u64 + (self.p as u64 - f) * red.get(r, j) as u64)
                            % self.p as u64;
                        red.set(i, j, v as u32);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut out = Matrix::zero(target.rows, n, self.p);
        for t in 0..target.rows {
            let mut w = target.row_vec(t);
            let mut coeff = vec![0u32; n];
            for (ri, &c) in pivots.iter().enumerate() {
                let f = w[c];
                if f != 0 {
                    let f64 = f as u64;
                    for j in 0..self.cols {
                        w[j] = ((w[j] as u64
                            + (self.p as u64 - 1) as u64 * f64 % self.p as u64
                                * red.get(ri, j) as u64)
                            % self.p as u64) as u32;
                    }
                    for j in 0..n {
                        coeff[j] = ((coeff[j] as u64 + f64 * red.get(ri, self.cols + j) as u64)
                            % self.p as u64) as u32;
                    }
                }
            }
            if w.iter().any(|&v| v != 0) {
                return None;
            }
            for j in 0..n {
                out.set(t, j, coeff[j]);
            }
        }
        Some(out)
    }

    /// True if `v` lies in the row span.
    pub fn row_span_contains(&self, v: &[u32]) -> bool {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let red = m.reduce_against(&pivots, v);
        red.iter().all(|&x| x == 0)
    }

    /// Intersection of the row spaces of `self` and `other`.
    pub fn row_space_intersection(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        // Zassenhaus: rows [A | A] and [B | 0]; the echelon rows with zero
        // left half have right half spanning the intersection.
        let p = self.p;
        let c = self.cols;
        let mut big = Matrix::zero(0, 2 * c, p);
        for i in 0..self.rows {
            let mut r = vec![0u32; 2 * c];
            r[..c].copy_from_slice(self.row(i));
            r[c..].copy_from_slice(self.row(i));
            big.push_row(&r);
        }
        for i in 0..other.rows {
            let mut r = vec![0u32; 2 * c];
            r[..c].copy_from_slice(other.row(i));
            big.push_row(&r);
        }
        let pivots = big.rref_in_place();
        let mut out = Matrix::zero(0, c, p);
        for (i, &pc) in pivots.iter().enumerate() {
            if pc >= c {
                out.push_row(&big.row(i)[c..]);
            }
        }
        // Rows below the pivot count are zero; rows with pivot in the right
        // half are exactly the intersection basis.
        let _ = out.rows;
        let mut res = Matrix::zero(0, c, p);
        for i in 0..out.rows {
            res.push_row(out.row(i));
        }
        res.row_basis()
    }

    /// Characteristic polynomial, coefficients low degree first:
    /// `det(xI - self) = out[0] + out[1] x + ... + out[d] x^d`.
    pub fn char_poly(&self) -> Vec<u32> {
        assert_eq!(self.rows, self.cols);
        let d = self.rows;
        let p = self.p;
        let p64 = p as u64;
        if d == 0 {
            return vec![1];
        }
        // Reduce to upper Hessenberg form by a similarity transformation.
        let mut h = self.clone();
        for c in 0..d.saturating_sub(2) {
            // pivot at (c+1, c)
            let mut piv = None;
            for r in c + 1..d {
                if h.get(r, c) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(r) = piv else { continue };
            if r != c + 1 {
                for j in 0..d {
                    let (a, b) = (h.get(c + 1, j), h.get(r, j));
                    h.set(c + 1, j, b);
                    h.set(r, j, a);
                }
                for i in 0..d {
                    let (a, b) = (h.get(i, c + 1), h.get(i, r));
                    h.set(i, c + 1, b);
                    h.set(i, r, a);
                }
            }
            let inv = Fp::new(h.get(c + 1, c) as i64, p).inv().val() as u64;
            for r2 in c + 2..d {
                let f = (h.get(r2, c) as u64 * inv) % p64;
                if f == 0 {
                    continue;
                }
                // row r2 -= f * row c+1; col c+1 += f * col r2 (inverse op)
                for j in 0..d {
                    let v = (h.get(r2, j) as u64 + (p64 - f) * h.get(c + 1, j) as u64) % p64;
                    h.set(r2, j, v as u32);
                }
                for i in 0..d {
                    let v = (h.get(i, c + 1) as u64 + f * h.get(i, r2) as u64) % p64;
                    h.set(i, c + 1, v as u32);
                }
            }
        }
        // Recurrence for the characteristic polynomials of the leading
        // principal minors of a Hessenberg matrix.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=d {
            let mut q = vec![0u64; k + 1];
            // (x - h[k-1][k-1]) * polys[k-1]
            let prev = &polys[k - 1];
            for (i, &c) in prev.iter().enumerate() {
                q[i + 1] = (q[i + 1] + c) % p64;
                q[i] = (q[i] + (p64 - h.get(k - 1, k - 1) as u64) * c) % p64;
            }
            // subtract sum over m < k-1 of h[m][k-1] * prod(subdiag) * polys[m]
            let mut prod = 1u64;
            for m in (0..k - 1).rev() {
                prod = (prod * h.get(m + 1, m) as u64) % p64;
                let f = (h.get(m, k - 1) as u64 * prod) % p64;
                if f == 0 {
                    continue;
                }
                for (i, &c) in polys[m].iter().enumerate() {
                    q[i] = (q[i] + (p64 - f % p64) * c) % p64;
                }
            }
            polys.push(q);
        }
        polys[d].iter().map(|&c| c as u32).collect()
    }

    /// Extends the (independent) rows of `self` to a basis of the full space,
    /// returning only the added complement rows (unit vectors).
    pub fn complement_to_full(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Matrix::zero(0, self.cols, self.p);
        for j in 0..self.cols {
            if !is_pivot[j] {
                let mut v = vec![0u32; self.cols];
                v[j] = 1;
                out.push_row(&v);
            }
        }
        out
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3, 5);
        assert_eq!(m.rank(), 2);
        let b = m.row_basis();
        assert_eq!(b.rows(), 2);
        assert!(b.row_span_contains(&[1, 2, 3]));
        assert!(b.row_span_contains(&[0, 1, 1]));
        assert!(!b.row_span_contains(&[0, 0, 1]));
    }

    #[test]
    fn nullspace_orthogonality() {
        let m = Matrix::from_rows(&[vec![1, 0, 2, 1], vec![0, 1, 1, 1]], 4, 3);
        let ns = m.transpose().left_nullspace();
        assert_eq!(ns.rows(), 2);
        for i in 0..ns.rows() {
            let v = Matrix::from_rows(&[ns.row_vec(i)], 4, 3);
            assert!(v.mul(&m.transpose()).is_zero());
        }
    }

    #[test]
    fn solve_rows_roundtrip() {
        let a = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]], 3, 7);
        let t = Matrix::from_rows(&[vec![2, 3, 1], vec![1, 2, 1]], 3, 7);
        let x = a.solve_rows(&t).unwrap();
        assert_eq!(x.mul(&a), t);
        let bad = Matrix::from_rows(&[vec![0, 0, 1]], 3, 7);
        assert!(a.solve_rows(&bad).is_none());
    }

    #[test]
    fn char_poly_small_cases() {
        // companion-style checks over F_5
        let m = Matrix::from_rows(&[vec![1, 1], vec![0, 2]], 2, 5);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(m.char_poly(), vec![2, 2, 1]); // 2 + (5-3)x + x^2
        let z = Matrix::zero(3, 3, 3);
        assert_eq!(z.char_poly(), vec![0, 0, 0, 1]);
        let id = Matrix::identity(2, 7);
        // (x-1)^2 = x^2 - 2x + 1
        assert_eq!(id.char_poly(), vec![1, 5, 1]);
        // brute-force determinant comparison on random 4x4 over F_3:
        // evaluate char poly at a point t and compare with det(tI - M).
        let m = Matrix::from_rows(
            &[
                vec![1, 2, 0, 1],
                vec![0, 1, 1, 2],
                vec![2, 0, 1, 0],
                vec![1, 1, 0, 2],
            ],
            4,
            3,
        );
        let cp = m.char_poly();
        for t in 0..3u32 {
            let mut a = Matrix::zero(4, 4, 3);
            for i in 0..4 {
                for j in 0..4 {
                    let v = (t * if i == j { 1 } else { 0 } + 2 * m.get(i, j)) % 3;
                    a.set(i, j, v);
                }
            }
            let det = det_by_elimination(&a);
            let mut val: i64 = 0;
            let mut tp: i64 = 1;
            for &c in &cp {
                val = (val + c as i64 * tp).rem_euclid(3);
                tp = tp * t as i64 % 3;
            }
            assert_eq!(val as u32, det as u32, "at t = {}", t);
        }
    }

    fn det_by_elimination(m: &Matrix) -> u32 {
        let p = m.modulus() as u64;
        let d = m.rows();
        let mut a = m.clone();
        let mut det: u64 = 1;
        for c in 0..d {
            let mut piv = None;
            for r in c..d {
                if a.get(r, c) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(r) = piv else { return 0 };
            if r != c {
                for j in 0..d {
                    let (x, y) = (a.get(c, j), a.get(r, j));
                    a.set(c, j, y);
                    a.set(r, j, x);
                }
                det = (det * (p - 1)) % p;
            }
            det = (det * a.get(c, c) as u64) % p;
            let inv = Fp::new(a.get(c, c) as i64, m.modulus()).inv().val() as u64;
            for r2 in c + 1..d {
                let f = (a.get(r2, c) as u64 * inv) % p;
                for j in 0..d {
                    let v = (a.get(r2, j) as u64 + (p - f) * a.get(c, j) as u64) % p;
                    a.set(r2, j, v as u32);
                }
            }
        }
        det as u32
    }

    #[test]
    fn intersection() {
        let a = Matrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]], 3, 2);
        let b = Matrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1]], 3, 2);
        let i = a.row_space_intersection(&b);
        assert_eq!(i.rows(), 1);
        assert!(i.row_span_contains(&[0, 1, 0]));
    }
}
