use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::bitmat::BitMat;
use super::field::{Elem, FieldCtx};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Mat {
    field: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub r: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Mat {}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for i in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(i)[..self.cols.min(24)])?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: &Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<FieldCtx>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: &Arc<FieldCtx>, n: usize, c: Elem) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_vec(field: &Arc<FieldCtx>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let q = field.q();
        if let Some(bad) = data.iter().find(|&&x| x as u32 >= q) {
            return Err(Error::OutOfRange(format!("{bad} is not an element of GF({q})")));
        }
        Ok(Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds from rows of small integers (reduced into the prime field when d = 1).
    pub fn from_rows(field: &Arc<FieldCtx>, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            for &x in r {
                let x = if field.is_prime_field() { x % field.p() } else { x };
                assert!(x < field.q());
                data.push(x as Elem);
            }
        }
        Mat {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn row_vector(field: &Arc<FieldCtx>, v: Vec<Elem>) -> Self {
        let n = v.len();
        Mat {
            field: field.clone(),
            rows: 1,
            cols: n,
            data: v,
        }
    }

    /// Permutation matrix with `e_i -> e_{img[i]}` (0-based images).
    pub fn permutation(field: &Arc<FieldCtx>, img: &[usize]) -> Self {
        let n = img.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &j) in img.iter().enumerate() {
            m.data[i * n + j] = 1;
        }
        m
    }

    pub fn random<R: Rng + ?Sized>(field: &Arc<FieldCtx>, rows: usize, cols: usize, rng: &mut R) -> Self {
        let q = field.q();
        let data = (0..rows * cols).map(|_| rng.gen_range(0..q) as Elem).collect();
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[Elem] {
        &self.data
    }
    pub fn into_data(self) -> Vec<Elem> {
        self.data
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mat(&self, i: usize) -> Mat {
        Mat::row_vector(&self.field, self.row(i).to_vec())
    }

    pub fn push_row(&mut self, r: &[Elem]) {
        if self.rows == 0 && self.cols == 0 {
            self.cols = r.len();
        }
        assert_eq!(r.len(), self.cols);
        self.data.extend_from_slice(r);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Elem))
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.name(),
                other.field.name()
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        self.field.axpy(&mut out.data, 1, &other.data);
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        let m1 = self.field.neg(1);
        self.field.axpy(&mut out.data, m1, &other.data);
        out
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Elem, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    pub fn scaled(&self, c: Elem) -> Mat {
        let mut out = self.clone();
        self.field.scale(&mut out.data, c);
        out
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        debug_assert!(*self.field == *other.field);
        let f = &self.field;
        let (n, m) = (self.rows, other.cols);
        if n == 0 || m == 0 {
            return Mat::zeros(f, n, m);
        }
        if f.is_gf2() && self.cols >= 32 {
            let a = BitMat::from_dense(self.rows, self.cols, &self.data);
            let b = BitMat::from_dense(other.rows, other.cols, &other.data);
            let c = a.mul(&b);
            return Mat {
                field: f.clone(),
                rows: n,
                cols: m,
                data: c.to_dense(),
            };
        }
        let mut out = Mat::zeros(f, n, m);
        let nnz = other.data.iter().filter(|&&x| x != 0).count();
        if nnz * 8 < other.data.len() {
            let sparse: Vec<Vec<(usize, Elem)>> = (0..other.rows)
                .map(|k| {
                    other
                        .row(k)
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x != 0)
                        .map(|(j, &x)| (j, x))
                        .collect()
                })
                .collect();
            for i in 0..n {
                let orow = &mut out.data[i * m..(i + 1) * m];
                for (k, &a) in self.row(i).iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for &(j, b) in &sparse[k] {
                        orow[j] = f.add(orow[j], f.mul(a, b));
                    }
                }
            }
            return out;
        }
        if f.is_prime_field() {
            let p = f.p() as u64;
            let limit = (u64::MAX / ((p - 1) * (p - 1)).max(1)).min(1 << 40) as usize;
            let mut acc = vec![0u64; m];
            for i in 0..n {
                acc.iter_mut().for_each(|x| *x = 0);
                let arow = self.row(i);
                let mut pending = 0usize;
                for (k, &a) in arow.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let a = a as u64;
                    for (x, &b) in acc.iter_mut().zip(other.row(k)) {
                        *x += a * b as u64;
                    }
                    pending += 1;
                    if pending == limit {
                        acc.iter_mut().for_each(|x| *x %= p);
                        pending = 0;
                    }
                }
                for (o, &x) in out.row_mut(i).iter_mut().zip(&acc) {
                    *o = (x % p) as Elem;
                }
            }
        } else {
            for i in 0..n {
                for k in 0..self.cols {
                    let a = self.data[i * self.cols + k];
                    if a != 0 {
                        let (orow, brow) = (&mut out.data[i * m..(i + 1) * m], other.row(k));
                        f.axpy(orow, a, brow);
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                self.field.axpy(&mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut result = Mat::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        if self.rows == 0 {
            let mut o = other.clone();
            if o.rows == 0 {
                o.cols = self.cols.max(other.cols);
            }
            return o;
        }
        if other.rows == 0 {
            return self.clone();
        }
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            out.row_mut(self.rows + i)[self.cols..].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn row_range(&self, start: usize, end: usize) -> Mat {
        Mat {
            field: self.field.clone(),
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    pub fn col_range(&self, start: usize, end: usize) -> Mat {
        let cols = end - start;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.row(i)[start..end]);
        }
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            let r = self.row(i);
            data.extend(idx.iter().map(|&j| r[j]));
        }
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(&self.field, r, c);
        let f = &self.field;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let dst = &mut out.data[(i * other.rows + k) * c + j * other.cols..][..other.cols];
                    f.axpy(dst, a, other.row(k));
                }
            }
        }
        out
    }

    /// Reduced row echelon form. `r` has the same shape as `self`.
    pub fn rref(&self) -> Rref {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        Rref {
            rank: pivots.len(),
            r,
            pivots,
        }
    }

    /// Reduces in place and returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        if self.field.is_gf2() {
            let mut b = BitMat::from_dense(self.rows, self.cols, &self.data);
            let piv = b.rref();
            self.data = b.to_dense();
            return piv;
        }
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..cols {
                    self.data.swap(piv * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            f.scale(&mut self.data[r * cols + c..(r + 1) * cols], inv);
            let prow: Vec<Elem> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let x = self.data[i * cols + c];
                if x != 0 {
                    f.axpy(&mut self.data[i * cols + c..(i + 1) * cols], f.neg(x), &prow);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (in rref) of the row space.
    pub fn row_space(&self) -> Mat {
        let Rref { r, rank, .. } = self.rref();
        r.row_range(0, rank)
    }

    /// Basis of the left null space `{v : v * self = 0}`, in rref.
    pub fn kernel_basis(&self) -> Mat {
        let t = self.transpose().rref();
        let n = self.rows;
        let mut is_pivot = vec![false; n];
        for &c in &t.pivots {
            is_pivot[c] = true;
        }
        let f = &self.field;
        let mut out = Mat::zeros(f, 0, n);
        out.cols = n;
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![0 as Elem; n];
            v[free] = 1;
            for (i, &pc) in t.pivots.iter().enumerate() {
                v[pc] = f.neg(t.r.get(i, free));
            }
            out.push_row(&v);
        }
        out.row_space()
    }

    /// Finds `X` with `X * self = b`, if one exists.
    pub fn solve_left(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.cols, b.cols);
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(&self.field, n)).rref();
        let rank = aug.pivots.iter().take_while(|&&c| c < self.cols).count();
        let e = aug.r.row_range(0, rank).col_range(0, self.cols);
        let t = aug.r.row_range(0, rank).col_range(self.cols, self.cols + n);
        let coeffs = b.select_cols(&aug.pivots[..rank]);
        if coeffs.mul(&e) != *b {
            return None;
        }
        Some(coeffs.mul(&t))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Mat::identity(&self.field, n)).rref();
        if aug.pivots.len() < n || aug.pivots[n - 1] >= n {
            return None;
        }
        Some(aug.r.col_range(n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Elem {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det: Elem = 1;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return 0;
            };
            if piv != c {
                for k in 0..n {
                    m.swap(piv * n + k, c * n + k);
                }
                det = f.neg(det);
            }
            let d = m[c * n + c];
            det = f.mul(det, d);
            let inv = f.inv(d);
            let prow: Vec<Elem> = m[c * n..(c + 1) * n].to_vec();
            for i in c + 1..n {
                let x = m[i * n + c];
                if x != 0 {
                    f.axpy(&mut m[i * n..(i + 1) * n], f.neg(f.mul(x, inv)), &prow);
                }
            }
        }
        det
    }

    /// Entrywise image under GF(p) -> GF(p^d).
    pub fn scalar_extend(&self, target: &Arc<FieldCtx>) -> Result<Mat> {
        if !self.field.is_prime_field() || self.field.p() != target.p() {
            return Err(Error::FieldMismatch(format!(
                "cannot extend {} to {}",
                self.field.name(),
                target.name()
            )));
        }
        Ok(Mat {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        })
    }

    /// True when every row of `self` lies in the row space spanned by `basis` (in rref).
    pub fn rows_in_span(&self, basis: &Mat) -> bool {
        basis.vstack(self).rank() == basis.rank()
    }

    /// Exterior power matrix: entries are the `j x j` minors indexed by sorted subsets.
    pub fn compound(&self, j: usize) -> Mat {
        assert!(self.is_square());
        let subsets = sorted_subsets(self.rows, j);
        let n = subsets.len();
        let mut out = Mat::zeros(&self.field, n, n);
        for (a, rs) in subsets.iter().enumerate() {
            for (b, cs) in subsets.iter().enumerate() {
                let minor = self.select_rows(rs).select_cols(cs);
                out.set(a, b, minor.det());
            }
        }
        out
    }
}

/// All `j`-subsets of `0..n`, in lexicographic order.
pub fn sorted_subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(j);
    fn rec(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, j, cur, out);
            cur.pop();
        }
    }
    rec(0, n, j, &mut cur, &mut out);
    out
}
