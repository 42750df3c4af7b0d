//! Dense matrices over a [`FieldCtx`] and the linear algebra built on them.

use std::ops::{Index, IndexMut};

use crate::gf::{Fel, FieldCtx};

/// Row-major dense matrix. The field is supplied per operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fel>,
}

impl Index<(usize, usize)> for Mat {
    type Output = Fel;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Fel {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fel {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Fel::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize, f: &FieldCtx) -> Mat {
        Mat::scalar(n, f.one())
    }

    pub fn scalar(n: usize, c: Fel) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn diag(d: &[Fel]) -> Mat {
        let mut m = Mat::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fel>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_ints(rows: &[&[i64]], f: &FieldCtx) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Fel] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Fel] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Fel>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, o: &Mat, f: &FieldCtx) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * o.cols..(i + 1) * o.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == Fel::ZERO {
                    continue;
                }
                let brow = &o.data[k * o.cols..(k + 1) * o.cols];
                for (x, &b) in orow.iter_mut().zip(brow) {
                    if b != Fel::ZERO {
                        *x = f.add(*x, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec_left(&self, v: &[Fel], f: &FieldCtx) -> Vec<Fel> {
        // v * self
        let mut out = vec![Fel::ZERO; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == Fel::ZERO {
                continue;
            }
            for (x, &b) in out.iter_mut().zip(self.row(k)) {
                *x = f.add(*x, f.mul(a, b));
            }
        }
        out
    }

    pub fn add(&self, o: &Mat, f: &FieldCtx) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Mat, f: &FieldCtx) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: Fel, f: &FieldCtx) -> Mat {
        self.map(|x| f.mul(c, x))
    }

    pub fn map(&self, g: impl Fn(Fel) -> Fel) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| g(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn trace(&self, f: &FieldCtx) -> Fel {
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(acc, self[(i, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == Fel::ZERO)
    }

    pub fn is_scalar(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)] == self[(0, 0)]
                    } else {
                        self[(i, j)] == Fel::ZERO
                    }
                })
            })
    }

    pub fn is_identity(&self, f: &FieldCtx) -> bool {
        self.is_scalar() && (self.rows == 0 || self[(0, 0)] == f.one())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self, f: &FieldCtx) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(k) = (r..self.rows).find(|&k| self[(k, c)] != Fel::ZERO) else {
                continue;
            };
            self.swap_rows(r, k);
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(inv, self[(r, j)]);
            }
            for k in 0..self.rows {
                if k == r {
                    continue;
                }
                let x = self[(k, c)];
                if x == Fel::ZERO {
                    continue;
                }
                let nx = f.neg(x);
                for j in c..self.cols {
                    let y = self[(r, j)];
                    if y != Fel::ZERO {
                        self[(k, j)] = f.add(self[(k, j)], f.mul(nx, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        self.clone().echelon(f).len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn nullspace(&self, f: &FieldCtx) -> Vec<Vec<Fel>> {
        let mut m = self.clone();
        let pivots = m.echelon(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Fel::ZERO; self.cols];
            v[free] = f.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(m[(r, free)]);
            }
            out.push(v);
        }
        out
    }

    pub fn det(&self, f: &FieldCtx) -> Fel {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(k) = (c..n).find(|&k| m[(k, c)] != Fel::ZERO) else {
                return f.zero();
            };
            if k != c {
                m.swap_rows(c, k);
                det = f.neg(det);
            }
            let piv = m[(c, c)];
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            for k in c + 1..n {
                let x = m[(k, c)];
                if x == Fel::ZERO {
                    continue;
                }
                let t = f.neg(f.mul(x, inv));
                for j in c..n {
                    let y = m[(c, j)];
                    if y != Fel::ZERO {
                        m[(k, j)] = f.add(m[(k, j)], f.mul(t, y));
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &FieldCtx) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = f.one();
        }
        let pivots = aug.echelon(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    pub fn pow(&self, mut e: u64, f: &FieldCtx) -> Mat {
        let mut acc = Mat::identity(self.rows, f);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b, f);
            }
            b = b.mul(&b, f);
            e >>= 1;
        }
        acc
    }

    /// Flattened entries as a vector of length `rows * cols`.
    pub fn flatten(&self) -> Vec<Fel> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Fel>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    /// Entries as coefficient arrays, row-major.
    pub fn to_coeffs(&self, f: &FieldCtx) -> Vec<Vec<Vec<u32>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| f.coeffs(x)).collect())
            .collect()
    }
}

/// Incrementally built row space kept in semi-echelon form: every stored
/// row is reduced against all earlier rows and has a unit pivot.
#[derive(Debug, Clone)]
pub struct RowSpace {
    width: usize,
    rows: Vec<Vec<Fel>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(width: usize) -> RowSpace {
        RowSpace {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, v: &mut [Fel], f: &FieldCtx) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let x = v[c];
            if x == Fel::ZERO {
                continue;
            }
            let nx = f.neg(x);
            for (a, &b) in v.iter_mut().zip(row).skip(c) {
                if b != Fel::ZERO {
                    *a = f.add(*a, f.mul(nx, b));
                }
            }
        }
    }

    /// Insert `v`; returns whether it enlarged the space.
    pub fn insert(&mut self, mut v: Vec<Fel>, f: &FieldCtx) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v, f);
        let Some(c) = v.iter().position(|&x| x != Fel::ZERO) else {
            return false;
        };
        let inv = f.inv(v[c]);
        for x in v.iter_mut().skip(c) {
            *x = f.mul(inv, *x);
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn contains(&self, v: &[Fel], f: &FieldCtx) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        w.iter().all(|&x| x == Fel::ZERO)
    }

    /// Basis of the vectors orthogonal (under the plain dot product) to every row.
    pub fn solutions(&self, f: &FieldCtx) -> Vec<Vec<Fel>> {
        if self.rows.is_empty() {
            return (0..self.width)
                .map(|i| {
                    let mut v = vec![Fel::ZERO; self.width];
                    v[i] = f.one();
                    v
                })
                .collect();
        }
        Mat::from_rows(self.rows.clone()).nullspace(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn inverse_and_det() {
        let f = make_field(7, 1).unwrap();
        let m = Mat::from_ints(&[&[1, 2], &[3, 4]], &f);
        assert_eq!(m.det(&f), f.from_int(-2));
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&inv, &f).is_identity(&f));
        let s = Mat::from_ints(&[&[1, 2], &[2, 4]], &f);
        assert!(s.inverse(&f).is_none());
        assert_eq!(s.rank(&f), 1);
        let ns = s.nullspace(&f);
        assert_eq!(ns.len(), 1);
        let v = Mat::from_rows(ns.iter().map(|x| vec![x[0], x[1]]).collect()).transpose();
        assert!(s.mul(&v, &f).is_zero());
    }

    #[test]
    fn row_space() {
        let f = make_field(5, 2).unwrap();
        let mut rs = RowSpace::new(3);
        let a = vec![f.one(), f.from_int(2), f.zero()];
        let b = vec![f.from_int(2), f.from_int(4), f.zero()];
        assert!(rs.insert(a, &f));
        assert!(!rs.insert(b, &f));
        assert_eq!(rs.solutions(&f).len(), 2);
    }
}
