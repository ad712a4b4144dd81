use std::fmt;

use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Mat<K> {
    pub fn zeros(rows: usize, cols: usize) -> Mat<K> {
        Mat { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat<K> {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = K::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &K) -> Mat<K> {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Mat<K> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(dim: usize, cols: &[Vec<K>]) -> Mat<K> {
        let mut m = Mat::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn from_rational(m: &Mat<Rational>) -> Mat<K> {
        Mat { rows: m.rows, cols: m.cols, data: m.data.iter().map(K::from_rational).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [K] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[K] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Mat<L> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<L: Scalar>(&self, f: impl Fn(&K) -> Result<L>) -> Result<Mat<L>> {
        Ok(Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn add(&self, o: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn add_assign(&mut self, o: &Mat<K>) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                a.add_assign(b);
            }
        }
    }

    /// self += c·o
    pub fn add_scaled(&mut self, c: &K, o: &Mat<K>) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                a.add_assign(&c.mul(b));
            }
        }
    }

    pub fn sub(&self, o: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &K) -> Mat<K> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Mat<K> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> Mat<K> {
        self.map(|a| a.neg())
    }

    pub fn mul(&self, o: &Mat<K>) -> Mat<K> {
        assert_eq!(self.cols, o.rows, "inner dimensions");
        let mut out: Mat<K> = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat<K> {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// First entry where the matrices differ.
    pub fn first_difference(&self, o: &Mat<K>) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Some((usize::MAX, usize::MAX));
        }
        (0..self.data.len()).find(|&k| self.data[k] != o.data[k]).map(|k| (k / self.cols, k % self.cols))
    }

    /// If the matrix is `c·I`, return `c`.
    pub fn as_scalar(&self) -> Option<K> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn inverse(&self) -> Result<Mat<K>> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vec<K>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut b: Vec<Vec<K>> = (0..n).map(|i| (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect()).collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            b.swap(c, p);
            let inv = a[c][c].inv()?;
            for x in a[c].iter_mut().chain(b[c].iter_mut()) {
                *x = x.mul(&inv);
            }
            let (pa, pb) = (a[c].clone(), b[c].clone());
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in 0..n {
                    if !pa[j].is_zero() {
                        a[r][j] = a[r][j].sub(&f.mul(&pa[j]));
                    }
                    if !pb[j].is_zero() {
                        b[r][j] = b[r][j].sub(&f.mul(&pb[j]));
                    }
                }
            }
        }
        Ok(Mat::from_rows(b))
    }
}

impl<K: Scalar> fmt::Display for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<K: Scalar>(rows: &mut Vec<Vec<K>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                if !pr[j].is_zero() {
                    row[j] = row[j].sub(&f.mul(&pr[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the null space, one vector per free column in increasing order.
pub fn kernel<K: Scalar>(rows: &[Vec<K>], ncols: usize) -> Vec<Vec<K>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![K::zero(); ncols];
        v[f] = K::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = m[i][f].neg();
        }
        basis.push(v);
    }
    basis
}

pub fn rank<K: Scalar>(rows: &[Vec<K>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}
