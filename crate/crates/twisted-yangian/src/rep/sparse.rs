use crate::exact::{Mat, Rational, Scalar};

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<T> {
    ncols: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMat<T> {
    pub fn zero(nrows: usize, ncols: usize) -> SparseMat<T> {
        SparseMat { ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> SparseMat<T> {
        SparseMat { ncols: n, rows: (0..n).map(|i| vec![(i, T::one())]).collect() }
    }

    /// Build from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: impl IntoIterator<Item = (usize, usize, T)>) -> SparseMat<T> {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            rows[r].push((c, v));
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, T)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => lv.add_assign(&v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        SparseMat { ncols, rows }
    }

    pub fn from_dense(m: &Mat<T>) -> SparseMat<T> {
        let rows = (0..m.rows())
            .map(|i| m.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect())
            .collect();
        SparseMat { ncols: m.cols(), rows }
    }

    pub fn to_dense(&self) -> Mat<T> {
        let mut m = Mat::zeros(self.nrows(), self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i].iter().find(|e| e.0 == j).map(|e| e.1.clone()).unwrap_or_else(T::zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn scale(&self, c: &T) -> SparseMat<T> {
        if c.is_zero() {
            return SparseMat::zero(self.nrows(), self.ncols);
        }
        SparseMat { ncols: self.ncols, rows: self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v.mul(c))).collect()).collect() }
    }

    pub fn add(&self, o: &SparseMat<T>) -> SparseMat<T> {
        SparseMat::from_triplets(
            self.nrows(),
            self.ncols,
            self.triplets().chain(o.triplets()).map(|(i, j, v)| (i, j, v.clone())),
        )
    }

    pub fn sub(&self, o: &SparseMat<T>) -> SparseMat<T> {
        self.add(&o.scale(&T::one().neg()))
    }

    pub fn mul(&self, o: &SparseMat<T>) -> SparseMat<T> {
        let mut trip = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &o.rows[*k] {
                    trip.push((i, *j, a.mul(b)));
                }
            }
        }
        SparseMat::from_triplets(self.nrows(), o.ncols, trip)
    }

    pub fn commutator(&self, o: &SparseMat<T>) -> SparseMat<T> {
        self.mul(o).sub(&o.mul(self))
    }

    /// Matrix–vector product.
    pub fn apply_vec(&self, v: &[T]) -> Vec<T> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        acc.add_assign(&a.mul(&v[*j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Product with a dense block.
    pub fn apply(&self, block: &Mat<T>) -> Mat<T> {
        let c = block.cols();
        let mut out: Mat<T> = Mat::zeros(self.nrows(), c);
        for (i, row) in self.rows.iter().enumerate() {
            let orow = out.row_mut(i);
            for (k, a) in row {
                for (o, b) in orow.iter_mut().zip(block.row(*k)) {
                    if !b.is_zero() {
                        o.add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }
}

impl SparseMat<Rational> {
    /// Product of a rational matrix with a block over any field.
    pub fn apply_to<K: Scalar>(&self, block: &Mat<K>) -> Mat<K> {
        let c = block.cols();
        let mut out: Mat<K> = Mat::zeros(self.nrows(), c);
        for (i, row) in self.rows.iter().enumerate() {
            let orow = out.row_mut(i);
            for (k, a) in row {
                for (o, b) in orow.iter_mut().zip(block.row(*k)) {
                    if !b.is_zero() {
                        o.add_assign(&b.scale(a));
                    }
                }
            }
        }
        out
    }

    pub fn lift<K: Scalar>(&self) -> SparseMat<K> {
        SparseMat { ncols: self.ncols, rows: self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, K::from_rational(v))).collect()).collect() }
    }
}
