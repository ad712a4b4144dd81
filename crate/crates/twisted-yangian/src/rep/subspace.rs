use num_traits::{One, Zero};

use super::lie::{HighestWeight, LieRep};
use crate::error::{Error, Result};
use crate::exact::linalg::{kernel, rref};
use crate::exact::{Mat, Rational};

/// Subspace of a module, stored as a row-reduced basis in module coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Subspace {
        let mut rows = vectors;
        let pivots = rref(&mut rows, ambient_dim);
        Subspace { ambient_dim, basis: rows, pivots }
    }

    pub fn whole(dim: usize) -> Subspace {
        let basis = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Subspace { ambient_dim: dim, basis, pivots: (0..dim).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` block.
    pub fn basis_block(&self) -> Mat<Rational> {
        Mat::from_cols(self.ambient_dim, &self.basis)
    }

    /// Coordinates of an ambient vector, if it lies in the subspace.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                *x -= ci * y;
            }
        }
        w.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn embed(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        v
    }

    /// Coordinates of the columns of an `ambient × c` block whose columns lie in the subspace.
    pub fn coords_block<K: crate::exact::Scalar>(&self, image: &Mat<K>) -> Result<Mat<K>> {
        let mut c = Mat::zeros(self.dim(), image.cols());
        for (i, &p) in self.pivots.iter().enumerate() {
            c.row_mut(i).clone_from_slice(image.row(p));
        }
        let back = Mat::<K>::from_rational(&self.basis_block()).mul(&c);
        if let Some((r, col)) = back.first_difference(image) {
            return Err(Error::NotInvariant(format!("column {col} leaves the subspace at row {r}")));
        }
        Ok(c)
    }

    /// Matrix of an operator that preserves the subspace, in subspace coordinates.
    pub fn restrict(&self, op: &Mat<Rational>) -> Result<Mat<Rational>> {
        let image = op.mul(&self.basis_block());
        let cols = (0..self.dim())
            .map(|j| self.coords(&image.col(j)).ok_or_else(|| Error::NotInvariant("operator leaves the subspace".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_cols(self.dim(), &cols))
    }
}

/// Joint kernel of a list of operators.
pub fn joint_kernel(dim: usize, ops: &[Mat<Rational>]) -> Subspace {
    let rows: Vec<Vec<Rational>> = ops.iter().flat_map(|m| (0..m.rows()).map(move |i| m.row(i).to_vec())).collect();
    Subspace::from_vectors(dim, kernel(&rows, dim))
}

/// Joint eigenspace of `F_ii` (`i` in `cartan`) with the given eigenvalues.
pub fn weight_space(rep: &LieRep, cartan: &[i32], target: &[Rational]) -> Result<Subspace> {
    if cartan.len() != target.len() {
        return Err(Error::ShapeMismatch("one eigenvalue per Cartan index".into()));
    }
    let mut ops = Vec::new();
    for (&i, t) in cartan.iter().zip(target) {
        if i <= 0 {
            return Err(Error::InvalidIndex(i));
        }
        let f = rep.gen(i, i)?.to_dense();
        ops.push(f.sub(&Mat::scalar(rep.dim(), t)));
    }
    Ok(joint_kernel(rep.dim(), &ops))
}

/// `V(λ)^+_μ`: vectors killed by `F_ij` (`−m ≤ i < j ≤ m`) with `F_ii = μ_i` for `1 ≤ i ≤ m`.
pub fn skew_subspace(rep: &LieRep, mu: &HighestWeight, m: usize) -> Result<Subspace> {
    if mu.len() != m {
        return Err(Error::InvalidWeight(format!("μ needs {m} entries")));
    }
    let s = rep.scheme();
    // g_M sits on the indices with |i| ≤ m (0 included exactly when N is odd)
    let inner: Vec<i32> = s.indices().iter().copied().filter(|i| i.abs() <= m as i32).collect();
    let mut ops = Vec::new();
    for (a, &i) in inner.iter().enumerate() {
        for &j in &inner[a + 1..] {
            ops.push(rep.gen(i, j)?.to_dense());
        }
    }
    for (k, t) in mu.entries().iter().enumerate() {
        let i = (k + 1) as i32;
        ops.push(rep.gen(i, i)?.to_dense().sub(&Mat::scalar(rep.dim(), t)));
    }
    Ok(joint_kernel(rep.dim(), &ops))
}
