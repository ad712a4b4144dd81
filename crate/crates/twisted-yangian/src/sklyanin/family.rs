use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{Case, IndexScheme};
use crate::error::{Error, Result};
use crate::exact::rational::{half, int};
use crate::exact::{Mat, RatFunc, Rational, Scalar};
use crate::rep::{LieRep, SparseMat};

/// One operator-valued matrix entry evaluated at a spectral argument.
#[derive(Clone, Debug)]
pub enum Op<K> {
    Zero,
    /// `id·1 + coef·F`
    Affine { id: K, coef: K, gen: Arc<SparseMat<Rational>> },
    Sparse(Arc<SparseMat<K>>),
    /// `Σ_j c_j M_j` over fixed rational matrices.
    Combo(Vec<(K, Arc<SparseMat<Rational>>)>),
}

impl<K: Scalar> Op<K> {
    pub fn from_dense(m: &Mat<K>) -> Op<K> {
        if m.is_zero() {
            Op::Zero
        } else {
            Op::Sparse(Arc::new(SparseMat::from_dense(m)))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Op::Zero => true,
            Op::Affine { id, coef, gen } => id.is_zero() && (coef.is_zero() || gen.is_zero()),
            Op::Sparse(s) => s.is_zero(),
            Op::Combo(terms) => terms.iter().all(|(c, m)| c.is_zero() || m.is_zero()),
        }
    }

    pub fn apply(&self, block: &Mat<K>) -> Mat<K> {
        match self {
            Op::Zero => Mat::zeros(block.rows(), block.cols()),
            Op::Affine { id, coef, gen } => {
                let mut out = if coef.is_zero() || gen.is_zero() {
                    Mat::zeros(block.rows(), block.cols())
                } else {
                    gen.apply_to(block).scale(coef)
                };
                if !id.is_zero() {
                    out.add_scaled(id, block);
                }
                out
            }
            Op::Sparse(s) => s.apply(block),
            Op::Combo(terms) => {
                let mut out = Mat::zeros(block.rows(), block.cols());
                for (c, m) in terms {
                    if !c.is_zero() && !m.is_zero() {
                        out.add_scaled(c, &m.apply_to(block));
                    }
                }
                out
            }
        }
    }

    pub fn to_dense(&self, dim: usize) -> Mat<K> {
        self.apply(&Mat::identity(dim))
    }
}

/// `N × N` matrix of operators on a module of dimension `dim`, indexed by positions.
#[derive(Clone, Debug)]
pub struct Grid<K> {
    n: usize,
    dim: usize,
    entries: Vec<Op<K>>,
}

impl<K: Scalar> Grid<K> {
    pub fn new(n: usize, dim: usize, entries: Vec<Op<K>>) -> Grid<K> {
        assert_eq!(entries.len(), n * n);
        Grid { n, dim, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, p: usize, q: usize) -> &Op<K> {
        &self.entries[p * self.n + q]
    }

    pub fn dense(&self, p: usize, q: usize) -> Mat<K> {
        self.entry(p, q).to_dense(self.dim)
    }
}

/// An `N × N` operator-valued function of the spectral parameter on a fixed module.
pub trait Family<K: Scalar>: Send + Sync {
    fn scheme(&self) -> &IndexScheme;
    fn dim(&self) -> usize;
    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>>;
    /// Bound on the degrees of numerator and common denominator of every entry.
    fn degree_bound(&self) -> usize;
    /// Whether the family satisfies the symmetry relation of the twisted Yangian.
    fn twisted(&self) -> bool;
}

/// Small memo for grids keyed by argument.
pub struct GridCache<K> {
    map: Mutex<HashMap<K, Arc<Grid<K>>>>,
}

impl<K: Scalar> Default for GridCache<K> {
    fn default() -> Self {
        GridCache { map: Mutex::new(HashMap::new()) }
    }
}

impl<K: Scalar> GridCache<K> {
    pub fn get_or(&self, x: &K, f: impl FnOnce() -> Result<Grid<K>>) -> Result<Arc<Grid<K>>> {
        if let Some(g) = self.map.lock().expect("cache lock").get(x) {
            return Ok(g.clone());
        }
        let g = Arc::new(f()?);
        let mut map = self.map.lock().expect("cache lock");
        if map.len() > 256 {
            map.clear();
        }
        map.insert(x.clone(), g.clone());
        Ok(g)
    }
}

/// `α_p(u)`: 1 for orthogonal, `(u+1/2)/(u−p+1/2)` for symplectic.
pub fn alpha(p: &Rational, case: Case) -> RatFunc {
    match case {
        Case::Orthogonal => RatFunc::one(),
        Case::Symplectic => RatFunc::from_roots(&[-half()], &[p - half()]),
    }
}

pub fn alpha_at<K: Scalar>(p: &Rational, case: Case, x: &K) -> Result<K> {
    match case {
        Case::Orthogonal => Ok(K::one()),
        Case::Symplectic => {
            if p == &int(0) {
                return Ok(K::one());
            }
            let den = x.shift(&(half() - p));
            if den.is_zero() {
                return Err(Error::Pole(format!("alpha_{p} at {x}")));
            }
            x.shift(&half()).div(&den)
        }
    }
}

/// The evaluation realization `f_ij(u) = δ_ij + F_ij (u ± 1/2)^{-1}`.
pub struct EvalFamily {
    rep: Arc<LieRep>,
}

impl EvalFamily {
    pub fn new(rep: Arc<LieRep>) -> EvalFamily {
        EvalFamily { rep }
    }

    pub fn rep(&self) -> &Arc<LieRep> {
        &self.rep
    }

    /// The shift `±1/2`, upper sign orthogonal.
    pub fn shift(case: Case) -> Rational {
        match case {
            Case::Orthogonal => half(),
            Case::Symplectic => -half(),
        }
    }
}

impl<K: Scalar> Family<K> for EvalFamily {
    fn scheme(&self) -> &IndexScheme {
        self.rep.scheme()
    }

    fn dim(&self) -> usize {
        self.rep.dim()
    }

    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>> {
        let s = self.rep.scheme();
        let y = x.shift(&EvalFamily::shift(s.case()));
        let inv = y.inv().map_err(|_| Error::Pole(format!("evaluation at {x}")))?;
        let n = s.size();
        let mut entries = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let gen = self.rep.gen_pos(p, q).clone();
                let id = if p == q { K::one() } else { K::zero() };
                if p != q && gen.is_zero() {
                    entries.push(Op::Zero);
                } else {
                    entries.push(Op::Affine { id, coef: inv.clone(), gen });
                }
            }
        }
        Ok(Arc::new(Grid::new(n, self.rep.dim(), entries)))
    }

    fn degree_bound(&self) -> usize {
        1
    }

    fn twisted(&self) -> bool {
        true
    }
}
