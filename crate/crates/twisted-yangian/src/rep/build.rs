use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{One, Zero};

use super::lie::{check_size, HighestWeight, LieRep};
use super::sparse::SparseMat;
use crate::algebra::IndexScheme;
use crate::error::{Error, Result};
use crate::exact::linalg::kernel;
use crate::exact::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

fn axpy(y: &mut SparseVec, a: &Rational, x: &SparseVec) {
    for (k, v) in x {
        let t = a * v;
        match y.get_mut(k) {
            Some(e) => {
                *e += t;
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                y.insert(*k, t);
            }
        }
    }
}

/// Row-reduced basis maintained incrementally; coordinates are read off pivots.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    vectors: Vec<SparseVec>,
    pivots: Vec<usize>,
    by_pivot: HashMap<usize, usize>,
}

impl EchelonBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        for (idx, p) in self.pivots.iter().enumerate() {
            if let Some(c) = w.get(p).cloned() {
                axpy(&mut w, &-c, &self.vectors[idx]);
            }
        }
        w
    }

    /// Insert `v` if independent; returns its index.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let mut w = self.reduce(v);
        let (&p, lead) = w.iter().next()?;
        let inv = Rational::one() / lead;
        for x in w.values_mut() {
            *x *= &inv;
        }
        for b in self.vectors.iter_mut() {
            if let Some(c) = b.get(&p).cloned() {
                axpy(b, &-c, &w);
            }
        }
        self.by_pivot.insert(p, self.vectors.len());
        self.pivots.push(p);
        self.vectors.push(w);
        Some(self.vectors.len() - 1)
    }

    /// Coordinates of a vector in the span, verified exactly.
    pub fn coords(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.pivots.iter().map(|p| v.get(p).cloned().unwrap_or_else(Rational::zero)).collect();
        let mut w = v.clone();
        for (ci, b) in c.iter().zip(&self.vectors) {
            if !ci.is_zero() {
                axpy(&mut w, &-ci, b);
            }
        }
        w.is_empty().then_some(c)
    }
}

/// Action of `(C^N)^{⊗d}` generators on sparse vectors indexed by tuples (slot 0 least significant).
struct TensorPower<'a> {
    base: &'a LieRep,
    d: usize,
}

impl TensorPower<'_> {
    fn apply(&self, p: usize, q: usize, v: &SparseVec) -> SparseVec {
        let g = self.base.gen_pos(p, q);
        let n = self.base.dim();
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
        for (r, c, val) in g.triplets() {
            cols[c].push((r, val.clone()));
        }
        let mut out = SparseVec::new();
        for (&idx, coef) in v {
            let mut stride = 1;
            let mut rest = idx;
            for _ in 0..self.d {
                let digit = rest % n;
                rest /= n;
                for (r, val) in &cols[digit] {
                    let t = idx - digit * stride + r * stride;
                    let e = out.entry(t).or_insert_with(Rational::zero);
                    *e += coef * val;
                }
                stride *= n;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }
}

/// Weight of each basis tuple of `(C^N)^{⊗d}` under `F_11, ..., F_nn`.
fn tuple_weights(base: &LieRep, d: usize, total: usize) -> Vec<Vec<i64>> {
    let scheme = base.scheme();
    let n = scheme.half_rank();
    let diag: Vec<Vec<i64>> = (1..=n as i32)
        .map(|i| base.diagonal(i).expect("vector rep is diagonal").iter().map(|x| crate::exact::rational::to_i64(x).expect("integral")).collect())
        .collect();
    (0..total)
        .map(|mut idx| {
            let mut w = vec![0i64; n];
            for _ in 0..d {
                let digit = idx % base.dim();
                idx /= base.dim();
                for (k, dk) in diag.iter().enumerate() {
                    w[k] += dk[digit];
                }
            }
            w
        })
        .collect()
}

/// `V(λ)` as the cyclic span of a highest vector inside `(C^N)^{⊗d}`, `d = Σ|λ_i|`.
pub fn extract_irrep(lambda: &HighestWeight, scheme: &IndexScheme) -> Result<LieRep> {
    extract_irrep_choice(lambda, scheme, 0)
}

/// As [`extract_irrep`], starting from the `choice`-th kernel vector.
pub fn extract_irrep_choice(lambda: &HighestWeight, scheme: &IndexScheme, choice: usize) -> Result<LieRep> {
    lambda.validate(scheme.case(), scheme.size())?;
    let target = lambda.ints()?;
    let d: i64 = target.iter().map(|x| x.abs()).sum();
    if d == 0 {
        return Ok(LieRep::trivial(scheme));
    }
    let d = d as usize;
    let base = LieRep::vector_rep(scheme);
    let n_big = scheme.size();
    let states = (n_big as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    check_size(states)?;
    let total = states as usize;
    let weights = tuple_weights(&base, d, total);
    let wspace: Vec<usize> = (0..total).filter(|&t| weights[t] == target).collect();
    let power = TensorPower { base: &base, d };

    // F_ij v = 0 for i < j, one row per (generator, output tuple)
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for p in 0..n_big {
        for q in p + 1..n_big {
            let mut by_out: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
            for (c, &t) in wspace.iter().enumerate() {
                let img = power.apply(p, q, &SparseVec::from([(t, Rational::one())]));
                for (o, v) in img {
                    by_out.entry(o).or_insert_with(|| vec![Rational::zero(); wspace.len()])[c] = v;
                }
            }
            rows.extend(by_out.into_values());
        }
    }
    let ker = kernel(&rows, wspace.len());
    let xi = ker.get(choice).ok_or_else(|| Error::NoHighestVector(lambda.to_string()))?;
    let xi: SparseVec = xi.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (wspace[c], v.clone())).collect();

    // weight vectors of distinct weights have disjoint supports, so the echelon
    // vectors stay weight vectors and vector 0 stays proportional to ξ
    let mut basis = EchelonBasis::default();
    let mut queue = VecDeque::new();
    basis.insert(&xi);
    queue.push_back(xi);
    while let Some(v) = queue.pop_front() {
        for p in 0..n_big {
            for q in 0..p {
                let w = power.apply(p, q, &v);
                if !w.is_empty() && basis.insert(&w).is_some() {
                    queue.push_back(w);
                }
            }
        }
    }
    let dim = basis.len();
    let mut gens = Vec::with_capacity(n_big * n_big);
    for p in 0..n_big {
        for q in 0..n_big {
            let mut trip = Vec::new();
            for (b, v) in basis.vectors().iter().enumerate() {
                let w = power.apply(p, q, v);
                let c = basis.coords(&w).ok_or_else(|| Error::NotInvariant("cyclic span is not closed".into()))?;
                trip.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(r, x)| (r, b, x)));
            }
            gens.push(SparseMat::from_triplets(dim, dim, trip));
        }
    }
    LieRep::new(scheme.clone(), dim, gens)
}
