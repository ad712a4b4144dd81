use std::collections::BTreeMap;

use super::index::IndexScheme;
use super::perm::{all_positions, positional_sign};
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

pub type Tuple = Vec<usize>;

/// Sparse linear operator on `(C^N)^{⊗k}`: input tuple → (output tuple → coefficient).
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp<K> {
    dim: usize,
    k: usize,
    cols: BTreeMap<Tuple, BTreeMap<Tuple, K>>,
}

fn all_tuples(dim: usize, k: usize) -> Vec<Tuple> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

impl<K: Scalar> TensorOp<K> {
    pub fn zero(dim: usize, k: usize) -> TensorOp<K> {
        TensorOp { dim, k, cols: BTreeMap::new() }
    }

    pub fn identity(dim: usize, k: usize) -> TensorOp<K> {
        let mut op = TensorOp::zero(dim, k);
        for t in all_tuples(dim, k) {
            op.insert(t.clone(), t, K::one());
        }
        op
    }

    pub fn slots(&self) -> usize {
        self.k
    }

    pub fn insert(&mut self, input: Tuple, output: Tuple, c: K) {
        if c.is_zero() {
            return;
        }
        let col = self.cols.entry(input).or_default();
        match col.get_mut(&output) {
            Some(v) => {
                v.add_assign(&c);
                if v.is_zero() {
                    col.remove(&output);
                }
            }
            None => {
                col.insert(output, c);
            }
        }
    }

    pub fn entry(&self, output: &[usize], input: &[usize]) -> K {
        self.cols.get(input).and_then(|c| c.get(output)).cloned().unwrap_or_else(K::zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(|c| c.len()).sum()
    }

    fn check(&self, o: &TensorOp<K>) -> Result<()> {
        if (self.dim, self.k) != (o.dim, o.k) {
            return Err(Error::ShapeMismatch("tensor operators on different spaces".into()));
        }
        Ok(())
    }

    /// `self ∘ o`
    pub fn compose(&self, o: &TensorOp<K>) -> Result<TensorOp<K>> {
        self.check(o)?;
        let mut out = TensorOp::zero(self.dim, self.k);
        for (input, mid) in &o.cols {
            for (t, c) in mid {
                if let Some(col) = self.cols.get(t) {
                    for (w, d) in col {
                        out.insert(input.clone(), w.clone(), d.mul(c));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &TensorOp<K>) -> Result<TensorOp<K>> {
        self.check(o)?;
        let mut out = self.clone();
        for (input, col) in &o.cols {
            for (w, c) in col {
                out.insert(input.clone(), w.clone(), c.clone());
            }
        }
        out.cols.retain(|_, c| !c.is_empty());
        Ok(out)
    }

    pub fn scale(&self, c: &K) -> TensorOp<K> {
        let mut out = TensorOp::zero(self.dim, self.k);
        for (input, col) in &self.cols {
            for (w, d) in col {
                out.insert(input.clone(), w.clone(), d.mul(c));
            }
        }
        out
    }

    fn normalized(&self) -> BTreeMap<&Tuple, &BTreeMap<Tuple, K>> {
        self.cols.iter().filter(|(_, c)| !c.is_empty()).collect()
    }

    pub fn same_as(&self, o: &TensorOp<K>) -> bool {
        (self.dim, self.k) == (o.dim, o.k) && self.normalized() == o.normalized()
    }

    /// Permutation operator `P_σ`: the factor in slot `s` moves to slot `σ(s)`.
    pub fn permutation(dim: usize, sigma: &[usize]) -> TensorOp<K> {
        let k = sigma.len();
        let mut op = TensorOp::zero(dim, k);
        for t in all_tuples(dim, k) {
            let mut w = vec![0; k];
            for s in 0..k {
                w[sigma[s]] = t[s];
            }
            op.insert(t, w, K::one());
        }
        op
    }

    /// Flip `P` on `(C^N)^{⊗2}`.
    pub fn flip(scheme: &IndexScheme) -> TensorOp<K> {
        TensorOp::permutation(scheme.size(), &[1, 0])
    }

    /// `Q(e_p ⊗ e_q) = δ_{p,-q} Σ_r θ_{qr} e_{-r} ⊗ e_r`.
    pub fn q_operator(scheme: &IndexScheme) -> TensorOp<K> {
        let n = scheme.size();
        let mut op = TensorOp::zero(n, 2);
        for q in 0..n {
            let p = scheme.neg(q);
            for r in 0..n {
                let c = K::from_rational(&Rational::from_integer(scheme.theta_pos(q, r).into()));
                op.insert(vec![p, q], vec![scheme.neg(r), r], c);
            }
        }
        op
    }

    /// `R(x) = 1 - P/x`.
    pub fn r_matrix(scheme: &IndexScheme, x: &K) -> Result<TensorOp<K>> {
        let inv = x.inv()?;
        TensorOp::identity(scheme.size(), 2).add(&TensorOp::flip(scheme).scale(&inv.neg()))
    }

    /// `R^t(x) = 1 - Q/x`.
    pub fn r_transposed(scheme: &IndexScheme, x: &K) -> Result<TensorOp<K>> {
        let inv = x.inv()?;
        TensorOp::identity(scheme.size(), 2).add(&TensorOp::q_operator(scheme).scale(&inv.neg()))
    }

    /// `A_k = Σ_σ sgn σ · P_σ`.
    pub fn antisymmetrizer(scheme: &IndexScheme, k: usize) -> Result<TensorOp<K>> {
        if k == 0 || k > scheme.size() {
            return Err(Error::OutOfRange(format!("antisymmetrizer size {k} for N = {}", scheme.size())));
        }
        let mut op = TensorOp::zero(scheme.size(), k);
        for sigma in all_positions(k) {
            let s = K::from_rational(&Rational::from_integer(positional_sign(&sigma).into()));
            op = op.add(&TensorOp::permutation(scheme.size(), &sigma).scale(&s))?;
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn schemes() -> Vec<IndexScheme> {
        vec![IndexScheme::symplectic(1), IndexScheme::orthogonal(3), IndexScheme::symplectic(2), IndexScheme::orthogonal(4)]
    }

    #[test]
    fn q_squared() {
        for s in schemes() {
            let q: TensorOp<Rational> = TensorOp::q_operator(&s);
            let lhs = q.compose(&q).unwrap();
            assert!(lhs.same_as(&q.scale(&int(s.size() as i64))), "{s}");
        }
    }

    #[test]
    fn flip_and_rt_inverse() {
        for s in schemes() {
            let p: TensorOp<Rational> = TensorOp::flip(&s);
            assert!(p.compose(&p).unwrap().same_as(&TensorOp::identity(s.size(), 2)));
            for x in [rat(17, 3), rat(5, 7), int(-4)] {
                let a = TensorOp::r_transposed(&s, &x).unwrap();
                let b = TensorOp::r_transposed(&s, &(int(s.size() as i64) - &x)).unwrap();
                assert!(a.compose(&b).unwrap().same_as(&TensorOp::identity(s.size(), 2)));
            }
        }
    }

    #[test]
    fn antisymmetrizers() {
        let s = IndexScheme::symplectic(2);
        let a1: TensorOp<Rational> = TensorOp::antisymmetrizer(&s, 1).unwrap();
        assert!(a1.same_as(&TensorOp::identity(4, 1)));
        let a2: TensorOp<Rational> = TensorOp::antisymmetrizer(&s, 2).unwrap();
        let one_minus_p = TensorOp::identity(4, 2).add(&TensorOp::flip(&s).scale(&int(-1))).unwrap();
        assert!(a2.same_as(&one_minus_p));
        let mut fact = 1;
        for k in 1..=4 {
            fact *= k as i64;
            let a: TensorOp<Rational> = TensorOp::antisymmetrizer(&s, k).unwrap();
            assert!(a.compose(&a).unwrap().same_as(&a.scale(&int(fact))));
            for sigma in all_positions(k) {
                let ps = TensorOp::permutation(4, &sigma);
                let sg = int(positional_sign(&sigma) as i64);
                assert!(a.compose(&ps).unwrap().same_as(&a.scale(&sg)));
            }
        }
        assert!(TensorOp::<Rational>::antisymmetrizer(&s, 5).is_err());
    }
}
