//! Skew representations `V(λ)^+_μ` of the twisted Yangian `Y(g_{N−M})`, acting through
//! `ρ: s_ab(u) ↦ α_{−m}(u) f^{−m⋯m, a}_{−m⋯m, b}(u + M/2)`.

pub mod checks;
pub mod drinfeld;

use std::sync::Arc;

pub use checks::{
    algebra_dim, check_irreducible, check_restriction, check_sdet_eigen, check_sklmu, commutant_dim, extract_hw, find_highest_vector,
    hw_of_vector, sdet_eigenvalue, Irreducibility,
};
pub use drinfeld::{closed_form_hw, drinfeld_from_hw, hw_closed_form, nu, solve_ratio, DrinfeldData, YangianHW};

use crate::algebra::{Case, IndexScheme};
use crate::combinatorics::patterns::inequality_text;
use crate::combinatorics::violated_inequality;
use crate::error::{Error, Result};
use crate::exact::{Mat, Poly, Rational, Scalar};
use crate::rep::{extract_irrep, skew_subspace, HighestWeight, LieRep, Subspace};
use crate::sklyanin::{Bordered, EvalFamily, ExactFamily, Family, Grid};

/// The operator family `ρ(S(u))` on a skew space.
#[derive(Clone)]
pub enum SkewFamily {
    /// `M = 0`: the evaluation module itself.
    Eval(Arc<EvalFamily>),
    /// Exact entries of the bordered minors restricted to the skew space.
    Exact(Arc<ExactFamily>),
}

impl<K: Scalar> Family<K> for SkewFamily {
    fn scheme(&self) -> &IndexScheme {
        match self {
            SkewFamily::Eval(f) => Family::<K>::scheme(&**f),
            SkewFamily::Exact(f) => Family::<K>::scheme(&**f),
        }
    }

    fn dim(&self) -> usize {
        match self {
            SkewFamily::Eval(f) => Family::<K>::dim(&**f),
            SkewFamily::Exact(f) => Family::<K>::dim(&**f),
        }
    }

    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>> {
        match self {
            SkewFamily::Eval(f) => f.grid(x),
            SkewFamily::Exact(f) => f.grid(x),
        }
    }

    fn degree_bound(&self) -> usize {
        match self {
            SkewFamily::Eval(f) => Family::<K>::degree_bound(&**f),
            SkewFamily::Exact(f) => Family::<K>::degree_bound(&**f),
        }
    }

    fn twisted(&self) -> bool {
        match self {
            SkewFamily::Eval(f) => Family::<K>::twisted(&**f),
            SkewFamily::Exact(f) => Family::<K>::twisted(&**f),
        }
    }
}

/// `V(λ)^+_μ` with its `Y(g_{N−M})`-action.
pub struct SkewModule {
    lambda: HighestWeight,
    mu: HighestWeight,
    scheme: IndexScheme,
    rep: Arc<LieRep>,
    space: Arc<Subspace>,
    family: SkewFamily,
    outer: Vec<i32>,
    den: Poly,
}

/// Build the skew module. The weights use the non-positive convention.
pub fn build_skew(lambda: &HighestWeight, mu: &HighestWeight, scheme: &IndexScheme) -> Result<SkewModule> {
    let (n, m) = (scheme.half_rank(), mu.len());
    lambda.validate(scheme.case(), scheme.size())?;
    if m >= n {
        return Err(Error::OutOfRange(format!("m = {m} needs m < n = {n}")));
    }
    if scheme.case() == Case::Symplectic {
        mu.validate(Case::Symplectic, 2 * m)?;
        let (l, u) = (lambda.ints()?, mu.ints()?);
        if let Some((kind, i)) = violated_inequality(&l, &u) {
            return Err(Error::EmptySkewSpace(inequality_text(kind, i, n - m)));
        }
    }
    let rep = Arc::new(extract_irrep(lambda, scheme)?);
    let space = Arc::new(skew_subspace(&rep, mu, m)?);
    if space.dim() == 0 {
        return Err(Error::EmptySkewSpace(format!("no g_M-highest vectors of weight {mu} in V{lambda}")));
    }
    let eval = Arc::new(EvalFamily::new(rep.clone()));
    let inner = scheme.indices().iter().filter(|i| i.unsigned_abs() as usize <= m).count();
    let eval_den = Poly::linear(&-EvalFamily::shift(scheme.case()));
    let (family, outer, den) = if inner == 0 {
        (SkewFamily::Eval(eval), scheme.indices().to_vec(), eval_den)
    } else {
        let b = Bordered::sharp(eval, m, true)?.restricted(space.clone());
        let den = b.denominator(&eval_den);
        let outer = b.outer_indices().to_vec();
        (SkewFamily::Exact(Arc::new(ExactFamily::from_samples(&b, &den)?)), outer, den)
    };
    Ok(SkewModule { lambda: lambda.clone(), mu: mu.clone(), scheme: scheme.clone(), rep, space, family, outer, den })
}

impl SkewModule {
    pub fn lambda(&self) -> &HighestWeight {
        &self.lambda
    }

    pub fn mu(&self) -> &HighestWeight {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.scheme.half_rank()
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Scheme of `g_N`.
    pub fn base_scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    /// Scheme of `g_{N−M}`.
    pub fn scheme(&self) -> &IndexScheme {
        Family::<Rational>::scheme(&self.family)
    }

    pub fn rep(&self) -> &Arc<LieRep> {
        &self.rep
    }

    pub fn space(&self) -> &Arc<Subspace> {
        &self.space
    }

    pub fn family(&self) -> &SkewFamily {
        &self.family
    }

    /// Index of `g_N` behind an index of `g_{N−M}`.
    pub fn base_index(&self, i: i32) -> Result<i32> {
        Ok(self.outer[self.scheme().pos(i)?])
    }

    /// `F_{ab}` of `g_N` restricted to the skew space, for `a, b` indices of `g_{N−M}`.
    pub fn lie_op(&self, a: i32, b: i32) -> Result<Mat<Rational>> {
        let g = self.rep.gen(self.base_index(a)?, self.base_index(b)?)?;
        self.space.restrict(&g.to_dense())
    }

    /// A common denominator of the entries of `ρ(S(u))`.
    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Integer weights, for the symplectic combinatorics.
    pub fn int_weights(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        Ok((self.lambda.ints()?, self.mu.ints()?))
    }
}
