use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::sparse::SparseMat;
use crate::algebra::{Case, IndexScheme};
use crate::error::{Error, Result};
use crate::exact::rational::{self, int, Rational};

/// Default bound on tensor-power dimensions; `TY_SIZE_LIMIT` overrides it.
pub const DEFAULT_SIZE_LIMIT: u128 = 1_000_000;

pub fn size_limit() -> u128 {
    std::env::var("TY_SIZE_LIMIT").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_LIMIT)
}

pub fn check_size(states: u128) -> Result<()> {
    let limit = size_limit();
    if states > limit {
        return Err(Error::SizeLimit { states, limit });
    }
    Ok(())
}

/// A weight `(λ_1, ..., λ_n)` in the non-positive convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HighestWeight(#[serde(serialize_with = "rational::serialize_vec")] pub Vec<Rational>);

impl HighestWeight {
    pub fn from_ints(v: &[i64]) -> HighestWeight {
        HighestWeight(v.iter().map(|&x| int(x)).collect())
    }

    /// Positive partition `ν_1 ≥ ... ≥ ν_n` as the weight `(-ν_n, ..., -ν_1)`.
    pub fn from_partition(nu: &[i64]) -> HighestWeight {
        HighestWeight(nu.iter().rev().map(|&x| int(-x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// Integer entries, if all are integral.
    pub fn ints(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| rational::to_i64(x).ok_or_else(|| Error::InvalidWeight(format!("non-integral entry {}", rational::to_string(x)))))
            .collect()
    }

    /// Validity for `g_N` with the given number of entries.
    pub fn validate(&self, case: Case, big_n: usize) -> Result<()> {
        let n = big_n / 2;
        if self.len() != n {
            return Err(Error::InvalidWeight(format!("expected {n} entries, got {}", self.len())));
        }
        let nonneg_int = |x: &Rational| x.is_integer() && !x.is_negative();
        for w in self.0.windows(2) {
            if !nonneg_int(&(&w[0] - &w[1])) {
                return Err(Error::InvalidWeight(format!("λ_i - λ_(i+1) must lie in Z_+: {}", self)));
            }
        }
        let Some(first) = self.0.first() else { return Ok(()) };
        let ok = match case {
            Case::Symplectic => nonneg_int(&-first),
            Case::Orthogonal if big_n % 2 == 1 => nonneg_int(&(-first * int(2))),
            Case::Orthogonal if n >= 2 => nonneg_int(&(-first - &self.0[1])),
            Case::Orthogonal => first.is_integer(),
        };
        if !ok {
            return Err(Error::InvalidWeight(format!("{} is not dominant for {}_{}", self, case.short(), big_n)));
        }
        Ok(())
    }

    /// Weakly decreasing, non-positive integer tuple (used for `μ` and diagrams).
    pub fn validate_nonpositive(&self) -> Result<()> {
        let v = self.ints()?;
        if v.first().is_some_and(|&x| x > 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!("{self} must be non-positive and weakly decreasing")));
        }
        Ok(())
    }
}

impl std::fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(rational::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A `g_N`-module given by the matrices of all `F_ij`.
#[derive(Clone, Debug)]
pub struct LieRep {
    scheme: IndexScheme,
    dim: usize,
    gens: Vec<Arc<SparseMat<Rational>>>,
}

/// Representatives of `F_ij` modulo `F_ij = -θ_ij F_{-j,-i}`, skipping the zero ones.
pub fn basis_pairs(scheme: &IndexScheme) -> Vec<(usize, usize)> {
    let n = scheme.size();
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let partner = (scheme.neg(q), scheme.neg(p));
            if (p, q) > partner {
                continue;
            }
            if (p, q) == partner && scheme.theta_pos(p, q) == 1 {
                continue;
            }
            out.push((p, q));
        }
    }
    out
}

impl LieRep {
    /// Validated constructor: checks the symmetry of `F` and all brackets.
    pub fn new(scheme: IndexScheme, dim: usize, gens: Vec<SparseMat<Rational>>) -> Result<LieRep> {
        let rep = LieRep::new_unchecked(scheme, dim, gens)?;
        rep.check_relations()?;
        Ok(rep)
    }

    /// Constructor without the relation check (negative controls, trusted builders).
    pub fn new_unchecked(scheme: IndexScheme, dim: usize, gens: Vec<SparseMat<Rational>>) -> Result<LieRep> {
        let n = scheme.size();
        if gens.len() != n * n || gens.iter().any(|g| g.nrows() != dim || g.ncols() != dim) {
            return Err(Error::ShapeMismatch(format!("expected {} generators of size {dim}", n * n)));
        }
        Ok(LieRep { scheme, dim, gens: gens.into_iter().map(Arc::new).collect() })
    }

    pub fn vector_rep(scheme: &IndexScheme) -> LieRep {
        let n = scheme.size();
        let mut gens = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // F_ij e_k = δ_jk e_i − θ_ij δ_{−i,k} e_{−j}
                let trip = vec![(i, j, Rational::one()), (scheme.neg(j), scheme.neg(i), int(-scheme.theta_pos(i, j) as i64))];
                gens.push(SparseMat::from_triplets(n, n, trip));
            }
        }
        LieRep::new(scheme.clone(), n, gens).expect("vector representation satisfies the relations")
    }

    /// The trivial one-dimensional module.
    pub fn trivial(scheme: &IndexScheme) -> LieRep {
        let n = scheme.size();
        LieRep::new_unchecked(scheme.clone(), 1, vec![SparseMat::zero(1, 1); n * n]).expect("shapes")
    }

    /// `base^{⊗d}` with the Leibniz action.
    pub fn tensor_rep(base: &LieRep, d: usize) -> Result<LieRep> {
        if d == 0 {
            return Err(Error::OutOfRange("tensor power d must be positive".into()));
        }
        let states = (base.dim as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        check_size(states)?;
        let dim = states as usize;
        let n = base.scheme.size();
        let mut gens = Vec::with_capacity(n * n);
        for g in &base.gens {
            let mut trip = Vec::new();
            for col in 0..dim {
                let mut stride = 1;
                let mut rest = col;
                for _ in 0..d {
                    let digit = rest % base.dim;
                    rest /= base.dim;
                    for (r, c, v) in g.triplets() {
                        if c == digit {
                            let row = col - digit * stride + r * stride;
                            trip.push((row, col, v.clone()));
                        }
                    }
                    stride *= base.dim;
                }
            }
            gens.push(SparseMat::from_triplets(dim, dim, trip));
        }
        LieRep::new_unchecked(base.scheme.clone(), dim, gens)
    }

    pub fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen_pos(&self, p: usize, q: usize) -> &Arc<SparseMat<Rational>> {
        &self.gens[p * self.scheme.size() + q]
    }

    pub fn gen(&self, i: i32, j: i32) -> Result<&Arc<SparseMat<Rational>>> {
        Ok(self.gen_pos(self.scheme.pos(i)?, self.scheme.pos(j)?))
    }

    /// `[F_ij, F_kl]` expressed through the generators, on positions.
    fn bracket_rhs(&self, (i, j): (usize, usize), (k, l): (usize, usize)) -> SparseMat<Rational> {
        let s = &self.scheme;
        let mut acc = SparseMat::zero(self.dim, self.dim);
        let mut add = |c: i64, g: &SparseMat<Rational>| {
            if c != 0 {
                acc = acc.add(&g.scale(&int(c)));
            }
        };
        if k == j {
            add(1, self.gen_pos(i, l));
        }
        if i == l {
            add(-1, self.gen_pos(k, j));
        }
        if k == s.neg(i) {
            add(-(s.theta_pos(i, j) as i64), self.gen_pos(s.neg(j), l));
        }
        if l == s.neg(j) {
            add(-(s.theta_pos(k, s.neg(j)) as i64), self.gen_pos(i, s.neg(k)));
        }
        acc
    }

    /// `F_ij = −θ_ij F_{−j,−i}` and all brackets over a basis of `g_N`.
    pub fn check_relations(&self) -> Result<()> {
        let s = &self.scheme;
        let n = s.size();
        for p in 0..n {
            for q in 0..n {
                let partner = self.gen_pos(s.neg(q), s.neg(p)).scale(&int(-s.theta_pos(p, q) as i64));
                if **self.gen_pos(p, q) != partner {
                    return Err(Error::NotInvariant(format!("F_({},{}) ≠ −θ F_(−j,−i)", s.index(p), s.index(q))));
                }
            }
        }
        let basis = basis_pairs(s);
        for (a, &x) in basis.iter().enumerate() {
            for &y in &basis[a + 1..] {
                let lhs = self.gen_pos(x.0, x.1).commutator(self.gen_pos(y.0, y.1));
                if lhs != self.bracket_rhs(x, y) {
                    return Err(Error::NotInvariant(format!(
                        "bracket [F_({},{}), F_({},{})]",
                        s.index(x.0),
                        s.index(x.1),
                        s.index(y.0),
                        s.index(y.1)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Replace one generator pair without validation (negative controls).
    pub fn corrupted(&self, i: i32, j: i32, delta: &SparseMat<Rational>) -> Result<LieRep> {
        let s = &self.scheme;
        let (p, q) = (s.pos(i)?, s.pos(j)?);
        let mut gens: Vec<SparseMat<Rational>> = self.gens.iter().map(|g| (**g).clone()).collect();
        let idx = p * s.size() + q;
        gens[idx] = gens[idx].add(delta);
        LieRep::new_unchecked(s.clone(), self.dim, gens)
    }

    /// Diagonal of `F_ii` if it is diagonal.
    pub fn diagonal(&self, i: i32) -> Option<Vec<Rational>> {
        let g = self.gen(i, i).ok()?;
        let mut d = vec![Rational::zero(); self.dim];
        for (r, c, v) in g.triplets() {
            if r != c {
                return None;
            }
            d[r] = v.clone();
        }
        Some(d)
    }
}
