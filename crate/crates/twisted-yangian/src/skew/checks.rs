use num_traits::Zero;
use serde::Serialize;

use super::drinfeld::YangianHW;
use super::SkewModule;
use crate::algebra::Case;
use crate::combinatorics::lambda0;
use crate::error::{Error, Result};
use crate::exact::linalg::kernel;
use crate::exact::rational::{int, to_string};
use crate::exact::{Mat, RatFunc, Rational};
use crate::rep::build::{EchelonBasis, SparseVec};
use crate::sklyanin::checks::{agree, check_sdet_scalar, minor_bound, minor_vec, samples};
use crate::sklyanin::{alpha, Family};

fn column(v: &[Rational]) -> Mat<Rational> {
    Mat::from_cols(v.len(), &[v.to_vec()])
}

fn symplectic(sm: &SkewModule) -> Result<()> {
    if sm.base_scheme().case() != Case::Symplectic {
        return Err(Error::OutOfRange("highest-weight data is only offered in the symplectic case".into()));
    }
    Ok(())
}

/// The vector `ζ_{Λ₀}` in coordinates of the skew space: the joint kernel of `F_kk − w_k(Λ₀)`
/// and of the raisings `F_ab`, `a < b`, of the smaller algebra, checked against the Yangian
/// raisings `ρ(s_ab(u))` at three points.
pub fn find_highest_vector(sm: &SkewModule) -> Result<Vec<Rational>> {
    symplectic(sm)?;
    let (l, mu) = sm.int_weights()?;
    let w = lambda0(&l, &mu)?.weight();
    let d = sm.dim();
    let small = sm.scheme().indices().to_vec();
    let mut ops = Vec::new();
    for (k, wk) in w.iter().enumerate() {
        let i = k as i32 + 1;
        ops.push(sm.lie_op(i, i)?.sub(&Mat::scalar(d, &int(*wk))));
    }
    for (p, &a) in small.iter().enumerate() {
        for &b in &small[p + 1..] {
            ops.push(sm.lie_op(a, b)?);
        }
    }
    let rows: Vec<Vec<Rational>> = ops.iter().flat_map(|m| (0..m.rows()).map(move |i| m.row(i).to_vec())).collect();
    let ker = kernel(&rows, d);
    if ker.len() != 1 {
        return Err(Error::NotOneDimensional(ker.len()));
    }
    let xi = ker.into_iter().next().expect("one vector");
    let v = column(&xi);
    let mut used = 0;
    for x in samples(16, 0) {
        if used == 3 {
            break;
        }
        let g = match Family::<Rational>::grid(sm.family(), &x) {
            Ok(g) => g,
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        };
        used += 1;
        for p in 0..small.len() {
            for q in p + 1..small.len() {
                if !g.entry(p, q).apply(&v).is_zero() {
                    return Err(Error::NotEigenvector(format!(
                        "s_({},{})(u) does not kill the vector at u = {}",
                        small[p],
                        small[q],
                        to_string(&x)
                    )));
                }
            }
        }
    }
    Ok(xi)
}

/// Eigenvalues `μ_a(u)` of `ρ(s_aa(u))`, `a = 1..n−m`, on the highest vector.
pub fn extract_hw(sm: &SkewModule) -> Result<YangianHW> {
    let xi = find_highest_vector(sm)?;
    hw_on(sm, &xi)
}

fn hw_on(sm: &SkewModule, xi: &[Rational]) -> Result<YangianHW> {
    let s = sm.scheme();
    let g = Family::<RatFunc>::grid(sm.family(), &RatFunc::var())?;
    let v: Mat<RatFunc> = Mat::from_rational(&column(xi));
    let c = xi.iter().position(|x| !x.is_zero()).ok_or_else(|| Error::NotEigenvector("zero vector".into()))?;
    let checks: Vec<Rational> = samples(3, 5);
    let mut components = Vec::new();
    for a in 1..=s.half_rank() as i32 {
        let p = s.pos(a)?;
        let out = g.entry(p, p).apply(&v);
        let ratio = out.get(c, 0).div(&RatFunc::constant(xi[c].clone()))?;
        if out.first_difference(&v.scale(&ratio)).is_some() {
            return Err(Error::NotEigenvector(format!("s_({a},{a})(u)")));
        }
        // the symbolic ratio has to agree with plain evaluation off the poles
        for x in &checks {
            let (Ok(r), Ok(gx)) = (ratio.eval_at(x), Family::<Rational>::grid(sm.family(), x)) else { continue };
            let direct = gx.entry(p, p).apply(&column(xi));
            if direct.first_difference(&column(xi).scale(&r)).is_some() {
                return Err(Error::NotEigenvector(format!("s_({a},{a}) at u = {}", to_string(x))));
            }
        }
        components.push(ratio);
    }
    Ok(YangianHW { components })
}

/// Scalar of `sdet S(u)` on a module with highest weight `hw`:
/// `α_n(u) Π_i μ_i(−u+n−i) μ_i(u−n−i+1)`.
///
/// This is the product with the components taken in reverse order, `μ_{n+1−i}(−u+i−1) μ_{n+1−i}(u−N+i)`;
/// the unreversed product already fails on the vector representation of `sp_4`.
pub fn sdet_eigenvalue(hw: &YangianHW, case: Case) -> RatFunc {
    let n = hw.components.len() as i64;
    let mut f = alpha(&int(n), case);
    for (k, mu) in hw.components.iter().enumerate() {
        let i = k as i64 + 1;
        f = f.mul(&mu.compose_affine(&int(-1), &int(n - i)));
        f = f.mul(&mu.compose_affine(&int(1), &int(1 - n - i)));
    }
    f
}

/// `sdet S(u)` acts on the module by [`sdet_eigenvalue`].
pub fn check_sdet_eigen<F: Family<Rational> + ?Sized>(fam: &F, hw: &YangianHW, seed: i64) -> Result<Option<String>> {
    if hw.components.len() != fam.scheme().half_rank() {
        return Err(Error::ShapeMismatch("one highest-weight component per index 1..n".into()));
    }
    check_sdet_scalar(fam, &sdet_eigenvalue(hw, fam.scheme().case()), seed)
}

/// `−k+1, ..., hi` without `0`.
fn sklmu_upper(k: i32, hi: i32) -> Vec<i32> {
    (-k + 1..=hi).filter(|&i| i != 0).collect()
}

/// `s^{−k+1⋯k}_{−k+1⋯k}(u) ξ = μ_k(u−2k+2) s^{−k+1⋯k−1}_{−k+1⋯k−1}(u) ξ` for `k = 1..n`.
pub fn check_sklmu<F: Family<Rational> + ?Sized>(fam: &F, hw: &YangianHW, xi: &[Rational], seed: i64) -> Result<Option<String>> {
    let v = column(xi);
    for (idx, mu) in hw.components.iter().enumerate() {
        let k = idx as i32 + 1;
        let (big, small) = (sklmu_upper(k, k), sklmu_upper(k, k - 1));
        let b_small = if small.is_empty() { 0 } else { minor_bound(fam, small.len()) };
        let bound = minor_bound(fam, big.len()) + mu.degree() + b_small;
        let shift = int(2 - 2 * k as i64);
        let w = agree(
            bound,
            seed,
            |x| minor_vec(fam, &big, x, &v),
            |x| Ok(minor_vec(fam, &small, x, &v)?.scale(&mu.eval_at(&(x + &shift))?)),
        )?;
        if let Some(w) = w {
            return Ok(Some(format!("k = {k}: {w}")));
        }
    }
    Ok(None)
}

/// `ρ(s_ab(u)) = δ_ab + F_ab u^{-1} + O(u^{-2})` on the skew space.
pub fn check_restriction(sm: &SkewModule) -> Result<Option<String>> {
    let s = sm.scheme();
    let g = Family::<RatFunc>::grid(sm.family(), &RatFunc::var())?;
    let d = sm.dim();
    for (p, &a) in s.indices().iter().enumerate() {
        for (q, &b) in s.indices().iter().enumerate() {
            let e = g.dense(p, q);
            let lead = e.map(|f| f.coeff_at_infinity(0));
            let want = if p == q { Mat::identity(d) } else { Mat::zeros(d, d) };
            if lead.first_difference(&want).is_some() {
                return Ok(Some(format!("s_({a},{b})(u) has the wrong constant term")));
            }
            for r in 1..=2i64 {
                if e.data().iter().any(|f| !f.coeff_at_infinity(r).is_zero()) {
                    return Ok(Some(format!("s_({a},{b})(u) grows at infinity")));
                }
            }
            let first = e.map(|f| f.coeff_at_infinity(-1));
            let lie = sm.lie_op(a, b)?;
            if let Some((r, c)) = first.first_difference(&lie) {
                return Ok(Some(format!(
                    "u^-1 coefficient of s_({a},{b}) differs from F_({a},{b}) at ({r},{c}): {} vs {}",
                    to_string(first.get(r, c)),
                    to_string(lie.get(r, c))
                )));
            }
        }
    }
    Ok(None)
}

/// Result of the irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Irreducibility {
    pub dim: usize,
    /// Dimension of the matrix algebra generated by the action.
    pub algebra_dim: usize,
    pub commutant_dim: usize,
    /// Generated algebra is the full matrix algebra (equivalently, by Burnside).
    pub irreducible: bool,
}

fn flatten(m: &Mat<Rational>) -> SparseVec {
    m.data().iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Dimension of the unital algebra generated by `gens`.
pub fn algebra_dim(d: usize, gens: &[Mat<Rational>]) -> usize {
    let mut span = EchelonBasis::default();
    let mut queue = vec![Mat::identity(d)];
    span.insert(&flatten(&queue[0]));
    while let Some(x) = queue.pop() {
        if span.len() == d * d {
            break;
        }
        for g in gens {
            let y = g.mul(&x);
            if span.insert(&flatten(&y)).is_some() {
                queue.push(y);
            }
        }
    }
    span.len()
}

/// Dimension of `{X : XG = GX for every G}`.
pub fn commutant_dim(d: usize, gens: &[Mat<Rational>]) -> usize {
    let mut rows = EchelonBasis::default();
    for g in gens {
        // (XG − GX)_{ij} = Σ_k X_ik G_kj − G_ik X_kj
        for i in 0..d {
            for j in 0..d {
                let mut row = SparseVec::new();
                for k in 0..d {
                    let a = g.get(k, j);
                    if !a.is_zero() {
                        *row.entry(i * d + k).or_insert_with(Rational::zero) += a;
                    }
                    let b = g.get(i, k);
                    if !b.is_zero() {
                        *row.entry(k * d + j).or_insert_with(Rational::zero) -= b;
                    }
                }
                row.retain(|_, x| !x.is_zero());
                rows.insert(&row);
                if rows.len() + 1 == d * d {
                    return 1;
                }
            }
        }
    }
    d * d - rows.len()
}

/// Values of every `ρ(s_ab(u))` at `deg(den) + 1` points span the same space as all
/// coefficients `s^{(r)}_ab` together with the identity.
fn action_generators(sm: &SkewModule) -> Result<Vec<Mat<Rational>>> {
    let need = sm.denominator().degree() + 1;
    let mut span = EchelonBasis::default();
    let mut out = Vec::new();
    let mut used = 0;
    let mut t = 0;
    while used < need {
        let x = samples(1, t)[0].clone();
        t += 1;
        if sm.denominator().eval(&x).is_zero() {
            continue;
        }
        let g = match Family::<Rational>::grid(sm.family(), &x) {
            Ok(g) => g,
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        };
        used += 1;
        let n = g.size();
        for p in 0..n {
            for q in 0..n {
                let m = g.dense(p, q);
                if span.insert(&flatten(&m)).is_some() {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// Irreducibility of the skew space under the twisted Yangian.
pub fn check_irreducible(sm: &SkewModule) -> Result<Irreducibility> {
    let d = sm.dim();
    if d == 1 {
        return Ok(Irreducibility { dim: 1, algebra_dim: 1, commutant_dim: 1, irreducible: true });
    }
    let gens = action_generators(sm)?;
    let a = algebra_dim(d, &gens);
    let c = commutant_dim(d, &gens);
    Ok(Irreducibility { dim: d, algebra_dim: a, commutant_dim: c, irreducible: a == d * d && c == 1 })
}

/// `ρ(s_aa(u))` eigenvalue ratio as a symbolic function, for callers holding a vector.
pub fn hw_of_vector(sm: &SkewModule, xi: &[Rational]) -> Result<YangianHW> {
    hw_on(sm, xi)
}
