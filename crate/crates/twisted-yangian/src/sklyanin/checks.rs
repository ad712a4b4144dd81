//! Relation checkers. Identities between rational functions of bounded degree are
//! verified at `bound + 1` sample points, which is exact equality.

use super::chain::{State, Step};
use super::family::{alpha_at, Family};
use super::minor::{aux_minor, minor, minor_on, sdet, Route};
use crate::algebra::Case;
use crate::error::{Error, Result};
use crate::exact::rational::{int, rat, to_string};
use crate::exact::{Mat, RatFunc, Rational, Scalar};

/// `17/3 + seed + t`: never a half-integer, so evaluation poles are avoided.
pub fn samples(count: usize, seed: i64) -> Vec<Rational> {
    (0..count as i64).map(|t| rat(17, 3) + int(seed + t)).collect()
}

/// `(17/3 + seed + t, 29/7 + seed + 2t)`.
pub fn sample_pairs(count: usize, seed: i64) -> Vec<(Rational, Rational)> {
    (0..count as i64).map(|t| (rat(17, 3) + int(seed + t), rat(29, 7) + int(seed + 2 * t))).collect()
}

/// Route valid for a family: the explicit expansion needs the symmetry relation.
pub fn default_route<F: Family<Rational> + ?Sized>(fam: &F) -> Route {
    if fam.twisted() {
        Route::Auto
    } else {
        Route::Antisymmetrizer
    }
}

fn witness_mat(at: &str, lhs: &Mat<Rational>, rhs: &Mat<Rational>) -> Option<String> {
    lhs.first_difference(rhs).map(|(r, c)| {
        if r == usize::MAX {
            return format!("{at}: shape mismatch");
        }
        format!("{at}: entry ({r},{c}) lhs {} rhs {}", to_string(lhs.get(r, c)), to_string(rhs.get(r, c)))
    })
}

/// Compare two operator-valued functions at `bound + 1` points, skipping poles.
pub fn agree<A, B>(bound: usize, seed: i64, lhs: A, rhs: B) -> Result<Option<String>>
where
    A: Fn(&Rational) -> Result<Mat<Rational>> + Sync + Send,
    B: Fn(&Rational) -> Result<Mat<Rational>> + Sync + Send,
{
    let need = bound + 1;
    let xs = samples(need + 64, seed);
    let mut used = 0;
    let mut start = 0;
    while used < need {
        let take = (need - used).min(xs.len() - start);
        if take == 0 {
            return Err(Error::Pole("too many sample points hit poles".into()));
        }
        let batch = &xs[start..start + take];
        start += take;
        let out = crate::par::map(batch, |x| -> Result<Option<Option<String>>> {
            let (l, r) = match (lhs(x), rhs(x)) {
                (Ok(l), Ok(r)) => (l, r),
                (Err(Error::Pole(_)), _) | (_, Err(Error::Pole(_))) => return Ok(None),
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            Ok(Some(witness_mat(&format!("u = {}", to_string(x)), &l, &r)))
        });
        for o in out {
            if let Some(w) = o? {
                used += 1;
                if w.is_some() {
                    return Ok(w);
                }
            }
        }
    }
    Ok(None)
}

/// `R(u−v) S_1(u) R^t(−u−v) S_2(v) = S_2(v) R^t(−u−v) S_1(u) R(u−v)` on `(C^N)^{⊗2} ⊗ V`.
pub fn check_quaternary<F: Family<Rational> + ?Sized>(fam: &F, pairs: &[(Rational, Rational)]) -> Result<Option<String>> {
    let s = fam.scheme();
    let n = s.size();
    for (u, v) in pairs {
        let gu = fam.grid(u)?;
        let gv = fam.grid(v)?;
        let r_inv = (u - v).inv().map_err(|_| Error::Pole("u = v".into()))?;
        let rt_inv = (-(u + v)).inv().map_err(|_| Error::Pole("u = −v".into()))?;
        let lhs = [
            Step::S { slot: 1, grid: &gv },
            Step::Rt { a: 0, b: 1, inv: rt_inv.clone() },
            Step::S { slot: 0, grid: &gu },
            Step::R { a: 0, b: 1, inv: r_inv.clone() },
        ];
        let rhs = [
            Step::R { a: 0, b: 1, inv: r_inv.clone() },
            Step::S { slot: 0, grid: &gu },
            Step::Rt { a: 0, b: 1, inv: rt_inv.clone() },
            Step::S { slot: 1, grid: &gv },
        ];
        for p in 0..n {
            for q in 0..n {
                let init = || State::basis(s, &[p, q], Mat::identity(fam.dim()));
                let a = init()?.apply(s, &lhs);
                let b = init()?.apply(s, &rhs);
                if let Some((t, r, c)) = a.first_difference(&b) {
                    let ti: Vec<i32> = t.iter().map(|&x| s.index(x)).collect();
                    return Ok(Some(format!(
                        "(u,v) = ({}, {}), e_{}⊗e_{} ↦ component {ti:?}, entry ({r},{c})",
                        to_string(u),
                        to_string(v),
                        s.index(p),
                        s.index(q)
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// `θ_ij s_{−j,−i}(−u) = s_ij(u) ± (s_ij(u) − s_ij(−u))/(2u)`, upper sign orthogonal.
pub fn check_symmetry<F: Family<Rational> + ?Sized>(fam: &F, xs: &[Rational]) -> Result<Option<String>> {
    let s = fam.scheme();
    let sign = if s.case() == Case::Orthogonal { int(1) } else { int(-1) };
    for u in xs {
        let gp = fam.grid(u)?;
        let gm = fam.grid(&-u)?;
        let c = sign.clone() / (int(2) * u);
        for p in 0..s.size() {
            for q in 0..s.size() {
                let lhs = gm.dense(s.neg(q), s.neg(p)).scale_rational(&int(s.theta_pos(p, q) as i64));
                let sp = gp.dense(p, q);
                let rhs = sp.add(&sp.sub(&gm.dense(p, q)).scale_rational(&c));
                if let Some(w) = witness_mat(&format!("u = {}, (i,j) = ({},{})", to_string(u), s.index(p), s.index(q)), &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// `[s_{a_i b_j}(u), s^{a}_{b}(v)] = 0` whenever `a_i = −b_l` and `b_j = −a_m` for some `l, m`.
pub fn check_centrality<F: Family<Rational> + ?Sized>(
    fam: &F,
    upper: &[i32],
    lower: &[i32],
    pairs: &[(Rational, Rational)],
) -> Result<Option<String>> {
    let s = fam.scheme();
    let route = default_route(fam);
    for (u, v) in pairs {
        let mv = minor(fam, upper, lower, v, route)?;
        let gu = fam.grid(u)?;
        for &ai in upper.iter().filter(|&&a| lower.contains(&-a)) {
            for &bj in lower.iter().filter(|&&b| upper.contains(&-b)) {
                let e = gu.dense(s.pos(ai)?, s.pos(bj)?);
                let comm = e.mul(&mv).sub(&mv.mul(&e));
                if !comm.is_zero() {
                    return Ok(Some(format!("(u,v) = ({}, {}), s_{{{ai},{bj}}}", to_string(u), to_string(v))));
                }
            }
        }
    }
    Ok(None)
}

/// Degree bound of `sdet` for a family.
pub fn sdet_bound<F: Family<Rational> + ?Sized>(fam: &F) -> usize {
    let n = fam.scheme().size();
    let d = fam.degree_bound();
    match default_route(fam) {
        Route::Antisymmetrizer => n * d + n * (n - 1) / 2,
        _ => n * d + 1,
    }
}

/// `α_n(u)^{-1} sdet S(u) = α_n(−u+N−1)^{-1} sdet S(−u+N−1)`.
pub fn check_symsdet<F: Family<Rational> + ?Sized>(fam: &F, seed: i64) -> Result<Option<String>> {
    let s = fam.scheme();
    let (n, nn) = (int(s.half_rank() as i64), int(s.size() as i64));
    let route = default_route(fam);
    let side = |x: &Rational| -> Result<Mat<Rational>> {
        let a = alpha_at(&n, s.case(), x)?;
        Ok(sdet(fam, x, route)?.scale(&a.inv()?))
    };
    let b = sdet_bound(fam) + 1;
    agree(2 * b, seed, |x| side(x), |x| side(&(&nn - int(1) - x)))
}

/// Comatrix entries `ŝ_pq(x)` (positions), as an `N × N` array of operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comatrix {
    /// Signed auxiliary minors with one lower index moved to the last slot.
    Auxiliary,
    /// Complementary `(N−1)`-minors at the reflected argument (twisted families only).
    Minors,
}

pub fn comatrix<F: Family<Rational> + ?Sized>(fam: &F, x: &Rational, how: Comatrix) -> Result<Vec<Mat<Rational>>> {
    let s = fam.scheme();
    let n = s.size();
    let idx = s.indices().to_vec();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect();
    crate::par::try_map(&pairs, |&(p, q)| match how {
        Comatrix::Auxiliary => {
            // ŝ_{a_i a_j} = (−1)^{N−i} š^{a_1⋯a_N}_{a_1⋯â_i⋯a_N, a_j}, 1-based i
            let lower: Vec<i32> = idx.iter().copied().filter(|&i| i != idx[p]).collect();
            let m = aux_minor(fam, &idx, &lower, idx[q], x)?;
            Ok(if (n - (p + 1)) % 2 == 1 { m.neg() } else { m })
        }
        Comatrix::Minors => {
            // ŝ_pq = θ_pq ŝ^t_{−q,−p}, ŝ^t_{a_i a_j}(u) = (−1)^{i+j} α_{N−1}(u) s^{I∖a_j}_{I∖a_i}(−u+N−2)
            let (i, j) = (s.neg(q), s.neg(p));
            let upper: Vec<i32> = idx.iter().copied().filter(|&k| k != idx[j]).collect();
            let lower: Vec<i32> = idx.iter().copied().filter(|&k| k != idx[i]).collect();
            let y = int(n as i64 - 2) - x;
            let m = minor(fam, &upper, &lower, &y, Route::Auto)?;
            let a = alpha_at(&int(n as i64 - 1), s.case(), x)?;
            let sign = s.theta_pos(p, q) * if (i + j) % 2 == 1 { -1 } else { 1 };
            Ok(m.scale(&(a * int(sign as i64))))
        }
    })
}

pub fn comatrix_bound<F: Family<Rational> + ?Sized>(fam: &F, how: Comatrix) -> usize {
    let n = fam.scheme().size();
    let d = fam.degree_bound();
    match how {
        Comatrix::Auxiliary => (n - 1) * d + n * (n - 1) / 2,
        Comatrix::Minors => (n - 1) * d + (n - 1) * (n - 2) / 2 + 1,
    }
}

/// Assemble an `N × N` array of `d × d` operators into one block matrix.
pub fn blocks(n: usize, d: usize, entry: impl Fn(usize, usize) -> Mat<Rational>) -> Mat<Rational> {
    let mut big = Mat::zeros(n * d, n * d);
    for p in 0..n {
        for q in 0..n {
            let e = entry(p, q);
            for r in 0..d {
                big.row_mut(p * d + r)[q * d..(q + 1) * d].clone_from_slice(e.row(r));
            }
        }
    }
    big
}

/// `Ŝ(u) S(u−N+1) = sdet S(u)`, with the comatrix computed as requested.
pub fn check_comdef<F: Family<Rational> + ?Sized>(fam: &F, how: Comatrix, seed: i64) -> Result<Option<String>> {
    let n = fam.scheme().size();
    let dim = fam.dim();
    let route = default_route(fam);
    agree(
        comatrix_bound(fam, how) + fam.degree_bound() + sdet_bound(fam),
        seed,
        |x| {
            let hat = comatrix(fam, x, how)?;
            let g = fam.grid(&(x - int(n as i64 - 1)))?;
            Ok(blocks(n, dim, |p, q| {
                let mut acc = Mat::zeros(dim, dim);
                for k in 0..n {
                    acc.add_assign(&hat[p * n + k].mul(&g.dense(k, q)));
                }
                acc
            }))
        },
        |x| {
            let d = sdet(fam, x, route)?;
            Ok(blocks(n, dim, |p, q| if p == q { d.clone() } else { Mat::zeros(dim, dim) }))
        },
    )
}

/// `sdet S(u) · ϖ_N(sdet S(−u+N/2−1)) = 1`, where `varpi` realizes `S(u) ↦ S^{-1}(−u−N/2)`.
pub fn check_sdetcirc<F, G>(fam: &F, varpi: &G, seed: i64) -> Result<Option<String>>
where
    F: Family<Rational> + ?Sized,
    G: Family<Rational> + ?Sized,
{
    let nn = int(fam.scheme().size() as i64);
    let dim = fam.dim();
    let route = default_route(fam);
    agree(
        sdet_bound(fam) + sdet_bound(varpi),
        seed,
        |x| {
            let y = &nn / int(2) - int(1) - x;
            Ok(sdet(fam, x, route)?.mul(&sdet(varpi, &y, Route::Antisymmetrizer)?))
        },
        |_| Ok(Mat::identity(dim)),
    )
}

/// `sdet S(u)` acts as the scalar function `f`.
pub fn check_sdet_scalar<F: Family<Rational> + ?Sized>(fam: &F, f: &RatFunc, seed: i64) -> Result<Option<String>> {
    let route = default_route(fam);
    let dim = fam.dim();
    agree(sdet_bound(fam) + f.degree(), seed, |x| sdet(fam, x, route), |x| Ok(Mat::scalar(dim, &f.eval_at(x)?)))
}

/// Degree bound of a `k`-minor in a family, valid for either route.
pub fn minor_bound<F: Family<Rational> + ?Sized>(fam: &F, k: usize) -> usize {
    k * fam.degree_bound() + k * (k - 1) / 2
}

/// Minor applied to a vector.
pub fn minor_vec<F: Family<Rational> + ?Sized>(fam: &F, upper: &[i32], x: &Rational, v: &Mat<Rational>) -> Result<Mat<Rational>> {
    if upper.is_empty() {
        return Ok(v.clone());
    }
    minor_on(fam, upper, upper, x, default_route(fam), v)
}
