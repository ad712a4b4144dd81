//! Sklyanin minors, auxiliary minors and the Sklyanin determinant.

use super::chain::{State, Step};
use super::family::{alpha_at, Family, Grid};
use crate::algebra::perm::{all_positions, omega_positions, positional_sign};
use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{Mat, Rational, Scalar};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Coefficient extraction from the antisymmetrized operator chain.
    Antisymmetrizer,
    /// The determinant-like expansion over `S_M` driven by the map `p ↦ p'`.
    Formula,
    /// Formula where the index shape allows it, antisymmetrizer otherwise.
    Auto,
}

fn positions<K: Scalar, F: Family<K> + ?Sized>(fam: &F, idx: &[i32]) -> Result<Vec<usize>> {
    idx.iter().map(|&i| fam.scheme().pos(i)).collect()
}

/// `1/(−u_i − u_j)` with `u_i = x − i + 1`, slots 0-based.
fn rt_inverse<K: Scalar>(x: &K, i: usize, j: usize) -> Result<K> {
    let arg = x.add(x).neg().shift(&int(i as i64 + j as i64));
    arg.inv().map_err(|_| Error::Pole(format!("R^t factor at {x}")))
}

fn grids<K: Scalar, F: Family<K> + ?Sized>(fam: &F, x: &K, k: usize) -> Result<Vec<Arc<Grid<K>>>> {
    (0..k).map(|i| fam.grid(&x.shift(&int(-(i as i64))))).collect()
}

/// State after applying `⟨S_1, …, S_k⟩` to `e_{lower} ⊗ V`.
pub fn chain_state<K: Scalar, F: Family<K> + ?Sized>(fam: &F, lower: &[i32], x: &K, init: &Mat<K>) -> Result<State<K>> {
    let k = lower.len();
    let gs = grids(fam, x, k)?;
    let mut prod: Vec<Step<'_, K>> = Vec::new();
    for i in 0..k {
        prod.push(Step::S { slot: i, grid: &gs[i] });
        for j in i + 1..k {
            prod.push(Step::Rt { a: i, b: j, inv: rt_inverse(x, i, j)? });
        }
    }
    prod.reverse();
    let lp = positions(fam, lower)?;
    let st = State::basis(fam.scheme(), &lp, init.clone())?;
    Ok(st.apply(fam.scheme(), &prod))
}

fn check_len(upper: &[i32], lower: &[i32], n: usize) -> Result<usize> {
    let k = upper.len();
    if k != lower.len() || k == 0 || k > n {
        return Err(Error::ShapeMismatch(format!(
            "minor with {} upper and {} lower indices over N = {n}",
            upper.len(),
            lower.len()
        )));
    }
    Ok(k)
}

/// `s^{upper}_{lower}(x)` by the antisymmetrizer route.
pub fn minor_antisym<K: Scalar, F: Family<K> + ?Sized>(fam: &F, upper: &[i32], lower: &[i32], x: &K) -> Result<Mat<K>> {
    minor_antisym_on(fam, upper, lower, x, &Mat::identity(fam.dim()))
}

/// The antisymmetrizer-route minor applied to the columns of `init`.
pub fn minor_antisym_on<K: Scalar, F: Family<K> + ?Sized>(
    fam: &F,
    upper: &[i32],
    lower: &[i32],
    x: &K,
    init: &Mat<K>,
) -> Result<Mat<K>> {
    check_len(upper, lower, fam.scheme().size())?;
    let up = positions(fam, upper)?;
    let st = chain_state(fam, lower, x, init)?;
    Ok(st.antisymmetrized(&up, init.rows(), init.cols()))
}

/// Several minors sharing one lower index list, from a single chain application.
pub fn minors_antisym<K: Scalar, F: Family<K> + ?Sized>(
    fam: &F,
    uppers: &[Vec<i32>],
    lower: &[i32],
    x: &K,
) -> Result<Vec<Mat<K>>> {
    for u in uppers {
        check_len(u, lower, fam.scheme().size())?;
    }
    let init = Mat::identity(fam.dim());
    let st = chain_state(fam, lower, x, &init)?;
    uppers
        .iter()
        .map(|u| Ok(st.antisymmetrized(&positions(fam, u)?, fam.dim(), fam.dim())))
        .collect()
}

/// Auxiliary minor: coefficient extraction from `A_k⟨S_1..S_{k−1}⟩R^t_{1k}⋯R^t_{k−1,k}`
/// applied to `e_{b_1}⊗…⊗e_{b_{k−1}}⊗e_c`.
pub fn aux_minor<K: Scalar, F: Family<K> + ?Sized>(
    fam: &F,
    upper: &[i32],
    lower: &[i32],
    c: i32,
    x: &K,
) -> Result<Mat<K>> {
    let k = upper.len();
    if k < 2 || lower.len() + 1 != k || k > fam.scheme().size() {
        return Err(Error::ShapeMismatch("auxiliary minor needs k ≥ 2 and k − 1 lower indices".into()));
    }
    let gs = grids(fam, x, k - 1)?;
    let mut prod: Vec<Step<'_, K>> = Vec::new();
    for i in 0..k - 1 {
        prod.push(Step::S { slot: i, grid: &gs[i] });
        for j in i + 1..k - 1 {
            prod.push(Step::Rt { a: i, b: j, inv: rt_inverse(x, i, j)? });
        }
    }
    for i in 0..k - 1 {
        prod.push(Step::Rt { a: i, b: k - 1, inv: rt_inverse(x, i, k - 1)? });
    }
    prod.reverse();
    let mut lp = positions(fam, lower)?;
    lp.push(fam.scheme().pos(c)?);
    let st = State::basis(fam.scheme(), &lp, Mat::identity(fam.dim()))?.apply(fam.scheme(), &prod);
    Ok(st.antisymmetrized(&positions(fam, upper)?, fam.dim(), fam.dim()))
}

/// Reorder a general minor into the shape `s^{−a_1⋯−a_M}_{a_1⋯a_{M−1}, b}`.
/// Returns the sign of the reordering, `a` and `b`, or `None` when the shape is unreachable.
pub fn formula_shape(upper: &[i32], lower: &[i32]) -> Option<(i32, Vec<i32>, i32)> {
    let m = upper.len();
    if m == 0 || lower.len() != m || has_dup(upper) || has_dup(lower) {
        return None;
    }
    let neg_u: Vec<i32> = upper.iter().map(|&i| -i).collect();
    let common = lower.iter().filter(|i| neg_u.contains(i)).count();
    let (b, a_last, rest): (i32, i32, Vec<i32>) = if common == m {
        let b = *lower.last().expect("nonempty");
        (b, b, lower[..m - 1].to_vec())
    } else if common == m - 1 {
        let b = *lower.iter().find(|i| !neg_u.contains(i))?;
        let a_last = *neg_u.iter().find(|i| !lower.contains(i))?;
        (b, a_last, lower.iter().copied().filter(|&i| i != b).collect())
    } else {
        return None;
    };
    let mut a = rest;
    a.push(a_last);
    let target_upper: Vec<i32> = a.iter().map(|&i| -i).collect();
    let mut target_lower = a[..m - 1].to_vec();
    target_lower.push(b);
    let s = reorder_sign(upper, &target_upper)? * reorder_sign(lower, &target_lower)?;
    Some((s, a, b))
}

fn has_dup(v: &[i32]) -> bool {
    let mut s = v.to_vec();
    s.sort();
    s.windows(2).any(|w| w[0] == w[1])
}

/// Sign of the permutation taking `from` to `to` (same distinct elements).
fn reorder_sign(from: &[i32], to: &[i32]) -> Option<i32> {
    let images: Option<Vec<usize>> = from.iter().map(|x| to.iter().position(|y| y == x)).collect();
    Some(positional_sign(&images?))
}

/// `s^{−a_1⋯−a_M}_{a_1⋯a_{M−1}, b}(x)` by the explicit expansion.
pub fn minor_formula<K: Scalar, F: Family<K> + ?Sized>(fam: &F, a: &[i32], b: i32, x: &K) -> Result<Mat<K>> {
    minor_formula_on(fam, a, b, x, &Mat::identity(fam.dim()))
}

/// The formula-route minor applied to the columns of `init`.
pub fn minor_formula_on<K: Scalar, F: Family<K> + ?Sized>(
    fam: &F,
    a: &[i32],
    b: i32,
    x: &K,
    init: &Mat<K>,
) -> Result<Mat<K>> {
    let s = fam.scheme();
    let big_m = a.len();
    if big_m == 0 || big_m > s.size() {
        return Err(Error::ShapeMismatch(format!("formula minor of size {big_m}")));
    }
    let m = big_m / 2;
    let (rows, cols) = (init.rows(), init.cols());
    // Factor i sits at −x+i or x−i (0-based), transposed for i < m.
    let mut gs = Vec::with_capacity(big_m);
    for i in 0..big_m {
        let y = if i < m { x.neg().shift(&int(i as i64)) } else { x.shift(&int(-(i as i64))) };
        gs.push(fam.grid(&y)?);
    }
    let ap = positions(fam, a)?;
    let bp = s.pos(b)?;
    let mut terms: Vec<(Vec<(usize, usize)>, i32)> = Vec::new();
    for p in all_positions(big_m) {
        let pp = omega_positions(&p);
        let mut sign = positional_sign(&p) * positional_sign(&pp);
        let mut key = Vec::with_capacity(big_m);
        for i in 0..big_m {
            let (r, c) = (s.neg(ap[p[i]]), if i + 1 == big_m { bp } else { ap[pp[i]] });
            if i < m {
                // s^t_{rc} = θ_{rc} s_{−c,−r}
                sign *= s.theta_pos(r, c);
                key.push((s.neg(c), s.neg(r)));
            } else {
                key.push((r, c));
            }
        }
        terms.push((key, sign));
    }
    terms.sort_by(|x, y| x.0.iter().rev().cmp(y.0.iter().rev()));
    let runs = split_runs(&terms, big_m - 1);
    let parts = crate::par::map(&runs, |&(lo, hi)| {
        let mut acc = Mat::zeros(rows, cols);
        expand(&terms[lo..hi], big_m - 1, init, &gs, &mut acc);
        acc
    });
    let mut acc = Mat::zeros(rows, cols);
    for p in &parts {
        acc.add_assign(p);
    }
    let pref = alpha_at(&int(m as i64), s.case(), x)?;
    Ok(acc.scale(&pref))
}

type Term = (Vec<(usize, usize)>, i32);

fn split_runs(terms: &[Term], level: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < terms.len() {
        let mut hi = lo + 1;
        while hi < terms.len() && terms[hi].0[level] == terms[lo].0[level] {
            hi += 1;
        }
        out.push((lo, hi));
        lo = hi;
    }
    out
}

fn expand<K: Scalar>(terms: &[Term], level: usize, block: &Mat<K>, gs: &[Arc<Grid<K>>], acc: &mut Mat<K>) {
    for (lo, hi) in split_runs(terms, level) {
        let (r, c) = terms[lo].0[level];
        let op = gs[level].entry(r, c);
        if op.is_zero() {
            continue;
        }
        let nb = op.apply(block);
        if nb.is_zero() {
            continue;
        }
        if level == 0 {
            let total: i32 = terms[lo..hi].iter().map(|t| t.1).sum();
            if total != 0 {
                acc.add_scaled(&K::from_rational(&Rational::from_integer(total.into())), &nb);
            }
        } else {
            expand(&terms[lo..hi], level - 1, &nb, gs, acc);
        }
    }
}

/// `s^{upper}_{lower}(x)` by the requested route.
pub fn minor<K: Scalar, F: Family<K> + ?Sized>(
    fam: &F,
    upper: &[i32],
    lower: &[i32],
    x: &K,
    route: Route,
) -> Result<Mat<K>> {
    minor_on(fam, upper, lower, x, route, &Mat::identity(fam.dim()))
}

/// `s^{upper}_{lower}(x)` applied to the columns of `init`.
pub fn minor_on<K: Scalar, F: Family<K> + ?Sized>(
    fam: &F,
    upper: &[i32],
    lower: &[i32],
    x: &K,
    route: Route,
    init: &Mat<K>,
) -> Result<Mat<K>> {
    check_len(upper, lower, fam.scheme().size())?;
    match route {
        Route::Antisymmetrizer => minor_antisym_on(fam, upper, lower, x, init),
        Route::Formula | Route::Auto => match formula_shape(upper, lower) {
            Some((sign, a, b)) => {
                let r = minor_formula_on(fam, &a, b, x, init)?;
                Ok(if sign < 0 { r.neg() } else { r })
            }
            None if has_dup(upper) || has_dup(lower) => Ok(Mat::zeros(init.rows(), init.cols())),
            None if route == Route::Auto => minor_antisym_on(fam, upper, lower, x, init),
            None => Err(Error::ShapeMismatch(format!("{upper:?} over {lower:?} is not of formula shape"))),
        },
    }
}

/// Sklyanin determinant `sdet S(x)`.
pub fn sdet<K: Scalar, F: Family<K> + ?Sized>(fam: &F, x: &K, route: Route) -> Result<Mat<K>> {
    let idx = fam.scheme().indices().to_vec();
    minor(fam, &idx, &idx, x, route)
}

/// Degree bound of a `k`-minor built from a family of degree bound `d`.
pub fn minor_degree_bound(d: usize, k: usize, route: Route) -> usize {
    match route {
        Route::Antisymmetrizer => k * d + k * (k - 1) / 2,
        Route::Formula | Route::Auto => k * d + k * (k - 1) / 2 + 1,
    }
}
