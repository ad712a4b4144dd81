use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::patterns::ext;
use crate::combinatorics::{is_nonempty, violated_inequality, ExtInt};
use crate::error::{Error, Result};
use crate::exact::rational::{int, rat, to_string};
use crate::exact::{factor_linear, Poly, RatFunc, Rational};
use crate::report::{poly_json, ratfunc_json};

/// Highest weight `(μ_{m+1}(u), ..., μ_n(u))` of a twisted Yangian module, listed as
/// components `1..n−m` of the smaller algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YangianHW {
    pub components: Vec<RatFunc>,
}

impl YangianHW {
    pub fn to_json(&self) -> Value {
        Value::Array(self.components.iter().map(ratfunc_json).collect())
    }
}

/// Drinfeld polynomials `P_1, ..., P_{n−m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldData {
    pub polys: Vec<Poly>,
}

impl DrinfeldData {
    pub fn new(polys: Vec<Poly>) -> DrinfeldData {
        DrinfeldData { polys }
    }

    /// `P_1(u) = P_1(−u+1)`.
    pub fn p1_symmetric(&self) -> bool {
        self.polys.first().map_or(true, |p| p.compose_affine(&int(-1), &int(1)) == *p)
    }

    /// Sorted roots of every polynomial (`None` when a polynomial does not split).
    pub fn roots(&self) -> Vec<Option<Vec<Rational>>> {
        self.polys.iter().map(|p| factor_linear(p).ok()).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.polys
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let mut v = poly_json(p);
                    v["k"] = json!(k + 1);
                    v["degree"] = json!(p.degree());
                    v
                })
                .collect(),
        )
    }
}

/// Roots of a monic polynomial as shifts `x` of factors `u + x`, with multiplicity.
fn shifts(p: &Poly) -> Result<BTreeMap<Rational, i64>> {
    let mut out = BTreeMap::new();
    for r in factor_linear(p).map_err(|_| Error::UnpairableRoots(format!("{p} does not split")))? {
        *out.entry(-r).or_insert(0) += 1;
    }
    Ok(out)
}

/// The unique monic `P` with `P(u+1)/P(u) = r(u)`.
///
/// Writing `e(x)` for the multiplicity of `u + x` in the numerator minus that in the
/// denominator, the multiplicity of `u + x` in `P` is `−Σ e(y)` over `y ≤ x` with `y ≡ x`
/// mod 1. It has to be non-negative and vanish beyond the last root of each class.
pub fn solve_ratio(r: &RatFunc) -> Result<Poly> {
    if !r.num().is_monic() {
        return Err(Error::UnpairableRoots(format!("{r} is not a ratio of monic polynomials")));
    }
    let mut e: BTreeMap<Rational, i64> = shifts(r.num())?;
    for (x, k) in shifts(r.den())? {
        *e.entry(x).or_insert(0) -= k;
    }
    // classes of x mod 1
    let mut classes: BTreeMap<Rational, Vec<(Rational, i64)>> = BTreeMap::new();
    for (x, k) in e {
        if k != 0 {
            let frac = &x - x.floor();
            classes.entry(frac).or_default().push((x, k));
        }
    }
    let mut roots = Vec::new();
    for (_, list) in classes {
        let (first, last) = (list[0].0.clone(), list[list.len() - 1].0.clone());
        let mut mult = 0i64;
        let mut x = first;
        let mut it = list.iter().peekable();
        while x <= last {
            if let Some((y, k)) = it.peek() {
                if *y == x {
                    mult -= k;
                    it.next();
                }
            }
            if mult < 0 {
                return Err(Error::UnpairableRoots(format!("{r}: negative multiplicity at u + {}", to_string(&x))));
            }
            for _ in 0..mult {
                roots.push(-x.clone());
            }
            x += Rational::one();
        }
        if mult != 0 {
            return Err(Error::UnpairableRoots(format!("{r}: roots in the class of {} do not telescope", to_string(&last))));
        }
    }
    let p = Poly::from_roots(&roots);
    let check = RatFunc::new(p.compose_affine(&int(1), &int(1)), p.clone())?;
    if &check != r {
        return Err(Error::UnpairableRoots(format!("{r} is not of the form P(u+1)/P(u)")));
    }
    Ok(p)
}

/// `μ_1(−u)/μ_1(u) = P_1(u+1)/P_1(u)` and `μ_{i−1}(u)/μ_i(u) = P_i(u+1)/P_i(u)`.
pub fn drinfeld_from_hw(hw: &YangianHW) -> Result<DrinfeldData> {
    let mut polys = Vec::with_capacity(hw.components.len());
    for (i, mu) in hw.components.iter().enumerate() {
        let r = if i == 0 {
            mu.compose_affine(&int(-1), &Rational::zero()).div(mu)?
        } else {
            hw.components[i - 1].div(mu)?
        };
        polys.push(solve_ratio(&r)?);
    }
    Ok(DrinfeldData::new(polys))
}

fn fin(x: ExtInt) -> Result<i64> {
    x.finite().ok_or_else(|| Error::OutOfRange("infinite entry in a finite factor".into()))
}

/// `ν(u) = Π_{i=1}^m (u+μ_i−i+1/2)(u−μ_i+i+1/2) / ((u−i+1/2)(u+i+1/2))`.
pub fn nu(mu: &[i64]) -> RatFunc {
    let (mut num, mut den) = (Vec::new(), Vec::new());
    for (i, &m) in mu.iter().enumerate() {
        let i = i as i64 + 1;
        num.push(rat(-2 * (m - i) - 1, 2));
        num.push(rat(-2 * (i - m) - 1, 2));
        den.push(rat(2 * i - 1, 2));
        den.push(rat(-2 * i - 1, 2));
    }
    RatFunc::from_roots(&num, &den)
}

/// Closed form of the component `μ_k(u)`, `m+1 ≤ k ≤ n`, of the highest weight of `V(λ)^+_μ`.
pub fn hw_closed_form(lambda: &[i64], mu: &[i64], k: usize) -> Result<RatFunc> {
    let (n, m) = (lambda.len(), mu.len());
    if k <= m || k > n {
        return Err(Error::OutOfRange(format!("component k = {k} outside {}..={n}", m + 1)));
    }
    if !is_nonempty(lambda, mu) {
        let (kind, i) = violated_inequality(lambda, mu).expect("empty");
        return Err(Error::EmptySkewSpace(crate::combinatorics::patterns::inequality_text(kind, i, n - m)));
    }
    let (ki, mi) = (k as i64, m as i64);
    let l = |i: i64| ExtInt::Fin(lambda[i as usize - 1]);
    let mu_at = |j: i64| ext(mu, j);
    let h = |twice: i64| rat(twice, 2);
    let mut f = nu(mu);
    for i in 1..ki {
        // λ_i < μ_{i+k−m−1}
        if l(i) < mu_at(i + ki - mi - 1) {
            let top = fin(l(i).max(mu_at(i + ki - mi)))?;
            let bot = fin(mu_at(i + ki - mi - 1))?;
            let c = ki - mi + i;
            f = f.mul(&RatFunc::from_roots(&[h(2 * (top - c) + 1)], &[h(2 * (bot - c) + 1)]));
        }
        // λ_i > μ_{i+m−k+1}
        if l(i) > mu_at(i + mi - ki + 1) {
            let top = fin(l(i).min(mu_at(i + mi - ki)))?;
            let bot = fin(mu_at(i + mi - ki + 1))?;
            let c = ki - mi - i;
            f = f.mul(&RatFunc::from_roots(&[h(-2 * (top + c) + 1)], &[h(-2 * (bot + c) + 1)]));
        }
    }
    let last = fin(l(ki).min(mu_at(mi)))?;
    f = f.mul(&RatFunc::from_roots(&[h(-2 * (last - mi) + 1)], &[h(2 * mi + 1)]));
    Ok(f)
}

/// All components `μ_{m+1}(u), ..., μ_n(u)` by the closed form.
pub fn closed_form_hw(lambda: &[i64], mu: &[i64]) -> Result<YangianHW> {
    let components = (mu.len() + 1..=lambda.len()).map(|k| hw_closed_form(lambda, mu, k)).collect::<Result<_>>()?;
    Ok(YangianHW { components })
}
