//! Families built from other families: submatrices, bordered minors, exact
//! interpolants and the inverse families behind `ϖ_N`.

use std::sync::Arc;

use super::family::{alpha_at, EvalFamily, Family, Grid, Op};
use super::minor::{minor_on, Route};
use crate::algebra::{Case, IndexScheme};
use crate::error::{Error, Result};
use crate::exact::rational::{half, int, rat};
use crate::exact::{Mat, Poly, RatFunc, Rational, Scalar};
use crate::rep::build::{EchelonBasis, SparseVec};
use crate::rep::{SparseMat, Subspace};

/// The submatrix `S_BB(u)` on a negation-closed subset of indices.
pub struct SubFamily<F> {
    base: Arc<F>,
    scheme: IndexScheme,
    positions: Vec<usize>,
}

impl<F: Family<Rational>> SubFamily<F> {
    pub fn new(base: Arc<F>, subset: &[i32]) -> Result<SubFamily<F>> {
        let scheme = base.scheme().restrict(subset)?;
        let positions = scheme.indices().iter().map(|&i| base.scheme().pos(i)).collect::<Result<_>>()?;
        Ok(SubFamily { base, scheme, positions })
    }
}

impl<K: Scalar, F: Family<K>> Family<K> for SubFamily<F> {
    fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    fn dim(&self) -> usize {
        self.base.dim()
    }

    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>> {
        let g = self.base.grid(x)?;
        let n = self.positions.len();
        let mut entries = Vec::with_capacity(n * n);
        for &p in &self.positions {
            for &q in &self.positions {
                entries.push(g.entry(p, q).clone());
            }
        }
        Ok(Arc::new(Grid::new(n, g.dim(), entries)))
    }

    fn degree_bound(&self) -> usize {
        self.base.degree_bound()
    }

    fn twisted(&self) -> bool {
        self.base.twisted()
    }
}

/// Entries `α_p(u) · s^{before, a, after}_{before, b, after}(u + shift)` over a smaller index scheme,
/// optionally restricted to an invariant subspace of the module.
pub struct Bordered<F> {
    base: Arc<F>,
    scheme: IndexScheme,
    outer: Vec<i32>,
    before: Vec<i32>,
    after: Vec<i32>,
    shift: Rational,
    alpha: Option<Rational>,
    sub: Option<Arc<Subspace>>,
    route: Route,
}

impl<F: Family<Rational>> Bordered<F> {
    /// `s^♯_{ab}(u) = s^{−m⋯m, a}_{−m⋯m, b}(u + M/2)`, with the factor `α_{−m}(u)` when `with_alpha`.
    pub fn sharp(base: Arc<F>, m: usize, with_alpha: bool) -> Result<Bordered<F>> {
        let s = base.scheme().clone();
        if m >= s.half_rank() {
            return Err(Error::OutOfRange(format!("m = {m} needs m < n = {}", s.half_rank())));
        }
        let inner: Vec<i32> = s.indices().iter().copied().filter(|i| i.unsigned_abs() as usize <= m).collect();
        let big_m = inner.len();
        let scheme = IndexScheme::new(s.case(), s.size() - big_m)?;
        let mi = m as i32;
        let outer = scheme.indices().iter().map(|&j| j.signum() * (j.abs() + mi)).collect();
        Ok(Bordered {
            base,
            scheme,
            outer,
            before: inner,
            after: Vec::new(),
            shift: rat(big_m as i64, 2),
            alpha: with_alpha.then(|| int(-(m as i64))),
            sub: None,
            route: Route::Auto,
        })
    }

    /// `α_{m−n}(u) · s^{−n⋯−m−1, i, m+1⋯n}_{−n⋯−m−1, j, m+1⋯n}(u + n − m)` for `|i|, |j| ≤ m`.
    pub fn dual(base: Arc<F>, m: usize) -> Result<Bordered<F>> {
        let s = base.scheme().clone();
        let n = s.half_rank();
        let inner: Vec<i32> = s.indices().iter().copied().filter(|i| i.unsigned_abs() as usize <= m).collect();
        if m >= n || inner.is_empty() {
            return Err(Error::OutOfRange(format!("dual map needs 0 < M and m < n, got m = {m}")));
        }
        let scheme = s.restrict(&inner)?;
        let mi = m as i32;
        Ok(Bordered {
            base,
            outer: inner,
            before: s.indices().iter().copied().filter(|&i| i < -mi).collect(),
            after: s.indices().iter().copied().filter(|&i| i > mi).collect(),
            scheme,
            shift: int(n as i64 - m as i64),
            alpha: Some(int(m as i64 - n as i64)),
            sub: None,
            route: Route::Auto,
        })
    }

    pub fn restricted(mut self, sub: Arc<Subspace>) -> Bordered<F> {
        self.sub = Some(sub);
        self
    }

    pub fn with_route(mut self, route: Route) -> Bordered<F> {
        self.route = route;
        self
    }

    /// Index of the base scheme behind each index of the smaller scheme.
    pub fn outer_indices(&self) -> &[i32] {
        &self.outer
    }

    pub fn base(&self) -> &Arc<F> {
        &self.base
    }

    /// A common denominator of every entry, given one for the base family.
    pub fn denominator(&self, base_den: &Poly) -> Poly {
        let case = self.base.scheme().case();
        let k = self.minor_size();
        let route = if self.route == Route::Auto { Route::Formula } else { self.route };
        let inner = minor_denominator(base_den, k, case, route);
        let mut den = inner.compose_affine(&int(1), &self.shift);
        if let (Some(p), Case::Symplectic) = (&self.alpha, case) {
            if !p.is_zero() {
                den = &den * &Poly::linear(&(p - half()));
            }
        }
        den
    }
}

impl<F> Bordered<F> {
    fn minor_size(&self) -> usize {
        self.before.len() + self.after.len() + 1
    }
}

/// A common denominator of a `k`-minor of a family whose entries have denominator `base_den`.
pub fn minor_denominator(base_den: &Poly, k: usize, case: Case, route: Route) -> Poly {
    let mut den = Poly::one();
    match route {
        Route::Antisymmetrizer => {
            for i in 0..k {
                den = &den * &base_den.compose_affine(&int(1), &int(-(i as i64)));
            }
            for i in 0..k {
                for j in i + 1..k {
                    den = &den * &Poly::linear(&rat((i + j) as i64, 2));
                }
            }
        }
        Route::Formula | Route::Auto => {
            let m = k / 2;
            for i in 0..k {
                let f = if i < m {
                    base_den.compose_affine(&int(-1), &int(i as i64))
                } else {
                    base_den.compose_affine(&int(1), &int(-(i as i64)))
                };
                den = &den * &f;
            }
            if case == Case::Symplectic && m > 0 {
                den = &den * &Poly::linear(&(int(m as i64) - half()));
            }
            if route == Route::Auto {
                // the antisymmetrizer fallback for shapes outside the expansion
                den = lcm(&den, &minor_denominator(base_den, k, case, Route::Antisymmetrizer));
            }
        }
    }
    den.monic()
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = Poly::gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides the product")
}

impl<K: Scalar, F: Family<K>> Family<K> for Bordered<F> {
    fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    fn dim(&self) -> usize {
        self.sub.as_ref().map_or(self.base.dim(), |s| s.dim())
    }

    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>> {
        let y = x.shift(&self.shift);
        let init = match &self.sub {
            Some(s) => Mat::from_rational(&s.basis_block()),
            None => Mat::identity(self.base.dim()),
        };
        let pref = match &self.alpha {
            Some(p) => alpha_at(p, self.base.scheme().case(), x)?,
            None => K::one(),
        };
        let n = self.scheme.size();
        let mut pairs = Vec::with_capacity(n * n);
        for &a in &self.outer {
            for &b in &self.outer {
                pairs.push((a, b));
            }
        }
        let entries = crate::par::try_map(&pairs, |&(a, b)| {
            let wrap = |c: i32| [self.before.as_slice(), &[c], self.after.as_slice()].concat();
            let img = minor_on(&*self.base, &wrap(a), &wrap(b), &y, self.route, &init)?;
            let m = match &self.sub {
                Some(s) => s.coords_block(&img)?,
                None => img,
            };
            Ok::<_, Error>(Op::from_dense(&m.scale(&pref)))
        })?;
        Ok(Arc::new(Grid::new(n, self.dim(), entries)))
    }

    fn degree_bound(&self) -> usize {
        let k = self.minor_size();
        let d = self.base.degree_bound();
        let inner = match self.route {
            Route::Antisymmetrizer | Route::Auto => k * d + k * (k - 1) / 2,
            Route::Formula => k * d + 1,
        };
        inner + usize::from(self.alpha.is_some())
    }

    fn twisted(&self) -> bool {
        self.alpha.is_some() && self.base.twisted()
    }
}

/// A family given entrywise by explicit rational functions.
#[derive(Clone, Debug)]
pub struct ExactFamily {
    scheme: IndexScheme,
    dim: usize,
    entries: Vec<Mat<RatFunc>>,
    degree: usize,
    twisted: bool,
}

impl ExactFamily {
    pub fn new(scheme: IndexScheme, dim: usize, entries: Vec<Mat<RatFunc>>, twisted: bool) -> ExactFamily {
        assert_eq!(entries.len(), scheme.size() * scheme.size());
        let degree = entries.iter().map(operator_degree).max().unwrap_or(0);
        ExactFamily { scheme, dim, entries, degree, twisted }
    }

    /// Interpolate a family whose entries are bounded at infinity and become polynomial
    /// after multiplication by `den`. Two extra points confirm the interpolant.
    pub fn from_samples<F: Family<Rational>>(fam: &F, den: &Poly) -> Result<ExactFamily> {
        let need = den.degree() + 1;
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let mut t = 0i64;
        while xs.len() < need + 2 {
            let x = rat(17, 3) + int(t);
            t += 1;
            let dx = den.eval(&x);
            if dx.is_zero() {
                continue;
            }
            match fam.grid(&x) {
                Ok(g) => {
                    ys.push(g);
                    xs.push(x);
                }
                Err(Error::Pole(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        let basis = lagrange_basis(&xs[..need]);
        let n = fam.scheme().size();
        let dim = fam.dim();
        let mut entries = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let scaled: Vec<Mat<Rational>> = (0..need).map(|t| ys[t].dense(p, q).scale(&den.eval(&xs[t]))).collect();
                let mut coef: Vec<Mat<Rational>> = vec![Mat::zeros(dim, dim); need];
                for (t, y) in scaled.iter().enumerate() {
                    for (c, l) in basis[t].coeffs().iter().enumerate() {
                        coef[c].add_scaled(l, y);
                    }
                }
                let mut m = Mat::zeros(dim, dim);
                for r in 0..dim {
                    for c in 0..dim {
                        let num = Poly::new(coef.iter().map(|k| k.get(r, c).clone()).collect());
                        m.set(r, c, RatFunc::new(num, den.clone())?);
                    }
                }
                entries.push(m);
            }
        }
        let out = ExactFamily::new(fam.scheme().clone(), dim, entries, fam.twisted());
        for t in need..xs.len() {
            let g = Family::<Rational>::grid(&out, &xs[t])?;
            for p in 0..n {
                for q in 0..n {
                    if g.dense(p, q) != ys[t].dense(p, q) {
                        return Err(Error::InconsistentSamples(p * n + q, t));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Read off a family symbolically at the generic argument `u`.
    pub fn symbolic<F: Family<RatFunc>>(fam: &F) -> Result<ExactFamily> {
        let g = fam.grid(&RatFunc::var())?;
        let n = fam.scheme().size();
        let entries = (0..n * n).map(|i| g.dense(i / n, i % n)).collect();
        Ok(ExactFamily::new(fam.scheme().clone(), fam.dim(), entries, fam.twisted()))
    }

    pub fn entry(&self, p: usize, q: usize) -> &Mat<RatFunc> {
        &self.entries[p * self.scheme.size() + q]
    }

    /// `S°(u) = S^{-1}(−u − N/2)` by inverting the block matrix over rational functions.
    pub fn varpi(&self) -> Result<ExactFamily> {
        let n = self.scheme.size();
        let d = self.dim;
        let mut big = Mat::zeros(n * d, n * d);
        for p in 0..n {
            for q in 0..n {
                let e = self.entry(p, q);
                for r in 0..d {
                    for c in 0..d {
                        big.set(p * d + r, q * d + c, e.get(r, c).clone());
                    }
                }
            }
        }
        let inv = big.inverse()?;
        let arg = (int(-1), rat(-(n as i64), 2));
        let mut entries = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let mut m = Mat::zeros(d, d);
                for r in 0..d {
                    for c in 0..d {
                        m.set(r, c, inv.get(p * d + r, q * d + c).compose_affine(&arg.0, &arg.1));
                    }
                }
                entries.push(m);
            }
        }
        Ok(ExactFamily::new(self.scheme.clone(), d, entries, false))
    }
}

/// Degree bound for one operator entry: common denominator and the numerators over it.
fn operator_degree(m: &Mat<RatFunc>) -> usize {
    let mut den = Poly::one();
    for f in m.data() {
        if !f.is_zero() {
            den = lcm(&den, f.den());
        }
    }
    let mut deg = den.degree();
    for f in m.data() {
        if !f.is_zero() {
            deg = deg.max(f.num().degree() + den.degree() - f.den().degree());
        }
    }
    deg
}

/// Lagrange basis polynomials for the given distinct nodes.
fn lagrange_basis(xs: &[Rational]) -> Vec<Poly> {
    (0..xs.len())
        .map(|t| {
            let mut p = Poly::one();
            let mut w = Rational::from_integer(1.into());
            for (s, xs_s) in xs.iter().enumerate() {
                if s != t {
                    p = &p * &Poly::linear(xs_s);
                    w *= &xs[t] - xs_s;
                }
            }
            p.scale(&(Rational::from_integer(1.into()) / w))
        })
        .collect()
}

impl<K: Scalar> Family<K> for ExactFamily {
    fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>> {
        let entries = self
            .entries
            .iter()
            .map(|m| Ok(Op::from_dense(&m.try_map(|f| K::apply(f, x))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(Grid::new(self.scheme.size(), self.dim, entries)))
    }

    fn degree_bound(&self) -> usize {
        self.degree
    }

    fn twisted(&self) -> bool {
        self.twisted
    }
}

/// `S°(u) = S^{-1}(−u − N/2)` for an evaluation family, through the minimal polynomial of
/// the block matrix `𝔽 = Σ E_ij ⊗ F_ij`: with `A = −𝔽` and `m(z) = Σ c_k z^k`,
/// `(zI − A)^{-1} = Σ_j q_j(z) A^j / m(z)` where `q_j(z) = Σ_{k>j} c_k z^{k−j−1}`.
pub struct EvalVarpi {
    scheme: IndexScheme,
    dim: usize,
    shift: Rational,
    /// `powers[j][p·N + q]` is block `(p, q)` of `A^j`.
    powers: Vec<Vec<Arc<SparseMat<Rational>>>>,
    minpoly: Poly,
}

impl EvalVarpi {
    pub fn new(fam: &EvalFamily) -> Result<EvalVarpi> {
        let rep = fam.rep();
        let scheme = rep.scheme().clone();
        let (n, d) = (scheme.size(), rep.dim());
        let a = SparseMat::from_triplets(
            n * d,
            n * d,
            (0..n).flat_map(|p| {
                (0..n).flat_map(move |q| {
                    rep.gen_pos(p, q).triplets().map(move |(r, c, v)| (p * d + r, q * d + c, -v.clone())).collect::<Vec<_>>()
                })
            }),
        );
        let flat = |m: &SparseMat<Rational>| -> SparseVec {
            m.triplets().map(|(r, c, v)| (r * n * d + c, v.clone())).collect()
        };
        let mut basis = EchelonBasis::default();
        let mut pows = vec![SparseMat::<Rational>::identity(n * d)];
        loop {
            let last = pows.last().expect("nonempty");
            if basis.insert(&flat(last)).is_none() {
                break;
            }
            let next = last.mul(&a);
            pows.push(next);
        }
        let r = pows.len() - 1;
        // Solve A^r = Σ_{j<r} λ_j A^j.
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let flats: Vec<SparseVec> = pows.iter().map(flat).collect();
        let mut keys: Vec<usize> = flats.iter().flat_map(|f| f.keys().copied()).collect();
        keys.sort_unstable();
        keys.dedup();
        for k in keys {
            rows.push(flats.iter().map(|f| f.get(&k).cloned().unwrap_or_else(Rational::zero)).collect());
        }
        let ker = crate::exact::linalg::kernel(&rows, r + 1);
        let v = ker.into_iter().find(|v| !v[r].is_zero()).ok_or(Error::Singular)?;
        let lead = v[r].clone();
        let minpoly = Poly::new(v.iter().map(|c| c / &lead).collect());
        let powers = pows[..r]
            .iter()
            .map(|m| {
                let mut blocks = vec![Vec::new(); n * n];
                for (row, col, val) in m.triplets() {
                    blocks[(row / d) * n + col / d].push((row % d, col % d, val.clone()));
                }
                blocks.into_iter().map(|t| Arc::new(SparseMat::from_triplets(d, d, t))).collect()
            })
            .collect();
        Ok(EvalVarpi { scheme, dim: d, shift: EvalFamily::shift(fam.rep().scheme().case()), powers, minpoly })
    }

    pub fn minimal_polynomial(&self) -> &Poly {
        &self.minpoly
    }
}

fn horner<K: Scalar>(coeffs: &[Rational], z: &K) -> K {
    coeffs.iter().rev().fold(K::zero(), |acc, c| acc.mul(z).add(&K::from_rational(c)))
}

impl<K: Scalar> Family<K> for EvalVarpi {
    fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn grid(&self, x: &K) -> Result<Arc<Grid<K>>> {
        let n = self.scheme.size();
        // S(w)^{-1} = y (yI − A)^{-1} with y = w ± 1/2 and w = −x − N/2.
        let y = x.neg().shift(&(rat(-(n as i64), 2) + &self.shift));
        let c = self.minpoly.coeffs();
        let my = horner(c, &y);
        let scale = y.div(&my).map_err(|_| Error::Pole(format!("inverse family at {x}")))?;
        let r = self.powers.len();
        let coefs: Vec<K> = (0..r).map(|j| horner(&c[j + 1..], &y).mul(&scale)).collect();
        let entries = (0..n * n)
            .map(|b| Op::Combo((0..r).map(|j| (coefs[j].clone(), self.powers[j][b].clone())).collect()))
            .collect();
        Ok(Arc::new(Grid::new(n, self.dim, entries)))
    }

    fn degree_bound(&self) -> usize {
        self.powers.len()
    }

    fn twisted(&self) -> bool {
        false
    }
}
