//! Checks of the quantum Sylvester theorem and its companions on evaluation modules.

use std::sync::Arc;

use super::checks::{agree, comatrix, comatrix_bound, default_route, sdet_bound, Comatrix};
use super::derived::{Bordered, SubFamily};
use super::family::{alpha_at, EvalFamily, Family};
use super::minor::sdet;
use crate::algebra::Case;
use crate::error::Result;
use crate::exact::rational::{int, rat};
use crate::exact::{Mat, Rational};

/// The evaluation family together with the pieces the Sylvester identities use.
pub struct Sylvester {
    base: Arc<EvalFamily>,
    m: usize,
    big_m: usize,
    inner: Arc<SubFamily<EvalFamily>>,
}

impl Sylvester {
    pub fn new(base: Arc<EvalFamily>, m: usize) -> Result<Sylvester> {
        let s = base.rep().scheme().clone();
        let inner: Vec<i32> = s.indices().iter().copied().filter(|i| i.unsigned_abs() as usize <= m).collect();
        // validates m < n
        Bordered::sharp(base.clone(), m, true)?;
        Ok(Sylvester { big_m: inner.len(), inner: Arc::new(SubFamily::new(base.clone(), &inner)?), base, m })
    }

    fn case(&self) -> Case {
        self.base.rep().scheme().case()
    }

    fn outer_size(&self) -> usize {
        self.base.rep().scheme().size() - self.big_m
    }

    fn sdet_inner(&self, x: &Rational) -> Result<Mat<Rational>> {
        if self.big_m == 0 {
            return Ok(Mat::identity(self.base.rep().dim()));
        }
        sdet(&*self.inner, x, default_route(&*self.inner))
    }

    fn inner_bound(&self) -> usize {
        if self.big_m == 0 {
            0
        } else {
            sdet_bound(&*self.inner)
        }
    }

    /// `sdet[α_{−m}(u) S^♯(u)] = α(u) · sdet S(u+M/2) · Π_{j=1}^{N−M−1} sdet S_BB(u+M/2−j)`,
    /// or the same without the `α` factors when `twisted` is false.
    pub fn check_sdet_factorization(&self, twisted: bool, seed: i64) -> Result<Option<String>> {
        let sharp = Bordered::sharp(self.base.clone(), self.m, twisted)?;
        let np = self.outer_size();
        let half_m = rat(self.big_m as i64, 2);
        let mi = int(-(self.m as i64));
        let case = self.case();
        let bound = sdet_bound(&sharp) + sdet_bound(&*self.base) + (np - 1) * self.inner_bound() + if twisted { np } else { 0 };
        agree(
            bound,
            seed,
            |x| sdet(&sharp, x, default_route(&sharp)),
            |x| {
                let y = x + &half_m;
                let mut acc = sdet(&*self.base, &y, default_route(&*self.base))?;
                for j in 1..np {
                    acc = acc.mul(&self.sdet_inner(&(&y - int(j as i64)))?);
                }
                if twisted {
                    for j in 0..np {
                        acc = acc.scale(&alpha_at(&mi, case, &(x - int(j as i64)))?);
                    }
                }
                Ok(acc)
            },
        )
    }

    /// `σ̂_ab(u) = ŝ_ab(u+M/2) · Π_{j=1}^{N−M−2} sdet S_BB(u+M/2−j)` for the comatrix `σ̂` of `S^♯`.
    pub fn check_nnentry(&self, seed: i64) -> Result<Option<String>> {
        let sharp = Bordered::sharp(self.base.clone(), self.m, false)?;
        let np = self.outer_size();
        let dim = self.base.rep().dim();
        let half_m = rat(self.big_m as i64, 2);
        let s = self.base.rep().scheme().clone();
        let outer: Vec<usize> = sharp.outer_indices().iter().map(|&i| s.pos(i)).collect::<Result<_>>()?;
        let bound = comatrix_bound(&sharp, Comatrix::Auxiliary)
            + comatrix_bound(&*self.base, Comatrix::Minors)
            + np.saturating_sub(2) * self.inner_bound();
        agree(
            bound,
            seed,
            |x| {
                let hat = comatrix(&sharp, x, Comatrix::Auxiliary)?;
                Ok(super::checks::blocks(np, dim, |p, q| hat[p * np + q].clone()))
            },
            |x| {
                let y = x + &half_m;
                let hat = comatrix(&*self.base, &y, Comatrix::Minors)?;
                let mut f = Mat::identity(dim);
                for j in 1..np.saturating_sub(1) {
                    f = f.mul(&self.sdet_inner(&(&y - int(j as i64)))?);
                }
                let n = s.size();
                Ok(super::checks::blocks(np, dim, |p, q| hat[outer[p] * n + outer[q]].mul(&f)))
            },
        )
    }

    /// For `m = n − 1`: `α_n(u) ŝ_ab(−u+N/2−1) = α_{−m}(u) s^♯_ab(u)` for `a, b ∈ {−n, n}`,
    /// with the extra sign `sgn a · sgn b` in the orthogonal case.
    pub fn check_homcoin(&self, seed: i64) -> Result<Option<String>> {
        let s = self.base.rep().scheme().clone();
        let n = s.half_rank();
        if self.m + 1 != n {
            return Ok(Some(format!("needs m = n − 1, got m = {}", self.m)));
        }
        let sharp = Bordered::sharp(self.base.clone(), self.m, true)?;
        let dim = self.base.rep().dim();
        let nn = int(s.size() as i64);
        let case = self.case();
        let outer: Vec<i32> = sharp.outer_indices().to_vec();
        let bound = Family::<Rational>::degree_bound(&sharp) + comatrix_bound(&*self.base, Comatrix::Minors) + 1;
        agree(
            bound,
            seed,
            |x| {
                let g = Family::<Rational>::grid(&sharp, x)?;
                Ok(super::checks::blocks(2, dim, |p, q| g.dense(p, q)))
            },
            |x| {
                let y = &nn / int(2) - int(1) - x;
                let hat = comatrix(&*self.base, &y, Comatrix::Minors)?;
                let a = alpha_at(&int(n as i64), case, x)?;
                let n2 = s.size();
                let pos: Vec<usize> = outer.iter().map(|&i| s.pos(i)).collect::<Result<_>>()?;
                Ok(super::checks::blocks(2, dim, |p, q| {
                    let sign = match case {
                        Case::Symplectic => 1,
                        Case::Orthogonal => outer[p].signum() * outer[q].signum(),
                    };
                    hat[pos[p] * n2 + pos[q]].scale(&(&a * int(sign as i64)))
                }))
            },
        )
    }

    pub fn sharp(&self, twisted: bool) -> Result<Bordered<EvalFamily>> {
        Bordered::sharp(self.base.clone(), self.m, twisted)
    }

    pub fn dual(&self) -> Result<Bordered<EvalFamily>> {
        Bordered::dual(self.base.clone(), self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IndexScheme;
    use crate::rep::LieRep;
    use crate::sklyanin::checks::{check_quaternary, check_symmetry, sample_pairs, samples};

    fn syl(case: Case, big_n: usize, m: usize) -> Sylvester {
        let s = IndexScheme::new(case, big_n).unwrap();
        Sylvester::new(Arc::new(EvalFamily::new(Arc::new(LieRep::vector_rep(&s)))), m).unwrap()
    }

    #[test]
    fn sp4_m1() {
        let y = syl(Case::Symplectic, 4, 1);
        assert_eq!(y.check_sdet_factorization(true, 0).unwrap(), None);
        assert_eq!(y.check_sdet_factorization(false, 0).unwrap(), None);
        assert_eq!(y.check_nnentry(0).unwrap(), None);
        assert_eq!(y.check_homcoin(0).unwrap(), None);
        let sh = y.sharp(true).unwrap();
        assert_eq!(check_symmetry(&sh, &samples(3, 0)).unwrap(), None);
        assert_eq!(check_quaternary(&sh, &sample_pairs(3, 0)).unwrap(), None);
        let du = y.dual().unwrap();
        assert_eq!(check_symmetry(&du, &samples(3, 0)).unwrap(), None);
        assert_eq!(check_quaternary(&du, &sample_pairs(3, 0)).unwrap(), None);
    }

    #[test]
    fn orthogonal_homcoin() {
        let y = syl(Case::Orthogonal, 5, 1);
        assert_eq!(y.check_homcoin(0).unwrap(), None);
        assert_eq!(y.check_sdet_factorization(true, 0).unwrap(), None);
    }
}
