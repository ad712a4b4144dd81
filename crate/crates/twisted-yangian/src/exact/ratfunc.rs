use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Reduced rational function `num/den` in `u` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::normalize_lead(num, den)
    }

    fn normalize_lead(num: Poly, den: Poly) -> RatFunc {
        if den.is_monic() {
            return RatFunc { num, den };
        }
        let l = Rational::one() / den.lead();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn zero() -> RatFunc {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn var() -> RatFunc {
        RatFunc::from_poly(Poly::var())
    }

    /// `u + c`
    pub fn shifted_var(c: &Rational) -> RatFunc {
        RatFunc::from_poly(Poly::new(vec![c.clone(), Rational::one()]))
    }

    /// `a·u + b`
    pub fn affine(a: &Rational, b: &Rational) -> RatFunc {
        RatFunc::from_poly(Poly::new(vec![b.clone(), a.clone()]))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    /// `Π (u - num_roots) / Π (u - den_roots)`
    pub fn from_roots(num_roots: &[Rational], den_roots: &[Rational]) -> RatFunc {
        Self::reduce(Poly::from_roots(num_roots), Poly::from_roots(den_roots))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.degree() == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// max(deg num, deg den)
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            if self.den.is_one() {
                return RatFunc { num, den: Poly::one() };
            }
            return Self::reduce(num, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            return RatFunc { num, den: &self.den * &o.den };
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&o.num * &d1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = &self.den * &d2;
        let h = Poly::gcd(&num, &g);
        if h.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_exact(&h).expect("gcd divides"), den: den.div_exact(&h).expect("gcd divides") }
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: Poly::one() };
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalize_lead(&n1 * &n2, &d1 * &d2)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_lead(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn eval_at(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(rational::to_string(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(a·u + b)`
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> RatFunc {
        Self::normalize_lead(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
    }

    /// `f(g(u))`
    pub fn compose(&self, g: &RatFunc) -> Result<RatFunc> {
        if g.den.is_one() && g.num.degree() <= 1 {
            return Ok(self.compose_affine(&g.num.coeff(1), &g.num.coeff(0)));
        }
        let horner = |p: &Poly| {
            let mut acc = RatFunc::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(g).add(&RatFunc::constant(c.clone()));
            }
            acc
        };
        horner(&self.num).div(&horner(&self.den))
    }

    /// Coefficient of `u^e` in the expansion at `u = ∞`.
    pub fn coeff_at_infinity(&self, e: i64) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let shift = if e < 0 { (-e) as usize } else { 0 };
        let mut c = vec![Rational::zero(); shift];
        c.extend_from_slice(self.num.coeffs());
        let (q, _) = Poly::new(c).div_rem(&self.den).expect("monic denominator");
        q.coeff((e + shift as i64) as usize)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn lin(r: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::linear(&r))
    }

    #[test]
    fn inverse_pair() {
        let a = lin(rat(1, 2)).inv().unwrap();
        assert!(a.mul(&lin(rat(1, 2))).is_one());
        let b = lin(rat(3, 2));
        assert!(b.div(&b).unwrap().is_one());
        assert!(b.div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn cancellation_chain() {
        let f = |p, d| RatFunc::from_roots(&[p], &[d]);
        let prod = f(rat(-1, 2), rat(1, 2)).mul(&f(rat(-3, 2), rat(-1, 2))).mul(&f(rat(5, 2), rat(3, 2)));
        let expect = RatFunc::from_roots(&[rat(-3, 2), rat(5, 2)], &[rat(1, 2), rat(3, 2)]);
        assert_eq!(prod, expect);
        // (7+3/2)(7-5/2)/((7-1/2)(7-3/2)) = 153/143
        assert_eq!(prod.eval_at(&int(7)).unwrap(), rat(153, 143));
    }

    #[test]
    fn evaluation() {
        let f = RatFunc::from_roots(&[rat(-1, 2)], &[rat(1, 2)]);
        assert_eq!(f.eval_at(&rat(3, 2)).unwrap(), int(2));
        assert_eq!(RatFunc::one().eval_at(&int(9)).unwrap(), int(1));
        assert_eq!(lin(rat(3, 2)).eval_at(&rat(3, 2)).unwrap(), int(0));
        assert!(f.eval_at(&rat(1, 2)).is_err());
    }

    #[test]
    fn expansion_at_infinity() {
        // (u + 1/2)/(u - 1/2) = 1 + u^-1 + (1/2) u^-2 + ...
        let f = RatFunc::from_roots(&[rat(-1, 2)], &[rat(1, 2)]);
        assert_eq!(f.coeff_at_infinity(0), int(1));
        assert_eq!(f.coeff_at_infinity(-1), int(1));
        assert_eq!(f.coeff_at_infinity(-2), rat(1, 2));
        assert_eq!(f.coeff_at_infinity(1), int(0));
    }

    #[test]
    fn composition() {
        let f = RatFunc::from_roots(&[int(1)], &[int(2)]);
        let g = f.compose(&RatFunc::affine(&int(-1), &int(3))).unwrap();
        // (2 - u)/(1 - u) = (u - 2)/(u - 1)
        assert_eq!(g, RatFunc::from_roots(&[int(2)], &[int(1)]));
        let h = f.compose(&f).unwrap();
        let x = int(7);
        assert_eq!(h.eval_at(&x).unwrap(), f.eval_at(&f.eval_at(&x).unwrap()).unwrap());
    }
}
