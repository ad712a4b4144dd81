use num_traits::{One, Zero};

use super::ratfunc::RatFunc;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Field operations shared by exact rationals and rational functions.
pub trait Scalar: Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn scale(&self, r: &Rational) -> Self;
    /// Value of the rational function `f` at the argument `self`.
    fn apply(f: &RatFunc, x: &Self) -> Result<Self>;
    /// Argument `x + c`, used for shifted spectral parameters.
    fn shift(&self, c: &Rational) -> Self {
        self.add(&Self::from_rational(c))
    }
    fn add_assign(&mut self, o: &Self) {
        *self = Scalar::add(self, o);
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn apply(f: &RatFunc, x: &Self) -> Result<Self> {
        f.eval_at(x)
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn scale(&self, r: &Rational) -> Self {
        RatFunc::scale(self, r)
    }
    fn apply(f: &RatFunc, x: &Self) -> Result<Self> {
        f.compose(x)
    }
}
