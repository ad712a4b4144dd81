use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rational::{self, rat, Rational};
use crate::error::{Error, Result};

/// All rational roots of a monic polynomial, with multiplicity, sorted ascending.
pub fn factor_linear(p: &Poly) -> Result<Vec<Rational>> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::ShapeMismatch("factor_linear expects a monic polynomial".into()));
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    while rest.degree() > 0 && rest.coeff(0).is_zero() {
        roots.push(Rational::zero());
        rest = rest.div_exact(&Poly::var()).expect("u divides");
    }
    if rest.degree() > 0 {
        let bound = root_bound(&rest);
        // half-integers first
        let mut k = -2 * bound;
        while k <= 2 * bound && rest.degree() > 0 {
            let x = rat(k, 2);
            if rest.eval(&x).is_zero() {
                rest = rest.div_exact(&Poly::linear(&x)).expect("root divides");
                roots.push(x);
            } else {
                k += 1;
            }
        }
        if rest.degree() > 0 {
            rational_roots(&mut rest, &mut roots);
        }
    }
    if rest.degree() > 0 {
        return Err(Error::NonLinearFactor(rest.degree()));
    }
    roots.sort();
    debug_assert_eq!(&Poly::from_roots(&roots), p);
    Ok(roots)
}

/// Fujiwara bound on the absolute value of complex roots, rounded up.
fn root_bound(p: &Poly) -> i64 {
    let n = p.degree();
    let mut b: f64 = 0.0;
    for i in 1..=n {
        let c = rational::approx(&p.coeff(n - i)).abs();
        let c = if i == n { c / 2.0 } else { c };
        b = b.max(c.powf(1.0 / i as f64));
    }
    (2.0 * b).ceil() as i64 + 1
}

fn lcm_of_denominators(p: &Poly) -> BigInt {
    p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn divisors(n: &BigInt) -> Vec<i64> {
    let Some(n) = n.abs().to_i64() else { return vec![1] };
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Rational root theorem restricted to the root bound.
fn rational_roots(rest: &mut Poly, roots: &mut Vec<Rational>) {
    let lead = lcm_of_denominators(rest);
    for e in divisors(&lead) {
        if e <= 2 {
            continue;
        }
        let bound = root_bound(rest);
        let mut d = -bound * e;
        while d <= bound * e && rest.degree() > 0 {
            if d.gcd(&e) == 1 {
                let x = rat(d, e);
                if rest.eval(&x).is_zero() {
                    *rest = rest.div_exact(&Poly::linear(&x)).expect("root divides");
                    roots.push(x);
                    continue;
                }
            }
            d += 1;
        }
    }
}
