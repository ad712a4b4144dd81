use super::linalg::kernel;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use crate::error::{Error, Result};

/// The rational function with `deg num ≤ deg_num`, `deg den ≤ deg_den` through all points.
pub fn interpolate(points: &[(Rational, Rational)], deg_num: usize, deg_den: usize) -> Result<RatFunc> {
    let unknowns = deg_num + deg_den + 2;
    if points.len() < deg_num + deg_den + 1 {
        return Err(Error::InconsistentSamples(deg_num, deg_den));
    }
    if points.iter().all(|(_, y)| y == &points[0].1) {
        return Ok(RatFunc::constant(points[0].1.clone()));
    }
    // num(x) - y·den(x) = 0 for each point
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|(x, y)| {
            let mut row = Vec::with_capacity(unknowns);
            let mut pw = Rational::from_integer(1.into());
            for _ in 0..=deg_num {
                row.push(pw.clone());
                pw *= x;
            }
            let mut pw = Rational::from_integer(1.into());
            for _ in 0..=deg_den {
                row.push(-(y * &pw));
                pw *= x;
            }
            row
        })
        .collect();
    let ker = kernel(&rows, unknowns);
    for v in ker {
        let num = Poly::new(v[..=deg_num].to_vec());
        let den = Poly::new(v[deg_num + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        let Ok(f) = RatFunc::new(num, den) else { continue };
        if points.iter().all(|(x, y)| f.eval_at(x).as_ref() == Ok(y)) {
            return Ok(f);
        }
    }
    Err(Error::InconsistentSamples(deg_num, deg_den))
}

/// Polynomial through the points (Lagrange form, degree < number of points).
pub fn interpolate_poly(points: &[(Rational, Rational)]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = Poly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                term = (&term * &Poly::linear(xj)).scale(&(Rational::from_integer(1.into()) / (xi - xj)));
            }
        }
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn roundtrip_small() {
        let f = RatFunc::from_roots(&[rat(3, 2)], &[rat(1, 2)]);
        let pts: Vec<_> = (2..6).map(|x| (int(x), f.eval_at(&int(x)).unwrap())).collect();
        assert_eq!(interpolate(&pts, 1, 1).unwrap(), f);
        let ones: Vec<_> = (0..3).map(|x| (int(x), int(1))).collect();
        assert!(interpolate(&ones, 1, 1).unwrap().is_one());
    }

    #[test]
    fn inconsistent() {
        let pts = vec![(int(0), int(0)), (int(1), int(1)), (int(2), int(4)), (int(3), int(9))];
        assert!(interpolate(&pts, 1, 0).is_err());
        assert_eq!(interpolate_poly(&pts[..3]), Poly::new(vec![int(0), int(0), int(1)]));
    }
}
