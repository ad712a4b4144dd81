use proptest::prelude::*;
use twisted_yangian::exact::rational::{int, parse, rat, to_string};
use twisted_yangian::exact::{factor_linear, interpolate, Poly, RatFunc, Rational};
use twisted_yangian::Error;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn half_int() -> impl Strategy<Value = Rational> {
    (-15i64..=15).prop_map(|k| rat(2 * k + 1, 2))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(3), poly(3).prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v
}

#[test]
fn products_cancel() {
    let a = RatFunc::from_roots(&[], &[rat(1, 2)]);
    assert!(a.mul(&RatFunc::from_poly(Poly::linear(&rat(1, 2)))).is_one());
    let f = RatFunc::from_roots(&[rat(-1, 2)], &[rat(1, 2)])
        .mul(&RatFunc::from_roots(&[rat(-3, 2)], &[rat(-1, 2)]))
        .mul(&RatFunc::from_roots(&[rat(5, 2)], &[rat(3, 2)]));
    let want = RatFunc::from_roots(&[rat(-3, 2), rat(5, 2)], &[rat(1, 2), rat(3, 2)]);
    assert_eq!(f, want);
    // independent check by plain rational arithmetic at u = 7
    let x = int(7);
    let direct = (&x + rat(3, 2)) * (&x - rat(5, 2)) / ((&x - rat(1, 2)) * (&x - rat(3, 2)));
    assert_eq!(f.eval_at(&x).unwrap(), direct);
    assert!(RatFunc::from_roots(&[rat(3, 2)], &[rat(3, 2)]).is_one());
}

#[test]
fn evaluation_and_poles() {
    let f = RatFunc::from_roots(&[rat(-1, 2)], &[rat(1, 2)]);
    assert_eq!(f.eval_at(&rat(3, 2)).unwrap(), int(2));
    assert_eq!(RatFunc::one().eval_at(&rat(-9, 4)).unwrap(), int(1));
    assert_eq!(RatFunc::from_poly(Poly::linear(&rat(3, 2))).eval_at(&rat(3, 2)).unwrap(), int(0));
    assert!(matches!(f.eval_at(&rat(1, 2)), Err(Error::Pole(_))));
    assert!(RatFunc::zero().inv().is_err());
}

#[test]
fn linear_factors() {
    let p = Poly::from_roots(&[rat(3, 2), rat(-1, 2)]);
    assert_eq!(factor_linear(&p).unwrap(), vec![rat(-1, 2), rat(3, 2)]);
    let u2p1 = Poly::new(vec![int(1), int(0), int(1)]);
    assert!(matches!(factor_linear(&u2p1), Err(Error::NonLinearFactor(2))));
    let roots = [31, 29, 27, 9, 7, -19].map(|k| rat(k, 2));
    assert_eq!(factor_linear(&Poly::from_roots(&roots)).unwrap(), sorted(roots.to_vec()));
}

#[test]
fn interpolation_examples() {
    let f = RatFunc::from_roots(&[rat(3, 2)], &[rat(1, 2)]);
    let pts: Vec<_> = [2, 3, 4, 5].iter().map(|&x| (int(x), f.eval_at(&int(x)).unwrap())).collect();
    assert_eq!(interpolate(&pts, 1, 1).unwrap(), f);
    let ones: Vec<_> = (0..3).map(|x| (int(x), int(1))).collect();
    assert!(interpolate(&ones, 1, 1).unwrap().is_one());
    let g = RatFunc::from_roots(&[rat(-3, 2), rat(5, 2)], &[rat(1, 2), rat(3, 2)]);
    let pts: Vec<_> = (0..6).map(|t| rat(17, 3) + int(t)).map(|x| (x.clone(), g.eval_at(&x).unwrap())).collect();
    assert_eq!(interpolate(&pts, 2, 2).unwrap(), g);
    // a parabola through three points is not a (1,0) function
    let sq: Vec<_> = (0..3).map(|x| (int(x), int(x * x))).collect();
    assert!(matches!(interpolate(&sq, 1, 0), Err(Error::InconsistentSamples(1, 0))));
}

#[test]
fn rational_strings() {
    assert_eq!(to_string(&rat(-6, 4)), "-3/2");
    assert_eq!(to_string(&int(5)), "5");
    assert_eq!(parse("-3/2").unwrap(), rat(-3, 2));
    assert!(parse("1/0").is_err());
}

proptest! {
    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn normalization_is_idempotent(n in poly(4), d in poly(4).prop_filter("nonzero", |p| !p.is_zero())) {
        let f = RatFunc::new(n, d).unwrap();
        prop_assert!(f.den().is_monic());
        let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn factor_reconstruct(roots in prop::collection::vec(prop_oneof![half_int(), small_rat()], 0..=20)) {
        let p = Poly::from_roots(&roots);
        let found = factor_linear(&p).unwrap();
        prop_assert_eq!(Poly::from_roots(&found), p);
        prop_assert_eq!(found, sorted(roots));
    }

    #[test]
    fn interpolate_sample_roundtrip(
        num in prop::collection::vec(half_int(), 0..=8),
        den in prop::collection::vec(half_int(), 0..=8),
        scale in small_rat().prop_filter("nonzero", |c| *c != int(0)),
    ) {
        let f = RatFunc::from_roots(&num, &den).scale(&scale);
        let (dn, dd) = (f.num().degree(), f.den().degree());
        let exact: Vec<_> = (0..(dn + dd + 1) as i64)
            .map(|t| rat(17, 3) + int(t))
            .map(|x| (x.clone(), f.eval_at(&x).unwrap()))
            .collect();
        prop_assert_eq!(interpolate(&exact, dn, dd).unwrap(), f.clone());
        let pts: Vec<_> = (0..17)
            .map(|t| rat(17, 3) + int(t))
            .map(|x| (x.clone(), f.eval_at(&x).unwrap()))
            .collect();
        prop_assert_eq!(interpolate(&pts, 8, 8).unwrap(), f);
    }
}
