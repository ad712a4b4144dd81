use proptest::prelude::*;
use twisted_yangian::combinatorics::diagram::validate_weight;
use twisted_yangian::combinatorics::{
    content, count_patterns, drinfeld_diagram, enumerate_patterns, evaluation_drinfeld, intersect_shifted, is_nonempty, lambda0, weight_leq,
    Diagram, ExtInt,
};
use twisted_yangian::exact::rational::rat;
use twisted_yangian::exact::{factor_linear, Rational};
use twisted_yangian::suites::{dominant_weights, skew_sweep};
use twisted_yangian::Error;

fn halves(v: &[i64]) -> Vec<Rational> {
    let mut r: Vec<Rational> = v.iter().map(|&x| rat(x, 2)).collect();
    r.sort();
    r
}

/// Non-positive weakly decreasing tuples of the given length, entries ≥ `low`.
fn weight(len: usize, low: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(low..=0i64, len).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        v
    })
}

fn skew_pair() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (1usize..=4).prop_flat_map(|n| (weight(n, -6), 0..n)).prop_flat_map(|(l, m)| (Just(l), weight(m, -6)))
}

#[test]
fn diagram_rows() {
    let d = Diagram::new(&[-4, -7]).unwrap();
    let f = ExtInt::Fin;
    assert_eq!(d.row(1), Some((f(-4), f(0))));
    assert_eq!(d.row(2), Some((f(-7), f(-4))));
    assert_eq!(d.row(0), Some((f(0), f(4))));
    assert_eq!(d.row(-1), Some((f(4), f(7))));
    assert_eq!(d.row(3), Some((ExtInt::NegInf, f(-7))));
    assert_eq!(d.row(-2), Some((f(7), ExtInt::PosInf)));
    let e = Diagram::new(&[]).unwrap();
    assert_eq!(e.row(1), Some((ExtInt::NegInf, f(0))));
    assert_eq!(e.row(0), Some((f(0), ExtInt::PosInf)));
    assert_eq!(content((0, 0)), 0);
    assert!(Diagram::new(&[-1, 0]).is_err());
}

#[test]
fn worked_example() {
    let (l, mu) = ([-2, -8, -10, -13], [-4, -7]);
    let (dl, dm) = (Diagram::new(&l).unwrap(), Diagram::new(&mu).unwrap());
    let c1 = intersect_shifted(&dm, &dl, 1).unwrap();
    assert_eq!(c1.len(), 14);
    assert!(c1.contains(&(3, -10)) && c1.contains(&(3, -9)) && c1.contains(&(-2, 9)));
    let c2 = intersect_shifted(&dm, &dl, 2).unwrap();
    assert_eq!(c2.len(), 6);
    for c in [(3, -13), (3, -12), (3, -11), (-2, 7)] {
        assert!(c2.contains(&c), "{c:?}");
    }
    let d = drinfeld_diagram(&l, &mu).unwrap();
    let p1 = [25, 23, 17, 15, 13, 5, 3, -1, -3, -11, -13, -15, -21, -23];
    assert_eq!(factor_linear(&d.polys[0]).unwrap(), halves(&p1));
    assert_eq!(factor_linear(&d.polys[1]).unwrap(), halves(&[31, 29, 27, 9, 7, -19]));
    assert!(d.p1_symmetric());
    assert!(lambda0(&l, &mu).unwrap().is_valid());
}

#[test]
fn evaluation_closed_forms_agree_with_diagrams() {
    for n in 1..=4 {
        for l in dominant_weights(n, 8) {
            assert_eq!(evaluation_drinfeld(&l).unwrap(), drinfeld_diagram(&l, &[]).unwrap(), "{l:?}");
        }
    }
    // λ = (−1, −2): P_1 = (u − 3/2)(u + 1/2), P_2 = u − 5/2
    let d = evaluation_drinfeld(&[-1, -2]).unwrap();
    assert_eq!(factor_linear(&d.polys[0]).unwrap(), halves(&[-1, 3]));
    assert_eq!(factor_linear(&d.polys[1]).unwrap(), halves(&[5]));
    // λ_1 = 0: the P_1 range is empty
    assert!(evaluation_drinfeld(&[0, -3]).unwrap().polys[0].is_one());
}

#[test]
fn small_pattern_counts() {
    let ps = enumerate_patterns(&[-1, -1], &[-1]).unwrap();
    assert_eq!(ps.len(), 2);
    let low = ps.iter().find(|p| p.primed_row(2)[0] == -1).unwrap();
    assert_eq!(low.weight(), vec![-1]);
    assert_eq!(count_patterns(&[-1, -1], &[-2]).unwrap(), 0);
    assert!(matches!(lambda0(&[-1, -1], &[-2]), Err(Error::EmptySkewSpace(_))));
    assert!(matches!(count_patterns(&[-1], &[-1]), Err(Error::OutOfRange(_))));
    assert_eq!(lambda0(&[0, -2], &[]).unwrap().weight(), vec![0, -2]);
}

#[test]
fn lambda0_is_maximal_on_a_sweep() {
    let cases = skew_sweep(&[(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)], 6);
    assert!(cases.len() > 100);
    for (l, mu) in cases {
        let all = enumerate_patterns(&l, &mu).unwrap();
        let top = lambda0(&l, &mu).unwrap();
        assert!(all.contains(&top), "{l:?}/{mu:?}");
        let w0 = top.weight();
        assert_eq!(all.iter().filter(|p| p.weight() == w0).count(), 1);
        assert!(all.iter().all(|p| weight_leq(&p.weight(), &w0)), "{l:?}/{mu:?}");
    }
}

proptest! {
    #[test]
    fn central_symmetry(l in (0usize..=4).prop_flat_map(|n| weight(n, -9)), cells in prop::collection::vec((-6i64..=7, -14i64..=14), 200)) {
        let d = Diagram::new(&l).unwrap();
        for (i, j) in cells {
            prop_assert_eq!(d.contains(i, j), d.contains(1 - i, -1 - j));
        }
    }

    #[test]
    fn intersections_are_finite_and_p1_palindromic((l, mu) in skew_pair()) {
        prop_assume!(validate_weight(&mu).is_ok());
        let (dl, dm) = (Diagram::new(&l).unwrap(), Diagram::new(&mu).unwrap());
        for k in 1..=l.len() - mu.len() {
            prop_assert!(intersect_shifted(&dm, &dl, k).is_ok());
        }
        let d = drinfeld_diagram(&l, &mu).unwrap();
        prop_assert!(d.p1_symmetric());
    }

    #[test]
    fn lambda0_is_the_unique_maximum((l, mu) in skew_pair()) {
        let count = count_patterns(&l, &mu).unwrap();
        prop_assert_eq!(count == 0, !is_nonempty(&l, &mu));
        prop_assume!(count > 0 && count <= 5000);
        let all = enumerate_patterns(&l, &mu).unwrap();
        prop_assert_eq!(all.len() as u128, count);
        let top = lambda0(&l, &mu).unwrap();
        prop_assert!(all.contains(&top));
        let w0 = top.weight();
        for p in &all {
            prop_assert!(p.is_valid());
            prop_assert!(weight_leq(&p.weight(), &w0));
            if p != &top {
                prop_assert_ne!(p.weight(), w0.clone());
            }
        }
    }
}
