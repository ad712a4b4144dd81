use twisted_yangian::algebra::{Case, IndexScheme};
use twisted_yangian::combinatorics::{drinfeld_diagram, lambda0};
use twisted_yangian::exact::rational::{int, rat};
use twisted_yangian::exact::{Mat, Poly, RatFunc, Rational};
use twisted_yangian::rep::HighestWeight;
use twisted_yangian::skew::{
    algebra_dim, build_skew, check_irreducible, check_restriction, check_sdet_eigen, check_sklmu, closed_form_hw, commutant_dim,
    drinfeld_from_hw, extract_hw, find_highest_vector, sdet_eigenvalue, SkewModule, YangianHW,
};
use twisted_yangian::sklyanin::checks::check_sdet_scalar;
use twisted_yangian::sklyanin::{alpha, Family};
use twisted_yangian::suites::{evaluation, skew_checks, symplectic_skew};
use twisted_yangian::Error;

fn hw(roots: &[(&[Rational], &[Rational])]) -> YangianHW {
    YangianHW { components: roots.iter().map(|(n, d)| RatFunc::from_roots(n, d)).collect() }
}

fn skew(lambda: &[i64], mu: &[i64]) -> SkewModule {
    symplectic_skew(lambda, mu).unwrap()
}

/// `(u + λ_i − 1/2)/(u − 1/2)`
fn eval_hw(lambda: &[i64]) -> YangianHW {
    YangianHW { components: lambda.iter().map(|&l| RatFunc::from_roots(&[rat(1 - 2 * l, 2)], &[rat(1, 2)])).collect() }
}

#[test]
fn evaluation_case() {
    let sm = skew(&[-1], &[]);
    assert_eq!(sm.dim(), 2);
    let h = extract_hw(&sm).unwrap();
    assert_eq!(h, hw(&[(&[rat(3, 2)], &[rat(1, 2)])]));
    assert_eq!(check_restriction(&sm).unwrap(), None);

    let sm = skew(&[0, -1], &[]);
    assert_eq!(sm.dim(), 4);
    let h = extract_hw(&sm).unwrap();
    assert_eq!(h, eval_hw(&[0, -1]));
    assert!(h.components[0].is_one());
    let d = drinfeld_from_hw(&h).unwrap();
    // P_2 = u − 3/2
    assert_eq!(d.polys, vec![Poly::one(), Poly::linear(&rat(3, 2))]);
    assert!(d.p1_symmetric());
}

#[test]
fn branching_case() {
    let sm = skew(&[-1, -1], &[-1]);
    assert_eq!(sm.dim(), 2);
    assert_eq!(sm.scheme().indices(), &[-1, 1]);
    assert_eq!(sm.base_index(1).unwrap(), 2);
    let xi = find_highest_vector(&sm).unwrap();
    // the weight of the highest vector is w(Λ₀)
    let w = lambda0(&[-1, -1], &[-1]).unwrap().weight();
    let f = sm.lie_op(1, 1).unwrap();
    let col = Mat::from_cols(xi.len(), &[xi.clone()]);
    assert_eq!(f.mul(&col), col.scale(&int(w[0])));
    let h = extract_hw(&sm).unwrap();
    assert_eq!(h, closed_form_hw(&[-1, -1], &[-1]).unwrap());
    assert_eq!(check_sklmu(sm.family(), &h, &xi, 0).unwrap(), None);
    assert_eq!(check_sdet_eigen(sm.family(), &h, 0).unwrap(), None);
    assert_eq!(check_restriction(&sm).unwrap(), None);
}

#[test]
fn empty_skew_space() {
    let s = IndexScheme::symplectic(2);
    let r = build_skew(&HighestWeight::from_ints(&[-1, -1]), &HighestWeight::from_ints(&[-2]), &s);
    match r {
        Err(Error::EmptySkewSpace(msg)) => assert!(msg.contains("fails at i ="), "{msg}"),
        Err(e) => panic!("{e}"),
        Ok(_) => panic!("built an empty module"),
    }
    let r = build_skew(&HighestWeight::from_ints(&[0, -2]), &HighestWeight::from_ints(&[-1, 0]), &s);
    assert!(matches!(r, Err(Error::OutOfRange(_))));
}

#[test]
fn sdet_eigenvalue_examples() {
    // sp_2, λ = (−1)
    let h = eval_hw(&[-1]);
    let want = RatFunc::from_roots(&[rat(-3, 2), rat(5, 2)], &[rat(1, 2), rat(3, 2)]);
    assert_eq!(sdet_eigenvalue(&h, Case::Symplectic), want);
    let f = evaluation(Case::Symplectic, 2, Some(&[-1])).unwrap();
    assert_eq!(check_sdet_eigen(&f, &h, 0).unwrap(), None);
    // trivial module: all components are 1
    let f = evaluation(Case::Symplectic, 4, Some(&[0, 0])).unwrap();
    let ones = YangianHW { components: vec![RatFunc::one(); 2] };
    assert_eq!(sdet_eigenvalue(&ones, Case::Symplectic), alpha(&int(2), Case::Symplectic));
    assert_eq!(check_sdet_eigen(&f, &ones, 0).unwrap(), None);
    // sp_4, λ = (0, −1)
    let f = evaluation(Case::Symplectic, 4, None).unwrap();
    assert_eq!(check_sdet_eigen(&f, &eval_hw(&[0, -1]), 0).unwrap(), None);
}

/// `α_n(u) Π μ_i(−u+i−1) μ_i(u−N+i)`, components in the given order.
fn literal_product(h: &YangianHW) -> RatFunc {
    let n = h.components.len() as i64;
    let mut f = alpha(&int(n), Case::Symplectic);
    for (k, mu) in h.components.iter().enumerate() {
        let i = k as i64 + 1;
        f = f.mul(&mu.compose_affine(&int(-1), &int(i - 1)));
        f = f.mul(&mu.compose_affine(&int(1), &int(i - 2 * n)));
    }
    f
}

#[test]
fn sdet_product_needs_reversed_components() {
    let f = evaluation(Case::Symplectic, 4, None).unwrap();
    let h = eval_hw(&[0, -1]);
    assert!(check_sdet_scalar(&f, &literal_product(&h), 0).unwrap().is_some());
    let reversed = YangianHW { components: h.components.iter().rev().cloned().collect() };
    assert_eq!(literal_product(&reversed), sdet_eigenvalue(&h, Case::Symplectic));
    // one component: nothing to reverse
    assert_eq!(literal_product(&eval_hw(&[-2])), sdet_eigenvalue(&eval_hw(&[-2]), Case::Symplectic));
}

#[test]
fn structural_identities_on_small_skew_modules() {
    for (l, mu) in [(vec![-1, -1], vec![-1]), (vec![-1, -2], vec![-1]), (vec![0, -2], vec![]), (vec![0, -1, -1], vec![-1]), (vec![0, -1, -2], vec![0, -1])] {
        let sm = skew(&l, &mu);
        let (_, checks) = skew_checks(&sm, 0).unwrap();
        for c in checks {
            assert!(c.pass, "{l:?}/{mu:?} {}: {:?}", c.name, c.witness);
        }
    }
}

#[test]
fn three_drinfeld_routes() {
    for (l, mu) in [(vec![-1, -2], vec![-1]), (vec![0, -3], vec![-2]), (vec![-2, -2], vec![-1]), (vec![-1, -1, -2], vec![-1, -1])] {
        let sm = skew(&l, &mu);
        let oracle = drinfeld_from_hw(&extract_hw(&sm).unwrap()).unwrap();
        let closed = drinfeld_from_hw(&closed_form_hw(&l, &mu).unwrap()).unwrap();
        let diagram = drinfeld_diagram(&l, &mu).unwrap();
        assert_eq!(oracle, closed, "{l:?}/{mu:?}");
        assert_eq!(closed.roots(), diagram.roots(), "{l:?}/{mu:?}");
        assert!(oracle.p1_symmetric());
    }
}

#[test]
fn irreducibility() {
    let one = skew(&[0, -1], &[-1]);
    assert_eq!(one.dim(), 1);
    assert!(check_irreducible(&one).unwrap().irreducible);
    for (l, mu) in [(vec![-1, -1], vec![-1]), (vec![-1, -2], vec![-1]), (vec![0, -1, -1], vec![0, -1]), (vec![0, 0, -1], vec![0])] {
        let sm = skew(&l, &mu);
        let irr = check_irreducible(&sm).unwrap();
        assert!(sm.dim() >= 2, "{l:?}/{mu:?}");
        assert!(irr.irreducible, "{l:?}/{mu:?}: {irr:?}");
        assert_eq!(irr.algebra_dim, sm.dim() * sm.dim());
        assert_eq!(irr.commutant_dim, 1);
    }
}

#[test]
fn matrix_algebra_oracles() {
    let e = |i: usize, j: usize| {
        let mut m = Mat::zeros(2, 2);
        m.set(i, j, int(1));
        m
    };
    // upper triangular: indecomposable but reducible
    assert_eq!(algebra_dim(2, &[e(0, 1)]), 2);
    assert_eq!(algebra_dim(2, &[e(0, 1), e(0, 0)]), 3);
    assert_eq!(commutant_dim(2, &[e(0, 1), e(0, 0)]), 1);
    assert_eq!(algebra_dim(2, &[e(0, 1), e(1, 0)]), 4);
    assert_eq!(commutant_dim(2, &[e(0, 1), e(1, 0)]), 1);
    assert_eq!(algebra_dim(2, &[e(0, 0)]), 2);
    assert_eq!(commutant_dim(2, &[e(0, 0)]), 2);
    assert_eq!(commutant_dim(3, &[]), 9);
}

#[test]
fn orthogonal_skew_modules() {
    // o_5 ⊃ o_3 and o_5 ⊃ o_1
    let s = IndexScheme::orthogonal(5);
    let l = HighestWeight::from_ints(&[0, -1]);
    for mu in [vec![], vec![0]] {
        let sm = build_skew(&l, &HighestWeight::from_ints(&mu), &s).unwrap();
        assert_eq!(check_restriction(&sm).unwrap(), None);
        assert!(matches!(find_highest_vector(&sm), Err(Error::OutOfRange(_))));
        let irr = check_irreducible(&sm).unwrap();
        assert!(irr.commutant_dim >= 1);
        assert_eq!(Family::<Rational>::scheme(sm.family()).case(), Case::Orthogonal);
    }
}
