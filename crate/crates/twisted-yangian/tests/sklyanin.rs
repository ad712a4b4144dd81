use std::sync::Arc;

use twisted_yangian::algebra::{Case, IndexScheme};
use twisted_yangian::exact::rational::{half, int, rat};
use twisted_yangian::exact::{Mat, RatFunc, Rational};
use twisted_yangian::rep::LieRep;
use twisted_yangian::sklyanin::checks::{blocks, check_centrality, check_comdef, check_quaternary, check_symmetry, check_symsdet, sample_pairs, samples, Comatrix};
use twisted_yangian::sklyanin::{alpha, aux_minor, minor, sdet, Bordered, EvalFamily, EvalVarpi, Family, Route};
use twisted_yangian::suites::{evaluation, minor_routes, sylvester};

fn sp(n: usize, lambda: Option<&[i64]>) -> EvalFamily {
    evaluation(Case::Symplectic, 2 * n, lambda).unwrap()
}

fn o(big_n: usize, lambda: Option<&[i64]>) -> EvalFamily {
    evaluation(Case::Orthogonal, big_n, lambda).unwrap()
}

#[test]
fn alpha_factors() {
    assert!(alpha(&rat(5, 2), Case::Orthogonal).is_one());
    assert!(alpha(&int(0), Case::Symplectic).is_one());
    assert_eq!(alpha(&int(1), Case::Symplectic), RatFunc::from_roots(&[rat(-1, 2)], &[rat(1, 2)]));
}

#[test]
fn one_minors_and_skew_symmetry() {
    let f = sp(2, None);
    let x = rat(17, 3);
    let g = Family::<Rational>::grid(&f, &x).unwrap();
    let s = f.rep().scheme().clone();
    for &a in s.indices() {
        for &b in s.indices() {
            let m = minor(&f, &[a], &[b], &x, Route::Antisymmetrizer).unwrap();
            assert_eq!(m, g.dense(s.pos(a).unwrap(), s.pos(b).unwrap()));
        }
    }
    let m = minor(&f, &[-2, -1], &[-2, -1], &x, Route::Antisymmetrizer).unwrap();
    let swapped = minor(&f, &[-1, -2], &[-2, -1], &x, Route::Antisymmetrizer).unwrap();
    assert!(!m.is_zero());
    assert_eq!(swapped, m.neg());
    assert!(minor(&f, &[1, 1], &[-1, 2], &x, Route::Antisymmetrizer).unwrap().is_zero());
    assert!(minor(&f, &[1, 1], &[-1, 2], &x, Route::Auto).unwrap().is_zero());
}

#[test]
fn routes_agree_on_small_modules() {
    let fams = [
        sp(1, None),
        sp(1, Some(&[-2])),
        sp(2, None),
        sp(2, Some(&[-1, -1])),
        o(3, None),
        o(3, Some(&[-1])),
        o(4, None),
        o(2, None),
    ];
    for f in &fams {
        let (shapes, check) = minor_routes(f, 4, 0);
        assert!(shapes > 0);
        assert!(check.pass, "{}: {:?}", f.rep().scheme(), check.witness);
    }
}

/// The symbolic determinant, computed over rational functions with no sampling.
fn symbolic_sdet(f: &EvalFamily, route: Route) -> Mat<RatFunc> {
    sdet(f, &RatFunc::var(), route).unwrap()
}

#[test]
fn determinant_of_the_vector_rep_of_sp2() {
    let f = sp(1, Some(&[-1]));
    let want = RatFunc::from_roots(&[rat(-3, 2), rat(5, 2)], &[rat(1, 2), rat(3, 2)]);
    for route in [Route::Antisymmetrizer, Route::Formula] {
        assert_eq!(symbolic_sdet(&f, route), Mat::scalar(2, &want));
    }
}

#[test]
fn trivial_modules() {
    for s in [IndexScheme::orthogonal(2), IndexScheme::orthogonal(3), IndexScheme::symplectic(1)] {
        let f = EvalFamily::new(Arc::new(LieRep::trivial(&s)));
        let d = symbolic_sdet(&f, Route::Antisymmetrizer);
        let c = d.as_scalar().unwrap();
        if s.case() == Case::Orthogonal && s.size() == 2 {
            assert!(c.is_one());
        }
        assert_eq!(check_quaternary(&f, &sample_pairs(2, 0)).unwrap(), None);
        assert_eq!(check_symmetry(&f, &samples(2, 0)).unwrap(), None);
        assert_eq!(check_comdef(&f, Comatrix::Auxiliary, 0).unwrap(), None);
    }
}

#[test]
fn determinant_symmetry_symbolically() {
    for f in [sp(1, Some(&[-2])), sp(2, None), o(3, None), o(4, None)] {
        let s = f.rep().scheme().clone();
        let (n, nn) = (int(s.half_rank() as i64), int(s.size() as i64));
        let d = symbolic_sdet(&f, Route::Antisymmetrizer);
        let a = alpha(&n, s.case());
        let lhs = d.map(|e| e.div(&a).unwrap());
        let refl = |g: &RatFunc| g.compose_affine(&int(-1), &(&nn - int(1)));
        let rhs = d.map(|e| refl(e).div(&refl(&a)).unwrap());
        assert_eq!(lhs, rhs, "{s}");
        assert_eq!(check_symsdet(&f, 0).unwrap(), None);
    }
}

#[test]
fn sdet_is_central() {
    let f = sp(2, None);
    let idx = f.rep().scheme().indices().to_vec();
    let pairs = sample_pairs(3, 1);
    assert_eq!(check_centrality(&f, &idx, &idx, &pairs).unwrap(), None);
    assert_eq!(check_centrality(&f, &[-2, 1], &[-1, 2], &pairs).unwrap(), None);
    assert_eq!(check_centrality(&o(3, None), &[-1, 0, 1], &[-1, 0, 1], &pairs).unwrap(), None);
}

#[test]
fn comatrix_identity() {
    for f in [sp(1, Some(&[-1])), sp(2, None), o(3, None)] {
        assert_eq!(check_comdef(&f, Comatrix::Minors, 2).unwrap(), None);
        assert_eq!(check_comdef(&f, Comatrix::Auxiliary, 2).unwrap(), None);
    }
}

#[test]
fn auxiliary_minor_vanishing_and_expansion() {
    let f = sp(2, None);
    let x = rat(23, 7);
    // c outside both index sets
    assert!(aux_minor(&f, &[-2, -1], &[1], 2, &x).unwrap().is_zero());
    // Σ_c aux · s_{c b_k}(u − k + 1) recovers the minor
    let (upper, lower) = ([-2, 1], [-1, 2]);
    let g = Family::<Rational>::grid(&f, &(&x - int(1))).unwrap();
    let s = f.rep().scheme().clone();
    let mut acc = Mat::zeros(4, 4);
    for &c in s.indices() {
        let a = aux_minor(&f, &upper, &lower[..1], c, &x).unwrap();
        acc.add_assign(&a.mul(&g.dense(s.pos(c).unwrap(), s.pos(lower[1]).unwrap())));
    }
    assert_eq!(acc, minor(&f, &upper, &lower, &x, Route::Antisymmetrizer).unwrap());
}

#[test]
fn varpi_is_the_inverse_matrix() {
    for f in [sp(1, Some(&[-1])), sp(2, None), o(3, None), sp(1, Some(&[-2]))] {
        let s = f.rep().scheme().clone();
        let (n, d) = (s.size(), f.rep().dim());
        let v = EvalVarpi::new(&f).unwrap();
        for x in samples(3, 4) {
            let y = -&x - rat(n as i64, 2);
            let gv = Family::<Rational>::grid(&v, &x).unwrap();
            let gf = Family::<Rational>::grid(&f, &y).unwrap();
            let big_v = blocks(n, d, |p, q| gv.dense(p, q));
            let big_f = blocks(n, d, |p, q| gf.dense(p, q));
            assert_eq!(big_v, big_f.inverse().unwrap(), "{s}");
        }
    }
    // trivial module: the image of the identity matrix is the identity
    let t = EvalFamily::new(Arc::new(LieRep::trivial(&IndexScheme::symplectic(1))));
    let g = Family::<Rational>::grid(&EvalVarpi::new(&t).unwrap(), &half()).unwrap();
    assert_eq!(blocks(2, 1, |p, q| g.dense(p, q)), Mat::identity(2));
}

#[test]
fn bordered_families_satisfy_the_relations() {
    let pairs = sample_pairs(2, 3);
    let xs = samples(2, 3);
    for (f, m) in [(sp(2, None), 1), (sp(3, None), 1), (o(5, None), 1), (o(4, None), 1), (o(5, None), 0)] {
        let base = Arc::new(f);
        let sharp = Bordered::sharp(base.clone(), m, true).unwrap();
        assert_eq!(check_symmetry(&sharp, &xs).unwrap(), None);
        assert_eq!(check_quaternary(&sharp, &pairs).unwrap(), None);
        if let Ok(dual) = Bordered::dual(base.clone(), m) {
            assert_eq!(check_symmetry(&dual, &xs).unwrap(), None, "{}", base.rep().scheme());
            assert_eq!(check_quaternary(&dual, &pairs).unwrap(), None);
        }
    }
    assert!(Bordered::sharp(Arc::new(sp(2, None)), 2, true).is_err());
}

#[test]
fn sylvester_identities() {
    for (f, m) in [(sp(2, None), 1), (o(5, None), 1), (sp(2, Some(&[-1, -1])), 1)] {
        for c in sylvester(f, m, 0).unwrap() {
            assert!(c.pass, "{}: {:?}", c.name, c.witness);
        }
    }
}
