use std::collections::BTreeMap;

use twisted_yangian::algebra::{Case, IndexScheme};
use twisted_yangian::combinatorics::{count_patterns, is_nonempty};
use twisted_yangian::exact::rational::int;
use twisted_yangian::exact::Rational;
use twisted_yangian::rep::{extract_irrep, extract_irrep_choice, skew_subspace, weight_space, HighestWeight, LieRep, SparseMat};
use twisted_yangian::Error;

/// Weyl dimension formula for the classical types, from the partition `ν_1 ≥ ... ≥ ν_n`.
fn weyl_dim(case: Case, big_n: usize, nu: &[i64]) -> u128 {
    let n = nu.len();
    // ρ-shifted coordinates, doubled to stay integral
    let rho2 = |i: usize| -> i64 {
        let i = i as i64;
        let n = n as i64;
        match (case, big_n % 2) {
            (Case::Symplectic, _) => 2 * (n - i + 1),
            (Case::Orthogonal, 1) => 2 * (n - i) + 1,
            _ => 2 * (n - i),
        }
    };
    let l: Vec<i64> = (1..=n).map(|i| 2 * nu[i - 1] + rho2(i)).collect();
    let r: Vec<i64> = (1..=n).map(rho2).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..n {
        for j in i + 1..n {
            num *= ((l[i] - l[j]) * (l[i] + l[j])) as i128;
            den *= ((r[i] - r[j]) * (r[i] + r[j])) as i128;
        }
        // long or short roots 2ε_i, ε_i; none for even orthogonal
        if !(case == Case::Orthogonal && big_n % 2 == 0) {
            num *= l[i] as i128;
            den *= r[i] as i128;
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u128
}

fn partition(lambda: &[i64]) -> Vec<i64> {
    lambda.iter().rev().map(|x| -x).collect()
}

fn cases() -> Vec<(IndexScheme, Vec<i64>)> {
    let mut out = Vec::new();
    for l in [vec![-1], vec![-2], vec![-3], vec![-4]] {
        out.push((IndexScheme::symplectic(1), l.clone()));
        out.push((IndexScheme::orthogonal(3), l));
    }
    for l in [[0, -1], [-1, -1], [0, -2], [-1, -2], [0, -3], [-2, -2], [-1, -3]] {
        out.push((IndexScheme::symplectic(2), l.to_vec()));
        out.push((IndexScheme::orthogonal(5), l.to_vec()));
        out.push((IndexScheme::orthogonal(4), l.to_vec()));
    }
    out.push((IndexScheme::orthogonal(4), vec![1, -1]));
    out.push((IndexScheme::orthogonal(4), vec![2, -2]));
    for l in [[0, 0, -1], [0, -1, -1], [-1, -1, -1], [0, 0, -2]] {
        out.push((IndexScheme::symplectic(3), l.to_vec()));
        out.push((IndexScheme::orthogonal(6), l.to_vec()));
    }
    out
}

/// Multiset of weights, read off the diagonal Cartan matrices.
fn weights(rep: &LieRep) -> BTreeMap<Vec<Rational>, usize> {
    let n = rep.scheme().half_rank();
    let diags: Vec<Vec<Rational>> = (1..=n as i32).map(|i| rep.diagonal(i).expect("weight basis")).collect();
    let mut out = BTreeMap::new();
    for b in 0..rep.dim() {
        *out.entry(diags.iter().map(|d| d[b].clone()).collect()).or_insert(0) += 1;
    }
    out
}

#[test]
fn dimensions_match_weyl_formula() {
    for (s, l) in cases() {
        let rep = extract_irrep(&HighestWeight::from_ints(&l), &s).unwrap();
        assert_eq!(rep.dim() as u128, weyl_dim(s.case(), s.size(), &partition(&l)), "{s} {l:?}");
        rep.check_relations().unwrap();
    }
}

#[test]
fn weyl_oracle_sanity() {
    assert_eq!(weyl_dim(Case::Symplectic, 4, &[1, 1]), 5);
    assert_eq!(weyl_dim(Case::Symplectic, 4, &[1, 0]), 4);
    assert_eq!(weyl_dim(Case::Orthogonal, 3, &[2]), 5);
    assert_eq!(weyl_dim(Case::Orthogonal, 4, &[1, 1]), 3);
    assert_eq!(weyl_dim(Case::Orthogonal, 4, &[1, -1]), 3);
    assert_eq!(weyl_dim(Case::Orthogonal, 6, &[1, 1, 0]), 15);
}

#[test]
fn vector_and_tensor_reps() {
    let sp4 = IndexScheme::symplectic(2);
    let v = LieRep::vector_rep(&sp4);
    let e = |i: i32| {
        let mut x = vec![int(0); 4];
        x[sp4.pos(i).unwrap()] = int(1);
        x
    };
    assert!(v.gen(1, 2).unwrap().apply_vec(&e(-2)).iter().all(|x| *x == int(0)));
    assert_eq!(v.gen(1, 2).unwrap().apply_vec(&e(2)), e(1));
    assert_eq!(v.diagonal(1).unwrap()[sp4.pos(-1).unwrap()], int(-1));
    let f11 = v.gen(1, 1).unwrap();
    let f12 = v.gen(1, 2).unwrap();
    assert_eq!(f11.commutator(f12), (**f12).clone());

    let t1 = LieRep::tensor_rep(&v, 1).unwrap();
    assert_eq!(weights(&t1), weights(&v));
    let sp2 = IndexScheme::symplectic(1);
    let t2 = LieRep::tensor_rep(&LieRep::vector_rep(&sp2), 2).unwrap();
    t2.check_relations().unwrap();
    // e_{-1} ⊗ e_{-1} sits at tuple (0, 0)
    assert_eq!(t2.diagonal(1).unwrap()[0], int(-2));
    assert!(LieRep::tensor_rep(&v, 0).is_err());
}

#[test]
fn corrupted_generators_are_rejected() {
    let v = LieRep::vector_rep(&IndexScheme::symplectic(2));
    let delta = SparseMat::from_triplets(4, 4, [(0, 1, int(1))]);
    let bad = v.corrupted(1, 2, &delta).unwrap();
    assert!(matches!(bad.check_relations(), Err(Error::NotInvariant(_))));
}

#[test]
fn weight_spaces_partition_the_module() {
    for (s, l) in cases().into_iter().take(12) {
        let rep = extract_irrep(&HighestWeight::from_ints(&l), &s).unwrap();
        let cartan: Vec<i32> = (1..=s.half_rank() as i32).collect();
        let w = weights(&rep);
        for (target, mult) in &w {
            assert_eq!(weight_space(&rep, &cartan, target).unwrap().dim(), *mult);
        }
        assert_eq!(w.values().sum::<usize>(), rep.dim());
    }
}

#[test]
fn choice_of_highest_vector_does_not_matter() {
    let mut compared = 0;
    for (s, l) in cases() {
        let hw = HighestWeight::from_ints(&l);
        let first = weights(&extract_irrep(&hw, &s).unwrap());
        for choice in 1..4 {
            match extract_irrep_choice(&hw, &s, choice) {
                Ok(rep) => {
                    assert_eq!(weights(&rep), first, "{s} {l:?} choice {choice}");
                    compared += 1;
                }
                Err(Error::NoHighestVector(_)) => break,
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(compared > 5, "only {compared} alternative highest vectors");
}

#[test]
fn skew_dimension_is_pattern_count() {
    for (n, lams) in [(2usize, vec![[0, -1], [-1, -1], [-1, -2], [0, -3], [-2, -2], [-2, -3]])] {
        let s = IndexScheme::symplectic(n);
        for l in lams {
            let rep = extract_irrep(&HighestWeight::from_ints(&l), &s).unwrap();
            for m1 in -4..=0 {
                let space = skew_subspace(&rep, &HighestWeight::from_ints(&[m1]), 1).unwrap();
                assert_eq!(space.dim() > 0, is_nonempty(&l, &[m1]), "{l:?} / ({m1})");
                if is_nonempty(&l, &[m1]) {
                    assert_eq!(space.dim() as u128, count_patterns(&l, &[m1]).unwrap(), "{l:?} / ({m1})");
                }
            }
        }
    }
    let s = IndexScheme::symplectic(3);
    for l in [[0, -1, -1], [-1, -1, -2], [0, -1, -3]] {
        let rep = extract_irrep(&HighestWeight::from_ints(&l), &s).unwrap();
        for mu in [vec![-1], vec![0], vec![-2], vec![0, -1], vec![-1, -1], vec![-1, -2], vec![0, 0]] {
            let space = skew_subspace(&rep, &HighestWeight::from_ints(&mu), mu.len()).unwrap();
            let want = if is_nonempty(&l, &mu) { count_patterns(&l, &mu).unwrap() } else { 0 };
            assert_eq!(space.dim() as u128, want, "{l:?} / {mu:?}");
        }
    }
}

#[test]
fn skew_examples() {
    let s = IndexScheme::symplectic(2);
    let rep = extract_irrep(&HighestWeight::from_ints(&[-1, -1]), &s).unwrap();
    assert_eq!(skew_subspace(&rep, &HighestWeight::from_ints(&[-1]), 1).unwrap().dim(), 2);
    assert_eq!(skew_subspace(&rep, &HighestWeight(vec![]), 0).unwrap().dim(), 5);
    let cartan = [1, 2];
    assert_eq!(weight_space(&rep, &cartan, &[int(0), int(0)]).unwrap().dim(), 1);
}

#[test]
fn invalid_weights() {
    let s = IndexScheme::symplectic(2);
    for bad in [vec![1, 0], vec![0, 1], vec![-1]] {
        assert!(matches!(extract_irrep(&HighestWeight::from_ints(&bad), &s), Err(Error::InvalidWeight(_))));
    }
    // above every other case in this file, so concurrent tests are unaffected
    std::env::set_var("TY_SIZE_LIMIT", "1000");
    let r = extract_irrep(&HighestWeight::from_ints(&[-3, -3]), &s);
    std::env::remove_var("TY_SIZE_LIMIT");
    assert!(matches!(r, Err(Error::SizeLimit { .. })));
}
