//! Verification suites shared by the command line and the acceptance tests. Each suite
//! returns a list of [`Check`]s together with a JSON summary of what was computed.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::perm::{all_positions, omega_quotient_bijective, positional_sign};
use crate::algebra::tensor::TensorOp;
use crate::algebra::{Case, IndexScheme};
use crate::combinatorics::patterns::inequality_text;
use crate::combinatorics::{count_patterns, drinfeld_diagram, is_nonempty, violated_inequality};
use crate::error::{Error, Result};
use crate::exact::rational::{int, rat};
use crate::exact::Rational;
use crate::report::Check;
use crate::rep::{extract_irrep, HighestWeight, LieRep};
use crate::skew::{
    build_skew, check_irreducible, check_restriction, check_sdet_eigen, check_sklmu, closed_form_hw, drinfeld_from_hw,
    find_highest_vector, hw_of_vector, DrinfeldData, SkewFamily, SkewModule,
};
use crate::sklyanin::checks::{
    check_comdef, check_quaternary, check_sdetcirc, check_symmetry, check_symsdet, sample_pairs, samples, Comatrix,
};
use crate::sklyanin::minor::{formula_shape, minor};
use crate::sklyanin::sylvester::Sylvester;
use crate::sklyanin::{EvalFamily, EvalVarpi, Family, Route};

/// Symplectic weights `0 ≥ λ_1 ≥ ... ≥ λ_n` with `Σ|λ_i| ≤ size`.
pub fn dominant_weights(n: usize, size: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, 0, size, &mut cur, &mut out);
    out
}

fn fill(n: usize, top: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let mut x = top;
    while -x <= left {
        cur.push(x);
        fill(n, x, left + x, cur, out);
        cur.pop();
        x -= 1;
    }
}

/// Every `μ` with `m` parts for which `V(λ)^+_μ` is nonzero.
pub fn skew_targets(lambda: &[i64], m: usize) -> Vec<Vec<i64>> {
    let low = lambda.last().copied().unwrap_or(0);
    let mut out = Vec::new();
    fill(m, 0, -low * m as i64, &mut Vec::new(), &mut out);
    out.retain(|mu| mu.iter().all(|&x| x >= low) && is_nonempty(lambda, mu));
    out
}

/// All symplectic skew cases `(λ, μ)` for the given `(n, m)` with `Σ|λ_i| ≤ size`.
pub fn skew_sweep(shapes: &[(usize, usize)], size: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for &(n, m) in shapes {
        for lambda in dominant_weights(n, size) {
            for mu in skew_targets(&lambda, m) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    out
}

/// Route for Drinfeld polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Diagram,
    ClosedForm,
    Oracle,
    All,
}

impl Method {
    pub fn parse(s: &str) -> Result<Method> {
        match s {
            "diagram" => Ok(Method::Diagram),
            "closed-form" => Ok(Method::ClosedForm),
            "oracle" => Ok(Method::Oracle),
            "all" => Ok(Method::All),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

fn validate_symplectic(lambda: &[i64], mu: &[i64]) -> Result<()> {
    HighestWeight::from_ints(lambda).validate(Case::Symplectic, 2 * lambda.len())?;
    HighestWeight::from_ints(mu).validate(Case::Symplectic, 2 * mu.len())?;
    if mu.len() >= lambda.len() {
        return Err(Error::OutOfRange(format!("m = {} needs m < n = {}", mu.len(), lambda.len())));
    }
    if let Some((kind, i)) = violated_inequality(lambda, mu) {
        return Err(Error::EmptySkewSpace(inequality_text(kind, i, lambda.len() - mu.len())));
    }
    Ok(())
}

/// Build `V(λ)^+_μ` over `sp_{2n}`.
pub fn symplectic_skew(lambda: &[i64], mu: &[i64]) -> Result<SkewModule> {
    build_skew(&HighestWeight::from_ints(lambda), &HighestWeight::from_ints(mu), &IndexScheme::symplectic(lambda.len()))
}

/// Drinfeld polynomials from the module: highest vector, eigenvalues, telescoping.
pub fn drinfeld_oracle(sm: &SkewModule) -> Result<DrinfeldData> {
    let xi = find_highest_vector(sm)?;
    drinfeld_from_hw(&hw_of_vector(sm, &xi)?)
}

/// One route, or all three with an equality check.
pub fn drinfeld(lambda: &[i64], mu: &[i64], method: Method) -> Result<(Value, Vec<Check>)> {
    validate_symplectic(lambda, mu)?;
    let diagram = || drinfeld_diagram(lambda, mu);
    let closed = || closed_form_hw(lambda, mu).and_then(|h| drinfeld_from_hw(&h));
    let oracle = || symplectic_skew(lambda, mu).and_then(|sm| drinfeld_oracle(&sm));
    let one = |d: DrinfeldData| {
        let p1 = Check::new("P_1 palindromy", "P_1(u) = P_1(-u+1)", (!d.p1_symmetric()).then(|| "P_1(u) != P_1(-u+1)".into()));
        (json!({ "polys": d.to_json() }), vec![p1])
    };
    match method {
        Method::Diagram => Ok(one(diagram()?)),
        Method::ClosedForm => Ok(one(closed()?)),
        Method::Oracle => Ok(one(oracle()?)),
        Method::All => {
            let (a, b, c) = (diagram()?, closed()?, oracle()?);
            let mut checks = vec![
                Check::new(
                    "diagram = closed form",
                    "diagram rule vs highest-weight formula",
                    (a != b).then(|| format!("{:?} vs {:?}", a.roots(), b.roots())),
                ),
                Check::new(
                    "closed form = eigenvalues",
                    "highest-weight formula vs module eigenvalues",
                    (b != c).then(|| format!("{:?} vs {:?}", b.roots(), c.roots())),
                ),
            ];
            checks.extend(one(a.clone()).1);
            let results = json!({ "diagram": a.to_json(), "closed_form": b.to_json(), "oracle": c.to_json() });
            Ok((results, checks))
        }
    }
}

/// Evaluation family on `V(λ)`, or on the vector representation when `lambda` is `None`.
pub fn evaluation(case: Case, big_n: usize, lambda: Option<&[i64]>) -> Result<EvalFamily> {
    let s = IndexScheme::new(case, big_n)?;
    let rep = match lambda {
        None => LieRep::vector_rep(&s),
        Some(l) => extract_irrep(&HighestWeight::from_ints(l), &s)?,
    };
    Ok(EvalFamily::new(Arc::new(rep)))
}

/// Quaternary and symmetry relations of the evaluation family.
pub fn relations(fam: &EvalFamily, count: usize, seed: i64) -> Vec<Check> {
    vec![
        Check::from_result("quaternary", "quaternary relation", check_quaternary(fam, &sample_pairs(count, seed))),
        Check::from_result("symmetry", "symmetry relation", check_symmetry(fam, &samples(count, seed))),
    ]
}

/// Sylvester-type factorizations for `g_N ⊃ g_M`, `M = 2m` or `2m+1`, on an evaluation module.
pub fn sylvester(fam: EvalFamily, m: usize, seed: i64) -> Result<Vec<Check>> {
    let n = fam.rep().scheme().half_rank();
    let syl = Sylvester::new(Arc::new(fam), m)?;
    let mut out = vec![
        Check::from_result("sdet factorization, twisted", "quantum Sylvester theorem", syl.check_sdet_factorization(true, seed)),
        Check::from_result("sdet factorization, extended", "quantum Sylvester theorem", syl.check_sdet_factorization(false, seed)),
        Check::from_result("comatrix factorization", "comatrix entries of the bordered matrix", syl.check_nnentry(seed)),
    ];
    if m + 1 == n {
        out.push(Check::from_result("dual homomorphism", "comatrix entries as bordered minors", syl.check_homcoin(seed)));
    }
    Ok(out)
}

fn subsets(v: &[i32], k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        for mut rest in subsets(&v[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// The explicit expansion against the antisymmetrizer for every reachable index shape
/// with `k ≤ max_k`, at one sample point (both sides are exact rational operators there).
pub fn minor_routes<F: Family<Rational> + ?Sized>(fam: &F, max_k: usize, seed: i64) -> (usize, Check) {
    let idx = fam.scheme().indices().to_vec();
    let x = samples(1, seed)[0].clone();
    let mut shapes = Vec::new();
    for k in 1..=max_k.min(idx.len()) {
        for up in subsets(&idx, k) {
            for lo in subsets(&idx, k) {
                if formula_shape(&up, &lo).is_some() {
                    shapes.push((up.clone(), lo));
                }
            }
        }
    }
    let bad = crate::par::map(&shapes, |(up, lo)| -> Option<String> {
        let a = minor(fam, up, lo, &x, Route::Antisymmetrizer);
        let b = minor(fam, up, lo, &x, Route::Formula);
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(_), Ok(_)) => Some(format!("upper {up:?} lower {lo:?}")),
            (Err(e), _) | (_, Err(e)) => Some(format!("upper {up:?} lower {lo:?}: {e}")),
        }
    });
    let witness = bad.into_iter().flatten().next();
    (shapes.len(), Check::new("formula = antisymmetrizer", "explicit minor formula", witness))
}

/// Permutation machinery and the tensor operators of the R-matrix calculus.
pub fn omega(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let w = (!omega_quotient_bijective(n)).then(|| format!("p -> p (p')^-1 is not injective on S_{n}"));
        out.push(Check::new(format!("omega bijective, N = {n}"), "bijectivity of p -> p (p')^-1", w));
    }
    let schemes = [IndexScheme::symplectic(1), IndexScheme::orthogonal(3), IndexScheme::symplectic(2), IndexScheme::orthogonal(4)];
    for s in &schemes {
        let nn = s.size();
        let q: TensorOp<Rational> = TensorOp::q_operator(s);
        let w = (!q.compose(&q).expect("two slots").same_as(&q.scale(&int(nn as i64)))).then(|| "Q^2 != NQ".to_string());
        out.push(Check::new(format!("Q^2 = NQ, {}", s.label()), "Q^2 = NQ", w));
        let mut w = None;
        for x in [rat(17, 3), rat(5, 7), int(-4)] {
            let a = TensorOp::r_transposed(s, &x).expect("x != 0");
            let b = TensorOp::r_transposed(s, &(int(nn as i64) - &x)).expect("x != N");
            if !a.compose(&b).expect("two slots").same_as(&TensorOp::identity(nn, 2)) {
                w = Some(format!("R^t({x}) R^t(N - {x}) != 1"));
            }
        }
        out.push(Check::new(format!("R^t inverse, {}", s.label()), "R^t(u) R^t(N-u) = 1", w));
        let mut w = None;
        let mut fact = 1i64;
        for k in 1..=nn.min(4) {
            fact *= k as i64;
            let a: TensorOp<Rational> = TensorOp::antisymmetrizer(s, k).expect("k <= N");
            if !a.compose(&a).expect("slots").same_as(&a.scale(&int(fact))) {
                w = Some(format!("A_{k}^2 != {fact} A_{k}"));
            }
            for sigma in all_positions(k) {
                let ps = TensorOp::permutation(nn, &sigma);
                if !a.compose(&ps).expect("slots").same_as(&a.scale(&int(positional_sign(&sigma) as i64))) {
                    w = Some(format!("A_{k} P_sigma != sgn(sigma) A_{k} for {sigma:?}"));
                }
            }
        }
        out.push(Check::new(format!("antisymmetrizer, {}", s.label()), "A_k^2 = k! A_k, A_k P_sigma = sgn(sigma) A_k", w));
    }
    out
}

/// `S°` for the family of a skew module.
pub fn skew_varpi(sm: &SkewModule) -> Result<Box<dyn Family<Rational>>> {
    Ok(match sm.family() {
        SkewFamily::Eval(f) => Box::new(EvalVarpi::new(f)?),
        SkewFamily::Exact(f) => Box::new(f.varpi()?),
    })
}

/// Structural identities on a symplectic skew module, plus the dimension count and the
/// three Drinfeld routes.
pub fn skew_checks(sm: &SkewModule, seed: i64) -> Result<(Value, Vec<Check>)> {
    let (lambda, mu) = sm.int_weights()?;
    let fam = sm.family();
    let count = count_patterns(&lambda, &mu)?;
    let mut checks = vec![Check::new(
        "dimension = pattern count",
        "basis indexed by trapezium patterns",
        (count != sm.dim() as u128).then(|| format!("dim {} vs {count} patterns", sm.dim())),
    )];
    checks.push(Check::from_result("restriction", "u^-1 coefficient acts as F_ab", check_restriction(sm)));
    checks.push(Check::from_result("comdef", "comatrix times S(u-N+1) is sdet", check_comdef(fam, Comatrix::Minors, seed)));
    checks.push(Check::from_result("symsdet", "symmetry of the Sklyanin determinant", check_symsdet(fam, seed)));
    checks.push(Check::from_result(
        "sdetcirc",
        "sdet S(u) times its image under the antipode map",
        skew_varpi(sm).and_then(|v| check_sdetcirc(fam, &*v, seed)),
    ));
    let xi = find_highest_vector(sm)?;
    let hw = hw_of_vector(sm, &xi)?;
    checks.push(Check::from_result("sdetav", "sdet eigenvalue on the highest vector", check_sdet_eigen(fam, &hw, seed)));
    checks.push(Check::from_result("sklmu", "nested minors on the highest vector", check_sklmu(fam, &hw, &xi, seed)));
    let (results, routes) = drinfeld(&lambda, &mu, Method::All)?;
    checks.extend(routes);
    let summary = json!({
        "lambda": lambda,
        "mu": mu,
        "dim": sm.dim(),
        "patterns": count.to_string(),
        "highest_weight": hw.to_json(),
        "drinfeld": results,
    });
    Ok((summary, checks))
}

/// Irreducibility of a skew module under the twisted Yangian.
pub fn irreducible(sm: &SkewModule) -> Result<(Value, Check)> {
    let irr = check_irreducible(sm)?;
    let w = (!irr.irreducible).then(|| format!("algebra dim {}, commutant dim {}", irr.algebra_dim, irr.commutant_dim));
    Ok((serde_json::to_value(&irr).expect("serializes"), Check::new("irreducible", "irreducibility of the skew representation", w)))
}
