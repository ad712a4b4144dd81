use std::collections::HashMap;

use serde::Serialize;

use super::diagram::{mid, validate_weight, ExtInt};
use crate::error::{Error, Result};

/// A trapezium pattern with top row `λ` and bottom row `μ`. `rows[k − m]` is the row
/// `λ_{k·}` (so `rows[0] = μ` and `rows[n − m] = λ`), and `primed[k − m − 1]` is `λ'_{k·}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TrapPattern {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<i64>>,
    pub primed: Vec<Vec<i64>>,
}

impl TrapPattern {
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k - self.m]
    }

    pub fn primed_row(&self, k: usize) -> &[i64] {
        &self.primed[k - self.m - 1]
    }

    /// Both betweenness chains for every `k = m+1..n`.
    pub fn is_valid(&self) -> bool {
        (self.m + 1..=self.n).all(|k| {
            let (r, p, below) = (self.row(k), self.primed_row(k), self.row(k - 1));
            r.len() == k && p.len() == k && below.len() == k - 1 && chains_hold(r, p, below)
        })
    }

    /// `w_k = 2Σλ'_{ki} − Σλ_{ki} − Σλ_{k−1,i}`, for `k = m+1..n`.
    pub fn weight(&self) -> Vec<i64> {
        (self.m + 1..=self.n)
            .map(|k| 2 * self.primed_row(k).iter().sum::<i64>() - self.row(k).iter().sum::<i64>() - self.row(k - 1).iter().sum::<i64>())
            .collect()
    }
}

fn chains_hold(row: &[i64], primed: &[i64], below: &[i64]) -> bool {
    let k = row.len();
    (0..k).all(|i| {
        let upper = if i == 0 { 0 } else { row[i - 1] };
        primed[i] <= upper && primed[i] >= row[i]
    }) && (0..k).all(|i| {
        let upper = if i == 0 { 0 } else { below[i - 1] };
        primed[i] <= upper && (i == k - 1 || primed[i] >= below[i])
    })
}

fn check_shapes(lambda: &[i64], mu: &[i64]) -> Result<()> {
    validate_weight(lambda)?;
    validate_weight(mu)?;
    if mu.len() >= lambda.len() {
        return Err(Error::OutOfRange(format!("need m < n, got m = {}, n = {}", mu.len(), lambda.len())));
    }
    Ok(())
}

/// `μ_j` extended by `0` for `j ≤ 0` and `−∞` for `j > m` (1-based).
pub fn ext(v: &[i64], j: i64) -> ExtInt {
    if j <= 0 {
        ExtInt::Fin(0)
    } else if j as usize > v.len() {
        ExtInt::NegInf
    } else {
        ExtInt::Fin(v[j as usize - 1])
    }
}

/// The first inequality that makes the set of patterns from `top` down to `mu` empty,
/// as `(kind, i)`: kind 0 is `μ_i ≥ λ_{i+n−m}`, kind 1 is `λ_i ≥ μ_{i+n−m}` (1-based `i`).
pub fn violated_inequality(top: &[i64], mu: &[i64]) -> Option<(u8, usize)> {
    let (n, m) = (top.len(), mu.len());
    let d = (n - m) as i64;
    for i in 1..=m {
        if ExtInt::Fin(mu[i - 1]) < ext(top, i as i64 + d) {
            return Some((0, i));
        }
    }
    for i in 1..=n {
        if ExtInt::Fin(top[i - 1]) < ext(mu, i as i64 + d) {
            return Some((1, i));
        }
    }
    None
}

/// Whether `V(λ)^+_μ` is nonzero.
pub fn is_nonempty(lambda: &[i64], mu: &[i64]) -> bool {
    violated_inequality(lambda, mu).is_none()
}

/// All `λ'` rows compatible with `row` on the first chain.
fn primed_choices(row: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for i in 0..row.len() {
        let upper = if i == 0 { 0 } else { row[i - 1] };
        out = out
            .into_iter()
            .flat_map(|p| {
                (row[i]..=upper).rev().map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// All rows of length `k − 1` interlacing `primed` on the second chain.
fn below_choices(primed: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for i in 0..primed.len().saturating_sub(1) {
        out = out
            .into_iter()
            .flat_map(|p| {
                (primed[i + 1]..=primed[i]).rev().map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Completions `(λ'_{k·}, λ_{k−1,·})` of a row `λ_{k·}` that still reach `mu`.
fn steps(row: &[i64], mu: &[i64], prune: bool) -> Vec<(Vec<i64>, Vec<i64>)> {
    let last = row.len() - 1 == mu.len();
    let mut out = Vec::new();
    for p in primed_choices(row) {
        if last {
            if chains_hold(row, &p, mu) {
                out.push((p, mu.to_vec()));
            }
            continue;
        }
        for b in below_choices(&p) {
            if !prune || is_nonempty(&b, mu) {
                out.push((p.clone(), b));
            }
        }
    }
    out
}

fn extend(row: &[i64], mu: &[i64], prune: bool) -> Vec<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    if row.len() == mu.len() {
        return if row == mu { vec![(vec![mu.to_vec()], Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for (p, b) in steps(row, mu, prune) {
        for (mut rows, mut primed) in extend(&b, mu, prune) {
            rows.push(row.to_vec());
            primed.push(p.clone());
            out.push((rows, primed));
        }
    }
    out
}

fn enumerate_with(lambda: &[i64], mu: &[i64], prune: bool) -> Result<Vec<TrapPattern>> {
    check_shapes(lambda, mu)?;
    let (n, m) = (lambda.len(), mu.len());
    if prune && !is_nonempty(lambda, mu) {
        return Ok(Vec::new());
    }
    let first = steps(lambda, mu, prune);
    let parts = crate::par::map(&first, |(p, b)| {
        extend(b, mu, prune)
            .into_iter()
            .map(|(mut rows, mut primed)| {
                rows.push(lambda.to_vec());
                primed.push(p.clone());
                TrapPattern { n, m, rows, primed }
            })
            .collect::<Vec<_>>()
    });
    let mut all: Vec<TrapPattern> = parts.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// All trapezium patterns from `λ` down to `μ`, sorted.
pub fn enumerate_patterns(lambda: &[i64], mu: &[i64]) -> Result<Vec<TrapPattern>> {
    enumerate_with(lambda, mu, true)
}

/// Enumeration with no pruning by the nonemptiness criterion.
pub fn enumerate_patterns_unpruned(lambda: &[i64], mu: &[i64]) -> Result<Vec<TrapPattern>> {
    enumerate_with(lambda, mu, false)
}

/// Number of patterns, memoized on intermediate rows.
pub fn count_patterns(lambda: &[i64], mu: &[i64]) -> Result<u128> {
    check_shapes(lambda, mu)?;
    fn go(row: &[i64], mu: &[i64], memo: &mut HashMap<Vec<i64>, u128>) -> u128 {
        if row.len() == mu.len() {
            return u128::from(row == mu);
        }
        if let Some(&c) = memo.get(row) {
            return c;
        }
        let c = steps(row, mu, true).iter().map(|(_, b)| go(b, mu, memo)).sum();
        memo.insert(row.to_vec(), c);
        c
    }
    if !is_nonempty(lambda, mu) {
        return Ok(0);
    }
    Ok(go(lambda, mu, &mut HashMap::new()))
}

/// The pattern `Λ₀`: `λ_{ki} = mid{λ_i, μ_{i+k−m}, μ_{i+m−k}}` and
/// `λ'_{ki} = mid{λ_i, μ_{i+k−m−1}, μ_{i+m−k}}`.
pub fn lambda0(lambda: &[i64], mu: &[i64]) -> Result<TrapPattern> {
    check_shapes(lambda, mu)?;
    if let Some((kind, i)) = violated_inequality(lambda, mu) {
        return Err(Error::EmptySkewSpace(inequality_text(kind, i, lambda.len() - mu.len())));
    }
    let (n, m) = (lambda.len(), mu.len());
    let entry = |i: usize, a: i64, b: i64| -> i64 {
        mid(ExtInt::Fin(lambda[i - 1]), ext(mu, a), ext(mu, b)).finite().expect("λ_i is finite")
    };
    let (mi, mut rows, mut primed) = (m as i64, vec![mu.to_vec()], Vec::new());
    for k in m + 1..=n {
        let ki = k as i64;
        primed.push((1..=k).map(|i| entry(i, i as i64 + ki - mi - 1, i as i64 + mi - ki)).collect());
        rows.push((1..=k).map(|i| entry(i, i as i64 + ki - mi, i as i64 + mi - ki)).collect());
    }
    Ok(TrapPattern { n, m, rows, primed })
}

pub fn inequality_text(kind: u8, i: usize, d: usize) -> String {
    match kind {
        0 => format!("mu_i >= lambda_(i+n-m) fails at i = {i} (i+n-m = {})", i + d),
        _ => format!("lambda_i >= mu_(i+n-m) fails at i = {i} (i+n-m = {})", i + d),
    }
}

/// The order `w ⪯ w'`: `w' − w` is a non-negative integral combination of the positive roots
/// `−2ε_k` and `±ε_i − ε_j` (`i < j`). Equivalently every tail sum `Σ_{i≥j}(w'−w)_i` with
/// `j ≥ 2` is `≤ 0`, and the full sum is `≤ 0` and even.
pub fn weight_leq(w: &[i64], w2: &[i64]) -> bool {
    assert_eq!(w.len(), w2.len());
    let d: Vec<i64> = w2.iter().zip(w).map(|(a, b)| a - b).collect();
    let mut tail = 0;
    for (j, x) in d.iter().enumerate().rev() {
        tail += x;
        if tail > 0 {
            return false;
        }
        if j == 0 && tail % 2 != 0 {
            return false;
        }
    }
    true
}
