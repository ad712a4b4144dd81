//! Operator chains on `(C^N)^{⊗k} ⊗ V`, applied column-style to one tensor basis vector.

use std::collections::HashMap;

use super::family::Grid;
use crate::algebra::IndexScheme;
use crate::error::{Error, Result};
use crate::exact::{Mat, Rational, Scalar};

const BITS: u32 = 5;
const MASK: u64 = (1 << BITS) - 1;
pub const MAX_SLOTS: usize = 12;

pub fn encode(t: &[usize]) -> u64 {
    t.iter().enumerate().fold(0, |acc, (s, &v)| acc | ((v as u64) << (BITS * s as u32)))
}

#[inline]
pub fn slot(t: u64, s: usize) -> usize {
    ((t >> (BITS * s as u32)) & MASK) as usize
}

#[inline]
fn with_slot(t: u64, s: usize, v: usize) -> u64 {
    (t & !(MASK << (BITS * s as u32))) | ((v as u64) << (BITS * s as u32))
}

pub enum Step<'a, K> {
    /// `S` in slot `slot` at the argument the grid was built for.
    S { slot: usize, grid: &'a Grid<K> },
    /// `R^t_{ab}(x) = 1 − Q_{ab}/x`, given `1/x`.
    Rt { a: usize, b: usize, inv: K },
    /// `R_{ab}(x) = 1 − P_{ab}/x`, given `1/x`.
    R { a: usize, b: usize, inv: K },
}

/// Map from tensor basis tuples to module blocks.
#[derive(Clone, Debug)]
pub struct State<K> {
    slots: usize,
    map: HashMap<u64, Mat<K>>,
}

fn accumulate<K: Scalar>(map: &mut HashMap<u64, Mat<K>>, t: u64, b: Mat<K>) {
    match map.get_mut(&t) {
        Some(e) => e.add_assign(&b),
        None => {
            map.insert(t, b);
        }
    }
}

impl<K: Scalar> State<K> {
    pub fn basis(scheme: &IndexScheme, tuple: &[usize], block: Mat<K>) -> Result<State<K>> {
        if tuple.len() > MAX_SLOTS || scheme.size() > MASK as usize + 1 {
            return Err(Error::OutOfRange(format!("at most {MAX_SLOTS} tensor slots over N ≤ {}", MASK + 1)));
        }
        let mut map = HashMap::new();
        map.insert(encode(tuple), block);
        Ok(State { slots: tuple.len(), map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, tuple: &[usize]) -> Option<&Mat<K>> {
        self.map.get(&encode(tuple))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &Mat<K>)> {
        let k = self.slots;
        self.map.iter().map(move |(t, b)| ((0..k).map(|s| slot(*t, s)).collect(), b))
    }

    /// Apply steps in order (the first step acts first).
    pub fn apply(mut self, scheme: &IndexScheme, steps: &[Step<'_, K>]) -> State<K> {
        for step in steps {
            self.map = match step {
                Step::S { slot: s, grid } => self.apply_s(*s, grid),
                Step::Rt { a, b, inv } => self.apply_rt(scheme, *a, *b, inv),
                Step::R { a, b, inv } => self.apply_r(*a, *b, inv),
            };
            self.map.retain(|_, b| !b.is_zero());
        }
        self
    }

    fn apply_s(&self, s: usize, grid: &Grid<K>) -> HashMap<u64, Mat<K>> {
        let mut out = HashMap::with_capacity(self.map.len() * 2);
        for (&t, blk) in &self.map {
            let j = slot(t, s);
            for i in 0..grid.size() {
                let op = grid.entry(i, j);
                if op.is_zero() {
                    continue;
                }
                let r = op.apply(blk);
                if !r.is_zero() {
                    accumulate(&mut out, with_slot(t, s, i), r);
                }
            }
        }
        out
    }

    fn apply_rt(&self, scheme: &IndexScheme, a: usize, b: usize, inv: &K) -> HashMap<u64, Mat<K>> {
        let mut out = self.map.clone();
        for (&t, blk) in &self.map {
            let q = slot(t, b);
            if slot(t, a) != scheme.neg(q) {
                continue;
            }
            for r in 0..scheme.size() {
                let c = if scheme.theta_pos(q, r) > 0 { inv.neg() } else { inv.clone() };
                let t2 = with_slot(with_slot(t, a, scheme.neg(r)), b, r);
                accumulate(&mut out, t2, blk.scale(&c));
            }
        }
        out
    }

    fn apply_r(&self, a: usize, b: usize, inv: &K) -> HashMap<u64, Mat<K>> {
        let mut out = self.map.clone();
        let c = inv.neg();
        for (&t, blk) in &self.map {
            let (x, y) = (slot(t, a), slot(t, b));
            let t2 = with_slot(with_slot(t, a, y), b, x);
            accumulate(&mut out, t2, blk.scale(&c));
        }
        out
    }

    /// Coefficient at `e_upper` after the antisymmetrizer: `Σ_σ sgn σ · state[upper∘σ]`.
    pub fn antisymmetrized(&self, upper: &[usize], rows: usize, cols: usize) -> Mat<K> {
        let mut acc = Mat::zeros(rows, cols);
        let mut seen = upper.to_vec();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return acc;
        }
        for sigma in crate::algebra::perm::all_positions(upper.len()) {
            let t: Vec<usize> = sigma.iter().map(|&k| upper[k]).collect();
            if let Some(b) = self.get(&t) {
                if crate::algebra::perm::positional_sign(&sigma) > 0 {
                    acc.add_assign(b);
                } else {
                    acc.add_assign(&b.neg());
                }
            }
        }
        acc
    }

    /// First tuple whose blocks differ, with the differing entry.
    pub fn first_difference(&self, o: &State<K>) -> Option<(Vec<usize>, usize, usize)> {
        let k = self.slots;
        let decode = |t: u64| (0..k).map(|s| slot(t, s)).collect::<Vec<_>>();
        let mut keys: Vec<u64> = self.map.keys().chain(o.map.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for t in keys {
            match (self.map.get(&t), o.map.get(&t)) {
                (Some(a), Some(b)) => {
                    if let Some((r, c)) = a.first_difference(b) {
                        return Some((decode(t), r, c));
                    }
                }
                (Some(a), None) | (None, Some(a)) => {
                    let (r, c) = a.first_difference(&Mat::zeros(a.rows(), a.cols())).expect("stored blocks are nonzero");
                    return Some((decode(t), r, c));
                }
                (None, None) => {}
            }
        }
        None
    }

    /// Plain coefficient at a tuple.
    pub fn coefficient(&self, tuple: &[usize], rows: usize, cols: usize) -> Mat<K> {
        self.get(tuple).cloned().unwrap_or_else(|| Mat::zeros(rows, cols))
    }
}

pub fn rational_sign<K: Scalar>(s: i32) -> K {
    K::from_rational(&Rational::from_integer(s.into()))
}
