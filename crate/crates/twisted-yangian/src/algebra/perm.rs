use crate::error::{Error, Result};

/// A bijection of an ordered ground sequence `c_1 < ... < c_N`.
///
/// `images[k]` is the position of `p(c_{k+1})` in the ground sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    ground: Vec<i32>,
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(ground: &[i32]) -> Perm {
        Perm { ground: ground.to_vec(), images: (0..ground.len()).collect() }
    }

    /// Positional permutation of `0..n` over the ground `1..n`.
    pub fn from_positions(images: Vec<usize>) -> Result<Perm> {
        let ground: Vec<i32> = (1..=images.len() as i32).collect();
        Perm::on_ground(ground, images)
    }

    pub fn on_ground(ground: Vec<i32>, images: Vec<usize>) -> Result<Perm> {
        if ground.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ShapeMismatch("ground sequence must be increasing".into()));
        }
        let mut seen = vec![false; ground.len()];
        if images.len() != ground.len() {
            return Err(Error::ShapeMismatch("image length differs from ground".into()));
        }
        for &i in &images {
            if i >= ground.len() || seen[i] {
                return Err(Error::ShapeMismatch("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Perm { ground, images })
    }

    /// Permutation given by its values `(p(c_1), ..., p(c_N))`.
    pub fn from_values(ground: &[i32], values: &[i32]) -> Result<Perm> {
        let images = values
            .iter()
            .map(|v| ground.iter().position(|g| g == v).ok_or(Error::InvalidIndex(*v)))
            .collect::<Result<Vec<_>>>()?;
        Perm::on_ground(ground.to_vec(), images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn ground(&self) -> &[i32] {
        &self.ground
    }

    pub fn positions(&self) -> &[usize] {
        &self.images
    }

    pub fn values(&self) -> Vec<i32> {
        self.images.iter().map(|&i| self.ground[i]).collect()
    }

    /// `(self ∘ o)(k) = self(o(k))`
    pub fn compose(&self, o: &Perm) -> Perm {
        Perm { ground: self.ground.clone(), images: o.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i] = k;
        }
        Perm { ground: self.ground.clone(), images: inv }
    }

    pub fn sign(&self) -> i32 {
        positional_sign(&self.images)
    }

    /// All permutations of the ground, in lexicographic order of images.
    pub fn all(ground: &[i32]) -> Vec<Perm> {
        all_positions(ground.len())
            .into_iter()
            .map(|images| Perm { ground: ground.to_vec(), images })
            .collect()
    }
}

pub fn positional_sign(images: &[usize]) -> i32 {
    let mut seen = vec![false; images.len()];
    let mut sign = 1;
    for s in 0..images.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = images[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Every permutation of `0..n` in lexicographic order.
pub fn all_positions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Image of an ordered pair of distinct elements of a ground set `g` (sorted, |g| ≥ 3).
fn ordpair(g: &[usize], x: usize, y: usize) -> (usize, usize) {
    let k = g.len();
    let (top, next, third) = (g[k - 1], g[k - 2], g[k - 3]);
    if x != top && y != top {
        (y, x)
    } else if y == top && x != next {
        (next, x)
    } else if x == top && y != next {
        (y, next)
    } else {
        (next, third)
    }
}

/// The map `p ↦ p'` on positional permutations: pairs `(p_1, p_N)` are rewritten
/// outside-in on a shrinking ground set, and `p'_N` is always the top element.
pub fn omega_positions(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut out = vec![usize::MAX; n];
    out[n - 1] = n - 1;
    let mut ground: Vec<usize> = (0..n).collect();
    let (mut lo, mut hi) = (0, n - 1);
    let (mut olo, mut ohi) = (0, n - 2);
    while ground.len() > 2 {
        let (x, y) = ordpair(&ground, p[lo], p[hi]);
        out[olo] = x;
        out[ohi] = y;
        ground.retain(|&c| c != p[lo] && c != p[hi]);
        lo += 1;
        hi -= 1;
        olo += 1;
        ohi = ohi.wrapping_sub(1);
    }
    if ground.len() == 2 {
        out[olo] = ground[0];
    }
    debug_assert!(out.iter().all(|&v| v < n));
    out
}

pub fn omega(p: &Perm) -> Perm {
    Perm { ground: p.ground.clone(), images: omega_positions(&p.images) }
}

/// Whether `p ↦ p·(p')^{-1}` is injective on `S_N`.
pub fn omega_quotient_bijective(n: usize) -> bool {
    let ground: Vec<i32> = (1..=n as i32).collect();
    let mut seen = std::collections::HashSet::new();
    Perm::all(&ground).iter().all(|p| seen.insert(p.compose(&omega(p).inverse())))
}
