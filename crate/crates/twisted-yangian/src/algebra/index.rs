use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Orthogonal,
    Symplectic,
}

impl Case {
    pub fn parse(s: &str) -> Result<Case> {
        match s {
            "o" | "orthogonal" => Ok(Case::Orthogonal),
            "sp" | "symplectic" => Ok(Case::Symplectic),
            _ => Err(Error::Parse(format!("unknown case {s:?}"))),
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Case::Orthogonal => "o",
            Case::Symplectic => "sp",
        }
    }
}

/// Matrix indices closed under negation, with the sign form θ of the case.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexScheme {
    case: Case,
    indices: Vec<i32>,
    neg: Vec<usize>,
    offset: i32,
    lookup: Vec<Option<usize>>,
}

impl IndexScheme {
    /// The full scheme for `g_N`: indices `-n..n`, with 0 iff `N` is odd.
    pub fn new(case: Case, big_n: usize) -> Result<IndexScheme> {
        if big_n == 0 {
            return Err(Error::OutOfRange("N must be positive".into()));
        }
        if case == Case::Symplectic && big_n % 2 == 1 {
            return Err(Error::OutOfRange(format!("symplectic N must be even, got {big_n}")));
        }
        let n = (big_n / 2) as i32;
        let indices: Vec<i32> = (-n..=n).filter(|&i| i != 0 || big_n % 2 == 1).collect();
        IndexScheme::from_indices(case, indices)
    }

    pub fn symplectic(n: usize) -> IndexScheme {
        IndexScheme::new(Case::Symplectic, 2 * n).expect("valid")
    }

    pub fn orthogonal(big_n: usize) -> IndexScheme {
        IndexScheme::new(Case::Orthogonal, big_n).expect("valid")
    }

    /// Scheme on an arbitrary negation-closed index set, sorted ascending.
    pub fn from_indices(case: Case, mut indices: Vec<i32>) -> Result<IndexScheme> {
        indices.sort();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::OutOfRange("empty index set".into()));
        }
        if case == Case::Symplectic && indices.contains(&0) {
            return Err(Error::InvalidIndex(0));
        }
        let offset = indices.iter().map(|i| i.abs()).max().unwrap_or(0);
        let mut lookup = vec![None; (2 * offset + 1) as usize];
        for (p, &i) in indices.iter().enumerate() {
            lookup[(i + offset) as usize] = Some(p);
        }
        let mut neg = Vec::with_capacity(indices.len());
        for &i in &indices {
            let p = lookup[(-i + offset) as usize].ok_or(Error::InvalidIndex(-i))?;
            neg.push(p);
        }
        Ok(IndexScheme { case, indices, neg, offset, lookup })
    }

    /// Restriction to a negation-closed subset.
    pub fn restrict(&self, subset: &[i32]) -> Result<IndexScheme> {
        for &i in subset {
            self.pos(i)?;
        }
        IndexScheme::from_indices(self.case, subset.to_vec())
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }

    /// Number of positive indices.
    pub fn half_rank(&self) -> usize {
        self.indices.iter().filter(|&&i| i > 0).count()
    }

    pub fn indices(&self) -> &[i32] {
        &self.indices
    }

    pub fn index(&self, pos: usize) -> i32 {
        self.indices[pos]
    }

    pub fn pos(&self, i: i32) -> Result<usize> {
        if i.abs() > self.offset {
            return Err(Error::InvalidIndex(i));
        }
        self.lookup[(i + self.offset) as usize].ok_or(Error::InvalidIndex(i))
    }

    pub fn contains(&self, i: i32) -> bool {
        self.pos(i).is_ok()
    }

    /// Position of `-index(p)`.
    pub fn neg(&self, p: usize) -> usize {
        self.neg[p]
    }

    /// θ on positions.
    pub fn theta_pos(&self, p: usize, q: usize) -> i32 {
        match self.case {
            Case::Orthogonal => 1,
            Case::Symplectic => self.indices[p].signum() * self.indices[q].signum(),
        }
    }

    pub fn theta(&self, i: i32, j: i32) -> Result<i32> {
        Ok(self.theta_pos(self.pos(i)?, self.pos(j)?))
    }

    /// Entrywise `(A^t)_{ij} = θ_ij A_{-j,-i}` for a matrix indexed by positions.
    pub fn transpose_t<T: Clone + std::ops::Neg<Output = T>>(&self, a: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
        let n = self.size();
        if a.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("expected a {n}x{n} matrix")));
        }
        Ok((0..n)
            .map(|p| {
                (0..n)
                    .map(|q| {
                        let v = a[self.neg(q)][self.neg(p)].clone();
                        if self.theta_pos(p, q) < 0 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect())
    }

    pub fn label(&self) -> String {
        format!("{}_{}", self.case.short(), self.size())
    }
}

impl fmt::Display for IndexScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_sets() {
        assert_eq!(IndexScheme::symplectic(2).indices(), &[-2, -1, 1, 2]);
        assert_eq!(IndexScheme::orthogonal(3).indices(), &[-1, 0, 1]);
        assert_eq!(IndexScheme::orthogonal(4).indices(), &[-2, -1, 1, 2]);
        assert!(IndexScheme::new(Case::Symplectic, 3).is_err());
    }

    #[test]
    fn theta_values() {
        let sp = IndexScheme::symplectic(2);
        assert_eq!(sp.theta(1, -1).unwrap(), -1);
        assert_eq!(sp.theta(-2, -1).unwrap(), 1);
        let o = IndexScheme::orthogonal(3);
        assert_eq!(o.theta(1, -1).unwrap(), 1);
        assert_eq!(o.theta(0, 1).unwrap(), 1);
        assert!(sp.theta(0, 1).is_err());
    }

    #[test]
    fn transposition() {
        let sp = IndexScheme::symplectic(1);
        // e_{1,1} -> e_{-1,-1}
        let a = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(sp.transpose_t(&a).unwrap(), vec![vec![1, 0], vec![0, 0]]);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(sp.transpose_t(&id).unwrap(), id);
        let b = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(sp.transpose_t(&sp.transpose_t(&b).unwrap()).unwrap(), b);
    }
}
