use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::rational::rat;
use crate::exact::{Poly, Rational};
use crate::skew::DrinfeldData;

/// An integer extended by `±∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(x) => Some(x),
            _ => None,
        }
    }

    pub fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::Fin(x) => ExtInt::Fin(-x),
            ExtInt::PosInf => ExtInt::NegInf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(x) => write!(f, "{x}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

/// The middle of three extended integers. With `−∞` present this is the smaller of
/// the other two, with `+∞` the larger.
pub fn mid(a: ExtInt, b: ExtInt, c: ExtInt) -> ExtInt {
    let mut v = [a, b, c];
    v.sort();
    v[1]
}

/// Weakly decreasing, non-positive integer tuple.
pub fn validate_weight(lambda: &[i64]) -> Result<()> {
    if lambda.first().is_some_and(|&x| x > 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidWeight(format!("{lambda:?} must be non-positive and weakly decreasing")));
    }
    Ok(())
}

/// The infinite diagram `Γ(λ)`: row `i` (for `−n ≤ i ≤ n+1`) holds the cells
/// `λ_i ≤ j < λ_{i−1}`, where `λ_{−i} = −λ_i`, `λ_0 = 0` and the entries beyond `±n` are `∓∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    lambda: Vec<i64>,
}

impl Diagram {
    pub fn new(lambda: &[i64]) -> Result<Diagram> {
        validate_weight(lambda)?;
        Ok(Diagram { lambda: lambda.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// Extended entry `λ_i` for any integer `i`.
    pub fn entry(&self, i: i64) -> ExtInt {
        let n = self.n() as i64;
        match i.cmp(&0) {
            Ordering::Equal => ExtInt::Fin(0),
            Ordering::Greater if i > n => ExtInt::NegInf,
            Ordering::Greater => ExtInt::Fin(self.lambda[i as usize - 1]),
            Ordering::Less if -i > n => ExtInt::PosInf,
            Ordering::Less => ExtInt::Fin(-self.lambda[(-i) as usize - 1]),
        }
    }

    /// Rows that may be nonempty.
    pub fn row_range(&self) -> (i64, i64) {
        (-(self.n() as i64), self.n() as i64 + 1)
    }

    /// Half-open interval `[λ_i, λ_{i−1})` of row `i`, or `None` outside the row range.
    pub fn row(&self, i: i64) -> Option<(ExtInt, ExtInt)> {
        let (lo, hi) = self.row_range();
        (lo..=hi).contains(&i).then(|| (self.entry(i), self.entry(i - 1)))
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        self.row(i).is_some_and(|(a, b)| a <= ExtInt::Fin(j) && ExtInt::Fin(j) < b)
    }

    /// Row `i` of the lifted diagram `Γ(λ)^{(p)}`, which is row `i + p` of `Γ(λ)`.
    pub fn shifted_row(&self, i: i64, p: i64) -> Option<(ExtInt, ExtInt)> {
        self.row(i + p)
    }

    /// Render the lifted diagram as text. Rows are printed top to bottom; `|` marks the
    /// boundary between columns `−1` and `0`, and `<`/`>` mark rays.
    pub fn render(&self, shift: i64) -> String {
        let (lo, hi) = self.row_range();
        let reach = self.lambda.iter().map(|x| x.abs()).max().unwrap_or(0) + 3;
        let cols = -reach..reach;
        let mut out = String::new();
        out.push_str(&format!("{:>5}  {}\n", "i\\j", ruler(-reach, reach)));
        for i in lo - shift..=hi - shift {
            let (a, b) = self.shifted_row(i, shift).expect("row in range");
            let mut line = String::new();
            line.push(if a == ExtInt::NegInf { '<' } else { ' ' });
            for j in cols.clone() {
                if j == 0 {
                    line.push('|');
                }
                let inside = a <= ExtInt::Fin(j) && ExtInt::Fin(j) < b;
                line.push(if inside { '#' } else { '.' });
            }
            line.push(if b == ExtInt::PosInf { '>' } else { ' ' });
            out.push_str(&format!("{i:>5} {}\n", line.trim_end()));
        }
        out
    }
}

fn ruler(from: i64, to: i64) -> String {
    let mut s = String::new();
    for j in from..to {
        if j == 0 {
            s.push('|');
        }
        s.push(if j % 5 == 0 { char::from_digit((j.unsigned_abs() / 5 % 10) as u32, 10).unwrap_or('+') } else { ' ' });
    }
    s
}

/// A cell `(i, j)`: row `i`, column `j`.
pub type Cell = (i64, i64);

pub fn content(cell: Cell) -> i64 {
    cell.1 - cell.0
}

/// The finite set `Γ(μ) ∩ Γ(λ)^{(k−1)}`, sorted by row then column.
pub fn intersect_shifted(mu: &Diagram, lambda: &Diagram, k: usize) -> Result<Vec<Cell>> {
    if k == 0 {
        return Err(Error::OutOfRange("k starts at 1".into()));
    }
    let p = k as i64 - 1;
    let (lo, hi) = mu.row_range();
    let mut cells = Vec::new();
    for i in lo..=hi {
        let (Some((a1, b1)), Some((a2, b2))) = (mu.row(i), lambda.shifted_row(i, p)) else {
            continue;
        };
        let (a, b) = (a1.max(a2), b1.min(b2));
        if a >= b {
            continue;
        }
        match (a, b) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => cells.extend((a..b).map(|j| (i, j))),
            _ => return Err(Error::InfiniteIntersection(i)),
        }
    }
    Ok(cells)
}

/// `P_k(u) = Π (u + c(α) + 1/2)` over the cells of `Γ(μ) ∩ Γ(λ)^{(k−1)}`, for `k = 1..n−m`.
pub fn drinfeld_diagram(lambda: &[i64], mu: &[i64]) -> Result<DrinfeldData> {
    let (n, m) = (lambda.len(), mu.len());
    if m >= n {
        return Err(Error::OutOfRange(format!("need m < n, got m = {m}, n = {n}")));
    }
    let (dl, dm) = (Diagram::new(lambda)?, Diagram::new(mu)?);
    let polys = (1..=n - m)
        .map(|k| {
            let cells = intersect_shifted(&dm, &dl, k)?;
            let roots: Vec<Rational> = cells.iter().map(|&c| rat(-2 * content(c) - 1, 2)).collect();
            Ok(Poly::from_roots(&roots))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DrinfeldData::new(polys))
}

/// `(u + a)(u + a + 1)⋯(u + b)`, empty when `b < a`.
fn rising(a: &Rational, b: &Rational) -> Poly {
    let mut p = Poly::one();
    let mut x = a.clone();
    while &x <= b {
        p = &p * &Poly::linear(&-x.clone());
        x += Rational::from_integer(1.into());
    }
    p
}

/// Closed forms for the evaluation module `V(λ)` (`m = 0`):
/// `P_1 = (u+λ_1−1/2)⋯(u−3/2) · (u+1/2)⋯(u−λ_1−1/2)` and
/// `P_k = (u+λ_k−1/2)⋯(u+λ_{k−1}−3/2)`. At `λ_1 = 0` both ranges are read as empty.
pub fn evaluation_drinfeld(lambda: &[i64]) -> Result<DrinfeldData> {
    validate_weight(lambda)?;
    let h = |p: i64| rat(p, 2);
    let mut polys = Vec::new();
    if let Some(&l1) = lambda.first() {
        let first = &rising(&h(2 * l1 - 1), &h(-3)) * &rising(&h(1), &h(-2 * l1 - 1));
        polys.push(first);
        for w in lambda.windows(2) {
            polys.push(rising(&h(2 * w[1] - 1), &h(2 * w[0] - 3)));
        }
    }
    Ok(DrinfeldData::new(polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factor_linear;

    fn roots(p: &Poly) -> Vec<Rational> {
        factor_linear(p).unwrap()
    }

    fn halves(v: &[i64]) -> Vec<Rational> {
        let mut r: Vec<Rational> = v.iter().map(|&x| rat(x, 2)).collect();
        r.sort();
        r
    }

    #[test]
    fn rows_of_small_diagram() {
        let d = Diagram::new(&[-4, -7]).unwrap();
        assert_eq!(d.row(1), Some((ExtInt::Fin(-4), ExtInt::Fin(0))));
        assert_eq!(d.row(2), Some((ExtInt::Fin(-7), ExtInt::Fin(-4))));
        assert_eq!(d.row(0), Some((ExtInt::Fin(0), ExtInt::Fin(4))));
        assert_eq!(d.row(-1), Some((ExtInt::Fin(4), ExtInt::Fin(7))));
        assert_eq!(d.row(3), Some((ExtInt::NegInf, ExtInt::Fin(-7))));
        assert_eq!(d.row(-2), Some((ExtInt::Fin(7), ExtInt::PosInf)));
        assert_eq!(d.row(4), None);
        let e = Diagram::new(&[]).unwrap();
        assert_eq!(e.row(1), Some((ExtInt::NegInf, ExtInt::Fin(0))));
        assert_eq!(e.row(0), Some((ExtInt::Fin(0), ExtInt::PosInf)));
        assert_eq!(content((0, 0)), 0);
    }

    #[test]
    fn mid_with_infinities() {
        assert_eq!(mid(ExtInt::Fin(-3), ExtInt::NegInf, ExtInt::Fin(-1)), ExtInt::Fin(-3));
        assert_eq!(mid(ExtInt::Fin(-3), ExtInt::PosInf, ExtInt::Fin(-1)), ExtInt::Fin(-1));
        assert_eq!(mid(ExtInt::Fin(2), ExtInt::Fin(0), ExtInt::Fin(1)), ExtInt::Fin(1));
    }

    #[test]
    fn intersection_cells_of_worked_example() {
        let l = Diagram::new(&[-2, -8, -10, -13]).unwrap();
        let m = Diagram::new(&[-4, -7]).unwrap();
        let mut c1 = intersect_shifted(&m, &l, 1).unwrap();
        let mut want1 = vec![
            (3, -10), (3, -9), (2, -7), (2, -6), (2, -5), (1, -2), (1, -1),
            (0, 0), (0, 1), (-1, 4), (-1, 5), (-1, 6), (-2, 8), (-2, 9),
        ];
        c1.sort();
        want1.sort();
        assert_eq!(c1, want1);
        let mut c2 = intersect_shifted(&m, &l, 2).unwrap();
        let mut want2 = vec![(3, -13), (3, -12), (3, -11), (1, -4), (1, -3), (-2, 7)];
        c2.sort();
        want2.sort();
        assert_eq!(c2, want2);
    }

    #[test]
    fn drinfeld_of_worked_example() {
        let d = drinfeld_diagram(&[-2, -8, -10, -13], &[-4, -7]).unwrap();
        assert_eq!(roots(&d.polys[0]), halves(&[25, 23, 17, 15, 13, 5, 3, -1, -3, -11, -13, -15, -21, -23]));
        assert_eq!(roots(&d.polys[1]), halves(&[31, 29, 27, 9, 7, -19]));
        assert!(d.p1_symmetric());
    }

    #[test]
    fn evaluation_closed_forms() {
        let d = evaluation_drinfeld(&[-1, -2]).unwrap();
        assert_eq!(roots(&d.polys[0]), halves(&[3, -1]));
        assert_eq!(roots(&d.polys[1]), halves(&[5]));
        assert_eq!(evaluation_drinfeld(&[0]).unwrap().polys[0], Poly::one());
        assert_eq!(drinfeld_diagram(&[-1, -2], &[]).unwrap(), d);
    }

    #[test]
    fn infinite_intersection_is_reported() {
        let l = Diagram::new(&[-1]).unwrap();
        let m = Diagram::new(&[]).unwrap();
        // k = 2 exceeds n − m: the left rays of Γ(∅) and Γ(λ)^{(1)} meet in row 1
        assert_eq!(intersect_shifted(&m, &l, 2), Err(Error::InfiniteIntersection(1)));
        assert!(intersect_shifted(&m, &l, 1).unwrap().len() == 2);
    }

    #[test]
    fn render_marks_rays_and_origin() {
        let d = Diagram::new(&[-4, -7]).unwrap();
        let text = d.render(0);
        assert_eq!(text.lines().count(), 7);
        let row1 = text.lines().find(|l| l.trim_start().starts_with("1 ")).unwrap();
        assert!(row1.contains("####|"));
        assert!(text.lines().last().unwrap().contains('<'));
    }
}
