use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Partition, Rational};
use crate::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        RationalMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if piv != col {
                for c in 0..n {
                    a.swap(piv * n + c, col * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] / &p;
                for c in col..n {
                    let v = &f * &a[col * n + c];
                    a[r * n + c] -= v;
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        for row in self.row_iter() {
            space.insert(row);
        }
        space.rank()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Rank over the rationals.
pub fn matrix_rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// Scales a rational row to a primitive integer row (content one).
fn primitive_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * &lcm).to_integer()).collect();
    make_primitive(ints)
}

fn make_primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
    row
}

/// Incrementally maintained row echelon basis over the integers.
///
/// Rows are reduced fraction-free (cross-multiplication against each pivot)
/// and divided by their content after every step, which keeps entries at the
/// size of the original data instead of growing multiplicatively.
#[derive(Debug, Clone)]
pub struct RowSpace {
    width: usize,
    // (pivot column, primitive row with nonzero entry at the pivot)
    basis: Vec<(usize, Vec<BigInt>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Inserts a row; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.width, "row width mismatch");
        let mut v = primitive_integer_row(row);
        for (pc, b) in &self.basis {
            if v[*pc].is_zero() {
                continue;
            }
            let a = b[*pc].clone();
            let f = v[*pc].clone();
            for (x, y) in v.iter_mut().zip(b) {
                *x = &*x * &a - &f * y;
            }
            v = make_primitive(v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pc) => {
                if v[pc].is_negative() {
                    v.iter_mut().for_each(|x| *x = -&*x);
                }
                self.basis.push((pc, v));
                true
            }
            None => false,
        }
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.width
    }
}

/// Jordan block sizes of a nilpotent matrix, as a partition of its dimension.
///
/// The number of blocks of size at least `s` is `rank(N^{s-1}) - rank(N^s)`.
pub fn jordan_type(n: &RationalMatrix) -> Result<Partition> {
    if !n.is_square() {
        return Err(Error::NotSquare {
            rows: n.rows(),
            cols: n.cols(),
        });
    }
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut power = RationalMatrix::identity(dim);
    for _ in 0..dim {
        power = power.mul(n);
        ranks.push(power.rank());
    }
    if !power.is_zero() {
        return Err(Error::NotNilpotent);
    }
    // at_least[s] = #blocks of size >= s, for s >= 1
    let at_least: Vec<usize> = (1..=dim).map(|s| ranks[s - 1] - ranks[s]).collect();
    let mut parts = Vec::new();
    for s in (1..=dim).rev() {
        let exactly = at_least[s - 1] - at_least.get(s).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(s as u32, exactly));
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(RationalMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(0, 0).rank(), 0);
        let m = RationalMatrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), rat(1)],
            vec![rat(1), rat(2)],
            vec![rat(0), Rational::new(1.into(), 3.into())],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn determinant() {
        let m = RationalMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
        assert_eq!(m.determinant().unwrap(), rat(5));
        let m = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), rat(-1));
        assert!(RationalMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn jordan_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(
            jordan_type(&RationalMatrix::zeros(3, 3)).unwrap(),
            p(&[1, 1, 1])
        );
        let block = RationalMatrix::from_i64_rows(&[
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(jordan_type(&block).unwrap(), p(&[4]));
        let two = RationalMatrix::from_i64_rows(&[
            &[0, 1, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(jordan_type(&two).unwrap(), p(&[2, 2]));
        let not_nil = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(jordan_type(&not_nil), Err(Error::NotNilpotent));
        assert!(jordan_type(&RationalMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn row_space_tracks_independence() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(&[rat(1), rat(2), rat(3)]));
        assert!(!s.insert(&[rat(-2), rat(-4), rat(-6)]));
        assert!(s.insert(&[rat(0), rat(1), rat(1)]));
        assert!(!s.insert(&[rat(1), rat(3), rat(4)]));
        assert!(s.insert(&[rat(0), rat(0), rat(7)]));
        assert!(s.is_full());
    }
}
