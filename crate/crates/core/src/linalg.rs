//! Dense exact linear algebra over the rationals.
//!
//! Everything here works on [`BigRational`] entries; no floating point is
//! involved. Rank uses Gaussian elimination that only touches rows with a
//! nonzero entry in the pivot column and picks the pivot with the shortest
//! numerator+denominator bit length, which keeps coefficient growth in check
//! on the sparse 0/1 matrices produced by monomial maps. A fraction-free
//! (Bareiss) rank over the integers is provided as an independent route.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn bit_size(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::invalid(format!(
                "matrix of shape {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length. An empty
    /// row list gives a `0 x cols` matrix with `cols = 0`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("ragged rows"));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
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

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::invalid(format!(
                "vector of length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        kernel_basis(self)
    }
}

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row, in order; rows past `pivots.len()` are zero afterwards.
fn rref_in_place(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        let Some(best) = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| (bit_size(&rows[r][col]), r))
        else {
            continue;
        };
        rows.swap(top, best);
        let inv = rows[top][col].recip();
        if !inv.is_one() {
            for v in rows[top][col..].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(top);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
        let nonzero: Vec<usize> = (col..cols).filter(|&c| !pivot_row[c].is_zero()).collect();
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for &c in &nonzero {
                let delta = &factor * &pivot_row[c];
                other[c] -= delta;
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let mut rows = m.to_rows();
    rref_in_place(&mut rows, m.cols).len()
}

/// Canonical basis of the right null space: the rows of the reduced row
/// echelon form of any basis of `ker m`. Each vector has a leading 1 and the
/// leading positions are strictly increasing.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols;
    if cols == 0 {
        return Vec::new();
    }
    let mut rows = m.to_rows();
    let pivots = if rows.is_empty() {
        Vec::new()
    } else {
        rref_in_place(&mut rows, cols)
    };
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis: Vec<Vec<Rational>> = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                if !rows[r][free].is_zero() {
                    v[p] = -rows[r][free].clone();
                }
            }
            v
        })
        .collect();
    let k = rref_in_place(&mut basis, cols).len();
    basis.truncate(k);
    basis
}

/// Rank computed with fraction-free (Bareiss) elimination over the
/// integers, after clearing the denominators of every row. Independent of
/// [`rank`]; used to cross-check it.
pub fn rank_fraction_free(m: &RationalMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut top = 0;
    for col in 0..m.cols {
        if top == a.len() {
            break;
        }
        let Some(p) = (top..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(top, p);
        for r in top + 1..a.len() {
            for c in col + 1..m.cols {
                let v = &a[top][col] * &a[r][c] - &a[r][col] * &a[top][c];
                debug_assert!((&v % &prev).is_zero());
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[top][col].clone();
        top += 1;
    }
    top
}

/// Incrementally maintained row space. Rows are kept in semi-echelon form:
/// each stored row has a leading 1 at a column where all later-inserted rows
/// vanish, so reducing against rows in insertion order is exact.
#[derive(Debug, Clone, Default)]
pub struct Span {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (c, x) in row.iter().enumerate().skip(*pivot) {
                if !x.is_zero() {
                    v[c] -= &factor * x;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must match the span");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `true` iff the span grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length must match the span");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pivot].recip();
        for x in w.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push((pivot, w));
        true
    }
}
