//! Exact rational arithmetic and dense linear algebra over Q.
//!
//! Every rank, determinant and kernel in the crate goes through this module.
//! Elimination is fraction-free: each row is first scaled to integers (which
//! changes the determinant by a known factor and leaves rank and kernel
//! alone), then reduced with Bareiss' one-step scheme so that every
//! intermediate entry is itself a minor of the integer matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction with a positive denominator in lowest terms.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"num/den"` or a bare integer, with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `num` or `num/den`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
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

    /// Builds a matrix from row vectors; all rows must have the same length.
    /// An empty row list gives a `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(QMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().copied().map(rat).collect())
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

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Exact determinant. Errors on non-square input.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (mut rows, scale) = self.integer_rows();
        let echelon = bareiss(&mut rows);
        if echelon.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let mut d = rows[self.rows - 1][self.cols - 1].clone();
        if echelon.swaps % 2 == 1 {
            d = -d;
        }
        Ok(Rational::new(d, scale))
    }

    /// Exact rank over Q.
    pub fn rank(&self) -> usize {
        let (mut rows, _) = self.integer_rows();
        bareiss(&mut rows).pivots.len()
    }

    /// Basis of the right null space `{x : M x = 0}`; empty when the rank equals
    /// the column count.
    ///
    /// One vector per non-pivot column, with that column set to 1 and the other
    /// free columns set to 0.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (mut rows, _) = self.integer_rows();
        let pivots = bareiss(&mut rows).pivots;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for c in p + 1..self.cols {
                    if !rows[r][c].is_zero() && !x[c].is_zero() {
                        acc += &x[c] * Rational::from_integer(rows[r][c].clone());
                    }
                }
                x[p] = -acc / Rational::from_integer(rows[r][p].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Submatrix with the listed rows and columns deleted.
    pub fn remove(&self, removed_rows: &[usize], removed_cols: &[usize]) -> Result<QMatrix> {
        if let Some(&r) = removed_rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::Dimension(format!("row index {r} out of range")));
        }
        if let Some(&c) = removed_cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::Dimension(format!("column index {c} out of range")));
        }
        let keep_rows: Vec<usize> = (0..self.rows)
            .filter(|r| !removed_rows.contains(r))
            .collect();
        let keep_cols: Vec<usize> = (0..self.cols)
            .filter(|c| !removed_cols.contains(c))
            .collect();
        let entries = keep_rows
            .iter()
            .flat_map(|&r| keep_cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        QMatrix::new(keep_rows.len(), keep_cols.len(), entries)
    }

    /// Determinant of the submatrix left after deleting the given rows and
    /// columns (0-based). The residue must be square.
    pub fn minor(&self, removed_rows: &[usize], removed_cols: &[usize]) -> Result<Rational> {
        let sub = self.remove(removed_rows, removed_cols)?;
        if !sub.is_square() {
            return Err(Error::Dimension(format!(
                "minor residue is {}x{}, not square",
                sub.rows, sub.cols
            )));
        }
        sub.det()
    }

    /// Rows scaled to integers, plus the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = denominator_lcm(row);
                let out = row.iter().map(|q| q.numer() * (&l / q.denom())).collect();
                scale *= l;
                out
            })
            .collect();
        (rows, scale)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

struct Echelon {
    pivots: Vec<usize>,
    swaps: usize,
}

/// In-place fraction-free row echelon form.
///
/// Pivot is the first nonzero entry in the current column. After the step
/// on pivot row `r`, every entry below it equals a `(r+2)`-minor of the input,
/// so the division by the previous pivot is exact.
fn bareiss(rows: &mut [Vec<BigInt>]) -> Echelon {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swaps += 1;
        }
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let mut v = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { pivots, swaps }
}

/// Scales a nonzero rational vector to coprime integers whose first nonzero
/// entry is positive. Returns `None` for the zero vector.
pub fn primitive_integer_vector(values: &[Rational]) -> Option<Vec<BigInt>> {
    let first = values.iter().position(|q| !q.is_zero())?;
    let l = denominator_lcm(values);
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|q| q.numer() * (&l / q.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let negate = ints[first].is_negative();
    for v in ints.iter_mut() {
        *v = &*v / &g;
        if negate {
            *v = -&*v;
        }
    }
    Some(ints)
}
