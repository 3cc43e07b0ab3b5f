//! Exact integer matrix arithmetic and Smith normal form over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("determinant requires a square matrix")]
    NotSquare,
    #[error("matrix dimensions do not match entry count")]
    BadShape,
    #[error("circulant requires a nonempty first row")]
    EmptyRow,
}

/// Dense row-major integer matrix with exact arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::BadShape);
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self, LinAlgError> {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = self.at(i, k) * other.at(k, j);
                    *out.at_mut(i, j) += add;
                }
            }
        }
        out
    }
}

/// Square circulant matrix: row `k` is `first_row` cyclically right-shifted
/// by `k` positions.
pub fn circulant(first_row: &[i64]) -> Result<IntMatrix, LinAlgError> {
    let n = first_row.len();
    if n == 0 {
        return Err(LinAlgError::EmptyRow);
    }
    let mut m = IntMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            *m.at_mut(r, c) = BigInt::from(first_row[(c + n - r) % n]);
        }
    }
    Ok(m)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinAlgError> {
    if m.rows != m.cols {
        return Err(LinAlgError::NotSquare);
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            // find a pivot row below
            match (k + 1..n).find(|&r| !a.at(r, k).is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        let tmp = a.at(k, c).clone();
                        *a.at_mut(k, c) = a.at(r, c).clone();
                        *a.at_mut(r, c) = tmp;
                    }
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                *a.at_mut(i, j) = num / &prev;
            }
            *a.at_mut(i, k) = BigInt::zero();
        }
        prev = a.at(k, k).clone();
    }
    Ok(sign * a.at(n - 1, n - 1).clone())
}

/// Invariant-factor diagonal of the Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SNFResult {
    pub diagonal: Vec<BigInt>,
}

/// Smith normal form by elementary row/column operations, pivoting on the
/// smallest nonzero absolute value to limit entry growth.
pub fn smith_normal_form(m: &IntMatrix) -> SNFResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let size = rows.min(cols);
    let mut diag: Vec<BigInt> = Vec::with_capacity(size);

    for t in 0..size {
        loop {
            // smallest nonzero |entry| in the remaining block
            let mut pivot: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if !a.at(r, c).is_zero()
                        && pivot
                            .map(|(pr, pc)| a.at(r, c).abs() < a.at(pr, pc).abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                // remaining block is zero
                for _ in t..size {
                    diag.push(BigInt::zero());
                }
                return normalize_chain(diag);
            };
            swap_rows(&mut a, t, pr);
            swap_cols(&mut a, t, pc);

            // clear column t
            let mut dirty = false;
            for r in t + 1..rows {
                if !a.at(r, t).is_zero() {
                    let q = a.at(r, t).div_floor(a.at(t, t));
                    if !q.is_zero() {
                        row_axpy(&mut a, r, t, &q);
                    }
                    if !a.at(r, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear row t
            for c in t + 1..cols {
                if !a.at(t, c).is_zero() {
                    let q = a.at(t, c).div_floor(a.at(t, t));
                    if !q.is_zero() {
                        col_axpy(&mut a, c, t, &q);
                    }
                    if !a.at(t, c).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry; if not, fold the
            // offending row in and restart this position
            let mut fixed = true;
            'search: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(a.at(r, c) % a.at(t, t)).is_zero() {
                        for cc in 0..cols {
                            let add = a.at(r, cc).clone();
                            *a.at_mut(t, cc) += add;
                        }
                        fixed = false;
                        break 'search;
                    }
                }
            }
            if fixed {
                diag.push(a.at(t, t).abs());
                break;
            }
        }
    }
    normalize_chain(diag)
}

fn normalize_chain(mut diag: Vec<BigInt>) -> SNFResult {
    // move zeros to the tail, keep nonzero entries (divisibility already
    // holds from the reduction)
    diag.sort_by_key(|d| d.is_zero());
    SNFResult { diagonal: diag }
}

fn swap_rows(a: &mut IntMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols {
        let tmp = a.at(r1, c).clone();
        *a.at_mut(r1, c) = a.at(r2, c).clone();
        *a.at_mut(r2, c) = tmp;
    }
}

fn swap_cols(a: &mut IntMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..a.rows {
        let tmp = a.at(r, c1).clone();
        *a.at_mut(r, c1) = a.at(r, c2).clone();
        *a.at_mut(r, c2) = tmp;
    }
}

// row r -= q * row t
fn row_axpy(a: &mut IntMatrix, r: usize, t: usize, q: &BigInt) {
    for c in 0..a.cols {
        let sub = q * a.at(t, c);
        *a.at_mut(r, c) -= sub;
    }
}

// col c -= q * col t
fn col_axpy(a: &mut IntMatrix, c: usize, t: usize, q: &BigInt) {
    for r in 0..a.rows {
        let sub = q * a.at(r, t);
        *a.at_mut(r, c) -= sub;
    }
}

/// Finitely generated abelian group in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    /// Number of free `Z` summands.
    pub rank: usize,
    /// Torsion coefficients, each >= 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// Renders like `Z + Z_4` or `1` for the trivial group.
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = (0..self.rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Cokernel `Z^cols / row-space` of a relation matrix whose rows are the
/// abelianized relators.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let nonzero = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
    let rank = m.cols - nonzero;
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_zero() && **d != BigInt::one())
        .cloned()
        .collect();
    AbelianGroup { rank, torsion }
}
