use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{malformed, Result};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(malformed(format!(
                "matrix has {} entries, expected {rows}x{cols}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !field.contains(e)) {
            return Err(malformed(format!(
                "matrix entry {bad} lies in {} but the matrix is over {field}",
                bad.field()
            )));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    /// Builds a matrix from integer rows, reducing into `field`.
    pub fn from_i64(field: Field, rows: usize, cols: usize, data: &[i64]) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(malformed(format!("expected {} integers, got {}", rows * cols, data.len())));
        }
        Matrix::new(field, rows, cols, data.iter().map(|&n| field.from_i64(n)).collect())
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(malformed(format!("cannot multiply over {} and {}", self.field, other.field)));
        }
        if self.cols != other.rows {
            return Err(malformed(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(other.get(k, c)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { field: self.field, rows: self.rows, cols: other.cols, entries })
    }

    /// Applies the matrix to a column vector given as a slice.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(x).fold(self.field.zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(b))
                    }
                })
            })
            .collect()
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(malformed("vstack needs matching field and column count"));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub(crate) fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let n = rows.len();
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        debug_assert_eq!(entries.len(), n * cols);
        Matrix { field, rows: n, cols, entries }
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == rows.len() {
                break;
            }
            let Some(pr) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(lead, pr);
            let inv = rows[lead][c].inv().expect("pivot is nonzero");
            for x in rows[lead].iter_mut() {
                *x = x.mul(&inv);
            }
            let pivot_row = rows[lead].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == lead || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = x.sub(&factor.mul(p));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        rows.truncate(lead);
        (Matrix::from_rows(self.field, self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, x) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, rat};

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn rref_identity_over_f2() {
        let id = Matrix::identity(f2(), 2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let m = Matrix::from_i64(f2(), 2, 2, &[1, 1, 1, 1]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(f2(), 1, 2, &[1, 1]).unwrap());
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_over_rationals_normalizes_pivot() {
        let m = Matrix::from_i64(Field::Rational, 1, 2, &[2, 4]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Field::Rational, 1, 2, &[1, 2]).unwrap());
        assert_eq!(p, vec![0]);

        let m = Matrix::from_i64(Field::Rational, 2, 2, &[2, 1, 4, 3]).unwrap();
        let (r, _) = m.rref();
        assert_eq!(r, Matrix::identity(Field::Rational, 2));
        let half = Field::Rational.from_rational(&rat(1, 2)).unwrap();
        assert_eq!(half, Scalar::Rational(rat(1, 2)));
        assert_eq!(Field::Rational.from_i64(3), Scalar::Rational(int(3)));
    }

    #[test]
    fn mixed_field_entries_rejected() {
        let entries = vec![f2().one(), Field::Rational.one()];
        assert!(Matrix::new(f2(), 1, 2, entries).is_err());
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(Matrix::from_i64(f2(), 2, 2, &[1, 0, 1]).is_err());
        let a = Matrix::identity(f2(), 2);
        let b = Matrix::identity(f2(), 3);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn multiply_and_apply_agree() {
        let f = Field::prime(5).unwrap();
        let a = Matrix::from_i64(f, 2, 3, &[1, 2, 3, 4, 0, 1]).unwrap();
        let x = Matrix::from_i64(f, 3, 1, &[2, 1, 4]).unwrap();
        let ax = a.mul(&x).unwrap();
        let col = a.apply(x.entries());
        assert_eq!(ax.entries(), col.as_slice());
        assert_eq!(col, vec![f.from_i64(16), f.from_i64(12)]);
    }
}
