//! Dense square matrices over a ring and exact determinants.

use std::fmt;

use super::{ExactDiv, Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Domain("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, x)| (k / self.cols, k % self.cols, x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if self.cols != rhs.rows {
            return Err(Error::Domain(format!(
                "shape mismatch {}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<R> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Domain("shape mismatch in subtraction".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix<R>) -> Matrix<R> {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols).clone() * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    /// Submatrix keeping the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<R> {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    fn check_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Laplace expansion along the first row. Exponential; small sizes only.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> Result<R> {
    let n = m.check_square()?;
    let idx: Vec<usize> = (0..n).collect();
    Ok(cofactor_rec(m, &idx, &idx))
}

fn cofactor_rec<R: Ring>(m: &Matrix<R>, rows: &[usize], cols: &[usize]) -> R {
    match rows.len() {
        0 => R::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = R::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(rows[0], c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = cofactor_rec(m, &rows[1..], &rest);
                let t = a.clone() * &minor;
                acc = if k % 2 == 0 { acc + &t } else { acc - &t };
            }
            acc
        }
    }
}

/// Fraction-free (Bareiss) elimination. Every division is exact, so this
/// works over polynomial rings as well as fields.
pub fn det_bareiss<R: ExactDiv>(m: &Matrix<R>) -> Result<R> {
    let n = m.check_square()?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut a: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * &a[k][k] - &(a[i][k].clone() * &a[k][j]);
                a[i][j] = num.div_exact(&prev).ok_or_else(|| {
                    Error::Domain("inexact division in fraction-free elimination".into())
                })?;
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Gaussian elimination over a field.
pub fn det_gauss<F: Field>(m: &Matrix<F>) -> Result<F> {
    let n = m.check_square()?;
    let mut a: Vec<Vec<F>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(F::zero());
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot_inv = a[k][k].inv()?;
        det = det * &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone() * &pivot_inv;
            for j in k..n {
                let t = factor.clone() * &a[k][j];
                a[i][j] = a[i][j].clone() - &t;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{MPoly, Rational, Var};

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn one_by_one() {
        let m = Matrix::from_rows(vec![vec![r(1)]]).unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), r(1));
        assert_eq!(det_gauss(&m).unwrap(), r(1));
    }

    #[test]
    fn empty_determinant_is_one() {
        let m: Matrix<Rational> = Matrix::zeros(0, 0);
        assert_eq!(det_bareiss(&m).unwrap(), r(1));
        assert_eq!(det_cofactor(&m).unwrap(), r(1));
    }

    #[test]
    fn symbolic_two_by_two() {
        type P = MPoly<Rational>;
        let m = Matrix::from_rows(vec![
            vec![P::one(), P::var(Var::Zeta(1))],
            vec![P::var(Var::Z(1)), P::one()],
        ])
        .unwrap();
        let expected = P::one() - P::var(Var::Zeta(1)) * P::var(Var::Z(1));
        assert_eq!(det_bareiss(&m).unwrap(), expected);
        assert_eq!(det_cofactor(&m).unwrap(), expected);
    }

    #[test]
    fn non_square_rejected() {
        let m: Matrix<Rational> = Matrix::zeros(2, 3);
        assert_eq!(det_bareiss(&m), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert!(det_cofactor(&m).is_err());
        assert!(det_gauss(&m).is_err());
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = Matrix::from_rows(vec![vec![r(0), r(2)], vec![r(3), r(4)]]).unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), r(-6));
        assert_eq!(det_gauss(&m).unwrap(), r(-6));
    }
}
