use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};

/// Dense real square matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Mat {
    n: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m[(i, j)] = 1.0;
        m
    }

    /// `E_ij - E_ji`, the standard basis element of `so(n)` (unnormalized).
    pub fn skew_unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m[(i, j)] = 1.0;
        m[(j, i)] = -1.0;
        m
    }

    pub fn diag(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds from row-major entries; `data.len()` must be a perfect square.
    pub fn from_row_major(data: Vec<f64>) -> Result<Self> {
        let n = libm::sqrt(data.len() as f64) as usize;
        let n = (n.saturating_sub(1)..=n + 1).find(|k| k * k == data.len()).ok_or_else(|| {
            arg(alloc::format!("{} entries do not form a square matrix", data.len()))
        })?;
        if data.iter().any(|x| !x.is_finite()) {
            return Err(arg("matrix entries must be finite"));
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(arg("rows must all have length equal to the row count"));
        }
        Self::from_row_major(rows.iter().flat_map(|r| r.iter().copied()).collect())
    }

    /// Places `self` as the diagonal block starting at `offset` of an `n`×`n` zero matrix.
    pub fn embed(&self, n: usize, offset: usize) -> Self {
        let mut out = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(offset + i, offset + j)] = self[(i, j)];
            }
        }
        out
    }

    /// The `len`×`len` diagonal block starting at `offset`.
    pub fn block(&self, offset: usize, len: usize) -> Self {
        let mut out = Self::zeros(len);
        for i in 0..len {
            for j in 0..len {
                out[(i, j)] = self[(offset + i, offset + j)];
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// `self += s * other`
    pub fn axpy(&mut self, s: f64, other: &Mat) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius inner product `sum a_ij b_ij`; equals `-trace(AB)` on skew matrices.
    pub fn dot(&self, other: &Mat) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_one(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn is_skew(&self, eps: f64) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| (self[(i, j)] + self[(j, i)]).abs() <= eps))
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        check_same(self, other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            let dst = &mut out.data[i * n..(i + 1) * n];
            for (k, &a) in row.iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let src = &other.data[k * n..(k + 1) * n];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }

    /// `g X g^T`, i.e. `Ad(g) X` for orthogonal `g`.
    pub fn conjugate_by(&self, g: &Mat) -> Mat {
        g.mul_unchecked(self).mul_unchecked(&g.transpose())
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

fn check_same(a: &Mat, b: &Mat) -> Result<()> {
    if a.n != b.n {
        return Err(Error::Dimension { expected: a.n, found: b.n });
    }
    Ok(())
}

/// Lie bracket `XY - YX`.
pub fn bracket(x: &Mat, y: &Mat) -> Result<Mat> {
    check_same(x, y)?;
    let mut out = x.mul_unchecked(y);
    out.axpy(-1.0, &y.mul_unchecked(x));
    Ok(out)
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let mut out = self.clone();
        out.axpy(1.0, rhs);
        out
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let mut out = self.clone();
        out.axpy(-1.0, rhs);
        out
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(-1.0)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_is_antisymmetric_and_kills_identity() {
        let x = Mat::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        assert_eq!(bracket(&x, &x).unwrap(), Mat::zeros(2));
        assert_eq!(bracket(&Mat::identity(2), &x).unwrap(), Mat::zeros(2));
    }

    #[test]
    fn so3_bracket_by_hand() {
        // [E12 - E21, E13 - E31] = E32 - E23 (0-based: units (0,1),(0,2) -> (2,1))
        let a = Mat::skew_unit(3, 0, 1);
        let b = Mat::skew_unit(3, 0, 2);
        let c = bracket(&a, &b).unwrap();
        let mut expected = Mat::zeros(3);
        expected[(1, 2)] = -1.0;
        expected[(2, 1)] = 1.0;
        assert_eq!(c, expected);
    }

    #[test]
    fn size_mismatch_is_reported() {
        let err = bracket(&Mat::zeros(2), &Mat::zeros(3)).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, found: 3 });
    }

    #[test]
    fn row_major_requires_square_and_finite() {
        assert!(Mat::from_row_major(vec![1.0; 5]).is_err());
        assert!(Mat::from_row_major(vec![f64::NAN; 4]).is_err());
        assert_eq!(Mat::from_row_major(vec![0.0; 9]).unwrap().size(), 3);
    }
}
