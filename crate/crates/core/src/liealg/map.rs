use alloc::sync::Arc;
use alloc::vec::Vec;

use super::algebra::MatrixLieAlgebra;
use super::linear::norm;
use super::mat::{bracket, Mat};
use crate::error::{arg, Result};

/// A linear endomorphism of a matrix Lie algebra, stored as its matrix in
/// the algebra's orthonormal basis (`columns[j]` = coordinates of the image
/// of basis element `j`).
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    algebra: Arc<MatrixLieAlgebra>,
    columns: Vec<Vec<f64>>,
}

impl AlgebraMap {
    /// Tabulates `f` on the basis. The images are projected onto the algebra;
    /// use [`AlgebraMap::escape_residual`] to detect maps that leave it.
    pub fn from_fn(algebra: &Arc<MatrixLieAlgebra>, f: impl Fn(&Mat) -> Mat) -> Self {
        let columns = algebra.basis().iter().map(|b| algebra.coords(&f(b))).collect();
        Self { algebra: Arc::clone(algebra), columns }
    }

    pub fn identity(algebra: &Arc<MatrixLieAlgebra>) -> Self {
        Self::from_fn(algebra, Mat::clone)
    }

    /// Builds from an explicit coordinate matrix (row-major, `dim x dim`).
    pub fn from_coordinate_matrix(algebra: &Arc<MatrixLieAlgebra>, rows: &[Vec<f64>]) -> Result<Self> {
        let d = algebra.dim();
        if rows.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(arg(alloc::format!("automorphism matrix must be {d}x{d}")));
        }
        let columns = (0..d).map(|j| (0..d).map(|i| rows[i][j]).collect()).collect();
        Ok(Self { algebra: Arc::clone(algebra), columns })
    }

    pub fn algebra(&self) -> &Arc<MatrixLieAlgebra> {
        &self.algebra
    }

    pub fn apply_coords(&self, c: &[f64]) -> Vec<f64> {
        let d = self.algebra.dim();
        let mut out = alloc::vec![0.0; d];
        for (cj, col) in c.iter().zip(&self.columns) {
            for (o, a) in out.iter_mut().zip(col) {
                *o += cj * a;
            }
        }
        out
    }

    pub fn apply(&self, x: &Mat) -> Mat {
        self.algebra.element(&self.apply_coords(&self.algebra.coords(x)))
    }

    /// Largest relative amount by which `f` pushed a basis element outside the
    /// algebra, for a map built with [`AlgebraMap::from_fn`].
    pub fn escape_residual(algebra: &MatrixLieAlgebra, f: impl Fn(&Mat) -> Mat) -> f64 {
        algebra.basis().iter().map(|b| algebra.span_residual(&f(b))).fold(0.0, f64::max)
    }

    /// `max ||theta(theta(B_i)) - B_i||` over the basis.
    pub fn involution_residual(&self) -> f64 {
        let d = self.algebra.dim();
        (0..d)
            .map(|j| {
                let twice = self.apply_coords(&self.columns[j]);
                let diff: Vec<f64> =
                    twice.iter().enumerate().map(|(i, x)| x - if i == j { 1.0 } else { 0.0 }).collect();
                norm(&diff)
            })
            .fold(0.0, f64::max)
    }

    /// `max ||phi([B_i,B_j]) - [phi B_i, phi B_j]||` over basis pairs.
    pub fn automorphism_residual(&self) -> f64 {
        let basis = self.algebra.basis();
        let images: Vec<Mat> = basis.iter().map(|b| self.apply(b)).collect();
        let mut worst = 0.0f64;
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let lhs = self.apply(&bracket(&basis[i], &basis[j]).expect("same algebra"));
                let rhs = bracket(&images[i], &images[j]).expect("same algebra");
                worst = worst.max((&lhs - &rhs).norm());
            }
        }
        worst
    }
}
