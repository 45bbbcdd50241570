//! Dense linear algebra on families of flattened vectors.
//!
//! Everything here works on a list of columns (each a `Vec<f64>` of the
//! same length). The workhorse is a one-sided (Hestenes) Jacobi SVD, which
//! resolves small singular values to high relative accuracy; all rank,
//! span, and kernel decisions in the crate go through it.

use alloc::vec;
use alloc::vec::Vec;

use super::tolerance::Tolerance;

const MAX_SWEEPS: usize = 80;
const ORTHO_EPS: f64 = 1e-15;

/// Thin SVD of a column family `A = [a_1 .. a_m]`, sorted by decreasing
/// singular value. `left[j]` is `A v_j / sigma_j` (zero when `sigma_j == 0`).
#[derive(Debug, Clone)]
pub struct ColumnSvd {
    pub sigma: Vec<f64>,
    pub right: Vec<Vec<f64>>,
    pub left: Vec<Vec<f64>>,
}

impl ColumnSvd {
    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    /// Number of singular values above the tolerance cut.
    pub fn rank(&self, tol: &Tolerance) -> usize {
        let cut = tol.cutoff(self.sigma_max());
        self.sigma.iter().filter(|&&s| s > cut).count()
    }

    /// Ratio of the smallest kept to the largest singular value, and of the
    /// largest discarded one; useful as a margin diagnostic.
    pub fn gap(&self, tol: &Tolerance) -> (f64, f64) {
        let r = self.rank(tol);
        let smax = self.sigma_max();
        if smax == 0.0 {
            return (0.0, 0.0);
        }
        let kept = if r > 0 { self.sigma[r - 1] / smax } else { 0.0 };
        let dropped = self.sigma.get(r).map_or(0.0, |s| s / smax);
        (kept, dropped)
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// `y += s * x`
pub fn axpy(y: &mut [f64], s: f64, x: &[f64]) {
    for (a, b) in y.iter_mut().zip(x) {
        *a += s * b;
    }
}

/// Linear combination `sum_i coeffs[i] * cols[i]`.
pub fn combine(cols: &[Vec<f64>], coeffs: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    for (c, col) in coeffs.iter().zip(cols) {
        if *c != 0.0 {
            axpy(&mut out, *c, col);
        }
    }
    out
}

/// One-sided Jacobi SVD of the column family.
pub fn svd_columns(cols: &[Vec<f64>]) -> ColumnSvd {
    let m = cols.len();
    if m == 0 {
        return ColumnSvd { sigma: Vec::new(), right: Vec::new(), left: Vec::new() };
    }
    let len = cols[0].len();
    let mut w: Vec<Vec<f64>> = cols.to_vec();
    let mut v: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut e = vec![0.0; m];
            e[i] = 1.0;
            e
        })
        .collect();
    let mut norms: Vec<f64> = w.iter().map(|c| dot(c, c)).collect();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..m {
            for q in (p + 1)..m {
                let alpha = norms[p];
                let beta = norms[q];
                if alpha < 1e-300 || beta < 1e-300 {
                    continue;
                }
                let gamma = dot(&w[p], &w[q]);
                if gamma.abs() <= ORTHO_EPS * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                rotate(&mut w, p, q, c, s);
                rotate(&mut v, p, q, c, s);
                norms[p] = dot(&w[p], &w[p]);
                norms[q] = dot(&w[q], &w[q]);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..m).collect();
    let sig: Vec<f64> = norms.iter().map(|x| libm::sqrt(*x)).collect();
    order.sort_by(|&a, &b| sig[b].partial_cmp(&sig[a]).unwrap_or(core::cmp::Ordering::Equal));
    let mut sigma = Vec::with_capacity(m);
    let mut right = Vec::with_capacity(m);
    let mut left = Vec::with_capacity(m);
    for &j in &order {
        let s = sig[j];
        sigma.push(s);
        right.push(v[j].clone());
        left.push(if s > 0.0 { w[j].iter().map(|x| x / s).collect() } else { vec![0.0; len] });
    }
    ColumnSvd { sigma, right, left }
}

fn rotate(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let a = &mut head[p];
    let b = &mut tail[0];
    for (x, y) in a.iter_mut().zip(b.iter_mut()) {
        let xp = *x;
        let yq = *y;
        *x = c * xp - s * yq;
        *y = s * xp + c * yq;
    }
}

/// Numerical rank of the family.
pub fn rank(cols: &[Vec<f64>], tol: &Tolerance) -> usize {
    svd_columns(cols).rank(tol)
}

/// Orthonormal basis of the span of the family.
pub fn orthonormal_span(cols: &[Vec<f64>], tol: &Tolerance) -> Vec<Vec<f64>> {
    let svd = svd_columns(cols);
    let r = svd.rank(tol);
    svd.left.into_iter().take(r).collect()
}

/// Orthonormal basis of `{c : sum_i c_i cols[i] = 0}` (numerically).
pub fn kernel(cols: &[Vec<f64>], tol: &Tolerance) -> Vec<Vec<f64>> {
    let svd = svd_columns(cols);
    let r = svd.rank(tol);
    svd.right.into_iter().skip(r).collect()
}

/// Least-squares solution of `sum_i x_i cols[i] = b` through the
/// pseudo-inverse, together with the residual norm.
pub fn least_squares(svd: &ColumnSvd, b: &[f64], tol: &Tolerance) -> (Vec<f64>, f64) {
    let m = svd.right.len();
    let r = svd.rank(tol);
    let mut x = vec![0.0; m];
    let mut fitted = vec![0.0; b.len()];
    for j in 0..r {
        let coeff = dot(&svd.left[j], b);
        axpy(&mut x, coeff / svd.sigma[j], &svd.right[j]);
        axpy(&mut fitted, coeff, &svd.left[j]);
    }
    let resid: Vec<f64> = b.iter().zip(&fitted).map(|(a, f)| a - f).collect();
    (x, norm(&resid))
}

/// Component of `v` orthogonal to the orthonormal family `onb`.
pub fn reject(v: &[f64], onb: &[Vec<f64>]) -> Vec<f64> {
    let mut out = v.to_vec();
    // two passes keep the result orthogonal to working precision
    for _ in 0..2 {
        for q in onb {
            let c = dot(&out, q);
            axpy(&mut out, -c, q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn zero_family_has_rank_zero() {
        assert_eq!(rank(&[vec![0.0; 4]], &tol()), 0);
    }

    #[test]
    fn colinear_pair_has_rank_one() {
        let x = vec![1.0, -2.0, 0.5];
        let y: Vec<f64> = x.iter().map(|a| 2.0 * a).collect();
        assert_eq!(rank(&[x, y], &tol()), 1);
    }

    #[test]
    fn singular_values_of_diagonal_family() {
        let cols = vec![vec![3.0, 0.0, 0.0], vec![0.0, 0.0, 5.0], vec![0.0, 1.0, 0.0]];
        let svd = svd_columns(&cols);
        for (s, e) in svd.sigma.iter().zip([5.0, 3.0, 1.0]) {
            assert!((s - e).abs() < 1e-14);
        }
    }

    #[test]
    fn kernel_of_dependent_family() {
        let cols = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
        let ker = kernel(&cols, &tol());
        assert_eq!(ker.len(), 1);
        let c = &ker[0];
        let img = combine(&cols, c, 2);
        assert!(norm(&img) < 1e-14);
        assert!((norm(c) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn least_squares_recovers_exact_solution() {
        let cols = vec![vec![1.0, 1.0, 0.0], vec![0.0, 1.0, 1.0]];
        let b = vec![2.0, 5.0, 3.0];
        let svd = svd_columns(&cols);
        let (x, res) = least_squares(&svd, &b, &tol());
        assert!((x[0] - 2.0).abs() < 1e-12 && (x[1] - 3.0).abs() < 1e-12);
        assert!(res < 1e-12);
    }

    #[test]
    fn tiny_perturbation_below_cut_is_ignored() {
        let cols = vec![vec![1.0, 0.0, 0.0], vec![1.0, 1e-12, 0.0]];
        assert_eq!(rank(&cols, &tol()), 1);
        let cols = vec![vec![1.0, 0.0, 0.0], vec![1.0, 1e-6, 0.0]];
        assert_eq!(rank(&cols, &tol()), 2);
    }
}
