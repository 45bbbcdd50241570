//! The compact classical algebras as realified skew-symmetric matrices.
//!
//! `su(n)` and `u(n)` act on `C^n = R^n + i R^n` through
//! `A + iB -> [[A, -B], [B, A]]`; `sp(n)` acts on `H^n = R^{4n}` by
//! quaternionic matrices multiplying from the left, so that right scalar
//! multiplication commutes with it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::octonion::{qleft, qunit};
use crate::error::{arg, Result};
use crate::liealg::linear::{axpy, dot, norm};
use crate::liealg::{LieElement, Mat, MatrixLieAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    So,
    Su,
    Sp,
    U,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "so" => Some(Family::So),
            "su" => Some(Family::Su),
            "sp" => Some(Family::Sp),
            "u" => Some(Family::U),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::So => "so",
            Family::Su => "su",
            Family::Sp => "sp",
            Family::U => "u",
        }
    }

    pub fn dim(self, n: usize) -> usize {
        match self {
            Family::So => n * n.saturating_sub(1) / 2,
            Family::Su => (n * n).saturating_sub(1),
            Family::Sp => n * (2 * n + 1),
            Family::U => n * n,
        }
    }

    pub fn rank(self, n: usize) -> usize {
        match self {
            Family::So => n / 2,
            Family::Su => n.saturating_sub(1),
            Family::Sp | Family::U => n,
        }
    }

    /// Size of the real matrices realizing the algebra.
    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            Family::So => n,
            Family::Su | Family::U => 2 * n,
            Family::Sp => 4 * n,
        }
    }
}

pub fn classical_name(family: Family, n: usize) -> String {
    format!("{}({n})", family.label())
}

/// `R(A + iB)` for real `n x n` blocks.
pub fn realify(re: &Mat, im: &Mat) -> Mat {
    let n = re.size();
    let mut m = Mat::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = re[(i, j)];
            m[(i + n, j + n)] = re[(i, j)];
            m[(i, j + n)] = -im[(i, j)];
            m[(i + n, j)] = im[(i, j)];
        }
    }
    m
}

/// Real `4n x 4n` matrix of left multiplication by the quaternionic matrix
/// whose only nonzero entry is `q` at `(a, b)`.
pub fn quaternion_entry(n: usize, a: usize, b: usize, q: &[f64; 4]) -> Mat {
    let l = qleft(q);
    let mut m = Mat::zeros(4 * n);
    for i in 0..4 {
        for j in 0..4 {
            m[(4 * a + i, 4 * b + j)] = l[(i, j)];
        }
    }
    m
}

/// Block-diagonal `diag(blk, .., blk)` with `copies` blocks.
pub fn repeat_block(blk: &Mat, copies: usize) -> Mat {
    let k = blk.size();
    let mut m = Mat::zeros(k * copies);
    for c in 0..copies {
        for i in 0..k {
            for j in 0..k {
                m[(c * k + i, c * k + j)] = blk[(i, j)];
            }
        }
    }
    m
}

pub fn so_generators(n: usize) -> Vec<Mat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(Mat::skew_unit(n, i, j));
        }
    }
    out
}

pub fn u_generators(n: usize, traceless: bool) -> Vec<Mat> {
    let zero = Mat::zeros(n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(realify(&Mat::skew_unit(n, i, j), &zero));
            let sym = &Mat::unit(n, i, j) + &Mat::unit(n, j, i);
            out.push(realify(&zero, &sym));
        }
    }
    if traceless {
        // generalized Gell-Mann diagonals, mutually orthogonal
        for k in 1..n {
            let mut d = alloc::vec![0.0; n];
            for x in d.iter_mut().take(k) {
                *x = 1.0;
            }
            d[k] = -(k as f64);
            out.push(realify(&zero, &Mat::diag(&d)));
        }
    } else {
        for i in 0..n {
            out.push(realify(&zero, &Mat::unit(n, i, i)));
        }
    }
    out
}

pub fn sp_generators(n: usize) -> Vec<Mat> {
    let mut out = Vec::new();
    for a in 0..n {
        for u in 1..4 {
            out.push(quaternion_entry(n, a, a, &qunit(u)));
        }
        for b in (a + 1)..n {
            for u in 0..4 {
                let q = qunit(u);
                // entry (b, a) is -conj(q)
                let mut qb = [0.0; 4];
                qb[0] = -q[0];
                for k in 1..4 {
                    qb[k] = q[k];
                }
                out.push(&quaternion_entry(n, a, b, &q) + &quaternion_entry(n, b, a, &qb));
            }
        }
    }
    out
}

/// Modified Gram-Schmidt with reorthogonalization; vectors whose rejection
/// falls below `drop` times their norm are discarded.
pub(crate) fn gram_schmidt(family: &[Vec<f64>], drop: f64) -> Vec<Vec<f64>> {
    let mut onb: Vec<Vec<f64>> = Vec::new();
    for v in family {
        let n0 = norm(v);
        if n0 == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &onb {
                let c = dot(&w, q);
                axpy(&mut w, -c, q);
            }
        }
        let nw = norm(&w);
        if nw > drop * n0 {
            onb.push(w.iter().map(|x| x / nw).collect());
        }
    }
    onb
}

/// Algebra from generators that are known to be independent and closed.
/// The tests cross-check every catalog algebra for both.
pub(crate) fn trusted_algebra(name: impl Into<String>, size: usize, gens: &[Mat]) -> MatrixLieAlgebra {
    let flat: Vec<Vec<f64>> = gens.iter().map(LieElement::to_flat).collect();
    MatrixLieAlgebra::from_orthonormal(name, size, gram_schmidt(&flat, 1e-9))
}

pub fn classical_generators(family: Family, n: usize) -> Vec<Mat> {
    match family {
        Family::So => so_generators(n),
        Family::Su => u_generators(n, true),
        Family::U => u_generators(n, false),
        Family::Sp => sp_generators(n),
    }
}

/// `so(n)` for `n >= 2`, `su(n)` for `n >= 2`, `sp(n)` and `u(n)` for `n >= 1`.
pub fn build_classical(family: Family, n: usize) -> Result<MatrixLieAlgebra> {
    let min = match family {
        Family::So | Family::Su => 2,
        Family::Sp | Family::U => 1,
    };
    if n < min {
        return Err(arg(format!("{}({n}) needs n >= {min}", family.label())));
    }
    if family.matrix_size(n) > 64 {
        return Err(arg(format!("{}({n}) exceeds the supported matrix size 64", family.label())));
    }
    let gens = classical_generators(family, n);
    Ok(trusted_algebra(classical_name(family, n), family.matrix_size(n), &gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{Sampler, Tolerance};

    #[test]
    fn dimensions_match_formulas() {
        for n in 2..7 {
            for f in [Family::So, Family::Su, Family::Sp, Family::U] {
                let g = build_classical(f, n).unwrap();
                assert_eq!(g.dim(), f.dim(n), "{}", g.name());
            }
        }
    }

    #[test]
    fn classical_algebras_are_closed_and_skew() {
        let tol = Tolerance::default();
        for f in [Family::So, Family::Su, Family::Sp, Family::U] {
            for n in 1..5 {
                let Ok(g) = build_classical(f, n) else { continue };
                assert!(g.closure_residual(&mut Sampler::new(1)) < tol.rel_eps, "{}", g.name());
                assert!(g.basis().iter().all(|b| b.is_skew(1e-14)));
                // independent check through the SVD path
                let again = MatrixLieAlgebra::new("again", *g.shape(), classical_generators(f, n), &tol).unwrap();
                assert_eq!(again.dim(), g.dim());
            }
        }
    }

    #[test]
    fn su_is_traceless_u() {
        let su = build_classical(Family::Su, 3).unwrap();
        for b in su.basis() {
            // complex trace of R(A + iB) lives in the upper-right block
            let n = 3;
            let im: f64 = (0..n).map(|i| b[(i + n, i)]).sum();
            assert!(im.abs() < 1e-14);
        }
    }

    #[test]
    fn sp_commutes_with_right_quaternion_multiplication() {
        let sp = build_classical(Family::Sp, 2).unwrap();
        for u in 1..4 {
            let r = repeat_block(&super::super::octonion::qright(&qunit(u)), 2);
            for b in sp.basis() {
                assert!((&(b * &r) - &(&r * b)).max_abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(build_classical(Family::So, 1).is_err());
        assert!(build_classical(Family::Su, 1).is_err());
        assert!(build_classical(Family::Sp, 0).is_err());
    }
}
