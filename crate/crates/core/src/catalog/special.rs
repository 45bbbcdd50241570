//! Exceptional and spin embeddings built from the octonions.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::classical::{build_classical, trusted_algebra, Family};
use super::octonion::{left_mul, mul, unit, Octonion};
use crate::liealg::{AlgebraSubspace, Mat, MatrixLieAlgebra, Tolerance};

/// Action of `D in so(7)` on `Im O` (coordinates 1..7), extended by `D(1) = 0`.
fn act7(d: &Mat, x: &Octonion) -> Octonion {
    let mut out = [0.0; 8];
    for i in 0..7 {
        for j in 0..7 {
            out[i + 1] += d[(i, j)] * x[j + 1];
        }
    }
    out
}

/// Derivation defect `D(xy) - D(x)y - xD(y)` on all pairs of imaginary units.
fn derivation_defect(d: &Mat) -> Vec<f64> {
    let mut out = Vec::with_capacity(21 * 8);
    for a in 1..8 {
        for b in (a + 1)..8 {
            let (x, y) = (unit(a), unit(b));
            let lhs = act7(d, &mul(&x, &y));
            let r1 = mul(&act7(d, &x), &y);
            let r2 = mul(&x, &act7(d, &y));
            out.extend((0..8).map(|k| lhs[k] - r1[k] - r2[k]));
        }
    }
    out
}

/// `g2` as the derivation algebra of the octonions inside `so(7)` on `Im O`.
pub fn g2_in_so7(so7: &Arc<MatrixLieAlgebra>, tol: &Tolerance) -> AlgebraSubspace {
    AlgebraSubspace::full(so7).kernel(derivation_defect, tol)
}

/// `g2` as an algebra in its own right (7x7 matrices).
pub fn g2_algebra(tol: &Tolerance) -> MatrixLieAlgebra {
    let so7 = Arc::new(build_classical(Family::So, 7).expect("so(7)"));
    let sub = g2_in_so7(&so7, tol);
    MatrixLieAlgebra::from_orthonormal("g2", 7, sub.flat_basis().to_vec())
}

/// `su(3) in g2`: the stabilizer of `e7`.
pub fn su3_in_g2(g2: &Arc<MatrixLieAlgebra>, tol: &Tolerance) -> AlgebraSubspace {
    AlgebraSubspace::full(g2).kernel(|d| (0..7).map(|i| d[(i, 6)]).collect(), tol)
}

/// `so(4) in g2`: the stabilizer of the associative 3-plane `span(e1, e2, e4)`.
pub fn so4_in_g2(g2: &Arc<MatrixLieAlgebra>, tol: &Tolerance) -> AlgebraSubspace {
    let inside = [0usize, 1, 3];
    AlgebraSubspace::full(g2).kernel(
        |d| {
            let mut out = Vec::new();
            for &j in &inside {
                for i in 0..7 {
                    if !inside.contains(&i) {
                        out.push(d[(i, j)]);
                    }
                }
            }
            out
        },
        tol,
    )
}

/// `spin(7) in so(8)`, spanned by `L_{e_i} L_{e_j}` for `1 <= i < j <= 7`.
pub fn spin7_generators() -> Vec<Mat> {
    let l: Vec<Mat> = (1..8).map(|i| left_mul(&unit(i))).collect();
    let mut out = Vec::new();
    for i in 0..7 {
        for j in (i + 1)..7 {
            out.push(&l[i] * &l[j]);
        }
    }
    out
}

/// The nine symmetric generators `P_0..P_8` on `R^16 = O + O` with
/// `P_i P_j + P_j P_i = 2 delta_ij`:
/// `P_u = [[0, L_conj(u)], [L_u, 0]]` for `u = e_0..e_7` and `P_8 = diag(I, -I)`.
pub fn clifford9() -> Vec<Mat> {
    let mut out = Vec::with_capacity(9);
    for u in 0..8 {
        let lu = left_mul(&unit(u));
        let lbar = lu.transpose();
        let mut p = Mat::zeros(16);
        for i in 0..8 {
            for j in 0..8 {
                p[(i, j + 8)] = lbar[(i, j)];
                p[(i + 8, j)] = lu[(i, j)];
            }
        }
        out.push(p);
    }
    let d: Vec<f64> = (0..16).map(|i| if i < 8 { 1.0 } else { -1.0 }).collect();
    out.push(Mat::diag(&d));
    out
}

pub fn spin9_generators() -> Vec<Mat> {
    let p = clifford9();
    let mut out = Vec::new();
    for i in 0..9 {
        for j in (i + 1)..9 {
            out.push(&p[i] * &p[j]);
        }
    }
    out
}

/// The spin representation `so(9) -> so(16)`, `E_ij - E_ji -> P_i P_j / 2`.
pub fn spin9_rep(x: &Mat) -> Mat {
    let p = clifford9();
    let mut out = Mat::zeros(16);
    for i in 0..9 {
        for j in (i + 1)..9 {
            let c = x[(i, j)];
            if c != 0.0 {
                out.axpy(0.5 * c, &(&p[i] * &p[j]));
            }
        }
    }
    out
}

pub fn spin7_algebra() -> MatrixLieAlgebra {
    trusted_algebra("spin(7)", 8, &spin7_generators())
}
