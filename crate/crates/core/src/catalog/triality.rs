//! Triality: for `A in so(8)` the unique `B, C in so(8)` with
//! `A(xy) = B(x) y + x C(y)` for all octonions `x, y`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::classical::{build_classical, Family};
use super::octonion::{mul, unit, Octonion};
use crate::error::{arg, Error, Result};
use crate::liealg::linear::{least_squares, svd_columns, ColumnSvd};
use crate::liealg::{Mat, MatrixLieAlgebra, Tolerance};

fn apply8(m: &Mat, x: &Octonion) -> Octonion {
    let v = m.apply(x);
    let mut o = [0.0; 8];
    o.copy_from_slice(&v);
    o
}

/// Solver with the 512 x 56 system factored once.
#[derive(Debug, Clone)]
pub struct Triality {
    so8: Arc<MatrixLieAlgebra>,
    svd: ColumnSvd,
    tol: Tolerance,
}

impl Triality {
    pub fn new(tol: &Tolerance) -> Triality {
        let so8 = Arc::new(build_classical(Family::So, 8).expect("so(8)"));
        Triality::on(&so8, tol)
    }

    pub fn on(so8: &Arc<MatrixLieAlgebra>, tol: &Tolerance) -> Triality {
        let mut cols = Vec::with_capacity(56);
        for f in so8.basis() {
            cols.push(system_column(|x, y| mul(&apply8(f, x), y)));
        }
        for f in so8.basis() {
            cols.push(system_column(|x, y| mul(x, &apply8(f, y))));
        }
        Triality { so8: Arc::clone(so8), svd: svd_columns(&cols), tol: *tol }
    }

    pub fn so8(&self) -> &Arc<MatrixLieAlgebra> {
        &self.so8
    }

    /// `(B, C)` for `A`. Fails when `A` is not in `so(8)`: the system is then
    /// inconsistent.
    pub fn images(&self, a: &Mat) -> Result<(Mat, Mat)> {
        if a.size() != 8 {
            return Err(arg("triality acts on 8x8 matrices"));
        }
        let rhs = system_column(|x, y| apply8(a, &mul(x, y)));
        let scale = crate::liealg::linear::norm(&rhs);
        let (sol, resid) = least_squares(&self.svd, &rhs, &self.tol);
        if scale > 0.0 && resid / scale >= self.tol.rel_eps {
            return Err(Error::Numerical(alloc::format!(
                "triality system inconsistent (relative residual {:.3e}); input not in so(8)",
                resid / scale
            )));
        }
        let b = self.so8.element(&sol[..28]);
        let c = self.so8.element(&sol[28..]);
        Ok((b, c))
    }
}

fn system_column(f: impl Fn(&Octonion, &Octonion) -> Octonion) -> Vec<f64> {
    let mut out = Vec::with_capacity(512);
    for a in 0..8 {
        for b in 0..8 {
            out.extend_from_slice(&f(&unit(a), &unit(b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{bracket, AlgebraSubspace, Sampler};

    #[test]
    fn system_has_full_rank() {
        let t = Triality::new(&Tolerance::default());
        assert_eq!(t.svd.rank(&Tolerance::default()), 56);
    }

    #[test]
    fn images_satisfy_the_identity_and_are_homomorphisms() {
        let t = Triality::new(&Tolerance::default());
        let mut rng = Sampler::new(4);
        let a1 = t.so8().random_element(&mut rng);
        let a2 = t.so8().random_element(&mut rng);
        let (b1, c1) = t.images(&a1).unwrap();
        let (b2, c2) = t.images(&a2).unwrap();
        let (b12, c12) = t.images(&bracket(&a1, &a2).unwrap()).unwrap();
        assert!((&b12 - &bracket(&b1, &b2).unwrap()).max_abs() < 1e-10);
        assert!((&c12 - &bracket(&c1, &c2).unwrap()).max_abs() < 1e-10);
        let x: Octonion = core::array::from_fn(|_| rng.normal());
        let y: Octonion = core::array::from_fn(|_| rng.normal());
        let lhs = apply8(&a1, &mul(&x, &y));
        let r1 = mul(&apply8(&b1, &x), &y);
        let r2 = mul(&x, &apply8(&c1, &y));
        for k in 0..8 {
            assert!((lhs[k] - r1[k] - r2[k]).abs() < 1e-10);
        }
    }

    #[test]
    fn fixed_set_is_g2() {
        let tol = Tolerance::default();
        let t = Triality::new(&tol);
        let full = AlgebraSubspace::full(t.so8());
        let fixed = full.kernel(
            |a| {
                let (b, c) = t.images(a).unwrap();
                let mut v = (&b - a).as_slice().to_vec();
                v.extend_from_slice((&c - a).as_slice());
                v
            },
            &tol,
        );
        assert_eq!(fixed.dim(), 14);
    }

    #[test]
    fn non_skew_input_is_rejected() {
        let t = Triality::new(&Tolerance::default());
        assert!(t.images(&Mat::identity(8)).is_err());
    }
}
