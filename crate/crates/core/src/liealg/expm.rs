//! Matrix exponential by scaling and squaring with a degree-13 Padé
//! approximant (Higham 2005). The squaring count comes from the ∞-norm.

use super::mat::Mat;
use crate::error::{arg, Error, Result};

const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371_920_351_148_152;

pub fn matrix_exp(x: &Mat) -> Result<Mat> {
    if !x.is_finite() {
        return Err(arg("matrix_exp of a non-finite matrix"));
    }
    let n = x.size();
    let norm = x.norm_inf();
    let squarings = if norm > THETA13 { libm::ceil(libm::log2(norm / THETA13)) as i32 } else { 0 };
    let a = x.scale(libm::pow(2.0, -f64::from(squarings)));

    let b = &PADE13;
    let ident = Mat::identity(n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let mut inner_u = a6.scale(b[13]);
    inner_u.axpy(b[11], &a4);
    inner_u.axpy(b[9], &a2);
    let mut u = &a6 * &inner_u;
    u.axpy(b[7], &a6);
    u.axpy(b[5], &a4);
    u.axpy(b[3], &a2);
    u.axpy(b[1], &ident);
    let u = &a * &u;

    let mut inner_v = a6.scale(b[12]);
    inner_v.axpy(b[10], &a4);
    inner_v.axpy(b[8], &a2);
    let mut v = &a6 * &inner_v;
    v.axpy(b[6], &a6);
    v.axpy(b[4], &a4);
    v.axpy(b[2], &a2);
    v.axpy(b[0], &ident);

    let mut result = solve(&(&v - &u), &(&v + &u))?;
    for _ in 0..squarings {
        result = &result * &result;
    }
    Ok(result)
}

/// Solves `A X = B` by Gaussian elimination with partial pivoting.
fn solve(a: &Mat, b: &Mat) -> Result<Mat> {
    let n = a.size();
    let mut lu = a.clone();
    let mut rhs = b.clone();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| lu[(i, col)].abs().partial_cmp(&lu[(j, col)].abs()).unwrap())
            .unwrap_or(col);
        if lu[(pivot, col)].abs() < 1e-300 {
            return Err(Error::Numerical("singular Padé denominator".into()));
        }
        if pivot != col {
            for k in 0..n {
                let t = lu[(col, k)];
                lu[(col, k)] = lu[(pivot, k)];
                lu[(pivot, k)] = t;
                let t = rhs[(col, k)];
                rhs[(col, k)] = rhs[(pivot, k)];
                rhs[(pivot, k)] = t;
            }
        }
        let p = lu[(col, col)];
        for row in (col + 1)..n {
            let f = lu[(row, col)] / p;
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                lu[(row, k)] -= f * lu[(col, k)];
            }
            for k in 0..n {
                rhs[(row, k)] -= f * rhs[(col, k)];
            }
        }
    }
    let mut x = Mat::zeros(n);
    for k in 0..n {
        for row in (0..n).rev() {
            let mut s = rhs[(row, k)];
            for j in (row + 1)..n {
                s -= lu[(row, j)] * x[(j, k)];
            }
            x[(row, k)] = s / lu[(row, row)];
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::random::Sampler;

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(matrix_exp(&Mat::zeros(4)).unwrap(), Mat::identity(4));
    }

    #[test]
    fn rotation_generator_closed_form() {
        for &theta in &[0.3, 1.0, 2.5, 17.0] {
            let g = matrix_exp(&Mat::skew_unit(3, 0, 1).scale(theta)).unwrap();
            let (c, s) = (libm::cos(theta), libm::sin(theta));
            assert!((g[(0, 0)] - c).abs() < 1e-12);
            assert!((g[(0, 1)] - s).abs() < 1e-12);
            assert!((g[(1, 0)] + s).abs() < 1e-12);
            assert!((g[(2, 2)] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_and_orthogonality_for_random_skew() {
        let mut rng = Sampler::new(3);
        for n in [2usize, 5, 9, 16] {
            let mut x = Mat::zeros(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = rng.normal();
                    x[(i, j)] = v;
                    x[(j, i)] = -v;
                }
            }
            let g = matrix_exp(&x).unwrap();
            let ginv = matrix_exp(&x.scale(-1.0)).unwrap();
            assert!((&(&g * &ginv) - &Mat::identity(n)).max_abs() < 1e-10);
            assert!((&(&g * &g.transpose()) - &Mat::identity(n)).max_abs() < 1e-10);
        }
    }

    #[test]
    fn diagonal_matches_scalar_exp() {
        let g = matrix_exp(&Mat::diag(&[1.0, -2.0, 7.5])).unwrap();
        for (i, d) in [1.0f64, -2.0, 7.5].iter().enumerate() {
            assert!((g[(i, i)] / libm::exp(*d) - 1.0).abs() < 1e-12);
        }
    }
}
