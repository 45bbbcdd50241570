//! Octonions and quaternions in a fixed basis.
//!
//! Imaginary octonion units `e1..e7` multiply along the oriented lines of
//! the Fano plane `(i, i+1, i+3) mod 7`: `e_a e_b = e_c` for each listed
//! triple and its cyclic rotations, `e_b e_a = -e_c`, and `e_i^2 = -1`.

use crate::liealg::Mat;

pub const FANO: [(usize, usize, usize); 7] = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)];

/// `TABLE[a][b] = (sign, c)` with `e_a e_b = sign * e_c`.
fn table() -> [[(f64, usize); 8]; 8] {
    let mut t = [[(0.0, 0); 8]; 8];
    for a in 0..8 {
        t[0][a] = (1.0, a);
        t[a][0] = (1.0, a);
    }
    for a in 1..8 {
        t[a][a] = (-1.0, 0);
    }
    for &(a, b, c) in &FANO {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            t[x][y] = (1.0, z);
            t[y][x] = (-1.0, z);
        }
    }
    t
}

pub type Octonion = [f64; 8];

pub fn unit(i: usize) -> Octonion {
    let mut e = [0.0; 8];
    e[i] = 1.0;
    e
}

pub fn mul(x: &Octonion, y: &Octonion) -> Octonion {
    let t = table();
    let mut out = [0.0; 8];
    for a in 0..8 {
        if x[a] == 0.0 {
            continue;
        }
        for b in 0..8 {
            let (s, c) = t[a][b];
            out[c] += s * x[a] * y[b];
        }
    }
    out
}

pub fn conj(x: &Octonion) -> Octonion {
    let mut out = [0.0; 8];
    out[0] = x[0];
    for i in 1..8 {
        out[i] = -x[i];
    }
    out
}

/// Matrix of `y -> u y` on `R^8`.
pub fn left_mul(u: &Octonion) -> Mat {
    let mut m = Mat::zeros(8);
    for j in 0..8 {
        let col = mul(u, &unit(j));
        for i in 0..8 {
            m[(i, j)] = col[i];
        }
    }
    m
}

/// Matrix of `y -> y u` on `R^8`.
pub fn right_mul(u: &Octonion) -> Mat {
    let mut m = Mat::zeros(8);
    for j in 0..8 {
        let col = mul(&unit(j), u);
        for i in 0..8 {
            m[(i, j)] = col[i];
        }
    }
    m
}

pub type Quaternion = [f64; 4];

/// Hamilton product with `ij = k`, `jk = i`, `ki = j`.
pub fn qmul(p: &Quaternion, q: &Quaternion) -> Quaternion {
    let [a1, b1, c1, d1] = *p;
    let [a2, b2, c2, d2] = *q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

pub fn qunit(i: usize) -> Quaternion {
    let mut e = [0.0; 4];
    e[i] = 1.0;
    e
}

pub fn qleft(p: &Quaternion) -> Mat {
    let mut m = Mat::zeros(4);
    for j in 0..4 {
        let col = qmul(p, &qunit(j));
        for i in 0..4 {
            m[(i, j)] = col[i];
        }
    }
    m
}

pub fn qright(p: &Quaternion) -> Mat {
    let mut m = Mat::zeros(4);
    for j in 0..4 {
        let col = qmul(&qunit(j), p);
        for i in 0..4 {
            m[(i, j)] = col[i];
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Sampler;

    fn random_oct(rng: &mut Sampler) -> Octonion {
        let v = rng.normal_vec(8);
        let mut o = [0.0; 8];
        o.copy_from_slice(&v);
        o
    }

    fn n2(x: &Octonion) -> f64 {
        x.iter().map(|a| a * a).sum()
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut rng = Sampler::new(1);
        for _ in 0..20 {
            let (x, y) = (random_oct(&mut rng), random_oct(&mut rng));
            let lhs = n2(&mul(&x, &y));
            assert!((lhs - n2(&x) * n2(&y)).abs() < 1e-10 * lhs.max(1.0));
        }
    }

    #[test]
    fn alternative_but_not_associative() {
        let mut rng = Sampler::new(2);
        let (x, y) = (random_oct(&mut rng), random_oct(&mut rng));
        let a = mul(&mul(&x, &x), &y);
        let b = mul(&x, &mul(&x, &y));
        assert!(a.iter().zip(&b).all(|(p, q)| (p - q).abs() < 1e-10));
        let (e1, e2, e3) = (unit(1), unit(2), unit(3));
        let l = mul(&mul(&e1, &e2), &e3);
        let r = mul(&e1, &mul(&e2, &e3));
        assert!(l.iter().zip(&r).any(|(p, q)| (p - q).abs() > 0.5));
    }

    #[test]
    fn left_multiplication_by_unit_imaginary_is_a_complex_structure() {
        for i in 1..8 {
            let l = left_mul(&unit(i));
            assert!(l.is_skew(0.0));
            assert!((&(&l * &l) + &Mat::identity(8)).max_abs() < 1e-15);
        }
    }

    #[test]
    fn transpose_of_left_mult_is_left_mult_by_conjugate() {
        let mut rng = Sampler::new(3);
        let u = random_oct(&mut rng);
        assert!((&left_mul(&u).transpose() - &left_mul(&conj(&u))).max_abs() < 1e-14);
    }

    #[test]
    fn quaternion_left_and_right_commute() {
        for i in 1..4 {
            for j in 1..4 {
                let (l, r) = (qleft(&qunit(i)), qright(&qunit(j)));
                assert!((&(&l * &r) - &(&r * &l)).max_abs() == 0.0);
            }
        }
        assert_eq!(qmul(&qunit(1), &qunit(2)), qunit(3));
    }
}
