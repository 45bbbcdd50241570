//! Involutions of the classical algebras, one representative for each
//! family of compact irreducible symmetric pairs. Each is the conjugation
//! `X -> S X S^T` by an orthogonal `S` with `S^2 = +-1`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::classical::{build_classical, realify, repeat_block, Family};
use super::octonion::{qleft, qunit};
use crate::error::{arg, Result};
use crate::liealg::{AlgebraMap, AlgebraSubspace, Mat, MatrixLieAlgebra, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SymmetricPair {
    /// `su(n) / so(n)`
    AI { n: usize },
    /// `su(2n) / sp(n)`
    AII { n: usize },
    /// `su(p+q) / s(u(p) + u(q))`
    AIII { p: usize, q: usize },
    /// `so(p+q) / so(p) + so(q)`
    BDI { p: usize, q: usize },
    /// `so(2n) / u(n)`
    DIII { n: usize },
    /// `sp(n) / u(n)`
    CI { n: usize },
    /// `sp(p+q) / sp(p) + sp(q)`
    CII { p: usize, q: usize },
}

fn so_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn sp_dim(n: usize) -> usize {
    n * (2 * n + 1)
}

impl SymmetricPair {
    /// Parses `AI 3`, `BDI 3 1`, ... (the label followed by its parameters).
    pub fn parse(words: &[&str]) -> Result<SymmetricPair> {
        let (head, rest) = words.split_first().ok_or_else(|| arg("missing involution label"))?;
        let nums = rest
            .iter()
            .map(|w| w.parse::<usize>().map_err(|_| arg(format!("`{w}` is not a non-negative integer"))))
            .collect::<Result<Vec<_>>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(arg(format!("involution {head} takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let pair = match *head {
            "AI" => want(1).map(|_| SymmetricPair::AI { n: nums[0] }),
            "AII" => want(1).map(|_| SymmetricPair::AII { n: nums[0] }),
            "AIII" => want(2).map(|_| SymmetricPair::AIII { p: nums[0], q: nums[1] }),
            "BDI" => want(2).map(|_| SymmetricPair::BDI { p: nums[0], q: nums[1] }),
            "DIII" => want(1).map(|_| SymmetricPair::DIII { n: nums[0] }),
            "CI" => want(1).map(|_| SymmetricPair::CI { n: nums[0] }),
            "CII" => want(2).map(|_| SymmetricPair::CII { p: nums[0], q: nums[1] }),
            other => Err(arg(format!("unknown involution `{other}`"))),
        }?;
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            SymmetricPair::AI { n } => n >= 2,
            SymmetricPair::AII { n } => n >= 2,
            SymmetricPair::AIII { p, q } | SymmetricPair::CII { p, q } => p >= 1 && q >= 1,
            SymmetricPair::BDI { p, q } => p >= 1 && q >= 1 && p + q >= 3,
            SymmetricPair::DIII { n } => n >= 2,
            SymmetricPair::CI { n } => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(arg(format!("degenerate symmetric pair {}", self.label())))
        }
    }

    pub fn label(&self) -> String {
        match *self {
            SymmetricPair::AI { n } => format!("AI {n}"),
            SymmetricPair::AII { n } => format!("AII {n}"),
            SymmetricPair::AIII { p, q } => format!("AIII {p} {q}"),
            SymmetricPair::BDI { p, q } => format!("BDI {p} {q}"),
            SymmetricPair::DIII { n } => format!("DIII {n}"),
            SymmetricPair::CI { n } => format!("CI {n}"),
            SymmetricPair::CII { p, q } => format!("CII {p} {q}"),
        }
    }

    /// The ambient algebra `g` as a family and its parameter.
    pub fn ambient(&self) -> (Family, usize) {
        match *self {
            SymmetricPair::AI { n } => (Family::Su, n),
            SymmetricPair::AII { n } => (Family::Su, 2 * n),
            SymmetricPair::AIII { p, q } => (Family::Su, p + q),
            SymmetricPair::BDI { p, q } => (Family::So, p + q),
            SymmetricPair::DIII { n } => (Family::So, 2 * n),
            SymmetricPair::CI { n } => (Family::Sp, n),
            SymmetricPair::CII { p, q } => (Family::Sp, p + q),
        }
    }

    pub fn fixed_dim(&self) -> usize {
        match *self {
            SymmetricPair::AI { n } => so_dim(n),
            SymmetricPair::AII { n } => sp_dim(n),
            SymmetricPair::AIII { p, q } => p * p + q * q - 1,
            SymmetricPair::BDI { p, q } => so_dim(p) + so_dim(q),
            SymmetricPair::DIII { n } | SymmetricPair::CI { n } => n * n,
            SymmetricPair::CII { p, q } => sp_dim(p) + sp_dim(q),
        }
    }

    /// Dimension of the symmetric space `G/K`.
    pub fn space_dim(&self) -> usize {
        let (f, n) = self.ambient();
        f.dim(n) - self.fixed_dim()
    }

    /// Rank of the symmetric space `G/K`.
    pub fn space_rank(&self) -> usize {
        match *self {
            SymmetricPair::AI { n } => n - 1,
            SymmetricPair::AII { n } => n - 1,
            SymmetricPair::AIII { p, q } | SymmetricPair::BDI { p, q } | SymmetricPair::CII { p, q } => p.min(q),
            SymmetricPair::DIII { n } => n / 2,
            SymmetricPair::CI { n } => n,
        }
    }

    /// The orthogonal matrix `S` with `theta(X) = S X S^T`.
    pub fn conjugator(&self) -> Mat {
        match *self {
            SymmetricPair::AI { n } => complex_conjugation(n),
            SymmetricPair::AII { n } => {
                let j = realify(&symplectic_j(n), &Mat::zeros(2 * n));
                &j * &complex_conjugation(2 * n)
            }
            SymmetricPair::AIII { p, q } => {
                let i = ipq(p, q);
                realify(&i, &Mat::zeros(p + q))
            }
            SymmetricPair::BDI { p, q } => ipq(p, q),
            SymmetricPair::DIII { n } => symplectic_j(n),
            SymmetricPair::CI { n } => repeat_block(&qleft(&qunit(1)), n),
            SymmetricPair::CII { p, q } => ipq(4 * p, 4 * q),
        }
    }
}

/// `diag(I_p, -I_q)`
pub fn ipq(p: usize, q: usize) -> Mat {
    let d: Vec<f64> = (0..p + q).map(|i| if i < p { 1.0 } else { -1.0 }).collect();
    Mat::diag(&d)
}

/// `[[0, -I], [I, 0]]` of size `2n`.
pub fn symplectic_j(n: usize) -> Mat {
    let mut m = Mat::zeros(2 * n);
    for i in 0..n {
        m[(i, i + n)] = -1.0;
        m[(i + n, i)] = 1.0;
    }
    m
}

/// Realified complex conjugation on `C^n`, `diag(I_n, -I_n)`.
pub fn complex_conjugation(n: usize) -> Mat {
    ipq(n, n)
}

/// An involution of a concrete algebra together with its Cartan
/// decomposition `g = k + p`.
#[derive(Debug, Clone)]
pub struct Involution {
    label: String,
    pair: Option<SymmetricPair>,
    map: AlgebraMap,
    k: AlgebraSubspace,
    p: AlgebraSubspace,
}

impl Involution {
    /// The catalog representative, acting on a freshly built ambient algebra.
    pub fn from_pair(pair: SymmetricPair) -> Result<Involution> {
        pair.validate()?;
        let (f, n) = pair.ambient();
        let g = Arc::new(build_classical(f, n)?);
        Involution::from_pair_on(pair, &g)
    }

    /// The catalog representative acting on `algebra`, which must be the
    /// catalog algebra of the matching family and size.
    pub fn from_pair_on(pair: SymmetricPair, algebra: &Arc<MatrixLieAlgebra>) -> Result<Involution> {
        pair.validate()?;
        let (f, n) = pair.ambient();
        if *algebra.shape() != f.matrix_size(n) || algebra.dim() != f.dim(n) {
            return Err(arg(format!(
                "involution {} needs {}({n}), got `{}`",
                pair.label(),
                f.label(),
                algebra.name()
            )));
        }
        let s = pair.conjugator();
        let inv = Involution::from_conjugator(pair.label(), algebra, &s, &Tolerance::default())?;
        debug_assert_eq!(inv.k.dim(), pair.fixed_dim());
        Ok(Involution { pair: Some(pair), ..inv })
    }

    /// `X -> S X S^T` for an orthogonal `S`; checked to preserve the algebra
    /// and to square to the identity.
    pub fn from_conjugator(
        label: impl Into<String>,
        algebra: &Arc<MatrixLieAlgebra>,
        s: &Mat,
        tol: &Tolerance,
    ) -> Result<Involution> {
        let label = label.into();
        if s.size() != *algebra.shape() {
            return Err(arg(format!("conjugator for `{label}` has the wrong size")));
        }
        let st = s.transpose();
        let f = |x: &Mat| &(s * x) * &st;
        let esc = AlgebraMap::escape_residual(algebra, f);
        if esc >= tol.rel_eps {
            return Err(arg(format!("`{label}` does not preserve `{}` (residual {esc:.3e})", algebra.name())));
        }
        Involution::from_map(label, AlgebraMap::from_fn(algebra, f), tol)
    }

    /// Any involutive automorphism.
    pub fn from_map(label: impl Into<String>, map: AlgebraMap, tol: &Tolerance) -> Result<Involution> {
        let label = label.into();
        let r = map.involution_residual().max(map.automorphism_residual());
        if r >= tol.rel_eps {
            return Err(arg(format!("`{label}` is not an involutive automorphism (residual {r:.3e})")));
        }
        let (k, p) = cartan_decomposition(&map, tol);
        Ok(Involution { label, pair: None, map, k, p })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn pair(&self) -> Option<SymmetricPair> {
        self.pair
    }

    pub fn map(&self) -> &AlgebraMap {
        &self.map
    }

    pub fn algebra(&self) -> &Arc<MatrixLieAlgebra> {
        self.map.algebra()
    }

    pub fn apply(&self, x: &Mat) -> Mat {
        self.map.apply(x)
    }

    /// Fixed subalgebra.
    pub fn k(&self) -> &AlgebraSubspace {
        &self.k
    }

    /// `-1` eigenspace.
    pub fn p(&self) -> &AlgebraSubspace {
        &self.p
    }
}

/// `(k, p)`: the `+1` and `-1` eigenspaces of an involution.
pub fn cartan_decomposition(theta: &AlgebraMap, tol: &Tolerance) -> (AlgebraSubspace, AlgebraSubspace) {
    let g = theta.algebra();
    let full = AlgebraSubspace::full(g);
    let k = full.kernel(|x| g.coords(&(&theta.apply(x) - x)), tol);
    let p = full.kernel(|x| g.coords(&(&theta.apply(x) + x)), tol);
    (k, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Sampler;

    fn all_small_pairs() -> Vec<SymmetricPair> {
        alloc::vec![
            SymmetricPair::AI { n: 2 },
            SymmetricPair::AI { n: 4 },
            SymmetricPair::AII { n: 2 },
            SymmetricPair::AII { n: 3 },
            SymmetricPair::AIII { p: 2, q: 1 },
            SymmetricPair::AIII { p: 2, q: 2 },
            SymmetricPair::BDI { p: 3, q: 1 },
            SymmetricPair::BDI { p: 5, q: 2 },
            SymmetricPair::DIII { n: 3 },
            SymmetricPair::DIII { n: 4 },
            SymmetricPair::CI { n: 1 },
            SymmetricPair::CI { n: 2 },
            SymmetricPair::CII { p: 1, q: 1 },
            SymmetricPair::CII { p: 2, q: 1 },
        ]
    }

    #[test]
    fn fixed_dimensions_match_formulas() {
        for pair in all_small_pairs() {
            let inv = Involution::from_pair(pair).unwrap();
            assert_eq!(inv.k().dim(), pair.fixed_dim(), "{}", pair.label());
            assert_eq!(inv.p().dim(), pair.space_dim(), "{}", pair.label());
        }
    }

    #[test]
    fn cartan_relations_hold() {
        let tol = Tolerance::default();
        for pair in all_small_pairs() {
            let inv = Involution::from_pair(pair).unwrap();
            assert!(inv.k().is_subalgebra(&tol));
            // [p, p] lands in k
            let p = inv.p().basis();
            for i in 0..p.len().min(6) {
                for j in 0..p.len().min(6) {
                    let z = crate::liealg::bracket(&p[i], &p[j]).unwrap();
                    assert!(inv.p().coords(&z).iter().all(|c| c.abs() < 1e-12));
                }
            }
        }
    }

    #[test]
    fn ranks_of_small_spaces_by_centralizer() {
        let tol = Tolerance::default();
        let mut rng = Sampler::new(5);
        for pair in all_small_pairs() {
            let inv = Involution::from_pair(pair).unwrap();
            let x = inv.p().element(&rng.normal_vec(inv.p().dim()));
            let c = inv.p().centralizer_in(&x, &tol).unwrap();
            assert_eq!(c.dim(), pair.space_rank(), "{}", pair.label());
        }
    }

    #[test]
    fn parse_roundtrip_and_rejections() {
        for pair in all_small_pairs() {
            let l = pair.label();
            let words: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(SymmetricPair::parse(&words).unwrap(), pair);
        }
        assert!(SymmetricPair::parse(&["BDI", "1", "1"]).is_err());
        assert!(SymmetricPair::parse(&["XYZ", "1"]).is_err());
        assert!(SymmetricPair::parse(&["AI"]).is_err());
    }

    #[test]
    fn non_involution_is_rejected() {
        let g = Arc::new(build_classical(Family::So, 3).unwrap());
        let rot = crate::liealg::matrix_exp(&Mat::skew_unit(3, 0, 1).scale(0.7)).unwrap();
        assert!(Involution::from_conjugator("rot", &g, &rot, &Tolerance::default()).is_err());
    }
}
