//! Closed-form dimensions and ranks of compact groups and symmetric spaces,
//! for arguments that only need integer arithmetic.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::involution::SymmetricPair;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Group {
    SO(usize),
    Spin(usize),
    SU(usize),
    U(usize),
    Sp(usize),
    G2,
    /// `Sp(n) . Sp(1)`
    SpSp1(usize),
    /// `Sp(n) . U(1)`
    SpU1(usize),
    /// `S(U(p) x U(q))`
    SUU(usize, usize),
    Product(Vec<Group>),
    /// A group of the given dimension and rank known only by name.
    Named { label: String, dim: usize, rank: usize },
    Diagonal(Box<Group>),
}

impl Group {
    pub fn dim(&self) -> usize {
        match self {
            Group::SO(n) | Group::Spin(n) => n * n.saturating_sub(1) / 2,
            Group::SU(n) => (n * n).saturating_sub(1),
            Group::U(n) => n * n,
            Group::Sp(n) => n * (2 * n + 1),
            Group::G2 => 14,
            Group::SpSp1(n) => n * (2 * n + 1) + 3,
            Group::SpU1(n) => n * (2 * n + 1) + 1,
            Group::SUU(p, q) => p * p + q * q - 1,
            Group::Product(v) => v.iter().map(Group::dim).sum(),
            Group::Named { dim, .. } => *dim,
            Group::Diagonal(g) => g.dim(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Group::SO(n) | Group::Spin(n) => n / 2,
            Group::SU(n) => n.saturating_sub(1),
            Group::U(n) | Group::Sp(n) => *n,
            Group::G2 => 2,
            Group::SpSp1(n) | Group::SpU1(n) => n + 1,
            Group::SUU(p, q) => p + q - 1,
            Group::Product(v) => v.iter().map(Group::rank).sum(),
            Group::Named { rank, .. } => *rank,
            Group::Diagonal(g) => g.rank(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Group::SO(n) => format!("SO({n})"),
            Group::Spin(n) => format!("Spin({n})"),
            Group::SU(n) => format!("SU({n})"),
            Group::U(n) => format!("U({n})"),
            Group::Sp(n) => format!("Sp({n})"),
            Group::G2 => "G2".into(),
            Group::SpSp1(n) => format!("Sp({n})Sp(1)"),
            Group::SpU1(n) => format!("Sp({n})U(1)"),
            Group::SUU(p, q) => format!("S(U({p})xU({q}))"),
            Group::Product(v) => v.iter().map(Group::label).collect::<Vec<_>>().join("x"),
            Group::Named { label, .. } => label.clone(),
            Group::Diagonal(g) => format!("Delta{}", g.label()),
        }
    }
}

/// A factor of a product space: a compact group with a bi-invariant metric,
/// or an irreducible symmetric space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Space {
    Group(Group),
    Symmetric(SymmetricPair),
}

impl Space {
    pub fn dim(&self) -> usize {
        match self {
            Space::Group(g) => g.dim(),
            Space::Symmetric(p) => p.space_dim(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Space::Group(g) => g.rank(),
            Space::Symmetric(p) => p.space_rank(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Space::Group(g) => g.label(),
            Space::Symmetric(p) => p.label(),
        }
    }
}

/// `dim h >= dim M - rk M`, the necessary condition for a hyperpolar action
/// of cohomogeneity at most the rank.
pub fn dim_bound(h: &[Group], m: &[Space]) -> (usize, usize, bool) {
    let dh: usize = h.iter().map(Group::dim).sum();
    let dm: usize = m.iter().map(Space::dim).sum();
    let rk: usize = m.iter().map(Space::rank).sum();
    let rhs = dm - rk;
    (dh, rhs, dh >= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Family;

    #[test]
    fn group_dims_match_classical_formulas() {
        for n in 2..9 {
            assert_eq!(Group::SO(n).dim(), Family::So.dim(n));
            assert_eq!(Group::SU(n).dim(), Family::Su.dim(n));
            assert_eq!(Group::Sp(n).dim(), Family::Sp.dim(n));
            assert_eq!(Group::SO(n).rank(), Family::So.rank(n));
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(Group::Spin(9).dim(), 36);
        assert_eq!(Group::SpSp1(4).dim(), 39);
        assert_eq!(Space::Symmetric(SymmetricPair::DIII { n: 8 }).dim(), 56);
        assert_eq!(Space::Symmetric(SymmetricPair::DIII { n: 8 }).rank(), 4);
        assert_eq!(Space::Symmetric(SymmetricPair::BDI { p: 5, q: 2 }).dim(), 10);
    }

    #[test]
    fn bound_arithmetic() {
        let h = [Group::SpSp1(2), Group::SO(7), Group::SpSp1(2)];
        let m = [Space::Group(Group::SO(8)), Space::Group(Group::SO(8))];
        assert_eq!(dim_bound(&h, &m), (47, 48, false));
    }
}
