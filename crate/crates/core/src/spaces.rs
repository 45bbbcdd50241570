//! Products of compact Lie groups and compact symmetric spaces.
//!
//! A factor is either `G/K` given by `(g, theta)` (type I, one slot: `g`
//! acting from the left) or a group `L` with bi-invariant metric (type II,
//! two slots: `l` acting from the left and from the right). The isometry
//! algebra of the product is the block-diagonal algebra with one block per
//! slot.
//!
//! Tangent vectors are always pulled back to the base point: for type I by
//! `Ad(g^-1)` into `p`, for type II by right translation into `l`. This
//! "p-model" of the tangent space carries the orthonormal basis of `p`
//! (resp. `l`) and the metric `-trace` on each factor.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::catalog::Involution;
use crate::error::{arg, Result};
use crate::liealg::{
    bracket, matrix_exp, AlgebraSubspace, BlockMat, LieElement, Mat, MatrixLieAlgebra, Sampler, Tolerance,
};

#[derive(Debug, Clone)]
pub enum SpaceFactor {
    TypeI { involution: Involution },
    TypeII { algebra: Arc<MatrixLieAlgebra>, full: AlgebraSubspace },
}

impl SpaceFactor {
    pub fn type_i(involution: Involution) -> Self {
        SpaceFactor::TypeI { involution }
    }

    pub fn type_ii(algebra: Arc<MatrixLieAlgebra>) -> Self {
        let full = AlgebraSubspace::full(&algebra);
        SpaceFactor::TypeII { algebra, full }
    }

    pub fn algebra(&self) -> &Arc<MatrixLieAlgebra> {
        match self {
            SpaceFactor::TypeI { involution } => involution.algebra(),
            SpaceFactor::TypeII { algebra, .. } => algebra,
        }
    }

    pub fn is_type_i(&self) -> bool {
        matches!(self, SpaceFactor::TypeI { .. })
    }

    pub fn slot_count(&self) -> usize {
        if self.is_type_i() {
            1
        } else {
            2
        }
    }

    pub fn matrix_size(&self) -> usize {
        *self.algebra().shape()
    }

    /// `p` for type I, all of `l` for type II.
    pub fn model(&self) -> &AlgebraSubspace {
        match self {
            SpaceFactor::TypeI { involution } => involution.p(),
            SpaceFactor::TypeII { full, .. } => full,
        }
    }

    pub fn dim(&self) -> usize {
        self.model().dim()
    }

    pub fn label(&self) -> String {
        match self {
            SpaceFactor::TypeI { involution } => format!("{}/{}", involution.algebra().name(), involution.label()),
            SpaceFactor::TypeII { algebra, .. } => String::from(algebra.name()),
        }
    }

    /// Rank: dimension of the centralizer of a generic element of the model
    /// inside the model (minimum over a few samples).
    pub fn rank(&self, rng: &mut Sampler, tol: &Tolerance) -> usize {
        let model = self.model();
        if model.dim() == 0 {
            return 0;
        }
        (0..3)
            .map(|_| {
                let x = model.element(&rng.normal_vec(model.dim()));
                model.centralizer_in(&x, tol).map(|c| c.dim()).unwrap_or(model.dim())
            })
            .min()
            .unwrap_or(0)
    }
}

/// A point of the product, one group element per factor (a coset
/// representative for type I factors).
#[derive(Debug, Clone, PartialEq)]
pub struct PointSample {
    pub elements: Vec<Mat>,
}

impl PointSample {
    pub fn restrict(&self, factors: &[usize]) -> PointSample {
        PointSample { elements: factors.iter().map(|&i| self.elements[i].clone()).collect() }
    }
}

/// The differential at a point of the orbit map `h -> T_p M`, stored as
/// one dual vector (a list of `(slot, weight)` pairs) per model coordinate.
#[derive(Debug, Clone)]
pub struct OrbitMap {
    rows: Vec<Vec<(usize, Mat)>>,
}

impl OrbitMap {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, x: &BlockMat) -> Vec<f64> {
        self.rows.iter().map(|row| row.iter().map(|(s, w)| w.dot(x.block(*s))).sum()).collect()
    }

    pub fn image_columns(&self, h: &AlgebraSubspace<BlockMat>) -> Vec<Vec<f64>> {
        h.basis().iter().map(|x| self.apply(x)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct ProductSpace {
    factors: Vec<SpaceFactor>,
    first_slot: Vec<usize>,
    model_offset: Vec<usize>,
    ambient: Arc<MatrixLieAlgebra<BlockMat>>,
}

impl ProductSpace {
    pub fn new(factors: Vec<SpaceFactor>) -> Result<ProductSpace> {
        if factors.is_empty() {
            return Err(arg("a product space needs at least one factor"));
        }
        let mut first_slot = Vec::with_capacity(factors.len());
        let mut model_offset = Vec::with_capacity(factors.len());
        let mut shape = Vec::new();
        let mut off = 0;
        for f in &factors {
            first_slot.push(shape.len());
            model_offset.push(off);
            off += f.dim();
            for _ in 0..f.slot_count() {
                shape.push(f.matrix_size());
            }
        }
        let len = BlockMat::flat_len(&shape);
        let mut flat = Vec::new();
        let mut pos = 0;
        for f in &factors {
            let n2 = f.matrix_size() * f.matrix_size();
            for _ in 0..f.slot_count() {
                for b in f.algebra().basis() {
                    let mut v = alloc::vec![0.0; len];
                    v[pos..pos + n2].copy_from_slice(b.as_slice());
                    flat.push(v);
                }
                pos += n2;
            }
        }
        let names: Vec<String> = factors.iter().map(SpaceFactor::label).collect();
        let ambient = MatrixLieAlgebra::from_orthonormal(format!("isom({})", names.join(" x ")), shape, flat);
        Ok(ProductSpace { factors, first_slot, model_offset, ambient: Arc::new(ambient) })
    }

    pub fn factors(&self) -> &[SpaceFactor] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &SpaceFactor {
        &self.factors[i]
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn ambient(&self) -> &Arc<MatrixLieAlgebra<BlockMat>> {
        &self.ambient
    }

    pub fn slot_shape(&self) -> &Vec<usize> {
        self.ambient.shape()
    }

    pub fn slot_count(&self) -> usize {
        self.slot_shape().len()
    }

    /// Slots of factor `i` (`[g]` for type I, `[left, right]` for type II).
    pub fn slots(&self, i: usize) -> core::ops::Range<usize> {
        let s = self.first_slot[i];
        s..s + self.factors[i].slot_count()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(SpaceFactor::dim).sum()
    }

    /// Coordinates of factor `i` inside the p-model vector.
    pub fn model_range(&self, i: usize) -> core::ops::Range<usize> {
        let o = self.model_offset[i];
        o..o + self.factors[i].dim()
    }

    pub fn label(&self) -> String {
        let names: Vec<String> = self.factors.iter().map(SpaceFactor::label).collect();
        names.join(" x ")
    }

    pub fn rank(&self, rng: &mut Sampler, tol: &Tolerance) -> usize {
        self.factors.iter().map(|f| f.rank(rng, tol)).sum()
    }

    pub fn base_point(&self) -> PointSample {
        PointSample { elements: self.factors.iter().map(|f| Mat::identity(f.matrix_size())).collect() }
    }

    /// `exp(Z_i)` with `Z_i` a standard Gaussian element of each model.
    pub fn sample_point(&self, rng: &mut Sampler) -> Result<PointSample> {
        let elements = self
            .factors
            .iter()
            .map(|f| matrix_exp(&f.model().element(&rng.normal_vec(f.dim()))))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointSample { elements })
    }

    fn check_point(&self, point: &PointSample) -> Result<()> {
        if point.elements.len() != self.factors.len() {
            return Err(arg(format!(
                "point has {} components, space has {} factors",
                point.elements.len(),
                self.factors.len()
            )));
        }
        for (g, f) in point.elements.iter().zip(&self.factors) {
            if g.size() != f.matrix_size() {
                return Err(arg("point component has the wrong matrix size"));
            }
        }
        Ok(())
    }

    pub fn orbit_map_at(&self, point: &PointSample) -> Result<OrbitMap> {
        self.check_point(point)?;
        let mut rows = Vec::with_capacity(self.dim());
        for (i, (f, g)) in self.factors.iter().zip(&point.elements).enumerate() {
            let s = self.first_slot[i];
            let gt = g.transpose();
            for b in f.model().basis() {
                if f.is_type_i() {
                    rows.push(alloc::vec![(s, &(g * b) * &gt)]);
                } else {
                    rows.push(alloc::vec![(s, b.clone()), (s + 1, (&(&gt * b) * g).scale(-1.0))]);
                }
            }
        }
        Ok(OrbitMap { rows })
    }

    /// Per-factor matrices of a p-model vector.
    pub fn model_elements(&self, v: &[f64]) -> Vec<Mat> {
        self.factors.iter().enumerate().map(|(i, f)| f.model().element(&v[self.model_range(i)])).collect()
    }

    /// Norm of the componentwise bracket of two p-model vectors.
    pub fn model_bracket_norm(&self, a: &[f64], b: &[f64]) -> f64 {
        let (xa, xb) = (self.model_elements(a), self.model_elements(b));
        let s: f64 = xa
            .iter()
            .zip(&xb)
            .map(|(x, y)| {
                let z = bracket(x, y).expect("same factor shapes");
                z.dot(&z)
            })
            .sum();
        libm::sqrt(s)
    }

    /// The subproduct on `factors` (in the given order), and for each of its
    /// slots the slot of `self` it came from.
    pub fn subproduct(&self, factors: &[usize]) -> Result<(ProductSpace, Vec<usize>)> {
        let mut seen = alloc::vec![false; self.factors.len()];
        for &i in factors {
            if i >= self.factors.len() || seen[i] {
                return Err(arg(format!("invalid or repeated factor index {i}")));
            }
            seen[i] = true;
        }
        let sub = ProductSpace::new(factors.iter().map(|&i| self.factors[i].clone()).collect())?;
        let slot_map = factors.iter().flat_map(|&i| self.slots(i)).collect();
        Ok((sub, slot_map))
    }

    /// A block element of `self` built from one block per slot of `self`,
    /// where slots listed in `slot_map` get the blocks of `x` and the rest are zero.
    pub fn lift_from(&self, x: &BlockMat, slot_map: &[usize]) -> BlockMat {
        let mut out = BlockMat::zeros(self.slot_shape());
        for (k, &s) in slot_map.iter().enumerate() {
            out.blocks[s] = x.blocks[k].clone();
        }
        out
    }

    /// Restriction of an element of `self` to the slots in `slot_map`.
    pub fn project_to(&self, x: &BlockMat, slot_map: &[usize]) -> BlockMat {
        BlockMat::new(slot_map.iter().map(|&s| x.blocks[s].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Catalog, Family, SymmetricPair};

    fn sphere(cat: &mut Catalog, n: usize) -> SpaceFactor {
        SpaceFactor::type_i(cat.involution(SymmetricPair::BDI { p: n, q: 1 }).unwrap())
    }

    #[test]
    fn dims_slots_and_ranks() {
        let mut cat = Catalog::new(Tolerance::default());
        let so3 = cat.classical(Family::So, 3).unwrap();
        let m = ProductSpace::new(alloc::vec![sphere(&mut cat, 4), SpaceFactor::type_ii(so3)]).unwrap();
        assert_eq!(m.dim(), 4 + 3);
        assert_eq!(m.slot_count(), 3);
        assert_eq!(m.slots(1), 1..3);
        assert_eq!(m.ambient().dim(), 10 + 3 + 3);
        assert_eq!(m.rank(&mut Sampler::new(0), &Tolerance::default()), 2);
    }

    #[test]
    fn orbit_map_of_full_isometry_algebra_is_onto() {
        let tol = Tolerance::default();
        let mut cat = Catalog::new(tol);
        let su3 = cat.classical(Family::Su, 3).unwrap();
        let inv = cat.involution(SymmetricPair::AIII { p: 2, q: 1 }).unwrap();
        let m = ProductSpace::new(alloc::vec![SpaceFactor::type_i(inv), SpaceFactor::type_ii(su3)]).unwrap();
        let full = AlgebraSubspace::full(m.ambient());
        let p = m.sample_point(&mut Sampler::new(3)).unwrap();
        let cols = m.orbit_map_at(&p).unwrap().image_columns(&full);
        assert_eq!(crate::liealg::linear::rank(&cols, &tol), m.dim());
    }

    #[test]
    fn type_ii_isotropy_at_identity_is_the_diagonal() {
        let tol = Tolerance::default();
        let mut cat = Catalog::new(tol);
        let so4 = cat.classical(Family::So, 4).unwrap();
        let m = ProductSpace::new(alloc::vec![SpaceFactor::type_ii(so4)]).unwrap();
        let om = m.orbit_map_at(&m.base_point()).unwrap();
        let iso = AlgebraSubspace::full(m.ambient()).kernel(|x| om.apply(x), &tol);
        assert_eq!(iso.dim(), 6);
        for b in iso.basis() {
            assert!((&b.blocks[0] - &b.blocks[1]).max_abs() < 1e-12);
        }
    }

    #[test]
    fn subproduct_slot_map() {
        let mut cat = Catalog::new(Tolerance::default());
        let so3 = cat.classical(Family::So, 3).unwrap();
        let m = ProductSpace::new(alloc::vec![
            SpaceFactor::type_ii(so3.clone()),
            sphere(&mut cat, 2),
            SpaceFactor::type_ii(so3)
        ])
        .unwrap();
        let (sub, map) = m.subproduct(&[2, 1]).unwrap();
        assert_eq!(map, alloc::vec![3, 4, 2]);
        assert_eq!(sub.dim(), 5);
        assert!(m.subproduct(&[1, 1]).is_err());
    }
}
