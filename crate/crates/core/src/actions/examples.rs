//! Concrete actions: the Hermann, chain and sigma shapes at small sizes,
//! the triality, Spin(7), U(3) and Spin(9) examples of indecomposable
//! cohomogeneity one actions, and a few controls.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::Serialize;

use super::builders::{build_chain_action, build_hermann, build_sigma_action, ChainShape, HermannSpec};
use super::ActionModel;
use crate::catalog::special::spin9_rep;
use crate::catalog::{Catalog, Family, Involution, SymmetricPair, Triality};
use crate::error::Result;
use crate::liealg::{AlgebraMap, BlockMat, LieElement};
use crate::spaces::{ProductSpace, SpaceFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Hermann,
    Sigma,
    Chain,
    Indecomposable,
    Control,
}

/// An action together with what is known about it independently of the
/// numerics.
#[derive(Debug, Clone)]
pub struct CatalogAction {
    pub id: String,
    pub kind: ActionKind,
    pub action: ActionModel,
    pub expected_cohomogeneity: Option<usize>,
    pub expected_hyperpolar: Option<bool>,
    /// Two groups of factor indices on which the action does not split.
    pub grouping: Option<(Vec<usize>, Vec<usize>)>,
}

fn entry(
    id: &str,
    kind: ActionKind,
    action: ActionModel,
    d: Option<usize>,
    hyperpolar: Option<bool>,
    grouping: Option<(Vec<usize>, Vec<usize>)>,
) -> CatalogAction {
    CatalogAction {
        id: id.into(),
        kind,
        action: action.renamed(id),
        expected_cohomogeneity: d,
        expected_hyperpolar: hyperpolar,
        grouping,
    }
}

fn sphere(cat: &mut Catalog, n: usize) -> Result<Involution> {
    cat.involution(SymmetricPair::BDI { p: n, q: 1 })
}

pub fn hermann(cat: &mut Catalog, tau: SymmetricPair, sigma: SymmetricPair) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let spec = HermannSpec { tau: cat.involution(tau)?, sigma: cat.involution(sigma)? };
    build_hermann(&spec, &tol)
}

/// `SO(n)` on `S^n` as the isotropy action.
pub fn hermann_sphere(cat: &mut Catalog, n: usize) -> Result<ActionModel> {
    let p = SymmetricPair::BDI { p: n, q: 1 };
    hermann(cat, p, p)
}

/// The sigma action with `sigma = id` on `L^n`.
pub fn sigma_identity(cat: &mut Catalog, family: Family, m: usize, n: usize) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let l = cat.classical(family, m)?;
    build_sigma_action(&l, n, &AlgebraMap::identity(&l), &tol)
}

pub fn chain(
    cat: &mut Catalog,
    h: SymmetricPair,
    k: SymmetricPair,
    n: usize,
    shape: ChainShape,
) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let hi = cat.involution(h)?;
    let ki = cat.involution(k)?;
    let l = Arc::clone(hi.algebra());
    build_chain_action(&l, n, &hi, &ki, shape, &tol)
}

/// `Spin(8)` on `S^7 x S^7 x M3` through the three 8-dimensional
/// representations; `M3` is `S^7` or the Grassmannian of 2-planes.
pub fn triality_action(cat: &mut Catalog, grassmannian: bool) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let so8 = cat.classical(Family::So, 8)?;
    let tri = Triality::on(&so8, &tol);
    let third = if grassmannian { cat.involution(SymmetricPair::BDI { p: 6, q: 2 })? } else { sphere(cat, 7)? };
    let factors = alloc::vec![
        SpaceFactor::type_i(sphere(cat, 7)?),
        SpaceFactor::type_i(sphere(cat, 7)?),
        SpaceFactor::type_i(third),
    ];
    let space = Arc::new(ProductSpace::new(factors)?);
    let gens = so8
        .basis()
        .iter()
        .map(|a| {
            let (b, c) = tri.images(a)?;
            Ok(BlockMat::new(alloc::vec![a.clone(), b, c]))
        })
        .collect::<Result<Vec<_>>>()?;
    let name = if grassmannian { "spin8-triality-grassmannian" } else { "spin8-triality" };
    ActionModel::new(name, space, &gens, &tol)
}

/// `Spin(7)` acting diagonally on `S^7 x S^7` by the spin representation.
pub fn spin7_pair(cat: &mut Catalog) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let spin7 = cat.embedding("spin7_in_so8")?;
    let space = Arc::new(ProductSpace::new(alloc::vec![
        SpaceFactor::type_i(sphere(cat, 7)?),
        SpaceFactor::type_i(sphere(cat, 7)?),
    ])?);
    let gens: Vec<BlockMat> =
        spin7.image.basis().iter().map(|x| BlockMat::new(alloc::vec![x.clone(), x.clone()])).collect();
    ActionModel::new("spin7-pair", space, &gens, &tol)
}

/// `U(3) x SO(6) x G2` on `SO(6) x SO(7)` by `(h x l^-1, l y k^-1)`.
pub fn u3_chain(cat: &mut Catalog) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let so6 = cat.classical(Family::So, 6)?;
    let so7 = cat.classical(Family::So, 7)?;
    let u3 = cat.embedding("u3_in_so6")?;
    let g2 = cat.embedding("g2_in_so7")?;
    let space = Arc::new(ProductSpace::new(alloc::vec![
        SpaceFactor::type_ii(Arc::clone(&so6)),
        SpaceFactor::type_ii(so7),
    ])?);
    let shape = space.slot_shape().clone();
    let mut gens = Vec::new();
    for x in u3.image.basis() {
        gens.push(BlockMat::single(&shape, 0, x.clone()));
    }
    for x in so6.basis() {
        let mut e = BlockMat::zeros(&shape);
        e.blocks[1] = x.clone();
        e.blocks[2] = x.embed(7, 0);
        gens.push(e);
    }
    for y in g2.image.basis() {
        gens.push(BlockMat::single(&shape, 3, y.clone()));
    }
    ActionModel::new("u3-chain", space, &gens, &tol)
}

/// `Spin(9)` on `S^8 x S^15` by the vector and spin representations.
pub fn spin9_pair(cat: &mut Catalog) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let so9 = cat.classical(Family::So, 9)?;
    let space = Arc::new(ProductSpace::new(alloc::vec![
        SpaceFactor::type_i(sphere(cat, 8)?),
        SpaceFactor::type_i(sphere(cat, 15)?),
    ])?);
    let gens: Vec<BlockMat> = so9.basis().iter().map(|x| BlockMat::new(alloc::vec![x.clone(), spin9_rep(x)])).collect();
    ActionModel::new("spin9-pair", space, &gens, &tol)
}

/// `SO(n+1)` acting diagonally on `S^n x S^n`.
pub fn diagonal_spheres(cat: &mut Catalog, n: usize) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let g = cat.classical(Family::So, n + 1)?;
    let space = Arc::new(ProductSpace::new(alloc::vec![
        SpaceFactor::type_i(sphere(cat, n)?),
        SpaceFactor::type_i(sphere(cat, n)?),
    ])?);
    let gens: Vec<BlockMat> = g.basis().iter().map(|x| BlockMat::new(alloc::vec![x.clone(), x.clone()])).collect();
    ActionModel::new(format!("diag-so{}-spheres", n + 1), space, &gens, &tol)
}

/// Left translations of `SU(3)` by the principal `so(3)`; not hyperpolar.
pub fn principal_so3_on_su3(cat: &mut Catalog) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let su3 = cat.classical(Family::Su, 3)?;
    let so3 = cat.embedding("so3_in_su3")?;
    let space = Arc::new(ProductSpace::new(alloc::vec![SpaceFactor::type_ii(su3)])?);
    let shape = space.slot_shape().clone();
    let gens: Vec<BlockMat> = so3.image.basis().iter().map(|x| BlockMat::single(&shape, 0, x.clone())).collect();
    ActionModel::new("principal-so3-left-on-su3", space, &gens, &tol)
}

/// Twisted conjugation on `SU(3)` by complex conjugation.
pub fn twisted_su3(cat: &mut Catalog) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let inv = cat.involution(SymmetricPair::AI { n: 3 })?;
    let l = Arc::clone(inv.algebra());
    build_sigma_action(&l, 1, inv.map(), &tol)
}

/// The five indecomposable cohomogeneity one examples, with the groupings
/// on which they do not split.
pub fn indecomposable_examples(cat: &mut Catalog) -> Result<Vec<CatalogAction>> {
    use ActionKind::Indecomposable as K;
    let g = |a: &[usize], b: &[usize]| Some((a.to_vec(), b.to_vec()));
    Ok(alloc::vec![
        entry("ex-spin8-triality", K, triality_action(cat, false)?, Some(1), Some(true), g(&[0, 1], &[2])),
        entry("ex-spin8-grassmannian", K, triality_action(cat, true)?, Some(1), Some(true), g(&[0, 1], &[2])),
        entry("ex-spin7-pair", K, spin7_pair(cat)?, Some(1), Some(true), g(&[0], &[1])),
        entry("ex-u3-chain", K, u3_chain(cat)?, Some(1), Some(true), g(&[0], &[1])),
        entry("ex-spin9-pair", K, spin9_pair(cat)?, Some(1), Some(true), g(&[0], &[1])),
    ])
}

/// The acceptance catalog: every builder shape at small sizes, the
/// indecomposable examples, and controls.
pub fn acceptance_catalog(cat: &mut Catalog) -> Result<Vec<CatalogAction>> {
    use ActionKind::*;
    use SymmetricPair as P;
    let mut out = alloc::vec![
        entry("hermann-so3-s3", Hermann, hermann_sphere(cat, 3)?, Some(1), Some(true), None),
        entry(
            "hermann-su4-aiii-aii",
            Hermann,
            hermann(cat, P::AIII { p: 2, q: 2 }, P::AII { n: 2 })?,
            Some(1),
            Some(true),
            None
        ),
        entry("hermann-so6-bdi-diii", Hermann, hermann(cat, P::BDI { p: 4, q: 2 }, P::DIII { n: 3 })?, Some(1), Some(true), None),
        entry("sigma-su2-1", Sigma, sigma_identity(cat, Family::Su, 2, 1)?, Some(1), Some(true), None),
        entry("sigma-su3-1", Sigma, sigma_identity(cat, Family::Su, 3, 1)?, Some(2), Some(true), None),
        entry("sigma-so5-2", Sigma, sigma_identity(cat, Family::So, 5, 2)?, Some(2), Some(true), None),
        entry("sigma-su2-3", Sigma, sigma_identity(cat, Family::Su, 2, 3)?, Some(1), Some(true), None),
        entry("sigma-su3-twisted", Sigma, twisted_su3(cat)?, None, Some(true), None),
        entry("chain-su3-1-open", Chain, chain(cat, P::AI { n: 3 }, P::AIII { p: 2, q: 1 }, 1, ChainShape::Open)?, Some(1), Some(true), None),
        entry(
            "chain-so5-2-right",
            Chain,
            chain(cat, P::BDI { p: 4, q: 1 }, P::BDI { p: 3, q: 2 }, 2, ChainShape::ReducedRight)?,
            Some(1),
            Some(true),
            None
        ),
        entry(
            "chain-su2-2-both",
            Chain,
            chain(cat, P::AI { n: 2 }, P::AIII { p: 1, q: 1 }, 2, ChainShape::ReducedBoth)?,
            Some(1),
            Some(true),
            None
        ),
        entry("chain-su2-3-open", Chain, chain(cat, P::AI { n: 2 }, P::AIII { p: 1, q: 1 }, 3, ChainShape::Open)?, Some(1), Some(true), None),
        entry("diag-so4-spheres", Indecomposable, diagonal_spheres(cat, 3)?, Some(1), Some(true), Some((alloc::vec![0], alloc::vec![1]))),
        entry("control-principal-so3-su3", Control, principal_so3_on_su3(cat)?, Some(5), Some(false), None),
    ];
    out.extend(indecomposable_examples(cat)?);
    Ok(out)
}

/// `G' x G''` acting on the group `G` by `(a, b) . x = a x b^-1`.
pub fn two_sided(cat: &mut Catalog, left: &str, right: &str) -> Result<ActionModel> {
    let tol = *cat.tolerance();
    let l = cat.embedding(left)?;
    let r = cat.embedding(right)?;
    if !Arc::ptr_eq(&l.ambient, &r.ambient) {
        return Err(crate::error::arg(format!("`{left}` and `{right}` have different ambients")));
    }
    let space = Arc::new(ProductSpace::new(alloc::vec![SpaceFactor::type_ii(Arc::clone(&l.ambient))])?);
    let shape = space.slot_shape().clone();
    let mut gens: Vec<BlockMat> = l.image.basis().iter().map(|x| BlockMat::single(&shape, 0, x.clone())).collect();
    gens.extend(r.image.basis().iter().map(|x| BlockMat::single(&shape, 1, x.clone())));
    ActionModel::new(format!("{left}x{right}"), space, &gens, &tol)
}
