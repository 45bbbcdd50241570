//! Builders for Hermann actions and for the chain and sigma shapes of
//! indecomposable Hermann actions on products.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::expand::{reduce_factor, ReduceSplit, Side};
use super::ActionModel;
use crate::catalog::Involution;
use crate::error::{arg, Result};
use crate::liealg::{AlgebraMap, AlgebraSubspace, BlockMat, LieElement, MatrixLieAlgebra, Tolerance};
use crate::spaces::{ProductSpace, SpaceFactor};

/// `fix(tau)` acting on `G / fix(sigma)` for one simple `G`.
#[derive(Debug, Clone)]
pub struct HermannSpec {
    pub tau: Involution,
    pub sigma: Involution,
}

fn same_algebra(a: &Arc<MatrixLieAlgebra>, b: &Arc<MatrixLieAlgebra>, tol: &Tolerance) -> bool {
    Arc::ptr_eq(a, b)
        || (a.shape() == b.shape() && AlgebraSubspace::full(a).same_span(&AlgebraSubspace::full(b), tol))
}

pub fn build_hermann(spec: &HermannSpec, tol: &Tolerance) -> Result<ActionModel> {
    if !same_algebra(spec.tau.algebra(), spec.sigma.algebra(), tol) {
        return Err(arg("tau and sigma act on different algebras"));
    }
    let space = Arc::new(ProductSpace::new(alloc::vec![SpaceFactor::type_i(spec.sigma.clone())])?);
    let shape = space.slot_shape().clone();
    let gens: Vec<BlockMat> = spec.tau.k().basis().iter().map(|y| BlockMat::single(&shape, 0, y.clone())).collect();
    let name = format!("hermann[{} on {}]", spec.tau.label(), spec.sigma.label());
    if gens.is_empty() {
        return ActionModel::from_subspace(name, Arc::clone(&space), AlgebraSubspace::zero(space.ambient()), tol);
    }
    ActionModel::new(name, space, &gens, tol)
}

fn group_power(l: &Arc<MatrixLieAlgebra>, n: usize) -> Result<Arc<ProductSpace>> {
    if n == 0 {
        return Err(arg("need at least one factor"));
    }
    Ok(Arc::new(ProductSpace::new((0..n).map(|_| SpaceFactor::type_ii(Arc::clone(l))).collect())?))
}

/// `(g_1, .., g_n) . (x_1, .., x_n) = (g_1 x_1 g_2^-1, .., g_n x_n sigma(g_1)^-1)`
/// on `L^n`; `sigma` is any automorphism of `l`.
pub fn build_sigma_action(
    l: &Arc<MatrixLieAlgebra>,
    n: usize,
    sigma: &AlgebraMap,
    tol: &Tolerance,
) -> Result<ActionModel> {
    if !same_algebra(l, sigma.algebra(), tol) {
        return Err(arg("sigma is not an automorphism of the given algebra"));
    }
    let r = sigma.automorphism_residual();
    if r >= tol.rel_eps {
        return Err(arg(format!("sigma is not a bracket automorphism (residual {r:.3e})")));
    }
    let space = group_power(l, n)?;
    let shape = space.slot_shape().clone();
    let mut gens = Vec::with_capacity(n * l.dim());
    for j in 0..n {
        for x in l.basis() {
            let mut e = BlockMat::zeros(&shape);
            e.blocks[2 * j] = x.clone();
            if j == 0 {
                e.blocks[2 * n - 1] = &e.blocks[2 * n - 1] + &sigma.apply(x);
            } else {
                e.blocks[2 * j - 1] = x.clone();
            }
            gens.push(e);
        }
    }
    ActionModel::new(format!("sigma[{}^{n}]", l.name()), space, &gens, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainShape {
    /// `H x L^(n-1) x K` on `L^n`.
    Open,
    /// The last factor reduced to `L/K`.
    ReducedRight,
    /// Both ends reduced: `H\L x L^(n-2) x L/K`.
    ReducedBoth,
}

/// `(h, g_1, .., g_{n-1}, k) . x = (h x_1 g_1^-1, g_1 x_2 g_2^-1, .., g_{n-1} x_n k^-1)`
/// with `h = fix(h_left)`, `k = fix(k_right)`, and the reductions of `shape`.
pub fn build_chain_action(
    l: &Arc<MatrixLieAlgebra>,
    n: usize,
    h_left: &Involution,
    k_right: &Involution,
    shape: ChainShape,
    tol: &Tolerance,
) -> Result<ActionModel> {
    if !same_algebra(l, h_left.algebra(), tol) || !same_algebra(l, k_right.algebra(), tol) {
        return Err(arg("chain involutions must act on the chain algebra"));
    }
    if shape == ChainShape::ReducedBoth && n < 2 {
        return Err(arg("reducing both ends needs at least two factors"));
    }
    let space = group_power(l, n)?;
    let sh = space.slot_shape().clone();
    let mut gens = Vec::new();
    for y in h_left.k().basis() {
        gens.push(BlockMat::single(&sh, 0, y.clone()));
    }
    for j in 0..n - 1 {
        for x in l.basis() {
            let mut e = BlockMat::zeros(&sh);
            e.blocks[2 * j + 1] = x.clone();
            e.blocks[2 * j + 2] = x.clone();
            gens.push(e);
        }
    }
    for y in k_right.k().basis() {
        gens.push(BlockMat::single(&sh, 2 * n - 1, y.clone()));
    }
    let name = format!("chain[{}^{n}; {} | {}]", l.name(), h_left.label(), k_right.label());
    let open = ActionModel::new(name.clone(), space, &gens, tol)?;
    let out = match shape {
        ChainShape::Open => open,
        ChainShape::ReducedRight => reduce_factor(
            &open,
            n - 1,
            &ReduceSplit::Symmetric { involution: k_right.clone(), side: Side::Right },
            tol,
        )?,
        ChainShape::ReducedBoth => {
            let right = ReduceSplit::Symmetric { involution: k_right.clone(), side: Side::Right };
            let a = reduce_factor(&open, n - 1, &right, tol)?;
            let left = ReduceSplit::Symmetric { involution: h_left.clone(), side: Side::Left };
            reduce_factor(&a, 0, &left, tol)?
        }
    };
    Ok(out.renamed(format!("{name} {shape:?}")))
}
