//! Expanding and reducing factors, and the group lift.
//!
//! Expanding a type I factor `G/K` replaces it by the group `G`, with `h`
//! acting from the left and an extra `k` acting from the right. Expanding a
//! type II factor `L` replaces it by `L x L`: the old left and right actions
//! become left actions on the two copies, and an extra diagonal `l` acts
//! from the right on both.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::ActionModel;
use crate::catalog::Involution;
use crate::error::{arg, Error, Result};
use crate::liealg::{AlgebraSubspace, BlockMat, LieElement, Mat, Tolerance};
use crate::spaces::{ProductSpace, SpaceFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A declared splitting `h = h' + k` used to reduce a type II factor.
#[derive(Debug, Clone)]
pub enum ReduceSplit {
    /// `k = fix(theta)` acting on one side of factor `i`; the factor becomes
    /// `L/K` acted on through the other side.
    Symmetric { involution: Involution, side: Side },
    /// `k = Delta l` acting on the same side of factors `i` and `partner`
    /// (both copies of `L`); the pair becomes one copy of `L`.
    Diagonal { partner: usize, side: Side },
}

/// Rebuilds `x` in `new_space`: old slot `s` goes to `map[s]` (or is dropped).
fn remap(x: &BlockMat, map: &[Option<usize>], new_shape: &[usize]) -> BlockMat {
    let mut out = BlockMat::zeros(&new_shape.to_vec());
    for (s, target) in map.iter().enumerate() {
        if let Some(t) = target {
            out.blocks[*t] = x.blocks[s].clone();
        }
    }
    out
}

pub fn expand_factor(a: &ActionModel, i: usize, tol: &Tolerance) -> Result<ActionModel> {
    let space = a.space();
    if i >= space.factor_count() {
        return Err(arg(format!("factor index {i} out of range")));
    }
    let slots = space.slots(i);
    let s0 = slots.start;
    let factor = space.factor(i);
    let mut factors: Vec<SpaceFactor> = space.factors().to_vec();
    let extra_slots;
    let mut map: Vec<Option<usize>> = Vec::with_capacity(space.slot_count());
    let (new_factors, right_k): (Vec<SpaceFactor>, Vec<Mat>) = match factor {
        SpaceFactor::TypeI { involution } => {
            extra_slots = 1;
            (alloc::vec![SpaceFactor::type_ii(Arc::clone(involution.algebra()))], involution.k().basis().to_vec())
        }
        SpaceFactor::TypeII { algebra, .. } => {
            extra_slots = 2;
            (
                alloc::vec![SpaceFactor::type_ii(Arc::clone(algebra)), SpaceFactor::type_ii(Arc::clone(algebra))],
                algebra.basis().to_vec(),
            )
        }
    };
    for s in 0..space.slot_count() {
        let t = if s < s0 {
            s
        } else if slots.contains(&s) {
            // type I: g -> left of G; type II: left -> left of first copy,
            // right -> left of second copy
            s0 + 2 * (s - s0)
        } else {
            s + extra_slots
        };
        map.push(Some(t));
    }
    factors.splice(i..=i, new_factors);
    let new_space = Arc::new(ProductSpace::new(factors)?);
    let shape = new_space.slot_shape().clone();
    let mut gens: Vec<BlockMat> = a.h().basis().iter().map(|x| remap(x, &map, &shape)).collect();
    let rights: Vec<usize> = if factor.is_type_i() { alloc::vec![s0 + 1] } else { alloc::vec![s0 + 1, s0 + 3] };
    for y in &right_k {
        let mut e = BlockMat::zeros(&shape);
        for &r in &rights {
            e.blocks[r] = y.clone();
        }
        gens.push(e);
    }
    Ok(ActionModel::new(format!("{}+exp{i}", a.name()), new_space, &gens, tol)?.with_note(format!("expanded factor {i}")))
}

/// Expands every type I factor once.
pub fn group_lift(a: &ActionModel, tol: &Tolerance) -> Result<ActionModel> {
    let mut out = a.clone();
    for i in 0..a.space().factor_count() {
        if out.space().factor(i).is_type_i() {
            out = expand_factor(&out, i, tol)?;
        }
    }
    Ok(out.renamed(format!("{}+lift", a.name())))
}

fn side_slot(space: &ProductSpace, i: usize, side: Side) -> usize {
    let s = space.slots(i).start;
    match side {
        Side::Left => s,
        Side::Right => s + 1,
    }
}

fn same_algebra(a: &SpaceFactor, b: &SpaceFactor, tol: &Tolerance) -> bool {
    let (x, y) = (a.algebra(), b.algebra());
    if Arc::ptr_eq(x, y) {
        return true;
    }
    x.shape() == y.shape()
        && x.dim() == y.dim()
        && AlgebraSubspace::full(x).same_span(&AlgebraSubspace::full(y), tol)
}

pub fn reduce_factor(a: &ActionModel, i: usize, split: &ReduceSplit, tol: &Tolerance) -> Result<ActionModel> {
    let space = a.space();
    if i >= space.factor_count() {
        return Err(arg(format!("factor index {i} out of range")));
    }
    let SpaceFactor::TypeII { algebra, .. } = space.factor(i) else {
        return Err(Error::Precondition(format!("factor {i} is not a group factor")));
    };
    let shape = space.slot_shape().clone();
    // slots whose blocks must vanish on h', the k generators, and the new factor
    let (zero_slots, k_gens, replacement, keep_slots, removed): (Vec<usize>, Vec<BlockMat>, SpaceFactor, Vec<usize>, Option<usize>) =
        match split {
            ReduceSplit::Symmetric { involution, side } => {
                let inv_alg = involution.algebra();
                if inv_alg.shape() != algebra.shape()
                    || !AlgebraSubspace::full(algebra).same_span(&AlgebraSubspace::full(inv_alg), tol)
                {
                    return Err(Error::Precondition(format!("involution `{}` is not on factor {i}", involution.label())));
                }
                let s = side_slot(space, i, *side);
                let other = if *side == Side::Left { s + 1 } else { s - 1 };
                let gens = involution.k().basis().iter().map(|y| BlockMat::single(&shape, s, y.clone())).collect();
                (alloc::vec![s], gens, SpaceFactor::type_i(involution.clone()), alloc::vec![other], None)
            }
            ReduceSplit::Diagonal { partner, side } => {
                let j = *partner;
                if j >= space.factor_count() || j == i {
                    return Err(arg(format!("invalid partner factor {j}")));
                }
                if space.factor(j).is_type_i() || !same_algebra(space.factor(i), space.factor(j), tol) {
                    return Err(Error::Precondition(format!("factors {i} and {j} are not copies of one group")));
                }
                let (si, sj) = (side_slot(space, i, *side), side_slot(space, j, *side));
                let flip = |s: usize| if *side == Side::Left { s + 1 } else { s - 1 };
                let gens = algebra
                    .basis()
                    .iter()
                    .map(|y| {
                        let mut e = BlockMat::zeros(&shape);
                        e.blocks[si] = y.clone();
                        e.blocks[sj] = y.clone();
                        e
                    })
                    .collect();
                (
                    alloc::vec![si, sj],
                    gens,
                    SpaceFactor::type_ii(Arc::clone(algebra)),
                    alloc::vec![flip(si), flip(sj)],
                    Some(j),
                )
            }
        };
    for (n, y) in k_gens.iter().enumerate() {
        if !a.h().contains(y, tol) {
            return Err(Error::Precondition(format!(
                "declared split of factor {i}: generator {n} of k is not in h (residual {:.3e})",
                a.h().span_residual(y)
            )));
        }
    }
    let h_prime = a.h().kernel(
        |x| {
            let mut v = Vec::new();
            for &s in &zero_slots {
                x.blocks[s].write_flat(&mut v);
            }
            v
        },
        tol,
    );
    if h_prime.dim() + k_gens.len() != a.dim_h() {
        return Err(Error::Precondition(format!(
            "declared split of factor {i} does not decompose h: {} + {} != {}",
            h_prime.dim(),
            k_gens.len(),
            a.dim_h()
        )));
    }

    let mut factors = Vec::new();
    let mut map: Vec<Option<usize>> = alloc::vec![None; space.slot_count()];
    let mut next = 0;
    for f in 0..space.factor_count() {
        if Some(f) == removed {
            continue;
        }
        if f == i {
            for &s in &keep_slots {
                map[s] = Some(next);
                next += 1;
            }
            factors.push(replacement.clone());
        } else {
            for s in space.slots(f) {
                map[s] = Some(next);
                next += 1;
            }
            factors.push(space.factor(f).clone());
        }
    }
    let new_space = Arc::new(ProductSpace::new(factors)?);
    let new_shape = new_space.slot_shape().clone();
    let gens: Vec<BlockMat> = h_prime.basis().iter().map(|x| remap(x, &map, &new_shape)).collect();
    let h = if gens.is_empty() {
        AlgebraSubspace::zero(new_space.ambient())
    } else {
        AlgebraSubspace::span(new_space.ambient(), &gens, tol)?
    };
    Ok(ActionModel::from_subspace(format!("{}-red{i}", a.name()), new_space, h, tol)?.with_note(format!("reduced factor {i}")))
}
