//! Isometric actions of subalgebras `h` of the isometry algebra of a
//! product space, and the constructions that derive new actions from old.

mod builders;
pub mod examples;
mod expand;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use builders::{build_chain_action, build_hermann, build_sigma_action, ChainShape, HermannSpec};
pub use expand::{expand_factor, group_lift, reduce_factor, ReduceSplit, Side};

use crate::error::{arg, Result};
use crate::liealg::{AlgebraSubspace, BlockMat, Sampler, Tolerance};
use crate::spaces::{PointSample, ProductSpace};

#[derive(Debug, Clone)]
pub struct ActionModel {
    name: String,
    space: Arc<ProductSpace>,
    h: AlgebraSubspace<BlockMat>,
    notes: Vec<String>,
}

impl ActionModel {
    /// The action of the span of `generators`, which must be bracket-closed.
    pub fn new(
        name: impl Into<String>,
        space: Arc<ProductSpace>,
        generators: &[BlockMat],
        tol: &Tolerance,
    ) -> Result<ActionModel> {
        let h = AlgebraSubspace::span(space.ambient(), generators, tol)?;
        ActionModel::from_subspace(name, space, h, tol)
    }

    pub fn from_subspace(
        name: impl Into<String>,
        space: Arc<ProductSpace>,
        h: AlgebraSubspace<BlockMat>,
        tol: &Tolerance,
    ) -> Result<ActionModel> {
        let name = name.into();
        if !Arc::ptr_eq(h.parent(), space.ambient()) {
            return Err(arg(format!("algebra of `{name}` does not live in the isometry algebra of its space")));
        }
        let r = h.closure_residual(&mut Sampler::new(0));
        if r >= tol.rel_eps {
            return Err(arg(format!("`{name}` is not a subalgebra (closure residual {r:.3e})")));
        }
        Ok(ActionModel { name, space, h, notes: Vec::new() })
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn space(&self) -> &Arc<ProductSpace> {
        &self.space
    }

    pub fn h(&self) -> &AlgebraSubspace<BlockMat> {
        &self.h
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    /// Orbit tangent images of the basis of `h` at `point`, in p-model coordinates.
    pub fn orbit_columns(&self, point: &PointSample) -> Result<Vec<Vec<f64>>> {
        Ok(self.space.orbit_map_at(point)?.image_columns(&self.h))
    }
}

/// The subaction of a subalgebra `sub` of `h`.
pub fn restrict_action(a: &ActionModel, sub: &AlgebraSubspace<BlockMat>, tol: &Tolerance) -> Result<ActionModel> {
    if !Arc::ptr_eq(sub.parent(), a.space.ambient()) || !a.h.contains_subspace(sub, tol) {
        return Err(arg(format!("restriction of `{}` to a subspace not contained in its algebra", a.name)));
    }
    ActionModel::from_subspace(format!("{}|sub", a.name), Arc::clone(&a.space), sub.clone(), tol)
}

/// The action of the image of `h` on the subproduct of `factors`.
pub fn projection_action(a: &ActionModel, factors: &[usize], tol: &Tolerance) -> Result<ActionModel> {
    if factors.is_empty() {
        return Err(arg("projection onto an empty set of factors"));
    }
    let (sub, slot_map) = a.space.subproduct(factors)?;
    let sub = Arc::new(sub);
    let gens: Vec<BlockMat> = a.h.basis().iter().map(|x| a.space.project_to(x, &slot_map)).collect();
    let h = AlgebraSubspace::span(sub.ambient(), &gens, tol)?;
    ActionModel::from_subspace(format!("{}|pr{:?}", a.name, factors), sub, h, tol)
}

/// Elements of `h` whose projection to the `factors` subproduct fixes `point`.
pub fn partial_isotropy(
    a: &ActionModel,
    factors: &[usize],
    point: &PointSample,
    tol: &Tolerance,
) -> Result<AlgebraSubspace<BlockMat>> {
    let (sub, slot_map) = a.space.subproduct(factors)?;
    let om = sub.orbit_map_at(point)?;
    Ok(a.h.kernel(|x| om.apply(&a.space.project_to(x, &slot_map)), tol))
}

/// Complement of `factors` in `0..count`, in increasing order.
pub fn complement(count: usize, factors: &[usize]) -> Vec<usize> {
    (0..count).filter(|i| !factors.contains(i)).collect()
}

/// The action of the partial isotropy at `point` on the complementary subproduct.
pub fn intersection_action(
    a: &ActionModel,
    factors: &[usize],
    point: &PointSample,
    tol: &Tolerance,
) -> Result<ActionModel> {
    let rest = complement(a.space.factor_count(), factors);
    if rest.is_empty() {
        return Err(arg("intersection action needs a nonempty complement"));
    }
    let iso = partial_isotropy(a, factors, point, tol)?;
    let (sub, slot_map) = a.space.subproduct(&rest)?;
    let sub = Arc::new(sub);
    let gens: Vec<BlockMat> = iso.basis().iter().map(|x| a.space.project_to(x, &slot_map)).collect();
    let h = if gens.is_empty() { AlgebraSubspace::zero(sub.ambient()) } else { AlgebraSubspace::span(sub.ambient(), &gens, tol)? };
    ActionModel::from_subspace(format!("{}|int{:?}", a.name, factors), sub, h, tol)
}
