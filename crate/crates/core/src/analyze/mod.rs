//! Verdicts on actions: cohomogeneity, transitivity, hyperpolarity, the
//! dimension bound, decompositions of groups, and the non-splitting
//! conditions for actions on two-factor products.

mod reports;

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

pub use reports::{
    verify_section7_exclusions, verify_section9_examples, verify_table1, CaseRecord, CaseStatus, Report,
};

use crate::actions::{complement, intersection_action, projection_action, ActionModel};
use crate::catalog::EmbeddingSpec;
use crate::error::{arg, Result};
use crate::liealg::linear::{kernel, svd_columns};
use crate::liealg::{matrix_exp, AlgebraSubspace, Sampler, Tolerance};
use crate::spaces::PointSample;

const INITIAL_SAMPLES: usize = 5;
const MAX_SAMPLES: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

/// A sampled point of maximal orbit dimension.
#[derive(Debug, Clone)]
pub struct RegularPoint {
    pub point: PointSample,
    pub orbit_dim: usize,
    pub samples_used: usize,
    /// Smallest kept and largest dropped singular value of the orbit map,
    /// relative to the largest.
    pub rank_margin: (f64, f64),
}

fn orbit_rank(a: &ActionModel, point: &PointSample, tol: &Tolerance) -> Result<(usize, (f64, f64))> {
    let cols = a.orbit_columns(point)?;
    if cols.is_empty() {
        return Ok((0, (0.0, 0.0)));
    }
    let svd = svd_columns(&cols);
    Ok((svd.rank(tol), svd.gap(tol)))
}

/// Maximizes the orbit dimension over random points. If any sample after
/// the first beats the first, the search restarts with twice as many
/// samples, up to a cap.
pub fn regular_point(a: &ActionModel, rng: &mut Sampler, tol: &Tolerance) -> Result<RegularPoint> {
    let space = a.space();
    let mut samples = INITIAL_SAMPLES;
    let mut used = 0;
    loop {
        let mut best: Option<RegularPoint> = None;
        let mut first = None;
        for _ in 0..samples {
            let p = space.sample_point(rng)?;
            let (r, margin) = orbit_rank(a, &p, tol)?;
            used += 1;
            first.get_or_insert(r);
            if best.as_ref().is_none_or(|b| r > b.orbit_dim) {
                best = Some(RegularPoint { point: p, orbit_dim: r, samples_used: 0, rank_margin: margin });
            }
        }
        let mut best = best.ok_or_else(|| arg("no samples drawn"))?;
        if best.orbit_dim > first.unwrap_or(0) && samples < MAX_SAMPLES {
            samples = (2 * samples).min(MAX_SAMPLES);
            continue;
        }
        best.samples_used = used;
        return Ok(best);
    }
}

pub fn cohomogeneity(a: &ActionModel, seed: u64, tol: &Tolerance) -> Result<usize> {
    let reg = regular_point(a, &mut Sampler::new(seed), tol)?;
    Ok(a.space().dim() - reg.orbit_dim)
}

/// Whether the projection of the action to factor `i` is transitive.
pub fn is_transitive_on(a: &ActionModel, i: usize, seed: u64, tol: &Tolerance) -> Result<bool> {
    let p = projection_action(a, &[i], tol)?;
    Ok(cohomogeneity(&p, seed, tol)? == 0)
}

#[derive(Debug, Clone, Serialize)]
pub struct HyperpolarCheck {
    pub verdict: Verdict,
    pub cohomogeneity: usize,
    pub normal_dim: usize,
    /// Largest bracket norm between orthonormal normal vectors.
    pub flatness_residual: f64,
    pub samples_used: usize,
    pub rank_margin: (f64, f64),
}

/// Flatness of the normal space at a regular point. The normal space there
/// has dimension exactly the cohomogeneity, so the action is hyperpolar iff
/// it is abelian.
pub fn check_hyperpolar(a: &ActionModel, seed: u64, tol: &Tolerance) -> Result<HyperpolarCheck> {
    let reg = regular_point(a, &mut Sampler::new(seed), tol)?;
    let space = a.space();
    let dim_m = space.dim();
    let cols = a.orbit_columns(&reg.point)?;
    let normal: Vec<Vec<f64>> = if cols.is_empty() {
        (0..dim_m)
            .map(|k| {
                let mut e = alloc::vec![0.0; dim_m];
                e[k] = 1.0;
                e
            })
            .collect()
    } else {
        // v is normal iff <v, c_j> = 0 for all columns: the kernel of the transpose
        let rows: Vec<Vec<f64>> = (0..dim_m).map(|k| cols.iter().map(|c| c[k]).collect()).collect();
        kernel(&rows, tol)
    };
    let mut residual = 0.0f64;
    for i in 0..normal.len() {
        for j in (i + 1)..normal.len() {
            residual = residual.max(space.model_bracket_norm(&normal[i], &normal[j]));
        }
    }
    let verdict = if tol.is_borderline(residual) {
        Verdict::Inconclusive
    } else if residual < tol.rel_eps {
        Verdict::Yes
    } else {
        Verdict::No
    };
    Ok(HyperpolarCheck {
        verdict,
        cohomogeneity: dim_m - reg.orbit_dim,
        normal_dim: normal.len(),
        flatness_residual: residual,
        samples_used: reg.samples_used,
        rank_margin: reg.rank_margin,
    })
}

pub fn is_hyperpolar(a: &ActionModel, seed: u64, tol: &Tolerance) -> Result<bool> {
    Ok(check_hyperpolar(a, seed, tol)?.verdict.is_yes())
}

/// `dim h >= dim M - rk M`, with the rank from generic centralizers.
pub fn dim_bound_holds(a: &ActionModel, seed: u64, tol: &Tolerance) -> bool {
    let rk = a.space().rank(&mut Sampler::new(seed), tol);
    a.dim_h() + rk >= a.space().dim()
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionCheck {
    pub holds: bool,
    pub dim_g: usize,
    /// `rank(g' + Ad(g) g'')` at each sampled `g`.
    pub ranks: Vec<usize>,
}

/// Whether `G = G' G''`, tested infinitesimally at sampled `g in G`.
pub fn verify_decomposition(
    g1: &EmbeddingSpec,
    g2: &EmbeddingSpec,
    seed: u64,
    tol: &Tolerance,
) -> Result<DecompositionCheck> {
    if g1.ambient.shape() != g2.ambient.shape() || g1.ambient.dim() != g2.ambient.dim() {
        return Err(arg("decomposition factors live in different algebras"));
    }
    let ambient = &g1.ambient;
    let mut rng = Sampler::new(seed);
    let mut ranks = Vec::with_capacity(INITIAL_SAMPLES);
    for _ in 0..INITIAL_SAMPLES {
        let g = matrix_exp(&ambient.random_element(&mut rng))?;
        let gt = g.transpose();
        let mut cols: Vec<Vec<f64>> = g1.image.basis().iter().map(|x| ambient.coords(x)).collect();
        cols.extend(g2.image.basis().iter().map(|x| ambient.coords(&(&(&g * x) * &gt))));
        ranks.push(svd_columns(&cols).rank(tol));
    }
    let dim_g = ambient.dim();
    Ok(DecompositionCheck { holds: ranks.iter().all(|&r| r == dim_g), dim_g, ranks })
}

/// `g' ∩ g''` inside the common ambient.
pub fn intersection_algebra(g1: &EmbeddingSpec, g2: &EmbeddingSpec, tol: &Tolerance) -> Result<AlgebraSubspace> {
    g1.image.intersect(&g2.image, tol)
}

#[derive(Debug, Clone, Serialize)]
pub struct NonsplitCheck {
    pub transitive_first: bool,
    pub transitive_second: bool,
    pub intersection_first_hyperpolar: Verdict,
    pub intersection_second_hyperpolar: Verdict,
    pub cohomogeneity: usize,
    pub intersection_first_cohomogeneity: usize,
    pub intersection_second_cohomogeneity: usize,
}

impl NonsplitCheck {
    pub fn all_hold(&self) -> bool {
        self.transitive_first
            && self.transitive_second
            && self.intersection_first_hyperpolar.is_yes()
            && self.intersection_second_hyperpolar.is_yes()
    }

    /// When all four conditions hold, the three cohomogeneities agree.
    pub fn cohomogeneities_agree(&self) -> bool {
        self.cohomogeneity == self.intersection_first_cohomogeneity
            && self.cohomogeneity == self.intersection_second_cohomogeneity
    }

    pub fn flags(&self) -> [bool; 4] {
        [
            self.transitive_first,
            self.transitive_second,
            self.intersection_first_hyperpolar.is_yes(),
            self.intersection_second_hyperpolar.is_yes(),
        ]
    }
}

/// The four non-splitting conditions for the grouping `M = M_I x M_J`:
/// transitivity of both projection actions, and hyperpolarity of the
/// intersection action of the partial isotropy at a sampled point of one
/// group on the other group.
pub fn check_nonsplit_conditions(
    a: &ActionModel,
    first: &[usize],
    second: &[usize],
    seed: u64,
    tol: &Tolerance,
) -> Result<NonsplitCheck> {
    let count = a.space().factor_count();
    let mut sorted_second = second.to_vec();
    sorted_second.sort_unstable();
    if first.is_empty() || second.is_empty() || complement(count, first) != sorted_second {
        return Err(arg("grouping must split the factors into two nonempty complementary sets"));
    }
    let root = Sampler::new(seed);
    let transitive = |group: &[usize], key: u64| -> Result<bool> {
        let p = projection_action(a, group, tol)?;
        Ok(cohomogeneity(&p, root.split(key).seed(), tol)? == 0)
    };
    let intersection = |group: &[usize], key: u64| -> Result<HyperpolarCheck> {
        let (sub, _) = a.space().subproduct(group)?;
        let point = sub.sample_point(&mut root.split(key))?;
        let ia = intersection_action(a, group, &point, tol)?;
        check_hyperpolar(&ia, root.split(key + 100).seed(), tol)
    };
    let i1 = intersection(first, 3)?;
    let i2 = intersection(second, 4)?;
    Ok(NonsplitCheck {
        transitive_first: transitive(first, 1)?,
        transitive_second: transitive(second, 2)?,
        intersection_first_hyperpolar: i1.verdict,
        intersection_second_hyperpolar: i2.verdict,
        cohomogeneity: cohomogeneity(a, root.split(5).seed(), tol)?,
        intersection_first_cohomogeneity: i1.cohomogeneity,
        intersection_second_cohomogeneity: i2.cohomogeneity,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub seed: u64,
    pub space: String,
    pub dim_space: usize,
    pub dim_h: usize,
    pub space_rank: usize,
    pub cohomogeneity: usize,
    pub per_factor_transitive: Vec<bool>,
    pub hyperpolar: Verdict,
    pub normal_dim: usize,
    pub flatness_residual: f64,
    pub closure_residual: f64,
    pub dim_bound_ok: bool,
    pub samples_used: usize,
    pub rank_margin: (f64, f64),
}

pub fn analyze(a: &ActionModel, seed: u64, tol: &Tolerance) -> Result<AnalysisReport> {
    let root = Sampler::new(seed);
    let hp = check_hyperpolar(a, root.split(0).seed(), tol)?;
    let space = a.space();
    let space_rank = space.rank(&mut root.split(1), tol);
    let per_factor_transitive = (0..space.factor_count())
        .map(|i| is_transitive_on(a, i, root.split(10 + i as u64).seed(), tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        name: a.name().into(),
        seed,
        space: space.label(),
        dim_space: space.dim(),
        dim_h: a.dim_h(),
        space_rank,
        cohomogeneity: hp.cohomogeneity,
        per_factor_transitive,
        hyperpolar: hp.verdict,
        normal_dim: hp.normal_dim,
        flatness_residual: hp.flatness_residual,
        closure_residual: a.h().closure_residual(&mut root.split(2)),
        dim_bound_ok: a.dim_h() + space_rank >= space.dim(),
        samples_used: hp.samples_used,
        rank_margin: hp.rank_margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::examples::{acceptance_catalog, hermann_sphere, principal_so3_on_su3, sigma_identity, two_sided};
    use crate::actions::{projection_action, restrict_action};
    use crate::catalog::{Catalog, Family};
    use alloc::sync::Arc;

    fn cat() -> Catalog {
        Catalog::new(Tolerance::default())
    }

    #[test]
    fn sphere_isotropy_has_cohomogeneity_one() {
        let mut c = cat();
        let tol = *c.tolerance();
        for n in 2..6 {
            let a = hermann_sphere(&mut c, n).unwrap();
            assert_eq!(cohomogeneity(&a, 1, &tol).unwrap(), 1);
            assert!(is_hyperpolar(&a, 1, &tol).unwrap());
            assert!(dim_bound_holds(&a, 1, &tol));
        }
    }

    #[test]
    fn full_algebra_is_transitive_and_zero_algebra_is_not() {
        let mut c = cat();
        let tol = *c.tolerance();
        let a = hermann_sphere(&mut c, 4).unwrap();
        let full = restrict_action(&a, a.h(), &tol).unwrap();
        let all = ActionModel::from_subspace("all", Arc::clone(a.space()), AlgebraSubspace::full(a.space().ambient()), &tol)
            .unwrap();
        assert_eq!(cohomogeneity(&all, 2, &tol).unwrap(), 0);
        assert!(is_transitive_on(&all, 0, 2, &tol).unwrap());
        assert!(!is_transitive_on(&full, 0, 2, &tol).unwrap());
        let zero = restrict_action(&a, &AlgebraSubspace::zero(a.space().ambient()), &tol).unwrap();
        assert_eq!(cohomogeneity(&zero, 2, &tol).unwrap(), a.space().dim());
    }

    #[test]
    fn conjugation_on_su3_has_cohomogeneity_two() {
        let mut c = cat();
        let tol = *c.tolerance();
        let a = sigma_identity(&mut c, Family::Su, 3, 1).unwrap();
        let hp = check_hyperpolar(&a, 3, &tol).unwrap();
        assert_eq!(hp.cohomogeneity, 2);
        assert_eq!(hp.normal_dim, 2);
        assert_eq!(hp.verdict, Verdict::Yes);
        // conjugation fixes the identity, so it is not transitive
        assert!(!is_transitive_on(&a, 0, 3, &tol).unwrap());
    }

    #[test]
    fn principal_so3_is_excluded_by_the_bound() {
        let mut c = cat();
        let tol = *c.tolerance();
        let a = principal_so3_on_su3(&mut c).unwrap();
        assert!(!dim_bound_holds(&a, 4, &tol));
        assert!(!is_hyperpolar(&a, 4, &tol).unwrap());
        assert_eq!(cohomogeneity(&a, 4, &tol).unwrap(), 5);
    }

    #[test]
    fn row_four_projection_is_transitive() {
        let mut c = cat();
        let tol = *c.tolerance();
        let a = two_sided(&mut c, "g2_in_so7", "so6_in_so7").unwrap();
        assert!(is_transitive_on(&a, 0, 5, &tol).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let mut c = cat();
        let tol = *c.tolerance();
        let g2 = c.embedding("g2_in_so7").unwrap();
        let so6 = c.embedding("so6_in_so7").unwrap();
        assert!(verify_decomposition(&g2, &so6, 1, &tol).unwrap().holds);
        assert!(verify_decomposition(&so6, &g2, 1, &tol).unwrap().holds);
        assert_eq!(intersection_algebra(&g2, &so6, &tol).unwrap().dim(), 8);
        // su(2) . su(2) cannot fill su(3): 3 + 3 < 8
        let su2 = c.embedding("su2_in_su3").unwrap();
        let dec = verify_decomposition(&su2, &su2, 1, &tol).unwrap();
        assert!(!dec.holds);
        assert!(dec.ranks.iter().all(|&r| r <= 6));
        let so8 = c.embedding("so7_in_so8").unwrap();
        assert!(verify_decomposition(&g2, &so8, 1, &tol).is_err());
    }

    #[test]
    fn nonsplit_conditions_on_spin7_pair() {
        let mut c = cat();
        let tol = *c.tolerance();
        let a = crate::actions::examples::spin7_pair(&mut c).unwrap();
        let ns = check_nonsplit_conditions(&a, &[0], &[1], 9, &tol).unwrap();
        assert_eq!(ns.flags(), [true; 4]);
        assert!(ns.cohomogeneities_agree());
        assert_eq!(ns.cohomogeneity, 1);
        assert!(check_nonsplit_conditions(&a, &[0], &[0], 9, &tol).is_err());
        assert!(check_nonsplit_conditions(&a, &[0, 1], &[], 9, &tol).is_err());
    }

    #[test]
    fn product_of_nontransitive_actions_fails_transitivity() {
        let mut c = cat();
        let tol = *c.tolerance();
        // SO(3) x SO(3) on S^3 x S^3, each factor by its isotropy
        let s = hermann_sphere(&mut c, 3).unwrap();
        let space = Arc::new(
            crate::spaces::ProductSpace::new(alloc::vec![s.space().factor(0).clone(), s.space().factor(0).clone()])
                .unwrap(),
        );
        let shape = space.slot_shape().clone();
        let k = s.h().basis();
        let mut gens = alloc::vec::Vec::new();
        for x in k {
            gens.push(crate::liealg::BlockMat::single(&shape, 0, x.blocks[0].clone()));
            gens.push(crate::liealg::BlockMat::single(&shape, 1, x.blocks[0].clone()));
        }
        let p = ActionModel::new("iso x iso", space, &gens, &tol).unwrap();
        let ns = check_nonsplit_conditions(&p, &[0], &[1], 1, &tol).unwrap();
        assert!(!ns.transitive_first && !ns.transitive_second);
        assert_eq!(cohomogeneity(&p, 1, &tol).unwrap(), 2);
        assert!(projection_action(&p, &[0], &tol).is_ok());
    }

    #[test]
    fn acceptance_catalog_matches_expectations() {
        let mut c = cat();
        let tol = *c.tolerance();
        let entries = acceptance_catalog(&mut c).unwrap();
        assert!(entries.len() >= 12);
        for e in &entries {
            let hp = check_hyperpolar(&e.action, 11, &tol).unwrap();
            if let Some(d) = e.expected_cohomogeneity {
                assert_eq!(hp.cohomogeneity, d, "{}", e.id);
            }
            if let Some(h) = e.expected_hyperpolar {
                assert_eq!(hp.verdict.is_yes(), h, "{} residual {:e}", e.id, hp.flatness_residual);
            }
            if hp.verdict.is_yes() {
                assert!(hp.flatness_residual < tol.rel_eps);
                assert_eq!(hp.normal_dim, hp.cohomogeneity);
                assert!(dim_bound_holds(&e.action, 11, &tol), "{}", e.id);
            }
        }
    }

    #[test]
    fn analysis_report_is_consistent() {
        let mut c = cat();
        let tol = *c.tolerance();
        let a = hermann_sphere(&mut c, 3).unwrap();
        let r = analyze(&a, 5, &tol).unwrap();
        assert_eq!((r.cohomogeneity, r.hyperpolar, r.dim_space, r.space_rank), (1, Verdict::Yes, 3, 1));
        assert_eq!(r.per_factor_transitive, alloc::vec![false]);
        assert!(r.dim_bound_ok && r.closure_residual < 1e-12);
    }
}
