//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use hyperpolar_core::actions::examples::{acceptance_catalog, chain, sigma_identity, CatalogAction};
use hyperpolar_core::actions::{expand_factor, ChainShape};
use hyperpolar_core::analyze::{
    check_hyperpolar, verify_section7_exclusions, verify_section9_examples, verify_table1, CaseStatus,
};
use hyperpolar_core::catalog::{catalog_listing, Catalog, Family, SymmetricPair, LISTED_EMBEDDINGS};
use hyperpolar_core::liealg::{bracket, matrix_exp, Mat, Sampler, Tolerance};
use hyperpolar_core::spaces::SpaceFactor;

const SEED: u64 = 20_240_601;
const SEEDS: [u64; 3] = [1, 2, 3];

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome { pass, summary: summary.into() }
}

fn catalog() -> Catalog {
    Catalog::new(Tolerance::default())
}

fn table1() -> Outcome {
    let start = Instant::now();
    let r = verify_table1(&mut catalog(), SEED);
    let secs = start.elapsed().as_secs_f64();
    let bad: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
    outcome(
        r.passed() && secs < 60.0,
        format!("{} rows decompose with matching intersections in {secs:.1}s; failures {bad:?}", r.count(CaseStatus::Pass)),
    )
}

fn section9() -> Outcome {
    let r = verify_section9_examples(&mut catalog(), SEED);
    let examples: Vec<_> = r.cases.iter().filter(|c| c.id.matches('/').count() == 1).collect();
    let ok = examples.len() == 5 && r.passed();
    let summary = examples.iter().map(|c| format!("{}: {}", c.id, c.observed)).collect::<Vec<_>>().join("; ");
    outcome(ok, summary)
}

fn expansion(entries: &[CatalogAction]) -> Outcome {
    let tol = Tolerance::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in entries {
        let base = check_hyperpolar(&e.action, SEED, &tol).unwrap();
        for i in 0..e.action.space().factor_count() {
            let x = expand_factor(&e.action, i, &tol).and_then(|x| check_hyperpolar(&x, SEED, &tol));
            checked += 1;
            match x {
                Ok(x) if x.cohomogeneity == base.cohomogeneity && x.verdict == base.verdict => {}
                Ok(x) => bad.push(format!("{}[{i}]: d {}->{}", e.id, base.cohomogeneity, x.cohomogeneity)),
                Err(err) => bad.push(format!("{}[{i}]: {err}", e.id)),
            }
        }
    }
    outcome(
        bad.is_empty() && entries.len() >= 12,
        format!("{} actions, {checked} expansions agree; mismatches {bad:?}", entries.len()),
    )
}

fn section7() -> Outcome {
    let r = verify_section7_exclusions(&mut catalog(), SEED);
    let excl: Vec<_> = r
        .cases
        .iter()
        .filter(|c| c.expected.starts_with("dim h <") || c.id == "s7/5-5/g2")
        .collect();
    let need = ["s7/3-3/n2", "s7/3-3/n3", "s7/2-7/delta-so15", "s7/3-7", "s7/7-7/delta-so15", "s7/2-3/n3", "s7/2-3/n4", "s7/5-5/g2"];
    let present = need.iter().all(|id| excl.iter().any(|c| c.id == *id));
    let ok = present && excl.iter().all(|c| c.status == CaseStatus::Pass);
    let summary = excl.iter().map(|c| format!("{} {}", c.id, c.observed)).collect::<Vec<_>>().join("; ");
    outcome(ok, summary)
}

fn hermann_suite() -> Outcome {
    let tol = Tolerance::default();
    let mut cat = catalog();
    let algebras = [
        (Family::Su, 2, SymmetricPair::AI { n: 2 }, SymmetricPair::AIII { p: 1, q: 1 }),
        (Family::Su, 3, SymmetricPair::AI { n: 3 }, SymmetricPair::AIII { p: 2, q: 1 }),
        (Family::So, 5, SymmetricPair::BDI { p: 4, q: 1 }, SymmetricPair::BDI { p: 3, q: 2 }),
    ];
    let mut count = 0;
    let mut bad = Vec::new();
    for (f, m, h, k) in algebras {
        let rank = SpaceFactor::type_ii(cat.classical(f, m).unwrap()).rank(&mut Sampler::new(SEED), &tol);
        if rank != f.rank(m) {
            bad.push(format!("{}({m}) centralizer rank {rank}", f.label()));
        }
        for n in 1..=3 {
            let mut shapes = vec![ChainShape::Open, ChainShape::ReducedRight];
            if n >= 2 {
                shapes.push(ChainShape::ReducedBoth);
            }
            for s in shapes {
                let a = chain(&mut cat, h, k, n, s).unwrap();
                let hp = check_hyperpolar(&a, SEED, &tol).unwrap();
                count += 1;
                if !hp.verdict.is_yes() {
                    bad.push(format!("{} {s:?} n={n}", f.label()));
                }
            }
            let a = sigma_identity(&mut cat, f, m, n).unwrap();
            let hp = check_hyperpolar(&a, SEED, &tol).unwrap();
            count += 1;
            if !hp.verdict.is_yes() || hp.cohomogeneity != rank {
                bad.push(format!("sigma {}({m}) n={n}: d={} rank={rank}", f.label(), hp.cohomogeneity));
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} builder outputs hyperpolar, sigma = id gives d = rank; failures {bad:?}"))
}

fn numerical_core(entries: &[CatalogAction]) -> Outcome {
    let tol = Tolerance::default();
    let mut cat = catalog();
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    let pairs = [
        SymmetricPair::AI { n: 3 },
        SymmetricPair::AII { n: 2 },
        SymmetricPair::AIII { p: 2, q: 2 },
        SymmetricPair::BDI { p: 5, q: 2 },
        SymmetricPair::BDI { p: 7, q: 1 },
        SymmetricPair::DIII { n: 4 },
        SymmetricPair::CI { n: 2 },
        SymmetricPair::CII { p: 2, q: 1 },
    ];
    let listing = catalog_listing(&mut cat).unwrap();
    for seed in SEEDS {
        let mut rng = Sampler::new(seed);
        for name in LISTED_EMBEDDINGS {
            let e = cat.embedding(name).unwrap();
            let r = e.image.closure_residual(&mut rng).max(e.ambient.closure_residual(&mut rng));
            let r = r.max(e.ambient.invariance_residual(&mut rng, 20));
            let x = e.image.element(&rng.normal_vec(e.image.dim()));
            let ex = matrix_exp(&x).unwrap();
            let r = r.max((&(&ex * &matrix_exp(&-&x).unwrap()) - &Mat::identity(x.size())).max_abs());
            worst = worst.max(r);
        }
        for p in pairs {
            let inv = cat.involution(p).unwrap();
            let k = inv.k().element(&rng.normal_vec(inv.k().dim()));
            let a = inv.p().element(&rng.normal_vec(inv.p().dim()));
            let b = inv.p().element(&rng.normal_vec(inv.p().dim()));
            let kp = bracket(&k, &a).unwrap();
            let pp = bracket(&a, &b).unwrap();
            let scale = k.norm() * a.norm() + a.norm() * b.norm();
            let r = (inv.p().span_residual(&kp) * kp.norm() + inv.k().span_residual(&pp) * pp.norm()) / scale;
            worst = worst.max(r).max(inv.map().automorphism_residual()).max(inv.map().involution_residual());
        }
    }
    let mut unstable = Vec::new();
    for e in entries {
        let v: Vec<_> = SEEDS
            .iter()
            .map(|&s| {
                let h = check_hyperpolar(&e.action, s, &tol).unwrap();
                (h.cohomogeneity, h.verdict)
            })
            .collect();
        if v.iter().any(|x| *x != v[0]) {
            unstable.push(e.id.clone());
        }
    }
    if worst >= 1e-8 {
        bad.push(format!("residual {worst:.2e}"));
    }
    outcome(
        bad.is_empty() && unstable.is_empty(),
        format!(
            "{} embeddings, {} involutions, 3 seeds: max residual {worst:.2e}; unstable verdicts {unstable:?}",
            listing.len(),
            pairs.len()
        ),
    )
}

fn main() -> ExitCode {
    let entries = acceptance_catalog(&mut catalog()).expect("acceptance catalog");
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 decomposition table", Box::new(table1)),
        ("2 indecomposable examples", Box::new(section9)),
        ("3 expansion invariance", Box::new(|| expansion(&entries))),
        ("4 dimension-count exclusions", Box::new(section7)),
        ("5 hermann hyperpolarity suite", Box::new(hermann_suite)),
        ("6 numerical core properties", Box::new(|| numerical_core(&entries))),
    ];
    let mut all = true;
    for (name, run) in &criteria {
        let start = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "{} criterion {name} ({:.1}s): {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.summary
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
