//! Command implementations for the `hyperpolar` binary. Each command returns
//! its rendered output and an exit code so tests can drive them directly.

pub mod specfile;

use hyperpolar_core::analyze::{
    analyze, verify_section7_exclusions, verify_section9_examples, verify_table1, Report, Verdict,
};
use hyperpolar_core::catalog::{catalog_listing, Catalog};
use hyperpolar_core::liealg::Tolerance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

pub const DEFAULT_SEED: u64 = 1;

/// Rendered output plus exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_INPUT }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize") + "\n"
}

pub fn run_catalog(json: bool) -> Outcome {
    let mut cat = Catalog::new(Tolerance::default());
    let entries = match catalog_listing(&mut cat) {
        Ok(e) => e,
        Err(e) => return Outcome::input_error(e),
    };
    if json {
        return Outcome::ok(to_json(&entries), EXIT_OK);
    }
    let w = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    let text = entries
        .iter()
        .map(|e| {
            if e.ambient == "-" {
                format!("{:<w$}  dim={}\n", e.name, e.dim)
            } else {
                format!("{:<w$}  dim={}  in {}\n", e.name, e.dim, e.ambient)
            }
        })
        .collect();
    Outcome::ok(text, EXIT_OK)
}

/// Analyzes the action described by `text`. The seed and tolerance on the
/// command line override those in the file.
pub fn run_analyze(text: &str, seed: Option<u64>, tol: Option<Tolerance>, json: bool) -> Outcome {
    let spec = match specfile::parse(text) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let tol = tol.or(spec.tol).unwrap_or_default();
    let seed = seed.or(spec.seed).unwrap_or(DEFAULT_SEED);
    let mut cat = Catalog::new(tol);
    let action = match spec.build(&mut cat) {
        Ok(a) => a,
        Err(e) => return Outcome::input_error(e),
    };
    let report = match analyze(&action, seed, &tol) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let code = if report.hyperpolar == Verdict::Inconclusive { EXIT_INCONCLUSIVE } else { EXIT_OK };
    if json {
        return Outcome::ok(to_json(&report), code);
    }
    let transitive: Vec<&str> = report.per_factor_transitive.iter().map(|&t| if t { "yes" } else { "no" }).collect();
    let text = format!(
        "action: {}\nspace: {}\nseed: {}\ndim_space={} dim_h={} rank={}\n\
         d={} hyperpolar={}\nnormal_dim={} flatness_residual={:.3e} closure_residual={:.3e}\n\
         factor_transitive={}\ndim_bound={}\nsamples={} rank_margin={:.3e},{:.3e}\n",
        report.name,
        report.space,
        report.seed,
        report.dim_space,
        report.dim_h,
        report.space_rank,
        report.cohomogeneity,
        report.hyperpolar.as_str(),
        report.normal_dim,
        report.flatness_residual,
        report.closure_residual,
        transitive.join(","),
        if report.dim_bound_ok { "ok" } else { "violated" },
        report.samples_used,
        report.rank_margin.0,
        report.rank_margin.1,
    );
    Outcome::ok(text, code)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Section7,
    Section9,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "table1" => Some(Suite::Table1),
            "section7" => Some(Suite::Section7),
            "section9" => Some(Suite::Section9),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

pub fn verify(suite: Suite, seed: u64) -> Report {
    let mut cat = Catalog::new(Tolerance::default());
    match suite {
        Suite::Table1 => verify_table1(&mut cat, seed),
        Suite::Section7 => verify_section7_exclusions(&mut cat, seed),
        Suite::Section9 => verify_section9_examples(&mut cat, seed),
        Suite::All => {
            let parts = vec![
                verify_table1(&mut cat, seed),
                verify_section7_exclusions(&mut cat, seed),
                verify_section9_examples(&mut cat, seed),
            ];
            Report::concat("all", seed, parts)
        }
    }
}

pub fn run_verify(suite: Suite, seed: u64, json: bool) -> Outcome {
    let report = verify(suite, seed);
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    Outcome::ok(if json { to_json(&report) } else { report.to_text() }, code)
}
