use hyperpolar_core::analyze::{verify_section7_exclusions, verify_section9_examples, verify_table1, Report};
use hyperpolar_core::catalog::Catalog;
use hyperpolar_core::liealg::Tolerance;

fn check(r: &Report) {
    print!("{}", r.to_text());
    for c in r.failures() {
        println!("FAILED {} {:?}", c.id, c.details);
    }
    assert!(r.passed(), "{} has failures", r.name);
}

#[test]
fn transitive_table_rows_are_decompositions() {
    let mut cat = Catalog::new(Tolerance::default());
    check(&verify_table1(&mut cat, 7));
}

#[test]
fn exclusions_reproduce() {
    let mut cat = Catalog::new(Tolerance::default());
    check(&verify_section7_exclusions(&mut cat, 7));
}

#[test]
fn worked_examples_are_cohomogeneity_one() {
    let mut cat = Catalog::new(Tolerance::default());
    check(&verify_section9_examples(&mut cat, 7));
}
