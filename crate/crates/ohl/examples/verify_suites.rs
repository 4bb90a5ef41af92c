//! Programmatic access to the law suites that back `ohl verify`: run a
//! suite in-process, inspect the reports, and demonstrate that a broken
//! structure constant is actually caught.
//!
//! Run with: `cargo run -p ohl --example verify_suites`

use ohl::bialgebra_lab::{CheckStatus, Mutation};
use ohl::cli::{suite_reports, SUITES};
use ohl::permutohedron::TriGenerator;

fn main() {
    // --- a clean run -----------------------------------------------------
    println!("available suites: {}", SUITES.join(", "));
    let reports = suite_reports("operad", 4, Mutation::None).unwrap();
    println!("\nthe `operad` suite at max degree 4:");
    for r in &reports {
        println!("  {}", r.text_line());
    }
    assert!(reports.iter().all(|r| r.status == CheckStatus::Pass));

    // --- every report is serializable line-by-line -------------------------
    println!("\nthe same reports as JSON lines:");
    for r in reports.iter().take(2) {
        println!("  {}", r.json_line());
    }

    // --- mutation: drop one shuffle term from the product -------------------
    // the product of the permutation algebra sums over all (p,q)-shuffles;
    // deleting the k-th summand must break associativity or compatibility
    println!("\nnow deliberately dropping shuffle term #2 from the product:");
    let broken = suite_reports("mr", 3, Mutation::DropShuffleTerm(2)).unwrap();
    let failures: Vec<_> = broken.iter().filter(|r| r.status != CheckStatus::Pass).collect();
    assert!(!failures.is_empty(), "the defect must be detected");
    for f in &failures {
        println!("  {}", f.text_line());
    }
    let w = failures[0].witness.as_ref().unwrap();
    println!("\nfirst witness, unpacked:");
    println!("  inputs: {}", w.inputs.join(", "));
    println!("  lhs:    {}", w.lhs);
    println!("  rhs:    {}", w.rhs);

    // --- mutation: drop a branch of the tridendriform composition -----------
    println!("\ndropping the merge branch from the set-composition rules:");
    let broken = suite_reports("perm", 3, Mutation::DropCtdBranch(TriGenerator::Dot)).unwrap();
    let failing: Vec<&str> = broken
        .iter()
        .filter(|r| r.status != CheckStatus::Pass)
        .map(|r| r.axiom.as_str())
        .collect();
    println!("  failing laws: {failing:?}");
    assert!(!failing.is_empty());

    // --- totals across every suite -------------------------------------------
    let mut total = 0usize;
    for suite in SUITES.iter() {
        let n = suite_reports(suite, 3, Mutation::None).unwrap();
        assert!(n.iter().all(|r| r.status == CheckStatus::Pass), "suite {suite}");
        total += n.len();
    }
    println!("\nall {total} checks across {} suites pass at max degree 3", SUITES.len());
    println!("(the CLI equivalent: `ohl verify --suite all --max-degree 3`)");
}
