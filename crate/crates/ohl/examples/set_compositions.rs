//! Faces of permutohedra: set compositions, their quasi-shuffle products,
//! the tridendriform generators, and the closed-form coproduct.
//!
//! A set composition is an ordered list of disjoint nonempty blocks covering
//! {1..n}. There are 1, 3, 13, 75, … of them — one per face of the
//! permutohedron. Degree-0 faces (all blocks singletons) are permutations.
//!
//! Run with: `cargo run -p ohl --example set_compositions`

use ohl::bialgebra_lab::{bar_coproduct, CtdStructure};
use ohl::permutohedron::{
    ctd_compose, is_reduced, sc_coproduct, sc_coproduct_by_generators, set_comps, SetComposition,
    TriGenerator, wf_product_basis, wg_product_basis,
};
use ohl::Basis;

fn sc(blocks: &[&[u8]]) -> SetComposition {
    SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

fn main() {
    // --- enumeration -------------------------------------------------------
    let all3 = set_comps(3);
    println!("the {} set compositions of {{1,2,3}}:", all3.len());
    for p in &all3 {
        println!("  {}  (blocks {}, face degree {})", p.text(), p.block_count(), p.face_degree());
    }
    assert_eq!(all3.len(), 13);

    // --- quasi-shuffle product ---------------------------------------------
    let a = sc(&[&[1]]);
    let prod = wf_product_basis(&a, &a);
    println!("\nquasi-shuffle {{1}} * {{1}} = {prod}");
    assert_eq!(prod.len(), 3); // two interleavings plus the merged block

    // without the merge branch it is the plain shuffle product
    let shuffled = wg_product_basis(&a, &a);
    println!("plain shuffle  {{1}} * {{1}} = {shuffled}");
    assert_eq!(shuffled.len(), 2);

    // --- tridendriform generators -------------------------------------------
    // the product splits into three pieces by where the last block comes from:
    // prec (from the left), succ (from the right), dot (merged)
    let b = sc(&[&[1, 2]]);
    let prec = ctd_compose(TriGenerator::Prec, &a, &b);
    let succ = ctd_compose(TriGenerator::Succ, &a, &b);
    let dot = ctd_compose(TriGenerator::Dot, &a, &b);
    println!("\nsplit of {{1}} * {{1,2}} (right factor shifts to {{2,3}}):");
    println!("  prec = {prec}");
    println!("  succ = {succ}");
    println!("  dot  = {dot}");
    let total = prec.add(&succ).add(&dot);
    assert_eq!(total, wf_product_basis(&a, &b));
    println!("  prec + succ + dot reassembles the quasi-shuffle product");

    // --- coproduct: closed formula vs. generator recursion -------------------
    let q = sc(&[&[2], &[1, 3]]);
    println!("\ntagged coproduct of {} (closed block-prefix formula):", q.text());
    for (t, c) in sc_coproduct(&q).sorted_terms() {
        println!("  {}*{}", c, t.text());
    }
    assert_eq!(sc_coproduct(&q), sc_coproduct_by_generators(&q));
    println!("…identical to the recursion through the generators");

    println!("\nuntagged bar coproduct (left tag an initial interval):");
    println!("  {}", bar_coproduct(&CtdStructure, &q));

    // --- reduced compositions are the free generators -------------------------
    let reduced: Vec<i64> = (1..=4)
        .map(|n| set_comps(n).iter().filter(|p| is_reduced(p)).count() as i64)
        .collect();
    println!("\nreduced compositions by degree: {reduced:?} (= free-generator counts)");
    assert_eq!(reduced, vec![1, 2, 8, 48]);
}
