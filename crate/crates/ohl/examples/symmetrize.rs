//! From a twisted structure to its two graded bialgebras.
//!
//! A twisted structure carries a raw product, a right symmetric-group
//! action, and a coproduct whose terms are tagged with a pair of label sets
//! (S, T). Two machines extract ordinary graded structures from it:
//!
//!   * symmetrize ("hat"): sum the raw product over all (p,q)-shuffles —
//!     for permutations with concatenation this yields the shifted-shuffle
//!     product;
//!   * cosymmetrize ("bar"/"hat" coproducts): keep only the tagged terms
//!     whose left tag is an initial interval (bar), or forget tags (hat).
//!
//! Run with: `cargo run -p ohl --example symmetrize`

use ohl::bialgebra_lab::{
    bar_coproduct, hat_coproduct, hat_of_with, hat_product, AsStructure, TwistedStructure,
};
use ohl::symmetric_combinatorics::{direct_sum, mr_product_basis, perms, Perm};
use ohl::{Basis, LinComb};

fn p(word: &[u8]) -> Perm {
    Perm::new(word.to_vec()).unwrap()
}

fn main() {
    // --- symmetrizing concatenation gives the shuffle product -------------
    let hat = hat_of_with(
        |x: &Perm, y: &Perm| LinComb::single(direct_sum(x, y)),
        |b: &Perm, s: &Perm| b.mul(s),
        |b: &Perm| b.degree(),
        None,
    );
    let a = p(&[2, 1]);
    let b = p(&[1]);
    println!("raw product (concatenation): {}", direct_sum(&a, &b).text());
    println!("symmetrized over the 3 (2,1)-shuffles: {}", hat(&a, &b));
    for n in 0..=3usize {
        for m in 0..=3 - n {
            for s in perms(n) {
                for t in perms(m) {
                    assert_eq!(hat(&s, &t), mr_product_basis(&s, &t));
                }
            }
        }
    }
    println!("…agrees with the direct shifted-shuffle product up to degree 3");

    // the same machine through the structure interface, on linear combos
    let st = AsStructure;
    let lhs = hat_product(
        &st,
        "concat",
        &LinComb::single(a.clone()),
        &LinComb::single(b.clone()),
    )
    .unwrap();
    assert_eq!(lhs, hat(&a, &b));

    // --- the tagged coproduct and its two shadows --------------------------
    let sigma = p(&[2, 3, 1]);
    println!("\ntagged coproduct of {} (tags record which positions go left):", sigma.text());
    for (t, c) in st.coproduct(&sigma).sorted_terms() {
        println!("  {}*{}", c, t.text());
    }
    println!("bar coproduct (left tag must be an initial interval {{1..k}}):");
    println!("  {}", bar_coproduct(&st, &sigma));
    println!("hat coproduct (tags forgotten, terms merge):");
    println!("  {}", hat_coproduct(&st, &sigma));

    // bar terms embed into hat terms; the hat side is coefficient-heavier
    let bar = bar_coproduct(&st, &sigma);
    let hatc = hat_coproduct(&st, &sigma);
    for (t, c) in bar.iter() {
        assert!(hatc.coeff(t) >= *c, "every bar term appears among hat terms");
    }
    println!("\nevery bar term reappears in the hat coproduct (with merged multiplicity)");
}
