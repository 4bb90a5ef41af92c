//! Faces of associahedra: planar trees, the associative star product, the
//! splitting coproduct, grafting, and the binary (dendriform) sublayer.
//!
//! Planar trees with n+1 leaves index the faces of the n-th associahedron;
//! there are 1, 3, 11, 45, … of them. Binary trees are the 1, 2, 5, 14, …
//! degree-0 faces (vertices).
//!
//! Run with: `cargo run -p ohl --example trees`

use ohl::associahedron::{
    backslash, binary_trees, dend_projection, dend_star_basis, td_compose, td_star_basis,
    tree_bar_coproduct, tree_coproduct, trees, PlanarTree,
};
use ohl::permutohedron::TriGenerator;
use ohl::{Basis, LinComb};

fn main() {
    // --- enumeration -----------------------------------------------------
    println!("the {} planar trees with 4 leaves:", trees(3).len());
    for t in trees(3) {
        let marker = if t.is_binary() { "  (binary)" } else { "" };
        println!("  {}{marker}", t.text());
    }
    assert_eq!(trees(3).len(), 11);
    assert_eq!(binary_trees(3).len(), 5);

    // --- star product and its generator split -----------------------------
    let y = PlanarTree::y(); // (| |)
    let c3 = PlanarTree::corolla(3); // (| | |)
    let star = td_star_basis(&y, &c3);
    println!("\n(| |) * (| | |) = {star}");
    let prec = td_compose(TriGenerator::Prec, &y, &c3);
    let succ = td_compose(TriGenerator::Succ, &y, &c3);
    let dot = td_compose(TriGenerator::Dot, &y, &c3);
    println!("  ≺ part (graft on the right of x): {prec}");
    println!("  ≻ part (graft on the left of y):  {succ}");
    println!("  · part (fuse the roots):          {dot}");
    assert_eq!(prec.add(&succ).add(&dot), star);

    // --- coproduct ---------------------------------------------------------
    println!("\nsplitting coproduct of (| (| |)):");
    let t = PlanarTree::node(vec![PlanarTree::Leaf, PlanarTree::y()]).unwrap();
    for (term, c) in tree_coproduct(&t).sorted_terms() {
        println!("  {}*{}", c, term.text());
    }
    // grafting is adjoint to the reduced coproduct: <a\b, t> = <a⊗b, barΔ t>
    let a = PlanarTree::y();
    let b = PlanarTree::y();
    let graft = backslash(&a, &b);
    println!("\ngrafting (| |) \\ (| |) = {}", graft.text());
    let pairing = tree_bar_coproduct(&graft).coeff(&ohl::exact_linear::Tensor2::new(
        a.clone(),
        b.clone(),
    ));
    println!("  and indeed barΔ of the graft contains (| |) (x) (| |) with coefficient {pairing}");

    // --- the dendriform sublayer on binary trees ----------------------------
    // project the star product onto binary trees: wide vertices die
    let bin_prod = dend_star_basis(&y, &y);
    println!("\ndendriform star (| |) * (| |) = {bin_prod}");
    for (term, _) in bin_prod.iter() {
        assert!(term.is_binary());
    }
    // projecting the full star product gives the same answer
    let projected: LinComb<PlanarTree> = td_star_basis(&y, &y).bind(|s| dend_projection(s));
    assert_eq!(projected, bin_prod);
    println!("…equal to the projection of the full star product");

    // the projection is the identity on binary trees and zero elsewhere
    assert_eq!(dend_projection(&y), LinComb::single(y.clone()));
    assert!(dend_projection(&PlanarTree::corolla(3)).is_zero());
    println!("projection: binary trees fixed, wider trees sent to 0");
}
