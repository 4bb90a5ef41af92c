//! The operad structure on planar trees: inserting a tree into a sector.
//!
//! A tree of degree n has n sectors (the angles between consecutive leaves,
//! numbered left to right). Inserting y into sector i of x sums over all
//! quasi-shuffles of the sector's two wall chains with y's outer spines —
//! adjacent vertices may fuse, so the result is a sum of trees, each of
//! degree deg(x) + deg(y) − 1.
//!
//! Run with: `cargo run -p ohl --example sector_insertion`

use ohl::associahedron::{generator_tree, sector_insert, td_compose, trees, PlanarTree};
use ohl::permutohedron::TriGenerator;
use ohl::Basis;

fn main() {
    // --- worked example ----------------------------------------------------
    let r2 = generator_tree(TriGenerator::Prec); // the right comb (| (| |))
    println!("x = {}  (degree {}, so {} sectors)", r2.text(), r2.degree(), r2.degree());
    let result = sector_insert(&r2, 1, &r2).unwrap();
    println!("insert x into sector 1 of x:");
    for (t, c) in result.sorted_terms() {
        println!("  {}*{}", c, t.text());
    }
    // the two spines quasi-shuffle: nested, fused, and crossed configurations
    assert_eq!(result.len(), 3);
    for (t, _) in result.iter() {
        assert_eq!(t.degree(), r2.degree() + r2.degree() - 1);
    }
    println!("three terms, each of operadic degree 2+2-1 = 3");

    // --- the unit ------------------------------------------------------------
    // Y = (| |) has one sector; inserting into it, or inserting Y anywhere,
    // changes nothing
    let y = PlanarTree::y();
    for x in trees(3) {
        assert_eq!(sector_insert(&y, 1, &x).unwrap().len(), 1);
        assert_eq!(sector_insert(&y, 1, &x).unwrap().coeff(&x), ohl::exact_linear::coeff_int(1));
        for i in 1..=x.degree() {
            let back = sector_insert(&x, i, &y).unwrap();
            assert_eq!(back.len(), 1);
            assert_eq!(back.coeff(&x), ohl::exact_linear::coeff_int(1));
        }
    }
    println!("\nY = (| |) is the operad unit: Y ∘_1 x = x and x ∘_i Y = x");

    // --- sectors out of range are rejected ------------------------------------
    assert!(sector_insert(&r2, 0, &y).is_err());
    assert!(sector_insert(&r2, 3, &y).is_err());
    println!("sector indices outside 1..=degree(x) are errors");

    // --- agreement with the inductive generator rules --------------------------
    // each degree-2 generator tree has two sectors; inserting y into sector 1
    // is the inductive rule g(y, Y), inserting into sector 2 is g(Y, y)
    println!("\ninsertions into generator trees match the inductive rules:");
    for g in [TriGenerator::Prec, TriGenerator::Succ, TriGenerator::Dot] {
        let gt = generator_tree(g);
        for d in 1..=3usize {
            for yt in trees(d) {
                assert_eq!(sector_insert(&gt, 1, &yt).unwrap(), td_compose(g, &yt, &y));
                assert_eq!(sector_insert(&gt, 2, &yt).unwrap(), td_compose(g, &y, &yt));
            }
        }
        println!("  {:?} tree {}: insert(·,1,y) = rule(y,Y) and insert(·,2,y) = rule(Y,y)", g, gt.text());
    }
    println!("(the law suite runs this exhaustively: `ohl verify --suite insertion`)");
}
