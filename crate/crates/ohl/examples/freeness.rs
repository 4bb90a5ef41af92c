//! Freeness bookkeeping: primitive dimensions, combinatorial generator
//! counts, and the free-generator series — three computations that must
//! agree for each of the three Hopf algebras.
//!
//! For a graded bialgebra whose product/coproduct pair satisfies the unital
//! infinitesimal law, the algebra is free and cofree, and the number of
//! free generators in each degree can be read off three independent ways:
//!
//!   1. the dimension of the primitive space ker(reduced barΔ), by exact
//!      Gaussian elimination;
//!   2. a direct combinatorial count (connected permutations / reduced
//!      compositions / trees whose rightmost root child is a leaf);
//!   3. inverting the graded dimension series: f = 1/(1−g).
//!
//! Run with: `cargo run -p ohl --example freeness`

use ohl::associahedron::{tree_bar_coproduct, trees, PlanarTree};
use ohl::bialgebra_lab::{bar_coproduct, primitive_dims, tree_basis, CtdStructure};
use ohl::exact_linear::{free_generator_series, series_from_generators, IntSeries};
use ohl::permutohedron::{is_reduced, set_comps, SetComposition};
use ohl::symmetric_combinatorics::{is_connected, mr_bar_coproduct, perms, Perm};

fn main() {
    // --- permutations ----------------------------------------------------
    let prim = primitive_dims(&|n| perms(n), &mr_bar_coproduct, &Perm::empty(), 5);
    let connected: Vec<i64> = (1..=5)
        .map(|n| perms(n).iter().filter(|s| is_connected(s)).count() as i64)
        .collect();
    let series = free_generator_series(&IntSeries::new(vec![1, 2, 6, 24, 120])).unwrap();
    println!("permutations (dims 1,2,6,24,120):");
    println!("  primitives per degree: {prim:?}");
    println!("  connected permutations: {connected:?}");
    println!("  generator series:       {:?}", series.dims);
    assert_eq!(prim, vec![1, 1, 3, 13, 71]);
    assert_eq!(connected, prim);
    assert_eq!(series.dims, prim);

    // --- set compositions --------------------------------------------------
    let cop = |q: &SetComposition| bar_coproduct(&CtdStructure, q);
    let prim = primitive_dims(&|n| set_comps(n), &cop, &SetComposition::empty(), 4);
    let reduced: Vec<i64> = (1..=4)
        .map(|n| set_comps(n).iter().filter(|q| is_reduced(q)).count() as i64)
        .collect();
    let series = free_generator_series(&IntSeries::new(vec![1, 3, 13, 75])).unwrap();
    println!("\nset compositions (dims 1,3,13,75):");
    println!("  primitives per degree: {prim:?}");
    println!("  reduced compositions:  {reduced:?}");
    println!("  generator series:      {:?}", series.dims);
    assert_eq!(prim, vec![1, 2, 8, 48]);
    assert_eq!(reduced, prim);
    assert_eq!(series.dims, prim);

    // --- planar trees --------------------------------------------------------
    let prim = primitive_dims(&tree_basis, &tree_bar_coproduct, &PlanarTree::Leaf, 4);
    let flagged: Vec<i64> = (1..=4)
        .map(|n| {
            trees(n)
                .iter()
                .filter(|t| {
                    !t.is_leaf() && t.children().last().map(|c| c.is_leaf()).unwrap_or(false)
                })
                .count() as i64
        })
        .collect();
    let series = free_generator_series(&IntSeries::new(vec![1, 3, 11, 45])).unwrap();
    println!("\nplanar trees (dims 1,3,11,45):");
    println!("  primitives per degree:        {prim:?}");
    println!("  trees with rightmost leaf:    {flagged:?}");
    println!("  generator series:             {:?}", series.dims);
    assert_eq!(prim, vec![1, 2, 6, 22]);
    assert_eq!(flagged, prim);
    assert_eq!(series.dims, prim);

    // --- the series transform is invertible and honest -------------------------
    let back = series_from_generators(&IntSeries::new(vec![1, 2, 6, 22]));
    assert_eq!(back.dims, vec![1, 3, 11, 45]);
    println!("\nconvolving the generators back recovers the dimension series");

    // a series that is NOT free produces a negative generator count
    let err = free_generator_series(&IntSeries::new(vec![2, 1]));
    println!("a non-free series is rejected: {err:?}");
    assert!(err.is_err());
}
