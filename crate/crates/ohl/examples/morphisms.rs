//! The maps connecting the three worlds: permutations, set compositions,
//! planar trees — and the commuting square of projections.
//!
//!   φ  : set compositions → planar trees   (surjection, interval fibers)
//!   θ  : φ after reversing the block order
//!   φ₀ : permutations → binary trees       (φ on singleton compositions)
//!   ψ  : trees → sums of compositions      (fiber sum of φ)
//!   ψ₀ : binary trees → sums of permutations (fiber sum of φ₀, injective)
//!   α  : the involutive twist σ ↦ (reverse σ)⁻¹
//!
//! Run with: `cargo run -p ohl --example morphisms`

use ohl::associahedron::{
    binary_trees, dend_projection, phi, phi0, psi, psi0, theta, trees, PlanarTree,
};
use ohl::exact_linear::matrix_rank;
use ohl::permutohedron::{degree0_projection, set_comps, SetComposition};
use ohl::symmetric_combinatorics::{alpha, perms, Perm};
use ohl::{Basis, LinComb};

fn sc(blocks: &[&[u8]]) -> SetComposition {
    SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

fn main() {
    // --- the surjection onto trees ------------------------------------------
    let p = sc(&[&[3, 4], &[1], &[5, 6], &[2]]);
    println!("φ({}) = {}", p.text(), phi(&p).text());
    assert_eq!(phi(&p).text(), "((| (| |)) | (| | |))");

    // θ is φ of the block-reversed composition
    let rev = SetComposition::new(p.blocks().iter().rev().cloned().collect()).unwrap();
    assert_eq!(theta(&p), phi(&rev));
    println!("θ({}) = {} = φ of the reversed blocks", p.text(), theta(&p).text());

    // φ is surjective: every degree-3 tree has a preimage
    for t in trees(3) {
        assert!(set_comps(3).iter().any(|q| phi(q) == t));
    }
    println!("every tree of degree 3 is hit by φ");

    // --- fibers and fiber sums ------------------------------------------------
    let t = PlanarTree::corolla(3);
    println!("\nψ({}) = {}", t.text(), psi(&t));
    // the fibers of φ partition the compositions: summing ψ over all trees
    // of degree n gives each composition exactly once
    let mut total: LinComb<SetComposition> = LinComb::zero();
    for t in trees(3) {
        total = total.add(&psi(&t));
    }
    let mut everything = LinComb::zero();
    for q in set_comps(3) {
        everything.add_term(q, ohl::exact_linear::coeff_int(1));
    }
    assert_eq!(total, everything);
    println!("Σ_t ψ(t) over degree-3 trees lists each of the 13 compositions once");

    // --- the binary story -------------------------------------------------------
    let s = Perm::new(vec![2, 1, 3]).unwrap();
    println!("\nφ₀([2,1,3]) = {}", phi0(&s).text());
    assert!(phi0(&s).is_binary());

    let b = PlanarTree::node(vec![PlanarTree::Leaf, PlanarTree::y()]).unwrap();
    println!("ψ₀({}) = {}", b.text(), psi0(&b).unwrap());
    // ψ₀ is injective: its images are linearly independent
    for n in 1..=4usize {
        let bins = binary_trees(n);
        let rows: Vec<LinComb<Perm>> = bins.iter().map(|t| psi0(t).unwrap()).collect();
        assert_eq!(matrix_rank(&rows, &perms(n)), bins.len());
    }
    println!("ψ₀ images are linearly independent up to degree 4 (exact rank)");

    // wide trees have no ψ₀
    assert!(psi0(&PlanarTree::corolla(3)).is_err());

    // --- the commuting square -----------------------------------------------------
    // trees → (ψ) → compositions → (degree-0 projection) → permutations
    // equals trees → (binary projection) → binary trees → (ψ₀) → permutations
    for n in 0..=3usize {
        for t in trees(n) {
            let through_comps = psi(&t).bind(|q| degree0_projection(q));
            let through_bins =
                dend_projection(&t).bind(|bt| psi0(bt).expect("projection lands in binary trees"));
            assert_eq!(through_comps, through_bins);
        }
    }
    println!("\nπ∘ψ = ψ₀∘π: both projection paths agree on every tree of degree <= 3");

    // --- the twist ------------------------------------------------------------------
    let w = Perm::new(vec![3, 1, 2]).unwrap();
    println!("\nα([3,1,2]) = {} (reverse, then invert)", alpha(&w).text());
    // α² is conjugation by the longest element; α⁴ is the identity
    let w0 = Perm::longest(3);
    assert_eq!(alpha(&alpha(&w)), w0.mul(&w).mul(&w0));
    assert_eq!(alpha(&alpha(&alpha(&alpha(&w)))), w);
    println!("α² = conjugation by [3,2,1]; α⁴ = id");
}
