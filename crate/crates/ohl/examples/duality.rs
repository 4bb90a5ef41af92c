//! Duality between products and coproducts: the matrix of a product in the
//! basis pairing <P, Q> = δ_{P,Q} is the transpose of the matrix of its
//! partner coproduct.
//!
//! On set compositions there are two adjoint pairs:
//!
//!   * block concatenation ⋆ pairs with block-prefix splitting
//!     (deconcatenation of the block list);
//!   * the quasi-shuffle product pairs with label splitting
//!     (restriction to a label subset and its complement).
//!
//! Raw ("bar") products pair with bar coproducts; the symmetrized ("hat")
//! versions pair with hat coproducts (`ohl verify --suite duality`).
//!
//! Run with: `cargo run -p ohl --example duality`

use ohl::bialgebra_lab::{bar_coproduct, CtdStructure, PsStructure};
use ohl::exact_linear::{Coeff, Tensor2};
use ohl::permutohedron::{ps_star_basis, set_comps, wf_product_basis, SetComposition};
use ohl::Basis;

type Cop = dyn Fn(&SetComposition) -> ohl::LinComb<Tensor2<SetComposition, SetComposition>>;
type Prod = dyn Fn(&SetComposition, &SetComposition) -> ohl::LinComb<SetComposition>;

/// <a · b, c> computed on the product side.
fn product_entry(prod: &Prod, a: &SetComposition, b: &SetComposition, c: &SetComposition) -> Coeff {
    prod(a, b).coeff(c)
}

/// <a ⊗ b, Δ(c)> computed on the coproduct side.
fn coproduct_entry(cop: &Cop, a: &SetComposition, b: &SetComposition, c: &SetComposition) -> Coeff {
    cop(c).coeff(&Tensor2::new(a.clone(), b.clone()))
}

fn main() {
    // block-prefix splits (deconcatenation): the CTD-structure bar coproduct
    let prefix_splits = |q: &SetComposition| bar_coproduct(&CtdStructure, q);
    // label splits (restriction): the PS-structure bar coproduct
    let label_splits = |q: &SetComposition| bar_coproduct(&PsStructure, q);

    // --- one entry spelled out ---------------------------------------------
    let a = SetComposition::new(vec![vec![1]]).unwrap();
    let b = SetComposition::new(vec![vec![1], vec![2]]).unwrap();
    let c = SetComposition::new(vec![vec![1], vec![2], vec![3]]).unwrap();
    println!("concatenation:  {} ⋆ {} = {}", a.text(), b.text(), ps_star_basis(&a, &b));
    println!("prefix splits:  Δ({}) = {}", c.text(), prefix_splits(&c));
    let lhs = product_entry(&ps_star_basis, &a, &b, &c);
    let rhs = coproduct_entry(&prefix_splits, &a, &b, &c);
    println!(
        "<{}⋆{}, {}> = {lhs} = <{}⊗{}, Δ{}>",
        a.text(), b.text(), c.text(), a.text(), b.text(), c.text()
    );
    assert_eq!(lhs, rhs);

    // --- full matrices in low degree -----------------------------------------
    let mut checked = 0usize;
    for na in 0..=3usize {
        for nb in 0..=3 - na {
            for a in set_comps(na) {
                for b in set_comps(nb) {
                    for c in set_comps(na + nb) {
                        assert_eq!(
                            product_entry(&ps_star_basis, &a, &b, &c),
                            coproduct_entry(&prefix_splits, &a, &b, &c)
                        );
                        assert_eq!(
                            product_entry(&wf_product_basis, &a, &b, &c),
                            coproduct_entry(&label_splits, &a, &b, &c)
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    println!("\nconcatenation ⋆   is adjoint to block-prefix splitting");
    println!("quasi-shuffle w_f is adjoint to label splitting");
    println!("({checked} matrix entries each, all degrees <= 3, exact)");

    // --- crossing the pairings fails --------------------------------------------
    // the quasi-shuffle of {1} with {1} contains the merged block {1,2}, but
    // prefix splitting never produces it from a singleton pair
    let merged = SetComposition::new(vec![vec![1, 2]]).unwrap();
    let wrong_l = product_entry(&wf_product_basis, &a, &a, &merged);
    let wrong_r = coproduct_entry(&prefix_splits, &a, &a, &merged);
    println!(
        "\ncrossed pairing fails: <w_f({},{}), {}> = {wrong_l} but <{}⊗{}, prefixΔ {}> = {wrong_r}",
        a.text(), a.text(), merged.text(), a.text(), a.text(), merged.text()
    );
    assert_ne!(wrong_l, wrong_r);
}
