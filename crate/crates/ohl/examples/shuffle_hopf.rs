//! The Hopf algebra of permutations: shifted-shuffle product, the two
//! coproducts (prefix splitting and standardized splitting), and the laws
//! tying them together.
//!
//! Run with: `cargo run -p ohl --example shuffle_hopf`

use ohl::bialgebra_lab::tensor_square_product;
use ohl::exact_linear::{coeff_int, lc_tensor};
use ohl::symmetric_combinatorics::{
    coset_factorize, direct_sum, mr_bar_coproduct, mr_hat_coproduct, mr_product_basis, Perm,
};
use ohl::{Basis, LinComb};

fn p(word: &[u8]) -> Perm {
    Perm::new(word.to_vec()).unwrap()
}

fn concat_basis(x: &Perm, y: &Perm) -> LinComb<Perm> {
    LinComb::single(direct_sum(x, y))
}

fn main() {
    // --- the shifted-shuffle product -------------------------------------
    let a = p(&[1]);
    let b = p(&[2, 1]);
    let prod = mr_product_basis(&a, &b);
    println!("[1] * [2,1] = {prod}");
    assert_eq!(prod.len(), 3); // C(3,1) shuffles of a 1-block and a 2-block

    // every term is a way of interleaving [1] with the shifted copy [3,2]
    for (term, _) in prod.iter() {
        let (s1, s2, _) = coset_factorize(term, 1).unwrap();
        assert_eq!(s1, a);
        assert_eq!(s2, b); // factorization recovers both factors
    }
    println!("coset factorization recovers ([1], [2,1]) from every term");

    // --- two coproducts ---------------------------------------------------
    let sigma = p(&[2, 1, 3]);
    println!("\nprefix-splitting coproduct of {}:", sigma.text());
    println!("  barΔ = {}", mr_bar_coproduct(&sigma));
    println!("standardized-splitting coproduct of {}:", sigma.text());
    println!("  hatΔ = {}", mr_hat_coproduct(&sigma));
    // the bar coproduct keeps only splits whose left part is {1..k} as a set;
    // the hat coproduct standardizes every subset split, so 2^n terms total
    assert_eq!(mr_hat_coproduct(&sigma).coeff_sum(), coeff_int(8));

    // --- Hopf compatibility on one instance -------------------------------
    // barΔ(x * y) = barΔ(x) * barΔ(y), multiplying tensor legs componentwise
    let x = p(&[1]);
    let y = p(&[1, 2]);
    let lhs = mr_product_basis(&x, &y).bind(|s| mr_bar_coproduct(s));
    let rhs = tensor_square_product(
        &mr_product_basis,
        &mr_bar_coproduct(&x),
        &mr_bar_coproduct(&y),
    );
    assert_eq!(lhs, rhs);
    println!("\nbarΔ([1] * [1,2]) equals barΔ([1]) * barΔ([1,2]) componentwise");

    // --- the unital infinitesimal law for the other pairing ---------------
    // barΔ(x × y) = barΔ(x)·(1⊗y) + (x⊗1)·barΔ(y) − x⊗y   with × = concat
    let xb = p(&[1]);
    let yb = p(&[2, 1]);
    let lhs = concat_basis(&xb, &yb).bind(|s| mr_bar_coproduct(s));
    let one = LinComb::single(Perm::empty());
    let left = tensor_square_product(
        &concat_basis,
        &mr_bar_coproduct(&xb),
        &lc_tensor(&one, &LinComb::single(yb.clone())),
    );
    let right = tensor_square_product(
        &concat_basis,
        &lc_tensor(&LinComb::single(xb.clone()), &one),
        &mr_bar_coproduct(&yb),
    );
    let rhs = left
        .add(&right)
        .sub(&lc_tensor(&LinComb::single(xb), &LinComb::single(yb)));
    assert_eq!(lhs, rhs);
    println!("concatenation with barΔ satisfies the unital infinitesimal law");
    println!("\n(the full exhaustive versions of these laws: `ohl verify --suite mr`)");
}
