//! The classical shuffle algebra on words: the smallest instance of the
//! product/coproduct pairings used everywhere else in this library, plus a
//! deliberately failing law as a sanity check on the checkers.
//!
//! Run with: `cargo run -p ohl --example words`

use ohl::bialgebra_lab::tensor_square_product;
use ohl::exact_linear::{coeff_int, lc_tensor, Tensor2};
use ohl::symmetric_combinatorics::{
    word_concat, word_deconcat, word_shuffle, word_unshuffle, words_over, Word,
};
use ohl::{Basis, LinComb};

fn main() {
    // --- shuffle product ---------------------------------------------------
    let ab = Word::new("ab");
    let c = Word::new("c");
    println!("ab ⧢ c = {}", word_shuffle(&ab, &c));
    // shuffling a word with itself produces multiplicities
    let a = Word::new("a");
    let sq = word_shuffle(&a, &a);
    println!("a ⧢ a = {sq}");
    assert_eq!(sq.coeff(&Word::new("aa")), coeff_int(2));

    // --- deconcatenation -----------------------------------------------------
    println!("\ndeconcatenation of abc:");
    for (t, k) in word_deconcat(&Word::new("abc")).sorted_terms() {
        println!("  {}*{}", k, t.text());
    }

    // deconcatenation is the transpose of concatenation:
    // <u·v, t> = <u⊗v, Δ(t)>
    let u = Word::new("ab");
    let v = Word::new("c");
    let t = Word::new("abc");
    let prod_side = coeff_int((word_concat(&u, &v) == t) as i64);
    let cop_side = word_deconcat(&t).coeff(&Tensor2::new(u.clone(), v.clone()));
    assert_eq!(prod_side, cop_side);
    println!("<ab·c, abc> = {prod_side} = <ab⊗c, Δ(abc)>  (concat ⊣ deconcat)");

    // and the shuffle is the transpose of unshuffling
    let prod_side = word_shuffle(&u, &v).coeff(&Word::new("acb"));
    let cop_side = word_unshuffle(&Word::new("acb")).coeff(&Tensor2::new(u, v));
    assert_eq!(prod_side, cop_side);
    println!("<ab⧢c, acb> = {prod_side} = <ab⊗c, unshuffle(acb)>  (shuffle ⊣ unshuffle)");

    // --- shuffle + deconcat is a bialgebra ------------------------------------
    // Δ(x ⧢ y) = Δ(x) ⧢ Δ(y) componentwise — one instance
    let x = Word::new("a");
    let y = Word::new("bc");
    let lhs = word_shuffle(&x, &y).bind(|s| word_deconcat(s));
    let rhs = tensor_square_product(&word_shuffle, &word_deconcat(&x), &word_deconcat(&y));
    assert_eq!(lhs, rhs);
    println!("\nΔ(a ⧢ bc) = Δ(a) ⧢ Δ(bc): shuffle/deconcat form a bialgebra");

    // --- but NOT a unital infinitesimal pair -----------------------------------
    // Δ(x⧢y) = (x⊗1)Δ(y) + Δ(x)(1⊗y) − x⊗y fails for the shuffle product;
    // the unital infinitesimal law belongs to *raw* products like concatenation
    let one = LinComb::single(Word::empty());
    let ui_rhs = tensor_square_product(
        &word_shuffle,
        &lc_tensor(&LinComb::single(x.clone()), &one),
        &word_deconcat(&y),
    )
    .add(&tensor_square_product(
        &word_shuffle,
        &word_deconcat(&x),
        &lc_tensor(&one, &LinComb::single(y.clone())),
    ))
    .sub(&lc_tensor(&LinComb::single(x.clone()), &LinComb::single(y.clone())));
    assert_ne!(lhs, ui_rhs);
    println!("the unital-infinitesimal law correctly FAILS for the shuffle product");
    println!("(the law suite keeps this as a negative control: words/ui-violation-detected)");

    // --- enumeration -------------------------------------------------------------
    let count = words_over(b"ab", 3).len();
    println!("\nthere are {count} words of length 3 over {{a,b}}");
    assert_eq!(count, 8);
}
