//! Operadic composition on permutations and on one-dimensional pieces.
//!
//! The associative operad puts `S_n` in arity `n`; full substitution
//! `σ(τ_1, …, τ_n)` replaces the `i`-th letter of `σ` by a shifted copy of
//! `τ_i`. Collapsing every `S_n` to a single line gives the one-dimensional
//! operad whose symmetrized product produces binomial coefficients.
//!
//! Run with: `cargo run -p ohl --example compose_operads`

use ohl::exact_linear::coeff_int;
use ohl::symmetric_combinatorics::{as_compose, com_hat_product, Perm};
use ohl::Basis;

fn p(word: &[u8]) -> Perm {
    Perm::new(word.to_vec()).unwrap()
}

fn main() {
    // --- full substitution ---------------------------------------------
    let outer = p(&[3, 2, 1, 4]);
    let inner = [p(&[2, 1]), p(&[1, 3, 2]), p(&[1]), p(&[2, 3, 1])];
    let result = as_compose(&outer, &inner).unwrap();
    println!("substitution in the associative operad:");
    println!(
        "  {} ( {} )  =  {}",
        outer.text(),
        inner.iter().map(|t| t.text()).collect::<Vec<_>>().join(", "),
        result.text()
    );
    assert_eq!(result, p(&[6, 5, 2, 4, 3, 1, 8, 9, 7]));

    // each slot contributes its own block; slot sizes 2+3+1+3 = 9 letters
    assert_eq!(result.degree(), inner.iter().map(|t| t.degree()).sum::<usize>());

    // --- the identity is the one-letter permutation ---------------------
    let sigma = p(&[2, 3, 1]);
    let units = vec![p(&[1]); 3];
    assert_eq!(as_compose(&sigma, &units).unwrap(), sigma);
    assert_eq!(as_compose(&p(&[1]), &[sigma.clone()]).unwrap(), sigma);
    println!("\nunit laws: σ(1,…,1) = σ and 1(σ) = σ hold for σ = {}", sigma.text());

    // --- associativity: nested vs. sequential substitution --------------
    // ((σ ∘_1 τ) with the remaining slots filled by units) can be built in
    // either order; compare one nested instance both ways.
    let tau = p(&[1, 2]);
    let rho = p(&[2, 1]);
    let step1 = as_compose(&sigma, &[tau.clone(), p(&[1]), p(&[1])]).unwrap();
    let nested = as_compose(&step1, &[rho.clone(), p(&[1]), p(&[1]), p(&[1])]).unwrap();
    let inner_first = as_compose(&tau, &[rho.clone(), p(&[1])]).unwrap();
    let parallel = as_compose(&sigma, &[inner_first, p(&[1]), p(&[1])]).unwrap();
    assert_eq!(nested, parallel);
    println!("nested and parallel substitution agree: {}", nested.text());

    // --- arity mismatches are rejected, not guessed ---------------------
    assert!(as_compose(&sigma, &[tau]).is_err());
    println!("substituting 1 argument into a 3-slot element is an arity error");

    // --- one-dimensional collapse: binomial coefficients ----------------
    println!("\nsymmetrized product of one-dimensional pieces (X^n * X^m):");
    for (n, m) in [(1usize, 1usize), (2, 3), (4, 4)] {
        let (c, d) = com_hat_product(n, m);
        println!("  X^{n} * X^{m} = {} * X^{d}", c);
        assert_eq!(d, n + m);
    }
    let (c, _) = com_hat_product(5, 5);
    assert_eq!(c, coeff_int(252)); // C(10,5)
    println!("  (the coefficient of X^n * X^m is the binomial C(n+m, n))");
}
