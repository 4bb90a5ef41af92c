//! Permutation- and word-layer checks against independently computed values:
//! counting oracles (Pascal / multinomial recurrences built here from
//! scratch), fixed worked examples, and structural round-trips.

use std::collections::BTreeSet;

use proptest::prelude::*;

use ohl::exact_linear::{coeff_int, LinComb};
use ohl::symmetric_combinatorics::{
    alpha, as_compose, com_hat_product, coset_factorize, direct_sum, mr_bar_coproduct,
    mr_hat_coproduct, mr_product_basis, perms, restrict, shuffle_to_perm, shuffles, standardize,
    word_concat, word_deconcat, word_shuffle, words_over, Perm, Word,
};
use ohl::{Basis, Tensor2};

fn pascal(rows: usize) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = vec![vec![1]];
    for r in 1..=rows {
        let prev = &p[r - 1];
        let mut row = vec![1i64];
        for c in 1..r {
            row.push(prev[c - 1] + prev[c]);
        }
        row.push(1);
        p.push(row);
    }
    p
}

#[test]
fn shuffle_counts_match_binomials() {
    let p = pascal(6);
    for a in 0..=6usize {
        for b in 0..=(6 - a) {
            assert_eq!(shuffles(&[a, b]).len() as i64, p[a + b][a], "({a},{b})-shuffles");
        }
    }
}

#[test]
fn three_block_shuffles_match_multinomials() {
    let p = pascal(6);
    for a in 0..=3usize {
        for b in 0..=3usize {
            for c in 0..=3usize {
                if a + b + c > 6 {
                    continue;
                }
                let want = p[a + b + c][a] * p[b + c][b];
                assert_eq!(shuffles(&[a, b, c]).len() as i64, want, "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn first_shuffle_is_identity() {
    for a in 0..=4usize {
        for b in 0..=4usize {
            let all = shuffles(&[a, b]);
            assert_eq!(shuffle_to_perm(&all[0]), Perm::identity(a + b));
        }
    }
}

#[test]
fn shuffle_to_perm_worked_example() {
    let all = shuffles(&[2, 3]);
    let s = all
        .iter()
        .find(|s| s.blocks()[0] == vec![2, 5])
        .expect("({2,5},{1,3,4}) occurs among (2,3)-shuffles");
    assert_eq!(shuffle_to_perm(s), Perm::new(vec![3, 1, 4, 5, 2]).unwrap());
}

#[test]
fn coset_factorization_reassembles() {
    for n in 0..=5usize {
        for sigma in perms(n) {
            for p in 0..=n {
                let (s1, s2, xi) = coset_factorize(&sigma, p).unwrap();
                assert_eq!(s1.degree(), p);
                assert_eq!(s2.degree(), n - p);
                let back = direct_sum(&s1, &s2).mul(&shuffle_to_perm(&xi));
                assert_eq!(back, sigma, "sigma={} p={p}", sigma.text());
            }
        }
    }
}

#[test]
fn coset_factorization_is_unique() {
    // distinct (s1, s2, xi) triples give distinct permutations
    for n in 0..=4usize {
        for p in 0..=n {
            let mut seen = BTreeSet::new();
            for s1 in perms(p) {
                for s2 in perms(n - p) {
                    for xi in shuffles(&[p, n - p]) {
                        let sigma = direct_sum(&s1, &s2).mul(&shuffle_to_perm(&xi));
                        assert!(seen.insert(sigma.word().to_vec()));
                    }
                }
            }
            assert_eq!(seen.len(), perms(n).len());
        }
    }
}

#[test]
fn substitution_worked_example() {
    let sigma = Perm::new(vec![3, 2, 1, 4]).unwrap();
    let taus = [
        Perm::new(vec![2, 1]).unwrap(),
        Perm::new(vec![1, 3, 2]).unwrap(),
        Perm::new(vec![1]).unwrap(),
        Perm::new(vec![2, 3, 1]).unwrap(),
    ];
    assert_eq!(
        as_compose(&sigma, &taus).unwrap(),
        Perm::new(vec![6, 5, 2, 4, 3, 1, 8, 9, 7]).unwrap()
    );
}

#[test]
fn substitution_with_identities_is_identity() {
    for n in 1..=5usize {
        for sigma in perms(n) {
            let units: Vec<Perm> = (0..n).map(|_| Perm::identity(1)).collect();
            assert_eq!(as_compose(&sigma, &units).unwrap(), sigma);
        }
    }
}

#[test]
fn standardize_examples() {
    assert_eq!(standardize(&[]).unwrap(), Perm::empty());
    assert_eq!(standardize(&[7]).unwrap(), Perm::new(vec![1]).unwrap());
    assert_eq!(standardize(&[30, 10, 20]).unwrap(), Perm::new(vec![3, 1, 2]).unwrap());
    assert_eq!(
        standardize(&[4, 9, 2, 7]).unwrap(),
        Perm::new(vec![2, 4, 1, 3]).unwrap()
    );
}

#[test]
fn hat_product_term_count_is_binomial() {
    let p = pascal(6);
    for n in 0..=3usize {
        for m in 0..=3usize {
            for s in perms(n) {
                for t in perms(m) {
                    let prod = mr_product_basis(&s, &t);
                    assert_eq!(prod.len() as i64, p[n + m][n]);
                    for (_, c) in prod.iter() {
                        assert_eq!(c, &coeff_int(1));
                    }
                }
            }
        }
    }
}

#[test]
fn one_dimensional_product_matches_pascal() {
    let p = pascal(10);
    for n in 0..=10usize {
        for m in 0..=(10 - n) {
            let (c, d) = com_hat_product(n, m);
            assert_eq!(d, n + m);
            assert_eq!(c, coeff_int(p[n + m][n]));
        }
    }
}

#[test]
fn hat_coproduct_counts_and_prefix_terms() {
    for n in 0..=5usize {
        for sigma in perms(n) {
            let hat = mr_hat_coproduct(&sigma);
            // one term per position subset, counted with multiplicity
            assert_eq!(hat.coeff_sum(), coeff_int(1 << n));
            // every deconcatenation term also occurs among the subset splits
            for (t, c) in mr_bar_coproduct(&sigma).iter() {
                let in_hat = hat.coeff(t);
                assert!(in_hat >= *c, "bar term {} missing from hat", t.text());
            }
        }
    }
}

#[test]
fn alpha_is_reverse_then_invert() {
    // alpha^2 is conjugation by the longest element; alpha^4 is the identity
    for n in 0..=5usize {
        let w0 = Perm::longest(n);
        for s in perms(n) {
            let a2 = alpha(&alpha(&s));
            assert_eq!(a2, w0.mul(&s).mul(&w0));
            assert_eq!(alpha(&alpha(&a2)), s);
        }
    }
}

#[test]
fn alpha_fixed_examples() {
    assert_eq!(alpha(&Perm::new(vec![1, 2]).unwrap()), Perm::new(vec![2, 1]).unwrap());
    // reverse [3,1,2] -> [2,1,3], then invert (self-inverse)
    assert_eq!(
        alpha(&Perm::new(vec![3, 1, 2]).unwrap()),
        Perm::new(vec![2, 1, 3]).unwrap()
    );
}

#[test]
fn word_shuffle_worked_example() {
    let ab = Word::new("ab");
    let c = Word::new("c");
    let sh = word_shuffle(&ab, &c);
    let mut expect = LinComb::zero();
    for w in ["abc", "acb", "cab"] {
        expect.add_term(Word::new(w), coeff_int(1));
    }
    assert_eq!(sh, expect);
}

#[test]
fn word_square_shuffle_has_multiplicity() {
    let a = Word::new("a");
    let sq = word_shuffle(&a, &a);
    assert_eq!(sq, LinComb::term(Word::new("aa"), coeff_int(2)));
}

#[test]
fn word_deconcat_matches_concat_transpose() {
    // <deconcat(w), (u,v)> == [w == uv], checked exhaustively on short words
    for n in 0..=4usize {
        for w in words_over(b"ab", n) {
            let dec = word_deconcat(&w);
            for p in 0..=n {
                for u in words_over(b"ab", p) {
                    for v in words_over(b"ab", n - p) {
                        let c = dec.coeff(&Tensor2::new(u.clone(), v.clone()));
                        let glued = word_concat(&u, &v);
                        assert_eq!(c == coeff_int(1), glued == w);
                        assert!(c == coeff_int(0) || c == coeff_int(1));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Randomized invariants
// ---------------------------------------------------------------------------

fn arb_perm(max_len: usize) -> impl Strategy<Value = Perm> {
    prop::collection::vec(0i64..1000, 0..=max_len).prop_map(|mut seq| {
        // de-duplicate while keeping order so standardization is well defined
        let mut seen = BTreeSet::new();
        seq.retain(|v| seen.insert(*v));
        standardize(&seq).expect("distinct values standardize")
    })
}

proptest! {
    #[test]
    fn standardize_is_idempotent(s in arb_perm(8)) {
        let seq: Vec<i64> = s.word().iter().map(|&v| v as i64).collect();
        prop_assert_eq!(standardize(&seq).unwrap(), s);
    }

    #[test]
    fn inverse_is_involutive(s in arb_perm(8)) {
        prop_assert_eq!(s.inv().inv(), s.clone());
        prop_assert_eq!(s.mul(&s.inv()), Perm::identity(s.degree()));
        prop_assert_eq!(s.inv().mul(&s), Perm::identity(s.degree()));
    }

    #[test]
    fn group_multiplication_is_associative(
        a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)
    ) {
        // pad all three to a common size by direct sum with identities
        let n = a.degree().max(b.degree()).max(c.degree());
        let pad = |s: &Perm| direct_sum(s, &Perm::identity(n - s.degree()));
        let (a, b, c) = (pad(&a), pad(&b), pad(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn direct_sum_degrees_add(a in arb_perm(6), b in arb_perm(6)) {
        let d = direct_sum(&a, &b);
        prop_assert_eq!(d.degree(), a.degree() + b.degree());
        // left block is a verbatim copy, right block is shifted
        prop_assert_eq!(&d.word()[..a.degree()], a.word());
    }

    #[test]
    fn restriction_complements_recombine(s in arb_perm(8), cut in 0usize..9) {
        let n = s.degree();
        let p = cut.min(n);
        let (s1, s2, xi) = coset_factorize(&s, p).unwrap();
        prop_assert_eq!(direct_sum(&s1, &s2).mul(&shuffle_to_perm(&xi)), s);
    }

    #[test]
    fn restrict_of_full_support_is_standardization(s in arb_perm(8)) {
        let all: BTreeSet<u8> = (1..=s.degree() as u8).collect();
        prop_assert_eq!(restrict(&s, &all).unwrap(), s.clone());
    }
}
