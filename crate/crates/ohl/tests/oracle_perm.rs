//! Set-composition layer: counting oracles, dual-route checks (closed
//! formulas against generator recursions, symmetrization against an explicit
//! shuffle sum), transpose dualities computed by direct coefficient pairing,
//! and the graded half-shuffle relations on permutations.

use std::collections::BTreeSet;

use proptest::prelude::*;

use ohl::bialgebra_lab::hat_of_with;
use ohl::exact_linear::{coeff_int, free_generator_series, IntSeries, LinComb};
use ohl::permutohedron::{
    ctd_compose, degree0_projection, is_reduced, perm_to_sc0, pi_compose, ps_star_basis,
    sc0_to_perm, sc_action, sc_concat, sc_coproduct, sc_coproduct_by_generators, sc_restrict,
    sc_st, set_comps, wf_product_basis, wf_product_basis_mutated, wg_product_basis, zin_compose,
    zin_coproduct, zin_product_basis, SetComposition, TriGenerator,
};
use ohl::symmetric_combinatorics::{perms, shuffle_to_perm, shuffles, Perm};
use ohl::{Basis, Tensor2};

/// Fubini-style counts: a(n) = sum_k C(n,k) a(n-k).
fn ordered_partition_counts(max: usize) -> Vec<i64> {
    let mut binom = vec![vec![1i64]];
    for r in 1..=max {
        let prev = &binom[r - 1];
        let mut row = vec![1i64];
        for c in 1..r {
            row.push(prev[c - 1] + prev[c]);
        }
        row.push(1);
        binom.push(row);
    }
    let mut a = vec![1i64];
    for n in 1..=max {
        let mut total = 0;
        for k in 1..=n {
            total += binom[n][k] * a[n - k];
        }
        a.push(total);
    }
    a
}

#[test]
fn set_composition_counts_match_recurrence() {
    let want = ordered_partition_counts(5);
    for n in 0..=5usize {
        assert_eq!(set_comps(n).len() as i64, want[n], "n={n}");
    }
    assert_eq!(&want[..5], &[1, 1, 3, 13, 75]);
}

#[test]
fn quasi_shuffle_without_merges_is_the_shuffle_product() {
    // dropping the merge branch from the quasi-shuffle recursion must give
    // exactly the shuffle-tail product, for every pair
    for a in 0..=3usize {
        for b in 0..=(3 - a).max(0) {
            for p in set_comps(a) {
                for q in set_comps(b) {
                    assert_eq!(
                        wf_product_basis_mutated(&p, &q, TriGenerator::Dot),
                        wg_product_basis(&p, &q),
                        "p={} q={}",
                        p.text(),
                        q.text()
                    );
                }
            }
        }
    }
}

#[test]
fn closed_coproduct_equals_generator_recursion() {
    for n in 0..=4usize {
        for p in set_comps(n) {
            assert_eq!(sc_coproduct(&p), sc_coproduct_by_generators(&p), "p={}", p.text());
        }
    }
}

#[test]
fn graded_composition_is_exact_and_filtered_composition_dominates() {
    for g in [TriGenerator::Prec, TriGenerator::Succ, TriGenerator::Dot] {
        for a in 1..=2usize {
            for b in 1..=2usize {
                for p in set_comps(a) {
                    for q in set_comps(b) {
                        let base =
                            p.face_degree() + q.face_degree() + usize::from(g == TriGenerator::Dot);
                        let graded = pi_compose(g, &p, &q);
                        for (r, _) in graded.iter() {
                            assert_eq!(r.face_degree(), base);
                        }
                        let filtered = ctd_compose(g, &p, &q);
                        // the graded output is the bottom layer of the filtered one
                        for (r, c) in graded.iter() {
                            assert_eq!(filtered.coeff(r), *c, "term {}", r.text());
                        }
                        for (r, _) in filtered.iter() {
                            assert!(r.face_degree() >= base);
                        }
                    }
                }
            }
        }
    }
}

/// Symmetrize a raw product by an explicit sum over two-block shuffles,
/// independently of the library's closure factory.
fn hat_by_hand(
    raw: impl Fn(&SetComposition, &SetComposition) -> LinComb<SetComposition>,
    p: &SetComposition,
    q: &SetComposition,
) -> LinComb<SetComposition> {
    let base = raw(p, q);
    let mut out = LinComb::zero();
    for xi in shuffles(&[p.letter_count(), q.letter_count()]) {
        let sigma = shuffle_to_perm(&xi);
        for (r, c) in base.iter() {
            out.add_term(sc_action(r, &sigma).expect("degrees match"), c.clone());
        }
    }
    out
}

#[test]
fn symmetrization_closure_matches_explicit_shuffle_sum() {
    let via_lab = hat_of_with(
        |p: &SetComposition, q: &SetComposition| wf_product_basis(p, q),
        |p: &SetComposition, s: &Perm| sc_action(p, s).expect("degrees match"),
        |p: &SetComposition| p.letter_count(),
        None,
    );
    for a in 0..=2usize {
        for b in 0..=2usize {
            for p in set_comps(a) {
                for q in set_comps(b) {
                    assert_eq!(via_lab(&p, &q), hat_by_hand(wf_product_basis, &p, &q));
                }
            }
        }
    }
}

/// `<prod(p,q), r> == <p (x) q, cop(r)>` checked by direct coefficient
/// extraction (no shared checker code).
fn duality_holds(
    prod: &dyn Fn(&SetComposition, &SetComposition) -> LinComb<SetComposition>,
    cop: &dyn Fn(&SetComposition) -> LinComb<Tensor2<SetComposition, SetComposition>>,
    max: usize,
) -> bool {
    for n in 0..=max {
        for a in 0..=n {
            for p in set_comps(a) {
                for q in set_comps(n - a) {
                    let pr = prod(&p, &q);
                    for r in set_comps(n) {
                        let lhs = pr.coeff(&r);
                        let rhs = cop(&r).coeff(&Tensor2::new(p.clone(), q.clone()));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn strip_tagged(
    cop: &LinComb<ohl::Tagged2<SetComposition>>,
) -> LinComb<Tensor2<SetComposition, SetComposition>> {
    cop.bind(|t| LinComb::single(t.strip()))
}

fn interval_part(
    cop: &LinComb<ohl::Tagged2<SetComposition>>,
) -> LinComb<Tensor2<SetComposition, SetComposition>> {
    let mut out = LinComb::zero();
    for (t, c) in cop.iter() {
        if t.tag_is_interval() {
            out.add_term(t.strip(), c.clone());
        }
    }
    out
}

#[test]
fn concatenation_pairs_with_prefix_splits() {
    // bar level: plain concatenation against the interval part of the
    // block-prefix coproduct
    let prod = |p: &SetComposition, q: &SetComposition| LinComb::single(sc_concat(p, q));
    let cop = |r: &SetComposition| interval_part(&sc_coproduct(r));
    assert!(duality_holds(&prod, &cop, 3));
    // hat level: symmetrized concatenation against all prefix splits
    let hat = |p: &SetComposition, q: &SetComposition| {
        hat_by_hand(|x, y| ps_star_basis(x, y), p, q)
    };
    let cop_all = |r: &SetComposition| strip_tagged(&sc_coproduct(r));
    assert!(duality_holds(&hat, &cop_all, 3));
}

#[test]
fn quasi_shuffle_pairs_with_restriction_splits() {
    use ohl::permutohedron::ps_coproduct;
    // bar level: raw quasi-shuffle against the interval part of the
    // restriction coproduct
    let prod = |p: &SetComposition, q: &SetComposition| wf_product_basis(p, q);
    let cop = |r: &SetComposition| interval_part(&ps_coproduct(r));
    assert!(duality_holds(&prod, &cop, 3));
    // hat level: symmetrized quasi-shuffle against all restriction splits
    let hat = |p: &SetComposition, q: &SetComposition| hat_by_hand(wf_product_basis, p, q);
    let cop_all = |r: &SetComposition| strip_tagged(&ps_coproduct(r));
    assert!(duality_holds(&hat, &cop_all, 3));
}

#[test]
fn crossing_the_duality_pairings_fails() {
    // pairing the quasi-shuffle with prefix splits (or concatenation with
    // restriction splits) is wrong, and detectably so
    use ohl::permutohedron::ps_coproduct;
    let wf = |p: &SetComposition, q: &SetComposition| wf_product_basis(p, q);
    let prefix_cop = |r: &SetComposition| interval_part(&sc_coproduct(r));
    assert!(!duality_holds(&wf, &prefix_cop, 3));
    let star = |p: &SetComposition, q: &SetComposition| LinComb::single(sc_concat(p, q));
    let restriction_cop = |r: &SetComposition| interval_part(&ps_coproduct(r));
    assert!(!duality_holds(&star, &restriction_cop, 3));
}

#[test]
fn reduced_counts_match_free_generator_series() {
    let reduced: Vec<i64> = (1..=4)
        .map(|n| set_comps(n).iter().filter(|p| is_reduced(p)).count() as i64)
        .collect();
    assert_eq!(reduced, vec![1, 2, 8, 48]);
    let g = free_generator_series(&IntSeries::new(vec![1, 3, 13, 75])).unwrap();
    assert_eq!(g.dims, vec![1, 2, 8, 48]);
}

// ---------------------------------------------------------------------------
// Graded half-shuffle relations on permutations
// ---------------------------------------------------------------------------

fn prec(x: &Perm, y: &Perm) -> LinComb<Perm> {
    zin_compose(TriGenerator::Prec, x, y).expect("prec is total")
}
fn succ(x: &Perm, y: &Perm) -> LinComb<Perm> {
    zin_compose(TriGenerator::Succ, x, y).expect("succ is total")
}
fn lift(op: fn(&Perm, &Perm) -> LinComb<Perm>, a: &LinComb<Perm>, b: &LinComb<Perm>) -> LinComb<Perm> {
    ohl::exact_linear::bilinear_extend(|x: &Perm, y: &Perm| op(x, y), a, b)
}

#[test]
fn half_shuffles_sum_to_the_full_product() {
    for n in 1..=4usize {
        for a in 0..=n {
            for x in perms(a) {
                for y in perms(n - a) {
                    let sum = prec(&x, &y).add(&succ(&x, &y));
                    assert_eq!(sum, zin_product_basis(&x, &y), "x={} y={}", x.text(), y.text());
                }
            }
        }
    }
}

#[test]
fn empty_pair_is_the_half_shuffle_blind_spot() {
    // both halves vanish on the empty pair while the product is the unit;
    // this is why the summation law starts at total degree 1
    let e = Perm::empty();
    assert!(prec(&e, &e).is_zero());
    assert!(succ(&e, &e).is_zero());
    assert_eq!(zin_product_basis(&e, &e), LinComb::single(Perm::empty()));
}

#[test]
fn graded_half_shuffle_relations() {
    for total in 0..=4usize {
        for a in 0..=total {
            for b in 0..=(total - a) {
                let c = total - a - b;
                for x in perms(a) {
                    for y in perms(b) {
                        for z in perms(c) {
                            let sx = LinComb::single(x.clone());
                            let sz = LinComb::single(z.clone());
                            // (x<y)<z = x<(y*z)
                            assert_eq!(
                                lift(prec, &prec(&x, &y), &sz),
                                lift(prec, &sx, &zin_product_basis(&y, &z))
                            );
                            // (x>y)<z = x>(y<z)
                            assert_eq!(
                                lift(prec, &succ(&x, &y), &sz),
                                lift(succ, &sx, &prec(&y, &z))
                            );
                            // (x*y)>z = x>(y>z)
                            assert_eq!(
                                lift(succ, &zin_product_basis(&x, &y), &sz),
                                lift(succ, &sx, &succ(&y, &z))
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn singleton_compositions_transport_to_permutations() {
    for n in 0..=4usize {
        for s in perms(n) {
            let p = perm_to_sc0(&s);
            assert_eq!(p.block_count(), n);
            assert!(p.blocks().iter().all(|b| b.len() == 1));
            assert_eq!(sc0_to_perm(&p).unwrap(), s);
            // the degree-zero projection is the identity there
            assert_eq!(degree0_projection(&p), LinComb::single(s.clone()));
        }
    }
}

#[test]
fn degree0_projection_kills_merged_blocks() {
    for n in 0..=4usize {
        for p in set_comps(n) {
            let proj = degree0_projection(&p);
            if p.face_degree() == 0 {
                assert_eq!(proj.len(), 1);
            } else {
                assert!(proj.is_zero(), "p={}", p.text());
            }
        }
    }
}

#[test]
fn positional_coproduct_counts() {
    for n in 0..=4usize {
        for s in perms(n) {
            let cop = zin_coproduct(&s);
            // one tagged term per prefix length
            assert_eq!(cop.coeff_sum(), coeff_int(n as i64 + 1));
        }
    }
}

// ---------------------------------------------------------------------------
// Randomized invariants
// ---------------------------------------------------------------------------

fn arb_set_comp(max_letters: usize) -> impl Strategy<Value = SetComposition> {
    (0..=max_letters)
        .prop_flat_map(|n| {
            (Just(n), prop::collection::vec(0usize..3, n), prop::collection::vec(0u64..1000, n))
        })
        .prop_map(|(n, cuts, keys)| {
            // scatter letters 1..=n into blocks ordered by a random key
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&i| keys[i]);
            let mut blocks: Vec<Vec<u8>> = Vec::new();
            for (pos, &i) in order.iter().enumerate() {
                if blocks.is_empty() || (pos > 0 && cuts[i] == 0) {
                    blocks.push(vec![i as u8 + 1]);
                } else {
                    blocks.last_mut().unwrap().push(i as u8 + 1);
                }
            }
            for b in &mut blocks {
                b.sort_unstable();
            }
            SetComposition::new(blocks).expect("constructed blocks are disjoint")
        })
}

proptest! {
    #[test]
    fn standardization_fixes_standard_compositions(p in arb_set_comp(6)) {
        prop_assert!(p.is_standard());
        prop_assert_eq!(sc_st(&p), p.clone());
    }

    #[test]
    fn concatenation_adds_degrees(p in arb_set_comp(4), q in arb_set_comp(4)) {
        let c = sc_concat(&p, &q);
        prop_assert_eq!(c.letter_count(), p.letter_count() + q.letter_count());
        prop_assert_eq!(c.block_count(), p.block_count() + q.block_count());
        prop_assert_eq!(c.face_degree(), p.face_degree() + q.face_degree());
        if p.letter_count() > 0 && q.letter_count() > 0 {
            prop_assert!(!is_reduced(&c));
        }
    }

    #[test]
    fn restriction_to_full_support_is_identity(p in arb_set_comp(6)) {
        let all: BTreeSet<u8> = (1..=p.letter_count() as u8).collect();
        prop_assert_eq!(sc_restrict(&p, &all), p.clone());
    }

    #[test]
    fn action_preserves_shape(p in arb_set_comp(5), seed in 0u64..1000) {
        let n = p.letter_count();
        let all = perms(n);
        let sigma = &all[(seed as usize) % all.len()];
        let q = sc_action(&p, sigma).unwrap();
        prop_assert_eq!(q.letter_count(), n);
        prop_assert_eq!(q.block_count(), p.block_count());
        prop_assert_eq!(q.face_degree(), p.face_degree());
        // acting by the identity changes nothing
        prop_assert_eq!(sc_action(&p, &Perm::identity(n)).unwrap(), p.clone());
    }
}
