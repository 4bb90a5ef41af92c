//! Half-shuffles on permutations: the Zinbiel quotient.
//!
//! Restricting the permutohedron generators to degree-0 faces (permutations)
//! kills the merge generator and leaves two half-shuffles ≺ and ≻ whose sum
//! is the shifted-shuffle product. The first-letter constraint turns the
//! tridendriform relations into the Zinbiel relation and its mirror.
//!
//! Run with: `cargo run -p ohl --example zinbiel`

use ohl::permutohedron::{
    degree0_projection, perm_to_sc0, sc0_to_perm, zin_compose, zin_product_basis, SetComposition,
    TriGenerator,
};
use ohl::symmetric_combinatorics::{mr_product_basis, perms, Perm};
use ohl::{Basis, LinComb};

fn p(word: &[u8]) -> Perm {
    Perm::new(word.to_vec()).unwrap()
}

fn prec(x: &Perm, y: &Perm) -> LinComb<Perm> {
    zin_compose(TriGenerator::Prec, x, y).unwrap()
}

fn succ(x: &Perm, y: &Perm) -> LinComb<Perm> {
    zin_compose(TriGenerator::Succ, x, y).unwrap()
}

fn main() {
    // --- the two halves ------------------------------------------------------
    let x = p(&[1]);
    let y = p(&[2, 1]);
    println!("x = {}, y = {} (y shifts to [4,3] inside products)", x.text(), y.text());
    println!("x ≺ y = {}   (terms starting with a letter of x)", prec(&x, &y));
    println!("x ≻ y = {}   (terms starting with a letter of y)", succ(&x, &y));
    let total = prec(&x, &y).add(&succ(&x, &y));
    assert_eq!(total, mr_product_basis(&x, &y));
    println!("x ≺ y + x ≻ y = {total} = the shuffle product");

    // the merge generator has nowhere to go on degree-0 faces
    assert!(zin_compose(TriGenerator::Dot, &x, &y).is_err());
    println!("the merge generator is rejected on permutations (degree-0 faces)");

    // --- the Zinbiel relation -------------------------------------------------
    // (a ≺ b) ≺ c = a ≺ (b * c)  where * is the full shuffle product
    let a = p(&[1]);
    let b = p(&[1]);
    let c = p(&[2, 1]);
    let lhs = prec(&a, &b).bind(|t| prec(t, &c));
    let bc = mr_product_basis(&b, &c);
    let rhs = bc.bind(|t| prec(&a, t));
    assert_eq!(lhs, rhs);
    println!("\nZinbiel: (a ≺ b) ≺ c = a ≺ (b * c) checked at a=b=[1], c=[2,1]");
    println!("  both sides = {lhs}");

    // and the mirror relations
    let l2 = succ(&a, &b).bind(|t| prec(t, &c));
    let r2 = prec(&b, &c).bind(|t| succ(&a, t));
    assert_eq!(l2, r2);
    let l3 = mr_product_basis(&a, &b).bind(|t| succ(t, &c));
    let r3 = succ(&b, &c).bind(|t| succ(&a, t));
    assert_eq!(l3, r3);
    println!("mirror relations (a≻b)≺c = a≻(b≺c) and (a*b)≻c = a≻(b≻c) hold too");

    // --- transport to singleton-block compositions -----------------------------
    let q = perm_to_sc0(&p(&[2, 1, 3]));
    println!("\npermutation [2,1,3] as a singleton-block composition: {}", q.text());
    assert_eq!(sc0_to_perm(&q).unwrap(), p(&[2, 1, 3]));

    // the degree-0 projection keeps singleton faces and kills merged blocks
    let merged = SetComposition::new(vec![vec![1, 2]]).unwrap();
    assert!(degree0_projection(&merged).is_zero());
    assert_eq!(degree0_projection(&q), LinComb::single(p(&[2, 1, 3])));
    println!("degree-0 projection: {} ↦ [2,1,3], {} ↦ 0", q.text(), merged.text());

    // --- the half-shuffle blind spot -------------------------------------------
    // a ≺ b + a ≻ b = a * b holds whenever (a,b) ≠ (∅,∅); at the empty pair
    // both halves vanish while ∅ * ∅ = ∅
    let e = Perm::empty();
    assert!(prec(&e, &e).add(&succ(&e, &e)).is_zero());
    assert_eq!(mr_product_basis(&e, &e), LinComb::single(Perm::empty()));
    println!("\nat the empty pair both halves vanish: the unit lives outside the halves");

    // exhaustive to degree 3, skipping the empty pair
    for n in 0..=3usize {
        for m in 0..=3 - n {
            if n + m == 0 {
                continue;
            }
            for s in perms(n) {
                for t in perms(m) {
                    assert_eq!(
                        prec(&s, &t).add(&succ(&s, &t)),
                        mr_product_basis(&s, &t)
                    );
                    assert_eq!(zin_product_basis(&s, &t), mr_product_basis(&s, &t));
                }
            }
        }
    }
    println!("halves-sum identity verified for every nonempty pair of total degree <= 3");
}
