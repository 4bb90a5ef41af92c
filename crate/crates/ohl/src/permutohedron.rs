//! Set compositions (faces of permutohedra) and their operations: the
//! commutative-tridendriform composition rules `dot`/`prec`/`succ`, the
//! quasi-shuffle `w_f` and shuffle `w_g` products, the splitting coproduct
//! (closed formula and an independent generator-recursion), the
//! concatenation/unshuffling pair, and the degree-zero (Zinbiel) quotient.
//!
//! Conventions, all pinned by unit tests:
//!
//! * a set composition is an ordered tuple of disjoint nonempty blocks of
//!   positive labels; "standard" means the labels form `[n]`;
//! * the inductive rules are label-opaque and read, with `w` the appropriate
//!   (quasi-)shuffle of the block lists:
//!   `dot(P,Q) = (P_1 ∪ Q_1) · w(rest P, rest Q)`,
//!   `prec(P,Q) = P_1 · w(rest P, Q)`, `succ(P,Q) := prec(Q,P)`;
//! * boundary cases: `prec(P,∅) = P`, `prec(∅,Q) = 0`, `dot` vanishes if
//!   either side is empty, and `w(∅,∅) = ∅`;
//! * binary composition shifts the right argument's labels by the left
//!   argument's letter count before applying a rule;
//! * permutations act on the right by relabeling with `σ⁻¹`.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

use crate::exact_linear::{bilinear_extend, coeff_int, Basis, LinComb, Tagged2};
use crate::symmetric_combinatorics::{
    mr_product_basis, restrict, shuffle_to_perm, standardize, Perm, Shuffle,
};

/// Errors raised by the set-composition layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermutohedronError {
    #[error("EmptyBlock: blocks must be nonempty")]
    EmptyBlock,
    #[error("DuplicateEntry: label {value} appears more than once")]
    DuplicateEntry { value: i64 },
    #[error("OutOfRange: label {value} must be positive")]
    OutOfRange { value: i64 },
    #[error("DegreeMismatch: expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("NotStandard: labels must form an initial interval")]
    NotStandard,
    #[error("NotDegreeZero: a block has more than one label")]
    NotDegreeZero,
}

// ---------------------------------------------------------------------------
// The basis type
// ---------------------------------------------------------------------------

/// An ordered tuple of disjoint nonempty blocks of positive labels.
/// Blocks are stored with their labels sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetComposition(Vec<Vec<u8>>);

impl SetComposition {
    /// Validated constructor.
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<SetComposition, PermutohedronError> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(PermutohedronError::EmptyBlock);
            }
            for &v in b {
                if v == 0 {
                    return Err(PermutohedronError::OutOfRange { value: v as i64 });
                }
                if !seen.insert(v) {
                    return Err(PermutohedronError::DuplicateEntry { value: v as i64 });
                }
            }
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(SetComposition(blocks))
    }

    fn raw(blocks: Vec<Vec<u8>>) -> SetComposition {
        SetComposition(blocks)
    }

    pub fn empty() -> SetComposition {
        SetComposition(Vec::new())
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.0
    }

    /// Total number of labels (the Hopf-side degree).
    pub fn letter_count(&self) -> usize {
        self.0.iter().map(|b| b.len()).sum()
    }

    pub fn block_count(&self) -> usize {
        self.0.len()
    }

    /// Face degree `n − k` (letters minus blocks); the operadic grading.
    pub fn face_degree(&self) -> usize {
        self.letter_count() - self.block_count()
    }

    /// All labels, sorted.
    pub fn support(&self) -> Vec<u8> {
        let mut s: Vec<u8> = self.0.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    /// True iff the labels are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.support().iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

impl Basis for SetComposition {
    fn text(&self) -> String {
        if self.0.is_empty() {
            return "{}".to_string();
        }
        self.0
            .iter()
            .map(|b| {
                let vals: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", vals.join(","))
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// All set compositions of `[n]`; counts `1, 1, 3, 13, 75, …`.
/// Deterministic order: first block chosen by size then lexicographically,
/// recursing on the rest.
pub fn set_comps(n: usize) -> Vec<SetComposition> {
    fn go(remaining: &[u8], acc: &mut Vec<Vec<u8>>, out: &mut Vec<SetComposition>) {
        if remaining.is_empty() {
            out.push(SetComposition::raw(acc.clone()));
            return;
        }
        for r in 1..=remaining.len() {
            for b in remaining.iter().copied().combinations(r) {
                let rest: Vec<u8> =
                    remaining.iter().copied().filter(|v| !b.contains(v)).collect();
                acc.push(b);
                go(&rest, acc, out);
                acc.pop();
            }
        }
    }
    let ground: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    go(&ground, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Relabelings, restriction, actions
// ---------------------------------------------------------------------------

/// Standardize: replace each label by its rank within the support.
pub fn sc_st(p: &SetComposition) -> SetComposition {
    let supp = p.support();
    let rank = |v: u8| (supp.binary_search(&v).expect("label in support") + 1) as u8;
    SetComposition::raw(p.0.iter().map(|b| b.iter().map(|&v| rank(v)).collect()).collect())
}

/// Inverse of standardization: relabel a standard composition of `[k]` onto
/// the sorted label set `labels`.
pub fn sc_de_st(p: &SetComposition, labels: &[u8]) -> SetComposition {
    SetComposition::raw(
        p.0.iter()
            .map(|b| {
                let mut nb: Vec<u8> = b.iter().map(|&v| labels[v as usize - 1]).collect();
                nb.sort_unstable();
                nb
            })
            .collect(),
    )
}

/// Shift every label by `k`.
pub fn sc_shift(p: &SetComposition, k: usize) -> SetComposition {
    SetComposition::raw(p.0.iter().map(|b| b.iter().map(|&v| v + k as u8).collect()).collect())
}

/// Right action of a permutation by inverse relabeling:
/// `P·σ = (σ⁻¹(P_1), σ⁻¹(P_2), …)`; requires a standard composition whose
/// letter count matches the degree of `σ`.
pub fn sc_action(p: &SetComposition, sigma: &Perm) -> Result<SetComposition, PermutohedronError> {
    if p.letter_count() != sigma.degree() || !p.is_standard() {
        return Err(PermutohedronError::DegreeMismatch {
            expected: sigma.degree(),
            got: p.letter_count(),
        });
    }
    let inv = sigma.inv();
    Ok(SetComposition::raw(
        p.0.iter()
            .map(|b| {
                let mut nb: Vec<u8> = b.iter().map(|&v| inv.word()[v as usize - 1]).collect();
                nb.sort_unstable();
                nb
            })
            .collect(),
    ))
}

/// Intersect each block with `s` and drop empties; labels kept as they are.
pub fn sc_intersect(p: &SetComposition, s: &BTreeSet<u8>) -> SetComposition {
    SetComposition::raw(
        p.0.iter()
            .filter_map(|b| {
                let nb: Vec<u8> = b.iter().copied().filter(|v| s.contains(v)).collect();
                if nb.is_empty() { None } else { Some(nb) }
            })
            .collect(),
    )
}

/// Restriction: intersect with `s`, drop empty blocks, then standardize.
pub fn sc_restrict(p: &SetComposition, s: &BTreeSet<u8>) -> SetComposition {
    sc_st(&sc_intersect(p, s))
}

/// Concatenation with shift: `P ⋆ Q = P · (Q + n(P))`.
pub fn sc_concat(p: &SetComposition, q: &SetComposition) -> SetComposition {
    let mut blocks = p.0.clone();
    blocks.extend(sc_shift(q, p.letter_count()).0);
    SetComposition::raw(blocks)
}

/// True iff no proper prefix of blocks has an initial interval as support
/// (so the composition is not a nontrivial shifted concatenation).
pub fn is_reduced(p: &SetComposition) -> bool {
    if p.letter_count() == 0 {
        return false;
    }
    for l in 1..p.block_count() {
        let supp: BTreeSet<u8> = p.0[..l].iter().flatten().copied().collect();
        if supp.iter().enumerate().all(|(i, &v)| v as usize == i + 1) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Inductive rules (label-opaque)
// ---------------------------------------------------------------------------

/// The three generating rules of the commutative-tridendriform structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriGenerator {
    Dot,
    Prec,
    Succ,
}

impl TriGenerator {
    pub fn name(self) -> &'static str {
        match self {
            TriGenerator::Dot => "dot",
            TriGenerator::Prec => "prec",
            TriGenerator::Succ => "succ",
        }
    }
}

type Block = Vec<u8>;

fn union_block(a: &Block, b: &Block) -> Block {
    let mut out: Block = a.iter().chain(b.iter()).copied().collect();
    out.sort_unstable();
    out
}

fn prefix_all(first: Block, tail: LinComb<SetComposition>) -> LinComb<SetComposition> {
    tail.bind(|r| {
        let mut blocks = Vec::with_capacity(r.0.len() + 1);
        blocks.push(first.clone());
        blocks.extend(r.0.iter().cloned());
        LinComb::single(SetComposition::raw(blocks))
    })
}

/// `dot(P,Q) = (P_1 ∪ Q_1) · w(rest P, rest Q)`; zero if either side is
/// empty. The tail uses the quasi-shuffle when `wf`, the plain shuffle
/// otherwise.
fn raw_dot(p: &[Block], q: &[Block], wf: bool, drop: Option<TriGenerator>) -> LinComb<SetComposition> {
    if p.is_empty() || q.is_empty() {
        return LinComb::zero();
    }
    prefix_all(union_block(&p[0], &q[0]), raw_w(&p[1..], &q[1..], wf, drop))
}

/// `prec(P,Q) = P_1 · w(rest P, Q)`; boundary `prec(P,∅) = P`, `prec(∅,·) = 0`.
fn raw_prec(p: &[Block], q: &[Block], wf: bool, drop: Option<TriGenerator>) -> LinComb<SetComposition> {
    if q.is_empty() {
        return if p.is_empty() {
            LinComb::zero()
        } else {
            LinComb::single(SetComposition::raw(p.to_vec()))
        };
    }
    if p.is_empty() {
        return LinComb::zero();
    }
    prefix_all(p[0].clone(), raw_w(&p[1..], q, wf, drop))
}

/// `succ(P,Q) := prec(Q,P)` — the rules are label-opaque, so the transport
/// leaves labels untouched.
fn raw_succ(p: &[Block], q: &[Block], wf: bool, drop: Option<TriGenerator>) -> LinComb<SetComposition> {
    raw_prec(q, p, wf, drop)
}

/// `w = prec + succ (+ dot if quasi-shuffle)`, with `w(∅,∅) = ∅`.
/// `drop` omits the named branch from the sum at every recursion level
/// (the mutation hook used by sensitivity checks).
fn raw_w(p: &[Block], q: &[Block], wf: bool, drop: Option<TriGenerator>) -> LinComb<SetComposition> {
    if p.is_empty() && q.is_empty() {
        return LinComb::single(SetComposition::empty());
    }
    let mut out = LinComb::zero();
    if drop != Some(TriGenerator::Prec) {
        out = out.add(&raw_prec(p, q, wf, drop));
    }
    if drop != Some(TriGenerator::Succ) {
        out = out.add(&raw_succ(p, q, wf, drop));
    }
    if wf && drop != Some(TriGenerator::Dot) {
        out = out.add(&raw_dot(p, q, wf, drop));
    }
    out
}

/// A generating rule applied to raw (already disjointly labeled) arguments,
/// quasi-shuffle tails.
pub fn raw_generator(
    g: TriGenerator,
    p: &SetComposition,
    q: &SetComposition,
) -> LinComb<SetComposition> {
    match g {
        TriGenerator::Dot => raw_dot(&p.0, &q.0, true, None),
        TriGenerator::Prec => raw_prec(&p.0, &q.0, true, None),
        TriGenerator::Succ => raw_succ(&p.0, &q.0, true, None),
    }
}

/// Binary composition in the commutative-tridendriform operad: shift the
/// right argument, then apply the rule with quasi-shuffle tails.
/// Degree-filtered: face degrees may only grow.
pub fn ctd_compose(
    g: TriGenerator,
    p: &SetComposition,
    q: &SetComposition,
) -> LinComb<SetComposition> {
    let qs = sc_shift(q, p.letter_count());
    raw_generator(g, p, &qs)
}

/// [`ctd_compose`] with one branch dropped from every (recursive)
/// quasi-shuffle tail — deliberately wrong, for sensitivity checks.
pub fn ctd_compose_mutated(
    g: TriGenerator,
    p: &SetComposition,
    q: &SetComposition,
    drop: TriGenerator,
) -> LinComb<SetComposition> {
    let qs = sc_shift(q, p.letter_count());
    match g {
        TriGenerator::Dot => raw_dot(&p.0, &qs.0, true, Some(drop)),
        TriGenerator::Prec => raw_prec(&p.0, &qs.0, true, Some(drop)),
        TriGenerator::Succ => raw_succ(&p.0, &qs.0, true, Some(drop)),
    }
}

/// Binary composition in the shuffle (permutohedron) operad: shuffle tails,
/// `dot` included with a shuffle tail. Exactly graded: face degrees add
/// (`dot` adds one).
pub fn pi_compose(
    g: TriGenerator,
    p: &SetComposition,
    q: &SetComposition,
) -> LinComb<SetComposition> {
    let qs = sc_shift(q, p.letter_count());
    match g {
        TriGenerator::Dot => raw_dot(&p.0, &qs.0, false, None),
        TriGenerator::Prec => raw_prec(&p.0, &qs.0, false, None),
        TriGenerator::Succ => raw_succ(&p.0, &qs.0, false, None),
    }
}

/// Quasi-shuffle product `w_f(P,Q) = prec + succ + dot` after shifting `Q`.
pub fn wf_product_basis(p: &SetComposition, q: &SetComposition) -> LinComb<SetComposition> {
    let qs = sc_shift(q, p.letter_count());
    raw_w(&p.0, &qs.0, true, None)
}

/// Shuffle product `w_g(P,Q) = prec + succ` after shifting `Q`.
pub fn wg_product_basis(p: &SetComposition, q: &SetComposition) -> LinComb<SetComposition> {
    let qs = sc_shift(q, p.letter_count());
    raw_w(&p.0, &qs.0, false, None)
}

/// [`wf_product_basis`] with one branch dropped from the (recursive)
/// quasi-shuffle sum — deliberately wrong, for sensitivity checks.
pub fn wf_product_basis_mutated(
    p: &SetComposition,
    q: &SetComposition,
    drop: TriGenerator,
) -> LinComb<SetComposition> {
    let qs = sc_shift(q, p.letter_count());
    raw_w(&p.0, &qs.0, true, Some(drop))
}

pub fn wf_product(a: &LinComb<SetComposition>, b: &LinComb<SetComposition>) -> LinComb<SetComposition> {
    bilinear_extend(wf_product_basis, a, b)
}

pub fn wg_product(a: &LinComb<SetComposition>, b: &LinComb<SetComposition>) -> LinComb<SetComposition> {
    bilinear_extend(wg_product_basis, a, b)
}

// ---------------------------------------------------------------------------
// Coproducts
// ---------------------------------------------------------------------------

/// Splitting coproduct, closed formula:
/// `Δ(P_1…P_k) = Σ_l st(P_1…P_l) ⊗ st(P_{l+1}…P_k) ⊗ (∪_{j≤l} P_j, ∪_{h>l} P_h)`,
/// tags recording the label sets of the two sides.
pub fn sc_coproduct(p: &SetComposition) -> LinComb<Tagged2<SetComposition>> {
    let mut out = LinComb::zero();
    for l in 0..=p.0.len() {
        let left = SetComposition::raw(p.0[..l].to_vec());
        let right = SetComposition::raw(p.0[l..].to_vec());
        let s: Vec<u8> = left.support();
        let t: Vec<u8> = right.support();
        out.add_term(Tagged2::new(sc_st(&left), sc_st(&right), s, t), coeff_int(1));
    }
    out
}

/// Right action of `σ` on a tagged tensor of set compositions:
/// `(A⊗B⊗(S,T))·σ = A·st(σ|_{σ⁻¹S}) ⊗ B·st(σ|_{σ⁻¹T}) ⊗ (σ⁻¹S, σ⁻¹T)`.
pub fn sc_tagged_action(t: &Tagged2<SetComposition>, sigma: &Perm) -> Tagged2<SetComposition> {
    assert_eq!(
        t.s.len() + t.t.len(),
        sigma.degree(),
        "tag must partition the degree of the acting permutation"
    );
    let inv = sigma.inv();
    let pre = |set: &[u8]| -> BTreeSet<u8> {
        set.iter().map(|&v| inv.word()[v as usize - 1]).collect()
    };
    let s2 = pre(&t.s);
    let t2 = pre(&t.t);
    let left = sc_action(&t.left, &restrict(sigma, &s2).expect("positions in range"))
        .expect("standardized factor matches restricted degree");
    let right = sc_action(&t.right, &restrict(sigma, &t2).expect("positions in range"))
        .expect("standardized factor matches restricted degree");
    Tagged2::new(left, right, s2.into_iter().collect(), t2.into_iter().collect())
}

/// One generating rule applied to tagged tensors (the square of the
/// splitting coproduct): shift the second element's tags, apply the rule to
/// left factors and the quasi-shuffle to right factors, de-standardizing onto
/// the tag labels so the gluing is label-exact.
fn tagged_generator(
    g: TriGenerator,
    e1: &Tagged2<SetComposition>,
    e2: &Tagged2<SetComposition>,
) -> LinComb<Tagged2<SetComposition>> {
    let p = e1.s.len() + e1.t.len();
    let u2: Vec<u8> = e2.s.iter().map(|&x| x + p as u8).collect();
    let v2: Vec<u8> = e2.t.iter().map(|&x| x + p as u8).collect();
    let mut out = LinComb::zero();
    if e1.left.letter_count() == 0 && e2.left.letter_count() == 0 {
        // left side stays empty: apply the rule to the right factors
        let mut tag: Vec<u8> = e1.s.iter().copied().chain(e1.t.iter().copied()).collect();
        tag.extend(u2.iter().copied().chain(v2.iter().copied()));
        tag.sort_unstable();
        for (r, c) in ctd_compose(g, &e1.right, &e2.right).iter() {
            out.add_term(
                Tagged2::new(SetComposition::empty(), r.clone(), Vec::new(), tag.clone()),
                c.clone(),
            );
        }
        return out;
    }
    let a_raw = sc_de_st(&e1.left, &e1.s);
    let b_raw = sc_de_st(&e1.right, &e1.t);
    let c_raw = sc_de_st(&e2.left, &u2);
    let d_raw = sc_de_st(&e2.right, &v2);
    let ga = raw_generator(g, &a_raw, &c_raw);
    let wb = raw_w(&b_raw.0, &d_raw.0, true, None);
    let mut s_tag: Vec<u8> = e1.s.iter().copied().chain(u2.iter().copied()).collect();
    s_tag.sort_unstable();
    let mut t_tag: Vec<u8> = e1.t.iter().copied().chain(v2.iter().copied()).collect();
    t_tag.sort_unstable();
    for (ra, ca) in ga.iter() {
        for (rb, cb) in wb.iter() {
            out.add_term(
                Tagged2::new(sc_st(ra), sc_st(rb), s_tag.clone(), t_tag.clone()),
                ca.clone() * cb.clone(),
            );
        }
    }
    out
}

fn tagged_generator_lc(
    g: TriGenerator,
    l1: &LinComb<Tagged2<SetComposition>>,
    l2: &LinComb<Tagged2<SetComposition>>,
) -> LinComb<Tagged2<SetComposition>> {
    bilinear_extend(|a, b| tagged_generator(g, a, b), l1, l2)
}

fn coproduct_block(m: usize) -> LinComb<Tagged2<SetComposition>> {
    let one = SetComposition::raw(vec![vec![1]]);
    if m == 1 {
        let mut out = LinComb::zero();
        out.add_term(
            Tagged2::new(one.clone(), SetComposition::empty(), vec![1], Vec::new()),
            coeff_int(1),
        );
        out.add_term(
            Tagged2::new(SetComposition::empty(), one, Vec::new(), vec![1]),
            coeff_int(1),
        );
        return out;
    }
    tagged_generator_lc(TriGenerator::Dot, &coproduct_block(1), &coproduct_block(m - 1))
}

fn coproduct_interval(i: &SetComposition) -> LinComb<Tagged2<SetComposition>> {
    if i.0.is_empty() {
        return LinComb::single(Tagged2::new(
            SetComposition::empty(),
            SetComposition::empty(),
            Vec::new(),
            Vec::new(),
        ));
    }
    if i.0.len() == 1 {
        return coproduct_block(i.0[0].len());
    }
    let first = sc_st(&SetComposition::raw(vec![i.0[0].clone()]));
    let rest = sc_st(&SetComposition::raw(i.0[1..].to_vec()));
    tagged_generator_lc(TriGenerator::Prec, &coproduct_interval(&first), &coproduct_interval(&rest))
}

/// Independent route to [`sc_coproduct`]: write `P = I·σ` with `I` the
/// interval composition of the same block sizes and `σ` the shuffle
/// permutation of the blocks; expand `Δ(I)` by the generator recursion
/// (single blocks via `dot`, concatenation of intervals via `prec`) and
/// transport along `Δ(P·σ) = Δ(P)·σ`.
pub fn sc_coproduct_by_generators(p: &SetComposition) -> LinComb<Tagged2<SetComposition>> {
    assert!(p.is_standard(), "generator recursion needs a standard composition");
    if p.letter_count() == 0 {
        return coproduct_interval(&SetComposition::empty());
    }
    let mut acc = 0u8;
    let mut iblocks = Vec::new();
    for b in &p.0 {
        iblocks.push((acc + 1..=acc + b.len() as u8).collect::<Vec<u8>>());
        acc += b.len() as u8;
    }
    let interval = SetComposition::raw(iblocks);
    let sigma = shuffle_to_perm(&Shuffle::new(p.0.clone()).expect("disjoint standard blocks"));
    debug_assert_eq!(sc_action(&interval, &sigma).unwrap(), *p);
    coproduct_interval(&interval).bind(|t| LinComb::single(sc_tagged_action(t, &sigma)))
}

// ---------------------------------------------------------------------------
// Concatenation / unshuffling pair
// ---------------------------------------------------------------------------

/// Concatenation product (single term): `P ⋆ Q = P · (Q + n(P))`.
pub fn ps_star_basis(p: &SetComposition, q: &SetComposition) -> LinComb<SetComposition> {
    LinComb::single(sc_concat(p, q))
}

pub fn ps_star(a: &LinComb<SetComposition>, b: &LinComb<SetComposition>) -> LinComb<SetComposition> {
    bilinear_extend(ps_star_basis, a, b)
}

/// Unshuffling coproduct:
/// `δ(P) = Σ_{S⊔T=[n]} st(P∩S) ⊗ st(P∩T) ⊗ (S,T)` over label splits.
pub fn ps_coproduct(p: &SetComposition) -> LinComb<Tagged2<SetComposition>> {
    let n = p.letter_count();
    let mut out = LinComb::zero();
    for mask in 0u32..(1 << n) {
        let mut s = BTreeSet::new();
        let mut t = BTreeSet::new();
        for v in 1..=n as u8 {
            if mask & (1 << (v - 1)) != 0 {
                s.insert(v);
            } else {
                t.insert(v);
            }
        }
        out.add_term(
            Tagged2::new(
                sc_restrict(p, &s),
                sc_restrict(p, &t),
                s.into_iter().collect(),
                t.into_iter().collect(),
            ),
            coeff_int(1),
        );
    }
    out
}

// ---------------------------------------------------------------------------
// Degree-zero (Zinbiel) layer on permutations
// ---------------------------------------------------------------------------

/// Shuffle product of value words: `m_Z(σ,τ) = Σ_ξ (σ×τ)·ξ`.
pub fn zin_product_basis(s: &Perm, t: &Perm) -> LinComb<Perm> {
    mr_product_basis(s, t)
}

pub fn zin_product(a: &LinComb<Perm>, b: &LinComb<Perm>) -> LinComb<Perm> {
    bilinear_extend(zin_product_basis, a, b)
}

/// Splitting coproduct of a value word:
/// `Δ_Z(σ) = Σ_i st(σ_1…σ_i) ⊗ st(σ_{i+1}…σ_n) ⊗ (value sets)`.
pub fn zin_coproduct(s: &Perm) -> LinComb<Tagged2<Perm>> {
    let w = s.word();
    let mut out = LinComb::zero();
    for i in 0..=w.len() {
        let seq_l: Vec<i64> = w[..i].iter().map(|&v| v as i64).collect();
        let seq_r: Vec<i64> = w[i..].iter().map(|&v| v as i64).collect();
        let left = standardize(&seq_l).expect("permutation letters distinct");
        let right = standardize(&seq_r).expect("permutation letters distinct");
        out.add_term(
            Tagged2::new(left, right, w[..i].to_vec(), w[i..].to_vec()),
            coeff_int(1),
        );
    }
    out
}

fn shuffle_value_words(a: &[u8], b: &[u8]) -> Vec<Vec<u8>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut r in shuffle_value_words(&a[1..], b) {
        r.insert(0, a[0]);
        out.push(r);
    }
    for mut r in shuffle_value_words(a, &b[1..]) {
        r.insert(0, b[0]);
        out.push(r);
    }
    out
}

/// Half-shuffle composition on value words (second argument shifted):
/// `prec(σ,τ) = σ_1 · (rest σ ⧢ τ̂)`, `succ(σ,τ) = τ̂_1 · (σ ⧢ rest τ̂)`.
/// The `dot` generator does not exist at degree zero.
pub fn zin_compose(
    g: TriGenerator,
    s: &Perm,
    t: &Perm,
) -> Result<LinComb<Perm>, PermutohedronError> {
    let shifted: Vec<u8> = t.word().iter().map(|&v| v + s.degree() as u8).collect();
    let (head, rest_a, rest_b): (u8, &[u8], &[u8]) = match g {
        TriGenerator::Dot => return Err(PermutohedronError::NotDegreeZero),
        TriGenerator::Prec => {
            if s.degree() == 0 {
                return Ok(LinComb::zero());
            }
            if shifted.is_empty() {
                return Ok(LinComb::single(s.clone()));
            }
            (s.word()[0], &s.word()[1..], &shifted[..])
        }
        TriGenerator::Succ => {
            if t.degree() == 0 {
                return Ok(LinComb::zero());
            }
            if s.degree() == 0 {
                return Ok(LinComb::single(
                    Perm::new(shifted.clone()).expect("shift of empty base"),
                ));
            }
            (shifted[0], s.word(), &shifted[1..])
        }
    };
    let mut out = LinComb::zero();
    for r in shuffle_value_words(rest_a, rest_b) {
        let mut word = Vec::with_capacity(r.len() + 1);
        word.push(head);
        word.extend(r);
        out.add_term(Perm::new(word).expect("disjoint value words"), coeff_int(1));
    }
    Ok(out)
}

/// Projection onto the degree-zero part: the composition itself (as a word of
/// block minima) if every block is a singleton, zero otherwise.
pub fn degree0_projection(p: &SetComposition) -> LinComb<Perm> {
    match sc0_to_perm(p) {
        Ok(s) => LinComb::single(s),
        Err(_) => LinComb::zero(),
    }
}

/// Read a degree-zero standard composition as the permutation of its labels.
pub fn sc0_to_perm(p: &SetComposition) -> Result<Perm, PermutohedronError> {
    if p.face_degree() != 0 {
        return Err(PermutohedronError::NotDegreeZero);
    }
    if !p.is_standard() {
        return Err(PermutohedronError::NotStandard);
    }
    let word: Vec<u8> = p.0.iter().map(|b| b[0]).collect();
    Ok(Perm::new(word).expect("standard degree-zero composition"))
}

/// Inverse of [`sc0_to_perm`]: the composition of singletons.
pub fn perm_to_sc0(s: &Perm) -> SetComposition {
    SetComposition::raw(s.word().iter().map(|&v| vec![v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Tensor2;

    fn c(blocks: &[&[u8]]) -> SetComposition {
        SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..5).map(|n| set_comps(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 75]);
        assert!(set_comps(3).iter().all(|p| p.is_standard()));
    }

    #[test]
    fn text_and_validation() {
        assert_eq!(c(&[&[3, 4], &[1], &[5, 6], &[2]]).text(), "{3,4}|{1}|{5,6}|{2}");
        assert_eq!(SetComposition::empty().text(), "{}");
        assert!(matches!(
            SetComposition::new(vec![vec![]]),
            Err(PermutohedronError::EmptyBlock)
        ));
        assert!(matches!(
            SetComposition::new(vec![vec![1], vec![1]]),
            Err(PermutohedronError::DuplicateEntry { value: 1 })
        ));
    }

    #[test]
    fn generator_examples() {
        let one = c(&[&[1]]);
        assert_eq!(
            ctd_compose(TriGenerator::Prec, &one, &one),
            LinComb::single(c(&[&[1], &[2]]))
        );
        assert_eq!(
            ctd_compose(TriGenerator::Succ, &one, &one),
            LinComb::single(c(&[&[2], &[1]]))
        );
        assert_eq!(
            ctd_compose(TriGenerator::Dot, &one, &one),
            LinComb::single(c(&[&[1, 2]]))
        );
        let wf = wf_product_basis(&one, &one);
        assert_eq!(wf.len(), 3);
        assert_eq!(wf.coeff(&c(&[&[1, 2]])), coeff_int(1));
        let wg = wg_product_basis(&one, &one);
        assert_eq!(wg.len(), 2);
        assert_eq!(wg.coeff(&c(&[&[1, 2]])), coeff_int(0));
        // pi-dot keeps shuffle tails but still merges the first blocks
        assert_eq!(pi_compose(TriGenerator::Dot, &one, &one), LinComb::single(c(&[&[1, 2]])));
    }

    #[test]
    fn rule_anchors() {
        assert_eq!(
            ctd_compose(TriGenerator::Prec, &c(&[&[1, 2]]), &c(&[&[1]])),
            LinComb::single(c(&[&[1, 2], &[3]]))
        );
        assert_eq!(
            ctd_compose(TriGenerator::Dot, &c(&[&[1], &[2]]), &c(&[&[1]])),
            LinComb::single(c(&[&[1, 3], &[2]]))
        );
    }

    #[test]
    fn degree_behavior() {
        for p in set_comps(2) {
            for q in set_comps(2) {
                let base = p.face_degree() + q.face_degree();
                for g in [TriGenerator::Prec, TriGenerator::Succ] {
                    for (r, _) in pi_compose(g, &p, &q).iter() {
                        assert_eq!(r.face_degree(), base);
                    }
                    for (r, _) in ctd_compose(g, &p, &q).iter() {
                        assert!(r.face_degree() >= base);
                    }
                }
                for (r, _) in pi_compose(TriGenerator::Dot, &p, &q).iter() {
                    assert_eq!(r.face_degree(), base + 1);
                }
                for (r, _) in ctd_compose(TriGenerator::Dot, &p, &q).iter() {
                    assert!(r.face_degree() >= base + 1);
                }
            }
        }
    }

    #[test]
    fn restriction_standardizes() {
        let p = c(&[&[1, 4], &[2], &[3, 5]]);
        let s: BTreeSet<u8> = [1, 3, 5].into_iter().collect();
        assert_eq!(sc_intersect(&p, &s), c(&[&[1], &[3, 5]]));
        assert_eq!(sc_restrict(&p, &s), c(&[&[1], &[2, 3]]));
    }

    #[test]
    fn action_examples() {
        let p = c(&[&[1, 2], &[3]]);
        let s = Perm::new(vec![3, 1, 2]).unwrap();
        // sigma^{-1} = (2,3,1): labels 1,2,3 -> 2,3,1
        assert_eq!(sc_action(&p, &s).unwrap(), c(&[&[2, 3], &[1]]));
        assert!(matches!(
            sc_action(&p, &Perm::identity(2)),
            Err(PermutohedronError::DegreeMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn closed_coproduct_example() {
        let got = sc_coproduct(&c(&[&[1], &[2]]));
        assert_eq!(got.len(), 3);
        assert_eq!(
            got.coeff(&Tagged2::new(c(&[&[1]]), c(&[&[1]]), vec![1], vec![2])),
            coeff_int(1)
        );
        assert_eq!(
            got.coeff(&Tagged2::new(SetComposition::empty(), c(&[&[1], &[2]]), vec![], vec![1, 2])),
            coeff_int(1)
        );
    }

    #[test]
    fn recursion_matches_closed_formula_low_degree() {
        for n in 0..4 {
            for p in set_comps(n) {
                assert_eq!(sc_coproduct_by_generators(&p), sc_coproduct(&p), "at {}", p.text());
            }
        }
    }

    #[test]
    fn reduced_counts() {
        let red: Vec<usize> = (1..5)
            .map(|n| set_comps(n).iter().filter(|p| is_reduced(p)).count())
            .collect();
        assert_eq!(red, vec![1, 2, 8, 48]);
    }

    #[test]
    fn concat_and_unshuffle() {
        let p = c(&[&[1], &[2]]);
        let q = c(&[&[1, 2]]);
        assert_eq!(sc_concat(&p, &q), c(&[&[1], &[2], &[3, 4]]));
        let d = ps_coproduct(&q);
        assert_eq!(d.len(), 4);
        assert_eq!(
            d.coeff(&Tagged2::new(c(&[&[1]]), c(&[&[1]]), vec![1], vec![2])),
            coeff_int(1)
        );
    }

    #[test]
    fn zin_layer() {
        let s = Perm::new(vec![1]).unwrap();
        let got = zin_compose(TriGenerator::Prec, &s, &s).unwrap();
        assert_eq!(got, LinComb::single(Perm::new(vec![1, 2]).unwrap()));
        let got = zin_compose(TriGenerator::Succ, &s, &s).unwrap();
        assert_eq!(got, LinComb::single(Perm::new(vec![2, 1]).unwrap()));
        assert!(matches!(
            zin_compose(TriGenerator::Dot, &s, &s),
            Err(PermutohedronError::NotDegreeZero)
        ));
        // prec + succ == the full shuffle product
        for p in crate::symmetric_combinatorics::perms(2) {
            for q in crate::symmetric_combinatorics::perms(2) {
                let both = zin_compose(TriGenerator::Prec, &p, &q)
                    .unwrap()
                    .add(&zin_compose(TriGenerator::Succ, &p, &q).unwrap());
                assert_eq!(both, zin_product_basis(&p, &q));
            }
        }
        // hat-stripped splitting coproduct == interval splits of the word
        let s = Perm::new(vec![3, 1, 2]).unwrap();
        let stripped: LinComb<Tensor2<Perm, Perm>> =
            zin_coproduct(&s).bind(|t| LinComb::single(t.strip()));
        assert_eq!(stripped, crate::symmetric_combinatorics::mr_bar_coproduct(&s));
    }

    #[test]
    fn degree_zero_projection_roundtrip() {
        let s = Perm::new(vec![2, 3, 1]).unwrap();
        let p = perm_to_sc0(&s);
        assert_eq!(sc0_to_perm(&p).unwrap(), s);
        assert_eq!(degree0_projection(&p), LinComb::single(s));
        assert!(degree0_projection(&c(&[&[1, 2]])).is_zero());
        assert!(matches!(
            sc0_to_perm(&c(&[&[1, 2]])),
            Err(PermutohedronError::NotDegreeZero)
        ));
    }

    #[test]
    fn mutated_product_differs() {
        let one = c(&[&[1]]);
        let full = wf_product_basis(&one, &one);
        for g in [TriGenerator::Dot, TriGenerator::Prec, TriGenerator::Succ] {
            let cut = wf_product_basis_mutated(&one, &one, g);
            assert_ne!(full, cut, "dropping {} must change the product", g.name());
            assert!(cut.len() < full.len());
        }
    }
}
