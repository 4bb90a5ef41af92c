//! Generic machinery for symmetrizing twisted structures and for exhaustive
//! low-degree verification of (co)algebra laws.
//!
//! A *twisted structure* packages a graded basis, a right action of the
//! symmetric groups, one or more raw ("bar level") products, and a tagged
//! coproduct whose tags record where each tensor leg sits inside the ambient
//! element. Two constructions derive ordinary structures from it:
//!
//! * the **hat** product symmetrizes a raw product over all two-block
//!   shuffles, `m̂(x,y) = Σ_ξ m(x,y)·ξ`;
//! * the **bar** coproduct keeps only the tagged terms whose left tag is an
//!   initial interval, while the **hat** coproduct forgets tags entirely.
//!
//! The checkers at the bottom walk every basis tuple up to a degree bound and
//! return structured pass/fail reports with explicit witnesses on failure.

use serde::Serialize;

use crate::associahedron::PlanarTree;
use crate::exact_linear::{bilinear_extend, coeff_int, Basis, LinComb, Tagged2, Tensor2};
use crate::permutohedron::{
    ps_star_basis, sc_action, sc_coproduct, set_comps, wf_product_basis, wg_product_basis,
    zin_coproduct, zin_product_basis, SetComposition, TriGenerator,
};
use crate::symmetric_combinatorics::{
    direct_sum, mr_tagged_coproduct, perms, shuffle_to_perm, shuffles, Perm,
};
use thiserror::Error;

/// Errors raised by the symmetrization layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabError {
    #[error("InhomogeneousInput: hat products need homogeneous arguments")]
    InhomogeneousInput,
}

// ---------------------------------------------------------------------------
// Twisted structures
// ---------------------------------------------------------------------------

/// A graded basis with a symmetric-group action, raw products, and a tagged
/// coproduct.
pub trait TwistedStructure {
    type B: Basis + Send + 'static;

    fn structure_name(&self) -> &'static str;
    fn basis(&self, n: usize) -> Vec<Self::B>;
    fn degree(&self, b: &Self::B) -> usize;
    fn unit(&self) -> Self::B;
    /// Right action of a permutation whose degree equals the element's.
    fn act(&self, b: &Self::B, sigma: &Perm) -> Self::B;
    fn product_names(&self) -> &'static [&'static str];
    fn raw_product(&self, name: &str, a: &Self::B, b: &Self::B) -> LinComb<Self::B>;
    fn coproduct(&self, b: &Self::B) -> LinComb<Tagged2<Self::B>>;
}

/// Permutations with the concatenation (direct-sum) raw product, the
/// subset-splitting tagged coproduct over positions, and right group
/// multiplication as the action. Its hat product is the shifted-shuffle
/// product; its bar coproduct is deconcatenation-and-standardize.
pub struct AsStructure;

impl TwistedStructure for AsStructure {
    type B = Perm;

    fn structure_name(&self) -> &'static str {
        "as"
    }
    fn basis(&self, n: usize) -> Vec<Perm> {
        perms(n)
    }
    fn degree(&self, b: &Perm) -> usize {
        b.degree()
    }
    fn unit(&self) -> Perm {
        Perm::empty()
    }
    fn act(&self, b: &Perm, sigma: &Perm) -> Perm {
        b.mul(sigma)
    }
    fn product_names(&self) -> &'static [&'static str] {
        &["concat"]
    }
    fn raw_product(&self, name: &str, a: &Perm, b: &Perm) -> LinComb<Perm> {
        match name {
            "concat" => LinComb::single(direct_sum(a, b)),
            other => unreachable!("unknown product `{other}`"),
        }
    }
    fn coproduct(&self, b: &Perm) -> LinComb<Tagged2<Perm>> {
        mr_tagged_coproduct(b)
    }
}

/// Set compositions with the quasi-shuffle (`wf`) and shuffle (`wg`) raw
/// products, the block-splitting tagged coproduct, and the inverse-relabeling
/// action.
pub struct CtdStructure;

impl TwistedStructure for CtdStructure {
    type B = SetComposition;

    fn structure_name(&self) -> &'static str {
        "ctd"
    }
    fn basis(&self, n: usize) -> Vec<SetComposition> {
        set_comps(n)
    }
    fn degree(&self, b: &SetComposition) -> usize {
        b.letter_count()
    }
    fn unit(&self) -> SetComposition {
        SetComposition::empty()
    }
    fn act(&self, b: &SetComposition, sigma: &Perm) -> SetComposition {
        sc_action(b, sigma).expect("degree-matched action")
    }
    fn product_names(&self) -> &'static [&'static str] {
        &["wf", "wg"]
    }
    fn raw_product(&self, name: &str, a: &SetComposition, b: &SetComposition) -> LinComb<SetComposition> {
        match name {
            "wf" => wf_product_basis(a, b),
            "wg" => wg_product_basis(a, b),
            other => unreachable!("unknown product `{other}`"),
        }
    }
    fn coproduct(&self, b: &SetComposition) -> LinComb<Tagged2<SetComposition>> {
        sc_coproduct(b)
    }
}

/// Set compositions with the shifted-concatenation raw product and the
/// label-unshuffling tagged coproduct (the transposed pair).
pub struct PsStructure;

impl TwistedStructure for PsStructure {
    type B = SetComposition;

    fn structure_name(&self) -> &'static str {
        "ps"
    }
    fn basis(&self, n: usize) -> Vec<SetComposition> {
        set_comps(n)
    }
    fn degree(&self, b: &SetComposition) -> usize {
        b.letter_count()
    }
    fn unit(&self) -> SetComposition {
        SetComposition::empty()
    }
    fn act(&self, b: &SetComposition, sigma: &Perm) -> SetComposition {
        sc_action(b, sigma).expect("degree-matched action")
    }
    fn product_names(&self) -> &'static [&'static str] {
        &["star"]
    }
    fn raw_product(&self, name: &str, a: &SetComposition, b: &SetComposition) -> LinComb<SetComposition> {
        match name {
            "star" => ps_star_basis(a, b),
            other => unreachable!("unknown product `{other}`"),
        }
    }
    fn coproduct(&self, b: &SetComposition) -> LinComb<Tagged2<SetComposition>> {
        crate::permutohedron::ps_coproduct(b)
    }
}

/// Permutations (the degree-zero quotient of set compositions) with the
/// value-word shuffle product, the word-splitting tagged coproduct over
/// values, and the twisted action `σ·ξ = ξ⁻¹σ`.
pub struct ZinStructure;

impl TwistedStructure for ZinStructure {
    type B = Perm;

    fn structure_name(&self) -> &'static str {
        "zin"
    }
    fn basis(&self, n: usize) -> Vec<Perm> {
        perms(n)
    }
    fn degree(&self, b: &Perm) -> usize {
        b.degree()
    }
    fn unit(&self) -> Perm {
        Perm::empty()
    }
    fn act(&self, b: &Perm, sigma: &Perm) -> Perm {
        sigma.inv().mul(b)
    }
    fn product_names(&self) -> &'static [&'static str] {
        &["mz"]
    }
    fn raw_product(&self, name: &str, a: &Perm, b: &Perm) -> LinComb<Perm> {
        match name {
            "mz" => zin_product_basis(a, b),
            other => unreachable!("unknown product `{other}`"),
        }
    }
    fn coproduct(&self, b: &Perm) -> LinComb<Tagged2<Perm>> {
        zin_coproduct(b)
    }
}

/// The one-dimensional graded basis `X^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XPow(pub usize);

impl Basis for XPow {
    fn text(&self) -> String {
        format!("X^{}", self.0)
    }
}

/// One basis element per degree, trivial action, additive raw product. The
/// derived hat product picks up the binomial coefficient `C(n+m, n)` purely
/// from the shuffle count.
pub struct ComStructure;

impl TwistedStructure for ComStructure {
    type B = XPow;

    fn structure_name(&self) -> &'static str {
        "com"
    }
    fn basis(&self, n: usize) -> Vec<XPow> {
        vec![XPow(n)]
    }
    fn degree(&self, b: &XPow) -> usize {
        b.0
    }
    fn unit(&self) -> XPow {
        XPow(0)
    }
    fn act(&self, b: &XPow, _sigma: &Perm) -> XPow {
        *b
    }
    fn product_names(&self) -> &'static [&'static str] {
        &["add"]
    }
    fn raw_product(&self, name: &str, a: &XPow, b: &XPow) -> LinComb<XPow> {
        match name {
            "add" => LinComb::single(XPow(a.0 + b.0)),
            other => unreachable!("unknown product `{other}`"),
        }
    }
    fn coproduct(&self, b: &XPow) -> LinComb<Tagged2<XPow>> {
        // split the exponent over every label subset
        let mut out = LinComb::zero();
        for mask in 0u32..(1 << b.0) {
            let mut s = Vec::new();
            let mut t = Vec::new();
            for v in 1..=b.0 as u8 {
                if mask & (1 << (v - 1)) != 0 {
                    s.push(v);
                } else {
                    t.push(v);
                }
            }
            out.add_term(
                Tagged2::new(XPow(s.len()), XPow(t.len()), s, t),
                coeff_int(1),
            );
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Derived (hat / bar) operations
// ---------------------------------------------------------------------------

/// Symmetrize a raw product over all two-block shuffles:
/// `m̂(x,y) = Σ_{ξ ∈ Sh(p,q)} m(x,y)·ξ`. `skip` omits the shuffle at that
/// index from the sum (the deliberate-mutation hook); out-of-range indexes
/// skip nothing.
pub fn hat_of_with<B, M, A, D>(
    raw: M,
    act: A,
    deg: D,
    skip: Option<usize>,
) -> impl Fn(&B, &B) -> LinComb<B>
where
    B: Basis,
    M: Fn(&B, &B) -> LinComb<B>,
    A: Fn(&B, &Perm) -> B,
    D: Fn(&B) -> usize,
{
    move |x: &B, y: &B| {
        let raw_result = raw(x, y);
        let mut out = LinComb::zero();
        for (idx, xi) in shuffles(&[deg(x), deg(y)]).iter().enumerate() {
            if skip == Some(idx) {
                continue;
            }
            let xi_perm = shuffle_to_perm(xi);
            for (r, c) in raw_result.iter() {
                out.add_term(act(r, &xi_perm), c.clone());
            }
        }
        out
    }
}

fn homogeneous_degree<S: TwistedStructure>(
    s: &S,
    a: &LinComb<S::B>,
) -> Result<usize, LabError> {
    let mut degrees = a.iter().map(|(b, _)| s.degree(b));
    let first = degrees.next().expect("nonzero argument");
    if degrees.all(|d| d == first) {
        Ok(first)
    } else {
        Err(LabError::InhomogeneousInput)
    }
}

/// The hat (symmetrized) product of a twisted structure; arguments must be
/// homogeneous.
pub fn hat_product<S: TwistedStructure>(
    s: &S,
    name: &str,
    a: &LinComb<S::B>,
    b: &LinComb<S::B>,
) -> Result<LinComb<S::B>, LabError> {
    if a.is_zero() || b.is_zero() {
        return Ok(LinComb::zero());
    }
    homogeneous_degree(s, a)?;
    homogeneous_degree(s, b)?;
    let f = hat_of_with(
        |x: &S::B, y: &S::B| s.raw_product(name, x, y),
        |x: &S::B, sigma: &Perm| s.act(x, sigma),
        |x: &S::B| s.degree(x),
        None,
    );
    Ok(bilinear_extend(f, a, b))
}

/// The bar (raw, unsymmetrized) product, extended bilinearly.
pub fn bar_product<S: TwistedStructure>(
    s: &S,
    name: &str,
    a: &LinComb<S::B>,
    b: &LinComb<S::B>,
) -> LinComb<S::B> {
    bilinear_extend(|x: &S::B, y: &S::B| s.raw_product(name, x, y), a, b)
}

/// Keep only the tagged terms whose left tag is an initial interval, then
/// forget tags.
pub fn bar_coproduct<S: TwistedStructure>(s: &S, b: &S::B) -> LinComb<Tensor2<S::B, S::B>> {
    let mut out = LinComb::zero();
    for (t, c) in s.coproduct(b).iter() {
        if t.tag_is_interval() {
            out.add_term(t.strip(), c.clone());
        }
    }
    out
}

/// Forget tags entirely.
pub fn hat_coproduct<S: TwistedStructure>(s: &S, b: &S::B) -> LinComb<Tensor2<S::B, S::B>> {
    let mut out = LinComb::zero();
    for (t, c) in s.coproduct(b).iter() {
        out.add_term(t.strip(), c.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Deliberate mutations
// ---------------------------------------------------------------------------

/// A deliberate defect injected into a product, used to demonstrate that the
/// low-degree checks actually detect wrong structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Omit the shuffle at this index from every hat (symmetrized) product.
    DropShuffleTerm(usize),
    /// Omit one generator branch from the quasi-shuffle product recursion.
    DropCtdBranch(TriGenerator),
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// The first counterexample found by a failed check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckWitness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// One verified (or refuted) law.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub axiom: String,
    pub degrees: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CheckWitness>,
    /// Conventions the check relied on (e.g. the tensor-square product used).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub header: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// One-line plain-text rendering.
    pub fn text_line(&self) -> String {
        let tag = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
        };
        let mut line = format!("[{}] {}/{} ({})", tag, self.suite, self.axiom, self.degrees);
        if let Some(h) = &self.header {
            line.push_str(&format!(" [{}]", h));
        }
        if let Some(w) = &self.witness {
            line.push_str(&format!(
                " witness: inputs=({}) lhs={} rhs={}",
                w.inputs.join(", "),
                w.lhs,
                w.rhs
            ));
        }
        line
    }

    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn pass(suite: &str, axiom: &str, degrees: String, header: Option<String>) -> CheckReport {
    CheckReport {
        suite: suite.to_string(),
        axiom: axiom.to_string(),
        degrees,
        status: CheckStatus::Pass,
        witness: None,
        header,
    }
}

fn fail(
    suite: &str,
    axiom: &str,
    degrees: String,
    header: Option<String>,
    witness: CheckWitness,
) -> CheckReport {
    CheckReport {
        suite: suite.to_string(),
        axiom: axiom.to_string(),
        degrees,
        status: CheckStatus::Fail,
        witness: Some(witness),
        header,
    }
}

// ---------------------------------------------------------------------------
// Law checkers
// ---------------------------------------------------------------------------

fn lc_single<B: Basis>(b: &B) -> LinComb<B> {
    LinComb::single(b.clone())
}

/// Associativity on all basis triples with total degree ≤ `max_degree`.
pub fn check_associative<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    prod: &dyn Fn(&B, &B) -> LinComb<B>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree - d1 {
            for d3 in 0..=max_degree - d1 - d2 {
                for x in basis(d1) {
                    for y in basis(d2) {
                        for z in basis(d3) {
                            let lhs = bilinear_extend(&prod, &prod(&x, &y), &lc_single(&z));
                            let rhs = bilinear_extend(&prod, &lc_single(&x), &prod(&y, &z));
                            if lhs != rhs {
                                return fail(
                                    suite,
                                    axiom,
                                    degrees,
                                    None,
                                    CheckWitness {
                                        inputs: vec![x.text(), y.text(), z.text()],
                                        lhs: lhs.to_string(),
                                        rhs: rhs.to_string(),
                                    },
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Two-sided unit law up to `max_degree`.
pub fn check_unit<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    prod: &dyn Fn(&B, &B) -> LinComb<B>,
    unit: &B,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for n in 0..=max_degree {
        for x in basis(n) {
            let left = prod(unit, &x);
            let right = prod(&x, unit);
            let want = lc_single(&x);
            if left != want || right != want {
                let got = if left != want { &left } else { &right };
                return fail(
                    suite,
                    axiom,
                    degrees,
                    None,
                    CheckWitness {
                        inputs: vec![x.text()],
                        lhs: got.to_string(),
                        rhs: want.to_string(),
                    },
                );
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

type Cop<B> = dyn Fn(&B) -> LinComb<Tensor2<B, B>>;

fn cop_left<B: Basis>(
    cop: &Cop<B>,
    t: &LinComb<Tensor2<B, B>>,
) -> LinComb<Tensor2<Tensor2<B, B>, B>> {
    let mut out = LinComb::zero();
    for (pair, c) in t.iter() {
        for (inner, c2) in cop(&pair.left).iter() {
            out.add_term(
                Tensor2::new(inner.clone(), pair.right.clone()),
                c.clone() * c2.clone(),
            );
        }
    }
    out
}

fn cop_right<B: Basis>(
    cop: &Cop<B>,
    t: &LinComb<Tensor2<B, B>>,
) -> LinComb<Tensor2<Tensor2<B, B>, B>> {
    // reassociate (a, (b1, b2)) as ((a, b1), b2) so both sides compare in the
    // same shape
    let mut out = LinComb::zero();
    for (pair, c) in t.iter() {
        for (inner, c2) in cop(&pair.right).iter() {
            out.add_term(
                Tensor2::new(
                    Tensor2::new(pair.left.clone(), inner.left.clone()),
                    inner.right.clone(),
                ),
                c.clone() * c2.clone(),
            );
        }
    }
    out
}

/// Coassociativity on all basis elements up to `max_degree`.
pub fn check_coassociative<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    cop: &Cop<B>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for n in 0..=max_degree {
        for x in basis(n) {
            let d = cop(&x);
            let lhs = cop_left(cop, &d);
            let rhs = cop_right(cop, &d);
            if lhs != rhs {
                return fail(
                    suite,
                    axiom,
                    degrees,
                    None,
                    CheckWitness {
                        inputs: vec![x.text()],
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    },
                );
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Counit law: extracting the degree-0 leg of the coproduct recovers the
/// element on the other side.
pub fn check_counit<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    cop: &Cop<B>,
    unit: &B,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for n in 0..=max_degree {
        for x in basis(n) {
            let d = cop(&x);
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for (pair, c) in d.iter() {
                if pair.left == *unit {
                    left.add_term(pair.right.clone(), c.clone());
                }
                if pair.right == *unit {
                    right.add_term(pair.left.clone(), c.clone());
                }
            }
            let want = lc_single(&x);
            if left != want || right != want {
                return fail(
                    suite,
                    axiom,
                    degrees,
                    None,
                    CheckWitness {
                        inputs: vec![x.text()],
                        lhs: left.to_string(),
                        rhs: right.to_string(),
                    },
                );
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Componentwise product on tensor squares:
/// `(a⊗b)·(c⊗d) = (a·c) ⊗ (b·d)`, no twist sign.
pub fn tensor_square_product<B: Basis>(
    prod: &dyn Fn(&B, &B) -> LinComb<B>,
    a: &LinComb<Tensor2<B, B>>,
    b: &LinComb<Tensor2<B, B>>,
) -> LinComb<Tensor2<B, B>> {
    bilinear_extend(
        |x: &Tensor2<B, B>, y: &Tensor2<B, B>| {
            let l = prod(&x.left, &y.left);
            let r = prod(&x.right, &y.right);
            let mut out = LinComb::zero();
            for (lt, lc) in l.iter() {
                for (rt, rc) in r.iter() {
                    out.add_term(Tensor2::new(lt.clone(), rt.clone()), lc.clone() * rc.clone());
                }
            }
            out
        },
        a,
        b,
    )
}

const TS_HEADER: &str = "tensor-square product componentwise, no twist sign";

/// Bialgebra compatibility `Δ(x·y) = Δ(x)·Δ(y)` on all pairs with total
/// degree ≤ `max_degree`.
pub fn check_hopf_compat<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    prod: &dyn Fn(&B, &B) -> LinComb<B>,
    cop: &Cop<B>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    let header = Some(TS_HEADER.to_string());
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree - d1 {
            for x in basis(d1) {
                for y in basis(d2) {
                    let lhs = prod(&x, &y).bind(|r| cop(r));
                    let rhs = tensor_square_product(prod, &cop(&x), &cop(&y));
                    if lhs != rhs {
                        return fail(
                            suite,
                            axiom,
                            degrees,
                            header,
                            CheckWitness {
                                inputs: vec![x.text(), y.text()],
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            },
                        );
                    }
                }
            }
        }
    }
    pass(suite, axiom, degrees, header)
}

/// Unital-infinitesimal compatibility
/// `Δ(x·y) = (x⊗1)·Δ(y) + Δ(x)·(1⊗y) − x⊗y` on all pairs with total degree
/// ≤ `max_degree`.
pub fn check_unital_infinitesimal<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    prod: &dyn Fn(&B, &B) -> LinComb<B>,
    cop: &Cop<B>,
    unit: &B,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    let header = Some(TS_HEADER.to_string());
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree - d1 {
            for x in basis(d1) {
                for y in basis(d2) {
                    let lhs = prod(&x, &y).bind(|r| cop(r));
                    let x_tensor_unit = LinComb::single(Tensor2::new(x.clone(), unit.clone()));
                    let unit_tensor_y = LinComb::single(Tensor2::new(unit.clone(), y.clone()));
                    let rhs = tensor_square_product(prod, &x_tensor_unit, &cop(&y))
                        .add(&tensor_square_product(prod, &cop(&x), &unit_tensor_y))
                        .sub(&LinComb::single(Tensor2::new(x.clone(), y.clone())));
                    if lhs != rhs {
                        return fail(
                            suite,
                            axiom,
                            degrees,
                            header,
                            CheckWitness {
                                inputs: vec![x.text(), y.text()],
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            },
                        );
                    }
                }
            }
        }
    }
    pass(suite, axiom, degrees, header)
}

/// Cocommutativity `τ∘Δ = Δ` up to `max_degree`.
pub fn check_cocommutative<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    cop: &Cop<B>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for n in 0..=max_degree {
        for x in basis(n) {
            let d = cop(&x);
            let swapped =
                d.bind(|t| LinComb::single(Tensor2::new(t.right.clone(), t.left.clone())));
            if d != swapped {
                return fail(
                    suite,
                    axiom,
                    degrees,
                    None,
                    CheckWitness {
                        inputs: vec![x.text()],
                        lhs: d.to_string(),
                        rhs: swapped.to_string(),
                    },
                );
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Transposition duality: the structure constants of the product equal those
/// of the coproduct read backwards,
/// `⟨R, m(P,Q)⟩ = ⟨P⊗Q, Δ(R)⟩`, all degrees ≤ `max_degree`.
pub fn check_transpose_duality<B: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    prod: &dyn Fn(&B, &B) -> LinComb<B>,
    cop: &Cop<B>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for n in 0..=max_degree {
        let full = basis(n);
        let cops: Vec<LinComb<Tensor2<B, B>>> = full.iter().map(|r| cop(r)).collect();
        for p in 0..=n {
            for pp in basis(p) {
                for qq in basis(n - p) {
                    let pr = prod(&pp, &qq);
                    for (r, d) in full.iter().zip(cops.iter()) {
                        let lhs = pr.coeff(r);
                        let rhs = d.coeff(&Tensor2::new(pp.clone(), qq.clone()));
                        if lhs != rhs {
                            return fail(
                                suite,
                                axiom,
                                degrees,
                                None,
                                CheckWitness {
                                    inputs: vec![pp.text(), qq.text(), r.text()],
                                    lhs: crate::exact_linear::coeff_text(&lhs),
                                    rhs: crate::exact_linear::coeff_text(&rhs),
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Two binary maps agree on every basis pair up to `max_degree`.
pub fn check_product_equality<B: Basis, C: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    f: &dyn Fn(&B, &B) -> LinComb<C>,
    g: &dyn Fn(&B, &B) -> LinComb<C>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree - d1 {
            for x in basis(d1) {
                for y in basis(d2) {
                    let lhs = f(&x, &y);
                    let rhs = g(&x, &y);
                    if lhs != rhs {
                        return fail(
                            suite,
                            axiom,
                            degrees,
                            None,
                            CheckWitness {
                                inputs: vec![x.text(), y.text()],
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            },
                        );
                    }
                }
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Two unary maps agree on every basis element up to `max_degree`.
pub fn check_map_equality<B: Basis, C: Basis>(
    suite: &str,
    axiom: &str,
    basis: &dyn Fn(usize) -> Vec<B>,
    f: &dyn Fn(&B) -> LinComb<C>,
    g: &dyn Fn(&B) -> LinComb<C>,
    max_degree: usize,
) -> CheckReport {
    let degrees = format!("deg <= {max_degree}");
    for n in 0..=max_degree {
        for x in basis(n) {
            let lhs = f(&x);
            let rhs = g(&x);
            if lhs != rhs {
                return fail(
                    suite,
                    axiom,
                    degrees,
                    None,
                    CheckWitness {
                        inputs: vec![x.text()],
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    },
                );
            }
        }
    }
    pass(suite, axiom, degrees, None)
}

/// Escape hatch for one-off checks (series comparisons, expected-violation
/// probes): the closure returns `Ok(())` or a witness.
pub fn check_custom(
    suite: &str,
    axiom: &str,
    degrees: &str,
    header: Option<String>,
    f: impl FnOnce() -> Result<(), CheckWitness>,
) -> CheckReport {
    match f() {
        Ok(()) => pass(suite, axiom, degrees.to_string(), header),
        Err(w) => fail(suite, axiom, degrees.to_string(), header, w),
    }
}

// ---------------------------------------------------------------------------
// Primitive dimensions
// ---------------------------------------------------------------------------

/// Dimensions of the primitive spaces `ker(Δ − 1⊗id − id⊗1)` in degrees
/// `1..=max_degree`.
pub fn primitive_dims<B: Basis>(
    basis: &dyn Fn(usize) -> Vec<B>,
    cop: &Cop<B>,
    unit: &B,
    max_degree: usize,
) -> Vec<i64> {
    let mut out = Vec::new();
    for n in 1..=max_degree {
        let elts = basis(n);
        let rows: Vec<LinComb<Tensor2<B, B>>> = elts
            .iter()
            .map(|b| {
                cop(b)
                    .sub(&LinComb::single(Tensor2::new(b.clone(), unit.clone())))
                    .sub(&LinComb::single(Tensor2::new(unit.clone(), b.clone())))
            })
            .collect();
        let mut support: std::collections::BTreeSet<Tensor2<B, B>> = Default::default();
        for row in &rows {
            for (t, _) in row.iter() {
                support.insert(t.clone());
            }
        }
        let cols: Vec<Tensor2<B, B>> = support.into_iter().collect();
        let rank = crate::exact_linear::matrix_rank(&rows, &cols);
        out.push(elts.len() as i64 - rank as i64);
    }
    out
}

/// Convenience: the three tree-world structures used across the test suites.
pub fn tree_basis(n: usize) -> Vec<PlanarTree> {
    crate::associahedron::trees(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::IntSeries;
    use crate::symmetric_combinatorics::{mr_bar_coproduct, mr_product_basis};
    use num_traits::ToPrimitive;

    #[test]
    fn hat_of_as_is_the_shuffle_product() {
        let s = AsStructure;
        for p in 0..3 {
            for q in 0..3 {
                for x in perms(p) {
                    for y in perms(q) {
                        let got = hat_product(
                            &s,
                            "concat",
                            &LinComb::single(x.clone()),
                            &LinComb::single(y.clone()),
                        )
                        .unwrap();
                        assert_eq!(got, mr_product_basis(&x, &y));
                    }
                }
            }
        }
    }

    #[test]
    fn bar_coproduct_of_as_is_deconcatenation() {
        let s = AsStructure;
        for n in 0..4 {
            for x in perms(n) {
                assert_eq!(bar_coproduct(&s, &x), mr_bar_coproduct(&x));
            }
        }
    }

    #[test]
    fn com_hat_reproduces_binomials() {
        let s = ComStructure;
        for n in 0..6 {
            for m in 0..6 - n {
                let got = hat_product(
                    &s,
                    "add",
                    &LinComb::single(XPow(n)),
                    &LinComb::single(XPow(m)),
                )
                .unwrap();
                let (c, d) = crate::symmetric_combinatorics::com_hat_product(n, m);
                assert_eq!(got.coeff(&XPow(d)), c);
                assert_eq!(got.len(), 1);
            }
        }
    }

    #[test]
    fn inhomogeneous_inputs_are_rejected() {
        let s = AsStructure;
        let mixed = LinComb::single(Perm::empty()).add(&LinComb::single(Perm::identity(1)));
        let e = hat_product(&s, "concat", &mixed, &LinComb::single(Perm::identity(1)));
        assert_eq!(e.unwrap_err(), LabError::InhomogeneousInput);
    }

    #[test]
    fn mr_checks_pass_and_mutation_fails() {
        let basis = |n: usize| perms(n);
        let prod = |x: &Perm, y: &Perm| mr_product_basis(x, y);
        let rep = check_associative("mr", "assoc", &basis, &prod, 3);
        assert!(rep.passed(), "{}", rep.text_line());
        let s = AsStructure;
        let cut = hat_of_with(
            |x: &Perm, y: &Perm| s.raw_product("concat", x, y),
            |x: &Perm, sigma: &Perm| s.act(x, sigma),
            |x: &Perm| s.degree(x),
            Some(0),
        );
        let rep = check_associative("mr", "assoc-mutated", &basis, &cut, 3);
        assert!(!rep.passed());
        assert!(rep.witness.is_some());
    }

    #[test]
    fn counit_and_coassoc_on_trees() {
        let basis = |n: usize| tree_basis(n);
        let cop = |t: &PlanarTree| crate::associahedron::tree_coproduct(t);
        assert!(check_coassociative("tree", "coassoc", &basis, &cop, 3).passed());
        assert!(check_counit("tree", "counit", &basis, &cop, &PlanarTree::Leaf, 3).passed());
    }

    #[test]
    fn primitive_dims_of_deconcatenation() {
        let basis = |n: usize| perms(n);
        let cop = |x: &Perm| mr_bar_coproduct(x);
        let dims = primitive_dims(&basis, &cop, &Perm::empty(), 4);
        assert_eq!(dims, vec![1, 1, 3, 13]);
        let f = IntSeries::new(vec![1, 2, 6, 24]);
        let g = crate::exact_linear::free_generator_series(&f).unwrap();
        assert_eq!(g.dims, dims);
    }

    #[test]
    fn report_rendering() {
        let rep = check_unit(
            "mr",
            "unit",
            &|n: usize| perms(n),
            &|x: &Perm, y: &Perm| mr_product_basis(x, y),
            &Perm::empty(),
            2,
        );
        assert_eq!(rep.text_line(), "[PASS] mr/unit (deg <= 2)");
        let js: serde_json::Value = serde_json::from_str(&rep.json_line()).unwrap();
        assert_eq!(js["status"], "pass");
        assert_eq!(js["suite"], "mr");
        assert!(js.get("witness").is_none());
    }

    #[test]
    fn words_pair_is_not_unital_infinitesimal() {
        use crate::symmetric_combinatorics::{word_deconcat, word_shuffle, words_over, Word};
        let basis = |n: usize| words_over(b"ab", n);
        let prod = |x: &Word, y: &Word| word_shuffle(x, y);
        let cop = |w: &Word| word_deconcat(w);
        let rep = check_unital_infinitesimal(
            "words",
            "ui",
            &basis,
            &prod,
            &cop,
            &Word::empty(),
            2,
        );
        assert!(!rep.passed(), "shuffle/deconcatenation violates the u.i. law");
        let w = rep.witness.unwrap();
        assert_eq!(w.inputs.len(), 2);
        assert!(w.inputs.iter().all(|s| s.len() == 1), "witness at degree (1,1): {w:?}");
    }

    #[test]
    fn duality_on_set_compositions() {
        let basis = |n: usize| set_comps(n);
        let star = |x: &SetComposition, y: &SetComposition| ps_star_basis(x, y);
        let bar_split = |x: &SetComposition| bar_coproduct(&CtdStructure, x);
        let rep = check_transpose_duality("lab", "star-vs-barsplit", &basis, &star, &bar_split, 3);
        assert!(rep.passed(), "{}", rep.text_line());
        // a false pairing is detected: shifted concatenation against the
        // unfiltered splitting coproduct
        let hat_split = |x: &SetComposition| hat_coproduct(&CtdStructure, x);
        let rep = check_transpose_duality("lab", "star-vs-hatsplit", &basis, &star, &hat_split, 3);
        assert!(!rep.passed());
        assert!(rep.witness.is_some());
    }

    #[test]
    fn com_binomial_value() {
        let (c, d) = crate::symmetric_combinatorics::com_hat_product(3, 4);
        assert_eq!(c.to_integer().to_i64().unwrap(), 35);
        assert_eq!(d, 7);
    }
}
