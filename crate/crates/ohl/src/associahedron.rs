//! Planar rooted trees (faces of associahedra), the tridendriform operations
//! `prec`/`succ`/`dot` and their sum `*`, two coproducts, the dendriform
//! (binary-tree) quotient, the sector-insertion partial compositions, and the
//! maps between the tree and set-composition worlds.
//!
//! Conventions, all pinned by unit tests:
//!
//! * every internal vertex has arity at least 2; the degree of a tree is its
//!   leaf count minus one, so the single leaf `|` is the degree-0 unit;
//! * main rules: `prec(x,y)` replaces the last child of `x` by
//!   `last(x) * y`, `succ(x,y)` replaces the first child of `y` by
//!   `x * first(y)`, `dot(x,y)` glues both at a shared middle child
//!   `last(x) * first(y)`;
//! * boundary cases: `prec(x,|) = x`, `prec(|,y) = 0`, `succ(|,y) = y`,
//!   `succ(x,|) = 0`, `dot` vanishes if either side is a leaf, and `*` has
//!   `|` as a two-sided unit.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::exact_linear::{bilinear_extend, coeff_int, Basis, Coeff, LinComb, Tensor2};
use crate::permutohedron::{
    perm_to_sc0, sc_restrict, set_comps, SetComposition, TriGenerator,
};
use crate::symmetric_combinatorics::{perms, Perm};

/// Errors raised by the tree layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssociahedronError {
    #[error("BadArity: internal vertices need at least 2 children, got {got}")]
    BadArity { got: usize },
    #[error("BadSector: sector {sector} not in 1..={max}, or a leaf argument")]
    BadSector { sector: usize, max: usize },
    #[error("NotBinary: operation defined on binary trees only")]
    NotBinary,
    #[error("BadGenerator: generator `{generator}` not available here")]
    BadGenerator { generator: &'static str },
}

// ---------------------------------------------------------------------------
// The basis type
// ---------------------------------------------------------------------------

/// A planar rooted tree whose internal vertices all have arity ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

use PlanarTree::{Leaf, Node};

impl PlanarTree {
    /// Validated constructor for an internal vertex.
    pub fn node(children: Vec<PlanarTree>) -> Result<PlanarTree, AssociahedronError> {
        if children.len() < 2 {
            return Err(AssociahedronError::BadArity { got: children.len() });
        }
        Ok(Node(children))
    }

    fn raw(children: Vec<PlanarTree>) -> PlanarTree {
        debug_assert!(children.len() >= 2);
        Node(children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Leaf)
    }

    pub fn leaves(&self) -> usize {
        match self {
            Leaf => 1,
            Node(cs) => cs.iter().map(|c| c.leaves()).sum(),
        }
    }

    /// Degree = leaves − 1.
    pub fn degree(&self) -> usize {
        self.leaves() - 1
    }

    pub fn is_binary(&self) -> bool {
        match self {
            Leaf => true,
            Node(cs) => cs.len() == 2 && cs.iter().all(|c| c.is_binary()),
        }
    }

    pub fn children(&self) -> &[PlanarTree] {
        match self {
            Leaf => &[],
            Node(cs) => cs,
        }
    }

    /// The binary grafting vertex `(| |)`.
    pub fn y() -> PlanarTree {
        Node(vec![Leaf, Leaf])
    }

    /// The corolla with `n` leaves.
    pub fn corolla(n: usize) -> PlanarTree {
        assert!(n >= 2);
        Node(vec![Leaf; n])
    }
}

impl Basis for PlanarTree {
    fn text(&self) -> String {
        match self {
            Leaf => "|".to_string(),
            Node(cs) => {
                let inner: Vec<String> = cs.iter().map(|c| c.text()).collect();
                format!("({})", inner.join(" "))
            }
        }
    }
}

fn compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return if total >= 1 { vec![vec![total]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(k - 1) {
        for mut rest in compositions(total - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All planar trees of degree `n`; counts `1, 1, 3, 11, 45, …`.
pub fn trees(n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return vec![Leaf];
    }
    let mut out = Vec::new();
    for k in 2..=n + 1 {
        for comp in compositions(n + 1, k) {
            let choices: Vec<Vec<PlanarTree>> = comp.iter().map(|&l| trees(l - 1)).collect();
            for combo in choices.iter().multi_cartesian_product() {
                out.push(PlanarTree::raw(combo.into_iter().cloned().collect()));
            }
        }
    }
    out
}

/// All binary trees of degree `n`; Catalan counts `1, 1, 2, 5, 14, …`.
pub fn binary_trees(n: usize) -> Vec<PlanarTree> {
    trees(n).into_iter().filter(|t| t.is_binary()).collect()
}

// ---------------------------------------------------------------------------
// Tridendriform operations
// ---------------------------------------------------------------------------

/// The generator trees: `prec ↦ (| (| |))`, `succ ↦ ((| |) |)`,
/// `dot ↦ (| | |)`. This identification is cross-validated against sector
/// insertion by the test suite rather than assumed.
pub fn generator_tree(g: TriGenerator) -> PlanarTree {
    match g {
        TriGenerator::Prec => Node(vec![Leaf, PlanarTree::y()]),
        TriGenerator::Succ => Node(vec![PlanarTree::y(), Leaf]),
        TriGenerator::Dot => PlanarTree::corolla(3),
    }
}

/// `x * y = prec + succ + dot`, with `|` a two-sided unit.
pub fn td_star_basis(x: &PlanarTree, y: &PlanarTree) -> LinComb<PlanarTree> {
    if x.is_leaf() {
        return LinComb::single(y.clone());
    }
    if y.is_leaf() {
        return LinComb::single(x.clone());
    }
    let mut out = LinComb::zero();
    for g in [TriGenerator::Prec, TriGenerator::Succ, TriGenerator::Dot] {
        out = out.add(&td_compose(g, x, y));
    }
    out
}

pub fn td_star(a: &LinComb<PlanarTree>, b: &LinComb<PlanarTree>) -> LinComb<PlanarTree> {
    bilinear_extend(td_star_basis, a, b)
}

/// One tridendriform rule applied to basis trees.
pub fn td_compose(g: TriGenerator, x: &PlanarTree, y: &PlanarTree) -> LinComb<PlanarTree> {
    match g {
        TriGenerator::Prec => match (x, y) {
            (_, Leaf) => {
                if x.is_leaf() {
                    LinComb::zero()
                } else {
                    LinComb::single(x.clone())
                }
            }
            (Leaf, _) => LinComb::zero(),
            (Node(cs), _) => {
                let (last, init) = cs.split_last().expect("arity >= 2");
                td_star_basis(last, y).bind(|s| {
                    let mut ch = init.to_vec();
                    ch.push(s.clone());
                    LinComb::single(PlanarTree::raw(ch))
                })
            }
        },
        TriGenerator::Succ => match (x, y) {
            (Leaf, _) => {
                if y.is_leaf() {
                    LinComb::zero()
                } else {
                    LinComb::single(y.clone())
                }
            }
            (_, Leaf) => LinComb::zero(),
            (_, Node(ds)) => {
                let (first, tail) = ds.split_first().expect("arity >= 2");
                td_star_basis(x, first).bind(|s| {
                    let mut ch = vec![s.clone()];
                    ch.extend(tail.iter().cloned());
                    LinComb::single(PlanarTree::raw(ch))
                })
            }
        },
        TriGenerator::Dot => match (x, y) {
            (Leaf, _) | (_, Leaf) => LinComb::zero(),
            (Node(cs), Node(ds)) => {
                let (last, init) = cs.split_last().expect("arity >= 2");
                let (first, tail) = ds.split_first().expect("arity >= 2");
                td_star_basis(last, first).bind(|s| {
                    let mut ch = init.to_vec();
                    ch.push(s.clone());
                    ch.extend(tail.iter().cloned());
                    LinComb::single(PlanarTree::raw(ch))
                })
            }
        },
    }
}

// ---------------------------------------------------------------------------
// Coproducts and the grafting product
// ---------------------------------------------------------------------------

/// Admissible-cut coproduct, defined recursively: the leaf is grouplike,
/// and for `t = ∨(t_1,…,t_k)`,
/// `Δ(t) = Σ ∨(t_1⁽¹⁾,…,t_k⁽¹⁾) ⊗ (t_1⁽²⁾ * … * t_k⁽²⁾)  +  | ⊗ t`.
/// Corollas come out primitive.
pub fn tree_coproduct(t: &PlanarTree) -> LinComb<Tensor2<PlanarTree, PlanarTree>> {
    match t {
        Leaf => LinComb::single(Tensor2::new(Leaf, Leaf)),
        Node(cs) => {
            let parts: Vec<Vec<(Tensor2<PlanarTree, PlanarTree>, Coeff)>> = cs
                .iter()
                .map(|c| tree_coproduct(c).iter().map(|(k, v)| (k.clone(), v.clone())).collect())
                .collect();
            let mut out = LinComb::zero();
            fn go(
                idx: usize,
                parts: &[Vec<(Tensor2<PlanarTree, PlanarTree>, Coeff)>],
                lefts: &mut Vec<PlanarTree>,
                right_acc: &LinComb<PlanarTree>,
                coeff: &Coeff,
                out: &mut LinComb<Tensor2<PlanarTree, PlanarTree>>,
            ) {
                if idx == parts.len() {
                    for (r, vr) in right_acc.iter() {
                        out.add_term(
                            Tensor2::new(PlanarTree::raw(lefts.clone()), r.clone()),
                            coeff.clone() * vr.clone(),
                        );
                    }
                    return;
                }
                for (term, v) in &parts[idx] {
                    lefts.push(term.left.clone());
                    let next_acc = td_star(right_acc, &LinComb::single(term.right.clone()));
                    let next_coeff = coeff.clone() * v.clone();
                    go(idx + 1, parts, lefts, &next_acc, &next_coeff, out);
                    lefts.pop();
                }
            }
            go(
                0,
                &parts,
                &mut Vec::new(),
                &LinComb::single(Leaf),
                &coeff_int(1),
                &mut out,
            );
            out.add_term(Tensor2::new(Leaf, t.clone()), coeff_int(1));
            out
        }
    }
}

/// Rightmost-spine-cut coproduct, the transpose of [`backslash`] grafting.
pub fn tree_bar_coproduct(t: &PlanarTree) -> LinComb<Tensor2<PlanarTree, PlanarTree>> {
    match t {
        Leaf => LinComb::single(Tensor2::new(Leaf, Leaf)),
        Node(cs) => {
            let mut out = LinComb::single(Tensor2::new(Leaf, t.clone()));
            let (last, init) = cs.split_last().expect("arity >= 2");
            for (cut, v) in tree_bar_coproduct(last).iter() {
                let mut ch = init.to_vec();
                ch.push(cut.left.clone());
                out.add_term(Tensor2::new(PlanarTree::raw(ch), cut.right.clone()), v.clone());
            }
            out
        }
    }
}

/// Graft `b` onto the rightmost leaf of `a`; associative, with the leaf as
/// two-sided unit.
pub fn backslash(a: &PlanarTree, b: &PlanarTree) -> PlanarTree {
    match a {
        Leaf => b.clone(),
        Node(cs) => {
            let (last, init) = cs.split_last().expect("arity >= 2");
            let mut ch = init.to_vec();
            ch.push(backslash(last, b));
            PlanarTree::raw(ch)
        }
    }
}

// ---------------------------------------------------------------------------
// Dendriform (binary) quotient
// ---------------------------------------------------------------------------

/// Projection onto binary trees: identity on binary, zero otherwise.
pub fn dend_projection(t: &PlanarTree) -> LinComb<PlanarTree> {
    if t.is_binary() {
        LinComb::single(t.clone())
    } else {
        LinComb::zero()
    }
}

/// Native dendriform rules on binary trees (`dot` does not survive the
/// quotient).
pub fn dend_compose(
    g: TriGenerator,
    x: &PlanarTree,
    y: &PlanarTree,
) -> Result<LinComb<PlanarTree>, AssociahedronError> {
    if !x.is_binary() || !y.is_binary() {
        return Err(AssociahedronError::NotBinary);
    }
    match g {
        TriGenerator::Dot => Err(AssociahedronError::BadGenerator { generator: "dot" }),
        TriGenerator::Prec => Ok(dend_prec(x, y)),
        TriGenerator::Succ => Ok(dend_succ(x, y)),
    }
}

fn dend_prec(x: &PlanarTree, y: &PlanarTree) -> LinComb<PlanarTree> {
    match (x, y) {
        (_, Leaf) => {
            if x.is_leaf() {
                LinComb::zero()
            } else {
                LinComb::single(x.clone())
            }
        }
        (Leaf, _) => LinComb::zero(),
        (Node(cs), _) => dend_star_basis(&cs[1], y)
            .bind(|s| LinComb::single(PlanarTree::raw(vec![cs[0].clone(), s.clone()]))),
    }
}

fn dend_succ(x: &PlanarTree, y: &PlanarTree) -> LinComb<PlanarTree> {
    match (x, y) {
        (Leaf, _) => {
            if y.is_leaf() {
                LinComb::zero()
            } else {
                LinComb::single(y.clone())
            }
        }
        (_, Leaf) => LinComb::zero(),
        (_, Node(ds)) => dend_star_basis(x, &ds[0])
            .bind(|s| LinComb::single(PlanarTree::raw(vec![s.clone(), ds[1].clone()]))),
    }
}

/// `x ⋆ y = prec + succ` on binary trees, `|` a two-sided unit.
pub fn dend_star_basis(x: &PlanarTree, y: &PlanarTree) -> LinComb<PlanarTree> {
    debug_assert!(x.is_binary() && y.is_binary());
    if x.is_leaf() {
        return LinComb::single(y.clone());
    }
    if y.is_leaf() {
        return LinComb::single(x.clone());
    }
    dend_prec(x, y).add(&dend_succ(x, y))
}

pub fn dend_star(a: &LinComb<PlanarTree>, b: &LinComb<PlanarTree>) -> LinComb<PlanarTree> {
    bilinear_extend(dend_star_basis, a, b)
}

/// Coproduct of the binary quotient: recursively
/// `Δ_Y(∨(t_0,t_1)) = Σ ∨(t_0⁽¹⁾,t_1⁽¹⁾) ⊗ (t_0⁽²⁾ ⋆ t_1⁽²⁾) + | ⊗ t`.
pub fn dend_coproduct(
    t: &PlanarTree,
) -> Result<LinComb<Tensor2<PlanarTree, PlanarTree>>, AssociahedronError> {
    if !t.is_binary() {
        return Err(AssociahedronError::NotBinary);
    }
    Ok(dend_coproduct_inner(t))
}

fn dend_coproduct_inner(t: &PlanarTree) -> LinComb<Tensor2<PlanarTree, PlanarTree>> {
    match t {
        Leaf => LinComb::single(Tensor2::new(Leaf, Leaf)),
        Node(cs) => {
            let d0 = dend_coproduct_inner(&cs[0]);
            let d1 = dend_coproduct_inner(&cs[1]);
            let mut out = LinComb::zero();
            for (t0, v0) in d0.iter() {
                for (t1, v1) in d1.iter() {
                    let prod = dend_star_basis(&t0.right, &t1.right);
                    for (r, vr) in prod.iter() {
                        out.add_term(
                            Tensor2::new(
                                PlanarTree::raw(vec![t0.left.clone(), t1.left.clone()]),
                                r.clone(),
                            ),
                            v0.clone() * v1.clone() * vr.clone(),
                        );
                    }
                }
            }
            out.add_term(Tensor2::new(Leaf, t.clone()), coeff_int(1));
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Maps between worlds
// ---------------------------------------------------------------------------

/// Set compositions to trees: `φ(∅) = |`, and for `P = (P_1, P_2, …)` of
/// `[n]` with `P_1 = {a_1<…<a_j}`, the children of `φ(P)` are the images of
/// the rest of `P` restricted to the open label intervals
/// `(0,a_1), (a_1,a_2), …, (a_j, n+1)`.
pub fn phi(p: &SetComposition) -> PlanarTree {
    assert!(p.is_standard(), "phi expects a standard set composition");
    if p.block_count() == 0 {
        return Leaf;
    }
    let n = p.letter_count() as u8;
    let first = &p.blocks()[0];
    let rest = SetComposition::new(p.blocks()[1..].to_vec()).expect("valid sub-blocks");
    let mut bounds: Vec<u8> = vec![0];
    bounds.extend(first.iter().copied());
    bounds.push(n + 1);
    let children: Vec<PlanarTree> = bounds
        .windows(2)
        .map(|w| {
            let interval: std::collections::BTreeSet<u8> = (w[0] + 1..w[1]).collect();
            phi(&sc_restrict(&rest, &interval))
        })
        .collect();
    PlanarTree::raw(children)
}

/// `θ(P) = φ` of the block-reversed composition.
pub fn theta(p: &SetComposition) -> PlanarTree {
    let rev = SetComposition::new(p.blocks().iter().rev().cloned().collect())
        .expect("reversal preserves validity");
    phi(&rev)
}

/// `φ₀(σ) = φ` of the composition of singletons; lands in binary trees.
pub fn phi0(s: &Perm) -> PlanarTree {
    phi(&perm_to_sc0(s))
}

/// Fiber sum of `φ`: `ψ(t) = Σ_{φ(P)=t} P` over standard compositions of the
/// same degree.
pub fn psi(t: &PlanarTree) -> LinComb<SetComposition> {
    let mut out = LinComb::zero();
    for p in set_comps(t.degree()) {
        if phi(&p) == *t {
            out.add_term(p, coeff_int(1));
        }
    }
    out
}

/// Fiber sum of `φ₀`: `ψ₀(t) = Σ_{φ₀(σ)=t} σ`, defined on binary trees.
pub fn psi0(t: &PlanarTree) -> Result<LinComb<Perm>, AssociahedronError> {
    if !t.is_binary() {
        return Err(AssociahedronError::NotBinary);
    }
    let mut out = LinComb::zero();
    for s in perms(t.degree()) {
        if phi0(&s) == *t {
            out.add_term(s, coeff_int(1));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Sector insertion
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Vertex {
    labels: Vec<u32>,
    parent: Option<usize>,
    slots: Vec<Option<usize>>,
}

/// Walk the tree in preorder, numbering internal vertices and recording, for
/// each vertex, its sector labels (the leaf count at each gap between
/// consecutive children) and child slots.
fn decompose(t: &PlanarTree) -> BTreeMap<usize, Vertex> {
    let mut verts = BTreeMap::new();
    let mut next_id = 0usize;
    let mut leaf_count = 0u32;
    fn visit(
        node: &PlanarTree,
        parent: Option<usize>,
        verts: &mut BTreeMap<usize, Vertex>,
        next_id: &mut usize,
        leaf_count: &mut u32,
    ) -> usize {
        let vid = *next_id;
        *next_id += 1;
        verts.insert(vid, Vertex { labels: Vec::new(), parent, slots: Vec::new() });
        for (j, ch) in node.children().iter().enumerate() {
            if j > 0 {
                verts.get_mut(&vid).unwrap().labels.push(*leaf_count);
            }
            if ch.is_leaf() {
                *leaf_count += 1;
                verts.get_mut(&vid).unwrap().slots.push(None);
            } else {
                let child_id = *next_id;
                verts.get_mut(&vid).unwrap().slots.push(Some(child_id));
                visit(ch, Some(vid), verts, next_id, leaf_count);
            }
        }
        vid
    }
    if t.is_leaf() {
        return verts;
    }
    visit(t, None, &mut verts, &mut next_id, &mut leaf_count);
    verts
}

#[derive(Clone)]
struct BareVertex {
    labels: std::collections::BTreeSet<u32>,
    parent: Option<usize>,
}

/// Reconstruct the tree from vertex labels and parent pointers alone: each
/// child hangs in the unique gap of its parent's labels that spans the
/// child's subtree labels.
fn rebuild(verts: &BTreeMap<usize, BareVertex>) -> PlanarTree {
    let mut children: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut root = None;
    for (&vid, v) in verts {
        match v.parent {
            None => root = Some(vid),
            Some(p) => children.entry(p).or_default().push(vid),
        }
    }
    let root = root.expect("exactly one root");
    let mut sub_labels: BTreeMap<usize, std::collections::BTreeSet<u32>> = BTreeMap::new();
    fn collect(
        vid: usize,
        verts: &BTreeMap<usize, BareVertex>,
        children: &BTreeMap<usize, Vec<usize>>,
        sub: &mut BTreeMap<usize, std::collections::BTreeSet<u32>>,
    ) -> std::collections::BTreeSet<u32> {
        let mut acc = verts[&vid].labels.clone();
        for &w in children.get(&vid).map(|v| v.as_slice()).unwrap_or(&[]) {
            acc.extend(collect(w, verts, children, sub));
        }
        sub.insert(vid, acc.clone());
        acc
    }
    collect(root, verts, &children, &mut sub_labels);
    fn build(
        vid: usize,
        verts: &BTreeMap<usize, BareVertex>,
        children: &BTreeMap<usize, Vec<usize>>,
        sub: &BTreeMap<usize, std::collections::BTreeSet<u32>>,
    ) -> PlanarTree {
        let labs: Vec<u32> = verts[&vid].labels.iter().copied().collect();
        let j = labs.len();
        let mut bounds: Vec<i64> = vec![i64::MIN];
        bounds.extend(labs.iter().map(|&l| l as i64));
        bounds.push(i64::MAX);
        let mut slots: Vec<Option<usize>> = vec![None; j + 1];
        for &w in children.get(&vid).map(|v| v.as_slice()).unwrap_or(&[]) {
            let wmin = *sub[&w].iter().next().expect("nonempty subtree labels") as i64;
            let s = (0..=j)
                .find(|&s| bounds[s] < wmin && wmin < bounds[s + 1])
                .expect("label gap exists");
            assert!(slots[s].is_none(), "slot clash while rebuilding");
            assert!(
                sub[&w].iter().all(|&l| bounds[s] < l as i64 && (l as i64) < bounds[s + 1]),
                "subtree labels must fit one gap"
            );
            slots[s] = Some(w);
        }
        PlanarTree::raw(
            slots
                .into_iter()
                .map(|w| match w {
                    None => Leaf,
                    Some(w) => build(w, verts, children, sub),
                })
                .collect(),
        )
    }
    build(root, verts, &children, &sub_labels)
}

/// One step of an interleaving: keep an element of either chain, or merge an
/// adjacent pair (first chain's vertex absorbs the second's).
enum QsStep {
    A(usize),
    B(usize),
    Merge(usize, usize),
}

fn quasi_shuffles(a: &[usize], b: &[usize]) -> Vec<Vec<QsStep>> {
    fn go(a: &[usize], b: &[usize], i: usize, j: usize) -> Vec<Vec<QsStep>> {
        if i == a.len() && j == b.len() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        if i < a.len() {
            for mut rest in go(a, b, i + 1, j) {
                rest.insert(0, QsStep::A(a[i]));
                out.push(rest);
            }
        }
        if j < b.len() {
            for mut rest in go(a, b, i, j + 1) {
                rest.insert(0, QsStep::B(b[j]));
                out.push(rest);
            }
        }
        if i < a.len() && j < b.len() {
            for mut rest in go(a, b, i + 1, j + 1) {
                rest.insert(0, QsStep::Merge(a[i], b[j]));
                out.push(rest);
            }
        }
        out
    }
    go(a, b, 0, 0)
}

/// Partial composition `x ∘_i y`: insert `y` into the `i`-th sector of `x`
/// and sum over all ways of quasi-shuffling the two wall chains of the sector
/// with the two outer spines of `y` (adjacent pairs may fuse). `y` must not
/// be a leaf and `1 ≤ i ≤ degree(x)`.
pub fn sector_insert(
    x: &PlanarTree,
    i: usize,
    y: &PlanarTree,
) -> Result<LinComb<PlanarTree>, AssociahedronError> {
    if x.is_leaf() || y.is_leaf() || i == 0 || i > x.degree() {
        return Err(AssociahedronError::BadSector { sector: i, max: x.degree() });
    }
    let xv = decompose(x);
    let yv = decompose(y);
    let n = y.degree() as u32;
    const OFF: usize = 10_000;
    let i_lab = i as u32;
    let apex = *xv
        .iter()
        .find(|(_, d)| d.labels.contains(&i_lab))
        .expect("every sector label occurs")
        .0;
    let s = xv[&apex].labels.iter().position(|&l| l == i_lab).expect("label present");
    // wall chains of x around sector i, listed bottom -> top
    let chain = |start: Option<usize>, pick: fn(&Vertex) -> Option<usize>| -> Vec<usize> {
        let mut out = Vec::new();
        let mut u = start;
        while let Some(v) = u {
            out.push(v);
            u = pick(&xv[&v]);
        }
        out.reverse();
        out
    };
    let l_chain = chain(xv[&apex].slots[s], |v| *v.slots.last().unwrap());
    let r_chain = chain(xv[&apex].slots[s + 1], |v| *v.slots.first().unwrap());
    // outer spines of y (root excluded), listed bottom -> top, ids offset
    let yroot = *yv.iter().find(|(_, d)| d.parent.is_none()).expect("y has a root").0;
    let spine = |first: bool| -> Vec<usize> {
        let mut out = Vec::new();
        let mut u = if first { *yv[&yroot].slots.first().unwrap() } else { *yv[&yroot].slots.last().unwrap() };
        while let Some(v) = u {
            out.push(v + OFF);
            u = if first { *yv[&v].slots.first().unwrap() } else { *yv[&v].slots.last().unwrap() };
        }
        out.reverse();
        out
    };
    let lam = spine(true);
    let rho = spine(false);
    // relabeled base vertex set: x labels spread apart, y labels shifted in
    let xlab = |l: u32| if l < i_lab { l } else { l + n - 1 };
    let mut base: BTreeMap<usize, BareVertex> = BTreeMap::new();
    for (&vid, d) in &xv {
        let labels = d
            .labels
            .iter()
            .filter(|&&l| !(vid == apex && l == i_lab))
            .map(|&l| xlab(l))
            .collect();
        base.insert(vid, BareVertex { labels, parent: d.parent });
    }
    for (&vid, d) in &yv {
        if vid == yroot {
            continue;
        }
        let parent = match d.parent {
            Some(p) if p == yroot => Some(apex),
            Some(p) => Some(p + OFF),
            None => unreachable!("non-root vertices have parents"),
        };
        base.insert(
            vid + OFF,
            BareVertex { labels: d.labels.iter().map(|&l| l + i_lab - 1).collect(), parent },
        );
    }
    let apex_extra: Vec<u32> = yv[&yroot].labels.iter().map(|&l| l + i_lab - 1).collect();
    base.get_mut(&apex).unwrap().labels.extend(apex_extra);

    let mut out = LinComb::zero();
    for fl in quasi_shuffles(&l_chain, &lam) {
        for fr in quasi_shuffles(&r_chain, &rho) {
            let mut verts = base.clone();
            for seq in [&fl, &fr] {
                let mut reps = Vec::with_capacity(seq.len());
                for step in seq.iter() {
                    match *step {
                        QsStep::A(v) | QsStep::B(v) => reps.push(v),
                        QsStep::Merge(tgt, src) => {
                            let src_labels = verts[&src].labels.clone();
                            verts.get_mut(&tgt).unwrap().labels.extend(src_labels);
                            let rehang: Vec<usize> = verts
                                .iter()
                                .filter(|(_, d)| d.parent == Some(src))
                                .map(|(&v, _)| v)
                                .collect();
                            for v in rehang {
                                verts.get_mut(&v).unwrap().parent = Some(tgt);
                            }
                            verts.remove(&src);
                            reps.push(tgt);
                        }
                    }
                }
                for k in 0..reps.len() {
                    let parent = if k + 1 < reps.len() { reps[k + 1] } else { apex };
                    verts.get_mut(&reps[k]).unwrap().parent = Some(parent);
                }
            }
            out.add_term(rebuild(&verts), coeff_int(1));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> PlanarTree {
        PlanarTree::y()
    }
    fn r2() -> PlanarTree {
        generator_tree(TriGenerator::Prec)
    }
    fn l2() -> PlanarTree {
        generator_tree(TriGenerator::Succ)
    }
    fn c3() -> PlanarTree {
        generator_tree(TriGenerator::Dot)
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..5).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 11, 45]);
        let bin: Vec<usize> = (0..5).map(|n| binary_trees(n).len()).collect();
        assert_eq!(bin, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn text_and_validation() {
        assert_eq!(Leaf.text(), "|");
        assert_eq!(r2().text(), "(| (| |))");
        assert_eq!(l2().text(), "((| |) |)");
        assert_eq!(c3().text(), "(| | |)");
        assert!(matches!(
            PlanarTree::node(vec![Leaf]),
            Err(AssociahedronError::BadArity { got: 1 })
        ));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(td_compose(TriGenerator::Prec, &y(), &y()), LinComb::single(r2()));
        assert_eq!(td_compose(TriGenerator::Succ, &y(), &y()), LinComb::single(l2()));
        assert_eq!(td_compose(TriGenerator::Dot, &y(), &y()), LinComb::single(c3()));
        assert_eq!(td_star_basis(&y(), &y()).len(), 3);
    }

    #[test]
    fn boundary_convention() {
        // x ≺ | = x, | ≺ y = 0; | ≻ y = y, x ≻ | = 0; dot needs both sides
        assert_eq!(td_compose(TriGenerator::Prec, &y(), &Leaf), LinComb::single(y()));
        assert!(td_compose(TriGenerator::Prec, &Leaf, &y()).is_zero());
        assert_eq!(td_compose(TriGenerator::Succ, &Leaf, &y()), LinComb::single(y()));
        assert!(td_compose(TriGenerator::Succ, &y(), &Leaf).is_zero());
        assert!(td_compose(TriGenerator::Dot, &y(), &Leaf).is_zero());
        // and | is a two-sided unit for the sum
        assert_eq!(td_star_basis(&Leaf, &c3()), LinComb::single(c3()));
        assert_eq!(td_star_basis(&c3(), &Leaf), LinComb::single(c3()));
        assert_eq!(td_star_basis(&Leaf, &Leaf), LinComb::single(Leaf));
    }

    #[test]
    fn coproduct_anchors() {
        let d = tree_coproduct(&r2());
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&Tensor2::new(y(), y())), coeff_int(1));
        for n in 1..5 {
            let c = PlanarTree::corolla(n + 1);
            let dc = tree_coproduct(&c);
            assert_eq!(dc.len(), 2, "corollas are primitive");
        }
        let b = tree_bar_coproduct(&r2());
        assert_eq!(b.len(), 3);
        assert_eq!(b.coeff(&Tensor2::new(y(), y())), coeff_int(1));
    }

    #[test]
    fn backslash_examples() {
        assert_eq!(backslash(&y(), &y()), r2());
        assert_eq!(backslash(&Leaf, &c3()), c3());
        assert_eq!(backslash(&c3(), &Leaf), c3());
        // transpose relation against the spine-cut coproduct, low degrees
        for n in 0..4 {
            for t in trees(n) {
                let mut expect = LinComb::zero();
                for p in 0..=n {
                    for a in trees(p) {
                        for b in trees(n - p) {
                            if backslash(&a, &b) == t {
                                expect.add_term(Tensor2::new(a.clone(), b.clone()), coeff_int(1));
                            }
                        }
                    }
                }
                assert_eq!(tree_bar_coproduct(&t), expect, "at {}", t.text());
            }
        }
    }

    #[test]
    fn dendriform_examples() {
        let got = dend_compose(TriGenerator::Prec, &y(), &y()).unwrap();
        assert_eq!(got, LinComb::single(r2()));
        assert!(matches!(
            dend_compose(TriGenerator::Dot, &y(), &y()),
            Err(AssociahedronError::BadGenerator { generator: "dot" })
        ));
        assert!(matches!(
            dend_compose(TriGenerator::Prec, &c3(), &y()),
            Err(AssociahedronError::NotBinary)
        ));
        let d = dend_coproduct(&r2()).unwrap();
        assert_eq!(d.len(), 3);
        assert!(dend_coproduct(&c3()).is_err());
        assert_eq!(dend_projection(&c3()), LinComb::zero());
        assert_eq!(dend_projection(&r2()), LinComb::single(r2()));
    }

    #[test]
    fn phi_anchors() {
        let comp = |blocks: &[&[u8]]| {
            SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
        };
        assert_eq!(phi(&SetComposition::empty()), Leaf);
        assert_eq!(phi(&comp(&[&[1]])), y());
        assert_eq!(phi(&comp(&[&[1], &[2]])), r2());
        assert_eq!(phi(&comp(&[&[2], &[1]])), l2());
        assert_eq!(phi(&comp(&[&[1, 2]])), c3());
        let big = comp(&[&[3, 4], &[1], &[5, 6], &[2]]);
        assert_eq!(phi(&big).text(), "((| (| |)) | (| | |))");
        assert_eq!(theta(&comp(&[&[1], &[2]])), phi(&comp(&[&[2], &[1]])));
    }

    #[test]
    fn psi_anchors() {
        let got = psi0(&r2()).unwrap();
        assert_eq!(got.to_string(), "1*[1,2]");
        let got = psi0(&l2()).unwrap();
        assert_eq!(got.to_string(), "1*[2,1]");
        assert!(psi0(&c3()).is_err());
        // fibers partition the bases
        for n in 0..4 {
            let total: usize = trees(n).iter().map(|t| psi(t).len()).sum();
            assert_eq!(total, set_comps(n).len());
            let total0: usize =
                binary_trees(n).iter().map(|t| psi0(t).unwrap().len()).sum();
            assert_eq!(total0, perms(n).len());
        }
    }

    #[test]
    fn sector_insert_anchors() {
        let got = sector_insert(&r2(), 1, &r2()).unwrap();
        let mut want = LinComb::zero();
        want.add_term(PlanarTree::raw(vec![Leaf, r2()]), coeff_int(1));
        want.add_term(PlanarTree::raw(vec![Leaf, c3()]), coeff_int(1));
        want.add_term(PlanarTree::raw(vec![Leaf, l2()]), coeff_int(1));
        assert_eq!(got, want);
        let got = sector_insert(&l2(), 2, &r2()).unwrap();
        assert_eq!(got, LinComb::single(PlanarTree::raw(vec![y(), y()])));
    }

    #[test]
    fn sector_insert_units_and_errors() {
        for n in 1..4 {
            for t in trees(n) {
                for i in 1..=n {
                    assert_eq!(sector_insert(&t, i, &y()).unwrap(), LinComb::single(t.clone()));
                }
                assert_eq!(sector_insert(&y(), 1, &t).unwrap(), LinComb::single(t.clone()));
            }
        }
        assert!(matches!(
            sector_insert(&y(), 2, &y()),
            Err(AssociahedronError::BadSector { sector: 2, max: 1 })
        ));
        assert!(sector_insert(&Leaf, 1, &y()).is_err());
        assert!(sector_insert(&y(), 1, &Leaf).is_err());
    }

    #[test]
    fn decompose_rebuild_roundtrip() {
        for n in 1..5 {
            for t in trees(n) {
                let d = decompose(&t);
                let bare: BTreeMap<usize, BareVertex> = d
                    .iter()
                    .map(|(&vid, v)| {
                        (
                            vid,
                            BareVertex {
                                labels: v.labels.iter().copied().collect(),
                                parent: v.parent,
                            },
                        )
                    })
                    .collect();
                assert_eq!(rebuild(&bare), t, "at {}", t.text());
            }
        }
    }
}
