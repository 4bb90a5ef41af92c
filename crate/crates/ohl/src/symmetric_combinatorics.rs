//! Permutations, standardization, shuffles, coset factorization, the
//! associative-operad composition, the Malvenuto–Reutenauer product and
//! coproducts, and the word (tensor-algebra) operations.
//!
//! Conventions (validated by the worked anchors in the tests):
//!
//! * permutations are one-line words `(σ_1,…,σ_n)`; the empty word encodes
//!   the degree-0 unit;
//! * group multiplication is `(w·σ)(i) = w(σ(i))`;
//! * a `(p,q)`-shuffle is an ordered pair of disjoint sets covering `[p+q]`
//!   and converts to the permutation `α` whose inverse word lists the first
//!   block in increasing order, then the second —
//!   `({2,5},{1,3,4}) ↦ (3,1,4,5,2)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact_linear::{bilinear_extend, coeff_int, Basis, Coeff, LinComb, Tagged2, Tensor2};

/// Errors raised by the permutation/word layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("DuplicateEntry: value {value} appears more than once")]
    DuplicateEntry { value: i64 },
    #[error("OutOfRange: value {value} outside the valid range [1,{max}]")]
    OutOfRange { value: i64, max: usize },
    #[error("ArityMismatch: expected {expected} inner factors, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A permutation of `[n]` in one-line notation; `n = 0` is the empty
/// permutation `1_0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    /// Validated constructor: every value of `1..=n` must appear exactly once.
    pub fn new(word: Vec<u8>) -> Result<Perm, SymmetricError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(SymmetricError::OutOfRange { value: v as i64, max: n });
            }
            if seen[v as usize] {
                return Err(SymmetricError::DuplicateEntry { value: v as i64 });
            }
            seen[v as usize] = true;
        }
        Ok(Perm(word))
    }

    /// The empty permutation `1_0`.
    pub fn empty() -> Perm {
        Perm(Vec::new())
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n as u8).collect())
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    /// Number of letters (the degree of the basis element).
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Group multiplication `(w·σ)(i) = w(σ(i))`.
    pub fn mul(&self, sigma: &Perm) -> Perm {
        assert_eq!(self.degree(), sigma.degree(), "group multiplication needs equal degrees");
        Perm(sigma.0.iter().map(|&i| self.0[i as usize - 1]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize - 1] = (i + 1) as u8;
        }
        Perm(out)
    }

    /// Longest element `(n, n−1, …, 1)`.
    pub fn longest(n: usize) -> Perm {
        Perm((1..=n as u8).rev().collect())
    }
}

impl Basis for Perm {
    fn text(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

/// All of `S_n` in lexicographic one-line order.
pub fn perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![Perm::empty()];
    }
    (1..=n as u8).permutations(n).map(Perm).collect()
}

/// Standardization: the unique permutation ordered like the input sequence;
/// `st(2,13,9,4) = (1,4,3,2)`.
pub fn standardize(seq: &[i64]) -> Result<Perm, SymmetricError> {
    let mut sorted: Vec<(i64, usize)> = seq.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(SymmetricError::DuplicateEntry { value: w[0].0 });
        }
    }
    let mut word = vec![0u8; seq.len()];
    for (rank, &(_, pos)) in sorted.iter().enumerate() {
        word[pos] = (rank + 1) as u8;
    }
    Ok(Perm(word))
}

/// Restriction `σ|_A = st(σ(a_1),…,σ(a_p))` for a set `A = {a_1<…<a_p}` of
/// positions.
pub fn restrict(sigma: &Perm, a: &BTreeSet<u8>) -> Result<Perm, SymmetricError> {
    let n = sigma.degree();
    let mut vals = Vec::with_capacity(a.len());
    for &pos in a {
        if pos == 0 || pos as usize > n {
            return Err(SymmetricError::OutOfRange { value: pos as i64, max: n });
        }
        vals.push(sigma.0[pos as usize - 1] as i64);
    }
    standardize(&vals)
}

/// Direct sum `σ×τ = (σ_1,…,σ_n,τ_1+n,…,τ_m+n)`.
pub fn direct_sum(sigma: &Perm, tau: &Perm) -> Perm {
    let n = sigma.degree() as u8;
    let mut word = sigma.0.clone();
    word.extend(tau.0.iter().map(|&v| v + n));
    Perm(word)
}

// ---------------------------------------------------------------------------
// Shuffles
// ---------------------------------------------------------------------------

/// A `(p_1,…,p_r)`-shuffle as an ordered tuple of disjoint sets covering
/// `[p_1+…+p_r]`; blocks stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Shuffle {
    blocks: Vec<Vec<u8>>,
}

impl Shuffle {
    /// Validated constructor: blocks must be disjoint and cover an initial
    /// interval `[n]`.
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Shuffle, SymmetricError> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &v in b {
                if v == 0 || v as usize > n {
                    return Err(SymmetricError::OutOfRange { value: v as i64, max: n });
                }
                if seen[v as usize] {
                    return Err(SymmetricError::DuplicateEntry { value: v as i64 });
                }
                seen[v as usize] = true;
            }
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(Shuffle { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
}

impl Basis for Shuffle {
    fn text(&self) -> String {
        let inner: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let vals: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", vals.join(","))
            })
            .collect();
        format!("({})", inner.join(","))
    }
}

/// All `(p_1,…,p_r)`-shuffles; count is the multinomial coefficient.
/// Deterministic order: blocks chosen as lexicographic combinations.
pub fn shuffles(parts: &[usize]) -> Vec<Shuffle> {
    let n: usize = parts.iter().sum();
    let ground: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    fn go(rest: &[u8], parts: &[usize], acc: &mut Vec<Vec<u8>>, out: &mut Vec<Shuffle>) {
        match parts.split_first() {
            None => out.push(Shuffle { blocks: acc.clone() }),
            Some((&p, tail)) => {
                for comb in rest.iter().copied().combinations(p) {
                    let remaining: Vec<u8> =
                        rest.iter().copied().filter(|v| !comb.contains(v)).collect();
                    acc.push(comb);
                    go(&remaining, tail, acc, out);
                    acc.pop();
                }
            }
        }
    }
    go(&ground, parts, &mut Vec::new(), &mut out);
    out
}

/// The permutation `α` of a shuffle: `α⁻¹` lists block 1 in increasing order,
/// then block 2, etc.; `({2,5},{1,3,4}) ↦ (3,1,4,5,2)`.
pub fn shuffle_to_perm(s: &Shuffle) -> Perm {
    let mut inv_word: Vec<u8> = Vec::with_capacity(s.degree());
    for b in &s.blocks {
        inv_word.extend(b.iter().copied());
    }
    Perm(inv_word).inv()
}

/// The unique factorization `σ = (σ_1×σ_2)·α` with `α` the `(p, n−p)`-shuffle
/// `(σ⁻¹([p]), σ⁻¹(p+[q]))`.
pub fn coset_factorize(sigma: &Perm, p: usize) -> Result<(Perm, Perm, Shuffle), SymmetricError> {
    let n = sigma.degree();
    if p > n {
        return Err(SymmetricError::OutOfRange { value: p as i64, max: n });
    }
    let low: BTreeSet<u8> = (1..=n as u8).filter(|&i| sigma.0[i as usize - 1] as usize <= p).collect();
    let high: BTreeSet<u8> = (1..=n as u8).filter(|&i| sigma.0[i as usize - 1] as usize > p).collect();
    let s1 = restrict(sigma, &low)?;
    let s2 = restrict(sigma, &high)?;
    let alpha = Shuffle::new(vec![low.into_iter().collect(), high.into_iter().collect()])?;
    Ok((s1, s2, alpha))
}

// ---------------------------------------------------------------------------
// Operad compositions
// ---------------------------------------------------------------------------

/// Associative-operad composition by block substitution: the `i`-th position
/// block of the result carries `τ_i` shifted by the total size of the blocks
/// whose σ-values are smaller than `σ_i`.
pub fn as_compose(sigma: &Perm, taus: &[Perm]) -> Result<Perm, SymmetricError> {
    let n = sigma.degree();
    if taus.len() != n {
        return Err(SymmetricError::ArityMismatch { expected: n, got: taus.len() });
    }
    let sizes: Vec<usize> = taus.iter().map(|t| t.degree()).collect();
    let mut word = Vec::with_capacity(sizes.iter().sum());
    for i in 0..n {
        let shift: usize = (0..n)
            .filter(|&k| sigma.0[k] < sigma.0[i])
            .map(|k| sizes[k])
            .sum();
        word.extend(taus[i].0.iter().map(|&v| v + shift as u8));
    }
    Ok(Perm(word))
}

/// Binomial (hat) product of the one-dimensional commutative operad pieces:
/// `X^n · X^m = C(n+m,n) · X^{n+m}`.
pub fn com_hat_product(n: usize, m: usize) -> (Coeff, usize) {
    let c = num_integer::binomial(BigInt::from(n + m), BigInt::from(n));
    (Coeff::from_integer(c), n + m)
}

/// Trivial-action variant: coefficient 1.
pub fn com_trivial_product(n: usize, m: usize) -> (Coeff, usize) {
    (Coeff::one(), n + m)
}

// ---------------------------------------------------------------------------
// Malvenuto–Reutenauer structures
// ---------------------------------------------------------------------------

/// Basis-level shuffle-sum product `σ ∗̂ τ = Σ_{ξ∈Sh_{p,q}} (σ×τ)·ξ`.
pub fn mr_product_basis(sigma: &Perm, tau: &Perm) -> LinComb<Perm> {
    let ds = direct_sum(sigma, tau);
    let mut out = LinComb::zero();
    for xi in shuffles(&[sigma.degree(), tau.degree()]) {
        out.add_term(ds.mul(&shuffle_to_perm(&xi)), coeff_int(1));
    }
    out
}

/// Bilinear extension of [`mr_product_basis`].
pub fn mr_product(a: &LinComb<Perm>, b: &LinComb<Perm>) -> LinComb<Perm> {
    bilinear_extend(mr_product_basis, a, b)
}

/// Bilinear concatenation (direct-sum) product `σ×τ`.
pub fn concat_product(a: &LinComb<Perm>, b: &LinComb<Perm>) -> LinComb<Perm> {
    bilinear_extend(|s: &Perm, t: &Perm| LinComb::single(direct_sum(s, t)), a, b)
}

/// Interval-split coproduct
/// `barΔ(σ) = Σ_i st(σ_1,…,σ_i) ⊗ st(σ_{i+1},…,σ_n)`.
pub fn mr_bar_coproduct(sigma: &Perm) -> LinComb<Tensor2<Perm, Perm>> {
    let w: Vec<i64> = sigma.0.iter().map(|&v| v as i64).collect();
    let mut out = LinComb::zero();
    for i in 0..=w.len() {
        let l = standardize(&w[..i]).expect("permutation letters are distinct");
        let r = standardize(&w[i..]).expect("permutation letters are distinct");
        out.add_term(Tensor2::new(l, r), coeff_int(1));
    }
    out
}

/// Subset-split coproduct `hatΔ(σ) = Σ_{S⊔T=[n]} σ|_S ⊗ σ|_T` (2^n terms,
/// positions split, restrictions standardized).
pub fn mr_hat_coproduct(sigma: &Perm) -> LinComb<Tensor2<Perm, Perm>> {
    sigma_subset_splits(sigma).bind(|t| LinComb::single(t.strip()))
}

/// The tagged (twisted) coproduct behind both MR coproducts:
/// `Δ(σ) = Σ_{S⊔T=[n]} σ|_S ⊗ σ|_T ⊗ (S,T)` over position sets.
/// Filtering to interval tags gives [`mr_bar_coproduct`]; stripping tags
/// gives [`mr_hat_coproduct`].
pub fn mr_tagged_coproduct(sigma: &Perm) -> LinComb<Tagged2<Perm>> {
    sigma_subset_splits(sigma)
}

fn sigma_subset_splits(sigma: &Perm) -> LinComb<Tagged2<Perm>> {
    let n = sigma.degree();
    let mut out = LinComb::zero();
    for mask in 0u32..(1 << n) {
        let mut s = BTreeSet::new();
        let mut t = BTreeSet::new();
        for i in 1..=n as u8 {
            if mask & (1 << (i - 1)) != 0 {
                s.insert(i);
            } else {
                t.insert(i);
            }
        }
        let l = restrict(sigma, &s).expect("subset of positions");
        let r = restrict(sigma, &t).expect("subset of positions");
        out.add_term(
            Tagged2::new(l, r, s.into_iter().collect(), t.into_iter().collect()),
            coeff_int(1),
        );
    }
    out
}

/// True iff no proper prefix of `σ` is mapped onto itself
/// (`σ([i]) = [i]` for some `0 < i < n`).
pub fn is_connected(sigma: &Perm) -> bool {
    let n = sigma.degree();
    assert!(n >= 1, "connectivity is defined for degree >= 1");
    let mut max = 0u8;
    for i in 0..n - 1 {
        max = max.max(sigma.0[i]);
        if max as usize == i + 1 {
            return false;
        }
    }
    true
}

/// `α(σ) = (σ_n,…,σ_1)⁻¹` — reverse the word, then invert.
pub fn alpha(sigma: &Perm) -> Perm {
    let mut rev = sigma.0.clone();
    rev.reverse();
    Perm(rev).inv()
}

/// Right action of `σ` on a tagged tensor:
/// `(x⊗y⊗(S,T))·σ = x·σ|_{σ⁻¹S} ⊗ y·σ|_{σ⁻¹T} ⊗ (σ⁻¹S, σ⁻¹T)`,
/// with the permutation factors acted on by right group multiplication.
pub fn shuffle_tensor_action(t: &Tagged2<Perm>, sigma: &Perm) -> Tagged2<Perm> {
    assert_eq!(
        t.s.len() + t.t.len(),
        sigma.degree(),
        "tag must partition the degree of the acting permutation"
    );
    let inv = sigma.inv();
    let pre = |set: &[u8]| -> BTreeSet<u8> { set.iter().map(|&v| inv.0[v as usize - 1]).collect() };
    let s_pre = pre(&t.s);
    let t_pre = pre(&t.t);
    let left = t.left.mul(&restrict(sigma, &s_pre).expect("preimage positions in range"));
    let right = t.right.mul(&restrict(sigma, &t_pre).expect("preimage positions in range"));
    Tagged2::new(left, right, s_pre.into_iter().collect(), t_pre.into_iter().collect())
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

/// A word over a fixed finite alphabet of lowercase letters; the empty word
/// prints as `ε`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: &str) -> Word {
        Word(letters.bytes().collect())
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }
}

impl Basis for Word {
    fn text(&self) -> String {
        if self.0.is_empty() {
            "ε".to_string()
        } else {
            String::from_utf8(self.0.clone()).expect("alphabet letters are ASCII")
        }
    }
}

/// Shuffle product with multiplicity: `shuffle(a,a) = 2·aa`.
pub fn word_shuffle(a: &Word, b: &Word) -> LinComb<Word> {
    fn go(x: &[u8], y: &[u8], acc: &mut Vec<u8>, out: &mut LinComb<Word>) {
        if x.is_empty() && y.is_empty() {
            out.add_term(Word(acc.clone()), coeff_int(1));
            return;
        }
        if let Some((&h, t)) = x.split_first() {
            acc.push(h);
            go(t, y, acc, out);
            acc.pop();
        }
        if let Some((&h, t)) = y.split_first() {
            acc.push(h);
            go(x, t, acc, out);
            acc.pop();
        }
    }
    let mut out = LinComb::zero();
    go(&a.0, &b.0, &mut Vec::new(), &mut out);
    out
}

/// Deconcatenation coproduct: all interval splits.
pub fn word_deconcat(w: &Word) -> LinComb<Tensor2<Word, Word>> {
    let mut out = LinComb::zero();
    for i in 0..=w.0.len() {
        out.add_term(
            Tensor2::new(Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())),
            coeff_int(1),
        );
    }
    out
}

/// Concatenation product.
pub fn word_concat(a: &Word, b: &Word) -> Word {
    let mut v = a.0.clone();
    v.extend_from_slice(&b.0);
    Word(v)
}

/// Unshuffle coproduct: all subset splits (subsequence ⊗ complement).
pub fn word_unshuffle(w: &Word) -> LinComb<Tensor2<Word, Word>> {
    let n = w.0.len();
    let mut out = LinComb::zero();
    for mask in 0u32..(1 << n) {
        let mut l = Vec::new();
        let mut r = Vec::new();
        for (i, &c) in w.0.iter().enumerate() {
            if mask & (1 << i) != 0 {
                l.push(c);
            } else {
                r.push(c);
            }
        }
        out.add_term(Tensor2::new(Word(l), Word(r)), coeff_int(1));
    }
    out
}

/// All words of a given length over the given alphabet (tests and duals).
pub fn words_over(alphabet: &[u8], len: usize) -> Vec<Word> {
    if len == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    for shorter in words_over(alphabet, len - 1) {
        for &c in alphabet {
            let mut v = shorter.0.clone();
            v.push(c);
            out.push(Word(v));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(word: &[u8]) -> Perm {
        Perm::new(word.to_vec()).unwrap()
    }

    #[test]
    fn standardize_anchor() {
        assert_eq!(standardize(&[2, 13, 9, 4]).unwrap(), p(&[1, 4, 3, 2]));
        assert_eq!(standardize(&[1, 2, 3]).unwrap(), p(&[1, 2, 3]));
        assert_eq!(standardize(&[]).unwrap(), Perm::empty());
        assert_eq!(
            standardize(&[3, 3]).unwrap_err(),
            SymmetricError::DuplicateEntry { value: 3 }
        );
    }

    #[test]
    fn restrict_anchor() {
        let sigma = p(&[2, 6, 1, 3, 5, 4]);
        let a: BTreeSet<u8> = [1, 2, 4].into_iter().collect();
        assert_eq!(restrict(&sigma, &a).unwrap(), p(&[1, 3, 2]));
        let full: BTreeSet<u8> = (1..=6).collect();
        assert_eq!(restrict(&sigma, &full).unwrap(), sigma);
        assert_eq!(restrict(&sigma, &BTreeSet::new()).unwrap(), Perm::empty());
        let bad: BTreeSet<u8> = [7].into_iter().collect();
        assert!(matches!(
            restrict(&sigma, &bad),
            Err(SymmetricError::OutOfRange { value: 7, max: 6 })
        ));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&p(&[1]), &p(&[1])), p(&[1, 2]));
        assert_eq!(direct_sum(&p(&[2, 1]), &p(&[1, 2])), p(&[2, 1, 3, 4]));
        assert_eq!(direct_sum(&p(&[3, 1, 2]), &Perm::empty()), p(&[3, 1, 2]));
    }

    #[test]
    fn shuffle_to_perm_anchor() {
        let s = Shuffle::new(vec![vec![2, 5], vec![1, 3, 4]]).unwrap();
        assert_eq!(shuffle_to_perm(&s), p(&[3, 1, 4, 5, 2]));
        let trivial = Shuffle::new(vec![vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(shuffle_to_perm(&trivial), Perm::identity(5));
        let swap = Shuffle::new(vec![vec![2], vec![1]]).unwrap();
        assert_eq!(shuffle_to_perm(&swap), p(&[2, 1]));
    }

    #[test]
    fn shuffles_counts() {
        assert_eq!(shuffles(&[1, 1]).len(), 2);
        assert_eq!(shuffles(&[2, 3]).len(), 10);
        assert_eq!(shuffles(&[0, 4]).len(), 1);
        assert_eq!(shuffles(&[2, 2, 2]).len(), 90);
        let two: BTreeSet<String> = shuffles(&[1, 1]).iter().map(|s| s.text()).collect();
        assert_eq!(
            two,
            ["({1},{2})".to_string(), "({2},{1})".to_string()].into_iter().collect()
        );
    }

    #[test]
    fn coset_factorize_anchor() {
        let sigma = p(&[3, 1, 4, 5, 2]);
        let (s1, s2, a) = coset_factorize(&sigma, 2).unwrap();
        assert_eq!(s1, p(&[1, 2]));
        assert_eq!(s2, p(&[1, 2, 3]));
        assert_eq!(a.text(), "({2,5},{1,3,4})");
        assert_eq!(direct_sum(&s1, &s2).mul(&shuffle_to_perm(&a)), sigma);

        let (i1, i2, tr) = coset_factorize(&Perm::identity(4), 2).unwrap();
        assert_eq!((i1, i2), (Perm::identity(2), Perm::identity(2)));
        assert_eq!(tr.text(), "({1,2},{3,4})");

        let (a1, a2, sw) = coset_factorize(&p(&[2, 1]), 1).unwrap();
        assert_eq!((a1, a2), (p(&[1]), p(&[1])));
        assert_eq!(sw.text(), "({2},{1})");
    }

    #[test]
    fn as_compose_worked_example() {
        let sigma = p(&[3, 2, 1, 4]);
        let taus = vec![p(&[2, 1]), p(&[1, 3, 2]), p(&[1]), p(&[2, 3, 1])];
        assert_eq!(as_compose(&sigma, &taus).unwrap(), p(&[6, 5, 2, 4, 3, 1, 8, 9, 7]));
    }

    #[test]
    fn as_compose_unit_laws() {
        let sigma = p(&[2, 3, 1]);
        let ids = vec![Perm::identity(1), Perm::identity(1), Perm::identity(1)];
        assert_eq!(as_compose(&sigma, &ids).unwrap(), sigma);
        let taus = vec![p(&[2, 1]), p(&[1, 3, 2])];
        assert_eq!(
            as_compose(&Perm::identity(2), &taus).unwrap(),
            direct_sum(&taus[0], &taus[1])
        );
        assert!(matches!(
            as_compose(&sigma, &taus),
            Err(SymmetricError::ArityMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn com_hat_examples() {
        let (c, d) = com_hat_product(2, 3);
        assert_eq!(c.to_integer().to_i64().unwrap(), 10);
        assert_eq!(d, 5);
        let (c0, d0) = com_hat_product(0, 7);
        assert!(c0.is_one());
        assert_eq!(d0, 7);
        let (ct, dt) = com_trivial_product(2, 3);
        assert!(ct.is_one());
        assert_eq!(dt, 5);
    }

    #[test]
    fn mr_product_anchors() {
        let one = LinComb::single(p(&[1]));
        let got = mr_product(&one, &one);
        let want = LinComb::single(p(&[1, 2])).add(&LinComb::single(p(&[2, 1])));
        assert_eq!(got, want);

        let unit = LinComb::single(Perm::empty());
        let s = LinComb::single(p(&[2, 1, 3]));
        assert_eq!(mr_product(&unit, &s), s);
        assert_eq!(mr_product(&s, &unit), s);

        let got = mr_product(&one, &LinComb::single(p(&[2, 1])));
        assert_eq!(got.to_string(), "1*[1,3,2] + 1*[3,1,2] + 1*[3,2,1]");
    }

    #[test]
    fn bar_coproduct_anchor() {
        let got = mr_bar_coproduct(&p(&[3, 1, 2]));
        assert_eq!(
            got.to_string(),
            "1*[1] (x) [1,2] + 1*[2,1] (x) [1] + 1*[3,1,2] (x) [] + 1*[] (x) [3,1,2]"
        );
        let prim = mr_bar_coproduct(&p(&[1]));
        assert_eq!(prim.len(), 2);
        // counit: (ε⊗id) recovers σ
        let mut back = LinComb::zero();
        for (t, c) in got.iter() {
            if t.left.degree() == 0 {
                back.add_term(t.right.clone(), c.clone());
            }
        }
        assert_eq!(back, LinComb::single(p(&[3, 1, 2])));
    }

    #[test]
    fn hat_coproduct_anchor() {
        let got = mr_hat_coproduct(&p(&[2, 1]));
        assert_eq!(got.coeff(&Tensor2::new(p(&[1]), p(&[1]))), coeff_int(2));
        assert_eq!(got.coeff(&Tensor2::new(Perm::empty(), p(&[2, 1]))), coeff_int(1));
        assert_eq!(got.coeff(&Tensor2::new(p(&[2, 1]), Perm::empty())), coeff_int(1));
    }

    #[test]
    fn is_connected_examples() {
        assert!(!is_connected(&p(&[1, 2])));
        assert!(is_connected(&p(&[2, 1])));
        let counts: Vec<usize> = (1..=5)
            .map(|n| perms(n).iter().filter(|s| is_connected(s)).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 71]);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&p(&[1])), p(&[1]));
        assert_eq!(alpha(&p(&[1, 2])), p(&[2, 1]));
    }

    #[test]
    fn word_examples() {
        let ab = Word::new("ab");
        let c = Word::new("c");
        let got = word_shuffle(&ab, &c);
        assert_eq!(got.to_string(), "1*abc + 1*acb + 1*cab");
        let a = Word::new("a");
        assert_eq!(word_shuffle(&a, &a).coeff(&Word::new("aa")), coeff_int(2));
        let dec = word_deconcat(&ab);
        assert_eq!(dec.len(), 3);
        assert_eq!(dec.coeff(&Tensor2::new(Word::new("a"), Word::new("b"))), coeff_int(1));
        assert_eq!(word_concat(&a, &Word::new("b")), ab);
        assert_eq!(word_unshuffle(&ab).coeff_sum(), coeff_int(4));
    }
}
