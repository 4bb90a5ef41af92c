//! Sparse linear combinations over ℚ and the small exact-linear-algebra
//! toolkit the rest of the crate is built on.
//!
//! Ground field: exact rationals ([`Coeff`] = arbitrary-precision rational).
//! A [`LinComb`] stores only nonzero terms; equality is term-wise. The
//! canonical total order on basis objects is lexicographic on their textual
//! encoding, which is what all printing routines use, so output is
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Convenience: an integer coefficient.
pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse a coefficient in the textual form `p` or `p/q`.
pub fn parse_coeff(s: &str) -> Option<Coeff> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }
}

/// Render a coefficient as `p` or `p/q`.
pub fn coeff_text(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Errors raised by this module.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinearError {
    /// The dimension sequence is not that of a free associative algebra.
    #[error("NegativeGenerator: g_{degree} = {value} < 0; dims are not free")]
    NegativeGenerator { degree: usize, value: i64 },
}

/// A basis object: orderable, printable in a canonical textual form.
///
/// The canonical total order used for printing is lexicographic on
/// [`Basis::text`]; the structural `Ord` is only required to be *some* total
/// order so terms can be stored in a map.
pub trait Basis: Clone + Ord + fmt::Debug {
    /// Canonical textual encoding (also the CLI grammar for this object).
    fn text(&self) -> String;
}

/// A sparse linear combination of basis objects with rational coefficients.
///
/// Invariants: no zero coefficient is ever stored; equality is term-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<B: Basis> {
    terms: BTreeMap<B, Coeff>,
}

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> LinComb<B> {
    /// The zero element (empty term map).
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// A single basis element with coefficient 1.
    pub fn single(b: B) -> Self {
        Self::term(b, coeff_int(1))
    }

    /// A single term `c·b` (dropped if `c = 0`).
    pub fn term(b: B, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(b, c);
        }
        LinComb { terms }
    }

    /// Build from an iterator of terms, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (B, Coeff)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in it {
            out.add_term(b, c);
        }
        out
    }

    /// Add a single term in place, removing the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Term-wise sum; canceled terms removed.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    /// Term-wise difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&coeff_int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, v)| (b.clone(), v * c)).collect(),
        }
    }

    /// Linear extension of a basis-level map `B -> LinComb<C>`.
    pub fn bind<C: Basis>(&self, f: impl Fn(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (r, v) in f(b).terms {
                out.add_term(r, v * c);
            }
        }
        out
    }

    /// Coefficient of `b` (zero if absent).
    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coeff)> {
        self.terms.iter()
    }

    /// Terms sorted by the canonical (textual) basis order.
    pub fn sorted_terms(&self) -> Vec<(&B, &Coeff)> {
        let mut v: Vec<(&B, &Coeff)> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| a.text().cmp(&b.text()));
        v
    }

    /// Sum of coefficients (used by counit-style evaluations).
    pub fn coeff_sum(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }
}

impl<B: Basis> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(b, c)| format!("{}*{}", coeff_text(c), b.text()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bilinear extension of a basis-level binary map.
pub fn bilinear_extend<A: Basis, B: Basis, C: Basis>(
    f: impl Fn(&A, &B) -> LinComb<C>,
    a: &LinComb<A>,
    b: &LinComb<B>,
) -> LinComb<C> {
    let mut out = LinComb::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            for (r, v) in f(x, y).terms {
                out.add_term(r, v * cx * cy);
            }
        }
    }
    out
}

/// An untagged tensor-square basis object `left ⊗ right`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tensor2<A: Basis, B: Basis> {
    pub left: A,
    pub right: B,
}

impl<A: Basis, B: Basis> Tensor2<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Tensor2 { left, right }
    }
}

impl<A: Basis, B: Basis> Basis for Tensor2<A, B> {
    fn text(&self) -> String {
        format!("{} (x) {}", self.left.text(), self.right.text())
    }
}

/// A tagged tensor-square basis object `left ⊗ right ⊗ (S,T)`.
///
/// Invariant: `S ⊔ T = [p+q]` where `p`, `q` are the degrees of the two
/// factors; both sets stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tagged2<B: Basis> {
    pub left: B,
    pub right: B,
    pub s: Vec<u8>,
    pub t: Vec<u8>,
}

impl<B: Basis> Tagged2<B> {
    pub fn new(left: B, right: B, mut s: Vec<u8>, mut t: Vec<u8>) -> Self {
        s.sort_unstable();
        t.sort_unstable();
        Tagged2 { left, right, s, t }
    }

    /// True when the left tag is the initial interval `{1..|S|}`.
    pub fn tag_is_interval(&self) -> bool {
        self.s.iter().copied().eq(1..=self.s.len() as u8)
    }

    /// Forget the tag.
    pub fn strip(&self) -> Tensor2<B, B> {
        Tensor2::new(self.left.clone(), self.right.clone())
    }
}

fn set_text(s: &[u8]) -> String {
    let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl<B: Basis> Basis for Tagged2<B> {
    fn text(&self) -> String {
        format!(
            "{} (x) {} @ ({},{})",
            self.left.text(),
            self.right.text(),
            set_text(&self.s),
            set_text(&self.t)
        )
    }
}

/// Tensor product of two linear combinations (tag absent).
pub fn lc_tensor<A: Basis, B: Basis>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<Tensor2<A, B>> {
    bilinear_extend(|x: &A, y: &B| LinComb::single(Tensor2::new(x.clone(), y.clone())), a, b)
}

/// A finite prefix of a graded dimension sequence `f_1..f_N`
/// (the degree-0 coefficient is fixed to 1 and not stored).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    pub dims: Vec<i64>,
}

impl IntSeries {
    pub fn new(dims: Vec<i64>) -> Self {
        IntSeries { dims }
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Generator counts of a free associative algebra with graded dimensions `f`:
/// `g_n = f_n − Σ_{k=1}^{n−1} g_k · f_{n−k}` (from `f = 1/(1−g)`).
///
/// Fails with [`ExactLinearError::NegativeGenerator`] when some `g_n < 0`,
/// which signals that `f` is not the dimension sequence of a free associative
/// algebra.
pub fn free_generator_series(f: &IntSeries) -> Result<IntSeries, ExactLinearError> {
    let n = f.dims.len();
    let mut g: Vec<i64> = Vec::with_capacity(n);
    for i in 0..n {
        // degrees are 1-based: f.dims[i] is f_{i+1}
        let mut gi = f.dims[i];
        for k in 0..i {
            gi -= g[k] * f.dims[i - 1 - k];
        }
        if gi < 0 {
            return Err(ExactLinearError::NegativeGenerator { degree: i + 1, value: gi });
        }
        g.push(gi);
    }
    Ok(IntSeries::new(g))
}

/// Reconstruct `f` from `g` by convolution (`f_n = g_n + Σ g_k f_{n−k}`);
/// inverse of [`free_generator_series`], used by its round-trip property.
pub fn series_from_generators(g: &IntSeries) -> IntSeries {
    let n = g.dims.len();
    let mut f: Vec<i64> = Vec::with_capacity(n);
    for i in 0..n {
        let mut fi = g.dims[i];
        for k in 0..i {
            fi += g.dims[k] * f[i - 1 - k];
        }
        f.push(fi);
    }
    IntSeries::new(f)
}

/// Rank of the matrix whose rows are the given vectors, expressed in the
/// coordinates of `basis`, by exact Gaussian elimination.
pub fn matrix_rank<B: Basis>(rows: &[LinComb<B>], basis: &[B]) -> usize {
    let ncols = basis.len();
    let col_index: BTreeMap<&B, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut mat: Vec<Vec<Coeff>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![Coeff::zero(); ncols];
            for (b, c) in r.iter() {
                let j = *col_index
                    .get(b)
                    .unwrap_or_else(|| panic!("vector term {:?} outside the common basis", b));
                row[j] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].clone();
        for j in col..ncols {
            mat[rank][j] = &mat[rank][j] / &inv;
        }
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for j in col..ncols {
                    mat[r][j] = &mat[r][j] - &factor * &mat[rank][j];
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Dimension of the kernel of the linear map whose rows are the given
/// vectors over the common enumerated `basis`:
/// `|basis| − rank`, by exact Gaussian elimination.
pub fn kernel_dimension<B: Basis>(rows: &[LinComb<B>], basis: &[B]) -> usize {
    basis.len() - matrix_rank(rows, basis)
}

/// A trivial string basis, handy for small tests and reports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sym(pub String);

impl Basis for Sym {
    fn text(&self) -> String {
        self.0.clone()
    }
}

/// True when every term of `a` also appears in `b` (coefficients ignored).
pub fn support_subset<B: Basis>(a: &LinComb<B>, b: &LinComb<B>) -> bool {
    a.iter().all(|(k, _)| !b.coeff(k).is_zero())
}

pub fn abs_coeff(c: &Coeff) -> Coeff {
    c.abs()
}
