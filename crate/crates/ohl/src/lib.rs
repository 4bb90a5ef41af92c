//! Exact computation and exhaustive low-degree verification for combinatorial
//! Hopf algebras built from operads.
//!
//! The crate provides:
//!
//! * [`exact_linear`] — sparse linear combinations over ℚ with exact rational
//!   arithmetic, tensor bases, kernel/rank computation, and the free-generator
//!   series of a graded dimension sequence.
//! * [`symmetric_combinatorics`] — permutations, standardization, shuffles,
//!   coset factorization, the associative-operad composition, the
//!   Malvenuto–Reutenauer product and coproducts, and the word (tensor)
//!   algebra operations.
//! * [`permutohedron`] — set compositions (faces of permutohedra), the CTD and
//!   Π compositions, the twisted products `w_f`/`w_g`, the two twisted
//!   coproducts, and the Zinbiel layer on degree-0 faces.
//! * [`associahedron`] — planar trees (faces of associahedra), the
//!   tridendriform generators, sector insertion, the associative `*` product,
//!   tree coproducts, and the cellular maps between face families.
//! * [`bialgebra_lab`] — the generic symmetrize (`hat`) / cosymmetrize (`bar`)
//!   machinery over twisted structures, axiom checkers (associativity,
//!   coassociativity, Hopf compatibility, unital-infinitesimal relation,
//!   cocommutativity, transpose duality), primitive-space dimensions, and
//!   deliberate-mutation hooks for sensitivity checks.
//! * [`cli`] — the batch command-line front end used by the `ohl` binary.
//!
//! Everything is exact (no floating point) and deterministic: reports and
//! printed linear combinations are byte-identical across runs and across
//! worker counts.

pub mod exact_linear;
pub mod symmetric_combinatorics;
pub mod permutohedron;
pub mod associahedron;
pub mod bialgebra_lab;
pub mod cli;

pub use exact_linear::{Basis, Coeff, IntSeries, LinComb, Tagged2, Tensor2};
pub use symmetric_combinatorics::Perm;
pub use permutohedron::SetComposition;
pub use associahedron::PlanarTree;
