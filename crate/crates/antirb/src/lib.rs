//! Exact verification toolkit for anti-Rota-Baxter operators.
//!
//! The crate implements, over the Gaussian rationals:
//!
//! - [`scalar`]: the exact scalar field (complex numbers with rational real
//!   and imaginary parts) together with a bit-exact text grammar,
//! - [`lie`]: structure-constant bracket engines for the Witt algebra, its
//!   central extension (the Virasoro algebra), and sl2,
//! - [`op`]: linear operators on those algebras and residual-based checking
//!   of the anti-Rota-Baxter, strong, delta-Rota-Baxter and delta-derivation
//!   identities,
//! - [`witt`]: the catalog of homogeneous operator families on the Witt and
//!   Virasoro algebras, the governing functional equation, a windowed
//!   first-principles solver for it, and the adjudication driver that
//!   compares catalog against solver,
//! - [`sl2`]: the nine-relation system on 3x3 matrices, the ten-family
//!   catalog, exhaustive integer grid search, exact inverses, and the
//!   anti-derivation bridge.
//!
//! Every computation is exact; there is no floating point anywhere. Checks
//! on the infinite-dimensional algebras run over a finite symmetric window
//! of generator indices and results are window-consistent statements, not
//! proofs over all of the integers.

pub mod lie;
pub mod op;
pub mod scalar;
pub mod sl2;
pub mod witt;

pub use lie::{AlgebraKind, BasisIndex, Element};
pub use op::{CoefficientSource, IdentityKind, OperatorSpec, VerificationReport};
pub use scalar::Scalar;
