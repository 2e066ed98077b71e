//! Exact symbolic calculus of divided differences for the Weyl groups of
//! types A, B and D.
//!
//! The crate works over the ring of polynomials with coefficients in Z[1/2]
//! (dyadic rationals) and provides:
//!
//! - [`dyadic`]: exact dyadic rational arithmetic,
//! - [`poly`]: sparse multivariate polynomials, group actions, exact division,
//! - [`weyl`]: signed permutations, lengths, reduced words, Lehmer codes,
//! - [`divdiff`]: simple and composite divided differences, the nabla
//!   operators, alternating sums over a group, planar displays of words,
//! - [`ptilde`]: the Q-tilde / P-tilde families, branching, basis
//!   decomposition and reproducing kernels,
//! - [`schubert`]: Schubert polynomials of types A, B and D and the scalar
//!   products tying them to the P-tilde bases,
//! - [`symfun`]: symmetric functions in the power-sum basis, Hall pairing,
//!   adjoint multiplications and vertex operators,
//! - [`verify`]: the named verification suites exposed by the command line.
//!
//! Everything is exact: no floating point, and any division that fails to be
//! exact is reported as an error instead of being approximated.

pub mod dyadic;
pub mod poly;
pub mod weyl;
pub mod divdiff;
pub mod ptilde;
pub mod schubert;
pub mod symfun;
pub mod verify;

mod error;

pub use dyadic::DyadicRational;
pub use error::{Error, Result};
pub use poly::{Monomial, SparsePolynomial};
pub use weyl::{GroupType, SignedPermutation};
