//! Exact arithmetic for nuclei and invariant subspaces of normal rational
//! curves and Veronese varieties over finite fields.
//!
//! Everything here is computed twice where it matters: once through a
//! closed-form digit formula in base p, and once through a geometric
//! brute-force oracle (intersecting osculating subspaces, scanning subset
//! closures, acting with collineation matrices). The `verify` module and the
//! acceptance test suite compare the two routes case by case.
//!
//! The module layout follows the mathematics:
//!
//! * [`base_p`] — Pascal's triangle modulo p: Lucas' theorem, the partition
//!   of zero entries into maximal zero triangles, and the counting functions
//!   built on base-p digits.
//! * [`gf`] — finite fields GF(p^e) with exact table-driven arithmetic.
//! * [`linalg`] — dense exact linear algebra over a finite field: RREF,
//!   kernels, canonical subspaces, intersections.
//! * [`nrc`] — normal rational curves, Hasse-derivative osculating subspaces,
//!   and k-nuclei (brute force and closed form).
//! * [`lattice`] — the lattice of invariant subspaces of a normal rational
//!   curve, enumerated through interval families of base-p digits, with two
//!   independent oracles.
//! * [`veronese`] — general Veronese varieties, osculating hyperplanes, and
//!   the hyperplane nucleus.
//! * [`report`] — JSON / DOT / table / ASCII renderings of the above.
//! * [`verify`] — the formula-vs-oracle comparison suites behind
//!   `veronucleus verify`.

pub mod base_p;
pub mod gf;
pub mod lattice;
pub mod linalg;
pub mod nrc;
pub mod report;
pub(crate) mod rng;
pub mod verify;
pub mod veronese;

pub use base_p::{Digits, Prime};
pub use gf::{Field, FieldElement};
pub use lattice::{IndexSet, Lattice};
pub use linalg::{Matrix, Subspace};
pub use nrc::NrcSpec;
pub use veronese::VeroneseSpec;
