//! Numerical semigroups and the Leamer monoids of their gaps.
//!
//! For a numerical semigroup `Γ` and a gap `s`, the Leamer monoid holds the
//! pairs `(n, ℓ)` whose arithmetic chain `n, n+s, ..., n+ℓs` lies in `Γ`.
//! This crate computes the semigroup invariants, decides irreducibility in
//! the Leamer monoid, builds constructive irreducible `(n, 2)` witnesses for
//! symmetric semigroups (two and three generators, and generalized
//! arithmetic sequences `<a, ah+d, ..., ah+kd>`), checks all of them against
//! exhaustive search, and renders the `(s, n)` point clouds.
//!
//! ```
//! use numsg_core::{leamer, witness, NumericalSemigroup};
//!
//! let sg = NumericalSemigroup::new(&[5, 6]).unwrap();
//! assert_eq!(sg.frobenius(), 19);
//! let report = witness::hw_witness(&sg, 13, None).unwrap();
//! assert_eq!(report.element.n, 11);
//! assert!(leamer::is_irreducible(&sg, 13, report.element).unwrap());
//! ```

pub mod error;
pub mod leamer;
pub mod oracle;
pub mod par;
pub mod plot;
pub mod scan;
pub mod semigroup;
pub mod verifier;
pub mod witness;

pub use error::{Error, Result};
pub use leamer::{ColumnIrreducibles, LeamerElement};
pub use par::Execution;
pub use plot::PointSet;
pub use scan::{Family, ScanSpec};
pub use semigroup::{from_gen_arith, minimalize, GenArithParams, GenArithSemigroup, NumericalSemigroup};
pub use verifier::{verify_semigroup, SemigroupReport, Status};
pub use witness::{Rule, WitnessReport};
