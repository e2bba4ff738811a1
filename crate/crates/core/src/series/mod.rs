//! Exact truncated power series over Laurent polynomials in `x`, `y`, and
//! the generating functions built with them.

pub mod gf;
pub mod identities;
pub mod laurent;
pub mod trunc;

pub use gf::{alpha, build_a, build_p, r_series, radicand, solve_a0, solve_p0, solve_v0};
pub use identities::{verify_identity_suite, CheckStatus, CoefficientMismatch, IdentityInputs, IdentityResult};
pub use laurent::LaurentPoly2;
pub use trunc::TruncSeries;
