//! Numerical evaluation of the integral family
//!
//! ```text
//! f(a, b) = ∫₀^∞ dx / ((x² + 1)^a · √(φ(x) + √φ(x))),   φ(x) = 1 + 4u²/b²,  u = x/(x² + 1)
//! ```
//!
//! through each of its known representations (direct, transformed, elliptic
//! closed forms and reductions), together with a harness that compares the
//! representations pairwise and issues CONFIRMED / REFUTED / ILL_DEFINED
//! verdicts.
//!
//! Module layout:
//!
//! * [`carlson`] – Carlson symmetric integrals RF, RC, RJ, RD.
//! * [`legendre`] – Legendre-form F(φ,k) and Π(φ,n,k) built on [`carlson`].
//! * [`quadrature`] – tanh-sinh quadrature plus a composite Simpson oracle.
//! * [`family`] – every representation of f(a,b).
//! * [`verify`] – the identity-audit harness.

pub mod carlson;
pub mod family;
pub mod legendre;
pub mod quadrature;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use family::{ModulusSet, Params};
pub use quadrature::{QuadratureResult, ToleranceSpec};
pub use verify::{IdentityReport, Rep, RepresentationValue, Status, Verdict};
