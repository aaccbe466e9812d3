//! Exact Lagrange interpolation for polynomials over a division ring.
//!
//! Polynomials live in `F[z]` with a central variable and right-hand
//! coefficients. They can be evaluated on the left or on the right, which
//! gives left, right and two-sided interpolation problems. The shipped
//! instances are the rational quaternions [`Quaternion`] and (as a
//! commutative sanity check) [`Rational`] itself.

pub mod bounded;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod one_sided;
pub mod oracle;
pub mod poly;
pub mod problem;
pub mod random;
pub mod scalar;
pub mod sylvester;
pub mod two_sided;

pub use error::{Error, Result, Side};
pub use poly::{CentralPoly, SkewPoly};
pub use scalar::{ConjugacyClassData, DivisionRing, Quaternion, Rational};
