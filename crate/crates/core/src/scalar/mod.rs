//! Exact scalars: rationals, the division-ring contract, and rational quaternions.

mod quaternion;
mod rational;
mod ring;

pub use quaternion::Quaternion;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use ring::{ConjugacyClassData, DivisionRing};

pub(crate) use ring::inv_nonzero;
