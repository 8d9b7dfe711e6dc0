//! Exact-arithmetic lower previsions on finite spaces.
//!
//! This crate models lower prevision and lower probability assessments,
//! decides the consistency hierarchy (coherence, 2-coherence, convexity,
//! 2-convexity, and the avoiding-sure-loss family), and computes natural
//! extensions: the coherent, 2-coherent, convex and 2-convex natural
//! extensions in linear-programming form, their closed forms on powerset
//! domains, the Choquet integral extension, and the Goodman-Nguyen
//! extensions of full conditional lower probabilities.
//!
//! All arithmetic is exact: the algorithms are generic over an exactly
//! ordered field scalar ([`scalar::Scalar`]), instantiated with
//! arbitrary-precision rationals ([`Q`]) in practice. There is no
//! floating-point path, so every reported value is an exact rational (or
//! an exact `+inf`/`-inf` where an extension diverges).



pub mod choquet;
pub mod consistency;
pub mod extensions;
pub mod error;

pub mod gamble;

pub mod lp;
pub mod powerset;
pub mod scalar;
#[cfg(test)]
pub(crate) mod testutil;
pub mod space;

/// The default scalar: arbitrary-precision rationals, always in lowest
/// terms with a positive denominator.
pub type Q = num_rational::BigRational;

/// Machine-word rationals, usable for small exact computations when the
/// inputs are known to stay tiny.
pub type Q64 = num_rational::Ratio<i64>;

/// Rationals extended with `+inf`/`-inf`; extension values live here.
pub type ExtendedQ = scalar::Extended<Q>;

pub use error::{Error, Result};
pub use gamble::{Assessment, ConditionalGamble, Gamble};
pub use powerset::{Pmf, PowersetLowerProbability};
pub use scalar::{Extended, Scalar};
pub use space::{AtomSet, Event, Partition, Universe};
