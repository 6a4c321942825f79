#![no_std]

//! Exact minimal covolumes of nonuniform arithmetic lattices in `PU(n,1)`.
//!
//! Every such lattice is associated with an imaginary quadratic field
//! `l = Q(sqrt(-d))`. For each field and dimension `n >= 2` the crate computes
//! the minimal Euler–Poincaré characteristic `nu_l(n)` as an exact rational
//! built from Bernoulli and generalized Bernoulli numbers, together with the
//! complex hyperbolic volume, the index of the principal lattice in its
//! normalizer, and bounds on the number of minimal lattices. A floating-point
//! route through the principal-lattice volume formula cross-checks the exact
//! values, and [`survey`] compares fields and dimensions.
//!
//! The crate is `no_std` with `alloc`. Features:
//! - `std` (default): forwards `std` to the numeric dependencies.
//! - `parallel`: evaluates survey candidates with rayon.

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod bernoulli;
pub mod covolume;
pub mod error;
pub mod lvalues;
pub mod numeric;
pub mod quadfield;
pub mod rational;
pub mod survey;

pub use covolume::{CovolumeResult, EpsilonStatus, Span};
pub use error::{Error, Result};
pub use lvalues::{ExactValues, SpecialValues};
pub use numeric::NumericValue;
pub use quadfield::{ClassGroup, FormClass, QuadField};
pub use rational::ExactRational;
pub use survey::{GrowthReport, MinimalField, OverallMinimum};
