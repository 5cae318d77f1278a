//! Exact arithmetic toolkit for rational distance sets and their distance
//! surfaces `z^2 = prod ((x - a_i)^2 + (y - b_i)^2)`.
//!
//! Everything here is exact: rationals, the real quadratic fields `Q(sqrt k)`
//! and their Gaussian extensions `Q(sqrt k)(i)`. No floating point is used in
//! any computation.
//!
//! * [`arith`]: scalars and the [`arith::Field`] trait.
//! * [`poly`]: multivariate and Laurent polynomials, univariate gcds and
//!   resultants, 2-forms and their pullbacks.
//! * [`rds`]: rational distance sets, normalization, inversion, general
//!   position and a brute-force grid search.
//! * [`huff`]: Huff's axis configurations and point generation on the
//!   associated elliptic curve.
//! * [`surface`]: distance surfaces, their singularities, canonical-form
//!   bookkeeping and the general-type certificate.
//! * [`io`] and [`cli`]: JSON formats and the command-line driver.

pub mod arith;
pub mod cli;
pub mod error;
pub mod huff;
pub mod io;
pub mod poly;
pub mod rds;
pub mod surface;

pub use error::{Error, Result};
