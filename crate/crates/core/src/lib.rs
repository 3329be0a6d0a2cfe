//! Exact regular-continued-fraction toolkit: convergents, Gauss-map orbits,
//! natural-extension coordinates, approximation coefficients, closed-form
//! bounds on consecutive coefficients, and an exhaustive verification
//! harness that checks those bounds with exact arithmetic.

pub mod bounds;
pub mod cf;
pub mod error;
pub mod numeric;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{QuadSurd, RatInterval, Rational};
