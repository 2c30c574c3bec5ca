//! Exact rational substrate: rationals, dense polynomials, truncated power
//! series and the rising-factorial family. No floating point is used anywhere.

mod pochhammer;
mod poly;
mod rational;
mod series;

pub use pochhammer::{binomial_general, factorial, geometric_pow_coefficient, rising_factorial};
pub use poly::{is_palindromic, lagrange_interpolate, Polynomial};
pub use rational::Rational;
pub use series::{series_times_poly_pow, PowerSeries};
