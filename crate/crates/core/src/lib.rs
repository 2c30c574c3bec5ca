//! Exact Hilbert series, Hilbert polynomial, dimension and degree of the
//! adjoint variety `X = P(O_min)` of every complex simple Lie algebra.
//!
//! Two independent routes are provided and cross-checked in [`verify`]:
//!
//! * [`universal`]: closed formulas in Vogel's parameters, with the
//!   hypergeometric reading of the same series in [`hypergeom`];
//! * [`roots`]: explicit root systems and the Weyl dimension formula.
//!
//! All arithmetic is exact ([`algebra::Rational`]).

pub mod algebra;
pub mod error;
pub mod hypergeom;
pub mod roots;
pub mod universal;
pub mod verify;
pub mod vogel;

pub use algebra::{Polynomial, PowerSeries, Rational};
pub use error::{Error, Result};
pub use hypergeom::HypergeometricParams;
pub use roots::RootSystem;
pub use universal::VarietyReport;
pub use vogel::{LieType, UniversalParams, VogelParams};

pub use num_bigint::BigInt;

/// Serde adapter writing big integers as decimal strings.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
