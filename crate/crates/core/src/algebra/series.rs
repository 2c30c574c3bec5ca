use serde::{Deserialize, Serialize};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Formal power series known exactly through `z^order`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series whose known coefficients are exactly `coeffs` (order `len - 1`).
    ///
    /// Panics on an empty vector: a series always knows at least `z^0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries::new((0..=order).map(f).collect())
    }

    pub fn try_from_fn<E>(order: usize, f: impl FnMut(usize) -> Result<Rational, E>) -> Result<Self, E> {
        Ok(PowerSeries::new((0..=order).map(f).collect::<Result<_, _>>()?))
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.coeffs[..=order.min(self.truncation_order())].to_vec())
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.truncation_order().min(rhs.truncation_order());
        PowerSeries::from_fn(order, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.truncation_order().min(rhs.truncation_order());
        PowerSeries::from_fn(order, |k| (0..=k).map(|i| &self.coeffs[i] * &rhs.coeffs[k - i]).sum())
    }

    /// Product with a polynomial, truncated at this series' order.
    pub fn mul_poly(&self, p: &Polynomial) -> PowerSeries {
        let order = self.truncation_order();
        PowerSeries::from_fn(order, |k| {
            p.coeffs().iter().enumerate().take_while(|(i, _)| *i <= k).map(|(i, c)| c * &self.coeffs[k - i]).sum()
        })
    }

    /// The truncated series read as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }
}

/// `H * base^exponent`, exact through `H`'s truncation order.
pub fn series_times_poly_pow(h: &PowerSeries, base: &Polynomial, exponent: usize) -> Result<PowerSeries> {
    if h.truncation_order() < exponent {
        return Err(Error::InsufficientOrder { have: h.truncation_order(), need: exponent });
    }
    let mut acc = h.clone();
    for _ in 0..exponent {
        acc = acc.mul_poly(base);
    }
    Ok(acc)
}
