//! The Hilbert series as a generalized hypergeometric series `4F3`, its
//! `3F2` Euler-operator form, and the coefficient recurrence of the
//! hypergeometric differential equation.

use serde::{Deserialize, Serialize};

use crate::algebra::{factorial, rising_factorial, PowerSeries, Rational};
use crate::error::{Error, Result};
use crate::vogel::UniversalParams;

/// Upper and lower parameters of a `pFq` series.
///
/// No lower parameter may be zero or a negative integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
}

impl HypergeometricParams {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<Self> {
        if let Some(b) = lower.iter().find(|b| b.as_nonpositive_integer().is_some()) {
            return Err(Error::SingularHypergeometric(b.to_string()));
        }
        Ok(HypergeometricParams { upper, lower })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    fn require_4f3(&self) -> Result<()> {
        if self.upper.len() != 4 || self.lower.len() != 3 {
            return Err(Error::ArityMismatch {
                expected_upper: 4,
                expected_lower: 3,
                upper: self.upper.len(),
                lower: self.lower.len(),
            });
        }
        Ok(())
    }
}

/// `H_X = 4F3(a1, a2, a3, a4; b1, b2, b3; z)`.
pub fn as_4f3(u: &UniversalParams) -> Result<HypergeometricParams> {
    HypergeometricParams::new(u.upper().into_iter().cloned().collect(), u.lower().into_iter().cloned().collect())
}

/// `prod (upper_j)_k / (prod (lower_j)_k * k!)`.
pub fn pfq_coefficient(h: &HypergeometricParams, k: usize) -> Rational {
    let num: Rational = h.upper.iter().map(|a| rising_factorial(a, k)).product();
    let den: Rational = h.lower.iter().map(|b| rising_factorial(b, k)).product();
    num / (den * Rational::from(factorial(k)))
}

/// Residual of the coefficient recurrence at step `k`:
///
/// ```text
/// k * prod_j (k + lower_j - 1) * c_k  -  prod_j (k - 1 + upper_j) * c_{k-1}
/// ```
///
/// which is zero for every `k` exactly when the series solves the
/// hypergeometric differential equation.
pub fn recurrence_residual(h: &HypergeometricParams, c: &PowerSeries, k: usize) -> Result<Rational> {
    let max = c.truncation_order();
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange { k, max });
    }
    let kk = Rational::from(k);
    let km1 = Rational::from(k - 1);
    let left: Rational = h.lower.iter().map(|b| &km1 + b).product::<Rational>() * &kk * c.coeff(k);
    let right: Rational = h.upper.iter().map(|a| &km1 + a).product::<Rational>() * c.coeff(k - 1);
    Ok(left - right)
}

/// `s = sum(lower) - sum(upper)`, the non-trivial exponent at `z = 1`.
pub fn exponent_sum(h: &HypergeometricParams) -> Result<Rational> {
    h.require_4f3()?;
    Ok(h.lower.iter().sum::<Rational>() - h.upper.iter().sum::<Rational>())
}

/// `dim X = -s - 1`, read off the pole order of `H_X` at `z = 1`.
pub fn dimension_from_exponent(h: &HypergeometricParams) -> Result<i64> {
    let d = -exponent_sum(h)? - Rational::one();
    d.to_integer()
        .and_then(|n| i64::try_from(n).ok())
        .ok_or_else(|| Error::InvalidParameterPoint(format!("-s - 1 = {d}")))
}

/// `(1 + (2/a1) z d/dz) 3F2(a1, a2, a3; b1, b2; z)` through `z^order`.
pub fn euler_scaled_3f2(u: &UniversalParams, order: usize) -> Result<PowerSeries> {
    if u.a1.is_zero() {
        return Err(Error::ZeroDivisor("1 + 2k/a1"));
    }
    let h =
        HypergeometricParams::new(vec![u.a1.clone(), u.a2.clone(), u.a3.clone()], vec![u.b1.clone(), u.b2.clone()])?;
    Ok(PowerSeries::from_fn(order, |k| {
        let scale = Rational::one() + Rational::from(2 * k) / &u.a1;
        scale * pfq_coefficient(&h, k)
    }))
}
