//! Universal computation path: everything about `X = P(O_min)` expressed
//! through the Vogel-derived parameters alone.
//!
//! The graded piece `S(X)_k` has dimension
//!
//! ```text
//! (1 + 2k/a1) * (a1)_k (a2)_k (a3)_k / ((b1)_k (b2)_k k!)
//! ```
//!
//! and the Hilbert polynomial, degree and numerator are all derived from
//! that coefficient sequence by exact interpolation and truncated series
//! arithmetic. No Gamma function is ever evaluated.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    factorial, geometric_pow_coefficient, is_palindromic, lagrange_interpolate, rising_factorial,
    series_times_poly_pow, Polynomial, PowerSeries, Rational,
};
use crate::error::{Error, Result};
use crate::vogel::{
    adjoint_dimension, derived_params, dual_coxeter, vogel_params, LieType, UniversalParams, VogelParams,
};

/// Extra series terms beyond `d` that must vanish after clearing the pole.
pub const NUMERATOR_SLACK: usize = 8;

/// Points past the interpolation nodes at which the Hilbert polynomial is
/// re-checked against the coefficient formula.
pub const POLYNOMIAL_CHECK_POINTS: usize = 5;

/// `k`-th coefficient of the universal series at any parameter tuple.
///
/// Equal upper and lower Pochhammer parameters cancel. A series terminated by
/// an upper parameter stays zero even past a later lower pole; a lower pole
/// reached first (or at the same index) is an error, for which
/// [`regularized_coefficient`] gives the limit along a line.
pub fn series_coefficient(u: &UniversalParams, k: usize) -> Result<Rational> {
    if u.a1.is_zero() {
        return Err(Error::ZeroDivisor("1 + 2k/a1"));
    }
    let mut upper = vec![u.a1.clone(), u.a2.clone(), u.a3.clone()];
    let mut lower = vec![u.b1.clone(), u.b2.clone(), Rational::one()];
    upper.retain(|a| match lower.iter().position(|b| b == a) {
        Some(i) => {
            lower.swap_remove(i);
            false
        }
        None => true,
    });
    let first_zero =
        |ps: &[Rational]| ps.iter().filter_map(|p| p.as_nonpositive_integer()).filter(|&j| (j as usize) < k).min();
    match (first_zero(&upper), first_zero(&lower)) {
        (Some(up), Some(low)) if up < low => return Ok(Rational::zero()),
        (_, Some(_)) => {
            let shown: Vec<String> = lower.iter().map(Rational::to_string).collect();
            return Err(Error::Pole { k, context: format!("lower parameters [{}]", shown.join(", ")) });
        }
        (Some(_), None) => return Ok(Rational::zero()),
        (None, None) => {}
    }
    let num: Rational = upper.iter().map(|a| rising_factorial(a, k)).product();
    let den: Rational = lower.iter().map(|b| rising_factorial(b, k)).product();
    let euler = Rational::one() + Rational::from(2 * k) / &u.a1;
    Ok(euler * num / den)
}

/// `f0 + f1 * eps`.
#[derive(Clone, PartialEq, Eq)]
struct Affine(Rational, Rational);

impl Affine {
    /// `(a, b, g) . w` for a point and direction in Vogel coordinates.
    fn linear(point: &VogelParams, dir: &VogelParams, w: [i64; 3]) -> Affine {
        let dot = |v: &VogelParams| {
            &v.alpha * Rational::from(w[0]) + &v.beta * Rational::from(w[1]) + &v.gamma * Rational::from(w[2])
        };
        Affine(dot(point), dot(dir))
    }

    fn shifted(&self, alpha: &Affine, j: usize) -> Affine {
        let j = Rational::from(j);
        Affine(&self.0 + &alpha.0 * &j, &self.1 + &alpha.1 * &j)
    }
}

/// Limit as `eps -> 0` of the universal coefficient at the Vogel point
/// `point + eps * direction`.
///
/// Every parameter is `L(alpha, beta, gamma) / alpha` with `L` linear, so each
/// Pochhammer factor `c + j` is `(L + j alpha) / alpha` and the powers of
/// `alpha` cancel between numerator and denominator. The remaining factors
/// are affine in `eps`; identical factors cancel, and the limit is read off
/// from the order of vanishing. A zero direction evaluates at the point.
pub fn regularized_coefficient(point: &VogelParams, direction: &VogelParams, k: usize) -> Result<Rational> {
    let alpha = Affine::linear(point, direction, [1, 0, 0]);
    if alpha.0.is_zero() {
        return Err(Error::DegenerateNormalization);
    }
    // alpha * parameter, for a1, a2, a3 and b1, b2, 1
    let a1 = Affine::linear(point, direction, [-3, -2, -2]);
    let upper =
        [a1.clone(), Affine::linear(point, direction, [-2, -1, -2]), Affine::linear(point, direction, [-2, -2, -1])];
    let lower =
        [Affine::linear(point, direction, [0, -1, 0]), Affine::linear(point, direction, [0, 0, -1]), alpha.clone()];

    // (a1 + 2k) / a1
    let mut num = vec![a1.shifted(&alpha, 2 * k)];
    let mut den = vec![a1];
    for j in 0..k {
        num.extend(upper.iter().map(|c| c.shifted(&alpha, j)));
        den.extend(lower.iter().map(|c| c.shifted(&alpha, j)));
    }
    num.retain(|f| match den.iter().position(|g| g == f) {
        Some(i) => {
            den.swap_remove(i);
            false
        }
        None => true,
    });

    let mut order: i64 = 0;
    let mut lead = Rational::one();
    for f in &den {
        if !f.0.is_zero() {
            lead /= &f.0;
        } else if !f.1.is_zero() {
            lead /= &f.1;
            order -= 1;
        } else {
            return Err(Error::Pole { k, context: "denominator factor vanishes identically".into() });
        }
    }
    for f in &num {
        if !f.0.is_zero() {
            lead *= &f.0;
        } else if !f.1.is_zero() {
            lead *= &f.1;
            order += 1;
        } else {
            return Ok(Rational::zero());
        }
    }
    match order {
        0 => Ok(lead),
        o if o > 0 => Ok(Rational::zero()),
        _ => Err(Error::Pole { k, context: format!("pole of order {}", -order) }),
    }
}

/// `dim S(X)_k`, asserted to be a positive integer.
pub fn graded_dim(u: &UniversalParams, k: usize) -> Result<BigInt> {
    let c = series_coefficient(u, k).map_err(|e| Error::NotFromSimpleAlgebra(e.to_string()))?;
    match c.to_integer() {
        Some(n) if n.is_positive() => Ok(n),
        _ => Err(Error::NotFromSimpleAlgebra(format!("coefficient {k} is {c}"))),
    }
}

/// Hilbert series `H_X(z)` through `z^order`, built from the term ratio
/// `c_k / c_(k-1)` so that long series cost linear work.
pub fn hilbert_series(u: &UniversalParams, order: usize) -> Result<PowerSeries> {
    let not_simple = |k: usize, c: &Rational| Error::NotFromSimpleAlgebra(format!("coefficient {k} is {c}"));
    if u.a1.is_zero() {
        return Err(Error::ZeroDivisor("1 + 2k/a1"));
    }
    let two = Rational::from(2);
    let mut coeffs = vec![Rational::one()];
    let mut prev = Rational::one();
    for k in 1..=order {
        let j = Rational::from(k - 1);
        let lower = (&u.b1 + &j) * (&u.b2 + &j) * Rational::from(k) * (&u.a1 + &two * &j);
        if lower.is_zero() {
            return Err(not_simple(k, &Rational::zero()));
        }
        let upper = (&u.a1 + &j) * (&u.a2 + &j) * (&u.a3 + &j) * (&u.a1 + &two * Rational::from(k));
        let c = &prev * upper / lower;
        if !(c.is_integer() && c.is_positive()) {
            return Err(not_simple(k, &c));
        }
        coeffs.push(c.clone());
        prev = c;
    }
    Ok(PowerSeries::new(coeffs))
}

/// `dim X = 2 a1 - 1`, cross-checked against the hypergeometric exponent
/// form `a1 + a2 + a3 + a4 - b1 - b2 - b3 - 1`.
pub fn variety_dimension(u: &UniversalParams) -> Result<usize> {
    let d = &u.a1 * Rational::from(2) - Rational::one();
    let via_exponents =
        u.upper().into_iter().sum::<Rational>() - u.lower().into_iter().sum::<Rational>() - Rational::one();
    if d != via_exponents {
        return Err(Error::InvalidParameterPoint(format!("2a1 - 1 = {d} but exponent sum gives {via_exponents}")));
    }
    d.to_integer()
        .filter(|n| n.is_positive())
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::InvalidParameterPoint(format!("dim X = {d}")))
}

pub fn orbit_dimension(u: &UniversalParams) -> Result<usize> {
    Ok(variety_dimension(u)? + 1)
}

/// Hilbert polynomial by interpolation of `dim S(X)_k` at `k = 0..=d`,
/// re-verified at the next [`POLYNOMIAL_CHECK_POINTS`] integers.
pub fn hilbert_polynomial(u: &UniversalParams) -> Result<Polynomial> {
    let d = variety_dimension(u)?;
    let series = hilbert_series(u, d + POLYNOMIAL_CHECK_POINTS)?;
    let nodes: Vec<(Rational, Rational)> = (0..=d).map(|k| (Rational::from(k), series.coeff(k).clone())).collect();
    let poly = lagrange_interpolate(&nodes)?;
    for k in d + 1..=d + POLYNOMIAL_CHECK_POINTS {
        if poly.eval(&Rational::from(k)) != *series.coeff(k) {
            return Err(Error::InterpolationDoesNotExtend { k });
        }
    }
    if poly.degree() != Some(d) {
        return Err(Error::InvalidParameterPoint(format!(
            "Hilbert polynomial has degree {:?}, expected {d}",
            poly.degree()
        )));
    }
    Ok(poly)
}

/// `deg X = d! * (leading coefficient of the Hilbert polynomial)`.
pub fn variety_degree(u: &UniversalParams) -> Result<BigInt> {
    let h = hilbert_polynomial(u)?;
    degree_from_polynomial(&h)
}

pub(crate) fn degree_from_polynomial(h: &Polynomial) -> Result<BigInt> {
    let d = h.degree().unwrap_or(0);
    let deg = h.leading_coefficient() * Rational::from(factorial(d));
    match deg.to_integer() {
        Some(n) if n.is_positive() => Ok(n),
        _ => Err(Error::InvalidParameterPoint(format!("degree {deg} is not a positive integer"))),
    }
}

/// Numerator `P_X(z) = (1 - z)^(d+1) H_X(z)`, computed on a series carried
/// [`NUMERATOR_SLACK`] terms past `d`; those extra terms must vanish.
pub fn numerator_polynomial(u: &UniversalParams) -> Result<Polynomial> {
    let d = variety_dimension(u)?;
    let series = hilbert_series(u, d + NUMERATOR_SLACK)?;
    let one_minus_z = Polynomial::from_integers([1, -1]);
    let cleared = series_times_poly_pow(&series, &one_minus_z, d + 1)?;
    if let Some(k) = (d + 1..=d + NUMERATOR_SLACK).find(|&k| !cleared.coeff(k).is_zero()) {
        return Err(Error::NotRational(format!("coefficient {k} of (1-z)^{} H is {}", d + 1, cleared.coeff(k))));
    }
    let p = cleared.truncate(d).to_polynomial();
    if !is_palindromic(&p) {
        return Err(Error::NotRational(format!("numerator {p} is not palindromic")));
    }
    let at_one = p.eval(&Rational::one());
    let deg = variety_degree(u)?;
    if at_one != Rational::from(deg.clone()) {
        return Err(Error::NotRational(format!("P(1) = {at_one} but deg X = {deg}")));
    }
    Ok(p)
}

/// `dim I_k = (N)_k / k! - dim S(X)_k` for the ideal of `X` in `P(g)`.
pub fn ideal_graded_dim(u: &UniversalParams, n: &BigInt, k: usize) -> Result<BigInt> {
    let ambient = geometric_pow_coefficient(&Rational::from(n.clone()), k);
    let value = ambient - Rational::from(graded_dim(u, k)?);
    match value.to_integer() {
        Some(v) if !v.is_negative() => Ok(v),
        _ => Err(Error::InconsistentN { k, value: value.to_string() }),
    }
}

/// `H_I(z) = (1 - z)^(-N) - H_X(z)` through `z^order`.
pub fn ideal_series(u: &UniversalParams, n: &BigInt, order: usize) -> Result<PowerSeries> {
    let x = hilbert_series(u, order)?;
    let n = Rational::from(n.clone());
    let mut ambient = Rational::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        if k > 0 {
            ambient = ambient * (&n + Rational::from(k - 1)) / Rational::from(k);
        }
        let value = &ambient - x.coeff(k);
        if value.is_negative() || !value.is_integer() {
            return Err(Error::InconsistentN { k, value: value.to_string() });
        }
        coeffs.push(value);
    }
    Ok(PowerSeries::new(coeffs))
}

/// Dimensions `(-4t/beta - 3, -4t/gamma - 3)` of the two virtual varieties
/// obtained by exchanging alpha with beta or with gamma.
pub fn virtual_dimensions(v: &VogelParams) -> Result<(Rational, Rational)> {
    if v.beta.is_zero() || v.gamma.is_zero() {
        return Err(Error::ZeroDivisor("virtual dimension"));
    }
    let four_t = &v.t * Rational::from(4);
    let three = Rational::from(3);
    Ok((-(&four_t / &v.beta) - &three, -(&four_t / &v.gamma) - three))
}

/// Derivative of the catalog Vogel parameters with respect to the rank;
/// zero for the exceptional types.
pub fn family_direction(ty: LieType) -> VogelParams {
    let slope = match ty {
        LieType::A(_) | LieType::C(_) => 1,
        LieType::B(_) | LieType::D(_) => 2,
        _ => 0,
    };
    VogelParams::from_triple(Rational::zero(), Rational::zero(), Rational::from(slope))
}

/// Coefficient sequences (through `z^order`) of the two permuted tuples of a
/// catalog type. Where the plain coefficient has a pole, the limit along the
/// type's family line is used instead.
pub fn virtual_series(ty: LieType, order: usize) -> Result<[PowerSeries; 2]> {
    let points = vogel_params(ty).virtual_permutations();
    let dirs = family_direction(ty).virtual_permutations();
    let coefficient = |i: usize, k: usize| match series_coefficient(&derived_params(&points[i])?, k) {
        Err(Error::Pole { .. }) => regularized_coefficient(&points[i], &dirs[i], k),
        other => other,
    };
    let series = |i: usize| PowerSeries::try_from_fn(order, |k| coefficient(i, k));
    Ok([series(0)?, series(1)?])
}

/// Smallest `k0` such that every coefficient from `k0` through the
/// truncation order is zero, if any.
pub fn vanishing_onset(s: &PowerSeries) -> Option<usize> {
    let last_nonzero = s.coeffs().iter().rposition(|c| !c.is_zero());
    match last_nonzero {
        None => Some(0),
        Some(i) if i < s.truncation_order() => Some(i + 1),
        Some(_) => None,
    }
}

/// Summary of `X = P(O_min)` for one Lie type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyReport {
    pub lie_type: LieType,
    pub dim_x: usize,
    #[serde(with = "crate::bigint_string")]
    pub deg_x: BigInt,
    pub dim_orbit: usize,
    #[serde(with = "crate::bigint_string")]
    pub adjoint_dim: BigInt,
    pub numerator: Polynomial,
}

pub fn variety_report(ty: LieType) -> Result<VarietyReport> {
    variety_report_with(ty, &vogel_params(ty))
}

/// Report built from explicit Vogel parameters (which need not be the
/// catalog row for `ty`).
pub fn variety_report_with(ty: LieType, v: &VogelParams) -> Result<VarietyReport> {
    let u = derived_params(v)?;
    let dim_x = variety_dimension(&u)?;
    let h_dual = dual_coxeter(v)?;
    if Rational::from(dim_x) != &h_dual * Rational::from(2) - Rational::from(3) {
        return Err(Error::InvalidParameterPoint(format!("dim X = {dim_x} but h^vee = {h_dual}")));
    }
    let deg_x = variety_degree(&u)?;
    let numerator = numerator_polynomial(&u)?;
    Ok(VarietyReport {
        lie_type: ty,
        dim_x,
        deg_x,
        dim_orbit: dim_x + 1,
        adjoint_dim: adjoint_dimension(v)?,
        numerator,
    })
}
