use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients at all and its
/// degree is `None` (the `-inf` sentinel) rather than `Some(0)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Polynomial::new(vec![c0, c1])
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Polynomial::new(coeffs.into_iter().map(Rational::from).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: usize) -> Polynomial {
        let mut acc = Polynomial::constant(Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Unique polynomial of degree `< points.len()` through every point.
///
/// Uses Newton divided differences, then expands the Newton form.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    if points.is_empty() {
        return Err(Error::EmptyInterpolation);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DegenerateNodes);
        }
    }

    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }

    // Horner on the Newton form: c_{n-1}, then (x - x_i) * acc + c_i.
    let mut acc = Polynomial::constant(table[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = Polynomial::linear(-xs[i], Rational::one());
        acc = &(&acc * &factor) + &Polynomial::constant(table[i].clone());
    }
    Ok(acc)
}

/// `coeff[i] == coeff[deg - i]` for every `i`; the zero polynomial counts.
pub fn is_palindromic(p: &Polynomial) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (Rational::from(x), Rational::from(y))).collect()
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_integers([0, 0, 0]).degree(), None);
        assert_eq!(Polynomial::from_integers([5]).degree(), Some(0));
    }

    #[test]
    fn interpolation_examples() {
        let affine = lagrange_interpolate(&pts(&[(0, 1), (1, 3), (2, 5)])).unwrap();
        assert_eq!(affine, Polynomial::from_integers([1, 2]));
        let constant = lagrange_interpolate(&pts(&[(0, 1)])).unwrap();
        assert_eq!(constant, Polynomial::from_integers([1]));
        let a1: Vec<_> = (0..3).map(|k| (k, 2 * k + 1)).collect();
        assert_eq!(lagrange_interpolate(&pts(&a1)).unwrap(), Polynomial::from_integers([1, 2]));
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(lagrange_interpolate(&pts(&[(0, 1), (0, 2)])), Err(Error::DegenerateNodes));
        assert_eq!(lagrange_interpolate(&[]), Err(Error::EmptyInterpolation));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&Polynomial::from_integers([1, 1])));
        assert!(is_palindromic(&Polynomial::from_integers([1, 2, 1])));
        assert!(!is_palindromic(&Polynomial::from_integers([1, 2])));
        assert!(is_palindromic(&Polynomial::zero()));
    }

    #[test]
    fn display() {
        let p = Polynomial::new(vec![Rational::from(1), Rational::new(-3, 2), Rational::from(0), Rational::from(1)]);
        assert_eq!(p.to_string(), "1 - 3/2*x + x^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-50i64..50, 1i64..7), 1..=13)
            .prop_map(|v| Polynomial::new(v.into_iter().map(|(p, q)| Rational::new(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn interpolation_recovers_polynomial(p in arb_poly(), shift in -5i64..5) {
            let n = p.degree().map_or(1, |d| d + 1);
            let points: Vec<_> = (0..n as i64)
                .map(|i| {
                    let x = Rational::new(2 * i + shift, 3);
                    let y = p.eval(&x);
                    (x, y)
                })
                .collect();
            let q = lagrange_interpolate(&points).unwrap();
            prop_assert_eq!(&q, &p);
            for (x, y) in &points {
                prop_assert_eq!(&q.eval(x), y);
            }
        }

        #[test]
        fn interpolation_reproduces_points(ys in prop::collection::vec(-1000i64..1000, 1..15)) {
            let points: Vec<_> = ys.iter().enumerate()
                .map(|(i, &y)| (Rational::new(i as i64 * 5 - 7, 2), Rational::from(y)))
                .collect();
            let q = lagrange_interpolate(&points).unwrap();
            prop_assert!(q.degree().map_or(true, |d| d < points.len()));
            for (x, y) in &points {
                prop_assert_eq!(&q.eval(x), y);
            }
        }
    }
}
