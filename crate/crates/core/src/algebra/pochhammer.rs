use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// The rising factorial `(a)_k = a(a+1)...(a+k-1)`, with `(a)_0 = 1`.
pub fn rising_factorial(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Generalized binomial `(a-k+1)...(a-1)a / k!` for any rational `a`.
pub fn binomial_general(a: &Rational, k: usize) -> Rational {
    let lowest = a - Rational::from(k) + Rational::one();
    rising_factorial(&lowest, k) / Rational::from(factorial(k))
}

/// Coefficient of `z^k` in `(1-z)^(-n)`, namely `(n)_k / k!`.
pub fn geometric_pow_coefficient(n: &Rational, k: usize) -> Rational {
    rising_factorial(n, k) / Rational::from(factorial(k))
}
