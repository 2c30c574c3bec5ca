//! Simple Lie algebra types, their Vogel parameters and the derived
//! hypergeometric parameters of the adjoint variety.
//!
//! All catalog data uses the normalization `alpha = -2`, in which
//! `t = alpha + beta + gamma` is the dual Coxeter number.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// A complex simple Lie algebra, by Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl LieType {
    /// Builds a type from a family letter and rank, rejecting ranks outside
    /// the catalog (`A_n, n >= 1`; `B_n, C_n, n >= 2`; `D_n, n >= 3`).
    ///
    /// `D_3` is accepted (it is `A_3`), `D_2` is not simple and is refused.
    pub fn new(family: char, rank: u32) -> Result<Self> {
        let out_of_range = || Error::RankOutOfRange { family: family.to_ascii_uppercase(), rank };
        let ty = match (family.to_ascii_uppercase(), rank) {
            ('A', n) if n >= 1 => LieType::A(n),
            ('B', n) if n >= 2 => LieType::B(n),
            ('C', n) if n >= 2 => LieType::C(n),
            ('D', n) if n >= 3 => LieType::D(n),
            ('E', 6) => LieType::E6,
            ('E', 7) => LieType::E7,
            ('E', 8) => LieType::E8,
            ('F', 4) => LieType::F4,
            ('G', 2) => LieType::G2,
            ('A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G', _) => return Err(out_of_range()),
            _ => return Err(Error::ParseLieType(format!("{family}{rank}"))),
        };
        Ok(ty)
    }

    pub fn family(self) -> char {
        match self {
            LieType::A(_) => 'A',
            LieType::B(_) => 'B',
            LieType::C(_) => 'C',
            LieType::D(_) => 'D',
            LieType::E6 | LieType::E7 | LieType::E8 => 'E',
            LieType::F4 => 'F',
            LieType::G2 => 'G',
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            LieType::A(n) | LieType::B(n) | LieType::C(n) | LieType::D(n) => n,
            LieType::E6 => 6,
            LieType::E7 => 7,
            LieType::E8 => 8,
            LieType::F4 => 4,
            LieType::G2 => 2,
        }
    }

    pub fn exceptionals() -> [LieType; 5] {
        [LieType::E6, LieType::E7, LieType::E8, LieType::F4, LieType::G2]
    }

    /// Every catalog type with classical families taken up to `max_rank`,
    /// ordered A, B, C, D by rank, then the exceptionals.
    pub fn catalog(max_rank: u32) -> Vec<LieType> {
        let mut out = Vec::new();
        out.extend((1..=max_rank).map(LieType::A));
        out.extend((2..=max_rank).map(LieType::B));
        out.extend((2..=max_rank).map(LieType::C));
        out.extend((3..=max_rank).map(LieType::D));
        out.extend(LieType::exceptionals());
        out
    }

    /// Classical dimension of the algebra, independent of Vogel's formula.
    pub fn classical_dimension(self) -> u64 {
        let n = u64::from(self.rank());
        match self {
            LieType::A(_) => n * (n + 2),
            LieType::B(_) | LieType::C(_) => n * (2 * n + 1),
            LieType::D(_) => n * (2 * n - 1),
            LieType::E6 => 78,
            LieType::E7 => 133,
            LieType::E8 => 248,
            LieType::F4 => 52,
            LieType::G2 => 14,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.rank())
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses `"A5"`, `"e8"`, `"G2"`: a family letter directly followed by
    /// the rank, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| Error::ParseLieType(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseLieType(s.to_string()));
        }
        let rank: u32 = digits.parse().map_err(|_| Error::ParseLieType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Vogel's parameters `(alpha, beta, gamma)` together with `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VogelParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub t: Rational,
}

impl VogelParams {
    /// Checks `t = alpha + beta + gamma`.
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, t: Rational) -> Result<Self> {
        let sum = &alpha + &beta + &gamma;
        if sum != t {
            return Err(Error::VogelSum { t: t.to_string(), sum: sum.to_string() });
        }
        Ok(VogelParams { alpha, beta, gamma, t })
    }

    pub fn from_triple(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        let t = &alpha + &beta + &gamma;
        VogelParams { alpha, beta, gamma, t }
    }

    /// Exchanges beta and gamma.
    pub fn swap_beta_gamma(&self) -> VogelParams {
        VogelParams::from_triple(self.alpha.clone(), self.gamma.clone(), self.beta.clone())
    }

    /// The two tuples with alpha moved into the beta or gamma slot:
    /// `(beta, alpha, gamma)` and `(gamma, beta, alpha)`.
    pub fn virtual_permutations(&self) -> [VogelParams; 2] {
        [
            VogelParams::from_triple(self.beta.clone(), self.alpha.clone(), self.gamma.clone()),
            VogelParams::from_triple(self.gamma.clone(), self.beta.clone(), self.alpha.clone()),
        ]
    }
}

/// Hypergeometric parameters of the adjoint variety's Hilbert series.
///
/// Invariants: `a1 = 2b1 + 2b2 - 3`, `a2 = b1 + 2b2 - 2`, `a3 = 2b1 + b2 - 2`,
/// `b3 = a1/2`, `a4 = b3 + 1`. Positivity of `a1` holds on the catalog but is
/// only enforced by the operations that need it, so the permuted "virtual"
/// tuples stay representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniversalParams {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub b1: Rational,
    pub b2: Rational,
    pub b3: Rational,
}

impl UniversalParams {
    /// Builds the full tuple from `(b1, b2)`, which determine everything else.
    pub fn from_lower(b1: Rational, b2: Rational) -> Self {
        let two = Rational::from(2);
        let three = Rational::from(3);
        let a1 = &two * &b1 + &two * &b2 - &three;
        let a2 = &b1 + &two * &b2 - &two;
        let a3 = &two * &b1 + &b2 - &two;
        let b3 = &a1 / &two;
        let a4 = &b3 + Rational::one();
        UniversalParams { a1, a2, a3, a4, b1, b2, b3 }
    }

    pub fn upper(&self) -> [&Rational; 4] {
        [&self.a1, &self.a2, &self.a3, &self.a4]
    }

    pub fn lower(&self) -> [&Rational; 3] {
        [&self.b1, &self.b2, &self.b3]
    }

    /// Exchanges the roles of `b1` and `b2` (and with them `a2`, `a3`).
    pub fn swap_lower(&self) -> UniversalParams {
        UniversalParams::from_lower(self.b2.clone(), self.b1.clone())
    }
}

/// Vogel's parameters for a catalog type, normalized to `alpha = -2`.
pub fn vogel_params(ty: LieType) -> VogelParams {
    let n = Rational::from(ty.rank());
    let int = |x: i64| Rational::from(x);
    let two_n = &n * int(2);
    let (beta, gamma) = match ty {
        LieType::A(_) => (int(2), &n + int(1)),
        LieType::B(_) => (int(4), &two_n - int(3)),
        LieType::C(_) => (int(1), &n + int(2)),
        LieType::D(_) => (int(4), &two_n - int(4)),
        LieType::E6 => (int(6), int(8)),
        LieType::E7 => (int(8), int(12)),
        LieType::E8 => (int(12), int(20)),
        LieType::F4 => (int(5), int(6)),
        LieType::G2 => (Rational::new(10, 3), Rational::new(8, 3)),
    };
    VogelParams::from_triple(int(-2), beta, gamma)
}

/// Derived parameters: `b1 = -beta/alpha`, `b2 = -gamma/alpha`,
/// `b3 = -(2t + alpha)/(2 alpha)` and the `a_i` that follow from them.
pub fn derived_params(v: &VogelParams) -> Result<UniversalParams> {
    if v.alpha.is_zero() {
        return Err(Error::DegenerateNormalization);
    }
    let b1 = -(&v.beta / &v.alpha);
    let b2 = -(&v.gamma / &v.alpha);
    let u = UniversalParams::from_lower(b1, b2);
    let two_alpha = &v.alpha * Rational::from(2);
    let b3 = -((&v.t * Rational::from(2) + &v.alpha) / two_alpha);
    if b3 != u.b3 {
        return Err(Error::VogelSum { t: v.t.to_string(), sum: (&v.alpha + &v.beta + &v.gamma).to_string() });
    }
    Ok(u)
}

pub fn scale_params(v: &VogelParams, lambda: &Rational) -> Result<VogelParams> {
    if lambda.is_zero() {
        return Err(Error::ZeroScale);
    }
    Ok(VogelParams { alpha: &v.alpha * lambda, beta: &v.beta * lambda, gamma: &v.gamma * lambda, t: &v.t * lambda })
}

/// Vogel's dimension formula `N = (alpha-2t)(beta-2t)(gamma-2t)/(alpha beta gamma)`.
pub fn adjoint_dimension(v: &VogelParams) -> Result<BigInt> {
    let denom = &v.alpha * &v.beta * &v.gamma;
    if denom.is_zero() {
        return Err(Error::ZeroDivisor("adjoint dimension"));
    }
    let two_t = &v.t * Rational::from(2);
    let n = (&v.alpha - &two_t) * (&v.beta - &two_t) * (&v.gamma - &two_t) / denom;
    match n.to_integer() {
        Some(k) if k > BigInt::from(0) => Ok(k),
        _ => Err(Error::NotSimplePoint(format!("N = {n}"))),
    }
}

/// `h^vee = -2t/alpha`, invariant under rescaling.
pub fn dual_coxeter(v: &VogelParams) -> Result<Rational> {
    if v.alpha.is_zero() {
        return Err(Error::DegenerateNormalization);
    }
    Ok(-(&v.t * Rational::from(2)) / &v.alpha)
}
