//! Cross-path verification: runs the universal, hypergeometric and
//! root-system computations for a type side by side and reports the first
//! disagreement of each named check.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_palindromic, Rational};
use crate::error::Error;
use crate::hypergeom::{as_4f3, dimension_from_exponent, euler_scaled_3f2, pfq_coefficient, recurrence_residual};
use crate::roots::{build_root_system, gw_degree, gw_hilbert_polynomial, weyl_dim, RootSystem};
use crate::universal::{
    graded_dim, hilbert_polynomial, hilbert_series, ideal_graded_dim, numerator_polynomial, variety_degree,
};
use crate::vogel::{
    adjoint_dimension, derived_params, dual_coxeter, vogel_params, LieType, UniversalParams, VogelParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Vogel parameters yield a valid derived tuple and adjoint dimension.
    Parameters,
    /// Universal coefficient equals the Weyl dimension of `V(k theta)`.
    OracleEquivalence,
    /// Interpolated Hilbert polynomial equals the positive-root product.
    PolynomialIdentity,
    /// Universal degree, root-system degree and `P_X(1)` coincide.
    DegreeConsistency,
    /// The numerator of the Hilbert series is palindromic.
    Palindromic,
    /// `4F3` coefficients equal the universal coefficients.
    HypergeometricIdentity,
    /// The series satisfies the hypergeometric coefficient recurrence.
    Recurrence,
    /// The `3F2` Euler-operator form reproduces the series.
    EulerOperator,
    /// `-s - 1 = 2 h^vee - 3`.
    ExponentDimension,
    /// `dim I_k >= 0`, with `dim I_0 = dim I_1 = 0`.
    IdealNonnegative,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Parameters,
        Check::OracleEquivalence,
        Check::PolynomialIdentity,
        Check::DegreeConsistency,
        Check::Palindromic,
        Check::HypergeometricIdentity,
        Check::Recurrence,
        Check::EulerOperator,
        Check::ExponentDimension,
        Check::IdealNonnegative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Parameters => "parameters",
            Check::OracleEquivalence => "oracle_equivalence",
            Check::PolynomialIdentity => "polynomial_identity",
            Check::DegreeConsistency => "degree_consistency",
            Check::Palindromic => "palindromic",
            Check::HypergeometricIdentity => "hypergeometric_identity",
            Check::Recurrence => "recurrence",
            Check::EulerOperator => "euler_operator",
            Check::ExponentDimension => "exponent_dimension",
            Check::IdealNonnegative => "ideal_nonnegative",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one check for one type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: Check,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeVerdicts {
    pub lie_type: LieType,
    pub verdicts: Vec<Verdict>,
}

impl TypeVerdicts {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.passed)
    }
}

struct Failure {
    k: Option<usize>,
    detail: String,
}

impl Failure {
    fn at(k: usize, detail: impl fmt::Display) -> Self {
        Failure { k: Some(k), detail: detail.to_string() }
    }

    fn msg(detail: impl fmt::Display) -> Self {
        Failure { k: None, detail: detail.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::msg(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Context<'a> {
    vogel: &'a VogelParams,
    params: &'a UniversalParams,
    roots: &'a RootSystem,
    terms: usize,
}

fn oracle_equivalence(cx: &Context) -> Outcome {
    for k in 0..=cx.terms {
        let universal = graded_dim(cx.params, k).map_err(|e| Failure::at(k, e))?;
        let weyl = weyl_dim(cx.roots, k);
        if universal != weyl {
            return Err(Failure::at(k, format!("universal {universal} != Weyl {weyl}")));
        }
    }
    Ok(())
}

fn polynomial_identity(cx: &Context) -> Outcome {
    let universal = hilbert_polynomial(cx.params)?;
    let product = gw_hilbert_polynomial(cx.roots);
    if universal != product {
        return Err(Failure::msg(format!("{universal} != {product}")));
    }
    Ok(())
}

fn degree_consistency(cx: &Context) -> Outcome {
    let universal = variety_degree(cx.params)?;
    let roots = gw_degree(cx.roots)?;
    let numerator = numerator_polynomial(cx.params)?.eval(&Rational::one());
    if universal != roots || Rational::from(universal.clone()) != numerator {
        return Err(Failure::msg(format!("universal {universal}, root system {roots}, P(1) = {numerator}")));
    }
    Ok(())
}

fn palindromic(cx: &Context) -> Outcome {
    let p = numerator_polynomial(cx.params)?;
    if !is_palindromic(&p) {
        return Err(Failure::msg(format!("numerator {p}")));
    }
    Ok(())
}

fn hypergeometric_identity(cx: &Context) -> Outcome {
    let h = as_4f3(cx.params)?;
    for k in 0..=cx.terms {
        let universal = graded_dim(cx.params, k).map_err(|e| Failure::at(k, e))?;
        let pfq = pfq_coefficient(&h, k);
        if Rational::from(universal.clone()) != pfq {
            return Err(Failure::at(k, format!("4F3 {pfq} != {universal}")));
        }
    }
    Ok(())
}

fn recurrence(cx: &Context) -> Outcome {
    let h = as_4f3(cx.params)?;
    let series = hilbert_series(cx.params, cx.terms)?;
    for k in 1..=cx.terms {
        let r = recurrence_residual(&h, &series, k)?;
        if !r.is_zero() {
            return Err(Failure::at(k, format!("residual {r}")));
        }
    }
    Ok(())
}

fn euler_operator(cx: &Context) -> Outcome {
    let direct = hilbert_series(cx.params, cx.terms)?;
    let operator = euler_scaled_3f2(cx.params, cx.terms)?;
    if let Some(k) = (0..=cx.terms).find(|&k| direct.coeff(k) != operator.coeff(k)) {
        return Err(Failure::at(k, format!("{} != {}", operator.coeff(k), direct.coeff(k))));
    }
    Ok(())
}

fn exponent_dimension(cx: &Context) -> Outcome {
    let from_exponent = dimension_from_exponent(&as_4f3(cx.params)?)?;
    let expected = dual_coxeter(cx.vogel)? * Rational::from(2) - Rational::from(3);
    let from_roots = gw_hilbert_polynomial(cx.roots).degree().unwrap_or(0);
    if Rational::from(from_exponent) != expected || Rational::from(from_roots) != expected {
        return Err(Failure::msg(format!(
            "-s-1 = {from_exponent}, 2h^vee-3 = {expected}, root product degree {from_roots}"
        )));
    }
    Ok(())
}

fn ideal_nonnegative(cx: &Context, n: &BigInt) -> Outcome {
    for k in 0..=cx.terms {
        let dim = ideal_graded_dim(cx.params, n, k).map_err(|e| Failure::at(k, e))?;
        if k <= 1 && dim != BigInt::from(0) {
            return Err(Failure::at(k, format!("dim I_{k} = {dim}")));
        }
    }
    Ok(())
}

fn record(check: Check, outcome: Outcome) -> Verdict {
    match outcome {
        Ok(()) => Verdict { check, passed: true, k: None, detail: None },
        Err(f) => Verdict { check, passed: false, k: f.k, detail: Some(f.detail) },
    }
}

/// Verifies `ty` against its catalog parameters through `terms` coefficients.
pub fn verify_type(ty: LieType, terms: usize) -> TypeVerdicts {
    verify_type_with(ty, &vogel_params(ty), terms)
}

/// Verifies `ty` using the given Vogel parameters on the universal side and
/// the genuine root system of `ty` on the other.
pub fn verify_type_with(ty: LieType, vogel: &VogelParams, terms: usize) -> TypeVerdicts {
    let setup = (|| -> std::result::Result<_, Error> {
        let params = derived_params(vogel)?;
        let n = adjoint_dimension(vogel)?;
        let roots = build_root_system(ty)?;
        Ok((params, n, roots))
    })();
    let (params, n, roots) = match setup {
        Ok(x) => x,
        Err(e) => return TypeVerdicts { lie_type: ty, verdicts: vec![record(Check::Parameters, Err(e.into()))] },
    };
    let cx = Context { vogel, params: &params, roots: &roots, terms };
    let verdicts = Check::ALL
        .into_iter()
        .map(|check| {
            let outcome = match check {
                Check::Parameters => Ok(()),
                Check::OracleEquivalence => oracle_equivalence(&cx),
                Check::PolynomialIdentity => polynomial_identity(&cx),
                Check::DegreeConsistency => degree_consistency(&cx),
                Check::Palindromic => palindromic(&cx),
                Check::HypergeometricIdentity => hypergeometric_identity(&cx),
                Check::Recurrence => recurrence(&cx),
                Check::EulerOperator => euler_operator(&cx),
                Check::ExponentDimension => exponent_dimension(&cx),
                Check::IdealNonnegative => ideal_nonnegative(&cx, &n),
            };
            record(check, outcome)
        })
        .collect();
    TypeVerdicts { lie_type: ty, verdicts }
}

/// Verifies many types in parallel; results keep the input order.
/// `vogel_override` replaces the catalog row of matching types.
pub fn verify_many(types: &[LieType], terms: usize, vogel_override: &[(LieType, VogelParams)]) -> Vec<TypeVerdicts> {
    types
        .par_iter()
        .map(|&ty| match vogel_override.iter().find(|(t, _)| *t == ty) {
            Some((_, v)) => verify_type_with(ty, v, terms),
            None => verify_type(ty, terms),
        })
        .collect()
}
