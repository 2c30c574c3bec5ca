//! Exit criteria for the whole library. Every criterion runs at zero
//! tolerance (exact rationals/integers) and prints one PASS/FAIL line.
//!
//! Run with `cargo test -p orbit-hilbert-core --test acceptance -- --nocapture`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use orbit_hilbert::algebra::{is_palindromic, Rational};
use orbit_hilbert::hypergeom::{as_4f3, dimension_from_exponent, pfq_coefficient, recurrence_residual};
use orbit_hilbert::roots::{build_root_system, gw_degree, gw_hilbert_polynomial, weyl_dim};
use orbit_hilbert::universal::{
    graded_dim, hilbert_polynomial, hilbert_series, ideal_graded_dim, numerator_polynomial, vanishing_onset,
    variety_degree, variety_dimension, variety_report, variety_report_with, virtual_dimensions, virtual_series,
};
use orbit_hilbert::vogel::{adjoint_dimension, derived_params, dual_coxeter, scale_params, vogel_params};
use orbit_hilbert::{LieType, UniversalParams};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A(1..8), B(2..8), C(2..8), D(3..8) and the five exceptionals.
fn catalog() -> Vec<LieType> {
    LieType::catalog(8)
}

fn params(ty: LieType) -> UniversalParams {
    derived_params(&vogel_params(ty)).expect("catalog parameters")
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(m: u64) -> BigInt {
    binom(2 * m, m) / (m + 1)
}

/// Closed forms read off the table of parameters, dimension and degree:
/// `(a1, a2, a3, b1, b2, dim X, deg X)`.
fn table_row(ty: LieType) -> ([Rational; 5], i64, BigInt) {
    let n = i64::from(ty.rank());
    let un = n as u64;
    match ty {
        LieType::A(_) => ([q(n, 1), q(n, 1), q(n + 1, 2), q(1, 1), q(n + 1, 2)], 2 * n - 1, binom(2 * un, un)),
        LieType::B(_) => (
            [q(2 * n - 2, 1), q(2 * n - 3, 1), q(2 * n + 1, 2), q(2, 1), q(2 * n - 3, 2)],
            4 * n - 5,
            BigInt::from(4) * binom(4 * un - 4, 2 * un - 2) / (2 * un - 1),
        ),
        LieType::C(_) => (
            [q(n, 1), q(2 * n + 1, 2), q(n, 2), q(1, 2), q(n + 2, 2)],
            2 * n - 1,
            BigInt::from(2).pow(2 * ty.rank() - 1),
        ),
        LieType::D(_) => (
            [q(2 * n - 3, 1), q(2 * n - 4, 1), q(n, 1), q(2, 1), q(n - 2, 1)],
            4 * n - 7,
            BigInt::from(4) * binom(4 * un - 6, 2 * un - 3) / (2 * un - 2),
        ),
        LieType::E6 => ([q(11, 1), q(9, 1), q(8, 1), q(3, 1), q(4, 1)], 21, BigInt::from(151_164u64)),
        LieType::E7 => ([q(17, 1), q(14, 1), q(12, 1), q(4, 1), q(6, 1)], 33, BigInt::from(141_430_680u64)),
        LieType::E8 => ([q(29, 1), q(24, 1), q(20, 1), q(6, 1), q(10, 1)], 57, BigInt::from(126_937_516_885_200u64)),
        LieType::F4 => ([q(8, 1), q(13, 2), q(6, 1), q(5, 2), q(3, 1)], 15, BigInt::from(4992)),
        LieType::G2 => ([q(3, 1), q(7, 3), q(8, 3), q(5, 3), q(4, 3)], 5, BigInt::from(18)),
    }
}

fn for_each_type(types: &[LieType], f: impl Fn(LieType) -> Outcome + Sync) -> Outcome {
    let failures: Vec<String> = types.par_iter().filter_map(|&ty| f(ty).err().map(|e| format!("{ty}: {e}"))).collect();
    ensure(failures.is_empty(), || failures.join("; "))
}

fn table_reproduction() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let (expected, dim, deg) = table_row(ty);
        let u = params(ty);
        let got = [u.a1.clone(), u.a2.clone(), u.a3.clone(), u.b1.clone(), u.b2.clone()];
        ensure(got == expected, || format!("params {got:?} != {expected:?}"))?;
        let d = variety_dimension(&u).map_err(|e| e.to_string())?;
        ensure(d as i64 == dim, || format!("dim {d} != {dim}"))?;
        let g = variety_degree(&u).map_err(|e| e.to_string())?;
        ensure(g == deg, || format!("deg {g} != {deg}"))
    })
}

fn dual_path_coefficients() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let u = params(ty);
        let rs = build_root_system(ty).map_err(|e| e.to_string())?;
        for k in 0..=20 {
            let universal = graded_dim(&u, k).map_err(|e| e.to_string())?;
            let weyl = weyl_dim(&rs, k);
            ensure(universal == weyl, || format!("k={k}: {universal} != {weyl}"))?;
        }
        Ok(())
    })
}

fn polynomial_identity() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let u = params(ty);
        let h = hilbert_polynomial(&u).map_err(|e| e.to_string())?;
        let gw = gw_hilbert_polynomial(&build_root_system(ty).map_err(|e| e.to_string())?);
        ensure(h == gw, || format!("{h} != {gw}"))?;
        let d = h.degree().unwrap_or(0);
        for k in 0..=d + 10 {
            let g = Rational::from(graded_dim(&u, k).map_err(|e| e.to_string())?);
            let x = Rational::from(k);
            ensure(h.eval(&x) == g && gw.eval(&x) == g, || format!("k={k}"))?;
        }
        Ok(())
    })
}

fn degree_triple() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let u = params(ty);
        let universal = variety_degree(&u).map_err(|e| e.to_string())?;
        let roots = gw_degree(&build_root_system(ty).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let p = numerator_polynomial(&u).map_err(|e| e.to_string())?;
        let at_one = p.eval(&Rational::one());
        ensure(is_palindromic(&p), || format!("numerator {p} not palindromic"))?;
        ensure(universal == roots && Rational::from(universal.clone()) == at_one, || {
            format!("{universal} / {roots} / {at_one}")
        })
    })
}

fn hypergeometric_identity() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let u = params(ty);
        let h = as_4f3(&u).map_err(|e| e.to_string())?;
        let series = hilbert_series(&u, 30).map_err(|e| e.to_string())?;
        for k in 0..=30 {
            ensure(pfq_coefficient(&h, k) == *series.coeff(k), || format!("4F3 coefficient {k}"))?;
            if k >= 1 {
                let r = recurrence_residual(&h, &series, k).map_err(|e| e.to_string())?;
                ensure(r.is_zero(), || format!("residual {r} at k={k}"))?;
            }
        }
        let d = dimension_from_exponent(&h).map_err(|e| e.to_string())?;
        let hv = dual_coxeter(&vogel_params(ty)).map_err(|e| e.to_string())?;
        let expected = hv * Rational::from(2) - Rational::from(3);
        ensure(Rational::from(d) == expected, || format!("-s-1 = {d}, 2h-3 = {expected}"))
    })
}

fn closed_forms() -> Outcome {
    let mut types: Vec<LieType> = (1..=12).map(LieType::A).collect();
    types.extend((2..=10).map(LieType::B));
    types.extend((2..=10).map(LieType::C));
    types.extend((3..=10).map(LieType::D));
    for_each_type(&types, |ty| {
        let n = u64::from(ty.rank());
        let expected = match ty {
            LieType::A(_) => binom(2 * n, n),
            LieType::B(_) => BigInt::from(4) * catalan(2 * n - 2),
            LieType::C(_) => BigInt::from(2).pow(2 * ty.rank() - 1),
            LieType::D(_) => BigInt::from(4) * catalan(2 * n - 3),
            _ => unreachable!(),
        };
        let got = variety_degree(&params(ty)).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("{got} != {expected}"))
    })
}

fn symmetry_invariance() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let v = vogel_params(ty);
        let base = variety_report(ty).map_err(|e| e.to_string())?;
        let base_series = hilbert_series(&params(ty), 20).map_err(|e| e.to_string())?;
        let n = adjoint_dimension(&v).map_err(|e| e.to_string())?;
        let (vy, vz) = virtual_dimensions(&v).map_err(|e| e.to_string())?;

        let swapped = v.swap_beta_gamma();
        let mut variants = vec![swapped.clone()];
        for lambda in [q(2, 1), q(1, 3), q(7, 1)] {
            variants.push(scale_params(&v, &lambda).map_err(|e| e.to_string())?);
            variants.push(scale_params(&swapped, &lambda).map_err(|e| e.to_string())?);
        }
        for w in &variants {
            let report = variety_report_with(ty, w).map_err(|e| e.to_string())?;
            ensure(report == base, || format!("report differs for {w:?}"))?;
            let u = derived_params(w).map_err(|e| e.to_string())?;
            let series = hilbert_series(&u, 20).map_err(|e| e.to_string())?;
            ensure(series == base_series, || format!("series differs for {w:?}"))?;
            ensure(adjoint_dimension(w).map_err(|e| e.to_string())? == n, || "adjoint dim".into())?;
            let (wy, wz) = virtual_dimensions(w).map_err(|e| e.to_string())?;
            let same = (wy == vy && wz == vz) || (wy == vz && wz == vy);
            ensure(same, || "virtual dimensions".into())?;
        }
        Ok(())
    })?;

    for (a, b) in [(LieType::B(2), LieType::C(2)), (LieType::D(3), LieType::A(3))] {
        let ra = variety_report(a).map_err(|e| e.to_string())?;
        let rb = variety_report(b).map_err(|e| e.to_string())?;
        let strip = |mut r: orbit_hilbert::VarietyReport| {
            r.lie_type = LieType::A(1);
            r
        };
        ensure(strip(ra) == strip(rb), || format!("{a} and {b} reports differ"))?;
        let sa = hilbert_series(&params(a), 20).map_err(|e| e.to_string())?;
        let sb = hilbert_series(&params(b), 20).map_err(|e| e.to_string())?;
        ensure(sa == sb, || format!("{a} and {b} series differ"))?;
    }
    Ok(())
}

fn ideal_series_checks() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let u = params(ty);
        let n = adjoint_dimension(&vogel_params(ty)).map_err(|e| e.to_string())?;
        for k in 0..=20 {
            let dim = ideal_graded_dim(&u, &n, k).map_err(|e| e.to_string())?;
            ensure(dim >= BigInt::zero(), || format!("dim I_{k} = {dim}"))?;
            if k <= 1 {
                ensure(dim.is_zero(), || format!("dim I_{k} = {dim}"))?;
            }
        }
        Ok(())
    })?;
    let a1 = ideal_graded_dim(&params(LieType::A(1)), &BigInt::from(3), 2).map_err(|e| e.to_string())?;
    ensure(a1 == BigInt::from(1), || format!("A1 dim I_2 = {a1}"))
}

fn virtual_vanishing() -> Outcome {
    for_each_type(&catalog(), |ty| {
        let v = vogel_params(ty);
        let h_dual = dual_coxeter(&v).map_err(|e| e.to_string())?;
        let series = virtual_series(ty, 40).map_err(|e| e.to_string())?;
        for (which, s) in ["Y", "Z"].iter().zip(&series) {
            let onset = vanishing_onset(s).ok_or_else(|| format!("{which}: coefficient 40 is {}", s.coeff(40)))?;
            ensure(Rational::from(onset) <= &h_dual * Rational::from(2), || {
                format!("{which}: vanishing starts at {onset} > 2h^vee = {}", &h_dual * Rational::from(2))
            })?;
        }

        let (dim_y, dim_z) = virtual_dimensions(&v).map_err(|e| e.to_string())?;
        let four_t = &v.t * Rational::from(4);
        let three = Rational::from(3);
        ensure(dim_y == -(&four_t / &v.beta) - &three, || "dim Y formula".into())?;
        ensure(dim_z == -(&four_t / &v.gamma) - &three, || "dim Z formula".into())?;
        // independently: 2 a1 - 1 of each permuted tuple
        for (w, dim) in v.virtual_permutations().iter().zip([&dim_y, &dim_z]) {
            let u = derived_params(w).map_err(|e| e.to_string())?;
            ensure(&u.a1 * Rational::from(2) - Rational::one() == *dim, || "permuted 2a1-1".into())?;
        }
        if let LieType::A(n) = ty {
            let n = i64::from(n);
            ensure(dim_y == q(-2 * n - 5, 1) && dim_z == q(-7, 1), || format!("A_n: ({dim_y}, {dim_z})"))?;
        }
        Ok(())
    })
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 table reproduction (params, dim, deg)", table_reproduction),
        ("2 dual-path coefficients k<=20", dual_path_coefficients),
        ("3 Hilbert polynomial identity", polynomial_identity),
        ("4 degree triple agreement + palindromic numerator", degree_triple),
        ("5 4F3 identity, recurrence k<=30, -s-1 = 2h-3", hypergeometric_identity),
        ("6 closed-form degrees (binomial, Catalan, powers of 2)", closed_forms),
        ("7 beta<->gamma, rescaling, B2=C2, D3=A3", symmetry_invariance),
        ("8 ideal series nonnegative, I_0=I_1=0, A1 I_2=1", ideal_series_checks),
        ("9 virtual-module vanishing and dimensions", virtual_vanishing),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(e) => {
                println!("FAIL  criterion {name}: {e}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
