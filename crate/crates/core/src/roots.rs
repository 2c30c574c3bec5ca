//! Explicit root systems and the Weyl-formula route to the Hilbert function
//! of the adjoint variety, kept independent of the Vogel parametrization.
//!
//! Every type is realized in Euclidean coordinates. Positivity is the
//! lexicographic order on coordinates, simple roots are the indecomposable
//! positive roots, and the highest root is found by search.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{factorial, Polynomial, PowerSeries, Rational};
use crate::error::{Error, Result};
use crate::vogel::LieType;

pub type Vector = Vec<Rational>;

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[Rational], c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

fn is_lex_positive(v: &[Rational]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(Rational::is_positive)
}

/// `(lam, root^vee) = 2 (lam, root) / (root, root)`.
pub fn pairing(lam: &[Rational], root: &[Rational]) -> Result<Rational> {
    let norm = dot(root, root);
    if norm.is_zero() {
        return Err(Error::ZeroRoot);
    }
    Ok(dot(lam, root) * Rational::from(2) / norm)
}

/// A root system with a chosen positive system.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vector>,
    pub positive_roots: Vec<Vector>,
    pub highest_root: Vector,
    pub weyl_vector: Vector,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Coordinates of `v` in the basis of simple roots. `v` must lie in
    /// their span.
    pub fn simple_coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.rank();
        let gram: Vec<Vec<Rational>> =
            (0..r).map(|i| (0..r).map(|j| dot(&self.simple_roots[i], &self.simple_roots[j])).collect()).collect();
        let rhs: Vec<Rational> = self.simple_roots.iter().map(|a| dot(a, v)).collect();
        solve(gram, rhs)
    }

    /// `(theta, alpha^vee)` and `(rho, alpha^vee)` for each positive root.
    fn theta_rho_pairings(&self) -> Vec<(Rational, Rational)> {
        self.positive_roots
            .iter()
            .map(|a| {
                (
                    pairing(&self.highest_root, a).expect("roots are nonzero"),
                    pairing(&self.weyl_vector, a).expect("roots are nonzero"),
                )
            })
            .collect()
    }
}

/// Gaussian elimination over the rationals for a nonsingular system.
fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Vec<Rational> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("Gram matrix of simple roots is nonsingular");
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let f = &m[row][col] / &m[col][col];
                let pivot_row = m[col].clone();
                for (x, p) in m[row].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
                let delta = &f * &rhs[col];
                rhs[row] -= delta;
            }
        }
    }
    (0..n).map(|i| &rhs[i] / &m[i][i]).collect()
}

fn unit(dim: usize, i: usize, c: i64) -> Vector {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::from(c);
    v
}

/// `s_i e_i + s_j e_j` over all sign pairs, `i < j`.
fn plus_minus_pairs(dim: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(add(&unit(dim, i, si), &unit(dim, j, sj)));
            }
        }
    }
    out
}

fn e8_roots() -> Vec<Vector> {
    let mut out = plus_minus_pairs(8);
    let half = Rational::new(1, 2);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|i| if mask >> i & 1 == 1 { -&half } else { half.clone() }).collect());
        }
    }
    out
}

fn all_roots(ty: LieType) -> (usize, Vec<Vector>) {
    match ty {
        LieType::A(n) => {
            let dim = n as usize + 1;
            let mut out = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        out.push(sub(&unit(dim, i, 1), &unit(dim, j, 1)));
                    }
                }
            }
            (dim, out)
        }
        LieType::B(n) | LieType::C(n) | LieType::D(n) => {
            let dim = n as usize;
            let mut out = plus_minus_pairs(dim);
            let short = match ty {
                LieType::B(_) => Some(1),
                LieType::C(_) => Some(2),
                _ => None,
            };
            if let Some(c) = short {
                for i in 0..dim {
                    out.push(unit(dim, i, c));
                    out.push(unit(dim, i, -c));
                }
            }
            (dim, out)
        }
        LieType::E8 => (8, e8_roots()),
        // roots orthogonal to e7 + e8
        LieType::E7 => (8, e8_roots().into_iter().filter(|v| (&v[6] + &v[7]).is_zero()).collect()),
        // roots orthogonal to e7 + e8 and e6 - e7
        LieType::E6 => (8, e8_roots().into_iter().filter(|v| (&v[6] + &v[7]).is_zero() && v[5] == v[6]).collect()),
        LieType::F4 => {
            let mut out = plus_minus_pairs(4);
            for i in 0..4 {
                out.push(unit(4, i, 1));
                out.push(unit(4, i, -1));
            }
            let half = Rational::new(1, 2);
            for mask in 0u32..16 {
                out.push((0..4).map(|i| if mask >> i & 1 == 1 { -&half } else { half.clone() }).collect());
            }
            (4, out)
        }
        LieType::G2 => {
            // the plane x1 + x2 + x3 = 0
            let mut out = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        out.push(sub(&unit(3, i, 1), &unit(3, j, 1)));
                        let k = 3 - i - j;
                        let long = sub(&sub(&unit(3, i, 2), &unit(3, j, 1)), &unit(3, k, 1));
                        if !out.contains(&long) {
                            out.push(scale(&long, &Rational::from(-1)));
                            out.push(long);
                        }
                    }
                }
            }
            (3, out)
        }
    }
}

/// Sorted coefficients of the highest root in the simple-root basis.
fn expected_highest_root_marks(ty: LieType) -> Vec<i64> {
    let n = ty.rank() as usize;
    let mut marks = match ty {
        LieType::A(_) => vec![1; n],
        LieType::B(_) | LieType::C(_) => [vec![1], vec![2; n - 1]].concat(),
        LieType::D(_) => [vec![1; 3], vec![2; n - 3]].concat(),
        LieType::E6 => vec![1, 2, 2, 3, 2, 1],
        LieType::E7 => vec![2, 2, 3, 4, 3, 2, 1],
        LieType::E8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
        LieType::F4 => vec![2, 3, 4, 2],
        LieType::G2 => vec![3, 2],
    };
    marks.sort_unstable();
    marks
}

/// Builds the standard realization of `ty` and checks its structural
/// invariants: root count, rank, `(rho, alpha_i^vee) = 1`, integrality and
/// sign of simple-root coordinates, and the classical highest-root marks.
pub fn build_root_system(ty: LieType) -> Result<RootSystem> {
    let bug = |msg: String| Error::RootSystemBug(format!("{ty}: {msg}"));
    let (ambient_dim, roots) = all_roots(ty);
    let positive_roots: Vec<Vector> = roots.into_iter().filter(|v| is_lex_positive(v)).collect();

    let expected = (ty.classical_dimension() - u64::from(ty.rank())) / 2;
    if positive_roots.len() as u64 != expected {
        return Err(bug(format!("{} positive roots, expected {expected}", positive_roots.len())));
    }

    let positive_set: HashSet<&Vector> = positive_roots.iter().collect();
    let simple_roots: Vec<Vector> = positive_roots
        .iter()
        .filter(|a| !positive_roots.iter().any(|b| positive_set.contains(&sub(a, b))))
        .cloned()
        .collect();
    if simple_roots.len() != ty.rank() as usize {
        return Err(bug(format!("{} simple roots", simple_roots.len())));
    }

    let two = Rational::from(2);
    let weyl_vector = scale(
        &positive_roots.iter().fold(vec![Rational::zero(); ambient_dim], |acc, a| add(&acc, a)),
        &Rational::new(1, 2),
    );

    // theta: the longest dominant root
    let highest_root = positive_roots
        .iter()
        .filter(|a| simple_roots.iter().all(|s| !pairing(a, s).expect("nonzero").is_negative()))
        .max_by(|a, b| dot(a, a).cmp(&dot(b, b)))
        .cloned()
        .ok_or_else(|| bug("no dominant root".into()))?;

    let rs = RootSystem { lie_type: ty, ambient_dim, simple_roots, positive_roots, highest_root, weyl_vector };

    for s in &rs.simple_roots {
        if !pairing(&rs.weyl_vector, s)?.is_one() {
            return Err(bug("(rho, alpha_i^vee) != 1".into()));
        }
    }
    for a in &rs.positive_roots {
        let coords = rs.simple_coordinates(a);
        if coords.iter().any(|c| !c.is_integer() || c.is_negative()) {
            return Err(bug(format!("positive root {a:?} has coordinates {coords:?}")));
        }
        if !pairing(a, a)?.eq(&two) {
            return Err(bug("(alpha, alpha^vee) != 2".into()));
        }
    }
    let mut marks: Vec<i64> = rs
        .simple_coordinates(&rs.highest_root)
        .iter()
        .map(|c| i64::try_from(c.to_integer().expect("checked integral")).expect("small"))
        .collect();
    marks.sort_unstable();
    if marks != expected_highest_root_marks(ty) {
        return Err(bug(format!("highest root marks {marks:?}")));
    }
    Ok(rs)
}

/// `dim V(k theta) = prod_{alpha > 0} (k theta + rho, alpha^vee) / (rho, alpha^vee)`.
pub fn weyl_dim(rs: &RootSystem, k: usize) -> BigInt {
    let k = Rational::from(k);
    let value: Rational = rs.theta_rho_pairings().into_iter().map(|(th, rho)| (&k * th + &rho) / rho).product();
    value.to_integer().expect("Weyl dimension is an integer")
}

/// `h_X(q) = prod_{alpha > 0} (1 + (theta, alpha^vee) q / (rho, alpha^vee))`.
pub fn gw_hilbert_polynomial(rs: &RootSystem) -> Polynomial {
    rs.theta_rho_pairings()
        .into_iter()
        .filter(|(th, _)| !th.is_zero())
        .fold(Polynomial::constant(Rational::one()), |acc, (th, rho)| {
            &acc * &Polynomial::linear(Rational::one(), th / rho)
        })
}

/// `H_X(z) = h_X(z d/dz) 1/(1 - z)`: the coefficient of `z^k` is `h_X(k)`.
pub fn gw_series(rs: &RootSystem, order: usize) -> PowerSeries {
    let h = gw_hilbert_polynomial(rs);
    PowerSeries::from_fn(order, |k| h.eval(&Rational::from(k)))
}

/// `deg X = d! prod (theta, alpha^vee)/(rho, alpha^vee)` over roots with
/// `(theta, alpha^vee) != 0`.
pub fn gw_degree(rs: &RootSystem) -> Result<BigInt> {
    let factors: Vec<Rational> =
        rs.theta_rho_pairings().into_iter().filter(|(th, _)| !th.is_zero()).map(|(th, rho)| th / rho).collect();
    let deg = factors.iter().product::<Rational>() * Rational::from(factorial(factors.len()));
    match deg.to_integer() {
        Some(n) if n.is_positive() => Ok(n),
        _ => Err(Error::RootSystemBug(format!("{}: degree {deg}", rs.lie_type))),
    }
}
