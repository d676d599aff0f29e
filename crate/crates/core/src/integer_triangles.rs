//! Integer-sided triangles whose angles are in arithmetic progression.
//!
//! The middle angle of such a triangle is 60°, so `β² = α² + γ² - αγ`.
//! All of them (with `α <= β <= γ`) are given by
//!
//! ```text
//! α = dκλ,   β = d(3κ² + λ²)/4,   γ = d(2κλ + |3κ² - λ²|)/4
//! ```
//!
//! for positive `d, κ, λ` with `gcd(κ, λ) = 1` and `λ <= κ` or `λ >= 3κ`.
//! When `κ, λ` are both odd any `d` gives integers; otherwise `d` must be a
//! multiple of 4.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::diophantine::{positive_triple, quadratic_forms};
use crate::error::{Error, Result};

/// Sorted integer side lengths `(α, β, γ)`.
pub type SideTriple = (BigUint, BigUint, BigUint);

/// Validated `(d, κ, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleParams {
    d: BigUint,
    kappa: BigUint,
    lambda: BigUint,
}

impl TriangleParams {
    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn kappa(&self) -> &BigUint {
        &self.kappa
    }

    pub fn lambda(&self) -> &BigUint {
        &self.lambda
    }

    pub fn both_odd(&self) -> bool {
        self.kappa.is_odd() && self.lambda.is_odd()
    }
}

impl fmt::Display for TriangleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, kappa={}, lambda={})", self.d, self.kappa, self.lambda)
    }
}

/// Smallest admissible `d` for a coprime pair: 1 if both odd, else 4.
pub fn minimal_d(kappa: &BigUint, lambda: &BigUint) -> u8 {
    if kappa.is_odd() && lambda.is_odd() {
        1
    } else {
        4
    }
}

/// `λ <= κ` or `λ >= 3κ`; equivalently `λ/κ ∉ (1, 3)`.
pub fn ratio_condition(kappa: &BigUint, lambda: &BigUint) -> bool {
    lambda <= kappa || *lambda >= 3u8 * kappa
}

pub fn validate_params(d: BigInt, kappa: BigInt, lambda: BigInt) -> Result<TriangleParams> {
    let (d, kappa, lambda) = positive_triple(d, kappa, lambda)?;
    if !kappa.gcd(&lambda).is_one() {
        return Err(Error::NotCoprime { kappa, lambda });
    }
    if !ratio_condition(&kappa, &lambda) {
        return Err(Error::RatioConditionViolation { kappa, lambda });
    }
    if minimal_d(&kappa, &lambda) == 4 && !(&d % 4u8).is_zero() {
        return Err(Error::ParityViolation {
            d,
            kappa,
            lambda,
            rule: "kappa + lambda odd requires d to be a multiple of 4",
        });
    }
    Ok(TriangleParams { d, kappa, lambda })
}

impl TriangleParams {
    pub fn new(d: u64, kappa: u64, lambda: u64) -> Result<Self> {
        validate_params(d.into(), kappa.into(), lambda.into())
    }
}

/// `(p/q)·√3` with `p/q` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtThreeMultiple {
    pub coefficient: BigRational,
}

impl SqrtThreeMultiple {
    pub fn numer(&self) -> &BigInt {
        self.coefficient.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.coefficient.denom()
    }

    pub fn to_f64(&self) -> f64 {
        crate::exact::to_f64(&self.coefficient) * 3f64.sqrt()
    }
}

impl fmt::Display for SqrtThreeMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = (self.numer(), self.denom());
        if !p.is_one() {
            write!(f, "{p}")?;
        }
        f.write_str("√3")?;
        if !q.is_one() {
            write!(f, "/{q}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegerTriangle {
    pub alpha: BigUint,
    pub beta: BigUint,
    pub gamma: BigUint,
    /// One parameter triple that generates this triangle.
    pub params: TriangleParams,
    /// `(α + β + γ)/β`.
    pub rho: BigRational,
    pub sin_a: SqrtThreeMultiple,
    pub a_deg: f64,
    /// Common difference of the angle progression, `60° - A`.
    pub phi_deg: f64,
    pub gamma_deg: f64,
}

impl IntegerTriangle {
    pub fn sides(&self) -> SideTriple {
        (self.alpha.clone(), self.beta.clone(), self.gamma.clone())
    }

    pub fn is_equilateral(&self) -> bool {
        self.alpha == self.gamma
    }
}

fn sides_for(d: &BigUint, kappa: &BigUint, lambda: &BigUint) -> SideTriple {
    let (diff, sum) = quadratic_forms(kappa, lambda);
    let kl = kappa * lambda;
    let alpha = d * &kl;
    let beta = d * sum / 4u8;
    let gamma = d * (2u8 * &kl + diff) / 4u8;
    (alpha, beta, gamma)
}

/// Angles in degrees from the exact `sin A = (p/q)√3`, with `A <= 60°`.
fn angles_from_sin(sin_a: &SqrtThreeMultiple, equilateral: bool) -> (f64, f64, f64) {
    let a = if equilateral {
        60.0
    } else {
        sin_a.to_f64().min(1.0).asin().to_degrees()
    };
    (a, 60.0 - a, 120.0 - a)
}

pub fn triangle_from_params(p: &TriangleParams) -> IntegerTriangle {
    let (alpha, beta, gamma) = sides_for(&p.d, &p.kappa, &p.lambda);
    let (_, sum) = quadratic_forms(&p.kappa, &p.lambda);
    let sin_a = SqrtThreeMultiple {
        coefficient: BigRational::new(
            BigInt::from(2u8 * &p.kappa * &p.lambda),
            BigInt::from(sum),
        ),
    };
    let rho = BigRational::new(
        BigInt::from(&alpha + &beta + &gamma),
        BigInt::from(beta.clone()),
    );
    let (a_deg, phi_deg, gamma_deg) = angles_from_sin(&sin_a, alpha == gamma);
    IntegerTriangle {
        alpha,
        beta,
        gamma,
        params: p.clone(),
        rho,
        sin_a,
        a_deg,
        phi_deg,
        gamma_deg,
    }
}

/// `β² = α² + γ² - αγ`, exact.
pub fn has_sixty_degree_angle(alpha: &BigUint, beta: &BigUint, gamma: &BigUint) -> bool {
    beta * beta + alpha * gamma == alpha * alpha + gamma * gamma
}

/// Every `(α, β, γ)` with `1 <= α <= β <= γ <= max_gamma` and
/// `β² = α² + γ² - αγ`, sorted.
///
/// Solving the relation for `γ` gives `γ = (α + √(4β² - 3α²))/2` (the
/// minus root would force `β < α`), so the scan runs over `(α, β)` and
/// keeps pairs whose `4β² - 3α²` is a square of the same parity as `α`.
pub fn brute_force_triangles(max_gamma: u64) -> Vec<SideTriple> {
    let mut out = Vec::new();
    let max = BigUint::from(max_gamma);
    for a in 1..=max_gamma {
        let alpha = BigUint::from(a);
        let three_a2 = 3u8 * &alpha * &alpha;
        for b in a..=max_gamma {
            let beta = BigUint::from(b);
            let disc = 4u8 * &beta * &beta - &three_a2;
            let delta = disc.sqrt();
            if &delta * &delta != disc || (&alpha + &delta).is_odd() {
                continue;
            }
            let gamma = (&alpha + &delta) / 2u8;
            if gamma >= beta && gamma <= max {
                out.push((alpha.clone(), beta, gamma));
            }
        }
    }
    out.sort();
    out
}

/// Every triangle with `γ <= max_gamma`, once per side triple, each
/// carrying its lexicographically smallest generating `(d, κ, λ)`.
///
/// Because `γ >= β >= (3κ² + λ²)/4` and `γ >= α >= κλ`, the sweep only
/// needs pairs with `3κ² + λ² <= 4·max_gamma` and `κλ <= max_gamma`.
pub fn enumerate_triangles(max_gamma: &BigUint) -> Vec<IntegerTriangle> {
    let mut witness: BTreeMap<SideTriple, (BigUint, BigUint, BigUint)> = BTreeMap::new();
    let limit = 4u8 * max_gamma;
    let mut kappa = BigUint::one();
    while 3u8 * &kappa * &kappa < limit {
        let mut lambda = BigUint::one();
        loop {
            let (_, sum) = quadratic_forms(&kappa, &lambda);
            if sum > limit || &(&kappa * &lambda) > max_gamma {
                break;
            }
            if kappa.gcd(&lambda).is_one() && ratio_condition(&kappa, &lambda) {
                let d0 = BigUint::from(minimal_d(&kappa, &lambda));
                let unit = sides_for(&d0, &kappa, &lambda);
                let mut m = BigUint::one();
                loop {
                    let gamma = &unit.2 * &m;
                    if &gamma > max_gamma {
                        break;
                    }
                    let key = (&unit.0 * &m, &unit.1 * &m, gamma);
                    let candidate = (&d0 * &m, kappa.clone(), lambda.clone());
                    witness
                        .entry(key)
                        .and_modify(|w| {
                            if candidate < *w {
                                *w = candidate.clone();
                            }
                        })
                        .or_insert(candidate);
                    m += 1u8;
                }
            }
            lambda += 1u8;
        }
        kappa += 1u8;
    }
    witness
        .into_values()
        .map(|(d, kappa, lambda)| triangle_from_params(&TriangleParams { d, kappa, lambda }))
        .collect()
}

/// Divides the sides by their common gcd.
pub fn primitive_sides(alpha: &BigUint, beta: &BigUint, gamma: &BigUint) -> SideTriple {
    let g = alpha.gcd(beta).gcd(gamma);
    if g.is_zero() {
        return (alpha.clone(), beta.clone(), gamma.clone());
    }
    (alpha / &g, beta / &g, gamma / &g)
}

pub fn primitive_reduce(t: &IntegerTriangle) -> SideTriple {
    primitive_sides(&t.alpha, &t.beta, &t.gamma)
}

/// Common pairwise gcd of `iκλ`, `i(3κ² + λ²)/4` and
/// `i(2κλ + |3κ² - λ²|)/4`, where `i` is the smallest admissible `d`.
/// The gcd is 3 when `3 | λ` and 1 otherwise; any other outcome is
/// reported as [`Error::GcdClassMismatch`].
pub fn gcd_class_check(p: &TriangleParams) -> Result<u32> {
    let i = BigUint::from(minimal_d(&p.kappa, &p.lambda));
    let (a, b, c) = sides_for(&i, &p.kappa, &p.lambda);
    let gcds = [a.gcd(&b), a.gcd(&c), b.gcd(&c)];
    let expected: u32 = if (&p.lambda % 3u8).is_zero() { 3 } else { 1 };
    let all_expected = gcds.iter().all(|g| g.to_u32() == Some(expected));
    if all_expected {
        Ok(expected)
    } else {
        Err(Error::GcdClassMismatch {
            kappa: p.kappa.clone(),
            lambda: p.lambda.clone(),
            gcds,
            expected,
        })
    }
}
