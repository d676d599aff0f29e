//! Positive-integer solutions of `x² + 3y² = z²`.
//!
//! Every solution has the form
//!
//! ```text
//! x = d·|3κ² - λ²|/2,   y = dκλ,   z = d(3κ² + λ²)/2
//! ```
//!
//! with `gcd(κ, λ) = 1`. When `κ` and `λ` are both odd any `d` works;
//! when their parities differ `d` must be even. [`enumerate_via_params`]
//! sweeps this family up to a bound on `z`, and [`brute_force_solutions`]
//! is an independent exhaustive scan used to check it.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::biguint;

/// `(x, y, z)` with `x² + 3y² = z²`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiophantineSolution {
    pub x: BigUint,
    pub y: BigUint,
    pub z: BigUint,
}

impl DiophantineSolution {
    pub fn new(x: BigUint, y: BigUint, z: BigUint) -> Option<Self> {
        let s = DiophantineSolution { x, y, z };
        s.holds().then_some(s)
    }

    pub fn holds(&self) -> bool {
        !self.x.is_zero()
            && !self.y.is_zero()
            && &self.x * &self.x + 3u8 * &self.y * &self.y == &self.z * &self.z
    }

    pub fn from_u64(x: u64, y: u64, z: u64) -> Option<Self> {
        Self::new(x.into(), y.into(), z.into())
    }
}

/// Validated `(d, κ, λ)` for the solution formulas above.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DioParams {
    d: BigUint,
    kappa: BigUint,
    lambda: BigUint,
}

impl DioParams {
    pub fn new(d: BigInt, kappa: BigInt, lambda: BigInt) -> Result<Self> {
        let (d, kappa, lambda) = positive_triple(d, kappa, lambda)?;
        if !kappa.gcd(&lambda).is_one() {
            return Err(Error::NotCoprime { kappa, lambda });
        }
        // κ, λ coprime: both odd, or of mixed parity.
        if kappa.is_odd() != lambda.is_odd() && d.is_odd() {
            return Err(Error::ParityViolation {
                d,
                kappa,
                lambda,
                rule: "kappa + lambda odd requires d even",
            });
        }
        Ok(DioParams { d, kappa, lambda })
    }

    pub fn from_u64(d: u64, kappa: u64, lambda: u64) -> Result<Self> {
        Self::new(d.into(), kappa.into(), lambda.into())
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn kappa(&self) -> &BigUint {
        &self.kappa
    }

    pub fn lambda(&self) -> &BigUint {
        &self.lambda
    }
}

/// Checks that all three parameters are positive and converts them.
pub(crate) fn positive_triple(d: BigInt, kappa: BigInt, lambda: BigInt) -> Result<(BigUint, BigUint, BigUint)> {
    if !(d.is_positive() && kappa.is_positive() && lambda.is_positive()) {
        return Err(Error::NonPositive { d, kappa, lambda });
    }
    Ok((
        biguint(&d).expect("positive"),
        biguint(&kappa).expect("positive"),
        biguint(&lambda).expect("positive"),
    ))
}

/// `|3κ² - λ²|` and `3κ² + λ²`.
pub(crate) fn quadratic_forms(kappa: &BigUint, lambda: &BigUint) -> (BigUint, BigUint) {
    let three_k2 = 3u8 * kappa * kappa;
    let l2 = lambda * lambda;
    let diff = if three_k2 >= l2 { &three_k2 - &l2 } else { &l2 - &three_k2 };
    (diff, three_k2 + l2)
}

pub fn solution_from_params(p: &DioParams) -> DiophantineSolution {
    let (diff, sum) = quadratic_forms(&p.kappa, &p.lambda);
    let two = BigUint::from(2u8);
    // 3κ² ≠ λ² for integers, so x > 0.
    DiophantineSolution {
        x: &p.d * diff / &two,
        y: &p.d * &p.kappa * &p.lambda,
        z: &p.d * sum / &two,
    }
}

/// True iff `x, y, z > 0` and `x² + 3y² = z²`.
pub fn is_solution(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    x.is_positive() && y.is_positive() && z.is_positive() && x * x + 3 * y * y == z * z
}

/// Every solution with `z <= z_max`, by scanning `(y, z)` and testing
/// whether `z² - 3y²` is a perfect square.
pub fn brute_force_solutions(z_max: u64) -> BTreeSet<DiophantineSolution> {
    let mut out = BTreeSet::new();
    for z in 2..=z_max {
        let z = BigUint::from(z);
        let z2 = &z * &z;
        let mut y = BigUint::one();
        loop {
            let three_y2 = 3u8 * &y * &y;
            if three_y2 >= z2 {
                break;
            }
            let rest = &z2 - three_y2;
            let x = rest.sqrt();
            if &x * &x == rest {
                out.insert(DiophantineSolution {
                    x,
                    y: y.clone(),
                    z: z.clone(),
                });
            }
            y += 1u8;
        }
    }
    out
}

/// All solutions with `z <= z_max` produced by the parametric formulas,
/// deduplicated on `(x, y, z)`.
///
/// Since `z = d(3κ² + λ²)/2 >= (3κ² + λ²)/2`, it suffices to sweep
/// `3κ² + λ² <= 2·z_max`, and for each coprime pair every multiple of the
/// smallest admissible `d` up to the bound.
pub fn enumerate_via_params(z_max: &BigUint) -> BTreeSet<DiophantineSolution> {
    let mut out = BTreeSet::new();
    let limit = 2u8 * z_max;
    let mut kappa = BigUint::one();
    while 3u8 * &kappa * &kappa < limit {
        let mut lambda = BigUint::one();
        loop {
            let (_, sum) = quadratic_forms(&kappa, &lambda);
            if sum > limit {
                break;
            }
            if kappa.gcd(&lambda).is_one() {
                let step = if kappa.is_odd() && lambda.is_odd() { 1u8 } else { 2u8 };
                let base = DioParams {
                    d: step.into(),
                    kappa: kappa.clone(),
                    lambda: lambda.clone(),
                };
                let unit = solution_from_params(&base);
                let mut m = BigUint::one();
                loop {
                    let z = &unit.z * &m;
                    if &z > z_max {
                        break;
                    }
                    out.insert(DiophantineSolution {
                        x: &unit.x * &m,
                        y: &unit.y * &m,
                        z,
                    });
                    m += 1u8;
                }
            }
            lambda += 1u8;
        }
        kappa += 1u8;
    }
    out
}
