//! Triangles with a 60° middle angle, built from the middle side `β` and
//! the shape ratio `ρ = perimeter / β`.
//!
//! For `2 < ρ <= 3` the outer sides are
//!
//! ```text
//! α = (β/2)·[ρ - 1 - √((3-ρ)(1+ρ)/3)]
//! γ = (β/2)·[ρ - 1 + √((3-ρ)(1+ρ)/3)]
//! ```
//!
//! The radicand is computed exactly. When it is a rational square the
//! triangle is exact; otherwise the root is rounded once to `f64` and the
//! sides carry that (exactly representable) value.

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result, RhoBound};
use crate::exact::{exact_rational_sqrt, from_f64, to_f64};
use crate::geometry::{Sides, Triangle};

/// A validated shape ratio, `2 < ρ <= 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeRatio(BigRational);

impl ShapeRatio {
    pub fn new(rho: BigRational) -> Result<Self> {
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        if rho <= two {
            return Err(Error::RhoOutOfRange {
                rho,
                bound: RhoBound::Lower,
            });
        }
        if rho > three {
            return Err(Error::RhoOutOfRange {
                rho,
                bound: RhoBound::Upper,
            });
        }
        Ok(ShapeRatio(rho))
    }

    /// Takes the exact binary value of `rho`.
    pub fn from_f64(rho: f64) -> Result<Self> {
        let exact = from_f64(rho).ok_or(Error::Parse {
            what: "finite shape ratio",
            input: rho.to_string(),
        })?;
        Self::new(exact)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.0)
    }

    /// `(3 - ρ)(1 + ρ)/3`, exact.
    fn radicand(&self) -> BigRational {
        let one = BigRational::one();
        let three = BigRational::from_integer(3.into());
        (&three - &self.0) * (&one + &self.0) / three
    }

    /// `√((3 - ρ)(1 + ρ)/3)`, exact when the radicand is a rational square.
    fn root(&self) -> (BigRational, bool) {
        let radicand = self.radicand();
        match exact_rational_sqrt(&radicand) {
            Some(r) => (r, true),
            None => {
                let approx = to_f64(&radicand).sqrt();
                (from_f64(approx).expect("finite root"), false)
            }
        }
    }
}

/// Result of [`construct_from_rho`].
#[derive(Debug, Clone, PartialEq)]
pub struct Construction {
    pub triangle: Triangle,
    /// True when no rounding was involved and the sides are exact.
    pub exact: bool,
}

/// Builds the unique triangle with middle side `beta`, `B = 60°`, and the
/// given shape ratio.
pub fn construct_from_rho(beta: &BigRational, rho: &ShapeRatio) -> Result<Construction> {
    if !beta.is_positive() {
        return Err(Error::NonPositiveSide {
            sides: Box::new([beta.clone(), beta.clone(), beta.clone()]),
        });
    }
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());

    let (root, exact) = rho.root();
    // α + γ and α·γ; taking α = αγ/γ avoids cancellation as ρ → 2.
    let sum = beta * (rho.value() - &one);
    let product = beta * beta * rho.value() * (rho.value() - &two) / &three;
    let gamma = beta * (rho.value() - &one + &root) / &two;
    let alpha = if exact {
        &sum - &gamma
    } else {
        &product / &gamma
    };
    let sides = Sides::new(alpha, beta.clone(), gamma)?;
    Ok(Construction {
        triangle: Triangle::new(sides),
        exact,
    })
}

/// `sin A` and `sin Γ` of the 60° triangle with shape ratio `ρ`, from
/// `sin A = (√3/4)·[ρ - 1 - √((3-ρ)(1+ρ)/3)]` and the analogous `+` form.
pub fn sines_from_rho(rho: &ShapeRatio) -> (f64, f64) {
    let r = rho.to_f64();
    let root = to_f64(&rho.radicand()).sqrt();
    let k = 3f64.sqrt() / 4.0;
    let sin_gamma = k * (r - 1.0 + root);
    // sin A · sin Γ = (3/16)·ρ(ρ - 2)·4/3 = ρ(ρ - 2)/4, stable near ρ = 2.
    let product = to_f64(&(rho.value() * (rho.value() - BigRational::from_integer(2.into())))) / 4.0;
    let sin_a = if root == 0.0 { k * (r - 1.0) } else { product / sin_gamma };
    (sin_a, sin_gamma)
}

/// `ρ = (a + b + c) / b`, exact.
pub fn rho_of(s: &Sides) -> BigRational {
    s.perimeter() / s.b()
}

/// Whether the exact `ρ` of a triangle lies in `(2, 3]`.
pub fn in_window(rho: &BigRational) -> bool {
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    *rho > two && *rho <= three
}
