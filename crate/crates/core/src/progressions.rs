//! Progression predicates and the seven angle/side equivalences.
//!
//! Every equivalence is checked by evaluating both of its sides on their
//! own: side conditions are decided on the exact rational sides, angle
//! conditions on the floating angles from [`angles_from_sides`]. The
//! report therefore says whether the stated equivalence actually held for
//! the given triangle rather than assuming it.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::geometry::{angles_from_sides, Sides};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProgressionKind {
    Arithmetic,
    Geometric,
    Harmonic,
}

impl ProgressionKind {
    pub const ALL: [ProgressionKind; 3] = [
        ProgressionKind::Arithmetic,
        ProgressionKind::Geometric,
        ProgressionKind::Harmonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProgressionKind::Arithmetic => "arithmetic",
            ProgressionKind::Geometric => "geometric",
            ProgressionKind::Harmonic => "harmonic",
        }
    }
}

impl fmt::Display for ProgressionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn scaled(raw: f64, operands: &[f64]) -> f64 {
    let scale = operands.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        0.0
    } else {
        raw / scale
    }
}

/// Residual of the progression condition divided by its largest operand.
///
/// Arithmetic: `2x₂ - x₁ - x₃`; geometric: `x₂² - x₁x₃`; harmonic: the
/// arithmetic residual of the reciprocals.
pub fn progression_residual(kind: ProgressionKind, x1: f64, x2: f64, x3: f64) -> Result<f64> {
    match kind {
        ProgressionKind::Arithmetic => Ok(scaled(2.0 * x2 - x1 - x3, &[2.0 * x2, x1, x3])),
        ProgressionKind::Geometric => {
            if x1 == 0.0 || x2 == 0.0 || x3 == 0.0 {
                return Err(Error::ZeroOperand);
            }
            Ok(scaled(x2 * x2 - x1 * x3, &[x2 * x2, x1 * x3]))
        }
        ProgressionKind::Harmonic => {
            if x1 == 0.0 || x2 == 0.0 || x3 == 0.0 {
                return Err(Error::ZeroOperand);
            }
            progression_residual(ProgressionKind::Arithmetic, 1.0 / x1, 1.0 / x2, 1.0 / x3)
        }
    }
}

pub fn is_progression(kind: ProgressionKind, x1: f64, x2: f64, x3: f64, tol: f64) -> Result<bool> {
    Ok(progression_residual(kind, x1, x2, x3)?.abs() <= tol)
}

fn scaled_exact(raw: BigRational, operands: &[BigRational]) -> BigRational {
    let scale = operands
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    if scale.is_zero() {
        BigRational::zero()
    } else {
        raw / scale
    }
}

/// Exact counterpart of [`progression_residual`] for rational triples.
pub fn exact_progression_residual(
    kind: ProgressionKind,
    x1: &BigRational,
    x2: &BigRational,
    x3: &BigRational,
) -> Result<BigRational> {
    let two = BigRational::from_integer(2.into());
    match kind {
        ProgressionKind::Arithmetic => {
            let twice = &two * x2;
            Ok(scaled_exact(&twice - x1 - x3, &[twice, x1.clone(), x3.clone()]))
        }
        ProgressionKind::Geometric => {
            if x1.is_zero() || x2.is_zero() || x3.is_zero() {
                return Err(Error::ZeroOperand);
            }
            let sq = x2 * x2;
            let prod = x1 * x3;
            Ok(scaled_exact(&sq - &prod, &[sq, prod]))
        }
        ProgressionKind::Harmonic => {
            if x1.is_zero() || x2.is_zero() || x3.is_zero() {
                return Err(Error::ZeroOperand);
            }
            exact_progression_residual(ProgressionKind::Arithmetic, &x1.recip(), &x2.recip(), &x3.recip())
        }
    }
}

/// Identifies one of the seven equivalences, `i` through `vii`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquivalenceId {
    /// Sides arithmetic ⇔ cot(A/2), cot(B/2), cot(Γ/2) arithmetic.
    I,
    /// Sides arithmetic ⇔ tan(A/2)·tan(Γ/2) = 1/3.
    II,
    /// Squared sides arithmetic ⇔ cot A, cot B, cot Γ arithmetic.
    III,
    /// Angles and sides both arithmetic ⇔ equilateral.
    IV,
    /// Angles arithmetic and sides geometric ⇔ equilateral.
    V,
    /// Right triangle with arithmetic sides ⇔ similar to 3-4-5.
    VI,
    /// Sides harmonic ⇔ sin²(A/2), sin²(B/2), sin²(Γ/2) harmonic.
    VII,
}

impl EquivalenceId {
    pub const ALL: [EquivalenceId; 7] = [
        EquivalenceId::I,
        EquivalenceId::II,
        EquivalenceId::III,
        EquivalenceId::IV,
        EquivalenceId::V,
        EquivalenceId::VI,
        EquivalenceId::VII,
    ];

    pub fn label(self) -> &'static str {
        match self {
            EquivalenceId::I => "i",
            EquivalenceId::II => "ii",
            EquivalenceId::III => "iii",
            EquivalenceId::IV => "iv",
            EquivalenceId::V => "v",
            EquivalenceId::VI => "vi",
            EquivalenceId::VII => "vii",
        }
    }

    /// Short statement of the two sides, for reports.
    pub fn statement(self) -> (&'static str, &'static str) {
        match self {
            EquivalenceId::I => ("sides arithmetic", "cot half-angles arithmetic"),
            EquivalenceId::II => ("sides arithmetic", "tan(A/2)tan(Gamma/2) = 1/3"),
            EquivalenceId::III => ("squared sides arithmetic", "cot A, cot B, cot Gamma arithmetic"),
            EquivalenceId::IV => ("angles and sides arithmetic", "equilateral"),
            EquivalenceId::V => ("angles arithmetic and sides geometric", "equilateral"),
            EquivalenceId::VI => ("right triangle with arithmetic sides", "similar to 3-4-5"),
            EquivalenceId::VII => ("sides harmonic", "sin^2 half-angles harmonic"),
        }
    }
}

impl fmt::Display for EquivalenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for EquivalenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EquivalenceId::ALL
            .into_iter()
            .find(|id| id.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "equivalence id",
                input: s.to_string(),
            })
    }
}

/// Outcome of evaluating both sides of one equivalence on one triangle.
/// Residuals are relative (divided by the largest operand).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceReport {
    pub equivalence_id: EquivalenceId,
    pub lhs_holds: bool,
    pub rhs_holds: bool,
    pub lhs_residual: f64,
    pub rhs_residual: f64,
    pub tolerance: f64,
}

impl EquivalenceReport {
    fn new(equivalence_id: EquivalenceId, lhs_residual: f64, rhs_residual: f64, tolerance: f64) -> Self {
        EquivalenceReport {
            equivalence_id,
            lhs_holds: lhs_residual.abs() <= tolerance,
            rhs_holds: rhs_residual.abs() <= tolerance,
            lhs_residual,
            rhs_residual,
            tolerance,
        }
    }

    /// Both sides agree, i.e. the equivalence held on this triangle.
    pub fn consistent(&self) -> bool {
        self.lhs_holds == self.rhs_holds
    }
}

/// Conjunction of several residual conditions: the one farthest from zero.
fn worst(residuals: &[f64]) -> f64 {
    residuals
        .iter()
        .copied()
        .fold(0.0f64, |m, r| if r.abs() > m.abs() { r } else { m })
}

fn exact(kind: ProgressionKind, x: [&BigRational; 3]) -> f64 {
    // Sides are positive, so the zero-operand error cannot occur.
    to_f64(&exact_progression_residual(kind, x[0], x[1], x[2]).expect("sides are nonzero"))
}

fn float(kind: ProgressionKind, x: [f64; 3]) -> f64 {
    progression_residual(kind, x[0], x[1], x[2]).unwrap_or(f64::INFINITY)
}

fn equilateral_residual(s: &Sides) -> f64 {
    to_f64(&((s.c() - s.a()) / s.c()))
}

fn ratio_residual(x: &BigRational, y: &BigRational) -> BigRational {
    scaled_exact(x - y, &[x.clone(), y.clone()])
}

pub fn check_equivalence(id: EquivalenceId, s: &Sides, tol: f64) -> EquivalenceReport {
    use ProgressionKind::*;

    let angles = angles_from_sides(s).as_array();
    let rad = angles.map(f64::to_radians);
    let sides = s.as_array();

    let (lhs, rhs) = match id {
        EquivalenceId::I => {
            let cot_half = rad.map(|x| 1.0 / (x / 2.0).tan());
            (exact(Arithmetic, sides), float(Arithmetic, cot_half))
        }
        EquivalenceId::II => {
            let product = (rad[0] / 2.0).tan() * (rad[2] / 2.0).tan();
            let third = 1.0 / 3.0;
            (exact(Arithmetic, sides), scaled(product - third, &[product, third]))
        }
        EquivalenceId::III => {
            let squares = sides.map(|x| x * x);
            let cot = rad.map(|x| x.cos() / x.sin());
            (
                exact(Arithmetic, [&squares[0], &squares[1], &squares[2]]),
                float(Arithmetic, cot),
            )
        }
        EquivalenceId::IV => (
            worst(&[float(Arithmetic, angles), exact(Arithmetic, sides)]),
            equilateral_residual(s),
        ),
        EquivalenceId::V => (
            worst(&[float(Arithmetic, angles), exact(Geometric, sides)]),
            equilateral_residual(s),
        ),
        EquivalenceId::VI => {
            let (a, b, c) = (s.a(), s.b(), s.c());
            let right = to_f64(&ratio_residual(&(c * c), &(a * a + b * b)));
            let k = |n: i64| BigRational::from_integer(n.into());
            let similar = worst(&[
                to_f64(&ratio_residual(&(k(4) * a), &(k(3) * b))),
                to_f64(&ratio_residual(&(k(5) * a), &(k(3) * c))),
            ]);
            (worst(&[right, exact(Arithmetic, sides)]), similar)
        }
        EquivalenceId::VII => {
            let sin2_half = rad.map(|x| (x / 2.0).sin().powi(2));
            (exact(Harmonic, sides), float(Harmonic, sin2_half))
        }
    };
    EquivalenceReport::new(id, lhs, rhs, tol)
}

/// Which progressions a rational triple forms, decided exactly.
pub fn exact_progressions(x: [&BigRational; 3]) -> Vec<(ProgressionKind, BigRational)> {
    ProgressionKind::ALL
        .into_iter()
        .filter_map(|k| exact_progression_residual(k, x[0], x[1], x[2]).ok().map(|r| (k, r)))
        .collect()
}
