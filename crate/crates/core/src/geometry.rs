//! Exact triangle primitives.
//!
//! Side lengths are exact rationals and are always kept sorted so that
//! `a <= b <= c`; the angle opposite `a` is `A`, opposite `b` is `B` and
//! opposite `c` is `Γ`. Angles and the inradius are irrational in general
//! and are reported as `f64`, angles in degrees.

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::to_f64;

/// Three sorted, strictly triangle-valid rational side lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sides {
    a: BigRational,
    b: BigRational,
    c: BigRational,
}

impl Sides {
    /// Sorts and validates three side lengths. Degenerate triangles
    /// (`a + b == c`) are rejected.
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort();
        let [a, b, c] = v;
        if !a.is_positive() {
            return Err(Error::NonPositiveSide { sides: Box::new([a, b, c]) });
        }
        if &a + &b <= c {
            return Err(Error::TriangleInequalityViolation { sides: Box::new([a, b, c]) });
        }
        Ok(Sides { a, b, c })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            BigRational::from_integer(c.into()),
        )
    }

    /// Smallest side (α).
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Middle side (β).
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// Largest side (γ).
    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn as_array(&self) -> [&BigRational; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [to_f64(&self.a), to_f64(&self.b), to_f64(&self.c)]
    }

    pub fn perimeter(&self) -> BigRational {
        &self.a + &self.b + &self.c
    }

    /// All sides multiplied by a positive rational factor.
    pub fn scaled(&self, k: &BigRational) -> Result<Self> {
        Self::new(&self.a * k, &self.b * k, &self.c * k)
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.c
    }

    /// Sides divided by the largest side, so that `c == 1`.
    fn normalized(&self) -> (BigRational, BigRational) {
        (&self.a / &self.c, &self.b / &self.c)
    }
}

/// Free-function form of [`Sides::new`].
pub fn validate_sides(a: BigRational, b: BigRational, c: BigRational) -> Result<Sides> {
    Sides::new(a, b, c)
}

/// Half the perimeter, exact.
pub fn semiperimeter(s: &Sides) -> BigRational {
    s.perimeter() / BigRational::from_integer(2.into())
}

/// `r = sqrt((τ-a)(τ-b)(τ-c)/τ)`. The radicand is evaluated exactly.
pub fn inradius(s: &Sides) -> f64 {
    let tau = semiperimeter(s);
    let radicand = (&tau - s.a()) * (&tau - s.b()) * (&tau - s.c()) / &tau;
    to_f64(&radicand).sqrt()
}

/// Interior angles in degrees, ascending: `A` opposite `a`, `B` opposite
/// `b`, `Γ` opposite `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angles {
    pub a: f64,
    pub b: f64,
    pub gamma: f64,
}

impl Angles {
    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.gamma]
    }

    pub fn sum(&self) -> f64 {
        self.a + self.b + self.gamma
    }
}

/// Law of Cosines, evaluated as `atan2(4K, b² + c² - a²)` where `K` is the
/// area from Heron's formula. The sides are first divided exactly by the
/// largest one, so similar triangles give bit-identical angles.
pub fn angles_from_sides(s: &Sides) -> Angles {
    let (x, y) = s.normalized();
    let one = BigRational::one();
    let x2 = &x * &x;
    let y2 = &y * &y;
    // 16 K² for sides (x, y, 1)
    let sixteen_k2 = (&x + &y + &one) * (&y + &one - &x) * (&x + &one - &y) * (&x + &y - &one);
    let four_k = to_f64(&sixteen_k2).sqrt();
    let cos_num = |p: &BigRational, q: &BigRational, opp: &BigRational| to_f64(&(p + q - opp));
    let a = four_k.atan2(cos_num(&y2, &one, &x2));
    let b = four_k.atan2(cos_num(&x2, &one, &y2));
    let gamma = four_k.atan2(cos_num(&x2, &y2, &one));
    Angles {
        a: a.to_degrees(),
        b: b.to_degrees(),
        gamma: gamma.to_degrees(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    A,
    B,
    Gamma,
}

/// `tan(V/2) = r / (τ - side opposite V)`.
pub fn half_angle_tan(s: &Sides, vertex: Vertex) -> f64 {
    let tau = semiperimeter(s);
    let opposite = match vertex {
        Vertex::A => s.a(),
        Vertex::B => s.b(),
        Vertex::Gamma => s.c(),
    };
    inradius(s) / to_f64(&(tau - opposite))
}

/// A validated triangle with its derived quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle {
    sides: Sides,
    tau: BigRational,
    angles: Angles,
    inradius: f64,
}

impl Triangle {
    pub fn new(sides: Sides) -> Self {
        let tau = semiperimeter(&sides);
        let angles = angles_from_sides(&sides);
        let inradius = inradius(&sides);
        Triangle {
            sides,
            tau,
            angles,
            inradius,
        }
    }

    pub fn from_sides(a: BigRational, b: BigRational, c: BigRational) -> Result<Self> {
        Sides::new(a, b, c).map(Self::new)
    }

    pub fn sides(&self) -> &Sides {
        &self.sides
    }

    pub fn semiperimeter(&self) -> &BigRational {
        &self.tau
    }

    pub fn angles(&self) -> Angles {
        self.angles
    }

    pub fn inradius(&self) -> f64 {
        self.inradius
    }

    pub fn into_sides(self) -> Sides {
        self.sides
    }
}

/// `β² - (α² + γ² - αγ)`: zero exactly when the middle angle is 60°.
pub fn sixty_degree_residual(s: &Sides) -> BigRational {
    let (a, b, c) = (s.a(), s.b(), s.c());
    b * b - (a * a + c * c - a * c)
}
