//! Triangles whose angles form an arithmetic progression.
//!
//! A triangle's angles are in arithmetic progression exactly when its
//! middle angle is 60°. This crate builds such triangles from a shape
//! ratio, generates every integer-sided one from a three-parameter family
//! tied to `x² + 3y² = z²`, checks both families against brute-force
//! scans, and evaluates classic side/angle progression equivalences.
//!
//! ```
//! use aptri::{enumerate_triangles, triangle_from_params, TriangleParams};
//! use num_bigint::BigUint;
//!
//! let t = triangle_from_params(&TriangleParams::new(4, 2, 1)?);
//! assert_eq!(t.sides(), (8u8.into(), 13u8.into(), 15u8.into()));
//! assert_eq!(format!("{} {}", t.rho, t.sin_a), "36/13 4√3/13");
//!
//! let all = enumerate_triangles(&BigUint::from(100u32));
//! assert!(all.iter().any(|t| t.sides() == (5u8.into(), 7u8.into(), 8u8.into())));
//! # Ok::<(), aptri::Error>(())
//! ```

pub mod cli;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod integer_triangles;
pub mod progressions;
pub mod rho;

pub use diophantine::{
    brute_force_solutions, enumerate_via_params, is_solution, solution_from_params, DioParams,
    DiophantineSolution,
};
pub use error::{Error, Result, RhoBound};
pub use geometry::{
    angles_from_sides, half_angle_tan, inradius, semiperimeter, validate_sides, Angles, Sides,
    Triangle, Vertex,
};
pub use integer_triangles::{
    brute_force_triangles, enumerate_triangles, gcd_class_check, primitive_reduce,
    triangle_from_params, validate_params, IntegerTriangle, SideTriple, SqrtThreeMultiple,
    TriangleParams,
};
pub use progressions::{
    check_equivalence, is_progression, EquivalenceId, EquivalenceReport, ProgressionKind,
    DEFAULT_TOLERANCE,
};
pub use rho::{construct_from_rho, rho_of, sines_from_rho, Construction, ShapeRatio};
