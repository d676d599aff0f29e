//! C ABI over the `aptri` library.
//!
//! Every fallible function returns an [`AptriStatus`] and writes its result
//! through an out-pointer. Lists are opaque handles released with
//! [`aptri_list_free`]. The generated header lives in `include/aptri.h`.

use std::ffi::c_char;
use std::panic::{catch_unwind, UnwindSafe};

use aptri::cli::TABLE_PARAMS;
use aptri::exact::{from_f64, to_f64};
use aptri::{
    check_equivalence, construct_from_rho, enumerate_triangles, is_solution, solution_from_params,
    triangle_from_params, DioParams, EquivalenceId, Error, IntegerTriangle, ShapeRatio, Sides,
    TriangleParams,
};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AptriStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NonPositive = 3,
    TriangleInequality = 4,
    RhoOutOfRange = 5,
    NotCoprime = 6,
    RatioCondition = 7,
    Parity = 8,
    Overflow = 9,
    IndexOutOfRange = 10,
    Internal = 11,
}

impl From<Error> for AptriStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::NonPositiveSide { .. } | Error::NonPositive { .. } => Self::NonPositive,
            Error::TriangleInequalityViolation { .. } => Self::TriangleInequality,
            Error::RhoOutOfRange { .. } => Self::RhoOutOfRange,
            Error::NotCoprime { .. } => Self::NotCoprime,
            Error::RatioConditionViolation { .. } => Self::RatioCondition,
            Error::ParityViolation { .. } => Self::Parity,
            Error::ZeroOperand | Error::Parse { .. } => Self::InvalidArgument,
            Error::GcdClassMismatch { .. } => Self::Internal,
        }
    }
}

/// An integer triangle with a 60° middle angle and its generating parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AptriTriangle {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub d: u64,
    pub kappa: u64,
    pub lambda: u64,
    /// ρ = (α + β + γ) / β in lowest terms.
    pub rho_num: u64,
    pub rho_den: u64,
    /// sin A = (sin_a_num / sin_a_den)·√3.
    pub sin_a_num: u64,
    pub sin_a_den: u64,
    pub a_deg: f64,
    pub phi_deg: f64,
    pub gamma_deg: f64,
}

/// A triangle built from β and ρ. Sides are rounded to `double`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AptriConstruction {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// True when the sides are exact rationals of the inputs.
    pub exact: bool,
    pub a_deg: f64,
    pub b_deg: f64,
    pub gamma_deg: f64,
}

/// Both sides of one equivalence checked on a triangle.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AptriEquivalence {
    pub lhs_holds: bool,
    pub rhs_holds: bool,
    pub lhs_residual: f64,
    pub rhs_residual: f64,
}

/// Opaque list of triangles.
pub struct AptriTriangleList {
    items: Vec<AptriTriangle>,
}

fn guard(f: impl FnOnce() -> Result<(), AptriStatus> + UnwindSafe) -> AptriStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => AptriStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => AptriStatus::Internal,
    }
}

/// # Safety
/// `p` must be null or valid for writes.
unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, AptriStatus> {
    unsafe { p.as_mut() }.ok_or(AptriStatus::NullPointer)
}

fn small<T: TryInto<u64>>(x: T) -> Result<u64, AptriStatus> {
    x.try_into().map_err(|_| AptriStatus::Overflow)
}

fn small_int(x: &BigInt) -> Result<u64, AptriStatus> {
    small(x.clone())
}

fn to_record(t: &IntegerTriangle) -> Result<AptriTriangle, AptriStatus> {
    Ok(AptriTriangle {
        alpha: small(&t.alpha)?,
        beta: small(&t.beta)?,
        gamma: small(&t.gamma)?,
        d: small(t.params.d())?,
        kappa: small(t.params.kappa())?,
        lambda: small(t.params.lambda())?,
        rho_num: small_int(t.rho.numer())?,
        rho_den: small_int(t.rho.denom())?,
        sin_a_num: small_int(t.sin_a.numer())?,
        sin_a_den: small_int(t.sin_a.denom())?,
        a_deg: t.a_deg,
        phi_deg: t.phi_deg,
        gamma_deg: t.gamma_deg,
    })
}

fn exact(x: f64) -> Result<BigRational, AptriStatus> {
    from_f64(x).ok_or(AptriStatus::InvalidArgument)
}

/// # Safety
/// `list` must be null or valid for writes.
unsafe fn into_handle(items: Vec<AptriTriangle>, list: *mut *mut AptriTriangleList) -> Result<(), AptriStatus> {
    let slot = unsafe { out(list) }?;
    *slot = Box::into_raw(Box::new(AptriTriangleList { items }));
    Ok(())
}

/// Builds the triangle for parameters `(d, kappa, lambda)`.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_triangle_from_params(
    d: u64,
    kappa: u64,
    lambda: u64,
    result: *mut AptriTriangle,
) -> AptriStatus {
    guard(move || {
        let result = unsafe { out(result) }?;
        let params = TriangleParams::new(d, kappa, lambda)?;
        *result = to_record(&triangle_from_params(&params))?;
        Ok(())
    })
}

/// Sets `*holds` to whether the integer triangle `(a, b, c)` has a 60° angle.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_has_sixty_degree_angle(a: u64, b: u64, c: u64, holds: *mut bool) -> AptriStatus {
    guard(move || {
        let holds = unsafe { out(holds) }?;
        let side = |x: u64| BigRational::from_integer(x.into());
        let s = Sides::new(side(a), side(b), side(c))?;
        *holds = aptri::geometry::sixty_degree_residual(&s).is_zero();
        Ok(())
    })
}

/// Returns every triangle with largest side at most `max_gamma`, one row per
/// side triple, ordered by `(gamma, beta, alpha)`.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_enumerate(max_gamma: u64, list: *mut *mut AptriTriangleList) -> AptriStatus {
    guard(move || {
        if max_gamma == 0 {
            return Err(AptriStatus::InvalidArgument);
        }
        let items = enumerate_triangles(&BigUint::from(max_gamma))
            .iter()
            .map(to_record)
            .collect::<Result<Vec<_>, _>>()?;
        unsafe { into_handle(items, list) }
    })
}

/// Returns the twelve reference triangles.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_table(list: *mut *mut AptriTriangleList) -> AptriStatus {
    guard(move || {
        let items = TABLE_PARAMS
            .iter()
            .map(|&(k, l, d)| to_record(&triangle_from_params(&TriangleParams::new(d, k, l)?)))
            .collect::<Result<Vec<_>, _>>()?;
        unsafe { into_handle(items, list) }
    })
}

/// Number of triangles in `list`, or 0 for null.
///
/// # Safety
/// `list` must be null or a live handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn aptri_list_len(list: *const AptriTriangleList) -> usize {
    unsafe { list.as_ref() }.map_or(0, |l| l.items.len())
}

/// Copies entry `index` of `list` into `*result`.
///
/// # Safety
/// `list` must be null or a live handle returned by this library, and
/// `result` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aptri_list_get(
    list: *const AptriTriangleList,
    index: usize,
    result: *mut AptriTriangle,
) -> AptriStatus {
    guard(move || {
        let list = unsafe { list.as_ref() }.ok_or(AptriStatus::NullPointer)?;
        let result = unsafe { out(result) }?;
        *result = *list.items.get(index).ok_or(AptriStatus::IndexOutOfRange)?;
        Ok(())
    })
}

/// Releases a list. Null is ignored.
///
/// # Safety
/// `list` must be null or a handle returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn aptri_list_free(list: *mut AptriTriangleList) {
    if !list.is_null() {
        drop(unsafe { Box::from_raw(list) });
    }
}

/// Builds the triangle with middle side `beta` and shape ratio `rho`,
/// where 2 < rho <= 3.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_construct(beta: f64, rho: f64, result: *mut AptriConstruction) -> AptriStatus {
    guard(move || {
        let result = unsafe { out(result) }?;
        let built = construct_from_rho(&exact(beta)?, &ShapeRatio::from_f64(rho)?)?;
        let [alpha, beta, gamma] = built.triangle.sides().to_f64();
        let ang = built.triangle.angles();
        *result = AptriConstruction {
            alpha,
            beta,
            gamma,
            exact: built.exact,
            a_deg: ang.a,
            b_deg: ang.b,
            gamma_deg: ang.gamma,
        };
        Ok(())
    })
}

/// Whether `x² + 3y² = z²`.
#[no_mangle]
pub extern "C" fn aptri_is_dio_solution(x: u64, y: u64, z: u64) -> bool {
    is_solution(&x.into(), &y.into(), &z.into())
}

/// Writes the solution of `x² + 3y² = z²` generated by `(d, kappa, lambda)`.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_dio_from_params(
    d: u64,
    kappa: u64,
    lambda: u64,
    x: *mut u64,
    y: *mut u64,
    z: *mut u64,
) -> AptriStatus {
    guard(move || {
        let (x, y, z) = (unsafe { out(x) }?, unsafe { out(y) }?, unsafe { out(z) }?);
        let s = solution_from_params(&DioParams::from_u64(d, kappa, lambda)?);
        (*x, *y, *z) = (small(&s.x)?, small(&s.y)?, small(&s.z)?);
        Ok(())
    })
}

/// Checks equivalence number `id` (1 to 7) on the triangle with sides
/// `a`, `b`, `c` in any order.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_check_equivalence(
    id: u32,
    a: f64,
    b: f64,
    c: f64,
    tolerance: f64,
    result: *mut AptriEquivalence,
) -> AptriStatus {
    guard(move || {
        let result = unsafe { out(result) }?;
        let id = usize::try_from(id)
            .ok()
            .and_then(|i| i.checked_sub(1))
            .and_then(|i| EquivalenceId::ALL.get(i).copied())
            .ok_or(AptriStatus::InvalidArgument)?;
        if !(tolerance >= 0.0 && tolerance.is_finite()) {
            return Err(AptriStatus::InvalidArgument);
        }
        let sides = Sides::new(exact(a)?, exact(b)?, exact(c)?)?;
        let r = check_equivalence(id, &sides, tolerance);
        *result = AptriEquivalence {
            lhs_holds: r.lhs_holds,
            rhs_holds: r.rhs_holds,
            lhs_residual: r.lhs_residual,
            rhs_residual: r.rhs_residual,
        };
        Ok(())
    })
}

/// Shape ratio (perimeter over middle side) of a triangle with sides in
/// any order.
///
/// # Safety
/// Every pointer argument must be null or valid for writes of its type.
#[no_mangle]
pub unsafe extern "C" fn aptri_rho_of(a: f64, b: f64, c: f64, rho: *mut f64) -> AptriStatus {
    guard(move || {
        let rho = unsafe { out(rho) }?;
        *rho = to_f64(&aptri::rho_of(&Sides::new(exact(a)?, exact(b)?, exact(c)?)?));
        Ok(())
    })
}

/// Static, NUL-terminated description of `status`.
#[no_mangle]
pub extern "C" fn aptri_status_message(status: AptriStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        AptriStatus::Ok => b"ok\0",
        AptriStatus::NullPointer => b"null pointer argument\0",
        AptriStatus::InvalidArgument => b"invalid argument\0",
        AptriStatus::NonPositive => b"non-positive value\0",
        AptriStatus::TriangleInequality => b"sides violate the strict triangle inequality\0",
        AptriStatus::RhoOutOfRange => b"shape ratio outside (2, 3]\0",
        AptriStatus::NotCoprime => b"kappa and lambda are not coprime\0",
        AptriStatus::RatioCondition => b"need lambda <= kappa or lambda >= 3 kappa\0",
        AptriStatus::Parity => b"d violates the parity rule\0",
        AptriStatus::Overflow => b"result does not fit in 64 bits\0",
        AptriStatus::IndexOutOfRange => b"index out of range\0",
        AptriStatus::Internal => b"internal error\0",
    };
    text.as_ptr().cast()
}
