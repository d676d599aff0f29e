//! The `aptri` command-line front end.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when a generated
//! value fails one of its own invariants.

mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::Error;
use crate::exact::{parse_rational, to_f64};
use crate::geometry::{angles_from_sides, Sides};
use crate::integer_triangles::{
    enumerate_triangles, has_sixty_degree_angle, minimal_d, triangle_from_params, validate_params,
    IntegerTriangle,
};
use crate::progressions::{
    check_equivalence, exact_progression_residual, progression_residual, EquivalenceId,
    ProgressionKind, DEFAULT_TOLERANCE,
};
use crate::rho::{construct_from_rho, in_window, ShapeRatio};

pub use output::{format_sig, Cell, Format, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

/// Column order of every triangle record.
pub const RECORD_HEADER: [&str; 13] = [
    "kappa", "lambda", "d", "alpha", "beta", "gamma", "rho_num", "rho_den", "sinA_num", "sinA_den",
    "A_deg", "phi_deg", "Gamma_deg",
];

/// `(κ, λ, d)` of the twelve reference triangles, in their published order.
pub const TABLE_PARAMS: [(u64, u64, u64); 12] = [
    (1, 1, 1),
    (2, 1, 4),
    (3, 1, 1),
    (4, 1, 4),
    (5, 1, 1),
    (3, 2, 4),
    (5, 2, 4),
    (1, 3, 1),
    (4, 3, 4),
    (5, 3, 1),
    (1, 4, 4),
    (1, 5, 1),
];

#[derive(Debug, Parser)]
#[command(name = "aptri", version, about = "Triangles whose angles are in arithmetic progression")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The twelve reference triangles with 1 <= kappa, lambda <= 5.
    Table,
    /// All valid parameter triples within the given bounds.
    Generate {
        #[arg(long)]
        kappa_max: BigInt,
        #[arg(long)]
        lambda_max: BigInt,
        /// Values of d to try. Defaults to 1 for odd/odd pairs and 4 otherwise.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        d_list: Option<Vec<BigInt>>,
    },
    /// Every integer triangle with largest side at most MAX_GAMMA.
    Enumerate {
        #[arg(long)]
        max_gamma: BigInt,
    },
    /// Check whether an integer triangle has a 60° middle angle.
    Verify {
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        #[arg(allow_negative_numbers = true)]
        b: BigInt,
        #[arg(allow_negative_numbers = true)]
        c: BigInt,
    },
    /// Progressions formed by a triangle's sides and angles, and each
    /// side/angle equivalence evaluated on both sides.
    Classify {
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
        #[arg(allow_negative_numbers = true)]
        c: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Build the 60° triangle with middle side BETA and shape ratio RHO.
    Construct {
        #[arg(long)]
        beta: String,
        #[arg(long, allow_negative_numbers = true)]
        rho: String,
    },
}

/// A failure with its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }

    fn invariant(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVARIANT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::invalid(format!("{}: {e}", e.kind()))
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Checks a generated triangle and turns it into a record row.
pub fn record_row(t: &IntegerTriangle) -> CliResult<Vec<Cell>> {
    if !has_sixty_degree_angle(&t.alpha, &t.beta, &t.gamma) {
        return Err(CliError::invariant(format!(
            "generated sides ({}, {}, {}) do not satisfy beta^2 = alpha^2 + gamma^2 - alpha*gamma",
            t.alpha, t.beta, t.gamma
        )));
    }
    if !(t.alpha <= t.beta && t.beta <= t.gamma && &t.alpha + &t.beta > t.gamma) || !in_window(&t.rho) {
        return Err(CliError::invariant(format!(
            "generated triangle ({}, {}, {}) is not ordered, not a triangle, or has rho = {} outside (2, 3]",
            t.alpha, t.beta, t.gamma, t.rho
        )));
    }
    let p = &t.params;
    Ok(vec![
        Cell::int(p.kappa()),
        Cell::int(p.lambda()),
        Cell::int(p.d()),
        Cell::int(&t.alpha),
        Cell::int(&t.beta),
        Cell::int(&t.gamma),
        Cell::int(t.rho.numer()),
        Cell::int(t.rho.denom()),
        Cell::int(t.sin_a.numer()),
        Cell::int(t.sin_a.denom()),
        Cell::real(t.a_deg),
        Cell::real(t.phi_deg),
        Cell::real(t.gamma_deg),
    ])
}

fn record_table<'a>(triangles: impl IntoIterator<Item = &'a IntegerTriangle>) -> CliResult<Table> {
    let mut table = Table::new(RECORD_HEADER.to_vec());
    for t in triangles {
        table.push(record_row(t)?);
    }
    Ok(table)
}

pub fn cmd_table() -> CliResult<Table> {
    let triangles: Vec<IntegerTriangle> = TABLE_PARAMS
        .iter()
        .map(|&(kappa, lambda, d)| {
            validate_params(d.into(), kappa.into(), lambda.into())
                .map(|p| triangle_from_params(&p))
                .map_err(|e| CliError::invariant(e.to_string()))
        })
        .collect::<CliResult<_>>()?;
    record_table(&triangles)
}

fn positive(name: &str, x: &BigInt) -> CliResult<BigUint> {
    x.to_biguint()
        .filter(|v| *v >= BigUint::from(1u8))
        .ok_or_else(|| CliError::invalid(format!("{name} must be a positive integer, got {x}")))
}

pub fn cmd_generate(kappa_max: &BigInt, lambda_max: &BigInt, d_list: Option<&[BigInt]>) -> CliResult<Table> {
    let kappa_max = positive("--kappa-max", kappa_max)?;
    let lambda_max = positive("--lambda-max", lambda_max)?;
    let d_list: Option<Vec<BigUint>> = match d_list {
        Some(list) => {
            let mut out: Vec<BigUint> = Vec::new();
            for d in list {
                let d = positive("--d-list entry", d)?;
                if !out.contains(&d) {
                    out.push(d);
                }
            }
            Some(out)
        }
        None => None,
    };

    let mut triangles = Vec::new();
    let mut kappa = BigUint::from(1u8);
    while kappa <= kappa_max {
        let mut lambda = BigUint::from(1u8);
        while lambda <= lambda_max {
            let ds = match &d_list {
                Some(list) => list.clone(),
                None => vec![BigUint::from(minimal_d(&kappa, &lambda))],
            };
            for d in ds {
                if let Ok(p) = validate_params(d.into(), kappa.clone().into(), lambda.clone().into()) {
                    triangles.push(triangle_from_params(&p));
                }
            }
            lambda += 1u8;
        }
        kappa += 1u8;
    }
    record_table(&triangles)
}

pub fn cmd_enumerate(max_gamma: &BigInt) -> CliResult<Table> {
    let max_gamma = positive("--max-gamma", max_gamma)?;
    record_table(&enumerate_triangles(&max_gamma))
}

pub const VERIFY_HEADER: [&str; 13] = [
    "alpha",
    "beta",
    "gamma",
    "arithmetic_angles",
    "cosine_residual",
    "rho_num",
    "rho_den",
    "sinA_num",
    "sinA_den",
    "A_deg",
    "B_deg",
    "phi_deg",
    "Gamma_deg",
];

pub fn cmd_verify(a: &BigInt, b: &BigInt, c: &BigInt) -> CliResult<Table> {
    let sides = Sides::new(
        BigRational::from_integer(a.clone()),
        BigRational::from_integer(b.clone()),
        BigRational::from_integer(c.clone()),
    )?;
    let [alpha, beta, gamma] = sides.as_array().map(|x| x.to_integer());
    let residual = &beta * &beta - (&alpha * &alpha + &gamma * &gamma - &alpha * &gamma);
    let is_ap = residual == BigInt::from(0);

    let mut row = vec![
        Cell::int(&alpha),
        Cell::int(&beta),
        Cell::int(&gamma),
        Cell::Bool(is_ap),
        Cell::int(&residual),
    ];
    if is_ap {
        let rho = BigRational::new(&alpha + &beta + &gamma, beta.clone());
        // sin A = α·sin 60° / β = (α / 2β)·√3
        let sin_a = BigRational::new(alpha.clone(), 2 * &beta);
        let angles = angles_from_sides(&sides);
        let a_deg = if alpha == gamma {
            60.0
        } else {
            (to_f64(&sin_a) * 3f64.sqrt()).min(1.0).asin().to_degrees()
        };
        if !in_window(&rho) {
            return Err(CliError::invariant(format!("rho = {rho} outside (2, 3]")));
        }
        row.extend([
            Cell::int(rho.numer()),
            Cell::int(rho.denom()),
            Cell::int(sin_a.numer()),
            Cell::int(sin_a.denom()),
            Cell::real(a_deg),
            Cell::real(angles.b),
            Cell::real(60.0 - a_deg),
            Cell::real(120.0 - a_deg),
        ]);
    } else {
        row.extend(std::iter::repeat_n(Cell::Null, 8));
    }
    let mut table = Table::new(VERIFY_HEADER.to_vec());
    table.push(row);
    Ok(table)
}

pub const CLASSIFY_HEADER: [&str; 7] = [
    "check",
    "lhs_holds",
    "lhs_residual",
    "rhs_holds",
    "rhs_residual",
    "tolerance",
    "description",
];

pub fn cmd_classify(a: &str, b: &str, c: &str, tol: f64) -> CliResult<Table> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::invalid(format!("--tol must be a nonnegative number, got {tol}")));
    }
    let sides = Sides::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?)?;
    let mut table = Table::new(CLASSIFY_HEADER.to_vec());

    let [x, y, z] = sides.as_array();
    let squares = [x * x, y * y, z * z];
    let angles = angles_from_sides(&sides).as_array();
    for kind in ProgressionKind::ALL {
        let exact_rows = [
            ("sides", exact_progression_residual(kind, x, y, z)),
            (
                "squared_sides",
                exact_progression_residual(kind, &squares[0], &squares[1], &squares[2]),
            ),
        ];
        for (name, residual) in exact_rows {
            let r = to_f64(&residual?);
            table.push(progression_row(name, kind, r, tol));
        }
        let r = progression_residual(kind, angles[0], angles[1], angles[2])?;
        table.push(progression_row("angles", kind, r, tol));
    }

    for id in EquivalenceId::ALL {
        let report = check_equivalence(id, &sides, tol);
        let (lhs, rhs) = id.statement();
        table.push(vec![
            Cell::Str(format!("equivalence_{id}")),
            Cell::Bool(report.lhs_holds),
            Cell::real(report.lhs_residual),
            Cell::Bool(report.rhs_holds),
            Cell::real(report.rhs_residual),
            Cell::real(tol),
            Cell::Str(format!("{lhs} <=> {rhs}")),
        ]);
    }
    Ok(table)
}

fn progression_row(sequence: &str, kind: ProgressionKind, residual: f64, tol: f64) -> Vec<Cell> {
    vec![
        Cell::Str(format!("{sequence}_{kind}")),
        Cell::Bool(residual.abs() <= tol),
        Cell::real(residual),
        Cell::Null,
        Cell::Null,
        Cell::real(tol),
        Cell::Str(format!("{} in {kind} progression", sequence.replace('_', " "))),
    ]
}

pub const CONSTRUCT_HEADER: [&str; 8] = ["alpha", "beta", "gamma", "exact", "A_deg", "B_deg", "Gamma_deg", "rho"];

fn side_text(x: &BigRational, exact: bool) -> String {
    if exact {
        x.to_string()
    } else {
        format_sig(to_f64(x), 17)
    }
}

pub fn cmd_construct(beta: &str, rho: &str) -> CliResult<Table> {
    let beta = parse_rational(beta)?;
    let rho = ShapeRatio::new(parse_rational(rho)?)?;
    let built = construct_from_rho(&beta, &rho)?;
    let sides = built.triangle.sides();
    let angles = built.triangle.angles();
    let mut table = Table::new(CONSTRUCT_HEADER.to_vec());
    table.push(vec![
        Cell::Str(side_text(sides.a(), built.exact)),
        Cell::Str(side_text(sides.b(), true)),
        Cell::Str(side_text(sides.c(), built.exact)),
        Cell::Bool(built.exact),
        Cell::real(angles.a),
        Cell::real(angles.b),
        Cell::real(angles.gamma),
        Cell::Str(rho.value().to_string()),
    ]);
    Ok(table)
}

pub fn execute(command: &Command) -> CliResult<Table> {
    match command {
        Command::Table => cmd_table(),
        Command::Generate {
            kappa_max,
            lambda_max,
            d_list,
        } => cmd_generate(kappa_max, lambda_max, d_list.as_deref()),
        Command::Enumerate { max_gamma } => cmd_enumerate(max_gamma),
        Command::Verify { a, b, c } => cmd_verify(a, b, c),
        Command::Classify { a, b, c, tol } => cmd_classify(a, b, c, *tol),
        Command::Construct { beta, rho } => cmd_construct(beta, rho),
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };

    let table = match execute(&cli.command) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            return e.code;
        }
    };

    let written = match &cli.output {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            table.write(cli.format, &mut w)?;
            w.flush()
        }),
        None => table.write(cli.format, stdout),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            EXIT_INVALID_INPUT
        }
    }
}
