//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion, and exits nonzero if any failed.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use aptri::cli::{cmd_table, Cell, Format};
use aptri::integer_triangles::ratio_condition;
use aptri::*;
use num_integer::Integer;
use num_rational::BigRational;
use rand::Rng;

use common::*;

const TOL: f64 = 1e-9;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(elapsed: Duration, limit: Duration, what: &str) -> std::result::Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn golden() -> Vec<Vec<String>> {
    include_str!("data/table_golden.csv")
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

/// 1. The twelve reference rows: exact columns bit-exact, angles within 1e-6°.
fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let table = cmd_table().map_err(|e| e.message)?;
    let mut csv = Vec::new();
    table.write(Format::Csv, &mut csv).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let text = String::from_utf8(csv).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    let expected = golden();
    ensure(rows.len() == 12, || format!("{} rows", rows.len()))?;
    let mut worst = 0.0f64;
    for (i, (row, gold)) in rows.iter().zip(&expected).enumerate() {
        ensure(row[..10] == gold[..10].iter().map(String::as_str).collect::<Vec<_>>()[..], || {
            format!("row {} exact columns {:?} != {:?}", i + 1, &row[..10], &gold[..10])
        })?;
        // Angle columns: both the printed CLI value and the full-precision value.
        let full = match &table.rows[i][10..] {
            [Cell::Num(a), Cell::Num(p), Cell::Num(g)] => [a, p, g].map(|s| s.parse::<f64>().unwrap()),
            other => return Err(format!("unexpected angle cells {other:?}")),
        };
        let (kappa, lambda, d) = aptri::cli::TABLE_PARAMS[i];
        let t = triangle_from_params(&TriangleParams::new(d, kappa, lambda).map_err(|e| e.to_string())?);
        for (j, want) in gold[10..].iter().enumerate() {
            let want: f64 = want.parse().unwrap();
            let exact = [t.a_deg, t.phi_deg, t.gamma_deg][j];
            let err = (full[j] - want).abs().max((exact - want).abs());
            worst = worst.max(err);
            ensure(err <= 1e-6, || format!("row {} angle column {j}: {} vs {want}", i + 1, full[j]))?;
        }
    }
    within_time(elapsed, Duration::from_secs(1), "table")?;
    Ok(format!("12 rows match, worst angle error {worst:.2e} deg, {elapsed:?}"))
}

/// 2. Parametric triangle enumeration equals the brute-force scan.
fn triangle_oracle() -> Outcome {
    let mut notes = Vec::new();
    for max in [50u64, 200, 500] {
        let start = Instant::now();
        let generated: Vec<SideTriple> = enumerate_triangles(&max.into()).iter().map(|t| t.sides()).collect();
        let brute = brute_force_triangles(max);
        let elapsed = start.elapsed();
        ensure(generated == brute, || {
            format!("max_gamma={max}: {} generated vs {} brute force", generated.len(), brute.len())
        })?;
        if max == 500 {
            within_time(elapsed, Duration::from_secs(10), "max_gamma=500")?;
        }
        notes.push(format!("{max}:{} ({elapsed:.1?})", brute.len()));
    }
    Ok(notes.join(", "))
}

/// 3. Parametric Diophantine enumeration equals the brute-force scan.
fn diophantine_oracle() -> Outcome {
    let mut notes = Vec::new();
    for max in [50u64, 300, 1000] {
        let start = Instant::now();
        let generated = enumerate_via_params(&max.into());
        let brute = brute_force_solutions(max);
        let elapsed = start.elapsed();
        ensure(generated == brute, || {
            format!("z_max={max}: {} generated vs {} brute force", generated.len(), brute.len())
        })?;
        if max == 1000 {
            within_time(elapsed, Duration::from_secs(10), "z_max=1000")?;
        }
        notes.push(format!("{max}:{} ({elapsed:.1?})", brute.len()));
    }
    Ok(notes.join(", "))
}

/// 4. Construction from (β, ρ) and back.
fn construction_round_trip() -> Outcome {
    let mut rng = rng(4);
    let mut worst_b = 0.0f64;
    let mut worst_rho = 0.0f64;
    for _ in 0..1000 {
        let rho_f: f64 = 3.0 - rng.gen::<f64>(); // (2, 3]
        let beta_f: f64 = 100.0 - 100.0 * rng.gen::<f64>(); // (0, 100]
        let rho = ShapeRatio::from_f64(rho_f).map_err(|e| e.to_string())?;
        let beta = BigRational::from_float(beta_f).unwrap();
        let built = construct_from_rho(&beta, &rho).map_err(|e| format!("rho={rho_f}: {e}"))?;
        let b_err = (built.triangle.angles().b - 60.0).abs();
        let rho_err = rel_diff(aptri::exact::to_f64(&rho_of(built.triangle.sides())), rho_f);
        worst_b = worst_b.max(b_err);
        worst_rho = worst_rho.max(rho_err);
        ensure(b_err <= 1e-9, || format!("rho={rho_f}: B off by {b_err:e} deg"))?;
        ensure(rho_err <= 1e-12, || format!("rho={rho_f}: rho off by {rho_err:e}"))?;
    }

    let eq = construct_from_rho(&q(7, 3), &ShapeRatio::new(q(3, 1)).unwrap()).map_err(|e| e.to_string())?;
    let s = eq.triangle.sides();
    ensure(s.a() == s.b() && s.b() == s.c(), || format!("rho=3 gave {s:?}"))?;

    let right = ShapeRatio::from_f64(1.0 + 3f64.sqrt()).unwrap();
    let rt = construct_from_rho(&q(1, 1), &right).map_err(|e| e.to_string())?;
    let g_err = (rt.triangle.angles().gamma - 90.0).abs();
    ensure(g_err <= 1e-9, || format!("rho=1+sqrt3: Gamma off by {g_err:e}"))?;

    Ok(format!(
        "1000 samples, worst |B-60| {worst_b:.1e} deg, worst rho rel err {worst_rho:.1e}; rho=3 equilateral; |Gamma-90| {g_err:.1e}"
    ))
}

/// 5. The seven equivalences.
fn equivalence_suites() -> Outcome {
    let mut rng = rng(5);
    let ids = [EquivalenceId::I, EquivalenceId::II, EquivalenceId::III, EquivalenceId::VII];

    // Pure random triangles, plus triangles built to satisfy each left side.
    let mut true_cases = [0usize; 4];
    for _ in 0..10_000 {
        let s = random_sides(&mut rng);
        for id in ids {
            let r = check_equivalence(id, &s, TOL);
            ensure(r.consistent(), || format!("{id} disagrees on {s:?}: {r:?}"))?;
        }
    }
    for _ in 0..2_000 {
        let constructed = [
            (EquivalenceId::I, arithmetic_sides(&mut rng)),
            (EquivalenceId::II, arithmetic_sides(&mut rng)),
            (EquivalenceId::III, square_arithmetic_sides(&mut rng)),
            (EquivalenceId::VII, harmonic_sides(&mut rng)),
        ];
        for (k, (id, s)) in constructed.into_iter().enumerate() {
            let r = check_equivalence(id, &s, TOL);
            ensure(r.lhs_holds && r.rhs_holds, || format!("{id} constructed case {s:?}: {r:?}"))?;
            true_cases[k] += 1;
        }
    }

    // (vi): every Pythagorean triple up to hypotenuse 500.
    let triples = pythagorean_triples(500);
    let mut ap_right = 0;
    for &(a, b, c) in &triples {
        let s = Sides::from_integers(a, b, c).unwrap();
        let r = check_equivalence(EquivalenceId::VI, &s, TOL);
        ensure(r.consistent(), || format!("(vi) disagrees on ({a},{b},{c}): {r:?}"))?;
        if r.lhs_holds {
            ap_right += 1;
            ensure(4 * a == 3 * b && 5 * a == 3 * c, || format!("({a},{b},{c}) not a 3-4-5 multiple"))?;
        }
    }
    ensure(ap_right == 100, || format!("expected 100 multiples of (3,4,5), found {ap_right}"))?;

    // (iv), (v): dense grid of 60° triangles.
    let steps = 20_000i64;
    let mut hits = 0;
    for k in 1..=steps {
        let rho = q(2 * steps + k, steps);
        let rho_f = aptri::exact::to_f64(&rho);
        let built = construct_from_rho(&q(1, 1), &ShapeRatio::new(rho).unwrap()).map_err(|e| e.to_string())?;
        for id in [EquivalenceId::IV, EquivalenceId::V] {
            let r = check_equivalence(id, built.triangle.sides(), TOL);
            ensure(r.consistent(), || format!("{id} disagrees at rho={rho_f}: {r:?}"))?;
            if r.lhs_holds {
                hits += 1;
                ensure((rho_f - 3.0).abs() <= 1e-9, || format!("{id} side condition holds at rho={rho_f}"))?;
            }
        }
    }
    ensure(hits == 2, || format!("expected only rho=3 to satisfy (iv) and (v), got {hits} hits"))?;

    Ok(format!(
        "10000 random x (i,ii,iii,vii) agree; constructed true cases {true_cases:?}; (vi) {} triples, {ap_right} AP; (iv)/(v) {steps}-point grid, only rho=3",
        triples.len()
    ))
}

/// 6. The three half-angle forms of the inradius agree with the direct one.
fn inradius_consistency() -> Outcome {
    let mut rng = rng(6);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let s = random_sides(&mut rng);
        let r = inradius(&s);
        let tau = semiperimeter(&s);
        let ang = angles_from_sides(&s);
        for (side, angle) in s.as_array().into_iter().zip(ang.as_array()) {
            let form = aptri::exact::to_f64(&(&tau - side)) * (angle.to_radians() / 2.0).tan();
            let err = rel_diff(form, r);
            worst = worst.max(err);
            ensure(err <= 1e-10, || format!("{s:?}: {form} vs {r} (rel {err:e})"))?;
        }
    }
    Ok(format!("10000 triangles, worst relative difference {worst:.1e}"))
}

/// 7. Pairwise gcd class of the primitive generated sides.
fn gcd_conjecture() -> Outcome {
    let mut checked = 0;
    for kappa in 1u64..=100 {
        for lambda in 1u64..=100 {
            if kappa.gcd(&lambda) != 1 || !ratio_condition(&kappa.into(), &lambda.into()) {
                continue;
            }
            let d = if kappa % 2 == 1 && lambda % 2 == 1 { 1 } else { 4 };
            let p = TriangleParams::new(d, kappa, lambda).map_err(|e| e.to_string())?;
            let class = gcd_class_check(&p).map_err(|e| e.to_string())?;
            let expected = if lambda % 3 == 0 { 3 } else { 1 };
            ensure(class == expected, || format!("kappa={kappa} lambda={lambda}: {class}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} coprime pairs, zero exceptions"))
}

/// 8. Overlapping similarity classes.
fn similarity_duplication() -> Outcome {
    let big = triangle_from_params(&TriangleParams::new(4, 4, 3).unwrap());
    let small = triangle_from_params(&TriangleParams::new(4, 1, 4).unwrap());
    ensure(big.sides() == (48u8.into(), 57u8.into(), 63u8.into()), || format!("{:?}", big.sides()))?;
    ensure(primitive_reduce(&big) == small.sides(), || {
        format!("{:?} vs {:?}", primitive_reduce(&big), small.sides())
    })?;

    let fifteen = triangle_from_params(&TriangleParams::new(1, 5, 3).unwrap());
    let five = triangle_from_params(&TriangleParams::new(1, 1, 5).unwrap());
    ensure(fifteen.sides() == (15u8.into(), 21u8.into(), 24u8.into()), || format!("{:?}", fifteen.sides()))?;
    let want: SideTriple = (5u8.into(), 7u8.into(), 8u8.into());
    ensure(primitive_reduce(&fifteen) == want && five.sides() == want, || {
        format!("{:?}", primitive_reduce(&fifteen))
    })?;
    Ok("(48,57,63) -> (16,19,21); (15,21,24) -> (5,7,8)".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 table reproduction", table_reproduction),
        ("AC2 triangle oracle equivalence", triangle_oracle),
        ("AC3 diophantine oracle equivalence", diophantine_oracle),
        ("AC4 construction round trip", construction_round_trip),
        ("AC5 equivalence suites", equivalence_suites),
        ("AC6 inradius consistency", inradius_consistency),
        ("AC7 gcd conjecture", gcd_conjecture),
        ("AC8 similarity-class duplication", similarity_duplication),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
