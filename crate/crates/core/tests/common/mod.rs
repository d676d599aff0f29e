#![allow(dead_code)]

use aptri::Sides;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    q(rng.gen_range(1..=200), rng.gen_range(1..=12))
}

/// A triangle with independently sampled rational sides, rejection-sampled
/// for the strict triangle inequality.
pub fn random_sides(rng: &mut impl Rng) -> Sides {
    loop {
        if let Ok(s) = Sides::new(random_rational(rng), random_rational(rng), random_rational(rng)) {
            return s;
        }
    }
}

/// Sides `(b - d, b, b + d)` with `0 <= d < b/2`.
pub fn arithmetic_sides(rng: &mut impl Rng) -> Sides {
    loop {
        let b = random_rational(rng);
        let d = &b * q(rng.gen_range(0..500), 1000);
        if let Ok(s) = Sides::new(&b - &d, b.clone(), &b + &d) {
            return s;
        }
    }
}

/// Sides whose squares are in arithmetic progression, from
/// `(m² - 2mn - n²)² + (m² + 2mn - n²)² = 2(m² + n²)²`, scaled.
pub fn square_arithmetic_sides(rng: &mut impl Rng) -> Sides {
    loop {
        let m: i64 = rng.gen_range(2..60);
        let n: i64 = rng.gen_range(1..m);
        let a = (m * m - 2 * m * n - n * n).abs();
        let b = m * m + n * n;
        let c = m * m + 2 * m * n - n * n;
        if a == 0 {
            continue;
        }
        let k = q(rng.gen_range(1..=50), rng.gen_range(1..=12));
        if let Ok(s) = Sides::new(q(a, 1) * &k, q(b, 1) * &k, q(c, 1) * &k) {
            return s;
        }
    }
}

/// Sides whose reciprocals are in arithmetic progression.
pub fn harmonic_sides(rng: &mut impl Rng) -> Sides {
    loop {
        let u = q(rng.gen_range(1..=100), rng.gen_range(1..=100));
        let v = &u * q(rng.gen_range(0..300), 1000);
        let (lo, mid, hi) = (&u - &v, u.clone(), &u + &v);
        if let Ok(s) = Sides::new(lo.recip(), mid.recip(), hi.recip()) {
            return s;
        }
    }
}

/// Pythagorean triples `a < b < c <= max_c`, by exhaustive scan.
pub fn pythagorean_triples(max_c: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 1..=max_c {
        for b in a..=max_c {
            let c2 = a * a + b * b;
            let c = (c2 as f64).sqrt().round() as i64;
            if c <= max_c && c * c == c2 {
                out.push((a, b, c));
            }
        }
    }
    out
}

pub fn rel_diff(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}
