//! Recorded scenarios that are re-executed and diffed byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use crate::algebra::Field;
use crate::dirichlet::{di_check, weight_vectors, Epsilon, LinearFormsY, WeightVector};
use crate::error::{Error, Result};
use crate::goodness::{coefficient_grid, di_measure_probe, sub_balls, value_distribution, PolyMap};
use crate::lattice::{default_guard, flow_tau, in_k_eps};
use crate::laurent::Ball;

pub const SUITES: &[&str] = &["prop2_1_grid", "good_x_x2_q2", "probe_x_x2_q2"];

/// Shapes `(m, n)` of the random-forms grid.
pub const GRID_SHAPES: &[(usize, usize)] = &[(1, 1), (1, 2), (2, 1)];

/// Largest `||t||` on the random-forms grid.
pub const GRID_NORM: i64 = 6;

const GOLDEN_SAMPLES: u64 = 8;
const BUDGET: u128 = 1 << 24;

/// Seed of the `idx`-th random system of shape `(m, n)` over F_q.
pub fn grid_seed(q: u32, m: usize, n: usize, idx: u64) -> u64 {
    ((q as u64 * 100 + m as u64 * 10 + n as u64) << 20) + idx
}

/// Brute-force solvability of the improved system and membership of the
/// flowed lattice in `K_eps`.
pub fn correspondence(y: &LinearFormsY, t: &WeightVector, eps: Epsilon) -> Result<(bool, bool)> {
    let solvable = di_check(y, t, eps, BUDGET)?.is_some();
    let inside = in_k_eps(&flow_tau(y, t)?, eps, default_guard(t))?;
    Ok((solvable, inside))
}

fn prop2_1_grid(prec: i64) -> Result<String> {
    let mut out = String::from("q;shape;t;seed;eps;solvable;in_K_eps\n");
    for q in [2, 3] {
        let field = Field::prime(q)?;
        for &(m, n) in GRID_SHAPES {
            for idx in 0..GOLDEN_SAMPLES {
                let seed = grid_seed(q, m, n, idx);
                let y = LinearFormsY::random(&field, m, n, prec, seed);
                for t in weight_vectors(m, n, GRID_NORM) {
                    for s in [1, 2] {
                        let eps = Epsilon::new(s)?;
                        let (solvable, inside) = correspondence(&y, &t, eps)?;
                        out.push_str(&format!("{q};{m}x{n};{t};{seed};{eps};{solvable};{inside}\n"));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The ball `B(0; 1)` and its sub-balls of radius `e^-1, ..., e^-4`.
pub fn curve_balls(field: &Field) -> Result<Vec<Ball>> {
    sub_balls(&Ball::parse(field, "B(0; e^0)")?, &[-1, -2, -3, -4], BUDGET)
}

fn good_x_x2(q: u32) -> Result<String> {
    let field = Field::prime(q)?;
    let mut out = String::from("phi;ball;sup;sublevel(e^-1..e^-6)\n");
    let balls = curve_balls(&field)?;
    for phi in coefficient_grid(&field, 2, 1) {
        for ball in &balls {
            let dist = value_distribution(&phi, ball, -7, BUDGET as u64)?;
            let measures: Vec<String> = (1..=6).map(|s| dist.measure_at_most(-s - 1).to_string()).collect();
            out.push_str(&format!("{phi};\"{ball}\";{};{}\n", dist.sup(), measures.join(",")));
        }
    }
    Ok(out)
}

fn probe_x_x2() -> Result<String> {
    let field = Field::prime(2)?;
    let curve = di_measure_probe(
        &PolyMap::moment_curve(&field, 2),
        &Ball::unit(&field),
        Epsilon::new(3)?,
        &[4, 5, 6, 7, 8],
        12,
        BUDGET,
    )?;
    Ok(curve.to_csv())
}

/// The current output of a suite. `prec` is the working precision of the
/// random systems.
pub fn suite_output(suite: &str, prec: i64) -> Result<String> {
    match suite {
        "prop2_1_grid" => prop2_1_grid(prec),
        "good_x_x2_q2" => good_x_x2(2),
        "probe_x_x2_q2" => probe_x_x2(),
        _ => Err(Error::Usage(format!("unknown golden suite {suite:?}; known: {}", SUITES.join(", ")))),
    }
}

/// The directory shipped with the crate.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens")
}

pub fn golden_path(dir: &Path, suite: &str) -> PathBuf {
    dir.join(format!("{suite}.csv"))
}

/// First differing record, 1-based, between two outputs.
pub fn diff(suite: &str, expected: &str, actual: &str) -> Result<()> {
    let mut e = expected.lines();
    let mut a = actual.lines();
    let mut line = 0;
    loop {
        line += 1;
        match (e.next(), a.next()) {
            (None, None) => return Ok(()),
            (x, y) if x == y => continue,
            (x, y) => {
                return Err(Error::GoldenMismatch {
                    suite: suite.into(),
                    line,
                    expected: x.unwrap_or("<end of file>").into(),
                    actual: y.unwrap_or("<end of file>").into(),
                })
            }
        }
    }
}

/// Re-execute a suite and compare with its file; `bless` rewrites the file
/// instead.
pub fn golden_run(suite: &str, dir: &Path, bless: bool, prec: i64) -> Result<()> {
    let actual = suite_output(suite, prec)?;
    let path = golden_path(dir, suite);
    if bless {
        fs::create_dir_all(dir).map_err(|e| Error::Usage(format!("cannot create {}: {e}", dir.display())))?;
        return fs::write(&path, actual).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())));
    }
    let expected = fs::read_to_string(&path)
        .map_err(|e| Error::Usage(format!("cannot read {} ({e}); record it with --bless", path.display())))?;
    if expected == actual {
        return Ok(());
    }
    diff(suite, &expected, &actual)?;
    Err(Error::GoldenMismatch {
        suite: suite.into(),
        line: expected.lines().count() + 1,
        expected: "<byte-identical file>".into(),
        actual: "<differs in line endings>".into(),
    })
}
