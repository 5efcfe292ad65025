//! Discretizations of chaotic interval maps onto finite grids, plus a
//! double-precision cycle experiment.
//!
//! The grid restriction of a map is an ordinary function table, so the whole
//! orbit machinery applies. The logistic and tent paths round exact rational
//! values, which keeps every grid image platform-independent; only the
//! tent-power family with a non-integer exponent goes through floating point.

use crate::error::{Error, Result};
use crate::function::FunctionTable;
use crate::orbit::OrbitStructure;

use rand_core::{RngCore, SeedableRng};

/// An interval map on [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MapSpec {
    /// x ↦ 4x(1−x).
    Logistic,
    /// x ↦ 1 − |1−2x|^ℓ with 1 ≤ ℓ ≤ 2. ℓ=1 is the tent map; ℓ=2 equals
    /// the logistic map.
    TentPow { ell: f64 },
}

impl MapSpec {
    pub fn logistic() -> MapSpec {
        MapSpec::Logistic
    }

    pub fn tent_pow(ell: f64) -> Result<MapSpec> {
        if !(1.0..=2.0).contains(&ell) {
            return Err(Error::InvalidParameter(format!(
                "tent-power exponent must lie in [1, 2], got {ell}"
            )));
        }
        Ok(MapSpec::TentPow { ell })
    }

    /// Double-precision evaluation (the discretizers use exact paths
    /// where possible; this is for the floating-point experiment).
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            MapSpec::Logistic => 4.0 * x * (1.0 - x),
            MapSpec::TentPow { ell } => 1.0 - (1.0 - 2.0 * x).abs().powf(ell),
        }
    }
}

/// Divisor choice for a grid of n representable points j/d, j = 0..n−1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Denominator {
    /// d = n: the grid stops just short of 1.
    N,
    /// d = n−1: the last grid point is exactly 1.
    NMinusOne,
}

/// How a scaled map value is pushed back onto the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Floor,
    /// Round to nearest, ties away from zero.
    HalfUp,
    /// Round to nearest, ties toward zero.
    HalfDown,
}

/// A finite grid on [0, 1]: points j/d for j = 0..n−1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    n: usize,
    denominator: Denominator,
    rounding: Rounding,
}

impl GridSpec {
    pub fn new(n: usize, denominator: Denominator, rounding: Rounding) -> Result<GridSpec> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "a grid needs at least 2 points, got {n}"
            )));
        }
        Ok(GridSpec { n, denominator, rounding })
    }

    /// The convention that reproduces the reference orbit tables:
    /// denominator n−1 with floor rounding. (The naive d = n convention
    /// gives different cycles — e.g. a {3,8} instead of a {3,7} 2-cycle on
    /// 9 points — and stays available for comparison.)
    pub fn default_convention(n: usize) -> Result<GridSpec> {
        GridSpec::new(n, Denominator::NMinusOne, Rounding::Floor)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn denominator(&self) -> Denominator {
        self.denominator
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    /// The actual divisor d.
    pub fn divisor(&self) -> usize {
        match self.denominator {
            Denominator::N => self.n,
            Denominator::NMinusOne => self.n - 1,
        }
    }
}

/// Round the nonnegative rational num/den per `mode`.
fn round_rational(num: u128, den: u128, mode: Rounding) -> u128 {
    match mode {
        Rounding::Floor => num / den,
        Rounding::HalfUp => (2 * num + den) / (2 * den),
        Rounding::HalfDown => {
            if 2 * num <= den {
                0
            } else {
                (2 * num - den).div_ceil(2 * den)
            }
        }
    }
}

fn round_float(value: f64, mode: Rounding) -> f64 {
    match mode {
        Rounding::Floor => value.floor(),
        Rounding::HalfUp => (value + 0.5).floor(),
        Rounding::HalfDown => (value - 0.5).ceil(),
    }
}

/// Restrict `map` to `grid`: images[j] = round(d · map(j/d)), clamped into
/// the domain. The logistic map and the tent-power map with ℓ ∈ {1, 2} are
/// evaluated in exact integer arithmetic.
pub fn discretize(map: &MapSpec, grid: &GridSpec) -> FunctionTable {
    let n = grid.n();
    let d = grid.divisor() as u128;
    let mode = grid.rounding();
    let mut images = Vec::with_capacity(n);
    for j in 0..n as u128 {
        let scaled = match *map {
            MapSpec::Logistic => round_rational(4 * j * (d - j.min(d)), d, mode),
            MapSpec::TentPow { ell } => {
                if ell == 1.0 {
                    d - d.abs_diff(2 * j).min(d)
                } else if ell == 2.0 {
                    round_rational(4 * j * (d - j.min(d)), d, mode)
                } else {
                    let x = j as f64 / d as f64;
                    let value = d as f64 * (1.0 - (1.0 - 2.0 * x).abs().powf(ell));
                    round_float(value, mode).max(0.0) as u128
                }
            }
        };
        images.push((scaled as usize).min(n - 1));
    }
    FunctionTable::new(images).expect("grid images are clamped into the domain")
}

/// Discretize and analyze in one step: every cycle with its period,
/// elements, and basin size.
pub fn orbit_report(map: &MapSpec, grid: &GridSpec) -> OrbitStructure {
    OrbitStructure::analyze(&discretize(map, grid))
}

/// One distinct double-precision cycle: its length, the smallest member
/// (cycles of nonnegative values order bitwise = numerically), and how many
/// seeds landed on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleClass {
    pub length: u64,
    pub representative: f64,
    pub hits: u64,
}

/// Length and smallest member of the cycle eventually reached from `seed`,
/// found with Brent's constant-memory cycle detection. Terminates for every
/// seed in [0, 1]: the iteration stays in [0, 1], a finite set of
/// double-precision values, so some value must repeat.
pub fn cycle_from_seed(map: &MapSpec, seed: f64) -> (u64, f64) {
    let mut power: u64 = 1;
    let mut length: u64 = 1;
    let mut tortoise = seed;
    let mut hare = map.eval(seed);
    while tortoise.to_bits() != hare.to_bits() {
        if power == length {
            tortoise = hare;
            power *= 2;
            length = 0;
        }
        hare = map.eval(hare);
        length += 1;
    }
    // hare now sits on the cycle; scan it once for the smallest member
    let mut representative = hare;
    let mut walker = map.eval(hare);
    for _ in 1..length {
        if walker < representative {
            representative = walker;
        }
        walker = map.eval(walker);
    }
    (length, representative)
}

/// Iterate the map in double precision from `seed_count` pseudo-random
/// seeds and aggregate the distinct cycles reached. Deterministic for a
/// fixed `rng_seed` (seeds are pre-generated in sequence, so the job count
/// never changes the outcome).
pub fn double_precision_cycle(map: &MapSpec, seed_count: usize, rng_seed: u64) -> Vec<CycleClass> {
    double_precision_cycle_with(map, seed_count, rng_seed, 1)
}

/// [`double_precision_cycle`] with a worker count.
pub fn double_precision_cycle_with(
    map: &MapSpec,
    seed_count: usize,
    rng_seed: u64,
    jobs: usize,
) -> Vec<CycleClass> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(rng_seed);
    let seeds: Vec<f64> = (0..seed_count)
        .map(|_| (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64))
        .collect();

    use std::collections::BTreeMap;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;

    let jobs = jobs.max(1).min(seed_count.max(1));
    let classify = |chunk: &[f64]| -> BTreeMap<(u64, u64), u64> {
        let mut classes = BTreeMap::new();
        for &seed in chunk {
            let (length, representative) = cycle_from_seed(map, seed);
            *classes.entry((length, representative.to_bits())).or_insert(0) += 1;
        }
        classes
    };

    let merged: BTreeMap<(u64, u64), u64> = if jobs == 1 {
        classify(&seeds)
    } else {
        let next = AtomicUsize::new(0);
        let total = Mutex::new(BTreeMap::new());
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= seeds.len() {
                        break;
                    }
                    let classes = classify(&seeds[i..=i]);
                    let mut total = total.lock().unwrap();
                    for (key, hits) in classes {
                        *total.entry(key).or_insert(0) += hits;
                    }
                });
            }
        });
        total.into_inner().unwrap()
    };

    merged
        .into_iter()
        .map(|((length, bits), hits)| CycleClass {
            length,
            representative: f64::from_bits(bits),
            hits,
        })
        .collect()
}
