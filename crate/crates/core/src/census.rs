//! Exhaustive census engine: sweep every function on n points (or a
//! filtered subset), tally patterns, and report exact per-pattern counts.
//!
//! The sweep runs in rank order (odometer order over image arrays), which
//! makes the index space `0..n^n` trivially partitionable into contiguous
//! chunks. Workers tally into machine-word counters keyed by the period
//! sequence; chunks are merged in index order into arbitrary-precision
//! totals, so the result is bit-identical for any partition or job count.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_traits::Zero;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::gop::Gop;
use crate::orbit::OrbitScratch;

/// Sweeps above this size are refused unless `force` is set: n^n function
/// evaluations pass 10^10 here.
pub const SWEEP_GUARD: usize = 10;

/// Hard engine limit: the index space must fit in 128 bits (26^26 < 2^128).
pub const SWEEP_MAX_N: usize = 26;

/// Predicate over candidate image arrays. The slice is the full image
/// sequence of one function on n points.
pub type ImageFilter<'a> = dyn Fn(&[usize]) -> bool + Sync + 'a;

/// Machine-word tally of one sweep chunk, keyed by period-sequence bytes.
pub(crate) type RawCounts = HashMap<Vec<u8>, u64>;

/// Per-partition progress callback: (partitions done, partitions total).
pub type Progress<'a> = dyn Fn(usize, usize) + Sync + 'a;

/// Exact per-pattern counts from one sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GopCensus {
    n: usize,
    counts: BTreeMap<Gop, BigCount>,
    total: BigCount,
}

impl GopCensus {
    pub(crate) fn from_counts(n: usize, counts: BTreeMap<Gop, BigCount>) -> GopCensus {
        let total = counts.values().sum();
        GopCensus { n, counts, total }
    }

    /// Ambient domain size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Per-pattern counts, iterable in the pseudo-decimal order.
    pub fn counts(&self) -> &BTreeMap<Gop, BigCount> {
        &self.counts
    }

    /// Count for one pattern (zero when the class is empty).
    pub fn count_of(&self, g: &Gop) -> BigCount {
        self.counts.get(g).cloned().unwrap_or_else(BigCount::zero)
    }

    /// Number of functions tallied.
    pub fn total(&self) -> &BigCount {
        &self.total
    }

    /// Largest period appearing in any tallied pattern.
    pub fn max_period(&self) -> usize {
        self.counts.keys().flat_map(|g| g.orders().iter().copied()).max().unwrap_or(0)
    }

    /// Largest modulus over the tallied patterns.
    pub fn max_modulus(&self) -> usize {
        self.counts.keys().map(|g| g.modulus()).max().unwrap_or(0)
    }
}

/// Options for [`census_with`].
pub struct SweepOptions {
    /// Number of contiguous index chunks (≥ 1; the default 1 is the
    /// deterministic single-chunk mode).
    pub partitions: usize,
    /// Worker threads (≥ 1; 1 runs everything on the calling thread).
    pub jobs: usize,
    /// Override the size guard.
    pub force: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { partitions: 1, jobs: 1, force: false }
    }
}

/// Census of all functions on n points, optionally restricted by `filter`.
pub fn census(n: usize, filter: Option<&ImageFilter>) -> Result<GopCensus> {
    census_with(n, filter, &SweepOptions::default(), None)
}

/// Census split into `partitions` contiguous rank ranges, merged in index
/// order; identical output to [`census`] for every partition count.
pub fn census_partitioned(
    n: usize,
    filter: Option<&ImageFilter>,
    partitions: usize,
) -> Result<GopCensus> {
    let jobs = std::thread::available_parallelism().map_or(1, |p| p.get()).min(partitions.max(1));
    census_with(n, filter, &SweepOptions { partitions, jobs, force: false }, None)
}

/// Tally for one contiguous index chunk `[from, to)`.
fn sweep_chunk(n: usize, from: u128, to: u128, filter: Option<&ImageFilter>) -> RawCounts {
    let mut counts = RawCounts::new();
    if from >= to {
        return counts;
    }
    let mut scratch = OrbitScratch::new(n);
    // Images of the function with index `from` = its base-n digits.
    let mut images = vec![0usize; n];
    let mut index = from;
    for slot in (0..n).rev() {
        images[slot] = (index % n as u128) as usize;
        index /= n as u128;
    }
    let mut remaining = to - from;
    loop {
        if filter.is_none_or(|accept| accept(&images)) {
            let orders = scratch.orders_of(&images);
            match counts.get_mut(orders) {
                Some(c) => *c += 1,
                None => {
                    counts.insert(orders.to_vec(), 1);
                }
            }
        }
        remaining -= 1;
        if remaining == 0 {
            break;
        }
        // odometer increment
        let mut slot = n - 1;
        loop {
            images[slot] += 1;
            if images[slot] < n {
                break;
            }
            images[slot] = 0;
            slot -= 1;
        }
    }
    counts
}

pub(crate) fn merge_chunks(n: usize, chunks: Vec<RawCounts>) -> GopCensus {
    let mut merged: BTreeMap<Gop, BigCount> = BTreeMap::new();
    for chunk in chunks {
        // deterministic order within a chunk: sort keys
        let mut entries: Vec<(Vec<u8>, u64)> = chunk.into_iter().collect();
        entries.sort();
        for (orders, count) in entries {
            let g = Gop::new(n, orders.iter().map(|&w| w as usize).collect())
                .expect("sweep periods always form a valid pattern");
            *merged.entry(g).or_insert_with(BigCount::zero) += count;
        }
    }
    GopCensus::from_counts(n, merged)
}

/// Full-control census: guard override, partition/job counts, progress.
pub fn census_with(
    n: usize,
    filter: Option<&ImageFilter>,
    options: &SweepOptions,
    progress: Option<&Progress>,
) -> Result<GopCensus> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    if n > SWEEP_MAX_N {
        return Err(Error::SweepTooLarge { n, limit: SWEEP_MAX_N });
    }
    if n > SWEEP_GUARD && !options.force {
        return Err(Error::GuardExceeded { n, limit: SWEEP_GUARD });
    }
    let total = (n as u128).checked_pow(n as u32).expect("n^n fits in u128 for n <= 26");
    let partitions = options.partitions.max(1);
    let bounds: Vec<(u128, u128)> = (0..partitions as u128)
        .map(|i| {
            (
                total / partitions as u128 * i + (total % partitions as u128).min(i),
                total / partitions as u128 * (i + 1) + (total % partitions as u128).min(i + 1),
            )
        })
        .collect();
    debug_assert_eq!(bounds.last().unwrap().1, total);

    let jobs = options.jobs.max(1).min(partitions);
    let done = AtomicUsize::new(0);
    let report = |count: usize| {
        if let Some(cb) = progress {
            cb(count, partitions);
        }
    };

    let chunks: Vec<RawCounts> = if jobs == 1 {
        bounds
            .iter()
            .map(|&(from, to)| {
                let chunk = sweep_chunk(n, from, to, filter);
                report(done.fetch_add(1, Ordering::Relaxed) + 1);
                chunk
            })
            .collect()
    } else {
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<RawCounts>>> =
            (0..partitions).map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= partitions {
                        break;
                    }
                    let (from, to) = bounds[i];
                    let chunk = sweep_chunk(n, from, to, filter);
                    *slots[i].lock().unwrap() = Some(chunk);
                    report(done.fetch_add(1, Ordering::Relaxed) + 1);
                });
            }
        });
        slots
            .into_iter()
            .map(|slot| slot.into_inner().unwrap().expect("every chunk was swept"))
            .collect()
    };

    Ok(merge_chunks(n, chunks))
}
