//! Exact analysis of discrete dynamical systems on finite ordered sets.
//!
//! A dynamical system here is a function from X = {0,…,n−1} to itself,
//! stored as its image table. Iterating such a function from any start
//! lands on a periodic cycle; the multiset of cycle periods, listed by
//! ascending smallest component element, is the function's *global orbit
//! pattern*. This crate computes:
//!
//! * orbit structure: components, cycles, basins, attractive/repulsive
//!   classification ([`OrbitStructure`]);
//! * patterns and their combinatorics: extraction, ranking of functions,
//!   canonical minimal-rank representatives, the pseudo-decimal order on
//!   patterns ([`Gop`], [`rank`], [`threshold`]);
//! * exact class cardinals via closed formulas ([`count_gop`]) and their
//!   brute-force verification by exhaustive, partitionable sweeps
//!   ([`census`]);
//! * locally rigid function sets — functions whose weighted local
//!   variation is bounded — with pruned enumeration and identity checkers
//!   ([`RigidSpec`], [`enumerate_rigid`]);
//! * discretizations of chaotic interval maps on finite grids, with exact
//!   rational rounding, plus a double-precision cycle-length experiment
//!   ([`maps`]).
//!
//! All counting is arbitrary-precision; all enumeration results are
//! deterministic and independent of the worker count.

pub mod census;
pub mod count;
pub mod error;
pub mod function;
pub mod gop;
pub mod maps;
pub mod orbit;
pub mod reference;
pub mod rigid;

pub use census::{
    census, census_partitioned, census_with, GopCensus, ImageFilter, Progress, SweepOptions,
    SWEEP_GUARD, SWEEP_MAX_N,
};
pub use count::{
    check_split_identity, count_fixed_points_only, count_gop, count_single_cycle, count_two_cycles,
    total_over_all_gops, BigCount,
};
pub use error::{Error, Result};
pub use function::FunctionTable;
pub use gop::{all_gops, gop_compare, gop_of, rank, threshold, unrank, Gop, Rank};
pub use maps::{
    cycle_from_seed, discretize, double_precision_cycle, double_precision_cycle_with, orbit_report,
    CycleClass, Denominator, GridSpec, MapSpec, Rounding,
};
pub use orbit::{Component, OrbitStructure};
pub use rigid::{
    check_lr1_period_theorem, check_statements, check_statements_with, enumerate_rigid,
    enumerate_rigid_with, is_rigid, RigidSpec, Statement, StatementCheck, RIGID_GUARD,
};
