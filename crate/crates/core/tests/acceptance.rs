//! Acceptance suite: one test per externally-checkable behavior, each line
//! of the harness output reporting pass/fail for one of them. Expected
//! values come from hand-checked fixtures and the frozen reference tables
//! in `gopmap::reference`; extended (slower) variants are `#[ignore]`d and
//! run with `cargo test -- --ignored`.

use std::collections::BTreeMap;

use gopmap::reference::{
    rows_to_counts, ADJACENT_DIFFERENCE_CENSUSES, LARGE_CARDINAL_EXPECTED,
    LARGE_CARDINAL_TRANSCRIBED, LOGISTIC_ORBITS, ORDERED_PATTERNS_FIVE, WEIGHTED_STUDY_ALPHAS,
    WEIGHTED_STUDY_N, WEIGHTED_STUDY_PATTERNS, WEIGHTED_STUDY_ROWS,
};
use gopmap::{
    all_gops, census, census_with, check_lr1_period_theorem, check_split_identity,
    check_statements_with, count_gop, cycle_from_seed, double_precision_cycle,
    double_precision_cycle_with, enumerate_rigid_with, gop_compare, gop_of, orbit_report, rank,
    threshold, total_over_all_gops, unrank, BigCount, FunctionTable, Gop, GridSpec, MapSpec,
    OrbitStructure, RigidSpec, Statement, SweepOptions,
};
use num_bigint::BigUint;

fn parallel() -> SweepOptions {
    let jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
    SweepOptions { partitions: 4 * jobs, jobs, force: false }
}

/// (cycle, basin, attractive) triples of every component, in order.
fn decomposition(f: &FunctionTable) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    OrbitStructure::analyze(f)
        .components()
        .iter()
        .map(|c| (c.cycle.clone(), c.basin.clone(), c.attractive))
        .collect()
}

#[test]
fn orbit_decompositions_match_reference_functions() {
    let f: FunctionTable = "11:6,3,2,5,8,10,9,4,7,6,5".parse().unwrap();
    assert_eq!(
        decomposition(&f),
        vec![
            (vec![6, 9], vec![0, 6, 9], true),
            (vec![5, 10], vec![1, 3, 5, 10], true),
            (vec![2], vec![2], false),
            (vec![4, 8, 7], vec![4, 7, 8], false),
        ]
    );
    assert_eq!(gop_of(&f).to_string(), "[2,2,1,3]@11");

    let f: FunctionTable = "11:4,2,7,3,8,10,5,2,4,1,6".parse().unwrap();
    assert_eq!(
        decomposition(&f),
        vec![
            (vec![4, 8], vec![0, 4, 8], true),
            (vec![2, 7], vec![1, 2, 7, 9], true),
            (vec![3], vec![3], false),
            (vec![5, 10, 6], vec![5, 6, 10], false),
        ]
    );
    assert_eq!(gop_of(&f).to_string(), "[2,2,1,3]@11");

    let f: FunctionTable = "11:9,6,4,7,10,3,1,5,2,0,10".parse().unwrap();
    assert_eq!(
        decomposition(&f),
        vec![
            (vec![0, 9], vec![0, 9], false),
            (vec![1, 6], vec![1, 6], false),
            (vec![10], vec![2, 4, 8, 10], true),
            (vec![3, 7, 5], vec![3, 5, 7], false),
        ]
    );
    assert_eq!(gop_of(&f).to_string(), "[2,2,1,3]@11");

    let f: FunctionTable = "8:1,0,0,3,5,6,7,4".parse().unwrap();
    assert_eq!(
        decomposition(&f),
        vec![
            (vec![0, 1], vec![0, 1, 2], true),
            (vec![3], vec![3], false),
            (vec![4, 5, 6, 7], vec![4, 5, 6, 7], false),
        ]
    );
    assert_eq!(gop_of(&f).to_string(), "[2,1,4]@8");
}

#[test]
fn ranking_is_a_bijection() {
    // the canonical representative of [2,2,1,3] on 11 points has this rank
    let g: Gop = "[2,2,1,3]@11".parse().unwrap();
    let t = threshold(&g);
    assert_eq!(t.to_string(), "11:1,0,0,0,0,6,5,7,9,10,8");
    assert_eq!(rank(&t).value(), &BigUint::from(25_938_474_637u64));

    // exhaustive round-trip over every function on up to 5 points
    for n in 1..=5usize {
        let total = (n as u64).pow(n as u32);
        for r in 1..=total {
            let r = BigUint::from(r);
            let f = unrank(n, &r).unwrap();
            assert_eq!(rank(&f).value(), &r);
        }
    }

    // random round-trips on larger domains
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..10_000 {
        let n = 1 + (next() % 20) as usize;
        let images: Vec<usize> = (0..n).map(|_| (next() % n as u64) as usize).collect();
        let f = FunctionTable::new(images).unwrap();
        let back = unrank(n, rank(&f).value()).unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn pattern_family_has_size_two_to_n_minus_one() {
    for n in 1..=16usize {
        let gops = all_gops(n).unwrap();
        assert_eq!(gops.len(), (1usize << n) - 1, "n={n}");
    }
    let five: Vec<String> =
        all_gops(5).unwrap().iter().map(|g| g.to_string().replace("@5", "")).collect();
    let mut expected: Vec<String> = ORDERED_PATTERNS_FIVE.iter().map(|s| s.to_string()).collect();
    let mut actual = five.clone();
    actual.sort();
    expected.sort();
    assert_eq!(actual, expected);
}

#[test]
fn pattern_order_matches_reference_list_and_threshold_ranks() {
    // the full ordered sequence on five points
    let five: Vec<String> =
        all_gops(5).unwrap().iter().map(|g| g.to_string().replace("@5", "")).collect();
    assert_eq!(five, ORDERED_PATTERNS_FIVE);

    // comparator == order of canonical-representative ranks, all pairs
    for n in 1..=8usize {
        let gops = all_gops(n).unwrap();
        let ranks: Vec<BigUint> =
            gops.iter().map(|g| rank(&threshold(g)).value().clone()).collect();
        for i in 0..gops.len() {
            for j in 0..gops.len() {
                assert_eq!(
                    gop_compare(&gops[i], &gops[j]).unwrap(),
                    ranks[i].cmp(&ranks[j]),
                    "n={n} {} vs {}",
                    gops[i],
                    gops[j],
                );
            }
        }
    }
}

#[test]
fn exhaustive_censuses_match_closed_formulas() {
    for n in 1..=7usize {
        let c = if n <= 5 {
            census(n, None).unwrap()
        } else {
            census_with(n, None, &parallel(), None).unwrap()
        };
        assert_eq!(c.total(), &BigUint::from(n).pow(n as u32), "n={n}");
        assert_eq!(c.counts().len(), (1usize << n) - 1, "n={n}");
        for (g, count) in c.counts() {
            assert_eq!(count, &count_gop(g), "{g}");
        }
    }
}

#[test]
#[ignore = "16.7M-function sweep; run with --ignored"]
fn extended_census_matches_formulas_on_eight_points() {
    let c = census_with(8, None, &parallel(), None).unwrap();
    assert_eq!(c.total(), &BigUint::from(8u32).pow(8));
    assert_eq!(c.counts().len(), 255);
    for (g, count) in c.counts() {
        assert_eq!(count, &count_gop(g), "{g}");
    }
}

#[test]
fn large_class_cardinals_are_exact() {
    let g: Gop = "[2,2,1,3]@11".parse().unwrap();
    assert_eq!(count_gop(&g), BigUint::from(11_180_400u64));

    let g: Gop = "[5,2,10,8,15,2,3]@50".parse().unwrap();
    let cardinal = count_gop(&g);
    assert_eq!(cardinal.to_string(), LARGE_CARDINAL_EXPECTED);

    // The transcribed value on record does not match the computed cardinal
    // (it is a corrupted digit string, roughly 240× the true value); the
    // mismatch is reported here as a documented transcription check, not a
    // failure of the formula.
    let transcribed: BigUint = LARGE_CARDINAL_TRANSCRIBED.parse().unwrap();
    assert_ne!(cardinal, transcribed);
    assert!(&cardinal * BigUint::from(239u32) < transcribed);
    assert!(&cardinal * BigUint::from(241u32) > transcribed);
    println!(
        "cardinal of {g}:\n  computed      {cardinal}\n  transcription {transcribed}\n  \
         (transcription on record is corrupted: ~240x the computed value, no exact factor)"
    );
}

#[test]
fn counting_identities_hold() {
    // splitting one cycle of a pattern never changes implied totals
    for n in 1..=10usize {
        for g in all_gops(n).unwrap() {
            for j in 0..g.cycle_count() {
                let w = g.orders()[j];
                for h in 1..w {
                    assert!(
                        check_split_identity(&g, j, h).unwrap(),
                        "split {g} at component {j} into ({},{h})",
                        w - h
                    );
                }
            }
        }
    }

    // appending a fixed point to a single cycle = growing the cycle
    for n in 2..=12usize {
        for k in 1..n {
            let appended = Gop::new(n, vec![k, 1]).unwrap();
            let grown = Gop::new(n, vec![k + 1]).unwrap();
            assert_eq!(count_gop(&appended), count_gop(&grown), "n={n} k={k}");
        }
    }

    // class cardinals partition the whole function space
    for n in 1..=12usize {
        assert_eq!(total_over_all_gops(n).unwrap(), BigUint::from(n).pow(n as u32), "n={n}");
    }
}

fn assert_census_matches_reference(n: usize, total: u64, rows: &[(&str, u64)]) {
    let census = enumerate_rigid_with(n, &RigidSpec::lr1(), &parallel(), None).unwrap();
    assert_eq!(census.total(), &BigUint::from(total), "total at n={n}");
    let expected: BTreeMap<Gop, BigCount> = rows_to_counts(n, rows).into_iter().collect();
    assert_eq!(census.counts().len(), expected.len(), "distinct patterns at n={n}");
    for (g, count) in &expected {
        assert_eq!(census.count_of(g), *count, "{g}");
    }
}

#[test]
fn adjacent_difference_censuses_match_reference_tables() {
    for &(n, total, rows) in ADJACENT_DIFFERENCE_CENSUSES {
        if n <= 13 {
            assert_census_matches_reference(n, total, rows);
        }
    }
    // the n=7 reference total is the computed 3,387 (a shorter variant of
    // this figure circulates; the census is unambiguous)
    let seven = ADJACENT_DIFFERENCE_CENSUSES[6];
    assert_eq!(seven.0, 7);
    assert_eq!(seven.1, 3387);
}

#[test]
#[ignore = "censuses up to 170M members; run with --ignored"]
fn extended_adjacent_difference_censuses_to_sixteen() {
    for &(n, total, rows) in ADJACENT_DIFFERENCE_CENSUSES {
        if n > 13 {
            assert_census_matches_reference(n, total, rows);
        }
    }
}

#[test]
fn adjacent_difference_periods_never_exceed_two() {
    for n in 1..=10usize {
        assert!(check_lr1_period_theorem(n).unwrap(), "n={n}");
    }
}

#[test]
fn census_identities_hold_across_domain_sizes() {
    let checks = check_statements_with(13, &parallel(), None).unwrap();
    assert!(!checks.is_empty());
    for c in &checks {
        assert!(c.holds, "{} at n={} k={}: {} != {}", c.statement, c.n, c.k, c.lhs, c.rhs);
    }
    let diagonal = |k: usize, value: u64| {
        checks.iter().any(|c| {
            c.statement == Statement::OnesDiagonal && c.k == k && c.rhs == BigUint::from(value)
        })
    };
    assert!(diagonal(1, 1));
    assert!(diagonal(2, 2));
    assert!(diagonal(3, 16));
}

fn weighted_spec(q: u64) -> RigidSpec {
    RigidSpec::new(WEIGHTED_STUDY_ALPHAS.to_vec(), q).unwrap()
}

#[test]
fn weighted_variation_census_rows_match() {
    for &(q, max_period, max_modulus, gop_count, members) in WEIGHTED_STUDY_ROWS {
        if q > 66 {
            continue; // extended
        }
        let census =
            enumerate_rigid_with(WEIGHTED_STUDY_N, &weighted_spec(q), &parallel(), None).unwrap();
        assert_eq!(census.total(), &BigUint::from(members), "members at q={q}");
        assert_eq!(census.counts().len(), gop_count, "patterns at q={q}");
        assert_eq!(census.max_period(), max_period, "max period at q={q}");
        assert_eq!(census.max_modulus(), max_modulus, "max modulus at q={q}");
    }
    for &(q, rows) in WEIGHTED_STUDY_PATTERNS {
        let census =
            enumerate_rigid_with(WEIGHTED_STUDY_N, &weighted_spec(q), &parallel(), None).unwrap();
        let expected: BTreeMap<Gop, BigCount> =
            rows_to_counts(WEIGHTED_STUDY_N, rows).into_iter().collect();
        assert_eq!(census.counts(), &expected, "per-pattern counts at q={q}");
    }
}

#[test]
#[ignore = "374M-member census; run with --ignored"]
fn extended_weighted_variation_census_with_loose_threshold() {
    let row = WEIGHTED_STUDY_ROWS.last().unwrap();
    assert_eq!(row.0, 142);
    let census =
        enumerate_rigid_with(WEIGHTED_STUDY_N, &weighted_spec(row.0), &parallel(), None).unwrap();
    assert_eq!(census.total(), &BigUint::from(row.4));
    assert_eq!(census.counts().len(), row.3);
    assert_eq!(census.max_period(), row.1);
    assert_eq!(census.max_modulus(), row.2);
}

#[test]
fn discretized_logistic_orbits_match_reference_tables() {
    for &(n, rows, partial_rows) in LOGISTIC_ORBITS {
        let grid = GridSpec::default_convention(n).unwrap();
        let report = orbit_report(&MapSpec::logistic(), &grid);
        let components = report.components();
        assert_eq!(components.len(), rows.len() + partial_rows.len(), "component count at n={n}");
        let mut claimed = vec![false; components.len()];
        for row in rows {
            let (i, c) = components
                .iter()
                .enumerate()
                .find(|(i, c)| {
                    !claimed[*i] && {
                        let mut cycle = c.cycle.clone();
                        cycle.sort_unstable();
                        cycle == row.cycle
                    }
                })
                .unwrap_or_else(|| panic!("no component with cycle {:?} at n={n}", row.cycle));
            claimed[i] = true;
            assert_eq!(c.basin.len(), row.basin, "basin of {:?} at n={n}", row.cycle);
            assert_eq!(c.period, row.cycle.len(), "period of {:?} at n={n}", row.cycle);
        }
        for row in partial_rows {
            let (i, c) = components
                .iter()
                .enumerate()
                .find(|(i, c)| !claimed[*i] && c.period == row.period)
                .unwrap_or_else(|| panic!("no period-{} component at n={n}", row.period));
            claimed[i] = true;
            assert_eq!(c.basin.len(), row.basin, "basin of the period-{} cycle", row.period);
            for member in row.known_members {
                assert!(
                    c.cycle.contains(member),
                    "{member} missing from the period-{} cycle at n={n}",
                    row.period
                );
            }
        }
    }
}

#[test]
fn double_precision_cycle_experiment_behaves() {
    // both special seeds collapse to the fixed point at zero
    assert_eq!(cycle_from_seed(&MapSpec::logistic(), 0.0), (1, 0.0));
    assert_eq!(cycle_from_seed(&MapSpec::logistic(), 0.5), (1, 0.0));

    // pseudo-random seeds terminate and reproduce for a fixed rng seed,
    // independent of the worker count
    let first = double_precision_cycle(&MapSpec::logistic(), 3, 42);
    let again = double_precision_cycle(&MapSpec::logistic(), 3, 42);
    let parallel = double_precision_cycle_with(&MapSpec::logistic(), 3, 42, 3);
    assert_eq!(first, again);
    assert_eq!(first, parallel);
    assert_eq!(first.iter().map(|c| c.hits).sum::<u64>(), 3);
    assert!(first.iter().all(|c| c.length >= 1));

    // a different rng seed still terminates (and usually differs)
    let other = double_precision_cycle(&MapSpec::logistic(), 2, 7);
    assert_eq!(other.iter().map(|c| c.hits).sum::<u64>(), 2);
}
