//! Randomized invariant checks over the whole library surface.
//!
//! Everything here is a law that must hold for *every* input, so the cases
//! are generated rather than enumerated: random functions exercise the orbit
//! decomposition, the rank bijection, the literal round-trips, and the
//! agreement between the pruned rigid enumeration and a plain filtered sweep.

use num_bigint::BigUint;
use proptest::prelude::*;

use gopmap::{
    census, enumerate_rigid, gop_compare, gop_of, rank, threshold, unrank, FunctionTable, Gop,
    OrbitStructure, RigidSpec,
};

/// Random function on `1..=max_n` points, as its image vector.
fn arb_images(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max_n).prop_flat_map(|n| proptest::collection::vec(0..n, n))
}

/// Random cycle-length vector that fits in a domain of `n` points.
fn arb_orders(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1..=n, 1..=n)
        .prop_filter("orders must fit in the domain", move |orders| {
            orders.iter().sum::<usize>() <= n
        })
}

/// Random gop: a domain size plus a short vector of cycle lengths that fits.
fn arb_gop(max_n: usize) -> impl Strategy<Value = Gop> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), arb_orders(n)))
        .prop_map(|(n, orders)| Gop::new(n, orders).unwrap())
}

/// Two random gops sharing one domain size, so they are comparable.
fn arb_gop_pair(max_n: usize) -> impl Strategy<Value = (Gop, Gop)> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), arb_orders(n), arb_orders(n)))
        .prop_map(|(n, a, b)| (Gop::new(n, a).unwrap(), Gop::new(n, b).unwrap()))
}

proptest! {
    /// The decomposition partitions the domain: basins are disjoint, sorted,
    /// cover every point, and each starts at the component representative.
    #[test]
    fn analysis_partitions_the_domain(images in arb_images(40)) {
        let f = FunctionTable::new(images).unwrap();
        let s = OrbitStructure::analyze(&f);
        let mut seen = vec![false; f.n()];
        let mut reps = Vec::new();
        for c in s.components() {
            prop_assert!(!c.basin.is_empty());
            prop_assert_eq!(c.basin[0], c.representative);
            prop_assert!(c.basin.windows(2).all(|w| w[0] < w[1]));
            for &x in &c.basin {
                prop_assert!(!seen[x]);
                seen[x] = true;
            }
            reps.push(c.representative);
        }
        prop_assert!(seen.iter().all(|&v| v));
        prop_assert!(reps.windows(2).all(|w| w[0] < w[1]));
    }

    /// Cycles really are cycles of the stated period, contained in their
    /// basin, starting at their least element, and the attractive flag is
    /// exactly "basin strictly larger than cycle".
    #[test]
    fn cycles_are_consistent(images in arb_images(40)) {
        let f = FunctionTable::new(images).unwrap();
        let s = OrbitStructure::analyze(&f);
        for c in s.components() {
            prop_assert_eq!(c.cycle.len(), c.period);
            prop_assert_eq!(c.cycle[0], *c.cycle.iter().min().unwrap());
            for (i, &x) in c.cycle.iter().enumerate() {
                let next = c.cycle[(i + 1) % c.period];
                prop_assert_eq!(f.apply(x).unwrap(), next);
                prop_assert!(c.basin.binary_search(&x).is_ok());
            }
            prop_assert_eq!(c.attractive, c.basin.len() > c.period);
        }
    }

    /// Iterating any point n steps lands inside the cycle of its component,
    /// and `order_of` equals that cycle's length.
    #[test]
    fn iteration_reaches_the_cycle(images in arb_images(40)) {
        let f = FunctionTable::new(images).unwrap();
        let s = OrbitStructure::analyze(&f);
        for x in 0..f.n() {
            let c = s.component_of(x).unwrap();
            let landed = f.iterate(x, f.n() as u64).unwrap();
            prop_assert!(c.cycle.contains(&landed));
            prop_assert_eq!(s.order_of(x).unwrap(), c.period);
            // One full period around the cycle returns to the landing point.
            prop_assert_eq!(f.iterate(landed, c.period as u64).unwrap(), landed);
        }
    }

    /// A gop built from the decomposition lists the component periods in
    /// representative order, and its modulus never exceeds the domain size.
    #[test]
    fn gop_mirrors_the_decomposition(images in arb_images(40)) {
        let f = FunctionTable::new(images).unwrap();
        let s = OrbitStructure::analyze(&f);
        let g = gop_of(&f);
        let periods: Vec<usize> = s.components().iter().map(|c| c.period).collect();
        prop_assert_eq!(g.orders(), &periods[..]);
        prop_assert_eq!(g.n(), f.n());
        prop_assert!(g.modulus() <= g.n());
        prop_assert_eq!(g.cycle_count(), s.components().len());
    }

    /// unrank(rank(f)) == f, and rank values stay within 1..=n^n.
    #[test]
    fn rank_round_trips(images in arb_images(12)) {
        let f = FunctionTable::new(images).unwrap();
        let r = rank(&f);
        prop_assert!(r.value() >= &BigUint::from(1u32));
        let n = BigUint::from(f.n());
        prop_assert!(r.value() <= &n.pow(f.n() as u32));
        let back = unrank(f.n(), r.value()).unwrap();
        prop_assert_eq!(back, f);
    }

    /// Function and gop literals round-trip through their text forms.
    #[test]
    fn literals_round_trip(images in arb_images(25)) {
        let f = FunctionTable::new(images).unwrap();
        let f2: FunctionTable = f.to_string().parse().unwrap();
        prop_assert_eq!(&f2, &f);
        let g = gop_of(&f);
        let g2: Gop = g.to_string().parse().unwrap();
        prop_assert_eq!(g2, g);
    }

    /// The canonical representative of a pattern realizes that pattern, and
    /// it is minimal: no function with a strictly smaller rank has the same
    /// pattern (checked against a sample of smaller ranks).
    #[test]
    fn threshold_realizes_its_pattern(g in arb_gop(9)) {
        let t = threshold(&g);
        prop_assert_eq!(&gop_of(&t), &g);
        let r = rank(&t);
        // Sample up to 50 ranks below the threshold rank; none may share the
        // pattern (the exhaustive check lives in the acceptance suite).
        let rv = r.value();
        let one = BigUint::from(1u32);
        let mut probe = rv.clone();
        let mut tried = 0;
        while probe > one && tried < 50 {
            probe -= &one;
            let f = unrank(g.n(), &probe).unwrap();
            prop_assert_ne!(&gop_of(&f), &g);
            tried += 1;
        }
    }

    /// The pattern comparator is a total order consistent with equality.
    #[test]
    fn comparator_is_antisymmetric((a, b) in arb_gop_pair(9)) {
        let ab = gop_compare(&a, &b).unwrap();
        let ba = gop_compare(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
    }

    /// Membership in a rigid set is what `accepts` says it is, pointwise.
    #[test]
    fn rigid_membership_matches_direct_sums(
        images in arb_images(10),
        alphas in proptest::collection::vec(0u64..6, 1..4),
        q in 0u64..12,
    ) {
        let spec = RigidSpec::new(alphas, q).unwrap();
        let f = FunctionTable::new(images.clone()).unwrap();
        let n = images.len();
        let t = spec.window();
        let mut ok = true;
        if t < n {
            for p in 0..n - t {
                let s: u128 = (1..=t)
                    .map(|r| spec.alphas()[r - 1] as u128
                        * images[p].abs_diff(images[p + r]) as u128)
                    .sum();
                ok &= s <= spec.q() as u128;
            }
            for p in t..n {
                let s: u128 = (1..=t)
                    .map(|r| spec.alphas()[r - 1] as u128
                        * images[p].abs_diff(images[p - r]) as u128)
                    .sum();
                ok &= s <= spec.q() as u128;
            }
        }
        prop_assert_eq!(gopmap::is_rigid(&f, &spec), ok);
    }
}

proptest! {
    // The sweep-vs-DFS comparison is expensive per case, so run fewer cases.
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The pruned recursive enumeration of a rigid set agrees exactly with a
    /// brute-force census restricted by the membership predicate.
    #[test]
    fn rigid_enumeration_matches_filtered_sweep(
        n in 1usize..=6,
        alphas in proptest::collection::vec(0u64..5, 1..4),
        q in 0u64..10,
    ) {
        let spec = RigidSpec::new(alphas, q).unwrap();
        let fast = enumerate_rigid(n, &spec).unwrap();
        let filter = |images: &[usize]| {
            RigidSpec::new(spec.alphas().to_vec(), spec.q()).unwrap().accepts(images)
        };
        let slow = census(n, Some(&filter)).unwrap();
        prop_assert_eq!(fast.counts(), slow.counts());
        prop_assert_eq!(fast.total(), slow.total());
    }
}
