//! Global orbit patterns: extraction, the rank bijection, threshold
//! functions, enumeration, and the pseudo-decimal total order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::function::{expect_byte, scan_usize, skip_ws, FunctionTable};
use crate::orbit::OrbitStructure;

/// The global orbit pattern of a function: its component periods
/// `[ω₁,…,ω_p]`, listed by ascending least element of each component,
/// together with the ambient domain size.
///
/// Text form: `[2,2,1,3]@11`. A run of equal orders can be written with a
/// tilde: `[2~3,1]@11` parses as `[2,2,2,1]@11`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gop {
    n: usize,
    orders: Vec<usize>,
}

impl Gop {
    /// Validates `1 ≤ ω_i` for all i and `Σω_i ≤ n`.
    pub fn new(n: usize, orders: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        if orders.is_empty() {
            return Err(Error::InvalidPattern("order list is empty".into()));
        }
        if orders.contains(&0) {
            return Err(Error::InvalidPattern("orders must be positive".into()));
        }
        let modulus: usize = orders.iter().sum();
        if modulus > n {
            return Err(Error::InvalidPattern(format!(
                "modulus {modulus} exceeds the ambient size {n}"
            )));
        }
        Ok(Gop { n, orders })
    }

    /// Ambient domain size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The component periods `[ω₁,…,ω_p]`.
    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Number of components `p`.
    pub fn cycle_count(&self) -> usize {
        self.orders.len()
    }

    /// `Σω_i` (always ≤ n).
    pub fn modulus(&self) -> usize {
        self.orders.iter().sum()
    }
}

impl fmt::Display for Gop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]@{}", self.n)
    }
}

impl FromStr for Gop {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = expect_byte(bytes, 0, b'[')?;
        let mut orders = Vec::new();
        loop {
            let at = skip_ws(bytes, pos);
            let (order, next) = scan_usize(bytes, pos, "order")?;
            pos = skip_ws(bytes, next);
            if pos < bytes.len() && bytes[pos] == b'~' {
                // run-length form: ORDER~COUNT
                let (run, next) = scan_usize(bytes, pos + 1, "repeat count")?;
                if run == 0 {
                    return Err(Error::Parse {
                        at: pos + 1,
                        msg: "repeat count must be positive".into(),
                    });
                }
                orders.extend(std::iter::repeat_n(order, run));
                pos = skip_ws(bytes, next);
            } else {
                orders.push(order);
            }
            if order == 0 {
                return Err(Error::Parse { at, msg: "orders must be positive".into() });
            }
            if pos < bytes.len() && bytes[pos] == b',' {
                pos += 1;
                continue;
            }
            break;
        }
        let pos = expect_byte(bytes, pos, b']')?;
        let pos = expect_byte(bytes, pos, b'@')?;
        let at = skip_ws(bytes, pos);
        let (n, pos) = scan_usize(bytes, pos, "ambient size")?;
        let pos = skip_ws(bytes, pos);
        if pos != bytes.len() {
            return Err(Error::Parse { at: pos, msg: "trailing input after ambient size".into() });
        }
        Gop::new(n, orders).map_err(|e| match e {
            Error::InvalidPattern(msg) => Error::Parse { at, msg },
            other => other,
        })
    }
}

/// The pseudo-decimal total order on patterns with equal ambient size:
/// compare ω₁, then modulus − ω₁, then the remaining orders
/// lexicographically. (For positive orders, plain slice comparison equals
/// the pad-shorter-with-zeros convention.) This order provably coincides
/// with comparing threshold-function ranks.
impl Ord for Gop {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.orders[0].cmp(&other.orders[0]))
            .then_with(|| {
                let a: usize = self.orders.iter().sum::<usize>() - self.orders[0];
                let b: usize = other.orders.iter().sum::<usize>() - other.orders[0];
                a.cmp(&b)
            })
            .then_with(|| self.orders[1..].cmp(&other.orders[1..]))
    }
}

impl PartialOrd for Gop {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on gops of the same ambient size; errs on a size mismatch.
pub fn gop_compare(a: &Gop, b: &Gop) -> Result<Ordering> {
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch { left: a.n(), right: b.n() });
    }
    Ok(a.cmp(b))
}

/// Extracts the global orbit pattern of `f`.
pub fn gop_of(f: &FunctionTable) -> Gop {
    let structure = OrbitStructure::analyze(f);
    let orders: Vec<usize> = structure.components().iter().map(|c| c.period).collect();
    Gop::new(f.n(), orders).expect("component periods always form a valid pattern")
}

/// The rank of a function: its image sequence read as a base-n numeral,
/// plus one. A bijection between the n^n functions and `1..=n^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank {
    n: usize,
    value: BigUint,
}

impl Rank {
    pub fn new(n: usize, value: BigUint) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let max = BigUint::from(n).pow(n as u32);
        if value.is_zero() || value > max {
            return Err(Error::RankOutOfRange { rank: value, n });
        }
        Ok(Rank { n, value })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Rank of `f` (arbitrary precision; n = 16 already exceeds 64 bits).
pub fn rank(f: &FunctionTable) -> Rank {
    let n = f.n();
    let mut value = BigUint::zero();
    for &image in f.images() {
        value = value * n + image;
    }
    Rank { n, value: value + 1u32 }
}

/// Inverse of [`rank`]: the function on `n` points whose rank is `r`.
pub fn unrank(n: usize, r: &BigUint) -> Result<FunctionTable> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let max = BigUint::from(n).pow(n as u32);
    if r.is_zero() || *r > max {
        return Err(Error::RankOutOfRange { rank: r.clone(), n });
    }
    let big_n = BigUint::from(n);
    let mut remaining: BigUint = r - 1u32;
    let mut images = vec![0usize; n];
    for i in (0..n).rev() {
        let (quotient, digit) = remaining.div_rem(&big_n);
        images[i] = digit.to_usize().expect("digit < n fits in usize");
        remaining = quotient;
    }
    debug_assert!(remaining.is_zero());
    FunctionTable::new(images)
}

/// The threshold function of a pattern: the unique minimal-rank function in
/// its class.
///
/// Construction: a canonical ω₁-cycle sits on positions `0..ω₁` (for ω₁ = 1
/// that is the fixed point `f(0) = 0`); the remaining cycles ω₂,…,ω_p are
/// canonical cycles packed consecutively so ω_p ends at position n−1; the
/// n − Σω filler positions in between all map to 0.
pub fn threshold(g: &Gop) -> FunctionTable {
    let n = g.n();
    let orders = g.orders();
    let mut images = vec![0usize; n];
    let w1 = orders[0];
    // canonical cycle on 0..w1 (j -> j+1, last -> 0); w1 == 1 gives f(0)=0
    for (slot, next) in images[..w1 - 1].iter_mut().zip(1..) {
        *slot = next;
    }
    images[w1 - 1] = 0;
    // filler positions already map to 0; pack the remaining cycles
    let mut start = w1 + (n - g.modulus());
    for &w in &orders[1..] {
        for (slot, next) in images[start..start + w - 1].iter_mut().zip(start + 1..) {
            *slot = next;
        }
        images[start + w - 1] = start;
        start += w;
    }
    debug_assert_eq!(start, n);
    FunctionTable::new(images).expect("threshold construction stays in range")
}

/// Every global orbit pattern realizable on `n` points — all compositions
/// of every s ≤ n into positive parts — sorted by the pseudo-decimal order.
/// There are exactly 2^n − 1 of them.
pub fn all_gops(n: usize) -> Result<Vec<Gop>> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    let mut result = Vec::new();
    let mut prefix = Vec::new();
    fn extend(n: usize, used: usize, prefix: &mut Vec<usize>, out: &mut Vec<Gop>) {
        if !prefix.is_empty() {
            out.push(Gop::new(n, prefix.clone()).unwrap());
        }
        for w in 1..=(n - used) {
            prefix.push(w);
            extend(n, used + w, prefix, out);
            prefix.pop();
        }
    }
    extend(n, 0, &mut prefix, &mut result);
    result.sort();
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> FunctionTable {
        s.parse().unwrap()
    }

    fn g(s: &str) -> Gop {
        s.parse().unwrap()
    }

    #[test]
    fn extracts_patterns() {
        assert_eq!(gop_of(&f("11:6,3,2,5,8,10,9,4,7,6,5")).to_string(), "[2,2,1,3]@11");
        assert_eq!(gop_of(&f("8:1,0,0,3,5,6,7,4")).to_string(), "[2,1,4]@8");
        assert_eq!(gop_of(&f("4:0,1,2,3")).to_string(), "[1,1,1,1]@4");
    }

    #[test]
    fn literal_parsing_and_tilde_expansion() {
        assert_eq!(g("[2,2,1,3]@11"), Gop::new(11, vec![2, 2, 1, 3]).unwrap());
        assert_eq!(g("[2~3,1]@11"), Gop::new(11, vec![2, 2, 2, 1]).unwrap());
        assert_eq!(g("[2~2,1,3]@11"), g("[2,2,1,3]@11"));
        assert_eq!(g(" [ 1 ~ 4 ] @ 5 "), Gop::new(5, vec![1, 1, 1, 1]).unwrap());
        assert!("[]@3".parse::<Gop>().is_err());
        assert!("[0]@3".parse::<Gop>().is_err());
        assert!("[2,2]@3".parse::<Gop>().is_err());
        assert!("[1,1]@3x".parse::<Gop>().is_err());
    }

    #[test]
    fn modulus_and_counts() {
        let a = g("[2,2,1,3]@11");
        assert_eq!(a.modulus(), 8);
        assert_eq!(a.cycle_count(), 4);
        assert_eq!(g("[2,1,2]@5").modulus(), 5);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&f("3:0,0,0")).value(), &BigUint::from(1u32));
        assert_eq!(rank(&f("2:1,1")).value(), &BigUint::from(4u32));
        assert_eq!(
            rank(&f("11:1,0,0,0,0,6,5,7,9,10,8")).value(),
            &BigUint::from(25_938_474_637u64)
        );
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank(2, &BigUint::from(1u32)).unwrap(), f("2:0,0"));
        assert_eq!(
            unrank(11, &BigUint::from(25_938_474_637u64)).unwrap(),
            f("11:1,0,0,0,0,6,5,7,9,10,8")
        );
        assert_eq!(unrank(3, &BigUint::from(27u32)).unwrap(), f("3:2,2,2"));
        assert!(unrank(3, &BigUint::zero()).is_err());
        assert!(unrank(3, &BigUint::from(28u32)).is_err());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold(&g("[2,2,1,3]@11")), f("11:1,0,0,0,0,6,5,7,9,10,8"));
        assert_eq!(threshold(&g("[1]@1")), f("1:0"));
        assert_eq!(threshold(&g("[5]@5")), f("5:1,2,3,4,0"));
        assert_eq!(threshold(&g("[1,1]@2")), f("2:0,1"));
    }

    #[test]
    fn threshold_inverts_gop_of() {
        for n in 1..=6 {
            for pattern in all_gops(n).unwrap() {
                assert_eq!(gop_of(&threshold(&pattern)), pattern);
            }
        }
    }

    #[test]
    fn all_gops_counts() {
        assert_eq!(all_gops(1).unwrap().len(), 1);
        assert_eq!(all_gops(4).unwrap().len(), 15);
        assert_eq!(all_gops(5).unwrap().len(), 31);
    }

    #[test]
    fn order_examples() {
        assert_eq!(gop_compare(&g("[1,2]@5"), &g("[1,1,1,1]@5")).unwrap(), Ordering::Less);
        assert_eq!(gop_compare(&g("[1,1,1,1,1]@5"), &g("[1,2,1,1]@5")).unwrap(), Ordering::Less);
        assert_eq!(gop_compare(&g("[2,1]@5"), &g("[2,1]@5")).unwrap(), Ordering::Equal);
        assert!(gop_compare(&g("[1]@4"), &g("[1]@5")).is_err());
    }

    #[test]
    fn order_matches_threshold_ranks_for_small_n() {
        for n in 1..=6 {
            let gops = all_gops(n).unwrap();
            for a in &gops {
                for b in &gops {
                    let by_compare = gop_compare(a, b).unwrap();
                    let by_rank = rank(&threshold(a)).value().cmp(rank(&threshold(b)).value());
                    assert_eq!(by_compare, by_rank, "{a} vs {b}");
                }
            }
        }
    }
}
