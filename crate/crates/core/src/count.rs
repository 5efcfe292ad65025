//! Closed-formula class cardinals.
//!
//! The number of functions on n points whose pattern is `[ω₁,…,ω_p]` has the
//! closed form
//!
//! ```text
//!            (n−1)! · n^(n−s)
//!   ───────────────────────────────────     with s = ω₁+…+ω_p,
//!    (n−s)! · ∏_{k=2..p} (ω_k+…+ω_p)
//! ```
//!
//! evaluated here in exact arbitrary precision with a single final division
//! that is checked to be exact. The fixed-point-only, single-cycle, and
//! two-cycle cases are also provided as independent direct formulas.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gop::{all_gops, Gop};

/// Exact nonnegative class cardinal (values reach ~10⁶² already at n = 50).
pub type BigCount = BigUint;

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// C(n, k) via the multiplicative form (exact at every step).
fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn exact_div(numerator: BigUint, denominator: &BigUint) -> BigUint {
    let (quotient, remainder) = numerator.div_rem(denominator);
    assert!(remainder.is_zero(), "internal error: class-cardinal division left a remainder");
    quotient
}

fn check_order(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    if k == 0 || k > n {
        return Err(Error::InvalidPattern(format!("order {k} is outside 1..={n}")));
    }
    Ok(())
}

/// Number of functions on n points whose pattern is `[1,…,1]` (k ones):
/// `C(n−1, n−k) · n^(n−k)`.
pub fn count_fixed_points_only(n: usize, k: usize) -> Result<BigCount> {
    check_order(n, k)?;
    Ok(binomial(n - 1, n - k) * BigUint::from(n).pow((n - k) as u32))
}

/// Number of functions on n points whose pattern is `[k]` (one k-cycle):
/// the fixed-point count times `(k−1)!`.
pub fn count_single_cycle(n: usize, k: usize) -> Result<BigCount> {
    check_order(n, k)?;
    Ok(count_fixed_points_only(n, k)? * factorial(k - 1))
}

/// Number of functions on n points whose pattern is `[p,q]`:
/// `(n−1)! · n^(n−p−q) / ((n−p−q)! · q)`.
pub fn count_two_cycles(n: usize, p: usize, q: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    if p == 0 || q == 0 || p + q > n {
        return Err(Error::InvalidPattern(format!(
            "orders ({p},{q}) must be positive with sum ≤ {n}"
        )));
    }
    let s = p + q;
    let numerator = factorial(n - 1) * BigUint::from(n).pow((n - s) as u32);
    let denominator = factorial(n - s) * q;
    Ok(exact_div(numerator, &denominator))
}

/// Exact cardinal of the class of `g` (general closed formula; reduces to
/// the three special cases above).
pub fn count_gop(g: &Gop) -> BigCount {
    let n = g.n();
    let orders = g.orders();
    let s = g.modulus();
    let numerator = factorial(n - 1) * BigUint::from(n).pow((n - s) as u32);
    let mut denominator = factorial(n - s);
    let mut suffix: usize = s - orders[0];
    for &w in &orders[1..] {
        denominator *= suffix;
        suffix -= w;
    }
    debug_assert_eq!(suffix, 0);
    exact_div(numerator, &denominator)
}

/// Checks the split identity: replacing ω_j by the pair (ω_j − h, h)
/// multiplies the cardinal by 1/(h + ω_{j+1} + … + ω_p). Always true; the
/// check is exposed as a self-test. `j` is a 0-based index into the orders.
pub fn check_split_identity(g: &Gop, j: usize, h: usize) -> Result<bool> {
    let orders = g.orders();
    if j >= orders.len() {
        return Err(Error::InvalidPattern(format!(
            "index {j} is outside the {} orders",
            orders.len()
        )));
    }
    if orders[j] < 2 || h == 0 || h >= orders[j] {
        return Err(Error::InvalidPattern(format!(
            "split amount {h} must satisfy 1 ≤ h ≤ {} − 1",
            orders[j]
        )));
    }
    let mut split = Vec::with_capacity(orders.len() + 1);
    split.extend_from_slice(&orders[..j]);
    split.push(orders[j] - h);
    split.push(h);
    split.extend_from_slice(&orders[j + 1..]);
    let tail: usize = h + orders[j + 1..].iter().sum::<usize>();
    let lhs = count_gop(g);
    let rhs = count_gop(&Gop::new(g.n(), split)?) * tail;
    Ok(lhs == rhs)
}

/// Σ count_gop over every pattern realizable on n points; always n^n.
pub fn total_over_all_gops(n: usize) -> Result<BigCount> {
    let mut total = BigCount::zero();
    for g in all_gops(n)? {
        total += count_gop(&g);
    }
    Ok(total)
}
