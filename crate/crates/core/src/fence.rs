//! Order ideals of the zigzag fence `x_1 < x_2 > x_3 < x_4 > ...` and the
//! two Fibonacci product identities.

use crate::seqcore::fib;
use crate::{Error, Limits, Nat, Result};

/// Fence on `size` elements, starting with an ascent `x_1 < x_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FencePoset {
    size: usize,
}

impl FencePoset {
    pub fn new(size: usize) -> Self {
        FencePoset { size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Cover pairs `(lower, upper)`, 1-based. Only adjacent indices appear.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (1..self.size)
            .map(|i| if i % 2 == 1 { (i, i + 1) } else { (i + 1, i) })
            .collect()
    }

    /// Whether the subset encoded by `mask` (bit `i-1` for `x_i`) is down-closed.
    pub fn is_ideal(&self, mask: u64) -> bool {
        let has = |x: usize| mask >> (x - 1) & 1 == 1;
        self.covers().iter().all(|&(lo, up)| !has(up) || has(lo))
    }

    /// Whether the subset encoded by `mask` is up-closed.
    pub fn is_filter(&self, mask: u64) -> bool {
        let has = |x: usize| mask >> (x - 1) & 1 == 1;
        self.covers().iter().all(|&(lo, up)| !has(lo) || has(up))
    }
}

/// Number of order ideals of the `m`-element fence, by a two-state transfer
/// over `x_1, ..., x_m` (state: is the current element in the ideal).
/// Equals `F_{m+2}`.
pub fn count_ideals(m: usize) -> Nat {
    if m == 0 {
        return Nat::one();
    }
    let (mut out, mut inn) = (Nat::one(), Nat::one());
    for i in 1..m {
        (out, inn) = if i % 2 == 1 {
            // x_i < x_{i+1}: taking x_{i+1} forces x_i
            (&out + &inn, inn)
        } else {
            // x_i > x_{i+1}: having x_i forces x_{i+1}
            (out.clone(), out + inn)
        };
    }
    out + inn
}

fn brute_force(m: usize, limits: &Limits, keep: impl Fn(&FencePoset, u64) -> bool) -> Result<Nat> {
    let bound = limits.max_fence_oracle.min(63);
    if m > bound {
        return Err(Error::guard("fence size", m, bound));
    }
    let fence = FencePoset::new(m);
    let count = (0u64..1 << m).filter(|&mask| keep(&fence, mask)).count();
    Ok(Nat::from(count))
}

/// Counts down-closed sets among all `2^m` subsets.
pub fn count_ideals_oracle(m: usize, limits: &Limits) -> Result<Nat> {
    brute_force(m, limits, FencePoset::is_ideal)
}

/// Counts up-closed sets among all `2^m` subsets.
pub fn count_filters_oracle(m: usize, limits: &Limits) -> Result<Nat> {
    brute_force(m, limits, FencePoset::is_filter)
}

/// Checks, for `2 <= k <= n`,
///
/// * `F_n = F_k F_{n+1-k} + F_{k-1} F_{n-k}`
/// * `F_n = F_{k-1} F_{n+2-k} + F_{k-2} F_{n+1-k}`
pub fn beck_identities(n: usize, k: usize) -> Result<bool> {
    if !(2 <= k && k <= n) {
        return Err(Error::invalid(format!("need 2 <= k <= n, got n={n}, k={k}")));
    }
    let lhs = fib(n);
    let first = fib(k) * fib(n + 1 - k) + fib(k - 1) * fib(n - k);
    let second = fib(k - 1) * fib(n + 2 - k) + fib(k - 2) * fib(n + 1 - k);
    Ok(lhs == first && lhs == second)
}
