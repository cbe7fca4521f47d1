//! Binomial determinants `N(R)` and their subset sum, which recovers the
//! Fibonomial `(n+1 k)_F`.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::det::{det_bareiss, IntMatrix};
use crate::{Error, Limits, Nat, Result};

/// Ordinary binomial coefficient, zero when `b > a`.
pub fn binomial(a: usize, b: usize) -> Nat {
    if b > a {
        return Nat::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from(a - i);
        acc /= BigUint::from(i + 1);
    }
    Nat::from(acc)
}

/// Strictly increasing subset `r_1 < ... < r_k` of `{0, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    r: Vec<usize>,
}

impl IndexSet {
    pub fn new(r: Vec<usize>, n: usize) -> Result<Self> {
        if r.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid(format!("index set {r:?} is not strictly increasing")));
        }
        if let Some(&bad) = r.iter().find(|&&x| x > n) {
            return Err(Error::invalid(format!("index {bad} outside [0, {n}]")));
        }
        Ok(IndexSet { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.r
    }

    /// `M[i][j] = binomial(r_i, n - r_{k+1-j})` (1-based in that formula).
    pub fn matrix(&self) -> IntMatrix {
        let k = self.r.len();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| binomial(self.r[i], self.n - self.r[k - 1 - j]).to_bigint())
                    .collect()
            })
            .collect()
    }
}

/// The signed determinant behind `N(R)`, without the sign check.
pub fn binomial_determinant(set: &IndexSet) -> BigInt {
    det_bareiss(&set.matrix())
}

/// `N(R)`: the binomial determinant, which counts nonintersecting path
/// tuples and so must be nonnegative. A negative value is reported as
/// [`Error::NegativePathCount`].
pub fn n_of_r(set: &IndexSet) -> Result<Nat> {
    let d = binomial_determinant(set);
    if d.is_negative() {
        return Err(Error::NegativePathCount {
            value: d.to_string(),
            set: set.r.clone(),
            n: set.n,
        });
    }
    Ok(Nat::from_bigint(&d).expect("checked nonnegative"))
}

/// All `N(R)` for `k`-subsets of `{0..n}`, in lexicographic subset order.
pub fn path_terms(n: usize, k: usize, limits: &Limits) -> Result<Vec<(IndexSet, Nat)>> {
    if n > limits.max_path_n {
        return Err(Error::guard("n", n, limits.max_path_n));
    }
    (0..=n)
        .combinations(k)
        .map(|r| {
            let set = IndexSet { n, r };
            let v = n_of_r(&set)?;
            Ok((set, v))
        })
        .collect()
}

/// `sum over k-subsets R of {0..n}` of `N(R)`; equals `(n+1 k)_F`.
pub fn fibonomial_via_paths(n: usize, k: usize, limits: &Limits) -> Result<Nat> {
    if k > n + 1 {
        return Err(Error::invalid(format!("k = {k} exceeds n + 1 = {}", n + 1)));
    }
    Ok(path_terms(n, k, limits)?.into_iter().map(|(_, v)| v).sum())
}
