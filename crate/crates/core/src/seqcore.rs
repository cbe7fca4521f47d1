//! Fibonacci numbers and the coefficients built from them.
//!
//! Indexing is fixed at `F_0 = 0, F_1 = F_2 = 1`, so the cobweb level
//! populations read `1, 1, 2, 3, 5, ...`. Every module uses this convention.

use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, IntPolynomial, Nat, Result};

static FIB: LazyLock<RwLock<Vec<BigUint>>> = LazyLock::new(|| RwLock::new(vec![BigUint::zero(), BigUint::one()]));

static FACT: LazyLock<RwLock<Vec<BigUint>>> = LazyLock::new(|| RwLock::new(vec![BigUint::one()]));

fn grow_fib(n: usize) {
    let mut table = FIB.write().expect("fib cache poisoned");
    while table.len() <= n {
        let l = table.len();
        let next = &table[l - 1] + &table[l - 2];
        table.push(next);
    }
}

/// `F_n`.
pub fn fib(n: usize) -> Nat {
    if let Some(v) = FIB.read().expect("fib cache poisoned").get(n) {
        return Nat::from(v.clone());
    }
    grow_fib(n);
    Nat::from(FIB.read().expect("fib cache poisoned")[n].clone())
}

/// `F_i` extended to negative indices by `F_{i-2} = F_i - F_{i-1}`,
/// i.e. `F_{-i} = (-1)^{i+1} F_i`.
pub fn fib_signed(i: i64) -> BigInt {
    let mag = fib(i.unsigned_abs() as usize).to_bigint();
    if i < 0 && i % 2 == 0 {
        -mag
    } else {
        mag
    }
}

/// `n_F! = F_1 F_2 ... F_n`, with `0_F! = 1`.
pub fn f_factorial(n: usize) -> Nat {
    if let Some(v) = FACT.read().expect("factorial cache poisoned").get(n) {
        return Nat::from(v.clone());
    }
    grow_fib(n);
    let fibs = FIB.read().expect("fib cache poisoned");
    let mut table = FACT.write().expect("factorial cache poisoned");
    while table.len() <= n {
        let l = table.len();
        let next = &table[l - 1] * &fibs[l];
        table.push(next);
    }
    Nat::from(table[n].clone())
}

/// Falling F-factorial `F_n F_{n-1} ... F_{n-k+1}`.
pub fn f_falling(n: usize, k: usize) -> Result<Nat> {
    if k > n {
        return Err(Error::invalid(format!("f_falling needs k <= n, got n={n}, k={k}")));
    }
    Ok(((n - k + 1)..=n).map(fib).product())
}

/// Fibonomial coefficient `(n k)_F`; zero when `k > n`.
///
/// Computed as falling factorial over factorial. The division is checked,
/// so an indexing slip surfaces as a panic rather than a wrong number.
pub fn fibonomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    // symmetric, so use the shorter product
    let k = k.min(n - k);
    let num = f_falling(n, k).expect("k <= n");
    num.exact_div(&f_factorial(k))
}

/// Which of the two Pascal-like Fibonomial recurrences to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recurrence {
    /// `(n+1 k)_F = F_{k-1} (n k)_F + F_{n-k+2} (n k-1)_F`
    A,
    /// `(n+1 k)_F = F_{k+1} (n k)_F + F_{n-k} (n k-1)_F`
    B,
}

/// `(n k)_F` computed only through `variant`, from `(n 0)_F = 1` and
/// `(0 k)_F = 0`.
pub fn fibonomial_rec(n: usize, k: usize, variant: Recurrence) -> Nat {
    if k > n {
        return Nat::zero();
    }
    // row[j] holds (i j)_F for the current i; only j <= k is ever needed
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for i in 0..n {
        // build row i+1 in place, high j first so row[j-1] is still row i
        for j in (1..=k.min(i + 1)).rev() {
            let (i, j) = (i as i64, j as i64);
            let (left, right) = match variant {
                Recurrence::A => (fib_signed(j - 1), fib_signed(i - j + 2)),
                // j = i+1 reaches F_{-1} = 1 here
                Recurrence::B => (fib_signed(j + 1), fib_signed(i - j)),
            };
            let ju = j as usize;
            row[ju] = left * &row[ju] + right * &row[ju - 1];
        }
    }
    Nat::from_bigint(&row[k]).expect("Fibonomial recurrence produced a negative value")
}

/// Gaussian polynomial `(n k)_q`, or zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> IntPolynomial {
    if k > n {
        return IntPolynomial::zero();
    }
    let (num, den) = (1..=k).fold((IntPolynomial::one(), IntPolynomial::one()), |(num, den), i| {
        (
            num.mul(&IntPolynomial::one_minus_power(n - k + i)),
            den.mul(&IntPolynomial::one_minus_power(i)),
        )
    });
    num.div_exact(&den)
        .expect("Gaussian product formula must divide exactly")
}
