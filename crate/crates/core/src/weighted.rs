//! Weighted binomial coefficients.
//!
//! With `n` boxes where box `i` holds `w_i` objects, `C_k^n(w)` counts
//! selections of one object from each of `k` distinct boxes and `S_k^n(w)`
//! allows boxes to repeat. They are the elementary and complete homogeneous
//! symmetric polynomials evaluated at `w`.

use itertools::Itertools;

use crate::{Error, Limits, Nat, Result};

/// Nondecreasing vector of positive weights `w_1 <= ... <= w_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Nat>);

/// Preset weight families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `(1, ..., 1)`: binomial coefficients.
    Ones(usize),
    /// `(1, 2, ..., n)`: Stirling numbers.
    Arithmetic(usize),
    /// `(1, q, ..., q^{n-1})`: Gaussian coefficients at integer `q`.
    GeometricQ(usize, u64),
}

impl WeightVector {
    /// Rejects zero weights. Unsorted input is an error unless `sort` is set,
    /// in which case it is sorted.
    pub fn new(mut weights: Vec<Nat>, sort: bool) -> Result<Self> {
        if let Some(i) = weights.iter().position(Nat::is_zero) {
            return Err(Error::invalid(format!(
                "weight w_{} is zero; weights must be >= 1",
                i + 1
            )));
        }
        if sort {
            weights.sort();
        } else if let Some(i) = weights.windows(2).position(|p| p[0] > p[1]) {
            return Err(Error::invalid(format!(
                "weights must be nondecreasing: w_{} = {} > w_{} = {}",
                i + 1,
                weights[i],
                i + 2,
                weights[i + 1]
            )));
        }
        Ok(WeightVector(weights))
    }

    pub fn from_u64s(weights: &[u64], sort: bool) -> Result<Self> {
        Self::new(weights.iter().map(|&w| Nat::from(w)).collect(), sort)
    }

    pub fn preset(kind: Preset) -> Result<Self> {
        let weights: Vec<Nat> = match kind {
            Preset::Ones(n) => {
                check_len(n)?;
                vec![Nat::one(); n]
            }
            Preset::Arithmetic(n) => {
                check_len(n)?;
                (1..=n).map(Nat::from).collect()
            }
            Preset::GeometricQ(n, q) => {
                check_len(n)?;
                if q == 0 {
                    return Err(Error::invalid("geometric preset needs q >= 1"));
                }
                let q = Nat::from(q);
                std::iter::successors(Some(Nat::one()), |w| Some(w * &q))
                    .take(n)
                    .collect()
            }
        };
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[Nat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::invalid("preset length must be >= 1"))
    } else {
        Ok(())
    }
}

/// Generalized binomial coefficient of the first kind, by
/// `C_k^n = C_k^{n-1} + w_n C_{k-1}^{n-1}`.
pub fn c_coeff(w: &WeightVector, k: usize) -> Nat {
    if k > w.len() {
        return Nat::zero();
    }
    // col[j] = C_j^i after processing i boxes
    let mut col = vec![Nat::zero(); k + 1];
    col[0] = Nat::one();
    for (i, wi) in w.weights().iter().enumerate() {
        for j in (1..=k.min(i + 1)).rev() {
            let add = wi * &col[j - 1];
            col[j] += add;
        }
    }
    col.swap_remove(k)
}

/// Generalized binomial coefficient of the second kind, by
/// `S_k^n = S_k^{n-1} + w_n S_{k-1}^n`.
pub fn s_coeff(w: &WeightVector, k: usize) -> Result<Nat> {
    if k == 0 {
        return Ok(Nat::one());
    }
    if w.is_empty() {
        return Err(Error::invalid("s_coeff with k >= 1 needs a nonempty weight vector"));
    }
    let mut col = vec![Nat::zero(); k + 1];
    col[0] = Nat::one();
    for wi in w.weights() {
        // ascending j: col[j-1] already includes box n, which is what allows repetition
        for j in 1..=k {
            let add = wi * &col[j - 1];
            col[j] += add;
        }
    }
    Ok(col.swap_remove(k))
}

fn oracle_guard(w: &WeightVector, k: usize, limits: &Limits) -> Result<()> {
    let bound = limits.max_weight_oracle;
    if w.len() > bound {
        return Err(Error::guard("weight vector length", w.len(), bound));
    }
    if k > bound {
        return Err(Error::guard("k", k, bound));
    }
    Ok(())
}

/// Brute force `sum over i_1 < ... < i_k` of `w_{i_1} ... w_{i_k}`.
pub fn c_coeff_oracle(w: &WeightVector, k: usize, limits: &Limits) -> Result<Nat> {
    oracle_guard(w, k, limits)?;
    Ok(w.weights()
        .iter()
        .combinations(k)
        .map(|sel| sel.into_iter().product::<Nat>())
        .sum())
}

/// Brute force `sum over i_1 <= ... <= i_k` of `w_{i_1} ... w_{i_k}`.
pub fn s_coeff_oracle(w: &WeightVector, k: usize, limits: &Limits) -> Result<Nat> {
    oracle_guard(w, k, limits)?;
    if k == 0 {
        return Ok(Nat::one());
    }
    Ok(w.weights()
        .iter()
        .combinations_with_replacement(k)
        .map(|sel| sel.into_iter().product::<Nat>())
        .sum())
}

/// Unsigned Stirling numbers of the first kind `c(n, k)` from the triangle
/// `c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)`. Reference values for the
/// arithmetic preset.
pub fn stirling_first_unsigned(n: usize, k: usize) -> Nat {
    let mut row = vec![Nat::one()];
    for m in 1..=n {
        let mut next = vec![Nat::zero(); m + 1];
        for j in 1..=m {
            let mut v = row[j - 1].clone();
            if j < m {
                v += Nat::from(m - 1) * &row[j];
            }
            next[j] = v;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// Stirling numbers of the second kind `S(n, k)` from
/// `S(n, k) = S(n-1, k-1) + k S(n-1, k)`.
pub fn stirling_second(n: usize, k: usize) -> Nat {
    let mut row = vec![Nat::one()];
    for m in 1..=n {
        let mut next = vec![Nat::zero(); m + 1];
        for j in 1..=m {
            let mut v = row[j - 1].clone();
            if j < m {
                v += Nat::from(j) * &row[j];
            }
            next[j] = v;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}
