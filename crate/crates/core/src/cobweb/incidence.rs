use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense upper-triangular integer matrix, indexed 1-based by linearized
/// vertices. Holds zeta, Möbius, delta, eta and chain-count matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IncMatrix {
    pub fn zeros(dim: usize) -> Self {
        IncMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for x in 1..=dim {
            let o = m.offset(x, x);
            m.entries[o] = BigInt::one();
        }
        m
    }

    /// Panics if `f` is nonzero anywhere below the diagonal.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = Self::zeros(dim);
        for x in 1..=dim {
            for y in 1..=dim {
                let v = f(x, y);
                if y < x {
                    assert!(v.is_zero(), "entry ({x}, {y}) below the diagonal must be zero");
                    continue;
                }
                let o = m.offset(x, y);
                m.entries[o] = v;
            }
        }
        m
    }

    fn offset(&self, x: usize, y: usize) -> usize {
        assert!(
            (1..=self.dim).contains(&x) && (1..=self.dim).contains(&y),
            "index ({x}, {y}) outside 1..={}",
            self.dim
        );
        (x - 1) * self.dim + (y - 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, x: usize, y: usize) -> &BigInt {
        &self.entries[self.offset(x, y)]
    }

    /// Copy with one entry replaced. Used to inject faults when testing the
    /// verification suites.
    pub fn with_entry(&self, x: usize, y: usize, value: BigInt) -> Self {
        assert!(y >= x || value.is_zero(), "cannot set ({x}, {y}) below the diagonal");
        let mut m = self.clone();
        let o = m.offset(x, y);
        m.entries[o] = value;
        m
    }

    pub fn row(&self, x: usize) -> &[BigInt] {
        let o = self.offset(x, 1);
        &self.entries[o..o + self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        IncMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        IncMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * &c).collect(),
        }
    }

    /// Product of two upper-triangular matrices.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for x in 1..=n {
            for z in x..=n {
                let a = self.get(x, z);
                if a.is_zero() {
                    continue;
                }
                for y in z..=n {
                    let b = other.get(z, y);
                    if !b.is_zero() {
                        let o = out.offset(x, y);
                        out.entries[o] += a * b;
                    }
                }
            }
        }
        out
    }

    /// First `(row, col)` where the matrices differ, scanning row-major.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.dim + 1, i % self.dim + 1))
    }

    pub fn is_identity(&self) -> bool {
        self.first_difference(&Self::identity(self.dim)).is_none()
    }

    /// Inverse of a unit-diagonal upper-triangular matrix by
    /// back-substitution, row by row:
    /// `inv(x, y) = [x = y] - sum_{x <= z < y} inv(x, z) a(z, y)`.
    ///
    /// `None` if some diagonal entry is not 1.
    pub fn inverse_unit_upper(&self) -> Option<Self> {
        let n = self.dim;
        if (1..=n).any(|x| !self.get(x, x).is_one()) {
            return None;
        }
        let mut out = Self::zeros(n);
        let mut acc = vec![BigInt::zero(); n + 1];
        for x in 1..=n {
            acc.iter_mut().for_each(|a| a.set_zero());
            for z in x..=n {
                let v = if z == x { BigInt::one() } else { -&acc[z] };
                if v.is_zero() {
                    continue;
                }
                for (y, a) in acc.iter_mut().enumerate().skip(z + 1) {
                    let c = self.get(z, y);
                    if !c.is_zero() {
                        *a += &v * c;
                    }
                }
                let o = out.offset(x, z);
                out.entries[o] = v;
            }
        }
        Some(out)
    }
}

/// Space-separated rows, one line per row.
impl fmt::Display for IncMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
