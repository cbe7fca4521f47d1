//! The Fibonacci cobweb poset truncated at `N` levels.
//!
//! Level `s` holds `F_s` vertices `<j, s>`, and every vertex of level `s` is
//! covered by every vertex of level `s+1`. Consequently `<j,s> <= <q,p>` iff
//! the vertices coincide or `s < p`; vertices sharing a level are
//! incomparable.
//!
//! Vertices are linearized level by level, 1-based: level `s` occupies
//! indices `F_{s+1} ..= F_{s+2} - 1`, because `F_1 + ... + F_{s-1} = F_{s+1} - 1`.

mod incidence;

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use incidence::IncMatrix;

use crate::seqcore::{f_factorial, f_falling, fib};
use crate::{Error, Limits, Nat, Result};

/// Largest supported level count; keeps vertex indices inside `u64`.
pub const MAX_LEVELS: usize = 90;

/// Vertex `<j, s>`: position `j` (1-based) within level `s` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexCoord {
    pub j: usize,
    pub s: usize,
}

impl VertexCoord {
    pub fn new(j: usize, s: usize) -> Self {
        VertexCoord { j, s }
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.j, self.s)
    }
}

pub(crate) fn fib_usize(n: usize) -> usize {
    fib(n)
        .to_u64()
        .and_then(|v| usize::try_from(v).ok())
        .expect("Fibonacci number exceeds usize")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobwebPoset {
    max_level: usize,
    level_sizes: Vec<usize>,
    // level_offsets[s-1] = first linear index of level s
    level_offsets: Vec<usize>,
    vertex_count: usize,
}

impl CobwebPoset {
    /// Levels `1..=n`.
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a cobweb poset needs at least one level"));
        }
        if n > MAX_LEVELS {
            return Err(Error::invalid(format!(
                "at most {MAX_LEVELS} levels supported, got {n}"
            )));
        }
        let level_sizes: Vec<usize> = (1..=n).map(fib_usize).collect();
        let level_offsets = level_sizes
            .iter()
            .scan(1usize, |next, &sz| {
                let start = *next;
                *next += sz;
                Some(start)
            })
            .collect();
        let vertex_count = level_sizes.iter().sum();
        debug_assert_eq!(vertex_count, fib_usize(n + 2) - 1);
        Ok(CobwebPoset {
            max_level: n,
            level_sizes,
            level_offsets,
            vertex_count,
        })
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.level_sizes
    }

    pub fn level_offsets(&self) -> &[usize] {
        &self.level_offsets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn level_size(&self, s: usize) -> Option<usize> {
        s.checked_sub(1).and_then(|i| self.level_sizes.get(i)).copied()
    }

    pub fn contains(&self, v: VertexCoord) -> bool {
        self.level_size(v.s).is_some_and(|sz| (1..=sz).contains(&v.j))
    }

    fn check(&self, v: VertexCoord) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex {v} not in a cobweb poset with {} levels",
                self.max_level
            )))
        }
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if (1..=self.max_level).contains(&n) {
            Ok(())
        } else {
            Err(Error::invalid(format!("level {n} outside 1..={}", self.max_level)))
        }
    }

    /// `F_{s+1} - 1 + j`.
    pub fn linear_index(&self, v: VertexCoord) -> Result<usize> {
        self.check(v)?;
        Ok(self.level_offsets[v.s - 1] + v.j - 1)
    }

    pub fn coord_of(&self, x: usize) -> Result<VertexCoord> {
        if !(1..=self.vertex_count).contains(&x) {
            return Err(Error::invalid(format!("index {x} outside 1..={}", self.vertex_count)));
        }
        let s = self.level_offsets.partition_point(|&off| off <= x);
        Ok(VertexCoord::new(x - self.level_offsets[s - 1] + 1, s))
    }

    fn level_of(&self, x: usize) -> usize {
        self.level_offsets.partition_point(|&off| off <= x)
    }

    /// Order relation on linear indices.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.level_of(x) < self.level_of(y)
    }

    /// Order relation on coordinates.
    pub fn leq_coord(&self, a: VertexCoord, b: VertexCoord) -> bool {
        a == b || a.s < b.s
    }

    /// Hasse diagram edges (complete bipartite between consecutive levels),
    /// as linear-index pairs `(lower, upper)`.
    pub fn hasse_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.max_level).flat_map(move |s| {
            let lo = self.level_offsets[s - 1]..self.level_offsets[s - 1] + self.level_sizes[s - 1];
            let hi = self.level_offsets[s]..self.level_offsets[s] + self.level_sizes[s];
            lo.cartesian_product(hi)
        })
    }

    fn matrix_guard(&self, limits: &Limits) -> Result<()> {
        if self.max_level > limits.max_matrix_levels {
            return Err(Error::guard("matrix levels", self.max_level, limits.max_matrix_levels));
        }
        Ok(())
    }

    /// Kronecker delta (identity).
    pub fn delta(&self, limits: &Limits) -> Result<IncMatrix> {
        self.matrix_guard(limits)?;
        Ok(IncMatrix::identity(self.vertex_count))
    }

    /// `zeta(x, y) = 1` iff `x <= y`, straight from the order predicate.
    pub fn zeta_from_order(&self, limits: &Limits) -> Result<IncMatrix> {
        self.matrix_guard(limits)?;
        Ok(IncMatrix::from_fn(self.vertex_count, |x, y| {
            BigInt::from(u8::from(self.leq(x, y)))
        }))
    }

    /// `zeta = zeta_1 - zeta_0` from the Kronecker-delta sums
    ///
    /// * `zeta_1(x, y) = sum_{k>=0} delta(x + k, y)`
    /// * `zeta_0(x, y) = sum_{k>=0} sum_{s>=1} delta(x, F_{s+1} + k)
    ///   sum_{1 <= r <= F_s - k - 1} delta(k + F_{s+1} + r, y)`
    ///
    /// Each delta term is scattered onto the single entry it can hit. The
    /// infinite ranges are cut at the matrix dimension `d`: a delta whose
    /// row or column index exceeds `d` is zero, so `k < d` and
    /// `F_{s+1} <= d` lose nothing.
    pub fn zeta_explicit(&self, limits: &Limits) -> Result<IncMatrix> {
        self.matrix_guard(limits)?;
        let d = self.vertex_count;
        let mut z1 = vec![0i64; (d + 1) * (d + 1)];
        let mut z0 = vec![0i64; (d + 1) * (d + 1)];
        let at = |x: usize, y: usize| x * (d + 1) + y;

        for x in 1..=d {
            for k in 0..=d - x {
                z1[at(x, x + k)] += 1;
            }
        }

        let mut s = 1;
        while fib_usize(s + 1) <= d {
            let fs = fib_usize(s) as i64;
            let fs1 = fib_usize(s + 1);
            for k in 0..d {
                let x = fs1 + k;
                if x > d {
                    break;
                }
                for r in 1..=(fs - k as i64 - 1).max(0) as usize {
                    let y = k + fs1 + r;
                    if y <= d {
                        z0[at(x, y)] += 1;
                    }
                }
            }
            s += 1;
        }

        Ok(IncMatrix::from_fn(d, |x, y| BigInt::from(z1[at(x, y)] - z0[at(x, y)])))
    }

    /// Möbius matrix `mu = zeta^{-1}`.
    pub fn mobius(&self, limits: &Limits) -> Result<IncMatrix> {
        let zeta = self.zeta_from_order(limits)?;
        Ok(zeta.inverse_unit_upper().expect("zeta has unit diagonal"))
    }

    /// Strict-order indicator `eta = zeta - delta`.
    pub fn eta(&self, limits: &Limits) -> Result<IncMatrix> {
        Ok(self.zeta_from_order(limits)?.sub(&self.delta(limits)?))
    }

    /// `sum_{t>=0} eta^t = (2 delta - zeta)^{-1}`: entry `(x, y)` counts the
    /// chains `x = z_0 < ... < z_t = y` of every length.
    pub fn chain_matrix(&self, limits: &Limits) -> Result<IncMatrix> {
        let zeta = self.zeta_from_order(limits)?;
        let base = self.delta(limits)?.scale(2).sub(&zeta);
        Ok(base.inverse_unit_upper().expect("2 delta - zeta has unit diagonal"))
    }

    /// Number of chains from `x` to `y` (linear indices); zero when `x` is
    /// not below `y`.
    pub fn count_all_chains(&self, x: usize, y: usize, limits: &Limits) -> Result<Nat> {
        self.coord_of(x)?;
        self.coord_of(y)?;
        if !self.leq(x, y) {
            return Ok(Nat::zero());
        }
        let c = self.chain_matrix(limits)?;
        Ok(Nat::from_bigint(c.get(x, y)).expect("chain counts are nonnegative"))
    }

    /// Maximal chains from the root to level `n`: `n_F!`.
    pub fn count_max_chains_from_root(&self, n: usize) -> Result<Nat> {
        self.check_level(n)?;
        Ok(f_factorial(n))
    }

    /// Maximal chains from `v` (at level `k`) to level `n`:
    /// `F_{k+1} ... F_n`, whatever `v.j` is.
    pub fn count_max_chains_from_vertex(&self, v: VertexCoord, n: usize) -> Result<Nat> {
        self.check(v)?;
        self.check_level(n)?;
        if n < v.s {
            return Err(Error::invalid(format!("target level {n} below vertex level {}", v.s)));
        }
        f_falling(n, n - v.s)
    }

    /// Same count by dynamic programming over vertices: a vertex's count is
    /// the sum of the counts on the level below.
    pub fn count_max_chains_dp(&self, v: VertexCoord, n: usize, limits: &Limits) -> Result<Nat> {
        self.check(v)?;
        self.check_level(n)?;
        if n < v.s {
            return Err(Error::invalid(format!("target level {n} below vertex level {}", v.s)));
        }
        if let Some(&big) = self.level_sizes[v.s - 1..n].iter().max() {
            if big as u64 > limits.max_chain_enumeration {
                return Err(Error::guard("level size", big, limits.max_chain_enumeration));
            }
        }
        let mut ways = vec![Nat::zero(); self.level_sizes[v.s - 1]];
        ways[v.j - 1] = Nat::one();
        for t in v.s + 1..=n {
            let below: Nat = ways.iter().sum();
            ways = vec![below; self.level_sizes[t - 1]];
        }
        Ok(ways.into_iter().sum())
    }

    /// Every maximal chain from `v` up to level `n`, one vertex per level,
    /// in lexicographic order of positions.
    pub fn enumerate_max_chains(&self, v: VertexCoord, n: usize, limits: &Limits) -> Result<Vec<Vec<VertexCoord>>> {
        let total = self.count_max_chains_from_vertex(v, n)?;
        if total > limits.max_chain_enumeration {
            return Err(Error::guard("maximal chains", total, limits.max_chain_enumeration));
        }
        if n == v.s {
            return Ok(vec![vec![v]]);
        }
        let tails = (v.s + 1..=n).map(|t| (1..=self.level_sizes[t - 1]).map(move |j| VertexCoord::new(j, t)));
        Ok(tails
            .multi_cartesian_product()
            .map(|tail| std::iter::once(v).chain(tail).collect())
            .collect())
    }
}

/// Verifies that `sum_{x <= z <= y} mu(x, z) = [x = y]` for every
/// comparable pair. Returns the first failing pair.
pub fn mobius_sum_violation(p: &CobwebPoset, mu: &IncMatrix) -> Option<(usize, usize)> {
    let d = p.vertex_count();
    for x in 1..=d {
        for y in x..=d {
            if !p.leq(x, y) {
                continue;
            }
            let total: BigInt = (x..=y)
                .filter(|&z| p.leq(x, z) && p.leq(z, y))
                .map(|z| mu.get(x, z))
                .sum();
            let want = if x == y { BigInt::one() } else { BigInt::zero() };
            if total != want {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(n: usize) -> CobwebPoset {
        CobwebPoset::build(n).unwrap()
    }

    #[test]
    fn build_shapes() {
        assert_eq!(poset(5).vertex_count(), 12);
        assert_eq!(poset(1).vertex_count(), 1);
        assert_eq!(poset(6).level_sizes(), &[1, 1, 2, 3, 5, 8]);
        assert_eq!(poset(6).level_offsets(), &[1, 2, 3, 5, 8, 13]);
        assert!(CobwebPoset::build(0).is_err());
        assert!(CobwebPoset::build(MAX_LEVELS + 1).is_err());
        let big = poset(MAX_LEVELS);
        assert_eq!(big.vertex_count() as u64 + 1, fib(MAX_LEVELS + 2).to_u64().unwrap());
    }

    #[test]
    fn indexing() {
        let p = poset(6);
        assert_eq!(p.linear_index(VertexCoord::new(1, 1)).unwrap(), 1);
        assert_eq!(p.linear_index(VertexCoord::new(2, 3)).unwrap(), 4);
        assert_eq!(p.coord_of(8).unwrap(), VertexCoord::new(1, 5));
        assert!(p.linear_index(VertexCoord::new(3, 3)).is_err());
        assert!(p.linear_index(VertexCoord::new(1, 7)).is_err());
        assert!(p.coord_of(0).is_err());
        assert!(p.coord_of(21).is_err());
        for x in 1..=p.vertex_count() {
            assert_eq!(p.linear_index(p.coord_of(x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn zeta_entries() {
        let l = Limits::default();
        let z = poset(6).zeta_from_order(&l).unwrap();
        for x in 1..=z.dim() {
            assert!(z.get(x, x).is_one());
        }
        assert!(z.get(3, 4).is_zero());
        assert!(z.get(5, 8).is_one());
        assert_eq!(poset(1).zeta_explicit(&l).unwrap().to_string(), "1");
    }

    #[test]
    fn zeta_explicit_level_five_row() {
        let z = poset(6).zeta_explicit(&Limits::default()).unwrap();
        let row8: Vec<i64> = z.row(8).iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(&row8[7..12], &[1, 0, 0, 0, 0]);
        assert!(row8[12..].iter().all(|&v| v == 1));
    }

    #[test]
    fn zeta_constructions_agree() {
        let l = Limits::default();
        for n in 1..=10 {
            let p = poset(n);
            assert_eq!(p.zeta_explicit(&l).unwrap(), p.zeta_from_order(&l).unwrap(), "N={n}");
        }
    }

    #[test]
    fn mobius_small() {
        let l = Limits::default();
        let mu = poset(3).mobius(&l).unwrap();
        assert_eq!(*mu.get(1, 2), BigInt::from(-1));
        assert_eq!(*mu.get(1, 3), BigInt::zero());
        for x in 1..=mu.dim() {
            assert!(mu.get(x, x).is_one());
        }
    }

    #[test]
    fn mobius_inverts_zeta() {
        let l = Limits::default();
        for n in 1..=10 {
            let p = poset(n);
            let z = p.zeta_from_order(&l).unwrap();
            let mu = p.mobius(&l).unwrap();
            assert!(z.mul(&mu).is_identity(), "N={n}");
            assert!(mu.mul(&z).is_identity(), "N={n}");
            assert_eq!(mobius_sum_violation(&p, &mu), None);
        }
    }

    #[test]
    fn matrix_guard() {
        assert!(matches!(
            poset(13).zeta_from_order(&Limits::default()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn max_chain_counts() {
        let p = poset(10);
        assert_eq!(p.count_max_chains_from_root(1).unwrap(), 1u64);
        assert_eq!(p.count_max_chains_from_root(5).unwrap(), 30u64);
        assert_eq!(p.count_max_chains_from_root(10).unwrap(), 122522400u64);
        let root = VertexCoord::new(1, 1);
        assert_eq!(
            p.count_max_chains_dp(root, 10, &Limits::default()).unwrap(),
            122522400u64
        );
        let v = VertexCoord::new(2, 3);
        assert_eq!(p.count_max_chains_from_vertex(v, 6).unwrap(), 120u64);
        assert_eq!(p.count_max_chains_from_vertex(v, 3).unwrap(), 1u64);
        assert!(p.count_max_chains_from_root(11).is_err());
        assert!(p.count_max_chains_from_vertex(v, 2).is_err());
    }

    #[test]
    fn ratio_of_chain_counts() {
        let p = poset(12);
        for n in 1..=12 {
            for k in 1..=n {
                for j in 1..=p.level_size(k).unwrap().min(3) {
                    let v = VertexCoord::new(j, k);
                    assert_eq!(
                        p.count_max_chains_from_root(n).unwrap(),
                        p.count_max_chains_from_root(k).unwrap() * p.count_max_chains_from_vertex(v, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let p = poset(6);
        let l = Limits::default();
        let root = VertexCoord::new(1, 1);
        let c = p.enumerate_max_chains(root, 3, &l).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0], vec![root, VertexCoord::new(1, 2), VertexCoord::new(1, 3)]);
        let v = VertexCoord::new(1, 2);
        assert_eq!(p.enumerate_max_chains(v, 2, &l).unwrap(), vec![vec![v]]);
        assert_eq!(p.enumerate_max_chains(v, 5, &l).unwrap().len(), 30);
        let tight = Limits {
            max_chain_enumeration: 29,
            ..l
        };
        assert!(matches!(
            p.enumerate_max_chains(v, 5, &tight),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_made_of_chains() {
        let p = poset(6);
        let chains = p
            .enumerate_max_chains(VertexCoord::new(1, 1), 6, &Limits::default())
            .unwrap();
        assert_eq!(chains.len(), 240);
        assert!(chains.windows(2).all(|w| w[0] < w[1]));
        for c in &chains {
            assert!(c.windows(2).all(|e| e[1].s == e[0].s + 1 && p.leq_coord(e[0], e[1])));
        }
    }

    #[test]
    fn all_chains_examples() {
        let p = poset(3);
        let l = Limits::default();
        assert_eq!(p.count_all_chains(2, 2, &l).unwrap(), 1u64);
        assert_eq!(p.count_all_chains(1, 3, &l).unwrap(), 2u64);
        assert_eq!(p.count_all_chains(3, 4, &l).unwrap(), 0u64);
    }

    #[test]
    fn hasse_edge_count() {
        let p = poset(5);
        // 1*1 + 1*2 + 2*3 + 3*5
        assert_eq!(p.hasse_edges().count(), 24);
        assert!(p.hasse_edges().all(|(a, b)| p.leq(a, b) && a != b));
    }
}
