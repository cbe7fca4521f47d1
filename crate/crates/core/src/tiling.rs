//! Shifted sub-poset copies and tilings of the maximal-chain universe.
//!
//! Fix a root `<r, k>` and a height `m`. The chain universe is every maximal
//! chain from the root up to level `n = k + m`, written as the tuple of
//! positions it visits on levels `k+1, ..., k+m`; it has `F_{k+1} ... F_n`
//! members. A copy picks a subset of positions on each of those levels, and
//! its chain family is the Cartesian product of the picks. A tiling is a set
//! of copies whose chain families partition the universe. Since a copy
//! carries `m_F!` chains, any tiling has exactly `(n m)_F` copies.
//!
//! Two copy shapes are supported, see [`CopyModel`].

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::cobweb::{fib_usize, VertexCoord, MAX_LEVELS};
use crate::dlx::ExactCover;
use crate::gvpaths::binomial;
use crate::seqcore::{f_factorial, f_falling, fib, fibonomial};
use crate::{Error, Limits, Nat, Result};

/// Which per-level subset sizes a copy of height `m` may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CopyModel {
    /// Exactly `F_s` positions on level `k+s`.
    Aligned,
    /// The sizes `F_1, ..., F_m` in any order across levels `k+1..k+m`.
    /// Contains every aligned copy.
    Permuted,
}

impl fmt::Display for CopyModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CopyModel::Aligned => "aligned",
            CopyModel::Permuted => "permuted",
        })
    }
}

/// Positions on levels `k+1, ..., k+m` of one maximal chain above the root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainTuple(pub Vec<usize>);

impl fmt::Display for ChainTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        write!(f, "{}", self.0.iter().join("."))
    }
}

/// One copy `P_m(k)_r`: the root and the sorted positions picked on each
/// level above it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CopySpec {
    pub root: VertexCoord,
    pub chosen: Vec<Vec<usize>>,
}

impl CopySpec {
    pub fn height(&self) -> usize {
        self.chosen.len()
    }

    /// Per-level subset sizes.
    pub fn shape(&self) -> Vec<usize> {
        self.chosen.iter().map(Vec::len).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingSolution {
    pub root: VertexCoord,
    pub height: usize,
    pub model: CopyModel,
    pub copies: Vec<CopySpec>,
    /// Chain -> index into `copies`.
    pub cover: BTreeMap<ChainTuple, usize>,
}

fn check_root(k: usize, r: usize, m: usize) -> Result<VertexCoord> {
    if k == 0 {
        return Err(Error::invalid("root level k must be >= 1"));
    }
    if k + m > MAX_LEVELS {
        return Err(Error::invalid(format!("k + m = {} exceeds {MAX_LEVELS} levels", k + m)));
    }
    let width = fib_usize(k);
    if !(1..=width).contains(&r) {
        return Err(Error::invalid(format!(
            "root position r = {r} outside 1..={width} on level {k}"
        )));
    }
    Ok(VertexCoord::new(r, k))
}

/// Level populations `F_{k+1}, ..., F_{k+m}`.
fn level_widths(k: usize, m: usize) -> Vec<usize> {
    (1..=m).map(|s| fib_usize(k + s)).collect()
}

/// In-place next lexicographic permutation; false once the last is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every admissible per-level size vector, lexicographic.
fn shapes(m: usize, model: CopyModel) -> impl Iterator<Item = Vec<usize>> {
    let base: Vec<usize> = (1..=m).map(fib_usize).collect();
    let mut next = Some(base);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        if model == CopyModel::Permuted {
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
        }
        Some(cur)
    })
}

fn shape_count(widths: &[usize], shape: &[usize]) -> Nat {
    widths.iter().zip(shape).map(|(&w, &c)| binomial(w, c)).product()
}

/// Number of copies `enumerate_copies` would return. For the aligned model
/// this is `prod_s binomial(F_{k+s}, F_s)`. Stops summing once `cap` is
/// passed, returning a value above `cap`.
pub fn copy_candidate_count(k: usize, m: usize, model: CopyModel, cap: u64) -> Nat {
    let widths = level_widths(k, m);
    let cap = Nat::from(cap);
    let mut total = Nat::zero();
    for shape in shapes(m, model) {
        total += shape_count(&widths, &shape);
        if total > cap {
            break;
        }
    }
    total
}

/// All copies rooted at `<r, k>` of height `m`, ordered by shape and then
/// lexicographically by picks.
pub fn enumerate_copies(k: usize, r: usize, m: usize, model: CopyModel, limits: &Limits) -> Result<Vec<CopySpec>> {
    let root = check_root(k, r, m)?;
    let count = copy_candidate_count(k, m, model, limits.max_copy_candidates);
    if count > limits.max_copy_candidates {
        return Err(Error::guard("candidate copies", count, limits.max_copy_candidates));
    }
    let widths = level_widths(k, m);
    let mut out = Vec::new();
    for shape in shapes(m, model) {
        if m == 0 {
            out.push(CopySpec { root, chosen: vec![] });
            continue;
        }
        let per_level: Vec<Vec<Vec<usize>>> = widths
            .iter()
            .zip(&shape)
            .map(|(&w, &c)| (1..=w).combinations(c).collect())
            .collect();
        out.extend(
            per_level
                .into_iter()
                .map(Vec::into_iter)
                .multi_cartesian_product()
                .map(|chosen| CopySpec { root, chosen }),
        );
    }
    Ok(out)
}

/// Chain family of a copy: the product of its picks, lexicographic.
pub fn chains_of_copy(c: &CopySpec) -> Vec<ChainTuple> {
    if c.chosen.is_empty() {
        return vec![ChainTuple(vec![])];
    }
    c.chosen
        .iter()
        .map(|level| level.iter().copied())
        .multi_cartesian_product()
        .map(ChainTuple)
        .collect()
}

/// Every chain from a root on level `k` to level `k + m`, lexicographic.
pub fn chain_universe(k: usize, m: usize) -> Vec<ChainTuple> {
    if m == 0 {
        return vec![ChainTuple(vec![])];
    }
    level_widths(k, m)
        .into_iter()
        .map(|w| 1..=w)
        .multi_cartesian_product()
        .map(ChainTuple)
        .collect()
}

/// Mixed-radix rank of a chain inside [`chain_universe`]; `None` if a
/// position is out of range.
fn chain_rank(widths: &[usize], chain: &ChainTuple) -> Option<usize> {
    if chain.0.len() != widths.len() {
        return None;
    }
    chain
        .0
        .iter()
        .zip(widths)
        .try_fold(0usize, |acc, (&p, &w)| (1..=w).contains(&p).then(|| acc * w + (p - 1)))
}

/// `n_F! / k_F! = (n k)_F * (n-k)_F!`, checked exactly, for `0 < k <= n`.
pub fn ratio_identity(n: usize, k: usize) -> Result<bool> {
    if !(0 < k && k <= n) {
        return Err(Error::invalid(format!("need 0 < k <= n, got n={n}, k={k}")));
    }
    let Some(lhs) = f_factorial(n).checked_exact_div(&f_factorial(k)) else {
        return Ok(false);
    };
    Ok(lhs == fibonomial(n, k) * f_factorial(n - k))
}

/// Cheap impossibility certificate for the aligned model.
///
/// Levels whose pick size is 1 pin every copy to a single position, so the
/// universe splits into independent slices over the remaining levels, each
/// of which must be tiled on its own. If a slice's size is not a multiple of
/// a copy's footprint on it, no aligned tiling exists.
pub fn aligned_obstruction(k: usize, m: usize) -> Option<String> {
    let free: Vec<usize> = (1..=m).filter(|&s| fib_usize(s) > 1).collect();
    if free.is_empty() {
        return None;
    }
    let slice: Nat = free.iter().map(|&s| fib(k + s)).product();
    let footprint: Nat = free.iter().map(|&s| fib(s)).product();
    if slice.checked_exact_div(&footprint).is_some() {
        return None;
    }
    Some(format!(
        "each slice over {} {} holds {slice} chains, not a multiple of the {footprint} chains a copy places in it",
        if free.len() == 1 { "level" } else { "levels" },
        free.iter().map(|s| k + s).join(",")
    ))
}

fn tiling_problem(
    k: usize,
    r: usize,
    m: usize,
    model: CopyModel,
    limits: &Limits,
    universe_cap: u64,
    cap_name: &'static str,
) -> Result<(Vec<CopySpec>, ExactCover, Vec<usize>)> {
    check_root(k, r, m)?;
    let universe = f_falling(k + m, m)?;
    if universe > universe_cap {
        return Err(Error::guard(cap_name, universe, universe_cap));
    }
    let widths = level_widths(k, m);
    let copies = enumerate_copies(k, r, m, model, limits)?;
    let mut ec = ExactCover::new(universe.to_u64().expect("guarded") as usize);
    for c in &copies {
        ec.add_row(
            chains_of_copy(c)
                .iter()
                .map(|ch| chain_rank(&widths, ch).expect("chain in universe")),
        );
    }
    Ok((copies, ec, widths))
}

/// Searches for a tiling of the chains above `<r, k>` by height-`m` copies.
/// `Ok(None)` means the search space was exhausted without a cover.
pub fn find_tiling(k: usize, r: usize, m: usize, model: CopyModel, limits: &Limits) -> Result<Option<TilingSolution>> {
    let (copies, ec, _) = tiling_problem(k, r, m, model, limits, limits.max_tiling_universe, "chain universe")?;
    let Some(rows) = ec.first_solution(limits.max_search_nodes)? else {
        return Ok(None);
    };
    let chosen: Vec<CopySpec> = rows.iter().map(|&i| copies[i].clone()).collect();
    let cover = chosen
        .iter()
        .enumerate()
        .flat_map(|(i, c)| chains_of_copy(c).into_iter().map(move |ch| (ch, i)))
        .collect();
    let sol = TilingSolution {
        root: VertexCoord::new(r, k),
        height: m,
        model,
        copies: chosen,
        cover,
    };
    debug_assert_eq!(Nat::from(sol.copies.len()), fibonomial(k + m, m));
    Ok(Some(sol))
}

/// Counts every tiling. Only for tiny universes (see
/// [`Limits::max_count_universe`]).
pub fn count_tilings(k: usize, r: usize, m: usize, model: CopyModel, limits: &Limits) -> Result<u64> {
    let (_, ec, _) = tiling_problem(
        k,
        r,
        m,
        model,
        limits,
        limits.max_count_universe,
        "chain universe (counting)",
    )?;
    ec.count_solutions(limits.max_search_nodes)
}

fn shape_allowed(shape: &[usize], model: CopyModel) -> bool {
    let base: Vec<usize> = (1..=shape.len()).map(fib_usize).collect();
    match model {
        CopyModel::Aligned => shape == base.as_slice(),
        CopyModel::Permuted => {
            let mut sorted = shape.to_vec();
            sorted.sort_unstable();
            sorted == base
        }
    }
}

/// Checks that the copies share the declared root, have admissible shapes,
/// have pairwise disjoint chain families whose union is the whole universe,
/// and that `cover` records exactly that assignment.
pub fn verify_tiling(t: &TilingSolution) -> bool {
    let (k, m) = (t.root.s, t.height);
    if check_root(k, t.root.j, m).is_err() {
        return false;
    }
    let widths = level_widths(k, m);
    let Some(size) = widths.iter().try_fold(1usize, |a, &w| a.checked_mul(w)) else {
        return false;
    };
    let mut owner: Vec<Option<usize>> = vec![None; size];
    for (i, c) in t.copies.iter().enumerate() {
        if c.root != t.root || c.height() != m || !shape_allowed(&c.shape(), t.model) {
            return false;
        }
        let valid_picks = c
            .chosen
            .iter()
            .zip(&widths)
            .all(|(pick, &w)| pick.windows(2).all(|p| p[0] < p[1]) && pick.iter().all(|p| (1..=w).contains(p)));
        if !valid_picks {
            return false;
        }
        for ch in chains_of_copy(c) {
            let idx = chain_rank(&widths, &ch).expect("picks validated");
            if owner[idx].replace(i).is_some() {
                return false;
            }
        }
    }
    if owner.iter().any(Option::is_none) || t.cover.len() != size {
        return false;
    }
    t.cover
        .iter()
        .all(|(ch, &i)| chain_rank(&widths, ch).is_some_and(|idx| owner[idx] == Some(i)))
}

/// For `0 < k <= n`, checks both forms
///
/// * `(n+1 k)_F = F_{k-1} (n k)_F + F_{n-k+2} (n k-1)_F`
/// * `(n+1 k)_F = F_{k+1} (n k)_F + F_{n-k} (n k-1)_F`
///
/// and the symmetry rewrite `F_{n-k} (n k-1)_F = F_{n-k} (n n-k+1)_F`.
pub fn recurrence_decomposition_check(n: usize, k: usize) -> Result<bool> {
    if !(0 < k && k <= n) {
        return Err(Error::invalid(format!("need 0 < k <= n, got n={n}, k={k}")));
    }
    let target = fibonomial(n + 1, k);
    let same = fibonomial(n, k);
    let lower = fibonomial(n, k - 1);
    let form_a = fib(k - 1) * &same + fib(n - k + 2) * &lower;
    let form_b = fib(k + 1) * &same + fib(n - k) * &lower;
    let rewrite = fib(n - k) * &lower == fib(n - k) * fibonomial(n, n - k + 1);
    Ok(form_a == target && form_b == target && rewrite)
}
