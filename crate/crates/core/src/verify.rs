//! Self-verification suites: each property re-checks one identity or
//! cross-check over a fixed range and reports a counterexample on failure.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cobweb::{mobius_sum_violation, CobwebPoset, VertexCoord};
use crate::det::{det_bareiss, det_cofactor};
use crate::fence::{beck_identities, count_filters_oracle, count_ideals, count_ideals_oracle};
use crate::gvpaths::{binomial, binomial_determinant, IndexSet};
use crate::seqcore::{f_factorial, f_falling, fib, fibonomial, fibonomial_rec, q_binomial, Recurrence};
use crate::tiling::{
    aligned_obstruction, copy_candidate_count, enumerate_copies, find_tiling, ratio_identity,
    recurrence_decomposition_check, verify_tiling, CopyModel,
};
use crate::weighted::{
    c_coeff, c_coeff_oracle, s_coeff, s_coeff_oracle, stirling_first_unsigned, stirling_second, Preset, WeightVector,
};
use crate::{Limits, Nat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Arith,
    Poset,
    Tiling,
    Paths,
    Fence,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Arith, Suite::Poset, Suite::Tiling, Suite::Paths, Suite::Fence];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Poset => "poset",
            Suite::Tiling => "tiling",
            Suite::Paths => "paths",
            Suite::Fence => "fence",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Knobs for fault injection.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Flip this `(row, col)` entry of the order-built zeta matrix before it
    /// is compared with the explicit construction.
    pub zeta_fault: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    /// Summary of what was checked, or the counterexample on failure.
    pub detail: String,
    pub elapsed: Duration,
}

type Outcome = Result<String, String>;
type Check = fn(&VerifyOptions) -> Outcome;

fn ensure(cond: bool, counterexample: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(counterexample())
    }
}

fn properties(suite: Suite) -> Vec<(Suite, &'static str, Check)> {
    let arith: Vec<(&'static str, Check)> = vec![
        ("fibonomial symmetry, n <= 40", arith_symmetry),
        ("recurrences A and B equal product formula, n <= 30", arith_recurrences),
        ("exact division in fibonomial, n <= 200", arith_integrality),
        ("falling * factorial = factorial, n <= 40", arith_falling),
        (
            "gaussian coefficients nonnegative, sum to binomial, n <= 12",
            arith_gaussian,
        ),
        (
            "weighted recurrences equal brute force, len <= 8 over {1,2,3}, k <= 8",
            weighted_oracle,
        ),
        ("ones preset gives binomials, n, k <= 10", weighted_binomial),
        ("arithmetic preset gives Stirling numbers, n, k <= 7", weighted_stirling),
        (
            "geometric preset gives gaussian coefficients, q in {2,3}, n, k <= 6",
            weighted_gaussian,
        ),
    ];
    let poset: Vec<(&'static str, Check)> = vec![
        ("explicit zeta equals order zeta, N <= 10", poset_zeta),
        ("zeta * mu = mu * zeta = identity, N <= 10", poset_mobius),
        ("sum of mu over [x, y] is [x = y], N <= 10", poset_mobius_sum),
        ("maximal chains from root = n_F!, n <= 6", poset_root_chains),
        (
            "maximal chains from any vertex = falling factorial, n <= 6",
            poset_vertex_chains,
        ),
        ("root chain count factors through any level, N <= 12", poset_chain_ratio),
        ("chain-count matrix equals brute force, N = 5", poset_all_chains),
    ];
    let tiling: Vec<(&'static str, Check)> = vec![
        (
            "copy counts match the product formula, independent of r",
            tiling_copy_counts,
        ),
        ("falling(k+m, m) = fibonomial * m_F!, k + m <= 40", tiling_universe),
        ("found tilings verify and have fibonomial copies", tiling_solutions),
        ("ratio identity, n <= 40", tiling_ratio),
        ("both recurrence forms and symmetry rewrite, n <= 40", tiling_recurrence),
    ];
    let paths: Vec<(&'static str, Check)> = vec![
        (
            "sum of N(R) = fibonomial(n+1, k), every N(R) >= 0, n <= 12",
            paths_identity,
        ),
        (
            "Bareiss equals cofactor expansion on path matrices with k <= 4",
            paths_det,
        ),
    ];
    let fence: Vec<(&'static str, Check)> = vec![
        ("transfer count equals brute force, m <= 15", fence_oracle),
        ("ideal count = F_{m+2}, m <= 30", fence_fib),
        ("filter count equals ideal count, m <= 12", fence_duality),
        ("both product identities, 2 <= k <= n <= 40", fence_beck),
    ];
    let table = [
        (Suite::Arith, arith),
        (Suite::Poset, poset),
        (Suite::Tiling, tiling),
        (Suite::Paths, paths),
        (Suite::Fence, fence),
    ];
    table
        .into_iter()
        .filter(|(s, _)| suite == Suite::All || *s == suite)
        .flat_map(|(s, props)| props.into_iter().map(move |(n, c)| (s, n, c)))
        .collect()
}

/// Runs every property of `suite`. Properties run in parallel; the report
/// order is fixed.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Vec<PropertyReport> {
    properties(suite)
        .into_par_iter()
        .map(|(suite, name, check)| {
            let start = Instant::now();
            let outcome = check(opts);
            let elapsed = start.elapsed();
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            PropertyReport {
                suite,
                name,
                passed,
                detail,
                elapsed,
            }
        })
        .collect()
}

fn arith_symmetry(_: &VerifyOptions) -> Outcome {
    for n in 0..=40 {
        for k in 0..=n {
            ensure(fibonomial(n, k) == fibonomial(n, n - k), || format!("n={n} k={k}"))?;
        }
    }
    Ok("861 pairs".into())
}

fn arith_recurrences(_: &VerifyOptions) -> Outcome {
    for n in 0..=30 {
        for k in 0..=n {
            let direct = fibonomial(n, k);
            let a = fibonomial_rec(n, k, Recurrence::A);
            let b = fibonomial_rec(n, k, Recurrence::B);
            ensure(a == direct && b == direct, || {
                format!("n={n} k={k}: product {direct}, A {a}, B {b}")
            })?;
        }
    }
    Ok("496 pairs".into())
}

fn arith_integrality(_: &VerifyOptions) -> Outcome {
    for n in 0..=200 {
        for k in 0..=n {
            let num = f_falling(n, k).map_err(|e| e.to_string())?;
            ensure(num.checked_exact_div(&f_factorial(k)).is_some(), || {
                format!("n={n} k={k}")
            })?;
        }
    }
    Ok("20301 pairs".into())
}

fn arith_falling(_: &VerifyOptions) -> Outcome {
    for n in 0..=40 {
        for k in 0..=n {
            let lhs = f_falling(n, k).map_err(|e| e.to_string())? * f_factorial(n - k);
            ensure(lhs == f_factorial(n), || format!("n={n} k={k}"))?;
        }
    }
    Ok("861 pairs".into())
}

fn arith_gaussian(_: &VerifyOptions) -> Outcome {
    for n in 0..=12 {
        for k in 0..=n {
            let p = q_binomial(n, k);
            ensure(p.coefficients().iter().all(|c| *c >= BigInt::zero()), || {
                format!("negative coefficient in ({n} {k})_q = {p}")
            })?;
            let total: BigInt = p.coefficients().iter().sum();
            ensure(total == binomial(n, k).to_bigint(), || {
                format!("({n} {k})_q at q=1 is {total}")
            })?;
        }
    }
    Ok("91 polynomials".into())
}

fn weighted_oracle(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    let mut vectors = 0;
    for len in 0..=8usize {
        for ws in [1u64, 2, 3].into_iter().combinations_with_replacement(len) {
            vectors += 1;
            let w = WeightVector::from_u64s(&ws, false).map_err(|e| e.to_string())?;
            for k in 0..=8 {
                let c = c_coeff(&w, k);
                let co = c_coeff_oracle(&w, k, &limits).map_err(|e| e.to_string())?;
                ensure(c == co, || format!("C w={ws:?} k={k}: recurrence {c}, oracle {co}"))?;
                if !w.is_empty() || k == 0 {
                    let s = s_coeff(&w, k).map_err(|e| e.to_string())?;
                    let so = s_coeff_oracle(&w, k, &limits).map_err(|e| e.to_string())?;
                    ensure(s == so, || format!("S w={ws:?} k={k}: recurrence {s}, oracle {so}"))?;
                }
            }
        }
    }
    Ok(format!("{vectors} weight vectors"))
}

fn preset(p: Preset) -> Result<WeightVector, String> {
    WeightVector::preset(p).map_err(|e| e.to_string())
}

fn weighted_binomial(_: &VerifyOptions) -> Outcome {
    for n in 1..=10 {
        let w = preset(Preset::Ones(n))?;
        for k in 0..=10 {
            ensure(c_coeff(&w, k) == binomial(n, k), || format!("C ones({n}) k={k}"))?;
            let s = s_coeff(&w, k).map_err(|e| e.to_string())?;
            ensure(s == binomial(n + k - 1, k), || format!("S ones({n}) k={k}"))?;
        }
    }
    Ok("110 pairs".into())
}

fn weighted_stirling(_: &VerifyOptions) -> Outcome {
    for n in 1..=7 {
        let w = preset(Preset::Arithmetic(n))?;
        for k in 0..=7 {
            let want = if k <= n {
                stirling_first_unsigned(n + 1, n + 1 - k)
            } else {
                Nat::zero()
            };
            ensure(c_coeff(&w, k) == want, || format!("C arithmetic({n}) k={k}"))?;
            let s = s_coeff(&w, k).map_err(|e| e.to_string())?;
            ensure(s == stirling_second(n + k, n), || format!("S arithmetic({n}) k={k}"))?;
        }
    }
    Ok("56 pairs".into())
}

fn weighted_gaussian(_: &VerifyOptions) -> Outcome {
    for q in [2u64, 3] {
        for n in 1..=6 {
            let w = preset(Preset::GeometricQ(n, q))?;
            for k in 0..=6 {
                let s = s_coeff(&w, k).map_err(|e| e.to_string())?.to_bigint();
                let want = q_binomial(n + k - 1, k).eval(&BigInt::from(q));
                ensure(s == want, || format!("q={q} n={n} k={k}: {s} vs {want}"))?;
            }
        }
    }
    Ok("84 triples".into())
}

fn poset(n: usize) -> Result<CobwebPoset, String> {
    CobwebPoset::build(n).map_err(|e| e.to_string())
}

fn poset_zeta(opts: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    for n in 1..=10 {
        let p = poset(n)?;
        let explicit = p.zeta_explicit(&limits).map_err(|e| e.to_string())?;
        let mut order = p.zeta_from_order(&limits).map_err(|e| e.to_string())?;
        if let Some((x, y)) = opts.zeta_fault {
            if x <= y && y <= order.dim() && x >= 1 {
                let flipped = BigInt::one() - order.get(x, y);
                order = order.with_entry(x, y, flipped);
            }
        }
        if let Some((x, y)) = explicit.first_difference(&order) {
            return Err(format!(
                "N={n}: entry (row {x}, col {y}) explicit {} vs order {}",
                explicit.get(x, y),
                order.get(x, y)
            ));
        }
    }
    Ok("N = 1..10".into())
}

fn poset_mobius(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    for n in 1..=10 {
        let p = poset(n)?;
        let z = p.zeta_from_order(&limits).map_err(|e| e.to_string())?;
        let mu = p.mobius(&limits).map_err(|e| e.to_string())?;
        let id = crate::cobweb::IncMatrix::identity(z.dim());
        if let Some((x, y)) = z.mul(&mu).first_difference(&id) {
            return Err(format!("N={n}: (zeta mu)({x}, {y}) != delta"));
        }
        if let Some((x, y)) = mu.mul(&z).first_difference(&id) {
            return Err(format!("N={n}: (mu zeta)({x}, {y}) != delta"));
        }
    }
    Ok("N = 1..10".into())
}

fn poset_mobius_sum(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    for n in 1..=10 {
        let p = poset(n)?;
        let mu = p.mobius(&limits).map_err(|e| e.to_string())?;
        if let Some((x, y)) = mobius_sum_violation(&p, &mu) {
            return Err(format!("N={n}: pair ({x}, {y})"));
        }
    }
    Ok("N = 1..10".into())
}

fn poset_root_chains(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    let p = poset(6)?;
    let root = VertexCoord::new(1, 1);
    for n in 1..=6 {
        let got = p
            .enumerate_max_chains(root, n, &limits)
            .map_err(|e| e.to_string())?
            .len();
        ensure(Nat::from(got) == f_factorial(n), || format!("n={n}: enumerated {got}"))?;
    }
    Ok("n = 1..6".into())
}

fn poset_vertex_chains(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    let p = poset(6)?;
    let mut vertices = 0;
    for k in 1..=6 {
        for j in 1..=p.level_size(k).unwrap_or(0) {
            let v = VertexCoord::new(j, k);
            vertices += 1;
            for n in k..=6 {
                let got = p.enumerate_max_chains(v, n, &limits).map_err(|e| e.to_string())?.len();
                let want = f_falling(n, n - k).map_err(|e| e.to_string())?;
                ensure(Nat::from(got) == want, || {
                    format!("{v} to level {n}: enumerated {got}, want {want}")
                })?;
                let dp = p.count_max_chains_dp(v, n, &limits).map_err(|e| e.to_string())?;
                ensure(dp == want, || format!("{v} to level {n}: dp {dp}"))?;
            }
        }
    }
    Ok(format!("{vertices} vertices"))
}

fn poset_chain_ratio(_: &VerifyOptions) -> Outcome {
    let p = poset(12)?;
    for n in 1..=12 {
        for k in 1..=n {
            let v = VertexCoord::new(p.level_size(k).unwrap_or(1), k);
            let whole = p.count_max_chains_from_root(n).map_err(|e| e.to_string())?;
            let lower = p.count_max_chains_from_root(k).map_err(|e| e.to_string())?;
            let upper = p.count_max_chains_from_vertex(v, n).map_err(|e| e.to_string())?;
            ensure(whole == lower * upper, || format!("k={k} n={n}"))?;
        }
    }
    Ok("78 pairs".into())
}

/// Chains from `x` to `y` counted by trying every subset of the vertices
/// strictly between them.
fn brute_chain_count(p: &CobwebPoset, x: usize, y: usize) -> u64 {
    if x == y {
        return 1;
    }
    if !p.leq(x, y) {
        return 0;
    }
    let between: Vec<usize> = (x + 1..y)
        .filter(|&z| p.leq(x, z) && p.leq(z, y) && z != x && z != y)
        .collect();
    (0u64..1 << between.len())
        .filter(|mask| {
            let picked: Vec<usize> = (0..between.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| between[i])
                .collect();
            picked.windows(2).all(|w| p.leq(w[0], w[1]) && w[0] != w[1])
        })
        .count() as u64
}

fn poset_all_chains(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    let p = poset(5)?;
    let c = p.chain_matrix(&limits).map_err(|e| e.to_string())?;
    let d = p.vertex_count();
    for x in 1..=d {
        for y in 1..=d {
            let brute = brute_chain_count(&p, x, y);
            let fast = if y >= x { c.get(x, y).clone() } else { BigInt::zero() };
            ensure(fast == BigInt::from(brute), || {
                format!("({x}, {y}): matrix {fast}, brute force {brute}")
            })?;
            let api = p.count_all_chains(x, y, &limits).map_err(|e| e.to_string())?;
            ensure(api == brute, || format!("({x}, {y}): count_all_chains {api}"))?;
        }
    }
    Ok(format!("{} pairs", d * d))
}

fn tiling_copy_counts(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for k in 1..=6 {
        for m in 0..=4 {
            let aligned: Nat = (1..=m)
                .map(|s| binomial(crate::cobweb::fib_usize(k + s), crate::cobweb::fib_usize(s)))
                .product();
            for model in [CopyModel::Aligned, CopyModel::Permuted] {
                let cap = limits.max_copy_candidates;
                if copy_candidate_count(k, m, model, cap) > cap {
                    continue;
                }
                let width = crate::cobweb::fib_usize(k);
                let mut counts = (1..=width.min(3)).map(|r| enumerate_copies(k, r, m, model, &limits).map(|v| v.len()));
                let first = counts.next().expect("level is nonempty").map_err(|e| e.to_string())?;
                for other in counts {
                    ensure(other.map_err(|e| e.to_string())? == first, || {
                        format!("k={k} m={m} {model}: count depends on r")
                    })?;
                }
                if model == CopyModel::Aligned {
                    ensure(Nat::from(first) == aligned, || {
                        format!("k={k} m={m}: {first} vs {aligned}")
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (k, m, model) cases"))
}

fn tiling_universe(_: &VerifyOptions) -> Outcome {
    for n in 0..=40 {
        for m in 0..=n {
            let lhs = f_falling(n, m).map_err(|e| e.to_string())?;
            ensure(lhs == fibonomial(n, m) * f_factorial(m), || {
                format!("k={} m={m}", n - m)
            })?;
        }
    }
    Ok("861 pairs".into())
}

/// Instances searched by the tiling property.
pub const TILING_INSTANCES: [(usize, usize); 12] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 2),
    (3, 3),
    (4, 2),
    (4, 3),
    (5, 2),
];

fn tiling_solutions(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    let mut absent = Vec::new();
    for (k, m) in TILING_INSTANCES {
        for model in [CopyModel::Aligned, CopyModel::Permuted] {
            match find_tiling(k, 1, m, model, &limits).map_err(|e| e.to_string())? {
                Some(t) => {
                    ensure(verify_tiling(&t), || {
                        format!("({k},{m}) {model}: solution fails verification")
                    })?;
                    ensure(Nat::from(t.copies.len()) == fibonomial(k + m, m), || {
                        format!("({k},{m}) {model}: {} copies", t.copies.len())
                    })?;
                }
                None => {
                    // an aligned miss is acceptable only with a certificate
                    ensure(
                        model == CopyModel::Aligned && aligned_obstruction(k, m).is_some(),
                        || format!("({k},{m}) {model}: no cover and no obstruction certificate"),
                    )?;
                    absent.push(format!("({k},{m})"));
                }
            }
        }
    }
    Ok(format!(
        "{} instances x 2 models; aligned with no cover (certified): {}",
        TILING_INSTANCES.len(),
        if absent.is_empty() {
            "none".into()
        } else {
            absent.join(" ")
        }
    ))
}

fn tiling_ratio(_: &VerifyOptions) -> Outcome {
    for n in 1..=40 {
        for k in 1..=n {
            ensure(ratio_identity(n, k).map_err(|e| e.to_string())?, || {
                format!("n={n} k={k}")
            })?;
        }
    }
    Ok("820 pairs".into())
}

fn tiling_recurrence(_: &VerifyOptions) -> Outcome {
    for n in 1..=40 {
        for k in 1..=n {
            ensure(recurrence_decomposition_check(n, k).map_err(|e| e.to_string())?, || {
                format!("n={n} k={k}")
            })?;
        }
    }
    Ok("820 pairs".into())
}

fn paths_identity(_: &VerifyOptions) -> Outcome {
    for n in 0..=12usize {
        for k in 0..=n + 1 {
            let mut total = BigInt::zero();
            for r in (0..=n).combinations(k) {
                let set = IndexSet::new(r.clone(), n).map_err(|e| e.to_string())?;
                let d = binomial_determinant(&set);
                ensure(d >= BigInt::zero(), || format!("N({r:?}) = {d} < 0 at n={n}"))?;
                total += d;
            }
            let want = fibonomial(n + 1, k).to_bigint();
            ensure(total == want, || format!("n={n} k={k}: sum {total}, fibonomial {want}"))?;
        }
    }
    Ok("n = 0..12, 8191 nonempty subsets at n = 12".into())
}

fn paths_det(_: &VerifyOptions) -> Outcome {
    let mut count = 0;
    for n in 0..=12usize {
        for k in 0..=4.min(n + 1) {
            for r in (0..=n).combinations(k) {
                let m = IndexSet::new(r.clone(), n).map_err(|e| e.to_string())?.matrix();
                let (a, b) = (det_bareiss(&m), det_cofactor(&m));
                ensure(a == b, || format!("R={r:?} n={n}: Bareiss {a}, cofactor {b}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} matrices"))
}

fn fence_oracle(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    for m in 0..=15 {
        let brute = count_ideals_oracle(m, &limits).map_err(|e| e.to_string())?;
        ensure(count_ideals(m) == brute, || {
            format!("m={m}: transfer {}, brute {brute}", count_ideals(m))
        })?;
    }
    Ok("m = 0..15".into())
}

fn fence_fib(_: &VerifyOptions) -> Outcome {
    for m in 0..=30 {
        ensure(count_ideals(m) == fib(m + 2), || format!("m={m}"))?;
    }
    Ok("m = 0..30".into())
}

fn fence_duality(_: &VerifyOptions) -> Outcome {
    let limits = Limits::default();
    for m in 0..=12 {
        let f = count_filters_oracle(m, &limits).map_err(|e| e.to_string())?;
        let i = count_ideals_oracle(m, &limits).map_err(|e| e.to_string())?;
        ensure(f == i, || format!("m={m}: filters {f}, ideals {i}"))?;
    }
    Ok("m = 0..12".into())
}

fn fence_beck(_: &VerifyOptions) -> Outcome {
    for n in 2..=40 {
        for k in 2..=n {
            ensure(beck_identities(n, k).map_err(|e| e.to_string())?, || {
                format!("n={n} k={k}")
            })?;
        }
    }
    Ok("780 pairs".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn brute_chain_counts() {
        let p = CobwebPoset::build(3).unwrap();
        assert_eq!(brute_chain_count(&p, 1, 3), 2);
        assert_eq!(brute_chain_count(&p, 3, 4), 0);
    }

    #[test]
    fn zeta_fault_is_reported_with_coordinates() {
        let opts = VerifyOptions {
            zeta_fault: Some((3, 7)),
        };
        let err = poset_zeta(&opts).unwrap_err();
        assert!(err.contains("row 3, col 7"), "{err}");
    }

    #[test]
    fn fence_suite_passes() {
        let reports = run(Suite::Fence, &VerifyOptions::default());
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
    }
}
