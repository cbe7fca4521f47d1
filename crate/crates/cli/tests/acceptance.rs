//! Exit criteria, one PASS/FAIL line each. Exact integer equality throughout.
//! Runtime bounds are part of each criterion.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::Value;

use cobweb_core::cobweb::{CobwebPoset, IncMatrix, VertexCoord};
use cobweb_core::fence::{beck_identities, count_ideals, count_ideals_oracle};
use cobweb_core::gvpaths::{binomial, path_terms};
use cobweb_core::seqcore::{f_factorial, f_falling, fib, fibonomial, fibonomial_rec, Recurrence};
use cobweb_core::tiling::{
    aligned_obstruction, chains_of_copy, find_tiling, ratio_identity, recurrence_decomposition_check, verify_tiling,
    CopyModel,
};
use cobweb_core::weighted::{c_coeff, s_coeff, stirling_first_unsigned, stirling_second, Preset, WeightVector};
use cobweb_core::{Limits, Nat};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: impl ToString) -> String {
    err.to_string()
}

/// `k`-subsets of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(n, k, false)
}

/// `k`-multisets of `0..n`, lexicographic.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(n, k, true)
}

fn subsets(n: usize, k: usize, repeat: bool) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, repeat: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(if repeat { i } else { i + 1 }, n, k, repeat, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, repeat, &mut Vec::new(), &mut out);
    out
}

// 1
fn fibonomial_engine() -> Check {
    for n in 0..=30 {
        for k in 0..=n {
            let p = fibonomial(n, k);
            let a = fibonomial_rec(n, k, Recurrence::A);
            let b = fibonomial_rec(n, k, Recurrence::B);
            ensure(p == a && p == b, || format!("n={n} k={k}: product {p}, A {a}, B {b}"))?;
        }
    }
    for n in 0..=40 {
        for k in 0..=n {
            ensure(fibonomial(n, k) == fibonomial(n, n - k), || {
                format!("symmetry fails at n={n} k={k}")
            })?;
        }
    }
    Ok("3 routes agree for 0 <= k <= n <= 30; symmetric for n <= 40".into())
}

/// Published upper-left 15x15 block of zeta, transcribed verbatim.
const PRINTED_BLOCK: [[u8; 15]; 15] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

// 2
fn zeta_equivalence() -> Check {
    let limits = Limits::default();
    for n in 1..=10 {
        let p = CobwebPoset::build(n).map_err(e)?;
        let explicit = p.zeta_explicit(&limits).map_err(e)?;
        let order = p.zeta_from_order(&limits).map_err(e)?;
        if let Some((x, y)) = explicit.first_difference(&order) {
            return Err(format!("N={n}: constructions differ at ({x}, {y})"));
        }
    }
    let p = CobwebPoset::build(6).map_err(e)?;
    let z = p.zeta_explicit(&limits).map_err(e)?;
    let mut diffs = Vec::new();
    for x in 1..=15 {
        for y in 1..=15 {
            let printed = PRINTED_BLOCK[x - 1][y - 1];
            let computed = z.get(x, y);
            if *computed != printed.into() {
                diffs.push(format!("({x}, {y}) printed {printed} computed {computed}"));
            }
        }
    }
    ensure(diffs.is_empty(), || {
        format!(
            "constructions agree for N = 1..10, but N = 6 differs from the printed block at {}",
            diffs.join(", ")
        )
    })?;
    Ok("constructions agree for N = 1..10; N = 6 matches the printed block".into())
}

// 3
fn mobius_inverse() -> Check {
    let limits = Limits::default();
    for n in 1..=10 {
        let p = CobwebPoset::build(n).map_err(e)?;
        let z = p.zeta_from_order(&limits).map_err(e)?;
        let mu = p.mobius(&limits).map_err(e)?;
        let id = IncMatrix::identity(z.dim());
        if let Some((x, y)) = z.mul(&mu).first_difference(&id) {
            return Err(format!("N={n}: (zeta mu)({x}, {y}) != delta"));
        }
        if let Some((x, y)) = mu.mul(&z).first_difference(&id) {
            return Err(format!("N={n}: (mu zeta)({x}, {y}) != delta"));
        }
    }
    Ok("zeta mu = mu zeta = delta for N = 1..10 (dim up to 143)".into())
}

/// Maximal chains from `x` up to level `top`, by depth-first search over the
/// order relation only.
fn dfs_chains(p: &CobwebPoset, x: usize, top: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    path.push(x);
    let level = p.coord_of(x).expect("vertex").s;
    if level == top {
        out.push(path.clone());
    } else {
        for y in 1..=p.vertex_count() {
            if y != x && p.leq(x, y) && p.coord_of(y).expect("vertex").s == level + 1 {
                dfs_chains(p, y, top, path, out);
            }
        }
    }
    path.pop();
}

// 4
fn chain_enumeration() -> Check {
    let limits = Limits::default();
    let p = CobwebPoset::build(6).map_err(e)?;
    for x in 1..=p.vertex_count() {
        let v = p.coord_of(x).map_err(e)?;
        for n in v.s..=6 {
            let mut dfs = Vec::new();
            dfs_chains(&p, x, n, &mut Vec::new(), &mut dfs);
            let listed = p.enumerate_max_chains(v, n, &limits).map_err(e)?;
            let listed_idx: Vec<Vec<usize>> = listed
                .iter()
                .map(|c| c.iter().map(|&u| p.linear_index(u)).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()
                .map_err(e)?;
            let a: BTreeSet<_> = dfs.iter().collect();
            let b: BTreeSet<_> = listed_idx.iter().collect();
            ensure(a.len() == dfs.len() && a == b, || {
                format!("{v} to level {n}: listing differs from search")
            })?;
            let want = if x == 1 {
                f_factorial(n)
            } else {
                f_falling(n, n - v.s).map_err(e)?
            };
            ensure(Nat::from(dfs.len()) == want, || {
                format!("{v} to level {n}: {} chains, want {want}", dfs.len())
            })?;
        }
    }
    let count = |j, k, n| {
        p.enumerate_max_chains(VertexCoord::new(j, k), n, &limits)
            .map(|c| c.len())
    };
    let root5 = count(1, 1, 5).map_err(e)?;
    let l3 = count(2, 3, 6).map_err(e)?;
    ensure(root5 == 30 && l3 == 120, || {
        format!("root to level 5: {root5}; <2,3> to level 6: {l3}")
    })?;
    Ok(format!(
        "all 20 vertices, every target level <= 6; root->5: {root5}, <2,3>->6: {l3}"
    ))
}

// 5
fn tiling_instances() -> Check {
    let limits = Limits::default();
    let required = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2)];
    let mut missing = Vec::new();
    let mut permuted = Vec::new();
    for (k, m) in required {
        let start = Instant::now();
        let found = find_tiling(k, 1, m, CopyModel::Aligned, &limits).map_err(e)?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(10), || {
            format!("({k},{m}) took {elapsed:?}")
        })?;
        let want = fibonomial(k + m, m);
        match found {
            Some(t) => {
                ensure(verify_tiling(&t), || format!("({k},{m}): tiling fails verification"))?;
                ensure(Nat::from(t.copies.len()) == want, || {
                    format!("({k},{m}): {} copies", t.copies.len())
                })?;
                if (k, m) == (2, 3) {
                    ensure(
                        t.cover.len() == 30 && t.copies.iter().all(|c| chains_of_copy(c).len() == 2),
                        || "(2,3) is not 15 copies of 2 chains".into(),
                    )?;
                }
            }
            None => {
                let cert = aligned_obstruction(k, m).unwrap_or_else(|| "no certificate".into());
                missing.push(format!("({k},{m}) [{cert}]"));
            }
        }
        // same instance with level sizes permuted, reported for reference
        let alt = find_tiling(k, 1, m, CopyModel::Permuted, &limits).map_err(e)?;
        let ok = alt
            .as_ref()
            .is_some_and(|t| verify_tiling(t) && Nat::from(t.copies.len()) == want);
        permuted.push(format!("({k},{m}){}", if ok { "" } else { "!" }));
    }
    ensure(missing.is_empty(), || {
        format!(
            "no cover by copies with F_s positions on level k+s for {}; \
             with permuted level sizes all required instances tile: {}",
            missing.join(", "),
            permuted.join(" ")
        )
    })?;
    Ok("all six instances tiled and verified; (2,3) = 15 copies x 2 chains".into())
}

// 6
fn ratio_and_rewrite() -> Check {
    let p = CobwebPoset::build(40).map_err(e)?;
    for n in 1..=40 {
        for k in 1..=n {
            ensure(ratio_identity(n, k).map_err(e)?, || {
                format!("ratio identity n={n} k={k}")
            })?;
            ensure(recurrence_decomposition_check(n, k).map_err(e)?, || {
                format!("rewrite n={n} k={k}")
            })?;
            let whole = p.count_max_chains_from_root(n).map_err(e)?;
            let lower = p.count_max_chains_from_root(k).map_err(e)?;
            let upper = p.count_max_chains_from_vertex(VertexCoord::new(1, k), n).map_err(e)?;
            ensure(whole == lower * upper.clone(), || format!("chain split n={n} k={k}"))?;
            ensure(upper == fibonomial(n, k) * f_factorial(n - k), || {
                format!("copy count n={n} k={k}")
            })?;
        }
    }
    Ok("820 pairs, 0 < k <= n <= 40".into())
}

/// Gaussian coefficient at integer q by the q-Pascal rule.
fn gaussian_at(n: usize, k: usize, q: u64) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for i in 1..=n {
        let mut next = vec![BigUint::from(0u32); i + 1];
        for j in 0..=i {
            let left = if j > 0 { row[j - 1].clone() } else { BigUint::from(0u32) };
            let up = if j < i {
                row[j].clone() * BigUint::from(q).pow(j as u32)
            } else {
                BigUint::from(0u32)
            };
            next[j] = left + up;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

// 7
fn weighted() -> Check {
    let mut vectors = 0;
    for len in 0..=8 {
        for idx in multisets(3, len) {
            let ws: Vec<u64> = idx.iter().map(|&i| i as u64 + 1).collect();
            let w = WeightVector::from_u64s(&ws, false).map_err(e)?;
            vectors += 1;
            for k in 0..=8 {
                let brute_c: BigUint = combinations(len, k)
                    .iter()
                    .map(|c| c.iter().map(|&i| BigUint::from(ws[i])).product::<BigUint>())
                    .sum();
                let c = c_coeff(&w, k);
                ensure(*c.as_biguint() == brute_c, || {
                    format!("C {ws:?} k={k}: {c} vs {brute_c}")
                })?;
                if len > 0 || k == 0 {
                    let brute_s: BigUint = multisets(len, k)
                        .iter()
                        .map(|c| c.iter().map(|&i| BigUint::from(ws[i])).product::<BigUint>())
                        .sum();
                    let s = s_coeff(&w, k).map_err(e)?;
                    ensure(*s.as_biguint() == brute_s, || {
                        format!("S {ws:?} k={k}: {s} vs {brute_s}")
                    })?;
                }
            }
        }
    }
    let preset = |p| WeightVector::preset(p).map_err(e);
    for n in 1..=8 {
        let w = preset(Preset::Ones(n))?;
        for k in 0..=8 {
            ensure(c_coeff(&w, k) == binomial(n, k), || format!("ones({n}) C k={k}"))?;
            ensure(s_coeff(&w, k).map_err(e)? == binomial(n + k - 1, k), || {
                format!("ones({n}) S k={k}")
            })?;
        }
    }
    for n in 1..=7 {
        let w = preset(Preset::Arithmetic(n))?;
        for k in 0..=7 {
            let first = if k <= n {
                stirling_first_unsigned(n + 1, n + 1 - k)
            } else {
                Nat::zero()
            };
            ensure(c_coeff(&w, k) == first, || format!("arithmetic({n}) C k={k}"))?;
            ensure(s_coeff(&w, k).map_err(e)? == stirling_second(n + k, n), || {
                format!("arithmetic({n}) S k={k}")
            })?;
        }
    }
    for q in [2u64, 3] {
        for n in 1..=6 {
            let w = preset(Preset::GeometricQ(n, q))?;
            for k in 0..=6 {
                let got = s_coeff(&w, k).map_err(e)?;
                let want = gaussian_at(n + k - 1, k, q);
                ensure(*got.as_biguint() == want, || {
                    format!("geometric({n}, {q}) S k={k}: {got} vs {want}")
                })?;
            }
        }
    }
    Ok(format!(
        "{vectors} weight vectors x k <= 8; binomial, Stirling and gaussian presets"
    ))
}

// 8
fn gessel_viennot() -> Check {
    let limits = Limits::default();
    let mut terms = 0;
    for n in 0..=12 {
        for k in 0..=n + 1 {
            // path_terms rejects any negative determinant
            let all = path_terms(n, k, &limits).map_err(e)?;
            terms += all.len();
            let sum: Nat = all.into_iter().map(|(_, v)| v).sum();
            let want = fibonomial(n + 1, k);
            ensure(sum == want, || format!("n={n} k={k}: sum {sum}, want {want}"))?;
        }
    }
    Ok(format!("{terms} index sets, all N(R) >= 0, n <= 12"))
}

// 9
fn fence() -> Check {
    let limits = Limits::default();
    for m in 0..=15 {
        let brute = count_ideals_oracle(m, &limits).map_err(e)?;
        ensure(count_ideals(m) == brute, || {
            format!("m={m}: transfer {} brute {brute}", count_ideals(m))
        })?;
    }
    for m in 0..=30 {
        ensure(count_ideals(m) == fib(m + 2), || format!("m={m}: ideals != F_(m+2)"))?;
    }
    for n in 2..=40 {
        for k in 2..=n {
            ensure(beck_identities(n, k).map_err(e)?, || format!("n={n} k={k}"))?;
        }
    }
    Ok("m <= 15 brute force, m <= 30 Fibonacci, 780 identity pairs".into())
}

fn cobweb(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_cobweb"))
        .args(args)
        .output()
        .map_err(e)
}

// 10
fn cli_verify_and_json() -> Check {
    let start = Instant::now();
    let out = cobweb(&["verify", "--suite", "all"])?;
    let wall = start.elapsed();
    ensure(out.status.success(), || {
        format!(
            "verify --suite all exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stdout)
        )
    })?;
    ensure(wall < Duration::from_secs(120), || {
        format!("verify --suite all took {wall:?}")
    })?;
    let commands: &[&[&str]] = &[
        &["fibonomial", "60", "30"],
        &["fibonomial", "--triangle", "8"],
        &["zeta", "5"],
        &["zeta", "8", "--check"],
        &["mobius", "5"],
        &["chains", "2", "5", "--enumerate"],
        &["tiling", "2", "1", "3"],
        &["tiling", "2", "1", "3", "--model", "permuted"],
        &["tiling", "1", "1", "3", "--count-all"],
        &["gv", "6", "3", "--terms"],
        &["konvalina", "c", "arithmetic:6", "3"],
        &["konvalina", "s", "1,1,2,3", "4"],
        &["fence", "12"],
        &["hasse", "4"],
        &["verify", "--suite", "all"],
    ];
    for args in commands {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let out = cobweb(&full)?;
        ensure(out.status.success(), || format!("{args:?} failed"))?;
        let text = String::from_utf8(out.stdout).map_err(e)?;
        let v: Value = serde_json::from_str(&text).map_err(|err| format!("{args:?}: {err}"))?;
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).map_err(e)?).map_err(e)?;
        ensure(
            v == again && serde_json::to_string_pretty(&v).map_err(e)? + "\n" == text,
            || format!("{args:?}: JSON does not round-trip"),
        )?;
        for key in ["command", "inputs", "result", "version"] {
            ensure(v.get(key).is_some(), || format!("{args:?}: missing {key}"))?;
        }
    }
    Ok(format!(
        "verify --suite all exit 0 in {:.1} s; {} JSON records round-trip",
        wall.as_secs_f64(),
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "fibonomial engine: three routes agree, symmetry",
            fibonomial_engine,
            Duration::from_secs(1),
        ),
        (
            "zeta constructions agree and match the printed block",
            zeta_equivalence,
            Duration::from_secs(1),
        ),
        ("mobius inverts zeta", mobius_inverse, Duration::from_secs(5)),
        (
            "maximal-chain enumeration on 6 levels",
            chain_enumeration,
            Duration::from_secs(2),
        ),
        (
            "tilings by max-disjoint copies",
            tiling_instances,
            Duration::from_secs(60),
        ),
        (
            "ratio identity and symmetry rewrite",
            ratio_and_rewrite,
            Duration::from_secs(1),
        ),
        ("weighted binomial coefficients", weighted, Duration::from_secs(30)),
        (
            "binomial determinants sum to fibonomials",
            gessel_viennot,
            Duration::from_secs(60),
        ),
        ("fence ideals", fence, Duration::from_secs(5)),
        (
            "cli verify suite and JSON round-trip",
            cli_verify_and_json,
            Duration::from_secs(300),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed >= *budget {
            outcome = Err(format!(
                "took {:.2} s, budget {:.0} s",
                elapsed.as_secs_f64(),
                budget.as_secs_f64()
            ));
        }
        let (mark, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "{mark} criterion {:>2}: {name} ({:.2} s) -- {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
