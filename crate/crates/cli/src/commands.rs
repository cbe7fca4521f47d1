use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};

use cobweb_core::cobweb::{CobwebPoset, IncMatrix, VertexCoord};
use cobweb_core::fence::{count_ideals, count_ideals_oracle};
use cobweb_core::gvpaths::path_terms;
use cobweb_core::seqcore::{self, fib, fibonomial_rec, Recurrence};
use cobweb_core::tiling::{aligned_obstruction, count_tilings, find_tiling, verify_tiling, CopyModel};
use cobweb_core::verify::{self, Suite, VerifyOptions};
use cobweb_core::weighted::{c_coeff, s_coeff, Preset, WeightVector};
use cobweb_core::{Limits, Nat};

use crate::render::{matrix_text, string_array, strings, Report};
use crate::{CliError, Construction, Kind, Method, Model};

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    strings(items).join(sep)
}

fn key_value_table(pairs: &[(&str, String)]) -> Vec<Vec<String>> {
    std::iter::once(vec!["key".to_string(), "value".to_string()])
        .chain(pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]))
        .collect()
}

pub fn fibonomial(
    n: Option<usize>,
    k: Option<usize>,
    triangle: Option<usize>,
    method: Method,
) -> Result<Report, CliError> {
    let value = |n: usize, k: usize| match method {
        Method::Product => seqcore::fibonomial(n, k),
        Method::RecA => fibonomial_rec(n, k, Recurrence::A),
        Method::RecB => fibonomial_rec(n, k, Recurrence::B),
    };
    let method_name = match method {
        Method::Product => "product",
        Method::RecA => "rec-a",
        Method::RecB => "rec-b",
    };
    let mut r = Report::new("fibonomial");
    match (n, k, triangle) {
        (Some(n), Some(k), None) => {
            let v = value(n, k);
            r = r.input("n", n).input("k", k).input("method", method_name);
            r.text = format!("{v}\n");
            r.result = Value::String(v.to_string());
            r.table = key_value_table(&[("value", v.to_string())]);
        }
        (None, None, Some(rows)) => {
            let tri: Vec<Vec<Nat>> = (0..=rows).map(|n| (0..=n).map(|k| value(n, k)).collect()).collect();
            r = r.input("triangle", rows).input("method", method_name);
            r.text = matrix_text(&tri);
            r.result = Value::Array(tri.iter().map(string_array).collect());
            r.table = tri.iter().map(strings).collect();
        }
        _ => return Err(CliError::Usage("give either `n k` or `--triangle R`".into())),
    }
    Ok(r)
}

fn matrix_report(command: &'static str, m: &IncMatrix) -> Report {
    let mut r = Report::new(command);
    r.text = matrix_text(m.rows());
    r.result = Value::Array(m.rows().map(string_array).collect());
    r.table = m.rows().map(strings).collect();
    r
}

pub fn zeta(n: usize, how: Construction, check: bool, limits: &Limits) -> Result<Report, CliError> {
    let p = CobwebPoset::build(n)?;
    if check {
        let order = p.zeta_from_order(limits)?;
        let explicit = p.zeta_explicit(limits)?;
        let mut r = Report::new("zeta").input("n", n).input("check", true);
        let d = order.dim();
        match explicit.first_difference(&order) {
            None => {
                r.text = format!("MATCH: explicit and order constructions agree on all {d}x{d} entries\n");
                r.result = json!({ "verdict": "MATCH", "dim": d.to_string() });
                r.table = key_value_table(&[("verdict", "MATCH".into()), ("dim", d.to_string())]);
            }
            Some((x, y)) => {
                let msg = format!(
                    "entry (row {x}, col {y}): explicit {}, order {}",
                    explicit.get(x, y),
                    order.get(x, y)
                );
                r.text = format!("MISMATCH at {msg}\n");
                r.result =
                    json!({ "verdict": "MISMATCH", "dim": d.to_string(), "row": x.to_string(), "col": y.to_string() });
                r.table = key_value_table(&[
                    ("verdict", "MISMATCH".into()),
                    ("row", x.to_string()),
                    ("col", y.to_string()),
                ]);
                r.failure = Some(msg);
            }
        }
        return Ok(r);
    }
    let (m, name) = match how {
        Construction::Order => (p.zeta_from_order(limits)?, "order"),
        Construction::Explicit => (p.zeta_explicit(limits)?, "explicit"),
    };
    let mut r = matrix_report("zeta", &m);
    r.inputs = vec![("n", n.to_string()), ("construction", name.into())];
    Ok(r)
}

pub fn mobius(n: usize, limits: &Limits) -> Result<Report, CliError> {
    let p = CobwebPoset::build(n)?;
    let mut r = matrix_report("mobius", &p.mobius(limits)?);
    r.inputs = vec![("n", n.to_string())];
    Ok(r)
}

fn chain_text(chain: &[VertexCoord]) -> String {
    join(chain, " ")
}

pub fn chains(k: usize, n: usize, j: usize, enumerate: bool, limits: &Limits) -> Result<Report, CliError> {
    let p = CobwebPoset::build(n.max(k))?;
    let v = VertexCoord::new(j, k);
    let count = p.count_max_chains_from_vertex(v, n)?;
    let mut r = Report::new("chains")
        .input("k", k)
        .input("n", n)
        .input("vertex", j)
        .input("enumerate", enumerate);
    if enumerate {
        let all = p.enumerate_max_chains(v, n, limits)?;
        if Nat::from(all.len()) != count {
            r.failure = Some(format!("enumerated {} chains, formula gives {count}", all.len()));
        }
        r.text = all.iter().map(|c| chain_text(c) + "\n").collect();
        r.result = json!({
            "count": all.len().to_string(),
            "chains": all.iter().map(string_array).collect::<Vec<_>>(),
        });
        r.table = std::iter::once(vec!["chain".into()])
            .chain(all.iter().map(|c| vec![chain_text(c)]))
            .collect();
    } else {
        let dp = p.count_max_chains_dp(v, n, limits)?;
        if dp != count {
            r.failure = Some(format!("level-by-level count {dp}, formula gives {count}"));
        }
        r.text = format!("{count}\n");
        r.result = json!({ "count": count.to_string() });
        r.table = key_value_table(&[("count", count.to_string())]);
    }
    Ok(r)
}

pub fn tiling(
    k: usize,
    r: usize,
    m: usize,
    model: Model,
    count_all: bool,
    limits: &Limits,
) -> Result<Report, CliError> {
    let model = match model {
        Model::Aligned => CopyModel::Aligned,
        Model::Permuted => CopyModel::Permuted,
    };
    let mut rep = Report::new("tiling")
        .input("k", k)
        .input("r", r)
        .input("m", m)
        .input("model", model);
    let expected = seqcore::fibonomial(k + m, m);
    if count_all {
        rep = rep.input("count_all", true);
        let total = count_tilings(k, r, m, model, limits)?;
        rep.text = format!("{total}\n");
        rep.result = json!({ "tilings": total.to_string() });
        rep.table = key_value_table(&[("tilings", total.to_string())]);
        return Ok(rep);
    }
    let levels: Vec<usize> = (k + 1..=k + m).collect();
    let Some(sol) = find_tiling(k, r, m, model, limits)? else {
        let cert = if model == CopyModel::Aligned {
            aligned_obstruction(k, m)
        } else {
            None
        };
        let mut text = format!(
            "NO COVER: the chains above <{r},{k}> up to level {} admit no {model} tiling\n",
            k + m
        );
        match &cert {
            Some(c) => writeln!(text, "certificate: {c}").expect("write to string"),
            None => rep.failure = Some("exhaustive search found no cover and no certificate explains it".into()),
        }
        rep.text = text;
        rep.result = json!({ "verdict": "NO COVER", "certificate": cert });
        rep.table = key_value_table(&[
            ("verdict", "NO COVER".into()),
            ("certificate", cert.unwrap_or_default()),
        ]);
        return Ok(rep);
    };
    let valid = verify_tiling(&sol) && Nat::from(sol.copies.len()) == expected;
    let verdict = if valid { "VALID" } else { "INVALID" };
    if !valid {
        rep.failure = Some("the tiling found does not pass verification".into());
    }
    let mut text = String::new();
    writeln!(
        text,
        "tiling of the {} maximal chains above <{r},{k}> up to level {} by {} {model} copies of height {m}",
        sol.cover.len(),
        k + m,
        sol.copies.len()
    )
    .expect("write to string");
    for (i, c) in sol.copies.iter().enumerate() {
        let picks = levels
            .iter()
            .zip(&c.chosen)
            .map(|(l, p)| format!("level {l}: {}", join(p, ",")));
        writeln!(text, "copy {}: root {} | {}", i + 1, c.root, join(picks, " | ")).expect("write to string");
    }
    writeln!(text, "chain -> copy").expect("write to string");
    for (ch, i) in &sol.cover {
        writeln!(text, "{ch} -> {}", i + 1).expect("write to string");
    }
    writeln!(text, "{verdict}").expect("write to string");
    rep.text = text;
    rep.result = json!({
        "verdict": verdict,
        "levels": string_array(&levels),
        "copies": sol.copies.iter().map(|c| json!({
            "root": c.root.to_string(),
            "chosen": c.chosen.iter().map(string_array).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "cover": sol.cover.iter().map(|(ch, i)| (ch.to_string(), Value::String((i + 1).to_string()))).collect::<Map<_, _>>(),
    });
    rep.table = std::iter::once(
        ["copy".to_string(), "root".to_string()]
            .into_iter()
            .chain(levels.iter().map(|l| format!("level {l}")))
            .collect(),
    )
    .chain(sol.copies.iter().enumerate().map(|(i, c)| {
        [(i + 1).to_string(), c.root.to_string()]
            .into_iter()
            .chain(c.chosen.iter().map(|p| join(p, " ")))
            .collect()
    }))
    .collect();
    Ok(rep)
}

pub fn gv(n: usize, k: usize, terms: bool, limits: &Limits) -> Result<Report, CliError> {
    if k > n + 1 {
        return Err(CliError::Usage(format!("k = {k} exceeds n + 1 = {}", n + 1)));
    }
    let all = path_terms(n, k, limits)?;
    let sum: Nat = all.iter().map(|(_, v)| v.clone()).sum();
    let want = seqcore::fibonomial(n + 1, k);
    let verdict = if sum == want { "MATCH" } else { "MISMATCH" };
    let mut r = Report::new("gv").input("n", n).input("k", k).input("terms", terms);
    let mut text = String::new();
    if terms {
        for (set, v) in &all {
            writeln!(text, "R = {{{}}}: N(R) = {v}", join(set.entries(), ",")).expect("write to string");
        }
    }
    writeln!(text, "sum of N(R) = {sum}").expect("write to string");
    writeln!(text, "fibonomial({}, {k}) = {want}", n + 1).expect("write to string");
    writeln!(text, "{verdict}").expect("write to string");
    r.text = text;
    let mut result = json!({ "sum": sum.to_string(), "fibonomial": want.to_string(), "verdict": verdict });
    if terms {
        result["terms"] = Value::Array(
            all.iter()
                .map(|(set, v)| json!({ "r": string_array(set.entries()), "n_of_r": v.to_string() }))
                .collect(),
        );
    }
    r.result = result;
    r.table = if terms {
        std::iter::once(vec!["r".to_string(), "n_of_r".to_string()])
            .chain(all.iter().map(|(set, v)| vec![join(set.entries(), " "), v.to_string()]))
            .collect()
    } else {
        key_value_table(&[("sum", sum.to_string()), ("fibonomial", want.to_string())])
    };
    if sum != want {
        r.failure = Some(format!("sum {sum} != fibonomial({}, {k}) = {want}", n + 1));
    }
    Ok(r)
}

fn parse_weights(spec: &str, sort: bool) -> Result<WeightVector, CliError> {
    let bad = |what: &str| CliError::Usage(format!("bad weight spec {spec:?}: {what}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| bad(&e.to_string()));
    let parts: Vec<&str> = spec.split(':').collect();
    let w = match parts.as_slice() {
        ["ones", n] => WeightVector::preset(Preset::Ones(num(n)?))?,
        ["arithmetic", n] => WeightVector::preset(Preset::Arithmetic(num(n)?))?,
        ["geometric", n, q] => WeightVector::preset(Preset::GeometricQ(num(n)?, num(q)? as u64))?,
        [list] => {
            let ws = list
                .split(',')
                .map(|s| s.trim().parse::<Nat>().map_err(|e| bad(&e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            WeightVector::new(ws, sort)?
        }
        _ => return Err(bad("expected a comma list or ones:N, arithmetic:N, geometric:N:Q")),
    };
    Ok(w)
}

pub fn konvalina(kind: Kind, spec: &str, k: usize, sort: bool) -> Result<Report, CliError> {
    let w = parse_weights(spec, sort)?;
    let (name, v) = match kind {
        Kind::C => ("C", c_coeff(&w, k)),
        Kind::S => ("S", s_coeff(&w, k)?),
    };
    let mut r = Report::new("konvalina")
        .input("kind", name)
        .input("weights", join(w.weights(), ","))
        .input("k", k);
    r.text = format!("{v}\n");
    r.result = Value::String(v.to_string());
    r.table = key_value_table(&[("value", v.to_string())]);
    Ok(r)
}

pub fn fence(m: usize, limits: &Limits) -> Result<Report, CliError> {
    let ideals = count_ideals(m);
    let fibv = fib(m + 2);
    let brute = if m <= limits.max_fence_oracle {
        Some(count_ideals_oracle(m, limits)?)
    } else {
        None
    };
    let mut r = Report::new("fence").input("m", m);
    let mut text = format!("ideals = {ideals}\nF_{} = {fibv}\n", m + 2);
    match &brute {
        Some(b) => writeln!(text, "ideals by brute force = {b}").expect("write to string"),
        None => writeln!(text, "brute force skipped (m > {})", limits.max_fence_oracle).expect("write to string"),
    }
    let ok = ideals == fibv && brute.as_ref().is_none_or(|b| *b == ideals);
    writeln!(text, "{}", if ok { "MATCH" } else { "MISMATCH" }).expect("write to string");
    r.text = text;
    r.result = json!({
        "ideals": ideals.to_string(),
        "fib": fibv.to_string(),
        "brute_force": brute.as_ref().map(|b| b.to_string()),
    });
    r.table = key_value_table(&[
        ("ideals", ideals.to_string()),
        ("fib", fibv.to_string()),
        ("brute_force", brute.as_ref().map(|b| b.to_string()).unwrap_or_default()),
    ]);
    if !ok {
        r.failure = Some("fence ideal counts disagree".into());
    }
    Ok(r)
}

pub fn hasse(n: usize) -> Result<Report, CliError> {
    let p = CobwebPoset::build(n)?;
    let vertices: Vec<(usize, VertexCoord)> = (1..=p.vertex_count())
        .map(|x| Ok((x, p.coord_of(x)?)))
        .collect::<Result<_, cobweb_core::Error>>()?;
    let edges: Vec<(usize, usize)> = p.hasse_edges().collect();
    let mut r = Report::new("hasse").input("n", n);

    let mut text = String::new();
    for (x, v) in &vertices {
        writeln!(text, "{x} {v}").expect("write to string");
    }
    for (a, b) in &edges {
        writeln!(text, "{a} -> {b}").expect("write to string");
    }
    r.text = text;

    let mut dot = String::from("digraph cobweb {\n  rankdir=BT;\n  node [shape=box];\n");
    for s in 1..=p.max_level() {
        let on_level = vertices.iter().filter(|(_, v)| v.s == s);
        let nodes = join(
            on_level.map(|(x, v)| format!("v{x} [label=\"{},{}\\n{x}\"];", v.j, v.s)),
            " ",
        );
        writeln!(dot, "  {{ rank=same; {nodes} }}").expect("write to string");
    }
    for (a, b) in &edges {
        writeln!(dot, "  v{a} -> v{b};").expect("write to string");
    }
    dot.push_str("}\n");
    r.dot = Some(dot);

    r.result = json!({
        "vertices": vertices.iter().map(|(x, v)| json!({
            "index": x.to_string(), "j": v.j.to_string(), "s": v.s.to_string(),
        })).collect::<Vec<_>>(),
        "edges": edges.iter().map(|(a, b)| string_array([a, b])).collect::<Vec<_>>(),
    });
    r.table = std::iter::once(vec!["from".to_string(), "to".to_string()])
        .chain(edges.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]))
        .collect();
    Ok(r)
}

pub fn verify(suite: Suite, fault: Option<(usize, usize)>) -> Result<Report, CliError> {
    let start = Instant::now();
    let reports = verify::run(suite, &VerifyOptions { zeta_fault: fault });
    let wall = start.elapsed();
    let mut r = Report::new("verify").input("suite", suite);
    if let Some((x, y)) = fault {
        r = r.input("inject_zeta_fault", format!("{x},{y}"));
    }
    let passed = reports.iter().filter(|p| p.passed).count();
    let mut text = String::new();
    for p in &reports {
        let mark = if p.passed { "PASS" } else { "FAIL" };
        let detail = if p.passed {
            p.detail.clone()
        } else {
            format!("counterexample: {}", p.detail)
        };
        writeln!(text, "{mark} [{}] {} -- {detail}", p.suite, p.name).expect("write to string");
        eprintln!("  {:>9.3} s  [{}] {}", p.elapsed.as_secs_f64(), p.suite, p.name);
    }
    writeln!(text, "{passed}/{} properties passed", reports.len()).expect("write to string");
    // timings go to stderr so the report itself is byte-for-byte reproducible
    eprintln!("wall time: {:.3} s", wall.as_secs_f64());
    r.text = text;
    r.result = json!({
        "passed": passed.to_string(),
        "total": reports.len().to_string(),
        "properties": reports.iter().map(|p| json!({
            "suite": p.suite.name(),
            "name": p.name,
            "status": if p.passed { "PASS" } else { "FAIL" },
            "detail": p.detail,
        })).collect::<Vec<_>>(),
    });
    r.table = std::iter::once(strings(["suite", "property", "status", "detail"]))
        .chain(reports.iter().map(|p| {
            vec![
                p.suite.name().into(),
                p.name.into(),
                if p.passed { "PASS" } else { "FAIL" }.into(),
                p.detail.clone(),
            ]
        }))
        .collect();
    if passed != reports.len() {
        let failed: Vec<&str> = reports.iter().filter(|p| !p.passed).map(|p| p.name).collect();
        r.failure = Some(format!(
            "{} of {} properties failed: {}",
            failed.len(),
            reports.len(),
            failed.join("; ")
        ));
    }
    Ok(r)
}
