use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::json;
use trace_ch::dot::{lsd_to_dot, pair_to_dot};
use trace_ch::enumerate::{enumerate_closed_walks, enumerate_lsd};
use trace_ch::identities::{verify_suite, IdentityReport};
use trace_ch::invariants::{c_walks, char_poly_oracle, ell, f_minor_sum};
use trace_ch::involution::{classify, count_pairs, enumerate_pairs, good_pairs_of_lsd, phi, verify_involution};
use num_traits::Zero;
use trace_ch::{Digraph, Ring, RingElement};

use crate::input::{Input, InputArgs};
use crate::{Carrier, Format, MAX_PAIRS_ENV};

const ORACLE_MAX_N: usize = 6;
const ENUM_MAX_N: usize = 6;
const ENUM_MAX_K: usize = 10;
const PAIR_MAX_N: usize = 4;
const PAIR_MAX_R: usize = 8;

type CmdResult = Result<bool, String>;

// Output is assembled first and written once; a closed pipe is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn cap(force: bool, what: &str, value: usize, max: usize) -> Result<(), String> {
    if !force && value > max {
        return Err(format!("{what} = {value} exceeds the default cap of {max}; pass --force to override"));
    }
    Ok(())
}

fn pair_env_cap(g: &Digraph, r: usize) -> Result<(), String> {
    let Ok(raw) = std::env::var(MAX_PAIRS_ENV) else {
        return Ok(());
    };
    let max: u128 = raw
        .trim()
        .parse()
        .map_err(|_| format!("{MAX_PAIRS_ENV}={raw:?} is not a non-negative integer"))?;
    let count = count_pairs(g, r);
    if count > max {
        return Err(format!("{count} pairs at r = {r} exceed {MAX_PAIRS_ENV} = {max}"));
    }
    Ok(())
}

fn digraph(input: &Input) -> Digraph {
    Digraph::from_matrix(&input.matrix).expect("inputs are square by construction")
}

fn header(out: &mut String, inputs: &[Input], input: &Input) {
    if inputs.len() > 1 {
        let _ = writeln!(out, "== {} ==", input.label);
    }
}

fn sum_line(input: &Input, rep: &IdentityReport<RingElement>) -> String {
    let labels: Vec<&str> = rep.terms.iter().map(|(l, _)| l.as_str()).collect();
    format!(
        "{} = {}  [{}]",
        labels.join(" + "),
        input.fmt(&rep.lhs),
        if rep.holds { "holds" } else { "FAILS" }
    )
}

pub fn verify(args: &InputArgs, r_max: usize, format: Format, force: bool) -> CmdResult {
    if r_max == 0 {
        return Err("--r-max must be at least 1".into());
    }
    let inputs = args.load()?;
    for input in &inputs {
        cap(force, "n", input.n(), ORACLE_MAX_N)?;
    }
    cap(force, "r-max", r_max, ENUM_MAX_K)?;

    let mut all_hold = true;
    let mut text = String::new();
    let mut docs = Vec::new();
    let mut total = 0;
    let mut holding = 0;
    for input in &inputs {
        let g = digraph(input);
        let suite = verify_suite(&g, r_max).map_err(|e| e.to_string())?;
        all_hold &= suite.all_hold();
        header(&mut text, &inputs, input);
        for ((comb, mat), agree) in suite.combinatorial.iter().zip(&suite.matrix).zip(&suite.forms_agree) {
            total += 1;
            if comb.holds && mat.holds && *agree {
                holding += 1;
            }
            let _ = writeln!(text, "r={} {:?}  {}", comb.r, comb.branch, sum_line(input, comb));
            for (label, v) in &comb.terms {
                let _ = writeln!(text, "    {label} = {}", input.fmt(v));
            }
            let _ = writeln!(
                text,
                "  matrix form: {}; forms {}",
                sum_line(input, mat),
                if *agree { "agree termwise" } else { "DISAGREE" }
            );
        }
        let fmt = |v: &RingElement| input.fmt(v);
        docs.push(json!({
            "label": input.label,
            "n": input.n(),
            "reports": suite.combinatorial.iter().map(|r| r.to_json_with(fmt)).collect::<Vec<_>>(),
            "matrix_reports": suite.matrix.iter().map(|r| r.to_json_with(fmt)).collect::<Vec<_>>(),
            "forms_agree": suite.forms_agree,
        }));
    }
    match format {
        Format::Text => {
            let _ = writeln!(text, "summary: {holding}/{total} identities hold");
            emit(&text);
        }
        Format::Json => {
            let doc = json!({ "inputs": docs, "all_hold": all_hold });
            emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")));
        }
    }
    Ok(all_hold)
}

pub fn enumerate(args: &InputArgs, what: Carrier, r: Option<usize>, k: Option<usize>, force: bool) -> CmdResult {
    let inputs = args.load()?;
    let mut out = String::new();
    for input in &inputs {
        cap(force, "n", input.n(), ENUM_MAX_N)?;
        let g = digraph(input);
        header(&mut out, &inputs, input);
        match what {
            Carrier::Lsd => {
                let r = r.ok_or("enumerate lsd needs --r")?;
                let lsds = enumerate_lsd(&g, r).map_err(|e| e.to_string())?;
                for l in &lsds {
                    let sign = if l.cycle_count() % 2 == 0 { "+1" } else { "-1" };
                    let _ = writeln!(out, "{l} sign={sign} weight={}", input.fmt(&l.weight(&g)));
                }
                let total = ell(&g, r).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "ℓ_{r} = {}", input.fmt(&total));
            }
            Carrier::Walks => {
                let k = k.ok_or("enumerate walks needs --k")?;
                cap(force, "k", k, ENUM_MAX_K)?;
                let walks = enumerate_closed_walks(&g, k).map_err(|e| e.to_string())?;
                for w in &walks {
                    let _ = writeln!(out, "{w} weight={}", input.fmt(&w.weight(&g)));
                }
                let total = c_walks(&g, k).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "c_{k} = {}", input.fmt(&total));
            }
        }
    }
    emit(&out);
    Ok(true)
}

fn pair_caps(g: &Digraph, r: usize, force: bool) -> Result<(), String> {
    if r == 0 {
        return Err("--r must be at least 1 for pairs".into());
    }
    cap(force, "n", g.n(), PAIR_MAX_N)?;
    cap(force, "r", r, PAIR_MAX_R)?;
    pair_env_cap(g, r)
}

pub fn involution(args: &InputArgs, r: usize, show_pairs: bool, dot: bool, force: bool) -> CmdResult {
    let inputs = args.load()?;
    let mut out = String::new();
    let mut passed = true;
    for input in &inputs {
        let g = digraph(input);
        pair_caps(&g, r, force)?;
        let rep = verify_involution(&g, r).map_err(|e| e.to_string())?;
        passed &= rep.passed();
        header(&mut out, &inputs, input);
        let _ = writeln!(
            out,
            "r={r} n={}: {} pairs, {} BAD (scenario 1: {}, scenario 2: {}), {} GOOD",
            rep.n, rep.pair_count, rep.bad_count, rep.scenario1_count, rep.scenario2_count, rep.good_count
        );
        let bad = if rep.bad_weight.is_zero() { "all cancel" } else { "do NOT cancel" };
        if r > rep.n {
            let _ = writeln!(out, "BAD pairs: {bad}; GOOD pairs: {}", rep.good_count);
        } else {
            let _ = writeln!(
                out,
                "BAD pairs: {bad}; GOOD pairs: {} in {} groups of {r}, total weight {}",
                rep.good_count,
                rep.group_count,
                input.fmt(&rep.good_weight)
            );
        }
        for f in &rep.failures {
            let _ = writeln!(out, "  failure: {f}");
        }
        let _ = writeln!(out, "result: {}", if rep.passed() { "pass" } else { "FAIL" });

        if show_pairs || dot {
            let pairs = enumerate_pairs(&g, r).map_err(|e| e.to_string())?;
            for p in &pairs {
                let class = classify(p);
                if class.is_good() {
                    continue;
                }
                let q = phi(p).map_err(|e| e.to_string())?;
                if show_pairs {
                    let _ = writeln!(
                        out,
                        "BAD {p} [{class}] W={}  ->  {q} W={}",
                        input.fmt(&p.signed_weight(&g)),
                        input.fmt(&q.signed_weight(&g))
                    );
                }
                if dot && *p < q {
                    out.push_str(&pair_to_dot(&g, p, &q, |w| input.fmt(w)));
                }
            }
            if show_pairs && r <= g.n() {
                for lsd in enumerate_lsd(&g, r).map_err(|e| e.to_string())? {
                    let group = good_pairs_of_lsd(&lsd).map_err(|e| e.to_string())?;
                    let weight = group
                        .iter()
                        .fold(RingElement::zero(), |acc, p| acc.add_ref(&p.signed_weight(&g)));
                    let _ = writeln!(out, "GOOD group from {lsd}: {} pairs, weight {}", group.len(), input.fmt(&weight));
                    for p in &group {
                        let _ = writeln!(out, "  {p} W={}", input.fmt(&p.signed_weight(&g)));
                    }
                }
            }
        }
    }
    emit(&out);
    Ok(passed)
}

pub fn export_dot(args: &InputArgs, r: Option<usize>, dir: &Path, force: bool) -> CmdResult {
    let inputs = args.load()?;
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let write = |name: String, body: String| -> Result<(), String> {
        let path = dir.join(&name);
        fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
        emit(&format!("{}\n", path.display()));
        Ok(())
    };
    for (idx, input) in inputs.iter().enumerate() {
        let g = digraph(input);
        let stem = if inputs.len() > 1 { format!("m{}_", idx + 1) } else { String::new() };
        write(format!("{stem}digraph.dot"), g.to_dot_with(|w| input.fmt(w)))?;
        let Some(r) = r else { continue };
        cap(force, "n", g.n(), ENUM_MAX_N)?;
        if r <= g.n() {
            let lsds = enumerate_lsd(&g, r).map_err(|e| e.to_string())?;
            for (i, l) in lsds.iter().enumerate() {
                write(format!("{stem}lsd_r{r}_{}.dot", i + 1), lsd_to_dot(&g, l, |w| input.fmt(w)))?;
            }
        }
        if r >= 1 {
            pair_caps(&g, r, force)?;
            let pairs = enumerate_pairs(&g, r).map_err(|e| e.to_string())?;
            let mut i = 0;
            for p in &pairs {
                if classify(p).is_good() {
                    continue;
                }
                let q = phi(p).map_err(|e| e.to_string())?;
                if *p < q {
                    i += 1;
                    write(format!("{stem}pair_r{r}_{i}.dot"), pair_to_dot(&g, p, &q, |w| input.fmt(w)))?;
                }
            }
        }
    }
    Ok(true)
}

pub fn charpoly(args: &InputArgs, format: Format, force: bool) -> CmdResult {
    let inputs = args.load()?;
    let mut out = String::new();
    let mut docs = Vec::new();
    let mut consistent = true;
    for input in &inputs {
        cap(force, "n", input.n(), ORACLE_MAX_N)?;
        let g = digraph(input);
        let oracle = char_poly_oracle(&input.matrix).map_err(|e| e.to_string())?;
        header(&mut out, &inputs, input);
        let _ = writeln!(out, "r | ℓ_r | f_r | d_r | c_r");
        let mut rows = Vec::new();
        for r in 1..=g.n() {
            let l = ell(&g, r).map_err(|e| e.to_string())?;
            let f = f_minor_sum(&g, r).map_err(|e| e.to_string())?;
            let d = oracle.d(r);
            let c = c_walks(&g, r).map_err(|e| e.to_string())?;
            consistent &= l == d && d == f.signed(r);
            let _ = writeln!(
                out,
                "{r} | {} | {} | {} | {}",
                input.fmt(&l),
                input.fmt(&f),
                input.fmt(&d),
                input.fmt(&c)
            );
            rows.push(json!({
                "r": r,
                "ell": input.fmt(&l),
                "f": input.fmt(&f),
                "d": input.fmt(&d),
                "c": input.fmt(&c),
            }));
        }
        docs.push(json!({ "label": input.label, "n": g.n(), "rows": rows }));
    }
    match format {
        Format::Text => emit(&out),
        Format::Json => {
            let doc = json!({ "inputs": docs, "consistent": consistent });
            emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")));
        }
    }
    Ok(consistent)
}
