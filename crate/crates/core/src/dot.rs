//! DOT pictures of subdigraphs and walk/subdigraph pairs.
//!
//! Walk arcs are red and numbered by step; subdigraph arcs are blue.

use std::fmt::Write as _;

use crate::enumerate::LinearSubdigraph;
use crate::graph::{escape, WeightedDigraph};
use crate::involution::WalkCyclePair;
use crate::ring::Ring;

/// All vertices of `g`, with only the arcs of `lsd` drawn.
pub fn lsd_to_dot<R: Ring>(g: &WeightedDigraph<R>, lsd: &LinearSubdigraph, label: impl Fn(&R) -> String) -> String {
    let mut s = String::from("digraph L {\n");
    for v in 1..=g.n() {
        let _ = writeln!(s, "  {v} [label=\"v{v}\"];");
    }
    write_lsd_arcs(&mut s, g, lsd, "", &label);
    s.push_str("}\n");
    s
}

fn write_lsd_arcs<R: Ring>(
    s: &mut String,
    g: &WeightedDigraph<R>,
    lsd: &LinearSubdigraph,
    prefix: &str,
    label: &impl Fn(&R) -> String,
) {
    for cycle in lsd.cycles() {
        for (u, v) in cycle.arcs() {
            let w = escape(&label(&g.weight_or_zero(u, v)));
            let _ = writeln!(s, "  {prefix}{u} -> {prefix}{v} [label=\"{w}\", color=blue];");
        }
    }
}

fn write_pair<R: Ring>(
    s: &mut String,
    g: &WeightedDigraph<R>,
    pair: &WalkCyclePair,
    name: &str,
    title: &str,
    label: &impl Fn(&R) -> String,
) {
    let _ = writeln!(s, "  subgraph cluster_{name} {{");
    let _ = writeln!(s, "    label=\"{}\";", escape(title));
    for v in 1..=g.n() {
        let _ = writeln!(s, "    {name}{v} [label=\"v{v}\"];");
    }
    for (step, (u, v)) in pair.walk().arcs().enumerate() {
        let w = escape(&label(&g.weight_or_zero(u, v)));
        let _ = writeln!(s, "    {name}{u} -> {name}{v} [label=\"{}: {w}\", color=red];", step + 1);
    }
    let mut arcs = String::new();
    write_lsd_arcs(&mut arcs, g, pair.subdigraph(), name, label);
    for line in arcs.lines() {
        let _ = writeln!(s, "  {line}");
    }
    s.push_str("  }\n");
}

/// Side-by-side picture of a pair and its image under the involution.
pub fn pair_to_dot<R: Ring>(
    g: &WeightedDigraph<R>,
    before: &WalkCyclePair,
    after: &WalkCyclePair,
    label: impl Fn(&R) -> String,
) -> String {
    let mut s = String::from("digraph Pair {\n");
    write_pair(&mut s, g, before, "before", &format!("(c, γ) = {before}"), &label);
    write_pair(&mut s, g, after, "after", &format!("φ(c, γ) = {after}"), &label);
    s.push_str("}\n");
    s
}
