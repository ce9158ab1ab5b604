//! The sign-reversing involution on walk/subdigraph pairs.
//!
//! A pair `(c, γ)` is a closed walk `c` of length at least one together with
//! a linear subdigraph `γ` (possibly empty), with `L(c) + L(γ) = r`. Its
//! signed weight is `W = (-1)^{c(γ)} w(c) w(γ)`.
//!
//! Walking `c` from its start `x_0`, at each position `t` we first ask
//! whether `x_t` lies on `γ` (scenario 1) and then whether `x_t` repeats an
//! earlier `x_s` (scenario 2). Scenario 1 splices the `γ`-cycle through
//! `x_t` into the walk; scenario 2 cuts the just-closed cycle `x_s..x_t`
//! out of the walk and adds it to `γ`. The two moves undo each other, flip
//! the sign, and keep the edge multiset, hence `L` and `|W|`. A pair where
//! neither fires before the walk closes is GOOD: `c` is a simple cycle
//! disjoint from `γ`.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::enumerate::{enumerate_closed_walks, enumerate_lsd, ClosedWalk, Cycle, EnumError, LinearSubdigraph};
use crate::graph::WeightedDigraph;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("the involution is not defined on GOOD pairs")]
    GoodPair,
    #[error("a linear subdigraph with no cycles has no GOOD pairs")]
    EmptySubdigraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkCyclePair {
    walk: ClosedWalk,
    subdigraph: LinearSubdigraph,
}

impl WalkCyclePair {
    pub fn new(walk: ClosedWalk, subdigraph: LinearSubdigraph) -> Self {
        WalkCyclePair { walk, subdigraph }
    }

    pub fn walk(&self) -> &ClosedWalk {
        &self.walk
    }

    pub fn subdigraph(&self) -> &LinearSubdigraph {
        &self.subdigraph
    }

    /// `L(c) + L(γ)`.
    pub fn r(&self) -> usize {
        self.walk.len() + self.subdigraph.len()
    }

    /// `W((c, γ)) = (-1)^{c(γ)} w(c) w(γ)`.
    pub fn signed_weight<R: Ring>(&self, g: &WeightedDigraph<R>) -> R {
        self.walk
            .weight(g)
            .mul_ref(&self.subdigraph.weight(g))
            .signed(self.subdigraph.cycle_count())
    }

    /// The GOOD/BAD definition read directly: GOOD iff the walk is a simple
    /// cycle sharing no vertex with the subdigraph.
    pub fn is_good_by_definition(&self) -> bool {
        self.walk.is_simple() && !self.walk.vertices().iter().any(|&v| self.subdigraph.contains(v))
    }
}

impl fmt::Display for WalkCyclePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.walk, self.subdigraph)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    Good,
    /// Walk position `position` is the first to land on `γ`, at vertex `y`.
    BadScenario1 { position: usize, y: usize },
    /// The first repeated vertex: `x_close = x_open`, nothing on `γ` seen
    /// up to `close`.
    BadScenario2 { open: usize, close: usize },
}

impl PairClass {
    pub fn is_good(self) -> bool {
        self == PairClass::Good
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PairClass::Good => f.write_str("GOOD"),
            PairClass::BadScenario1 { position, y } => write!(f, "BAD scenario 1 (t={position}, y={y})"),
            PairClass::BadScenario2 { open, close } => write!(f, "BAD scenario 2 (s={open}, t={close})"),
        }
    }
}

/// All pairs with `L(c) + L(γ) = r`, ordered by walk length, then walk, then
/// subdigraph.
pub fn enumerate_pairs<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> Result<Vec<WalkCyclePair>, EnumError> {
    if r == 0 {
        return Err(EnumError::ZeroWalkLength);
    }
    let n = g.n();
    let mut out = Vec::new();
    for walk_len in r.saturating_sub(n).max(1)..=r {
        let walks = enumerate_closed_walks(g, walk_len)?;
        if walks.is_empty() {
            continue;
        }
        let lsds = enumerate_lsd(g, r - walk_len)?;
        for w in &walks {
            for l in &lsds {
                out.push(WalkCyclePair::new(w.clone(), l.clone()));
            }
        }
    }
    Ok(out)
}

/// Number of pairs [`enumerate_pairs`] would return, computed from walk
/// counts (traces of 0/1 adjacency powers) without listing walks.
/// Saturates at `u128::MAX`.
pub fn count_pairs<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> u128 {
    let n = g.n();
    let adj: Vec<Vec<u128>> = (1..=n)
        .map(|i| (1..=n).map(|j| u128::from(g.has_edge(i, j))).collect())
        .collect();
    let mut power = adj.clone();
    let mut total: u128 = 0;
    for walk_len in 1..=r {
        if walk_len > 1 {
            power = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(0u128, |acc, t| acc.saturating_add(power[i][t].saturating_mul(adj[t][j])))
                        })
                        .collect()
                })
                .collect();
        }
        if r - walk_len > n {
            continue;
        }
        let walks = (0..n).fold(0u128, |acc, i| acc.saturating_add(power[i][i]));
        if walks == 0 {
            continue;
        }
        let lsds = enumerate_lsd(g, r - walk_len).map_or(0, |v| v.len()) as u128;
        total = total.saturating_add(walks.saturating_mul(lsds));
    }
    total
}

/// Scans the walk and reports which rule, if any, fires first.
pub fn classify(p: &WalkCyclePair) -> PairClass {
    let x = p.walk.vertices();
    let k = p.walk.len();
    for t in 0..=k {
        if p.subdigraph.contains(x[t]) {
            return PairClass::BadScenario1 { position: t, y: x[t] };
        }
        if let Some(s) = (0..t).rev().find(|&s| x[s] == x[t]) {
            if s == 0 && t == k {
                return PairClass::Good;
            }
            return PairClass::BadScenario2 { open: s, close: t };
        }
    }
    unreachable!("x_k = x_0 repeats at the latest when t = k")
}

/// The involution. Defined on BAD pairs only.
pub fn phi(p: &WalkCyclePair) -> Result<WalkCyclePair, InvolutionError> {
    let x = p.walk.vertices();
    match classify(p) {
        PairClass::Good => Err(InvolutionError::GoodPair),
        PairClass::BadScenario1 { position, y } => {
            let cycle = p.subdigraph.cycle_through(y).expect("y lies on γ");
            let detour = cycle.walk_from(y).expect("y lies on its cycle");
            let seq: Vec<usize> = x[..position]
                .iter()
                .chain(detour.vertices())
                .chain(&x[position + 1..])
                .copied()
                .collect();
            Ok(WalkCyclePair::new(
                ClosedWalk::new(seq).expect("still closed"),
                p.subdigraph.without(cycle),
            ))
        }
        PairClass::BadScenario2 { open, close } => {
            let cut = Cycle::new(x[open..close].to_vec()).expect("first repetition closes a simple cycle");
            let seq: Vec<usize> = x[..=open].iter().chain(&x[close + 1..]).copied().collect();
            let subdigraph = p
                .subdigraph
                .with(cut)
                .expect("no vertex of γ was met before the cycle closed");
            Ok(WalkCyclePair::new(ClosedWalk::new(seq).expect("still closed"), subdigraph))
        }
    }
}

/// The GOOD pairs hidden in a linear subdigraph `γ̇`: for each of its `r`
/// vertices `v`, the cycle through `v` read as a walk from `v`, paired with
/// the remaining cycles. Ordered by `v`.
pub fn good_pairs_of_lsd(lsd: &LinearSubdigraph) -> Result<Vec<WalkCyclePair>, InvolutionError> {
    if lsd.is_empty() {
        return Err(InvolutionError::EmptySubdigraph);
    }
    Ok(lsd
        .vertices()
        .into_iter()
        .map(|v| {
            let cycle = lsd.cycle_through(v).expect("covered vertex");
            WalkCyclePair::new(cycle.walk_from(v).expect("on cycle"), lsd.without(cycle))
        })
        .collect())
}

/// Outcome of checking every cancellation claim at one total length `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvolutionReport<R> {
    pub n: usize,
    pub r: usize,
    pub pair_count: usize,
    pub bad_count: usize,
    pub good_count: usize,
    pub scenario1_count: usize,
    pub scenario2_count: usize,
    /// Number of linear subdigraphs on `r` vertices (zero when `r > n`).
    pub group_count: usize,
    /// `Σ_{p ∈ A} W(p)`.
    pub total_weight: R,
    /// `Σ_{p ∈ B} W(p)`; must be zero.
    pub bad_weight: R,
    /// `Σ_{p ∉ B} W(p)`; equals `-r ℓ_r` for `r <= n`.
    pub good_weight: R,
    /// One line per violated claim; empty when everything holds.
    pub failures: Vec<String>,
}

impl<R> InvolutionReport<R> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Enumerates every pair at total length `r` and checks:
///
/// * `classify` agrees with the GOOD/BAD definition, so it partitions `A`;
/// * on BAD pairs `phi` is a fixed-point-free involution into `A` that
///   negates `W` and swaps the two scenarios on the same cycle;
/// * the BAD weights sum to zero;
/// * the GOOD pairs are exactly the disjoint union of
///   [`good_pairs_of_lsd`] over the `r`-vertex subdigraphs, each group of
///   size `r` and weight `r (-1)^{c(γ̇)-1} w(γ̇)`;
/// * there are no GOOD pairs when `r > n`.
pub fn verify_involution<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> Result<InvolutionReport<R>, EnumError> {
    let pairs = enumerate_pairs(g, r)?;
    let n = g.n();
    let all: HashSet<&WalkCyclePair> = pairs.iter().collect();
    let mut failures = Vec::new();
    let mut report = InvolutionReport {
        n,
        r,
        pair_count: pairs.len(),
        bad_count: 0,
        good_count: 0,
        scenario1_count: 0,
        scenario2_count: 0,
        group_count: 0,
        total_weight: R::zero(),
        bad_weight: R::zero(),
        good_weight: R::zero(),
        failures: Vec::new(),
    };
    let mut good: HashSet<&WalkCyclePair> = HashSet::new();

    for p in &pairs {
        let w = p.signed_weight(g);
        report.total_weight = report.total_weight.add_ref(&w);
        let class = classify(p);
        if class.is_good() != p.is_good_by_definition() {
            failures.push(format!("{p}: classified {class} against the definition"));
        }
        match class {
            PairClass::Good => {
                report.good_count += 1;
                report.good_weight = report.good_weight.add_ref(&w);
                good.insert(p);
                continue;
            }
            PairClass::BadScenario1 { .. } => report.scenario1_count += 1,
            PairClass::BadScenario2 { .. } => report.scenario2_count += 1,
        }
        report.bad_count += 1;
        report.bad_weight = report.bad_weight.add_ref(&w);

        let q = match phi(p) {
            Ok(q) => q,
            Err(e) => {
                failures.push(format!("{p}: phi failed: {e}"));
                continue;
            }
        };
        if !all.contains(&q) {
            failures.push(format!("{p}: image {q} is not a pair of total length {r}"));
        }
        if q == *p {
            failures.push(format!("{p}: fixed point"));
        }
        if q.signed_weight(g) != -w.clone() {
            failures.push(format!("{p}: image {q} does not negate the weight"));
        }
        let q_class = classify(&q);
        if !exchanges(p, class, &q, q_class) {
            failures.push(format!("{p} [{class}] -> {q} [{q_class}]: scenarios not exchanged"));
        }
        match phi(&q) {
            Ok(back) if back == *p => {}
            Ok(back) => failures.push(format!("{p} -> {q} -> {back}: not an involution")),
            Err(e) => failures.push(format!("{p} -> {q}: phi failed on image: {e}")),
        }
    }

    if !report.bad_weight.is_zero() {
        failures.push(format!("BAD weights sum to {:?}, not zero", report.bad_weight));
    }

    if r > n {
        if report.good_count > 0 {
            failures.push(format!("{} GOOD pairs with r > n", report.good_count));
        }
    } else {
        let lsds = enumerate_lsd(g, r)?;
        report.group_count = lsds.len();
        let mut covered: HashSet<WalkCyclePair> = HashSet::new();
        for lsd in &lsds {
            let group = good_pairs_of_lsd(lsd).expect("r >= 1");
            if group.len() != r {
                failures.push(format!("{lsd}: {} GOOD pairs, expected {r}", group.len()));
            }
            let group_weight = group.iter().fold(R::zero(), |acc, p| acc.add_ref(&p.signed_weight(g)));
            let expected = lsd.weight(g).times(r).signed(lsd.cycle_count() - 1);
            if group_weight != expected {
                failures.push(format!("{lsd}: GOOD group weight {group_weight:?}, expected {expected:?}"));
            }
            for p in group {
                if !good.contains(&p) {
                    failures.push(format!("{lsd}: decomposition pair {p} is not an enumerated GOOD pair"));
                }
                if !covered.insert(p.clone()) {
                    failures.push(format!("{p} arises from more than one subdigraph"));
                }
            }
        }
        if covered.len() != good.len() {
            failures.push(format!(
                "{} GOOD pairs enumerated but {} produced by decomposing subdigraphs",
                good.len(),
                covered.len()
            ));
        }
    }

    report.failures = failures;
    Ok(report)
}

// Scenario 1 at (t, y) must map to scenario 2 closing exactly the spliced
// cycle at (t, t + |γ_y|), and the reverse.
fn exchanges(p: &WalkCyclePair, pc: PairClass, q: &WalkCyclePair, qc: PairClass) -> bool {
    match (pc, qc) {
        (PairClass::BadScenario1 { position, y }, PairClass::BadScenario2 { open, close }) => {
            let spliced = p.subdigraph.cycle_through(y).expect("y on γ");
            open == position
                && close == position + spliced.len()
                && Cycle::new(q.walk.vertices()[open..close].to_vec()).as_ref() == Some(spliced)
        }
        (PairClass::BadScenario2 { open, close }, PairClass::BadScenario1 { position, y }) => {
            let cut = Cycle::new(p.walk.vertices()[open..close].to_vec());
            position == open && y == p.walk.vertices()[open] && q.subdigraph.cycle_through(y) == cut.as_ref()
        }
        _ => false,
    }
}
