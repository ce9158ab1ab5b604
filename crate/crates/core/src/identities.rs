//! The trace Cayley-Hamilton identities as exact zero tests.
//!
//! For `r > n`:       `c_r + c_{r-1} ℓ_1 + ... + c_{r-n} ℓ_n = 0`.
//! For `1 <= r <= n`: `c_r + c_{r-1} ℓ_1 + ... + c_1 ℓ_{r-1} + r ℓ_r = 0`.
//!
//! The same sums are assembled twice: from digraph combinatorics (`c_k`
//! from closed walks, `ℓ_k` from linear subdigraphs) and from matrix
//! algebra (`Tr(A^k)` by multiplication, `d_k` by the Leibniz expansion of
//! `det(λI - A)`).

use serde::{Deserialize, Serialize};

use crate::enumerate::EnumError;
use crate::graph::{Matrix, WeightedDigraph};
use crate::involution::enumerate_pairs;
use crate::invariants::{c_walks, char_poly, char_poly_oracle, ell, matrix_mul, InvariantError};
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `r > n`
    AboveN,
    /// `1 <= r <= n`
    AtMostN,
}

impl Branch {
    pub fn of(n: usize, r: usize) -> Branch {
        if r > n {
            Branch::AboveN
        } else {
            Branch::AtMostN
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<R> {
    pub n: usize,
    pub r: usize,
    pub branch: Branch,
    /// Labelled summands; they add up to `lhs`.
    pub terms: Vec<(String, R)>,
    pub lhs: R,
    /// `lhs` is the ring zero.
    pub holds: bool,
}

/// Wire form of an [`IdentityReport`]: ring elements as canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReportJson {
    pub n: usize,
    pub r: usize,
    pub branch: Branch,
    pub terms: Vec<TermJson>,
    pub lhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub label: String,
    pub expr: String,
}

impl<R: Ring> IdentityReport<R> {
    pub fn to_json_with(&self, fmt: impl Fn(&R) -> String) -> IdentityReportJson {
        IdentityReportJson {
            n: self.n,
            r: self.r,
            branch: self.branch,
            terms: self
                .terms
                .iter()
                .map(|(label, v)| TermJson {
                    label: label.clone(),
                    expr: fmt(v),
                })
                .collect(),
            lhs: fmt(&self.lhs),
            holds: self.holds,
        }
    }
}

// Which spelling to use for the walk/trace and coefficient symbols.
#[derive(Clone, Copy)]
enum Form {
    Digraph,
    Matrix,
}

impl Form {
    fn power(self, k: usize) -> String {
        match self {
            Form::Digraph => format!("c_{k}"),
            Form::Matrix => format!("Tr(A^{k})"),
        }
    }

    fn coeff(self, k: usize) -> String {
        match self {
            Form::Digraph => format!("ℓ_{k}"),
            Form::Matrix => format!("d_{k}"),
        }
    }
}

// `power(k)` for 1 <= k <= r and `coeff(k)` for 1 <= k <= min(r, n).
fn assemble<R: Ring>(
    n: usize,
    r: usize,
    form: Form,
    power: impl Fn(usize) -> R,
    coeff: impl Fn(usize) -> R,
) -> IdentityReport<R> {
    let branch = Branch::of(n, r);
    let mut terms = vec![(form.power(r), power(r))];
    let last = match branch {
        Branch::AboveN => n,
        Branch::AtMostN => r - 1,
    };
    for k in 1..=last {
        let label = format!("{}·{}", form.power(r - k), form.coeff(k));
        terms.push((label, power(r - k).mul_ref(&coeff(k))));
    }
    if branch == Branch::AtMostN {
        terms.push((format!("{r}·{}", form.coeff(r)), coeff(r).times(r)));
    }
    let lhs = terms.iter().fold(R::zero(), |acc, (_, v)| acc.add_ref(v));
    let holds = lhs.is_zero();
    IdentityReport {
        n,
        r,
        branch,
        terms,
        lhs,
        holds,
    }
}

/// The identity at index `r` with `c_k` and `ℓ_k` computed by enumeration.
pub fn trace_ch_lhs<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> Result<IdentityReport<R>, EnumError> {
    if r == 0 {
        return Err(EnumError::ZeroWalkLength);
    }
    let n = g.n();
    let c = (1..=r).map(|k| c_walks(g, k)).collect::<Result<Vec<_>, _>>()?;
    let l = (1..=r.min(n)).map(|k| ell(g, k)).collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(n, r, Form::Digraph, |k| c[k - 1].clone(), |k| l[k - 1].clone()))
}

/// The identity at index `r` with `Tr(A^k)` and `d_k` from the matrix
/// oracles. Never evaluates `A^0`.
pub fn trace_ch_matrix_form<R: Ring>(entries: &[Vec<R>], r: usize) -> Result<IdentityReport<R>, InvariantError> {
    if r == 0 {
        return Err(InvariantError::ZeroPower);
    }
    let cp = char_poly_oracle(entries)?;
    let traces = trace_powers(entries, r);
    Ok(assemble(cp.n(), r, Form::Matrix, |k| traces[k - 1].clone(), |k| cp.d(k)))
}

// Tr(A^1), ..., Tr(A^r).
fn trace_powers<R: Ring>(entries: &[Vec<R>], r: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(r);
    let mut power: Matrix<R> = entries.to_vec();
    for k in 1..=r {
        if k > 1 {
            power = matrix_mul(&power, entries);
        }
        out.push((0..power.len()).fold(R::zero(), |acc, i| acc.add_ref(&power[i][i])));
    }
    out
}

/// Both forms for `r = 1..=r_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport<R> {
    pub combinatorial: Vec<IdentityReport<R>>,
    pub matrix: Vec<IdentityReport<R>>,
    /// Per `r`: the two term lists agree value by value.
    pub forms_agree: Vec<bool>,
}

impl<R> SuiteReport<R> {
    pub fn all_hold(&self) -> bool {
        self.combinatorial.iter().all(|r| r.holds)
            && self.matrix.iter().all(|r| r.holds)
            && self.forms_agree.iter().all(|&a| a)
    }
}

/// Runs both forms of the identity for every `r` up to `r_max`, sharing the
/// walk sums, subdigraph sums, and matrix powers across `r`.
pub fn verify_suite<R: Ring>(g: &WeightedDigraph<R>, r_max: usize) -> Result<SuiteReport<R>, InvariantError> {
    if r_max == 0 {
        return Err(InvariantError::ZeroPower);
    }
    let n = g.n();
    let c = (1..=r_max).map(|k| c_walks(g, k)).collect::<Result<Vec<_>, _>>()?;
    let l = char_poly(g);
    let entries = g.to_matrix();
    let d = char_poly_oracle(&entries)?;
    let traces = trace_powers(&entries, r_max);

    let mut suite = SuiteReport {
        combinatorial: Vec::with_capacity(r_max),
        matrix: Vec::with_capacity(r_max),
        forms_agree: Vec::with_capacity(r_max),
    };
    for r in 1..=r_max {
        let comb = assemble(n, r, Form::Digraph, |k| c[k - 1].clone(), |k| l.d(k));
        let mat = assemble(n, r, Form::Matrix, |k| traces[k - 1].clone(), |k| d.d(k));
        let agree = comb.terms.len() == mat.terms.len()
            && comb.terms.iter().zip(&mat.terms).all(|((_, x), (_, y))| x == y);
        suite.combinatorial.push(comb);
        suite.matrix.push(mat);
        suite.forms_agree.push(agree);
    }
    Ok(suite)
}

/// `Σ_{(c, γ)} W((c, γ))`, plus `r ℓ_r` when `r <= n`: the left-hand side
/// of the identity rebuilt from the pair set.
pub fn pair_sum_lhs<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> Result<R, EnumError> {
    let pairs = enumerate_pairs(g, r)?;
    let total = pairs.iter().fold(R::zero(), |acc, p| acc.add_ref(&p.signed_weight(g)));
    if r <= g.n() {
        Ok(total.add_ref(&ell(g, r)?.times(r)))
    } else {
        Ok(total)
    }
}
