//! Matrix invariants computed from the digraph, and independent algebraic
//! oracles for the same quantities.
//!
//! The combinatorial side (`ell`, `f_minor_sum`, `det_via_lsd`, `char_poly`,
//! `c_walks`) only ever sums over enumerated subdigraphs and walks. The
//! oracles (`leibniz_det`, `char_poly_oracle`, `matrix_power_oracle`,
//! `trace_power_oracle`) work on the matrix with permutations and
//! multiplication and never touch the enumerators.

use itertools::Itertools;
use thiserror::Error;

use crate::enumerate::{enumerate_lsd, EnumError};
use crate::graph::{Matrix, WeightedDigraph};
use crate::ring::{sum, Ring};

/// Largest order the factorial-cost Leibniz oracles accept.
pub const LEIBNIZ_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("order {n} exceeds the Leibniz oracle cap of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("matrix must be square and nonempty")]
    NotSquare,
    #[error("power must be at least 1")]
    ZeroPower,
}

/// `λ^n + d_1 λ^{n-1} + ... + d_n`, stored as `d_1..d_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> CharPoly<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        CharPoly { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    /// `d_1, ..., d_n`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `d_i` for `0 <= i <= n`, with `d_0 = 1`.
    pub fn d(&self, i: usize) -> R {
        if i == 0 {
            R::one()
        } else {
            self.coeffs[i - 1].clone()
        }
    }
}

/// `ℓ_r = Σ_{γ ∈ L_r} (-1)^{c(γ)} w(γ)`; `ℓ_0 = 1`.
pub fn ell<R: Ring>(g: &WeightedDigraph<R>, r: usize) -> Result<R, EnumError> {
    let lsds = enumerate_lsd(g, r)?;
    Ok(lsds
        .iter()
        .fold(R::zero(), |acc, l| acc.add_ref(&l.signed_weight(g))))
}

/// `f_i`, the sum of the order-`i` principal minors, as
/// `Σ (-1)^{i - c(γ)} w(γ)` over subdigraphs on `i` vertices.
pub fn f_minor_sum<R: Ring>(g: &WeightedDigraph<R>, i: usize) -> Result<R, InvariantError> {
    let n = g.n();
    if i == 0 || i > n {
        return Err(InvariantError::IndexOutOfRange { i, n });
    }
    let lsds = enumerate_lsd(g, i)?;
    Ok(lsds.iter().fold(R::zero(), |acc, l| {
        acc.add_ref(&l.weight(g).signed(i - l.cycle_count()))
    }))
}

/// `det A = Σ (-1)^{n - c(γ)} w(γ)` over spanning subdigraphs.
pub fn det_via_lsd<R: Ring>(g: &WeightedDigraph<R>) -> R {
    let n = g.n();
    enumerate_lsd(g, n)
        .expect("r = n is in range")
        .iter()
        .fold(R::zero(), |acc, l| acc.add_ref(&l.weight(g).signed(n - l.cycle_count())))
}

/// Characteristic polynomial with `d_i = ℓ_i`.
pub fn char_poly<R: Ring>(g: &WeightedDigraph<R>) -> CharPoly<R> {
    let coeffs = (1..=g.n())
        .map(|i| ell(g, i).expect("1 <= i <= n"))
        .collect();
    CharPoly { coeffs }
}

/// `c_k`: total weight of closed walks of length `k`.
///
/// Depth-first over every walk, sharing prefix products; visits `Tr(B^k)`
/// walks for the 0/1 adjacency matrix `B`.
pub fn c_walks<R: Ring>(g: &WeightedDigraph<R>, k: usize) -> Result<R, EnumError> {
    if k == 0 {
        return Err(EnumError::ZeroWalkLength);
    }
    let mut total = R::zero();
    for s in 1..=g.n() {
        walk_sum_dfs(g, s, k, s, &R::one(), &mut total);
    }
    Ok(total)
}

/// Sum of weights of all walks of length `k` from `from` to `to`.
pub fn walk_sum_between<R: Ring>(g: &WeightedDigraph<R>, from: usize, to: usize, k: usize) -> Result<R, EnumError> {
    if k == 0 {
        return Err(EnumError::ZeroWalkLength);
    }
    let mut total = R::zero();
    walk_sum_dfs(g, to, k, from, &R::one(), &mut total);
    Ok(total)
}

fn walk_sum_dfs<R: Ring>(
    g: &WeightedDigraph<R>,
    to: usize,
    steps_left: usize,
    at: usize,
    prefix: &R,
    total: &mut R,
) {
    if steps_left == 1 {
        if let Some(w) = g.weight(at, to) {
            *total = total.add_ref(&prefix.mul_ref(w));
        }
        return;
    }
    for &u in g.successors(at) {
        let w = g.weight(at, u).expect("successor edge");
        walk_sum_dfs(g, to, steps_left - 1, u, &prefix.mul_ref(w), total);
    }
}

fn order<R>(entries: &[Vec<R>]) -> Result<usize, InvariantError> {
    let n = entries.len();
    if n == 0 || entries.iter().any(|row| row.len() != n) {
        return Err(InvariantError::NotSquare);
    }
    Ok(n)
}

fn permutation_parity(p: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

/// Determinant by the Leibniz permutation expansion.
pub fn leibniz_det<R: Ring>(entries: &[Vec<R>]) -> Result<R, InvariantError> {
    let n = order(entries)?;
    if n > LEIBNIZ_MAX_ORDER {
        return Err(InvariantError::OrderTooLarge {
            n,
            max: LEIBNIZ_MAX_ORDER,
        });
    }
    let mut det = R::zero();
    for sigma in (0..n).permutations(n) {
        let term = sigma
            .iter()
            .enumerate()
            .fold(R::one(), |acc, (i, &j)| acc.mul_ref(&entries[i][j]));
        det = det.add_ref(&term.signed(permutation_parity(&sigma)));
    }
    Ok(det)
}

// Univariate polynomials in λ, coefficient of λ^i at index i.
fn upoly_mul<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

/// `det(λI - A)` by the Leibniz expansion over `R[λ]`.
pub fn char_poly_oracle<R: Ring>(entries: &[Vec<R>]) -> Result<CharPoly<R>, InvariantError> {
    let n = order(entries)?;
    if n > LEIBNIZ_MAX_ORDER {
        return Err(InvariantError::OrderTooLarge {
            n,
            max: LEIBNIZ_MAX_ORDER,
        });
    }
    let mut total = vec![R::zero(); n + 1];
    for sigma in (0..n).permutations(n) {
        let mut term = vec![R::one()];
        for (i, &j) in sigma.iter().enumerate() {
            let entry = -entries[i][j].clone();
            let factor = if i == j { vec![entry, R::one()] } else { vec![entry] };
            term = upoly_mul(&term, &factor);
        }
        let parity = permutation_parity(&sigma);
        for (p, c) in term.iter().enumerate() {
            total[p] = total[p].add_ref(&c.signed(parity));
        }
    }
    debug_assert!(total[n] == R::one(), "monic");
    // d_k is the coefficient of λ^{n-k}.
    let coeffs = (1..=n).map(|k| total[n - k].clone()).collect();
    Ok(CharPoly { coeffs })
}

pub fn matrix_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(R::zero(), |acc, t| acc.add_ref(&a[i][t].mul_ref(&b[t][j]))))
                .collect()
        })
        .collect()
}

/// `A^k` by repeated multiplication, `k >= 1`.
pub fn matrix_power_oracle<R: Ring>(entries: &[Vec<R>], k: usize) -> Result<Matrix<R>, InvariantError> {
    order(entries)?;
    if k == 0 {
        return Err(InvariantError::ZeroPower);
    }
    let mut acc = entries.to_vec();
    for _ in 1..k {
        acc = matrix_mul(&acc, entries);
    }
    Ok(acc)
}

/// `Tr(A^k)` by repeated multiplication.
pub fn trace_power_oracle<R: Ring>(entries: &[Vec<R>], k: usize) -> Result<R, InvariantError> {
    let p = matrix_power_oracle(entries, k)?;
    Ok(sum(p.iter().enumerate().map(|(i, row)| &row[i])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generic_digraph, generic_matrix};
    use crate::ring::{parse_expr, RingElement};

    fn p(s: &str) -> RingElement {
        parse_expr(s, 2).unwrap()
    }

    fn int_graph(m: &[Vec<i64>]) -> WeightedDigraph<i64> {
        WeightedDigraph::from_matrix(m).unwrap()
    }

    fn identity(n: usize) -> Matrix<i64> {
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
    }

    #[test]
    fn ell_on_two_by_two() {
        let g = generic_digraph(2);
        assert_eq!(ell(&g, 0).unwrap(), p("1"));
        assert_eq!(ell(&g, 1).unwrap(), p("-(a+d)"));
        assert_eq!(ell(&g, 2).unwrap(), p("ad - bc"));
        assert!(ell(&g, 3).is_err());
    }

    #[test]
    fn principal_minor_sums() {
        let g = generic_digraph(2);
        assert_eq!(f_minor_sum(&g, 1).unwrap(), p("a + d"));
        assert_eq!(f_minor_sum(&g, 2).unwrap(), p("ad - bc"));
        assert_eq!(f_minor_sum(&int_graph(&identity(3)), 2).unwrap(), 3);
        assert_eq!(
            f_minor_sum(&g, 0),
            Err(InvariantError::IndexOutOfRange { i: 0, n: 2 })
        );
        assert!(f_minor_sum(&g, 3).is_err());
    }

    #[test]
    fn determinants() {
        let g = generic_digraph(2);
        assert_eq!(det_via_lsd(&g), p("ad - bc"));
        assert_eq!(leibniz_det(&generic_matrix(2)).unwrap(), p("ad - bc"));
        for n in 1..=4 {
            assert_eq!(det_via_lsd(&int_graph(&identity(n))), 1);
            assert_eq!(det_via_lsd(&int_graph(&vec![vec![0; n]; n])), 0);
        }
    }

    #[test]
    fn char_poly_values() {
        let cp = char_poly(&generic_digraph(2));
        assert_eq!(cp.coeffs(), &[p("-a - d"), p("ad - bc")]);
        assert_eq!(char_poly(&int_graph(&identity(2))).coeffs(), &[-2, 1]);
        assert_eq!(char_poly(&int_graph(&vec![vec![1; 3]; 3])).coeffs(), &[-3, 0, 0]);
        assert_eq!(cp.d(0), p("1"));
    }

    #[test]
    fn char_poly_oracle_values() {
        let cp = char_poly_oracle(&generic_matrix(2)).unwrap();
        assert_eq!(cp.coeffs(), &[p("-a - d"), p("ad - bc")]);
        let diag = vec![vec![1i64, 0, 0], vec![0, 2, 0], vec![0, 0, 3]];
        assert_eq!(char_poly_oracle(&diag).unwrap().coeffs(), &[-6, 11, -6]);
        assert_eq!(char_poly_oracle(&vec![vec![0i64; 2]; 2]).unwrap().coeffs(), &[0, 0]);
        assert_eq!(
            char_poly_oracle(&vec![vec![0i64; 9]; 9]),
            Err(InvariantError::OrderTooLarge { n: 9, max: 8 })
        );
        assert_eq!(char_poly_oracle(&vec![vec![0i64; 2]; 1]), Err(InvariantError::NotSquare));
    }

    #[test]
    fn closed_walk_sums() {
        let g = generic_digraph(2);
        assert_eq!(c_walks(&g, 1).unwrap(), p("a + d"));
        assert_eq!(c_walks(&g, 2).unwrap(), p("a^2 + d^2 + 2bc"));
        assert_eq!(c_walks(&g, 3).unwrap(), p("a^3 + d^3 + 3bc(a + d)"));
        for n in 1..=3 {
            let ones = int_graph(&vec![vec![1; n]; n]);
            for k in 1..=5 {
                assert_eq!(c_walks(&ones, k).unwrap(), (n as i64).pow(k as u32));
            }
        }
        assert_eq!(c_walks(&g, 0), Err(EnumError::ZeroWalkLength));
    }

    #[test]
    fn trace_power_values() {
        assert_eq!(trace_power_oracle(&generic_matrix(2), 1).unwrap(), p("a + d"));
        for n in 1..=3 {
            for k in 1..=4 {
                assert_eq!(trace_power_oracle(&identity(n), k).unwrap(), n as i64);
            }
        }
        let nil = vec![vec![0i64, 1], vec![0, 0]];
        assert_eq!(trace_power_oracle(&nil, 2).unwrap(), 0);
        assert_eq!(trace_power_oracle(&nil, 0), Err(InvariantError::ZeroPower));
    }

    #[test]
    fn walks_between_match_power_entries() {
        let m = generic_matrix(2);
        let g = generic_digraph(2);
        let a3 = matrix_power_oracle(&m, 3).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(walk_sum_between(&g, i, j, 3).unwrap(), a3[i - 1][j - 1]);
            }
        }
    }

    #[test]
    fn parity() {
        assert_eq!(permutation_parity(&[0, 1, 2]), 0);
        assert_eq!(permutation_parity(&[1, 0, 2]), 1);
        assert_eq!(permutation_parity(&[1, 2, 0]), 0);
    }
}
