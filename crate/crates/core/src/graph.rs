//! The weighted digraph `D(A)` of a square matrix.
//!
//! Vertices are `1..=n`. There is an edge `i -> j` carrying weight `a_ij`
//! whenever that entry is nonzero; loops `i -> i` are 1-cycles.

use std::fmt::{Display, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{parse_expr, ParseError, Ring, RingElement};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("declared order {declared} does not match {actual} rows")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("cell ({row},{col}): {source}")]
    Cell {
        row: usize,
        col: usize,
        #[source]
        source: ParseError,
    },
    #[error("invalid matrix JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Square grid of entries, row-major, 0-based storage.
pub type Matrix<R> = Vec<Vec<R>>;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph<R> {
    n: usize,
    // Dense n*n table, row-major; `None` means no edge.
    weights: Vec<Option<R>>,
    // Successor lists, ascending.
    out: Vec<Vec<usize>>,
}

fn check_square<R>(entries: &[Vec<R>]) -> Result<usize, GraphError> {
    let n = entries.len();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    for (i, row) in entries.iter().enumerate() {
        if row.len() != n {
            return Err(GraphError::NotSquare {
                row: i + 1,
                len: row.len(),
                n,
            });
        }
    }
    Ok(n)
}

impl<R: Ring> WeightedDigraph<R> {
    /// `D(A)`: one edge per nonzero entry.
    pub fn from_matrix(entries: &[Vec<R>]) -> Result<Self, GraphError> {
        Self::build(entries, |w| !w.is_zero())
    }

    /// Like [`from_matrix`](Self::from_matrix) but stores every entry,
    /// zeros included, as an edge. Downstream sums must not change.
    #[doc(hidden)]
    pub fn from_matrix_keeping_zeros(entries: &[Vec<R>]) -> Result<Self, GraphError> {
        Self::build(entries, |_| true)
    }

    fn build(entries: &[Vec<R>], keep: impl Fn(&R) -> bool) -> Result<Self, GraphError> {
        let n = check_square(entries)?;
        let mut weights = Vec::with_capacity(n * n);
        let mut out = vec![Vec::new(); n];
        for (i, row) in entries.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                if keep(w) {
                    weights.push(Some(w.clone()));
                    out[i].push(j + 1);
                } else {
                    weights.push(None);
                }
            }
        }
        Ok(WeightedDigraph { n, weights, out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of edge `i -> j` (1-based), if present.
    pub fn weight(&self, i: usize, j: usize) -> Option<&R> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        self.weights[(i - 1) * self.n + (j - 1)].as_ref()
    }

    pub fn weight_or_zero(&self, i: usize, j: usize) -> R {
        self.weight(i, j).cloned().unwrap_or_else(R::zero)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.weight(i, j).is_some()
    }

    /// Heads of the edges leaving `i`, ascending.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.out[i - 1]
    }

    /// Edges `(i, j, weight)` sorted by `(i, j)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(move |(i, succ)| succ.iter().map(move |&j| (i + 1, j, self.weight(i + 1, j).unwrap())))
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// The matrix back, with zeros for absent edges.
    pub fn to_matrix(&self) -> Matrix<R> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.weight_or_zero(i, j)).collect())
            .collect()
    }

    /// DOT text with edge weights rendered by `label`. Edges appear in
    /// `(i, j)` order.
    pub fn to_dot_with(&self, label: impl Fn(&R) -> String) -> String {
        let mut s = String::from("digraph D {\n");
        for v in 1..=self.n {
            let _ = writeln!(s, "  {v} [label=\"v{v}\"];");
        }
        for (i, j, w) in self.edges() {
            let _ = writeln!(s, "  {i} -> {j} [label=\"{}\"];", escape(&label(w)));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_dot(&self) -> String
    where
        R: Display,
    {
        self.to_dot_with(|w| w.to_string())
    }
}

pub(crate) fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The fully symbolic digraph: every edge `i -> j` present with weight
/// `a_i_j`.
pub fn generic_digraph(n: usize) -> WeightedDigraph<RingElement> {
    WeightedDigraph::from_matrix(&generic_matrix(n)).expect("square by construction")
}

pub fn generic_matrix(n: usize) -> Matrix<RingElement> {
    (1..=n)
        .map(|i| (1..=n).map(|j| RingElement::var(i, j)).collect())
        .collect()
}

/// On-disk matrix: `{"n": 2, "entries": [["a", "@"], ["0", "a_2_2 + 1"]]}`.
///
/// Each cell is a ring expression; `"@"` stands for that cell's own
/// indeterminate `a_i_j`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_matrix(&self) -> Result<Matrix<RingElement>, GraphError> {
        let n = check_square(&self.entries)?;
        if n != self.n {
            return Err(GraphError::OrderMismatch {
                declared: self.n,
                actual: n,
            });
        }
        self.entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, cell)| {
                        if cell.trim() == "@" {
                            Ok(RingElement::var(i + 1, j + 1))
                        } else {
                            parse_expr(cell, n).map_err(|source| GraphError::Cell {
                                row: i + 1,
                                col: j + 1,
                                source,
                            })
                        }
                    })
                    .collect()
            })
            .collect()
    }
}
