//! Exact verification of the trace Cayley-Hamilton identities through the
//! weighted digraph of a matrix.
//!
//! The characteristic-polynomial coefficients are signed sums over linear
//! subdigraphs (sets of disjoint cycles), the traces of powers are sums
//! over closed walks, and the identities tying them together are checked
//! both as exact ring equalities and through an executable sign-reversing
//! involution on walk/subdigraph pairs.
//!
//! All algorithms are generic over [`Ring`]; the aliases below fix the two
//! rings the tool works in.
//!
//! ```
//! use trace_ch::{generic_digraph, identities::trace_ch_lhs};
//!
//! let g = generic_digraph(2);
//! for r in 1..=4 {
//!     assert!(trace_ch_lhs(&g, r).unwrap().holds);
//! }
//! ```

pub mod dot;
pub mod enumerate;
pub mod graph;
pub mod identities;
pub mod invariants;
pub mod involution;
pub mod ring;
pub mod sample;

pub use graph::{generic_digraph, generic_matrix, Matrix, MatrixFile, WeightedDigraph};
pub use ring::{parse_expr, BigInt, Naming, Poly, Ring, RingElement};

/// Digraph over `Z[a_i_j]` (integers included).
pub type Digraph = WeightedDigraph<RingElement>;
/// Digraph with plain integer weights.
pub type IntDigraph = WeightedDigraph<BigInt>;

pub type CharPoly = invariants::CharPoly<RingElement>;
pub type IdentityReport = identities::IdentityReport<RingElement>;
pub type SuiteReport = identities::SuiteReport<RingElement>;
pub type InvolutionReport = involution::InvolutionReport<RingElement>;
