//! Exact commutative-ring arithmetic.
//!
//! Everything downstream is generic over [`Ring`]. The two rings the tool
//! actually works in are the integers ([`BigInt`]) and the polynomial ring
//! over the matrix indeterminates `a_i_j` ([`RingElement`] covers both).

mod element;
mod monomial;
mod parse;
mod poly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use element::{Naming, RingElement};
pub use monomial::{Monomial, Var};
pub use num_bigint::BigInt;
pub use parse::{parse_expr, ParseError};
pub use poly::Poly;

/// A commutative ring with exact equality.
///
/// Blanket-implemented for any type with by-value and by-reference ring
/// operators, so `i64`, `BigInt` and [`RingElement`] all qualify.
pub trait Ring: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    /// `n`-fold sum `self + self + ... + self`.
    ///
    /// Integer scalars act on a general commutative ring by repeated
    /// addition, so no conversion from integers is assumed.
    fn times(&self, n: usize) -> Self {
        let mut acc = Self::zero();
        for _ in 0..n {
            acc = acc.add_ref(self);
        }
        acc
    }

    /// `(-1)^k * self`.
    fn signed(&self, k: usize) -> Self {
        if k.is_multiple_of(2) {
            self.clone()
        } else {
            -self.clone()
        }
    }

    /// `(-1)^k` as a ring element.
    fn sign(k: usize) -> Self {
        Self::one().signed(k)
    }
}

impl<T> Ring for T
where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Sub<Output = T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Sum of a sequence of ring elements; zero for an empty sequence.
pub fn sum<'a, R: Ring + 'a>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc.add_ref(x))
}

/// Product of a sequence of ring elements; one for an empty sequence.
pub fn product<'a, R: Ring + 'a>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc.mul_ref(x))
}
