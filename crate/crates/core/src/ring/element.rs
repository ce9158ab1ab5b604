use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use super::poly::Poly;

/// An element of `Z` or of `Z[a_i_j]`.
///
/// Integers and constant polynomials are the same element: any result whose
/// polynomial part is constant is stored as `Integer`, so the derived
/// equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    /// Always has at least one non-constant term.
    Polynomial(Poly),
}

impl RingElement {
    pub fn int(v: impl Into<BigInt>) -> Self {
        RingElement::Integer(v.into())
    }

    /// The indeterminate for entry `(row, col)`, 1-based.
    pub fn var(row: usize, col: usize) -> Self {
        RingElement::Polynomial(Poly::var(Var::new(row, col)))
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => RingElement::Integer(c),
            None => RingElement::Polynomial(p),
        }
    }

    pub fn to_poly(&self) -> Poly {
        match self {
            RingElement::Integer(c) => Poly::constant(c.clone()),
            RingElement::Polynomial(p) => p.clone(),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Integer(c) => Some(c),
            RingElement::Polynomial(_) => None,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        match self {
            RingElement::Integer(c) => RingElement::Integer(num_traits::pow(c.clone(), k as usize)),
            RingElement::Polynomial(p) => RingElement::from_poly(p.pow(k)),
        }
    }

    /// Canonical text using the given variable names.
    pub fn display(&self, naming: Naming) -> Formatted<'_> {
        Formatted { elem: self, naming }
    }

    fn binop(
        &self,
        rhs: &RingElement,
        int: impl Fn(&BigInt, &BigInt) -> BigInt,
        poly: impl Fn(&Poly, &Poly) -> Poly,
    ) -> RingElement {
        match (self, rhs) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(int(a, b)),
            (RingElement::Polynomial(a), RingElement::Polynomial(b)) => RingElement::from_poly(poly(a, b)),
            (a, b) => RingElement::from_poly(poly(&a.to_poly(), &b.to_poly())),
        }
    }
}

impl Default for RingElement {
    fn default() -> Self {
        RingElement::zero()
    }
}

impl From<i64> for RingElement {
    fn from(v: i64) -> Self {
        RingElement::Integer(BigInt::from(v))
    }
}

impl From<BigInt> for RingElement {
    fn from(v: BigInt) -> Self {
        RingElement::Integer(v)
    }
}

impl From<Poly> for RingElement {
    fn from(p: Poly) -> Self {
        RingElement::from_poly(p)
    }
}

impl Zero for RingElement {
    fn zero() -> Self {
        RingElement::Integer(BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, RingElement::Integer(c) if c.is_zero())
    }
}

impl One for RingElement {
    fn one() -> Self {
        RingElement::Integer(BigInt::one())
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;

    fn add(self, rhs: &'a RingElement) -> RingElement {
        self.binop(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &'a RingElement) -> RingElement {
        self.binop(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &'a RingElement) -> RingElement {
        self.binop(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        match self {
            RingElement::Integer(c) => RingElement::Integer(-c),
            RingElement::Polynomial(p) => RingElement::Polynomial(-p),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $f(self, rhs: RingElement) -> RingElement {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// How indeterminates are spelled when printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Naming {
    /// `a_1_1`, `a_1_2`, ... with explicit `*` between factors.
    Indexed,
    /// Single letters `a, b, c, ...` row-major for a matrix of the given
    /// order (at most 3), juxtaposed as in `3abc`.
    Aliased(usize),
}

impl Naming {
    /// Aliases when the order allows them, indexed names otherwise.
    pub fn for_order(n: usize) -> Naming {
        if (1..=3).contains(&n) {
            Naming::Aliased(n)
        } else {
            Naming::Indexed
        }
    }

    fn write_monomial(self, out: &mut String, m: &Monomial) {
        let mut first = true;
        for &(v, e) in m.powers() {
            match self {
                Naming::Aliased(n) if v.alias(n).is_some() => {
                    out.push(v.alias(n).unwrap());
                }
                _ => {
                    if !first {
                        out.push('*');
                    }
                    let _ = write!(out, "{v}");
                }
            }
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
            first = false;
        }
    }
}

pub struct Formatted<'a> {
    elem: &'a RingElement,
    naming: Naming,
}

impl fmt::Display for Formatted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.elem {
            RingElement::Integer(c) => return write!(f, "{c}"),
            RingElement::Polynomial(p) => p,
        };
        let mut out = String::new();
        for (i, (m, c)) in p.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if m.is_one() {
                let _ = write!(out, "{mag}");
                continue;
            }
            if !mag.is_one() {
                let _ = write!(out, "{mag}");
                if self.naming == Naming::Indexed {
                    out.push('*');
                }
            }
            self.naming.write_monomial(&mut out, m);
        }
        f.write_str(&out)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(Naming::Indexed).fmt(f)
    }
}
