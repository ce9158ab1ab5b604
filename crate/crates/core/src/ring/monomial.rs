use std::cmp::Ordering;
use std::fmt;

/// The indeterminate `a_{row,col}` standing for one matrix entry (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub row: u16,
    pub col: u16,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var {
            row: row as u16,
            col: col as u16,
        }
    }

    /// Single-letter name in row-major order (`a, b, c, ...`) for a matrix of
    /// order `n <= 3`, or `None` when no alias exists.
    pub fn alias(self, n: usize) -> Option<char> {
        if n == 0 || n > 3 {
            return None;
        }
        let (r, c) = (self.row as usize, self.col as usize);
        if r == 0 || c == 0 || r > n || c > n {
            return None;
        }
        Some((b'a' + ((r - 1) * n + (c - 1)) as u8) as char)
    }

    /// Inverse of [`Var::alias`].
    pub fn from_alias(letter: char, n: usize) -> Option<Var> {
        if n == 0 || n > 3 || !letter.is_ascii_lowercase() {
            return None;
        }
        let idx = (letter as u8 - b'a') as usize;
        (idx < n * n).then(|| Var::new(idx / n + 1, idx % n + 1))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{}_{}", self.row, self.col)
    }
}

/// A power product of indeterminates.
///
/// Exponents are kept sorted by variable with no zero entries, so the empty
/// list is the constant monomial and equality is structural. Ordering is
/// graded lexicographic with `a_1_1 > a_1_2 > ... > a_n_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            powers: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs, merging
    /// repeated variables and dropping zero exponents.
    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut v: Vec<(Var, u32)> = powers.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(var, _)| var);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match merged.last_mut() {
                Some((last, le)) if *last == var => *le += e,
                _ => merged.push((var, e)),
            }
        }
        Monomial { powers: merged }
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.powers
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            powers: self.powers.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (x, y) in self.powers.iter().zip(&other.powers) {
                if x.0 != y.0 {
                    // The side holding the smaller variable has a positive
                    // exponent where the other has zero.
                    return if x.0 < y.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
