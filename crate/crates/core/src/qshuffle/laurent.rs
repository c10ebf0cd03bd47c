use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A Laurent polynomial in `q` with integer coefficients.
///
/// Stored sparsely as `exponent → coefficient` without zero entries.
/// Arithmetic is checked: overflow panics rather than wrapping.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·q^d`.
    pub fn monomial(c: i64, d: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(d, c);
        p
    }

    /// `1 + q² + ⋯ + q^{2(k−1)}`, the Poincaré polynomial of `[k]` in the
    /// normalisation with lowest degree 0.
    pub fn q_integer(k: usize) -> Self {
        let mut p = Self::zero();
        for t in 0..k {
            p.add_term(2 * t as i32, 1);
        }
        p
    }

    /// `Π_{k=1}^m (1 + q² + ⋯ + q^{2(k−1)})`.
    pub fn q_factorial(m: usize) -> Self {
        (1..=m).fold(Self::one(), |acc, k| &acc * &Self::q_integer(k))
    }

    pub fn add_term(&mut self, d: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(d).or_insert(0);
        *entry = checked_add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: i32) -> i64 {
        self.terms.get(&d).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&d, &c)| (d, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `q^d`.
    pub fn shift(&self, d: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e + d, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut p = Self::zero();
        for (&d, &a) in &self.terms {
            p.add_term(d, checked_mul(a, c));
        }
        p
    }

    /// The specialisation `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| checked_add(acc, c))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, &c) in &rhs.terms {
            self.add_term(d, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    #[allow(clippy::suspicious_arithmetic_impl)] // degrees add under multiplication
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&d1, &c1) in &self.terms {
            for (&d2, &c2) in &rhs.terms {
                out.add_term(d1 + d2, checked_mul(c1, c2));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&d, &c)) in self.terms.iter().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (abs, d) {
                (a, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, d) => write!(f, "q^{d}")?,
                (a, 1) => write!(f, "{a}q")?,
                (a, d) => write!(f, "{a}q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
