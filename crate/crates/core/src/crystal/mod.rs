//! Abstract `U_q(sl_{n+1})`-crystals.
//!
//! [`Crystal`] is the common interface. Implementations here are the
//! vector-representation crystal `B`, the one-element crystals `T^λ` and
//! `C`, tensor products (by the two-factor tensor rule), and tableau
//! crystals `B(λ)` (by the signature rule on a reading word). `B(∞)` lives
//! in [`crate::binfinity`].

mod graph;
mod signature;
mod tableau;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::cartan::Weight;

pub use graph::{crystal_isomorphic, generate, generate_crystal, CrystalGraph, Edge};
pub use signature::{reduce_signs, signature, tensor_e, tensor_f, Sign, Signature};
pub use tableau::{tableau_e, tableau_f, TableauCrystal};

/// `Z ∪ {−∞}`, the codomain of `ε_i` and `φ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::NegInf => None,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v + rhs),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;

    fn sub(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v - rhs),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl PartialEq<i64> for ExtInt {
    fn eq(&self, other: &i64) -> bool {
        *self == ExtInt::Finite(*other)
    }
}

impl PartialOrd<i64> for ExtInt {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&ExtInt::Finite(*other)))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::NegInf => write!(f, "-inf"),
        }
    }
}

/// A crystal: a set with partial maps `ẽ_i`, `f̃_i` and functions `wt`,
/// `ε_i`, `φ_i`, for `i ∈ {1, …, n}`.
pub trait Crystal {
    type Element: Clone + Eq + Hash;

    fn rank(&self) -> usize;

    fn e(&self, b: &Self::Element, i: usize) -> Option<Self::Element>;

    fn f(&self, b: &Self::Element, i: usize) -> Option<Self::Element>;

    fn epsilon(&self, b: &Self::Element, i: usize) -> ExtInt;

    fn phi(&self, b: &Self::Element, i: usize) -> ExtInt;

    fn weight(&self, b: &Self::Element) -> Weight;

    /// `ẽ_i^k b`, or `None` once it vanishes.
    fn e_pow(&self, b: &Self::Element, i: usize, k: usize) -> Option<Self::Element> {
        let mut cur = b.clone();
        for _ in 0..k {
            cur = self.e(&cur, i)?;
        }
        Some(cur)
    }

    /// `max{k : ẽ_i^k b ≠ 0}`, by repeated application.
    fn e_string_length(&self, b: &Self::Element, i: usize) -> usize {
        let mut k = 0;
        let mut cur = b.clone();
        while let Some(next) = self.e(&cur, i) {
            cur = next;
            k += 1;
        }
        k
    }
}

/// A box of the crystal `B = B(ϖ_1)`: `1 → 2 → ⋯ → n+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementaryBox(pub usize);

/// `(ẽ_i b, f̃_i b, ε_i(b), φ_i(b))` for a box `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxOps {
    pub e: Option<ElementaryBox>,
    pub f: Option<ElementaryBox>,
    pub epsilon: i64,
    pub phi: i64,
}

pub fn box_ops(b: ElementaryBox, i: usize) -> BoxOps {
    let j = b.0;
    BoxOps {
        e: (j == i + 1).then_some(ElementaryBox(i)),
        f: (j == i).then_some(ElementaryBox(i + 1)),
        epsilon: i64::from(j == i + 1),
        phi: i64::from(j == i),
    }
}

/// `⟨h_i, wt(j)⟩` for the box `j`: the weight of `j` is `ε_j = ϖ_j − ϖ_{j−1}`.
pub(crate) fn box_pairing(j: usize, i: usize) -> i64 {
    i64::from(i == j) - i64::from(i + 1 == j)
}

/// The crystal `B` of the vector representation of `sl_{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorCrystal {
    pub n: usize,
}

impl Crystal for VectorCrystal {
    type Element = ElementaryBox;

    fn rank(&self) -> usize {
        self.n
    }

    fn e(&self, b: &ElementaryBox, i: usize) -> Option<ElementaryBox> {
        box_ops(*b, i).e
    }

    fn f(&self, b: &ElementaryBox, i: usize) -> Option<ElementaryBox> {
        box_ops(*b, i).f
    }

    fn epsilon(&self, b: &ElementaryBox, i: usize) -> ExtInt {
        box_ops(*b, i).epsilon.into()
    }

    fn phi(&self, b: &ElementaryBox, i: usize) -> ExtInt {
        box_ops(*b, i).phi.into()
    }

    fn weight(&self, b: &ElementaryBox) -> Weight {
        Weight::new((1..=self.n).map(|i| box_pairing(b.0, i)).collect())
    }
}

/// The one-element crystals `T^λ = {t_λ}` and `C = {c}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuxCrystal {
    /// `wt(t_λ) = λ`, `ε_i = φ_i = −∞`.
    T(Weight),
    /// `wt(c) = 0`, `ε_i = φ_i = 0`.
    C { n: usize },
}

impl Crystal for AuxCrystal {
    type Element = ();

    fn rank(&self) -> usize {
        match self {
            AuxCrystal::T(w) => w.rank(),
            AuxCrystal::C { n } => *n,
        }
    }

    fn e(&self, _: &(), _: usize) -> Option<()> {
        None
    }

    fn f(&self, _: &(), _: usize) -> Option<()> {
        None
    }

    fn epsilon(&self, _: &(), _: usize) -> ExtInt {
        match self {
            AuxCrystal::T(_) => ExtInt::NegInf,
            AuxCrystal::C { .. } => ExtInt::Finite(0),
        }
    }

    fn phi(&self, b: &(), i: usize) -> ExtInt {
        self.epsilon(b, i)
    }

    fn weight(&self, _: &()) -> Weight {
        match self {
            AuxCrystal::T(w) => w.clone(),
            AuxCrystal::C { n } => Weight::zero(*n),
        }
    }
}

/// `B_1 ⊗ B_2` with the tensor product rule in Kashiwara's convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorProduct<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> TensorProduct<A, B> {
    pub fn new(left: A, right: B) -> Self {
        TensorProduct { left, right }
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorProduct<A, B> {
    type Element = (A::Element, B::Element);

    fn rank(&self) -> usize {
        self.left.rank()
    }

    fn e(&self, (b1, b2): &Self::Element, i: usize) -> Option<Self::Element> {
        if self.left.phi(b1, i) >= self.right.epsilon(b2, i) {
            Some((self.left.e(b1, i)?, b2.clone()))
        } else {
            Some((b1.clone(), self.right.e(b2, i)?))
        }
    }

    fn f(&self, (b1, b2): &Self::Element, i: usize) -> Option<Self::Element> {
        if self.left.phi(b1, i) > self.right.epsilon(b2, i) {
            Some((self.left.f(b1, i)?, b2.clone()))
        } else {
            Some((b1.clone(), self.right.f(b2, i)?))
        }
    }

    fn epsilon(&self, (b1, b2): &Self::Element, i: usize) -> ExtInt {
        let shift = self.left.weight(b1).pairing(i);
        self.left.epsilon(b1, i).max(self.right.epsilon(b2, i) - shift)
    }

    fn phi(&self, (b1, b2): &Self::Element, i: usize) -> ExtInt {
        let shift = self.right.weight(b2).pairing(i);
        self.right.phi(b2, i).max(self.left.phi(b1, i) + shift)
    }

    fn weight(&self, (b1, b2): &Self::Element) -> Weight {
        &self.left.weight(b1) + &self.right.weight(b2)
    }
}
