//! Cartan datum of type `A_n`.
//!
//! Weights are stored in fundamental-weight coordinates, so the pairing
//! `⟨h_i, λ⟩` is a lookup. Roots are stored in simple-root coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Partition;

/// A letter of the index set `I = {1, …, n}`.
pub type Letter = u8;

/// A sequence over `I`.
pub type Word = Vec<Letter>;

/// The Cartan matrix of type `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    n: usize,
}

impl CartanMatrix {
    pub fn new(n: usize) -> Self {
        CartanMatrix { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `a_{ij}` for `1 ≤ i, j ≤ n`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        cartan_entry(i, j)
    }
}

/// `a_{ij}` without the rank bound; also `(α_i|α_j)`.
#[inline]
pub fn cartan_entry(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// An element of the weight lattice `P`, in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coeffs: vec![0; n] }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `⟨h_i, λ⟩`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of the root lattice `Q`, in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector {
    coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        RootVector { coeffs: vec![0; n] }
    }

    /// The simple root `α_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        RootVector { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// `ht(α)`.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Membership in `Q⁺`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// The weight `Σ c_j α_j` expressed in fundamental weights.
    pub fn to_weight(&self) -> Weight {
        let n = self.rank();
        let coeffs = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| self.coeffs[j - 1] * cartan_entry(i, j))
                    .sum()
            })
            .collect();
        Weight::new(coeffs)
    }

    pub(crate) fn add_simple(&mut self, i: usize, times: i64) {
        self.coeffs[i - 1] += times;
    }
}

impl Add for &RootVector {
    type Output = RootVector;

    fn add(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.rank(), rhs.rank(), "roots of different rank");
        RootVector::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;

    fn sub(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.rank(), rhs.rank(), "roots of different rank");
        RootVector::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;

    fn neg(self) -> RootVector {
        RootVector::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `λ_i = a_i + ⋯ + a_n`. The result keeps all `n` parts, zeros included.
pub fn dominant_to_partition(a: &[i64]) -> Result<Partition> {
    if let Some(bad) = a.iter().find(|&&c| c < 0) {
        return Err(Error::domain(format!(
            "dominant weight has negative coefficient {bad}"
        )));
    }
    let mut parts = vec![0usize; a.len()];
    let mut acc = 0usize;
    for k in (0..a.len()).rev() {
        acc += a[k] as usize;
        parts[k] = acc;
    }
    Ok(Partition::padded(parts).expect("suffix sums are weakly decreasing"))
}

/// Inverse of [`dominant_to_partition`]: `a_i = λ_i − λ_{i+1}`.
///
/// Fails when the partition has more than `n` nonzero parts.
pub fn partition_to_dominant(lambda: &Partition, n: usize) -> Result<Weight> {
    if lambda.length() > n {
        return Err(Error::domain(format!(
            "partition {lambda} has more than {n} rows"
        )));
    }
    let coeffs = (1..=n)
        .map(|i| lambda.part(i) as i64 - lambda.part(i + 1) as i64)
        .collect();
    Ok(Weight::new(coeffs))
}

/// The symmetric form `(β|γ) = Σ β_i γ_j a_{ij}`.
pub fn bilinear(beta: &RootVector, gamma: &RootVector) -> Result<i64> {
    if beta.rank() != gamma.rank() {
        return Err(Error::LengthMismatch {
            expected: beta.rank(),
            got: gamma.rank(),
        });
    }
    let n = beta.rank();
    let mut total = 0;
    for i in 1..=n {
        let bi = beta.coeff(i);
        if bi == 0 {
            continue;
        }
        for j in i.saturating_sub(1).max(1)..=(i + 1).min(n) {
            total += bi * gamma.coeff(j) * cartan_entry(i, j);
        }
    }
    Ok(total)
}

/// `α_{i_1} + ⋯ + α_{i_d}` for the word `(i_1, …, i_d)`.
pub fn weight_of_word(word: &[Letter], n: usize) -> Result<RootVector> {
    let mut root = RootVector::zero(n);
    for &letter in word {
        let l = letter as usize;
        if l == 0 || l > n {
            return Err(Error::LetterOutOfRange { letter: l, max: n });
        }
        root.add_simple(l, 1);
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominant_to_partition_examples() {
        let p = dominant_to_partition(&[2, 2, 0, 1, 1]).unwrap();
        assert_eq!(p.parts(), &[6, 4, 2, 2, 1]);
        let p = dominant_to_partition(&[0, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[0, 0, 0]);
        let p = dominant_to_partition(&[1, 1]).unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        assert!(dominant_to_partition(&[1, -1]).is_err());
    }

    #[test]
    fn partition_round_trip() {
        let a = [3, 0, 2, 1];
        let p = dominant_to_partition(&a).unwrap();
        assert_eq!(partition_to_dominant(&p, 4).unwrap().coeffs(), &a);
    }

    #[test]
    fn bilinear_examples() {
        let a1 = RootVector::simple(4, 1);
        let a2 = RootVector::simple(4, 2);
        let a3 = RootVector::simple(4, 3);
        assert_eq!(bilinear(&a1, &a1).unwrap(), 2);
        assert_eq!(bilinear(&a1, &a3).unwrap(), 0);
        assert_eq!(bilinear(&(&a1 + &a2), &a2).unwrap(), 1);
        assert!(bilinear(&a1, &RootVector::simple(3, 1)).is_err());
    }

    #[test]
    fn weight_of_word_examples() {
        assert_eq!(weight_of_word(&[1, 2, 1], 3).unwrap().coeffs(), &[2, 1, 0]);
        assert_eq!(weight_of_word(&[], 3).unwrap().coeffs(), &[0, 0, 0]);
        assert_eq!(
            weight_of_word(&[2, 3, 4], 5).unwrap().coeffs(),
            &[0, 1, 1, 1, 0]
        );
        assert!(weight_of_word(&[4], 3).is_err());
        assert!(weight_of_word(&[0], 3).is_err());
    }

    #[test]
    fn simple_roots_pair_with_cartan_rows() {
        let n = 4;
        for i in 1..=n {
            let w = RootVector::simple(n, i).to_weight();
            for j in 1..=n {
                assert_eq!(w.pairing(j), CartanMatrix::new(n).entry(j, i));
            }
        }
    }
}
