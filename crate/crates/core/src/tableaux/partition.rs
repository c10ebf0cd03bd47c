use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram, stored as its weakly decreasing list of row lengths.
///
/// [`Partition::new`] strips trailing zeros. [`Partition::padded`] keeps
/// them, which matters for the diagrams produced by `Ψ_λ`, where the
/// position of a part carries information.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut p = Self::padded(parts)?;
        p.strip_zeros();
        Ok(p)
    }

    pub fn padded(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    fn strip_zeros(&mut self) {
        while self.parts.last() == Some(&0) {
            self.parts.pop();
        }
    }

    pub fn normalized(&self) -> Self {
        let mut p = self.clone();
        p.strip_zeros();
        p
    }

    /// The stored parts, trailing zeros included.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of stored parts, trailing zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// `l(λ)`, the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The largest part, or zero.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `ᵗλ`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `ᵗμ! = c_1! c_2! ⋯ c_t!` where `ᵗμ = (c_1, …, c_t)`.
    pub fn transpose_factorial(&self) -> u64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| factorial(c))
            .fold(1u64, |acc, f| acc.checked_mul(f).expect("ᵗμ! overflows u64"))
    }

    /// `μ⁺`: every part decreased by one, zero parts dropped.
    pub fn lowered(&self) -> Partition {
        let parts = self.parts.iter().filter(|&&p| p > 0).map(|&p| p - 1).collect();
        let mut p = Partition { parts };
        p.strip_zeros();
        p
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `|λ| ≤ max_size`, smallest sizes first.
    pub fn all_up_to(max_size: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(Partition::all_of_size).collect()
    }
}

pub(crate) fn factorial(m: usize) -> u64 {
    (1..=m as u64).fold(1u64, |acc, k| acc.checked_mul(k).expect("factorial overflows u64"))
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::padded(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn zeros_are_stripped_or_kept() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        let q = Partition::padded(vec![2, 1, 0]).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.length(), 2);
        assert_eq!(q.normalized(), p(&[2, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 3, 2, 2]).conjugate(), p(&[4, 4, 2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn transpose_factorial_examples() {
        assert_eq!(p(&[2, 1]).transpose_factorial(), 2);
        assert_eq!(p(&[]).transpose_factorial(), 1);
        assert_eq!(p(&[1, 1, 1]).transpose_factorial(), 6);
        assert_eq!(p(&[2, 2]).transpose_factorial(), 4);
    }

    #[test]
    fn lowered_drops_zeros() {
        assert_eq!(p(&[2, 2, 1]).lowered(), p(&[1, 1]));
        assert_eq!(p(&[1]).lowered(), p(&[]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|k| Partition::all_of_size(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in Partition::all_up_to(9) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().size(), lam.size());
        }
    }
}
