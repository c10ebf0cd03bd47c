//! `B(∞)` for `sl_{n+1}` realised by marginally large tableaux.
//!
//! A marginally large tableau has `n` rows; row `i` consists of `i`s followed
//! by entries larger than `i`, and holds exactly one more `i` than the length
//! of row `i + 1`. Such a tableau is determined by its *excess*: the entries
//! larger than `i` in each row `i`. [`MLTableau`] stores only that, so the
//! non-canonical leading columns never appear.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootVector, Weight};
use crate::crystal::{signature, Crystal, ExtInt, Signature};
use crate::error::{Error, Result};
use crate::tableaux::{Reading, Tableau};

/// A marginally large tableau, stored by its excess rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MLRepr")]
pub struct MLTableau {
    n: usize,
    excess: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct MLRepr {
    n: usize,
    excess: Vec<Vec<usize>>,
}

impl TryFrom<MLRepr> for MLTableau {
    type Error = Error;

    fn try_from(r: MLRepr) -> Result<Self> {
        MLTableau::new(r.n, r.excess)
    }
}

impl MLTableau {
    /// `excess[r]` lists the entries of row `r + 1` larger than `r + 1`, in
    /// any order.
    pub fn new(n: usize, mut excess: Vec<Vec<usize>>) -> Result<Self> {
        if excess.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: excess.len(),
            });
        }
        for (r, row) in excess.iter_mut().enumerate() {
            if let Some(&bad) = row.iter().find(|&&e| e <= r + 1 || e > n + 1) {
                return Err(Error::domain(format!(
                    "excess entry {bad} in row {} must lie in {}..={}",
                    r + 1,
                    r + 2,
                    n + 1
                )));
            }
            row.sort_unstable();
        }
        let t = MLTableau { n, excess };
        debug_assert!(t.materialize().is_semistandard());
        Ok(t)
    }

    /// The highest weight element `T_∞`.
    pub fn highest(n: usize) -> Self {
        MLTableau {
            n,
            excess: vec![Vec::new(); n],
        }
    }

    /// Recover the excess of a marginally large tableau given in full.
    pub fn from_tableau(t: &Tableau, n: usize) -> Result<Self> {
        if t.num_rows() > n {
            return Err(Error::domain(format!("{t} has more than {n} rows")));
        }
        let mut excess = vec![Vec::new(); n];
        for (r, row) in t.rows().iter().enumerate() {
            excess[r] = row.iter().copied().filter(|&e| e > r + 1).collect();
        }
        let ml = MLTableau::new(n, excess)?;
        if &ml.materialize() != t {
            return Err(Error::domain(format!("{t} is not marginally large")));
        }
        Ok(ml)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn excess(&self) -> &[Vec<usize>] {
        &self.excess
    }

    /// Total number of excess boxes; `f̃_i` raises it by one.
    pub fn depth(&self) -> usize {
        self.excess.iter().map(Vec::len).sum()
    }

    /// Row lengths of the materialised tableau, bottom row computed first.
    fn row_lengths(&self) -> Vec<usize> {
        let mut lens = vec![0; self.n];
        let mut below = 0;
        for r in (0..self.n).rev() {
            lens[r] = below + 1 + self.excess[r].len();
            below = lens[r];
        }
        lens
    }

    /// The marginally large tableau itself.
    pub fn materialize(&self) -> Tableau {
        let lens = self.row_lengths();
        let rows = (0..self.n)
            .map(|r| {
                let ones = lens[r] - self.excess[r].len();
                let mut row = vec![r + 1; ones];
                row.extend_from_slice(&self.excess[r]);
                row
            })
            .collect();
        Tableau::new(rows).expect("row lengths are weakly decreasing")
    }

    /// Far-Eastern reading of the materialised tableau, followed by one extra
    /// column `1, …, n` on the left. The extra column contributes a
    /// self-cancelling `+ −` for `i < n` and a trailing `+` for `i = n`, which
    /// is what keeps `f̃_n` defined everywhere. Returns the word and the row
    /// (0-based) of each letter; the extra column is tagged with `None`.
    fn reading(&self) -> (Vec<usize>, Vec<Option<usize>>) {
        let t = self.materialize();
        let positions = t.reading_positions(Reading::FarEastern);
        let mut word: Vec<usize> = positions.iter().map(|&(r, c)| t.entry(r, c)).collect();
        let mut rows: Vec<Option<usize>> = positions.iter().map(|&(r, _)| Some(r)).collect();
        word.extend(1..=self.n);
        rows.extend(std::iter::repeat_n(None, self.n));
        (word, rows)
    }

    fn signature(&self, i: usize) -> (Signature, Vec<Option<usize>>) {
        let (word, rows) = self.reading();
        (signature(&word, i), rows)
    }

    fn check_letter(&self, i: usize) {
        assert!((1..=self.n).contains(&i), "letter {i} outside 1..={}", self.n);
    }

    /// `f̃_i`; always defined on `B(∞)`.
    pub fn f(&self, i: usize) -> MLTableau {
        self.check_letter(i);
        let (sig, rows) = self.signature(i);
        let pos = sig.f_position().expect("the extra column supplies a + for i = n");
        // Acting on a leading i of row i (or on the extra column) appends
        // i + 1 to the excess of row i; acting higher up turns an excess i
        // into i + 1.
        let row = rows[pos].unwrap_or(i - 1);
        let mut excess = self.excess.clone();
        if row + 1 == i {
            excess[row].push(i + 1);
        } else {
            let k = excess[row]
                .iter()
                .rposition(|&e| e == i)
                .expect("f̃ acts on an entry i");
            excess[row][k] = i + 1;
        }
        MLTableau::new(self.n, excess).expect("f̃ preserves marginal largeness")
    }

    /// `ẽ_i`, or `None` when `ε_i = 0`.
    pub fn e(&self, i: usize) -> Option<MLTableau> {
        self.check_letter(i);
        let (sig, rows) = self.signature(i);
        let pos = sig.e_position()?;
        let row = rows[pos].expect("the extra column never supplies a surviving −");
        assert!(row < i, "ẽ_{i} would act on a leading entry of row {}", row + 1);
        let mut excess = self.excess.clone();
        let k = excess[row]
            .iter()
            .position(|&e| e == i + 1)
            .expect("ẽ acts on an entry i + 1");
        if row + 1 == i {
            excess[row].remove(k);
        } else {
            excess[row][k] = i;
        }
        Some(MLTableau::new(self.n, excess).expect("ẽ preserves marginal largeness"))
    }

    /// `wt(T) ∈ −Q⁺`: each excess entry `e` in row `r` contributes
    /// `−(α_r + ⋯ + α_{e−1})`.
    pub fn weight(&self) -> RootVector {
        let mut w = RootVector::zero(self.n);
        for (r, row) in self.excess.iter().enumerate() {
            for &e in row {
                for j in (r + 1)..e {
                    w.add_simple(j, -1);
                }
            }
        }
        w
    }

    pub fn epsilon(&self, i: usize) -> usize {
        self.check_letter(i);
        self.signature(i).0.epsilon()
    }

    /// `φ_i = ε_i + ⟨h_i, wt⟩`.
    pub fn phi(&self, i: usize) -> i64 {
        self.epsilon(i) as i64 + self.weight().to_weight().pairing(i)
    }

    /// `Ψ_∞(T) = (μ^(1), …, μ^(n))`: row `k` of the excess, read right to
    /// left, with `k` subtracted from every entry.
    pub fn psi_infinity(&self) -> Vec<Vec<usize>> {
        self.excess
            .iter()
            .enumerate()
            .map(|(r, row)| row.iter().rev().map(|&e| e - (r + 1)).collect())
            .collect()
    }
}

impl fmt::Display for MLTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.materialize().fmt(f)
    }
}

/// The strict embedding `ι_λ : B(λ) → B(∞) ⊗ T^λ`, on the `B(∞)` component:
/// drop the entries equal to the row index and regrow the leading columns.
pub fn iota_lambda(t: &Tableau, n: usize) -> Result<MLTableau> {
    if !t.validate_ssyt(n) {
        return Err(Error::NotSemistandard(t.to_string()));
    }
    if t.num_rows() > n {
        return Err(Error::domain(format!("{t} has more than n = {n} rows")));
    }
    let mut excess = vec![Vec::new(); n];
    for (r, row) in t.rows().iter().enumerate() {
        excess[r] = row.iter().copied().filter(|&e| e > r + 1).collect();
    }
    MLTableau::new(n, excess)
}

/// `B(∞)` as a [`Crystal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BInfinity {
    pub n: usize,
}

impl Crystal for BInfinity {
    type Element = MLTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn e(&self, b: &MLTableau, i: usize) -> Option<MLTableau> {
        b.e(i)
    }

    fn f(&self, b: &MLTableau, i: usize) -> Option<MLTableau> {
        Some(b.f(i))
    }

    fn epsilon(&self, b: &MLTableau, i: usize) -> ExtInt {
        (b.epsilon(i) as i64).into()
    }

    fn phi(&self, b: &MLTableau, i: usize) -> ExtInt {
        b.phi(i).into()
    }

    fn weight(&self, b: &MLTableau) -> Weight {
        b.weight().to_weight()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn materialize_example() {
        let t = fixtures::marginally_large_example();
        assert_eq!(t.to_string(), "1111234/222/34");
        assert_eq!(MLTableau::from_tableau(&t.materialize(), 3).unwrap(), t);
    }

    #[test]
    fn psi_infinity_example() {
        let t = fixtures::marginally_large_example();
        assert_eq!(t.psi_infinity(), vec![vec![3, 2, 1], vec![], vec![1]]);
    }

    #[test]
    fn iota_example() {
        let t = fixtures::embedding_example();
        let ml = iota_lambda(&t, 3).unwrap();
        assert_eq!(ml, fixtures::embedding_example_image());
        assert_eq!(ml.to_string(), "111111223/22233/34");
    }

    #[test]
    fn highest_weight_element() {
        let h = MLTableau::highest(3);
        assert_eq!(h.to_string(), "111/22/3");
        for i in 1..=3 {
            assert_eq!(h.e(i), None);
            assert_eq!(h.epsilon(i), 0);
            assert_eq!(h.f(i).e(i), Some(h.clone()));
        }
        assert_eq!(h.weight(), RootVector::zero(3));
    }

    #[test]
    fn f_lowers_weight_by_simple_root() {
        let t = fixtures::marginally_large_example();
        for i in 1..=3 {
            let ft = t.f(i);
            assert_eq!(&t.weight() - &ft.weight(), RootVector::simple(3, i));
            assert_eq!(ft.e(i), Some(t.clone()));
            assert_eq!(ft.epsilon(i), t.epsilon(i) + 1);
        }
    }

    #[test]
    fn not_marginally_large() {
        let t = Tableau::new(vec![vec![1, 1], vec![2, 2], vec![3]]).unwrap();
        assert!(MLTableau::from_tableau(&t, 3).is_err());
        assert!(MLTableau::new(2, vec![vec![1], vec![]]).is_err());
        assert!(MLTableau::new(2, vec![vec![]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = fixtures::marginally_large_example();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"n":3,"excess":[[2,3,4],[],[4]]}"#);
        assert_eq!(serde_json::from_str::<MLTableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<MLTableau>(r#"{"n":1,"excess":[[1]]}"#).is_err());
    }
}
