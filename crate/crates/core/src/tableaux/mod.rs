//! Young diagrams, semistandard tableaux, readings and the map `Ψ_λ`.

mod count;
mod partition;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootVector, Weight};
use crate::error::{Error, Result};

pub use count::{all_ssyt, count_ssyt, count_ssyt_enumerated, count_ssyt_formula};
pub use partition::Partition;

/// The order in which boxes of a tableau become tensor factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Rows right to left, top row first.
    MiddleEastern,
    /// Columns top to bottom, rightmost column first.
    FarEastern,
}

/// A filling of a Young diagram with positive integers.
///
/// Rows are stored top to bottom; `rows[r][c]` is the entry in row `r + 1`,
/// column `c + 1`. The shape never has zero rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct TableauRepr {
    /// Inferred from `rows` when omitted.
    #[serde(default)]
    shape: Option<Partition>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        match repr.shape {
            Some(shape) => Tableau::with_shape(shape, repr.rows),
            None => Tableau::new(repr.rows),
        }
    }
}

/// The data of the descent step attached to a tableau `T ≠ T_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    /// `i_T`.
    pub letter: usize,
    /// `ε_{i_T}(T)`, counted on `Ψ_λ(T)`.
    pub epsilon: usize,
    /// `T⁺`: entries `i_T + 1` replaced by `i_T` in rows `1..=i_T`.
    pub raised: Tableau,
}

impl Tableau {
    /// Builds a tableau from its rows; the shape is read off the row lengths.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens)?;
        Self::with_shape(shape, rows)
    }

    pub fn with_shape(shape: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape.normalized();
        while rows.len() > shape.len() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.len() != shape.len() {
            return Err(Error::LengthMismatch {
                expected: shape.len(),
                got: rows.len(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.part(r + 1) {
                return Err(Error::RaggedRows {
                    row: r + 1,
                    expected: shape.part(r + 1),
                    got: row.len(),
                });
            }
            if row.contains(&0) {
                return Err(Error::domain("tableau entries must be positive"));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// `T_λ`: row `i` filled with `i`.
    pub fn highest_weight(shape: &Partition) -> Self {
        let shape = shape.normalized();
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| vec![r + 1; len])
            .collect();
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry in row `r`, column `c` (both 0-based).
    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r][c]
    }

    pub(crate) fn set_entry(&mut self, r: usize, c: usize, value: usize) {
        self.rows[r][c] = value;
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_highest_weight(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().all(|&e| e == r + 1))
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lower, upper)| upper < lower));
        rows_ok && cols_ok
    }

    /// Semistandard with entries in `1..=n+1`.
    pub fn validate_ssyt(&self, n: usize) -> bool {
        self.is_semistandard() && self.max_entry() <= n + 1
    }

    /// Number of entries equal to `k`, for `k = 1..=m`.
    pub fn content(&self, m: usize) -> Vec<usize> {
        let mut counts = vec![0; m];
        for &e in self.rows.iter().flatten() {
            if (1..=m).contains(&e) {
                counts[e - 1] += 1;
            }
        }
        counts
    }

    /// The weight of `T` as an element of `B(λ)` for `sl_{n+1}`:
    /// `⟨h_i, wt T⟩ = #i − #(i+1)`.
    pub fn weight(&self, n: usize) -> Weight {
        let c = self.content(n + 1);
        Weight::new((0..n).map(|i| c[i] as i64 - c[i + 1] as i64).collect())
    }

    /// `λ − wt(T)` in simple-root coordinates: the coefficient of `α_j` is the
    /// number of entries greater than `j` among the first `j` rows.
    pub fn depth(&self, n: usize) -> RootVector {
        let mut root = RootVector::zero(n);
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                for j in (r + 1)..e.min(n + 1) {
                    root.add_simple(j, 1);
                }
            }
        }
        root
    }

    /// Box positions `(row, column)`, 0-based, in reading order.
    pub fn reading_positions(&self, reading: Reading) -> Vec<(usize, usize)> {
        match reading {
            Reading::MiddleEastern => self
                .rows
                .iter()
                .enumerate()
                .flat_map(|(r, row)| (0..row.len()).rev().map(move |c| (r, c)))
                .collect(),
            Reading::FarEastern => {
                let conj = self.shape.conjugate();
                (0..self.shape.first())
                    .rev()
                    .flat_map(|c| (0..conj.part(c + 1)).map(move |r| (r, c)))
                    .collect()
            }
        }
    }

    pub fn reading(&self, reading: Reading) -> Vec<usize> {
        self.reading_positions(reading)
            .into_iter()
            .map(|(r, c)| self.rows[r][c])
            .collect()
    }

    /// `Υ_M(T)`.
    pub fn middle_eastern_reading(&self) -> Vec<usize> {
        self.reading(Reading::MiddleEastern)
    }

    /// `Υ_F(T)`.
    pub fn far_eastern_reading(&self) -> Vec<usize> {
        self.reading(Reading::FarEastern)
    }

    /// `Ψ_λ(T) = (μ^(1), …, μ^(s))` with `μ^(k)_j = a_{k, λ_k − j + 1} − k`.
    /// Each `μ^(k)` keeps its zeros and has exactly `λ_k` parts.
    pub fn psi(&self) -> Result<Vec<Partition>> {
        if !self.is_semistandard() {
            return Err(Error::NotSemistandard(self.to_string()));
        }
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let k = r + 1;
                let parts = row
                    .iter()
                    .rev()
                    .map(|&e| {
                        e.checked_sub(k).ok_or_else(|| {
                            Error::NotSemistandard(format!("entry {e} in row {k}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Partition::padded(parts)
            })
            .collect()
    }

    /// Inverse of [`Tableau::psi`]: `a_{k,j} = μ^(k)_{λ_k − j + 1} + k`.
    ///
    /// Fails when the reconstructed filling is not a semistandard tableau
    /// with entries at most `n + 1`, i.e. when `mus` is not in the image.
    pub fn from_psi(shape: &Partition, mus: &[Partition], n: usize) -> Result<Tableau> {
        let shape = shape.normalized();
        if mus.len() != shape.len() {
            return Err(Error::LengthMismatch {
                expected: shape.len(),
                got: mus.len(),
            });
        }
        let mut rows = Vec::with_capacity(shape.len());
        for (r, mu) in mus.iter().enumerate() {
            let k = r + 1;
            let len = shape.part(k);
            if mu.len() > len || mu.length() > len {
                return Err(Error::Reconstruction(format!(
                    "μ^({k}) = {mu} has more than λ_{k} = {len} parts"
                )));
            }
            let row: Vec<usize> = (1..=len).rev().map(|j| mu.part(j) + k).collect();
            rows.push(row);
        }
        let t = Tableau::with_shape(shape, rows)?;
        if !t.is_semistandard() {
            return Err(Error::Reconstruction(format!("{t} is not semistandard")));
        }
        if t.max_entry() > n + 1 {
            return Err(Error::Reconstruction(format!(
                "{t} has an entry larger than n + 1 = {}",
                n + 1
            )));
        }
        Ok(t)
    }

    /// `(i_T, ε_{i_T}(T), T⁺)` computed from `Ψ_λ(T)`.
    pub fn descent(&self) -> Result<Descent> {
        let mus = self.psi()?;
        let letter = mus
            .iter()
            .enumerate()
            .flat_map(|(r, mu)| mu.parts().iter().filter(|&&m| m > 0).map(move |&m| m + r))
            .min()
            .ok_or(Error::NoDescent)?;
        let epsilon = mus
            .iter()
            .enumerate()
            .flat_map(|(r, mu)| mu.parts().iter().map(move |&m| (r, m)))
            .filter(|&(r, m)| m > 0 && m + r == letter)
            .count();
        let mut raised = self.clone();
        for row in raised.rows.iter_mut().take(letter) {
            for e in row.iter_mut().filter(|e| **e == letter + 1) {
                *e = letter;
            }
        }
        Ok(Descent {
            letter,
            epsilon,
            raised,
        })
    }

    /// Compact form used as a deduplication key and in graph labels:
    /// rows joined by `/`, entries comma-separated once any exceeds 9.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            for (c, e) in row.iter().enumerate() {
                if wide && c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}
