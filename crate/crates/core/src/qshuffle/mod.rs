//! q-characters of KLR modules and the (quantum) shuffle product.
//!
//! A [`QChar`] is a finite sum `Σ c_w(q) w` over words `w` of a fixed weight
//! `α`. Induction of outer tensor products corresponds to the shuffle
//! product; in the graded version, moving a letter `j` of the right factor
//! leftward past a letter `i` of the left factor costs `q^{−(α_i|α_j)}`.

mod automaton;
mod laurent;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{cartan_entry, weight_of_word, Letter, RootVector, Word};
use crate::error::{Error, Result};

pub use automaton::ShuffleAutomaton;
pub use laurent::LaurentPoly;

/// Below this many word pairs a shuffle product runs sequentially.
const PARALLEL_PAIRS: usize = 64;

/// A q-character: words of weight `alpha` with Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "QCharRepr", try_from = "QCharRepr")]
pub struct QChar {
    alpha: RootVector,
    terms: BTreeMap<Word, LaurentPoly>,
}

#[derive(Serialize, Deserialize)]
struct QCharRepr {
    alpha: RootVector,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: Word,
    coeff: LaurentPoly,
}

impl From<QChar> for QCharRepr {
    fn from(c: QChar) -> Self {
        QCharRepr {
            alpha: c.alpha,
            terms: c
                .terms
                .into_iter()
                .map(|(word, coeff)| TermRepr { word, coeff })
                .collect(),
        }
    }
}

impl TryFrom<QCharRepr> for QChar {
    type Error = Error;

    fn try_from(r: QCharRepr) -> Result<Self> {
        let mut c = QChar::zero(r.alpha);
        for t in r.terms {
            c.add_term(t.word, &t.coeff)?;
        }
        Ok(c)
    }
}

impl QChar {
    /// The zero character of weight `alpha`.
    pub fn zero(alpha: RootVector) -> Self {
        QChar {
            alpha,
            terms: BTreeMap::new(),
        }
    }

    /// The character `1·()` of the trivial module, for rank `n`.
    pub fn unit(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::new(), LaurentPoly::one());
        QChar {
            alpha: RootVector::zero(n),
            terms,
        }
    }

    /// The single word `w` with coefficient 1.
    pub fn word(n: usize, w: &[Letter]) -> Result<Self> {
        Self::monomial(n, w, LaurentPoly::one())
    }

    pub fn monomial(n: usize, w: &[Letter], coeff: LaurentPoly) -> Result<Self> {
        let mut c = QChar::zero(weight_of_word(w, n)?);
        c.add_term(w.to_vec(), &coeff)?;
        Ok(c)
    }

    /// Add `coeff · w`; fails if `w` has the wrong weight.
    pub fn add_term(&mut self, w: Word, coeff: &LaurentPoly) -> Result<()> {
        let wt = weight_of_word(&w, self.rank())?;
        if wt != self.alpha {
            return Err(Error::domain(format!(
                "word {w:?} does not have weight {:?}",
                self.alpha.coeffs()
            )));
        }
        self.add_unchecked(w, coeff);
        Ok(())
    }

    fn add_unchecked(&mut self, w: Word, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn rank(&self) -> usize {
        self.alpha.rank()
    }

    pub fn alpha(&self) -> &RootVector {
        &self.alpha
    }

    pub fn terms(&self) -> &BTreeMap<Word, LaurentPoly> {
        &self.terms
    }

    /// Number of words with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Letter]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The ungraded coefficient of `w`.
    pub fn coeff_at_one(&self, w: &[Letter]) -> i64 {
        self.terms.get(w).map_or(0, LaurentPoly::at_one)
    }

    /// The specialisation `q = 1`, as a character with constant coefficients.
    pub fn at_q1(&self) -> QChar {
        let mut out = QChar::zero(self.alpha.clone());
        for (w, c) in &self.terms {
            out.add_unchecked(w.clone(), &LaurentPoly::constant(c.at_one()));
        }
        out
    }

    /// Smallest power of `q` occurring anywhere.
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(LaurentPoly::min_degree).min()
    }

    pub fn shift(&self, d: i32) -> QChar {
        QChar {
            alpha: self.alpha.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.shift(d))).collect(),
        }
    }

    /// The representative with lowest occurring degree 0.
    pub fn normalized(&self) -> QChar {
        self.shift(-self.min_degree().unwrap_or(0))
    }

    /// Equality up to a single global power of `q`.
    pub fn equal_up_to_shift(&self, other: &QChar) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn scale(&self, c: i64) -> QChar {
        let mut out = QChar::zero(self.alpha.clone());
        for (w, p) in &self.terms {
            out.add_unchecked(w.clone(), &p.scale(c));
        }
        out
    }

    /// `qch(M) * qch(N)`: concatenate every pair of words.
    pub fn concat(&self, other: &QChar) -> QChar {
        let mut out = QChar::zero(&self.alpha + &other.alpha);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_unchecked(w, &(a * b));
            }
        }
        out
    }

    /// The shuffle product, graded or not.
    pub fn shuffle(&self, other: &QChar, graded: bool) -> QChar {
        let alpha = &self.alpha + &other.alpha;
        let pairs: Vec<(&Word, &LaurentPoly, &Word, &LaurentPoly)> = self
            .terms
            .iter()
            .flat_map(|(u, a)| other.terms.iter().map(move |(v, b)| (u, a, v, b)))
            .collect();
        let expand = |&(u, a, v, b): &(&Word, &LaurentPoly, &Word, &LaurentPoly)| {
            let ab = a * b;
            shuffle_words(u, v, graded)
                .into_iter()
                .map(|(w, c)| (w, &c * &ab))
                .collect::<Vec<_>>()
        };
        let parts: Vec<Vec<(Word, LaurentPoly)>> = if pairs.len() < PARALLEL_PAIRS {
            pairs.iter().map(expand).collect()
        } else {
            pairs.par_iter().map(expand).collect()
        };
        let mut out = QChar::zero(alpha);
        for (w, c) in parts.into_iter().flatten() {
            out.add_unchecked(w, &c);
        }
        out
    }

    /// `ε_i`: the largest `k` such that a word ending in `i^k` occurs.
    pub fn epsilon_i(&self, i: Letter) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::domain("ε_i of the zero character"));
        }
        Ok(self
            .terms
            .keys()
            .map(|w| w.iter().rev().take_while(|&&x| x == i).count())
            .max()
            .unwrap_or(0))
    }

    /// `e_i`: keep the words ending in `i` and strip that letter.
    pub fn e_i(&self, i: Letter) -> QChar {
        let mut alpha = self.alpha.clone();
        if (1..=self.rank()).contains(&(i as usize)) {
            alpha.add_simple(i as usize, -1);
        }
        let mut out = QChar::zero(alpha);
        for (w, c) in &self.terms {
            if w.last() == Some(&i) {
                out.add_unchecked(w[..w.len() - 1].to_vec(), c);
            }
        }
        out
    }

    /// `e_i^k`.
    pub fn e_i_pow(&self, i: Letter, k: usize) -> QChar {
        (0..k).fold(self.clone(), |acc, _| acc.e_i(i))
    }

    /// Check the Serre relations at `q = 1` (see [`SerreReport`]).
    pub fn serre_check(&self) -> SerreReport {
        let c = |w: &[Letter]| self.coeff_at_one(w);
        for w in self.terms.keys() {
            for k in 0..w.len().saturating_sub(1) {
                let (i, j) = (w[k], w[k + 1]);
                if i.abs_diff(j) > 1 {
                    let mut swapped = w.clone();
                    swapped.swap(k, k + 1);
                    let (lhs, rhs) = (c(w), c(&swapped));
                    if lhs != rhs {
                        return SerreReport::violated(SerreViolation {
                            kind: SerreKind::Commutation,
                            word: w.clone(),
                            position: k,
                            lhs,
                            rhs,
                        });
                    }
                }
                if k + 2 < w.len() {
                    if let Some((i, j)) = cubic_window(&w[k..k + 3]) {
                        let with = |win: [Letter; 3]| {
                            let mut v = w.clone();
                            v[k..k + 3].copy_from_slice(&win);
                            v
                        };
                        let iji = with([i, j, i]);
                        let lhs = 2 * c(&iji);
                        let rhs = c(&with([j, i, i])) + c(&with([i, i, j]));
                        if lhs != rhs {
                            return SerreReport::violated(SerreViolation {
                                kind: SerreKind::Cubic,
                                word: iji,
                                position: k,
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        SerreReport {
            passed: true,
            violation: None,
        }
    }

    /// Whether any coefficient is negative at `q = 1`.
    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.at_one() < 0)
    }
}

/// `(i, j)` if the window is a permutation of `(i, i, j)` with `|i − j| = 1`.
fn cubic_window(win: &[Letter]) -> Option<(Letter, Letter)> {
    let (a, b, c) = (win[0], win[1], win[2]);
    let (i, j) = if a == b && b != c {
        (a, c)
    } else if a == c && a != b {
        (a, b)
    } else if b == c && a != b {
        (b, a)
    } else {
        return None;
    };
    (i.abs_diff(j) == 1).then_some((i, j))
}

/// All interleavings of `u` and `v` with multiplicity and (optionally) degree.
///
/// Layered dynamic programme over `(i, j)` = letters consumed from each word,
/// merging equal prefixes as it goes.
pub fn shuffle_words(u: &[Letter], v: &[Letter], graded: bool) -> Vec<(Word, LaurentPoly)> {
    // degree contributed by placing u[i] after v[..j]: −Σ_{t<j} (α_{u_i}|α_{v_t})
    let cross = |i: usize, j: usize| -> i32 {
        if !graded {
            return 0;
        }
        -v[..j]
            .iter()
            .map(|&y| cartan_entry(u[i] as usize, y as usize) as i32)
            .sum::<i32>()
    };
    let mut layer: HashMap<(usize, usize), BTreeMap<Word, LaurentPoly>> = HashMap::new();
    layer.insert((0, 0), BTreeMap::from([(Word::new(), LaurentPoly::one())]));
    for _ in 0..u.len() + v.len() {
        let mut next: HashMap<(usize, usize), BTreeMap<Word, LaurentPoly>> = HashMap::new();
        for ((i, j), prefixes) in layer {
            for (p, c) in prefixes {
                if i < u.len() {
                    let mut w = p.clone();
                    w.push(u[i]);
                    *next.entry((i + 1, j)).or_default().entry(w).or_default() +=
                        &c.shift(cross(i, j));
                }
                if j < v.len() {
                    let mut w = p;
                    w.push(v[j]);
                    *next.entry((i, j + 1)).or_default().entry(w).or_default() += &c;
                }
            }
        }
        layer = next;
    }
    layer
        .remove(&(u.len(), v.len()))
        .unwrap_or_default()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

impl Add for &QChar {
    type Output = QChar;

    fn add(self, rhs: &QChar) -> QChar {
        assert_eq!(self.alpha, rhs.alpha, "adding characters of different weight");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_unchecked(w.clone(), c);
        }
        out
    }
}

impl fmt::Display for QChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            let word = format!("({})", word.join(","));
            if *c == LaurentPoly::one() {
                write!(f, "{word}")?;
            } else if c.terms().count() == 1 && c.min_degree() == Some(0) {
                write!(f, "{}·{word}", c)?;
            } else {
                write!(f, "({c})·{word}")?;
            }
        }
        Ok(())
    }
}

/// Which Serre relation failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SerreKind {
    /// `c(⋯ij⋯) = c(⋯ji⋯)` for `|i − j| > 1`.
    Commutation,
    /// `2c(⋯iji⋯) = c(⋯jii⋯) + c(⋯iij⋯)` for `|i − j| = 1`.
    Cubic,
}

/// A violated instance: `lhs ≠ rhs` for the relation at `word[position..]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SerreViolation {
    pub kind: SerreKind,
    pub word: Word,
    pub position: usize,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SerreReport {
    pub passed: bool,
    pub violation: Option<SerreViolation>,
}

impl SerreReport {
    fn violated(v: SerreViolation) -> Self {
        SerreReport {
            passed: false,
            violation: Some(v),
        }
    }
}

/// `qch L(i^m)`: the word `i^m` with coefficient `Π_{k ≤ m} (1 + q² + ⋯ + q^{2(k−1)})`.
pub fn char_l_im(n: usize, i: Letter, m: usize) -> Result<QChar> {
    if i == 0 || i as usize > n {
        return Err(Error::LetterOutOfRange {
            letter: i as usize,
            max: n,
        });
    }
    QChar::monomial(n, &vec![i; m], LaurentPoly::q_factorial(m))
}

/// `e_i(A ⧢ B) = A ⧢ e_i(B) + e_i(A) ⧢ B` at `q = 1`.
pub fn ei_exactness_check(a: &QChar, b: &QChar, i: Letter) -> bool {
    let lhs = a.shuffle(b, false).e_i(i);
    let rhs = &a.shuffle(&b.e_i(i), false) + &a.e_i(i).shuffle(b, false);
    lhs.at_q1() == rhs.at_q1()
}
