//! Segment modules and the lists built from tableaux.
//!
//! `S_(a;ℓ)` is the one-dimensional module supported on the word
//! `(a, a+1, …, a+ℓ−1)`. A [`SegmentList`] stands for the outer tensor
//! product of its segments; its induced character is the shuffle of their
//! words. This module builds `S_μ[k]`, `Ŝ_μ[k]`, `S_T`, and the certificates
//! tying `T` to the head of `ind S_T`.

use std::cmp::Reverse;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binfinity::MLTableau;
use crate::cartan::{Letter, RootVector, Word};
use crate::crystal::{generate_crystal, Crystal, TableauCrystal};
use crate::error::{Error, Result};
use crate::qshuffle::{QChar, ShuffleAutomaton};
use crate::tableaux::{Partition, Tableau};

/// Characters with at most this many interleavings are also materialised,
/// so that the word-level checks run alongside the automaton ones.
pub const MATERIALIZE_INTERLEAVINGS: u128 = 20_000;

/// `S_(a;ℓ)`, serialised as `[a, ℓ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Segment {
    pub start: usize,
    pub len: usize,
}

impl From<(usize, usize)> for Segment {
    fn from((start, len): (usize, usize)) -> Self {
        Segment { start, len }
    }
}

impl From<Segment> for (usize, usize) {
    fn from(s: Segment) -> Self {
        (s.start, s.len)
    }
}

impl Segment {
    pub fn new(start: usize, len: usize, n: usize) -> Result<Self> {
        let s = Segment { start, len };
        s.validate(n)?;
        Ok(s)
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.len > 0 && (self.start == 0 || self.start + self.len - 1 > n) {
            return Err(Error::domain(format!(
                "segment ({};{}) does not fit in 1..={n}",
                self.start, self.len
            )));
        }
        Ok(())
    }

    /// Last letter `a + ℓ − 1`; meaningless for `ℓ = 0`.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    /// `i_(a;ℓ) = (a, a+1, …, a+ℓ−1)`.
    pub fn word(&self) -> Word {
        (self.start..self.start + self.len).map(|x| x as Letter).collect()
    }

    /// `α_(a;ℓ) = α_a + ⋯ + α_{a+ℓ−1}`.
    pub fn root(&self, n: usize) -> RootVector {
        let mut r = RootVector::zero(n);
        for x in self.start..self.start + self.len {
            r.add_simple(x, 1);
        }
        r
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.start, self.len)
    }
}

/// `i_(a;ℓ)`, checked against the rank.
pub fn segment_word(s: Segment, n: usize) -> Result<Word> {
    s.validate(n)?;
    Ok(s.word())
}

/// An ordered outer tensor product of segments. Zero-length segments are
/// dropped on construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SegmentList(Vec<Segment>);

impl SegmentList {
    pub fn new(segments: Vec<Segment>, n: usize) -> Result<Self> {
        for s in &segments {
            s.validate(n)?;
        }
        Ok(SegmentList(segments.into_iter().filter(|s| s.len > 0).collect()))
    }

    /// Parse `"a,ℓ;a,ℓ;…"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(SegmentList::default());
        }
        let segments = text
            .split(';')
            .map(|pair| {
                let nums: Vec<&str> = pair.split(',').map(str::trim).collect();
                match nums.as_slice() {
                    [a, l] => {
                        let a = a.parse().map_err(|_| Error::Parse(format!("bad start {a:?}")))?;
                        let l = l.parse().map_err(|_| Error::Parse(format!("bad length {l:?}")))?;
                        Ok(Segment { start: a, len: l })
                    }
                    _ => Err(Error::Parse(format!("expected `a,ℓ`, got {pair:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SegmentList::new(segments, n)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn words(&self) -> Vec<Word> {
        self.0.iter().map(Segment::word).collect()
    }

    /// The segments sorted, for order-insensitive comparison.
    pub fn multiset(&self) -> Vec<Segment> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    pub fn same_multiset(&self, other: &SegmentList) -> bool {
        self.multiset() == other.multiset()
    }

    pub fn concat(mut self, other: SegmentList) -> SegmentList {
        self.0.extend(other.0);
        self
    }

    pub fn root(&self, n: usize) -> RootVector {
        self.0
            .iter()
            .fold(RootVector::zero(n), |acc, s| &acc + &s.root(n))
    }

    /// Number of interleavings `N! / Π ℓ!`, an upper bound on the number of
    /// words in the induced character (saturates at `u128::MAX`).
    pub fn interleavings(&self) -> u128 {
        let mut total = 0u128;
        let mut acc = 1u128;
        for s in &self.0 {
            for k in 1..=s.len as u128 {
                total += 1;
                // acc · C(total, k) built incrementally: acc · total / k
                acc = match acc.checked_mul(total) {
                    Some(v) => v / k,
                    None => return u128::MAX,
                };
            }
        }
        acc
    }
}

impl fmt::Display for SegmentList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

fn check_letter(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::LetterOutOfRange { letter: k, max: n });
    }
    Ok(())
}

/// `S_μ[k] = S_(k;μ_1) ⊠ S_(k;μ_2) ⊠ ⋯`.
pub fn s_mu(mu: &Partition, k: usize, n: usize) -> Result<SegmentList> {
    if mu.is_empty() {
        return Ok(SegmentList::default());
    }
    check_letter(k, n)?;
    let segments = mu.parts().iter().map(|&m| Segment { start: k, len: m }).collect();
    SegmentList::new(segments, n)
}

/// `S̃_μ[k]`: `S_μ[k]` in reverse order.
pub fn s_mu_tilde(mu: &Partition, k: usize, n: usize) -> Result<SegmentList> {
    let mut sl = s_mu(mu, k, n)?;
    sl.0.reverse();
    Ok(sl)
}

/// `Ŝ_μ[k] = S_(k−μ_1+1;μ_1) ⊠ S_(k−μ_2+1;μ_2) ⊠ ⋯`: segments ending at `k`.
pub fn s_hat_mu(mu: &Partition, k: usize, n: usize) -> Result<SegmentList> {
    if mu.is_empty() {
        return Ok(SegmentList::default());
    }
    check_letter(k, n)?;
    if mu.first() > k {
        return Err(Error::domain(format!(
            "Ŝ_μ[{k}] needs μ_1 ≤ {k}, but μ = {mu}"
        )));
    }
    let segments = mu
        .parts()
        .iter()
        .map(|&m| Segment { start: k + 1 - m, len: m })
        .collect();
    SegmentList::new(segments, n)
}

/// `S̃̂_μ[k]`: `Ŝ_μ[k]` in reverse order.
pub fn s_hat_mu_tilde(mu: &Partition, k: usize, n: usize) -> Result<SegmentList> {
    let mut sl = s_hat_mu(mu, k, n)?;
    sl.0.reverse();
    Ok(sl)
}

/// `S_T = S_{μ^(s)}[s] ⊠ ⋯ ⊠ S_{μ^(1)}[1]` for `Ψ_λ(T) = (μ^(1), …, μ^(s))`.
pub fn s_t(t: &Tableau, n: usize) -> Result<SegmentList> {
    from_diagrams(&t.psi()?, n)
}

fn from_diagrams(mus: &[Partition], n: usize) -> Result<SegmentList> {
    let mut out = SegmentList::default();
    for (r, mu) in mus.iter().enumerate().rev() {
        out = out.concat(s_mu(mu, r + 1, n)?);
    }
    Ok(out)
}

/// `S_T` for `T ∈ B(∞)`, built from `Ψ_∞(T)`.
pub fn s_t_infinity(t: &MLTableau) -> Result<SegmentList> {
    let mus = t
        .psi_infinity()
        .into_iter()
        .map(Partition::new)
        .collect::<Result<Vec<_>>>()?;
    from_diagrams(&mus, t.rank())
}

/// `ch(ind S)`: the shuffle of the segment words, left to right.
pub fn induced_char(sl: &SegmentList, n: usize, graded: bool) -> Result<QChar> {
    let mut acc = QChar::unit(n);
    for s in sl.segments() {
        acc = acc.shuffle(&QChar::word(n, &s.word())?, graded);
    }
    Ok(acc)
}

/// The ungraded induced character as a [`ShuffleAutomaton`].
pub fn induced_automaton(sl: &SegmentList, n: usize) -> Result<ShuffleAutomaton> {
    ShuffleAutomaton::new(n, &sl.words())
}

/// `i(μ;k)`: `c_1` copies of `k`, then `c_2` copies of `k+1`, …, where
/// `ᵗμ = (c_1, …, c_t)`.
pub fn distinguished_word(mu: &Partition, k: usize, n: usize) -> Result<Word> {
    s_mu(mu, k, n)?;
    Ok(mu
        .conjugate()
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(t, &c)| std::iter::repeat_n((k + t) as Letter, c))
        .collect())
}

/// Whether `i(μ;k)` occurs in `ch(ind S_μ[k])` with multiplicity `ᵗμ!`.
pub fn multiplicity_certificate(mu: &Partition, k: usize, n: usize) -> Result<bool> {
    let word = distinguished_word(mu, k, n)?;
    let ch = induced_char(&s_mu(mu, k, n)?, n, false)?;
    Ok(ch.coeff_at_one(&word) == mu.transpose_factorial() as i64)
}

/// The two linked configurations of a pair of segments, in which `ind S_1 ⊠ S_2 ≅ ind S_2 ⊠ S_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkingCase {
    /// `a_1 + ℓ_1 − 1 < a_2`.
    Disjoint,
    /// `a_2 ≥ a_1` and `a_1 + ℓ_1 ≥ a_2 + ℓ_2`.
    Nested,
    Neither,
}

pub fn linking_case(s1: Segment, s2: Segment, n: usize) -> Result<LinkingCase> {
    s1.validate(n)?;
    s2.validate(n)?;
    let case = if s1.start + s1.len < s2.start + 1 {
        LinkingCase::Disjoint
    } else if s2.start >= s1.start && s1.start + s1.len >= s2.start + s2.len {
        LinkingCase::Nested
    } else {
        LinkingCase::Neither
    };
    if case != LinkingCase::Neither {
        let one = induced_char(&SegmentList::new(vec![s1, s2], n)?, n, false)?;
        let two = induced_char(&SegmentList::new(vec![s2, s1], n)?, n, false)?;
        assert_eq!(one, two, "induction does not commute for {s1}, {s2}");
    }
    Ok(case)
}

/// `Ψ_λ(T)` split along `i_T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuMinDecomposition {
    /// `μ̄^(i)`: the parts of `μ^(i)` with `μ_j + i − 1 ≠ i_T`, zeros kept.
    pub mubar: Vec<Partition>,
    /// `μ_min`: the parts with `μ_j + i − 1 = i_T`, sorted.
    pub mu_min: Partition,
    /// `i_T`.
    pub letter: usize,
    /// `(i, j)` (1-based) of each part collected into `μ_min`.
    pub components: Vec<(usize, usize)>,
}

pub fn mu_min_decompose(t: &Tableau) -> Result<MuMinDecomposition> {
    let mus = t.psi()?;
    let letter = t.descent()?.letter;
    let mut mubar = Vec::with_capacity(mus.len());
    let mut min_parts = Vec::new();
    let mut components = Vec::new();
    for (r, mu) in mus.iter().enumerate() {
        let i = r + 1;
        let mut rest = Vec::new();
        for (j, &m) in mu.parts().iter().enumerate() {
            if m > 0 && m + i - 1 == letter {
                min_parts.push(m);
                components.push((i, j + 1));
            } else {
                rest.push(m);
            }
        }
        mubar.push(Partition::padded(rest)?);
    }
    // every positive part lies weakly above the minimum: μ^(i')_{j'} + i' ≥ μ^(i)_j + i
    for &(i, j) in &components {
        let bound = mus[i - 1].part(j) + i;
        for (r, mu) in mus.iter().enumerate().take(i - 1) {
            for &m in mu.parts().iter().filter(|&&m| m > 0) {
                assert!(m + r + 1 >= bound, "μ_min ordering fails at ({i},{j})");
            }
        }
    }
    min_parts.sort_unstable_by_key(|&m| Reverse(m));
    Ok(MuMinDecomposition {
        mubar,
        mu_min: Partition::new(min_parts)?,
        letter,
        components,
    })
}

fn rearranged(d: &MuMinDecomposition, tail: SegmentList, n: usize) -> Result<SegmentList> {
    let mut out = SegmentList::default();
    for (r, mu) in d.mubar.iter().enumerate().rev() {
        out = out.concat(s_mu_tilde(&mu.normalized(), r + 1, n)?);
    }
    Ok(out.concat(tail))
}

/// `S̃_{μ̄^(s)}[s] ⊠ ⋯ ⊠ S̃_{μ̄^(1)}[1] ⊠ S̃̂_{μ_min}[i_T]`.
///
/// Checked against `S_T`: the same segments, hence (for small cases, where it
/// is computed) the same character at `q = 1`.
pub fn rearranged_segments(t: &Tableau, n: usize) -> Result<SegmentList> {
    let d = mu_min_decompose(t)?;
    let out = rearranged(&d, s_hat_mu_tilde(&d.mu_min, d.letter, n)?, n)?;
    let st = s_t(t, n)?;
    assert!(out.same_multiset(&st), "rearranged list is not a reordering of S_T");
    if st.interleavings() <= MATERIALIZE_INTERLEAVINGS {
        assert_eq!(induced_char(&out, n, false)?, induced_char(&st, n, false)?);
    }
    Ok(out)
}

/// `S̃_{μ̄^(s)}[s] ⊠ ⋯ ⊠ S̃_{μ̄^(1)}[1] ⊠ S̃̂_{μ_min⁺}[i_T − 1]`.
pub fn rearranged_segments_plus(t: &Tableau, n: usize) -> Result<SegmentList> {
    let d = mu_min_decompose(t)?;
    rearranged(&d, s_hat_mu_tilde(&d.mu_min.lowered(), d.letter - 1, n)?, n)
}

/// Outcome of the four certificates for one tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauCertificate {
    pub tableau: String,
    /// `i_T`, `ε` for `T ≠ T_λ`.
    pub descent: Option<(usize, usize)>,
    pub serre: bool,
    pub epsilon: bool,
    pub plus_segments: bool,
    pub weight: bool,
    /// Whether the induced character was also materialised and checked word
    /// by word.
    pub materialized: bool,
    pub failures: Vec<String>,
}

impl TableauCertificate {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiLambdaReport {
    pub lambda: Partition,
    pub n: usize,
    pub tableaux: usize,
    pub passed: bool,
    /// Certificates of the tableaux that failed, sorted by tableau.
    pub failures: Vec<TableauCertificate>,
}

/// Run the certificates (a)–(d) on a single tableau `T ∈ B(λ)`:
///
/// * (a) `ch(ind S_T)` satisfies the Serre relations;
/// * (b) `ε_{i_T}(ch(ind S_T)) = ε`, where `(i_T, ε, T⁺)` is the descent of
///   `T`, and also `ẽ_{i_T}^ε T = T⁺` with `ε_{i_T}(T) = ε` in the crystal;
/// * (c) `S_{T⁺}` is, up to order, `μ̄`-segments followed by
///   `Ŝ_{μ_min⁺}[i_T − 1]`;
/// * (d) the weight of `ch(ind S_T)` is `λ − wt(T)`.
///
/// (a) and (b) run on the [`ShuffleAutomaton`]; when the character is small
/// it is also materialised and the word-level checks must agree.
pub fn certify_tableau(t: &Tableau, n: usize) -> Result<TableauCertificate> {
    let st = s_t(t, n)?;
    let automaton = induced_automaton(&st, n)?;
    let small = st.interleavings() <= MATERIALIZE_INTERLEAVINGS;
    let ch = if small { Some(induced_char(&st, n, false)?) } else { None };
    let mut failures = Vec::new();

    let mut serre = automaton.serre_operator_check().is_ok();
    if let Some(ch) = &ch {
        let report = ch.serre_check();
        if !report.passed {
            failures.push(format!("(a) Serre relation fails: {:?}", report.violation));
        }
        serre = report.passed;
    } else if !serre {
        failures.push("(a) operator-level Serre check fails".into());
    }

    let weight = automaton.alpha() == &t.depth(n);
    if !weight {
        failures.push(format!(
            "(d) weight {:?} ≠ λ − wt(T) = {:?}",
            automaton.alpha().coeffs(),
            t.depth(n).coeffs()
        ));
    }

    let (mut epsilon, mut plus_segments, mut descent) = (true, true, None);
    if !t.is_highest_weight() {
        let d = t.descent()?;
        descent = Some((d.letter, d.epsilon));
        let letter = d.letter as Letter;
        let eps_char = automaton.epsilon(letter);
        if eps_char != d.epsilon {
            epsilon = false;
            failures.push(format!("(b) ε_{} of the character is {eps_char}, expected {}", d.letter, d.epsilon));
        }
        if let Some(ch) = &ch {
            let direct = ch.epsilon_i(letter)?;
            if direct != eps_char {
                epsilon = false;
                failures.push(format!("(b) automaton ε {eps_char} ≠ word-level ε {direct}"));
            }
        }
        let crystal = TableauCrystal::new(n);
        let eps_crystal = crystal.epsilon(t, d.letter);
        if eps_crystal != d.epsilon as i64 {
            epsilon = false;
            failures.push(format!("(b) crystal ε_{} = {eps_crystal}, expected {}", d.letter, d.epsilon));
        }
        if crystal.e_pow(t, d.letter, d.epsilon).as_ref() != Some(&d.raised) {
            epsilon = false;
            failures.push(format!("(b) ẽ_{}^{} T ≠ T⁺ = {}", d.letter, d.epsilon, d.raised));
        }

        let dec = mu_min_decompose(t)?;
        let expected = rearranged(&dec, s_hat_mu(&dec.mu_min.lowered(), d.letter - 1, n)?, n)?;
        let actual = s_t(&d.raised, n)?;
        if !actual.same_multiset(&expected) {
            plus_segments = false;
            failures.push(format!("(c) S_(T⁺) = {actual} is not a reordering of {expected}"));
        }
    }

    Ok(TableauCertificate {
        tableau: t.key(),
        descent,
        serre,
        epsilon,
        plus_segments,
        weight,
        materialized: small,
        failures,
    })
}

/// Certify every tableau of `B(λ)` (in parallel).
pub fn verify_phi_lambda(lambda: &Partition, n: usize) -> Result<PhiLambdaReport> {
    let lambda = lambda.normalized();
    if lambda.length() > n {
        return Err(Error::domain(format!("λ = {lambda} has more than n = {n} parts")));
    }
    let graph = generate_crystal(&Tableau::highest_weight(&lambda), n)?;
    let certs = graph
        .vertices
        .par_iter()
        .map(|t| certify_tableau(t, n))
        .collect::<Result<Vec<_>>>()?;
    let mut failures: Vec<TableauCertificate> =
        certs.into_iter().filter(|c| !c.passed()).collect();
    failures.sort_by(|a, b| a.tableau.cmp(&b.tableau));
    Ok(PhiLambdaReport {
        lambda,
        n,
        tableaux: graph.len(),
        passed: failures.is_empty(),
        failures,
    })
}
