//! Sweeps that run the library's certificates over whole families and
//! collect the outcome in serialisable reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::binfinity::{iota_lambda, BInfinity, MLTableau};
use crate::cartan::{partition_to_dominant, Letter, RootVector};
use crate::crystal::{generate_crystal, tableau_e, tableau_f, AuxCrystal, Crystal, TableauCrystal, TensorProduct};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::qshuffle::{char_l_im, ei_exactness_check, QChar};
use crate::segments::{
    distinguished_word, induced_automaton, induced_char, multiplicity_certificate, s_hat_mu, s_mu,
    s_mu_tilde, s_t, s_t_infinity, Segment, SegmentList, MATERIALIZE_INTERLEAVINGS,
};
use crate::tableaux::{Partition, Reading, Tableau};

/// At most this many failures are kept in a report.
const MAX_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub witness: String,
    pub detail: String,
}

/// Outcome of one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub check: String,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    fn from_outcomes(check: &str, outcomes: Vec<(String, Vec<String>)>) -> Self {
        let cases = outcomes.len();
        let mut failures: Vec<Failure> = outcomes
            .into_iter()
            .flat_map(|(witness, details)| {
                details.into_iter().map(move |detail| Failure {
                    witness: witness.clone(),
                    detail,
                })
            })
            .collect();
        failures.sort_by(|a, b| (&a.witness, &a.detail).cmp(&(&b.witness, &b.detail)));
        let passed = failures.is_empty();
        failures.truncate(MAX_FAILURES);
        SweepReport {
            check: check.to_string(),
            cases,
            passed,
            failures,
        }
    }
}

/// All `(μ, k)` with `1 ≤ |μ| ≤ max_size` and `S_μ[k]` defined at rank `n`.
pub fn valid_mu_k(max_size: usize, n: usize) -> Vec<(Partition, usize)> {
    (1..=max_size)
        .flat_map(Partition::all_of_size)
        .flat_map(|mu| {
            let top = (n + 1).saturating_sub(mu.first());
            (1..=top).map(move |k| (mu.clone(), k))
        })
        .collect()
}

/// All `(μ, k)` with `1 ≤ |μ| ≤ max_size` and `Ŝ_μ[k]` defined at rank `n`.
pub fn valid_hook_mu_k(max_size: usize, n: usize) -> Vec<(Partition, usize)> {
    (1..=max_size)
        .flat_map(Partition::all_of_size)
        .flat_map(|mu| (mu.first().max(1)..=n).map(move |k| (mu.clone(), k)))
        .collect()
}

fn check_rank(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.length() > n {
        return Err(Error::domain(format!("λ = {lambda} has more than n = {n} parts")));
    }
    Ok(())
}

fn b_lambda(lambda: &Partition, n: usize) -> Result<Vec<Tableau>> {
    check_rank(lambda, n)?;
    Ok(generate_crystal(&Tableau::highest_weight(lambda), n)?.vertices)
}

/// `ch(ind S_T)` satisfies the Serre relations for every `T ∈ B(λ)`.
/// Large characters are checked on their shuffle automaton only.
pub fn serre_sweep(lambdas: &[Partition], n: usize) -> Result<SweepReport> {
    let mut tableaux = Vec::new();
    for lambda in lambdas {
        tableaux.extend(b_lambda(lambda, n)?);
    }
    let outcomes = tableaux
        .par_iter()
        .map(|t| {
            let sl = s_t(t, n)?;
            let mut failures = Vec::new();
            if sl.interleavings() <= MATERIALIZE_INTERLEAVINGS {
                let report = induced_char(&sl, n, false)?.serre_check();
                if let Some(v) = report.violation {
                    failures.push(format!("{v:?}"));
                }
            } else if let Err(e) = induced_automaton(&sl, n)?.serre_operator_check() {
                failures.push(e);
            }
            Ok((t.key(), failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::from_outcomes("serre", outcomes))
}

/// The coefficient of `i(μ;k)` in `ch(ind S_μ[k])` is `ᵗμ!`.
pub fn multiplicity_sweep(max_mu: usize, n: usize) -> Result<SweepReport> {
    let outcomes = valid_mu_k(max_mu, n)
        .par_iter()
        .map(|(mu, k)| {
            let mut failures = Vec::new();
            if !multiplicity_certificate(mu, *k, n)? {
                let word = distinguished_word(mu, *k, n)?;
                let got = induced_char(&s_mu(mu, *k, n)?, n, false)?.coeff_at_one(&word);
                failures.push(format!(
                    "coefficient of {word:?} is {got}, expected {}",
                    mu.transpose_factorial()
                ));
            }
            Ok((format!("μ={mu} k={k}"), failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::from_outcomes("multiplicity", outcomes))
}

/// `ch(ind S_μ[k]) = ch(ind S̃_μ[k])` at `q = 1`, and the graded characters
/// agree up to a global power of `q`.
pub fn reorder_sweep(max_mu: usize, n: usize) -> Result<SweepReport> {
    let outcomes = valid_mu_k(max_mu, n)
        .par_iter()
        .map(|(mu, k)| {
            let a = s_mu(mu, *k, n)?;
            let b = s_mu_tilde(mu, *k, n)?;
            let mut failures = Vec::new();
            let (ga, gb) = (induced_char(&a, n, true)?, induced_char(&b, n, true)?);
            if ga.at_q1() != gb.at_q1() {
                failures.push("characters differ at q = 1".to_string());
            }
            if !ga.equal_up_to_shift(&gb) {
                failures.push("graded characters differ after normalisation".to_string());
            }
            Ok((format!("μ={mu} k={k}"), failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::from_outcomes("reorder", outcomes))
}

/// `ε_k(ch(ind Ŝ_μ[k])) = r` (the number of parts) and
/// `e_k^r ch(ind Ŝ_μ[k]) = r!·ch(ind Ŝ_{μ⁺}[k−1])` at `q = 1`.
pub fn hook_epsilon_sweep(max_mu: usize, n: usize) -> Result<SweepReport> {
    let outcomes = valid_hook_mu_k(max_mu, n)
        .par_iter()
        .map(|(mu, k)| {
            let r = mu.length();
            let letter = *k as Letter;
            let ch = induced_char(&s_hat_mu(mu, *k, n)?, n, false)?;
            let mut failures = Vec::new();
            let eps = ch.epsilon_i(letter)?;
            if eps != r {
                failures.push(format!("ε_{k} = {eps}, expected {r}"));
            }
            let lhs = ch.e_i_pow(letter, r).at_q1();
            let factorial = (1..=r as i64).product::<i64>();
            let rhs = induced_char(&s_hat_mu(&mu.lowered(), k - 1, n)?, n, false)?
                .scale(factorial)
                .at_q1();
            if lhs != rhs {
                failures.push(format!("e_{k}^{r} gives {lhs}, expected {rhs}"));
            }
            Ok((format!("μ={mu} k={k}"), failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::from_outcomes("hook-epsilon", outcomes))
}

/// A random element of `B(∞)`: `depth` random `f̃_i` applied to `T_∞`.
pub fn random_ml_tableau(rng: &mut impl Rng, n: usize, depth: usize) -> MLTableau {
    (0..depth).fold(MLTableau::highest(n), |t, _| t.f(rng.gen_range(1..=n)))
}

/// On random `(T, i)`: `ẽ_i f̃_i T = T`, `wt(f̃_i T) = wt(T) − α_i`, and
/// `ε_i(T)` equals the length of the `ẽ_i`-string through `T`.
pub fn binfinity_roundtrip(samples: usize, n: usize, max_depth: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(MLTableau, usize)> = (0..samples)
        .map(|_| {
            let depth = rng.gen_range(0..=max_depth);
            (random_ml_tableau(&mut rng, n, depth), rng.gen_range(1..=n))
        })
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|(t, i)| {
            let mut failures = Vec::new();
            let ft = t.f(*i);
            if ft.e(*i).as_ref() != Some(t) {
                failures.push(format!("ẽ_{i} f̃_{i} T ≠ T"));
            }
            if &t.weight() - &ft.weight() != RootVector::simple(n, *i) {
                failures.push(format!("wt(f̃_{i} T) ≠ wt(T) − α_{i}"));
            }
            let string = BInfinity { n }.e_string_length(t, *i);
            if string != t.epsilon(*i) {
                failures.push(format!("ε_{i} = {} but the ẽ_{i}-string has length {string}", t.epsilon(*i)));
            }
            (format!("{} i={i}", t), failures)
        })
        .collect();
    SweepReport::from_outcomes("binfinity-roundtrip", outcomes)
}

/// For every `T ∈ B(λ)`, with `b = ι_λ(T)`:
///
/// * `b ⊗ t_λ ⊗ c` in `B(∞) ⊗ T^λ ⊗ C` has the same `ẽ_i`, `f̃_i`, `ε_i`,
///   `φ_i` and weight as `T` (so `ι_λ` is a strict embedding), and in
///   particular `ε_i(b) ≤ ε_i(T)`;
/// * `ι_λ(ẽ_i T) = ẽ_i b` whenever `ẽ_i T ≠ 0`;
/// * `wt(b) = wt(T) − λ`;
/// * `Ψ_∞(b)` is `Ψ_λ(T)` padded with empty diagrams, and `S_b = S_T`.
pub fn binfinity_embedding(lambda: &Partition, n: usize) -> Result<SweepReport> {
    let lam = partition_to_dominant(lambda, n)?;
    let tableaux = b_lambda(lambda, n)?;
    let blambda = TableauCrystal::new(n);
    let ambient = TensorProduct::new(
        TensorProduct::new(BInfinity { n }, AuxCrystal::T(lam.clone())),
        AuxCrystal::C { n },
    );
    let embed = |t: &Tableau| -> Result<((MLTableau, ()), ())> { Ok(((iota_lambda(t, n)?, ()), ())) };
    let outcomes = tableaux
        .par_iter()
        .map(|t| {
            let mut failures = Vec::new();
            let b = embed(t)?;
            let ml = &b.0 .0;
            for i in 1..=n {
                let e_t = blambda.e(t, i);
                let f_t = blambda.f(t, i);
                if ambient.e(&b, i) != e_t.as_ref().map(embed).transpose()? {
                    failures.push(format!("ẽ_{i} does not commute with ι"));
                }
                if ambient.f(&b, i) != f_t.as_ref().map(embed).transpose()? {
                    failures.push(format!("f̃_{i} does not commute with ι"));
                }
                if ambient.epsilon(&b, i) != blambda.epsilon(t, i) {
                    failures.push(format!("ε_{i} of b ⊗ t_λ ⊗ c differs from ε_{i}(T)"));
                }
                if ambient.phi(&b, i) != blambda.phi(t, i) {
                    failures.push(format!("φ_{i} of b ⊗ t_λ ⊗ c differs from φ_{i}(T)"));
                }
                if (BInfinity { n }).epsilon(ml, i) > blambda.epsilon(t, i) {
                    failures.push(format!("ε_{i}(ι T) > ε_{i}(T)"));
                }
                if let Some(et) = &e_t {
                    if Some(iota_lambda(et, n)?) != ml.e(i) {
                        failures.push(format!("ι(ẽ_{i} T) ≠ ẽ_{i} ι(T)"));
                    }
                }
            }
            if ml.weight().to_weight() != &t.weight(n) - &lam {
                failures.push("wt(ι T) ≠ wt(T) − λ".to_string());
            }
            let mut padded: Vec<Vec<usize>> = t
                .psi()?
                .into_iter()
                .map(|mu| mu.normalized().parts().to_vec())
                .collect();
            padded.resize(n, Vec::new());
            if ml.psi_infinity() != padded {
                failures.push("Ψ_∞(ι T) is not Ψ_λ(T) padded".to_string());
            }
            if s_t_infinity(ml)? != s_t(t, n)? {
                failures.push("S_(ι T) ≠ S_T".to_string());
            }
            Ok((t.key(), failures))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::from_outcomes("binfinity-embedding", outcomes))
}

/// `qch L(i^m)` is `m!` at `q = 1` and is the normalised graded shuffle of
/// `m` copies of the letter `i`.
pub fn nilhecke_sweep(max_m: usize, n: usize) -> Result<SweepReport> {
    let mut outcomes = Vec::new();
    for i in 1..=n as Letter {
        let letter = QChar::word(n, &[i])?;
        let mut shuffled = QChar::unit(n);
        for m in 0..=max_m {
            if m > 0 {
                shuffled = shuffled.shuffle(&letter, true);
            }
            let ch = char_l_im(n, i, m)?;
            let mut failures = Vec::new();
            let expected: i64 = (1..=m as i64).product();
            if ch.coeff_at_one(&vec![i; m]) != expected {
                failures.push(format!("dim L({i}^{m}) ≠ {m}!"));
            }
            if shuffled.normalized() != ch {
                failures.push("graded shuffle of letters differs".to_string());
            }
            outcomes.push((format!("i={i} m={m}"), failures));
        }
    }
    Ok(SweepReport::from_outcomes("nilhecke", outcomes))
}

fn random_segment_list(rng: &mut impl Rng, n: usize) -> SegmentList {
    let count = rng.gen_range(1..=2);
    let segments = (0..count)
        .map(|_| {
            let start = rng.gen_range(1..=n);
            Segment {
                start,
                len: rng.gen_range(1..=n + 1 - start),
            }
        })
        .collect();
    SegmentList::new(segments, n).expect("segments fit by construction")
}

/// `e_i(A ⧢ B) = A ⧢ e_i(B) + e_i(A) ⧢ B` at `q = 1` on random pairs of
/// segment characters.
pub fn exactness_sweep(samples: usize, n: usize, seed: u64) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes = Vec::new();
    for _ in 0..samples {
        let a = random_segment_list(&mut rng, n);
        let b = random_segment_list(&mut rng, n);
        let i = rng.gen_range(1..=n) as Letter;
        let (ca, cb) = (induced_char(&a, n, false)?, induced_char(&b, n, false)?);
        let failures = if ei_exactness_check(&ca, &cb, i) {
            Vec::new()
        } else {
            vec![format!("exactness fails for i = {i}")]
        };
        outcomes.push((format!("{a} ⧢ {b} i={i}"), failures));
    }
    Ok(SweepReport::from_outcomes("exactness", outcomes))
}

/// The worked `sl_6` example, checked end to end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example1Report {
    pub tableau: String,
    pub psi: Vec<Partition>,
    pub middle_eastern: Vec<usize>,
    pub far_eastern: Vec<usize>,
    pub letter: usize,
    pub epsilon: usize,
    pub raised: String,
    /// `ε_{i_T}(T)` computed by the signature rule.
    pub crystal_epsilon: i64,
    /// `ẽ_{i_T}^ε T`, by the crystal operators (both readings).
    pub crystal_raised: Option<String>,
    pub passed: bool,
}

pub fn example_1() -> Result<Example1Report> {
    let n = fixtures::EXAMPLE_RANK;
    let t = fixtures::example_tableau();
    let d = t.descent()?;
    let crystal_epsilon = TableauCrystal::new(n)
        .epsilon(&t, d.letter)
        .finite()
        .expect("tableau crystals have finite ε");
    let mut raised = Some(t.clone());
    for _ in 0..d.epsilon {
        raised = raised.and_then(|r| tableau_e(&r, d.letter, n));
    }
    let passed = crystal_epsilon == d.epsilon as i64
        && raised.as_ref() == Some(&d.raised)
        && d.raised == fixtures::example_tableau_raised();
    Ok(Example1Report {
        tableau: t.key(),
        psi: t.psi()?,
        middle_eastern: t.reading(Reading::MiddleEastern),
        far_eastern: t.reading(Reading::FarEastern),
        letter: d.letter,
        epsilon: d.epsilon,
        raised: d.raised.key(),
        crystal_epsilon,
        crystal_raised: raised.map(|r| r.key()),
        passed,
    })
}

/// Middle-Eastern and Far-Eastern operators agree on every vertex of `B(λ)`,
/// and `f̃_i`, `ẽ_i` are mutually inverse there.
pub fn reading_sweep(lambda: &Partition, n: usize) -> Result<SweepReport> {
    let outcomes = b_lambda(lambda, n)?
        .par_iter()
        .map(|t| {
            let me = TableauCrystal::with_reading(n, Reading::MiddleEastern);
            let fe = TableauCrystal::with_reading(n, Reading::FarEastern);
            let mut failures = Vec::new();
            for i in 1..=n {
                if me.e(t, i) != fe.e(t, i) || me.f(t, i) != fe.f(t, i) {
                    failures.push(format!("readings disagree for i = {i}"));
                }
                if let Some(ft) = tableau_f(t, i, n) {
                    if tableau_e(&ft, i, n).as_ref() != Some(t) {
                        failures.push(format!("ẽ_{i} f̃_{i} T ≠ T"));
                    }
                }
            }
            (t.key(), failures)
        })
        .collect();
    Ok(SweepReport::from_outcomes("reading", outcomes))
}
