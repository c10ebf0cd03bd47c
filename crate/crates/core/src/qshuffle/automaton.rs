use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{LaurentPoly, QChar};
use crate::cartan::{weight_of_word, Letter, RootVector, Word};
use crate::error::{Error, Result};

/// A weighted automaton recognising the ungraded shuffle `w_1 ⧢ ⋯ ⧢ w_r`.
///
/// A state records, for each distinct word `w` among the factors, how many of
/// its copies have consumed exactly `p` letters, for every `p`. Reading a
/// letter `x` advances one copy whose next letter is `x`; the transition
/// weight is the number of copies it could have been. The coefficient of a
/// word in the shuffle is the total weight of its paths from the initial to
/// the final state.
///
/// This lets shuffles with far too many words to list (six copies of
/// `(1,2,3,4)` already give 140 million) still be queried and checked.
#[derive(Debug, Clone)]
pub struct ShuffleAutomaton {
    alpha: RootVector,
    groups: Vec<(Word, usize)>,
    offsets: Vec<usize>,
    states: Vec<Vec<u8>>,
    transitions: Vec<Vec<(Letter, usize, u64)>>,
    letters: BTreeSet<Letter>,
    initial: usize,
    final_state: usize,
}

type Vector = BTreeMap<usize, i128>;

impl ShuffleAutomaton {
    pub fn new(n: usize, words: &[Word]) -> Result<Self> {
        let mut alpha = RootVector::zero(n);
        let mut counts: BTreeMap<Word, usize> = BTreeMap::new();
        for w in words {
            alpha = &alpha + &weight_of_word(w, n)?;
            if !w.is_empty() {
                *counts.entry(w.clone()).or_default() += 1;
            }
        }
        let groups: Vec<(Word, usize)> = counts.into_iter().collect();
        if groups.iter().any(|&(_, c)| c > u8::MAX as usize) {
            return Err(Error::domain("more than 255 copies of one factor"));
        }
        let mut offsets = Vec::with_capacity(groups.len());
        let mut width = 0;
        for (w, _) in &groups {
            offsets.push(width);
            width += w.len() + 1;
        }
        let mut start = vec![0u8; width];
        let mut end = vec![0u8; width];
        for ((w, c), &off) in groups.iter().zip(&offsets) {
            start[off] = *c as u8;
            end[off + w.len()] = *c as u8;
        }
        let letters = groups.iter().flat_map(|(w, _)| w.iter().copied()).collect();

        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(start.clone(), 0)]);
        let mut states = vec![start];
        let mut transitions = Vec::new();
        let mut k = 0;
        while k < states.len() {
            let s = states[k].clone();
            let mut out = Vec::new();
            for ((w, _), &off) in groups.iter().zip(&offsets) {
                for (p, &x) in w.iter().enumerate() {
                    let c = s[off + p];
                    if c == 0 {
                        continue;
                    }
                    let mut t = s.clone();
                    t[off + p] -= 1;
                    t[off + p + 1] += 1;
                    let next = index.len();
                    let target = *index.entry(t.clone()).or_insert_with(|| {
                        states.push(t);
                        next
                    });
                    out.push((x, target, u64::from(c)));
                }
            }
            transitions.push(out);
            k += 1;
        }
        let final_state = index[&end];
        Ok(ShuffleAutomaton {
            alpha,
            groups,
            offsets,
            states,
            transitions,
            letters,
            initial: 0,
            final_state,
        })
    }

    pub fn alpha(&self) -> &RootVector {
        &self.alpha
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Distinct factor words and their multiplicities.
    pub fn factors(&self) -> &[(Word, usize)] {
        &self.groups
    }

    fn step(&self, v: &Vector, x: Letter) -> Vector {
        let mut out = Vector::new();
        for (&s, &a) in v {
            for &(y, t, wt) in &self.transitions[s] {
                if y == x {
                    let e = out.entry(t).or_insert(0);
                    *e = e
                        .checked_add(a.checked_mul(i128::from(wt)).expect("path weight overflow"))
                        .expect("path weight overflow");
                }
            }
        }
        out.retain(|_, a| *a != 0);
        out
    }

    fn run(&self, from: usize, word: &[Letter]) -> Vector {
        word.iter()
            .fold(Vector::from([(from, 1)]), |v, &x| self.step(&v, x))
    }

    /// The coefficient of `word` in the shuffle.
    pub fn coefficient(&self, word: &[Letter]) -> u128 {
        let v = self.run(self.initial, word);
        v.get(&self.final_state).map_or(0, |&a| a as u128)
    }

    /// Materialise the character, or `None` if it has more than `limit` words.
    pub fn to_qchar(&self, limit: usize) -> Option<QChar> {
        let mut out = QChar::zero(self.alpha.clone());
        let mut prefix = Word::new();
        let start = Vector::from([(self.initial, 1)]);
        if self.enumerate(&start, &mut prefix, &mut out, limit) {
            Some(out)
        } else {
            None
        }
    }

    fn enumerate(&self, v: &Vector, prefix: &mut Word, out: &mut QChar, limit: usize) -> bool {
        if let Some(&a) = v.get(&self.final_state) {
            let c = i64::try_from(a).expect("coefficient exceeds i64");
            out.add_unchecked(prefix.clone(), &LaurentPoly::constant(c));
            return out.len() <= limit;
        }
        let next: BTreeSet<Letter> = v
            .keys()
            .flat_map(|&s| self.transitions[s].iter().map(|&(x, _, _)| x))
            .collect();
        for x in next {
            prefix.push(x);
            let ok = self.enumerate(&self.step(v, x), prefix, out, limit);
            prefix.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// `ε_i`: the longest run `i^k` ending some word with nonzero coefficient.
    /// All transition weights are positive, so this is the longest `i`-path
    /// into the final state.
    pub fn epsilon(&self, i: Letter) -> usize {
        let mut layer: BTreeSet<usize> = BTreeSet::from([self.final_state]);
        let mut k = 0;
        loop {
            let prev: BTreeSet<usize> = (0..self.num_states())
                .filter(|&s| {
                    self.transitions[s]
                        .iter()
                        .any(|&(x, t, _)| x == i && layer.contains(&t))
                })
                .collect();
            if prev.is_empty() {
                return k;
            }
            layer = prev;
            k += 1;
        }
    }

    /// Operator-level Serre check: for every state `s` and letters `i, j`,
    /// `e_s(M_iM_j − M_jM_i) = 0` when `|i − j| > 1` and
    /// `e_s(2M_iM_jM_i − M_jM_iM_i − M_iM_iM_j) = 0` when `|i − j| = 1`.
    /// This implies the Serre relations for the coefficients in every
    /// context. Returns a description of the first failure.
    pub fn serre_operator_check(&self) -> std::result::Result<(), String> {
        for s in 0..self.num_states() {
            for &i in &self.letters {
                for &j in &self.letters {
                    if i == j {
                        continue;
                    }
                    let ok = if i.abs_diff(j) > 1 {
                        self.run(s, &[i, j]) == self.run(s, &[j, i])
                    } else {
                        let mut lhs = self.run(s, &[i, j, i]);
                        lhs.values_mut().for_each(|a| *a *= 2);
                        let mut rhs = self.run(s, &[j, i, i]);
                        for (t, a) in self.run(s, &[i, i, j]) {
                            *rhs.entry(t).or_insert(0) += a;
                        }
                        rhs.retain(|_, a| *a != 0);
                        lhs == rhs
                    };
                    if !ok {
                        return Err(format!(
                            "state {:?}: relation for letters ({i},{j}) fails",
                            self.describe(s)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable progress of each factor in state `s`.
    fn describe(&self, s: usize) -> Vec<(Word, Vec<u8>)> {
        self.groups
            .iter()
            .zip(&self.offsets)
            .map(|((w, _), &off)| (w.clone(), self.states[s][off..=off + w.len()].to_vec()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn materialized(n: usize, words: &[Word]) -> QChar {
        words.iter().fold(QChar::unit(n), |acc, w| {
            acc.shuffle(&QChar::word(n, w).unwrap(), false)
        })
    }

    #[test]
    fn agrees_with_shuffle_product() {
        let cases: Vec<Vec<Word>> = vec![
            vec![vec![1, 2], vec![1]],
            vec![vec![1, 2], vec![1, 2], vec![2]],
            vec![vec![2, 3], vec![1, 2, 3], vec![3], vec![1]],
            vec![vec![1], vec![1], vec![1]],
            vec![],
        ];
        for words in cases {
            let a = ShuffleAutomaton::new(3, &words).unwrap();
            let m = materialized(3, &words);
            assert_eq!(a.to_qchar(usize::MAX).unwrap(), m, "{words:?}");
            for (w, c) in m.terms() {
                assert_eq!(a.coefficient(w), c.at_one() as u128);
            }
            assert_eq!(a.alpha(), m.alpha());
            for i in 1..=3 {
                if !m.is_zero() {
                    assert_eq!(a.epsilon(i), m.epsilon_i(i).unwrap());
                }
            }
            assert!(a.serre_operator_check().is_ok());
        }
    }

    #[test]
    fn large_shuffle_stays_small() {
        let words = vec![vec![1, 2, 3, 4]; 6];
        let a = ShuffleAutomaton::new(4, &words).unwrap();
        assert_eq!(a.num_states(), 210);
        // the word 1^6 2^6 3^6 4^6 arises in 6!^4 ways
        let w: Word = [1, 2, 3, 4].iter().flat_map(|&x| vec![x; 6]).collect();
        assert_eq!(a.coefficient(&w), 720u128.pow(4));
        assert_eq!(a.epsilon(4), 6);
        assert_eq!(a.epsilon(1), 0);
        assert!(a.to_qchar(1000).is_none());
        assert!(a.serre_operator_check().is_ok());
    }

    #[test]
    fn detects_non_serre_factors() {
        // a lone word (1,3) is not a module character
        let a = ShuffleAutomaton::new(3, &[vec![1, 3]]).unwrap();
        assert!(a.serre_operator_check().is_err());
    }
}
