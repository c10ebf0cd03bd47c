//! The signature rule: `ẽ_i`, `f̃_i` on a word of boxes read as a tensor
//! product `b_1 ⊗ ⋯ ⊗ b_N`.

/// One letter of an `i`-signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The reduced `i`-signature of a word: positions of the uncancelled `−`s and
/// `+`s, each in increasing order. Every surviving `−` lies left of every
/// surviving `+`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
}

impl Signature {
    /// `ε_i` of the word.
    pub fn epsilon(&self) -> usize {
        self.minus.len()
    }

    /// `φ_i` of the word.
    pub fn phi(&self) -> usize {
        self.plus.len()
    }

    /// Position where `ẽ_i` acts: the rightmost surviving `−`.
    pub fn e_position(&self) -> Option<usize> {
        self.minus.last().copied()
    }

    /// Position where `f̃_i` acts: the leftmost surviving `+`.
    pub fn f_position(&self) -> Option<usize> {
        self.plus.first().copied()
    }
}

/// Reduce a sequence of signs by cancelling adjacent `+ −` pairs.
pub fn reduce_signs(signs: impl IntoIterator<Item = (usize, Sign)>) -> Signature {
    let mut sig = Signature::default();
    for (pos, s) in signs {
        match s {
            Sign::Plus => sig.plus.push(pos),
            Sign::Minus => {
                if sig.plus.pop().is_none() {
                    sig.minus.push(pos);
                }
            }
        }
    }
    sig
}

/// The reduced `i`-signature of a word of boxes: `i` contributes `+`,
/// `i + 1` contributes `−`.
pub fn signature(word: &[usize], i: usize) -> Signature {
    reduce_signs(word.iter().enumerate().filter_map(|(pos, &b)| {
        if b == i {
            Some((pos, Sign::Plus))
        } else if b == i + 1 {
            Some((pos, Sign::Minus))
        } else {
            None
        }
    }))
}

/// `ẽ_i` on `b_1 ⊗ ⋯ ⊗ b_N`.
pub fn tensor_e(word: &[usize], i: usize) -> Option<Vec<usize>> {
    let pos = signature(word, i).e_position()?;
    let mut out = word.to_vec();
    out[pos] = i;
    Some(out)
}

/// `f̃_i` on `b_1 ⊗ ⋯ ⊗ b_N`.
pub fn tensor_f(word: &[usize], i: usize) -> Option<Vec<usize>> {
    let pos = signature(word, i).f_position()?;
    let mut out = word.to_vec();
    out[pos] = i + 1;
    Some(out)
}
