use super::{signature, Crystal, ExtInt, Signature};
use crate::cartan::Weight;
use crate::tableaux::{Reading, Tableau};

/// `B(λ)` realised on semistandard tableaux with entries in `1..=n+1`, with
/// `ẽ_i`, `f̃_i` computed by the signature rule on a fixed reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableauCrystal {
    pub n: usize,
    pub reading: Reading,
}

impl TableauCrystal {
    pub fn new(n: usize) -> Self {
        TableauCrystal {
            n,
            reading: Reading::MiddleEastern,
        }
    }

    pub fn with_reading(n: usize, reading: Reading) -> Self {
        TableauCrystal { n, reading }
    }

    fn signature(&self, t: &Tableau, i: usize) -> Signature {
        signature(&t.reading(self.reading), i)
    }

    fn apply(&self, t: &Tableau, pos: Option<usize>, value: usize) -> Option<Tableau> {
        let (r, c) = t.reading_positions(self.reading)[pos?];
        let mut out = t.clone();
        out.set_entry(r, c, value);
        debug_assert!(out.is_semistandard(), "{t} ↦ {out} is not semistandard");
        Some(out)
    }
}

impl Crystal for TableauCrystal {
    type Element = Tableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn e(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        if i == 0 || i > self.n {
            return None;
        }
        self.apply(t, self.signature(t, i).e_position(), i)
    }

    fn f(&self, t: &Tableau, i: usize) -> Option<Tableau> {
        if i == 0 || i > self.n {
            return None;
        }
        self.apply(t, self.signature(t, i).f_position(), i + 1)
    }

    fn epsilon(&self, t: &Tableau, i: usize) -> ExtInt {
        (self.signature(t, i).epsilon() as i64).into()
    }

    fn phi(&self, t: &Tableau, i: usize) -> ExtInt {
        (self.signature(t, i).phi() as i64).into()
    }

    fn weight(&self, t: &Tableau) -> Weight {
        t.weight(self.n)
    }
}

fn both_readings(
    t: &Tableau,
    n: usize,
    op: impl Fn(&TableauCrystal, &Tableau) -> Option<Tableau>,
) -> Option<Tableau> {
    let me = op(&TableauCrystal::with_reading(n, Reading::MiddleEastern), t);
    let fe = op(&TableauCrystal::with_reading(n, Reading::FarEastern), t);
    assert_eq!(me, fe, "readings disagree on {t}");
    if let Some(out) = &me {
        assert!(out.validate_ssyt(n), "{out} is not a tableau for rank {n}");
    }
    me
}

/// `ẽ_i T`, computed through both readings; panics if they disagree.
pub fn tableau_e(t: &Tableau, i: usize, n: usize) -> Option<Tableau> {
    both_readings(t, n, |c, t| c.e(t, i))
}

/// `f̃_i T`, computed through both readings; panics if they disagree.
pub fn tableau_f(t: &Tableau, i: usize, n: usize) -> Option<Tableau> {
    both_readings(t, n, |c, t| c.f(t, i))
}
