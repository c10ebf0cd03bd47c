use num_bigint::BigUint;

use super::{Partition, Tableau};
use crate::error::{Error, Result};

/// Largest `|λ|` for which [`count_ssyt`] also enumerates.
const ENUMERATION_MAX_BOXES: usize = 12;
/// Largest formula value for which [`count_ssyt`] also enumerates.
const ENUMERATION_MAX_COUNT: u64 = 2_000_000;

/// Number of semistandard tableaux of shape `λ` with entries in `1..=m`, via
/// the hook-content formula `Π (m + c(x)) / h(x)`.
pub fn count_ssyt_formula(shape: &Partition, m: usize) -> BigUint {
    let shape = shape.normalized();
    let conj = shape.conjugate();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for r in 0..shape.len() {
        for c in 0..shape.part(r + 1) {
            let content = m as i64 + c as i64 - r as i64;
            if content <= 0 {
                return BigUint::from(0u32);
            }
            let hook = (shape.part(r + 1) - c) + (conj.part(c + 1) - r) - 1;
            num *= content as u64;
            den *= hook as u64;
        }
    }
    debug_assert_eq!(&num % &den, BigUint::from(0u32));
    num / den
}

/// The same count by exhaustive row-by-row filling.
pub fn count_ssyt_enumerated(shape: &Partition, m: usize) -> u64 {
    let mut count = 0u64;
    fill(&shape.normalized(), m, &mut |_| count += 1);
    count
}

/// Every semistandard tableau of shape `λ` with entries in `1..=m`, in
/// lexicographic order of the row-major filling.
pub fn all_ssyt(shape: &Partition, m: usize) -> Vec<Tableau> {
    let shape = shape.normalized();
    let mut out = Vec::new();
    fill(&shape, m, &mut |rows| {
        out.push(Tableau::with_shape(shape.clone(), rows.to_vec()).expect("shape matches"))
    });
    out
}

fn fill(shape: &Partition, m: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
    fn rec(
        shape: &Partition,
        m: usize,
        r: usize,
        c: usize,
        rows: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if c == shape.part(r + 1) {
            if r + 1 == shape.len() {
                visit(rows);
                return;
            }
            rows.push(Vec::with_capacity(shape.part(r + 2)));
            rec(shape, m, r + 1, 0, rows, visit);
            rows.pop();
            return;
        }
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        // the column below still needs room for shape'(c) - r - 1 larger entries
        let below = (r + 1..shape.len()).take_while(|&rr| shape.part(rr + 1) > c).count();
        let lo = left.max(above);
        let hi = m.saturating_sub(below);
        for v in lo..=hi {
            rows[r].push(v);
            rec(shape, m, r, c + 1, rows, visit);
            rows[r].pop();
        }
    }
    let mut rows = vec![Vec::with_capacity(shape.part(1))];
    if shape.is_empty() {
        visit(&[]);
        return;
    }
    rec(shape, m, 0, 0, &mut rows, visit);
}

/// Hook-content count, cross-checked against enumeration whenever the shape
/// has at most 12 boxes and the count is small enough to enumerate.
pub fn count_ssyt(shape: &Partition, m: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::domain("maximal entry must be at least 1"));
    }
    let formula = count_ssyt_formula(shape, m);
    let small = u64::try_from(&formula).is_ok_and(|v| v <= ENUMERATION_MAX_COUNT);
    if shape.size() <= ENUMERATION_MAX_BOXES && small {
        let enumerated = count_ssyt_enumerated(shape, m);
        if BigUint::from(enumerated) != formula {
            return Err(Error::OracleMismatch {
                formula: formula.to_string(),
                enumerated: enumerated.to_string(),
            });
        }
    }
    Ok(formula)
}
