//! Exact solution of integer linear systems by fraction-free (Bareiss)
//! elimination. Rationals only appear during back-substitution.

use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Row echelon form of `m` by fraction-free elimination, in place.
/// Returns the pivot columns.
pub fn bareiss_echelon(m: &mut [Vec<i128>]) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = sub(mul(m[r][c], m[i][j])?, mul(m[i][c], m[r][j])?)?;
                debug_assert_eq!(num % prev, 0, "fraction-free step must divide exactly");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(a: &[Vec<i128>]) -> Result<usize> {
    let mut m = a.to_vec();
    Ok(bareiss_echelon(&mut m)?.len())
}

/// Solves `A x = b` where the columns of `A` must be linearly independent.
/// Returns `None` when the system is inconsistent.
pub fn solve_unique(a: &[Vec<i128>], b: &[i128]) -> Result<Option<Vec<Ratio<i128>>>> {
    assert_eq!(a.len(), b.len(), "one right-hand side per equation");
    let k = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> =
        a.iter().zip(b).map(|(row, &rhs)| row.iter().copied().chain(std::iter::once(rhs)).collect()).collect();
    if m.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let pivots = bareiss_echelon(&mut m)?;
    if pivots.contains(&k) {
        return Ok(None);
    }
    if pivots.len() < k {
        return Err(Error::DependentBasis { rank: pivots.len(), len: k });
    }
    // pivots are exactly 0..k, one per row
    let mut x = vec![Ratio::<i128>::zero(); k];
    for r in (0..k).rev() {
        let mut acc = Ratio::from_integer(m[r][k]);
        for j in r + 1..k {
            let t = Ratio::from_integer(m[r][j]).checked_mul(&x[j]).ok_or(Error::Overflow)?;
            acc = acc.checked_sub(&t).ok_or(Error::Overflow)?;
        }
        x[r] = acc.checked_div(&Ratio::from_integer(m[r][r])).ok_or(Error::Overflow)?;
    }
    Ok(Some(x))
}
