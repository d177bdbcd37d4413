//! The factorization `w = μ·π` over the parabolic subgroup `S_n ⊂ B_n`, and
//! the decomposition of `FC(B_n)` into fibers over `FC(S_n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{fc_unsigned, SignedPermutation};
use crate::words::{diagonal_factors, format_factors};

/// `δ_i = s_{i-1}⋯s_1s_0`, with window `[-i,1,…,î,…,n]`.
pub fn delta(i: usize, n: usize) -> Result<SignedPermutation> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let window = std::iter::once(-(i as i32)).chain((1..=n as i32).filter(|&v| v != i as i32)).collect();
    SignedPermutation::new(window)
}

/// The letters of `δ_i`.
pub fn delta_word(i: usize) -> Vec<u8> {
    (0..i as u8).rev().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicFactorization {
    /// Minimal coset representative: the ascending reordering of `w`.
    pub mu: SignedPermutation,
    /// The standardization of `w`.
    pub pi: SignedPermutation,
}

impl ParabolicFactorization {
    /// Indices `i` with a factor `δ_i` in `μ = δ_{i_1}⋯δ_{i_k}`, ascending;
    /// these are the absolute values of the negative letters of `μ`.
    pub fn delta_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> =
            self.mu.window().iter().filter(|&&v| v < 0).map(|v| v.unsigned_abs() as usize).collect();
        idx.sort_unstable();
        idx
    }
}

pub fn parabolic_decompose(w: &SignedPermutation) -> ParabolicFactorization {
    let mut sorted = w.window().to_vec();
    sorted.sort_unstable();
    let pi = w.window().iter().map(|&v| 1 + w.window().iter().filter(|&&u| u < v).count() as i32).collect();
    ParabolicFactorization {
        mu: SignedPermutation::new(sorted).expect("reordering keeps a valid window"),
        pi: SignedPermutation::new(pi).expect("ranks form a permutation"),
    }
}

/// `δ_{i_1}·δ_{i_2}⋯δ_{i_k}` for ascending indices.
pub fn delta_product(indices: &[usize], n: usize) -> Result<SignedPermutation> {
    let mut mu = SignedPermutation::identity(n);
    for &i in indices {
        mu = mu.compose(&delta(i, n)?)?;
    }
    Ok(mu)
}

fn require_fc_unsigned(pi: &SignedPermutation) -> Result<usize> {
    pi.first_valley()
}

/// The index sets `{i_1 < … < i_k}` of the fiber base `B_n(π)`.
pub fn fiber_base_indices(pi: &SignedPermutation) -> Result<Vec<Vec<usize>>> {
    let v = require_fc_unsigned(pi)?;
    if pi.inverse().des_a().contains(1) {
        Ok(std::iter::once(Vec::new()).chain((1..=v).map(|i| vec![i])).collect())
    } else {
        Ok((0u32..1 << v).map(|mask| (1..=v).filter(|&i| mask & (1 << (i - 1)) != 0).collect()).collect())
    }
}

pub fn fiber_base(pi: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    fiber_base_indices(pi)?.iter().map(|s| delta_product(s, pi.rank())).collect()
}

/// `B_n(π)·π`, sorted by window.
pub fn fiber(pi: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    let mut out = fiber_base(pi)?.iter().map(|mu| mu.compose(pi)).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRow {
    pub window: SignedPermutation,
    /// Reduced word of `μ` as a product of `δ`'s.
    pub mu_word: Vec<u8>,
    /// Diagonal factors of `π`.
    pub pi_factors: Vec<Vec<u8>>,
}

impl FiberRow {
    /// `s0s1s0·(s4s3s2)`, or just the `π` part when `μ = e`.
    pub fn expression(&self) -> String {
        let pi = format_factors(&self.pi_factors);
        if self.mu_word.is_empty() {
            pi
        } else {
            let mu: String = self.mu_word.iter().map(|a| format!("s{a}")).collect();
            format!("{mu}·{pi}")
        }
    }
}

/// The fiber of `π` as a table, ordered by the number of `δ` factors and
/// then lexicographically by index set.
pub fn fiber_table(pi: &SignedPermutation) -> Result<Vec<FiberRow>> {
    let pi_factors = diagonal_factors(pi)?;
    let mut sets = fiber_base_indices(pi)?;
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.into_iter()
        .map(|s| {
            let mu = delta_product(&s, pi.rank())?;
            Ok(FiberRow {
                window: mu.compose(pi)?,
                mu_word: s.iter().flat_map(|&i| delta_word(i)).collect(),
                pi_factors: pi_factors.clone(),
            })
        })
        .collect()
}

/// Fiber-side criterion: `π(1) = 2` and `μ = δ_i` with `2 ≤ i ≤ v(π)`.
pub fn is_left_peak_by_fiber(w: &SignedPermutation) -> Result<bool> {
    if !w.is_fc() {
        return Err(Error::NotFullyCommutative(w.to_string()));
    }
    let f = parabolic_decompose(w);
    let v = f.pi.first_valley()?;
    let idx = f.delta_indices();
    Ok(f.pi.window()[0] == 2 && idx.len() == 1 && (2..=v).contains(&idx[0]))
}

/// All fibers of `FC(B_n)`, keyed by `π` in lexicographic order.
pub fn all_fibers(n: usize) -> Vec<(SignedPermutation, Vec<SignedPermutation>)> {
    fc_unsigned(n)
        .into_iter()
        .map(|pi| {
            let f = fiber(&pi).expect("321-avoiding permutations are FC");
            (pi, f)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_signed, fc_signed};
    use crate::words::{classify, CoxeterType, CoxeterWord, HeapClass};

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(1, 4).unwrap(), p("[-1,2,3,4]"));
        assert_eq!(delta(4, 5).unwrap(), p("[-4,1,2,3,5]"));
        assert!(delta(0, 3).is_err() && delta(4, 3).is_err());
        for n in 1..=5 {
            for i in 1..=n {
                let w = CoxeterWord::new(CoxeterType::B, n, delta_word(i)).unwrap();
                assert_eq!(w.evaluate(), delta(i, n).unwrap());
            }
        }
    }

    #[test]
    fn delta_products_cover_quotient() {
        let n = 4;
        for mask in 0u32..16 {
            let s: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
            let mu = delta_product(&s, n).unwrap();
            let mut expect: Vec<i32> = (1..=n as i32).map(|v| if s.contains(&(v as usize)) { -v } else { v }).collect();
            expect.sort_unstable();
            assert_eq!(mu.window(), &expect[..]);
            assert_eq!(mu.length(), s.iter().sum::<usize>());
        }
    }

    #[test]
    fn decompose_examples() {
        let e = SignedPermutation::identity(4);
        assert_eq!(parabolic_decompose(&e), ParabolicFactorization { mu: e.clone(), pi: e });
        let f = parabolic_decompose(&p("[1,-3,-2,4]"));
        assert_eq!((f.mu, f.pi), (p("[-3,-2,1,4]"), p("[3,1,2,4]")));
    }

    #[test]
    fn decomposition_invariants_b4() {
        for w in all_signed(4) {
            let f = parabolic_decompose(&w);
            assert_eq!(f.mu.compose(&f.pi).unwrap(), w);
            assert_eq!(w.length(), f.mu.length() + f.pi.length());
            assert!(f.mu.des_a().is_empty() && f.pi.is_unsigned());
            // μ⁻¹ is a shuffle of [-k..-1] with [k+1..n]
            let inv = f.mu.inverse();
            let neg: Vec<i32> = inv.window().iter().copied().filter(|&v| v < 0).collect();
            let pos: Vec<i32> = inv.window().iter().copied().filter(|&v| v > 0).collect();
            let k = neg.len() as i32;
            assert_eq!(neg, (-k..0).collect::<Vec<_>>());
            assert_eq!(pos, (k + 1..=4).collect::<Vec<_>>());
        }
    }

    #[test]
    fn left_multiplication_by_quotient_preserves_des() {
        for n in 1..=5 {
            let quotient = fiber_base(&SignedPermutation::identity(n)).unwrap();
            for pi in crate::perm::all_unsigned(n) {
                for mu in &quotient {
                    assert_eq!(mu.compose(&pi).unwrap().des_a(), pi.des_a());
                }
            }
        }
    }

    #[test]
    fn fiber_sizes() {
        assert_eq!(fiber_base(&p("[1,5,2,3,4]")).unwrap().len(), 16);
        assert_eq!(fiber_base(&p("[2,4,5,1,3]")).unwrap().len(), 4);
        assert_eq!(fiber_base(&SignedPermutation::identity(4)).unwrap().len(), 16);
        assert!(fiber(&p("[3,2,1]")).is_err());
        let f = fiber(&p("[2,4,5,1,3]")).unwrap();
        assert!(f.contains(&p("[1,4,5,-3,2]")));
        for w in fiber(&SignedPermutation::identity(4)).unwrap() {
            assert!(w.des_a().is_empty() && w.is_fc());
        }
    }

    #[test]
    fn fibers_partition_fc() {
        for n in 1..=6 {
            let mut union: Vec<_> = all_fibers(n).into_iter().flat_map(|(_, f)| f).collect();
            let total = union.len();
            union.sort();
            union.dedup();
            assert_eq!(union.len(), total, "fibers overlap at n={n}");
            assert_eq!(union, fc_signed(n), "n={n}");
        }
    }

    #[test]
    fn four_row_table() {
        let rows = fiber_table(&p("[2,4,5,1,3]")).unwrap();
        let got: Vec<(String, String)> = rows.iter().map(|r| (r.window.to_string(), r.expression())).collect();
        let expect = [
            ("[2,4,5,1,3]", "(s1)(s3s2)(s4s3)"),
            ("[2,4,5,-1,3]", "s0·(s1)(s3s2)(s4s3)"),
            ("[1,4,5,-2,3]", "s1s0·(s1)(s3s2)(s4s3)"),
            ("[1,4,5,-3,2]", "s2s1s0·(s1)(s3s2)(s4s3)"),
        ];
        assert_eq!(got, expect.map(|(a, b)| (a.to_string(), b.to_string())));
    }

    #[test]
    fn left_peak_criteria_agree() {
        assert!(is_left_peak_by_fiber(&p("[1,4,5,-2,3]")).unwrap());
        assert!(!is_left_peak_by_fiber(&p("[2,4,5,-1,3]")).unwrap());
        for w in fc_signed(4) {
            let by_heap = classify(&w).unwrap() == HeapClass::LeftPeak;
            assert_eq!(is_left_peak_by_fiber(&w).unwrap(), by_heap, "{w}");
            // one-line shape of left peaks
            let one_line = w.window()[0] == 1 && w.window()[1..].iter().filter(|&&v| v < -1).count() == 1;
            assert_eq!(one_line, by_heap, "{w}");
        }
    }
}
