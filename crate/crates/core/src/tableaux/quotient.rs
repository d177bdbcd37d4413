//! Littlewood 2-quotients via beta-numbers on a two-runner abacus.

use super::Partition;
use crate::error::{Error, Result};

/// Beta-numbers `λ_i + L - i` for an even number `L ≥ len(λ)` of beads.
fn beta_numbers(lambda: &Partition) -> (usize, Vec<usize>) {
    let len = lambda.len() + lambda.len() % 2;
    let beta = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    (len, beta)
}

/// Reads a partition off bead positions `q` on one runner holding `m` beads.
fn runner_partition(mut q: Vec<usize>, m: usize) -> Partition {
    q.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(q.iter().enumerate().map(|(k, &p)| p - (m - 1 - k)).collect())
        .expect("bead positions give a partition")
}

pub fn two_core_is_empty(lambda: &Partition) -> bool {
    let (len, beta) = beta_numbers(lambda);
    beta.iter().filter(|&&b| b % 2 == 0).count() * 2 == len
}

/// `ψ(λ) = (λ^-, λ^+)`: beads on the even runner give `λ^-`, beads on the
/// odd runner give `λ^+`.
pub fn two_quotient(lambda: &Partition) -> Result<(Partition, Partition)> {
    if !two_core_is_empty(lambda) {
        return Err(Error::NonEmptyTwoCore(lambda.to_string()));
    }
    let (len, beta) = beta_numbers(lambda);
    let m = len / 2;
    let even = beta.iter().filter(|&&b| b % 2 == 0).map(|b| b / 2).collect();
    let odd = beta.iter().filter(|&&b| b % 2 == 1).map(|b| b / 2).collect();
    Ok((runner_partition(even, m), runner_partition(odd, m)))
}

/// `ψ^{-1}`: the partition with empty 2-core and the given 2-quotient.
pub fn from_two_quotient(minus: &Partition, plus: &Partition) -> Partition {
    let m = minus.len().max(plus.len());
    let len = 2 * m;
    let mut beta: Vec<usize> = (0..m)
        .map(|k| 2 * (minus.part(k) + m - 1 - k))
        .chain((0..m).map(|k| 2 * (plus.part(k) + m - 1 - k) + 1))
        .collect();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect())
        .expect("distinct beta-numbers give a partition")
}

/// Partitions of `2n` with empty 2-core.
pub fn domino_shapes(n: usize) -> Vec<Partition> {
    Partition::all(2 * n).into_iter().filter(two_core_is_empty).collect()
}

/// `(2n-k, k)` for `0 ≤ k ≤ n`, then `(2n-2k, 2k-1, 1)` for `1 ≤ k ≤ ⌊n/2⌋`.
pub fn admissible_shapes(n: usize) -> Vec<Partition> {
    let two_rows = (0..=n).map(|k| Partition::new(vec![2 * n - k, k]).unwrap());
    let hooks = (1..=n / 2).map(|k| Partition::new(vec![2 * n - 2 * k, 2 * k - 1, 1]).unwrap());
    two_rows.chain(hooks).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let e = Partition::empty();
        assert_eq!(two_quotient(&part(&[2])).unwrap(), (e.clone(), part(&[1])));
        assert_eq!(two_quotient(&part(&[1, 1])).unwrap(), (part(&[1]), e.clone()));
        assert_eq!(two_quotient(&part(&[2, 2])).unwrap(), (part(&[1]), part(&[1])));
        assert_eq!(two_quotient(&part(&[3, 1])).unwrap(), (part(&[2]), e.clone()));
        assert_eq!(two_quotient(&part(&[4, 2, 2])).unwrap(), (part(&[1]), part(&[2, 1])));
        assert!(two_quotient(&part(&[2, 1])).is_err());
        for n in 1..=6usize {
            for k in 1..=n / 2 {
                let lam = part(&[2 * n - 2 * k, 2 * k - 1, 1]);
                assert_eq!(two_quotient(&lam).unwrap(), (e.clone(), part(&[n - k, k])));
            }
            for k in (0..=n).step_by(2) {
                let lam = part(&[2 * n - k, k]);
                assert_eq!(two_quotient(&lam).unwrap(), (part(&[k / 2]), part(&[n - k / 2])));
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        for n in 0..=6 {
            for lam in domino_shapes(n) {
                let (a, b) = two_quotient(&lam).unwrap();
                assert_eq!(a.size() + b.size(), n);
                assert_eq!(from_two_quotient(&a, &b), lam);
            }
        }
        // the number of bipartitions of n equals the number of domino shapes of 2n
        let bipartitions =
            |n: usize| (0..=n).map(|k| Partition::all(k).len() * Partition::all(n - k).len()).sum::<usize>();
        for n in 0..=6 {
            assert_eq!(domino_shapes(n).len(), bipartitions(n));
        }
    }

    #[test]
    fn admissible_examples() {
        let got: Vec<String> = admissible_shapes(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["(4)", "(3,1)", "(2,2)", "(2,1,1)"]);
        for n in 1..=6 {
            assert!(admissible_shapes(n).iter().all(two_core_is_empty));
        }
    }
}
