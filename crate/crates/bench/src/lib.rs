//! Shared fixtures for the benchmarks.

use octacomb::perm::SignedIter;
use octacomb::SignedPermutation;

/// Every `step`-th element of `B_n` in lexicographic order.
pub fn sample_signed(n: usize, step: usize) -> Vec<SignedPermutation> {
    SignedIter::new(n).step_by(step).collect()
}
