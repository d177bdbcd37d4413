//! Exact combinatorics of fully commutative elements in the hyperoctahedral
//! group `B_n`.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`] : signed permutations in window notation and their statistics,
//! * [`words`] : Coxeter words, commutation classes and heaps,
//! * [`fibers`] : the parabolic factorization `w = μ·π` and the fibers of `FC(B_n)`,
//! * [`tableaux`] : Young, bi- and domino tableaux, 2-quotients, Carré–Leclerc,
//! * [`rsk`] : the Barbash–Vogan domino insertion,
//! * [`qsym`] : Gessel, Chow and Poirier quasi-symmetric functions,
//! * [`verify`] : a harness that certifies identities by exhaustive enumeration.

pub mod error;
pub mod fibers;
pub mod linalg;
pub mod perm;
pub mod qsym;
pub mod rsk;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use perm::{DescentSet, SignedPermutation};
pub use qsym::{QPoly, QSymA, QSymB, QSymP};
pub use rsk::{bv_rsk, BvRsk};
pub use tableaux::{BiTableau, DominoTableau, Partition, StandardTableau, Tableau};
pub use verify::{Check, CheckOptions, Status, VerificationReport};
pub use words::{CoxeterType, CoxeterWord, Heap, HeapClass};

/// Binomial coefficient, exact in `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Catalan number `C_n`.
pub fn catalan(n: u64) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Closed form for `|FC(B_n)|`: `(n+2)/(n+1)·C(2n,n) − 1`.
pub fn fc_b_count(n: u64) -> u128 {
    binomial(2 * n, n) * (n as u128 + 2) / (n as u128 + 1) - 1
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}
