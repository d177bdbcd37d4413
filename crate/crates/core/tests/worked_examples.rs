//! Worked examples with published values.

use std::collections::BTreeMap;

use octacomb::fibers::{fiber, fiber_base, is_left_peak_by_fiber, parabolic_decompose};
use octacomb::perm::fc_signed;
use octacomb::qsym::{Monomial, QSymP};
use octacomb::rsk::{palindromic, rsk_classical};
use octacomb::tableaux::{carre_leclerc, domino_hook_count, enumerate_sdt, two_quotient};
use octacomb::words::{classify, diagonal_factors, diagonal_reduced_expression};
use octacomb::{
    bv_rsk, CoxeterType, CoxeterWord, DescentSet, DominoTableau, Heap, HeapClass, Partition, QPoly, QSymB,
    SignedPermutation,
};

fn w(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn set(v: &[usize]) -> DescentSet {
    v.iter().copied().collect()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn standardization_factorization() {
    assert_eq!(w("[-3,-2,1,4]").compose(&w("[3,1,2,4]")).unwrap(), w("[1,-3,-2,4]"));
    let f = parabolic_decompose(&w("[1,-3,-2,4]"));
    assert_eq!((f.mu, f.pi), (w("[-3,-2,1,4]"), w("[3,1,2,4]")));
}

#[test]
fn signed_descents_for_the_poirier_example() {
    let v = w("[-3,-1,2]");
    assert_eq!(v.rdes(), set(&[1]));
    // Σ_{i1 < i2 ≤ i3} y_{i1} y_{i2} x_{i3} in three variables
    let f = QSymP::fundamental(3, (v.rdes(), v.neg())).unwrap().expand(3).unwrap();
    let mut expected = BTreeMap::new();
    for i1 in 1..=3 {
        for i2 in i1 + 1..=3 {
            for i3 in i2..=3 {
                let mut m = Monomial::one(3);
                m.y[i1] += 1;
                m.y[i2] += 1;
                m.x[i3] += 1;
                *expected.entry(m).or_insert_with(QPoly::zero) += &QPoly::constant(1);
            }
        }
    }
    assert_eq!(f.terms, expected);
}

#[test]
fn chow_fundamentals_in_three_variables() {
    let expand = |j: &[usize]| QSymB::fundamental(3, set(j)).unwrap().expand(3).unwrap().terms;
    let collect = |keep: &dyn Fn(usize, usize, usize) -> bool| {
        let mut out = BTreeMap::new();
        for i in 0..=3 {
            for j in i..=3 {
                for k in j..=3 {
                    if keep(i, j, k) {
                        let mut m = Monomial::one(3);
                        m.x[i] += 1;
                        m.x[j] += 1;
                        m.x[k] += 1;
                        *out.entry(m).or_insert_with(QPoly::zero) += &QPoly::constant(1);
                    }
                }
            }
        }
        out
    };
    assert_eq!(expand(&[1, 2]), collect(&|i, j, k| i < j && j < k));
    assert_eq!(expand(&[0, 2]), collect(&|i, j, k| 1 <= i && i <= j && j < k));
}

#[test]
fn reduced_expressions_and_heaps() {
    let pi = CoxeterWord::new(CoxeterType::B, 5, vec![4, 3, 2]).unwrap();
    assert_eq!(pi.evaluate(), w("[1,5,2,3,4]"));
    let diag = diagonal_reduced_expression(&w("[4,1,5,2,3]")).unwrap();
    let class = diag.commutation_class().unwrap();
    let mut words: Vec<Vec<u8>> = class.iter().map(|c| c.letters().to_vec()).collect();
    words.sort();
    let mut expected =
        vec![vec![3, 2, 1, 4, 3], vec![3, 2, 4, 1, 3], vec![3, 2, 4, 3, 1], vec![3, 4, 2, 3, 1], vec![3, 4, 2, 1, 3]];
    expected.sort();
    assert_eq!(words, expected);
    assert_eq!(Heap::from_letters(&[3, 2, 1, 4, 3]).unwrap().linear_extensions().unwrap(), 5);
    assert_eq!(diagonal_factors(&w("[1,5,2,3,4]")).unwrap(), vec![vec![4, 3, 2]]);
    assert_eq!(diagonal_factors(&w("[2,4,5,1,3]")).unwrap(), vec![vec![1], vec![3, 2], vec![4, 3]]);
}

#[test]
fn alternating_and_left_peak_counts_in_b3() {
    let fc = fc_signed(3);
    let alt = fc.iter().filter(|v| classify(v).unwrap() == HeapClass::Alternating).count();
    assert_eq!((alt, fc.len() - alt), (20, 4));
}

#[test]
fn fibers_of_the_two_examples() {
    assert_eq!(fiber_base(&w("[1,5,2,3,4]")).unwrap().len(), 16);
    let pi = w("[2,4,5,1,3]");
    assert_eq!(fiber_base(&pi).unwrap().len(), 4);
    assert!(fiber(&pi).unwrap().contains(&w("[1,4,5,-3,2]")));
    assert!(is_left_peak_by_fiber(&w("[1,4,5,-2,3]")).unwrap());
    assert!(!is_left_peak_by_fiber(&w("[2,4,5,-1,3]")).unwrap());
}

#[test]
fn domino_tableaux_of_shape_442() {
    let t = DominoTableau::from_rows(vec![vec![1, 1, 3, 3], vec![2, 4, 5, 5], vec![2, 4]]).unwrap();
    let p = DominoTableau::from_rows(vec![vec![1, 2, 2, 5], vec![1, 3, 3, 5], vec![4, 4]]).unwrap();
    assert_eq!((t.des(), t.des_b()), (set(&[1, 3]), set(&[1, 3])));
    assert_eq!((p.des(), p.des_b()), (set(&[2, 3]), set(&[0, 2, 3])));
    let all = enumerate_sdt(&part(&[4, 4, 2])).unwrap();
    assert!(all.contains(&t) && all.contains(&p));
}

#[test]
fn domino_to_bitableau() {
    let t = DominoTableau::from_rows(vec![vec![1, 2, 4, 4], vec![1, 2], vec![3, 3]]).unwrap();
    let b = carre_leclerc(&t).unwrap();
    assert_eq!(b.minus.rows(), &[vec![1]]);
    assert_eq!(b.plus.rows(), &[vec![2, 4], vec![3]]);
}

#[test]
fn domino_hook_counts() {
    assert_eq!(domino_hook_count(&part(&[4, 2])).unwrap(), 3);
    assert_eq!(domino_hook_count(&part(&[4, 3, 1])).unwrap(), 2);
    for n in 1..=6usize {
        let squares: u128 = (0..=n).map(|k| domino_hook_count(&part(&[2 * n - k, k])).unwrap().pow(2)).sum();
        assert_eq!(squares, octacomb::binomial(2 * n as u64, n as u64), "n={n}");
    }
    let total: u128 = [part(&[4]), part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1])]
        .iter()
        .map(|l| domino_hook_count(l).unwrap().pow(2))
        .sum();
    assert_eq!(total, 7);
}

#[test]
fn two_quotients_of_admissible_shapes() {
    for n in 2..=6usize {
        for k in 1..=n / 2 {
            let (minus, plus) = two_quotient(&part(&[2 * n - 2 * k, 2 * k - 1, 1])).unwrap();
            assert_eq!((minus, plus), (Partition::empty(), part(&[n - k, k])));
        }
    }
}

#[test]
fn domino_insertion_example() {
    let v = w("[-3,1,2]");
    assert_eq!(palindromic(&v), vec![-2, -1, 3, -3, 1, 2]);
    let labels = [-3, -2, -1, 1, 2, 3];
    let (p0, q0) = rsk_classical(&palindromic(&v), &labels).unwrap();
    assert_eq!(p0, vec![vec![-3, -1, 1, 2], vec![-2, 3]]);
    assert_eq!(q0, vec![vec![-3, -2, -1, 3], vec![1, 2]]);
    let r = bv_rsk(&v);
    assert_eq!(r.p.rows(), vec![vec![1, 1, 2, 2], vec![3, 3]]);
    assert_eq!(r.q.rows(), vec![vec![1, 2, 3, 3], vec![1, 2]]);
}
