use num_rational::Ratio;
use proptest::prelude::*;

use octacomb::linalg::{rank, solve_unique};
use octacomb::rsk::bv_rsk;
use octacomb::tableaux::{from_two_quotient, two_quotient};
use octacomb::{CoxeterType, CoxeterWord, DescentSet, Partition, QPoly, QSymB, SignedPermutation};

fn same_rank(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let perm = Just((1..=n as i32).collect::<Vec<i32>>()).prop_shuffle();
    (perm, prop::collection::vec(any::<bool>(), n)).prop_map(|(perm, signs)| {
        SignedPermutation::new(perm.iter().zip(signs).map(|(&v, neg)| if neg { -v } else { v }).collect()).unwrap()
    })
}

fn signed(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n).prop_flat_map(same_rank)
}

fn signed_pair(max_n: usize) -> impl Strategy<Value = (SignedPermutation, SignedPermutation)> {
    (1..=max_n).prop_flat_map(|n| (same_rank(n), same_rank(n)))
}

fn signed_triple(max_n: usize) -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
    (1..=max_n).prop_flat_map(|n| (same_rank(n), same_rank(n), same_rank(n)))
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-20i64..20, 0..5).prop_map(QPoly::new)
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=max, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn group_laws((u, v, w) in signed_triple(7)) {
        let e = SignedPermutation::identity(u.rank());
        prop_assert_eq!(u.compose(&v).unwrap().compose(&w).unwrap(), u.compose(&v.compose(&w).unwrap()).unwrap());
        prop_assert_eq!(u.compose(&u.inverse()).unwrap(), e.clone());
        prop_assert_eq!(u.compose(&e).unwrap(), u.clone());
        prop_assert_eq!(u.inverse().inverse(), u);
    }

    #[test]
    fn composition_is_functional((u, v) in signed_pair(7), i in 1i32..=7) {
        let i = i.min(v.rank() as i32);
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.apply(i), u.apply(v.apply(i)));
        prop_assert_eq!(uv.apply(-i), -uv.apply(i));
    }

    #[test]
    fn length_is_inverse_invariant_and_steps_by_one(w in signed(8)) {
        prop_assert_eq!(w.length(), w.inverse().length());
        let des = w.des_b();
        for i in 0..w.rank() {
            let mut v = w.clone();
            v.mul_generator_right(i);
            let expected = if des.contains(i) { w.length() - 1 } else { w.length() + 1 };
            prop_assert_eq!(v.length(), expected);
        }
    }

    #[test]
    fn reduced_words_evaluate_back(w in signed(8)) {
        let word = CoxeterWord::reduced_word_of(&w, CoxeterType::B).unwrap();
        prop_assert_eq!(word.len(), w.length());
        prop_assert!(word.is_reduced());
        prop_assert_eq!(word.evaluate(), w);
    }

    #[test]
    fn window_text_roundtrips(w in signed(9)) {
        let parsed: SignedPermutation = w.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &w);
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<SignedPermutation>(&json).unwrap(), w);
    }

    #[test]
    fn descent_sets_serialize_as_sorted_lists(bits in 0u32..1 << 12) {
        let s = DescentSet::from_bits(bits);
        let json = serde_json::to_value(s).unwrap();
        prop_assert_eq!(json.clone(), serde_json::json!(s.to_vec()));
        prop_assert_eq!(serde_json::from_value::<DescentSet>(json).unwrap(), s);
    }

    #[test]
    fn qpoly_ring_laws(a in qpoly(), b in qpoly(), c in qpoly(), q in -3i64..=3) {
        prop_assert_eq!(&(a.clone() + b.clone()) * &c, (&a * &c) + (&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval(q), a.eval(q) * b.eval(q));
        prop_assert_eq!((a.clone() + b.clone()).eval(q), a.eval(q) + b.eval(q));
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QPoly>(&json).unwrap(), a);
    }

    #[test]
    fn solve_recovers_planted_solution(
        cols in prop::collection::vec(prop::collection::vec(-5i128..=5, 6), 1..=4),
        x in prop::collection::vec(-9i128..=9, 4),
    ) {
        let k = cols.len();
        let a: Vec<Vec<i128>> = (0..6).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        let b: Vec<i128> = (0..6).map(|r| (0..k).map(|j| a[r][j] * x[j]).sum()).collect();
        match solve_unique(&a, &b) {
            Ok(Some(sol)) => {
                prop_assert_eq!(rank(&a).unwrap(), k);
                let planted: Vec<Ratio<i128>> = x[..k].iter().map(|&v| Ratio::from_integer(v)).collect();
                prop_assert_eq!(sol, planted);
            }
            Ok(None) => prop_assert!(false, "planted system reported inconsistent"),
            Err(_) => prop_assert!(rank(&a).unwrap() < k),
        }
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(8)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn two_quotient_roundtrips(minus in partition(5), plus in partition(5)) {
        let lam = from_two_quotient(&minus, &plus);
        prop_assert_eq!(lam.size(), 2 * (minus.size() + plus.size()));
        prop_assert_eq!(two_quotient(&lam).unwrap(), (minus, plus));
    }

    #[test]
    fn domino_insertion_is_symmetric(w in signed(7)) {
        let r = bv_rsk(&w);
        let ri = bv_rsk(&w.inverse());
        prop_assert_eq!(r.p.shape(), r.q.shape());
        prop_assert_eq!(r.shape().size(), 2 * w.rank());
        prop_assert_eq!(&ri.p, &r.q);
        prop_assert_eq!(&ri.q, &r.p);
        prop_assert_eq!(r.q.des_b(), w.des_b());
    }

    #[test]
    fn chow_json_roundtrips(n in 1usize..=5, terms in prop::collection::vec((0u32..32, qpoly()), 0..6)) {
        let mut f = QSymB::zero(n);
        for (bits, c) in terms {
            f.add_term(DescentSet::from_bits(bits & ((1 << n) - 1)), &c).unwrap();
        }
        prop_assert_eq!(QSymB::from_json(&f.to_json()).unwrap(), f);
    }
}
