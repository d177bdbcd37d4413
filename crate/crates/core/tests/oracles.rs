//! Independent oracles: everything here is recomputed from definitions
//! without going through the library's fast paths.

use std::collections::{BTreeMap, HashMap, VecDeque};

use octacomb::perm::{all_signed, fc_signed};
use octacomb::qsym::{Monomial, QSymB};
use octacomb::rsk::{bv_rsk, shape_of};
use octacomb::tableaux::{domino_hook_count, enumerate_sdt, enumerate_syt};
use octacomb::{DescentSet, Partition, QPoly, SignedPermutation};

/// Coxeter length of every element of `B_n` by breadth-first search on the
/// right Cayley graph.
fn bfs_lengths(n: usize) -> HashMap<SignedPermutation, usize> {
    let mut dist = HashMap::new();
    let e = SignedPermutation::identity(n);
    dist.insert(e.clone(), 0);
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 0..n {
            let mut v = w.clone();
            v.mul_generator_right(i);
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn gen(i: usize, n: usize) -> SignedPermutation {
    SignedPermutation::generator(i, n).unwrap()
}

fn m(a: usize, b: usize) -> usize {
    match a.abs_diff(b) {
        0 => 1,
        1 if a.min(b) == 0 => 4,
        1 => 3,
        _ => 2,
    }
}

/// `w` is fully commutative iff no reduced word of `w` contains a braid
/// factor, i.e. no suffix `x` of `w` in left weak order has two
/// non-commuting left descents.
fn fc_by_weak_order(w: &SignedPermutation, len: &HashMap<SignedPermutation, usize>) -> bool {
    let n = w.rank();
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![w.clone()];
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        let lx = len[&x];
        let left: Vec<usize> = (0..n).filter(|&i| len[&gen(i, n).compose(&x).unwrap()] < lx).collect();
        for (k, &a) in left.iter().enumerate() {
            if left[k + 1..].iter().any(|&b| m(a, b) >= 3) {
                return false;
            }
        }
        stack.extend(left.iter().map(|&a| gen(a, n).compose(&x).unwrap()));
    }
    true
}

#[test]
fn length_and_descents_match_bfs() {
    for n in 1..=5 {
        let len = bfs_lengths(n);
        assert_eq!(len.len(), (1..=n).product::<usize>() << n);
        for (w, &l) in &len {
            assert_eq!(w.length(), l, "{w}");
            let right: DescentSet = (0..n)
                .filter(|&i| {
                    let mut v = w.clone();
                    v.mul_generator_right(i);
                    len[&v] < l
                })
                .collect();
            assert_eq!(w.des_b(), right, "{w}");
            let left: DescentSet = (0..n).filter(|&i| len[&gen(i, n).compose(w).unwrap()] < l).collect();
            assert_eq!(w.left_descents_by_length(), left, "{w}");
        }
    }
}

#[test]
fn full_commutativity_matches_weak_order_oracle() {
    for n in 1..=5 {
        let len = bfs_lengths(n);
        let mut count = 0;
        for w in len.keys() {
            let fc = fc_by_weak_order(w, &len);
            assert_eq!(w.is_fc(), fc, "{w}");
            count += usize::from(fc);
        }
        assert_eq!(count, fc_signed(n).len());
        // (n+2)·C_n − 1
        let catalan = (0..n).fold(1u64, |c, k| c * 2 * (2 * k as u64 + 1) / (k as u64 + 2));
        assert_eq!(count as u64, (n as u64 + 2) * catalan - 1);
    }
}

fn lis(word: &[i32]) -> usize {
    let mut best = vec![1; word.len()];
    for j in 0..word.len() {
        for i in 0..j {
            if word[i] < word[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `2n`-letter word `w_{-n} … w_{-1} w_1 … w_n`.
fn centrally_symmetric(w: &SignedPermutation) -> Vec<i32> {
    let win = w.window();
    win.iter().rev().map(|v| -v).chain(win.iter().copied()).collect()
}

#[test]
fn insertion_shape_has_greene_first_row_and_column() {
    for n in 1..=4 {
        for w in all_signed(n) {
            let word = centrally_symmetric(&w);
            let shape = shape_of(&w);
            assert_eq!(shape.part(0), lis(&word), "{w}");
            let rev: Vec<i32> = word.iter().rev().copied().collect();
            assert_eq!(shape.conjugate().part(0), lis(&rev), "{w}");
            assert_eq!(bv_rsk(&w).shape(), &shape, "{w}");
        }
    }
}

fn corners(p: &[usize]) -> Vec<usize> {
    (0..p.len()).filter(|&r| p[r] > 0 && (r + 1 == p.len() || p[r + 1] < p[r])).collect()
}

/// Standard Young tableaux counted by peeling corners.
fn count_syt(p: &mut Vec<usize>, memo: &mut BTreeMap<Vec<usize>, u128>) -> u128 {
    if p.iter().all(|&x| x == 0) {
        return 1;
    }
    if let Some(&c) = memo.get(p) {
        return c;
    }
    let mut total = 0;
    for r in corners(p) {
        p[r] -= 1;
        total += count_syt(p, memo);
        p[r] += 1;
    }
    memo.insert(p.clone(), total);
    total
}

/// Standard domino tableaux counted by peeling removable dominoes.
fn count_sdt(p: &mut Vec<usize>, memo: &mut BTreeMap<Vec<usize>, u128>) -> u128 {
    while p.last() == Some(&0) {
        p.pop();
    }
    if p.is_empty() {
        return 1;
    }
    if let Some(&c) = memo.get(p) {
        return c;
    }
    let mut total = 0;
    for r in 0..p.len() {
        let next = p.get(r + 1).copied().unwrap_or(0);
        // horizontal domino at the end of row r
        if p[r] >= next + 2 {
            let mut q = p.clone();
            q[r] -= 2;
            total += count_sdt(&mut q, memo);
        }
        // vertical domino ending rows r and r+1
        if r + 1 < p.len() && p[r] == p[r + 1] && p.get(r + 2).copied().unwrap_or(0) < p[r] {
            let mut q = p.clone();
            q[r] -= 1;
            q[r + 1] -= 1;
            total += count_sdt(&mut q, memo);
        }
    }
    memo.insert(p.clone(), total);
    total
}

#[test]
fn tableau_counts_match_peeling() {
    let mut syt = BTreeMap::new();
    let mut sdt = BTreeMap::new();
    for size in 1..=10 {
        for lam in Partition::all(size) {
            let mut p = lam.parts().to_vec();
            if size <= 8 {
                assert_eq!(enumerate_syt(&lam).len() as u128, count_syt(&mut p.clone(), &mut syt), "{lam}");
            }
            let tiles = count_sdt(&mut p, &mut sdt);
            match enumerate_sdt(&lam) {
                Ok(ts) => {
                    assert_eq!(ts.len() as u128, tiles, "{lam}");
                    assert_eq!(domino_hook_count(&lam).unwrap(), tiles, "{lam}");
                }
                Err(_) => assert_eq!(tiles, 0, "{lam}"),
            }
        }
    }
}

/// Chow fundamental expanded by scanning every map `[n] → {0..m}`.
fn chow_brute(n: usize, j: DescentSet, m: usize) -> BTreeMap<Monomial, QPoly> {
    let mut out: BTreeMap<Monomial, QPoly> = BTreeMap::new();
    let total = (m + 1).pow(n as u32);
    for code in 0..total {
        let seq: Vec<usize> = (0..n).map(|k| code / (m + 1).pow(k as u32) % (m + 1)).collect();
        let ok = (0..n).all(|k| {
            let prev = if k == 0 { 0 } else { seq[k - 1] };
            if j.contains(k) {
                prev < seq[k]
            } else {
                prev <= seq[k]
            }
        });
        if ok {
            let mut mono = Monomial::one(m);
            for &i in &seq {
                mono.x[i] += 1;
            }
            *out.entry(mono).or_insert_with(QPoly::zero) += &QPoly::constant(1);
        }
    }
    out
}

#[test]
fn chow_fundamentals_match_brute_force() {
    for n in 1..=4 {
        for bits in 0..1u32 << n {
            let j = DescentSet::from_bits(bits);
            for m in n..=n + 1 {
                let f = QSymB::fundamental(n, j).unwrap().expand(m).unwrap();
                assert_eq!(f.terms, chow_brute(n, j, m), "n={n} J={j} m={m}");
            }
        }
    }
}

#[test]
fn statistics_match_definitions() {
    for n in 1..=5 {
        for w in all_signed(n) {
            let win = w.window();
            // des_b with w_0 = 0
            let mut ext = vec![0];
            ext.extend_from_slice(win);
            let des: DescentSet = (0..n).filter(|&i| ext[i] > ext[i + 1]).collect();
            assert_eq!(w.des_b(), des);
            assert_eq!(w.ldes(), des.max().unwrap_or(0));
            if w.is_unsigned() {
                // split points i where {w_1..w_i} = {1..i}
                let splits = (1..n).filter(|&i| win[..i].iter().all(|&v| v <= i as i32)).count();
                assert_eq!(w.block_number(), splits + 1, "{w}");
            }
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| win[i] > win[j]).count();
            let negsum: i32 = win.iter().filter(|v| **v < 0).map(|v| -v).sum();
            assert_eq!(w.length(), inv + negsum as usize, "{w}");
        }
    }
}
