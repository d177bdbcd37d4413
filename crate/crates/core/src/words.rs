//! Coxeter words over `s_0, …, s_{n-1}`, commutation classes and heaps.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{DescentSet, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoxeterType {
    /// `S_n` with generators `s_1, …, s_{n-1}`.
    A,
    /// `B_n` with generators `s_0, …, s_{n-1}`.
    B,
}

impl CoxeterType {
    fn min_index(self) -> u8 {
        match self {
            CoxeterType::A => 1,
            CoxeterType::B => 0,
        }
    }

    /// The Coxeter matrix entry `m(s_a, s_b)`.
    pub fn order(self, a: u8, b: u8) -> u32 {
        if a == b {
            1
        } else if a.abs_diff(b) >= 2 {
            2
        } else if self == CoxeterType::B && a.min(b) == 0 {
            4
        } else {
            3
        }
    }
}

/// Generators commute iff their indices differ by at least two, in both types.
pub fn commute(a: u8, b: u8) -> bool {
    a.abs_diff(b) >= 2
}

/// A word in the Coxeter generators of `S_n` or `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterWord {
    ty: CoxeterType,
    rank: usize,
    letters: Vec<u8>,
}

impl CoxeterWord {
    pub fn new(ty: CoxeterType, rank: usize, letters: Vec<u8>) -> Result<Self> {
        let lo = ty.min_index();
        if let Some(&bad) = letters.iter().find(|&&a| a < lo || a as usize >= rank) {
            let name = match ty {
                CoxeterType::A => "A",
                CoxeterType::B => "B",
            };
            return Err(Error::GeneratorOutOfRange { index: bad, ty: name, rank });
        }
        Ok(CoxeterWord { ty, rank, letters })
    }

    pub fn empty(ty: CoxeterType, rank: usize) -> Self {
        CoxeterWord { ty, rank, letters: Vec::new() }
    }

    /// Parses whitespace-separated generator indices, e.g. `"3 2 1 0"`.
    pub fn parse(ty: CoxeterType, rank: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<u8>().map_err(|_| Error::MalformedWord(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        CoxeterWord::new(ty, rank, letters)
    }

    pub fn ty(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn with_letters(&self, letters: Vec<u8>) -> CoxeterWord {
        CoxeterWord { ty: self.ty, rank: self.rank, letters }
    }

    /// The product of the generators, read left to right.
    pub fn evaluate(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity(self.rank);
        for &a in &self.letters {
            w.mul_generator_right(a as usize);
        }
        w
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }

    fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced(self.to_string()))
        }
    }

    /// The subword of letters contained in `keep`.
    pub fn restrict(&self, keep: impl Fn(u8) -> bool) -> Vec<u8> {
        self.letters.iter().copied().filter(|&a| keep(a)).collect()
    }

    /// All words reachable by swapping adjacent commuting letters, sorted.
    pub fn commutation_class(&self) -> Result<Vec<CoxeterWord>> {
        self.require_reduced()?;
        let mut out = Vec::new();
        commutation_bfs(&self.letters, |w| {
            out.push(w.to_vec());
            true
        });
        out.sort();
        Ok(out.into_iter().map(|l| self.with_letters(l)).collect())
    }

    /// Whether some word in the commutation class contains a braid factor.
    ///
    /// A single class suffices: a braid move must be applicable to some word
    /// of the class for the element to have a second class.
    pub fn is_fc_word(&self) -> Result<bool> {
        self.require_reduced()?;
        let ty = self.ty;
        let mut fc = true;
        commutation_bfs(&self.letters, |w| {
            if has_braid_factor(ty, w) {
                fc = false;
            }
            fc
        });
        Ok(fc)
    }

    /// A reduced word for `w`, obtained by peeling off the smallest right descent.
    pub fn reduced_word_of(w: &SignedPermutation, ty: CoxeterType) -> Result<CoxeterWord> {
        if ty == CoxeterType::A && !w.is_unsigned() {
            return Err(Error::NotUnsigned(w.to_string()));
        }
        let mut u = w.clone();
        let mut rev = Vec::with_capacity(w.length());
        while let Some(i) = u.des_b().min() {
            u.mul_generator_right(i);
            rev.push(i as u8);
        }
        rev.reverse();
        Ok(CoxeterWord { ty, rank: w.rank(), letters: rev })
    }

    /// Every reduced word of `w`, sorted. Exponential; test oracle only.
    pub fn all_reduced_words(w: &SignedPermutation, ty: CoxeterType) -> Vec<CoxeterWord> {
        fn rec(u: &SignedPermutation, suffix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            let d = u.des_b();
            if d.is_empty() {
                out.push(suffix.iter().rev().copied().collect());
                return;
            }
            for i in d.iter() {
                let mut v = u.clone();
                v.mul_generator_right(i);
                suffix.push(i as u8);
                rec(&v, suffix, out);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        rec(w, &mut Vec::new(), &mut out);
        out.sort();
        out.into_iter().map(|letters| CoxeterWord { ty, rank: w.rank(), letters }).collect()
    }
}

impl fmt::Display for CoxeterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Visits the commutation class of `start` breadth-first; stops early when
/// `visit` returns false.
fn commutation_bfs(start: &[u8], mut visit: impl FnMut(&[u8]) -> bool) {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        if !visit(&w) {
            return;
        }
        for i in 0..w.len().saturating_sub(1) {
            if commute(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
}

fn has_braid_factor(ty: CoxeterType, w: &[u8]) -> bool {
    w.windows(3).any(|f| f[0] == f[2] && ty.order(f[0], f[1]) == 3)
        || (ty == CoxeterType::B && w.windows(4).any(|f| f == [0, 1, 0, 1] || f == [1, 0, 1, 0]))
}

/// The heap of a word: positions ordered by `i ≺ j` when `i < j` and the
/// letters do not commute, closed transitively.
#[derive(Clone, Debug)]
pub struct Heap {
    labels: Vec<u8>,
    /// `below[j]` has bit `i` set iff `i ≺ j` (strictly).
    below: Vec<u128>,
}

const MAX_HEAP: usize = 128;

impl Heap {
    pub fn of(word: &CoxeterWord) -> Result<Heap> {
        Heap::from_letters(word.letters())
    }

    pub fn from_letters(letters: &[u8]) -> Result<Heap> {
        if letters.len() > MAX_HEAP {
            return Err(Error::HeapTooLarge(letters.len()));
        }
        let mut below = vec![0u128; letters.len()];
        for j in 0..letters.len() {
            for i in 0..j {
                if !commute(letters[i], letters[j]) {
                    below[j] |= below[i] | (1 << i);
                }
            }
        }
        Ok(Heap { labels: letters.to_vec(), below })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j] & (1 << i) != 0
    }

    /// Cover relations `(i, j)` with `i ⋖ j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            for i in 0..j {
                if self.less(i, j) && !(i + 1..j).any(|k| self.less(i, k) && self.less(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.below[j] == 0).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| !self.less(i, j))).collect()
    }

    /// Labels of maximal elements.
    pub fn peaks(&self) -> DescentSet {
        self.maximal().into_iter().map(|i| self.labels[i] as usize).collect()
    }

    /// Labels of minimal elements.
    pub fn valleys(&self) -> DescentSet {
        self.minimal().into_iter().map(|i| self.labels[i] as usize).collect()
    }

    /// Isomorphism invariant: elements named by (label, occurrence number),
    /// which is well defined because equal labels never commute.
    pub fn canonical_form(&self) -> Vec<((u8, usize), (u8, usize))> {
        let mut occ = HashMap::new();
        let names: Vec<(u8, usize)> = self
            .labels
            .iter()
            .map(|&a| {
                let c = occ.entry(a).or_insert(0usize);
                *c += 1;
                (a, *c - 1)
            })
            .collect();
        let mut rel = Vec::new();
        for j in 0..self.len() {
            for i in 0..j {
                if self.less(i, j) {
                    rel.push((names[i], names[j]));
                }
            }
        }
        rel.sort();
        rel
    }

    pub fn isomorphic(&self, other: &Heap) -> bool {
        let mut a = self.labels.clone();
        let mut b = other.labels.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b && self.canonical_form() == other.canonical_form()
    }

    /// Number of linear extensions, by dynamic programming over down-sets.
    pub fn linear_extensions(&self) -> Result<u128> {
        if self.len() > 40 {
            return Err(Error::HeapTooLarge(self.len()));
        }
        fn count(h: &Heap, done: u128, memo: &mut HashMap<u128, u128>) -> u128 {
            let full = if h.len() == 128 { u128::MAX } else { (1u128 << h.len()) - 1 };
            if done == full {
                return 1;
            }
            if let Some(&c) = memo.get(&done) {
                return c;
            }
            let mut total = 0;
            for j in 0..h.len() {
                if done & (1 << j) == 0 && h.below[j] & !done == 0 {
                    total += count(h, done | (1 << j), memo);
                }
            }
            memo.insert(done, total);
            total
        }
        Ok(count(self, 0, &mut HashMap::new()))
    }

    /// The diagonal reading: repeatedly take the minimal element of smallest
    /// label `i`, then keep descending through `i-1, i-2, …` while the next
    /// label is available as a minimal element of what remains.
    pub fn diagonal_factors(&self) -> Vec<Vec<u8>> {
        let mut done: u128 = 0;
        let mut factors = Vec::new();
        let avail = |done: u128, j: usize| done & (1 << j) == 0 && self.below[j] & !done == 0;
        while done.count_ones() as usize != self.len() {
            let start = (0..self.len())
                .filter(|&j| avail(done, j))
                .min_by_key(|&j| self.labels[j])
                .expect("nonempty remainder has a minimal element");
            done |= 1 << start;
            let mut factor = vec![self.labels[start]];
            let mut cur = self.labels[start];
            while cur > 0 {
                let next = (0..self.len()).find(|&j| avail(done, j) && self.labels[j] == cur - 1);
                match next {
                    Some(j) => {
                        done |= 1 << j;
                        cur -= 1;
                        factor.push(cur);
                    }
                    None => break,
                }
            }
            factors.push(factor);
        }
        factors
    }

    /// Cover graph in Graphviz DOT format, minimal elements at the bottom.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph heap {\n  rankdir=BT;\n");
        for (i, a) in self.labels.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"s{a}\"];\n"));
        }
        for (i, j) in self.covers() {
            s.push_str(&format!("  v{i} -> v{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// The two families of FC heaps in type `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HeapClass {
    Alternating,
    LeftPeak,
}

impl fmt::Display for HeapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HeapClass::Alternating => "alternating",
            HeapClass::LeftPeak => "left-peak",
        })
    }
}

fn alternates(w: &[u8]) -> bool {
    w.windows(2).all(|p| p[0] != p[1])
}

/// Alternation of every chain `H_{s_a, s_{a+1}}` with `lo ≤ a`, `a + 1 < n`.
fn is_alternating_from(letters: &[u8], lo: u8, n: usize) -> bool {
    (lo as usize..n.saturating_sub(1)).all(|a| {
        let a = a as u8;
        let r: Vec<u8> = letters.iter().copied().filter(|&x| x == a || x == a + 1).collect();
        alternates(&r)
    })
}

fn left_peak_index(letters: &[u8], n: usize) -> Option<usize> {
    let candidates: Vec<usize> = (1..n)
        .filter(|&j| {
            let j8 = j as u8;
            let low: Vec<u8> = letters.iter().copied().filter(|&x| x <= j8).collect();
            let expect: Vec<u8> = (0..=j8).rev().chain(1..=j8).collect();
            if low != expect {
                return false;
            }
            let pair: Vec<u8> = letters.iter().copied().filter(|&x| x == j8 || x == j8 + 1).collect();
            // `s_{j+1}` may appear on either side of the two `s_j`, or on both
            let pair_ok = match pair.as_slice() {
                [a, b] => *a == j8 && *b == j8,
                _ if j == n - 1 => false,
                [a, b, c] => (*a == j8 + 1 && *b == j8 && *c == j8) || (*a == j8 && *b == j8 && *c == j8 + 1),
                [a, b, c, d] => *a == j8 + 1 && *b == j8 && *c == j8 && *d == j8 + 1,
                _ => false,
            };
            if !pair_ok {
                return false;
            }
            let mut high: Vec<u8> = letters.iter().copied().filter(|&x| x >= j8).collect();
            let first = high.iter().position(|&x| x == j8).expect("s_j occurs twice");
            high.remove(first);
            is_alternating_from(&high, j8, n)
        })
        .collect();
    // `j` is not always unique: `2 1 0 1 2` in `B_3` satisfies both `j = 1` and `j = 2`
    candidates.last().copied()
}

/// Classifies the heap of a reduced word as alternating or left-peak.
/// Returns `None` when it is neither (the element is then not FC).
///
/// The left-peak test runs first: in `B_2` the word `1 0 1` passes both
/// tests, and only counting it as a left-peak gives `C(2n,n)` alternating
/// elements.
pub fn heap_class(word: &CoxeterWord) -> Option<HeapClass> {
    let n = word.rank();
    let lo = if word.ty() == CoxeterType::B { 0 } else { 1 };
    if word.ty() == CoxeterType::B && left_peak_index(word.letters(), n).is_some() {
        Some(HeapClass::LeftPeak)
    } else if is_alternating_from(word.letters(), lo, n) {
        Some(HeapClass::Alternating)
    } else {
        None
    }
}

fn fc_word(w: &SignedPermutation) -> Result<CoxeterWord> {
    if !w.is_fc() {
        return Err(Error::NotFullyCommutative(w.to_string()));
    }
    CoxeterWord::reduced_word_of(w, CoxeterType::B)
}

/// Heap classification of an FC element of `B_n`.
pub fn classify(w: &SignedPermutation) -> Result<HeapClass> {
    heap_class(&fc_word(w)?).ok_or_else(|| Error::NotFullyCommutative(w.to_string()))
}

/// The diagonal reduced expression of an FC element, as its diagonal factors.
pub fn diagonal_factors(w: &SignedPermutation) -> Result<Vec<Vec<u8>>> {
    let heap = Heap::of(&fc_word(w)?)?;
    Ok(heap.diagonal_factors())
}

pub fn diagonal_reduced_expression(w: &SignedPermutation) -> Result<CoxeterWord> {
    let letters = diagonal_factors(w)?.concat();
    let word = CoxeterWord::new(CoxeterType::B, w.rank(), letters)?;
    assert!(word.is_reduced() && &word.evaluate() == w, "diagonal reading of {w} is not a reduced word for it");
    Ok(word)
}

/// Renders factors as `(s4s3s2)(s1)`; the identity renders as `e`.
pub fn format_factors(factors: &[Vec<u8>]) -> String {
    if factors.is_empty() {
        return "e".to_string();
    }
    factors
        .iter()
        .map(|f| {
            let inner: String = f.iter().map(|a| format!("s{a}")).collect();
            format!("({inner})")
        })
        .collect()
}

pub fn peaks(w: &SignedPermutation) -> Result<DescentSet> {
    Ok(Heap::of(&fc_word(w)?)?.peaks())
}

pub fn valleys(w: &SignedPermutation) -> Result<DescentSet> {
    Ok(Heap::of(&fc_word(w)?)?.valleys())
}
