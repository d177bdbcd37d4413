//! Signed permutations of `[±n]` in window notation.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of small nonnegative integers (descent sets, negative sets).
///
/// Stored as a bitmask; every index used in this crate is below 32.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet(u32);

impl DescentSet {
    pub const EMPTY: DescentSet = DescentSet(0);

    pub fn from_bits(bits: u32) -> Self {
        DescentSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < 32, "descent index {i} out of range");
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < 32 {
            self.0 &= !(1 << i);
        }
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(self, other: DescentSet) -> DescentSet {
        DescentSet(self.0 | other.0)
    }
}

impl FromIterator<usize> for DescentSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = DescentSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for DescentSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DescentSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i >= 32) {
            return Err(serde::de::Error::custom(format!("set element {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// An element of the hyperoctahedral group `B_n`, `w = [w_1, …, w_n]`.
///
/// Ordering is lexicographic on the window, which is the canonical
/// enumeration order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(window: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(window)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Vec<i32> {
        w.window
    }
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidWindow { window, n });
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow { window, n });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    /// The Coxeter generator `s_i` of `B_n` (`s_0` negates the first letter).
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::GeneratorOutOfRange { index: i as u8, ty: "B", rank: n });
        }
        let mut w = Self::identity(n);
        w.mul_generator_right(i);
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for a signed argument `i ∈ [±n]`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// True when `w` lies in the parabolic subgroup `S_n` (no negative letters).
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// `(u∘v)(i) = u(v(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(SignedPermutation { window: other.window.iter().map(|&v| self.apply(v)).collect() })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        SignedPermutation { window }
    }

    /// Right multiplication by `s_i`: acts on positions.
    pub fn mul_generator_right(&mut self, i: usize) {
        if i == 0 {
            self.window[0] = -self.window[0];
        } else {
            self.window.swap(i - 1, i);
        }
    }

    /// Left multiplication by `s_i`: acts on values.
    pub fn mul_generator_left(&mut self, i: usize) {
        for v in self.window.iter_mut() {
            if i == 0 {
                if v.abs() == 1 {
                    *v = -*v;
                }
            } else if v.abs() == i as i32 {
                *v = v.signum() * (i as i32 + 1);
            } else if v.abs() == i as i32 + 1 {
                *v = v.signum() * i as i32;
            }
        }
    }

    /// `Des(w) = {1 ≤ i ≤ n−1 : w_i > w_{i+1}}`.
    pub fn des_a(&self) -> DescentSet {
        (1..self.rank()).filter(|&i| self.window[i - 1] > self.window[i]).collect()
    }

    /// `Des_B(w) = {0 ≤ i ≤ n−1 : w_i > w_{i+1}}` with `w_0 = 0`.
    pub fn des_b(&self) -> DescentSet {
        let mut d = self.des_a();
        if self.window[0] < 0 {
            d.insert(0);
        }
        d
    }

    /// `Neg(w) = {i : w_i < 0}`.
    pub fn neg(&self) -> DescentSet {
        (1..=self.rank()).filter(|&i| self.window[i - 1] < 0).collect()
    }

    /// Block number: one plus the number of split points `i` with
    /// `max(w_1..w_i) < min(w_{i+1}..w_n)`.
    pub fn block_number(&self) -> usize {
        let n = self.rank();
        let mut suffix_min = vec![i32::MAX; n + 1];
        for i in (0..n).rev() {
            suffix_min[i] = suffix_min[i + 1].min(self.window[i]);
        }
        let mut prefix_max = i32::MIN;
        let mut splits = 0;
        for i in 0..n - 1 {
            prefix_max = prefix_max.max(self.window[i]);
            if prefix_max < suffix_min[i + 1] {
                splits += 1;
            }
        }
        1 + splits
    }

    /// Largest element of `Des_B(w)`, or 0 when it is empty.
    pub fn ldes(&self) -> usize {
        self.des_b().max().unwrap_or(0)
    }

    /// Descents for the order `-1 <_r -2 <_r … <_r -n <_r 1 <_r … <_r n`.
    pub fn rdes(&self) -> DescentSet {
        let n = self.rank() as i32;
        let rank = |v: i32| if v < 0 { -v } else { n + v };
        (1..self.rank()).filter(|&i| rank(self.window[i - 1]) > rank(self.window[i])).collect()
    }

    /// Number of inversions of the window read as a sequence of integers.
    pub fn inversions(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Coxeter length `ℓ_B(w) = inv(w) + Σ_{w_i<0} |w_i|`.
    pub fn length(&self) -> usize {
        self.inversions() + self.window.iter().filter(|&&v| v < 0).map(|v| v.unsigned_abs() as usize).sum::<usize>()
    }

    /// Left descents computed from the length function: `{i : ℓ(s_i w) < ℓ(w)}`.
    pub fn left_descents_by_length(&self) -> DescentSet {
        let l = self.length();
        (0..self.rank())
            .filter(|&i| {
                let mut u = self.clone();
                u.mul_generator_left(i);
                u.length() < l
            })
            .collect()
    }

    /// Stembridge's pattern criterion for full commutativity.
    pub fn is_fc(&self) -> bool {
        let w = &self.window;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[i] < 0 && w[j] < 0 && w[i] > w[j] {
                    return false;
                }
            }
        }
        let forbidden = forbidden_triples();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if forbidden.contains(&pattern3(w[i], w[j], w[k])) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Plain 321-avoidance of the window values.
    pub fn avoids_321(&self) -> bool {
        let w = &self.window;
        let n = w.len();
        for j in 1..n {
            let left = w[..j].iter().any(|&a| a > w[j]);
            let right = w[j + 1..].iter().any(|&c| c < w[j]);
            if left && right {
                return false;
            }
        }
        true
    }

    /// First valley `v(π)`: `min(Des(π⁻¹) ∖ {1})`, or `n` when that set is empty.
    pub fn first_valley(&self) -> Result<usize> {
        if !self.is_unsigned() {
            return Err(Error::NotUnsigned(self.to_string()));
        }
        if !self.is_fc() {
            return Err(Error::NotFullyCommutative(self.to_string()));
        }
        let mut d = self.inverse().des_a();
        d.remove(1);
        Ok(d.min().unwrap_or(self.rank()))
    }

    /// Signed cycle type: lengths of positive and of negative cycles, each sorted
    /// decreasingly. Two elements are conjugate in `B_n` iff these agree.
    pub fn signed_cycle_type(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.rank();
        let mut seen = vec![false; n + 1];
        let (mut pos, mut negc) = (Vec::new(), Vec::new());
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut negs = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                let v = self.window[i - 1];
                if v < 0 {
                    negs += 1;
                }
                i = v.unsigned_abs() as usize;
            }
            if negs % 2 == 0 {
                pos.push(len);
            } else {
                negc.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        negc.sort_unstable_by(|a, b| b.cmp(a));
        (pos, negc)
    }
}

/// Signed pattern of three letters: signs kept, absolute values standardized.
fn pattern3(a: i32, b: i32, c: i32) -> [i32; 3] {
    let abs = [a.abs(), b.abs(), c.abs()];
    let mut out = [0; 3];
    for (k, v) in [a, b, c].into_iter().enumerate() {
        let rank = 1 + abs.iter().filter(|&&x| x < abs[k]).count() as i32;
        out[k] = if v < 0 { -rank } else { rank };
    }
    out
}

fn forbidden_triples() -> &'static Vec<[i32; 3]> {
    static CELL: OnceLock<Vec<[i32; 3]>> = OnceLock::new();
    CELL.get_or_init(|| {
        all_signed(3)
            .into_iter()
            .map(|p| [p.window[0], p.window[1], p.window[2]])
            .filter(|&[a, b, c]| (a.abs() > b && b > c) || (-b > a.abs() && a.abs() > c))
            .collect()
    })
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_unsigned(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    loop {
        out.push(SignedPermutation { window: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Lazy lexicographic enumeration of `B_n`.
pub struct SignedIter {
    next: Option<Vec<i32>>,
}

impl SignedIter {
    pub fn new(n: usize) -> Self {
        SignedIter { next: (n > 0).then(|| (1..=n as i32).rev().map(|v| -v).collect()) }
    }
}

impl Iterator for SignedIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let cur = self.next.take()?;
        let n = cur.len();
        // rightmost position that can be increased using the absolute values
        // from that position onwards
        for i in (0..n).rev() {
            let mut pool: Vec<i32> = cur[i..].iter().map(|v| v.abs()).collect();
            let cand = pool.iter().flat_map(|&a| [-a, a]).filter(|&v| v > cur[i]).min();
            if let Some(c) = cand {
                let mut next = cur[..i].to_vec();
                next.push(c);
                pool.retain(|&a| a != c.abs());
                pool.sort_unstable_by(|a, b| b.cmp(a));
                next.extend(pool.into_iter().map(|a| -a));
                self.next = Some(next);
                break;
            }
        }
        Some(SignedPermutation { window: cur })
    }
}

/// All of `B_n`, sorted lexicographically by window.
pub fn all_signed(n: usize) -> Vec<SignedPermutation> {
    SignedIter::new(n).collect()
}

/// `FC(B_n)` by brute-force filtering of `B_n`.
pub fn fc_signed(n: usize) -> Vec<SignedPermutation> {
    all_signed(n).into_iter().filter(SignedPermutation::is_fc).collect()
}

/// `FC(S_n)`, i.e. the 321-avoiding permutations.
pub fn fc_unsigned(n: usize) -> Vec<SignedPermutation> {
    all_unsigned(n).into_iter().filter(SignedPermutation::avoids_321).collect()
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"[-3,1,2]"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::MalformedWindow(s.to_string()))?;
        let window = inner
            .split(',')
            .map(|tok| tok.parse::<i32>().map_err(|_| Error::MalformedWindow(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}
