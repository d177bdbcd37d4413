//! Domino insertion for signed permutations: classical RSK on the
//! palindromic word `w^0`, followed by jeu de taquin that pairs `-i` with `i`
//! into a domino labelled `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{SignedIter, SignedPermutation};
use crate::tableaux::{two_core_is_empty, Domino, DominoTableau, Partition};

/// `w^0 = [-w_n, …, -w_1, w_1, …, w_n]`.
pub fn palindromic(w: &SignedPermutation) -> Vec<i32> {
    w.window().iter().rev().map(|&v| -v).chain(w.window().iter().copied()).collect()
}

/// Recording labels of the positions of `w^0`: `-n, …, -1, 1, …, n`.
fn position_labels(n: usize) -> Vec<i32> {
    (1..=n as i32).rev().map(|v| -v).chain(1..=n as i32).collect()
}

pub type Rows = Vec<Vec<i32>>;

/// Row insertion of `word`, recording `record[k]` when letter `k` is inserted.
pub fn rsk_classical(word: &[i32], record: &[i32]) -> Result<(Rows, Rows)> {
    assert_eq!(word.len(), record.len(), "one recording label per letter");
    let mut seen = word.to_vec();
    seen.sort_unstable();
    if let Some(p) = seen.windows(2).find(|p| p[0] == p[1]) {
        return Err(Error::RepeatedEntry(p[0]));
    }
    let mut p: Rows = Vec::new();
    let mut q: Rows = Vec::new();
    for (&x, &label) in word.iter().zip(record) {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![label]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    std::mem::swap(&mut p[r][c], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(label);
                    break;
                }
            }
        }
    }
    Ok((p, q))
}

/// A cell of a partially collapsed tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    Single(i32),
    Domino(u32),
}

/// Intermediate state of the vacating process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotGrid(pub Vec<Vec<Slot>>);

impl fmt::Display for SlotGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.0.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|s| match s {
                    Slot::Single(v) => format!("{v:>3}"),
                    Slot::Domino(l) => format!("[{l}]"),
                })
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl SlotGrid {
    fn single(&self, r: usize, c: usize) -> Option<i32> {
        match self.0.get(r)?.get(c)? {
            Slot::Single(v) => Some(*v),
            Slot::Domino(_) => None,
        }
    }

    fn find(&self, v: i32) -> Option<(usize, usize)> {
        self.0.iter().enumerate().find_map(|(r, row)| row.iter().position(|s| *s == Slot::Single(v)).map(|c| (r, c)))
    }
}

/// Collapses a tableau on `[±n]` into a domino tableau: for `i = n, …, 1`,
/// `-i` slides outward through the remaining single entries (always trading
/// places with the smaller of its right and lower neighbours) until it
/// reaches a corner of that region, where it must sit next to `i`; the two
/// cells become the domino `i`.
///
/// Returns the domino tableau and the grid after each step.
pub fn jdt_vacate(t0: &[Vec<i32>]) -> Result<(DominoTableau, Vec<SlotGrid>)> {
    let n = t0.iter().map(Vec::len).sum::<usize>() / 2;
    let mut g = SlotGrid(t0.iter().map(|row| row.iter().map(|&v| Slot::Single(v)).collect()).collect());
    let mut trace = vec![g.clone()];
    let mut dominoes = Vec::with_capacity(n);
    for i in (1..=n as i32).rev() {
        let (mut r, mut c) = g.find(-i).ok_or_else(|| Error::NotCollapsible(format!("-{i} missing")))?;
        loop {
            let right = g.single(r, c + 1);
            let below = g.single(r + 1, c);
            let (nr, nc) = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) => {
                    debug_assert_ne!(a, b);
                    if a < b {
                        (r, c + 1)
                    } else {
                        (r + 1, c)
                    }
                }
            };
            g.0[r][c] = g.0[nr][nc];
            g.0[nr][nc] = Slot::Single(-i);
            (r, c) = (nr, nc);
        }
        let partner = [(r, c + 1), (r + 1, c)]
            .into_iter()
            .chain(c.checked_sub(1).map(|cc| (r, cc)))
            .chain(r.checked_sub(1).map(|rr| (rr, c)))
            .find(|&(a, b)| g.single(a, b) == Some(i))
            .ok_or_else(|| Error::NotCollapsible(format!("-{i} stopped at ({r},{c}) away from {i}")))?;
        let mut cells = [(r, c), partner];
        cells.sort();
        for (a, b) in cells {
            g.0[a][b] = Slot::Domino(i as u32);
        }
        dominoes.push(Domino { label: i as u32, cells });
        trace.push(g.clone());
    }
    let shape = Partition::new(t0.iter().map(Vec::len).collect())?;
    let t = DominoTableau::new(shape, dominoes)?;
    if !t.is_standard() {
        return Err(Error::NotCollapsible(format!("result {t:?} is not standard")));
    }
    Ok((t, trace))
}

/// Output of the domino insertion, with the intermediate objects kept for
/// inspection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BvRsk {
    pub palindromic: Vec<i32>,
    pub p0: Rows,
    pub q0: Rows,
    pub p: DominoTableau,
    pub q: DominoTableau,
    pub p_trace: Vec<SlotGrid>,
    pub q_trace: Vec<SlotGrid>,
}

impl BvRsk {
    pub fn shape(&self) -> &Partition {
        self.p.shape()
    }
}

/// Fallible form of [`bv_rsk`].
pub fn try_bv_rsk(w: &SignedPermutation) -> Result<BvRsk> {
    let word = palindromic(w);
    let (p0, q0) = rsk_classical(&word, &position_labels(w.rank()))?;
    let (p, p_trace) = jdt_vacate(&p0)?;
    let (q, q_trace) = jdt_vacate(&q0)?;
    Ok(BvRsk { palindromic: word, p0, q0, p, q, p_trace, q_trace })
}

/// The pair `(P(w), Q(w))` of standard domino tableaux of equal shape.
pub fn bv_rsk(w: &SignedPermutation) -> BvRsk {
    try_bv_rsk(w).expect("palindromic tableaux always collapse into dominoes")
}

/// Insertion shape alone.
pub fn shape_of(w: &SignedPermutation) -> Partition {
    let (p0, _) = rsk_classical(&palindromic(w), &position_labels(w.rank())).expect("distinct letters");
    Partition::new(p0.iter().map(Vec::len).collect()).expect("RSK shapes are partitions")
}

/// The combinatorial cell `{w ∈ B_n : shape(P(w)) = λ}`, streamed in
/// lexicographic order.
pub fn cell_iter(lambda: &Partition) -> Result<impl Iterator<Item = SignedPermutation> + '_> {
    if !lambda.size().is_multiple_of(2) || !two_core_is_empty(lambda) {
        return Err(Error::NonEmptyTwoCore(lambda.to_string()));
    }
    Ok(SignedIter::new(lambda.size() / 2).filter(move |w| &shape_of(w) == lambda))
}

pub fn cell(lambda: &Partition) -> Result<Vec<SignedPermutation>> {
    Ok(cell_iter(lambda)?.collect())
}

/// Length of the longest strictly decreasing subsequence.
pub fn longest_decreasing(word: &[i32]) -> usize {
    let mut best = vec![1; word.len()];
    for j in 0..word.len() {
        for i in 0..j {
            if word[i] > word[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Whether `word` has two position-disjoint decreasing subsequences of length 3.
pub fn has_two_disjoint_321(word: &[i32]) -> bool {
    let n = word.len();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if word[i] <= word[j] {
                continue;
            }
            for k in j + 1..n {
                if word[j] > word[k] {
                    triples.push((1u64 << i) | (1 << j) | (1 << k));
                }
            }
        }
    }
    triples.iter().enumerate().any(|(a, &x)| triples[a + 1..].iter().any(|&y| x & y == 0))
}
