//! Partitions, (skew) Young tableaux, bi-tableaux and domino tableaux.
//!
//! Diagrams use English convention: row 0 is the top (longest) row and
//! cells are `(row, column)`, both 0-indexed.

mod carre_leclerc;
mod domino;
mod quotient;

pub use carre_leclerc::{carre_leclerc, carre_leclerc_checked};
pub use domino::{domino_hook_count, enumerate_sdt, enumerate_ssdt, enumerate_tilings, Domino, DominoTableau};
pub use quotient::{admissible_shapes, domino_shapes, from_two_quotient, two_core_is_empty, two_quotient};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::DescentSet;

/// An integer partition with positive, weakly decreasing parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c < self.part(r)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }

    pub fn hook(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c - 1;
        let leg = self.0.iter().skip(r + 1).filter(|&&p| p > c).count();
        arm + leg + 1
    }

    /// Partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `f^λ` by the hook length formula.
    pub fn hook_count(&self) -> u128 {
        let prod: u128 = self.cells().map(|(r, c)| self.hook(r, c) as u128).product();
        crate::factorial(self.size() as u64) / prod
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A filling of a (skew) Young diagram `shape / inner`.
///
/// `rows[r]` lists the entries of row `r` from column `inner[r]` onwards.
/// Standard and semistandard fillings share this type; see
/// [`Tableau::is_standard`] and [`Tableau::is_semistandard`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    #[serde(default, skip_serializing_if = "Partition::is_empty")]
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

pub type StandardTableau = Tableau;

impl Tableau {
    pub fn new(shape: Partition, inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if !shape.contains(&inner) {
            return Err(Error::InvalidShape(format!("{shape}/{inner}")));
        }
        let mut rows = rows;
        while rows.len() < shape.len() {
            rows.push(Vec::new());
        }
        if rows.len() != shape.len()
            || rows.iter().enumerate().any(|(r, row)| row.len() != shape.part(r) - inner.part(r))
        {
            return Err(Error::InvalidTableau(format!("rows {rows:?} do not fill {shape}/{inner}")));
        }
        Ok(Tableau { shape, inner, rows })
    }

    /// A straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(shape, Partition::empty(), rows)
    }

    pub fn empty() -> Self {
        Tableau { shape: Partition::empty(), inner: Partition::empty(), rows: Vec::new() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size() - self.inner.size()
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        let start = self.inner.part(r);
        (c >= start && c < self.shape.part(r)).then(|| self.rows[r][c - start])
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Row of the (first) cell holding `v`.
    pub fn row_of(&self, v: u32) -> Option<usize> {
        self.rows.iter().position(|row| row.contains(&v))
    }

    fn adjacent_pairs(&self) -> impl Iterator<Item = (u32, u32, bool)> + '_ {
        // (left/upper, right/lower, is_row_pair)
        (0..self.shape.len()).flat_map(move |r| {
            (self.inner.part(r)..self.shape.part(r)).flat_map(move |c| {
                let here = self.entry(r, c).unwrap();
                let right = self.entry(r, c + 1).map(|x| (here, x, true));
                let below = self.entry(r + 1, c).map(|x| (here, x, false));
                right.into_iter().chain(below)
            })
        })
    }

    /// Entries are exactly `1..=size`, strictly increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        let mut e: Vec<u32> = self.entries().collect();
        e.sort_unstable();
        e.iter().enumerate().all(|(i, &v)| v == i as u32 + 1) && self.adjacent_pairs().all(|(a, b, _)| a < b)
    }

    /// Weakly increasing rows, strictly increasing columns.
    pub fn is_semistandard(&self) -> bool {
        self.adjacent_pairs().all(|(a, b, row)| if row { a <= b } else { a < b })
    }

    /// `{i : i+1 lies in a strictly lower row than i}`.
    pub fn des(&self) -> DescentSet {
        let n = self.size() as u32;
        (1..n).filter(|&i| self.row_of(i + 1) > self.row_of(i)).map(|i| i as usize).collect()
    }

    /// Maximal descent, 0 when there is none.
    pub fn ldes(&self) -> usize {
        self.des().max().unwrap_or(0)
    }

    /// Number of entries equal to each label `0..=max`.
    pub fn content(&self, max: u32) -> Vec<usize> {
        let mut out = vec![0; max as usize + 1];
        for v in self.entries() {
            out[v as usize] += 1;
        }
        out
    }

    fn relabel(&self, map: impl Fn(u32) -> u32) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            inner: self.inner.clone(),
            rows: self.rows.iter().map(|row| row.iter().map(|&v| map(v)).collect()).collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.is_empty() {
            return write!(f, "∅");
        }
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = std::iter::repeat_n(".".to_string(), self.inner.part(r))
                .chain(row.iter().map(u32::to_string))
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// All standard fillings of `shape / inner`, in lexicographic order of the
/// sequence of rows receiving `1, 2, …`.
pub fn enumerate_skew_syt(shape: &Partition, inner: &Partition) -> Result<Vec<Tableau>> {
    if !shape.contains(inner) {
        return Err(Error::InvalidShape(format!("{shape}/{inner}")));
    }
    let nrows = shape.len();
    let total = shape.size() - inner.size();
    let mut fill: Vec<usize> = (0..nrows).map(|r| inner.part(r)).collect();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    let mut out = Vec::new();

    fn rec(
        k: u32,
        total: u32,
        shape: &Partition,
        inner: &Partition,
        fill: &mut Vec<usize>,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if k > total {
            out.push(Tableau { shape: shape.clone(), inner: inner.clone(), rows: rows.clone() });
            return;
        }
        for r in 0..fill.len() {
            let c = fill[r];
            if c < shape.part(r) && (r == 0 || fill[r - 1] > c) {
                fill[r] += 1;
                rows[r].push(k);
                rec(k + 1, total, shape, inner, fill, rows, out);
                rows[r].pop();
                fill[r] -= 1;
            }
        }
    }
    rec(1, total as u32, shape, inner, &mut fill, &mut rows, &mut out);
    Ok(out)
}

pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    enumerate_skew_syt(shape, &Partition::empty()).expect("straight shapes are valid")
}

/// A pair of tableaux `(T^-, T^+)` with entries jointly `1..=n`.
///
/// `minus` is drawn below/left of `plus`; entries of `minus` form the
/// negative set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiTableau {
    pub minus: Tableau,
    pub plus: Tableau,
}

impl BiTableau {
    pub fn new(minus: Tableau, plus: Tableau) -> Result<Self> {
        let mut e: Vec<u32> = minus.entries().chain(plus.entries()).collect();
        e.sort_unstable();
        let standard_parts = |t: &Tableau| t.adjacent_pairs().all(|(a, b, _)| a < b);
        if e.iter().enumerate().any(|(i, &v)| v != i as u32 + 1) || !standard_parts(&minus) || !standard_parts(&plus) {
            return Err(Error::InvalidTableau(format!("{minus:?} | {plus:?}")));
        }
        Ok(BiTableau { minus, plus })
    }

    pub fn size(&self) -> usize {
        self.minus.size() + self.plus.size()
    }

    pub fn shapes(&self) -> (Partition, Partition) {
        (self.minus.shape().clone(), self.plus.shape().clone())
    }

    fn locate(&self, v: u32) -> (bool, usize) {
        match self.minus.row_of(v) {
            Some(r) => (true, r),
            None => (false, self.plus.row_of(v).expect("entry present")),
        }
    }

    /// `i ∈ Des` iff `i ∈ T^+` and `i+1 ∈ T^-`, or both lie in the same
    /// component with `i+1` in a strictly lower row.
    pub fn des(&self) -> DescentSet {
        let n = self.size() as u32;
        (1..n)
            .filter(|&i| {
                let (mi, ri) = self.locate(i);
                let (mj, rj) = self.locate(i + 1);
                (!mi && mj) || (mi == mj && rj > ri)
            })
            .map(|i| i as usize)
            .collect()
    }

    /// `Des` together with 0 when 1 lies in `T^-`.
    pub fn des_b(&self) -> DescentSet {
        let mut d = self.des();
        if self.size() > 0 && self.locate(1).0 {
            d.insert(0);
        }
        d
    }

    pub fn ldes(&self) -> usize {
        self.des_b().max().unwrap_or(0)
    }

    /// Entries of the minus component.
    pub fn neg(&self) -> DescentSet {
        self.minus.entries().map(|v| v as usize).collect()
    }
}

impl fmt::Debug for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} | {:?})", self.minus, self.plus)
    }
}

/// All standard bi-tableaux of bi-shape `(λ^-, λ^+)`.
pub fn enumerate_bsyt(minus: &Partition, plus: &Partition) -> Vec<BiTableau> {
    let k = minus.size();
    let n = k + plus.size();
    let sm = enumerate_syt(minus);
    let sp = enumerate_syt(plus);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let lo: Vec<u32> = (1..=n as u32).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        let hi: Vec<u32> = (1..=n as u32).filter(|&v| mask & (1 << (v - 1)) == 0).collect();
        for a in &sm {
            for b in &sp {
                out.push(BiTableau {
                    minus: a.relabel(|v| lo[v as usize - 1]),
                    plus: b.relabel(|v| hi[v as usize - 1]),
                });
            }
        }
    }
    out.sort();
    out
}
