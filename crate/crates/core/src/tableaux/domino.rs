use std::fmt;

use serde::{Deserialize, Serialize};

use super::quotient::two_core_is_empty;
use super::Partition;
use crate::error::{Error, Result};
use crate::perm::DescentSet;

type Cell = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub label: u32,
    /// The two cells, first one earlier in row-major order.
    pub cells: [Cell; 2],
}

impl Domino {
    pub fn is_vertical(&self) -> bool {
        self.cells[0].1 == self.cells[1].1
    }

    /// The upper-right cell: the right cell of a horizontal domino, the top
    /// cell of a vertical one.
    pub fn northeast(&self) -> Cell {
        if self.is_vertical() {
            self.cells[0]
        } else {
            self.cells[1]
        }
    }
}

/// A domino tableau: a tiling of a Young diagram by labelled dominoes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DominoJson", into = "DominoJson")]
pub struct DominoTableau {
    shape: Partition,
    /// Sorted by label, then by first cell.
    dominoes: Vec<Domino>,
}

#[derive(Serialize, Deserialize)]
struct DominoJson {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<DominoJson> for DominoTableau {
    type Error = Error;
    fn try_from(j: DominoJson) -> Result<Self> {
        let t = DominoTableau::from_rows(j.rows)?;
        if t.shape.parts() != j.shape {
            return Err(Error::InvalidTableau(format!("shape {:?} does not match rows", j.shape)));
        }
        Ok(t)
    }
}

impl From<DominoTableau> for DominoJson {
    fn from(t: DominoTableau) -> Self {
        DominoJson { shape: t.shape.parts().to_vec(), rows: t.rows() }
    }
}

impl DominoTableau {
    fn from_parts(shape: Partition, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort();
        DominoTableau { shape, dominoes }
    }

    /// Builds a tableau from dominoes, checking that they tile `shape`.
    pub fn new(shape: Partition, dominoes: Vec<Domino>) -> Result<Self> {
        let mut covered: Vec<Vec<bool>> = shape.parts().iter().map(|&p| vec![false; p]).collect();
        for d in &dominoes {
            let [(r0, c0), (r1, c1)] = d.cells;
            let adjacent = (r0 == r1 && c1 == c0 + 1) || (c0 == c1 && r1 == r0 + 1);
            if !adjacent {
                return Err(Error::InvalidTableau(format!("{d:?} is not a domino")));
            }
            for (r, c) in d.cells {
                if !shape.contains_cell(r, c) || covered[r][c] {
                    return Err(Error::InvalidTableau(format!("{d:?} overlaps or leaves {shape}")));
                }
                covered[r][c] = true;
            }
        }
        if covered.iter().flatten().any(|&x| !x) || 2 * dominoes.len() != shape.size() {
            return Err(Error::InvalidTableau(format!("dominoes do not tile {shape}")));
        }
        Ok(DominoTableau::from_parts(shape, dominoes))
    }

    /// Reads the label grid used in displays, where a domino shows its label
    /// in both cells. A cell whose lower neighbour has the same label is the
    /// top of a vertical domino; otherwise it pairs with its right neighbour.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let mut used = vec![vec![false; shape.part(0)]; shape.len()];
        let mut dominoes = Vec::new();
        for (r, c) in shape.cells().collect::<Vec<_>>() {
            if used[r][c] {
                continue;
            }
            let label = rows[r][c];
            let other = if rows.get(r + 1).and_then(|row| row.get(c)) == Some(&label) {
                (r + 1, c)
            } else if rows[r].get(c + 1) == Some(&label) && !used[r][c + 1] {
                (r, c + 1)
            } else {
                return Err(Error::InvalidTableau(format!("cell ({r},{c}) has no partner in {rows:?}")));
            };
            if used[other.0][other.1] {
                return Err(Error::InvalidTableau(format!("ambiguous tiling in {rows:?}")));
            }
            used[r][c] = true;
            used[other.0][other.1] = true;
            dominoes.push(Domino { label, cells: [(r, c), other] });
        }
        let t = DominoTableau::new(shape, dominoes)?;
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau(format!("{rows:?} is not semistandard")));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// Number of dominoes.
    pub fn size(&self) -> usize {
        self.dominoes.len()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self.shape.parts().iter().map(|&p| vec![0; p]).collect();
        for d in &self.dominoes {
            for (r, c) in d.cells {
                rows[r][c] = d.label;
            }
        }
        rows
    }

    fn domino_grid(&self) -> Vec<Vec<usize>> {
        let mut g: Vec<Vec<usize>> = self.shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (k, d) in self.dominoes.iter().enumerate() {
            for (r, c) in d.cells {
                g[r][c] = k;
            }
        }
        g
    }

    /// Pairs of dominoes `(a, b, horizontal)` where a cell of `a` lies directly
    /// left of (or above) a cell of `b`.
    fn neighbours(&self) -> Vec<(usize, usize, bool)> {
        let g = self.domino_grid();
        let mut out = Vec::new();
        for (r, c) in self.shape.cells() {
            if c + 1 < self.shape.part(r) && g[r][c] != g[r][c + 1] {
                out.push((g[r][c], g[r][c + 1], true));
            }
            if self.shape.contains_cell(r + 1, c) && g[r][c] != g[r + 1][c] {
                out.push((g[r][c], g[r + 1][c], false));
            }
        }
        out
    }

    /// Labels are `1..=n`, strictly increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        self.dominoes.iter().enumerate().all(|(i, d)| d.label == i as u32 + 1)
            && self.neighbours().iter().all(|&(a, b, _)| self.dominoes[a].label < self.dominoes[b].label)
    }

    /// Weak rows, strict columns, and a vertical domino in the corner cell
    /// is not labelled 0.
    pub fn is_semistandard(&self) -> bool {
        let ok = self.neighbours().iter().all(|&(a, b, horizontal)| {
            let (x, y) = (self.dominoes[a].label, self.dominoes[b].label);
            if horizontal {
                x <= y
            } else {
                x < y
            }
        });
        let corner = self.dominoes.iter().find(|d| d.cells[0] == (0, 0));
        ok && !matches!(corner, Some(d) if d.is_vertical() && d.label == 0)
    }

    fn by_label(&self, label: u32) -> Option<&Domino> {
        self.dominoes.iter().find(|d| d.label == label)
    }

    /// `i ∈ Des` iff the northeast cell of domino `i+1` is in a lower row than
    /// that of domino `i`. Meaningful for standard tableaux.
    pub fn des(&self) -> DescentSet {
        let n = self.size() as u32;
        (1..n)
            .filter(|&i| {
                let a = self.by_label(i).map(|d| d.northeast().0);
                let b = self.by_label(i + 1).map(|d| d.northeast().0);
                b > a
            })
            .map(|i| i as usize)
            .collect()
    }

    /// `Des` together with 0 when domino 1 is vertical.
    pub fn des_b(&self) -> DescentSet {
        let mut d = self.des();
        if self.by_label(1).is_some_and(Domino::is_vertical) {
            d.insert(0);
        }
        d
    }

    pub fn ldes(&self) -> usize {
        self.des_b().max().unwrap_or(0)
    }

    /// Number of dominoes with each label `0..=max`.
    pub fn content(&self, max: u32) -> Vec<usize> {
        let mut out = vec![0; max as usize + 1];
        for d in &self.dominoes {
            out[d.label as usize] += 1;
        }
        out
    }

    /// Shape covered by dominoes with label at most `v`.
    pub fn shape_up_to(&self, v: u32) -> Partition {
        let mut parts = vec![0; self.shape.len()];
        for d in self.dominoes.iter().filter(|d| d.label <= v) {
            for (r, _) in d.cells {
                parts[r] += 1;
            }
        }
        Partition::new(parts).expect("labels below a threshold form a partition")
    }

    /// Same tableau with the labels of two dominoes exchanged; used to build
    /// corrupted inputs in harness self-tests.
    pub fn with_swapped_labels(&self, a: u32, b: u32) -> DominoTableau {
        let dominoes = self
            .dominoes
            .iter()
            .map(|d| {
                let label = if d.label == a {
                    b
                } else if d.label == b {
                    a
                } else {
                    d.label
                };
                Domino { label, ..*d }
            })
            .collect();
        DominoTableau::from_parts(self.shape.clone(), dominoes)
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        for (r, row) in rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// All domino tilings of `shape`, placing a domino on the first untiled cell
/// in row-major order (horizontal before vertical).
pub fn enumerate_tilings(shape: &Partition) -> Vec<Vec<[Cell; 2]>> {
    fn rec(shape: &Partition, used: &mut Vec<Vec<bool>>, cur: &mut Vec<[Cell; 2]>, out: &mut Vec<Vec<[Cell; 2]>>) {
        let Some((r, c)) = shape.cells().find(|&(r, c)| !used[r][c]) else {
            out.push(cur.clone());
            return;
        };
        let mut place = |other: Cell, used: &mut Vec<Vec<bool>>, cur: &mut Vec<[Cell; 2]>| {
            used[r][c] = true;
            used[other.0][other.1] = true;
            cur.push([(r, c), other]);
            rec(shape, used, cur, out);
            cur.pop();
            used[r][c] = false;
            used[other.0][other.1] = false;
        };
        if shape.contains_cell(r, c + 1) && !used[r][c + 1] {
            place((r, c + 1), used, cur);
        }
        if shape.contains_cell(r + 1, c) {
            place((r + 1, c), used, cur);
        }
    }
    let mut used: Vec<Vec<bool>> = shape.parts().iter().map(|&p| vec![false; p]).collect();
    let mut out = Vec::new();
    rec(shape, &mut used, &mut Vec::new(), &mut out);
    out
}

fn require_domino_shape(shape: &Partition) -> Result<()> {
    if two_core_is_empty(shape) {
        Ok(())
    } else {
        Err(Error::NonEmptyTwoCore(shape.to_string()))
    }
}

/// `(predecessors, horizontal flags)` of each domino in a tiling: `a` precedes
/// `b` when a cell of `a` is directly left of or above a cell of `b`.
fn tiling_relations(shape: &Partition, tiling: &[[Cell; 2]]) -> Vec<(usize, usize, bool)> {
    let dominoes: Vec<Domino> = tiling.iter().map(|&cells| Domino { label: 0, cells }).collect();
    DominoTableau { shape: shape.clone(), dominoes }.neighbours()
}

/// All standard domino tableaux of `shape`: every tiling, labelled by every
/// linear extension of its domino order. Sorted.
pub fn enumerate_sdt(shape: &Partition) -> Result<Vec<DominoTableau>> {
    require_domino_shape(shape)?;
    let mut out = Vec::new();
    for tiling in enumerate_tilings(shape) {
        let m = tiling.len();
        let mut preds = vec![0u64; m];
        for (a, b, _) in tiling_relations(shape, &tiling) {
            preds[b] |= 1 << a;
        }
        let mut labels = vec![0u32; m];
        fn rec(
            k: u32,
            done: u64,
            preds: &[u64],
            labels: &mut Vec<u32>,
            tiling: &[[Cell; 2]],
            shape: &Partition,
            out: &mut Vec<DominoTableau>,
        ) {
            if k as usize > preds.len() {
                let dominoes =
                    tiling.iter().zip(labels.iter()).map(|(&cells, &label)| Domino { label, cells }).collect();
                out.push(DominoTableau::from_parts(shape.clone(), dominoes));
                return;
            }
            for d in 0..preds.len() {
                if done & (1 << d) == 0 && preds[d] & !done == 0 {
                    labels[d] = k;
                    rec(k + 1, done | (1 << d), preds, labels, tiling, shape, out);
                }
            }
        }
        rec(1, 0, &preds, &mut labels, &tiling, shape, &mut out);
    }
    out.sort();
    Ok(out)
}

/// All semistandard domino tableaux of `shape` with labels in `0..=max_label`. Sorted.
pub fn enumerate_ssdt(shape: &Partition, max_label: u32) -> Result<Vec<DominoTableau>> {
    require_domino_shape(shape)?;
    let mut out = Vec::new();
    for tiling in enumerate_tilings(shape) {
        let m = tiling.len();
        let rel = tiling_relations(shape, &tiling);
        let corner_vertical = tiling.iter().position(|d| d[0] == (0, 0) && d[1] == (1, 0));
        let mut labels: Vec<Option<u32>> = vec![None; m];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            d: usize,
            max_label: u32,
            rel: &[(usize, usize, bool)],
            corner_vertical: Option<usize>,
            labels: &mut Vec<Option<u32>>,
            tiling: &[[Cell; 2]],
            shape: &Partition,
            out: &mut Vec<DominoTableau>,
        ) {
            if d == labels.len() {
                let dominoes = tiling
                    .iter()
                    .zip(labels.iter())
                    .map(|(&cells, &label)| Domino { label: label.unwrap(), cells })
                    .collect();
                out.push(DominoTableau::from_parts(shape.clone(), dominoes));
                return;
            }
            let lo = if corner_vertical == Some(d) { 1 } else { 0 };
            for v in lo..=max_label {
                labels[d] = Some(v);
                let ok = rel.iter().all(|&(a, b, horizontal)| match (labels[a], labels[b]) {
                    (Some(x), Some(y)) if a == d || b == d => {
                        if horizontal {
                            x <= y
                        } else {
                            x < y
                        }
                    }
                    _ => true,
                });
                if ok {
                    rec(d + 1, max_label, rel, corner_vertical, labels, tiling, shape, out);
                }
            }
            labels[d] = None;
        }
        rec(0, max_label, &rel, corner_vertical, &mut labels, &tiling, shape, &mut out);
    }
    out.sort();
    Ok(out)
}

/// `f_2^λ = n! / ∏_{even hooks h} (h/2)`.
pub fn domino_hook_count(shape: &Partition) -> Result<u128> {
    require_domino_shape(shape)?;
    let n = shape.size() / 2;
    let prod: u128 =
        shape.cells().map(|(r, c)| shape.hook(r, c)).filter(|h| h % 2 == 0).map(|h| (h / 2) as u128).product();
    Ok(crate::factorial(n as u64) / prod)
}
