//! The Carré–Leclerc correspondence from domino tableaux to bi-tableaux.
//!
//! Colour the diagram like a checkerboard with the corner cell negative. A
//! domino belongs to the minus component when its upper-right cell is
//! negative. Where it lands inside that component is read off the growth of
//! 2-quotients along the chain of shapes `{label ≤ v}`.

use super::quotient::two_quotient;
use super::{BiTableau, DominoTableau, Partition, Tableau};
use crate::error::{Error, Result};

fn is_negative_cell((r, c): (usize, usize)) -> bool {
    (r + c) % 2 == 0
}

/// Cells of `big` not in `small`, per row: `(row, first col, last col + 1)`.
fn skew_rows(big: &Partition, small: &Partition) -> Vec<(usize, usize, usize)> {
    (0..big.len()).filter(|&r| big.part(r) > small.part(r)).map(|r| (r, small.part(r), big.part(r))).collect()
}

fn place(rows: &mut Vec<Vec<Option<u32>>>, big: &Partition, small: &Partition, label: u32) {
    for (r, a, b) in skew_rows(big, small) {
        while rows.len() <= r {
            rows.push(Vec::new());
        }
        if rows[r].len() < b {
            rows[r].resize(b, None);
        }
        for cell in &mut rows[r][a..b] {
            *cell = Some(label);
        }
    }
}

fn finish(rows: Vec<Vec<Option<u32>>>) -> Result<Tableau> {
    let rows: Vec<Vec<u32>> = rows
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.expect("every quotient cell is labelled")).collect())
        .collect();
    Tableau::from_rows(rows)
}

/// The bi-tableau image `(T^-, T^+)`; content is preserved for semistandard
/// input. Returns an error if the growth of 2-quotients disagrees with the
/// sign rule, which would indicate a malformed tableau.
pub fn carre_leclerc_checked(t: &DominoTableau) -> Result<(Tableau, Tableau)> {
    let mut labels: Vec<u32> = t.dominoes().iter().map(|d| d.label).collect();
    labels.dedup();
    let mut minus: Vec<Vec<Option<u32>>> = Vec::new();
    let mut plus: Vec<Vec<Option<u32>>> = Vec::new();
    let mut prev = (Partition::empty(), Partition::empty());
    for &v in &labels {
        let shape = t.shape_up_to(v);
        let cur = two_quotient(&shape)?;
        if !cur.0.contains(&prev.0) || !cur.1.contains(&prev.1) {
            return Err(Error::InvalidTableau(format!("quotient growth not monotone at label {v}")));
        }
        let expected_minus = t.dominoes().iter().filter(|d| d.label == v && is_negative_cell(d.northeast())).count();
        let expected_plus = t.dominoes().iter().filter(|d| d.label == v).count() - expected_minus;
        if cur.0.size() - prev.0.size() != expected_minus || cur.1.size() - prev.1.size() != expected_plus {
            return Err(Error::InvalidTableau(format!("sign rule disagrees with quotient growth at label {v}")));
        }
        place(&mut minus, &cur.0, &prev.0, v);
        place(&mut plus, &cur.1, &prev.1, v);
        prev = cur;
    }
    Ok((finish(minus)?, finish(plus)?))
}

/// The Carré–Leclerc image of a standard domino tableau.
pub fn carre_leclerc(t: &DominoTableau) -> Result<BiTableau> {
    let (minus, plus) = carre_leclerc_checked(t)?;
    BiTableau::new(minus, plus)
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_bsyt, enumerate_sdt, enumerate_ssdt, quotient::domino_shapes};
    use super::*;
    use std::collections::BTreeSet;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let t = DominoTableau::from_rows(vec![vec![1, 2, 4, 4], vec![1, 2], vec![3, 3]]).unwrap();
        assert!(t.is_standard());
        let b = carre_leclerc(&t).unwrap();
        assert_eq!(b.minus.rows(), &[vec![1]]);
        assert_eq!(b.plus.rows(), &[vec![2, 4], vec![3]]);
        assert_eq!(b.des_b(), t.des_b());
        assert_eq!(b.des_b().to_vec(), vec![0, 2]);
    }

    #[test]
    fn bijective_onto_bsyt() {
        for n in 1..=5 {
            for lam in domino_shapes(n) {
                let (lm, lp) = two_quotient(&lam).unwrap();
                let image: BTreeSet<BiTableau> =
                    enumerate_sdt(&lam).unwrap().iter().map(|t| carre_leclerc(t).unwrap()).collect();
                let target: BTreeSet<BiTableau> = enumerate_bsyt(&lm, &lp).into_iter().collect();
                assert_eq!(image, target, "{lam}");
            }
        }
    }

    #[test]
    fn descent_preserving_on_hook_shapes() {
        for n in 2..=5usize {
            for k in 1..=n / 2 {
                let lam = part(&[2 * n - 2 * k, 2 * k - 1, 1]);
                for t in enumerate_sdt(&lam).unwrap() {
                    assert_eq!(carre_leclerc(&t).unwrap().des_b(), t.des_b(), "{t:?}");
                }
            }
        }
    }

    #[test]
    fn content_preserving_on_ssdt() {
        for n in 1..=3 {
            for lam in domino_shapes(n) {
                let all = enumerate_ssdt(&lam, 2).unwrap();
                let mut seen = BTreeSet::new();
                for t in &all {
                    let (m, p) = carre_leclerc_checked(t).unwrap();
                    assert!(m.is_semistandard() && p.is_semistandard());
                    assert!(m.entries().all(|v| v >= 1), "label 0 in minus part for {t:?}");
                    let mut c = m.content(2);
                    for (i, x) in p.content(2).into_iter().enumerate() {
                        c[i] += x;
                    }
                    assert_eq!(c, t.content(2));
                    assert!(seen.insert((m, p)), "not injective on {lam}");
                }
            }
        }
    }
}
