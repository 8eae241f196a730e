//! Exact incremental row reduction over ℚ.

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::rat::Rat;

pub type SparseRow = BTreeMap<usize, Rat>;

/// Rows kept in echelon form as they arrive.
///
/// Each stored row is normalized at its pivot and has zeros at the pivot
/// columns of all earlier rows, so reducing a new row against the stored
/// rows in insertion order clears every pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseRow)>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Reduces `row` against the stored rows.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for (p, r) in &self.rows {
            let Some(c) = row.get(p).cloned() else { continue };
            for (col, v) in r {
                let entry = row.entry(*col).or_insert_with(Rat::zero);
                *entry = &*entry - &(&c * v);
                if entry.is_zero() {
                    row.remove(col);
                }
            }
        }
        row
    }

    /// Adds `row` to the span; returns `true` iff the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        // pivot on the entry of least numerator magnitude, then least column
        let Some((&p, pivot)) = row.iter().min_by(|(ca, a), (cb, b)| {
            (a.numer().abs(), a.denom().clone(), **ca).cmp(&(b.numer().abs(), b.denom().clone(), **cb))
        }) else {
            return false;
        };
        let inv = pivot.recip();
        let row = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.rows.push((p, row));
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        let sparse = r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect();
        e.insert(sparse);
    }
    e.rank()
}
