use std::collections::BTreeMap;

use num_traits::Zero;

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `c` to entry `(r, k)`, dropping it if the sum is zero.
    pub fn add(&mut self, r: usize, k: usize, c: Rational) {
        assert!(
            r < self.rows && k < self.cols,
            "entry ({r},{k}) out of bounds"
        );
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry((r, k)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&(r, k));
        }
    }

    pub fn get(&self, r: usize, k: usize) -> Rational {
        self.entries
            .get(&(r, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (&(r, k), v) in &self.entries {
            d[r][k] = v.clone();
        }
        d
    }
}

/// Rank and kernel dimension (of the map on column vectors) by exact sparse elimination.
pub fn rank_and_kernel(m: &SparseMatrix) -> (usize, usize) {
    let mut rows: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); m.rows];
    for (&(r, k), v) in &m.entries {
        rows[r].insert(k, v.clone());
    }
    rows.retain(|r| !r.is_empty());
    // pivot column -> reduced row with leading entry 1 at that column
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                break;
            };
            match pivots.get(&lead) {
                Some(p) => {
                    let c = row[&lead].clone();
                    for (k, v) in p {
                        let e = row.entry(*k).or_insert_with(Rational::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    let c = row[&lead].clone();
                    for v in row.values_mut() {
                        *v /= &c;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    let rank = pivots.len();
    (rank, m.cols - rank)
}
