use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{canonical, hochschild_b, hochschild_b_open, CyclicClass, Word};
use crate::error::{Error, Result};
use crate::exact::{rank_and_kernel, Lin, SparseMatrix};
use crate::frobenius::FrobeniusAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Hochschild,
    Cyclic,
}

/// All words over `C` of the given total degree, in lexicographic order.
/// Without the simply-connected flag a length cutoff is required.
pub fn words_of_degree(
    a: &FrobeniusAlgebra,
    degree: i64,
    max_len: Option<usize>,
) -> Result<Vec<Word>> {
    if !a.simply_connected() && max_len.is_none() {
        return Err(Error::Unbounded);
    }
    let target = degree - 1;
    let letters = a.letters();
    let min_sd = letters.iter().map(|&x| a.shifted_degree(x)).min();
    let Some(min_sd) = min_sd else {
        return Ok(Vec::new());
    };
    let cap = match max_len {
        Some(l) => l,
        None => {
            if min_sd < 1 {
                return Err(Error::Unbounded);
            }
            target.max(0) as usize / min_sd as usize
        }
    };
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        a: &FrobeniusAlgebra,
        letters: &[usize],
        cur: &mut Vec<usize>,
        sum: i64,
        target: i64,
        cap: usize,
        prune: bool,
        out: &mut Vec<Word>,
    ) {
        if !cur.is_empty() && sum == target {
            out.push(Word(cur.clone()));
        }
        if cur.len() == cap {
            return;
        }
        for &x in letters {
            let s = sum + a.shifted_degree(x);
            if prune && s > target {
                continue;
            }
            cur.push(x);
            rec(a, letters, cur, s, target, cap, prune, out);
            cur.pop();
        }
    }
    rec(a, letters, &mut cur, 0, target, cap, min_sd >= 0, &mut out);
    out.sort();
    Ok(out)
}

pub fn hochschild_basis(
    a: &FrobeniusAlgebra,
    degree: i64,
    max_len: Option<usize>,
) -> Result<Vec<Word>> {
    words_of_degree(a, degree, max_len)
}

/// Nonzero Connes classes of the given degree, sorted by representative.
pub fn connes_complex_basis(
    a: &FrobeniusAlgebra,
    degree: i64,
    max_len: Option<usize>,
) -> Result<Vec<CyclicClass>> {
    let mut out: Vec<CyclicClass> = words_of_degree(a, degree, max_len)?
        .into_iter()
        .filter_map(|w| match canonical(a, &w) {
            Some((r, _)) if r == w => Some(CyclicClass { representative: r }),
            _ => None,
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `b` on a Connes class, expressed in canonical classes.
pub fn class_boundary(a: &FrobeniusAlgebra, c: &CyclicClass) -> Lin<CyclicClass> {
    let mut out = Lin::new();
    for (w, k) in hochschild_b_open(a, &c.representative).iter() {
        if let Some((r, s)) = canonical(a, w) {
            out.add_term(CyclicClass { representative: r }, k * crate::exact::sgn(s));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub algebra: String,
    pub complex: ComplexKind,
    pub max_len: Option<usize>,
    /// `(degree, chain rank, homology dimension)`.
    pub rows: Vec<(i64, usize, usize)>,
}

impl HomologyTable {
    pub fn dimensions(&self) -> Vec<(i64, usize)> {
        self.rows.iter().map(|r| (r.0, r.2)).collect()
    }

    /// `degree<TAB>dimension` rows.
    pub fn tsv(&self) -> String {
        self.rows
            .iter()
            .map(|r| format!("{}\t{}\n", r.0, r.2))
            .collect()
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.complex {
            ComplexKind::Hochschild => "Hochschild",
            ComplexKind::Cyclic => "reduced cyclic",
        };
        write!(f, "{} homology of {}", kind, self.algebra)?;
        if let Some(l) = self.max_len {
            write!(f, " (words of length <= {l})")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "{:>8}  {:>10}  {:>9}",
            "degree", "chain rank", "dimension"
        )?;
        for (d, c, h) in &self.rows {
            writeln!(f, "{d:>8}  {c:>10}  {h:>9}")?;
        }
        Ok(())
    }
}

fn boundary_matrix<K: Ord + Clone>(
    src: &[K],
    dst: &[K],
    mut b: impl FnMut(&K) -> Lin<K>,
) -> SparseMatrix {
    let index: BTreeMap<&K, usize> = dst.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = SparseMatrix::new(dst.len(), src.len());
    for (j, s) in src.iter().enumerate() {
        for (k, c) in b(s).iter() {
            // under a length cutoff, longer words are projected away (a quotient complex)
            if let Some(&i) = index.get(k) {
                m.add(i, j, c.clone());
            }
        }
    }
    m
}

/// Homology dimension in each degree of `range`: nullity of `b` out of the
/// degree minus the rank of `b` into it.
pub fn homology_ranks(
    a: &FrobeniusAlgebra,
    kind: ComplexKind,
    range: std::ops::RangeInclusive<i64>,
    max_len: Option<usize>,
) -> Result<HomologyTable> {
    let (lo, hi) = (*range.start(), *range.end());
    let mut rows = Vec::new();
    match kind {
        ComplexKind::Hochschild => {
            let bases: Vec<Vec<Word>> = (lo - 1..=hi + 1)
                .map(|d| words_of_degree(a, d, max_len))
                .collect::<Result<_>>()?;
            let rank = |k: usize| {
                rank_and_kernel(&boundary_matrix(&bases[k], &bases[k - 1], |w| {
                    hochschild_b(a, w)
                }))
                .0
            };
            for d in lo..=hi {
                let k = (d - lo + 1) as usize;
                let n = bases[k].len();
                rows.push((d, n, n - rank(k) - rank(k + 1)));
            }
        }
        ComplexKind::Cyclic => {
            let bases: Vec<Vec<CyclicClass>> = (lo - 1..=hi + 1)
                .map(|d| connes_complex_basis(a, d, max_len))
                .collect::<Result<_>>()?;
            let rank = |k: usize| {
                rank_and_kernel(&boundary_matrix(&bases[k], &bases[k - 1], |c| {
                    class_boundary(a, c)
                }))
                .0
            };
            for d in lo..=hi {
                let k = (d - lo + 1) as usize;
                let n = bases[k].len();
                rows.push((d, n, n - rank(k) - rank(k + 1)));
            }
        }
    }
    Ok(HomologyTable {
        algebra: a.name().to_string(),
        complex: kind,
        max_len,
        rows,
    })
}
