use std::fmt;

use super::Chain;
use crate::exact::{sgn, Rational};
use crate::frobenius::FrobeniusAlgebra;
use crate::sign::pow_neg1;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of shifted letter degrees `Σ(|aᵢ| - 1)`.
    pub fn shifted_degree(&self, a: &FrobeniusAlgebra) -> i64 {
        self.0.iter().map(|&x| a.shifted_degree(x)).sum()
    }

    /// Total degree `Σ|aᵢ| - (n-1)` in the Hochschild/Connes grading.
    pub fn degree(&self, a: &FrobeniusAlgebra) -> i64 {
        self.shifted_degree(a) + 1
    }

    pub fn display(&self, a: &FrobeniusAlgebra) -> String {
        let s: Vec<&str> = self.0.iter().map(|&x| a.gen_name(x)).collect();
        format!("({})", s.join(","))
    }
}

/// The cyclic operator: moves the first letter to the end,
/// `t(a₀,…,aₙ) = (-1)^{(|a₀|-1)(εₙ-|a₀|)} (a₁,…,aₙ,a₀)`.
pub fn cyclic_t(a: &FrobeniusAlgebra, w: &Word) -> (Word, i32) {
    if w.len() <= 1 {
        return (w.clone(), 1);
    }
    let first = w.0[0];
    let en = w.degree(a);
    let s = pow_neg1(a.shifted_degree(first) * (en - a.degree(first)));
    let mut v = w.0[1..].to_vec();
    v.push(first);
    (Word(v), s)
}

/// `N(w) = Σₖ tᵏ(w)` expanded as a chain.
pub fn norm_expand(a: &FrobeniusAlgebra, w: &Word) -> Chain {
    let mut out = Chain::new();
    let mut cur = w.clone();
    let mut s = 1;
    for _ in 0..w.len() {
        out.add_term(cur.clone(), sgn(s));
        let (nw, t) = cyclic_t(a, &cur);
        cur = nw;
        s *= t;
    }
    out
}

/// Canonical rotation of `w` and the sign `s` with `N(w) = s·N(rep)`;
/// `None` when `N(w) = 0`.
pub fn canonical(a: &FrobeniusAlgebra, w: &Word) -> Option<(Word, i32)> {
    if w.is_empty() {
        return None;
    }
    let mut best: Option<(Word, i32)> = None;
    let mut cur = w.clone();
    let mut s = 1;
    for _ in 0..w.len() {
        match &best {
            Some((b, bs)) if *b == cur => {
                if *bs != s {
                    return None;
                }
            }
            Some((b, _)) if *b < cur => {}
            _ => best = Some((cur.clone(), s)),
        }
        let (nw, t) = cyclic_t(a, &cur);
        cur = nw;
        s *= t;
    }
    best
}

/// A nonzero Connes class, identified by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicClass {
    pub representative: Word,
}

impl CyclicClass {
    pub fn degree(&self, a: &FrobeniusAlgebra) -> i64 {
        self.representative.degree(a)
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    /// `N[x|y|z]`.
    pub fn display(&self, a: &FrobeniusAlgebra) -> String {
        let s: Vec<&str> = self
            .representative
            .0
            .iter()
            .map(|&x| a.gen_name(x))
            .collect();
        format!("N[{}]", s.join("|"))
    }

    pub fn expand(&self, a: &FrobeniusAlgebra) -> Chain {
        norm_expand(a, &self.representative)
    }
}

/// `N(w)` as `sign · class`, or `None` for the zero class.
pub fn norm_n(a: &FrobeniusAlgebra, w: &Word) -> Option<(CyclicClass, Rational)> {
    canonical(a, w).map(|(r, s)| (CyclicClass { representative: r }, sgn(s)))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
