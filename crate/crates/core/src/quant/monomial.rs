use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{fmt_rat, int, parse_rat, sgn, HPoly, Lin, Rational};
use crate::frobenius::FrobeniusAlgebra;
use crate::sign::koszul_sign;

/// A product of height-labeled necklaces with heights normalized to `0..len`.
///
/// `letters[h]` is the coideal letter at height `h` and `succ[h]` the height
/// of the next letter of the same necklace. The necklaces are the cycles of
/// `succ`.
///
/// The basis vector of a monomial is its canonical writing: necklaces in
/// order of their lowest height, each written from its lowest letter, and each
/// preceded by a marker of degree `2 - m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    letters: Vec<usize>,
    succ: Vec<usize>,
}

/// Necklaces written as cyclic sequences of `(letter, height key)`. Keys only
/// matter through their relative order and must be distinct.
pub type Written = Vec<Vec<(usize, i64)>>;

/// Linear combinations `Σ c·h^e·X`, keyed by `(monomial, e)`.
pub type QuantElement = Lin<(Monomial, usize)>;

/// `n`-fold tensors of monomials with an `h` exponent.
pub type QuantTensor = Lin<(Vec<Monomial>, usize)>;

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// Builds a monomial from raw tables; `None` unless `succ` is a permutation.
    pub fn from_parts(letters: Vec<usize>, succ: Vec<usize>) -> Option<Self> {
        if letters.len() != succ.len() {
            return None;
        }
        let mut seen = vec![false; succ.len()];
        for &s in &succ {
            if s >= succ.len() || seen[s] {
                return None;
            }
            seen[s] = true;
        }
        Some(Monomial { letters, succ })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn succ(&self) -> &[usize] {
        &self.succ
    }

    /// Necklaces as height lists, each from its lowest height, ordered by lowest height.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                c.push(p);
                p = self.succ[p];
            }
            out.push(c);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// The canonical writing with height keys `0..len`.
    pub fn written(&self) -> Written {
        self.components()
            .into_iter()
            .map(|c| c.into_iter().map(|h| (self.letters[h], h as i64)).collect())
            .collect()
    }

    /// Internal degree, without any power of `h`.
    pub fn degree(&self, a: &FrobeniusAlgebra) -> i64 {
        let letters: i64 = self.letters.iter().map(|&x| a.shifted_degree(x)).sum();
        letters + self.component_count() as i64 * (2 - a.frobenius_degree())
    }

    /// Displays the canonical writing, e.g. `N[(a,1)|(t,2)] * N[(b,3)]`.
    pub fn display(&self, a: &FrobeniusAlgebra) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.components()
            .iter()
            .map(|c| {
                let body: Vec<String> = c
                    .iter()
                    .map(|&h| format!("({},{})", a.gen_name(self.letters[h]), h + 1))
                    .collect();
                format!("N[{}]", body.join("|"))
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

/// Degree of `h`.
pub fn h_degree(a: &FrobeniusAlgebra) -> i64 {
    2 * (a.frobenius_degree() - 2)
}

/// Degree of a term `h^e·X`.
pub fn term_degree(a: &FrobeniusAlgebra, x: &Monomial, e: usize) -> i64 {
    x.degree(a) + e as i64 * h_degree(a)
}

/// Renormalizes a writing to a monomial and returns the Koszul sign `s` with
/// `writing = s·monomial`. Returns `None` when some necklace is empty.
pub fn canonicalize(a: &FrobeniusAlgebra, w: &Written) -> Option<(i32, Monomial)> {
    if w.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut keys: Vec<(i64, usize, usize)> = Vec::new();
    for (ci, c) in w.iter().enumerate() {
        for (pi, &(_, k)) in c.iter().enumerate() {
            keys.push((k, ci, pi));
        }
    }
    keys.sort_unstable();
    debug_assert!(
        keys.windows(2).all(|p| p[0].0 != p[1].0),
        "height keys must be distinct"
    );
    let n = keys.len();
    let mut rank: Vec<Vec<usize>> = w.iter().map(|c| vec![0; c.len()]).collect();
    let mut letters = vec![0; n];
    for (r, &(_, ci, pi)) in keys.iter().enumerate() {
        rank[ci][pi] = r;
        letters[r] = w[ci][pi].0;
    }
    let mut succ = vec![0; n];
    for (ci, c) in w.iter().enumerate() {
        for pi in 0..c.len() {
            succ[rank[ci][pi]] = rank[ci][(pi + 1) % c.len()];
        }
    }

    // Items in written order: each necklace is a marker followed by its letters.
    let marker = 2 - a.frobenius_degree();
    let mut degrees = Vec::with_capacity(n + w.len());
    let mut start = Vec::with_capacity(w.len());
    for c in w {
        start.push(degrees.len());
        degrees.push(marker);
        degrees.extend(c.iter().map(|&(x, _)| a.shifted_degree(x)));
    }
    let mut comps: Vec<(usize, usize, usize)> = w
        .iter()
        .enumerate()
        .map(|(ci, _)| {
            let (pmin, rmin) = rank[ci]
                .iter()
                .enumerate()
                .min_by_key(|&(_, r)| *r)
                .map(|(p, r)| (p, *r))
                .unwrap();
            (rmin, ci, pmin)
        })
        .collect();
    comps.sort_unstable();
    let mut order = Vec::with_capacity(degrees.len());
    for &(_, ci, pmin) in &comps {
        order.push(start[ci]);
        let len = w[ci].len();
        for k in 0..len {
            order.push(start[ci] + 1 + (pmin + k) % len);
        }
    }
    Some((koszul_sign(&degrees, &order), Monomial { letters, succ }))
}

/// Adds `c·h^e·writing` to `out`.
pub fn add_written(
    a: &FrobeniusAlgebra,
    out: &mut QuantElement,
    w: &Written,
    e: usize,
    c: &Rational,
) {
    if let Some((s, m)) = canonicalize(a, w) {
        out.add_term((m, e), c * sgn(s));
    }
}

/// Groups an element by monomial with polynomial coefficients.
pub fn collect_h(x: &QuantElement) -> BTreeMap<Monomial, HPoly> {
    let mut out: BTreeMap<Monomial, HPoly> = BTreeMap::new();
    for ((m, e), c) in x.iter() {
        let entry = out.entry(m.clone()).or_insert_with(HPoly::zero);
        *entry = &*entry + &HPoly::monomial(c.clone(), *e);
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// The `h^0` part.
pub fn mod_h(x: &QuantElement) -> QuantElement {
    x.map_keys(|(m, e)| (*e == 0).then(|| ((m.clone(), 0), int(1))))
}

/// `x·h^k`.
pub fn shift_h(x: &QuantElement, k: usize) -> QuantElement {
    x.map_keys(|(m, e)| Some(((m.clone(), e + k), int(1))))
}

fn fmt_coeff(p: &HPoly) -> String {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if nonzero == 1 && p.degree() == Some(0) {
        let c = &p.coeffs()[0];
        if *c == int(1) {
            return String::new();
        }
        if *c == int(-1) {
            return "-".to_string();
        }
        return format!("{} ", fmt_rat(c));
    }
    format!("({p}) ")
}

pub fn fmt_element(a: &FrobeniusAlgebra, x: &QuantElement) -> String {
    let terms = collect_h(x);
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(m, p)| format!("{}{}", fmt_coeff(p), m.display(a)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn fmt_tensor(a: &FrobeniusAlgebra, t: &QuantTensor) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut grouped: BTreeMap<&Vec<Monomial>, HPoly> = BTreeMap::new();
    for ((ms, e), c) in t.iter() {
        let entry = grouped.entry(ms).or_insert_with(HPoly::zero);
        *entry = &*entry + &HPoly::monomial(c.clone(), *e);
    }
    grouped
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(ms, p)| {
            format!(
                "{}{}",
                fmt_coeff(p),
                ms.iter()
                    .map(|m| m.display(a))
                    .collect::<Vec<_>>()
                    .join(" ⊗ ")
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Parses a writing such as `N[(a,1)|(t,3)] * N[(b,2)]`, or `1` for the unit.
pub fn parse_written(a: &FrobeniusAlgebra, s: &str) -> Result<Written> {
    parse_written_over(a, s, a.letters())
}

/// As [`parse_written`], accepting the given letters.
pub fn parse_written_over(a: &FrobeniusAlgebra, s: &str, letters: &[usize]) -> Result<Written> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let bad = |msg: String| Error::Expression(msg);
    let mut out = Vec::new();
    for part in s.split('*') {
        let part = part.trim();
        let body = part
            .strip_prefix("N[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad(format!("expected N[...] necklace, got `{part}`")))?;
        let mut comp = Vec::new();
        for item in body.split('|') {
            let item = item.trim();
            let inner = item
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad(format!("expected (letter,height), got `{item}`")))?;
            let (name, height) = inner
                .split_once(',')
                .ok_or_else(|| bad(format!("expected (letter,height), got `{item}`")))?;
            let x = a
                .index_of(name.trim())
                .ok_or_else(|| bad(format!("unknown generator `{}`", name.trim())))?;
            if !letters.contains(&x) {
                return Err(bad(format!("`{}` is not an allowed letter", name.trim())));
            }
            let h: i64 = height
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad height `{}`", height.trim())))?;
            comp.push((x, h));
        }
        out.push(comp);
    }
    let mut hs: Vec<i64> = out.iter().flatten().map(|&(_, h)| h).collect();
    hs.sort_unstable();
    if hs.windows(2).any(|p| p[0] == p[1]) {
        return Err(bad("heights must be distinct".to_string()));
    }
    Ok(out)
}

/// Parses `c₁ X₁ + c₂ X₂ + …` where each `Xᵢ` is a writing and `cᵢ` an optional rational.
pub fn parse_element(a: &FrobeniusAlgebra, s: &str) -> Result<QuantElement> {
    parse_element_over(a, s, a.letters())
}

/// As [`parse_element`], accepting the given letters.
pub fn parse_element_over(
    a: &FrobeniusAlgebra,
    s: &str,
    letters: &[usize],
) -> Result<QuantElement> {
    let mut out = QuantElement::new();
    for term in s.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Expression(format!("empty term in `{s}`")));
        }
        let (coef, rest) = match term.find('N') {
            Some(i) => term.split_at(i),
            None => (term, "1"),
        };
        let coef = coef.trim();
        let c = match coef {
            "" => int(1),
            "-" => int(-1),
            _ => parse_rat(coef)
                .ok_or_else(|| Error::Expression(format!("bad coefficient `{coef}`")))?,
        };
        let w = parse_written_over(a, rest, letters)?;
        add_written(a, &mut out, &w, 0, &c);
    }
    Ok(out)
}
