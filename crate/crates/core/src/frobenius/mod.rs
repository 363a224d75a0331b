//! DG open Frobenius algebras given by structure constants.
//!
//! Degrees are homological and non-negative. With Frobenius degree `m` the
//! product has degree `-m`, the coproduct and counit degree `0`, and `d`
//! degree `-1`. The sign conventions checked by [`validate_frobenius`] are
//!
//! * `y·x = (-1)^{|x||y|+m} x·y`
//! * `(x·y)·z = (-1)^{m(|x|+1)} x·(y·z)`
//! * `d(x·y) = (-1)^m (dx·y + (-1)^{|x|} x·dy)`
//! * `Δ(x·y) = Σ (-1)^{m|x'|} x'⊗(x''·y) = Σ (x·y')⊗y''`
//!
//! with the coalgebra structure plainly coassociative and cocommutative under
//! the Koszul swap.

mod builtins;
mod kunneth;
mod parse;
mod validate;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

pub use builtins::{builtin, builtin_names, BUILTINS};
pub use kunneth::kunneth;
pub use parse::{load_frobenius, to_document};
pub use validate::{validate_frobenius, AxiomResult, ValidationReport};

use crate::error::{Error, Result};
use crate::exact::{Lin, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

/// Raw structure-constant tables, indexed by basis position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub name: String,
    pub frobenius_degree: i64,
    pub simply_connected: bool,
    pub basis: Vec<Generator>,
    pub unit: usize,
    pub counit: Vec<Rational>,
    pub differential: Vec<Lin<usize>>,
    pub product: BTreeMap<(usize, usize), Lin<usize>>,
    pub coproduct: Vec<Lin<(usize, usize)>>,
}

impl Tables {
    pub fn new(name: &str, m: i64, basis: &[(&str, i64)], unit: &str) -> Self {
        let n = basis.len();
        let basis: Vec<Generator> = basis
            .iter()
            .map(|(s, d)| Generator {
                name: s.to_string(),
                degree: *d,
            })
            .collect();
        let unit = basis
            .iter()
            .position(|g| g.name == unit)
            .expect("unit in basis");
        Tables {
            name: name.to_string(),
            frobenius_degree: m,
            simply_connected: true,
            basis,
            unit,
            counit: vec![Rational::zero(); n],
            differential: vec![Lin::new(); n],
            product: BTreeMap::new(),
            coproduct: vec![Lin::new(); n],
        }
    }

    pub fn index(&self, name: &str) -> usize {
        self.basis
            .iter()
            .position(|g| g.name == name)
            .unwrap_or_else(|| panic!("unknown generator {name}"))
    }

    pub fn set_counit(&mut self, x: &str, c: Rational) {
        let i = self.index(x);
        self.counit[i] = c;
    }

    pub fn add_d(&mut self, x: &str, c: Rational, y: &str) {
        let (i, j) = (self.index(x), self.index(y));
        self.differential[i].add_term(j, c);
    }

    pub fn add_product(&mut self, x: &str, y: &str, c: Rational, z: &str) {
        let (i, j, k) = (self.index(x), self.index(y), self.index(z));
        self.product.entry((i, j)).or_default().add_term(k, c);
        if self.product[&(i, j)].is_zero() {
            self.product.remove(&(i, j));
        }
    }

    pub fn add_coproduct(&mut self, x: &str, c: Rational, y: &str, z: &str) {
        let (i, j, k) = (self.index(x), self.index(y), self.index(z));
        self.coproduct[i].add_term((j, k), c);
    }
}

/// A DG open Frobenius algebra together with its coaugmentation coideal data.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    tables: Tables,
    /// Basis positions spanning `C = V / k·e₀`, in basis order.
    coideal: Vec<usize>,
    /// `Δ̄` on each basis position (empty on `e₀`).
    reduced: Vec<Lin<(usize, usize)>>,
    /// `d` followed by the projection to `C`.
    dbar: Vec<Lin<usize>>,
    pairing: BTreeMap<(usize, usize), Rational>,
}

/// Basis of `C` with the reduced coproduct `Δ̄(x) = Δ(x) - e₀⊗x - x⊗e₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealBasis {
    pub elements: Vec<usize>,
    pub reduced_coproduct: BTreeMap<usize, Lin<(usize, usize)>>,
}

impl FrobeniusAlgebra {
    /// Checks degrees of every listed constant and assembles the algebra.
    /// Axioms are not checked here; see [`validate_frobenius`].
    pub fn new(tables: Tables) -> Result<Self> {
        let t = &tables;
        let n = t.basis.len();
        let m = t.frobenius_degree;
        let deg = |i: usize| t.basis[i].degree;
        let name = |i: usize| t.basis[i].name.as_str();
        if m < 2 {
            return Err(Error::Degree(format!(
                "frobenius_degree must be at least 2, got {m}"
            )));
        }
        if let Some(g) = t.basis.iter().find(|g| g.degree < 0) {
            return Err(Error::Degree(format!(
                "generator {} has negative degree {}",
                g.name, g.degree
            )));
        }
        if deg(t.unit) != 0 {
            return Err(Error::Degree(format!(
                "unit {} must have degree 0",
                name(t.unit)
            )));
        }
        for i in 0..n {
            if !t.counit[i].is_zero() && deg(i) != 0 {
                return Err(Error::Degree(format!(
                    "counit is nonzero on {} of degree {}",
                    name(i),
                    deg(i)
                )));
            }
            for (j, _) in t.differential[i].iter() {
                if deg(*j) != deg(i) - 1 {
                    return Err(Error::Degree(format!(
                        "d {} -> {} does not lower degree by 1",
                        name(i),
                        name(*j)
                    )));
                }
            }
            for ((j, k), _) in t.coproduct[i].iter() {
                if deg(*j) + deg(*k) != deg(i) {
                    return Err(Error::Degree(format!(
                        "coproduct {} -> ({} ⊗ {}) is not of degree 0",
                        name(i),
                        name(*j),
                        name(*k)
                    )));
                }
            }
        }
        for ((i, j), v) in &t.product {
            for (k, _) in v.iter() {
                if deg(*k) != deg(*i) + deg(*j) - m {
                    return Err(Error::Degree(format!(
                        "product {} {} -> {} is not of degree -{}",
                        name(*i),
                        name(*j),
                        name(*k),
                        m
                    )));
                }
            }
        }
        let u = t.unit;
        let coideal: Vec<usize> = (0..n).filter(|&i| i != u).collect();
        let reduced = (0..n)
            .map(|i| {
                if i == u {
                    return Lin::new();
                }
                t.coproduct[i]
                    .iter()
                    .filter(|((a, b), _)| *a != u && *b != u)
                    .map(|(k, c)| (*k, c.clone()))
                    .collect()
            })
            .collect();
        let dbar = t
            .differential
            .iter()
            .map(|l| {
                l.iter()
                    .filter(|(j, _)| **j != u)
                    .map(|(j, c)| (*j, c.clone()))
                    .collect()
            })
            .collect();
        let mut pairing = BTreeMap::new();
        for ((i, j), v) in &t.product {
            let mut s = Rational::zero();
            for (k, c) in v.iter() {
                s += c * &t.counit[*k];
            }
            if !s.is_zero() {
                pairing.insert((*i, *j), s);
            }
        }
        Ok(FrobeniusAlgebra {
            tables,
            coideal,
            reduced,
            dbar,
            pairing,
        })
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn name(&self) -> &str {
        &self.tables.name
    }

    pub fn frobenius_degree(&self) -> i64 {
        self.tables.frobenius_degree
    }

    pub fn simply_connected(&self) -> bool {
        self.tables.simply_connected
    }

    pub fn dim(&self) -> usize {
        self.tables.basis.len()
    }

    pub fn unit(&self) -> usize {
        self.tables.unit
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.tables.basis[i].degree
    }

    /// Degree after the shift `C[1]`.
    pub fn shifted_degree(&self, i: usize) -> i64 {
        self.tables.basis[i].degree - 1
    }

    pub fn gen_name(&self, i: usize) -> &str {
        &self.tables.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.tables.basis.iter().position(|g| g.name == name)
    }

    pub fn counit(&self, i: usize) -> &Rational {
        &self.tables.counit[i]
    }

    pub fn d(&self, i: usize) -> &Lin<usize> {
        &self.tables.differential[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> Option<&Lin<usize>> {
        self.tables.product.get(&(i, j))
    }

    pub fn coproduct(&self, i: usize) -> &Lin<(usize, usize)> {
        &self.tables.coproduct[i]
    }

    /// Letters of every word: the basis of `C`.
    pub fn letters(&self) -> &[usize] {
        &self.coideal
    }

    pub fn reduced_coproduct(&self, i: usize) -> &Lin<(usize, usize)> {
        &self.reduced[i]
    }

    /// `d` on `C`.
    pub fn dbar(&self, i: usize) -> &Lin<usize> {
        &self.dbar[i]
    }

    pub fn coideal(&self) -> CoidealBasis {
        CoidealBasis {
            elements: self.coideal.clone(),
            reduced_coproduct: self
                .coideal
                .iter()
                .map(|&i| (i, self.reduced[i].clone()))
                .collect(),
        }
    }

    /// `ε(x·y)`.
    pub fn pairing(&self, x: usize, y: usize) -> Rational {
        self.pairing
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn has_pairing(&self) -> bool {
        self.pairing
            .keys()
            .any(|(i, j)| *i != self.unit() && *j != self.unit())
    }

    pub fn is_unit_counit(&self) -> bool {
        self.tables.counit[self.unit()].is_one()
    }
}
