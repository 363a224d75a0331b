//! Text document format.
//!
//! ```text
//! name S2
//! frobenius_degree 2
//! simply_connected true
//! basis
//!   e0 0
//!   e2 2
//! unit e0
//! counit
//!   e0 1
//! d
//! product
//!   e2 e2 -> 1 e2
//! coproduct
//!   e2 -> 1 (e2 ⊗ e0)
//! ```
//!
//! Unlisted constants are zero; coefficients are `p` or `p/q`; `#` starts a
//! comment. `*` is accepted in place of `⊗`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{FrobeniusAlgebra, Generator, Tables};
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, Lin, Rational};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Basis,
    Counit,
    D,
    Product,
    Coproduct,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn load_frobenius(doc: &str) -> Result<FrobeniusAlgebra> {
    let mut name = None;
    let mut m = None;
    let mut sc = None;
    let mut unit_name: Option<(usize, String)> = None;
    let mut basis: Vec<Generator> = Vec::new();
    let mut seen_basis = false;
    let mut seen_counit = false;
    let mut seen_coproduct = false;
    let mut counit: Vec<(usize, String, Rational)> = Vec::new();
    let mut d: Vec<(usize, String, Rational, String)> = Vec::new();
    let mut product: Vec<(usize, String, String, Rational, String)> = Vec::new();
    let mut coproduct: Vec<(usize, String, Rational, String, String)> = Vec::new();
    let mut section = Section::None;

    for (k, raw) in doc.lines().enumerate() {
        let ln = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (toks[0], toks.len()) {
            ("basis", 1) => {
                section = Section::Basis;
                seen_basis = true;
                continue;
            }
            ("counit", 1) => {
                section = Section::Counit;
                seen_counit = true;
                continue;
            }
            ("d", 1) => {
                section = Section::D;
                continue;
            }
            ("product", 1) => {
                section = Section::Product;
                continue;
            }
            ("coproduct", 1) => {
                section = Section::Coproduct;
                seen_coproduct = true;
                continue;
            }
            ("name", 2) => {
                name = Some(toks[1].to_string());
                section = Section::None;
                continue;
            }
            ("frobenius_degree", 2) => {
                m = Some(
                    toks[1]
                        .parse::<i64>()
                        .map_err(|_| perr(ln, format!("bad frobenius_degree {:?}", toks[1])))?,
                );
                section = Section::None;
                continue;
            }
            ("simply_connected", 2) => {
                sc = Some(match toks[1] {
                    "true" => true,
                    "false" => false,
                    s => {
                        return Err(perr(
                            ln,
                            format!("simply_connected must be true or false, got {s:?}"),
                        ))
                    }
                });
                section = Section::None;
                continue;
            }
            ("unit", 2) => {
                unit_name = Some((ln, toks[1].to_string()));
                section = Section::None;
                continue;
            }
            _ => {}
        }
        let coeff =
            |s: &str| parse_rat(s).ok_or_else(|| perr(ln, format!("bad coefficient {s:?}")));
        match section {
            Section::None => return Err(perr(ln, format!("unexpected line {line:?}"))),
            Section::Basis => {
                if toks.len() != 2 {
                    return Err(perr(ln, "basis lines are `name degree`"));
                }
                let degree = toks[1]
                    .parse::<i64>()
                    .map_err(|_| perr(ln, format!("bad degree {:?}", toks[1])))?;
                if basis.iter().any(|g| g.name == toks[0]) {
                    return Err(perr(ln, format!("duplicate generator {}", toks[0])));
                }
                basis.push(Generator {
                    name: toks[0].to_string(),
                    degree,
                });
            }
            Section::Counit => {
                if toks.len() != 2 {
                    return Err(perr(ln, "counit lines are `name value`"));
                }
                counit.push((ln, toks[0].to_string(), coeff(toks[1])?));
            }
            Section::D => {
                if toks.len() != 4 || toks[1] != "->" {
                    return Err(perr(ln, "d lines are `x -> coeff y`"));
                }
                d.push((
                    ln,
                    toks[0].to_string(),
                    coeff(toks[2])?,
                    toks[3].to_string(),
                ));
            }
            Section::Product => {
                if toks.len() != 5 || toks[2] != "->" {
                    return Err(perr(ln, "product lines are `x y -> coeff z`"));
                }
                product.push((
                    ln,
                    toks[0].to_string(),
                    toks[1].to_string(),
                    coeff(toks[3])?,
                    toks[4].to_string(),
                ));
            }
            Section::Coproduct => {
                let (x, c, y, z) = parse_coproduct_line(line)
                    .ok_or_else(|| perr(ln, "coproduct lines are `x -> coeff (y ⊗ z)`"))?;
                coproduct.push((ln, x, coeff(&c)?, y, z));
            }
        }
    }

    let name = name.ok_or(Error::MissingField("name"))?;
    let m = m.ok_or(Error::MissingField("frobenius_degree"))?;
    let sc = sc.ok_or(Error::MissingField("simply_connected"))?;
    if !seen_basis || basis.is_empty() {
        return Err(Error::MissingField("basis"));
    }
    let (uln, unit_name) = unit_name.ok_or(Error::MissingField("unit"))?;
    if !seen_counit {
        return Err(Error::MissingField("counit"));
    }
    if !seen_coproduct {
        return Err(Error::MissingField("coproduct"));
    }
    let idx: BTreeMap<&str, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, g)| (g.name.as_str(), i))
        .collect();
    let look = |ln: usize, s: &str| {
        idx.get(s)
            .copied()
            .ok_or_else(|| perr(ln, format!("unknown generator {s:?}")))
    };
    let n = basis.len();
    let unit = look(uln, &unit_name)?;
    let mut t = Tables {
        name,
        frobenius_degree: m,
        simply_connected: sc,
        basis: basis.clone(),
        unit,
        counit: vec![Rational::zero(); n],
        differential: vec![Lin::new(); n],
        product: BTreeMap::new(),
        coproduct: vec![Lin::new(); n],
    };
    for (ln, x, c) in counit {
        let i = look(ln, &x)?;
        t.counit[i] += c;
    }
    for (ln, x, c, y) in d {
        let (i, j) = (look(ln, &x)?, look(ln, &y)?);
        t.differential[i].add_term(j, c);
    }
    for (ln, x, y, c, z) in product {
        let (i, j, k) = (look(ln, &x)?, look(ln, &y)?, look(ln, &z)?);
        t.product.entry((i, j)).or_default().add_term(k, c);
    }
    t.product.retain(|_, v| !v.is_zero());
    for (ln, x, c, y, z) in coproduct {
        let (i, j, k) = (look(ln, &x)?, look(ln, &y)?, look(ln, &z)?);
        t.coproduct[i].add_term((j, k), c);
    }
    FrobeniusAlgebra::new(t)
}

fn parse_coproduct_line(line: &str) -> Option<(String, String, String, String)> {
    let (lhs, rhs) = line.split_once("->")?;
    let x = lhs.trim();
    if x.is_empty() || x.contains(char::is_whitespace) {
        return None;
    }
    let rhs = rhs.trim();
    let open = rhs.find('(')?;
    let c = rhs[..open].trim();
    let inner = rhs[open + 1..].strip_suffix(')')?;
    let (y, z) = inner.split_once('⊗').or_else(|| inner.split_once('*'))?;
    let (y, z) = (y.trim(), z.trim());
    if c.is_empty() || y.is_empty() || z.is_empty() {
        return None;
    }
    Some((x.to_string(), c.to_string(), y.to_string(), z.to_string()))
}

/// Writes the document form of an algebra; `load_frobenius` inverts it.
pub fn to_document(a: &FrobeniusAlgebra) -> String {
    let t = a.tables();
    let nm = |i: usize| t.basis[i].name.as_str();
    let mut s = String::new();
    s += &format!(
        "name {}\nfrobenius_degree {}\nsimply_connected {}\n",
        t.name, t.frobenius_degree, t.simply_connected
    );
    s += "basis\n";
    for g in &t.basis {
        s += &format!("  {} {}\n", g.name, g.degree);
    }
    s += &format!("unit {}\ncounit\n", nm(t.unit));
    for (i, c) in t.counit.iter().enumerate() {
        if !c.is_zero() {
            s += &format!("  {} {}\n", nm(i), fmt_rat(c));
        }
    }
    s += "d\n";
    for (i, l) in t.differential.iter().enumerate() {
        for (j, c) in l.iter() {
            s += &format!("  {} -> {} {}\n", nm(i), fmt_rat(c), nm(*j));
        }
    }
    s += "product\n";
    for ((i, j), l) in &t.product {
        for (k, c) in l.iter() {
            s += &format!("  {} {} -> {} {}\n", nm(*i), nm(*j), fmt_rat(c), nm(*k));
        }
    }
    s += "coproduct\n";
    for (i, l) in t.coproduct.iter().enumerate() {
        for ((j, k), c) in l.iter() {
            s += &format!("  {} -> {} ({} ⊗ {})\n", nm(i), fmt_rat(c), nm(*j), nm(*k));
        }
    }
    s
}
