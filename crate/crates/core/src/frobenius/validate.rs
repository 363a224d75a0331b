use num_traits::{One, Zero};
use serde::Serialize;

use super::FrobeniusAlgebra;
use crate::exact::{sgn, Lin, Rational};
use crate::sign::pow_neg1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub passed: bool,
    /// Basis elements on which the axiom fails, if it does.
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub axioms: Vec<AxiomResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.axioms.iter().filter(|a| !a.passed)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Frobenius axioms of {}", self.algebra)?;
        for r in &self.axioms {
            write!(
                f,
                "  {:<28} {}",
                r.axiom,
                if r.passed { "PASS" } else { "FAIL" }
            )?;
            if let Some(w) = &r.witness {
                write!(f, "  witness: ({})", w.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type V = Lin<usize>;
type V2 = Lin<(usize, usize)>;
type V3 = Lin<(usize, usize, usize)>;

struct Ctx<'a> {
    a: &'a FrobeniusAlgebra,
    m: i64,
}

impl Ctx<'_> {
    fn deg(&self, i: usize) -> i64 {
        self.a.degree(i)
    }

    fn mul(&self, x: usize, y: usize) -> V {
        self.a.mul(x, y).cloned().unwrap_or_default()
    }

    fn d_lin(&self, v: &V) -> V {
        let mut out = V::new();
        for (k, c) in v.iter() {
            out.add_scaled(self.a.d(*k), c);
        }
        out
    }

    fn mul_lin_right(&self, v: &V, y: usize) -> V {
        let mut out = V::new();
        for (k, c) in v.iter() {
            out.add_scaled(&self.mul(*k, y), c);
        }
        out
    }

    fn mul_lin_left(&self, x: usize, v: &V) -> V {
        let mut out = V::new();
        for (k, c) in v.iter() {
            out.add_scaled(&self.mul(x, *k), c);
        }
        out
    }

    fn cop_lin(&self, v: &V) -> V2 {
        let mut out = V2::new();
        for (k, c) in v.iter() {
            out.add_scaled(self.a.coproduct(*k), c);
        }
        out
    }
}

pub fn validate_frobenius(a: &FrobeniusAlgebra) -> ValidationReport {
    let cx = Ctx {
        a,
        m: a.frobenius_degree(),
    };
    let n = a.dim();
    let m = cx.m;
    let names = |ix: &[usize]| {
        Some(
            ix.iter()
                .map(|&i| a.gen_name(i).to_string())
                .collect::<Vec<_>>(),
        )
    };
    let mut axioms = Vec::new();
    let mut push = |axiom: &str, witness: Option<Vec<String>>| {
        axioms.push(AxiomResult {
            axiom: axiom.to_string(),
            passed: witness.is_none(),
            witness,
        });
    };

    let w = (0..n).find(|&x| !cx.d_lin(a.d(x)).is_zero());
    push("d_squared", w.and_then(|x| names(&[x])));

    let mut w = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let lhs = cx.d_lin(&cx.mul(x, y));
            let mut rhs = cx.mul_lin_right(a.d(x), y);
            rhs.add_scaled(&cx.mul_lin_left(x, a.d(y)), &sgn(pow_neg1(cx.deg(x))));
            if lhs != rhs.scaled(&sgn(pow_neg1(m))) {
                w = names(&[x, y]);
                break 'outer;
            }
        }
    }
    push("d_derivation", w);

    let mut w = None;
    for x in 0..n {
        let lhs = cx.cop_lin(a.d(x));
        let mut rhs = V2::new();
        for ((p, q), c) in a.coproduct(x).iter() {
            for (dp, c2) in a.d(*p).iter() {
                rhs.add_term((*dp, *q), c * c2);
            }
            for (dq, c2) in a.d(*q).iter() {
                rhs.add_term((*p, *dq), c * c2 * sgn(pow_neg1(cx.deg(*p))));
            }
        }
        if lhs != rhs {
            w = names(&[x]);
            break;
        }
    }
    push("d_coderivation", w);

    let mut w = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let lhs = cx.mul(y, x);
            let rhs = cx
                .mul(x, y)
                .scaled(&sgn(pow_neg1(cx.deg(x) * cx.deg(y) + m)));
            if lhs != rhs {
                w = names(&[x, y]);
                break 'outer;
            }
        }
    }
    push("commutativity", w);

    let mut w = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = cx.mul_lin_right(&cx.mul(x, y), z);
                let rhs = cx
                    .mul_lin_left(x, &cx.mul(y, z))
                    .scaled(&sgn(pow_neg1(m * (cx.deg(x) + 1))));
                if lhs != rhs {
                    w = names(&[x, y, z]);
                    break 'outer;
                }
            }
        }
    }
    push("associativity", w);

    let mut wa = None;
    let mut wc = None;
    let mut wu = None;
    for x in 0..n {
        let mut l = V3::new();
        let mut r = V3::new();
        let mut t = V2::new();
        let mut el = V::new();
        let mut er = V::new();
        for ((p, q), c) in a.coproduct(x).iter() {
            for ((p1, p2), c2) in a.coproduct(*p).iter() {
                l.add_term((*p1, *p2, *q), c * c2);
            }
            for ((q1, q2), c2) in a.coproduct(*q).iter() {
                r.add_term((*p, *q1, *q2), c * c2);
            }
            t.add_term((*q, *p), c * sgn(pow_neg1(cx.deg(*p) * cx.deg(*q))));
            el.add_term(*q, c * a.counit(*p));
            er.add_term(*p, c * a.counit(*q));
        }
        if wa.is_none() && l != r {
            wa = names(&[x]);
        }
        if wc.is_none() && &t != a.coproduct(x) {
            wc = names(&[x]);
        }
        let id = V::single(x, Rational::one());
        if wu.is_none() && (el != id || er != id) {
            wu = names(&[x]);
        }
    }
    push("coassociativity", wa);
    push("cocommutativity", wc);
    push("counit", wu);

    let u = a.unit();
    let coaug = a.counit(u).is_one()
        && *a.coproduct(u) == V2::single((u, u), Rational::one())
        && a.d(u).is_zero();
    push("coaugmentation", if coaug { None } else { names(&[u]) });

    let w = (0..n).find(|&x| a.d(x).iter().any(|(y, c)| !(c * a.counit(*y)).is_zero()));
    push("counit_chain_map", w.and_then(|x| names(&[x])));

    let mut wl = None;
    let mut wr = None;
    for x in 0..n {
        for y in 0..n {
            let lhs = cx.cop_lin(&cx.mul(x, y));
            let mut mid = V2::new();
            for ((p, q), c) in a.coproduct(x).iter() {
                for (z, c2) in cx.mul(*q, y).iter() {
                    mid.add_term((*p, *z), c * c2 * sgn(pow_neg1(m * cx.deg(*p))));
                }
            }
            let mut rhs = V2::new();
            for ((p, q), c) in a.coproduct(y).iter() {
                for (z, c2) in cx.mul(x, *p).iter() {
                    rhs.add_term((*z, *q), c * c2);
                }
            }
            if wl.is_none() && lhs != mid {
                wl = names(&[x, y]);
            }
            if wr.is_none() && lhs != rhs {
                wr = names(&[x, y]);
            }
        }
    }
    push("module_compatibility_left", wl);
    push("module_compatibility_right", wr);

    if a.simply_connected() {
        let w = a.letters().iter().copied().find(|&x| cx.deg(x) < 2);
        push("simply_connected", w.and_then(|x| names(&[x])));
    }

    ValidationReport {
        algebra: a.name().to_string(),
        axioms,
    }
}
