use num_traits::Zero;

use crate::cyclic::{canonical, class_boundary, CyclicClass, Word};
use crate::exact::{sgn, Lin, Rational};
use crate::frobenius::FrobeniusAlgebra;
use crate::sign::{koszul_sign, pow_neg1};

pub type LieElement = Lin<CyclicClass>;
pub type TensorSquare = Lin<(CyclicClass, CyclicClass)>;
pub type TensorCube = Lin<(CyclicClass, CyclicClass, CyclicClass)>;

pub fn l_degree(a: &FrobeniusAlgebra, c: &CyclicClass) -> i64 {
    c.representative.shifted_degree(a) + 2 - a.frobenius_degree()
}

fn shifted(a: &FrobeniusAlgebra, xs: &[usize]) -> i64 {
    xs.iter().map(|&x| a.shifted_degree(x)).sum()
}

/// `N(w)` as a one-term element (zero for the empty or a vanishing word).
fn class_of(
    a: &FrobeniusAlgebra,
    w: Vec<usize>,
    coef: Rational,
) -> Option<(CyclicClass, Rational)> {
    if w.is_empty() || coef.is_zero() {
        return None;
    }
    canonical(a, &Word(w)).map(|(r, s)| (CyclicClass { representative: r }, coef * sgn(s)))
}

/// The bracket formula applied to the given representatives `x` and `y` of `N(x)` and `N(y)`:
/// for each letter pair `(xᵢ, yⱼ)` rotate `x` to end in `xᵢ` and `y` to start
/// with `yⱼ`, delete both letters, splice, and weight by `ε(xᵢ·yⱼ)`.
pub fn bracket_raw(a: &FrobeniusAlgebra, x: &[usize], y: &[usize]) -> LieElement {
    let mut out = LieElement::new();
    let (n, p) = (x.len(), y.len());
    for i in 0..n {
        let sa = pow_neg1(shifted(a, &x[..=i]) * shifted(a, &x[i + 1..]));
        for j in 0..p {
            let c = a.pairing(x[i], y[j]);
            if c.is_zero() {
                continue;
            }
            let sb = pow_neg1(shifted(a, &y[..j]) * shifted(a, &y[j..]));
            let mut w = Vec::with_capacity(n + p - 2);
            w.extend_from_slice(&x[i + 1..]);
            w.extend_from_slice(&x[..i]);
            w.extend_from_slice(&y[j + 1..]);
            w.extend_from_slice(&y[..j]);
            if let Some((k, v)) = class_of(a, w, c * sgn(sa * sb)) {
                out.add_term(k, v);
            }
        }
    }
    out
}

pub fn bracket_classes(a: &FrobeniusAlgebra, x: &CyclicClass, y: &CyclicClass) -> LieElement {
    bracket_raw(a, &x.representative.0, &y.representative.0)
}

pub fn bracket(a: &FrobeniusAlgebra, x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::new();
    for (p, c) in x.iter() {
        for (q, d) in y.iter() {
            out.add_scaled(&bracket_classes(a, p, q), &(c * d));
        }
    }
    out
}

/// The cobracket formula on the representative `x`: for each pair `i < j`
/// with `ε(xᵢ·xⱼ) ≠ 0`, split into the outer word `B` and inner word `A`,
/// signed by rearranging `x` into `B xᵢ xⱼ A` (times `(-1)^{|xⱼ|}` for odd `m`),
/// and antisymmetrize
/// `B⊗A - (-1)^{|A||B|} A⊗B`.
pub fn cobracket_raw(a: &FrobeniusAlgebra, x: &[usize]) -> TensorSquare {
    let n = x.len();
    let degs: Vec<i64> = x.iter().map(|&l| a.shifted_degree(l)).collect();
    let mut out = TensorSquare::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = a.pairing(x[i], x[j]);
            if c.is_zero() {
                continue;
            }
            let mut order: Vec<usize> = (0..i).chain(j + 1..n).collect();
            let outer: Vec<usize> = order.iter().map(|&k| x[k]).collect();
            order.push(i);
            order.push(j);
            order.extend(i + 1..j);
            let inner: Vec<usize> = x[i + 1..j].to_vec();
            let s = koszul_sign(&degs, &order);
            let Some((cb, kb)) = class_of(a, outer, Rational::from_integer(1.into())) else {
                continue;
            };
            let Some((ca, ka)) = class_of(a, inner, Rational::from_integer(1.into())) else {
                continue;
            };
            let odd = if a.frobenius_degree() % 2 == 1 {
                degs[j]
            } else {
                0
            };
            let coef = c * sgn(s * pow_neg1(odd)) * kb * ka;
            let (db, da) = (l_degree(a, &cb), l_degree(a, &ca));
            out.add_term((cb.clone(), ca.clone()), coef.clone());
            out.add_term((ca, cb), -coef * sgn(pow_neg1(da * db)));
        }
    }
    out
}

pub fn cobracket_class(a: &FrobeniusAlgebra, x: &CyclicClass) -> TensorSquare {
    cobracket_raw(a, &x.representative.0)
}

pub fn cobracket(a: &FrobeniusAlgebra, x: &LieElement) -> TensorSquare {
    let mut out = TensorSquare::new();
    for (p, c) in x.iter() {
        out.add_scaled(&cobracket_class(a, p), c);
    }
    out
}

/// The differential on `L`, inherited from the Connes complex.
pub fn differential(a: &FrobeniusAlgebra, x: &LieElement) -> LieElement {
    let mut out = LieElement::new();
    for (p, c) in x.iter() {
        out.add_scaled(&class_boundary(a, p), c);
    }
    out
}

/// Koszul flip `u⊗v ↦ (-1)^{|u||v|} v⊗u`.
pub fn tau(a: &FrobeniusAlgebra, t: &TensorSquare) -> TensorSquare {
    t.map_keys(|(u, v)| {
        Some((
            (v.clone(), u.clone()),
            sgn(pow_neg1(l_degree(a, u) * l_degree(a, v))),
        ))
    })
}

/// Cyclic permutation `u⊗v⊗w ↦ (-1)^{|w|(|u|+|v|)} w⊗u⊗v`.
pub fn tau3(a: &FrobeniusAlgebra, t: &TensorCube) -> TensorCube {
    t.map_keys(|(u, v, w)| {
        let s = pow_neg1(l_degree(a, w) * (l_degree(a, u) + l_degree(a, v)));
        Some(((w.clone(), u.clone(), v.clone()), sgn(s)))
    })
}

/// Adjoint action `x·(u⊗v) = {x,u}⊗v + (-1)^{|x||u|} u⊗{x,v}` of a class on `L⊗L`.
pub fn act(a: &FrobeniusAlgebra, x: &CyclicClass, t: &TensorSquare) -> TensorSquare {
    let dx = l_degree(a, x);
    let mut out = TensorSquare::new();
    for ((u, v), c) in t.iter() {
        for (w, d) in bracket_classes(a, x, u).iter() {
            out.add_term((w.clone(), v.clone()), c * d);
        }
        let s = sgn(pow_neg1(dx * l_degree(a, u)));
        for (w, d) in bracket_classes(a, x, v).iter() {
            out.add_term((u.clone(), w.clone()), c * d * &s);
        }
    }
    out
}
