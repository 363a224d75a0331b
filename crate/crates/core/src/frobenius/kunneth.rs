use num_traits::Zero;

use super::{FrobeniusAlgebra, Tables};
use crate::error::Result;
use crate::exact::sgn;
use crate::sign::pow_neg1;

/// Tensor product `A ⊗ B` with Frobenius degree `m_A + m_B`. Generators are
/// named `x_y`.
pub fn kunneth(a: &FrobeniusAlgebra, b: &FrobeniusAlgebra, name: &str) -> Result<FrobeniusAlgebra> {
    let (na, nb) = (a.dim(), b.dim());
    let ix = |i: usize, j: usize| i * nb + j;
    let names: Vec<String> = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}_{}", a.gen_name(i), b.gen_name(j)))
        .collect();
    let basis: Vec<(&str, i64)> = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .map(|(i, j)| (names[ix(i, j)].as_str(), a.degree(i) + b.degree(j)))
        .collect();
    let mut t = Tables::new(
        name,
        a.frobenius_degree() + b.frobenius_degree(),
        &basis,
        &names[ix(a.unit(), b.unit())],
    );
    t.simply_connected = a.simply_connected() && b.simply_connected();
    for i in 0..na {
        for j in 0..nb {
            let c = a.counit(i) * b.counit(j);
            if !c.is_zero() {
                t.counit[ix(i, j)] = c;
            }
            for (z, c) in a.d(i).iter() {
                t.differential[ix(i, j)].add_term(ix(*z, j), c.clone());
            }
            for (z, c) in b.d(j).iter() {
                t.differential[ix(i, j)].add_term(ix(i, *z), c * sgn(pow_neg1(a.degree(i))));
            }
            for ((a1, a2), c1) in a.coproduct(i).iter() {
                for ((b1, b2), c2) in b.coproduct(j).iter() {
                    let s = sgn(pow_neg1(a.degree(*a2) * b.degree(*b1)));
                    t.coproduct[ix(i, j)].add_term((ix(*a1, *b1), ix(*a2, *b2)), c1 * c2 * s);
                }
            }
        }
    }
    let mb = b.frobenius_degree();
    for ((x, y), pa) in &a.tables().product {
        for ((u, v), pb) in &b.tables().product {
            for (z1, c1) in pa.iter() {
                for (z2, c2) in pb.iter() {
                    let s = sgn(pow_neg1(b.degree(*u) * a.degree(*y) + mb * a.degree(*z1)));
                    t.product
                        .entry((ix(*x, *u), ix(*y, *v)))
                        .or_default()
                        .add_term(ix(*z1, *z2), c1 * c2 * s);
                }
            }
        }
    }
    t.product.retain(|_, v| !v.is_zero());
    FrobeniusAlgebra::new(t)
}
