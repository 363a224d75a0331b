use num_traits::Zero;

use super::{norm_expand, Chain, Word};
use crate::exact::{sgn, Lin};
use crate::frobenius::FrobeniusAlgebra;
use crate::sign::pow_neg1;

/// Hochschild differential on `C ⊗ C[1]^{⊗n}`:
///
/// ```text
/// b(a₀,…,aₙ) = - Σᵢ (-1)^{ε_{i-1}} (…, d aᵢ, …)
///              + Σᵢ (-1)^{ε_{i-1} + |aᵢ'| - 1} (…, aᵢ', aᵢ'', …)
///              - Σ (-1)^{(|a₀'|-1)(εₙ-|a₀'|)} (a₀'', a₁, …, aₙ, a₀')
/// ```
///
/// with `εᵢ = |a₀| + … + |aᵢ| - i`, `ε₋₁ = 1`, and the reduced coproduct.
pub fn hochschild_b(a: &FrobeniusAlgebra, w: &Word) -> Chain {
    differential(a, w, false, true)
}

/// The first two sums of [`hochschild_b`] without the wrap-around term.
/// On Connes classes `b(N(w)) = N(b'(w))`.
pub fn hochschild_b_open(a: &FrobeniusAlgebra, w: &Word) -> Chain {
    differential(a, w, false, false)
}

/// Hochschild differential of the normalized complex `V ⊗ C[1]^{⊗n}`:
/// slot 0 ranges over all of `V`, words with `e₀` in a shifted slot vanish.
pub fn hochschild_b_normalized(a: &FrobeniusAlgebra, w: &Word) -> Chain {
    differential(a, w, true, true)
}

/// Connes' operator `B(a₀, a₁, …, aₙ) = ε(a₀) N(a₁, …, aₙ)` on the normalized complex.
pub fn connes_b(a: &FrobeniusAlgebra, w: &Word) -> Chain {
    if w.len() <= 1 {
        return Chain::new();
    }
    let e = a.counit(w.0[0]);
    if e.is_zero() {
        return Chain::new();
    }
    norm_expand(a, &Word(w.0[1..].to_vec())).scaled(e)
}

fn differential(a: &FrobeniusAlgebra, w: &Word, normalized: bool, wrap: bool) -> Chain {
    let u = a.unit();
    let letters = &w.0;
    let mut out = Chain::new();
    let mut put = |v: Vec<usize>, c: crate::exact::Rational| {
        if normalized && v[1..].contains(&u) {
            return;
        }
        out.add_term(Word(v), c);
    };
    let mut eps_prev = 1i64;
    for (i, &x) in letters.iter().enumerate() {
        let full = normalized && i == 0;
        let d: &Lin<usize> = if full { a.d(x) } else { a.dbar(x) };
        for (z, c) in d.iter() {
            let mut v = letters.clone();
            v[i] = *z;
            put(v, -c * sgn(pow_neg1(eps_prev)));
        }
        let cop = if normalized {
            a.coproduct(x)
        } else {
            a.reduced_coproduct(x)
        };
        for ((p, q), c) in cop.iter() {
            let mut v = Vec::with_capacity(letters.len() + 1);
            v.extend_from_slice(&letters[..i]);
            v.push(*p);
            v.push(*q);
            v.extend_from_slice(&letters[i + 1..]);
            put(v, c * sgn(pow_neg1(eps_prev + a.degree(*p) - 1)));
        }
        eps_prev = if i == 0 {
            a.degree(x)
        } else {
            eps_prev + a.degree(x) - 1
        };
    }
    if wrap {
        let en = eps_prev;
        let x0 = letters[0];
        let cop = if normalized {
            a.coproduct(x0)
        } else {
            a.reduced_coproduct(x0)
        };
        for ((p, q), c) in cop.iter() {
            let mut v = Vec::with_capacity(letters.len() + 1);
            v.push(*q);
            v.extend_from_slice(&letters[1..]);
            v.push(*p);
            put(
                v,
                -c * sgn(pow_neg1((a.degree(*p) - 1) * (en - a.degree(*p)))),
            );
        }
    }
    out
}
