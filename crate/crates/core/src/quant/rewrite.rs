use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Zero;

use super::monomial::*;
use crate::exact::{int, rat, sgn, Rational};
use crate::frobenius::FrobeniusAlgebra;
use crate::sign::pow_neg1;

/// Which inversion the bubble sort resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Rewriting context for one algebra: relations, normal forms and the
/// product, with a memo of normal forms.
pub struct Quantizer<'a> {
    a: &'a FrobeniusAlgebra,
    strategy: Strategy,
    cache: RefCell<HashMap<Monomial, QuantElement>>,
    unreduced: bool,
}

impl<'a> Quantizer<'a> {
    pub fn new(a: &'a FrobeniusAlgebra) -> Self {
        Self::with_strategy(a, Strategy::Leftmost)
    }

    pub fn with_strategy(a: &'a FrobeniusAlgebra, strategy: Strategy) -> Self {
        Quantizer {
            a,
            strategy,
            cache: RefCell::new(HashMap::new()),
            unreduced: false,
        }
    }

    /// Uses every basis element as a letter, with the full differential and coproduct.
    pub fn unreduced(mut self) -> Self {
        self.unreduced = true;
        self
    }

    pub fn is_unreduced(&self) -> bool {
        self.unreduced
    }

    /// The letters monomials may carry: the coideal letters, or every basis element.
    pub fn alphabet(&self) -> Vec<usize> {
        if self.unreduced {
            (0..self.a.dim()).collect()
        } else {
            self.a.letters().to_vec()
        }
    }

    /// Parses an element whose letters are drawn from [`Self::alphabet`].
    pub fn parse(&self, s: &str) -> crate::error::Result<QuantElement> {
        parse_element_over(self.a, s, &self.alphabet())
    }

    /// A fresh quantizer with the same reading and another strategy.
    pub fn twin(&self, strategy: Strategy) -> Self {
        Quantizer {
            a: self.a,
            strategy,
            cache: RefCell::new(HashMap::new()),
            unreduced: self.unreduced,
        }
    }

    pub fn algebra(&self) -> &'a FrobeniusAlgebra {
        self.a
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// Scalar left by contracting `u` (lower) with `v` (higher) inside one
    /// necklace: the pairing, times `(-1)^{|v|}` when `m` is odd.
    pub fn contraction(&self, u: usize, v: usize) -> Rational {
        let c = self.a.pairing(u, v);
        if self.a.frobenius_degree() % 2 == 1 {
            c * sgn(pow_neg1(self.a.shifted_degree(v)))
        } else {
            c
        }
    }

    /// One relation: `X = s·X' + X''` where `X'` interchanges heights `h` and
    /// `h + 1`. Across necklaces `X''` merges them (no `h`); within one
    /// necklace it splits it in two (one factor of `h`). `X''` is returned
    /// unnormalized.
    pub fn swap(&self, m: &Monomial, h: usize) -> (i32, Monomial, QuantElement) {
        let a = self.a;
        let comps = m.components();
        let locate = |x: usize| {
            comps
                .iter()
                .enumerate()
                .find_map(|(ci, c)| c.iter().position(|&y| y == x).map(|p| (ci, p)))
                .unwrap()
        };
        let (cu, pu) = locate(h);
        let (cv, pv) = locate(h + 1);
        let (u, v) = (m.letters()[h], m.letters()[h + 1]);
        let item = |x: usize| (m.letters()[x], x as i64);
        let mut w: Written = comps
            .iter()
            .enumerate()
            .filter(|&(ci, _)| ci != cu && ci != cv)
            .map(|(_, c)| c.iter().map(|&x| item(x)).collect())
            .collect();
        let others = w.clone();
        let rotated = |c: &[usize], from: usize| -> Vec<(usize, i64)> {
            (0..c.len())
                .map(|k| item(c[(from + k) % c.len()]))
                .collect()
        };
        let mut corr = QuantElement::new();
        if cu != cv {
            let c = a.pairing(u, v);
            // ... [A u] [v B] ...  ->  [A B]
            let ru = rotated(&comps[cu], pu + 1);
            let rv = rotated(&comps[cv], pv);
            w.push(ru.clone());
            w.push(rv.clone());
            let (s0, m0) = canonicalize(a, &w).unwrap();
            debug_assert_eq!(&m0, m);
            if !c.is_zero() {
                let mut merged = others;
                merged.push(ru[..ru.len() - 1].iter().chain(&rv[1..]).copied().collect());
                add_written(a, &mut corr, &merged, 0, &(sgn(s0) * &c));
            }
            let (s1, m1) = canonicalize(a, &swap_keys(&w, h)).unwrap();
            (s0 * s1, m1, corr)
        } else {
            // [B u A v]  ->  (-1)^{|v||A|} [B u v A]  ->  h [B] [A]
            let c = self.contraction(u, v);
            let r = rotated(&comps[cu], pv + 1);
            let iu = r.iter().position(|&(_, k)| k == h as i64).unwrap();
            w.push(r.clone());
            let (s0, m0) = canonicalize(a, &w).unwrap();
            debug_assert_eq!(&m0, m);
            if !c.is_zero() {
                let inner = &r[iu + 1..r.len() - 1];
                let da: i64 = inner.iter().map(|&(x, _)| a.shifted_degree(x)).sum();
                let s = pow_neg1(a.shifted_degree(v) * da);
                let mut split = others;
                split.push(r[..iu].to_vec());
                split.push(inner.to_vec());
                add_written(a, &mut corr, &split, 1, &(sgn(s0 * s) * &c));
            }
            let (s1, m1) = canonicalize(a, &swap_keys(&w, h)).unwrap();
            (s0 * s1, m1, corr)
        }
    }

    /// Target height of every letter in the normal form of `m`: necklaces
    /// sorted by (L-degree, least rotation, lowest height), each laid out
    /// consecutively along its least rotation.
    pub fn target(&self, m: &Monomial) -> Vec<usize> {
        let a = self.a;
        let mut keyed: Vec<((i64, Vec<usize>, usize), Vec<usize>)> = m
            .components()
            .into_iter()
            .map(|c| {
                let len = c.len();
                let (word, start) = (0..len)
                    .map(|r| {
                        (
                            (0..len)
                                .map(|k| m.letters()[c[(r + k) % len]])
                                .collect::<Vec<_>>(),
                            c[r],
                            r,
                        )
                    })
                    .min_by(|x, y| (&x.0, x.1).cmp(&(&y.0, y.1)))
                    .map(|(w, _, r)| (w, r))
                    .unwrap();
                let deg: i64 = word.iter().map(|&x| a.shifted_degree(x)).sum::<i64>() + 2
                    - a.frobenius_degree();
                let laid: Vec<usize> = (0..len).map(|k| c[(start + k) % len]).collect();
                ((deg, word, c[0]), laid)
            })
            .collect();
        keyed.sort();
        let mut tau = vec![0; m.len()];
        let mut next = 0;
        for (_, laid) in keyed {
            for x in laid {
                tau[x] = next;
                next += 1;
            }
        }
        tau
    }

    /// Bubble-sorts `m` toward `tau`: returns `(s, m', X'')` with `m = s·m' + X''`.
    fn bubble(&self, m: &Monomial, mut tau: Vec<usize>) -> (i32, Monomial, QuantElement) {
        let mut cur = m.clone();
        let mut sign = 1;
        let mut corr = QuantElement::new();
        loop {
            let mut inv = (0..cur.len().saturating_sub(1)).filter(|&h| tau[h] > tau[h + 1]);
            let h = match self.strategy {
                Strategy::Leftmost => inv.next(),
                Strategy::Rightmost => inv.last(),
            };
            let Some(h) = h else { break };
            let (s, next, c) = self.swap(&cur, h);
            corr.add_scaled(&c, &sgn(sign));
            sign *= s;
            cur = next;
            tau.swap(h, h + 1);
        }
        (sign, cur, corr)
    }

    /// Height permutations of a normal-form monomial that fix it: rotations of
    /// periodic necklaces and exchanges of equal neighbouring necklaces.
    fn symmetries(&self, t: &Monomial) -> Vec<Vec<usize>> {
        let comps = t.components();
        let word = |c: &[usize]| c.iter().map(|&x| t.letters()[x]).collect::<Vec<_>>();
        let mut out = Vec::new();
        for c in &comps {
            let w = word(c);
            let len = c.len();
            if let Some(d) = (1..len).find(|&d| (0..len).all(|k| w[k] == w[(k + d) % len])) {
                let mut tau: Vec<usize> = (0..t.len()).collect();
                for i in 0..len {
                    tau[c[i]] = c[(i + len - d) % len];
                }
                out.push(tau);
            }
        }
        for p in comps.windows(2) {
            if word(&p[0]) == word(&p[1]) {
                let mut tau: Vec<usize> = (0..t.len()).collect();
                for (&x, &y) in p[0].iter().zip(&p[1]) {
                    tau[x] = y;
                    tau[y] = x;
                }
                out.push(tau);
            }
        }
        out
    }

    /// Normal form of the basis vector of `m` in the PBW basis.
    pub fn normal_form(&self, m: &Monomial) -> QuantElement {
        if m.is_unit() {
            return QuantElement::single((Monomial::unit(), 0), int(1));
        }
        if let Some(x) = self.cache.borrow().get(m) {
            return x.clone();
        }
        let out = self.normal_form_uncached(m);
        self.cache.borrow_mut().insert(m.clone(), out.clone());
        out
    }

    fn normal_form_uncached(&self, m: &Monomial) -> QuantElement {
        let (sign, t, corr) = self.bubble(m, self.target(m));
        let mut out = self.normalize(&corr);
        for tau in self.symmetries(&t) {
            let w: Written = t
                .written()
                .into_iter()
                .map(|c| {
                    c.into_iter()
                        .map(|(x, k)| (x, tau[k as usize] as i64))
                        .collect()
                })
                .collect();
            let (s, same) = canonicalize(self.a, &w).unwrap();
            debug_assert_eq!(same, t);
            if s == -1 {
                // t = -t + C, so t = C/2.
                let (s2, back, c) = self.bubble(&t, tau);
                debug_assert!(s2 == -1 && back == t);
                out.add_scaled(&self.normalize(&c), &(sgn(sign) * rat(1, 2)));
                return out;
            }
        }
        out.add_term((t, 0), sgn(sign));
        out
    }

    pub fn normalize(&self, x: &QuantElement) -> QuantElement {
        let mut out = QuantElement::new();
        for ((m, e), c) in x.iter() {
            out.add_scaled(&shift_h(&self.normal_form(m), *e), c);
        }
        out
    }

    /// Whether `m` is its own normal form.
    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.normal_form(m) == QuantElement::single((m.clone(), 0), int(1))
    }

    /// The product of monomials: heights of `y` are raised above those of `x`.
    pub fn product(&self, x: &Monomial, y: &Monomial) -> QuantElement {
        let mut w = x.written();
        let off = x.len() as i64;
        w.extend(
            y.written()
                .into_iter()
                .map(|c| c.into_iter().map(|(l, k)| (l, k + off)).collect()),
        );
        let (s, m) = canonicalize(self.a, &w).unwrap();
        debug_assert_eq!(s, 1);
        self.normal_form(&m).scaled(&sgn(s))
    }

    pub fn mul(&self, x: &QuantElement, y: &QuantElement) -> QuantElement {
        let mut out = QuantElement::new();
        for ((mx, ex), cx) in x.iter() {
            for ((my, ey), cy) in y.iter() {
                out.add_scaled(&shift_h(&self.product(mx, my), ex + ey), &(cx * cy));
            }
        }
        out
    }

    pub fn clear_cache(&self) {
        self.cache.borrow_mut().clear();
    }
}

fn swap_keys(w: &Written, h: usize) -> Written {
    let (p, q) = (h as i64, h as i64 + 1);
    w.iter()
        .map(|c| {
            c.iter()
                .map(|&(x, k)| {
                    (
                        x,
                        if k == p {
                            q
                        } else if k == q {
                            p
                        } else {
                            k
                        },
                    )
                })
                .collect()
        })
        .collect()
}
