use std::collections::HashMap;

use num_traits::Zero;

use super::monomial::*;
use super::rewrite::Quantizer;
use crate::error::{Error, Result};
use crate::exact::{int, sgn, Rational};
use crate::sign::{koszul_sign, pow_neg1};

/// An `n`-labeling of a monomial. Positions are heights `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    /// Partner of each position of `I`, `None` off `I`.
    pub phi: Vec<Option<usize>>,
    /// Slot of each position, in `0..n`.
    pub f: Vec<usize>,
}

impl Labeling {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.phi
            .iter()
            .enumerate()
            .filter_map(|(p, r)| r.filter(|&r| p < r).map(|r| (p, r)))
            .collect()
    }

    pub fn in_i(&self) -> usize {
        self.phi.iter().filter(|r| r.is_some()).count()
    }

    /// `q(p) = succ(p)` off `I` and `succ(phi(p))` on `I`.
    pub fn q(&self, m: &Monomial) -> Vec<usize> {
        (0..m.len())
            .map(|p| m.succ()[self.phi[p].unwrap_or(p)])
            .collect()
    }
}

fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut p = s;
        while !seen[p] {
            seen[p] = true;
            c.push(p);
            p = perm[p];
        }
        out.push(c);
    }
    out
}

fn matchings(n: usize) -> Vec<Vec<Option<usize>>> {
    fn go(
        phi: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        from: usize,
        out: &mut Vec<Vec<Option<usize>>>,
    ) {
        let Some(p) = (from..used.len()).find(|&p| !used[p]) else {
            out.push(phi.clone());
            return;
        };
        used[p] = true;
        go(phi, used, p + 1, out);
        for r in p + 1..used.len() {
            if !used[r] {
                used[r] = true;
                phi[p] = Some(r);
                phi[r] = Some(p);
                go(phi, used, p + 1, out);
                phi[p] = None;
                phi[r] = None;
                used[r] = false;
            }
        }
        used[p] = false;
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut vec![false; n], 0, &mut out);
    out
}

/// Every `n`-labeling of `m`, in a fixed order: matchings first, then slot
/// assignments of the `q`-orbits in lexicographic order.
pub fn enumerate_labelings(m: &Monomial, n: usize) -> Vec<Labeling> {
    let mut out = Vec::new();
    for phi in matchings(m.len()) {
        let q: Vec<usize> = (0..m.len())
            .map(|p| m.succ()[phi[p].unwrap_or(p)])
            .collect();
        let orbits = cycles(&q);
        let mut orbit_of = vec![0; m.len()];
        for (i, o) in orbits.iter().enumerate() {
            for &p in o {
                orbit_of[p] = i;
            }
        }
        // f(lower) < f(higher) along every pair.
        let constraints: Vec<(usize, usize)> = (0..m.len())
            .filter_map(|p| {
                phi[p]
                    .filter(|&r| p < r)
                    .map(|r| (orbit_of[p], orbit_of[r]))
            })
            .collect();
        if constraints.iter().any(|(x, y)| x == y) {
            continue;
        }
        let mut vals = vec![usize::MAX; orbits.len()];
        assign(0, &mut vals, n, &constraints, &mut |vals| {
            out.push(Labeling {
                phi: phi.clone(),
                f: orbit_of.iter().map(|&o| vals[o]).collect(),
            });
        });
    }
    out
}

fn assign(
    i: usize,
    vals: &mut Vec<usize>,
    n: usize,
    cons: &[(usize, usize)],
    emit: &mut impl FnMut(&[usize]),
) {
    if i == vals.len() {
        emit(vals);
        return;
    }
    for v in 0..n {
        vals[i] = v;
        let ok = cons.iter().all(|&(x, y)| {
            let (fx, fy) = (vals[x], vals[y]);
            x > i || y > i || fx < fy
        });
        if ok {
            assign(i + 1, vals, n, cons, emit);
        }
    }
    vals[i] = usize::MAX;
}

/// One labeling's contribution before rewriting: `c·h^e·X⁽¹⁾⊗…⊗X⁽ⁿ⁾`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingTerm {
    pub coef: Rational,
    pub h_exponent: usize,
    pub slots: Vec<Monomial>,
}

impl Quantizer<'_> {
    /// The `h` exponent `(#I - 2k + 2l)/4` of a labeling whose term does not
    /// vanish; `None` when some `q`-orbit lies inside `I`.
    pub fn h_exponent(&self, m: &Monomial, lab: &Labeling) -> Result<Option<usize>> {
        let orbits = cycles(&lab.q(m));
        if orbits
            .iter()
            .any(|o| o.iter().all(|&p| lab.phi[p].is_some()))
        {
            return Ok(None);
        }
        let num = lab.in_i() as i64 - 2 * m.component_count() as i64 + 2 * orbits.len() as i64;
        if num < 0 || num % 4 != 0 {
            return Err(Error::HExponent {
                num,
                monomial: m.display(self.algebra()),
            });
        }
        Ok(Some((num / 4) as usize))
    }

    /// The term of one labeling, or `None` when it vanishes.
    ///
    /// The pairs of `I` are contracted one at a time, in order of their lower
    /// height, on the canonical writing of `m`. Each step is the elementary
    /// move behind the swap relations: within a necklace `[e A l C]` the later
    /// letter moves next to the earlier one and the contracted pair becomes the
    /// marker of `[A]`, leaving `[C]`; across necklaces `[A x][y B]` becomes
    /// `[A B]`. Every rearrangement is signed by the Koszul rule.
    pub fn labeling_term(
        &self,
        m: &Monomial,
        lab: &Labeling,
        n: usize,
    ) -> Result<Option<LabelingTerm>> {
        let a = self.algebra();
        let Some(e) = self.h_exponent(m, lab)? else {
            return Ok(None);
        };
        let deg = |x: &(usize, i64)| a.shifted_degree(x.0);
        let sum = |c: &[(usize, i64)]| c.iter().map(deg).sum::<i64>();
        let marker = 2 - a.frobenius_degree();
        let block = |c: &[(usize, i64)]| marker + sum(c);
        let find = |w: &Written, h: usize| {
            w.iter()
                .enumerate()
                .find_map(|(ci, c)| c.iter().position(|&(_, k)| k == h as i64).map(|i| (ci, i)))
                .unwrap()
        };

        let mut w = m.written();
        let mut sign = 1;
        let mut coef = int(1);
        for (p, r) in lab.pairs() {
            let (lower, higher) = (m.letters()[p], m.letters()[r]);
            let (cp, ip) = find(&w, p);
            let (cr, ir) = find(&w, r);
            if cp == cr {
                // [B e A l C] -> [e A l C B] -> [e l A C B] -> [C B] [A]
                let c = &w[cp];
                let (i, j) = (ip.min(ir), ip.max(ir));
                sign *= pow_neg1(sum(&c[..i]) * sum(&c[i..]));
                let rot: Vec<(usize, i64)> = c[i..].iter().chain(&c[..i]).copied().collect();
                let k = j - i;
                let (mid, rest) = (&rot[1..k], &rot[k + 1..]);
                sign *= pow_neg1(deg(&rot[k]) * sum(mid));
                sign *= pow_neg1(sum(rest) * (marker + sum(mid)));
                let mut kappa = self.contraction(lower, higher);
                if rot[0].1 != p as i64 {
                    kappa *= sgn(pow_neg1(deg(&rot[0]) * deg(&rot[k]) + a.frobenius_degree()));
                }
                coef *= kappa;
                let (mid, rest) = (mid.to_vec(), rest.to_vec());
                w[cp] = rest;
                w.insert(cp + 1, mid);
            } else {
                // [P x S] ... [Q y R] -> [S P x] [y R Q] -> [S P R Q]
                let ((c1, i1), (c2, i2)) = if cp < cr {
                    ((cp, ip), (cr, ir))
                } else {
                    ((cr, ir), (cp, ip))
                };
                let passed: i64 = w[c1 + 1..c2].iter().map(|c| block(c)).sum();
                sign *= pow_neg1(block(&w[c2]) * passed);
                let (x, y) = (w[c1][i1], w[c2][i2]);
                sign *= pow_neg1(sum(&w[c1][..=i1]) * sum(&w[c1][i1 + 1..]));
                sign *= pow_neg1(sum(&w[c2][..i2]) * sum(&w[c2][i2..]));
                let mut kappa = a.pairing(lower, higher);
                if x.1 != p as i64 {
                    kappa *= sgn(pow_neg1(deg(&x) * deg(&y)));
                }
                coef *= kappa;
                let merged: Vec<(usize, i64)> = w[c1][i1 + 1..]
                    .iter()
                    .chain(&w[c1][..i1])
                    .chain(&w[c2][i2 + 1..])
                    .chain(&w[c2][..i2])
                    .copied()
                    .collect();
                w[c1] = merged;
                w.remove(c2);
            }
            if coef.is_zero() {
                return Ok(None);
            }
        }
        if w.iter().any(|c| c.is_empty()) {
            return Ok(None);
        }

        // Gather the necklaces slot by slot.
        let slot_of = |c: &Vec<(usize, i64)>| lab.f[c[0].1 as usize];
        debug_assert!(w
            .iter()
            .all(|c| c.iter().all(|&(_, k)| lab.f[k as usize] == slot_of(c))));
        let mut order: Vec<usize> = (0..w.len()).collect();
        order.sort_by_key(|&i| slot_of(&w[i]));
        let degrees: Vec<i64> = w.iter().map(|c| block(c)).collect();
        sign *= koszul_sign(&degrees, &order);
        let mut slots = Vec::with_capacity(n);
        for s in 0..n {
            let part: Written = order
                .iter()
                .filter(|&&i| slot_of(&w[i]) == s)
                .map(|&i| w[i].clone())
                .collect();
            let (sw, mw) = canonicalize(a, &part).unwrap_or((1, Monomial::unit()));
            sign *= sw;
            slots.push(mw);
        }
        Ok(Some(LabelingTerm {
            coef: coef * sgn(sign),
            h_exponent: e,
            slots,
        }))
    }

    /// The `n`-fold coproduct with every slot in normal form.
    pub fn coproduct_n(&self, x: &QuantElement, n: usize) -> Result<QuantTensor> {
        assert!(n >= 2, "the n-fold coproduct needs n >= 2");
        let mut out = QuantTensor::new();
        for ((m, e0), c) in x.iter() {
            for lab in enumerate_labelings(m, n) {
                let Some(t) = self.labeling_term(m, &lab, n)? else {
                    continue;
                };
                let mut acc: Vec<(Vec<Monomial>, usize, Rational)> =
                    vec![(Vec::new(), e0 + t.h_exponent, c * &t.coef)];
                for slot in &t.slots {
                    let nf = self.normal_form(slot);
                    let mut next = Vec::new();
                    for (ms, e, k) in &acc {
                        for ((y, ey), cy) in nf.iter() {
                            let mut ms2 = ms.clone();
                            ms2.push(y.clone());
                            next.push((ms2, e + ey, k * cy));
                        }
                    }
                    acc = next;
                }
                for (ms, e, k) in acc {
                    out.add_term((ms, e), k);
                }
            }
        }
        Ok(out)
    }

    pub fn coproduct(&self, x: &QuantElement) -> Result<QuantTensor> {
        self.coproduct_n(x, 2)
    }

    /// `Δ^op = τ∘Δ` with the Koszul sign of the flip.
    pub fn coproduct_op(&self, x: &QuantElement) -> Result<QuantTensor> {
        Ok(self.flip(&self.coproduct(x)?))
    }

    pub fn flip(&self, t: &QuantTensor) -> QuantTensor {
        let a = self.algebra();
        t.map_keys(|(ms, e)| {
            let s = pow_neg1(ms[0].degree(a) * ms[1].degree(a));
            Some(((vec![ms[1].clone(), ms[0].clone()], *e), sgn(s)))
        })
    }

    /// Slotwise product `(x₁⊗…)(y₁⊗…) = ±x₁y₁⊗…` with Koszul signs.
    pub fn tensor_mul(&self, x: &QuantTensor, y: &QuantTensor) -> QuantTensor {
        let a = self.algebra();
        let mut out = QuantTensor::new();
        for ((xs, ex), cx) in x.iter() {
            for ((ys, ey), cy) in y.iter() {
                let mut s = 1;
                for i in 0..xs.len() {
                    for yj in &ys[..i] {
                        s *= pow_neg1(xs[i].degree(a) * yj.degree(a));
                    }
                }
                let mut acc: Vec<(Vec<Monomial>, usize, Rational)> =
                    vec![(Vec::new(), ex + ey, cx * cy * sgn(s))];
                for (xi, yi) in xs.iter().zip(ys) {
                    let p = self.product(xi, yi);
                    let mut next = Vec::new();
                    for (ms, e, k) in &acc {
                        for ((z, ez), cz) in p.iter() {
                            let mut ms2 = ms.clone();
                            ms2.push(z.clone());
                            next.push((ms2, e + ez, k * cz));
                        }
                    }
                    acc = next;
                }
                for (ms, e, k) in acc {
                    out.add_term((ms, e), k);
                }
            }
        }
        out
    }

    /// Applies `f` to slot `i` of every term, splicing its output in place.
    pub fn apply_slot(
        &self,
        t: &QuantTensor,
        i: usize,
        f: impl Fn(&Monomial) -> Result<QuantTensor>,
    ) -> Result<QuantTensor> {
        let a = self.algebra();
        let mut out = QuantTensor::new();
        for ((ms, e), c) in t.iter() {
            let before: i64 = ms[..i].iter().map(|m| m.degree(a)).sum();
            for ((ys, ey), cy) in f(&ms[i])?.iter() {
                let fdeg = ys.iter().map(|m| m.degree(a)).sum::<i64>() - ms[i].degree(a);
                let mut v = ms[..i].to_vec();
                v.extend(ys.iter().cloned());
                v.extend(ms[i + 1..].iter().cloned());
                out.add_term((v, e + ey), c * cy * sgn(pow_neg1(before * fdeg)));
            }
        }
        Ok(out)
    }

    /// `(b⊗1⊗… + 1⊗b⊗… + …)` on a tensor.
    pub fn tensor_b(&self, t: &QuantTensor) -> QuantTensor {
        let width = t.keys().next().map_or(0, |(ms, _)| ms.len());
        let mut out = QuantTensor::new();
        for i in 0..width {
            let part = self
                .apply_slot(t, i, |m| {
                    let b = self.quant_b(&QuantElement::single((m.clone(), 0), int(1)));
                    Ok(b.map_keys(|(y, e)| Some(((vec![y.clone()], *e), int(1)))))
                })
                .expect("b does not fail");
            out.add(&part);
        }
        out
    }

    /// Counit: `1 ↦ 1`, every monomial with letters to `0`.
    pub fn counit(&self, x: &QuantElement) -> crate::exact::HPoly {
        let mut p = crate::exact::HPoly::zero();
        for ((m, e), c) in x.iter() {
            if m.is_unit() {
                p = &p + &crate::exact::HPoly::monomial(c.clone(), *e);
            }
        }
        p
    }

    /// Antipode: heights negated, times `(-1)^{#letters}`, then rewritten.
    pub fn antipode(&self, x: &QuantElement) -> QuantElement {
        let a = self.algebra();
        let mut raw = QuantElement::new();
        for ((m, e), c) in x.iter() {
            let w: Written = m
                .written()
                .into_iter()
                .map(|cc| cc.into_iter().map(|(l, k)| (l, -k)).collect())
                .collect();
            add_written(a, &mut raw, &w, *e, &(c * sgn(pow_neg1(m.len() as i64))));
        }
        self.normalize(&raw)
    }

    /// The convolution inverse of the identity, from `μ(S⊗1)Δ = ηε`: on a
    /// monomial `X`, `S(X) = -Σ S(X')·X''` over every term of `ΔX` except `X⊗1`.
    pub fn antipode_recursive(&self, x: &QuantElement) -> Result<QuantElement> {
        let mut memo = HashMap::new();
        let mut out = QuantElement::new();
        for ((m, e), c) in x.iter() {
            out.add_scaled(&shift_h(&self.recursive_on(m, &mut memo)?, *e), c);
        }
        Ok(out)
    }

    fn recursive_on(
        &self,
        m: &Monomial,
        memo: &mut HashMap<Monomial, QuantElement>,
    ) -> Result<QuantElement> {
        if m.is_unit() {
            return Ok(QuantElement::single((Monomial::unit(), 0), int(1)));
        }
        if let Some(s) = memo.get(m) {
            return Ok(s.clone());
        }
        let d = self.coproduct(&QuantElement::single((m.clone(), 0), int(1)))?;
        let mut out = QuantElement::new();
        for ((ms, e), c) in d.iter() {
            if *e == 0 && ms[1].is_unit() && ms[0] == *m {
                continue;
            }
            let sx = self.recursive_on(&ms[0], memo)?;
            out.add_scaled(
                &shift_h(
                    &self.mul(&sx, &QuantElement::single((ms[1].clone(), 0), int(1))),
                    *e,
                ),
                &-c.clone(),
            );
        }
        memo.insert(m.clone(), out.clone());
        Ok(out)
    }

    /// Multiplies out a 2-tensor.
    pub fn multiply_out(&self, t: &QuantTensor) -> QuantElement {
        let mut out = QuantElement::new();
        for ((ms, e), c) in t.iter() {
            out.add_scaled(&shift_h(&self.product(&ms[0], &ms[1]), *e), c);
        }
        out
    }
}
