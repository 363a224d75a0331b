use super::monomial::*;
use super::rewrite::Quantizer;
use crate::exact::sgn;
use crate::sign::pow_neg1;

impl Quantizer<'_> {
    /// `b` on one monomial, before rewriting: the internal differential on
    /// each letter, and the reduced coproduct splitting a letter `x` at height
    /// `h` into `x'` at `h` and `x''` at `h + 1`, with all higher heights raised.
    pub fn quant_b_raw(&self, m: &Monomial) -> QuantElement {
        let a = self.algebra();
        let doubled: Written = m
            .written()
            .into_iter()
            .map(|c| c.into_iter().map(|(x, k)| (x, 2 * k)).collect())
            .collect();
        let marker = 2 - a.frobenius_degree();
        let mut out = QuantElement::new();
        let mut before = 0;
        for (ci, c) in doubled.iter().enumerate() {
            before += marker;
            for (pi, &(x, k)) in c.iter().enumerate() {
                let s = sgn(pow_neg1(before));
                for (y, cy) in if self.is_unreduced() {
                    a.d(x)
                } else {
                    a.dbar(x)
                }
                .iter()
                {
                    let mut w = doubled.clone();
                    w[ci][pi] = (*y, k);
                    add_written(a, &mut out, &w, 0, &-(&s * cy));
                }
                for ((y, z), cyz) in if self.is_unreduced() {
                    a.coproduct(x)
                } else {
                    a.reduced_coproduct(x)
                }
                .iter()
                {
                    let mut w = doubled.clone();
                    w[ci][pi] = (*y, k);
                    w[ci].insert(pi + 1, (*z, k + 1));
                    add_written(
                        a,
                        &mut out,
                        &w,
                        0,
                        &(&s * cyz * sgn(pow_neg1(a.degree(*y)))),
                    );
                }
                before += a.shifted_degree(x);
            }
        }
        out
    }

    /// `b` followed by rewriting to normal form.
    pub fn quant_b(&self, x: &QuantElement) -> QuantElement {
        let mut raw = QuantElement::new();
        for ((m, e), c) in x.iter() {
            raw.add_scaled(&shift_h(&self.quant_b_raw(m), *e), c);
        }
        self.normalize(&raw)
    }
}
