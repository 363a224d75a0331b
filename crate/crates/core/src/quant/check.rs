use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::monomial::*;
use super::rewrite::{Quantizer, Strategy};
use crate::cyclic::{canonical, CyclicClass, Word};
use crate::error::Result;
use crate::exact::{int, sgn, HPoly, Lin, SparseMatrix};
use crate::frobenius::FrobeniusAlgebra;
use crate::lie::{bracket_classes, classes_over, cobracket_class, l_degree, TensorSquare};
use crate::report::{IdentityReport, Tally};
use crate::sign::pow_neg1;

/// Words over the letters that are their own least rotation, up to `max_len` letters.
fn necklace_words(alphabet: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &x in alphabet {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        for w in &next {
            if (1..w.len())
                .all(|r| w[r..].iter().chain(&w[..r]).cmp(w.iter()) != std::cmp::Ordering::Less)
            {
                out.push(w.clone());
            }
        }
        layer = next;
    }
    out
}

fn layout(words: &[&Vec<usize>]) -> Monomial {
    let mut letters = Vec::new();
    let mut succ = Vec::new();
    for w in words {
        let base = letters.len();
        for (i, &x) in w.iter().enumerate() {
            letters.push(x);
            succ.push(base + (i + 1) % w.len());
        }
    }
    Monomial::from_parts(letters, succ).unwrap()
}

/// The PBW basis monomials with at most `max_letters` letters, unit included.
pub fn pbw_basis(q: &Quantizer, max_letters: usize) -> Vec<Monomial> {
    let a = q.algebra();
    let mut words = necklace_words(&q.alphabet(), max_letters);
    let key = |w: &Vec<usize>| {
        (
            w.iter().map(|&x| a.shifted_degree(x)).sum::<i64>() + 2 - a.frobenius_degree(),
            w.clone(),
        )
    };
    words.sort_by_key(key);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        q: &Quantizer,
        words: &[Vec<usize>],
        from: usize,
        left: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Monomial>,
    ) {
        let chosen: Vec<&Vec<usize>> = stack.iter().map(|&i| &words[i]).collect();
        let m = layout(&chosen);
        if q.is_normal(&m) {
            out.push(m);
        }
        for i in from..words.len() {
            if words[i].len() <= left {
                stack.push(i);
                go(q, words, i, left - words[i].len(), stack, out);
                stack.pop();
            }
        }
    }
    go(q, &words, 0, max_letters, &mut stack, &mut out);
    out.sort_by_key(|m| (m.len(), m.clone()));
    out
}

/// A monomial with random letters and a random necklace structure.
pub fn random_monomial(rng: &mut impl Rng, alphabet: &[usize], len: usize) -> Monomial {
    let letters: Vec<usize> = (0..len).map(|_| *alphabet.choose(rng).unwrap()).collect();
    let mut succ: Vec<usize> = (0..len).collect();
    succ.shuffle(rng);
    Monomial::from_parts(letters, succ).unwrap()
}

fn one(m: &Monomial) -> QuantElement {
    QuantElement::single((m.clone(), 0), int(1))
}

/// Bounds for [`check_hopf`].
#[derive(Clone, Copy, Debug)]
pub struct HopfSweep {
    /// Letters of the PBW monomials fed to every identity; products use pairs
    /// whose letters add up to at most this.
    pub max_letters: usize,
    /// Raw monomials with scrambled heights for the well-definedness check.
    pub scrambles: usize,
    pub seed: u64,
}

impl HopfSweep {
    pub fn new(max_letters: usize) -> Self {
        HopfSweep {
            max_letters,
            scrambles: 200,
            seed: 0,
        }
    }
}

/// Exact checks of the Hopf structure on the PBW monomials of the sweep.
pub fn check_hopf(q: &Quantizer, sweep: HopfSweep) -> Result<IdentityReport> {
    let a = q.algebra();
    let basis = pbw_basis(q, sweep.max_letters);
    let mut report = IdentityReport::new(format!(
        "Hopf structure on {} (<= {} letters)",
        a.name(),
        sweep.max_letters
    ));
    let show = |m: &Monomial| m.display(a);

    let mut h_exp = Tally::new("h_exponent_integrality");
    let mut coassoc = Tally::new("coassociativity");
    let mut counit = Tally::new("counit");
    let mut diff = Tally::new("coproduct_commutes_with_b");
    let mut homog = Tally::new("degree_homogeneity");
    let mut antipode = Tally::new("antipode").non_blocking();
    let mut inverse = Tally::new("recursive_antipode");
    let mut deltas = BTreeMap::new();
    for m in &basis {
        let x = one(m);
        for n in 2..=3 {
            for lab in super::enumerate_labelings(m, n) {
                let r = q.h_exponent(m, &lab);
                h_exp.check(r.is_ok(), || {
                    format!("{} with {:?}: {}", show(m), lab, r.unwrap_err())
                });
            }
        }
        let d = q.coproduct(&x)?;
        let d3 = q.coproduct_n(&x, 3)?;
        let left = q.apply_slot(&d, 0, |y| q.coproduct(&one(y)))?;
        let right = q.apply_slot(&d, 1, |y| q.coproduct(&one(y)))?;
        coassoc.check(left == d3 && right == d3, || {
            format!(
                "{}: (Δ⊗1)Δ = {}, Δ₃ = {}, (1⊗Δ)Δ = {}",
                show(m),
                fmt_tensor(a, &left),
                fmt_tensor(a, &d3),
                fmt_tensor(a, &right)
            )
        });

        let mut l = QuantElement::new();
        let mut r = QuantElement::new();
        for ((ms, e), c) in d.iter() {
            if ms[0].is_unit() {
                l.add_term((ms[1].clone(), *e), c.clone());
            }
            if ms[1].is_unit() {
                r.add_term((ms[0].clone(), *e), c.clone());
            }
        }
        counit.check(l == x && r == x, || {
            format!(
                "{}: (ε⊗1)Δ = {}, (1⊗ε)Δ = {}",
                show(m),
                fmt_element(a, &l),
                fmt_element(a, &r)
            )
        });

        let bd = q.coproduct(&q.quant_b(&x))?;
        let db = q.tensor_b(&d);
        diff.check(bd == db, || {
            format!(
                "{}: Δb = {}, (b⊗1 + 1⊗b)Δ = {}",
                show(m),
                fmt_tensor(a, &bd),
                fmt_tensor(a, &db)
            )
        });

        let deg = m.degree(a);
        let hd = h_degree(a);
        let ok = d.iter().all(|((ms, e), _)| {
            ms.iter().map(|y| y.degree(a)).sum::<i64>() + *e as i64 * hd == deg
        }) && q
            .quant_b(&x)
            .iter()
            .all(|((y, e), _)| term_degree(a, y, *e) == deg - 1)
            && q.antipode(&x)
                .iter()
                .all(|((y, e), _)| term_degree(a, y, *e) == deg);
        homog.check(ok, || {
            format!("{} is not homogeneous under Δ, b or S", show(m))
        });

        // μ(S⊗1)Δ = ηε
        let mut s = QuantElement::new();
        for ((ms, e), c) in d.iter() {
            let sx = q.antipode(&one(&ms[0]));
            s.add_scaled(&shift_h(&q.mul(&sx, &one(&ms[1])), *e), c);
        }
        let want = if m.is_unit() {
            x.clone()
        } else {
            QuantElement::new()
        };
        antipode.check(s == want, || {
            format!("{}: μ(S⊗1)Δ = {}", show(m), fmt_element(a, &s))
        });

        // The recursive inverse must also be a right inverse.
        let mut r = QuantElement::new();
        for ((ms, e), c) in d.iter() {
            let sy = q.antipode_recursive(&one(&ms[1]))?;
            r.add_scaled(&shift_h(&q.mul(&one(&ms[0]), &sy), *e), c);
        }
        inverse.check(r == want, || {
            format!("{}: μ(1⊗S)Δ = {}", show(m), fmt_element(a, &r))
        });
        deltas.insert(m.clone(), d);
    }

    let mut mult = Tally::new("coproduct_is_multiplicative");
    for x in &basis {
        for y in &basis {
            if x.len() + y.len() > sweep.max_letters {
                continue;
            }
            let lhs = q.coproduct(&q.product(x, y))?;
            let rhs = q.tensor_mul(&deltas[x], &deltas[y]);
            mult.check(lhs == rhs, || {
                format!(
                    "x = {}, y = {}: Δ(xy) = {}, Δ(x)Δ(y) = {}",
                    show(x),
                    show(y),
                    fmt_tensor(a, &lhs),
                    fmt_tensor(a, &rhs)
                )
            });
        }
    }

    let mut well = Tally::new("coproduct_well_defined");
    let mut rng = ChaCha8Rng::seed_from_u64(sweep.seed);
    let letters = q.alphabet();
    for _ in 0..sweep.scrambles {
        let len = rng.gen_range(1..=sweep.max_letters.max(1));
        let m = random_monomial(&mut rng, &letters, len);
        let raw = q.coproduct(&one(&m))?;
        let nf = q.coproduct(&q.normal_form(&m))?;
        well.check(raw == nf, || {
            format!(
                "{}: Δ = {}, Δ∘NF = {}",
                show(&m),
                fmt_tensor(a, &raw),
                fmt_tensor(a, &nf)
            )
        });
    }

    for t in [
        mult, coassoc, diff, well, h_exp, counit, homog, inverse, antipode,
    ] {
        report.push(t.finish());
    }
    Ok(report)
}

/// `b² = 0` on the PBW monomials, and rewriting commutes with `b` on scrambled monomials.
pub fn check_differential(
    q: &Quantizer,
    max_letters: usize,
    scrambles: usize,
    seed: u64,
) -> IdentityReport {
    let a = q.algebra();
    let mut report = IdentityReport::new(format!(
        "height differential on {} (<= {} letters)",
        a.name(),
        max_letters
    ));
    let mut sq = Tally::new("b_squared_zero");
    for m in pbw_basis(q, max_letters) {
        let bb = q.quant_b(&q.quant_b(&one(&m)));
        sq.check(bb.is_zero(), || {
            format!("b²({}) = {}", m.display(a), fmt_element(a, &bb))
        });
    }
    let mut comm = Tally::new("b_commutes_with_rewriting");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = q.alphabet();
    for _ in 0..scrambles {
        let len = rng.gen_range(1..=max_letters.max(1));
        let m = random_monomial(&mut rng, &letters, len);
        let first = q.normalize(&q.quant_b_raw(&m));
        let second = q.quant_b(&q.normal_form(&m));
        comm.check(first == second, || {
            format!(
                "{}: NF(b X) = {}, b(NF X) = {}",
                m.display(a),
                fmt_element(a, &first),
                fmt_element(a, &second)
            )
        });
    }
    report.push(sq.finish());
    report.push(comm.finish());
    report
}

/// The PBW lift of a cyclic class: its representative with heights `1..n`.
pub fn lift(q: &Quantizer, c: &CyclicClass) -> QuantElement {
    let w: Written = vec![c
        .representative
        .0
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i as i64))
        .collect()];
    let mut raw = QuantElement::new();
    add_written(q.algebra(), &mut raw, &w, 0, &int(1));
    q.normalize(&raw)
}

pub fn lift_element(q: &Quantizer, x: &Lin<CyclicClass>) -> QuantElement {
    let mut out = QuantElement::new();
    for (c, k) in x.iter() {
        out.add_scaled(&lift(q, c), k);
    }
    out
}

/// The class of a one-necklace monomial `M`, with `E(M) = s·lift(class)`.
fn class_of_monomial(a: &FrobeniusAlgebra, m: &Monomial) -> Option<(CyclicClass, i32)> {
    let comps = m.components();
    if comps.len() != 1 {
        return None;
    }
    let w = Word(comps[0].iter().map(|&h| m.letters()[h]).collect());
    canonical(a, &w).map(|(r, s)| (CyclicClass { representative: r }, s))
}

/// Compares the quantum operations with the classical Lie bialgebra on the
/// classes of at most `max_letters` letters.
pub fn check_quantization(
    q: &Quantizer,
    max_letters: usize,
    bracket_letters: usize,
) -> Result<IdentityReport> {
    let a = q.algebra();
    let mut report = IdentityReport::new(format!(
        "quantization of the Lie bialgebra of {} (<= {} letters)",
        a.name(),
        max_letters
    ));
    let mut cong = Tally::new("cobracket_congruence");
    for x in classes_over(a, &q.alphabet(), max_letters) {
        let xl = lift(q, &x);
        let mut d = q.coproduct(&xl)?;
        d.sub(&q.coproduct_op(&xl)?);
        let mut got = TensorSquare::new();
        let mut stray = Vec::new();
        for ((ms, e), c) in d.iter() {
            match e {
                0 => stray.push(format!(
                    "h^0 term {}",
                    fmt_tensor(a, &Lin::single((ms.clone(), 0), c.clone()))
                )),
                1 => match (class_of_monomial(a, &ms[0]), class_of_monomial(a, &ms[1])) {
                    (Some((u, su)), Some((v, sv))) => got.add_term((u, v), c * sgn(su * sv)),
                    _ => stray.push(format!(
                        "h^1 term {}",
                        fmt_tensor(a, &Lin::single((ms.clone(), 1), c.clone()))
                    )),
                },
                _ => {}
            }
        }
        let want = cobracket_class(a, &x);
        cong.check(stray.is_empty() && got == want, || {
            let show = |t: &TensorSquare| {
                t.iter()
                    .map(|((u, v), c)| format!("{} {}⊗{}", c, u.display(a), v.display(a)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            format!(
                "{}: (Δ - Δop)/h mod h = {} {}, cobracket = {}",
                x.display(a),
                show(&got),
                stray.join(", "),
                show(&want)
            )
        });
    }

    let mut comm = Tally::new("commutator_congruence");
    let classes = classes_over(a, &q.alphabet(), bracket_letters);
    for x in &classes {
        for y in &classes {
            let (xl, yl) = (lift(q, x), lift(q, y));
            let mut c = q.mul(&xl, &yl);
            let s = pow_neg1(l_degree(a, x) * l_degree(a, y));
            c.add_scaled(&q.mul(&yl, &xl), &-sgn(s));
            let c = mod_h(&c);
            let want = mod_h(&lift_element(q, &bracket_classes(a, x, y)));
            comm.check(c == want, || {
                format!(
                    "x = {}, y = {}: XY ∓ YX = {}, lift of bracket = {}",
                    x.display(a),
                    y.display(a),
                    fmt_element(a, &c),
                    fmt_element(a, &want)
                )
            });
        }
    }
    report.push(cong.finish());
    report.push(comm.finish());
    Ok(report)
}

/// Per-degree comparison of `A/hA` with the graded symmetric algebra on the classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwRow {
    pub degree: i64,
    /// Rank of the normal forms mod `h` of all monomials of this degree.
    pub rank: usize,
    /// Graded-symmetric monomials in the classes of this degree.
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwReport {
    pub identities: IdentityReport,
    pub rows: Vec<PbwRow>,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.identities.passed()
    }
}

/// Every monomial with exactly `len` letters.
fn all_monomials(letters: &[usize], len: usize) -> Vec<Monomial> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut v = p.clone();
                v.insert(i, n - 1);
                out.push(v);
            }
        }
        out
    }
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| letters.iter().map(move |&x| [w.clone(), vec![x]].concat()))
            .collect();
    }
    let ps = perms(len);
    let mut out = Vec::new();
    for w in &words {
        for p in &ps {
            out.push(Monomial::from_parts(w.clone(), p.clone()).unwrap());
        }
    }
    out
}

/// Confluence of the two rewriting strategies on scrambled monomials, and
/// the ranks of `A/hA` against the graded symmetric algebra on the classes.
pub fn pbw_check(q: &Quantizer, max_letters: usize, scrambles: usize, seed: u64) -> PbwReport {
    let a = q.algebra();
    let letters = q.alphabet();
    let left = q.twin(Strategy::Leftmost);
    let right = q.twin(Strategy::Rightmost);
    let mut identities = IdentityReport::new(format!(
        "PBW basis of {} (<= {} letters)",
        a.name(),
        max_letters
    ));

    let mut conf = Tally::new("strategy_independence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..scrambles {
        let len = rng.gen_range(1..=max_letters.max(1));
        let m = random_monomial(&mut rng, &letters, len);
        let (x, y) = (left.normal_form(&m), right.normal_form(&m));
        conf.check(x == y, || {
            format!(
                "{}: leftmost {}, rightmost {}",
                m.display(a),
                fmt_element(a, &x),
                fmt_element(a, &y)
            )
        });
    }

    let mut fixed = Tally::new("basis_fixed_by_rewriting");
    for m in pbw_basis(&left, max_letters) {
        fixed.check(left.normal_form(&m) == one(&m), || m.display(a));
    }

    // Rank of the span of normal forms mod h, per degree.
    let mut spans: BTreeMap<i64, Vec<QuantElement>> = BTreeMap::new();
    for len in 0..=max_letters {
        for m in all_monomials(&letters, len) {
            spans
                .entry(m.degree(a))
                .or_default()
                .push(mod_h(&left.normal_form(&m)));
        }
    }
    let mut rank_of = BTreeMap::new();
    for (deg, elems) in &spans {
        let mut cols: BTreeMap<Monomial, usize> = BTreeMap::new();
        for e in elems {
            for ((m, _), _) in e.iter() {
                let n = cols.len();
                cols.entry(m.clone()).or_insert(n);
            }
        }
        let mut mat = SparseMatrix::new(elems.len(), cols.len());
        for (r, e) in elems.iter().enumerate() {
            for ((m, _), c) in e.iter() {
                mat.add(r, cols[m], c.clone());
            }
        }
        rank_of.insert(*deg, crate::exact::rank_and_kernel(&mat).0);
    }

    // Graded symmetric algebra: odd classes at most once.
    let classes = classes_over(a, &letters, max_letters);
    let mut counts: BTreeMap<(i64, usize), usize> = BTreeMap::new();
    counts.insert((0, 0), 1);
    for c in &classes {
        let (deg, len) = (l_degree(a, c), c.len());
        let odd = deg.rem_euclid(2) == 1;
        let mut next = counts.clone();
        for (&(d, l), &k) in &counts {
            let mut mult = 1;
            loop {
                if l + mult * len > max_letters || (odd && mult > 1) {
                    break;
                }
                *next
                    .entry((d + mult as i64 * deg, l + mult * len))
                    .or_default() += k;
                mult += 1;
            }
        }
        counts = next;
    }
    let mut expected: BTreeMap<i64, usize> = BTreeMap::new();
    for ((d, _), k) in counts {
        *expected.entry(d).or_default() += k;
    }

    let mut rows = Vec::new();
    let mut ranks = Tally::new("ranks_match_symmetric_algebra");
    let degrees: std::collections::BTreeSet<i64> =
        rank_of.keys().chain(expected.keys()).copied().collect();
    for d in degrees {
        let row = PbwRow {
            degree: d,
            rank: rank_of.get(&d).copied().unwrap_or(0),
            expected: expected.get(&d).copied().unwrap_or(0),
        };
        ranks.check(row.rank == row.expected, || {
            format!("degree {}: rank {}, expected {}", d, row.rank, row.expected)
        });
        rows.push(row);
    }
    identities.push(conf.finish());
    identities.push(fixed.finish());
    identities.push(ranks.finish());
    PbwReport { identities, rows }
}

/// Coefficients of an element as polynomials in `h`, for display.
pub fn coefficients(x: &QuantElement) -> BTreeMap<Monomial, HPoly> {
    collect_h(x)
}
