use super::ops::*;
use crate::cyclic::{canonical, cyclic_t, CyclicClass, Word};
use crate::exact::{sgn, Lin};
use crate::frobenius::FrobeniusAlgebra;
use crate::report::{IdentityReport, Tally};
use crate::sign::pow_neg1;

/// Length bounds for the exhaustive identity sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LieSweep {
    /// Bound on each argument of pairwise and triple identities.
    pub max_len: usize,
    /// Bound on the total length of the arguments of pairwise and triple identities.
    pub max_combined: usize,
    /// Bound for the single-argument identities.
    pub max_single: usize,
}

impl LieSweep {
    pub fn new(max_len: usize) -> Self {
        LieSweep {
            max_len,
            max_combined: max_len + 3,
            max_single: max_len + 1,
        }
    }
}

/// Every nonzero class with `1..=max_len` letters, ordered by length then representative.
pub fn classes_up_to(a: &FrobeniusAlgebra, max_len: usize) -> Vec<CyclicClass> {
    classes_over(a, a.letters(), max_len)
}

/// Every nonzero class with `1..=max_len` letters drawn from `letters`.
pub fn classes_over(a: &FrobeniusAlgebra, letters: &[usize], max_len: usize) -> Vec<CyclicClass> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &x in letters {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        for w in &next {
            let word = Word(w.clone());
            if let Some((r, _)) = canonical(a, &word) {
                if r == word {
                    out.push(CyclicClass { representative: r });
                }
            }
        }
        layer = next;
    }
    out
}

fn one(c: &CyclicClass) -> LieElement {
    Lin::single(c.clone(), sgn(1))
}

fn show_l(a: &FrobeniusAlgebra, x: &LieElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(k, c)| format!("{}·{}", crate::exact::fmt_rat(c), k.display(a)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn delta_tensor_id(a: &FrobeniusAlgebra, t: &TensorSquare) -> TensorCube {
    let mut out = TensorCube::new();
    for ((u, v), c) in t.iter() {
        for ((p, q), d) in cobracket_class(a, u).iter() {
            out.add_term((p.clone(), q.clone(), v.clone()), c * d);
        }
    }
    out
}

fn b_on_square(a: &FrobeniusAlgebra, t: &TensorSquare) -> TensorSquare {
    let mut out = TensorSquare::new();
    for ((u, v), c) in t.iter() {
        for (w, d) in differential(a, &one(u)).iter() {
            out.add_term((w.clone(), v.clone()), c * d);
        }
        let s = sgn(pow_neg1(l_degree(a, u)));
        for (w, d) in differential(a, &one(v)).iter() {
            out.add_term((u.clone(), w.clone()), c * d * &s);
        }
    }
    out
}

/// Signed rotations `(sign, word)` of a class representative, with `N(rep) = sign·N(word)`.
fn rotations(a: &FrobeniusAlgebra, c: &CyclicClass) -> Vec<(i32, Vec<usize>)> {
    let mut out = Vec::new();
    let mut cur = c.representative.clone();
    let mut s = 1;
    for _ in 0..cur.len() {
        out.push((s, cur.0.clone()));
        let (n, t) = cyclic_t(a, &cur);
        cur = n;
        s *= t;
    }
    out
}

/// Exhaustive check of the involutive DG Lie bialgebra identities.
pub fn check_lie_bialgebra(a: &FrobeniusAlgebra, sweep: LieSweep) -> IdentityReport {
    let mut report = IdentityReport::new(format!(
        "Lie bialgebra identities on {} (length <= {}, combined <= {}, single <= {})",
        a.name(),
        sweep.max_len,
        sweep.max_combined,
        sweep.max_single
    ));
    let small = classes_up_to(a, sweep.max_len);
    let single = classes_up_to(a, sweep.max_single);
    let deg = |c: &CyclicClass| l_degree(a, c);
    let s = |e: i64| sgn(pow_neg1(e));

    let mut t = Tally::new("antisymmetry");
    for x in &small {
        for y in &small {
            let mut r = bracket_classes(a, x, y);
            r.add_scaled(&bracket_classes(a, y, x), &s(deg(x) * deg(y)));
            t.check(r.is_zero(), || {
                format!("x={} y={}: {}", x.display(a), y.display(a), show_l(a, &r))
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new("jacobi");
    for (i, x) in small.iter().enumerate() {
        for (j, y) in small.iter().enumerate().skip(i) {
            for z in small.iter().skip(j) {
                if x.len() + y.len() + z.len() > sweep.max_combined {
                    continue;
                }
                let mut r =
                    bracket(a, &one(x), &bracket_classes(a, y, z)).scaled(&s(deg(x) * deg(z)));
                r.add_scaled(
                    &bracket(a, &one(y), &bracket_classes(a, z, x)),
                    &s(deg(y) * deg(x)),
                );
                r.add_scaled(
                    &bracket(a, &one(z), &bracket_classes(a, x, y)),
                    &s(deg(z) * deg(y)),
                );
                t.check(r.is_zero(), || {
                    format!(
                        "x={} y={} z={}: {}",
                        x.display(a),
                        y.display(a),
                        z.display(a),
                        show_l(a, &r)
                    )
                });
            }
        }
    }
    report.push(t.finish());

    let mut t = Tally::new("co_antisymmetry");
    for x in &single {
        let d = cobracket_class(a, x);
        let mut r = tau(a, &d);
        r.add(&d);
        t.check(r.is_zero(), || x.display(a));
    }
    report.push(t.finish());

    let mut t = Tally::new("co_jacobi");
    for x in &single {
        let dd = delta_tensor_id(a, &cobracket_class(a, x));
        let t1 = tau3(a, &dd);
        let t2 = tau3(a, &t1);
        let mut r = dd;
        r.add(&t1);
        r.add(&t2);
        t.check(r.is_zero(), || x.display(a));
    }
    report.push(t.finish());

    let mut t = Tally::new("drinfeld");
    for x in &small {
        for y in &small {
            if x.len() + y.len() > sweep.max_combined {
                continue;
            }
            let lhs = cobracket(a, &bracket_classes(a, x, y));
            let mut rhs = act(a, x, &cobracket_class(a, y));
            rhs.add_scaled(&act(a, y, &cobracket_class(a, x)), &-s(deg(x) * deg(y)));
            let mut r = lhs;
            r.sub(&rhs);
            t.check(r.is_zero(), || {
                format!("x={} y={}", x.display(a), y.display(a))
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new("involutivity");
    for x in &single {
        let mut r = LieElement::new();
        for ((u, v), c) in cobracket_class(a, x).iter() {
            r.add_scaled(&bracket_classes(a, u, v), c);
        }
        t.check(r.is_zero(), || {
            format!("{}: {}", x.display(a), show_l(a, &r))
        });
    }
    report.push(t.finish());

    let mut t = Tally::new("derivation");
    for x in &small {
        for y in &small {
            if x.len() + y.len() > sweep.max_combined {
                continue;
            }
            let lhs = differential(a, &bracket_classes(a, x, y));
            let mut rhs = bracket(a, &differential(a, &one(x)), &one(y));
            rhs.add_scaled(&bracket(a, &one(x), &differential(a, &one(y))), &s(deg(x)));
            let mut r = lhs;
            r.sub(&rhs);
            t.check(r.is_zero(), || {
                format!("x={} y={}", x.display(a), y.display(a))
            });
        }
    }
    report.push(t.finish());

    let mut t = Tally::new("coderivation");
    for x in &single {
        let lhs = cobracket(a, &differential(a, &one(x)));
        let mut r = b_on_square(a, &cobracket_class(a, x));
        r.sub(&lhs);
        t.check(r.is_zero(), || x.display(a));
    }
    report.push(t.finish());

    let mut t = Tally::new("rotation_oracle");
    for x in &small {
        let rx = rotations(a, x);
        for y in &small {
            if x.len() + y.len() > sweep.max_combined {
                continue;
            }
            let want = bracket_classes(a, x, y);
            for (sx, wx) in &rx {
                for (sy, wy) in rotations(a, y) {
                    let got = bracket_raw(a, wx, &wy).scaled(&sgn(sx * sy));
                    t.check(got == want, || {
                        format!("bracket x={} y={}", x.display(a), y.display(a))
                    });
                }
            }
        }
    }
    for x in &single {
        let want = cobracket_class(a, x);
        for (sx, wx) in rotations(a, x) {
            let got = cobracket_raw(a, &wx).scaled(&sgn(sx));
            t.check(got == want, || format!("cobracket x={}", x.display(a)));
        }
    }
    report.push(t.finish());

    let mut t = Tally::new("degrees");
    let m = a.frobenius_degree();
    for x in &small {
        for y in &small {
            for (k, _) in bracket_classes(a, x, y).iter() {
                t.check(deg(k) == deg(x) + deg(y), || {
                    format!("bracket x={} y={}", x.display(a), y.display(a))
                });
            }
        }
        for ((p, q), _) in cobracket_class(a, x).iter() {
            t.check(deg(p) + deg(q) == deg(x) + 2 * (2 - m), || {
                format!("cobracket x={}", x.display(a))
            });
        }
    }
    report.push(t.finish());
    report
}
