use super::*;
use crate::frobenius::FrobeniusAlgebra;
use crate::report::{IdentityReport, Tally};

fn apply(ch: &Chain, f: impl Fn(&Word) -> Chain) -> Chain {
    let mut out = Chain::new();
    for (k, c) in ch.iter() {
        out.add_scaled(&f(k), c);
    }
    out
}

/// Every word of length `1..=max_len` whose first letter is drawn from
/// `first` and the others from `rest`.
fn words(first: &[usize], rest: &[usize], max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = first.iter().map(|&x| vec![x]).collect();
    for _ in 0..max_len {
        out.extend(layer.iter().cloned().map(Word));
        layer = layer
            .iter()
            .flat_map(|w| {
                rest.iter().map(move |&x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn show(a: &FrobeniusAlgebra, c: &Chain) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.iter()
        .map(|(w, k)| format!("{}·{}", crate::exact::fmt_rat(k), w.display(a)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Exhaustive identities of the two complexes: `b² = 0` and degree
/// bookkeeping on coideal words of length `<= max_len`, `N` intertwining the
/// two differentials, and `B² = 0`, `bB + Bb = 0`, `b² = 0` on the normalized
/// complex up to length `max_len_connes`.
pub fn check_complexes(
    a: &FrobeniusAlgebra,
    max_len: usize,
    max_len_connes: usize,
) -> IdentityReport {
    let mut report = IdentityReport::new(format!(
        "Hochschild and Connes complexes of {} (<= {} letters)",
        a.name(),
        max_len
    ));
    let mut sq = Tally::new("b_squared_zero");
    let mut deg = Tally::new("b_lowers_degree_by_one");
    let mut sub = Tally::new("connes_subcomplex");
    for x in words(a.letters(), a.letters(), max_len) {
        let b = hochschild_b(a, &x);
        deg.check(
            b.iter().all(|(y, _)| y.degree(a) == x.degree(a) - 1),
            || format!("b{} = {}", x.display(a), show(a, &b)),
        );
        let bb = apply(&b, |y| hochschild_b(a, y));
        sq.check(bb.is_zero(), || {
            format!("b²{} = {}", x.display(a), show(a, &bb))
        });
        let bn = apply(&norm_expand(a, &x), |y| hochschild_b(a, y));
        let nb = apply(&hochschild_b_open(a, &x), |y| norm_expand(a, y));
        sub.check(bn == nb, || {
            format!(
                "bN{} = {}, Nb'{} = {}",
                x.display(a),
                show(a, &bn),
                x.display(a),
                show(a, &nb)
            )
        });
    }

    let all: Vec<usize> = (0..a.dim()).collect();
    let mut big_sq = Tally::new("connes_B_squared_zero");
    let mut anti = Tally::new("bB_plus_Bb_zero");
    let mut norm_sq = Tally::new("normalized_b_squared_zero");
    for x in words(&all, a.letters(), max_len_connes) {
        let bx = connes_b(a, &x);
        let b2 = apply(&bx, |y| connes_b(a, y));
        big_sq.check(b2.is_zero(), || {
            format!("B²{} = {}", x.display(a), show(a, &b2))
        });
        let mut s = apply(&bx, |y| hochschild_b_normalized(a, y));
        s.add(&apply(&hochschild_b_normalized(a, &x), |y| connes_b(a, y)));
        anti.check(s.is_zero(), || {
            format!("(bB + Bb){} = {}", x.display(a), show(a, &s))
        });
        let n2 = apply(&hochschild_b_normalized(a, &x), |y| {
            hochschild_b_normalized(a, y)
        });
        norm_sq.check(n2.is_zero(), || {
            format!("b²{} = {}", x.display(a), show(a, &n2))
        });
    }
    for t in [sq, deg, sub, big_sq, anti, norm_sq] {
        report.push(t.finish());
    }
    report
}
