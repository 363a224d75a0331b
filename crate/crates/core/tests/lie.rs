use strtopo::cyclic::{canonical, CyclicClass, Word};
use strtopo::exact::{int, Lin};
use strtopo::frobenius::{builtin, builtin_names, kunneth};
use strtopo::lie::*;
use strtopo::FrobeniusAlgebra;

fn alg(n: &str) -> FrobeniusAlgebra {
    builtin(n).unwrap()
}

fn class(a: &FrobeniusAlgebra, s: &[&str]) -> CyclicClass {
    let w = Word(s.iter().map(|x| a.index_of(x).unwrap()).collect());
    let (rep, _) = canonical(a, &w).expect("nonzero class");
    CyclicClass {
        representative: rep,
    }
}

fn one(c: &CyclicClass) -> LieElement {
    Lin::single(c.clone(), int(1))
}

#[test]
fn bracket_examples_on_s2xs2() {
    let a = alg("S2xS2");
    let at = class(&a, &["a", "t"]);
    let b = class(&a, &["b"]);
    let t = class(&a, &["t"]);
    let r = bracket_classes(&a, &at, &b);
    assert_eq!(r.len(), 1);
    let c = r.get(&t);
    assert!(c == int(1) || c == int(-1));
    assert_eq!(l_degree(&a, &t), l_degree(&a, &at) + l_degree(&a, &b));

    let aa = class(&a, &["a"]);
    assert!(bracket_classes(&a, &aa, &b).is_zero());
}

#[test]
fn s2_operations_vanish() {
    let a = alg("S2");
    let cls = classes_up_to(&a, 4);
    assert!(!cls.is_empty());
    for x in &cls {
        assert!(cobracket_class(&a, x).is_zero());
        for y in &cls {
            assert!(bracket_classes(&a, x, y).is_zero());
        }
    }
}

#[test]
fn cobracket_examples_on_s2xs2() {
    let a = alg("S2xS2");
    assert!(cobracket_class(&a, &class(&a, &["a"])).is_zero());

    // Only the pairs (a, b) at distance two contribute: both cuts leave N[t] on each side.
    let x = class(&a, &["a", "t", "b", "t"]);
    let t = class(&a, &["t"]);
    let d = cobracket_class(&a, &x);
    let expected: TensorSquare = Lin::single((t.clone(), t.clone()), int(2));
    assert_eq!(d, expected);
    assert_eq!(
        2 * l_degree(&a, &t),
        l_degree(&a, &x) + 2 * (2 - a.frobenius_degree())
    );
}

/// Brute force: expand `N` over every signed rotation and apply the raw formula.
#[test]
fn cobracket_matches_rotation_average() {
    for name in ["S2xS2", "CP2", "S7ext"] {
        let a = alg(name);
        for x in classes_up_to(&a, 4) {
            let want = cobracket_class(&a, &x);
            let mut avg = TensorSquare::new();
            let mut cur = x.representative.clone();
            let mut s = 1;
            let n = cur.len();
            for _ in 0..n {
                avg.add_scaled(&cobracket_raw(&a, &cur.0), &strtopo::exact::sgn(s));
                let (next, t) = strtopo::cyclic::cyclic_t(&a, &cur);
                cur = next;
                s *= t;
            }
            assert_eq!(avg, want.scaled(&int(n as i64)), "{name} {}", x.display(&a));
        }
    }
}

#[test]
fn degree_homogeneity() {
    let a = alg("CP2");
    let shift = 2 * (2 - a.frobenius_degree());
    let cls = classes_up_to(&a, 3);
    for x in &cls {
        for ((u, v), _) in cobracket_class(&a, x).iter() {
            assert_eq!(l_degree(&a, u) + l_degree(&a, v), l_degree(&a, x) + shift);
        }
        for y in &cls {
            for (z, _) in bracket_classes(&a, x, y).iter() {
                assert_eq!(l_degree(&a, z), l_degree(&a, x) + l_degree(&a, y));
            }
        }
    }
}

#[test]
fn full_suite_s2xs2_length_four() {
    let r = check_lie_bialgebra(&alg("S2xS2"), LieSweep::new(4));
    assert!(r.passed(), "{r}");
    for id in [
        "antisymmetry",
        "jacobi",
        "co_antisymmetry",
        "co_jacobi",
        "drinfeld",
        "involutivity",
        "derivation",
        "coderivation",
    ] {
        assert!(r.get(id).unwrap().cases > 0, "{id}");
    }
}

#[test]
fn full_suite_s3_length_five() {
    let r = check_lie_bialgebra(&alg("S3"), LieSweep::new(5));
    assert!(r.passed(), "{r}");
}

#[test]
fn full_suite_all_builtins() {
    for name in builtin_names() {
        let r = check_lie_bialgebra(&alg(name), LieSweep::new(3));
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn full_suite_odd_products() {
    for (x, y) in [("S2", "S3"), ("S3", "S3")] {
        let a = kunneth(&alg(x), &alg(y), &format!("{x}x{y}")).unwrap();
        let r = check_lie_bialgebra(&a, LieSweep::new(3));
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn mutated_pairing_is_detected() {
    let mut t = alg("S2xS2").tables().clone();
    let (ia, e0) = (t.index("a"), t.index("e0"));
    // ε(a·a) = 1 with no matching a⊗a term in Δ(t).
    t.product.insert((ia, ia), Lin::single(e0, int(1)));
    let a = FrobeniusAlgebra::new(t).unwrap();
    assert!(!strtopo::frobenius::validate_frobenius(&a).passed());
    let r = check_lie_bialgebra(&a, LieSweep::new(4));
    let broken = ["drinfeld", "coderivation"].iter().any(|id| {
        let x = r.get(id).unwrap();
        !x.passed && x.witness.is_some()
    });
    assert!(broken, "{r}");
}

#[test]
fn differential_squares_to_zero_on_s7ext() {
    let a = alg("S7ext");
    let x = class(&a, &["u", "v", "t"]);
    let dx = differential(&a, &one(&x));
    assert!(!dx.is_zero());
    assert!(differential(&a, &dx).is_zero());
}
