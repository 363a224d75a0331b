use strtopo::exact::{int, rat};
use strtopo::frobenius::{
    builtin, builtin_names, kunneth, load_frobenius, to_document, validate_frobenius, Tables,
};
use strtopo::{Error, FrobeniusAlgebra};

fn failing(a: &FrobeniusAlgebra) -> Vec<String> {
    validate_frobenius(a)
        .failures()
        .map(|f| f.axiom.clone())
        .collect()
}

#[test]
fn builtins_pass_every_axiom() {
    for name in builtin_names() {
        let a = builtin(name).unwrap();
        assert!(failing(&a).is_empty(), "{name}: {:?}", failing(&a));
    }
}

#[test]
fn kunneth_products_pass() {
    let s2 = builtin("S2").unwrap();
    let s3 = builtin("S3").unwrap();
    let s7 = builtin("S7ext").unwrap();
    for (x, y) in [(&s2, &s2), (&s3, &s3), (&s2, &s3), (&s3, &s2), (&s3, &s7)] {
        let k = kunneth(x, y, "k").unwrap();
        assert!(
            failing(&k).is_empty(),
            "{} x {}: {:?}",
            x.name(),
            y.name(),
            failing(&k)
        );
    }
}

#[test]
fn s2xs2_is_kunneth_square_of_s2() {
    let s2 = builtin("S2").unwrap();
    let k = kunneth(&s2, &s2, "k").unwrap();
    let a = builtin("S2xS2").unwrap();
    let ix = |n: &str| k.index_of(n).unwrap();
    let ja = |n: &str| a.index_of(n).unwrap();
    let map = [
        ("e0_e0", "e0"),
        ("e2_e0", "a"),
        ("e0_e2", "b"),
        ("e2_e2", "t"),
    ];
    for (p, q) in map {
        for (r, s) in map {
            assert_eq!(k.pairing(ix(p), ix(r)), a.pairing(ja(q), ja(s)));
        }
    }
}

#[test]
fn coideal_examples() {
    let s2 = builtin("S2").unwrap();
    let c = s2.coideal();
    assert_eq!(c.elements, vec![1]);
    assert!(c.reduced_coproduct[&1].is_zero());

    let a = builtin("S2xS2").unwrap();
    let c = a.coideal();
    let names: Vec<&str> = c.elements.iter().map(|&i| a.gen_name(i)).collect();
    assert_eq!(names, ["a", "b", "t"]);
    let t = a.index_of("t").unwrap();
    let (ia, ib) = (a.index_of("a").unwrap(), a.index_of("b").unwrap());
    let dt = &c.reduced_coproduct[&t];
    assert_eq!(dt.len(), 2);
    assert_eq!(dt.get(&(ia, ib)), int(1));
    assert_eq!(dt.get(&(ib, ia)), int(1));

    assert!(builtin("point").unwrap().coideal().elements.is_empty());
}

#[test]
fn pairing_examples() {
    let a = builtin("S2xS2").unwrap();
    let i = |n: &str| a.index_of(n).unwrap();
    assert_eq!(a.pairing(i("t"), i("t")), int(0));
    assert_eq!(a.pairing(i("a"), i("b")), int(1));
    let s2 = builtin("S2").unwrap();
    assert_eq!(s2.pairing(1, 1), int(0));
}

#[test]
fn pairing_symmetry_and_degree() {
    for name in builtin_names() {
        let a = builtin(name).unwrap();
        let m = a.frobenius_degree();
        for &x in a.letters() {
            for &y in a.letters() {
                let p = a.pairing(x, y);
                if p != int(0) {
                    assert_eq!(a.degree(x) + a.degree(y), m);
                }
                // graded skew-symmetry after the shift C[1]
                let (sx, sy) = (a.shifted_degree(x), a.shifted_degree(y));
                let s = if (sx * sy) % 2 == 0 { int(-1) } else { int(1) };
                assert_eq!(a.pairing(y, x), p * s, "{name}");
            }
        }
        if m % 2 == 0 {
            for x in 0..a.dim() {
                for y in 0..a.dim() {
                    let s = if (a.degree(x) * a.degree(y)) % 2 == 0 {
                        int(1)
                    } else {
                        int(-1)
                    };
                    assert_eq!(a.pairing(y, x), a.pairing(x, y) * s);
                }
            }
        }
    }
}

#[test]
fn document_round_trip() {
    for name in builtin_names() {
        let a = builtin(name).unwrap();
        let b = load_frobenius(&to_document(&a)).unwrap();
        assert_eq!(a.tables(), b.tables());
    }
}

#[test]
fn s2_document_has_two_generators() {
    let a = builtin("S2").unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.pairing(1, 0), int(1));
}

#[test]
fn load_errors() {
    let doc = to_document(&builtin("S2").unwrap());
    let no_counit: String = doc
        .lines()
        .filter(|l| !l.starts_with("counit") && !l.starts_with("  e0 1"))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(
        load_frobenius(&no_counit).unwrap_err(),
        Error::MissingField("counit")
    );

    let bad = doc.replace("e2 e2 -> 1 e2", "e2 e2 -> one e2");
    assert!(matches!(load_frobenius(&bad), Err(Error::Parse { .. })));

    let bad = doc.replace("e2 e2 -> 1 e2", "e2 e2 -> 1 e0");
    assert!(matches!(load_frobenius(&bad), Err(Error::Degree(_))));

    let bad = doc.replace("e2 e2 -> 1 e2", "e2 e2 -> 1 e9");
    assert!(matches!(load_frobenius(&bad), Err(Error::Parse { .. })));

    let frac = doc.replace("e2 e2 -> 1 e2", "e2 e2 -> 3/6 e2");
    let a = load_frobenius(&frac).unwrap();
    assert_eq!(a.mul(1, 1).unwrap().get(&1), rat(1, 2));
}

#[test]
fn rescaled_product_breaks_module_compatibility() {
    let a = builtin("S2xS2").unwrap();
    let mut t: Tables = a.tables().clone();
    t.product.remove(&(t.index("a"), t.index("b")));
    t.add_product("a", "b", int(2), "e0");
    let r = validate_frobenius(&FrobeniusAlgebra::new(t).unwrap());
    let f = r
        .failures()
        .find(|f| f.axiom.starts_with("module_compatibility"))
        .expect("compatibility failure");
    let w = f.witness.clone().unwrap();
    assert!(w.iter().any(|x| x == "a" || x == "b" || x == "t"), "{w:?}");
}

#[test]
fn missing_coproduct_term_is_flagged() {
    let a = builtin("S2xS2").unwrap();
    let mut t: Tables = a.tables().clone();
    t.add_coproduct("t", int(-1), "a", "b");
    let f = failing(&FrobeniusAlgebra::new(t).unwrap());
    assert!(
        f.iter().any(|x| x == "coassociativity"
            || x.starts_with("module_compatibility")
            || x == "cocommutativity"),
        "{f:?}"
    );
}

#[test]
fn non_simply_connected_flag_is_checked() {
    let doc = "name circle\nfrobenius_degree 2\nsimply_connected true\nbasis\n  e0 0\n  x 1\n  w 2\nunit e0\ncounit\n  e0 1\nproduct\n  w w -> 1 w\n  w x -> 1 x\n  x w -> 1 x\n  w e0 -> 1 e0\n  e0 w -> 1 e0\n  x x -> 1 e0\ncoproduct\n  e0 -> 1 (e0 ⊗ e0)\n  x -> 1 (x ⊗ e0)\n  x -> 1 (e0 ⊗ x)\n  w -> 1 (w ⊗ e0)\n  w -> 1 (e0 ⊗ w)\n";
    let a = load_frobenius(doc).unwrap();
    let r = validate_frobenius(&a);
    assert!(r.failures().any(|f| f.axiom == "simply_connected"));
}

/// Every entry of the product and coproduct tables, as (table, key, term).
fn entries(t: &Tables) -> Vec<(bool, usize, usize)> {
    let mut out = Vec::new();
    for (k, (_, v)) in t.product.iter().enumerate() {
        for i in 0..v.len() {
            out.push((true, k, i));
        }
    }
    for (k, v) in t.coproduct.iter().enumerate() {
        for i in 0..v.len() {
            out.push((false, k, i));
        }
    }
    out
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(96))]

    #[test]
    fn single_entry_mutations_are_detected(
        which in 0usize..6,
        pick in proptest::prelude::any::<proptest::sample::Index>(),
        scale in proptest::prop_oneof![proptest::strategy::Just(int(0)), proptest::strategy::Just(int(2)), proptest::strategy::Just(int(-1)), proptest::strategy::Just(rat(1, 3))],
    ) {
        let names = ["S2", "S3", "S4", "S2xS2", "CP2", "S7ext"];
        let mut t = builtin(names[which]).unwrap().tables().clone();
        let all = entries(&t);
        let (is_product, k, i) = all[pick.index(all.len())];
        if is_product {
            let key = *t.product.keys().nth(k).unwrap();
            let lin = t.product.get_mut(&key).unwrap();
            let (z, c) = lin.iter().nth(i).map(|(z, c)| (*z, c.clone())).unwrap();
            lin.add_term(z, &c * &scale - &c);
        } else {
            let lin = &mut t.coproduct[k];
            let (z, c) = lin.iter().nth(i).map(|(z, c)| (*z, c.clone())).unwrap();
            lin.add_term(z, &c * &scale - &c);
        }
        let f = failing(&FrobeniusAlgebra::new(t).unwrap());
        proptest::prop_assert!(!f.is_empty());
    }
}
