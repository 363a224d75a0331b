use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use strtopo::exact::*;

fn arb_rat() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly() -> impl Strategy<Value = HPoly> {
    proptest::collection::vec(arb_rat(), 0..5).prop_map(HPoly::from_coeffs)
}

fn arb_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            proptest::collection::vec(prop_oneof![3 => Just(int(0)), 2 => arb_rat()], c),
            r,
        )
    })
}

fn sparse(d: &[Vec<Rational>]) -> SparseMatrix {
    let mut m = SparseMatrix::new(d.len(), d[0].len());
    for (r, row) in d.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            m.add(r, k, v.clone());
        }
    }
    m
}

/// Fraction-free Bareiss elimination after clearing denominators row by row.
fn bareiss_rank(d: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = d
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
            row.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let (rows, cols) = (m.len(), m[0].len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// `p(x)` at a rational point, by Horner.
fn eval(p: &HPoly, x: &Rational) -> Rational {
    p.coeffs()
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

#[test]
fn rank_examples() {
    assert_eq!(rank_and_kernel(&SparseMatrix::new(3, 4)), (0, 4));
    let mut id = SparseMatrix::new(3, 3);
    for i in 0..3 {
        id.add(i, i, int(1));
    }
    assert_eq!(rank_and_kernel(&id), (3, 0));
}

#[test]
fn hpoly_examples() {
    assert_eq!(hpoly_mul(&HPoly::one(), &HPoly::h()), HPoly::h());
    let p = HPoly::from_coeffs(vec![int(1), int(1)]);
    let q = HPoly::from_coeffs(vec![int(1), int(-1)]);
    assert_eq!(
        hpoly_mul(&p, &q),
        HPoly::from_coeffs(vec![int(1), int(0), int(-1)])
    );
    assert_eq!(
        hpoly_mod_h(&HPoly::from_coeffs(vec![int(3), int(2)])),
        int(3)
    );
    assert_eq!(hpoly_mod_h(&HPoly::monomial(int(1), 2)), int(0));
    assert_eq!(
        HPoly::from_coeffs(vec![int(2), int(0), int(0)])
            .coeffs()
            .len(),
        1
    );
    assert!(HPoly::from_coeffs(vec![int(0)]).is_zero());
}

#[test]
fn rational_parsing() {
    assert_eq!(parse_rat("-6/4"), Some(rat(-3, 2)));
    assert_eq!(parse_rat("7"), Some(int(7)));
    assert_eq!(parse_rat("1/0"), None);
    assert_eq!(fmt_rat(&rat(4, -6)), "-2/3");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rationals_are_canonical(n in -1000i64..1000, d in 1i64..1000, s in any::<bool>()) {
        let d = if s { d } else { -d };
        let r = rat(n, d);
        prop_assert!(r.denom().is_positive());
        prop_assert!(num_integer::gcd(r.numer().abs(), r.denom().clone()).is_one());
        prop_assert_eq!(r * int(d), int(n));
    }

    #[test]
    fn rational_field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * a.recip(), int(1));
        }
    }

    #[test]
    fn hpoly_ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &HPoly::one(), p.clone());
        let prod = &p * &q;
        prop_assert!(prod.coeffs().last().map_or(true, |c| !c.is_zero()));
    }

    #[test]
    fn hpoly_product_matches_convolution(p in arb_poly(), q in arb_poly()) {
        let prod = hpoly_mul(&p, &q);
        let n = p.coeffs().len() + q.coeffs().len();
        for k in 0..n {
            let mut want = Rational::zero();
            for i in 0..=k {
                want += p.coeff(i) * q.coeff(k - i);
            }
            prop_assert_eq!(prod.coeff(k), want);
        }
        for x in [int(0), int(2), rat(-1, 3)] {
            prop_assert_eq!(eval(&prod, &x), eval(&p, &x) * eval(&q, &x));
        }
        prop_assert_eq!(hpoly_mod_h(&prod), hpoly_mod_h(&p) * hpoly_mod_h(&q));
    }

    #[test]
    fn rank_matches_bareiss(d in arb_matrix(6)) {
        let (rank, ker) = rank_and_kernel(&sparse(&d));
        prop_assert_eq!(rank, bareiss_rank(&d));
        prop_assert_eq!(rank + ker, d[0].len());
    }

    #[test]
    fn rank_invariant_under_row_moves(d in arb_matrix(5), seed in any::<u64>(), k in arb_rat()) {
        prop_assume!(!k.is_zero());
        let base = rank_and_kernel(&sparse(&d)).0;
        let mut e = d.clone();
        let rows = e.len();
        e.rotate_left((seed as usize) % rows);
        let i = (seed as usize / 7) % rows;
        e[i] = e[i].iter().map(|x| x * &k).collect();
        prop_assert_eq!(rank_and_kernel(&sparse(&e)).0, base);
    }

    #[test]
    fn stored_entries_are_nonzero(d in arb_matrix(4)) {
        let mut m = sparse(&d);
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let v = m.get(r, c);
                m.add(r, c, -v);
            }
        }
        prop_assert_eq!(m.nnz(), 0);
    }
}
