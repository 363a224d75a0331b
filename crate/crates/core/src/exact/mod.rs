//! Exact scalars, polynomials in `h`, linear combinations and sparse rank.

mod hpoly;
mod lin;
mod matrix;

pub use hpoly::{hpoly_mod_h, hpoly_mul, HPoly};
pub use lin::Lin;
pub use matrix::{rank_and_kernel, SparseMatrix};

pub use num_rational::BigRational as Rational;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn sgn(s: i32) -> Rational {
    if s >= 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `p/q` or `p` when `q = 1`.
pub fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
