//! Exact rational, polynomial, rational-function, and high-precision
//! arithmetic kernel used by every other module.

mod hp;
mod poly;
mod ratfunc;
mod roots;

pub use hp::{
    bernoulli, fmt_decimal, gamma_complex, gamma_r, hp_from_qq, hp_pi, hp_zeta, is_gamma_r_pole,
    prec_bits, HPComplex,
};
pub use poly::UniPoly;
pub use ratfunc::{rf_normalize, rf_residue_simple, rf_substitute_inv, RationalFunctionQ};
pub use roots::poly_roots_numeric;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored reduced with positive denominator
/// (the `num_rational` canonical form).
pub type QQ = num_rational::BigRational;

/// Rational from an integer pair.
pub fn qq(num: i64, den: i64) -> QQ {
    QQ::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qq_int(n: i64) -> QQ {
    QQ::from_integer(BigInt::from(n))
}

/// Integer power with negative exponents allowed (error on 0^negative).
pub fn qq_pow(base: &QQ, exp: i64) -> Result<QQ> {
    if base.is_zero() && exp < 0 {
        return Err(Error::computation("zero base with negative exponent"));
    }
    if exp >= 0 {
        Ok(num_traits::pow::pow(base.clone(), exp as usize))
    } else {
        Ok(num_traits::pow::pow(base.clone(), (-exp) as usize)
            .recip())
    }
}

/// Fractional part in [0, 1): `frac_part(-1/3) = 2/3`.
pub fn frac_part(x: &QQ) -> QQ {
    let f = x - x.floor();
    debug_assert!(!f.is_negative() && f < QQ::one());
    f
}

/// True iff the rational is an integer.
pub fn qq_is_integer(x: &QQ) -> bool {
    x.is_integer()
}

/// Serialize as `"p/q"`, or `"p"` when the denominator is 1 (repo-wide
/// convention for exact rationals).
pub fn fmt_qq(x: &QQ) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse the `"p/q"` / `"p"` convention.
pub fn parse_qq(s: &str) -> Result<QQ> {
    let s = s.trim();
    let mk_err = || Error::input(format!("malformed rational {s:?} (expected \"p\" or \"p/q\")"));
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s.parse().map_err(|_| mk_err())?;
    let den: BigInt = den_s.parse().map_err(|_| mk_err())?;
    if den.is_zero() {
        return Err(Error::input(format!("zero denominator in rational {s:?}")));
    }
    Ok(QQ::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_reduces() {
        let a = qq(1, 2) + qq(1, 3);
        assert_eq!(a, qq(5, 6));
        let b = qq(2, 4);
        assert_eq!(fmt_qq(&b), "1/2");
        assert_eq!(fmt_qq(&qq_int(-7)), "-7");
    }

    #[test]
    fn fractional_part_convention() {
        assert_eq!(frac_part(&qq(-1, 3)), qq(2, 3));
        assert_eq!(frac_part(&qq(7, 2)), qq(1, 2));
        assert_eq!(frac_part(&qq_int(5)), qq_int(0));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-3", "11/7", "-66/7", "0"] {
            let x = parse_qq(s).unwrap();
            assert_eq!(fmt_qq(&x), s);
        }
        assert_eq!(parse_qq("4/6").unwrap(), qq(2, 3));
        assert!(parse_qq("1/0").is_err());
        assert!(parse_qq("a/b").is_err());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(qq_pow(&qq_int(2), 10).unwrap(), qq_int(1024));
        assert_eq!(qq_pow(&qq_int(2), -2).unwrap(), qq(1, 4));
        assert_eq!(qq_pow(&qq(5, 2), 0).unwrap(), qq_int(1));
        assert!(qq_pow(&qq_int(0), -1).is_err());
    }
}
