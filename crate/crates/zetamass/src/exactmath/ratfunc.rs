//! Exact univariate rational functions over the rationals, kept in a
//! canonical form (coprime numerator/denominator, monic denominator) so that
//! equality of values is structural equality.

use super::{QQ, UniPoly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionQ {
    num: UniPoly,
    den: UniPoly,
}

/// Canonicalize `num/den`: reduce by the polynomial gcd and scale the
/// denominator monic. Equal fractions yield identical structures.
pub fn rf_normalize(num: UniPoly, den: UniPoly) -> Result<RationalFunctionQ> {
    if den.is_zero() {
        return Err(Error::computation("division by zero polynomial"));
    }
    if num.is_zero() {
        return Ok(RationalFunctionQ { num: UniPoly::zero(den.var().to_string()), den: UniPoly::one(den.var().to_string()) });
    }
    let g = num.gcd(&den);
    let (mut num, r1) = num.div_rem(&g)?;
    debug_assert!(r1.is_zero());
    let (mut den, r2) = den.div_rem(&g)?;
    debug_assert!(r2.is_zero());
    let lead = den.leading_coeff();
    if !lead.is_one() {
        let inv = lead.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Ok(RationalFunctionQ { num, den })
}

impl RationalFunctionQ {
    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var().to_string();
        RationalFunctionQ { num: p, den: UniPoly::one(var) }
    }

    pub fn zero(var: impl Into<String>) -> Self {
        let var = var.into();
        RationalFunctionQ { num: UniPoly::zero(var.clone()), den: UniPoly::one(var) }
    }

    pub fn constant(var: impl Into<String>, c: QQ) -> Self {
        Self::from_poly(UniPoly::constant(var, c))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn var(&self) -> &str {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True iff the denominator is 1 after canonicalization.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact evaluation; errors on denominator zeros.
    pub fn eval(&self, x: &QQ) -> Result<QQ> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::computation(format!(
                "evaluation at a pole ({} = {})",
                self.var(),
                super::fmt_qq(x)
            )));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Multiply by x^k with k possibly negative (as a rational function).
    pub fn mul_var_pow(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            rf_normalize(self.num.shift_up(k as usize), self.den.clone())
        } else {
            rf_normalize(self.num.clone(), self.den.shift_up((-k) as usize))
        }
    }
}

/// The involution x -> 1/(Q x) on rational functions (exact).
pub fn rf_substitute_inv(f: &RationalFunctionQ, q: &QQ) -> Result<RationalFunctionQ> {
    if q.is_zero() {
        return Err(Error::computation("substitution base Q must be nonzero"));
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    // f(1/(Qx)) = num(1/(Qx)) / den(1/(Qx)); multiply both by (Qx)^D with
    // D = max(deg num, deg den) to clear the negative powers.
    let d = f.num.degree().unwrap_or(0).max(f.den.degree().unwrap_or(0));
    let num = f.num.reverse_scaled(q, d)?;
    let den = f.den.reverse_scaled(q, d)?;
    rf_normalize(num, den)
}

/// Residue of `f` at a simple pole: lim (x - pole) f(x), exactly.
pub fn rf_residue_simple(f: &RationalFunctionQ, pole: &QQ) -> Result<QQ> {
    if !f.den.eval(pole).is_zero() {
        return Err(Error::computation("not a pole"));
    }
    // den = (x - pole) * h with h(pole) != 0 required for simplicity.
    let linear = UniPoly::new(f.var().to_string(), vec![-pole.clone(), QQ::one()]);
    let (h, r) = f.den.div_rem(&linear)?;
    debug_assert!(r.is_zero());
    let h_at = h.eval(pole);
    if h_at.is_zero() {
        return Err(Error::computation("pole not simple"));
    }
    Ok(f.num.eval(pole) / h_at)
}

impl Add for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn add(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        rf_normalize(num, den).expect("nonzero denominators")
    }
}

impl Sub for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn sub(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        let num = &self.num * &rhs.den - &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        rf_normalize(num, den).expect("nonzero denominators")
    }
}

impl Mul for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn mul(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        rf_normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn div(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        rf_normalize(&self.num * &rhs.den, &self.den * &rhs.num).expect("checked nonzero")
    }
}

impl Neg for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn neg(self) -> RationalFunctionQ {
        RationalFunctionQ { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
