//! Dense univariate polynomials over the rationals in a named variable.

use super::QQ;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial with exact rational coefficients, stored dense in
/// ascending degree order. Invariant: the highest-degree stored coefficient
/// is nonzero unless the polynomial is zero (empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<QQ>,
}

impl UniPoly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(var: impl Into<String>, mut coeffs: Vec<QQ>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var: var.into(), coeffs }
    }

    pub fn zero(var: impl Into<String>) -> Self {
        UniPoly { var: var.into(), coeffs: Vec::new() }
    }

    pub fn constant(var: impl Into<String>, c: QQ) -> Self {
        Self::new(var, vec![c])
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, QQ::one())
    }

    /// The monomial c * x^deg.
    pub fn monomial(var: impl Into<String>, deg: usize, c: QQ) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![QQ::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { var: var.into(), coeffs }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> QQ {
        self.coeffs.get(i).cloned().unwrap_or_else(QQ::zero)
    }

    pub fn coeffs(&self) -> &[QQ] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> QQ {
        self.coeffs.last().cloned().unwrap_or_else(QQ::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &QQ) -> QQ {
        let mut acc = QQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.var.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * QQ::from_integer(i.into()))
            .collect();
        UniPoly::new(self.var.clone(), coeffs)
    }

    pub fn scale(&self, s: &QQ) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![QQ::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { var: self.var.clone(), coeffs }
    }

    /// p(x) -> a^deg * p(b x / a) style substitutions are not needed; the one
    /// substitution the workbench uses is x -> 1/(Q x) on rational functions,
    /// built from this primitive: the "reversal" sum_i c_i Q^(D-i) x^(D-i)
    /// representing p(1/(Qx)) * (Qx)^D for D >= deg p.
    pub fn reverse_scaled(&self, q: &QQ, d: usize) -> Result<UniPoly> {
        let deg = self.degree().unwrap_or(0);
        if d < deg {
            return Err(Error::computation("reverse_scaled needs d >= deg"));
        }
        let mut coeffs = vec![QQ::zero(); d + 1];
        let mut qpow = QQ::one();
        // walk j = d-i downward: coefficient of x^(d-i) is c_i * Q^(d-i)
        for j in 0..=d {
            // coefficient c_{d-j} * Q^{j}? Careful: we want, for each source
            // index i, target index d-i with factor Q^(d-i).
            if j > 0 {
                qpow *= q;
            }
            let i = d - j;
            if i < self.coeffs.len() && !self.coeffs[i].is_zero() {
                coeffs[j] = &self.coeffs[i] * &qpow;
            }
        }
        Ok(UniPoly::new(self.var.clone(), coeffs))
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.var.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Make the leading coefficient 1 (zero polynomial stays zero).
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if div.is_zero() {
            return Err(Error::computation("division by zero polynomial"));
        }
        let dd = div.degree().unwrap();
        let lead_inv = div.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QQ::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd; // quotient degree being produced
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let idx = k + i;
                    let sub = c * &factor;
                    rem[idx] = &rem[idx] - sub;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Ok((
            UniPoly::new(self.var.clone(), quot),
            UniPoly::new(self.var.clone(), rem),
        ))
    }

    /// Monic polynomial gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Evaluate at a complex point at the point's precision.
    pub fn eval_complex(&self, z: &super::HPComplex) -> super::HPComplex {
        let prec = z.prec();
        let mut acc = super::HPComplex::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &super::HPComplex::from_qq(prec, c);
        }
        acc
    }

    fn fmt_term(c: &QQ, var: &str, deg: usize) -> String {
        if deg == 0 {
            return super::fmt_qq(c);
        }
        let var_part = if deg == 1 { var.to_string() } else { format!("{var}^{deg}") };
        let sign = if c.is_negative() { "-" } else { "" };
        let a = c.abs();
        if a.is_one() {
            format!("{sign}{var_part}")
        } else if a.is_integer() {
            format!("{sign}{}{var_part}", a.numer())
        } else {
            format!("{sign}({}){var_part}", super::fmt_qq(&a))
        }
    }
}

impl fmt::Display for UniPoly {
    /// Human-readable ascending form: `1+2t^2`, `1-3t+2t^2`, `-t`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::fmt_term(c, &self.var, deg);
            if out.is_empty() {
                out.push_str(&term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push('-');
                out.push_str(stripped);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        write!(f, "{out}")
    }
}

fn binop_add(a: &UniPoly, b: &UniPoly, sub: bool) -> UniPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.coeff(i);
        let y = b.coeff(i);
        coeffs.push(if sub { x - y } else { x + y });
    }
    UniPoly::new(a.var.clone(), coeffs)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        binop_add(self, rhs, false)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        binop_add(self, rhs, true)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        let mut coeffs = vec![QQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                self.$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::{qq, qq_int};
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::new("T", coeffs.iter().map(|&c| qq_int(c)).collect())
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        let z = UniPoly::new("T", vec![qq_int(1), qq_int(0), qq_int(0)]);
        assert_eq!(z.degree(), Some(0));
        assert!(UniPoly::new("T", vec![qq_int(0)]).is_zero());
        assert_eq!(UniPoly::zero("T").degree(), None);
    }

    #[test]
    fn arithmetic_matches_hand_values() {
        // (1-T)(1-2T) = 1 - 3T + 2T^2
        let prod = p(&[1, -1]) * p(&[1, -2]);
        assert_eq!(prod, p(&[1, -3, 2]));
        assert_eq!(p(&[1, 2]) + p(&[3, -2, 1]), p(&[4, 0, 1]));
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), UniPoly::zero("T"));
        assert_eq!(-p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn evaluation_horner() {
        let f = p(&[1, 0, 2]); // 1 + 2T^2
        assert_eq!(f.eval(&qq(1, 2)), qq(3, 2));
        assert_eq!(f.eval(&qq_int(0)), qq_int(1));
        assert_eq!(f.eval(&qq(1, 4)), qq(9, 8));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[1, -3, 2]); // (1-T)(1-2T)
        let b = p(&[1, -1]); // 1-T
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, -2]));
        let g = (p(&[1, -1]) * p(&[2, 2])).gcd(&(p(&[1, -1]) * p(&[0, 5])));
        assert_eq!(g, p(&[-1, 1]).monic()); // T - 1 monic
        assert!(a.div_rem(&UniPoly::zero("T")).is_err());

        // remainder case: T^2+1 = (T+1)(T-1) + 2
        let (q2, r2) = p(&[1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q2, p(&[-1, 1]));
        assert_eq!(r2, p(&[2]));
    }

    #[test]
    fn derivative_and_pow() {
        assert_eq!(p(&[1, 0, 2]).derivative(), p(&[0, 4]));
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1]).pow(0), UniPoly::one("T"));
    }

    #[test]
    fn reverse_scaled_implements_inversion_numerators() {
        // p(T) = T, Q=4, D=1: p(1/(4T)) * (4T)^1 = 1 -> constant 1
        let f = p(&[0, 1]);
        assert_eq!(f.reverse_scaled(&qq_int(4), 1).unwrap(), p(&[1]));
        // p = 1+T, Q=2, D=1: (1 + 1/(2T)) * 2T = 2T + 1
        let g = p(&[1, 1]);
        assert_eq!(g.reverse_scaled(&qq_int(2), 1).unwrap(), p(&[1, 2]));
    }

    #[test]
    fn display_canonical_strings() {
        assert_eq!(p(&[1, 0, 2]).to_string(), "1+2T^2");
        assert_eq!(p(&[1, -3, 2]).to_string(), "1-3T+2T^2");
        assert_eq!(p(&[0, -1]).to_string(), "-T");
        assert_eq!(UniPoly::zero("T").to_string(), "0");
        let half = UniPoly::new("T", vec![qq_int(0), qq(3, 2)]);
        assert_eq!(half.to_string(), "(3/2)T");
        let tvar = UniPoly::new("t", vec![qq_int(1), qq_int(0), qq_int(2)]);
        assert_eq!(tvar.to_string(), "1+2t^2");
    }
}
