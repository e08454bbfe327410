//! High-precision real and complex arithmetic (MPFR-backed reals, hand-rolled
//! complex layer), the complex Gamma function via an argument-shifted Stirling
//! series with exact Bernoulli coefficients, and the archimedean factor
//! Gamma_R(s) = pi^(-s/2) Gamma(s/2).

use super::QQ;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rug::float::Constant;
use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

/// Working precision in bits for a requested number of decimal digits:
/// ceil(digits * log2(10)) plus guard bits, floored at 64.
pub fn prec_bits(decimal_digits: u32) -> u32 {
    let bits = (decimal_digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32;
    bits.max(64)
}

/// Exact rational -> Float at the given precision (correctly rounded once).
pub fn hp_from_qq(prec: u32, x: &QQ) -> Float {
    let num = rug::Integer::from_str_radix(&x.numer().to_str_radix(16), 16).expect("radix-16");
    let den = rug::Integer::from_str_radix(&x.denom().to_str_radix(16), 16).expect("radix-16");
    Float::with_val(prec, rug::Rational::from((num, den)))
}

pub fn hp_pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Riemann zeta at a positive integer argument.
pub fn hp_zeta(prec: u32, s: u32) -> Float {
    Float::with_val(prec, s).zeta()
}

/// Deterministic positional decimal rendering with `digits` significant
/// digits (no exponent notation for the magnitudes this workbench prints).
pub fn fmt_decimal(x: &Float, digits: usize) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if *x < 0u32 { "-inf".into() } else { "inf".into() };
    }
    if x.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let raw = x.to_string_radix(10, Some(digits));
    let (sign, raw) = match raw.strip_prefix('-') {
        Some(r) => ("-", r),
        None => ("", raw.as_str()),
    };
    let (mant, exp10) = match raw.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().expect("exponent")),
        None => (raw, 0),
    };
    let digits_only: String = mant.chars().filter(|c| c.is_ascii_hexdigit()).collect();
    let point_pos = match mant.find('.') {
        Some(p) => p as i64, // digits before the '.'
        None => digits_only.len() as i64,
    };
    // value = 0.digits x 10^(point_pos + exp10)
    let e = point_pos + exp10;
    let ds = digits_only.trim_end_matches('0');
    let ds = if ds.is_empty() { "0" } else { ds };
    if ds == "0" {
        return "0".into();
    }
    let mut out = String::from(sign);
    if e <= 0 {
        out.push_str("0.");
        for _ in 0..(-e) {
            out.push('0');
        }
        out.push_str(ds);
    } else if (e as usize) >= ds.len() {
        out.push_str(ds);
        for _ in 0..(e as usize - ds.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&ds[..e as usize]);
        out.push('.');
        out.push_str(&ds[e as usize..]);
    }
    out
}

/// Complex number over MPFR reals. Immutable-value semantics; every
/// operation works at the operands' maximum precision.
#[derive(Debug, Clone, PartialEq)]
pub struct HPComplex {
    pub re: Float,
    pub im: Float,
}

impl HPComplex {
    pub fn new(re: Float, im: Float) -> Self {
        HPComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        HPComplex { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn one(prec: u32) -> Self {
        HPComplex { re: Float::with_val(prec, 1), im: Float::new(prec) }
    }

    pub fn from_qq(prec: u32, x: &QQ) -> Self {
        HPComplex { re: hp_from_qq(prec, x), im: Float::new(prec) }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        HPComplex { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        HPComplex { re, im: Float::new(prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        HPComplex { re: self.re.clone(), im: Float::with_val(self.im.prec(), -&self.im) }
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn scale(&self, s: &Float) -> Self {
        let p = self.prec().max(s.prec());
        HPComplex {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    /// Principal branch logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec();
        let modulus = self.abs();
        let arg = self.im.clone().atan2(&self.re);
        HPComplex { re: Float::with_val(p, modulus.ln()), im: arg }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        HPComplex { re: Float::with_val(p, &c * &r), im: Float::with_val(p, &s * &r) }
    }

    pub fn sin(&self) -> Self {
        let p = self.prec();
        let (sx, cx) = self.re.clone().sin_cos(Float::new(p));
        let chy = self.im.clone().cosh();
        let shy = self.im.clone().sinh();
        HPComplex { re: Float::with_val(p, &sx * &chy), im: Float::with_val(p, &cx * &shy) }
    }

    pub fn recip(&self) -> Self {
        &HPComplex::one(self.prec()) / self
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = HPComplex::one(self.prec());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &HPComplex {
    type Output = HPComplex;
    fn add(self, rhs: &HPComplex) -> HPComplex {
        let p = self.prec().max(rhs.prec());
        HPComplex {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl Sub for &HPComplex {
    type Output = HPComplex;
    fn sub(self, rhs: &HPComplex) -> HPComplex {
        let p = self.prec().max(rhs.prec());
        HPComplex {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl Mul for &HPComplex {
    type Output = HPComplex;
    fn mul(self, rhs: &HPComplex) -> HPComplex {
        let p = self.prec().max(rhs.prec());
        let re = Float::with_val(p, &self.re * &rhs.re) - Float::with_val(p, &self.im * &rhs.im);
        let im = Float::with_val(p, &self.re * &rhs.im) + Float::with_val(p, &self.im * &rhs.re);
        HPComplex { re, im }
    }
}

impl Div for &HPComplex {
    type Output = HPComplex;
    fn div(self, rhs: &HPComplex) -> HPComplex {
        let p = self.prec().max(rhs.prec());
        let den = Float::with_val(p, &rhs.re * &rhs.re) + Float::with_val(p, &rhs.im * &rhs.im);
        let num = self * &rhs.conj();
        HPComplex {
            re: Float::with_val(p, &num.re / &den),
            im: Float::with_val(p, &num.im / &den),
        }
    }
}

impl Neg for &HPComplex {
    type Output = HPComplex;
    fn neg(self) -> HPComplex {
        let p = self.prec();
        HPComplex {
            re: Float::with_val(p, -&self.re),
            im: Float::with_val(p, -&self.im),
        }
    }
}

impl fmt::Display for HPComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.prec() as f64 / std::f64::consts::LOG2_10) as usize;
        let digits = digits.clamp(6, 40);
        write!(
            f,
            "{}{}{}i",
            fmt_decimal(&self.re, digits),
            if self.im.is_sign_negative() { "-" } else { "+" },
            fmt_decimal(&self.im.clone().abs(), digits)
        )
    }
}

static BERNOULLI_CACHE: Mutex<Vec<QQ>> = Mutex::new(Vec::new());

/// Bernoulli number B_n (convention B_1 = -1/2), exact, cached.
pub fn bernoulli(n: usize) -> QQ {
    let mut cache = BERNOULLI_CACHE.lock().expect("bernoulli cache");
    if cache.is_empty() {
        cache.push(QQ::one());
    }
    while cache.len() <= n {
        let m = cache.len(); // computing B_m from sum_{j<m} C(m+1,j) B_j = -C(m+1,m) B_m... rearranged below
        let mut acc = QQ::zero();
        for (j, b) in cache.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let c = num_integer::binomial(BigInt::from(m + 1), BigInt::from(j));
            acc += QQ::from_integer(c) * b;
        }
        let bm = -acc / QQ::from_integer(BigInt::from(m + 1));
        cache.push(bm);
    }
    cache[n].clone()
}

/// ln Gamma for Re(z) large enough (z in the right half plane, |z| >= the
/// series cut): Stirling series with exact Bernoulli coefficients.
fn ln_gamma_stirling(z: &HPComplex, terms: usize) -> HPComplex {
    let p = z.prec();
    let half = HPComplex::from_qq(p, &super::qq(1, 2));
    let ln2pi = (Float::with_val(p, Constant::Pi) * 2u32).ln();
    // (z - 1/2) ln z - z + ln(2 pi)/2
    let mut acc = &(&(z - &half) * &z.ln()) - z;
    acc.re += Float::with_val(p, &ln2pi / 2u32);
    // + sum_j B_2j / (2j (2j-1) z^(2j-1))
    let zinv = z.recip();
    let zinv2 = &zinv * &zinv;
    let mut pow = zinv;
    for j in 1..=terms {
        let b = bernoulli(2 * j);
        let denom = QQ::from_integer(BigInt::from(2 * j * (2 * j - 1)));
        let coeff = HPComplex::from_qq(p, &(b / denom));
        acc = &acc + &(&coeff * &pow);
        pow = &pow * &zinv2;
    }
    acc
}

/// Complex Gamma function. Real arguments delegate to MPFR; complex ones use
/// the shifted Stirling series. Errors at the poles (nonpositive integers).
pub fn gamma_complex(z: &HPComplex) -> Result<HPComplex> {
    let p = z.prec();
    if z.im.is_zero() {
        if z.re.is_integer() && z.re <= 0u32 {
            return Err(Error::computation("Gamma pole at nonpositive integer"));
        }
        return Ok(HPComplex::from_real(Float::with_val(p, &z.re).gamma()));
    }
    let work = p + 64;
    let zw = HPComplex {
        re: Float::with_val(work, &z.re),
        im: Float::with_val(work, &z.im),
    };
    let terms = (work as usize) / 6 + 8;
    let cut = terms as f64;
    // shift z into Re >= cut, where the series with `terms` terms meets the
    // target precision, then divide the shift factors back out (in logs).
    let shift = if zw.re < cut {
        (cut - zw.re.to_f64()).ceil() as u64 + 1
    } else {
        0
    };
    if shift > 1_000_000 {
        return Err(Error::computation("Gamma argument too far left"));
    }
    let shifted = HPComplex {
        re: Float::with_val(work, &zw.re + shift),
        im: zw.im.clone(),
    };
    let mut lng = ln_gamma_stirling(&shifted, terms);
    let mut w = zw;
    for _ in 0..shift {
        lng = &lng - &w.ln();
        w.re += 1u32;
    }
    let g = lng.exp();
    Ok(HPComplex {
        re: Float::with_val(p, &g.re),
        im: Float::with_val(p, &g.im),
    })
}

/// True iff the exact rational z is a pole of Gamma_R (z in {0, -2, -4, ...}).
pub fn is_gamma_r_pole(z: &QQ) -> bool {
    if !z.is_integer() || z.is_positive() {
        return false;
    }
    (z.numer() % BigInt::from(2)).is_zero()
}

/// Gamma_R(z) = pi^(-z/2) Gamma(z/2); poles at z in {0, -2, -4, ...}.
pub fn gamma_r(z: &HPComplex) -> Result<HPComplex> {
    let p = z.prec();
    let half_z = HPComplex {
        re: Float::with_val(p, &z.re / 2u32),
        im: Float::with_val(p, &z.im / 2u32),
    };
    if half_z.im.is_zero() && half_z.re.is_integer() && half_z.re <= 0u32 {
        return Err(Error::computation("Gamma_R pole"));
    }
    let g = gamma_complex(&half_z)?;
    let ln_pi = hp_pi(p).ln();
    let exponent = HPComplex {
        re: -Float::with_val(p, &half_z.re * &ln_pi),
        im: -Float::with_val(p, &half_z.im * &ln_pi),
    };
    Ok(&exponent.exp() * &g)
}
