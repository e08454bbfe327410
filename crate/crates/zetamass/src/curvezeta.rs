//! Artin zeta functions of curves over finite fields.
//!
//! A curve is described by its base field size `q`, its genus `g`, and the
//! degree-`2g` integer numerator `P(t)` of its zeta function
//!
//! ```text
//! Z(t) = P(t) / ((1 - t)(1 - q t)),        t = q^{-s}.
//! ```
//!
//! The numerator may be given directly or derived from the point counts
//! `N_1..N_g` over the first `g` field extensions via Newton's identities.
//! On top of `Z` the module provides the completed zeta
//! `ζ̂(s) = ζ(s)·(q^s)^{g-1}`, its special values `ζ̂(k)` (with `ζ̂(1)`
//! defined through the residue at `s = 1`), effective-divisor counts
//! (the power-series coefficients of `Z`), and a numerical check that all
//! inverse roots of `P` sit on the circle `|t| = q^{-1/2}`.

use crate::error::{Error, Result};
use crate::exactmath::{
    hp_from_qq, poly_roots_numeric, prec_bits, qq_int, qq_pow, rf_normalize, rf_residue_simple,
    HPComplex, RationalFunctionQ, UniPoly, QQ,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rug::Float;

/// Variable name used for the Artin zeta in the `t = q^{-s}` coordinate.
pub const CURVE_VAR: &str = "t";

/// A curve over a finite field, described by exact zeta data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    q: u64,
    g: usize,
    /// `P(t) = a_0 + a_1 t + … + a_{2g} t^{2g}` with integer coefficients.
    numerator: UniPoly,
    /// Optional point counts `N_1..N_g` the numerator was derived from.
    point_counts: Option<Vec<i64>>,
}

/// The Artin zeta of a curve as an exact rational function, together with the
/// completion exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaBundle {
    /// `Z(t) = P(t)/((1-t)(1-qt))` in canonical form.
    pub zeta_t: RationalFunctionQ,
    /// `g - 1`: the completed zeta is `ζ̂(s) = Z(t)·t^{-(g-1)}`.
    pub completed_shift: i64,
}

/// Report produced by [`rh_check`].
#[derive(Debug, Clone)]
pub struct RhCheckReport {
    /// All `2g` numerically computed roots of `P(t)`.
    pub roots: Vec<HPComplex>,
    /// `| |root| - q^{-1/2} |` for each root, same order as `roots`.
    pub deviations: Vec<Float>,
    /// Largest entry of `deviations`, rounded to `f64`.
    pub max_deviation: f64,
    /// True iff every deviation is strictly below the requested tolerance.
    pub pass: bool,
}

/// Returns true iff `q = p^k` for a prime `p` and `k ≥ 1`.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    // Find the smallest prime factor, then insist q is a pure power of it.
    let mut p = 0u64;
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return true; // q itself is prime
    }
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

fn validate_q(q: u64) -> Result<()> {
    if !is_prime_power(q) {
        return Err(Error::input(format!(
            "field size q must be a prime power >= 2, got {q}"
        )));
    }
    Ok(())
}

/// `q^e` as an exact integer.
fn big_pow(q: u64, e: usize) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// Derive the zeta numerator coefficients `a_0..a_{2g}` from the point counts
/// `N_1..N_g` by matching `log Z` with `Σ N_m t^m / m` through order `g`
/// (Newton's identities), then filling `a_{g+1}..a_{2g}` by the symmetry
/// `a_{2g-i} = q^{g-i}·a_i`.
pub fn numerator_from_counts(q: u64, g: usize, counts: &[i64]) -> Result<Vec<BigInt>> {
    validate_q(q)?;
    if counts.len() != g {
        return Err(Error::input(format!(
            "invalid point counts: expected {} counts N_1..N_g, got {}",
            g,
            counts.len()
        )));
    }
    // Power sums p_m = q^m + 1 - N_m of the 2g inverse roots of P.
    // Negative N_m are tolerated as formal data; only integrality of the
    // resulting coefficients is a hard constraint.
    let p: Vec<BigInt> = (1..=g)
        .map(|m| big_pow(q, m) + 1 - BigInt::from(counts[m - 1]))
        .collect();
    // Newton: e_k = (1/k) Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i, with e_0 = 1.
    let mut e: Vec<QQ> = vec![QQ::one()];
    for k in 1..=g {
        let mut acc = QQ::zero();
        for i in 1..=k {
            let term = QQ::from(p[i - 1].clone()) * &e[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let ek = acc / qq_int(k as i64);
        if !ek.is_integer() {
            return Err(Error::input(format!(
                "invalid point counts: coefficient e_{k} = {ek} is not an integer"
            )));
        }
        e.push(ek);
    }
    // a_k = (-1)^k e_k for k ≤ g; symmetry fills the top half.
    let mut a: Vec<BigInt> = Vec::with_capacity(2 * g + 1);
    for (k, ek) in e.iter().enumerate() {
        let v = ek.to_integer();
        a.push(if k % 2 == 1 { -v } else { v });
    }
    for i in (0..g).rev() {
        let v = big_pow(q, g - i) * &a[i];
        a.push(v);
    }
    debug_assert_eq!(a.len(), 2 * g + 1);
    Ok(a)
}

impl CurveData {
    /// Build a curve from its zeta numerator coefficients `a_0..a_{2g}`.
    pub fn from_numerator(q: u64, g: usize, coeffs: &[i64]) -> Result<Self> {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_numerator_big(q, g, &big)
    }

    /// Same as [`CurveData::from_numerator`] but with arbitrary-size integers.
    pub fn from_numerator_big(q: u64, g: usize, coeffs: &[BigInt]) -> Result<Self> {
        validate_q(q)?;
        if coeffs.len() != 2 * g + 1 {
            return Err(Error::input(format!(
                "numerator must list the {} coefficients a_0..a_{}, got {}",
                2 * g + 1,
                2 * g,
                coeffs.len()
            )));
        }
        if !coeffs[0].is_one() {
            return Err(Error::input(format!(
                "numerator constant term a_0 must be 1, got {}",
                coeffs[0]
            )));
        }
        for i in 0..=g {
            let expect = big_pow(q, g - i) * &coeffs[i];
            if coeffs[2 * g - i] != expect {
                return Err(Error::input(format!(
                    "numerator violates the symmetry a_{}-i = q^(g-i)*a_i at i = {}: \
                     a_{} = {}, expected {}",
                    2 * g,
                    i,
                    2 * g - i,
                    coeffs[2 * g - i],
                    expect
                )));
            }
        }
        let poly = UniPoly::new(
            CURVE_VAR,
            coeffs.iter().map(|c| QQ::from(c.clone())).collect(),
        );
        Ok(CurveData {
            q,
            g,
            numerator: poly,
            point_counts: None,
        })
    }

    /// Build a curve from its point counts `N_1..N_g`.
    pub fn from_counts(q: u64, g: usize, counts: &[i64]) -> Result<Self> {
        let a = numerator_from_counts(q, g, counts)?;
        let mut c = Self::from_numerator_big(q, g, &a)?;
        c.point_counts = Some(counts.to_vec());
        Ok(c)
    }

    /// Attach point counts to a numerator-specified curve, verifying that they
    /// reproduce the stored numerator.
    pub fn with_point_counts(mut self, counts: &[i64]) -> Result<Self> {
        let derived = numerator_from_counts(self.q, self.g, counts)?;
        if derived != self.numerator_coeffs() {
            return Err(Error::input(
                "invalid point counts: they do not reproduce the given numerator".to_string(),
            ));
        }
        self.point_counts = Some(counts.to_vec());
        Ok(self)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// `P(t)` as a polynomial in the variable `t`.
    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    /// The integer coefficients `a_0..a_{2g}`.
    pub fn numerator_coeffs(&self) -> Vec<BigInt> {
        (0..=2 * self.g)
            .map(|i| self.numerator.coeff(i).to_integer())
            .collect()
    }

    pub fn point_counts(&self) -> Option<&[i64]> {
        self.point_counts.as_deref()
    }

    /// Point counts `N_1..N_{m_max}` derived from the numerator (inverse
    /// Newton direction): `N_m = q^m + 1 - p_m` with `p_m` the power sums of
    /// the inverse roots of `P`.
    pub fn derived_point_counts(&self, m_max: usize) -> Vec<BigInt> {
        let e: Vec<QQ> = (0..=2 * self.g)
            .map(|k| {
                let a = self.numerator.coeff(k);
                if k % 2 == 1 {
                    -a
                } else {
                    a
                }
            })
            .collect();
        let mut p: Vec<QQ> = Vec::with_capacity(m_max + 1);
        p.push(qq_int(0)); // unused p_0 slot
        for m in 1..=m_max {
            // p_m = Σ_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
            let mut acc = QQ::zero();
            for i in 1..m.min(2 * self.g + 1) {
                let term = &e[i] * &p[m - i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            if m <= 2 * self.g {
                let lead = qq_int(m as i64) * &e[m];
                if m % 2 == 1 {
                    acc += lead;
                } else {
                    acc -= lead;
                }
            }
            p.push(acc);
        }
        (1..=m_max)
            .map(|m| {
                let n = QQ::from(big_pow(self.q, m) + 1) - &p[m];
                debug_assert!(n.is_integer());
                n.to_integer()
            })
            .collect()
    }
}

/// Assemble `Z(t) = P(t)/((1-t)(1-qt))` in canonical form.
pub fn artin_zeta(curve: &CurveData) -> ZetaBundle {
    let den = UniPoly::new(
        CURVE_VAR,
        vec![
            QQ::one(),
            qq_int(-(curve.q as i64 + 1)),
            qq_int(curve.q as i64),
        ],
    );
    let zeta_t = rf_normalize(curve.numerator().clone(), den)
        .expect("zeta denominator (1-t)(1-qt) is nonzero");
    ZetaBundle {
        zeta_t,
        completed_shift: curve.g as i64 - 1,
    }
}

impl ZetaBundle {
    /// The completed zeta `ζ̂(s) = Z(t)·t^{-(g-1)}` as a rational function of `t`.
    pub fn completed_in_t(&self) -> RationalFunctionQ {
        self.zeta_t
            .mul_var_pow(-self.completed_shift)
            .expect("multiplying a nonzero rational function by a power of t")
    }
}

/// Human-readable factored form `"(P)/((1-t)(1-qt))"` of the Artin zeta.
pub fn zeta_display(curve: &CurveData) -> String {
    format!("({})/((1-t)(1-{}t))", curve.numerator(), curve.q)
}

/// Exact special value `ζ̂(k)` of the completed zeta.
///
/// For `k ≥ 2` this is `Z(q^{-k})·q^{k(g-1)}`. For `k = 1`, where `ζ̂` has a
/// pole, the value is defined as `Res_{s=1} ζ̂(s) · log q`; the residue is
/// taken in the `t`-variable (simple pole at `t = 1/q`, chain factor
/// `-1/(t_0·log q)`), so the `log q` factors cancel and the result is an exact
/// rational, equal to `P(1)/(q-1)`.
pub fn zeta_special_value(curve: &CurveData, k: u64) -> Result<QQ> {
    if k == 0 {
        return Err(Error::input("special value index k must be >= 1"));
    }
    let bundle = artin_zeta(curve);
    let q = qq_int(curve.q as i64);
    if k == 1 {
        let zhat = bundle.completed_in_t();
        let t0 = QQ::one() / &q;
        let res_t = rf_residue_simple(&zhat, &t0)?;
        // Res_{s=1} ζ̂ · log q = Res_t ζ̂ · (-1/(t_0 log q)) · log q = -q·Res_t ζ̂.
        return Ok(-(res_t * q));
    }
    let t = qq_pow(&q, -(k as i64))?;
    let z = bundle.zeta_t.eval(&t)?;
    let shift = qq_pow(&q, k as i64 * bundle.completed_shift)?;
    Ok(z * shift)
}

/// Power-series coefficients `b_0..b_{dmax}` of `Z(t)`: the number of
/// effective divisors of each degree `d` on the curve.
pub fn effective_divisor_counts(curve: &CurveData, dmax: usize) -> Vec<BigInt> {
    // Z = P(t)·Σ_d c_d t^d with c_d = (q^{d+1}-1)/(q-1) = 1 + q + … + q^d.
    let q = BigInt::from(curve.q);
    let mut c: Vec<BigInt> = Vec::with_capacity(dmax + 1);
    let mut acc = BigInt::one();
    let mut qpow = q.clone();
    c.push(acc.clone());
    for _ in 1..=dmax {
        acc += &qpow;
        qpow *= &q;
        c.push(acc.clone());
    }
    let a = curve.numerator_coeffs();
    (0..=dmax)
        .map(|d| {
            let mut b = BigInt::zero();
            for (i, ai) in a.iter().enumerate().take(d + 1) {
                b += ai * &c[d - i];
            }
            b
        })
        .collect()
}

/// Numerically verify that all inverse roots of `P(t)` have modulus `q^{-1/2}`.
///
/// `precision_digits` controls the root-finder working precision and
/// `seed` its deterministic starting configuration.
pub fn rh_check(
    curve: &CurveData,
    tolerance: f64,
    precision_digits: u32,
    seed: u64,
) -> Result<RhCheckReport> {
    if curve.g == 0 {
        return Err(Error::input("no roots to check: genus-0 numerator is 1"));
    }
    let roots = poly_roots_numeric(curve.numerator(), precision_digits, seed)?;
    let prec = prec_bits(precision_digits);
    let target = hp_from_qq(prec, &(QQ::one() / qq_int(curve.q as i64))).sqrt();
    let deviations: Vec<Float> = roots
        .iter()
        .map(|r| Float::with_val(prec, r.abs() - &target).abs())
        .collect();
    let max_deviation = deviations
        .iter()
        .map(|d| d.to_f64())
        .fold(0.0f64, f64::max);
    Ok(RhCheckReport {
        roots,
        deviations,
        max_deviation,
        pass: max_deviation < tolerance,
    })
}
