//! Witten zeta values for SU(n) via the Weyl dimension formula, with
//! certified tail bounds, and the assembly of the moduli-volume formula.
//!
//! The tail bound is a proven over-estimate: every omitted dominant weight
//! has some Dynkin label above the cutoff, and `dim ρ ≥ ∏(a_k+1)`, so the
//! omitted mass is at most `(n-1)·ζ(s)^{n-2}·Σ_{a>cutoff}(a+1)^{-s}`; both
//! `ζ(s)` and the label tail are over-estimated by exact rational partial
//! sums plus integral bounds, and the final conversion to floating point
//! rounds upward.

use crate::error::{Error, Result};
use crate::exactmath::{prec_bits, qq_int, QQ};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rug::float::Round;
use rug::ops::Pow;
use rug::Float;

/// A dominant weight of SU(n) given by its n-1 nonnegative Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight {
    labels: Vec<u64>,
}

impl DominantWeight {
    pub fn new(n: usize, labels: Vec<u64>) -> Result<Self> {
        if labels.len() + 1 != n {
            return Err(Error::input(format!(
                "SU({n}) dominant weight needs {} labels, got {}",
                n - 1,
                labels.len()
            )));
        }
        Ok(DominantWeight { labels })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }
}

fn check_rank(n: usize) -> Result<()> {
    if !(2..=5).contains(&n) {
        return Err(Error::input(format!(
            "SU(n) rank out of range: need 2 <= n <= 5, got {n}"
        )));
    }
    Ok(())
}

/// `dim ρ = ∏_{1≤i<j≤n} (Σ_{k=i}^{j-1}(a_k+1)) / ∏_{1≤i<j≤n}(j-i)`,
/// always a positive integer (exact divisibility asserted, not rounded).
pub fn weyl_dimension(n: usize, w: &DominantWeight) -> Result<BigInt> {
    check_rank(n)?;
    if w.labels.len() + 1 != n {
        return Err(Error::input(format!(
            "weight has {} labels but n = {n}",
            w.labels.len()
        )));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let window: u64 = w.labels[i - 1..j - 1].iter().map(|a| a + 1).sum();
            num *= BigInt::from(window);
            den *= BigInt::from((j - i) as u64);
        }
    }
    let (q, r) = num_integer::div_rem(num, den);
    if !r.is_zero() || !q.is_positive() {
        return Err(Error::computation(
            "Weyl dimension formula did not divide exactly",
        ));
    }
    Ok(q)
}

/// Fast-path dimension in u128 (the enumeration ranges keep this exact).
fn dim_u128(n: usize, labels: &[u64]) -> Option<u128> {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 1..=n {
        for j in i + 1..=n {
            let window: u128 = labels[i - 1..j - 1].iter().map(|a| (a + 1) as u128).sum();
            num = num.checked_mul(window)?;
            den = den.checked_mul((j - i) as u128)?;
        }
    }
    if num % den != 0 {
        return None;
    }
    Some(num / den)
}

/// Exact rational over-estimate of `ζ(s)` for integer `s ≥ 2`:
/// partial sum to 20 plus the integral tail bound.
fn zeta_upper_bound(s: i64) -> QQ {
    let m = 20i64;
    let mut sum = QQ::zero();
    for k in 1..=m {
        sum += QQ::one() / num_traits::pow::pow(qq_int(k), s as usize);
    }
    // Σ_{k>M} k^{-s} <= ∫_M^∞ x^{-s} dx = M^{1-s}/(s-1)
    sum + QQ::one() / (num_traits::pow::pow(qq_int(m), (s - 1) as usize) * qq_int(s - 1))
}

/// Exact rational over-estimate of `Σ_{a > cutoff} (a+1)^{-s}`.
fn label_tail_bound(cutoff: u64, s: i64) -> QQ {
    // Σ_{m >= cutoff+2} m^{-s} <= ∫_{cutoff+1}^∞ x^{-s} dx
    QQ::one()
        / (num_traits::pow::pow(qq_int((cutoff + 1) as i64), (s - 1) as usize) * qq_int(s - 1))
}

/// Convert an exact rational bound to `Float`, rounding up so the result
/// stays a valid over-estimate.
fn qq_to_float_up(prec: u32, x: &QQ) -> Float {
    let num = rug::Integer::from_str_radix(&x.numer().to_string(), 10).expect("bigint digits");
    let den = rug::Integer::from_str_radix(&x.denom().to_string(), 10).expect("bigint digits");
    let rat = rug::Rational::from((num, den));
    let (f, _) = Float::with_val_round(prec, &rat, Round::Up);
    f
}

/// Result of a truncated Witten zeta sum: the partial value and a certified
/// upper bound on the omitted mass.
#[derive(Debug, Clone)]
pub struct WittenZeta {
    pub value: Float,
    pub tail_bound: Float,
    /// Number of dominant weights summed.
    pub terms: u64,
}

/// Sum `1/dim ρ^s` over all dominant weights of SU(n) with every Dynkin
/// label at most `cutoff`.
pub fn witten_zeta_su(
    n: usize,
    s: i64,
    cutoff: u64,
    precision_digits: u32,
) -> Result<WittenZeta> {
    check_rank(n)?;
    if s < 2 {
        return Err(Error::input(format!(
            "divergent: Witten zeta for SU(n) needs s >= 2, got {s}"
        )));
    }
    if cutoff == 0 {
        return Err(Error::input("cutoff must be >= 1"));
    }
    let prec = prec_bits(precision_digits);
    let mut value = Float::new(prec);
    let mut labels = vec![0u64; n - 1];
    let mut terms = 0u64;
    loop {
        let dim_f = match dim_u128(n, &labels) {
            Some(d) => Float::with_val(prec, d),
            None => {
                let w = DominantWeight::new(n, labels.clone())?;
                let d = weyl_dimension(n, &w)?;
                let parsed = Float::parse(d.to_string()).expect("integer digits");
                Float::with_val(prec, parsed)
            }
        };
        value += Float::with_val(prec, dim_f.pow(s as u32)).recip();
        terms += 1;
        // odometer over [0, cutoff]^(n-1)
        let mut pos = 0usize;
        loop {
            if pos == labels.len() {
                break;
            }
            if labels[pos] < cutoff {
                labels[pos] += 1;
                break;
            }
            labels[pos] = 0;
            pos += 1;
        }
        if pos == labels.len() {
            break;
        }
    }
    // tail <= (n-1) * zeta_ub(s)^{n-2} * label_tail, all in exact rationals.
    let mut bound = qq_int((n - 1) as i64) * label_tail_bound(cutoff, s);
    for _ in 0..n - 2 {
        bound *= zeta_upper_bound(s);
    }
    Ok(WittenZeta {
        value,
        tail_bound: qq_to_float_up(prec, &bound),
        terms,
    })
}

/// The assembled moduli-volume formula with its propagated uncertainty.
#[derive(Debug, Clone)]
pub struct WittenVolume {
    pub value: Float,
    /// Prefactor times the zeta-sum tail bound.
    pub uncertainty: Float,
    pub zeta: WittenZeta,
}

/// `Vol = n·(vol_su/(2π)^{n²-1})^{2g-2} · Σ_ρ dim ρ^{-(2g-2)}`.  The SU(n)
/// volume constant is supplied by the caller; no curve data enters.
pub fn witten_volume(
    n: usize,
    g: u32,
    vol_su_constant: &Float,
    cutoff: u64,
    precision_digits: u32,
) -> Result<WittenVolume> {
    if n < 2 {
        return Err(Error::input("n >= 2 required"));
    }
    check_rank(n)?;
    if g < 2 {
        return Err(Error::input(format!(
            "genus g >= 2 required for a convergent volume sum, got {g}"
        )));
    }
    let s = 2 * g as i64 - 2;
    let zeta = witten_zeta_su(n, s, cutoff, precision_digits)?;
    let prec = prec_bits(precision_digits);
    let two_pi = crate::exactmath::hp_pi(prec) * 2u32;
    let denom = Float::with_val(prec, (&two_pi).pow(&Float::with_val(prec, (n * n - 1) as u32)));
    let base = Float::with_val(prec, vol_su_constant / &denom);
    let prefactor = Float::with_val(prec, (&base).pow(&Float::with_val(prec, s as u32)))
        * Float::with_val(prec, n as u32);
    let value = Float::with_val(prec, &prefactor * &zeta.value);
    let uncertainty = Float::with_val(prec, &prefactor * &zeta.tail_bound).abs();
    Ok(WittenVolume {
        value,
        uncertainty,
        zeta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{hp_pi, hp_zeta};

    #[test]
    fn weyl_dimension_examples() {
        for m in 0..6u64 {
            let w = DominantWeight::new(2, vec![m]).unwrap();
            assert_eq!(weyl_dimension(2, &w).unwrap(), BigInt::from(m + 1));
        }
        let w = DominantWeight::new(3, vec![1, 1]).unwrap();
        assert_eq!(weyl_dimension(3, &w).unwrap(), BigInt::from(8));
        let w = DominantWeight::new(3, vec![0, 0]).unwrap();
        assert_eq!(weyl_dimension(3, &w).unwrap(), BigInt::from(1));
        // Adjoint of SU(3): (1,1) -> 8 above; fundamental of SU(5): 5.
        let w = DominantWeight::new(5, vec![1, 0, 0, 0]).unwrap();
        assert_eq!(weyl_dimension(5, &w).unwrap(), BigInt::from(5));
        let w = DominantWeight::new(4, vec![1, 0, 2]).unwrap();
        assert_eq!(weyl_dimension(4, &w).unwrap(), BigInt::from(36));
        // u128 fast path agrees.
        assert_eq!(dim_u128(4, &[1, 0, 2]), Some(36));
        assert!(DominantWeight::new(3, vec![1]).is_err());
        assert!(weyl_dimension(6, &DominantWeight::new(6, vec![0; 5]).unwrap()).is_err());
    }

    #[test]
    fn su2_is_riemann_zeta() {
        // SU(2) dimensions are 1, 2, 3, ...: the sum is a ζ(s) partial sum.
        let digits = 40u32;
        let prec = prec_bits(digits);
        for (s, cutoff, cap) in [(2i64, 10_000u64, 1e-3f64), (4, 1_000, 1e-8), (6, 500, 1e-12)] {
            let wz = witten_zeta_su(2, s, cutoff, digits).unwrap();
            let reference = hp_zeta(prec, s as u32);
            let err = Float::with_val(prec, &wz.value - &reference).abs();
            assert!(
                err <= wz.tail_bound,
                "s={s}: err {err} > bound {}",
                wz.tail_bound
            );
            assert!(wz.tail_bound.to_f64() <= cap, "s={s}: {}", wz.tail_bound);
            assert_eq!(wz.terms, cutoff + 1);
        }
        // s=2 against the closed form pi^2/6 as well.
        let wz = witten_zeta_su(2, 2, 10_000, digits).unwrap();
        let pi2_6 = hp_pi(prec).square() / 6u32;
        let err = Float::with_val(prec, &wz.value - &pi2_6).abs();
        assert!(err <= wz.tail_bound);
    }

    #[test]
    fn su3_self_consistency() {
        let digits = 40u32;
        let prec = prec_bits(digits);
        let a = witten_zeta_su(3, 2, 200, digits).unwrap();
        let b = witten_zeta_su(3, 2, 400, digits).unwrap();
        let diff = Float::with_val(prec, &a.value - &b.value).abs();
        assert!(a.tail_bound >= b.tail_bound);
        assert!(diff <= a.tail_bound, "diff {diff} > {}", a.tail_bound);
        assert_eq!(a.terms, 201 * 201);
    }

    #[test]
    fn monotone_in_cutoff() {
        let digits = 30u32;
        let mut prev: Option<WittenZeta> = None;
        for cutoff in [10u64, 20, 40] {
            let wz = witten_zeta_su(3, 2, cutoff, digits).unwrap();
            if let Some(p) = &prev {
                assert!(wz.value >= p.value);
                assert!(wz.tail_bound <= p.tail_bound);
            }
            prev = Some(wz);
        }
    }

    #[test]
    fn volume_assembly_and_errors() {
        let digits = 40u32;
        let prec = prec_bits(digits);
        // n=2, g=2, V=1: 2*(1/(2pi)^3)^2 * (zeta(2) +- tail).
        let one = Float::with_val(prec, 1);
        let v = witten_volume(2, 2, &one, 2_000, digits).unwrap();
        let two_pi = hp_pi(prec) * 2u32;
        let pref = Float::with_val(prec, (&two_pi).pow(&Float::with_val(prec, 3u32)));
        let target =
            Float::with_val(prec, 2) / Float::with_val(prec, (&pref).pow(&Float::with_val(prec, 2u32)))
                * hp_zeta(prec, 2);
        let err = Float::with_val(prec, &v.value - &target).abs();
        assert!(err <= v.uncertainty, "err {err} vs {}", v.uncertainty);
        assert!(v.uncertainty.to_f64() < 1e-7);

        let e = witten_volume(1, 2, &one, 10, digits).unwrap_err();
        assert!(format!("{e}").contains("n >= 2 required"));
        assert!(witten_volume(2, 1, &one, 10, digits).is_err());
        let e = witten_zeta_su(2, 1, 10, digits).unwrap_err();
        assert!(format!("{e}").contains("divergent"));
        assert!(witten_zeta_su(2, 2, 0, digits).is_err());
    }
}
