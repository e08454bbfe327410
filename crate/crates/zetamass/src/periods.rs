//! Numeric evaluation of the zeta-with-symmetry period
//! `ω_X^G(λ) = Σ_{w∈W} sign(w) ∏_{α∈Δ} Γ_R(−⟨wλ−ρ,α∨⟩)
//!             · ∏_{α>0, wα<0} ζ̂_X(⟨λ,α∨⟩)/ζ̂_X(⟨λ,α∨⟩+1)`
//! with the archimedean factor `Γ_R(s) = π^{-s/2}Γ(s/2)`, plus the rank-one
//! sampling table used by the uniformity comparison harness.

pub use crate::exactmath::{gamma_r, is_gamma_r_pole};

use crate::curvezeta::{artin_zeta, CurveData};
use crate::error::{Error, Result};
use crate::exactmath::{
    fmt_decimal, fmt_qq, hp_from_qq, prec_bits, HPComplex, QQ, RationalFunctionQ, UniPoly,
};
use crate::rootsys::{RootSystemData, RootType};
use crate::zetassembly::{assemble_zeta, AlphaBetaTable};
use num_traits::{One, Zero};
use rug::Float;

/// The undetermined global sign `(−1)^{|G|}` of the Weyl sum, exposed as a
/// convention switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    /// Every term enters with `+`.
    AllPlus,
    /// Terms enter with `(−1)^{ℓ(w)}`.
    LengthSign,
}

impl SignConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            SignConvention::AllPlus => "all_plus",
            SignConvention::LengthSign => "length_sign",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "all_plus" => Ok(SignConvention::AllPlus),
            "length_sign" => Ok(SignConvention::LengthSign),
            other => Err(Error::input(format!(
                "unknown sign convention '{other}': expected all_plus or length_sign"
            ))),
        }
    }
}

/// Evaluation parameters: sign convention and working precision.
#[derive(Debug, Clone, Copy)]
pub struct PeriodConfig {
    pub sign_convention: SignConvention,
    pub precision_digits: u32,
}

impl Default for PeriodConfig {
    fn default() -> Self {
        PeriodConfig {
            sign_convention: SignConvention::AllPlus,
            precision_digits: 40,
        }
    }
}

/// One Weyl-sum term, kept for reporting.
#[derive(Debug, Clone)]
pub struct PeriodTerm {
    pub w_word: String,
    pub sign: i32,
    pub gamma_product: HPComplex,
    pub zeta_ratio_product: Float,
    pub term: HPComplex,
}

/// The evaluated period with its per-term breakdown.
#[derive(Debug, Clone)]
pub struct PeriodValue {
    pub value: HPComplex,
    pub terms: Vec<PeriodTerm>,
}

/// Evaluate a polynomial with rational coefficients at a `Float` point.
fn poly_eval_float(p: &UniPoly, t: &Float) -> Float {
    let prec = t.prec();
    let mut acc = Float::new(prec);
    for c in p.coeffs().iter().rev() {
        acc *= t;
        acc += hp_from_qq(prec, c);
    }
    acc
}

/// A numeric evaluator for the curve's completed zeta `ζ̂_X(s)`, built once.
struct ZetaHatEvaluator {
    completed: RationalFunctionQ,
    q: u64,
    prec: u32,
}

/// `s` values where `ζ̂_X` has a pole: the denominator zeros `t ∈ {1, 1/q}`
/// pull back to `s ∈ {0, 1}`.
fn zetahat_is_pole(s: &QQ) -> bool {
    s.is_zero() || s.is_one()
}

impl ZetaHatEvaluator {
    fn new(curve: &CurveData, prec: u32) -> Self {
        ZetaHatEvaluator {
            completed: artin_zeta(curve).completed_in_t(),
            q: curve.q(),
            prec,
        }
    }

    fn eval(&self, s: &QQ) -> Result<Float> {
        if zetahat_is_pole(s) {
            return Err(Error::input(format!(
                "zeta factor at s = {} hits a pole",
                fmt_qq(s)
            )));
        }
        // t = q^{-s}
        let s_f = hp_from_qq(self.prec, s);
        let ln_q = Float::with_val(self.prec, self.q).ln();
        let t = Float::with_val(self.prec, -s_f * ln_q).exp();
        let num = poly_eval_float(self.completed.num(), &t);
        let den = poly_eval_float(self.completed.den(), &t);
        if den.is_zero() {
            return Err(Error::computation(format!(
                "zeta denominator vanished numerically at s = {}",
                fmt_qq(s)
            )));
        }
        Ok(num / den)
    }
}

/// Solve for the ambient vector `λ` in the span of the simple roots with the
/// prescribed pairings `⟨λ, α_i∨⟩ = c_i` (fundamental-weight coordinates).
fn lambda_from_pairings(rs: &RootSystemData, pairings: &[QQ]) -> Result<Vec<QQ>> {
    let r = rs.rank();
    if pairings.len() != r {
        return Err(Error::input(format!(
            "lambda needs {} pairing coordinates, got {}",
            r,
            pairings.len()
        )));
    }
    // <Σ_j x_j α_j, α_i∨> = Σ_j C[i][j] x_j with C[i][j] = <α_j, α_i∨>.
    let simples = rs.simple_roots();
    let mut c = vec![vec![QQ::zero(); r]; r];
    for i in 0..r {
        for j in 0..r {
            c[i][j] = rs.pair_coroot(&simples[j], &simples[i]);
        }
    }
    let x = solve_linear(&c, pairings)
        .ok_or_else(|| Error::computation("Cartan matrix is singular"))?;
    let dim = simples[0].len();
    let mut lambda = vec![QQ::zero(); dim];
    for (xj, alpha) in x.iter().zip(simples) {
        for (l, a) in lambda.iter_mut().zip(alpha) {
            *l += xj * a;
        }
    }
    Ok(lambda)
}

/// Exact Gaussian elimination solve (dimensions <= 4).
fn solve_linear(m: &[Vec<QQ>], rhs: &[QQ]) -> Option<Vec<QQ>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut b = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Some(b)
}

/// Scan the Weyl sum (deterministic order: BFS Weyl enumeration, then Γ_R
/// factors over the simple roots, then zeta factors over the positive roots)
/// and describe the first singular factor, if any.  `None` means every term
/// of the period is finite.
pub fn period_singularity(rs: &RootSystemData, lambda_pairings: &[QQ]) -> Result<Option<String>> {
    let lambda = lambda_from_pairings(rs, lambda_pairings)?;
    let positives = rs.positive_roots();
    let s_values: Vec<QQ> = positives
        .iter()
        .map(|alpha| rs.pair_coroot(&lambda, alpha))
        .collect();
    for w in rs.weyl_elements() {
        let wl = w.apply(&lambda);
        for (i, alpha) in rs.simple_roots().iter().enumerate() {
            let arg = QQ::one() - rs.pair_coroot(&wl, alpha);
            if is_gamma_r_pole(&arg) {
                return Ok(Some(format!(
                    "singular configuration at w = {}: Gamma_R pole at argument {} (simple root {})",
                    w.word_string(),
                    fmt_qq(&arg),
                    i + 1
                )));
            }
        }
        for (k, alpha) in positives.iter().enumerate() {
            if rs.is_positive_root(&w.apply(alpha)) {
                continue;
            }
            let s = &s_values[k];
            let s_next = s + QQ::one();
            if zetahat_is_pole(s) || zetahat_is_pole(&s_next) {
                return Ok(Some(format!(
                    "singular configuration at w = {}: zeta ratio at s = {} / s+1 = {} hits a pole",
                    w.word_string(),
                    fmt_qq(s),
                    fmt_qq(&s_next)
                )));
            }
        }
    }
    Ok(None)
}

/// Evaluate the period `ω_X^G(λ)`.  `lambda_pairings` are the exact rational
/// coordinates `⟨λ, α_i∨⟩` against the simple coroots.  Singular
/// configurations (a `Γ_R` pole or a `ζ̂` pole for some `w`) are rejected
/// with an error naming the offending Weyl element and factor.
pub fn period_eval(
    rs: &RootSystemData,
    curve: &CurveData,
    lambda_pairings: &[QQ],
    config: &PeriodConfig,
) -> Result<PeriodValue> {
    if let Some(description) = period_singularity(rs, lambda_pairings)? {
        return Err(Error::input(description));
    }
    let prec = prec_bits(config.precision_digits);
    let lambda = lambda_from_pairings(rs, lambda_pairings)?;
    let zetahat = ZetaHatEvaluator::new(curve, prec);

    // ⟨λ, α∨⟩ and the ratio ζ̂(s)/ζ̂(s+1) per positive root, computed lazily.
    let positives = rs.positive_roots();
    let s_values: Vec<QQ> = positives
        .iter()
        .map(|alpha| rs.pair_coroot(&lambda, alpha))
        .collect();
    let mut ratio_cache: Vec<Option<Float>> = vec![None; positives.len()];

    let mut value = HPComplex::zero(prec);
    let mut terms = Vec::new();
    for w in rs.weyl_elements() {
        // Archimedean product over the simple roots.
        let wl = w.apply(&lambda);
        let mut gamma_product = HPComplex::one(prec);
        for alpha in rs.simple_roots() {
            let arg = QQ::one() - rs.pair_coroot(&wl, alpha);
            let g = gamma_r(&HPComplex::from_qq(prec, &arg))?;
            gamma_product = &gamma_product * &g;
        }
        // Zeta ratios over the inversion set {α > 0 : wα < 0}.
        let mut ratio_product = Float::with_val(prec, 1);
        let mut inversions = 0usize;
        for (k, alpha) in positives.iter().enumerate() {
            if rs.is_positive_root(&w.apply(alpha)) {
                continue;
            }
            inversions += 1;
            if ratio_cache[k].is_none() {
                let num = zetahat.eval(&s_values[k])?;
                let den = zetahat.eval(&(&s_values[k] + QQ::one()))?;
                ratio_cache[k] = Some(num / den);
            }
            ratio_product *= ratio_cache[k].as_ref().expect("just filled");
        }
        let sign = match config.sign_convention {
            SignConvention::AllPlus => 1i32,
            SignConvention::LengthSign => {
                if inversions % 2 == 1 {
                    -1
                } else {
                    1
                }
            }
        };
        let mut scale = ratio_product.clone();
        if sign < 0 {
            scale = -scale;
        }
        let term = gamma_product.scale(&scale);
        value = &value + &term;
        terms.push(PeriodTerm {
            w_word: w.word_string(),
            sign,
            gamma_product,
            zeta_ratio_product: ratio_product,
            term,
        });
    }
    Ok(PeriodValue { value, terms })
}

/// One sampled row of the rank-one comparison table.  `period` is `None`
/// when the sample is a singular configuration of the Weyl sum.
#[derive(Debug, Clone)]
pub struct Sl2Row {
    pub s: QQ,
    pub period: Option<Float>,
    pub singularity: Option<String>,
    pub assembled: Option<Float>,
    pub ratio: Option<Float>,
}

/// Sampling table for the A1 period, with optional rank-2 assembled-zeta
/// comparison columns (present iff an α/β table is supplied).  No equality
/// between the columns is asserted anywhere: the comparison is exploratory.
#[derive(Debug, Clone)]
pub struct Sl2Table {
    pub rows: Vec<Sl2Row>,
    pub has_comparison: bool,
    digits: usize,
}

impl Sl2Table {
    /// CSV with columns `s,period,assembled_zeta,ratio`.  Singular samples
    /// print "singular" in the period cell and leave the ratio cell empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,period,assembled_zeta,ratio\n");
        for row in &self.rows {
            let period = match &row.period {
                Some(x) => fmt_decimal(x, self.digits),
                None => "singular".to_string(),
            };
            let assembled = row
                .assembled
                .as_ref()
                .map(|x| fmt_decimal(x, self.digits))
                .unwrap_or_default();
            let ratio = row
                .ratio
                .as_ref()
                .map(|x| fmt_decimal(x, self.digits))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt_qq(&row.s),
                period,
                assembled,
                ratio
            ));
        }
        out
    }
}

/// Tabulate the A1 period at the sample points; for other systems the
/// operation is rejected ("rank-1 only").  Samples that are singular
/// configurations are tabulated with a marked period cell rather than
/// aborting the run.  When `table` is supplied, the rank-2 assembled zeta
/// (completed form `Z(T)·T^{1-g}` at `T = Q^{-s}`) is tabulated alongside
/// for comparison.
pub fn sl2_group_zeta(
    rs: &RootSystemData,
    curve: &CurveData,
    samples: &[QQ],
    config: &PeriodConfig,
    table: Option<&AlphaBetaTable>,
) -> Result<Sl2Table> {
    if rs.type_label() != RootType::A || rs.rank() != 1 {
        return Err(Error::input("rank-1 only"));
    }
    let prec = prec_bits(config.precision_digits);
    let assembled = table.map(assemble_zeta);
    let mut rows = Vec::new();
    for s in samples {
        let pairings = [s.clone()];
        let (period, singularity) = match period_singularity(rs, &pairings)? {
            Some(description) => (None, Some(description)),
            None => {
                let v = period_eval(rs, curve, &pairings, config)?;
                (Some(v.value.re), None)
            }
        };
        let assembled_val = match &assembled {
            Some(az) => {
                let s_f = hp_from_qq(prec, s);
                let ln_q = hp_from_qq(prec, &az.big_q).ln();
                let t = Float::with_val(prec, -s_f * ln_q).exp();
                let num = poly_eval_float(az.z.num(), &t);
                let den = poly_eval_float(az.z.den(), &t);
                if den.is_zero() {
                    return Err(Error::computation(format!(
                        "assembled zeta pole at sample s = {}",
                        fmt_qq(s)
                    )));
                }
                let exponent = Float::with_val(prec, 1i64 - az.genus as i64);
                let shift = Float::with_val(prec, rug::ops::Pow::pow(&t, &exponent));
                Some(Float::with_val(prec, num / den) * shift)
            }
            None => None,
        };
        let ratio = match (&period, &assembled_val) {
            (Some(p), Some(v)) => Some(Float::with_val(prec, p / v)),
            _ => None,
        };
        rows.push(Sl2Row {
            s: s.clone(),
            period,
            singularity,
            assembled: assembled_val,
            ratio,
        });
    }
    Ok(Sl2Table {
        rows,
        has_comparison: table.is_some(),
        digits: config.precision_digits as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvezeta::zeta_special_value;
    use crate::exactmath::{hp_pi, qq, qq_int};
    use crate::rootsys::build_root_system;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rug::ops::Pow;

    fn e_curve() -> CurveData {
        CurveData::from_numerator(2, 1, &[1, 0, 2]).unwrap()
    }

    #[test]
    fn gamma_r_op_examples() {
        let prec = prec_bits(40);
        // z=1 -> 1; z=2 -> 1/pi; z=0 -> pole error.
        let g1 = gamma_r(&HPComplex::from_qq(prec, &QQ::one())).unwrap();
        assert!((g1.re.to_f64() - 1.0).abs() < 1e-30);
        let g2 = gamma_r(&HPComplex::from_qq(prec, &qq_int(2))).unwrap();
        let target = hp_pi(prec).recip();
        assert!((g2.re.to_f64() - target.to_f64()).abs() < 1e-15);
        let e = gamma_r(&HPComplex::from_qq(prec, &QQ::zero())).unwrap_err();
        assert!(format!("{e}").contains("Gamma_R pole"));
        assert!(gamma_r(&HPComplex::from_qq(prec, &qq_int(-2))).is_err());
        // Non-even negative arguments are fine: Gamma_R(-1) = -2*pi.
        let g = gamma_r(&HPComplex::from_qq(prec, &qq_int(-1))).unwrap();
        let target = -(hp_pi(prec) * 2u32);
        assert!((g.re.to_f64() - target.to_f64()).abs() < 1e-12);
    }

    #[test]
    fn gamma_r_duplication_crosscheck() {
        // Gamma_R(z)*Gamma_R(z+1) = 2*(2pi)^{-z}*Gamma(z) at seeded random
        // rational points, within 2^{-prec/2} relative error.
        let digits = 40u32;
        let prec = prec_bits(digits);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let num = rng.gen_range(1..80i64);
            let den = rng.gen_range(1..8i64);
            let z = qq(num, den);
            let a = gamma_r(&HPComplex::from_qq(prec, &z)).unwrap();
            let b = gamma_r(&HPComplex::from_qq(prec, &(&z + QQ::one()))).unwrap();
            let lhs = Float::with_val(prec, &a.re * &b.re);
            let zf = hp_from_qq(prec, &z);
            let two_pi = hp_pi(prec) * 2u32;
            let rhs = Float::with_val(prec, 2)
                * Float::with_val(prec, (&two_pi).pow(&(-zf.clone())))
                * zf.gamma();
            let rel = Float::with_val(prec, &lhs - &rhs).abs() / rhs.abs();
            let cap = Float::with_val(prec, 2f64).pow(-(prec as f64) / 2.0);
            assert!(rel < cap, "z = {}: rel {rel}", fmt_qq(&z));
        }
    }

    #[test]
    fn a1_period_structure() {
        let a1 = build_root_system(RootType::A, 1).unwrap();
        let curve = e_curve();
        let config = PeriodConfig::default();
        let v = period_eval(&a1, &curve, &[qq_int(2)], &config).unwrap();
        assert_eq!(v.terms.len(), 2);
        // Identity term: Gamma_R(-1) = -2*pi, no zeta factors.
        let prec = prec_bits(config.precision_digits);
        let id = &v.terms[0];
        assert_eq!(id.w_word, "e");
        assert_eq!(id.zeta_ratio_product.to_f64(), 1.0);
        let neg_two_pi = -(hp_pi(prec) * 2u32);
        assert!((id.gamma_product.re.to_f64() - neg_two_pi.to_f64()).abs() < 1e-12);
        // Reflection term: ratio = zetahat(2)/zetahat(3) = 21/11 exactly.
        let refl = &v.terms[1];
        assert_eq!(refl.w_word, "s1");
        let reference =
            zeta_special_value(&curve, 2).unwrap() / zeta_special_value(&curve, 3).unwrap();
        assert_eq!(reference, qq(21, 11));
        let target = hp_from_qq(prec, &reference);
        let err = Float::with_val(prec, &refl.zeta_ratio_product - &target).abs();
        assert!(
            err.to_f64() < 1e-30,
            "{} vs {}",
            refl.zeta_ratio_product,
            target
        );
        // Gamma_R(3) = pi^{-3/2} Gamma(3/2) = 1/(2 pi).
        let half_inv_pi = (hp_pi(prec) * 2u32).recip();
        assert!((refl.gamma_product.re.to_f64() - half_inv_pi.to_f64()).abs() < 1e-15);
        // Total: imag residual ~ 0 and the two conventions differ by twice
        // the reflection term.
        assert!(v.value.im.to_f64().abs() < 1e-30);
        let config_ls = PeriodConfig {
            sign_convention: SignConvention::LengthSign,
            precision_digits: 40,
        };
        let v_ls = period_eval(&a1, &curve, &[qq_int(2)], &config_ls).unwrap();
        let diff = Float::with_val(prec, &v.value.re - &v_ls.value.re);
        let twice_refl = Float::with_val(prec, &refl.term.re * 2u32);
        let err = Float::with_val(prec, &diff - &twice_refl).abs();
        assert!(err.to_f64() < 1e-28);
    }

    #[test]
    fn singular_configurations_error() {
        let a1 = build_root_system(RootType::A, 1).unwrap();
        let curve = e_curve();
        let config = PeriodConfig::default();
        // <lambda, alpha^vee> = 1: Gamma_R(1-1) = Gamma_R(0) pole at w = e
        // (and a zeta pole at s = 1 besides).
        let e = period_eval(&a1, &curve, &[QQ::one()], &config).unwrap_err();
        let msg = format!("{e}");
        assert!(msg.contains("singular configuration"), "{msg}");
        assert!(msg.contains("w = e"), "{msg}");
        // <lambda, alpha^vee> = 3: Gamma_R(1-3) = Gamma_R(-2) pole at w = e.
        let e = period_eval(&a1, &curve, &[qq_int(3)], &config).unwrap_err();
        assert!(format!("{e}").contains("Gamma_R pole"), "{e}");
        // <lambda, alpha^vee> = -1: the Gamma_R argument at w = e is 2
        // (fine) but the reflection's zeta ratio needs s+1 = 0 -> singular.
        let e = period_eval(&a1, &curve, &[qq_int(-1)], &config).unwrap_err();
        assert!(format!("{e}").contains("singular configuration"), "{e}");
        // <lambda, alpha^vee> = 3/2 avoids both pole families: fine.
        assert!(period_eval(&a1, &curve, &[qq(3, 2)], &config).is_ok());
        // Wrong coordinate count.
        assert!(period_eval(&a1, &curve, &[qq_int(2), qq_int(2)], &config).is_err());
        // The singularity scan agrees with the evaluator.
        assert!(period_singularity(&a1, &[qq_int(2)]).unwrap().is_none());
        assert!(period_singularity(&a1, &[qq_int(3)]).unwrap().is_some());
    }

    #[test]
    fn weyl_sum_order_independence() {
        // Summing the reported terms in any order reproduces the value.
        // Pairings (2, 5/2): every Gamma_R argument over the six Weyl images
        // is a half-integer or an odd integer, so no poles.
        let a2 = build_root_system(RootType::A, 2).unwrap();
        let curve = e_curve();
        let config = PeriodConfig::default();
        let prec = prec_bits(config.precision_digits);
        let v = period_eval(&a2, &curve, &[qq_int(2), qq(5, 2)], &config).unwrap();
        assert_eq!(v.terms.len(), 6);
        let mut re = Float::new(prec);
        let mut im = Float::new(prec);
        for t in v.terms.iter().rev() {
            re += &t.term.re;
            im += &t.term.im;
        }
        let err = Float::with_val(prec, &re - &v.value.re).abs();
        assert!(err.to_f64() < 1e-30);
        let err = Float::with_val(prec, &im - &v.value.im).abs();
        assert!(err.to_f64() < 1e-30);
        // Determinism: a second evaluation is identical.
        let v2 = period_eval(&a2, &curve, &[qq_int(2), qq(5, 2)], &config).unwrap();
        assert_eq!(v.value.re, v2.value.re);
        assert_eq!(v.value.im, v2.value.im);
    }

    #[test]
    fn sl2_table_examples() {
        let a1 = build_root_system(RootType::A, 1).unwrap();
        let a2 = build_root_system(RootType::A, 2).unwrap();
        let curve = e_curve();
        let config = PeriodConfig::default();
        // Non-A1 system is rejected.
        let e = sl2_group_zeta(&a2, &curve, &[qq_int(2)], &config, None).unwrap_err();
        assert!(format!("{e}").contains("rank-1 only"));
        // Empty samples -> empty table.
        let t = sl2_group_zeta(&a1, &curve, &[], &config, None).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(t.to_csv(), "s,period,assembled_zeta,ratio\n");
        // Samples {2, 5/2, 3}: finite at 2 and 5/2; s = 3 is a genuine pole
        // of the Weyl sum (identity term carries Gamma_R(1-3) = Gamma_R(-2))
        // and is tabulated as a marked singular row, not an abort.
        let samples = vec![qq_int(2), qq(5, 2), qq_int(3)];
        let t = sl2_group_zeta(&a1, &curve, &samples, &config, None).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert!(!t.has_comparison);
        assert!(t.rows[0].period.as_ref().unwrap().is_finite());
        assert!(t.rows[1].period.as_ref().unwrap().is_finite());
        assert!(t.rows[2].period.is_none());
        assert!(t.rows[2]
            .singularity
            .as_ref()
            .unwrap()
            .contains("Gamma_R pole"));
        for row in &t.rows {
            assert!(row.assembled.is_none() && row.ratio.is_none());
        }
        // With a rank-2 table the comparison column fills for every row
        // (the assembled zeta is finite at all three samples); the ratio
        // needs both columns, so the singular row leaves it empty.
        let ab = AlphaBetaTable::new(2, 1, qq_int(2), vec![qq_int(3)], qq_int(6)).unwrap();
        let t = sl2_group_zeta(&a1, &curve, &samples, &config, Some(&ab)).unwrap();
        assert!(t.has_comparison);
        for row in &t.rows {
            assert!(row.assembled.as_ref().unwrap().is_finite());
        }
        assert!(t.rows[0].ratio.is_some());
        assert!(t.rows[1].ratio.is_some());
        assert!(t.rows[2].ratio.is_none());
        let csv = t.to_csv();
        assert!(csv.starts_with("s,period,assembled_zeta,ratio\n"));
        assert!(csv.contains("5/2,"), "{csv}");
        assert!(csv.contains("3,singular,"), "{csv}");
        assert_eq!(csv.lines().count(), 4);
    }
}
