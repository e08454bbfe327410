//! Number-field volume identities: Siegel total volumes, semistable volumes
//! through the alternating composition sum, and the inverse relation under
//! two readings of its coefficient product.

use super::{compositions, MassTableNF};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_qq, hp_from_qq, hp_pi, hp_zeta, prec_bits, qq_int, QQ};
use num_traits::{One, Zero};
use rug::ops::Pow;
use rug::Float;
use std::collections::BTreeMap;
use std::fmt;

/// Completed Riemann zeta `ζ̂(k) = π^{-k/2}·Γ(k/2)·ζ(k)` for integer `k ≥ 2`;
/// `ζ̂(1)` is defined as the residue at `s = 1`, which equals 1.
pub fn completed_riemann_zeta(k: usize, precision_digits: u32) -> Result<Float> {
    if k == 0 {
        return Err(Error::input("completed zeta index k must be >= 1"));
    }
    let prec = prec_bits(precision_digits);
    if k == 1 {
        return Ok(Float::with_val(prec, 1));
    }
    let pi = hp_pi(prec);
    let half_k = Float::with_val(prec, k as u32) / 2u32;
    let pi_pow = Float::with_val(prec, (&pi).pow(&(-half_k.clone())));
    let gamma = half_k.gamma();
    let zeta = hp_zeta(prec, k as u32);
    Ok(pi_pow * gamma * zeta)
}

/// Siegel volume `m_{Q,n} = ζ̂(1)·ζ̂(2)⋯ζ̂(n)`.
pub fn siegel_volume_nf(n: usize, precision_digits: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::input("Siegel volume requires n >= 1"));
    }
    let prec = prec_bits(precision_digits);
    let mut v = Float::with_val(prec, 1);
    for k in 1..=n {
        v *= completed_riemann_zeta(k, precision_digits)?;
    }
    Ok(v)
}

/// The alternating-sum coefficient `(-1)^{k-1}/∏_{j<k}(n_j+n_{j+1})` of the
/// semistable-volume formula.
pub fn parabolic_coefficient(parts: &[usize]) -> QQ {
    let mut den = QQ::one();
    for j in 0..parts.len().saturating_sub(1) {
        den *= qq_int((parts[j] + parts[j + 1]) as i64);
    }
    let c = QQ::one() / den;
    if parts.len() % 2 == 0 {
        -c
    } else {
        c
    }
}

/// Semistable volume `m^{ss}_{Q,n} = Σ_k (-1)^{k-1} Σ_{comps}
/// [∏_{j<k}(n_j+n_{j+1})]^{-1} ∏_j m_{Q,n_j}`.
pub fn weng_semistable_volume_nf(n: usize, precision_digits: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::input("semistable volume requires n >= 1"));
    }
    let prec = prec_bits(precision_digits);
    // m_{Q,j} for j ≤ n
    let mut m = vec![Float::with_val(prec, 1)];
    for j in 1..=n {
        m.push(siegel_volume_nf(j, precision_digits)?);
    }
    let mut sum = Float::new(prec);
    for comp in compositions(n)? {
        let mut term = hp_from_qq(prec, &parabolic_coefficient(comp.parts()));
        for &p in comp.parts() {
            term *= &m[p];
        }
        sum += term;
    }
    Ok(sum)
}

/// The two readings of the inverse-relation coefficient denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KsConvention {
    /// Palindromic reading: all proper prefix sums, the total `n` once, and
    /// all proper suffix sums.  `c_{1,1} = 1/(1·2·1)`, `c_{1,1,1} = 1/(1·2·3·2·1)`.
    A,
    /// Truncated reading: all prefix sums (including the total) times the
    /// last part `n_k`.  `c_{1,1,1} = 1/((1·2·3)·1)`.
    B,
}

impl KsConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            KsConvention::A => "A",
            KsConvention::B => "B",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(KsConvention::A),
            "B" | "b" => Ok(KsConvention::B),
            other => Err(Error::input(format!(
                "unknown convention '{other}': expected A or B"
            ))),
        }
    }
}

impl fmt::Display for KsConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The coefficient `c_{n_1..n_k}` of the inverse relation under the chosen
/// convention.
pub fn ks_coefficient(parts: &[usize], convention: KsConvention) -> QQ {
    let k = parts.len();
    let n: usize = parts.iter().sum();
    let mut den = QQ::one();
    match convention {
        KsConvention::A => {
            let mut acc = 0usize;
            for &p in &parts[..k - 1] {
                acc += p;
                den *= qq_int(acc as i64); // proper prefix sums
            }
            den *= qq_int(n as i64); // the total, once
            let mut acc = 0usize;
            for &p in parts[1..].iter().rev() {
                acc += p;
                den *= qq_int(acc as i64); // proper suffix sums
            }
        }
        KsConvention::B => {
            let mut acc = 0usize;
            for &p in parts {
                acc += p;
                den *= qq_int(acc as i64); // all prefix sums
            }
            den *= qq_int(parts[k - 1] as i64); // times n_k
        }
    }
    QQ::one() / den
}

/// Evaluate the inverse relation's right-hand side
/// `Σ_{comps} c_{n_1..n_k}·∏_j m^{ss}_{Q,n_j}` from a supplied semistable
/// table; the caller compares the result against `m_{Q,n}/n`.
pub fn ks_total_from_semistable(
    n: usize,
    ss_table: &MassTableNF,
    convention: KsConvention,
) -> Result<Float> {
    if n == 0 {
        return Err(Error::input("inverse relation requires n >= 1"));
    }
    let prec = prec_bits(ss_table.precision_digits);
    for j in 1..=n {
        if !ss_table.entries.contains_key(&j) {
            return Err(Error::input(format!(
                "semistable table missing rank {j} (needed for n = {n})"
            )));
        }
    }
    let mut sum = Float::new(prec);
    for comp in compositions(n)? {
        let mut term = hp_from_qq(prec, &ks_coefficient(comp.parts(), convention));
        for &p in comp.parts() {
            term *= &ss_table.entries[&p];
        }
        sum += term;
    }
    Ok(sum)
}

/// A multivariate polynomial with rational coefficients in the commuting
/// symbols `m_1..m_nvars`, used for the symbolic inversion roundtrip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    /// exponent vector (length `nvars`) → coefficient; zero coefficients pruned.
    terms: BTreeMap<Vec<u32>, QQ>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QQ) -> Self {
        let mut p = SymPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The symbol `m_{var}` (1-based).
    pub fn symbol(nvars: usize, var: usize) -> Self {
        assert!(var >= 1 && var <= nvars);
        let mut exps = vec![0; nvars];
        exps[var - 1] = 1;
        let mut p = SymPoly::zero(nvars);
        p.add_term(exps, QQ::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: QQ) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(QQ::zero);
        *entry += c;
        // prune exact cancellations
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.scale(&-QQ::one()))
    }

    pub fn scale(&self, s: &QQ) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = SymPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut s = format!("({})", fmt_qq(c));
                for (i, &exp) in e.iter().enumerate() {
                    if exp == 1 {
                        s.push_str(&format!("*m{}", i + 1));
                    } else if exp > 1 {
                        s.push_str(&format!("*m{}^{}", i + 1, exp));
                    }
                }
                s
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

/// One row of the inversion-consistency report.
#[derive(Debug, Clone)]
pub struct InversionRow {
    pub n: usize,
    pub convention: KsConvention,
    pub closes: bool,
    /// `RHS − (1/n)·m_n` as a serialized polynomial in `m_1..m_n`.
    pub residual: String,
}

/// Report of the symbolic Fact-level roundtrip: substituting the alternating
/// semistable expansion into the inverse relation and comparing with
/// `(1/n)·m_n`.
#[derive(Debug, Clone)]
pub struct InversionReport {
    pub nmax: usize,
    pub rows: Vec<InversionRow>,
}

impl InversionReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("inversion consistency up to n = {}\n", self.nmax);
        for row in &self.rows {
            out.push_str(&format!(
                "n={} convention={} closes={} residual= {}\n",
                row.n, row.convention, row.closes, row.residual
            ));
        }
        out
    }
}

/// Symbolic expansion of `m^{ss}_j` in the free symbols `m_1..m_nvars`.
fn semistable_symbolic(j: usize, nvars: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero(nvars);
    for comp in compositions(j)? {
        let mut term = SymPoly::constant(nvars, parabolic_coefficient(comp.parts()));
        for &p in comp.parts() {
            term = term.mul(&SymPoly::symbol(nvars, p));
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Run the symbolic roundtrip for every `n ≤ nmax` under both conventions.
pub fn inversion_consistency(nmax: usize) -> Result<InversionReport> {
    if nmax == 0 {
        return Err(Error::input("inversion report requires nmax >= 1"));
    }
    let mut ss: Vec<SymPoly> = vec![SymPoly::zero(nmax)]; // index 0 unused
    for j in 1..=nmax {
        ss.push(semistable_symbolic(j, nmax)?);
    }
    let mut rows = Vec::new();
    for n in 1..=nmax {
        for convention in [KsConvention::A, KsConvention::B] {
            let mut rhs = SymPoly::zero(nmax);
            for comp in compositions(n)? {
                let mut term =
                    SymPoly::constant(nmax, ks_coefficient(comp.parts(), convention));
                for &p in comp.parts() {
                    term = term.mul(&ss[p]);
                }
                rhs = rhs.add(&term);
            }
            let target = SymPoly::symbol(nmax, n).scale(&(QQ::one() / qq_int(n as i64)));
            let residual = rhs.sub(&target);
            rows.push(InversionRow {
                n,
                convention,
                closes: residual.is_zero(),
                residual: residual.to_string(),
            });
        }
    }
    Ok(InversionReport { nmax, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::qq;

    #[test]
    fn completed_zeta_values() {
        let prec = prec_bits(50);
        // ζ̂(1) := residue = 1.
        assert_eq!(completed_riemann_zeta(1, 50).unwrap(), 1);
        // ζ̂(2) = π/6.
        let z2 = completed_riemann_zeta(2, 50).unwrap();
        let target = hp_pi(prec) / 6u32;
        let err = Float::with_val(prec, &z2 - &target).abs();
        assert!(err.to_f64() < 1e-45, "{z2} vs {target}");
        // ζ̂(3) = ζ(3)/(2π).
        let z3 = completed_riemann_zeta(3, 50).unwrap();
        let target = hp_zeta(prec, 3) / (2u32 * hp_pi(prec));
        let err = Float::with_val(prec, &z3 - &target).abs();
        assert!(err.to_f64() < 1e-45);
        // ζ̂(4) = π²/90·π^{-2}·Γ(2) = π^{-2}·(π^4/90) = π²/90.
        let z4 = completed_riemann_zeta(4, 50).unwrap();
        let target = hp_pi(prec).square() / 90u32;
        let err = Float::with_val(prec, &z4 - &target).abs();
        assert!(err.to_f64() < 1e-45);
        assert!(completed_riemann_zeta(0, 50).is_err());
    }

    #[test]
    fn siegel_volume_examples() {
        let prec = prec_bits(50);
        let v1 = siegel_volume_nf(1, 50).unwrap();
        assert_eq!(v1, 1);
        let v2 = siegel_volume_nf(2, 50).unwrap();
        let err = Float::with_val(prec, &v2 - hp_pi(prec) / 6u32).abs();
        assert!(err.to_f64() < 1e-45);
        let v3 = siegel_volume_nf(3, 50).unwrap();
        // m_3 = (π/6)·ζ(3)/(2π) = ζ(3)/12 ≈ 0.10017.
        let target = hp_zeta(prec, 3) / 12u32;
        let err = Float::with_val(prec, &v3 - &target).abs();
        assert!(err.to_f64() < 1e-45);
        assert!((v3.to_f64() - 0.10017).abs() < 1e-4);
    }

    #[test]
    fn siegel_volume_decreasing() {
        let mut prev = siegel_volume_nf(2, 50).unwrap();
        for n in 3..=8 {
            let v = siegel_volume_nf(n, 50).unwrap();
            assert!(v > 0, "n={n}");
            assert!(v < prev, "n={n}");
            prev = v;
        }
    }

    #[test]
    fn weng_semistable_examples() {
        let prec = prec_bits(50);
        let v1 = weng_semistable_volume_nf(1, 50).unwrap();
        let err = Float::with_val(prec, &v1 - 1u32).abs();
        assert!(err.to_f64() < 1e-45);
        // n=2: π/6 − 1/2.
        let v2 = weng_semistable_volume_nf(2, 50).unwrap();
        let target = hp_pi(prec) / 6u32 - Float::with_val(prec, 0.5);
        let err = Float::with_val(prec, &v2 - &target).abs();
        assert!(err.to_f64() < 1e-45);
        assert!((v2.to_f64() - 0.0235988).abs() < 1e-6);
        // n=3: m_3 − (2/3)m_2 + 1/4 ≈ 1.1e-3.
        let v3 = weng_semistable_volume_nf(3, 50).unwrap();
        let m3 = siegel_volume_nf(3, 50).unwrap();
        let m2 = siegel_volume_nf(2, 50).unwrap();
        let target = m3 - m2 * Float::with_val(prec, 2) / 3u32 + Float::with_val(prec, 0.25);
        let err = Float::with_val(prec, &v3 - &target).abs();
        assert!(err.to_f64() < 1e-45);
        assert!((v3.to_f64() - 1.1e-3).abs() < 1e-4);
        // positivity through n = 5 (recorded property)
        for n in 1..=5 {
            assert!(weng_semistable_volume_nf(n, 50).unwrap() > 0, "n={n}");
        }
    }

    #[test]
    fn ks_coefficient_examples() {
        assert_eq!(ks_coefficient(&[1, 1], KsConvention::A), qq(1, 2));
        assert_eq!(ks_coefficient(&[1, 1, 1], KsConvention::A), qq(1, 12));
        assert_eq!(ks_coefficient(&[1, 1, 1], KsConvention::B), qq(1, 6));
        assert_eq!(ks_coefficient(&[2, 1], KsConvention::A), qq(1, 6));
        assert_eq!(ks_coefficient(&[1, 2], KsConvention::A), qq(1, 6));
        assert_eq!(ks_coefficient(&[1], KsConvention::A), qq(1, 1));
        assert_eq!(ks_coefficient(&[2], KsConvention::A), qq(1, 2));
        assert_eq!(ks_coefficient(&[2], KsConvention::B), qq(1, 4));
        assert_eq!(ks_coefficient(&[1, 1, 2], KsConvention::A), qq(1, 48));
        assert_eq!(ks_coefficient(&[1, 1, 2], KsConvention::B), qq(1, 16));
        assert!(KsConvention::parse("C").is_err());
        assert_eq!(KsConvention::parse("a").unwrap(), KsConvention::A);
    }

    #[test]
    fn ks_total_n1_and_n2() {
        let table = MassTableNF::semistable(3, 50).unwrap();
        let prec = prec_bits(50);
        for conv in [KsConvention::A, KsConvention::B] {
            let v = ks_total_from_semistable(1, &table, conv).unwrap();
            let err = Float::with_val(prec, &v - 1u32).abs();
            assert!(err.to_f64() < 1e-45, "{conv}");
        }
        // Convention A at n=2 overshoots m_2/2 by exactly (1/4)m_1² = 1/4.
        let v = ks_total_from_semistable(2, &table, KsConvention::A).unwrap();
        let target = siegel_volume_nf(2, 50).unwrap() / 2u32;
        let diff = Float::with_val(prec, &v - &target);
        let err = Float::with_val(prec, &diff - Float::with_val(prec, 0.25)).abs();
        assert!(err.to_f64() < 1e-45, "diff = {diff}");
        // Missing ranks are an input error.
        let small = MassTableNF::semistable(1, 50).unwrap();
        assert!(ks_total_from_semistable(2, &small, KsConvention::A).is_err());
    }

    #[test]
    fn sympoly_arithmetic_and_display() {
        let m1 = SymPoly::symbol(2, 1);
        let m2 = SymPoly::symbol(2, 2);
        let p = m1.mul(&m1).scale(&qq(1, 4)).add(&m2.scale(&qq(-1, 2)));
        // Terms appear in lexicographic order on the exponent vectors.
        assert_eq!(p.to_string(), "(-1/2)*m2 + (1/4)*m1^2");
        assert!(p.sub(&p).is_zero());
        assert_eq!(SymPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn inversion_report_contents() {
        let report = inversion_consistency(3).unwrap();
        assert_eq!(report.rows.len(), 6);
        // n=1 closes under both conventions.
        for row in report.rows.iter().filter(|r| r.n == 1) {
            assert!(row.closes, "n=1 {:?}", row);
            assert_eq!(row.residual, "0");
        }
        // n=2 convention A leaves the recorded residual (1/4)m1².
        let row = report
            .rows
            .iter()
            .find(|r| r.n == 2 && r.convention == KsConvention::A)
            .unwrap();
        assert!(!row.closes);
        assert_eq!(row.residual, "(1/4)*m1^2");
        // Determinism of the serialized report.
        let again = inversion_consistency(3).unwrap();
        assert_eq!(report.to_text(), again.to_text());
        assert!(report.to_text().contains("n=3 convention=B"));
    }
}
