//! Mass and volume calculus for moduli of bundles and lattices.
//!
//! Function-field side (exact rationals): total masses as products of
//! completed-zeta special values, semistable masses through the closed
//! alternating formula over compositions, the infinite parabolic-reduction
//! series organized by instability-weight shells, and the roots-of-unity
//! average/individual mass formulas.
//!
//! Number-field side (high-precision reals): volumes of fundamental domains
//! of `SL_n(Z)` via completed Riemann zeta values, their semistable parts,
//! and the inverse relation expressing totals from semistable volumes under
//! two readings of its coefficient product.

mod hn;
mod numberfield;
mod wz;

pub use hn::{hn_series_partial, HnPartial};
pub use numberfield::{
    completed_riemann_zeta, inversion_consistency, ks_coefficient, ks_total_from_semistable,
    parabolic_coefficient, siegel_volume_nf, weng_semistable_volume_nf, InversionReport,
    InversionRow, KsConvention, SymPoly,
};
pub use wz::{wz_average_identity, wz_individual_mass, WzAverage, WzIndividual};

use crate::curvezeta::{zeta_special_value, CurveData};
use crate::error::{Error, Result};
use crate::exactmath::{fmt_qq, frac_part, parse_qq, qq_int, qq_is_integer, qq_pow, QQ};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An ordered composition `n = n_1 + … + n_k` with positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::input(
                "composition parts must be a nonempty sequence of positive integers",
            ));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Prefix sums `N_1..N_k` (so the last entry is the total).
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `2^{n-1}` ordered compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::input("compositions require n >= 1"));
    }
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A power `base^exponent` with an exact rational exponent, materialized to a
/// rational only once the exponent has been proven integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPower {
    base: QQ,
    exponent: QQ,
}

impl QPower {
    pub fn new(base: QQ, exponent: QQ) -> Self {
        QPower { base, exponent }
    }

    pub fn one(base: QQ) -> Self {
        QPower {
            base,
            exponent: QQ::zero(),
        }
    }

    pub fn exponent(&self) -> &QQ {
        &self.exponent
    }

    /// Multiply by `base^delta` (exponents add exactly).
    pub fn mul_pow(&mut self, delta: &QQ) {
        self.exponent += delta;
    }

    /// Collapse to an exact rational; the accumulated exponent must be an
    /// integer by this point.
    pub fn materialize(&self) -> Result<QQ> {
        if !qq_is_integer(&self.exponent) {
            return Err(Error::computation(format!(
                "non-integral exponent: {}^({})",
                self.base,
                self.exponent
            )));
        }
        let e = i64::try_from(self.exponent.to_integer())
            .map_err(|_| Error::computation("exponent too large to materialize"))?;
        qq_pow(&self.base, e)
    }
}

/// Total mass `m_{X,n} = ζ̂(1)·ζ̂(2)⋯ζ̂(n)`; independent of the degree.
pub fn total_mass_ff(curve: &CurveData, n: usize) -> Result<QQ> {
    if n == 0 {
        return Err(Error::input("total mass requires n >= 1"));
    }
    let mut m = QQ::one();
    for k in 1..=n as u64 {
        m *= zeta_special_value(curve, k)?;
    }
    Ok(m)
}

/// Semistable mass `m̃^{ss}_{X,n}(d)` via the closed alternating formula
///
/// ```text
/// m̃^{ss}_{X,n}(d) = Σ_k (-1)^{k-1} Σ_{n_1+…+n_k=n}
///     ∏_{j=1}^{k-1} q^{(n_j+n_{j+1})·{N_j·d/n}} / (q^{n_j+n_{j+1}} - 1)
///     · ∏_j m_{X,n_j}
/// ```
///
/// with `N_j = n_1+…+n_j` and `{x}` the fractional part in `[0,1)`
/// (so `{-1/3} = 2/3`).  Depends on `d` only through `d mod n`.
pub fn zagier_semistable_mass(curve: &CurveData, n: usize, d: i64) -> Result<QQ> {
    if n == 0 {
        return Err(Error::input("semistable mass requires n >= 1"));
    }
    let q = QQ::from(num_bigint::BigInt::from(curve.q()));
    // m_{X,j} for j = 1..n
    let mut m = vec![QQ::one()];
    for j in 1..=n {
        m.push(total_mass_ff(curve, j)?);
    }
    let mut sum = QQ::zero();
    for comp in compositions(n)? {
        let parts = comp.parts();
        let k = comp.k();
        let prefix = comp.prefix_sums();
        // Per-factor exponents (n_j+n_{j+1})·{N_j d/n} may individually be
        // fractional; only the per-composition total must be integral.
        let mut qacc = QPower::one(q.clone());
        let mut den = QQ::one();
        for j in 0..k.saturating_sub(1) {
            let pair = (parts[j] + parts[j + 1]) as i64;
            let frac = frac_part(&(qq_int(prefix[j] as i64) * qq_int(d) / qq_int(n as i64)));
            qacc.mul_pow(&(qq_int(pair) * frac));
            den *= qq_pow(&q, pair)? - QQ::one();
        }
        let mut term = qacc.materialize()? / den;
        for &p in parts {
            term *= &m[p];
        }
        if k % 2 == 0 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Ok(sum)
}

/// The normalization factor `q^{n(n-1)(g-1)/2}` relating `m̃^{ss}` to `m^{ss}`.
pub fn semistable_normalization(curve: &CurveData, n: usize) -> QQ {
    let e = (n as i64) * (n as i64 - 1) * (curve.g() as i64 - 1) / 2;
    qq_pow(&QQ::from(num_bigint::BigInt::from(curve.q())), e)
        .expect("prime power base is nonzero")
}

/// Normalized semistable mass `m^{ss}_{X,n}(d) = m̃^{ss}_{X,n}(d)·q^{n(n-1)(g-1)/2}`.
pub fn semistable_mass(curve: &CurveData, n: usize, d: i64) -> Result<QQ> {
    Ok(zagier_semistable_mass(curve, n, d)? * semistable_normalization(curve, n))
}

/// Flavor of the values held in a mass table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassKind {
    Total,
    Semistable,
    SemistableNormalized,
}

impl MassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MassKind::Total => "total",
            MassKind::Semistable => "semistable",
            MassKind::SemistableNormalized => "semistable_normalized",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "total" => Ok(MassKind::Total),
            "semistable" => Ok(MassKind::Semistable),
            "semistable_normalized" => Ok(MassKind::SemistableNormalized),
            other => Err(Error::input(format!("unknown mass-table kind '{other}'"))),
        }
    }
}

/// Exact function-field mass table keyed by `(rank, degree mod rank)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassTableFF {
    pub kind: MassKind,
    pub entries: BTreeMap<(usize, usize), QQ>,
}

impl MassTableFF {
    /// Fill the semistable table `m̃^{ss}_{X,n}(d)` for `n ≤ nmax`, `0 ≤ d < n`.
    pub fn semistable(curve: &CurveData, nmax: usize) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for n in 1..=nmax {
            for d in 0..n {
                entries.insert((n, d), zagier_semistable_mass(curve, n, d as i64)?);
            }
        }
        Ok(MassTableFF {
            kind: MassKind::Semistable,
            entries,
        })
    }

    /// Fill the total table (degree-independent; stored at `d = 0`).
    pub fn total(curve: &CurveData, nmax: usize) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for n in 1..=nmax {
            entries.insert((n, 0), total_mass_ff(curve, n)?);
        }
        Ok(MassTableFF {
            kind: MassKind::Total,
            entries,
        })
    }

    pub fn get(&self, n: usize, d: i64) -> Option<&QQ> {
        if n == 0 {
            return None;
        }
        self.entries.get(&(n, d.rem_euclid(n as i64) as usize))
    }

    /// Serialize as `kind = …` followed by `n:d = p/q` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("kind = {}\n", self.kind.as_str());
        for ((n, d), v) in &self.entries {
            out.push_str(&format!("{n}:{d} = {}\n", fmt_qq(v)));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| Error::input(format!("mass table line {}: missing '='", lineno + 1)))?;
            let (lhs, rhs) = (lhs.trim(), rhs.trim());
            if lhs == "kind" {
                kind = Some(MassKind::parse(rhs)?);
                continue;
            }
            let (n_str, d_str) = lhs.split_once(':').ok_or_else(|| {
                Error::input(format!("mass table line {}: key must be n:d", lineno + 1))
            })?;
            let n: usize = n_str
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("mass table line {}: bad rank", lineno + 1)))?;
            let d: usize = d_str
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("mass table line {}: bad degree", lineno + 1)))?;
            entries.insert((n, d), parse_qq(rhs)?);
        }
        Ok(MassTableFF {
            kind: kind.ok_or_else(|| Error::input("mass table: missing 'kind = …' line"))?,
            entries,
        })
    }
}

/// Number-field mass table keyed by rank, with the working precision recorded.
#[derive(Debug, Clone)]
pub struct MassTableNF {
    pub kind: MassKind,
    pub precision_digits: u32,
    pub entries: BTreeMap<usize, rug::Float>,
}

impl MassTableNF {
    /// Fill `m^{ss}_{Q,n}` for `n ≤ nmax` at the given decimal precision.
    pub fn semistable(nmax: usize, precision_digits: u32) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for n in 1..=nmax {
            entries.insert(n, weng_semistable_volume_nf(n, precision_digits)?);
        }
        Ok(MassTableNF {
            kind: MassKind::Semistable,
            precision_digits,
            entries,
        })
    }

    /// Serialize as `kind`, `precision`, then `n = decimal` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "kind = {}\nprecision = {}\n",
            self.kind.as_str(),
            self.precision_digits
        );
        for (n, v) in &self.entries {
            out.push_str(&format!(
                "{n} = {}\n",
                crate::exactmath::fmt_decimal(v, self.precision_digits as usize)
            ));
        }
        out
    }
}
