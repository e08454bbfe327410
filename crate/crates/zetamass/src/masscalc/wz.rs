//! Roots-of-unity mass formulas: the exact "on average" identity and the
//! high-precision "individuality" measurement.
//!
//! The average identity is exact rational arithmetic:
//!
//! ```text
//! n·m_{X,n} = Σ_k Σ_{n_1+…+n_k=n} Σ_{δ_j ∈ {0..n_j-1}}
//!     ∏_{i=1}^{k-1} q^{v_i N_i N_i'}/(q^{N_i N_i'} - 1) · ∏_j m̃^{ss}_{X,n_j}(δ_j)
//! ```
//!
//! with `N_i = n_1+…+n_i`, `N_i' = n − N_i`, and `v_i ∈ [0,1) ∩ Q` the
//! fractional part of `δ_i/n_i − δ_{i+1}/n_{i+1}`.
//!
//! The individual formula refines the average with `n`-th roots of unity,
//!
//! ```text
//! m_{X,n}(d) ≈ Σ_k Σ_{comps} (1/n) Σ_δ [ Σ_{ζ^n=1} ζ^{n-d} ·
//!     ∏_{h=1}^{k-1} ζ^{v_h N_h} q^{v_h N_h N_h'} / (ζ^{N_h} q^{N_h N_h'} − 1) ]
//!     · ∏_j m̃^{ss}_{X,n_j}(δ_j)
//! ```
//!
//! where `ζ_j = e^{2πij/n}` and rational powers are read as
//! `ζ_j^x := e^{2πijx/n}`.  This refinement is evaluated numerically and
//! reported as a measurement together with its deviation from `m_{X,n}`;
//! only its mean over `d mod n` (which collapses to the average identity by
//! root-of-unity orthogonality) is asserted.

use super::{compositions, total_mass_ff, zagier_semistable_mass, QPower};
use crate::curvezeta::CurveData;
use crate::error::{Error, Result};
use crate::exactmath::{frac_part, hp_from_qq, hp_pi, prec_bits, qq, qq_int, qq_pow, HPComplex, QQ};
use num_traits::{One, Zero};
use rug::Float;
use std::collections::HashMap;

/// Exact two-sided evaluation of the average identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WzAverage {
    /// `n·m_{X,n}`.
    pub lhs: QQ,
    /// The composition/δ sum.
    pub rhs: QQ,
    /// Per-`k` layer sums of the right-hand side (index 0 ↔ `k = 1`).
    pub layers: Vec<QQ>,
    pub pass: bool,
}

/// Numerical evaluation of the individual-degree refinement.
#[derive(Debug, Clone)]
pub struct WzIndividual {
    /// Real part of the root-of-unity sum.
    pub value: Float,
    /// Magnitude of the (theoretically cancelling) imaginary part.
    pub imag_residual: Float,
    /// `m_{X,n}` for comparison.
    pub reference: QQ,
    /// `value − reference`.
    pub deviation: Float,
}

fn semistable_memo<'a>(
    curve: &'a CurveData,
    memo: &'a mut HashMap<(usize, i64), QQ>,
) -> impl FnMut(usize, i64) -> Result<QQ> + 'a {
    move |nj, dj| {
        let key = (nj, dj.rem_euclid(nj as i64));
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let v = zagier_semistable_mass(curve, nj, key.1)?;
        memo.insert(key, v.clone());
        Ok(v)
    }
}

/// Iterate over all δ-tuples `δ_j ∈ {0..n_j-1}`.
fn delta_tuples(parts: &[usize]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &p in parts {
        let mut next = Vec::with_capacity(out.len() * p);
        for tuple in &out {
            for delta in 0..p as i64 {
                let mut t = tuple.clone();
                t.push(delta);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// `v_i = {δ_i/n_i − δ_{i+1}/n_{i+1}}` for `i = 1..k-1`, in `[0,1)`.
fn v_values(parts: &[usize], deltas: &[i64]) -> Vec<QQ> {
    (0..parts.len().saturating_sub(1))
        .map(|i| {
            frac_part(
                &(qq(deltas[i], parts[i] as i64) - qq(deltas[i + 1], parts[i + 1] as i64)),
            )
        })
        .collect()
}

/// Exactly evaluate both sides of the average identity `n·m_{X,n} = Σ…`.
pub fn wz_average_identity(curve: &CurveData, n: usize) -> Result<WzAverage> {
    if n == 0 {
        return Err(Error::input("average identity requires n >= 1"));
    }
    let q = QQ::from(num_bigint::BigInt::from(curve.q()));
    let lhs = qq_int(n as i64) * total_mass_ff(curve, n)?;
    let mut memo = HashMap::new();
    let mut mass = semistable_memo(curve, &mut memo);
    let mut layers = vec![QQ::zero(); n];
    for comp in compositions(n)? {
        let parts = comp.parts();
        let k = comp.k();
        let prefix = comp.prefix_sums();
        for deltas in delta_tuples(parts) {
            let v = v_values(parts, &deltas);
            let mut qacc = QPower::one(q.clone());
            let mut den = QQ::one();
            for i in 0..k - 1 {
                let nn = (prefix[i] * (n - prefix[i])) as i64;
                qacc.mul_pow(&(&v[i] * qq_int(nn)));
                den *= qq_pow(&q, nn)? - QQ::one();
            }
            let mut term = qacc.materialize()? / den;
            for (j, &nj) in parts.iter().enumerate() {
                term *= mass(nj, deltas[j])?;
            }
            layers[k - 1] += term;
        }
    }
    let rhs: QQ = layers.iter().sum();
    let pass = lhs == rhs;
    Ok(WzAverage {
        lhs,
        rhs,
        layers,
        pass,
    })
}

/// Numerically evaluate the individual-degree mass formula at `d` and compare
/// with the (degree-independent) total mass.
pub fn wz_individual_mass(
    curve: &CurveData,
    n: usize,
    d: i64,
    precision_digits: u32,
) -> Result<WzIndividual> {
    if n == 0 {
        return Err(Error::input("individual mass requires n >= 1"));
    }
    if d < 0 || d >= n as i64 {
        return Err(Error::input(format!(
            "degree residue d must satisfy 0 <= d < n, got {d}"
        )));
    }
    let prec = prec_bits(precision_digits);
    let q = QQ::from(num_bigint::BigInt::from(curve.q()));
    let ln_q = hp_from_qq(prec, &q).ln();
    let two_pi = Float::with_val(prec, 2 * hp_pi(prec));
    let mut memo = HashMap::new();
    let mut mass = semistable_memo(curve, &mut memo);

    // ζ_j^x := e^{2πi·j·x/n} for rational x.
    let phase = |j: usize, x: &QQ| -> HPComplex {
        let angle = Float::with_val(
            prec,
            &two_pi * &hp_from_qq(prec, &(qq_int(j as i64) * x / qq_int(n as i64))),
        );
        let (sin, cos) = angle.sin_cos(Float::new(prec));
        HPComplex::new(cos, sin)
    };
    // q^x for rational x (x need not be integral per factor).
    let q_pow_real = |x: &QQ| -> Float {
        Float::with_val(prec, &hp_from_qq(prec, x) * &ln_q).exp()
    };

    let mut sum = HPComplex::zero(prec);
    for comp in compositions(n)? {
        let parts = comp.parts();
        let k = comp.k();
        let prefix = comp.prefix_sums();
        for deltas in delta_tuples(parts) {
            let v = v_values(parts, &deltas);
            let mut mprod = QQ::one();
            for (j, &nj) in parts.iter().enumerate() {
                mprod *= mass(nj, deltas[j])?;
            }
            let weight = hp_from_qq(prec, &(mprod / qq_int(n as i64)));
            for j in 0..n {
                // ζ^{n-d} · ∏_h ζ^{v_h N_h} q^{v_h N_h N_h'} / (ζ^{N_h} q^{N_h N_h'} − 1)
                let mut term = phase(j, &qq_int(n as i64 - d));
                for h in 0..k - 1 {
                    let nh = prefix[h] as i64;
                    let nnp = (prefix[h] * (n - prefix[h])) as i64;
                    let numer = phase(j, &(&v[h] * qq_int(nh)))
                        .scale(&q_pow_real(&(&v[h] * qq_int(nnp))));
                    let denom = &phase(j, &qq_int(nh)).scale(&q_pow_real(&qq_int(nnp)))
                        - &HPComplex::one(prec);
                    term = &term * &(&numer / &denom);
                }
                sum = &sum + &term.scale(&weight);
            }
        }
    }
    let reference = total_mass_ff(curve, n)?;
    let value = sum.re.clone();
    let deviation = Float::with_val(prec, &value - &hp_from_qq(prec, &reference));
    Ok(WzIndividual {
        value,
        imag_residual: sum.im.abs(),
        reference,
        deviation,
    })
}
