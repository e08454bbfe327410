//! Assembly of rank-`n` non-abelian zeta functions from α/β data.
//!
//! A rank-`n` zeta of a genus-`g` curve is determined by the `g` mass values
//! `α(0), α(n), …, α(n(g-1))` together with the semistable mass
//! `β = β(0)`.  In the variables `T = t^n`, `Q = base^n` the zeta is
//!
//! ```text
//! Z(T) = Σ_{m=0}^{g-2} α(mn)·(T^m + Q^{g-1-m} T^{2(g-1)-m})
//!        + α(n(g-1))·T^{g-1}
//!        + β·(Q-1)·T^g / ((1-T)(1-QT)).
//! ```
//!
//! The β-tail contributes `β·(Q^{m-g+1}-1)` to the series coefficient of
//! `T^m` for every `m ≥ g`, which combines with the symmetrized α-monomials
//! so that the full coefficient sequence satisfies duality
//! `b_m = Q^{m-g+1}·b_{2g-2-m} + β·(Q^{m-g+1}-1)` and the completed function
//! `Z(T)·T^{-(g-1)}` is invariant under `T ↦ 1/(QT)`.  For `g = 1` the
//! expression degenerates to `α(0) + β(Q-1)T/((1-T)(1-QT))` and for `g = 0`
//! to the pure tail `β(Q-1)/((1-T)(1-QT))`.
//!
//! The base is any rational `> 1`: the integer `q` for curves over finite
//! fields, or a generic rational `π₀` — the assembly never uses integrality,
//! which is exactly what makes the generic-base variant work.

use crate::curvezeta::{effective_divisor_counts, zeta_special_value, CurveData};
use crate::error::{Error, Result};
use crate::exactmath::{
    hp_from_qq, poly_roots_numeric, prec_bits, qq_pow, rf_normalize, rf_residue_simple,
    rf_substitute_inv, HPComplex, RationalFunctionQ, UniPoly, QQ,
};
use num_traits::{One, Zero};
use rand::Rng;
use rug::Float;

/// Variable name for the rank-`n` zeta in the `T = t^n` coordinate.
pub const ZETA_VAR: &str = "T";

/// Exact α/β input data for one rank-`n` zeta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBetaTable {
    rank: usize,
    genus: usize,
    base: QQ,
    /// `alphas[m] = α(m·n)` for `m = 0..g-1`; empty when `g = 0`.
    alphas: Vec<QQ>,
    /// `β(0)`.
    beta: QQ,
}

impl AlphaBetaTable {
    pub fn new(rank: usize, genus: usize, base: QQ, alphas: Vec<QQ>, beta: QQ) -> Result<Self> {
        if rank < 1 {
            return Err(Error::input("rank must be >= 1"));
        }
        if base <= QQ::one() {
            return Err(Error::input(format!(
                "base must be a rational > 1, got {base}"
            )));
        }
        if alphas.len() != genus {
            return Err(Error::input(format!(
                "expected {} alpha values α(0), α(n), …, α(n(g-1)), got {}",
                genus,
                alphas.len()
            )));
        }
        if let Some(bad) = alphas.iter().find(|a| **a < QQ::zero()) {
            return Err(Error::input(format!(
                "alpha values must be nonnegative, got {bad}"
            )));
        }
        if beta <= QQ::zero() {
            return Err(Error::input(format!("beta must be positive, got {beta}")));
        }
        Ok(AlphaBetaTable {
            rank,
            genus,
            base,
            alphas,
            beta,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn base(&self) -> &QQ {
        &self.base
    }

    pub fn alphas(&self) -> &[QQ] {
        &self.alphas
    }

    pub fn beta(&self) -> &QQ {
        &self.beta
    }

    /// `Q = base^n`.
    pub fn big_q(&self) -> QQ {
        qq_pow(&self.base, self.rank as i64).expect("base > 1 is nonzero")
    }
}

/// An assembled rank-`n` zeta `Z(T)` together with its bookkeeping data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssembledZeta {
    /// `Z` as a canonical rational function of `T`.
    pub z: RationalFunctionQ,
    /// `Q = base^n`; the relation to the underlying variable is `T = t^n`.
    pub big_q: QQ,
    pub rank: usize,
    pub genus: usize,
}

/// Result of the functional-equation verification.
#[derive(Debug, Clone)]
pub struct FeCheck {
    pub pass: bool,
    /// `Z(1/(QT))·(QT)^{g-1} − Z(T)·T^{-(g-1)}`; the zero function iff `pass`.
    pub witness: RationalFunctionQ,
}

/// `(1-T)(1-QT)` as a polynomial in `T`.
fn standard_denominator(big_q: &QQ) -> UniPoly {
    UniPoly::new(
        ZETA_VAR,
        vec![QQ::one(), -(QQ::one() + big_q), big_q.clone()],
    )
}

/// Assemble the rank-`n` zeta from its α/β table.
pub fn assemble_zeta(table: &AlphaBetaTable) -> AssembledZeta {
    let big_q = table.big_q();
    let g = table.genus;
    let den = standard_denominator(&big_q);
    // α part: Σ_{m≤g-2} α(mn)(T^m + Q^{g-1-m}T^{2(g-1)-m}) + α(n(g-1))T^{g-1}
    let mut alpha_part = UniPoly::zero(ZETA_VAR);
    if g >= 1 {
        for (m, a) in table.alphas.iter().enumerate().take(g - 1) {
            let lo = UniPoly::monomial(ZETA_VAR, m, a.clone());
            let hi_coeff = a * qq_pow(&big_q, (g - 1 - m) as i64).expect("nonzero base");
            let hi = UniPoly::monomial(ZETA_VAR, 2 * (g - 1) - m, hi_coeff);
            alpha_part = alpha_part + lo + hi;
        }
        alpha_part = alpha_part
            + UniPoly::monomial(ZETA_VAR, g - 1, table.alphas[g - 1].clone());
    }
    // β tail over the common denominator: β(Q-1)T^g
    let tail = UniPoly::monomial(
        ZETA_VAR,
        g,
        &table.beta * (&big_q - QQ::one()),
    );
    let numerator = &alpha_part * &den + tail;
    let z = rf_normalize(numerator, den).expect("standard denominator is nonzero");
    AssembledZeta {
        z,
        big_q,
        rank: table.rank,
        genus: g,
    }
}

/// Verify the functional equation `Z(1/(QT))·(QT)^{g-1} = Z(T)·T^{-(g-1)}`
/// as an identity of canonical rational functions.
pub fn functional_equation_check(z: &AssembledZeta) -> FeCheck {
    let shift = z.genus as i64 - 1;
    let build = || -> Result<RationalFunctionQ> {
        let sub = rf_substitute_inv(&z.z, &z.big_q)?;
        let scale = RationalFunctionQ::constant(ZETA_VAR, qq_pow(&z.big_q, shift)?);
        let lhs = (&sub * &scale).mul_var_pow(shift)?;
        let rhs = z.z.mul_var_pow(-shift)?;
        Ok(&lhs - &rhs)
    };
    let witness = build().expect("functional-equation algebra on nonzero base");
    FeCheck {
        pass: witness.is_zero(),
        witness,
    }
}

/// Recover the numerator `P` with `Z = P(T)/((1-T)(1-QT))`.
pub fn extract_numerator(z: &AssembledZeta) -> Result<UniPoly> {
    let den = standard_denominator(&z.big_q);
    let cleared = &z.z * &RationalFunctionQ::from_poly(den);
    if !cleared.is_polynomial() {
        return Err(Error::computation(
            "not in expected form: denominator does not divide (1-T)(1-QT)",
        ));
    }
    Ok(cleared.num().clone())
}

/// The residue value `ζ̂(1) = Res_{s=1} ζ̂(s)·log Q`, computed exactly in the
/// `T`-variable; equals the table's β for every assembled zeta.
pub fn residue_at_one(z: &AssembledZeta) -> Result<QQ> {
    let shift = z.genus as i64 - 1;
    let zhat = z.z.mul_var_pow(-shift)?;
    let t0 = QQ::one() / &z.big_q;
    let res_t = rf_residue_simple(&zhat, &t0)?;
    // Res_{s=1} ζ̂·log Q = Res_T ζ̂ · (-1/(T_0 log Q)) · log Q = -Q·Res_T ζ̂.
    Ok(-(res_t * &z.big_q))
}

/// Derive the rank-1 α/β table of a curve: `α(m) = b_m` (effective-divisor
/// counts) for `m ≤ g-1` and `β = ζ̂(1)`.
pub fn rank_one_pipeline(curve: &CurveData) -> Result<AlphaBetaTable> {
    let g = curve.g();
    let alphas: Vec<QQ> = if g >= 1 {
        effective_divisor_counts(curve, g - 1)
            .into_iter()
            .map(QQ::from)
            .collect()
    } else {
        Vec::new()
    };
    let beta = zeta_special_value(curve, 1)?;
    AlphaBetaTable::new(1, g, QQ::from(num_bigint::BigInt::from(curve.q())), alphas, beta)
}

/// Draw a random valid table: base in `{2, 3, 4, 5/2, 7/3}`, `g ≤ 4`,
/// `n ≤ 3`, small nonnegative rational alphas and positive beta.
pub fn random_table<R: Rng>(rng: &mut R) -> AlphaBetaTable {
    let bases = [
        crate::exactmath::qq(2, 1),
        crate::exactmath::qq(3, 1),
        crate::exactmath::qq(4, 1),
        crate::exactmath::qq(5, 2),
        crate::exactmath::qq(7, 3),
    ];
    let base = bases[rng.gen_range(0..bases.len())].clone();
    let rank = rng.gen_range(1..=3usize);
    let genus = rng.gen_range(0..=4usize);
    let alphas: Vec<QQ> = (0..genus)
        .map(|_| crate::exactmath::qq(rng.gen_range(0..=12), rng.gen_range(1..=4)))
        .collect();
    let beta = crate::exactmath::qq(rng.gen_range(1..=12), rng.gen_range(1..=4));
    AlphaBetaTable::new(rank, genus, base, alphas, beta).expect("generated table is valid")
}

/// Exploratory report on the zeros of the assembled numerator: each root of
/// `P(T)` is returned together with `|root|·Q^{1/2}`, which a Riemann
/// Hypothesis for the rank-`n` zeta predicts to be 1.  No pass/fail.
pub fn rh_exploration(
    z: &AssembledZeta,
    precision_digits: u32,
    seed: u64,
) -> Result<Vec<(HPComplex, Float)>> {
    let p = extract_numerator(z)?;
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let roots = poly_roots_numeric(&p, precision_digits, seed)?;
    let prec = prec_bits(precision_digits);
    let sqrt_q = hp_from_qq(prec, &z.big_q).sqrt();
    Ok(roots
        .into_iter()
        .map(|r| {
            let scaled = Float::with_val(prec, r.abs() * &sqrt_q);
            (r, scaled)
        })
        .collect())
}
