//! Numeric root finding for exact-coefficient polynomials: simultaneous
//! (Durand-Kerner) iteration at extended precision with a deterministic,
//! seed-adjustable starting configuration.

use super::{HPComplex, QQ, UniPoly};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use rug::ops::Pow;
use rug::Float;

/// All deg(p) complex roots, with multiplicity, such that every returned r
/// satisfies |p(r)| < 2^(-precision/2) * max |coeff|. The iteration is
/// deterministic for a fixed (polynomial, precision, seed).
pub fn poly_roots_numeric(p: &UniPoly, precision: u32, seed: u64) -> Result<Vec<HPComplex>> {
    let deg = match p.degree() {
        None => return Err(Error::computation("zero polynomial has no well-defined roots")),
        Some(0) => return Err(Error::computation("constant polynomial has no roots")),
        Some(d) => d,
    };
    let work = precision + 96;

    // Deflate roots at the origin (trailing zero coefficients) exactly.
    let mut zero_roots = 0usize;
    while p.coeff(zero_roots).is_zero() {
        zero_roots += 1;
    }
    let reduced = UniPoly::new(
        p.var().to_string(),
        p.coeffs()[zero_roots..].to_vec(),
    );
    let mut roots: Vec<HPComplex> = (0..zero_roots).map(|_| HPComplex::zero(precision)).collect();
    let rdeg = deg - zero_roots;
    if rdeg == 0 {
        return Ok(roots);
    }

    // Monic scaling for the iteration (exact rational division).
    let lead = reduced.leading_coeff();
    let monic = reduced.scale(&lead.recip());

    // Cauchy bound: all roots lie within 1 + max |a_i| (monic a_i).
    let mut maxc = QQ::from_integer(0.into());
    for c in monic.coeffs() {
        let a = c.abs();
        if a > maxc {
            maxc = a;
        }
    }
    let radius = Float::with_val(work, super::hp_from_qq(work, &maxc) + 1u32);

    // Starting points spread on a circle, offset by a seed-derived phase so
    // reruns with another seed take a different (still deterministic) path.
    let two_pi = super::hp_pi(work) * 2u32;
    let phase0 = Float::with_val(work, 0.30721 + (seed % 10_007) as f64 * 1e-5);
    let mut zs: Vec<HPComplex> = (0..rdeg)
        .map(|k| {
            let angle = Float::with_val(work, &two_pi * k as u32) / rdeg as u32 + &phase0;
            let (s, c) = angle.sin_cos(Float::new(work));
            HPComplex::new(
                Float::with_val(work, &c * &radius),
                Float::with_val(work, &s * &radius),
            )
        })
        .collect();

    let tol = Float::with_val(work, 2f64).pow(-(precision as i32) - 16);
    let max_iters = 400 + 40 * rdeg;
    let mut converged = false;
    for _ in 0..max_iters {
        let mut max_step = Float::new(work);
        for k in 0..rdeg {
            let pk = monic.eval_complex(&zs[k]);
            let mut denom = HPComplex::one(work);
            for j in 0..rdeg {
                if j != k {
                    denom = &denom * &(&zs[k] - &zs[j]);
                }
            }
            if denom.abs().is_zero() {
                // nudge coincident points apart deterministically
                zs[k].re += Float::with_val(work, 1e-3);
                continue;
            }
            let step = &pk / &denom;
            let stepsize = step.abs();
            if stepsize > max_step {
                max_step = stepsize;
            }
            zs[k] = &zs[k] - &step;
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::computation(format!(
            "root finding did not converge within {max_iters} iterations at {precision} bits"
        )));
    }

    // Residual contract on the original (non-monic) polynomial.
    let mut max_abs_coeff = Float::new(work);
    for c in p.coeffs() {
        let a = super::hp_from_qq(work, c).abs();
        if a > max_abs_coeff {
            max_abs_coeff = a;
        }
    }
    let bound = Float::with_val(work, 2f64).pow(-(precision as i32) / 2) * &max_abs_coeff;
    for z in &zs {
        let residual = p.eval_complex(z).abs();
        if residual > bound {
            return Err(Error::computation(format!(
                "root residual {:.3e} exceeds the contract bound {:.3e}",
                residual.to_f64(),
                bound.to_f64()
            )));
        }
    }

    // Deterministic output order: by real part, then imaginary part.
    roots.extend(zs);
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    // Round to the requested precision.
    Ok(roots
        .into_iter()
        .map(|z| HPComplex::new(
            Float::with_val(precision, &z.re),
            Float::with_val(precision, &z.im),
        ))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::{qq, qq_int};
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::new("T", coeffs.iter().map(|&c| qq_int(c)).collect())
    }

    #[test]
    fn factorable_quadratic() {
        // T^2 - 1 -> {1, -1}
        let roots = poly_roots_numeric(&p(&[-1, 0, 1]), 128, 0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].re.to_f64() + 1.0).abs() < 1e-30);
        assert!((roots[1].re.to_f64() - 1.0).abs() < 1e-30);
        for r in &roots {
            assert!(r.im.to_f64().abs() < 1e-30);
        }
    }

    #[test]
    fn rank_one_numerator_moduli() {
        // 1 + 2T^2 -> +- i/sqrt(2), modulus 2^(-1/2)
        let roots = poly_roots_numeric(&p(&[1, 0, 2]), 192, 0).unwrap();
        assert_eq!(roots.len(), 2);
        let target = 2f64.powf(-0.5);
        for r in &roots {
            assert!((r.abs().to_f64() - target).abs() < 1e-40);
            assert!(r.re.to_f64().abs() < 1e-40);
        }
    }

    #[test]
    fn linear_and_zero_roots() {
        let roots = poly_roots_numeric(&p(&[-3, 1]), 128, 0).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].re.to_f64() - 3.0).abs() < 1e-30);

        // T^3 + T^2 = T^2 (T + 1): two zero roots, one at -1
        let roots = poly_roots_numeric(&p(&[0, 0, 1, 1]), 128, 0).unwrap();
        assert_eq!(roots.len(), 3);
        assert!((roots[0].re.to_f64() + 1.0).abs() < 1e-30);
        assert!(roots[1].abs().is_zero());
        assert!(roots[2].abs().is_zero());
    }

    #[test]
    fn product_of_roots_matches_constant_term() {
        // genus-2 fixture numerator 1 + 4T^4
        let quartic = p(&[1, 0, 0, 0, 4]);
        let precision = 192;
        let roots = poly_roots_numeric(&quartic, precision, 0).unwrap();
        assert_eq!(roots.len(), 4);
        let mut prod = HPComplex::one(precision);
        for r in &roots {
            prod = &prod * r;
        }
        // product of roots = (-1)^4 a_0/a_4 = 1/4
        assert!((prod.re.to_f64() - 0.25).abs() < 1e-40);
        assert!(prod.im.to_f64().abs() < 1e-40);
    }

    #[test]
    fn seed_changes_path_not_result() {
        let f = p(&[1, 2, 2]);
        let a = poly_roots_numeric(&f, 128, 0).unwrap();
        let b = poly_roots_numeric(&f, 128, 12345).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x.re.clone() - &y.re).to_f64().abs() < 1e-30);
            assert!((x.im.clone() - &y.im).to_f64().abs() < 1e-30);
        }
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(poly_roots_numeric(&UniPoly::zero("T"), 128, 0).is_err());
        assert!(poly_roots_numeric(&UniPoly::constant("T", qq(3, 1)), 128, 0).is_err());
    }
}
