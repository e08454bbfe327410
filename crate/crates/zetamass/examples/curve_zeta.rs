//! Artin zeta functions of curves over finite fields: construction from
//! numerator coefficients or point counts, special values, divisor counts,
//! and the Riemann-hypothesis root check.
//!
//! Run with: cargo run -p zetamass --example curve_zeta

use std::path::Path;
use zetamass::curvezeta::{
    effective_divisor_counts, rh_check, zeta_display, zeta_special_value, CurveData,
};
use zetamass::exactmath::fmt_qq;
use zetamass::io::read_curve_file;

fn main() -> zetamass::Result<()> {
    // An elliptic curve over F_2 with 3 rational points, loaded from its
    // fixture file (numerator P(t) = 1 + 2t^2).
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let e = read_curve_file(fixtures.join("e2.curve"))?;
    println!("E/F_2:   zeta = {}", zeta_display(&e));

    // Exact special values of the completed zeta; k = 1 is the residue.
    for k in 1..=3 {
        println!("  zetahat({k}) = {}", fmt_qq(&zeta_special_value(&e, k)?));
    }

    // Effective divisor counts are the power-series coefficients of Z(t).
    let counts = effective_divisor_counts(&e, 3);
    let shown: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    println!("  divisor counts b_0..b_3 = {}", shown.join(", "));

    // The same curve built from its point count N_1 = 3.
    let from_counts = CurveData::from_counts(2, 1, &[3])?;
    assert_eq!(from_counts.numerator_coeffs(), e.numerator_coeffs());
    println!("  from_counts([3]) reproduces the numerator");

    // A genus-2 curve over F_2 given by N_1 = 3, N_2 = 5.
    let g2 = CurveData::from_counts(2, 2, &[3, 5])?;
    println!("genus 2: zeta = {}", zeta_display(&g2));

    // All inverse roots of the numerator lie on |t| = 2^{-1/2}.
    for (name, curve) in [("E/F_2", &e), ("genus-2", &g2)] {
        let report = rh_check(curve, 1e-12, 40, 0)?;
        println!(
            "  RH check {name}: {} roots, max deviation {:.2e} -> {}",
            report.roots.len(),
            report.max_deviation,
            if report.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
