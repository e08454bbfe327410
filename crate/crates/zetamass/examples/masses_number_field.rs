//! Number-field volumes at high precision: completed Riemann zeta values,
//! Siegel volumes, semistable volumes, the inverse-relation coefficients
//! under two conventions, and the symbolic inversion-consistency report.
//!
//! Run with: cargo run -p zetamass --example masses_number_field

use zetamass::exactmath::{fmt_decimal, fmt_qq};
use zetamass::masscalc::{
    completed_riemann_zeta, compositions, inversion_consistency, ks_coefficient,
    parabolic_coefficient, siegel_volume_nf, weng_semistable_volume_nf, KsConvention,
};

fn main() -> zetamass::Result<()> {
    let digits = 50;

    // zetahat(k) = pi^{-k/2} Gamma(k/2) zeta(k); zetahat(1) := 1 (residue).
    for k in 1..=4 {
        let v = completed_riemann_zeta(k, digits)?;
        println!("zetahat({k}) = {}", fmt_decimal(&v, 30));
    }

    // Siegel volume of SL_n(Z)\SL_n(R): product of zetahat(2..n).
    for n in 2..=4 {
        println!(
            "siegel volume n={n}: {}",
            fmt_decimal(&siegel_volume_nf(n, digits)?, 30)
        );
    }

    // Semistable volume (alternating sum over compositions); n = 2 equals
    // pi/6 - 1/2.
    for n in 2..=3 {
        println!(
            "semistable volume n={n}: {}",
            fmt_decimal(&weng_semistable_volume_nf(n, digits)?, 30)
        );
    }

    // Per-composition coefficients of the two inverse-relation readings and
    // the alternating parabolic coefficient.
    println!("composition coefficients for n = 3:");
    for comp in compositions(3)? {
        let parts = comp.parts();
        let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        println!(
            "  ({}) parabolic={} A={} B={}",
            shown.join(","),
            fmt_qq(&parabolic_coefficient(parts)),
            fmt_qq(&ks_coefficient(parts, KsConvention::A)),
            fmt_qq(&ks_coefficient(parts, KsConvention::B)),
        );
    }

    // Does either convention invert the semistable sum symbolically?
    let report = inversion_consistency(3)?;
    print!("{}", report.to_text());
    Ok(())
}
