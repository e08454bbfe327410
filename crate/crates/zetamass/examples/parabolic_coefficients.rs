//! Conjectural parabolic-reduction coefficients in all three flavors
//! (number field, function field with symbolic q, Riemann surface with
//! Gamma_R factors), plus the SL_n composition cross-check that ties the
//! root-system generator to the mass-formula coefficients.
//!
//! Run with: cargo run -p zetamass --example parabolic_coefficients

use zetamass::exactmath::qq_int;
use zetamass::rootsys::{
    build_root_system, conjecture_coeffs, sln_coefficient_crosscheck, CoeffFlavor, RootType,
};

fn main() -> zetamass::Result<()> {
    let a1 = build_root_system(RootType::A, 1)?;
    let a2 = build_root_system(RootType::A, 2)?;

    // Number-field flavor: (-1)^rank / prod (1 - <w rho, alpha^vee>).
    let nf = conjecture_coeffs(&a1, &CoeffFlavor::NumberField)?;
    println!("A1 NF summary: {}", nf.summary());
    print!("{}", conjecture_coeffs(&a2, &CoeffFlavor::NumberField)?.to_text());

    // Function-field flavor carries a symbolic q-expression per parabolic.
    let ff = conjecture_coeffs(
        &a2,
        &CoeffFlavor::FunctionField { q: qq_int(2) },
    )?;
    print!("{}", ff.to_text());

    // Riemann-surface flavor: Gamma_R products; Borel rows are singular
    // (Gamma_R(0) pole), printed as such.
    let rs = conjecture_coeffs(&a2, &CoeffFlavor::RiemannSurface { precision_digits: 30 })?;
    print!("{}", rs.to_text());

    // SL_n crosscheck: parabolic subsets <-> compositions of n; NF values
    // match exactly and FF exponents match the adjacent part sums.
    for n in 2..=4 {
        let report = sln_coefficient_crosscheck(n)?;
        println!(
            "sln crosscheck n={n}: {} parabolics, all match: {}",
            report.rows.len(),
            report.all_match()
        );
    }
    print!("{}", sln_coefficient_crosscheck(3)?.to_text());
    Ok(())
}
