//! Assembling a rank-n zeta function from an alpha/beta partial-mass table:
//! rationality, functional equation, residue, and the rank-1 consistency
//! pipeline that reproduces the Artin zeta.
//!
//! Run with: cargo run -p zetamass --example assemble_rank2

use std::path::Path;
use zetamass::curvezeta::CurveData;
use zetamass::exactmath::fmt_qq;
use zetamass::io::read_ab_file;
use zetamass::zetassembly::{
    assemble_zeta, extract_numerator, functional_equation_check, rank_one_pipeline, residue_at_one,
};

fn main() -> zetamass::Result<()> {
    // Rank-2 table for E/F_2: alpha(0) = 3 (rational points of the Jacobian
    // acting on rank-2 degree-0 semistable masses), beta(0) = 6.
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let table = read_ab_file(fixtures.join("e2_rank2.ab"))?;
    let z = assemble_zeta(&table);

    let numerator = extract_numerator(&z)?;
    let coeffs: Vec<String> = numerator.coeffs().iter().map(fmt_qq).collect();
    println!("rank-2 zeta numerator = [{}]", coeffs.join(", "));

    let fe = functional_equation_check(&z);
    println!(
        "functional equation Z(1/(QT)) = (QT)^(2-2g) ... : {}",
        if fe.pass { "pass" } else { "FAIL" }
    );

    // The residue at T = Q^{-1} recovers the assembling beta exactly.
    let res = residue_at_one(&z)?;
    println!(
        "residue at s = 1 -> {} (table beta = {})",
        fmt_qq(&res),
        fmt_qq(table.beta())
    );

    // Rank 1: assembling from the curve's own alpha/beta data must return
    // the Artin zeta itself.
    let curve = CurveData::from_numerator(2, 1, &[1, 0, 2])?;
    let rank1 = rank_one_pipeline(&curve)?;
    let z1 = assemble_zeta(&rank1);
    let p1 = extract_numerator(&z1)?;
    let shown: Vec<String> = p1.coeffs().iter().map(fmt_qq).collect();
    println!("rank-1 pipeline numerator = [{}] (Artin numerator)", shown.join(", "));
    Ok(())
}
