//! The Gamma_R-weighted Weyl-sum period of a curve and its rank-1 sampling
//! table: per-term breakdown, both sign conventions, singular-configuration
//! detection, and the CSV comparison against the rank-2 assembled zeta.
//!
//! Run with: cargo run -p zetamass --example periods_sl2

use std::path::Path;
use zetamass::exactmath::{fmt_decimal, prec_bits, qq, qq_int, HPComplex, QQ};
use zetamass::io::{read_ab_file, read_curve_file};
use zetamass::periods::{
    gamma_r, period_eval, period_singularity, sl2_group_zeta, PeriodConfig, SignConvention,
};
use zetamass::rootsys::{build_root_system, RootType};

fn main() -> zetamass::Result<()> {
    let prec = prec_bits(40);

    // Gamma_R(s) = pi^{-s/2} Gamma(s/2): value 1 at s = 1, 1/pi at s = 2,
    // a pole at s = 0.
    for s in [1i64, 2] {
        let v = gamma_r(&HPComplex::from_qq(prec, &qq_int(s)))?;
        println!("Gamma_R({s}) = {}", fmt_decimal(&v.re, 20));
    }
    println!(
        "Gamma_R(0) -> {}",
        gamma_r(&HPComplex::from_qq(prec, &QQ::from(num_bigint::BigInt::from(0)))).unwrap_err()
    );

    // A1 period of E/F_2 at <lambda, alpha^vee> = 2: two Weyl terms.  The
    // reflection term carries the exact zeta ratio zetahat(2)/zetahat(3)
    // = 21/11.
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let curve = read_curve_file(fixtures.join("e2.curve"))?;
    let a1 = build_root_system(RootType::A, 1)?;
    for sign in [SignConvention::AllPlus, SignConvention::LengthSign] {
        let config = PeriodConfig {
            sign_convention: sign,
            precision_digits: 40,
        };
        let v = period_eval(&a1, &curve, &[qq_int(2)], &config)?;
        println!("A1 period, {} convention:", sign.as_str());
        for term in &v.terms {
            println!(
                "  w={:<3} sign={:+} gamma = {:<26} ratio = {}",
                term.w_word,
                term.sign,
                fmt_decimal(&term.gamma_product.re, 18),
                fmt_decimal(&term.zeta_ratio_product, 18)
            );
        }
        println!("  total = {}", fmt_decimal(&v.value.re, 25));
    }

    // Singular configurations are detected factor by factor.
    for s in [qq_int(1), qq_int(3)] {
        if let Some(reason) = period_singularity(&a1, &[s.clone()])? {
            println!("lambda = {s}: {reason}");
        }
    }

    // The sampling table, with the rank-2 assembled zeta alongside; no
    // identity between the columns is asserted -- the comparison is the
    // point.
    let table = read_ab_file(fixtures.join("e2_rank2.ab"))?;
    let config = PeriodConfig::default();
    let samples = [qq_int(2), qq(5, 2), qq_int(3)];
    let t = sl2_group_zeta(&a1, &curve, &samples, &config, Some(&table))?;
    print!("{}", t.to_csv());
    Ok(())
}
