//! The text file formats: curve records, alpha/beta table records, mass
//! tables, and the deterministic run manifest.  Every writer's output is
//! accepted back by the matching reader.
//!
//! Run with: cargo run -p zetamass --example file_formats

use zetamass::curvezeta::CurveData;
use zetamass::io::{ab_to_toml, curve_to_toml, parse_ab_str, parse_curve_str, RunManifest};
use zetamass::masscalc::MassTableFF;

fn main() -> zetamass::Result<()> {
    // Curve records accept a numerator or point counts; output is always
    // the canonical numerator form.
    let curve = CurveData::from_counts(2, 2, &[3, 5])?;
    let text = curve_to_toml(&curve);
    println!("--- genus-2 curve record ---\n{text}");
    let back = parse_curve_str(&text)?;
    assert_eq!(back.numerator_coeffs(), curve.numerator_coeffs());

    // Alpha/beta table records carry exact rationals as "p/q" strings.
    let ab_text = "n = 2\ng = 1\nbase = \"2\"\nalphas = [\"3\"]\nbeta = \"6\"\n";
    let table = parse_ab_str(ab_text)?;
    assert_eq!(ab_to_toml(&table), ab_text);
    println!("--- alpha/beta record ---\n{}", ab_to_toml(&table));

    // Mass tables round-trip through their line-based text form.
    let e = CurveData::from_numerator(2, 1, &[1, 0, 2])?;
    let masses = MassTableFF::total(&e, 3)?;
    println!("--- mass table ---\n{}", masses.to_text());

    // A run manifest: the full configuration of a CLI invocation; identical
    // manifests yield byte-identical outputs.
    let manifest = RunManifest::new("mass zagier")
        .with_input("fixtures/e2.curve")
        .with_param("n", 3)
        .with_param("d", 0)
        .with_precision(40);
    println!("--- run manifest ---\n{}", manifest.to_text());
    Ok(())
}
