//! Exact bundle masses over function fields: the total mass as a product of
//! completed-zeta special values and the semistable mass via the closed
//! alternating formula over compositions.
//!
//! Run with: cargo run -p zetamass --example masses_function_field

use zetamass::curvezeta::CurveData;
use zetamass::exactmath::fmt_qq;
use zetamass::masscalc::{
    semistable_mass, semistable_normalization, total_mass_ff, zagier_semistable_mass, MassTableFF,
};

fn main() -> zetamass::Result<()> {
    let e = CurveData::from_numerator(2, 1, &[1, 0, 2])?;
    let g2 = CurveData::from_counts(2, 2, &[3, 5])?;

    for (name, curve) in [("E/F_2", &e), ("genus-2", &g2)] {
        println!("{name}:");
        // m_{X,n} = zetahat(1) * ... * zetahat(n).
        for n in 1..=3 {
            println!("  total m_{{X,{n}}} = {}", fmt_qq(&total_mass_ff(curve, n)?));
        }
        // Semistable masses per degree class d (the tilde normalization).
        for n in 2..=3 {
            for d in 0..n {
                let m = zagier_semistable_mass(curve, n, d as i64)?;
                println!("  semistable ~m_{{X,{n}}}({d}) = {}", fmt_qq(&m));
            }
        }
        // The unnormalized mass differs by the factor q^{n(n-1)(g-1)/2}.
        let norm = semistable_normalization(curve, 2);
        println!(
            "  normalization n=2: {} -> m^ss_2(0) = {}",
            fmt_qq(&norm),
            fmt_qq(&semistable_mass(curve, 2, 0)?)
        );
    }

    // Tables serialize to a text format and round-trip.
    let table = MassTableFF::semistable(&e, 3)?;
    let text = table.to_text();
    println!("--- serialized semistable table (E/F_2, n <= 3) ---\n{text}");
    let back = MassTableFF::from_text(&text)?;
    assert_eq!(back.entries, table.entries);
    println!("round-trip: ok");
    Ok(())
}
