//! Roots-of-unity mass formulas: the exact average identity
//! n * m_{X,n} = (composition/delta sum) with its per-k layers, and the
//! numeric individual-degree evaluation whose degree average recovers the
//! total mass.
//!
//! Run with: cargo run -p zetamass --example mass_average_individual

use zetamass::curvezeta::CurveData;
use zetamass::exactmath::{fmt_decimal, fmt_qq};
use zetamass::masscalc::{wz_average_identity, wz_individual_mass};

fn main() -> zetamass::Result<()> {
    let e = CurveData::from_numerator(2, 1, &[1, 0, 2])?;
    let g2 = CurveData::from_counts(2, 2, &[3, 5])?;

    for (name, curve, nmax) in [("E/F_2", &e, 3usize), ("genus-2", &g2, 2usize)] {
        println!("{name}:");
        for n in 2..=nmax {
            let avg = wz_average_identity(curve, n)?;
            let layers: Vec<String> = avg.layers.iter().map(|l| fmt_qq(l)).collect();
            println!(
                "  n={n}: n*m = {} = sum of layers [{}] -> {}",
                fmt_qq(&avg.lhs),
                layers.join(", "),
                if avg.pass { "exact match" } else { "MISMATCH" }
            );
        }
    }

    // Individual degrees for E/F_2, n = 2: the values 12 and 6 average to
    // the total mass 9, with deviations +3 / -3.
    println!("E/F_2 individual degrees, n = 2:");
    for d in 0..2 {
        let ind = wz_individual_mass(&e, 2, d, 40)?;
        println!(
            "  d={d}: value = {}  (total = {}, deviation = {})",
            fmt_decimal(&ind.value, 12),
            fmt_qq(&ind.reference),
            fmt_decimal(&ind.deviation, 6)
        );
    }
    Ok(())
}
