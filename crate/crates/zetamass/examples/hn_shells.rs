//! The parabolic-reduction (instability-shell) expansion of the total mass:
//! partial sums indexed by a weight cap converge to the total, and for
//! E/F_2 with n = 2, d = 0 the partials equal 9 - 3*4^{-J} after J shells.
//!
//! Run with: cargo run -p zetamass --example hn_shells

use zetamass::curvezeta::CurveData;
use zetamass::exactmath::{fmt_qq, qq_int, qq_pow};
use zetamass::masscalc::{hn_series_partial, total_mass_ff};

fn main() -> zetamass::Result<()> {
    let e = CurveData::from_numerator(2, 1, &[1, 0, 2])?;
    let total = total_mass_ff(&e, 2)?;
    println!("target: m_{{X,2}} = {}", fmt_qq(&total));

    println!("cap  partial_sum      closed form 9 - 3*4^(-J)");
    for j in 0..=6i64 {
        // For n = 2, d = 0 the shells sit at even weights: shell J <-> cap 2J.
        let p = hn_series_partial(&e, 2, 0, 2 * j)?;
        let closed = qq_int(9) - qq_int(3) * qq_pow(&qq_int(4), -j)?;
        assert_eq!(p.partial_sum, closed);
        println!(
            "{:>3}  {:<15} {}",
            2 * j,
            fmt_qq(&p.partial_sum),
            fmt_qq(&closed)
        );
    }

    // Convergence: far out, the partial is within 10^{-9} of the total.
    let far = hn_series_partial(&e, 2, 0, 32)?;
    let gap = &total - &far.partial_sum;
    println!(
        "cap 32: total - partial = {} ( < 1e-9: {} )",
        fmt_qq(&gap),
        gap < zetamass::exactmath::qq(1, 1_000_000_000)
    );
    Ok(())
}
