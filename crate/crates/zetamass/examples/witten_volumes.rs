//! Witten zeta values for SU(n) with certified tail bounds, the Weyl
//! dimension formula they sum over, and the volume formula for the moduli
//! space of flat SU(n) connections on a genus-g surface.
//!
//! Run with: cargo run -p zetamass --example witten_volumes

use rug::Float;
use zetamass::exactmath::{fmt_decimal, hp_pi, prec_bits};
use zetamass::wittenvol::{weyl_dimension, witten_volume, witten_zeta_su, DominantWeight};

fn main() -> zetamass::Result<()> {
    // Weyl dimension formula: dim of the irreducible SU(n) representation
    // with the given Dynkin labels.
    for (n, labels) in [(2usize, vec![3u64]), (3, vec![1, 1]), (4, vec![1, 0, 2])] {
        let w = DominantWeight::new(n, labels.clone())?;
        println!(
            "dim SU({n}) rep {:?} = {}",
            labels,
            weyl_dimension(n, &w)?
        );
    }

    // SU(2): the Witten zeta IS the Riemann zeta; compare with pi^2/6.
    let prec = prec_bits(40);
    let z = witten_zeta_su(2, 2, 10_000, 40)?;
    let target = hp_pi(prec).square() / 6u32;
    let err = Float::with_val(prec, &z.value - &target).abs();
    println!(
        "SU(2) s=2 cutoff 1e4: value = {}",
        fmt_decimal(&z.value, 20)
    );
    println!(
        "  |value - pi^2/6| = {} <= tail bound {}",
        fmt_decimal(&err, 3),
        fmt_decimal(&z.tail_bound, 3)
    );

    // SU(3): two cutoffs agree within the larger certified tail bound.
    let a = witten_zeta_su(3, 2, 200, 40)?;
    let b = witten_zeta_su(3, 2, 400, 40)?;
    let diff = Float::with_val(prec, &a.value - &b.value).abs();
    println!(
        "SU(3) s=2: cutoff 200 -> {}, cutoff 400 -> {}, |diff| = {} (bound {})",
        fmt_decimal(&a.value, 12),
        fmt_decimal(&b.value, 12),
        fmt_decimal(&diff, 3),
        fmt_decimal(&a.tail_bound, 3)
    );

    // Volume of the moduli space at genus 2 (the SU(n) volume constant is a
    // caller-supplied normalization; 1 here shows the formula's shape).
    let one = Float::with_val(prec, 1);
    let vol = witten_volume(2, 2, &one, 10_000, 40)?;
    println!(
        "genus-2 SU(2) volume (V_SU = 1): {} +- {}",
        fmt_decimal(&vol.value, 20),
        fmt_decimal(&vol.uncertainty, 3)
    );
    Ok(())
}
