//! Root systems of rank <= 4: Weyl groups by breadth-first enumeration,
//! exponent-difference counts n_i, coweight cell volumes, the Langlands
//! volume formula under both conventions, and the distinguished W0 subset
//! in bijection with the parabolic subsets.
//!
//! Run with: cargo run -p zetamass --example root_systems

use std::collections::BTreeMap;
use zetamass::exactmath::fmt_decimal;
use zetamass::masscalc::completed_riemann_zeta;
use zetamass::rootsys::{
    build_root_system, coweight_cell_volume, enumerate_w0, exponent_counts, langlands_volume,
    RootType, VolumeConvention,
};

fn main() -> zetamass::Result<()> {
    for (t, r) in [
        (RootType::A, 2),
        (RootType::B, 2),
        (RootType::G, 2),
        (RootType::D, 4),
    ] {
        let rs = build_root_system(t, r)?;
        let counts = exponent_counts(&rs)?;
        let shown: Vec<String> = counts.iter().map(|(i, n)| format!("n_{i}={n}")).collect();
        println!(
            "{}{}: |W| = {}, |Phi+| = {}, {}",
            t.as_str(),
            r,
            rs.weyl_elements().len(),
            rs.positive_roots().len(),
            shown.join(", ")
        );
    }

    // Coweight cell volume: sqrt of the coroot Gram determinant.
    for (t, r) in [(RootType::A, 1), (RootType::A, 2), (RootType::B, 2)] {
        let rs = build_root_system(t, r)?;
        println!(
            "cell volume {}{} = {}",
            t.as_str(),
            r,
            fmt_decimal(&coweight_cell_volume(&rs, 30), 15)
        );
    }

    // Langlands volume for A_2 = SL_3: v * zetahat(2)^{+-1}, compared with
    // the Siegel volume when the type is A.
    let a2 = build_root_system(RootType::A, 2)?;
    let mut zetas = BTreeMap::new();
    for i in 1..=2u32 {
        zetas.insert(i, completed_riemann_zeta(i as usize, 40)?);
    }
    for convention in [VolumeConvention::AsPrinted, VolumeConvention::Reciprocal] {
        let vol = langlands_volume(&a2, &zetas, convention, 40)?;
        let siegel = vol
            .siegel
            .as_ref()
            .map(|s| fmt_decimal(s, 15))
            .unwrap_or_default();
        println!(
            "A2 volume ({convention:?}) = {}  [siegel comparison: {siegel}, ratio {}]",
            fmt_decimal(&vol.value, 15),
            vol.ratio.as_ref().map(|r| fmt_decimal(r, 10)).unwrap_or_default()
        );
    }

    // W0: the 2^rank Weyl elements mapping all simple roots to roots that
    // are simple or negative, in bijection with parabolic subsets.
    let g2 = build_root_system(RootType::G, 2)?;
    println!("W0(G_2):");
    for pi in enumerate_w0(&g2)? {
        println!(
            "  {}  (J mask = {:#04b}, parabolic rank = {})",
            pi.label(2),
            pi.j_mask,
            pi.rank_p
        );
    }
    Ok(())
}
