//! Gamma- and E-regions (Stolz sectors and horocycles for the Szego kernel):
//! membership algebra, sequence builders, and the tangential sequence that
//! exits every sector while staying inside a fixed horodisk.
//!
//! Run with: cargo run --example approach_regions

use num_complex::Complex64;
use rkbound::boundary::{
    self, e_level, e_member, gamma_level, gamma_member, make_sequence, SequenceKind,
};
use rkbound::kernel::p_metric_with;
use rkbound::kernel::PMetricVariant;
use rkbound::{zoo, Point};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = zoo::szego();
    let xi = boundary::szego_boundary(Complex64::new(1.0, 0.0))?;

    let origin = Point::disk_r(0.0)?;
    let radial9 = Point::disk_r(0.9)?;
    println!("Gamma(1, 1) membership:");
    println!("  z = 0:   {}", gamma_member(&k, &xi, 1.0, &origin)?);
    println!("  z = 0.9: {} (level {:.4})", gamma_member(&k, &xi, 1.0, &radial9)?, gamma_level(&k, &xi, &radial9)?);

    // Sequence kinds.
    let radial = make_sequence(&k, &xi, SequenceKind::Radial, 3)?;
    println!("\nradial, N = 3: {:?}", radial.iter().map(|p| p.scalar().re).collect::<Vec<_>>());
    let horo = make_sequence(&k, &xi, SequenceKind::Horocyclic { m: 1.0 }, 10)?;
    println!("horocyclic(1) E-levels (all pinned to 1):");
    for p in horo.iter().take(4) {
        println!("  {}  level {:.12}", p, e_level(&k, &xi, p)?);
    }

    // The tangential sequence (1 - 1/n^2) e^(i/n) leaves every Stolz sector;
    // its horocycle level settles just above 1/2, so it stays inside E(1,1)
    // and escapes E(M,1) for M < 1/2.
    println!("\ntangential sequence z_n = (1 - n^-2) exp(i/n):");
    for n in [10u32, 20, 40, 60] {
        let nf = n as f64;
        let z = Point::disk(Complex64::from_polar(1.0 - nf.powi(-2), 1.0 / nf))?;
        println!(
            "  n = {n:>2}: Gamma-level {:>8.2}  E-level {:.4}  in E(1,1): {}",
            gamma_level(&k, &xi, &z)?,
            e_level(&k, &xi, &z)?,
            e_member(&k, &xi, 1.0, &z)?
        );
    }

    // The squared-variant boundary metric contracts steps of the generator.
    let seq = xi.generator_sequence(12)?;
    print!("\np-metric steps along the radial generator: ");
    for w in seq.windows(2).take(5) {
        print!("{:.4} ", p_metric_with(&k, &w[0], &w[1], PMetricVariant::Squared)?);
    }
    println!();

    // Dirichlet-kernel regions: exponentially pinched at the same anchor.
    let dk = zoo::dirichlet_log();
    let dxi = boundary::dirichlet_boundary(Complex64::new(1.0, 0.0))?;
    let z = Point::disk_r(0.9999)?;
    println!(
        "\ndirichlet_log at z = 0.9999: Gamma-level {:.4} (printed-form threshold {:.4})",
        gamma_level(&dk, &dxi, &z)?,
        (1.0 - 0.9999f64 * 0.9999).ln() / (1.0 - 0.9999f64).ln()
    );
    Ok(())
}
