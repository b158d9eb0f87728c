//! The three fates of a kernel-section limit: a genuine boundary function
//! (norm lower bounds blow up), an interior function that is no section, and
//! a section match. One fixture for each.
//!
//! Run with: cargo run --example boundary_trichotomy

use rkbound::boundary::{classify_sequence, szego_boundary, ClassifyOptions, Trichotomy};
use rkbound::{zoo, Point};
use num_complex::Complex64;

fn show(name: &str, k: &rkbound::Kernel, seq: &[Point]) -> Result<(), Box<dyn std::error::Error>> {
    let report = classify_sequence(k, seq, &ClassifyOptions::default())?;
    println!("{name}:");
    println!("  final diagonal  = {:.4e}", report.final_diagonal);
    print!("  norm-trace      = ");
    for (n, v) in report.evidence.iter().step_by(4) {
        print!("({n}: {v:.3e}) ");
    }
    println!();
    match report.verdict {
        Trichotomy::Boundary => println!("  => boundary function (escapes the space)"),
        Trichotomy::InteriorFunction => println!("  => interior function, matches no section"),
        Trichotomy::InteriorPointMatch { point, residual } => {
            println!("  => section of the interior point {point} (residual {residual:.2e})")
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Szego sections along the radius: the limit 1/(1 - z) has no finite
    // Hardy norm.
    let szego = zoo::szego();
    let xi = szego_boundary(Complex64::new(1.0, 0.0))?;
    show("szego, radial to 1", &szego, &xi.generator_sequence(30)?)?;

    // de Branges-Rovnyak sections at 1: the limit is the constant 1/2, which
    // lives in the space but is nobody's section.
    let dbr = zoo::dbr_half();
    let seq: Vec<Point> = (1..=30).map(|n| Point::disk_r(1.0 - (2.0f64).powi(-n)).unwrap()).collect();
    show("dbr_half, radial to 1", &dbr, &seq)?;

    // The natural-number matrix: the diagonal blows up along n -> infinity,
    // yet the sections converge to the first row, an interior point match.
    let nat = zoo::nat_matrix();
    let seq: Vec<Point> = (4..=24).map(|j| Point::natural(1 << j).unwrap()).collect();
    show("nat_matrix, indices 2^4..2^24", &nat, &seq)?;

    Ok(())
}
