//! Kernel combinators and finite-sample positivity: build kernels from the
//! catalog, take products/powers/quotients, and certify Grams.
//!
//! Run with: cargo run --example kernel_algebra

use num_complex::Complex64;
use rkbound::gram;
use rkbound::kernel::{normalized_section, p_metric, p_metric_with, PMetricVariant};
use rkbound::{zoo, Domain, Point, Sample};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let szego = zoo::szego();
    let zero = Point::disk_r(0.0)?;
    let half = Point::disk_r(0.5)?;
    println!("szego(0, 0)     = {}", szego.eval(&zero, &zero)?);
    println!("szego(0.5, 0.5) = {}  (= 4/3)", szego.eval(&half, &half)?);

    // Schur product: szego * szego agrees with the Bergman-weight power.
    let prod = szego.product(&szego)?;
    let pow2 = szego.power(2.0)?;
    let x = Point::disk(Complex64::new(0.3, 0.2))?;
    let y = Point::disk(Complex64::new(-0.1, 0.4))?;
    println!(
        "product vs power at a pair: {} vs {}",
        prod.eval(&x, &y)?,
        pow2.eval(&x, &y)?
    );

    // Gram verdicts on a quasi-random sample.
    let sample = Sample::generate(&Domain::unit_disk(), 12, 1)?;
    for label in ["szego", "szego_pow:0.5", "dirichlet_log", "dbr_half", "exp_of:szego"] {
        let k = zoo::kernel_by_label(label)?;
        let report = gram::gram(&k, &sample)?;
        println!("{label:<16} min_eig = {:>12.4e}  verdict = {:?}", report.min_eig, report.verdict);
    }

    // A quotient that loses positivity: the square map against the
    // half-power Szego kernel.
    let k = zoo::szego_pow(0.5)?;
    let quotient = k.quotient(&k.compose(&zoo::square_map())?)?;
    let g16 = Sample::from_points(Domain::unit_disk(), zoo::g16_grid())?;
    let report = gram::gram(&quotient, &g16)?;
    println!(
        "sqrt(1 + z conj(w)) on the 16-point grid: min_eig = {:.6}, verdict = {:?}",
        report.min_eig, report.verdict
    );

    // Normalized sections and the boundary metric.
    let deep = Point::disk_r(0.9)?;
    let section = normalized_section(&szego, &deep)?;
    println!("normalized szego section at 0.9, value at 0: {}", section(&zero)?);
    println!("p-metric (printed form) between 0 and 0.5:  {}", p_metric(&szego, &zero, &half)?);
    println!(
        "p-metric (squared variant) between 0 and 0.5: {}",
        p_metric_with(&szego, &zero, &half, PMetricVariant::Squared)?
    );
    Ok(())
}
