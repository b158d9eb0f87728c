//! Denjoy-Wolff-type iteration: with c < 1 at a boundary fixed point, every
//! orbit runs to it and the horodisk level shrinks like c^n. An elliptic
//! automorphism (an involution) stalls instead.
//!
//! Run with: cargo run --example denjoy_wolff_iteration

use num_complex::Complex64;
use rkbound::boundary;
use rkbound::julia::iterate_to_boundary;
use rkbound::{zoo, Point};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = zoo::szego();
    let xi = boundary::szego_boundary(Complex64::new(1.0, 0.0))?;
    let halfway = zoo::halfway_map();

    for start in [Complex64::new(0.0, 0.0), Complex64::new(-0.5, 0.0), Complex64::new(0.2, 0.6)] {
        let x0 = Point::disk(start)?;
        let out = iterate_to_boundary(&k, &halfway, &x0, &xi, 0.5, 40)?;
        println!("halfway orbit from {start}: converged = {} in {} steps", out.converged, out.steps.len() - 1);
        for s in out.steps.iter().filter(|s| s.n % 5 == 0) {
            println!(
                "  n = {:>2}  |1 - x| = {:.3e}  E-level = {:.3e}  probe residual = {:.3e}",
                s.n,
                (Complex64::new(1.0, 0.0) - s.point.scalar()).norm(),
                s.e_level,
                s.probe_residual
            );
        }
        let late: Vec<f64> = out
            .steps
            .windows(2)
            .filter(|w| w[0].n >= 10)
            .map(|w| w[1].e_level / w[0].e_level)
            .collect();
        if let Some(r) = late.first() {
            println!("  E-level step ratio settles at {r:.9} (Julia contraction at rate c)\n");
        }
    }

    // The mobius involution swaps two points forever: no shrinkage.
    let phi = zoo::mobius(Complex64::new(0.3, 0.0))?;
    let x0 = Point::disk_r(0.0)?;
    match iterate_to_boundary(&k, &phi, &x0, &xi, 0.9, 60) {
        Err(e) => println!("mobius(0.3) orbit: {e}"),
        Ok(out) => println!("mobius(0.3) orbit unexpectedly converged: {}", out.converged),
    }
    Ok(())
}
