//! The zeta kernel zeta(z + conj(w)) on Re z > 1/2: accelerated evaluation,
//! the critical line as its boundary, and the empirical regularity
//! constants.
//!
//! Run with: cargo run --example zeta_boundary

use num_complex::Complex64;
use rkbound::boundary::{self, regularity_check};
use rkbound::gram;
use rkbound::zeta::zeta_eval;
use rkbound::{zoo, Sample};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Spot values through the accelerated eta series.
    let z2 = zeta_eval(Complex64::new(2.0, 0.0))?;
    let z3 = zeta_eval(Complex64::new(3.0, 0.0))?;
    println!("zeta(2) = {}  (pi^2/6 = {})", z2.re, std::f64::consts::PI.powi(2) / 6.0);
    println!("zeta(3) = {}  (Apery 1.2020569...)", z3.re);
    println!("zeta(0.6 + 3i) = {}", zeta_eval(Complex64::new(0.6, 3.0))?);

    // The kernel is PSD on half-plane samples.
    let k = zoo::zeta_halfplane();
    let sample = Sample::generate(k.domain(), 10, 2)?;
    let report = gram::gram(&k, &sample)?;
    println!("\nGram on 10 half-plane points: min_eig = {:.4e}, {:?}", report.min_eig, report.verdict);

    // Approaching the critical line: the diagonal rides the pole of zeta at
    // 1 and blows up like 2^n.
    let bp = boundary::zeta_line_boundary(0.0);
    println!("\ndiagonal along sigma_n = 1/2 + 2^-n:");
    for n in [4u32, 8, 12, 16, 19] {
        let p = bp.generate(n)?;
        println!("  n = {n:>2}  k(x,x) = {:.6e}", k.diag(&p)?);
    }

    // Regularity constants at the anchor 1/2: (A) and (B) sampled, the
    // radial sequence confirming (C) and (D).
    let sample = Sample::generate(k.domain(), 48, 5)?;
    let radial = bp.generator_sequence(19)?;
    let reg = regularity_check(&k, &bp, &sample, &[radial])?;
    println!("\nregularity at 1/2 + 0i: a_hat = {:.4}, b_hat = {:.4}", reg.a_hat, reg.b_hat);
    for c in &reg.c_checks {
        println!("  (C) diverging: {}, confirms: {}", c.diverging, c.confirms);
    }
    for d in &reg.d_checks {
        println!("  (D) diagonal divergent: {}, matched anchor: {:?}", d.diagonal_divergent, d.matched_anchor);
    }
    Ok(())
}
