//! The full Julia-Caratheodory bundle: certify the factor, trace the
//! diagonal ratio along radial and nontangential sequences, detect the
//! target anchor, lower-bound the q_xi norm, and check the sandwich
//! 0 < ||q||^2 <= c <= (M a ||q||)^2.
//!
//! Run with: cargo run --example jc_sandwich

use num_complex::Complex64;
use rkbound::boundary;
use rkbound::julia::{jc_report, JCOptions};
use rkbound::zoo;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let one = Complex64::new(1.0, 0.0);
    let opts = JCOptions::default();

    // Parabolic-type fixture: the halfway map has angular derivative 1/2 at
    // its boundary fixed point; the quotient space is the de Branges-Rovnyak
    // space of b = (z+1)/2 and ||q||^2 = c = 1/2 exactly.
    let szego = zoo::szego();
    let xi = boundary::szego_boundary(one)?;
    let report = jc_report(&szego, &szego, &zoo::halfway_map(), &xi, &opts)?;
    print_report("halfway on (szego, szego)", &report);

    // Identity: everything collapses to the constants, c = ||q||^2 = 1.
    let id = rkbound::SelfMap::identity(rkbound::Domain::unit_disk());
    let report = jc_report(&szego, &szego, &id, &xi, &opts)?;
    print_report("identity on (szego, szego)", &report);

    // Mixed-kernel fixture: the hartz map between the half-power Dirichlet
    // scale and the Hardy space; q_xi is identically 1 while the radial
    // ratio settles at 2^(1-alpha).
    let alpha = 0.5;
    let k = zoo::szego_pow(alpha)?;
    let xi_pow = boundary::szego_pow_boundary(alpha, one)?;
    let report = jc_report(&k, &szego, &zoo::hartz_map(alpha, one)?, &xi_pow, &opts)?;
    print_report("hartz on (szego_pow:0.5, szego)", &report);
    println!(
        "  note: the radial trace limit is 2^(1-alpha) = {:.6}",
        (2.0f64).powf(1.0 - alpha)
    );
    Ok(())
}

fn print_report(name: &str, r: &rkbound::julia::JCReport) {
    println!("{name}:");
    println!("  lambda_hat    = {} (fit residual {:.2e})", r.lambda_hat, r.lambda_residual);
    println!("  c_hat         = {:.9}", r.c_hat);
    println!("  ||q||^2 lb    = {:.9}", r.q_norm_sq_lb);
    println!("  M_used        = {:.6}", r.m_used);
    println!("  a_lambda_hat  = {:.6}", r.a_lambda_hat);
    let upper = (r.m_used * r.a_lambda_hat).powi(2) * r.q_norm_sq_lb;
    println!("  sandwich      : {:.6} <= {:.6} <= {:.6}  ok = {}", r.q_norm_sq_lb, r.c_hat, upper, r.sandwich_ok);
    for t in &r.sequences {
        println!("  trace {:<28} tail mean {:.9}", t.kind, t.tail_mean);
    }
    println!();
}
