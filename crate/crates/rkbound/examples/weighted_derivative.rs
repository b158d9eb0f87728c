//! Weighted angular derivatives on the disk and the ball: the difference
//! quotient (1 - phi lambda-bar)/(1 - z zeta-bar)^alpha and the compensated
//! derivative phi'(z)(1 - z zeta-bar)^(1-alpha) converge together, with
//! limits tied by sigma -> sigma zeta-bar alpha.
//!
//! Run with: cargo run --example weighted_derivative

use num_complex::Complex64;
use rkbound::classical::{
    ball_quotient, disk_fn, disk_fn_of_map, koranyi_ratio, koranyi_sequence, numeric_gradient,
    nontangential_sequence, weighted_derivative_check, BallFn, BallRowFn, KoranyiKind,
};
use rkbound::kernel::principal_pow;
use rkbound::zoo::{self, hermitian_inner};
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let one = Complex64::new(1.0, 0.0);

    // Disk: hartz fixtures at three weights; the quotient is identically 1
    // and the weighted derivative is identically alpha.
    for alpha in [0.3, 0.5, 1.0] {
        let phi = disk_fn_of_map(&zoo::hartz_map(alpha, one)?);
        let seq = nontangential_sequence(one, 0.7, 22)?;
        let rep = weighted_derivative_check(&phi, one, one, alpha, &seq)?;
        println!(
            "hartz alpha = {alpha}: verdict {:?}, dq -> {:.6}, wd -> {:.6} (target {:.6})",
            rep.verdict,
            rep.c,
            rep.wd_trace.last().unwrap(),
            rep.target
        );
    }

    // Classical values: the hyperbolic automorphism (z+s)/(1+sz) at alpha=1.
    let s = 0.4;
    let hyper = disk_fn(move |z| (z + s) / (Complex64::new(1.0, 0.0) + s * z));
    let seq = nontangential_sequence(one, 0.8, 22)?;
    let rep = weighted_derivative_check(&hyper, one, one, 1.0, &seq)?;
    println!(
        "hyperbolic s = {s}: c -> {:.6} (closed form (1-s)/(1+s) = {:.6})",
        rep.c,
        (1.0 - s) / (1.0 + s)
    );

    // Divergence pair: above the Hardy weight the square map blows up on
    // both sides together.
    let square = disk_fn(|z| z * z);
    let seq = nontangential_sequence(one, 0.0, 40)?;
    let rep = weighted_derivative_check(&square, one, one, 1.3, &seq)?;
    println!(
        "square alpha = 1.3: verdict {:?} (|dq| = {:.1e}, |wd| = {:.1e})",
        rep.verdict,
        rep.dq_trace.last().unwrap().norm(),
        rep.wd_trace.last().unwrap().norm()
    );

    // Ball: the same story through Koranyi regions. The ball-hartz map has
    // quotient identically 1 and weighted gradient alpha conj(zeta).
    let alpha = 0.5;
    let zeta = vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
    let zc = zeta.clone();
    let row: BallRowFn = Arc::new(move |z: &[Complex64]| {
        let base = Complex64::new(1.0, 0.0) - hermitian_inner(z, &zc);
        Ok(vec![Complex64::new(1.0, 0.0) - principal_pow(base, alpha, "ball hartz")?])
    });
    let zc2 = zeta.clone();
    let scalar: BallFn = Arc::new(move |z: &[Complex64]| {
        let base = Complex64::new(1.0, 0.0) - hermitian_inner(z, &zc2);
        Ok(Complex64::new(1.0, 0.0) - principal_pow(base, alpha, "ball hartz")?)
    });
    let kor = koranyi_sequence(&zeta, KoranyiKind::Koranyi { m: 2.0 }, 16)?;
    let deep = kor.last().unwrap();
    println!(
        "\nball hartz on a Koranyi sequence: quotient at depth = {}",
        ball_quotient(&row, &[one], &zeta, alpha, deep)?
    );
    let grad = numeric_gradient(&scalar, deep, None)?;
    let weight = principal_pow(Complex64::new(1.0, 0.0) - hermitian_inner(deep, &zeta), 1.0 - alpha, "weight")?;
    println!("weighted gradient components (target alpha * conj(zeta)):");
    for (j, g) in grad.iter().enumerate() {
        println!("  [{j}] {}  target {}", g * weight, alpha * zeta[j].conj());
    }

    // Tangential-in-sphere drift exits every Koranyi region.
    let tang = koranyi_sequence(&zeta, KoranyiKind::TangentialInSphere, 20)?;
    println!(
        "tangential-in-sphere Koranyi ratios: first {:.2}, last {:.2}",
        koranyi_ratio(&tang[0], &zeta),
        koranyi_ratio(tang.last().unwrap(), &zeta)
    );
    Ok(())
}
