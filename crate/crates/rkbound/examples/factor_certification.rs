//! Composition-factor certification: escalating Gram samples certify the
//! quotient k/(t o phi) or refute it with a reproducible witness.
//!
//! Run with: cargo run --example factor_certification

use num_complex::Complex64;
use rkbound::julia::{certify_factor, transitivity_check, EscalationPlan, FactorVerdict};
use rkbound::{zoo, Domain, Sample, SelfMap};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let plan = EscalationPlan::default();

    // The square-root transform of the hartz map is a factor of
    // (szego_pow:0.5, szego): every stage stays PSD.
    let k = zoo::szego_pow(0.5)?;
    let t = zoo::szego();
    let hartz = zoo::hartz_map(0.5, Complex64::new(1.0, 0.0))?;
    let cert = certify_factor(&k, &t, &hartz, &plan)?;
    println!("hartz map vs (szego_pow:0.5, szego):");
    for r in &cert.reports {
        println!("  n = {:>3}  min_eig = {:>12.4e}  {:?}", r.n, r.min_eig, r.verdict);
    }
    println!("  => {:?}", matches!(cert.verdict, FactorVerdict::CertifiedOnSamples));

    // The square map is not: the quotient is sqrt(1 + z conj(w)), which has
    // a negative Taylor coefficient, and the first stage already sees it.
    let cert = certify_factor(&k, &k, &zoo::square_map(), &plan)?;
    println!("\nsquare map vs szego_pow:0.5:");
    match &cert.verdict {
        FactorVerdict::Refuted(w) => {
            println!("  refuted with min_eig = {:.6} on {} points", w.min_eig, w.points.len());
            println!("  witness re-check: {}", w.reproduces(&cert.quotient)?);
        }
        FactorVerdict::CertifiedOnSamples => println!("  unexpectedly certified"),
    }

    // Coordinate duplication on the bidisk is a composition symbol but not a
    // factor: (1 - z1 conj(w1)) / (1 - z2 conj(w2)) is not a kernel.
    let pd = zoo::polydisk_hardy(2);
    let cert = certify_factor(&pd, &pd, &zoo::coord_dup(), &plan)?;
    println!("\ncoord_dup vs polydisk_hardy:2 certified: {}", cert.is_certified());

    // Factors compose: mobius after mobius, halfway after square.
    let szego = zoo::szego();
    let sample = Sample::generate(&Domain::unit_disk(), 16, 3)?;
    let id = SelfMap::identity(Domain::unit_disk());
    println!("\ntransitivity:");
    println!(
        "  identity o identity: {}",
        transitivity_check(&szego, &szego, &szego, &id, &id, &sample)?
    );
    let phi = zoo::mobius(Complex64::new(0.3, 0.0))?;
    let psi = zoo::mobius(Complex64::new(-0.3, 0.0))?;
    println!(
        "  mobius(-0.3) o mobius(0.3): {}",
        transitivity_check(&szego, &szego, &szego, &phi, &psi, &sample)?
    );
    println!(
        "  halfway o square: {}",
        transitivity_check(&szego, &szego, &szego, &zoo::square_map(), &zoo::halfway_map(), &sample)?
    );
    Ok(())
}
