//! Julia's lemma as a pointwise inclusion: phi maps the horodisk E(M, xi)
//! into E(cM, lambda). The halfway map contracts levels by exactly 1/2;
//! disk automorphisms meet the bound with equality everywhere (the extreme
//! case flagged by the equality detector).
//!
//! Run with: cargo run --example julia_inclusion

use num_complex::Complex64;
use rkbound::boundary::{self, make_sequence, SequenceKind};
use rkbound::julia::julia_inclusion_check;
use rkbound::{zoo, Domain, Sample};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = zoo::szego();
    let one = Complex64::new(1.0, 0.0);
    let xi = boundary::szego_boundary(one)?;

    // Halfway map: c = 1/2, fixed anchor.
    let seq = make_sequence(&k, &xi, SequenceKind::Horocyclic { m: 2.0 }, 20)?;
    let out = julia_inclusion_check(&k, &zoo::halfway_map(), &xi, &xi, 0.5, &[2.0 * (1.0 + 1e-9)], &seq)?;
    println!("halfway, E(2,1) -> E(1,1): checked {}, violations {}", out.checked, out.violations);
    for v in out.verdicts.iter().take(4) {
        println!("  at {}  lhs {:.6e}  rhs {:.6e}", v.point, v.lhs, v.rhs);
    }

    // Automorphism: psi_a with a = 0.5 sends xi = 1 to lambda = -1 with
    // c = |psi'(1)| = 3, and the inequality is an identity.
    let phi = zoo::mobius(Complex64::new(0.5, 0.0))?;
    let lambda = boundary::szego_boundary(Complex64::new(-1.0, 0.0))?;
    let pts = Sample::generate(&Domain::unit_disk(), 40, 9)?.points().to_vec();
    let out = julia_inclusion_check(&k, &phi, &xi, &lambda, 3.0, &[5.0, 20.0], &pts)?;
    println!(
        "\nmobius(0.5), c = 3: checked {}, violations {}, equality cases {}",
        out.checked, out.violations, out.equality_cases
    );
    println!("(equality at every point is the automorphism signature)");
    Ok(())
}
