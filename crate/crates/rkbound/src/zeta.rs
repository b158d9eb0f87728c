//! Riemann zeta on Re s > 1/2 through the alternating eta series,
//! zeta(s) = eta(s) / (1 - 2^(1-s)), with van Wijngaarden's repeated-averaging
//! acceleration of the partial sums.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Pole guard radius around s = 1.
pub const POLE_GUARD: f64 = 1e-6;
/// Internal series tolerance; comfortably below the 1e-10 promise.
const SERIES_TOL: f64 = 1e-13;
const MAX_TERMS: usize = 10_000;

/// Accelerated summation of an alternating series, one term at a time.
/// Keeps the triangle of repeated means of the correction tail.
struct EulerAccelerator {
    wksp: Vec<Complex64>,
    nterm: usize,
    sum: Complex64,
    last_increment: f64,
}

impl EulerAccelerator {
    fn new() -> Self {
        EulerAccelerator { wksp: Vec::new(), nterm: 0, sum: Complex64::new(0.0, 0.0), last_increment: f64::INFINITY }
    }

    fn push(&mut self, term: Complex64) {
        if self.nterm == 0 {
            self.nterm = 1;
            self.wksp.push(term);
            let inc = 0.5 * term;
            self.sum = inc;
            self.last_increment = inc.norm();
            return;
        }
        let mut tmp = self.wksp[0];
        self.wksp[0] = term;
        for j in 0..self.nterm - 1 {
            let dum = self.wksp[j + 1];
            self.wksp[j + 1] = 0.5 * (self.wksp[j] + tmp);
            tmp = dum;
        }
        let next = 0.5 * (self.wksp[self.nterm - 1] + tmp);
        if self.wksp.len() <= self.nterm {
            self.wksp.push(next);
        } else {
            self.wksp[self.nterm] = next;
        }
        let inc = if next.norm() <= self.wksp[self.nterm - 1].norm() {
            self.nterm += 1;
            0.5 * next
        } else {
            next
        };
        self.sum += inc;
        self.last_increment = inc.norm();
    }
}

/// eta(s) = sum_{n>=1} (-1)^(n-1) n^(-s), accelerated.
fn eta(s: Complex64, max_terms: usize) -> Result<Complex64> {
    let mut acc = EulerAccelerator::new();
    let mut settled = 0;
    for n in 1..=max_terms {
        let term_mag = (-s.re * (n as f64).ln()).exp();
        let phase = -s.im * (n as f64).ln();
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * term_mag * Complex64::new(phase.cos(), phase.sin());
        acc.push(term);
        if n > 4 && acc.last_increment < SERIES_TOL {
            settled += 1;
            if settled >= 3 {
                return Ok(acc.sum);
            }
        } else {
            settled = 0;
        }
    }
    Err(Error::Convergence { tol: SERIES_TOL, terms: max_terms })
}

/// zeta(s) for Re s > 1/2, away from the pole at s = 1.
pub fn zeta_eval(s: Complex64) -> Result<Complex64> {
    zeta_eval_capped(s, MAX_TERMS)
}

pub(crate) fn zeta_eval_capped(s: Complex64, max_terms: usize) -> Result<Complex64> {
    let pole_dist = (s - Complex64::new(1.0, 0.0)).norm();
    if pole_dist < POLE_GUARD {
        return Err(Error::Pole { distance: pole_dist });
    }
    // 1 - 2^(1-s) also vanishes at s = 1 + 2 pi i k / ln 2; the eta zeros there
    // cancel analytically but not numerically.
    let one_minus = Complex64::new(1.0, 0.0) - (Complex64::new(1.0, 0.0) - s).exp2();
    if one_minus.norm() < 1e-8 {
        return Err(Error::Pole { distance: one_minus.norm() });
    }
    Ok(eta(s, max_terms)? / one_minus)
}
