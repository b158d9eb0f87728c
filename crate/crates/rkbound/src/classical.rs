//! Disk and ball corollaries: weighted difference quotients, weighted
//! angular derivatives through finite differences, the equivalence check
//! between the two, and Koranyi-type sequences on the unit ball.
//!
//! Derivatives are numeric (paired central differences with a domain-aware
//! step); fixtures with closed forms double as the accuracy oracles in the
//! tests.

use crate::error::{Error, Result};
use crate::kernel::{principal_pow, SelfMap};
use crate::zoo::hermitian_inner;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Scalar analytic function on the disk.
pub type DiskFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;
/// Scalar function on the ball.
pub type BallFn = Arc<dyn Fn(&[Complex64]) -> Result<Complex64> + Send + Sync>;
/// Row (vector-valued) function on the ball.
pub type BallRowFn = Arc<dyn Fn(&[Complex64]) -> Result<Vec<Complex64>> + Send + Sync>;

pub fn disk_fn(f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> DiskFn {
    Arc::new(move |z| Ok(f(z)))
}

/// Scalar view of a disk self-map.
pub fn disk_fn_of_map(phi: &SelfMap) -> DiskFn {
    let phi = phi.clone();
    Arc::new(move |z| phi.eval_scalar(z))
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// (1 - phi(z) conj(lambda)) / (1 - z conj(zeta))^alpha.
pub fn weighted_difference_quotient(
    phi: &DiskFn,
    lambda: Complex64,
    zeta: Complex64,
    alpha: f64,
    z: Complex64,
) -> Result<Complex64> {
    let denom = principal_pow(one() - z * zeta.conj(), alpha, "weighted difference quotient")?;
    Ok((one() - phi(z)? * lambda.conj()) / denom)
}

/// Paired central complex difference: the real-direction and
/// imaginary-direction stencils both estimate the derivative of an analytic
/// function with opposite h^2 error terms, so their average is O(h^4).
pub fn numeric_derivative(phi: &DiskFn, z: Complex64, h: Option<f64>) -> Result<Complex64> {
    let h = h.unwrap_or(1e-5 * (1.0 - z.norm()));
    if h <= 0.0 {
        return Err(Error::BadArgument(format!("step must be positive, got {h}")));
    }
    let i = Complex64::new(0.0, 1.0);
    for offset in [Complex64::new(h, 0.0), Complex64::new(-h, 0.0), i * h, -i * h] {
        if (z + offset).norm() >= 1.0 {
            return Err(Error::Stencil { radius: (z + offset).norm() });
        }
    }
    let d_re = (phi(z + h)? - phi(z - h)?) / (2.0 * h);
    let d_im = (phi(z + i * h)? - phi(z - i * h)?) / (2.0 * h * i);
    Ok((d_re + d_im) / 2.0)
}

/// Nontangential (Stolz-type) sequence z_n = zeta (1 - 2^-n (1 + i tan theta)),
/// projected inward when an early point overshoots.
pub fn nontangential_sequence(zeta: Complex64, theta: f64, n: u32) -> Result<Vec<Complex64>> {
    if theta.abs() >= 1.55 {
        return Err(Error::BadArgument(format!("aperture {theta} too close to pi/2")));
    }
    let zeta = zeta / zeta.norm();
    Ok((1..=n)
        .map(|i| {
            let t = (2.0f64).powi(-(i as i32));
            let mut w = one() - t * Complex64::new(1.0, theta.tan());
            if w.norm() >= 1.0 {
                w *= (1.0 - t / 2.0) / w.norm();
            }
            zeta * w
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquivalenceVerdict {
    /// Both the difference quotient and the weighted derivative settle, and
    /// the weighted-derivative limit matches alpha * lambda * conj(zeta)
    /// times the quotient limit.
    BothConverge,
    /// Both blow up: the equivalence in the contrapositive.
    BothDiverge,
    /// One settles while the other does not: an equivalence violation.
    Violation,
}

/// The Julia-Caratheodory bundle of the weighted corollary along one
/// nontangential sequence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightedDerivativeReport {
    pub alpha: f64,
    pub zeta: Complex64,
    pub lambda: Complex64,
    /// Difference-quotient trace (1 - phi lambda-bar) / (1 - z zeta-bar)^alpha.
    pub dq_trace: Vec<Complex64>,
    /// Weighted-derivative trace phi'(z) (1 - z zeta-bar)^(1 - alpha).
    pub wd_trace: Vec<Complex64>,
    /// Detected quotient limit c (tail mean).
    pub c: Complex64,
    /// c * lambda * conj(zeta) * alpha.
    pub target: Complex64,
    pub dq_residual: f64,
    pub wd_residual: f64,
    /// |phi(z_N) - lambda|: the boundary-value check riding along.
    pub phi_limit_residual: f64,
    pub verdict: EquivalenceVerdict,
}

/// Divergence bar for the traces.
pub const DIVERGENCE_BAR: f64 = 1e3;
/// Residual bar for convergence of both traces.
pub const CONVERGENCE_RESIDUAL: f64 = 1e-3;

/// Trace both sides of the weighted-derivative equivalence along a
/// nontangential sequence and classify the outcome.
pub fn weighted_derivative_check(
    phi: &DiskFn,
    zeta: Complex64,
    lambda: Complex64,
    alpha: f64,
    seq: &[Complex64],
) -> Result<WeightedDerivativeReport> {
    if seq.len() < 8 {
        return Err(Error::BadArgument("weighted derivative check needs at least 8 points".into()));
    }
    let mut dq_trace = Vec::with_capacity(seq.len());
    let mut wd_trace = Vec::with_capacity(seq.len());
    for &z in seq {
        dq_trace.push(weighted_difference_quotient(phi, lambda, zeta, alpha, z)?);
        let d = numeric_derivative(phi, z, None)?;
        let w = principal_pow(one() - z * zeta.conj(), 1.0 - alpha, "weighted derivative")?;
        wd_trace.push(d * w);
    }
    let tail_start = 3 * seq.len() / 4;
    let tail = &dq_trace[tail_start..];
    let c = tail.iter().sum::<Complex64>() / tail.len() as f64;
    let target = c * lambda * zeta.conj() * alpha;
    let dq_last = *dq_trace.last().unwrap();
    let wd_last = *wd_trace.last().unwrap();
    let dq_residual = (dq_last - c).norm();
    let wd_residual = (wd_last - target).norm();
    let scale = 1.0 + c.norm();
    let both_converge = dq_residual < CONVERGENCE_RESIDUAL * scale && wd_residual < CONVERGENCE_RESIDUAL * scale;
    let both_diverge = dq_last.norm() > DIVERGENCE_BAR && wd_last.norm() > DIVERGENCE_BAR;
    let verdict = if both_converge {
        EquivalenceVerdict::BothConverge
    } else if both_diverge {
        EquivalenceVerdict::BothDiverge
    } else {
        EquivalenceVerdict::Violation
    };
    let phi_limit_residual = (phi(*seq.last().unwrap())? - lambda).norm();
    Ok(WeightedDerivativeReport {
        alpha,
        zeta,
        lambda,
        dq_trace,
        wd_trace,
        c,
        target,
        dq_residual,
        wd_residual,
        phi_limit_residual,
        verdict,
    })
}

// ---------------------------------------------------------------------------
// Unit ball
// ---------------------------------------------------------------------------

/// (1 - <phi(z), lambda>) / (1 - <z, zeta>)^alpha for a row map phi into
/// B_l and a unit vector lambda of the same length.
pub fn ball_quotient(
    phi: &BallRowFn,
    lambda: &[Complex64],
    zeta: &[Complex64],
    alpha: f64,
    z: &[Complex64],
) -> Result<Complex64> {
    let value = phi(z)?;
    if value.len() != lambda.len() {
        return Err(Error::BadArgument(format!(
            "row map has {} components, lambda has {}",
            value.len(),
            lambda.len()
        )));
    }
    let denom = principal_pow(one() - hermitian_inner(z, zeta), alpha, "ball quotient")?;
    Ok((one() - hermitian_inner(&value, lambda)) / denom)
}

/// Componentwise holomorphic gradient of a scalar ball function, each
/// coordinate via the paired central-difference stencil.
pub fn numeric_gradient(f: &BallFn, z: &[Complex64], h: Option<f64>) -> Result<Vec<Complex64>> {
    let norm: f64 = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let h = h.unwrap_or(1e-5 * (1.0 - norm));
    if h <= 0.0 {
        return Err(Error::BadArgument(format!("step must be positive, got {h}")));
    }
    let i = Complex64::new(0.0, 1.0);
    let mut grad = Vec::with_capacity(z.len());
    for coord in 0..z.len() {
        let eval_at = |offset: Complex64| -> Result<Complex64> {
            let mut w = z.to_vec();
            w[coord] += offset;
            let n: f64 = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if n >= 1.0 {
                return Err(Error::Stencil { radius: n });
            }
            f(&w)
        };
        let d_re = (eval_at(Complex64::new(h, 0.0))? - eval_at(Complex64::new(-h, 0.0))?) / (2.0 * h);
        let d_im = (eval_at(i * h)? - eval_at(-i * h)?) / (2.0 * h * i);
        grad.push((d_re + d_im) / 2.0);
    }
    Ok(grad)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KoranyiKind {
    /// r_n * zeta along the radius.
    RestrictedRadial,
    /// Inside the Koranyi region |1 - <z, zeta>| <= M (1 - |z|^2) with a
    /// complex-tangential drift (d >= 2); Stolz-equivalent points for d = 1.
    Koranyi { m: f64 },
    /// Tangential-in-sphere drift that eventually exits every Koranyi region.
    TangentialInSphere,
}

/// Sequences approaching a unit-sphere anchor, verified against the region
/// inequality before being returned.
pub fn koranyi_sequence(zeta: &[Complex64], kind: KoranyiKind, n: u32) -> Result<Vec<Vec<Complex64>>> {
    let _d = zeta.len();
    let norm: f64 = zeta.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::BadArgument(format!("anchor must be a unit vector, |zeta| = {norm}")));
    }
    let zeta: Vec<Complex64> = zeta.iter().map(|c| c / norm).collect();
    // A unit vector orthogonal to zeta carries the complex-tangential drift.
    let eta = orthogonal_unit(&zeta);

    let mut out = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let t = (2.0f64).powi(-(i as i32));
        let r = 1.0 - t;
        let z: Vec<Complex64> = match kind {
            KoranyiKind::RestrictedRadial => zeta.iter().map(|c| c * r).collect(),
            KoranyiKind::Koranyi { m } => {
                if m <= 0.0 {
                    return Err(Error::BadArgument(format!("Koranyi parameter must be positive, got {m}")));
                }
                match &eta {
                    Some(eta) => {
                        // <z, zeta> = r exactly; pick the tangential budget
                        // s^2 = 0.5 (1 - r^2 - (1-r)/M), nonnegative once
                        // 1 + r - 1/M > 0.
                        let budget = (1.0 - r * r) - (1.0 - r) / m;
                        if budget <= 0.0 {
                            zeta.iter().map(|c| c * r).collect()
                        } else {
                            let s = (0.5 * budget).sqrt();
                            zeta.iter().zip(eta).map(|(zc, ec)| zc * r + ec * s).collect()
                        }
                    }
                    // d = 1: Stolz-equivalent points with the aperture the
                    // region permits; early steps fall back to the radius.
                    None => {
                        let tan = ((2.0 * m * 0.9).powi(2) - 1.0).max(0.0).sqrt();
                        let mut w = one() - t * Complex64::new(1.0, tan);
                        if w.norm() >= 1.0 {
                            w *= (1.0 - t / 2.0) / w.norm();
                        }
                        let member = (one() - w).norm() <= m * (1.0 - w.norm_sqr()) * (1.0 + 1e-9);
                        if member {
                            vec![zeta[0] * w]
                        } else {
                            vec![zeta[0] * r]
                        }
                    }
                }
            }
            KoranyiKind::TangentialInSphere => {
                let eta = eta.as_ref().ok_or_else(|| {
                    Error::BadArgument("tangential-in-sphere drift needs dimension >= 2".into())
                })?;
                // s^2 = (1 - r^2) - (1-r)^(3/2): the Koranyi ratio grows like
                // (1 - r)^(-1/2).
                let s_sq = (1.0 - r * r) - t.powf(1.5);
                let s = s_sq.max(0.0).sqrt();
                zeta.iter().zip(eta).map(|(zc, ec)| zc * r + ec * s).collect()
            }
        };
        let norm_sq: f64 = z.iter().map(|c| c.norm_sqr()).sum();
        if norm_sq >= 1.0 {
            return Err(Error::NotApproaching { detail: format!("point escaped the ball at step {i}") });
        }
        if let KoranyiKind::Koranyi { m } = kind {
            let lhs = (one() - hermitian_inner(&z, &zeta)).norm();
            if lhs > m * (1.0 - norm_sq) * (1.0 + 1e-9) {
                return Err(Error::NotApproaching {
                    detail: format!("point left the Koranyi region at step {i}: {lhs} > {m} (1 - |z|^2)"),
                });
            }
        }
        out.push(z);
    }
    Ok(out)
}

/// Koranyi-region ratio |1 - <z, zeta>| / (1 - |z|^2).
pub fn koranyi_ratio(z: &[Complex64], zeta: &[Complex64]) -> f64 {
    let norm_sq: f64 = z.iter().map(|c| c.norm_sqr()).sum();
    (one() - hermitian_inner(z, zeta)).norm() / (1.0 - norm_sq)
}

fn orthogonal_unit(zeta: &[Complex64]) -> Option<Vec<Complex64>> {
    let d = zeta.len();
    if d < 2 {
        return None;
    }
    // Start from the basis vector least aligned with zeta and project.
    let (idx, _) = zeta.iter().enumerate().min_by(|(_, a), (_, b)| a.norm().partial_cmp(&b.norm()).unwrap())?;
    let mut e = vec![Complex64::new(0.0, 0.0); d];
    e[idx] = one();
    let proj = hermitian_inner(&e, zeta);
    let mut v: Vec<Complex64> = e.iter().zip(zeta).map(|(ec, zc)| ec - proj * zc).collect();
    let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for c in &mut v {
        *c /= norm;
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_c() -> Complex64 {
        c(1.0, 0.0)
    }

    #[test]
    fn quotient_fixtures_are_constant() {
        // hartz(alpha, 1): (1 - phi(z)) / (1-z)^alpha = 1 identically.
        let alpha = 0.5;
        let hartz = disk_fn_of_map(&zoo::hartz_map(alpha, one_c()).unwrap());
        let identity = disk_fn(|z| z);
        let halfway = disk_fn(|z| (z + 1.0) / 2.0);
        for &z in &[c(0.1, 0.2), c(-0.5, 0.3), c(0.72, -0.1), c(0.0, 0.0)] {
            let q = weighted_difference_quotient(&hartz, one_c(), one_c(), alpha, z).unwrap();
            assert!((q - one_c()).norm() < 1e-12, "hartz at {z}: {q}");
            let qi = weighted_difference_quotient(&identity, one_c(), one_c(), 1.0, z).unwrap();
            assert!((qi - one_c()).norm() < 1e-14, "identity at {z}");
            let qh = weighted_difference_quotient(&halfway, one_c(), one_c(), 1.0, z).unwrap();
            assert!((qh - c(0.5, 0.0)).norm() < 1e-14, "halfway at {z}");
        }
    }

    #[test]
    fn derivative_point_values() {
        let identity = disk_fn(|z| z);
        let square = disk_fn(|z| z * z);
        let z = c(0.3, 0.0);
        assert!((numeric_derivative(&identity, z, None).unwrap() - one_c()).norm() < 1e-9);
        assert!((numeric_derivative(&square, z, None).unwrap() - c(0.6, 0.0)).norm() < 1e-8);

        // hartz(0.5, 1) at z = 0.9: alpha (1-z)^(alpha-1) = 0.5 * 0.1^(-0.5).
        let hartz = disk_fn_of_map(&zoo::hartz_map(0.5, one_c()).unwrap());
        let got = numeric_derivative(&hartz, c(0.9, 0.0), None).unwrap();
        let expect = 0.5 * 0.1f64.powf(-0.5);
        assert!((got - c(expect, 0.0)).norm() < 1e-7 * expect, "{got} vs {expect}");
    }

    #[test]
    fn derivative_matches_analytic_up_to_deep_radii() {
        // Closed-form fixtures at radii up to 0.99, relative 1e-7.
        let fixtures: Vec<(DiskFn, DiskFn)> = vec![
            (disk_fn(|z| z * z), disk_fn(|z| 2.0 * z)),
            (disk_fn(|z| (z + 1.0) / 2.0), disk_fn(|_| c(0.5, 0.0))),
            (
                disk_fn_of_map(&zoo::mobius(c(0.4, -0.2)).unwrap()),
                disk_fn(|z| {
                    let a = c(0.4, -0.2);
                    (a.norm_sqr() - 1.0) / ((one_c() - z * a.conj()) * (one_c() - z * a.conj()))
                }),
            ),
            (
                disk_fn_of_map(&zoo::hartz_map(0.7, one_c()).unwrap()),
                disk_fn(|z| 0.7 * (one_c() - z).powc(c(-0.3, 0.0))),
            ),
        ];
        for (f, fprime) in &fixtures {
            for &radius in &[0.3, 0.8, 0.95, 0.99] {
                for k in 0..6 {
                    let z = Complex64::from_polar(radius, 0.9 * k as f64);
                    let got = numeric_derivative(f, z, None).unwrap();
                    let expect = fprime(z).unwrap();
                    assert!(
                        (got - expect).norm() <= 1e-7 * (1.0 + expect.norm()),
                        "at {z}: {got} vs {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn stencil_guard_fires_near_the_rim() {
        let square = disk_fn(|z| z * z);
        let z = c(0.9999999, 0.0);
        assert!(matches!(numeric_derivative(&square, z, Some(1e-3)), Err(Error::Stencil { .. })));
    }

    #[test]
    fn weighted_derivative_fixture_values() {
        // hartz: dq = 1, wd = alpha exactly; halfway at alpha = 1: both 1/2.
        for &alpha in &[0.3, 0.5, 1.0] {
            let phi = disk_fn_of_map(&zoo::hartz_map(alpha, one_c()).unwrap());
            let seq = nontangential_sequence(one_c(), 0.0, 22).unwrap();
            let report = weighted_derivative_check(&phi, one_c(), one_c(), alpha, &seq).unwrap();
            assert_eq!(report.verdict, EquivalenceVerdict::BothConverge);
            assert!((report.c - one_c()).norm() < 1e-9, "alpha = {alpha}: c = {}", report.c);
            // The derivative side carries the stencil noise floor; 1e-3 is
            // the equivalence bar.
            assert!(
                (report.wd_trace.last().unwrap() - c(alpha, 0.0)).norm() < 1e-3,
                "alpha = {alpha}"
            );
        }

        let halfway = disk_fn(|z| (z + 1.0) / 2.0);
        let seq = nontangential_sequence(one_c(), 0.5, 22).unwrap();
        let report = weighted_derivative_check(&halfway, one_c(), one_c(), 1.0, &seq).unwrap();
        assert_eq!(report.verdict, EquivalenceVerdict::BothConverge);
        assert!((report.c - c(0.5, 0.0)).norm() < 1e-9);
        assert!((report.target - c(0.5, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn hyperbolic_automorphism_classical_values() {
        // phi(z) = (z + s)/(1 + s z) fixes 1 with angular derivative
        // (1-s)/(1+s); the alpha = 1 check recovers the classical bundle.
        let s = 0.4;
        let phi = disk_fn(move |z| (z + s) / (one_c() + s * z));
        let cexp = (1.0 - s) / (1.0 + s);
        let seq = nontangential_sequence(one_c(), 0.8, 22).unwrap();
        let report = weighted_derivative_check(&phi, one_c(), one_c(), 1.0, &seq).unwrap();
        assert_eq!(report.verdict, EquivalenceVerdict::BothConverge);
        assert!((report.c - c(cexp, 0.0)).norm() < 1e-5, "c = {}", report.c);
        assert!((report.target - c(cexp, 0.0)).norm() < 1e-5);
        // |phi(z_22) - 1| ~ |phi'(1)| 2^-22 sec(theta).
        assert!(report.phi_limit_residual < 1e-6);
    }

    #[test]
    fn equivalence_both_directions_across_fixtures() {
        // Convergent fixtures stay equivalent at several apertures; the
        // alpha > 1 pair diverges on both sides together.
        for &theta in &[0.0, 0.7, 1.1] {
            for &alpha in &[0.3, 0.5, 1.0] {
                let phi = disk_fn_of_map(&zoo::hartz_map(alpha, one_c()).unwrap());
                let seq = nontangential_sequence(one_c(), theta, 22).unwrap();
                let report = weighted_derivative_check(&phi, one_c(), one_c(), alpha, &seq).unwrap();
                assert_eq!(report.verdict, EquivalenceVerdict::BothConverge, "hartz {alpha} at {theta}");
                assert!(
                    (report.wd_trace.last().unwrap() - report.c * one_c() * alpha).norm() < 1e-3,
                    "wd limit off target"
                );
            }
            let square = disk_fn(|z| z * z);
            let seq = nontangential_sequence(one_c(), theta, 40).unwrap();
            let report = weighted_derivative_check(&square, one_c(), one_c(), 1.3, &seq).unwrap();
            assert_eq!(report.verdict, EquivalenceVerdict::BothDiverge, "square 1.3 at {theta}");
        }
    }

    #[test]
    fn square_at_small_alpha_converges_to_zero_together() {
        // (1 - z^2)/(1 - z)^0.3 = (1-z)^0.7 (1 + z) -> 0 and the weighted
        // derivative 2 z (1-z)^0.7 -> 0: the sigma = 0 case of the
        // equivalence, not a divergence pair.
        let square = disk_fn(|z| z * z);
        let seq = nontangential_sequence(one_c(), 0.0, 30).unwrap();
        let report = weighted_derivative_check(&square, one_c(), one_c(), 0.3, &seq).unwrap();
        assert_eq!(report.verdict, EquivalenceVerdict::BothConverge);
        assert!(report.c.norm() < 1e-3, "c = {}", report.c);
        assert!(report.wd_trace.last().unwrap().norm() < 1e-3);
    }

    #[test]
    fn ball_quotient_reduces_to_disk_in_dimension_one() {
        let alpha = 0.6;
        let phi_disk = disk_fn_of_map(&zoo::hartz_map(alpha, one_c()).unwrap());
        let pd = phi_disk.clone();
        let phi_ball: BallRowFn = Arc::new(move |z: &[Complex64]| Ok(vec![pd(z[0])?]));
        let sample = crate::sample::Sample::generate(&crate::domain::Domain::unit_disk(), 50, 21).unwrap();
        for p in sample.points() {
            let z = p.scalar();
            let a = weighted_difference_quotient(&phi_disk, one_c(), one_c(), alpha, z).unwrap();
            let b = ball_quotient(&phi_ball, &[one_c()], &[one_c()], alpha, &[z]).unwrap();
            assert!((a - b).norm() < 1e-12, "at {z}");
        }
    }

    #[test]
    fn ball_hartz_quotient_is_one() {
        // phi(z) = 1 - (1 - <z, zeta>)^alpha: the quotient with lambda = 1
        // collapses to 1, and at z = 0 it is (1 - phi(0) conj(lambda)).
        let alpha = 0.5;
        let zeta = vec![c(0.6, 0.0), c(0.0, 0.8)];
        let zc = zeta.clone();
        let phi: BallRowFn = Arc::new(move |z: &[Complex64]| {
            let base = one_c() - hermitian_inner(z, &zc);
            Ok(vec![one_c() - principal_pow(base, alpha, "ball hartz")?])
        });
        let pts = [
            vec![c(0.1, 0.2), c(0.3, 0.0)],
            vec![c(-0.4, 0.1), c(0.2, -0.3)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ];
        for z in &pts {
            let q = ball_quotient(&phi, &[one_c()], &zeta, alpha, z).unwrap();
            assert!((q - one_c()).norm() < 1e-12, "at {z:?}");
        }
        // z = 0 sanity on a generic map: quotient = 1 - phi(0) conj(lambda).
        let constant: BallRowFn = Arc::new(|_| Ok(vec![c(0.3, 0.1)]));
        let q0 = ball_quotient(&constant, &[one_c()], &zeta, alpha, &[c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((q0 - (one_c() - c(0.3, 0.1))).norm() < 1e-14);
    }

    #[test]
    fn ball_gradient_matches_analytic_hartz() {
        // grad phi = alpha (1 - <z, zeta>)^(alpha - 1) conj(zeta), and the
        // weighted gradient (1 - <z, zeta>)^(1 - alpha) grad phi = alpha
        // conj(zeta) exactly.
        let alpha = 0.5;
        let zeta = vec![c(0.6, 0.0), c(0.0, 0.8)];
        let zc = zeta.clone();
        let phi: BallFn = Arc::new(move |z: &[Complex64]| {
            let base = one_c() - hermitian_inner(z, &zc);
            Ok(one_c() - principal_pow(base, alpha, "ball hartz")?)
        });
        for z in [vec![c(0.2, 0.1), c(0.1, -0.2)], vec![c(0.5, 0.0), c(0.0, 0.4)]] {
            let grad = numeric_gradient(&phi, &z, None).unwrap();
            let base = one_c() - hermitian_inner(&z, &zeta);
            for (j, g) in grad.iter().enumerate() {
                let expect = alpha * base.powc(c(alpha - 1.0, 0.0)) * zeta[j].conj();
                assert!((g - expect).norm() < 1e-6 * (1.0 + expect.norm()), "coord {j} at {z:?}");
                // Weighted form.
                let weighted = g * principal_pow(base, 1.0 - alpha, "test").unwrap();
                let target = alpha * zeta[j].conj();
                assert!((weighted - target).norm() < 1e-6, "weighted coord {j}");
            }
        }
    }

    #[test]
    fn koranyi_sequences_behave() {
        let zeta = vec![one_c(), c(0.0, 0.0)];
        // Restricted radial: exact dyadic radii along the anchor.
        let radial = koranyi_sequence(&zeta, KoranyiKind::RestrictedRadial, 3).unwrap();
        assert!((radial[0][0] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((radial[1][0] - c(0.75, 0.0)).norm() < 1e-15);
        assert!((radial[2][0] - c(0.875, 0.0)).norm() < 1e-15);

        // Koranyi points carry genuine tangential drift yet stay members.
        let kor = koranyi_sequence(&zeta, KoranyiKind::Koranyi { m: 2.0 }, 20).unwrap();
        let mut saw_drift = false;
        for z in &kor {
            assert!(koranyi_ratio(z, &zeta) <= 2.0 * (1.0 + 1e-9));
            if z[1].norm() > 1e-6 {
                saw_drift = true;
            }
        }
        assert!(saw_drift, "drift coordinate never engaged");
        // The drift dominates the radial gap (tangential approach).
        let deep = &kor[15];
        assert!(deep[1].norm() > 10.0 * (1.0 - deep[0].norm()));

        // d = 1 reduction: Stolz-type points inside the region.
        let kor1 = koranyi_sequence(&[one_c()], KoranyiKind::Koranyi { m: 2.0 }, 15).unwrap();
        for z in &kor1 {
            assert!(koranyi_ratio(z, &[one_c()]) <= 2.0 * (1.0 + 1e-9));
        }

        // Tangential-in-sphere exits every Koranyi region.
        let tang = koranyi_sequence(&zeta, KoranyiKind::TangentialInSphere, 24).unwrap();
        let ratios: Vec<f64> = tang.iter().map(|z| koranyi_ratio(z, &zeta)).collect();
        assert!(ratios.last().unwrap() > &50.0, "ratios tail: {:?}", &ratios[ratios.len() - 3..]);
        assert!(ratios.windows(2).skip(8).all(|w| w[1] > w[0]), "ratio should grow");
    }
}
