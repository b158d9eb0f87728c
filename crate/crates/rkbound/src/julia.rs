//! The main-theorem machinery: composition-factor certification with
//! escalating samples and refutation witnesses, the c-estimate along supplied
//! sequences, the quotient function q_xi and its sample norm, boundary-anchor
//! detection for the mapped sequence, the norm sandwich, Julia's-lemma
//! inclusion checks, and Denjoy-Wolff-type iteration.
//!
//! Numerical conventions that keep the theorem's inequalities checkable:
//! sample norms are lower bounds, c_hat is a tail-mean minimum over the
//! supplied sequences (an upper-adjacent surrogate for the liminf restricted
//! to them), M_used is the smallest M containing every supplied sequence in
//! Gamma_k(M, xi) (a valid approach parameter, never the tight limsup), and
//! a_lambda_hat is maximized over the sample plus the mapped sequence tails,
//! where condition (A) is actually exercised.

use crate::boundary::{self, BoundaryPoint, SequenceKind};
use crate::domain::{Domain, DomainKind, Point};
use crate::error::{Error, Result};
use crate::gram::{self, GramReportJson, PsdVerdict};
use crate::kernel::{Kernel, PointFn, SelfMap};
use crate::sample::Sample;
use crate::zoo;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

// ---------------------------------------------------------------------------
// Factor certification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct EscalationPlan {
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub rmax: f64,
    pub witness_restarts: usize,
}

impl Default for EscalationPlan {
    fn default() -> Self {
        EscalationPlan { sizes: vec![8, 16, 32, 64], seed: 0, rmax: 0.95, witness_restarts: 200 }
    }
}

/// A reproducible refutation: sample points plus the Rayleigh witness vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RefutationWitness {
    pub points: Vec<Point>,
    pub vector: Vec<Complex64>,
    pub min_eig: f64,
    pub tol: f64,
}

impl RefutationWitness {
    /// Rebuild the Gram on the stored points and re-check the witness.
    pub fn reproduces(&self, quotient: &Kernel) -> Result<bool> {
        let sample = Sample::from_points(*quotient.domain(), self.points.clone())?;
        let g = gram::gram_matrix(quotient, &sample)?;
        let v = nalgebra::DVector::from_vec(self.vector.clone());
        let q = crate::linalg::rayleigh_quotient(&g, &v);
        Ok(q < -self.tol && (q - self.min_eig).abs() <= 1e-9 * (1.0 + self.min_eig.abs()))
    }
}

#[derive(Debug, Clone)]
pub enum FactorVerdict {
    CertifiedOnSamples,
    Refuted(RefutationWitness),
}

#[derive(Debug, Clone)]
pub struct FactorCertification {
    pub verdict: FactorVerdict,
    pub reports: Vec<GramReportJson>,
    pub quotient: Kernel,
}

impl FactorCertification {
    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, FactorVerdict::CertifiedOnSamples)
    }
}

/// Certify (or refute) phi as a composition factor of k with t: run the
/// quotient kernel k/(t o phi) through Grams on escalating samples, plus a
/// randomized small-sample witness search when any verdict sits near zero.
pub fn certify_factor(k: &Kernel, t: &Kernel, phi: &SelfMap, plan: &EscalationPlan) -> Result<FactorCertification> {
    let quotient = k.quotient(&t.compose(phi)?)?;
    let domain = *quotient.domain();
    let mut reports = Vec::new();
    let mut near_zero = false;
    for (stage, &n) in plan.sizes.iter().enumerate() {
        let sample = Sample::generate_with_radius(&domain, n, plan.seed + stage as u64, plan.rmax)?;
        let report = gram::gram(&quotient, &sample)?;
        reports.push(GramReportJson::from(&report));
        if report.verdict == PsdVerdict::NotPsd {
            let witness = RefutationWitness {
                points: sample.points().to_vec(),
                vector: report.witness.clone().expect("NotPsd carries a witness"),
                min_eig: report.min_eig,
                tol: report.tol,
            };
            return Ok(FactorCertification { verdict: FactorVerdict::Refuted(witness), reports, quotient });
        }
        if report.min_eig.abs() <= 100.0 * report.tol {
            near_zero = true;
        }
    }
    if near_zero {
        let mut rng = ChaCha8Rng::seed_from_u64(plan.seed.wrapping_mul(0x9e3779b9).wrapping_add(7));
        for _ in 0..plan.witness_restarts {
            let sample = random_small_sample(&domain, 5, plan.rmax, &mut rng)?;
            let report = gram::gram(&quotient, &sample)?;
            if report.verdict == PsdVerdict::NotPsd {
                let witness = RefutationWitness {
                    points: sample.points().to_vec(),
                    vector: report.witness.clone().expect("NotPsd carries a witness"),
                    min_eig: report.min_eig,
                    tol: report.tol,
                };
                reports.push(GramReportJson::from(&report));
                return Ok(FactorCertification { verdict: FactorVerdict::Refuted(witness), reports, quotient });
            }
        }
    }
    Ok(FactorCertification { verdict: FactorVerdict::CertifiedOnSamples, reports, quotient })
}

fn random_small_sample(domain: &Domain, n: usize, rmax: f64, rng: &mut ChaCha8Rng) -> Result<Sample> {
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut guard = 0;
    while points.len() < n {
        guard += 1;
        if guard > 100 * n {
            return Err(Error::BadArgument("random sample generation stalled".into()));
        }
        let p = random_point(domain, rmax, rng)?;
        if points.iter().all(|q| q.distance(&p) > 1e-6) {
            points.push(p);
        }
    }
    Sample::from_points(*domain, points)
}

fn random_point(domain: &Domain, rmax: f64, rng: &mut ChaCha8Rng) -> Result<Point> {
    let disk_coord = |rng: &mut ChaCha8Rng| {
        let r = rmax * rng.gen::<f64>().sqrt();
        let theta = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
        Complex64::from_polar(r, theta)
    };
    match domain.kind {
        DomainKind::UnitDisk => Point::new(*domain, vec![disk_coord(rng)]),
        DomainKind::Polydisk(d) => {
            let coords: Vec<Complex64> = (0..d).map(|_| disk_coord(rng)).collect();
            Point::new(*domain, coords)
        }
        DomainKind::UnitBall(d) => {
            let raw: Vec<Complex64> = (0..d).map(|_| disk_coord(rng)).collect();
            let norm: f64 = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let target = rmax * rng.gen::<f64>().powf(1.0 / (2.0 * d as f64));
            if norm < 1e-12 {
                Point::new(*domain, vec![Complex64::new(0.0, 0.0); d])
            } else {
                Point::new(*domain, raw.into_iter().map(|z| z * (target / norm)).collect())
            }
        }
        DomainKind::HalfPlane { cut } => Point::new(
            *domain,
            vec![Complex64::new(cut + 0.05 + 1.45 * rng.gen::<f64>(), 4.0 * (rng.gen::<f64>() - 0.5))],
        ),
        DomainKind::Ray => Point::new(*domain, vec![Complex64::new(10.0 * rng.gen::<f64>(), 0.0)]),
        DomainKind::Naturals => Point::new(*domain, vec![Complex64::new(rng.gen_range(1..=64) as f64, 0.0)]),
    }
}

/// Composite check: phi in Fact(k,t) and psi in Fact(t,r) imply
/// psi o phi in Fact(k,r). Returns the sampled PSD verdict of the composite
/// quotient; the preconditions are certified on the same sample first.
pub fn transitivity_check(
    k: &Kernel,
    t: &Kernel,
    r: &Kernel,
    phi: &SelfMap,
    psi: &SelfMap,
    sample: &Sample,
) -> Result<bool> {
    let q1 = k.quotient(&t.compose(phi)?)?;
    let q2 = t.quotient(&r.compose(psi)?)?;
    if gram::gram(&q1, sample)?.verdict == PsdVerdict::NotPsd {
        return Err(Error::Precondition("phi is not a factor of (k, t) on this sample".into()));
    }
    let mapped: Vec<Point> = sample.points().iter().map(|p| phi.eval(p)).collect::<Result<_>>()?;
    if let Ok(ms) = Sample::from_points(*t.domain(), mapped) {
        if gram::gram(&q2, &ms)?.verdict == PsdVerdict::NotPsd {
            return Err(Error::Precondition("psi is not a factor of (t, r) on the mapped sample".into()));
        }
    }
    let composite = psi.after(phi)?;
    let q = k.quotient(&r.compose(&composite)?)?;
    Ok(gram::gram(&q, sample)?.verdict != PsdVerdict::NotPsd)
}

// ---------------------------------------------------------------------------
// c estimation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceTrace {
    pub kind: String,
    /// k(x_n, x_n) / t(phi(x_n), phi(x_n)) along the sequence.
    pub ratios: Vec<f64>,
    /// Mean of the last quarter.
    pub tail_mean: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CEstimate {
    /// Minimum of the tail means: the surrogate for the liminf restricted to
    /// the supplied sequences (>= the true c in exact arithmetic).
    pub c_hat: f64,
    pub traces: Vec<SequenceTrace>,
}

pub fn estimate_c(k: &Kernel, t: &Kernel, phi: &SelfMap, sequences: &[(String, Vec<Point>)]) -> Result<CEstimate> {
    if sequences.is_empty() {
        return Err(Error::BadArgument("estimate_c needs at least one sequence".into()));
    }
    let mut traces = Vec::with_capacity(sequences.len());
    let mut c_hat = f64::INFINITY;
    for (kind, seq) in sequences {
        if seq.is_empty() {
            return Err(Error::BadArgument("empty sequence in estimate_c".into()));
        }
        let mut ratios = Vec::with_capacity(seq.len());
        for x in seq {
            let num = k.diag(x)?;
            let den = t.diag(&phi.eval(x)?)?;
            if den <= 0.0 {
                return Err(Error::Degenerate { value: den, context: "t o phi diagonal".into() });
            }
            ratios.push(num / den);
        }
        let tail_start = (3 * ratios.len() / 4).min(ratios.len() - 1);
        let tail = &ratios[tail_start..];
        let tail_mean = tail.iter().sum::<f64>() / tail.len() as f64;
        c_hat = c_hat.min(tail_mean);
        traces.push(SequenceTrace { kind: kind.clone(), ratios, tail_mean });
    }
    Ok(CEstimate { c_hat, traces })
}

// ---------------------------------------------------------------------------
// Lambda detection and q_xi
// ---------------------------------------------------------------------------

/// Follow phi along the sequence, confirm the mapped sections settle, and fit
/// an anchored boundary family of t to the observed limit.
pub fn detect_lambda(t: &Kernel, phi: &SelfMap, seq: &[Point]) -> Result<(BoundaryPoint, f64)> {
    let mapped: Vec<Point> = seq.iter().map(|x| phi.eval(x)).collect::<Result<_>>()?;
    let probes = zoo::default_probes(t.domain());
    let probe = gram::weak_limit_probe(t, &mapped, &probes)?;
    // The mapped sequence may settle at half the dyadic rate (square-root
    // maps); the decisive gate is the anchor-fit residual below, this one
    // only rejects clearly non-settling images.
    let scale = probe.limit_at_probes.iter().map(|v| v.norm()).fold(1.0f64, f64::max);
    if probe.last_quarter_residual > 1e-3 * scale {
        return Err(Error::NoMatch { residual: probe.last_quarter_residual });
    }
    let tail: Vec<Point> = mapped.iter().skip(mapped.len() / 2).cloned().collect();
    let (anchor, residual) = boundary::fit_boundary_anchor(t, &tail, &probes)?;
    let bp = boundary::boundary_point_for(t, &anchor)?;
    Ok((bp, residual))
}

/// q_xi(x) = k_xi(x) / t_lambda(phi(x)).
pub fn build_q_xi(k_xi: &BoundaryPoint, t_lambda: &BoundaryPoint, phi: &SelfMap) -> PointFn {
    let xi = k_xi.clone();
    let lambda = t_lambda.clone();
    let phi = phi.clone();
    Arc::new(move |x: &Point| {
        let num = xi.limit(x)?;
        let den = lambda.limit(&phi.eval(x)?)?;
        if den.norm() < 1e-14 {
            return Err(Error::Division { magnitude: den.norm(), context: "t_lambda o phi in q_xi".into() });
        }
        Ok(num / den)
    })
}

// ---------------------------------------------------------------------------
// The JC report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct JCOptions {
    pub sequence_len: u32,
    /// Nontangential apertures supplied alongside the radial sequence.
    pub apertures: Vec<f64>,
    pub sample_size: usize,
    pub seed: u64,
    pub escalation: EscalationPlan,
}

impl Default for JCOptions {
    fn default() -> Self {
        JCOptions {
            sequence_len: 40,
            apertures: vec![std::f64::consts::FRAC_PI_4],
            sample_size: 24,
            seed: 0,
            escalation: EscalationPlan::default(),
        }
    }
}

/// The Julia-Caratheodory bundle at (phi, xi).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JCReport {
    pub kernel: String,
    pub t_kernel: String,
    pub map: String,
    pub xi: String,
    pub lambda_hat: String,
    pub lambda_residual: f64,
    pub c_hat: f64,
    pub q_norm_sq_lb: f64,
    #[serde(rename = "M_used")]
    pub m_used: f64,
    pub a_lambda_hat: f64,
    pub sandwich_ok: bool,
    pub sequences: Vec<SequenceTrace>,
}

/// The sandwich inequalities with 1e-6 slack:
/// q_norm_sq_lb <= c_hat and c_hat <= (M a)^2 q_norm_sq_lb.
pub fn sandwich_check(report: &JCReport) -> bool {
    let lower = report.q_norm_sq_lb <= report.c_hat + 1e-6;
    let bound = (report.m_used * report.a_lambda_hat).powi(2) * report.q_norm_sq_lb;
    let upper = report.c_hat <= bound + 1e-6;
    lower && upper
}

/// Run the full pipeline: certify the factor, estimate c along radial and
/// nontangential sequences, detect lambda, bound the q_xi norm from below,
/// and assemble the sandwich verdict.
pub fn jc_report(k: &Kernel, t: &Kernel, phi: &SelfMap, xi: &BoundaryPoint, opts: &JCOptions) -> Result<JCReport> {
    let cert = certify_factor(k, t, phi, &opts.escalation)?;
    if !cert.is_certified() {
        return Err(Error::Precondition(format!(
            "{} is not a composition factor of ({}, {}) on samples",
            phi.label(),
            k.label(),
            t.label()
        )));
    }

    let mut sequences: Vec<(String, Vec<Point>)> = Vec::new();
    let radial = boundary::make_sequence(k, xi, SequenceKind::Radial, opts.sequence_len)?;
    sequences.push(("radial".into(), radial.clone()));
    for &theta in &opts.apertures {
        let seq = boundary::make_sequence(k, xi, SequenceKind::Nontangential { theta }, opts.sequence_len)?;
        sequences.push((format!("nontangential:{theta}"), seq));
    }

    let estimate = estimate_c(k, t, phi, &sequences)?;
    let (lambda, lambda_residual) = detect_lambda(t, phi, &radial)?;
    let q_xi = build_q_xi(xi, &lambda, phi);

    // Sample-norm lower bound of q_xi in H(k/(t o phi)) over escalating
    // samples; pin the domain origin into the sample when it is a member
    // (normalized quotients then resolve constants exactly).
    let quotient = &cert.quotient;
    let mut q_norm_sq_lb: f64 = 0.0;
    for (i, &n) in [opts.sample_size / 3, opts.sample_size / 2, opts.sample_size].iter().enumerate() {
        let n = n.max(4);
        let mut sample = Sample::generate_with_radius(quotient.domain(), n, opts.seed + i as u64, 0.9)?;
        let origin = vec![Complex64::new(0.0, 0.0); quotient.domain().dimension()];
        if quotient.domain().contains(&origin) {
            let op = Point::new(*quotient.domain(), origin)?;
            if sample.points().iter().all(|p| p.distance(&op) > 1e-9) {
                sample = sample.with_point(op)?;
            }
        }
        match gram::sample_norm_sq(quotient, &q_xi, &sample) {
            Ok(out) => q_norm_sq_lb = q_norm_sq_lb.max(out.value_sq),
            Err(Error::IllConditioned { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    if q_norm_sq_lb <= 0.0 {
        return Err(Error::Degenerate { value: q_norm_sq_lb, context: "q_xi norm lower bound".into() });
    }

    // Smallest M containing every supplied sequence inside Gamma_k(M, xi).
    let mut m_used: f64 = 0.0;
    for (_, seq) in &sequences {
        for x in seq {
            m_used = m_used.max(boundary::gamma_level(k, xi, x)?);
        }
    }

    // Empirical a_lambda over a t-domain sample plus the mapped tails, where
    // condition (A) does its work in the estimate.
    let t_sample = Sample::generate_with_radius(t.domain(), opts.sample_size, opts.seed + 11, 0.9)?;
    let mut a_lambda_hat: f64 = 0.0;
    {
        let mut consider = |y: &Point| -> Result<()> {
            let den = t.diag(y)?;
            if den > 0.0 {
                a_lambda_hat = a_lambda_hat.max(lambda.limit(y)?.norm() / den);
            }
            Ok(())
        };
        for y in t_sample.points() {
            consider(y)?;
        }
        for (_, seq) in &sequences {
            for x in seq.iter().skip(seq.len() / 2) {
                consider(&phi.eval(x)?)?;
            }
        }
    }

    let mut report = JCReport {
        kernel: k.label().to_string(),
        t_kernel: t.label().to_string(),
        map: phi.label().to_string(),
        xi: xi.anchor.to_string(),
        lambda_hat: lambda.anchor.to_string(),
        lambda_residual,
        c_hat: estimate.c_hat,
        q_norm_sq_lb,
        m_used,
        a_lambda_hat,
        sandwich_ok: false,
        sequences: estimate.traces,
    };
    report.sandwich_ok = sandwich_check(&report);
    Ok(report)
}

// ---------------------------------------------------------------------------
// Julia's lemma inclusion
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InclusionVerdict {
    pub point: Point,
    pub m: f64,
    /// k(phi x, phi x) / |k_lambda(phi x)|^2.
    pub lhs: f64,
    /// c * k(x,x) / |k_xi(x)|^2.
    pub rhs: f64,
    pub ok: bool,
    /// Cauchy-Schwarz equality within 1e-9 relative: the automorphism
    /// candidate flag (reported, never asserted).
    pub equality: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InclusionOutcome {
    pub verdicts: Vec<InclusionVerdict>,
    pub checked: usize,
    pub violations: usize,
    pub equality_cases: usize,
}

/// Check phi(E_k(M, xi)) inside E_k(cM, lambda) pointwise on a sample, for
/// each M in `ms`. Violations are reported, not raised.
pub fn julia_inclusion_check(
    k: &Kernel,
    phi: &SelfMap,
    xi: &BoundaryPoint,
    lambda: &BoundaryPoint,
    c: f64,
    ms: &[f64],
    points: &[Point],
) -> Result<InclusionOutcome> {
    let mut verdicts = Vec::new();
    let mut checked = 0;
    let mut violations = 0;
    let mut equality_cases = 0;
    for x in points {
        let level_x = boundary::e_level(k, xi, x)?;
        for &m in ms {
            if level_x > m + crate::boundary::REGION_SLACK {
                continue;
            }
            checked += 1;
            let phix = phi.eval(x)?;
            let lhs = boundary::e_level(k, lambda, &phix)?;
            let rhs = c * level_x;
            let ok = lhs <= rhs * (1.0 + 1e-9) + 1e-12;
            let equality = (lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1e-300);
            if !ok {
                violations += 1;
            }
            if equality {
                equality_cases += 1;
            }
            verdicts.push(InclusionVerdict { point: x.clone(), m, lhs, rhs, ok, equality });
        }
    }
    Ok(InclusionOutcome { verdicts, checked, violations, equality_cases })
}

// ---------------------------------------------------------------------------
// Iteration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrajectoryStep {
    pub n: u32,
    pub point: Point,
    pub diag: f64,
    /// Smallest M with x_n in E_k(M, xi); Julia's lemma predicts geometric
    /// decay at rate c.
    pub e_level: f64,
    /// Max probe deviation of the section at x_n from the boundary function.
    pub probe_residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Trajectory {
    pub steps: Vec<TrajectoryStep>,
    pub converged: bool,
}

/// Iterate phi from x0 toward the Denjoy-Wolff-type point xi (requires
/// c < 1). Converged once the probe residual drops below 1e-6; errors on a
/// fixed point or when the E-level stops shrinking for 10 consecutive steps.
pub fn iterate_to_boundary(
    k: &Kernel,
    phi: &SelfMap,
    x0: &Point,
    xi: &BoundaryPoint,
    c: f64,
    n: u32,
) -> Result<Trajectory> {
    if !(c < 1.0) {
        return Err(Error::Precondition(format!("iteration requires c < 1, got {c}")));
    }
    let probes = zoo::default_probes(k.domain());
    let mut steps = Vec::with_capacity(n as usize + 1);
    let mut x = x0.clone();
    let mut stall = 0usize;
    let mut best_level = f64::INFINITY;
    let mut converged = false;
    for step in 0..=n {
        let diag = k.diag(&x)?;
        let e_level = boundary::e_level(k, xi, &x)?;
        let mut probe_residual: f64 = 0.0;
        for p in &probes {
            probe_residual = probe_residual.max((k.eval(p, &x)? - xi.limit(p)?).norm());
        }
        steps.push(TrajectoryStep { n: step, point: x.clone(), diag, e_level, probe_residual });
        if probe_residual < 1e-6 {
            converged = true;
            break;
        }
        if step == n {
            break;
        }
        // Shrinkage means a new minimum level; oscillating orbits stall.
        if e_level >= best_level {
            stall += 1;
            if stall >= 10 {
                return Err(Error::Stalled { steps: stall });
            }
        } else {
            stall = 0;
            best_level = e_level;
        }
        let next = phi.eval(&x)?;
        let gap = next.distance(&x);
        if gap <= 1e-12 {
            return Err(Error::FixedPoint { step: step as usize, gap });
        }
        x = next;
    }
    Ok(Trajectory { steps, converged })
}

// ---------------------------------------------------------------------------
// Weighted composition and uniform boundary values
// ---------------------------------------------------------------------------

/// Sampled version of the weighted-composition bound: the norm of
/// x -> f(x) g(phi(x)) in H(k) is at most ||f|| in H(k/(t o phi)) times
/// ||g|| in H(t). All three norms are sample lower bounds; returns
/// (lhs, rhs) = (||f (g o phi)||_{H(k),S}, ||f||_{q,S'} ||g||_{t,S''}).
pub fn weighted_composition_check(
    k: &Kernel,
    t: &Kernel,
    phi: &SelfMap,
    f: &PointFn,
    g: &PointFn,
    s_k: &Sample,
    s_q: &Sample,
    s_t: &Sample,
) -> Result<(f64, f64)> {
    let quotient = k.quotient(&t.compose(phi)?)?;
    let ff = f.clone();
    let gg = g.clone();
    let ph = phi.clone();
    let product: PointFn = Arc::new(move |x: &Point| Ok(ff(x)? * gg(&ph.eval(x)?)?));
    let lhs = gram::sample_norm_sq(k, &product, s_k)?.value_sq.sqrt();
    let f_norm = gram::sample_norm_sq(&quotient, f, s_q)?.value_sq.sqrt();
    let g_norm = gram::sample_norm_sq(t, g, s_t)?.value_sq.sqrt();
    Ok((lhs, f_norm * g_norm))
}

/// Finite spanning probe for uniform boundary values: traces the quotient
/// sections q_y (y in `centers`) and q_xi itself along a Gamma-wise sequence
/// and reports which of them settle (Cauchy tail below 1e-6 relative).
pub fn gamma_limit_probe(
    k: &Kernel,
    t: &Kernel,
    phi: &SelfMap,
    xi: &BoundaryPoint,
    lambda: &BoundaryPoint,
    centers: &[Point],
    seq: &[Point],
) -> Result<Vec<(String, bool)>> {
    let quotient = k.quotient(&t.compose(phi)?)?;
    let mut functions: Vec<(String, PointFn)> = Vec::new();
    for (i, y) in centers.iter().enumerate() {
        functions.push((format!("q_x{i}"), quotient.section(y)));
    }
    functions.push(("q_xi".into(), build_q_xi(xi, lambda, phi)));
    let mut out = Vec::with_capacity(functions.len());
    for (name, f) in functions {
        let values: Vec<Complex64> = seq.iter().map(|x| f(x)).collect::<Result<_>>()?;
        let n = values.len();
        let tail = (3 * n / 4).max(1);
        let scale = values.iter().map(|v| v.norm()).fold(0.0f64, f64::max).max(1e-12);
        let settled = (tail..n).all(|i| (values[i] - values[i - 1]).norm() < 1e-6 * scale);
        out.push((name, settled));
    }
    Ok(out)
}
