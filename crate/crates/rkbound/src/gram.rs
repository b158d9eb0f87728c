//! Finite-sample Gram analysis: positivity verdicts with refutation
//! witnesses, membership-criterion sample norms (always LOWER bounds for the
//! true norm), and generalized-eigenvalue estimates for multiplier and
//! composition-symbol norms.

use crate::domain::Point;
use crate::error::{Error, Result};
use crate::kernel::{Kernel, PointFn};
use crate::linalg::{self, hermitian_eigen};
use crate::sample::Sample;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PsdVerdict {
    Psd,
    NotPsd,
    Borderline,
}

/// Hermitian Gram matrix over a sample plus its positivity verdict.
#[derive(Debug, Clone)]
pub struct GramReport {
    pub label: String,
    pub matrix: DMatrix<Complex64>,
    pub min_eig: f64,
    pub tol: f64,
    pub verdict: PsdVerdict,
    /// Unit vector achieving the minimal Rayleigh quotient when refuted.
    pub witness: Option<Vec<Complex64>>,
}

impl GramReport {
    /// Re-check the stored witness against the stored matrix.
    pub fn witness_reproduces(&self) -> bool {
        match &self.witness {
            None => false,
            Some(v) => {
                let vec = DVector::from_vec(v.clone());
                let q = linalg::rayleigh_quotient(&self.matrix, &vec);
                q < -self.tol && (q - self.min_eig).abs() <= 1e-9 * (1.0 + self.min_eig.abs())
            }
        }
    }
}

/// Serialized form: {label, n, min_eig, tol, verdict, witness?: [re,im pairs]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GramReportJson {
    pub label: String,
    pub n: usize,
    pub min_eig: f64,
    pub tol: f64,
    pub verdict: PsdVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<[f64; 2]>>,
}

impl From<&GramReport> for GramReportJson {
    fn from(r: &GramReport) -> Self {
        GramReportJson {
            label: r.label.clone(),
            n: r.matrix.nrows(),
            min_eig: r.min_eig,
            tol: r.tol,
            verdict: r.verdict,
            witness: r.witness.as_ref().map(|v| v.iter().map(|z| [z.re, z.im]).collect()),
        }
    }
}

/// Default Gram tolerance: 1e-9 * n * max diagonal.
pub fn gram_tolerance(n: usize, max_diag: f64) -> f64 {
    1e-9 * n as f64 * max_diag.abs()
}

/// Assemble the Gram matrix G_ij = k(x_i, x_j).
pub fn gram_matrix(k: &Kernel, sample: &Sample) -> Result<DMatrix<Complex64>> {
    let n = sample.len();
    let pts = sample.points();
    let mut g = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = k.eval(&pts[i], &pts[j])?;
        }
    }
    Ok(g)
}

/// Gram positivity verdict from the Hermitianized matrix (G + G*)/2.
/// NotPsd when min_eig < -tol (with witness); Borderline when |min_eig| <= tol.
pub fn gram(k: &Kernel, sample: &Sample) -> Result<GramReport> {
    gram_with_tol(k, sample, None)
}

pub fn gram_with_tol(k: &Kernel, sample: &Sample, tol_override: Option<f64>) -> Result<GramReport> {
    let g = gram_matrix(k, sample)?;
    let n = g.nrows();
    let max_diag = (0..n).map(|i| g[(i, i)].norm()).fold(0.0f64, f64::max);
    let tol = tol_override.unwrap_or_else(|| gram_tolerance(n, max_diag));
    let eig = hermitian_eigen(&g);
    let min_eig = eig.min_eigenvalue();
    let (verdict, witness) = if min_eig < -tol {
        let v = eig.min_eigenvector();
        (PsdVerdict::NotPsd, Some(v.iter().copied().collect()))
    } else if min_eig.abs() <= tol {
        (PsdVerdict::Borderline, None)
    } else {
        (PsdVerdict::Psd, None)
    };
    Ok(GramReport { label: k.label().to_string(), matrix: g, min_eig, tol, verdict, witness })
}

/// Sample norm lower bound: the least c^2 with c^2 G - f f* >= 0 on the
/// sample, i.e. f* G^+ f. Exact when f lies in the span of the sampled
/// kernel sections; a lower bound for ||f||^2 in H(k) always.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleNorm {
    pub value_sq: f64,
    pub sample_size: usize,
    /// Smallest Gram eigenvalue retained by the pseudoinverse.
    pub conditioning: f64,
}

pub fn sample_norm_sq(k: &Kernel, f: &PointFn, sample: &Sample) -> Result<SampleNorm> {
    let report = gram(k, sample)?;
    if report.verdict == PsdVerdict::NotPsd {
        return Err(Error::NotPsdSample { min_eig: report.min_eig });
    }
    sample_norm_sq_given_gram(&report.matrix, f, sample)
}

pub fn sample_norm_sq_given_gram(g: &DMatrix<Complex64>, f: &PointFn, sample: &Sample) -> Result<SampleNorm> {
    let values: Vec<Complex64> = sample.points().iter().map(|p| f(p)).collect::<Result<_>>()?;
    let fv = DVector::from_vec(values);
    let out = linalg::pseudo_apply(g, &fv)?;
    Ok(SampleNorm { value_sq: out.value, sample_size: sample.len(), conditioning: out.smallest_retained })
}

/// Least c on the sample with c^2 k - phi phi* k >= 0: the square root of the
/// top generalized eigenvalue of (D_phi G D_phi*, G). Lower bound for the
/// multiplier norm.
pub fn multiplier_norm_est(k: &Kernel, phi: &PointFn, sample: &Sample) -> Result<f64> {
    let report = gram(k, sample)?;
    if report.verdict == PsdVerdict::NotPsd {
        return Err(Error::NotPsdSample { min_eig: report.min_eig });
    }
    let g = report.matrix;
    let n = sample.len();
    let values: Vec<Complex64> = sample.points().iter().map(|p| phi(p)).collect::<Result<_>>()?;
    let mut a = g.clone();
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] *= values[i] * values[j].conj();
        }
    }
    let lam = linalg::largest_generalized_eigenvalue(&a, &g)?;
    Ok(lam.max(0.0).sqrt())
}

/// Least c on the sample with c^2 k - k o phi >= 0: the square root of the
/// top generalized eigenvalue of (Gram(k o phi), Gram(k)). Lower bound for
/// the composition-operator norm ||C_phi||.
pub fn comp_symbol_norm_est(k: &Kernel, phi: &crate::kernel::SelfMap, sample: &Sample) -> Result<f64> {
    let report = gram(k, sample)?;
    if report.verdict == PsdVerdict::NotPsd {
        return Err(Error::NotPsdSample { min_eig: report.min_eig });
    }
    let composed = k.compose(phi)?;
    let a = gram_matrix(&composed, sample)?;
    let lam = linalg::largest_generalized_eigenvalue(&a, &report.matrix)?;
    Ok(lam.max(0.0).sqrt())
}

/// Diagnostics from tabulating kernel sections along a sequence at fixed
/// probe points.
#[derive(Debug, Clone)]
pub struct WeakLimitProbe {
    /// probe_values[p][n] = k(probe_p, x_n).
    pub probe_values: Vec<Vec<Complex64>>,
    /// Diagonal trace k(x_n, x_n).
    pub diagonal: Vec<f64>,
    /// Max over probes of |v_n - v_{n-1}| in the last quarter.
    pub last_quarter_residual: f64,
    /// Numeric pointwise convergence verdict (residual < 1e-6).
    pub converged: bool,
    /// Final section values at the probes (the pointwise limit estimate).
    pub limit_at_probes: Vec<Complex64>,
}

pub const POINTWISE_CONVERGENCE_RESIDUAL: f64 = 1e-6;

pub fn weak_limit_probe(k: &Kernel, seq: &[Point], probes: &[Point]) -> Result<WeakLimitProbe> {
    if seq.len() < 2 {
        return Err(Error::BadArgument("weak limit probe needs at least two sequence points".into()));
    }
    let mut probe_values = vec![Vec::with_capacity(seq.len()); probes.len()];
    let mut diagonal = Vec::with_capacity(seq.len());
    for x in seq {
        diagonal.push(k.diag(x)?);
        for (pi, p) in probes.iter().enumerate() {
            probe_values[pi].push(k.eval(p, x)?);
        }
    }
    let n = seq.len();
    let tail_start = (3 * n / 4).max(1);
    let mut last_quarter_residual: f64 = 0.0;
    for vals in &probe_values {
        for i in tail_start..n {
            last_quarter_residual = last_quarter_residual.max((vals[i] - vals[i - 1]).norm());
        }
    }
    let limit_at_probes = probe_values.iter().map(|vals| vals[n - 1]).collect();
    Ok(WeakLimitProbe {
        probe_values,
        diagonal,
        last_quarter_residual,
        converged: last_quarter_residual < POINTWISE_CONVERGENCE_RESIDUAL,
        limit_at_probes,
    })
}
