//! Hermitian linear algebra behind the Gram analysis: full eigendecomposition
//! (the NotPSD witness vector comes from here), eigen-thresholded
//! pseudoinverse application, and the whitened generalized eigenproblem used
//! for operator-norm estimates.
//!
//! `det_laplace` and `psd_by_principal_minors` are deliberately separate
//! reference routes (exact cofactor expansion) used to cross-check the
//! eigensolver verdicts on small matrices; keep them independent of the
//! eigen path.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Relative eigenvalue threshold for pseudoinverse truncation.
pub const PSEUDOINVERSE_RELATIVE_THRESHOLD: f64 = 1e-10;

/// Relative out-of-range squared mass of f that still counts as "f lies in
/// the numerical range of G". A heavily truncated spectrum is harmless
/// exactly when f is demonstrably carried by the retained eigenvectors
/// (structural rank deficiency, e.g. a rank-one Gram of the ones kernel);
/// otherwise the truncated value would be silent garbage and errors out.
pub const RANGE_RESIDUAL_TOLERANCE: f64 = 1e-13;

pub struct HermitianEigen {
    /// Ascending eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// Columns are the corresponding eigenvectors.
    pub eigenvectors: DMatrix<Complex64>,
}

/// Eigendecomposition of the Hermitian part (A + A*)/2.
pub fn hermitian_eigen(a: &DMatrix<Complex64>) -> HermitianEigen {
    let h = (a + a.adjoint()) * Complex64::new(0.5, 0.0);
    let se = h.symmetric_eigen();
    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut eigenvectors = DMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        eigenvectors.set_column(col, &se.eigenvectors.column(i));
    }
    HermitianEigen { eigenvalues, eigenvectors }
}

impl HermitianEigen {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Unit eigenvector for the smallest eigenvalue.
    pub fn min_eigenvector(&self) -> DVector<Complex64> {
        self.eigenvectors.column(0).into_owned()
    }
}

/// Rayleigh quotient v* A v for a unit vector (re-checking witnesses).
pub fn rayleigh_quotient(a: &DMatrix<Complex64>, v: &DVector<Complex64>) -> f64 {
    let av = a * v;
    let num: Complex64 = v.dotc(&av);
    let den: f64 = v.norm_squared();
    num.re / den
}

pub struct PseudoApply {
    /// f* G^+ f.
    pub value: f64,
    pub dropped: usize,
    pub retained: usize,
    /// Smallest retained eigenvalue (conditioning evidence).
    pub smallest_retained: f64,
}

/// Apply the eigen-thresholded pseudoinverse: value = f* G^+ f, dropping
/// eigenvalues below `PSEUDOINVERSE_RELATIVE_THRESHOLD * max_eig`. Errors when
/// more than half the spectrum is dropped.
pub fn pseudo_apply(g: &DMatrix<Complex64>, f: &DVector<Complex64>) -> Result<PseudoApply> {
    let eig = hermitian_eigen(g);
    let n = eig.eigenvalues.len();
    let max_eig = eig.max_eigenvalue();
    if max_eig <= 0.0 {
        return Err(Error::Degenerate { value: max_eig, context: "pseudoinverse of nonpositive Gram".into() });
    }
    let threshold = PSEUDOINVERSE_RELATIVE_THRESHOLD * max_eig;
    let mut value = 0.0;
    let mut retained = 0;
    let mut smallest_retained = f64::INFINITY;
    let mut retained_mass = 0.0;
    for (i, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda >= threshold {
            let coeff: Complex64 = eig.eigenvectors.column(i).dotc(f);
            value += coeff.norm_sqr() / lambda;
            retained_mass += coeff.norm_sqr();
            retained += 1;
            smallest_retained = smallest_retained.min(lambda);
        }
    }
    let dropped = n - retained;
    if dropped * 2 > n {
        // Heavy truncation is fine only when f is carried by the retained
        // range (structural deficiency); otherwise the value is garbage.
        let f_mass = f.norm_squared();
        let out_of_range = (f_mass - retained_mass).max(0.0);
        if out_of_range > RANGE_RESIDUAL_TOLERANCE * f_mass.max(1e-300) {
            return Err(Error::IllConditioned { dropped, total: n });
        }
    }
    Ok(PseudoApply { value, dropped, retained, smallest_retained })
}

/// Largest generalized eigenvalue of (A, B) on the numerical range of B:
/// whiten with B's thresholded eigenbasis, then take the top eigenvalue of
/// W* A W. Both matrices are taken Hermitian.
pub fn largest_generalized_eigenvalue(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> Result<f64> {
    let eig_b = hermitian_eigen(b);
    let n = eig_b.eigenvalues.len();
    let max_eig = eig_b.max_eigenvalue();
    if max_eig <= 0.0 {
        return Err(Error::Degenerate { value: max_eig, context: "generalized eigenproblem with nonpositive B".into() });
    }
    let threshold = PSEUDOINVERSE_RELATIVE_THRESHOLD * max_eig;
    let kept: Vec<usize> = (0..n).filter(|&i| eig_b.eigenvalues[i] >= threshold).collect();
    let dropped = n - kept.len();
    if dropped * 2 > n {
        return Err(Error::IllConditioned { dropped, total: n });
    }
    let mut w = DMatrix::zeros(n, kept.len());
    for (col, &i) in kept.iter().enumerate() {
        let scale = Complex64::new(1.0 / eig_b.eigenvalues[i].sqrt(), 0.0);
        w.set_column(col, &(eig_b.eigenvectors.column(i) * scale));
    }
    let h = (a + a.adjoint()) * Complex64::new(0.5, 0.0);
    let reduced = w.adjoint() * h * &w;
    let eig = hermitian_eigen(&reduced);
    Ok(eig.max_eigenvalue())
}

/// Exact determinant by cofactor expansion; reference route for n <= 8.
pub fn det_laplace(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    match n {
        0 => Complex64::new(1.0, 0.0),
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut det = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if m[0][j].norm() == 0.0 {
                    continue;
                }
                let minor: Vec<Vec<Complex64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                det += sign * m[0][j] * det_laplace(&minor);
            }
            det
        }
    }
}

/// PSD check through principal minors: a Hermitian matrix is positive
/// semidefinite iff every principal minor is nonnegative. `tol` absorbs
/// floating-point noise, scaled by the minor size below.
pub fn psd_by_principal_minors(g: &DMatrix<Complex64>, tol: f64) -> bool {
    let n = g.nrows();
    assert!(n <= 16, "principal-minor check is exponential; keep n small");
    let scale = g.iter().map(|v| v.norm()).fold(1.0f64, f64::max);
    for subset in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| subset & (1 << i) != 0).collect();
        let sub: Vec<Vec<Complex64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| (g[(i, j)] + g[(j, i)].conj()) * Complex64::new(0.5, 0.0)).collect())
            .collect();
        let det = det_laplace(&sub);
        let minor_tol = tol * scale.powi(idx.len() as i32 - 1) * idx.len() as f64;
        if det.re < -minor_tol {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eigen_of_known_hermitian() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let a = DMatrix::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)]);
        let eig = hermitian_eigen(&a);
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 3.0).abs() < 1e-12);
        let v = eig.min_eigenvector();
        assert!((rayleigh_quotient(&a, &v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pseudo_apply_inverts_on_range() {
        let g = DMatrix::from_row_slice(2, 2, &[c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        let f = DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        // G^-1 = 1/3 [[2, -1], [-1, 2]]; f* G^-1 f = 2/3.
        let out = pseudo_apply(&g, &f).unwrap();
        assert!((out.value - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(out.dropped, 0);
    }

    #[test]
    fn pseudo_apply_rank_deficiency_is_structural() {
        // Rank-1 ones matrix with f in the range: heavy truncation but no
        // error, and the value is the exact interpolation norm.
        let one = c(1.0, 0.0);
        let g = DMatrix::from_element(3, 3, one);
        let f = DVector::from_vec(vec![one, one, one]);
        let out = pseudo_apply(&g, &f).unwrap();
        assert!((out.value - 1.0).abs() < 1e-12, "1* J^+ 1 = n^2/n^2 * n / n = {}", out.value);
        assert_eq!(out.retained, 1);
        assert_eq!(out.dropped, 2);
    }

    #[test]
    fn pseudo_apply_flags_ill_conditioning() {
        // Nearly rank-one matrix with f NOT carried by the dominant range:
        // most of the spectrum is truncated and the result would be garbage.
        let eps = 1e-11;
        let mut g = DMatrix::from_element(3, 3, c(1.0, 0.0));
        for i in 0..3 {
            g[(i, i)] += c(eps * (i as f64 + 1.0), 0.0);
        }
        let f = DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(pseudo_apply(&g, &f), Err(Error::IllConditioned { .. })));
        // The same matrix with f in the dominant range is fine.
        let ones = DVector::from_vec(vec![c(1.0, 0.0); 3]);
        let out = pseudo_apply(&g, &ones).unwrap();
        assert!((out.value - 1.0).abs() < 1e-6);
    }

    #[test]
    fn generalized_eigenvalue_matches_direct_solve() {
        let a = DMatrix::from_row_slice(2, 2, &[c(3.0, 0.0), c(0.5, 0.2), c(0.5, -0.2), c(1.0, 0.0)]);
        let b = DMatrix::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.3, 0.0), c(0.3, 0.0), c(1.5, 0.0)]);
        let lam = largest_generalized_eigenvalue(&a, &b).unwrap();
        // Cross-check: max over many vectors of the ratio of quadratic forms.
        let mut best: f64 = 0.0;
        for i in 0..2000 {
            let t = i as f64 * 0.003;
            let v = DVector::from_vec(vec![c(t.cos(), 0.3 * (2.0 * t).sin()), c(t.sin(), -0.2 * (3.0 * t).cos())]);
            let num = rayleigh_quotient(&a, &v) * v.norm_squared();
            let den = rayleigh_quotient(&b, &v) * v.norm_squared();
            best = best.max(num / den);
        }
        assert!(lam >= best - 1e-9, "lam = {lam}, sampled best = {best}");
        assert!(lam <= best + 0.05, "lam = {lam} should be near sampled max {best}");
    }

    #[test]
    fn determinant_reference_values() {
        let m = vec![
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(3.0, 0.0), c(4.0, 0.0)],
        ];
        assert!((det_laplace(&m) - c(-2.0, 0.0)).norm() < 1e-14);
        let id: Vec<Vec<Complex64>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) }).collect())
            .collect();
        assert!((det_laplace(&id) - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn minor_check_agrees_on_small_cases() {
        let psd = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(1.0, 0.0)]);
        assert!(psd_by_principal_minors(&psd, 1e-12));
        let not = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        assert!(!psd_by_principal_minors(&not, 1e-12));
        // Semidefinite corner case that leading minors alone would miss:
        // [[0, 0], [0, -1]] has leading minors 0, 0 but is not PSD.
        let corner = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
        assert!(!psd_by_principal_minors(&corner, 1e-12));
    }
}
