//! Kernels as immutable evaluable value objects, closed under the combinators
//! used throughout: product, power, compose, quotient, exp, normalization.
//!
//! A [`Kernel`] does not promise positive semidefiniteness; that is a sampled
//! verdict delivered by the Gram machinery. What it does promise is Hermitian
//! symmetry of the evaluator and a real diagonal (small imaginary residue on
//! the diagonal is clamped, large residue is an evaluator bug and errors out).

use crate::domain::{Domain, Point};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

/// Imaginary residue allowed on a kernel diagonal, relative to 1 + |k(x,x)|.
pub const DIAGONAL_IMAG_TOLERANCE: f64 = 1e-12;
/// Margin kept away from the principal-branch cut.
pub const BRANCH_MARGIN: f64 = 1e-9;
/// Quotient denominators below this magnitude are an error.
pub const DIVISION_FLOOR: f64 = 1e-14;

pub type KernelFn = Arc<dyn Fn(&Point, &Point) -> Result<Complex64> + Send + Sync>;
pub type PointFn = Arc<dyn Fn(&Point) -> Result<Complex64> + Send + Sync>;

/// An evaluable two-argument kernel on a domain.
#[derive(Clone)]
pub struct Kernel {
    eval_fn: KernelFn,
    domain: Domain,
    label: String,
    normalization_point: Option<Point>,
}

impl std::fmt::Debug for Kernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Kernel")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .finish()
    }
}

impl Kernel {
    pub fn from_fn<F>(domain: Domain, label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&Point, &Point) -> Result<Complex64> + Send + Sync + 'static,
    {
        Kernel { eval_fn: Arc::new(f), domain, label: label.into(), normalization_point: None }
    }

    /// Record the point 0_X at which the kernel is normalized (k(x, 0_X) = 1).
    pub fn with_normalization_point(mut self, p: Point) -> Self {
        self.normalization_point = Some(p);
        self
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn normalization_point(&self) -> Option<&Point> {
        self.normalization_point.as_ref()
    }

    /// Evaluate k(x, y) with membership checks and diagonal clamping.
    pub fn eval(&self, x: &Point, y: &Point) -> Result<Complex64> {
        self.domain.check(x.coords())?;
        self.domain.check(y.coords())?;
        let v = (self.eval_fn)(x, y)?;
        if x.coords() == y.coords() {
            let scale = 1.0 + v.re.abs();
            if v.im.abs() > DIAGONAL_IMAG_TOLERANCE * scale {
                return Err(Error::NonRealDiagonal { imag: v.im });
            }
            return Ok(Complex64::new(v.re, 0.0));
        }
        Ok(v)
    }

    /// Diagonal value k(x, x), clamped to real.
    pub fn diag(&self, x: &Point) -> Result<f64> {
        Ok(self.eval(x, x)?.re)
    }

    /// The kernel section k_y: x -> k(x, y).
    pub fn section(&self, y: &Point) -> PointFn {
        let k = self.clone();
        let y = y.clone();
        Arc::new(move |x: &Point| k.eval(x, &y))
    }

    /// Identically-one kernel on a domain.
    pub fn ones(domain: Domain) -> Self {
        Kernel::from_fn(domain, "ones", |_, _| Ok(Complex64::new(1.0, 0.0)))
    }

    /// Identically-zero kernel on a domain.
    pub fn zero(domain: Domain) -> Self {
        Kernel::from_fn(domain, "zero", |_, _| Ok(Complex64::new(0.0, 0.0)))
    }

    fn require_same_domain(&self, other: &Kernel) -> Result<()> {
        if self.domain.kind != other.domain.kind {
            return Err(Error::DomainMismatch {
                expected: self.domain.to_string(),
                got: other.domain.to_string(),
            });
        }
        Ok(())
    }

    /// Pointwise product (Schur product). PSD closure is a theorem, verified on
    /// samples by tests, not by construction.
    pub fn product(&self, other: &Kernel) -> Result<Kernel> {
        self.require_same_domain(other)?;
        let a = self.eval_fn.clone();
        let b = other.eval_fn.clone();
        Ok(Kernel {
            eval_fn: Arc::new(move |x, y| Ok(a(x, y)? * b(x, y)?)),
            domain: self.domain,
            label: format!("({})*({})", self.label, other.label),
            normalization_point: None,
        })
    }

    /// Principal-branch power x,y -> k(x,y)^alpha.
    pub fn power(&self, alpha: f64) -> Result<Kernel> {
        if alpha <= 0.0 {
            return Err(Error::BadArgument(format!("power exponent must be positive, got {alpha}")));
        }
        let a = self.eval_fn.clone();
        let label = self.label.clone();
        Ok(Kernel {
            eval_fn: Arc::new(move |x, y| {
                let v = a(x, y)?;
                principal_pow(v, alpha, &label)
            }),
            domain: self.domain,
            label: format!("({})^{}", self.label, alpha),
            normalization_point: None,
        })
    }

    /// Composed kernel x,y -> k(phi(x), phi(y)) on phi's source domain.
    pub fn compose(&self, phi: &SelfMap) -> Result<Kernel> {
        if phi.target().kind != self.domain.kind {
            return Err(Error::DomainMismatch {
                expected: self.domain.to_string(),
                got: phi.target().to_string(),
            });
        }
        let a = self.eval_fn.clone();
        let label = format!("({})o({})", self.label, phi.label());
        let source = *phi.source();
        let phi = phi.clone();
        let target = self.domain;
        Ok(Kernel {
            eval_fn: Arc::new(move |x, y| {
                let px = phi.eval(x)?;
                let py = phi.eval(y)?;
                target.check(px.coords())?;
                target.check(py.coords())?;
                a(&px, &py)
            }),
            domain: source,
            label,
            normalization_point: None,
        })
    }

    /// Pointwise quotient k / t. Positivity is NOT asserted here; it is
    /// certified separately on samples.
    pub fn quotient(&self, denom: &Kernel) -> Result<Kernel> {
        self.require_same_domain(denom)?;
        let a = self.eval_fn.clone();
        let b = denom.eval_fn.clone();
        let denom_label = denom.label.clone();
        Ok(Kernel {
            eval_fn: Arc::new(move |x, y| {
                let t = b(x, y)?;
                if t.norm() < DIVISION_FLOOR {
                    return Err(Error::Division {
                        magnitude: t.norm(),
                        context: format!("denominator {denom_label}"),
                    });
                }
                Ok(a(x, y)? / t)
            }),
            domain: self.domain,
            label: format!("({})/({})", self.label, denom.label),
            normalization_point: None,
        })
    }

    /// Pointwise exponential x,y -> exp(k(x,y)).
    pub fn exp(&self) -> Kernel {
        let a = self.eval_fn.clone();
        Kernel {
            eval_fn: Arc::new(move |x, y| {
                let v = a(x, y)?;
                if v.re > 700.0 {
                    return Err(Error::Overflow { re: v.re });
                }
                Ok(v.exp())
            }),
            domain: self.domain,
            label: format!("exp({})", self.label),
            normalization_point: None,
        }
    }
}

/// Principal-branch complex power with a guard against the branch cut.
pub fn principal_pow(v: Complex64, alpha: f64, context: &str) -> Result<Complex64> {
    if v.norm() < 1e-300 {
        return Err(Error::Division { magnitude: v.norm(), context: format!("{context}^{alpha} at 0") });
    }
    let arg = v.arg().abs();
    if arg >= PI - BRANCH_MARGIN {
        return Err(Error::Branch { arg_abs: arg, context: format!("{context}^{alpha}") });
    }
    Ok(v.powf(alpha))
}

/// Normalized section y -> k(y, x) / k(x, x)^(1/2). Its value at x is
/// k(x,x)^(1/2) = ||k_x||.
pub fn normalized_section(k: &Kernel, x: &Point) -> Result<PointFn> {
    let kxx = k.diag(x)?;
    if kxx <= DIVISION_FLOOR {
        return Err(Error::Degenerate { value: kxx, context: format!("normalized section at {x}") });
    }
    let scale = kxx.sqrt();
    let k = k.clone();
    let x = x.clone();
    Ok(Arc::new(move |y: &Point| Ok(k.eval(y, &x)? / scale)))
}

/// Which denominator the boundary metric uses; see [`p_metric_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PMetricVariant {
    /// sqrt(1 - |k(x,y)|^2 / (k(x,x)^(1/2) k(y,y)^(1/2))), exactly as printed.
    Printed,
    /// sqrt(1 - |k(x,y)|^2 / (k(x,x) k(y,y))), scale-invariant; always lands in
    /// [0,1] and vanishes on the diagonal.
    Squared,
}

/// Boundary metric, printed form.
pub fn p_metric(k: &Kernel, x: &Point, y: &Point) -> Result<f64> {
    p_metric_with(k, x, y, PMetricVariant::Printed)
}

pub fn p_metric_with(k: &Kernel, x: &Point, y: &Point, variant: PMetricVariant) -> Result<f64> {
    let kxx = k.diag(x)?;
    let kyy = k.diag(y)?;
    if kxx <= DIVISION_FLOOR || kyy <= DIVISION_FLOOR {
        return Err(Error::Degenerate { value: kxx.min(kyy), context: "p-metric diagonal".into() });
    }
    let kxy = k.eval(x, y)?.norm_sqr();
    let denom = match variant {
        PMetricVariant::Printed => kxx.sqrt() * kyy.sqrt(),
        PMetricVariant::Squared => kxx * kyy,
    };
    let radicand = 1.0 - kxy / denom;
    if radicand < -1e-12 {
        return Err(Error::NegativeRadicand { radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// A map between domains, evaluated pointwise with target membership checks.
#[derive(Clone)]
pub struct SelfMap {
    eval_fn: Arc<dyn Fn(&Point) -> Result<Point> + Send + Sync>,
    source: Domain,
    target: Domain,
    label: String,
}

impl std::fmt::Debug for SelfMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SelfMap")
            .field("label", &self.label)
            .field("source", &self.source)
            .field("target", &self.target)
            .finish()
    }
}

impl SelfMap {
    pub fn from_fn<F>(source: Domain, target: Domain, label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&Point) -> Result<Point> + Send + Sync + 'static,
    {
        SelfMap { eval_fn: Arc::new(f), source, target, label: label.into() }
    }

    /// Scalar disk-to-disk map from a plain complex function.
    pub fn disk_map<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        let disk = Domain::unit_disk();
        SelfMap::from_fn(disk, disk, label, move |p: &Point| Point::disk(f(p.scalar())))
    }

    pub fn eval(&self, x: &Point) -> Result<Point> {
        self.source.check(x.coords())?;
        let y = (self.eval_fn)(x)?;
        self.target.check(y.coords())?;
        Ok(y)
    }

    /// Convenience for scalar maps on one-dimensional domains.
    pub fn eval_scalar(&self, z: Complex64) -> Result<Complex64> {
        let p = Point::new(self.source, vec![z])?;
        Ok(self.eval(&p)?.scalar())
    }

    pub fn source(&self) -> &Domain {
        &self.source
    }

    pub fn target(&self) -> &Domain {
        &self.target
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(domain: Domain) -> Self {
        SelfMap::from_fn(domain, domain, "identity", |p: &Point| Ok(p.clone()))
    }

    /// Composition self after other: x -> self(other(x)).
    pub fn after(&self, other: &SelfMap) -> Result<SelfMap> {
        if other.target.kind != self.source.kind {
            return Err(Error::DomainMismatch {
                expected: self.source.to_string(),
                got: other.target.to_string(),
            });
        }
        let label = format!("({})o({})", self.label, other.label);
        let source = other.source;
        let target = self.target;
        let f = self.clone();
        let g = other.clone();
        Ok(SelfMap {
            eval_fn: Arc::new(move |x: &Point| f.eval(&g.eval(x)?)),
            source,
            target,
            label,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn szego_point_values() {
        let k = zoo::szego();
        let zero = Point::disk_r(0.0).unwrap();
        let half = Point::disk_r(0.5).unwrap();
        assert_eq!(k.eval(&zero, &zero).unwrap(), c(1.0, 0.0));
        let v = k.eval(&half, &half).unwrap();
        assert!((v - c(4.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn min_kernel_value() {
        let k = zoo::min_ray();
        let x = Point::ray(2.0).unwrap();
        let y = Point::ray(3.0).unwrap();
        assert_eq!(k.eval(&x, &y).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn membership_errors_propagate() {
        let k = zoo::szego();
        let inside = Point::disk_r(0.5).unwrap();
        let mut outside = inside.clone();
        outside = Point::new(*outside.domain(), vec![c(0.5, 0.0)]).unwrap();
        // Construct an out-of-domain point by bypassing the constructor via a
        // different domain, then check eval rejects it.
        let ray_point = Point::ray(2.0).unwrap();
        assert!(k.eval(&inside, &ray_point).is_err());
        let _ = outside;
    }

    #[test]
    fn product_matches_power_two() {
        let k = zoo::szego();
        let prod = k.product(&k).unwrap();
        let pow2 = k.power(2.0).unwrap();
        let x = Point::disk(c(0.3, 0.2)).unwrap();
        let y = Point::disk(c(-0.4, 0.5)).unwrap();
        let a = prod.eval(&x, &y).unwrap();
        let b = pow2.eval(&x, &y).unwrap();
        assert!((a - b).norm() < 1e-14 * (1.0 + a.norm()));
    }

    #[test]
    fn ones_is_product_identity() {
        let k = zoo::szego();
        let ones = Kernel::ones(Domain::unit_disk());
        let prod = k.product(&ones).unwrap();
        let x = Point::disk(c(0.1, -0.6)).unwrap();
        let y = Point::disk(c(0.7, 0.1)).unwrap();
        assert_eq!(prod.eval(&x, &y).unwrap(), k.eval(&x, &y).unwrap());
    }

    #[test]
    fn product_of_fixture_kernels_is_pointwise() {
        let a = zoo::szego();
        let b = zoo::dirichlet_log();
        let prod = a.product(&b).unwrap();
        let pts = [
            (c(0.2, 0.1), c(0.5, -0.3)),
            (c(-0.7, 0.1), c(0.3, 0.3)),
            (c(0.0, 0.9), c(0.1, 0.0)),
            (c(0.45, -0.45), c(-0.2, -0.6)),
            (c(0.33, 0.0), c(0.0, -0.21)),
        ];
        for (zx, zy) in pts {
            let x = Point::disk(zx).unwrap();
            let y = Point::disk(zy).unwrap();
            let lhs = prod.eval(&x, &y).unwrap();
            let rhs = a.eval(&x, &y).unwrap() * b.eval(&x, &y).unwrap();
            assert!((lhs - rhs).norm() < 1e-13 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn power_one_is_identity_and_square_matches() {
        let k = zoo::szego();
        let p1 = k.power(1.0).unwrap();
        let x = Point::disk(c(0.3, 0.0)).unwrap();
        let y = Point::disk(c(0.4, 0.0)).unwrap();
        assert!((p1.eval(&x, &y).unwrap() - k.eval(&x, &y).unwrap()).norm() < 1e-15);
        let p2 = k.power(2.0).unwrap();
        let expect = 1.0 / (1.0 - 0.12_f64).powi(2);
        assert!((p2.eval(&x, &y).unwrap() - c(expect, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn power_branch_guard_fires() {
        let k = Kernel::from_fn(Domain::unit_disk(), "minus-one", |_, _| Ok(c(-1.0, 0.0)));
        let p = k.power(0.5).unwrap();
        let x = Point::disk_r(0.1).unwrap();
        let y = Point::disk_r(0.2).unwrap();
        match p.eval(&x, &y) {
            Err(Error::Branch { .. }) => {}
            other => panic!("expected BranchError, got {other:?}"),
        }
    }

    #[test]
    fn compose_fixtures() {
        let k = zoo::szego();
        let id = SelfMap::identity(Domain::unit_disk());
        let composed = k.compose(&id).unwrap();
        let x = Point::disk(c(0.2, 0.3)).unwrap();
        let y = Point::disk(c(-0.1, 0.4)).unwrap();
        assert_eq!(composed.eval(&x, &y).unwrap(), k.eval(&x, &y).unwrap());

        let sq = zoo::square_map();
        let ks = k.compose(&sq).unwrap();
        let half = Point::disk_r(0.5).unwrap();
        let expect = 1.0 / (1.0 - 0.0625);
        assert!((ks.eval(&half, &half).unwrap() - c(expect, 0.0)).norm() < 1e-14);

        let zero_map = SelfMap::disk_map("const-0", |_| c(0.0, 0.0));
        let kz = k.compose(&zero_map).unwrap();
        assert_eq!(kz.eval(&x, &y).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn quotient_of_kernel_by_itself_is_one() {
        let k = zoo::dirichlet_log();
        let q = k.quotient(&k).unwrap();
        for (zx, zy) in [(c(0.2, 0.1), c(0.5, -0.3)), (c(-0.6, 0.2), c(0.3, 0.55))] {
            let x = Point::disk(zx).unwrap();
            let y = Point::disk(zy).unwrap();
            let v = q.eval(&x, &y).unwrap();
            assert!((v - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn quotient_division_guard() {
        let k = zoo::szego();
        let z = Kernel::zero(Domain::unit_disk());
        let q = k.quotient(&z).unwrap();
        let x = Point::disk_r(0.1).unwrap();
        let y = Point::disk_r(0.2).unwrap();
        assert!(matches!(q.eval(&x, &y), Err(Error::Division { .. })));
    }

    #[test]
    fn mobius_quotient_identity() {
        // From 1 - psi_a(z) conj(psi_a(w)) = (1-|a|^2)(1-z conj(w)) /
        // ((1 - z conj(a))(1 - a conj(w))):
        // szego / (szego o psi_a) = (1-|a|^2) / ((1 - z conj(a))(1 - a conj(w))).
        let k = zoo::szego();
        let a = c(0.4, -0.3);
        let psi = zoo::mobius(a).unwrap();
        let q = k.quotient(&k.compose(&psi).unwrap()).unwrap();
        for (zx, zy) in [(c(0.2, 0.1), c(0.5, -0.3)), (c(-0.6, 0.2), c(0.1, 0.7))] {
            let x = Point::disk(zx).unwrap();
            let y = Point::disk(zy).unwrap();
            let got = q.eval(&x, &y).unwrap();
            let expect = (1.0 - a.norm_sqr()) / ((1.0 - zx * a.conj()) * (1.0 - a * zy.conj()));
            assert!((got - expect).norm() < 1e-12 * (1.0 + expect.norm()));
        }
    }

    #[test]
    fn exp_kernel_fixtures() {
        let zero = Kernel::zero(Domain::unit_disk());
        let e0 = zero.exp();
        let x = Point::disk_r(0.3).unwrap();
        let y = Point::disk_r(-0.2).unwrap();
        assert_eq!(e0.eval(&x, &y).unwrap(), c(1.0, 0.0));

        let m = zoo::min_ray().exp();
        let one = Point::ray(1.0).unwrap();
        assert!((m.eval(&one, &one).unwrap() - c(std::f64::consts::E, 0.0)).norm() < 1e-15);

        let big = Kernel::from_fn(Domain::unit_disk(), "big", |_, _| Ok(c(800.0, 0.0)));
        assert!(matches!(big.exp().eval(&x, &y), Err(Error::Overflow { .. })));
    }

    #[test]
    fn normalized_section_values() {
        let k = zoo::szego();
        let zero = Point::disk_r(0.0).unwrap();
        let s0 = normalized_section(&k, &zero).unwrap();
        for z in [c(0.5, 0.0), c(-0.3, 0.6), c(0.0, 0.0)] {
            let p = Point::disk(z).unwrap();
            assert!((s0(&p).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        }

        // value at x equals ||k_x|| = k(x,x)^(1/2)
        let x = Point::disk(c(0.3, 0.4)).unwrap();
        let sx = normalized_section(&k, &x).unwrap();
        let kxx = k.diag(&x).unwrap();
        assert!((sx(&x).unwrap() - c(kxx.sqrt(), 0.0)).norm() < 1e-13);

        // Szego at x = 0.9 evaluated at 0: (1 - 0.81)^(1/2)
        let x9 = Point::disk_r(0.9).unwrap();
        let s9 = normalized_section(&k, &x9).unwrap();
        let v = s9(&zero).unwrap();
        assert!((v - c(0.19_f64.sqrt(), 0.0)).norm() < 1e-14);

        let z = Kernel::zero(Domain::unit_disk());
        assert!(matches!(normalized_section(&z, &zero), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn p_metric_printed_and_squared() {
        let k = zoo::szego();
        let zero = Point::disk_r(0.0).unwrap();
        let half = Point::disk_r(0.5).unwrap();

        // Printed form at (0, 0.5): sqrt(1 - 1/(4/3)^(1/2)), evaluated directly.
        let got = p_metric(&k, &zero, &half).unwrap();
        let expect = (1.0 - 1.0 / (4.0f64 / 3.0).sqrt()).sqrt();
        assert!((got - expect).abs() < 1e-15);

        // Printed form vanishes on the diagonal only where k(x,x) = 1.
        assert_eq!(p_metric(&k, &zero, &zero).unwrap(), 0.0);
        // At k(x,x) > 1 the printed radicand goes negative; the squared
        // variant is the one with the metric axioms.
        assert!(matches!(p_metric(&k, &half, &half), Err(Error::NegativeRadicand { .. })));
        assert_eq!(p_metric_with(&k, &half, &half, PMetricVariant::Squared).unwrap(), 0.0);

        // Symmetry, both variants.
        let x = Point::disk(c(0.3, -0.4)).unwrap();
        let y = Point::disk(c(-0.2, 0.25)).unwrap();
        for variant in [PMetricVariant::Printed, PMetricVariant::Squared] {
            let ab = p_metric_with(&k, &x, &y, variant).unwrap();
            let ba = p_metric_with(&k, &y, &x, variant).unwrap();
            assert!((ab - ba).abs() < 1e-15);
        }
    }

    #[test]
    fn diagonal_clamp_and_rejection() {
        let small = Kernel::from_fn(Domain::unit_disk(), "small-imag", |_, _| Ok(c(2.0, 1e-13)));
        let x = Point::disk_r(0.3).unwrap();
        let v = small.eval(&x, &x).unwrap();
        assert_eq!(v.im, 0.0);

        let big = Kernel::from_fn(Domain::unit_disk(), "big-imag", |_, _| Ok(c(2.0, 1e-6)));
        assert!(matches!(big.eval(&x, &x), Err(Error::NonRealDiagonal { .. })));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn disk_point() -> impl Strategy<Value = Point> {
            (0.0..0.98f64, 0.0..std::f64::consts::TAU)
                .prop_map(|(r, theta)| Point::disk(Complex64::from_polar(r, theta)).unwrap())
        }

        proptest! {
            #[test]
            fn szego_hermitian_everywhere(x in disk_point(), y in disk_point()) {
                let k = zoo::szego();
                let a = k.eval(&x, &y).unwrap();
                let b = k.eval(&y, &x).unwrap();
                prop_assert!((a - b.conj()).norm() <= 1e-12 * (1.0 + a.norm()));
            }

            #[test]
            fn squared_p_metric_axioms(x in disk_point(), y in disk_point()) {
                let k = zoo::szego();
                let dxx = p_metric_with(&k, &x, &x, PMetricVariant::Squared).unwrap();
                prop_assert_eq!(dxx, 0.0);
                let dxy = p_metric_with(&k, &x, &y, PMetricVariant::Squared).unwrap();
                let dyx = p_metric_with(&k, &y, &x, PMetricVariant::Squared).unwrap();
                prop_assert!((dxy - dyx).abs() <= 1e-14);
                prop_assert!((0.0..=1.0).contains(&dxy));
            }
        }
    }
}
