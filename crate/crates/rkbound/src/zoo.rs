//! Ready-made kernels and self-maps used as fixtures everywhere else, plus the
//! label grammar the CLI exposes (`szego_pow:0.5`, `hartz:0.5:1+0i`, ...).

use crate::domain::{parse_complex, Domain, DomainKind, Point};
use crate::error::{Error, Result};
use crate::kernel::{principal_pow, Kernel, SelfMap};
use crate::zeta::zeta_eval;
use num_complex::Complex64;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

/// Szego kernel 1/(1 - z conj(w)) on the unit disk, normalized at 0.
pub fn szego() -> Kernel {
    Kernel::from_fn(Domain::unit_disk(), "szego", |x, y| {
        Ok(one() / (one() - x.scalar() * y.scalar().conj()))
    })
    .with_normalization_point(Point::disk_r(0.0).unwrap())
}

/// (1 - z conj(w))^(-alpha) on the unit disk; weighted Dirichlet scale for
/// alpha < 1, Hardy at alpha = 1, weighted Bergman beyond.
pub fn szego_pow(alpha: f64) -> Result<Kernel> {
    if alpha <= 0.0 {
        return Err(Error::BadArgument(format!("szego_pow needs alpha > 0, got {alpha}")));
    }
    Ok(Kernel::from_fn(Domain::unit_disk(), format!("szego_pow:{alpha}"), move |x, y| {
        let base = one() - x.scalar() * y.scalar().conj();
        Ok(one() / principal_pow(base, alpha, "szego_pow")?)
    })
    .with_normalization_point(Point::disk_r(0.0).unwrap()))
}

/// Dirichlet-space kernel log(1/(1 - z conj(w))) / (z conj(w)); the removable
/// singularity at zero evaluates to 1.
pub fn dirichlet_log() -> Kernel {
    Kernel::from_fn(Domain::unit_disk(), "dirichlet_log", |x, y| {
        Ok(log_quotient(x.scalar() * y.scalar().conj()))
    })
    .with_normalization_point(Point::disk_r(0.0).unwrap())
}

/// -ln(1-u)/u with a series evaluation near u = 0 to dodge cancellation.
fn log_quotient(u: Complex64) -> Complex64 {
    if u.norm() < 0.5 {
        let mut term = one();
        let mut sum = Complex64::new(0.0, 0.0);
        for m in 1..=64 {
            sum += term / m as f64;
            term *= u;
            if term.norm() < 1e-18 {
                break;
            }
        }
        sum
    } else {
        -(one() - u).ln() / u
    }
}

/// min(x, y) on the ray; the kernel of first-order absolutely continuous
/// functions vanishing at 0.
pub fn min_ray() -> Kernel {
    Kernel::from_fn(Domain::ray(), "min_ray", |x, y| {
        Ok(Complex64::new(x.scalar().re.min(y.scalar().re), 0.0))
    })
}

/// b(z) = (z+1)/2 for the de Branges-Rovnyak fixture.
pub fn dbr_symbol(z: Complex64) -> Complex64 {
    (z + 1.0) / 2.0
}

/// De Branges-Rovnyak kernel (1 - b(z) conj(b(w))) / (1 - z conj(w)) with
/// b(z) = (z+1)/2.
pub fn dbr_half() -> Kernel {
    Kernel::from_fn(Domain::unit_disk(), "dbr_half", |x, y| {
        Ok(db_rovnyak_eval(x.scalar(), y.scalar()))
    })
}

pub fn db_rovnyak_eval(z: Complex64, w: Complex64) -> Complex64 {
    (one() - dbr_symbol(z) * dbr_symbol(w).conj()) / (one() - z * w.conj())
}

/// zeta(z + conj(w)) on the half-plane Re z > 1/2 (Hardy space of Dirichlet
/// series). Both arguments interior keeps Re(z + conj w) > 1.
pub fn zeta_halfplane() -> Kernel {
    Kernel::from_fn(Domain::half_plane(0.5), "zeta_halfplane", |x, y| {
        zeta_eval(x.scalar() + y.scalar().conj())
    })
}

/// Drury-Arveson kernel 1/(1 - <z,w>) on the unit ball of C^d.
pub fn drury_arveson(d: usize) -> Kernel {
    Kernel::from_fn(Domain::unit_ball(d), format!("drury_arveson:{d}"), |x, y| {
        Ok(one() / (one() - hermitian_inner(x.coords(), y.coords())))
    })
}

/// (1 - <z,w>)^(-alpha) on the unit ball.
pub fn da_pow(d: usize, alpha: f64) -> Result<Kernel> {
    if alpha <= 0.0 {
        return Err(Error::BadArgument(format!("da_pow needs alpha > 0, got {alpha}")));
    }
    Ok(Kernel::from_fn(Domain::unit_ball(d), format!("da_pow:{d}:{alpha}"), move |x, y| {
        let base = one() - hermitian_inner(x.coords(), y.coords());
        Ok(one() / principal_pow(base, alpha, "da_pow")?)
    }))
}

/// Hardy kernel on the polydisk: product of coordinate Szego kernels.
pub fn polydisk_hardy(d: usize) -> Kernel {
    Kernel::from_fn(Domain::polydisk(d), format!("polydisk_hardy:{d}"), |x, y| {
        let mut prod = one();
        for (zj, wj) in x.coords().iter().zip(y.coords()) {
            prod *= one() / (one() - zj * wj.conj());
        }
        Ok(prod)
    })
}

/// The natural-number counterexample matrix: diagonal 1, 2, 3, ... and ones
/// elsewhere.
pub fn nat_matrix() -> Kernel {
    Kernel::from_fn(Domain::naturals(), "nat_matrix", |x, y| {
        let i = x.scalar().re.round() as u64;
        let j = y.scalar().re.round() as u64;
        Ok(Complex64::new(nat_matrix_eval(i, j), 0.0))
    })
}

pub fn nat_matrix_eval(i: u64, j: u64) -> f64 {
    if i == j {
        i as f64
    } else {
        1.0
    }
}

pub fn hermitian_inner(z: &[Complex64], w: &[Complex64]) -> Complex64 {
    z.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
}

// ---------------------------------------------------------------------------
// Self-maps
// ---------------------------------------------------------------------------

pub fn identity_map(domain: Domain) -> SelfMap {
    SelfMap::identity(domain)
}

pub fn square_map() -> SelfMap {
    SelfMap::disk_map("square", |z| z * z)
}

/// Disk automorphism psi_a(z) = (a - z)/(1 - z conj(a)) interchanging a and 0.
pub fn mobius(a: Complex64) -> Result<SelfMap> {
    if a.norm() >= 1.0 {
        return Err(Error::BadArgument(format!("mobius parameter must be inside the disk, |a| = {}", a.norm())));
    }
    Ok(SelfMap::disk_map(format!("mobius:{}", crate::domain::format_complex(a)), move |z| {
        (a - z) / (one() - z * a.conj())
    }))
}

/// z -> (1 + z)/2, the parabolic-type fixture with boundary fixed point 1.
pub fn halfway_map() -> SelfMap {
    SelfMap::disk_map("halfway", |z| (z + 1.0) / 2.0)
}

/// Closed form of the halfway iterates: phi^n(z) = 1 - (1 - z)/2^n.
pub fn halfway_iterate_closed_form(z: Complex64, n: u32) -> Complex64 {
    one() - (one() - z) / (2.0f64).powi(n as i32)
}

/// z -> 1 - (1 - z conj(zeta))^alpha, a contractive multiplier of the
/// alpha-weighted Dirichlet space; requires 0 < alpha <= 1 and |zeta| = 1.
pub fn hartz_map(alpha: f64, zeta: Complex64) -> Result<SelfMap> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::BadArgument(format!("hartz map needs 0 < alpha <= 1, got {alpha}")));
    }
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::BadArgument(format!("hartz anchor must be unimodular, |zeta| = {}", zeta.norm())));
    }
    let label = format!("hartz:{}:{}", alpha, crate::domain::format_complex(zeta));
    let disk = Domain::unit_disk();
    Ok(SelfMap::from_fn(disk, disk, label, move |p: &Point| {
        let base = one() - p.scalar() * zeta.conj();
        Point::disk(one() - principal_pow(base, alpha, "hartz")?)
    }))
}

/// Bidisk map z -> (z1, z1).
pub fn coord_dup() -> SelfMap {
    let d2 = Domain::polydisk(2);
    SelfMap::from_fn(d2, d2, "coord_dup", |p: &Point| {
        let z1 = p.coords()[0];
        Point::new(Domain::polydisk(2), vec![z1, z1])
    })
}

/// Coordinate-wise disk maps followed by a permutation of the coordinates:
/// z -> sigma(phi_1(z_1), ..., phi_d(z_d)). `sigma[i]` is the 1-based index of
/// the coordinate placed in slot i.
pub fn polydisk_product(maps: Vec<SelfMap>, sigma: Vec<usize>) -> Result<SelfMap> {
    let d = maps.len();
    if d == 0 {
        return Err(Error::BadArgument("polydisk_product needs at least one factor".into()));
    }
    if sigma.len() != d {
        return Err(Error::BadArgument(format!("permutation length {} != {d}", sigma.len())));
    }
    let mut seen = vec![false; d];
    for &s in &sigma {
        if s < 1 || s > d || seen[s - 1] {
            return Err(Error::BadArgument(format!("bad permutation {sigma:?}")));
        }
        seen[s - 1] = true;
    }
    for m in &maps {
        if m.source().kind != DomainKind::UnitDisk || m.target().kind != DomainKind::UnitDisk {
            return Err(Error::BadArgument("polydisk_product factors must be disk maps".into()));
        }
    }
    let labels: Vec<&str> = maps.iter().map(|m| m.label()).collect();
    let label = format!(
        "polydisk_product:{}:{}",
        labels.join(","),
        sigma.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    );
    let dom = Domain::polydisk(d);
    Ok(SelfMap::from_fn(dom, dom, label, move |p: &Point| {
        let mut mapped = Vec::with_capacity(d);
        for (j, m) in maps.iter().enumerate() {
            let q = Point::disk(p.coords()[j])?;
            mapped.push(m.eval(&q)?.scalar());
        }
        let coords: Vec<Complex64> = sigma.iter().map(|&s| mapped[s - 1]).collect();
        Point::new(Domain::polydisk(d), coords)
    }))
}

// ---------------------------------------------------------------------------
// Fixed grids and probe sets
// ---------------------------------------------------------------------------

/// The fixed 16-point disk grid: radii {0.2, 0.5, 0.8, 0.95} times angles
/// {0, pi/2, pi, 3pi/2}. The standing witness grid for refutation fixtures.
pub fn g16_grid() -> Vec<Point> {
    let mut pts = Vec::with_capacity(16);
    for &r in &[0.2, 0.5, 0.8, 0.95] {
        for quarter in 0..4 {
            let theta = std::f64::consts::FRAC_PI_2 * quarter as f64;
            let z = Complex64::from_polar(r, theta);
            pts.push(Point::disk(z).unwrap());
        }
    }
    pts
}

/// Eight fixed interior probe points per domain. Pointwise convergence of
/// kernel sections is declared on these.
pub fn default_probes(domain: &Domain) -> Vec<Point> {
    let c = Complex64::new;
    match domain.kind {
        DomainKind::UnitDisk => {
            [c(0.0, 0.0), c(0.3, 0.0), c(0.0, 0.5), c(-0.4, 0.0), c(0.0, -0.35), c(0.25, 0.25), c(-0.3, 0.2), c(0.15, -0.45)]
                .iter()
                .map(|&z| Point::disk(z).unwrap())
                .collect()
        }
        DomainKind::UnitBall(d) => disk_like_tuple_probes(d, |coords| Point::ball(scale_into_ball(coords))),
        DomainKind::Polydisk(d) => {
            disk_like_tuple_probes(d, move |coords| Point::new(Domain::polydisk(d), coords))
        }
        DomainKind::HalfPlane { cut } => {
            [c(0.1, 0.0), c(0.3, 0.3), c(0.5, -0.4), c(0.2, 0.1), c(0.7, 0.0), c(0.4, -0.2), c(0.15, 0.5), c(0.9, -0.1)]
                .iter()
                .map(|&z| Point::half_plane(cut, z + c(cut + 0.05, 0.0)).unwrap())
                .collect()
        }
        DomainKind::Ray => [0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0].iter().map(|&x| Point::ray(x).unwrap()).collect(),
        DomainKind::Naturals => (1..=8).map(|n| Point::natural(n).unwrap()).collect(),
    }
}

fn disk_like_tuple_probes(d: usize, build: impl Fn(Vec<Complex64>) -> crate::error::Result<Point>) -> Vec<Point> {
    let c = Complex64::new;
    let base = [c(0.0, 0.0), c(0.3, 0.0), c(0.0, 0.5), c(-0.4, 0.0), c(0.0, -0.35), c(0.25, 0.25), c(-0.3, 0.2), c(0.15, -0.45)];
    base.iter()
        .enumerate()
        .map(|(i, &z)| {
            let coords: Vec<Complex64> = (0..d).map(|j| if j == i % d { z } else { c(0.08 * (j as f64 + 1.0), -0.05) }).collect();
            build(coords).expect("probe construction")
        })
        .collect()
}

fn scale_into_ball(coords: Vec<Complex64>) -> Vec<Complex64> {
    let norm_sq: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
    if norm_sq >= 0.9 {
        let s = (0.9 / norm_sq).sqrt();
        coords.into_iter().map(|z| z * s).collect()
    } else {
        coords
    }
}

// ---------------------------------------------------------------------------
// Label grammar
// ---------------------------------------------------------------------------

/// Resolve a kernel label: `szego`, `szego_pow:0.5`, `dirichlet_log`,
/// `min_ray`, `dbr_half`, `zeta_halfplane`, `drury_arveson:2`, `da_pow:2:0.5`,
/// `polydisk_hardy:2`, `nat_matrix`, `exp_of:<kernel>`.
pub fn kernel_by_label(label: &str) -> Result<Kernel> {
    let label = label.trim();
    if let Some(inner) = label.strip_prefix("exp_of:") {
        return Ok(kernel_by_label(inner)?.exp());
    }
    let parts: Vec<&str> = label.split(':').collect();
    let unknown = || Error::UnknownLabel(label.to_string());
    let parse_f64 = |s: &str| s.parse::<f64>().map_err(|_| Error::BadArgument(format!("bad number {s:?} in {label:?}")));
    let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| Error::BadArgument(format!("bad dimension {s:?} in {label:?}")));
    match parts.as_slice() {
        ["szego"] => Ok(szego()),
        ["szego_pow", a] => szego_pow(parse_f64(a)?),
        ["dirichlet_log"] => Ok(dirichlet_log()),
        ["min_ray"] => Ok(min_ray()),
        ["dbr_half"] => Ok(dbr_half()),
        ["zeta_halfplane"] => Ok(zeta_halfplane()),
        ["drury_arveson", d] => Ok(drury_arveson(parse_dim(d)?)),
        ["da_pow", d, a] => da_pow(parse_dim(d)?, parse_f64(a)?),
        ["polydisk_hardy", d] => Ok(polydisk_hardy(parse_dim(d)?)),
        ["nat_matrix"] => Ok(nat_matrix()),
        ["ones"] => Ok(Kernel::ones(Domain::unit_disk())),
        _ => Err(unknown()),
    }
}

/// Resolve a map label against a domain hint (used by `identity`):
/// `identity`, `square`, `mobius:a+bi`, `halfway`, `hartz:0.5:1+0i`,
/// `coord_dup`, `polydisk_product:<m1>,<m2>,..:<p1>,<p2>,..` where the inner
/// maps use parenthesized arguments, e.g. `mobius(0.3)` or `hartz(0.5,1+0i)`.
pub fn map_by_label(label: &str, domain_hint: &Domain) -> Result<SelfMap> {
    let label = label.trim();
    let parts: Vec<&str> = label.split(':').collect();
    match parts.as_slice() {
        ["identity"] => Ok(SelfMap::identity(*domain_hint)),
        ["square"] => Ok(square_map()),
        ["mobius", a] => mobius(parse_complex(a)?),
        ["halfway"] => Ok(halfway_map()),
        ["hartz", alpha, zeta] => {
            hartz_map(alpha.parse().map_err(|_| Error::BadArgument(format!("bad alpha in {label:?}")))?, parse_complex(zeta)?)
        }
        ["coord_dup"] => Ok(coord_dup()),
        ["polydisk_product", maps_str, perm_str] => {
            let maps: Result<Vec<SelfMap>> = maps_str.split(',').map(inner_disk_map).collect();
            let sigma: Result<Vec<usize>> = perm_str
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| Error::BadArgument(format!("bad permutation entry {s:?}"))))
                .collect();
            polydisk_product(maps?, sigma?)
        }
        _ => Err(Error::UnknownLabel(label.to_string())),
    }
}

/// Inner-map grammar for polydisk products: a bare name or name(args).
fn inner_disk_map(s: &str) -> Result<SelfMap> {
    let s = s.trim();
    if let Some(open) = s.find('(') {
        if !s.ends_with(')') {
            return Err(Error::BadArgument(format!("unbalanced parentheses in {s:?}")));
        }
        let name = &s[..open];
        let args: Vec<&str> = s[open + 1..s.len() - 1].split(',').collect();
        match (name, args.as_slice()) {
            ("mobius", [a]) => mobius(parse_complex(a)?),
            ("hartz", [alpha, zeta]) => hartz_map(
                alpha.trim().parse().map_err(|_| Error::BadArgument(format!("bad alpha in {s:?}")))?,
                parse_complex(zeta)?,
            ),
            _ => Err(Error::UnknownLabel(s.to_string())),
        }
    } else {
        match s {
            "identity" => Ok(SelfMap::identity(Domain::unit_disk())),
            "square" => Ok(square_map()),
            "halfway" => Ok(halfway_map()),
            _ => Err(Error::UnknownLabel(s.to_string())),
        }
    }
}

/// Every catalog kernel reachable from the label grammar, for sweep tests.
pub fn catalog_kernel_labels() -> Vec<&'static str> {
    vec![
        "szego",
        "szego_pow:0.5",
        "szego_pow:2",
        "dirichlet_log",
        "min_ray",
        "dbr_half",
        "zeta_halfplane",
        "drury_arveson:2",
        "da_pow:2:0.5",
        "polydisk_hardy:2",
        "nat_matrix",
        "exp_of:szego",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sample;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn nat_matrix_values_and_minor() {
        assert_eq!(nat_matrix_eval(1, 1), 1.0);
        assert_eq!(nat_matrix_eval(3, 3), 3.0);
        assert_eq!(nat_matrix_eval(2, 5), 1.0);
        // Leading 4x4 principal minor, exact cofactor expansion.
        let g: Vec<Vec<Complex64>> = (1..=4)
            .map(|i| (1..=4).map(|j| c(nat_matrix_eval(i, j), 0.0)).collect())
            .collect();
        let det = crate::linalg::det_laplace(&g);
        assert!((det - c(6.0, 0.0)).norm() < 1e-12, "det = {det}");
        assert!(det.re > 0.0);
    }

    #[test]
    fn dbr_values() {
        let z0 = c(0.0, 0.0);
        assert!((db_rovnyak_eval(z0, z0) - c(0.75, 0.0)).norm() < 1e-15);
        // Radial limit of sections at 1 is the constant 1/2.
        for n in [10, 20, 30] {
            let w = c(1.0 - (2.0f64).powi(-n), 0.0);
            let v = db_rovnyak_eval(z0, w);
            assert!((v - c(0.5, 0.0)).norm() < (2.0f64).powi(-n + 2), "n = {n}: {v}");
        }
    }

    #[test]
    fn dbr_hermitian_random_pairs() {
        let k = dbr_half();
        let pts = Sample::generate(&Domain::unit_disk(), 40, 7).unwrap();
        for i in 0..20 {
            let x = &pts.points()[2 * i];
            let y = &pts.points()[2 * i + 1];
            let a = k.eval(x, y).unwrap();
            let b = k.eval(y, x).unwrap();
            assert!((a - b.conj()).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn catalog_kernels_are_hermitian_on_random_pairs() {
        for label in catalog_kernel_labels() {
            let k = kernel_by_label(label).unwrap();
            let sample = Sample::generate(k.domain(), 200, 11).unwrap();
            let pts = sample.points();
            for i in 0..100 {
                let x = &pts[2 * i];
                let y = &pts[2 * i + 1];
                let a = k.eval(x, y).unwrap();
                let b = k.eval(y, x).unwrap();
                assert!(
                    (a - b.conj()).norm() <= 1e-12 * (1.0 + a.norm()),
                    "{label} not Hermitian at pair {i}: {a} vs conj {b}"
                );
            }
        }
    }

    #[test]
    fn mobius_satisfies_automorphism_identity() {
        let a = c(0.35, -0.2);
        let psi = mobius(a).unwrap();
        let sample = Sample::generate(&Domain::unit_disk(), 40, 3).unwrap();
        for i in 0..20 {
            let z = sample.points()[2 * i].scalar();
            let w = sample.points()[2 * i + 1].scalar();
            let pz = psi.eval_scalar(z).unwrap();
            let pw = psi.eval_scalar(w).unwrap();
            let lhs = one() - pz * pw.conj();
            let rhs = (1.0 - a.norm_sqr()) * (one() - z * w.conj())
                / ((one() - z * a.conj()) * (one() - a * w.conj()));
            assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()), "at ({z}, {w})");
        }
    }

    #[test]
    fn hartz_maps_disk_into_disk() {
        for &(alpha, zeta) in &[(0.5, c(1.0, 0.0)), (0.3, c(0.0, 1.0)), (1.0, c(-1.0, 0.0))] {
            let phi = hartz_map(alpha, zeta).unwrap();
            let sample = Sample::generate(&Domain::unit_disk(), 200, 5).unwrap();
            for p in sample.points() {
                let w = phi.eval(p).unwrap();
                assert!(w.scalar().norm() < 1.0, "alpha={alpha} at {p}");
            }
        }
        assert!(hartz_map(1.5, c(1.0, 0.0)).is_err());
        assert!(hartz_map(0.5, c(0.9, 0.0)).is_err());
    }

    #[test]
    fn halfway_iterates_match_closed_form() {
        let phi = halfway_map();
        for &z0 in &[c(0.0, 0.0), c(-0.5, 0.3), c(0.2, -0.7)] {
            let mut z = z0;
            for n in 1..=20u32 {
                z = phi.eval_scalar(z).unwrap();
                let closed = halfway_iterate_closed_form(z0, n);
                assert!((z - closed).norm() < 1e-12, "n={n} from {z0}");
            }
        }
    }

    #[test]
    fn polydisk_product_identity() {
        let d = 3;
        let maps = vec![
            SelfMap::identity(Domain::unit_disk()),
            SelfMap::identity(Domain::unit_disk()),
            SelfMap::identity(Domain::unit_disk()),
        ];
        let phi = polydisk_product(maps, vec![1, 2, 3]).unwrap();
        let p = Point::new(Domain::polydisk(d), vec![c(0.1, 0.2), c(-0.4, 0.0), c(0.0, 0.6)]).unwrap();
        assert_eq!(phi.eval(&p).unwrap(), p);
    }

    #[test]
    fn polydisk_product_permutes_after_mapping() {
        let maps = vec![halfway_map(), square_map()];
        let phi = polydisk_product(maps, vec![2, 1]).unwrap();
        let p = Point::new(Domain::polydisk(2), vec![c(0.2, 0.0), c(0.5, 0.0)]).unwrap();
        let q = phi.eval(&p).unwrap();
        assert!((q.coords()[0] - c(0.25, 0.0)).norm() < 1e-15); // square(0.5)
        assert!((q.coords()[1] - c(0.6, 0.0)).norm() < 1e-15); // halfway(0.2)
    }

    #[test]
    fn catalog_kernels_pass_the_psd_smoke_test() {
        // 12 quasi-random points per kernel; nat_matrix instead goes through
        // exact determinants on the index windows {1..n}, n <= 8.
        for label in catalog_kernel_labels() {
            if label == "nat_matrix" {
                continue;
            }
            let k = kernel_by_label(label).unwrap();
            let sample = Sample::generate(k.domain(), 12, 19).unwrap();
            let report = crate::gram::gram(&k, &sample).unwrap();
            assert!(
                report.min_eig >= -report.tol,
                "{label}: min_eig = {} below -tol = {}",
                report.min_eig,
                -report.tol
            );
        }
        for n in 1..=8u64 {
            let g: Vec<Vec<Complex64>> = (1..=n)
                .map(|i| (1..=n).map(|j| c(nat_matrix_eval(i, j), 0.0)).collect())
                .collect();
            let det = crate::linalg::det_laplace(&g);
            assert!(det.re > 0.0, "nat_matrix leading {n}x{n} minor = {det}");
        }
    }

    #[test]
    fn label_grammar_round_trips() {
        for label in catalog_kernel_labels() {
            assert!(kernel_by_label(label).is_ok(), "{label}");
        }
        assert!(kernel_by_label("szego_pow").is_err());
        assert!(kernel_by_label("nope").is_err());
        let disk = Domain::unit_disk();
        for label in ["identity", "square", "mobius:0.5", "halfway", "hartz:0.5:1+0i", "coord_dup"] {
            assert!(map_by_label(label, &disk).is_ok(), "{label}");
        }
        let pp = map_by_label("polydisk_product:halfway,mobius(0.3):2,1", &disk).unwrap();
        assert_eq!(pp.source().kind, DomainKind::Polydisk(2));
        assert!(map_by_label("polydisk_product:halfway:1,2", &disk).is_err());
    }

    #[test]
    fn g16_grid_shape() {
        let g = g16_grid();
        assert_eq!(g.len(), 16);
        for p in &g {
            assert!(p.scalar().norm() < 1.0);
        }
    }

    #[test]
    fn probes_are_interior_everywhere() {
        for dom in [
            Domain::unit_disk(),
            Domain::unit_ball(3),
            Domain::polydisk(2),
            Domain::half_plane(0.5),
            Domain::ray(),
            Domain::naturals(),
        ] {
            let probes = default_probes(&dom);
            assert_eq!(probes.len(), 8, "{dom}");
            for p in &probes {
                assert!(dom.contains(p.coords()), "{dom}: {p}");
            }
        }
    }
}
