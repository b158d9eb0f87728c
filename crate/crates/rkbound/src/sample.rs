//! Finite point samples with reproducible quasi-random generation.
//!
//! Disk sampling follows the van der Corput/Halton radical-inverse sequence
//! mapped to polar coordinates with the area-uniform radius law r = sqrt(u).
//! The seed selects a leaped subsequence, so the same (domain, n, seed) always
//! produces the same points.

use crate::domain::{Domain, DomainKind, Point};
use crate::error::{Error, Result};
use num_complex::Complex64;

pub const MIN_PAIRWISE_SEPARATION: f64 = 1e-10;

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Radical inverse of `index` in the given base.
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv_base = 1.0 / base as f64;
    let mut inv = inv_base;
    let mut result = 0.0;
    while index > 0 {
        result += (index % base) as f64 * inv;
        index /= base;
        inv *= inv_base;
    }
    result
}

/// An ordered list of pairwise-distinct points with generation provenance.
#[derive(Debug, Clone)]
pub struct Sample {
    points: Vec<Point>,
    domain: Domain,
    seed: u64,
}

impl Sample {
    /// Wrap explicit points, enforcing pairwise distinctness.
    pub fn from_points(domain: Domain, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::BadArgument("sample must be nonempty".into()));
        }
        for p in &points {
            domain.check(p.coords())?;
        }
        let mut min_sep = f64::INFINITY;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                min_sep = min_sep.min(points[i].distance(&points[j]));
            }
        }
        if points.len() > 1 && min_sep <= MIN_PAIRWISE_SEPARATION {
            return Err(Error::DuplicatePoints { min_sep });
        }
        Ok(Sample { points, domain, seed: 0 })
    }

    /// Quasi-random sample of n interior points.
    pub fn generate(domain: &Domain, n: usize, seed: u64) -> Result<Self> {
        Self::generate_with_radius(domain, n, seed, 0.9)
    }

    /// Same, with an explicit outer radius cap for the bounded domains.
    pub fn generate_with_radius(domain: &Domain, n: usize, seed: u64, rmax: f64) -> Result<Self> {
        let start = 1 + seed * 9973;
        let points: Vec<Point> = (0..n as u64)
            .map(|i| generate_point(domain, start + i, rmax))
            .collect::<Result<_>>()?;
        let mut s = Sample::from_points(*domain, points)?;
        s.seed = seed;
        Ok(s)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The leading `n` points as a new sample (nested-sample helper).
    pub fn prefix(&self, n: usize) -> Result<Sample> {
        if n == 0 || n > self.points.len() {
            return Err(Error::BadArgument(format!("prefix length {n} out of range")));
        }
        Ok(Sample { points: self.points[..n].to_vec(), domain: self.domain, seed: self.seed })
    }

    /// Append extra points (used to pin an origin or witness into a sample).
    pub fn with_point(&self, p: Point) -> Result<Sample> {
        let mut pts = self.points.clone();
        pts.push(p);
        let mut s = Sample::from_points(self.domain, pts)?;
        s.seed = self.seed;
        Ok(s)
    }
}

fn generate_point(domain: &Domain, index: u64, rmax: f64) -> Result<Point> {
    match domain.kind {
        DomainKind::UnitDisk => Point::new(*domain, vec![disk_coord(index, 0, rmax)]),
        DomainKind::Polydisk(d) => {
            let coords: Vec<Complex64> = (0..d).map(|j| disk_coord(index, j, rmax)).collect();
            Point::new(*domain, coords)
        }
        DomainKind::UnitBall(d) => {
            let raw: Vec<Complex64> = (0..d).map(|j| disk_coord(index, j, 1.0)).collect();
            let norm: f64 = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-12 {
                return Point::new(*domain, vec![Complex64::new(0.0, 0.0); d]);
            }
            // Volume-uniform radius in the real dimension 2d, quasi-random.
            let u = radical_inverse(index, PRIMES[(2 * d).min(PRIMES.len() - 1)]);
            let radius = rmax * u.powf(1.0 / (2.0 * d as f64)).max(1e-3);
            let coords = raw.into_iter().map(|z| z * (radius / norm)).collect();
            Point::new(*domain, coords)
        }
        DomainKind::HalfPlane { cut } => {
            let u1 = radical_inverse(index, 2);
            let u2 = radical_inverse(index, 3);
            let z = Complex64::new(cut + 0.05 + 1.45 * u1, 4.0 * (u2 - 0.5));
            Point::new(*domain, vec![z])
        }
        DomainKind::Ray => {
            let u = radical_inverse(index, 2);
            Point::new(*domain, vec![Complex64::new(0.25 + 9.75 * u, 0.0)])
        }
        // Index windows {1..n} are the canonical natural-number samples.
        DomainKind::Naturals => Point::new(*domain, vec![Complex64::new(index as f64, 0.0)]),
    }
}

fn disk_coord(index: u64, coord: usize, rmax: f64) -> Complex64 {
    let u1 = radical_inverse(index, PRIMES[(2 * coord) % PRIMES.len()]);
    let u2 = radical_inverse(index, PRIMES[(2 * coord + 1) % PRIMES.len()]);
    let r = rmax * u1.sqrt();
    let theta = 2.0 * std::f64::consts::PI * u2;
    Complex64::from_polar(r, theta)
}

/// Natural-number index window {1, ..., n}.
pub fn natural_window(n: u64) -> Result<Sample> {
    let pts: Vec<Point> = (1..=n).map(Point::natural).collect::<Result<_>>()?;
    Sample::from_points(Domain::naturals(), pts)
}

/// Integer window {1, ..., n} as ray points.
pub fn ray_window(n: u64) -> Result<Sample> {
    let pts: Vec<Point> = (1..=n).map(|i| Point::ray(i as f64)).collect::<Result<_>>()?;
    Sample::from_points(Domain::ray(), pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic_and_distinct() {
        for dom in [Domain::unit_disk(), Domain::unit_ball(2), Domain::polydisk(2), Domain::half_plane(0.5), Domain::ray()] {
            let a = Sample::generate(&dom, 32, 4).unwrap();
            let b = Sample::generate(&dom, 32, 4).unwrap();
            assert_eq!(a.points(), b.points(), "{dom}");
            let c = Sample::generate(&dom, 32, 5).unwrap();
            assert_ne!(a.points(), c.points(), "{dom}: seed must matter");
        }
    }

    #[test]
    fn disk_sampling_is_roughly_area_uniform() {
        let s = Sample::generate_with_radius(&Domain::unit_disk(), 512, 0, 1.0).unwrap();
        let mean_r_sq: f64 = s.points().iter().map(|p| p.scalar().norm_sqr()).sum::<f64>() / 512.0;
        // Area-uniform r = sqrt(u) gives E[r^2] = 1/2.
        assert!((mean_r_sq - 0.5).abs() < 0.05, "mean r^2 = {mean_r_sq}");
    }

    #[test]
    fn duplicate_points_rejected() {
        let p = Point::disk_r(0.3).unwrap();
        let q = Point::disk_r(0.3).unwrap();
        assert!(matches!(
            Sample::from_points(Domain::unit_disk(), vec![p, q]),
            Err(Error::DuplicatePoints { .. })
        ));
    }

    #[test]
    fn prefix_nests() {
        let s = Sample::generate(&Domain::unit_disk(), 16, 1).unwrap();
        let p = s.prefix(8).unwrap();
        assert_eq!(p.points(), &s.points()[..8]);
        assert!(s.prefix(0).is_err());
        assert!(s.prefix(17).is_err());
    }

    #[test]
    fn natural_windows() {
        let s = natural_window(5).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.points()[4].scalar().re, 5.0);
    }
}
