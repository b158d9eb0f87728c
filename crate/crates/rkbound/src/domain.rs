//! Domains and points.
//!
//! A [`Domain`] is one of the supported base sets; a [`Point`] is a coordinate
//! tuple checked against its domain. Membership uses the strict defining
//! inequality (|z| < 1, Re z > cut, x >= 0, n a positive integer); the domain
//! `tolerance` is slack for the real/integer coordinate checks only, never a
//! license to sit on the boundary.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

pub const DEFAULT_MEMBERSHIP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DomainKind {
    UnitDisk,
    UnitBall(usize),
    Polydisk(usize),
    /// Right half-plane Re z > cut.
    HalfPlane { cut: f64 },
    /// Nonnegative real ray [0, inf).
    Ray,
    /// Positive integers 1, 2, 3, ...
    Naturals,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub kind: DomainKind,
    pub tolerance: f64,
}

impl Domain {
    pub fn new(kind: DomainKind) -> Self {
        Domain { kind, tolerance: DEFAULT_MEMBERSHIP_TOLERANCE }
    }

    pub fn unit_disk() -> Self {
        Domain::new(DomainKind::UnitDisk)
    }

    pub fn unit_ball(d: usize) -> Self {
        assert!(d >= 1, "ball dimension must be positive");
        Domain::new(DomainKind::UnitBall(d))
    }

    pub fn polydisk(d: usize) -> Self {
        assert!(d >= 1, "polydisk dimension must be positive");
        Domain::new(DomainKind::Polydisk(d))
    }

    pub fn half_plane(cut: f64) -> Self {
        Domain::new(DomainKind::HalfPlane { cut })
    }

    pub fn ray() -> Self {
        Domain::new(DomainKind::Ray)
    }

    pub fn naturals() -> Self {
        Domain::new(DomainKind::Naturals)
    }

    /// Number of complex (or real) coordinates a point of this domain carries.
    pub fn dimension(&self) -> usize {
        match self.kind {
            DomainKind::UnitDisk | DomainKind::HalfPlane { .. } | DomainKind::Ray | DomainKind::Naturals => 1,
            DomainKind::UnitBall(d) | DomainKind::Polydisk(d) => d,
        }
    }

    /// Strict membership check for a coordinate tuple.
    pub fn check(&self, coords: &[Complex64]) -> Result<()> {
        if coords.len() != self.dimension() {
            return Err(Error::Domain {
                domain: self.to_string(),
                detail: format!("expected {} coordinates, got {}", self.dimension(), coords.len()),
            });
        }
        let tol = self.tolerance;
        let fail = |detail: String| Err(Error::Domain { domain: self.to_string(), detail });
        match self.kind {
            DomainKind::UnitDisk => {
                if coords[0].norm() >= 1.0 {
                    return fail(format!("|z| = {} >= 1", coords[0].norm()));
                }
            }
            DomainKind::UnitBall(_) => {
                let norm_sq: f64 = coords.iter().map(|c| c.norm_sqr()).sum();
                if norm_sq >= 1.0 {
                    return fail(format!("|z|^2 = {norm_sq} >= 1"));
                }
            }
            DomainKind::Polydisk(_) => {
                for (j, c) in coords.iter().enumerate() {
                    if c.norm() >= 1.0 {
                        return fail(format!("|z_{}| = {} >= 1", j + 1, c.norm()));
                    }
                }
            }
            DomainKind::HalfPlane { cut } => {
                if coords[0].re <= cut {
                    return fail(format!("Re z = {} <= {}", coords[0].re, cut));
                }
            }
            DomainKind::Ray => {
                if coords[0].im.abs() > tol {
                    return fail(format!("Im x = {} not real", coords[0].im));
                }
                if coords[0].re < -tol {
                    return fail(format!("x = {} < 0", coords[0].re));
                }
            }
            DomainKind::Naturals => {
                if coords[0].im.abs() > tol {
                    return fail(format!("Im n = {} not real", coords[0].im));
                }
                let x = coords[0].re;
                if x < 1.0 - tol {
                    return fail(format!("n = {x} < 1"));
                }
                if (x - x.round()).abs() > tol {
                    return fail(format!("n = {x} is not an integer"));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, coords: &[Complex64]) -> bool {
        self.check(coords).is_ok()
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DomainKind::UnitDisk => write!(f, "unit disk"),
            DomainKind::UnitBall(d) => write!(f, "unit ball B_{d}"),
            DomainKind::Polydisk(d) => write!(f, "polydisk D^{d}"),
            DomainKind::HalfPlane { cut } => write!(f, "half-plane Re z > {cut}"),
            DomainKind::Ray => write!(f, "ray [0, inf)"),
            DomainKind::Naturals => write!(f, "naturals"),
        }
    }
}

/// A point of a [`Domain`]. Construction validates membership.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    coords: Vec<Complex64>,
    domain: Domain,
}

impl Point {
    pub fn new(domain: Domain, coords: Vec<Complex64>) -> Result<Self> {
        domain.check(&coords)?;
        Ok(Point { coords, domain })
    }

    /// Scalar disk point.
    pub fn disk(z: Complex64) -> Result<Self> {
        Point::new(Domain::unit_disk(), vec![z])
    }

    /// Real disk point.
    pub fn disk_r(r: f64) -> Result<Self> {
        Point::disk(Complex64::new(r, 0.0))
    }

    pub fn ball(coords: Vec<Complex64>) -> Result<Self> {
        let d = coords.len();
        Point::new(Domain::unit_ball(d), coords)
    }

    pub fn half_plane(cut: f64, z: Complex64) -> Result<Self> {
        Point::new(Domain::half_plane(cut), vec![z])
    }

    pub fn ray(x: f64) -> Result<Self> {
        Point::new(Domain::ray(), vec![Complex64::new(x, 0.0)])
    }

    pub fn natural(n: u64) -> Result<Self> {
        Point::new(Domain::naturals(), vec![Complex64::new(n as f64, 0.0)])
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    /// First coordinate; the whole story for one-dimensional domains.
    pub fn scalar(&self) -> Complex64 {
        self.coords[0]
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// Euclidean norm of the coordinate tuple.
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Max coordinate-wise distance to another point.
    pub fn distance(&self, other: &Point) -> f64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            write!(f, "{}", format_complex(self.coords[0]))
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| format_complex(*c)).collect();
            write!(f, "({})", parts.join(", "))
        }
    }
}

/// Render a complex number in the CLI literal form `a+bi` (no spaces).
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parse the CLI complex literal form: `1`, `0.5-0.25i`, `-1+0i`, `0.3i`, `i`, `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::BadArgument("empty complex literal".into()));
    }
    let bad = |msg: &str| Error::BadArgument(format!("cannot parse complex literal {s:?}: {msg}"));

    if let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('I')) {
        // Find the split between real and imaginary parts: the last top-level
        // sign that is not part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let b = bytes[idx];
            if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx].parse().map_err(|_| bad("bad real part"))?;
                let im_str = &body[idx..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| bad("bad imaginary part"))?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                // pure imaginary: "i", "-i", "0.3i"
                let im: f64 = if body.is_empty() {
                    1.0
                } else if body == "-" {
                    -1.0
                } else if body == "+" {
                    1.0
                } else {
                    body.parse().map_err(|_| bad("bad imaginary part"))?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| bad("bad real part"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_membership_is_strict() {
        assert!(Point::disk(Complex64::new(0.999999, 0.0)).is_ok());
        assert!(Point::disk(Complex64::new(1.0, 0.0)).is_err());
        assert!(Point::disk(Complex64::new(0.8, 0.7)).is_err());
    }

    #[test]
    fn ball_one_matches_disk() {
        let ball1 = Domain::unit_ball(1);
        let disk = Domain::unit_disk();
        for &(re, im) in &[(0.0, 0.0), (0.5, 0.3), (0.99, 0.0), (1.0, 0.0), (0.9, 0.9)] {
            let c = vec![Complex64::new(re, im)];
            assert_eq!(ball1.contains(&c), disk.contains(&c), "at {re}+{im}i");
        }
    }

    #[test]
    fn half_plane_and_ray() {
        assert!(Point::half_plane(0.5, Complex64::new(0.6, -3.0)).is_ok());
        assert!(Point::half_plane(0.5, Complex64::new(0.5, 0.0)).is_err());
        assert!(Point::ray(0.0).is_ok());
        assert!(Point::ray(-0.1).is_err());
    }

    #[test]
    fn naturals_are_positive_integers() {
        assert!(Point::natural(1).is_ok());
        assert!(Point::new(Domain::naturals(), vec![Complex64::new(2.5, 0.0)]).is_err());
        assert!(Point::new(Domain::naturals(), vec![Complex64::new(0.0, 0.0)]).is_err());
    }

    #[test]
    fn complex_literals_round_trip() {
        for s in ["1", "-0.5", "0.5-0.25i", "1+0i", "i", "-i", "0.3i", "2e-3+1e-2i"] {
            let z = parse_complex(s).unwrap();
            let z2 = parse_complex(&format_complex(z)).unwrap();
            assert_eq!(z, z2, "round trip through {s}");
        }
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("-1-i").unwrap(), Complex64::new(-1.0, -1.0));
        assert!(parse_complex("nope+2x").is_err());
    }
}
