//! Desk-scale numerics for reproducing kernels on arbitrary sets: kernel
//! algebra, finite-sample positivity certification, reproductive-boundary
//! approach regions, Julia-Caratheodory constant estimation with the norm
//! sandwich, Julia's-lemma inclusion checks, Denjoy-Wolff-type iteration, and
//! the weighted angular-derivative corollaries on the disk and the unit ball.
//!
//! Everything here is sampled evidence, never proof: Gram verdicts are
//! delivered with tolerances and refutation witnesses, sample norms are lower
//! bounds with the inequality directions preserved, and limit statements are
//! probed at fixed interior points.
//!
//! Start with the runnable examples (`cargo run --example jc_sandwich`) or the
//! `rkbound` CLI in the companion crate.

pub mod boundary;
pub mod classical;
pub mod domain;
pub mod error;
pub mod gram;
pub mod julia;
pub mod kernel;
pub mod linalg;
pub mod report;
pub mod sample;
pub mod zeta;
pub mod zoo;

pub use domain::{Domain, DomainKind, Point};
pub use error::{Error, Result};
pub use gram::{gram, GramReport, PsdVerdict, SampleNorm};
pub use kernel::{Kernel, PMetricVariant, SelfMap};
pub use sample::Sample;
