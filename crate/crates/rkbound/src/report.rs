//! Fixed CSV layouts shared by the CLI and the runnable examples. JSON
//! serialization rides on serde; everything here is deterministic (no
//! timestamps, stable field and row order).

use crate::boundary::TrichotomyReport;
use crate::julia::{InclusionOutcome, SequenceTrace, Trajectory};
use num_complex::Complex64;
use std::fmt::Write;

/// Trajectory rows: n, re, im, diag, E_level, probe_residual.
pub fn trajectory_csv(t: &Trajectory) -> String {
    let mut out = String::from("n,re,im,diag,E_level,probe_residual\n");
    for s in &t.steps {
        let z = s.point.coords()[0];
        writeln!(out, "{},{},{},{},{},{}", s.n, z.re, z.im, s.diag, s.e_level, s.probe_residual).unwrap();
    }
    out
}

/// Boundary-scan rows: n, re, im, diag, member flags (plus p_next when the
/// consecutive-step boundary metric is requested). re/im are the first
/// coordinate of the point.
pub struct ScanRow {
    pub n: u32,
    pub point: Complex64,
    pub diag: f64,
    pub gamma_member: bool,
    pub e_member: bool,
    pub p_next: Option<f64>,
}

pub fn boundary_scan_csv(rows: &[ScanRow], with_p: bool) -> String {
    let mut out = String::from(if with_p {
        "n,re,im,diag,gamma_member,e_member,p_next\n"
    } else {
        "n,re,im,diag,gamma_member,e_member\n"
    });
    for r in rows {
        if with_p {
            let p = r.p_next.map(|v| v.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.n, r.point.re, r.point.im, r.diag, r.gamma_member as u8, r.e_member as u8, p
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.n, r.point.re, r.point.im, r.diag, r.gamma_member as u8, r.e_member as u8
            )
            .unwrap();
        }
    }
    out
}

/// Ratio traces in long format: kind, n, ratio.
pub fn c_trace_csv(traces: &[SequenceTrace]) -> String {
    let mut out = String::from("kind,n,ratio\n");
    for t in traces {
        for (i, r) in t.ratios.iter().enumerate() {
            writeln!(out, "{},{},{}", t.kind, i + 1, r).unwrap();
        }
    }
    out
}

/// Long-format plot data: series, n, value.
pub fn plot_data_csv(series: &[(String, Vec<f64>)]) -> String {
    let mut out = String::from("series,n,value\n");
    for (name, values) in series {
        for (i, v) in values.iter().enumerate() {
            writeln!(out, "{},{},{}", name, i + 1, v).unwrap();
        }
    }
    out
}

/// Inclusion verdict rows: re, im, m, lhs, rhs, ok, equality.
pub fn inclusion_csv(outcome: &InclusionOutcome) -> String {
    let mut out = String::from("re,im,m,lhs,rhs,ok,equality\n");
    for v in &outcome.verdicts {
        let z = v.point.coords()[0];
        writeln!(out, "{},{},{},{},{},{},{}", z.re, z.im, v.m, v.lhs, v.rhs, v.ok as u8, v.equality as u8).unwrap();
    }
    out
}

/// Nested-sample evidence rows for the trichotomy verdict.
pub fn trichotomy_csv(report: &TrichotomyReport) -> String {
    let mut out = String::from("sample_size,norm_sq_lower_bound\n");
    for (n, v) in &report.evidence {
        writeln!(out, "{n},{v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layouts_are_stable() {
        let rows = vec![ScanRow {
            n: 1,
            point: Complex64::new(0.5, 0.0),
            diag: 1.3333,
            gamma_member: true,
            e_member: false,
            p_next: Some(0.25),
        }];
        let with_p = boundary_scan_csv(&rows, true);
        assert_eq!(with_p.lines().next().unwrap(), "n,re,im,diag,gamma_member,e_member,p_next");
        assert_eq!(with_p.lines().nth(1).unwrap(), "1,0.5,0,1.3333,1,0,0.25");
        let without = boundary_scan_csv(&rows, false);
        assert_eq!(without.lines().nth(1).unwrap(), "1,0.5,0,1.3333,1,0");
    }
}
