//! Batch experiment runner for the rkbound library.
//!
//! Exit codes: 0 pass/certified, 1 usage error, 2 refuted or violation (the
//! witness is serialized), 3 inconclusive. Identical arguments and seed
//! produce byte-identical output files.

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rkbound::boundary::{self, BoundaryPoint, ClassifyOptions, SequenceKind};
use rkbound::classical::{self, EquivalenceVerdict};
use rkbound::domain::parse_complex;
use rkbound::error::Error as RkError;
use rkbound::julia::{self, EscalationPlan, FactorVerdict, JCOptions};
use rkbound::kernel::PMetricVariant;
use rkbound::report;
use rkbound::sample::Sample;
use rkbound::zoo;
use rkbound::{Kernel, Point, SelfMap};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_REFUTED: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rkbound",
    about = "Reproducing-kernel boundary experiments: factor certification, Julia-Caratheodory reports, iteration, boundary scans",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Write the primary report here (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format for the primary report.
    #[arg(long, default_value = "json")]
    format: String,
    /// Also write long-format CSV next to the report for external plotting.
    #[arg(long)]
    emit_plot_data: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Certify or refute a composition factor on escalating samples.
    CertifyFactor {
        /// Numerator kernel label, e.g. szego_pow:0.5.
        #[arg(long)]
        k: String,
        /// Denominator kernel label (composed with the map).
        #[arg(long)]
        t: String,
        /// Map label, e.g. square or hartz:0.5:1+0i.
        #[arg(long)]
        map: String,
        /// Escalating sample sizes.
        #[arg(long, value_delimiter = ',', default_values_t = vec![8usize, 16, 32, 64])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Outer radius cap for generated samples.
        #[arg(long, default_value_t = 0.95)]
        rmax: f64,
        /// Randomized small-sample witness restarts near zero.
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Trace k(x,x)/t(phi(x),phi(x)) along boundary sequences.
    EstimateC {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        map: String,
        /// Boundary anchor, e.g. 1+0i (or inf for the ray).
        #[arg(long)]
        xi: String,
        /// Sequence kinds: radial, nontangential:THETA, horocyclic:M, tangential:BETA.
        #[arg(long, value_delimiter = ',', default_values_t = vec!["radial".to_string(), "nontangential:0.7853981633974483".to_string()])]
        kinds: Vec<String>,
        #[arg(short = 'N', long, default_value_t = 40)]
        len: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full Julia-Caratheodory bundle: c_hat, lambda, q_xi norm, sandwich.
    JcReport {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        xi: String,
        #[arg(short = 'N', long, default_value_t = 40)]
        len: u32,
        /// Nontangential apertures added to the radial sequence.
        #[arg(long, value_delimiter = ',', default_values_t = vec![std::f64::consts::FRAC_PI_4])]
        apertures: Vec<f64>,
        #[arg(long, default_value_t = 24)]
        sample_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Pointwise Julia-lemma inclusion check phi(E(M,xi)) in E(cM, lambda).
    JuliaCheck {
        #[arg(long)]
        k: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        xi: String,
        /// Target anchor; defaults to xi.
        #[arg(long)]
        lambda: Option<String>,
        /// The Julia constant; estimated from the radial trace when omitted.
        #[arg(short = 'c', long)]
        c: Option<f64>,
        /// Horocycle levels to sample.
        #[arg(long = "Ms", value_delimiter = ',', default_values_t = vec![1.0, 2.0])]
        ms: Vec<f64>,
        /// Total number of horocycle points sampled per level.
        #[arg(long, default_value_t = 500)]
        points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Iterate a map toward a Denjoy-Wolff-type boundary point.
    Iterate {
        #[arg(long)]
        k: String,
        #[arg(long)]
        map: String,
        /// Starting point (comma-separated coordinates for tuple domains).
        #[arg(long)]
        x0: String,
        #[arg(long)]
        xi: String,
        #[arg(short = 'N', long, default_value_t = 40)]
        len: u32,
        /// The Julia constant; estimated from the radial trace when omitted.
        #[arg(short = 'c', long)]
        c: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Scan a boundary sequence: diagonal, region memberships, classification.
    BoundaryScan {
        #[arg(long)]
        k: String,
        /// Boundary anchor; may also ride on --kind as kind@anchor.
        #[arg(long)]
        xi: Option<String>,
        /// radial, nontangential:THETA, horocyclic:M, tangential:BETA;
        /// an @anchor suffix (e.g. radial@1+0i) sets the anchor inline.
        #[arg(long, default_value = "radial")]
        kind: String,
        /// Region spec strings like gamma:M=2 or e:M=0.5 (an @anchor suffix
        /// is accepted and must agree with the sequence anchor); they
        /// override --gamma-m / --e-m.
        #[arg(long)]
        region: Vec<String>,
        #[arg(short = 'N', long, default_value_t = 30)]
        len: u32,
        /// Gamma-region parameter for the membership column.
        #[arg(long, default_value_t = 2.0)]
        gamma_m: f64,
        /// E-region parameter for the membership column.
        #[arg(long, default_value_t = 2.0)]
        e_m: f64,
        /// Also classify the sequence limit (boundary / interior).
        #[arg(long)]
        classify: bool,
        /// Norm-trace blow-up threshold for the classifier.
        #[arg(long, default_value_t = 1e4)]
        div_threshold: f64,
        /// Per-step growth factor that counts as superlinear.
        #[arg(long, default_value_t = 1.2)]
        growth_ratio: f64,
        /// Add the consecutive-step boundary metric column.
        #[arg(long)]
        p_metric: bool,
        /// Use the scale-invariant squared denominator in the p-metric.
        #[arg(long)]
        pmetric_squared: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Empirical regularity constants (A)-(D) for a kernel at an anchor.
    Regularity {
        #[arg(long)]
        t: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 64)]
        sample_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sequences supplied to the (C)/(D) checks.
        #[arg(long, value_delimiter = ',', default_values_t = vec!["radial".to_string()])]
        seqs: Vec<String>,
        #[arg(short = 'N', long, default_value_t = 30)]
        len: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Weighted difference-quotient vs weighted-derivative equivalence.
    WeightedDerivative {
        /// Disk map label, e.g. hartz:0.5:1+0i or halfway.
        #[arg(long)]
        phi: String,
        #[arg(long)]
        zeta: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        alpha: f64,
        /// Stolz aperture (radians).
        #[arg(long, default_value_t = 0.0)]
        aperture: f64,
        #[arg(short = 'N', long, default_value_t = 22)]
        len: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the error path with a
            // success status; real usage errors exit 1.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<RkError>() {
        Some(RkError::Inconclusive { .. })
        | Some(RkError::NoMatch { .. })
        | Some(RkError::Stalled { .. })
        | Some(RkError::Convergence { .. })
        | Some(RkError::NotApproaching { .. }) => EXIT_INCONCLUSIVE,
        Some(RkError::Precondition(_)) | Some(RkError::FixedPoint { .. }) => EXIT_REFUTED,
        _ => EXIT_USAGE,
    }
}

fn parse_kind(s: &str) -> anyhow::Result<SequenceKind> {
    let s = s.trim();
    if s == "radial" {
        return Ok(SequenceKind::Radial);
    }
    if let Some(rest) = s.strip_prefix("nontangential:") {
        return Ok(SequenceKind::Nontangential { theta: rest.parse()? });
    }
    if let Some(rest) = s.strip_prefix("horocyclic:") {
        return Ok(SequenceKind::Horocyclic { m: rest.parse()? });
    }
    if let Some(rest) = s.strip_prefix("tangential:") {
        return Ok(SequenceKind::Tangential { beta: rest.parse()? });
    }
    anyhow::bail!("unknown sequence kind {s:?} (radial | nontangential:T | horocyclic:M | tangential:B)")
}

/// Split an optional inline anchor off a sequence or region spec string:
/// `radial@1+0i` -> ("radial", Some("1+0i")).
fn split_inline_anchor(s: &str) -> (&str, Option<&str>) {
    match s.split_once('@') {
        Some((head, anchor)) => (head, Some(anchor)),
        None => (s, None),
    }
}

/// Region spec strings: `gamma:M=2` or `e:M=0.5`.
fn parse_region_spec(s: &str) -> anyhow::Result<(char, f64)> {
    let (head, _) = split_inline_anchor(s);
    let (kind, m_part) = head
        .split_once(':')
        .ok_or_else(|| anyhow::anyhow!("region spec {s:?} needs the form gamma:M=<value> or e:M=<value>"))?;
    let m: f64 = m_part
        .strip_prefix("M=")
        .ok_or_else(|| anyhow::anyhow!("region spec {s:?} needs M=<value>"))?
        .parse()?;
    match kind {
        "gamma" => Ok(('g', m)),
        "e" => Ok(('e', m)),
        _ => anyhow::bail!("unknown region family {kind:?} in {s:?} (gamma | e)"),
    }
}

fn resolve_kernel(label: &str) -> anyhow::Result<Kernel> {
    Ok(zoo::kernel_by_label(label)?)
}

fn resolve_map(label: &str, k: &Kernel) -> anyhow::Result<SelfMap> {
    Ok(zoo::map_by_label(label, k.domain())?)
}

fn resolve_boundary(k: &Kernel, anchor: &str) -> anyhow::Result<BoundaryPoint> {
    let anchor = boundary::parse_anchor(anchor)?;
    Ok(boundary::boundary_point_for(k, &anchor)?)
}

/// Print without panicking when the reader has closed the pipe.
fn print_stdout(body: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{body}");
}

fn write_report(output: &OutputArgs, body: &str) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => print_stdout(body),
    }
    Ok(())
}

fn write_plot_data(output: &OutputArgs, series: &[(String, Vec<f64>)]) -> anyhow::Result<()> {
    if !output.emit_plot_data {
        return Ok(());
    }
    let csv = report::plot_data_csv(series);
    match &output.out {
        Some(path) => {
            let plot_path = path.with_extension("plot.csv");
            std::fs::write(plot_path, csv)?;
        }
        None => print_stdout(csv.trim_end()),
    }
    Ok(())
}

fn estimate_c_radial(k: &Kernel, t: &Kernel, phi: &SelfMap, xi: &BoundaryPoint) -> anyhow::Result<f64> {
    let radial = boundary::make_sequence(k, xi, SequenceKind::Radial, 40)?;
    let est = julia::estimate_c(k, t, phi, &[("radial".into(), radial)])?;
    Ok(est.c_hat)
}

/// Interior points filling the horocycles E(m f, xi) for fractions f of the
/// level, both half-planes of the drift.
fn horocycle_cloud(k: &Kernel, xi: &BoundaryPoint, m: f64, count: usize) -> anyhow::Result<Vec<Point>> {
    let mut pts = Vec::with_capacity(count);
    let fractions = 10usize;
    let mut depth = 1u32;
    'outer: while depth <= 40 {
        for frac in 1..=fractions {
            for sign in [1.0, -1.0] {
                let level = m * frac as f64 / fractions as f64;
                let seq = boundary::make_sequence(k, xi, SequenceKind::Horocyclic { m: level }, depth + 4)?;
                let p = &seq[depth as usize + 3];
                let z = p.coords()[0];
                let flipped = Complex64::new(z.re, sign * z.im);
                let candidate = Point::new(*p.domain(), vec![flipped])?;
                if pts.iter().all(|q: &Point| q.distance(&candidate) > 1e-12) {
                    pts.push(candidate);
                }
                if pts.len() >= count {
                    break 'outer;
                }
            }
        }
        depth += 1;
    }
    Ok(pts)
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::CertifyFactor { k, t, map, sizes, seed, rmax, restarts, output } => {
            let kk = resolve_kernel(&k)?;
            let tt = resolve_kernel(&t)?;
            let phi = resolve_map(&map, &kk)?;
            let plan = EscalationPlan { sizes, seed, rmax, witness_restarts: restarts };
            let cert = julia::certify_factor(&kk, &tt, &phi, &plan)?;
            let (verdict, witness) = match &cert.verdict {
                FactorVerdict::CertifiedOnSamples => ("CertifiedOnSamples", None),
                FactorVerdict::Refuted(w) => ("Refuted", Some(w)),
            };
            let body = serde_json::json!({
                "command": "certify-factor",
                "k": k,
                "t": t,
                "map": map,
                "seed": seed,
                "verdict": verdict,
                "stages": cert.reports,
                "witness": witness,
            });
            write_report(&output, &serde_json::to_string_pretty(&body)?)?;
            let series: Vec<(String, Vec<f64>)> =
                vec![("stage_min_eig".into(), cert.reports.iter().map(|r| r.min_eig).collect())];
            write_plot_data(&output, &series)?;
            Ok(if cert.is_certified() { EXIT_OK } else { EXIT_REFUTED })
        }

        Command::EstimateC { k, t, map, xi, kinds, len, output } => {
            let kk = resolve_kernel(&k)?;
            let tt = resolve_kernel(&t)?;
            let phi = resolve_map(&map, &kk)?;
            let default_bp = resolve_boundary(&kk, &xi)?;
            let mut sequences = Vec::new();
            for kind_str in &kinds {
                let (head, inline_anchor) = split_inline_anchor(kind_str);
                let bp = match inline_anchor {
                    Some(a) => resolve_boundary(&kk, a)?,
                    None => default_bp.clone(),
                };
                let kind = parse_kind(head)?;
                let seq = boundary::make_sequence(&kk, &bp, kind, len)?;
                sequences.push((kind_str.clone(), seq));
            }
            let est = julia::estimate_c(&kk, &tt, &phi, &sequences)?;
            let body = if output.format == "csv" {
                report::c_trace_csv(&est.traces)
            } else {
                serde_json::to_string_pretty(&serde_json::json!({
                    "command": "estimate-c",
                    "k": k, "t": t, "map": map, "xi": xi,
                    "c_hat": est.c_hat,
                    "traces": est.traces,
                }))?
            };
            write_report(&output, &body)?;
            let series: Vec<(String, Vec<f64>)> =
                est.traces.iter().map(|tr| (tr.kind.clone(), tr.ratios.clone())).collect();
            write_plot_data(&output, &series)?;
            Ok(EXIT_OK)
        }

        Command::JcReport { k, t, map, xi, len, apertures, sample_size, seed, output } => {
            let kk = resolve_kernel(&k)?;
            let tt = resolve_kernel(&t)?;
            let phi = resolve_map(&map, &kk)?;
            let bp = resolve_boundary(&kk, &xi)?;
            let opts = JCOptions {
                sequence_len: len,
                apertures,
                sample_size,
                seed,
                escalation: EscalationPlan { seed, ..EscalationPlan::default() },
            };
            let report = julia::jc_report(&kk, &tt, &phi, &bp, &opts)?;
            write_report(&output, &serde_json::to_string_pretty(&report)?)?;
            let series: Vec<(String, Vec<f64>)> =
                report.sequences.iter().map(|tr| (tr.kind.clone(), tr.ratios.clone())).collect();
            write_plot_data(&output, &series)?;
            Ok(if report.sandwich_ok { EXIT_OK } else { EXIT_REFUTED })
        }

        Command::JuliaCheck { k, map, xi, lambda, c, ms, points, output } => {
            let kk = resolve_kernel(&k)?;
            let phi = resolve_map(&map, &kk)?;
            let bp = resolve_boundary(&kk, &xi)?;
            let lam = match &lambda {
                Some(s) => resolve_boundary(&kk, s)?,
                None => bp.clone(),
            };
            let c = match c {
                Some(c) => c,
                None => estimate_c_radial(&kk, &kk, &phi, &bp)?,
            };
            let mut all = julia::InclusionOutcome { verdicts: vec![], checked: 0, violations: 0, equality_cases: 0 };
            for &m in &ms {
                let cloud = horocycle_cloud(&kk, &bp, m, points)?;
                let out = julia::julia_inclusion_check(&kk, &phi, &bp, &lam, c, &[m * (1.0 + 1e-9)], &cloud)?;
                all.checked += out.checked;
                all.violations += out.violations;
                all.equality_cases += out.equality_cases;
                all.verdicts.extend(out.verdicts);
            }
            let body = if output.format == "csv" {
                report::inclusion_csv(&all)
            } else {
                serde_json::to_string_pretty(&serde_json::json!({
                    "command": "julia-check",
                    "k": k, "map": map, "xi": xi,
                    "c": c,
                    "ms": ms,
                    "checked": all.checked,
                    "violations": all.violations,
                    "equality_cases": all.equality_cases,
                    "violating": all.verdicts.iter().filter(|v| !v.ok).collect::<Vec<_>>(),
                }))?
            };
            write_report(&output, &body)?;
            Ok(if all.violations == 0 { EXIT_OK } else { EXIT_REFUTED })
        }

        Command::Iterate { k, map, x0, xi, len, c, output } => {
            let kk = resolve_kernel(&k)?;
            let phi = resolve_map(&map, &kk)?;
            let bp = resolve_boundary(&kk, &xi)?;
            let coords: Vec<Complex64> = x0.split(',').map(parse_complex).collect::<rkbound::Result<_>>()?;
            let start = Point::new(*kk.domain(), coords)?;
            let c = match c {
                Some(c) => c,
                None => estimate_c_radial(&kk, &kk, &phi, &bp)?,
            };
            let trajectory = julia::iterate_to_boundary(&kk, &phi, &start, &bp, c, len)?;
            let body = if output.format == "csv" {
                report::trajectory_csv(&trajectory)
            } else {
                serde_json::to_string_pretty(&serde_json::json!({
                    "command": "iterate",
                    "k": k, "map": map, "x0": x0, "xi": xi, "c": c,
                    "converged": trajectory.converged,
                    "steps": trajectory.steps,
                }))?
            };
            write_report(&output, &body)?;
            let series: Vec<(String, Vec<f64>)> = vec![
                ("e_level".into(), trajectory.steps.iter().map(|s| s.e_level).collect()),
                ("probe_residual".into(), trajectory.steps.iter().map(|s| s.probe_residual).collect()),
            ];
            write_plot_data(&output, &series)?;
            Ok(if trajectory.converged { EXIT_OK } else { EXIT_INCONCLUSIVE })
        }

        Command::BoundaryScan {
            k,
            xi,
            kind,
            region,
            len,
            mut gamma_m,
            mut e_m,
            classify,
            div_threshold,
            growth_ratio,
            p_metric,
            pmetric_squared,
            output,
        } => {
            let kk = resolve_kernel(&k)?;
            let (kind_str, inline_anchor) = split_inline_anchor(&kind);
            let anchor = match (inline_anchor, &xi) {
                (Some(a), _) => a.to_string(),
                (None, Some(a)) => a.clone(),
                (None, None) => anyhow::bail!("an anchor is required: --xi or --kind kind@anchor"),
            };
            let xi = anchor;
            for spec in &region {
                if let (_, Some(a)) = split_inline_anchor(spec) {
                    if a != xi {
                        anyhow::bail!("region anchor {a:?} disagrees with the sequence anchor {xi:?}");
                    }
                }
                match parse_region_spec(spec)? {
                    ('g', m) => gamma_m = m,
                    (_, m) => e_m = m,
                }
            }
            let bp = resolve_boundary(&kk, &xi)?;
            let kind = parse_kind(kind_str)?;
            let seq = boundary::make_sequence(&kk, &bp, kind, len)?;
            let variant = if pmetric_squared { PMetricVariant::Squared } else { PMetricVariant::Printed };
            let mut rows = Vec::with_capacity(seq.len());
            for (i, p) in seq.iter().enumerate() {
                let p_next = if p_metric && i + 1 < seq.len() {
                    rkbound::kernel::p_metric_with(&kk, p, &seq[i + 1], variant).ok()
                } else {
                    None
                };
                rows.push(report::ScanRow {
                    n: i as u32 + 1,
                    point: p.coords()[0],
                    diag: kk.diag(p)?,
                    gamma_member: boundary::gamma_member(&kk, &bp, gamma_m, p)?,
                    e_member: boundary::e_member(&kk, &bp, e_m, p)?,
                    p_next,
                });
            }
            let csv = report::boundary_scan_csv(&rows, p_metric);
            let mut exit = EXIT_OK;
            let body = if classify {
                let opts = ClassifyOptions {
                    divergence_threshold: div_threshold,
                    growth_ratio,
                    ..ClassifyOptions::default()
                };
                match boundary::classify_sequence(&kk, &seq, &opts) {
                    Ok(rep) => serde_json::to_string_pretty(&serde_json::json!({
                        "command": "boundary-scan",
                        "k": k, "xi": xi,
                        "verdict": rep.verdict,
                        "evidence": rep.evidence,
                        "final_diagonal": rep.final_diagonal,
                        "trace_csv": csv,
                    }))?,
                    Err(RkError::Inconclusive { detail }) => {
                        exit = EXIT_INCONCLUSIVE;
                        serde_json::to_string_pretty(&serde_json::json!({
                            "command": "boundary-scan",
                            "k": k, "xi": xi,
                            "verdict": "Inconclusive",
                            "detail": detail,
                            "trace_csv": csv,
                        }))?
                    }
                    Err(e) => return Err(e.into()),
                }
            } else {
                csv
            };
            write_report(&output, &body)?;
            let series: Vec<(String, Vec<f64>)> = vec![("diag".into(), rows.iter().map(|r| r.diag).collect())];
            write_plot_data(&output, &series)?;
            Ok(exit)
        }

        Command::Regularity { t, lambda, sample_size, seed, seqs, len, output } => {
            let tt = resolve_kernel(&t)?;
            let bp = resolve_boundary(&tt, &lambda)?;
            let sample = Sample::generate_with_radius(tt.domain(), sample_size, seed, 0.99)?;
            let mut sequences = Vec::new();
            for kind_str in &seqs {
                let kind = parse_kind(kind_str)?;
                sequences.push(boundary::make_sequence(&tt, &bp, kind, len)?);
            }
            let report = boundary::regularity_check(&tt, &bp, &sample, &sequences)?;
            write_report(
                &output,
                &serde_json::to_string_pretty(&serde_json::json!({
                    "command": "regularity",
                    "t": t, "lambda": lambda, "seed": seed,
                    "a_hat": report.a_hat,
                    "b_hat": report.b_hat,
                    "c_checks": report.c_checks,
                    "d_checks": report.d_checks,
                }))?,
            )?;
            Ok(EXIT_OK)
        }

        Command::WeightedDerivative { phi, zeta, lambda, alpha, aperture, len, output } => {
            let disk = rkbound::Domain::unit_disk();
            let map = zoo::map_by_label(&phi, &disk)?;
            let f = classical::disk_fn_of_map(&map);
            let zeta_c = parse_complex(&zeta)?;
            let lambda_c = parse_complex(&lambda)?;
            let seq = classical::nontangential_sequence(zeta_c, aperture, len)?;
            let rep = classical::weighted_derivative_check(&f, zeta_c, lambda_c, alpha, &seq)?;
            write_report(&output, &serde_json::to_string_pretty(&rep)?)?;
            let series: Vec<(String, Vec<f64>)> = vec![
                ("dq_abs".into(), rep.dq_trace.iter().map(|v| v.norm()).collect()),
                ("wd_abs".into(), rep.wd_trace.iter().map(|v| v.norm()).collect()),
            ];
            write_plot_data(&output, &series)?;
            Ok(match rep.verdict {
                EquivalenceVerdict::BothConverge | EquivalenceVerdict::BothDiverge => EXIT_OK,
                EquivalenceVerdict::Violation => EXIT_REFUTED,
            })
        }
    }
}
