use std::io::Write;
use std::path::Path;

use beurling_core::construct::{build_from_phase, build_two_function_family, obstruction_pair, tail_mass_fraction};
use beurling_core::corefn::{reciprocal_involution, sample, FunctionSpec, LogGrid, SampledFunction};
use beurling_core::dilate::{autocorrelation, cross_pair, radial_autocorrelation, CorrelationCurve, LambdaSet};
use beurling_core::io;
use beurling_core::mellin::{mellin_forward, mellin_inverse, MellinSpectrum};
use beurling_core::verify::{
    catalog_pairs, check_m0f_identity, check_obstruction, check_strip_form, check_theorem1, check_theorem2,
    check_theorem4, classify_theorem4prime, falsification_demo, identity_suite, run_demo, shipped_witnesses,
    CheckReport,
};
use beurling_core::{Error, Result};
use num_complex::Complex64;

use crate::{exit, Command, CommandConfig, Format, Suite, TransformOp};

const STRIP_LAMBDAS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Runs `config`, printing to stdout/stderr, and returns the exit status.
pub fn run(config: &CommandConfig) -> i32 {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(config, &mut out) {
        Ok(true) => exit::SUCCESS,
        Ok(false) => exit::CHECK_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io { .. } | Error::Format { .. } => exit::IO,
                _ => exit::USAGE,
            }
        }
    }
}

fn grid_label(g: &LogGrid) -> String {
    format!("grid={},{},{}", g.u_min(), g.u_max(), g.count())
}

fn lambda_label(l: &LambdaSet, g: &LogGrid) -> String {
    match l {
        LambdaSet::DefaultLattice => format!("lambdas=lattice(|m|<={})", g.count() / 4),
        LambdaSet::Lattice { max_shift } => format!("lambdas=lattice(|m|<={max_shift})"),
        LambdaSet::Values(v) => format!("lambdas={}", v.iter().map(f64::to_string).collect::<Vec<_>>().join(";")),
    }
}

/// Executes `config`, writing human-readable progress to `out`. Returns
/// whether every check passed (always `true` for non-checking commands).
pub fn execute(config: &CommandConfig, out: &mut dyn Write) -> Result<bool> {
    let grid = config.grid;
    let say = |out: &mut dyn Write, msg: String| {
        // progress output is best-effort; a closed stdout is not an error
        let _ = writeln!(out, "{msg}");
    };
    match &config.command {
        Command::Transform { f, op, out: path } => {
            let header = match f {
                Some(f) => format!("transform f={f} {}", grid_label(&grid)),
                None => format!("transform {}", grid_label(&grid)),
            };
            let load = || -> Result<SampledFunction> {
                sample(f.as_ref().expect("validated: --f present"), &grid)
            };
            match op {
                TransformOp::Sample => write_samples(path, &load()?, &header, config.format)?,
                TransformOp::Reciprocal => {
                    let g = reciprocal_involution(&load()?)?;
                    write_samples(path, &g, &format!("{header} op=reciprocal"), config.format)?
                }
                TransformOp::Mellin => {
                    let s = mellin_forward(&load()?)?;
                    write_spectrum(path, &s, &format!("{header} op=mellin"), config.format)?;
                    say(out, format!("M0 rms {:.6e}, M1 rms {:.6e}", s.rms(0), s.rms(1)));
                }
                TransformOp::Inverse(src) => {
                    let s = io::read_spectrum(src)?;
                    let g = mellin_inverse(&s, &grid)?;
                    let h = format!("{header} op=inverse spectrum={}", src.display());
                    write_samples(path, &g, &h, config.format)?
                }
            }
            say(out, format!("wrote {}", path.display()));
            Ok(true)
        }
        Command::Correlate { f, g, n, lambdas, out: path, out2 } => {
            let fs = sample(f, &grid)?;
            let base = format!("{} {}", grid_label(&grid), lambda_label(lambdas, &grid));
            match g {
                None => {
                    let curve = if *n == 1 {
                        autocorrelation(&fs, lambdas)?
                    } else {
                        radial_autocorrelation(&fs, *n, lambdas)?
                    };
                    write_curve(path, &curve, &format!("correlate f={f} n={n} {base}"), config.format)?;
                    if let Some(v) = curve.value_at(1.0) {
                        say(out, format!("F(1) = {:.12e}{:+.12e}i", v.re, v.im));
                    }
                    say(out, format!("wrote {} ({} points)", path.display(), curve.len()));
                }
                Some(g) => {
                    let gs = sample(g, &grid)?;
                    let (f1, f2) = cross_pair(&fs, &gs, lambdas)?;
                    let h = format!("correlate f={f} g={g} {base}");
                    write_curve(path, &f1, &format!("{h} curve=F1"), config.format)?;
                    say(out, format!("wrote {} (F1, {} points)", path.display(), f1.len()));
                    if let Some(p2) = out2 {
                        write_curve(p2, &f2, &format!("{h} curve=F2"), config.format)?;
                        say(out, format!("wrote {} (F2, {} points)", p2.display(), f2.len()));
                    }
                }
            }
            Ok(true)
        }
        Command::Construct { c0, phase, c1, out: path, out2, curve } => {
            let h = format!("construct phase={} {}", phase.label(), grid_label(&grid));
            let f = match c1 {
                None => {
                    let f = build_from_phase(*c0, phase, &grid)?;
                    write_samples(path, &f, &format!("{h} c0={c0}"), config.format)?;
                    f
                }
                Some(c1) => {
                    let (f, g) = build_two_function_family(*c1, phase, &grid)?;
                    let fam = format!("{h} c1={},{}", c1.re, c1.im);
                    write_samples(path, &f, &format!("{fam} function=f"), config.format)?;
                    let p2 = out2.as_ref().expect("validated: --out2 present");
                    write_samples(p2, &g, &format!("{fam} function=g"), config.format)?;
                    say(out, format!("wrote {}", p2.display()));
                    f
                }
            };
            say(out, format!("wrote {} (tail mass fraction {:.3e})", path.display(), tail_mass_fraction(&f)));
            if let Some(cp) = curve {
                let cv = autocorrelation(&f, &LambdaSet::DefaultLattice)?;
                let ch = format!("{h} curve=F {}", lambda_label(&LambdaSet::DefaultLattice, &grid));
                write_curve(cp, &cv, &ch, config.format)?;
                say(out, format!("wrote {}", cp.display()));
            }
            Ok(true)
        }
        Command::Verify { suite, f, g, c0, c1, beta, n, tol, out: path } => {
            let mut reports = verify_suite(*suite, &grid, f.as_ref(), g.as_ref(), *c0, *c1, *beta, *n)?;
            if let Some(t) = tol {
                reports = reports.into_iter().map(|r| r.with_tolerance(*t)).collect();
            }
            for r in &reports {
                say(out, r.summary());
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            say(out, format!("{passed}/{} checks passed", reports.len()));
            if let Some(p) = path {
                io::write_json(p, &reports)?;
            }
            Ok(passed == reports.len())
        }
        Command::Demo { out: path } => {
            let rows = run_demo(&grid)?;
            say(out, format!("{:<24} {:<6} {:>12}  {}", "scenario", "result", "residual", "notes"));
            for (name, r) in &rows {
                let note = match (r.detail("c0"), r.detail("phi_deviation")) {
                    (Some(c0), _) => format!("c0={c0:.6}"),
                    (_, Some(d)) => format!("Φ deviation={d:.4}"),
                    _ => String::new(),
                };
                say(
                    out,
                    format!(
                        "{:<24} {:<6} {:>12.3e}  {note}",
                        name,
                        if r.pass { "PASS" } else { "FAIL" },
                        r.residual
                    ),
                );
            }
            if let Some(p) = path {
                let reports: Vec<&CheckReport> = rows.iter().map(|(_, r)| r).collect();
                io::write_json(p, &reports)?;
            }
            Ok(rows.iter().all(|(_, r)| r.pass))
        }
    }
}

fn write_samples(path: &Path, f: &SampledFunction, header: &str, format: Format) -> Result<()> {
    match format {
        Format::Csv => io::write_samples(path, f, header),
        Format::Json => io::write_json(path, f),
    }
}

fn write_curve(path: &Path, c: &CorrelationCurve, header: &str, format: Format) -> Result<()> {
    match format {
        Format::Csv => io::write_curve(path, c, header),
        Format::Json => io::write_json(path, c),
    }
}

fn write_spectrum(path: &Path, s: &MellinSpectrum, header: &str, format: Format) -> Result<()> {
    match format {
        Format::Csv => io::write_spectrum(path, s, header),
        Format::Json => io::write_json(path, s),
    }
}

fn gaussian(grid: &LogGrid) -> Result<SampledFunction> {
    sample(&FunctionSpec::gaussian(c(1.0, 0.0))?, grid)
}

fn classify_witnesses(grid: &LogGrid) -> Result<CheckReport> {
    let mut mismatches = 0usize;
    let mut report = CheckReport::new("classify_witnesses", 0.0, 0.5);
    for g in [*grid, grid.refined()?] {
        for w in shipped_witnesses(&g)? {
            let got = classify_theorem4prime(&w.f, &w.g)?;
            if got != w.expected {
                mismatches += 1;
            }
            report = report.with(&format!("{}@{}", w.name, g.count()), got.to_string());
        }
    }
    Ok(CheckReport { residual: mismatches as f64, ..report }.with_tolerance(0.5))
}

#[allow(clippy::too_many_arguments)]
fn verify_suite(
    suite: Suite,
    grid: &LogGrid,
    f: Option<&FunctionSpec>,
    g: Option<&FunctionSpec>,
    c0: Option<f64>,
    c1: Option<Complex64>,
    beta: Option<Complex64>,
    n: usize,
) -> Result<Vec<CheckReport>> {
    let load = |spec: Option<&FunctionSpec>| -> Result<SampledFunction> {
        match spec {
            Some(s) => sample(s, grid),
            None => gaussian(grid),
        }
    };
    let pair = || -> Result<Option<(SampledFunction, SampledFunction)>> {
        match (f, g) {
            (Some(a), Some(b)) => Ok(Some((sample(a, grid)?, sample(b, grid)?))),
            (None, None) => Ok(None),
            _ => Err(Error::InvalidParameter("give both --f and --g, or neither".into())),
        }
    };
    Ok(match suite {
        Suite::Theorem1 => {
            let fs = load(f)?;
            let curve = if n == 1 {
                autocorrelation(&fs, &LambdaSet::DefaultLattice)?
            } else {
                radial_autocorrelation(&fs, n, &LambdaSet::DefaultLattice)?
            };
            vec![check_theorem1(&curve, &fs, n)?]
        }
        Suite::Theorem2 => {
            let fs = load(f)?;
            let c0 = c0.unwrap_or_else(|| std::f64::consts::SQRT_2 * fs.norm_sq());
            vec![check_theorem2(&fs, c0)?]
        }
        Suite::Theorem4 => {
            let c1 = c1.unwrap_or(c(1.0, 0.0));
            let (a, b) = match pair()? {
                Some(p) => p,
                None => build_two_function_family(c1, &beurling_core::PhaseProfile::flat(), grid)?,
            };
            vec![check_theorem4(&a, &b, c1)?]
        }
        Suite::Identities => match pair()? {
            Some((a, b)) => identity_suite(&a, &b)?,
            None => catalog_identities(grid)?,
        },
        Suite::M0f => vec![check_m0f_identity(c0.unwrap_or(1.0))?],
        Suite::Strip => vec![check_strip_form(beta.unwrap_or(c(1.0, 0.0)), &STRIP_LAMBDAS)?],
        Suite::Falsify => vec![falsification_demo(beta.unwrap_or(c(1.0, 1.0)))?],
        Suite::Classify => match pair()? {
            Some((a, b)) => {
                let label = classify_theorem4prime(&a, &b)?;
                vec![CheckReport::new("classify", 0.0, 0.5)
                    .with("label", label.label())
                    .with("case", label.description())]
            }
            None => vec![classify_witnesses(grid)?],
        },
        Suite::Obstruction => {
            let (a, b) = match pair()? {
                Some(p) => p,
                None => obstruction_pair(grid)?,
            };
            vec![check_obstruction(&a, &b)?]
        }
        Suite::All => {
            let gs = gaussian(grid)?;
            let curve = autocorrelation(&gs, &LambdaSet::DefaultLattice)?;
            let (ff, fg) = build_two_function_family(c(0.0, 1.0), &beurling_core::PhaseProfile::flat(), grid)?;
            let (oe, oo) = obstruction_pair(grid)?;
            let mut v = vec![
                check_theorem1(&curve, &gs, 1)?,
                check_theorem2(&gs, 1.0)?,
                check_m0f_identity(1.0)?,
                check_theorem4(&ff, &fg, c(0.0, 1.0))?,
            ];
            v.extend(catalog_identities(grid)?);
            v.push(check_strip_form(c(1.0, 0.0), &STRIP_LAMBDAS)?);
            v.push(check_strip_form(c(2.0, 0.0), &STRIP_LAMBDAS)?);
            v.push(falsification_demo(c(1.0, 1.0))?);
            v.push(classify_witnesses(grid)?);
            v.push(check_obstruction(&oe, &oo)?);
            v
        }
    })
}

fn catalog_identities(grid: &LogGrid) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (a, b) in catalog_pairs() {
        let pair = format!("{a} | {b}");
        for r in identity_suite(&sample(&a, grid)?, &sample(&b, grid)?)? {
            out.push(r.with("pair", pair.clone()));
        }
    }
    Ok(out)
}
