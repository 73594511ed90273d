//! CSV and JSON files.
//!
//! Every CSV starts with `#` comment lines (a `# config:` line recording the
//! settings that produced it, plus format metadata such as `# dim=n` or
//! `# grid=u_min,u_max,count`), then a header row and one row per sample.
//! Numbers are written as `{:.16e}`, 17 significant digits, so a file read
//! back reproduces the in-memory values exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;

use crate::construct::PhaseProfile;
use crate::corefn::{LogGrid, SampledFunction};
use crate::dilate::CorrelationCurve;
use crate::error::{Error, Result};
use crate::mellin::MellinSpectrum;

pub const SAMPLES_HEADER: [&str; 5] = ["u", "pos_re", "pos_im", "neg_re", "neg_im"];
pub const CURVE_HEADER: [&str; 3] = ["lambda", "re", "im"];
pub const SPECTRUM_HEADER: [&str; 5] = ["tau", "m0_re", "m0_im", "m1_re", "m1_im"];
pub const PHASE_HEADER: [&str; 2] = ["tau", "theta"];

/// A parsed CSV body plus its comment lines (without the leading `#`).
struct Table {
    comments: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    fn meta(&self, key: &str) -> Option<&str> {
        self.comments.iter().find_map(|c| {
            c.trim()
                .strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .map(str::trim)
        })
    }
}

fn read_table(path: &Path, header: &[&str]) -> Result<Table> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let comments = text
        .lines()
        .filter_map(|l| l.strip_prefix('#'))
        .map(str::to_owned)
        .collect();
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let got = rdr
        .headers()
        .map_err(|e| Error::format(path, e.to_string()))?
        .clone();
    if got.len() != header.len() || got.iter().zip(header).any(|(a, b)| a != *b) {
        return Err(Error::format(
            path,
            format!("expected header '{}', found '{}'", header.join(","), got.iter().collect::<Vec<_>>().join(",")),
        ));
    }
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::format(path, e.to_string()))?;
        let row = rec
            .iter()
            .map(|s| {
                s.parse::<f64>().map_err(|_| {
                    Error::format(path, format!("row {}: cannot parse '{s}' as a number", i + 1))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != header.len() {
            return Err(Error::format(path, format!("row {} has {} fields", i + 1, row.len())));
        }
        rows.push(row);
    }
    Ok(Table { comments, rows })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn preamble(config: &str, extra: &[String], header: &[&str]) -> String {
    let mut s = String::new();
    for line in config.lines() {
        let _ = writeln!(s, "# config: {line}");
    }
    for line in extra {
        let _ = writeln!(s, "# {line}");
    }
    let _ = writeln!(s, "{}", header.join(","));
    s
}

fn num(s: &mut String, x: f64) {
    let _ = write!(s, "{x:.16e}");
}

fn row(s: &mut String, xs: &[f64]) {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        num(s, *x);
    }
    s.push('\n');
}

/// Writes `f` as `u,pos_re,pos_im,neg_re,neg_im`.
pub fn write_samples(path: impl AsRef<Path>, f: &SampledFunction, config: &str) -> Result<()> {
    let g = f.grid();
    let meta = vec![format!(
        "grid={:.16e},{:.16e},{}",
        g.u_min(),
        g.u_max(),
        g.count()
    )];
    let mut s = preamble(config, &meta, &SAMPLES_HEADER);
    for (k, u) in g.nodes().enumerate() {
        let (p, n) = (f.pos()[k], f.neg()[k]);
        row(&mut s, &[u, p.re, p.im, n.re, n.im]);
    }
    write_text(path.as_ref(), &s)
}

/// Reads a sample file. The grid comes from a `# grid=` comment when present,
/// otherwise from the `u` column, which must then be uniformly spaced.
pub fn read_samples(path: impl AsRef<Path>) -> Result<SampledFunction> {
    let path = path.as_ref();
    let t = read_table(path, &SAMPLES_HEADER)?;
    let n = t.rows.len();
    let grid = match t.meta("grid") {
        Some(spec) => parse_grid(spec).map_err(|e| Error::format(path, e.to_string()))?,
        None => {
            if n < 2 {
                return Err(Error::format(path, "need at least two rows"));
            }
            let u0 = t.rows[0][0];
            let du = (t.rows[n - 1][0] - u0) / (n - 1) as f64;
            LogGrid::new(u0, u0 + n as f64 * du, n).map_err(|e| Error::format(path, e.to_string()))?
        }
    };
    if grid.count() != n {
        return Err(Error::format(
            path,
            format!("grid has {} nodes but the file has {n} rows", grid.count()),
        ));
    }
    for (k, r) in t.rows.iter().enumerate() {
        if (r[0] - grid.node(k)).abs() > 1e-9 * grid.spacing() {
            return Err(Error::format(
                path,
                format!("row {}: u = {} is off the uniform grid (expected {})", k + 1, r[0], grid.node(k)),
            ));
        }
    }
    let pos = t.rows.iter().map(|r| Complex64::new(r[1], r[2])).collect();
    let neg = t.rows.iter().map(|r| Complex64::new(r[3], r[4])).collect();
    SampledFunction::new(grid, pos, neg)
}

/// Parses `u_min,u_max,count`.
pub fn parse_grid(spec: &str) -> Result<LogGrid> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(Error::InvalidGrid(format!("expected 'u_min,u_max,count', got '{spec}'")));
    };
    let bad = || Error::InvalidGrid(format!("cannot parse grid '{spec}'"));
    let u_min = a.parse::<f64>().map_err(|_| bad())?;
    let u_max = b.parse::<f64>().map_err(|_| bad())?;
    let count = c.parse::<usize>().map_err(|_| bad())?;
    LogGrid::new(u_min, u_max, count)
}

/// Writes a curve as `lambda,re,im` with a `# dim=n` line.
pub fn write_curve(path: impl AsRef<Path>, curve: &CorrelationCurve, config: &str) -> Result<()> {
    let mut s = preamble(config, &[format!("dim={}", curve.dim())], &CURVE_HEADER);
    for (l, v) in curve.iter() {
        row(&mut s, &[l, v.re, v.im]);
    }
    write_text(path.as_ref(), &s)
}

/// Reads a curve file; a missing `# dim=` line means `n = 1`.
pub fn read_curve(path: impl AsRef<Path>) -> Result<CorrelationCurve> {
    let path = path.as_ref();
    let t = read_table(path, &CURVE_HEADER)?;
    let dim = match t.meta("dim") {
        Some(d) => d
            .parse::<usize>()
            .map_err(|_| Error::format(path, format!("bad dim '{d}'")))?,
        None => 1,
    };
    let lambdas = t.rows.iter().map(|r| r[0]).collect();
    let values = t.rows.iter().map(|r| Complex64::new(r[1], r[2])).collect();
    CorrelationCurve::new(lambdas, values, dim).map_err(|e| Error::format(path, e.to_string()))
}

/// Like [`read_curve`], rejecting curves of any dimension but `expected`.
pub fn read_curve_dim(path: impl AsRef<Path>, expected: usize) -> Result<CorrelationCurve> {
    let c = read_curve(path)?;
    if c.dim() != expected {
        return Err(Error::DimensionMismatch { curve: c.dim(), expected });
    }
    Ok(c)
}

/// Writes a spectrum as `tau,m0_re,m0_im,m1_re,m1_im`.
pub fn write_spectrum(path: impl AsRef<Path>, spec: &MellinSpectrum, config: &str) -> Result<()> {
    let mut s = preamble(config, &[], &SPECTRUM_HEADER);
    for ((t, a), b) in spec.taus().iter().zip(spec.m0()).zip(spec.m1()) {
        row(&mut s, &[*t, a.re, a.im, b.re, b.im]);
    }
    write_text(path.as_ref(), &s)
}

pub fn read_spectrum(path: impl AsRef<Path>) -> Result<MellinSpectrum> {
    let path = path.as_ref();
    let t = read_table(path, &SPECTRUM_HEADER)?;
    MellinSpectrum::new(
        t.rows.iter().map(|r| r[0]).collect(),
        t.rows.iter().map(|r| Complex64::new(r[1], r[2])).collect(),
        t.rows.iter().map(|r| Complex64::new(r[3], r[4])).collect(),
    )
}

/// Reads a phase profile: JSON (`.json`) in the tagged form of
/// [`PhaseProfile`], anything else as CSV `tau,theta`.
pub fn read_phase_profile(path: impl AsRef<Path>) -> Result<PhaseProfile> {
    let path = path.as_ref();
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let p: PhaseProfile =
            serde_json::from_str(&text).map_err(|e| Error::format(path, e.to_string()))?;
        if let PhaseProfile::Samples { taus, values } = p {
            return PhaseProfile::samples(taus, values);
        }
        return Ok(p);
    }
    let t = read_table(path, &PHASE_HEADER)?;
    PhaseProfile::samples(
        t.rows.iter().map(|r| r[0]).collect(),
        t.rows.iter().map(|r| r[1]).collect(),
    )
    .map_err(|e| Error::format(path, e.to_string()))
}

/// Writes any serializable value as pretty JSON.
pub fn write_json<T: serde::Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::format(path, e.to_string()))?;
    write_text(path, &(text + "\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corefn::{sample, FunctionSpec};
    use crate::dilate::{autocorrelation, LambdaSet};

    fn small() -> LogGrid {
        LogGrid::symmetric(8.0, 64).unwrap()
    }

    #[test]
    fn samples_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.csv");
        let f = sample(&FunctionSpec::gaussian(Complex64::new(1.0, 0.5)).unwrap(), &small()).unwrap();
        write_samples(&p, &f, "test").unwrap();
        let back = read_samples(&p).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn samples_without_grid_comment() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.csv");
        let f = sample(&FunctionSpec::boxcar(1.0, 2.0).unwrap(), &small()).unwrap();
        write_samples(&p, &f, "").unwrap();
        let text: String = fs::read_to_string(&p)
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| format!("{l}\n"))
            .collect();
        fs::write(&p, text).unwrap();
        let back = read_samples(&p).unwrap();
        assert!(back.grid().same_as(&small()));
        assert_eq!(back.pos(), f.pos());
    }

    #[test]
    fn curve_round_trip_is_exact() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("F.csv");
        let f = sample(&FunctionSpec::gaussian(Complex64::new(1.0, 1.0)).unwrap(), &small()).unwrap();
        let c = autocorrelation(&f, &LambdaSet::DefaultLattice).unwrap();
        write_curve(&p, &c, "grid=small").unwrap();
        assert_eq!(read_curve(&p).unwrap(), c);
        assert!(matches!(
            read_curve_dim(&p, 2),
            Err(Error::DimensionMismatch { curve: 1, expected: 2 })
        ));
    }

    #[test]
    fn malformed_files() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.csv");
        fs::write(&p, "lambda,re\n1,2\n").unwrap();
        assert!(matches!(read_curve(&p), Err(Error::Format { .. })));
        fs::write(&p, "lambda,re,im\n1,x,2\n").unwrap();
        assert!(matches!(read_curve(&p), Err(Error::Format { .. })));
        assert!(matches!(
            read_curve(dir.path().join("missing.csv")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn phase_profiles() {
        let dir = tempfile::tempdir().unwrap();
        let j = dir.path().join("p.json");
        fs::write(&j, r#"{"type":"band_limited","cosine":[0.1],"sine":[0.2,0.3]}"#).unwrap();
        assert_eq!(
            read_phase_profile(&j).unwrap(),
            PhaseProfile::band_limited(vec![0.1], vec![0.2, 0.3], 1.0)
        );
        let c = dir.path().join("p.csv");
        fs::write(&c, "# a comment\ntau,theta\n-1,0.5\n1,1.5\n").unwrap();
        assert_eq!(read_phase_profile(&c).unwrap().eval(0.0), 1.0);
    }

    #[test]
    fn grid_strings() {
        assert_eq!(parse_grid("-30,30,4096").unwrap(), LogGrid::default());
        assert!(parse_grid("1,2").is_err());
        assert!(parse_grid("0,1,100").is_err());
    }
}
