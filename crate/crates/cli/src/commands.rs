//! Subcommand drivers. Each writes its main output to `out` (or the
//! `--output` file) and notes to `err`.

use std::io::Write;
use std::path::Path;

use hadastick_core::{
    check_stick_figure, format_rational, gorenstein_points, h_vector_of, hadamard_point,
    hilbert_report, intersect_lines, make_profile, parse_rational, residual_b, ruling_planes,
    stick_figure, GorensteinResult, HVector, LinearForm, PointSet, ProjPoint, StickViolation,
};
use serde::Serialize;

use crate::args::{
    CheckSiArgs, GorensteinArgs, HadamardArgs, HfArgs, PointFormat, ReportFormat, StickArgs,
};
use crate::error::CliError;
use crate::io::{
    build_config, detect_format, parse_points, point_strings, points_to_csv, read_file, write_file,
    ConfigDoc,
};

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn note(err: &mut dyn Write, text: &str) {
    let _ = writeln!(err, "{text}");
}

fn parse_h(text: &str) -> Result<HVector, CliError> {
    text.parse::<HVector>().map_err(CliError::Input)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn tuple<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Serialize)]
pub struct PointDocument {
    pub h_vector: Vec<u64>,
    pub config: ConfigDoc,
    pub points: Vec<Vec<String>>,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl PointDocument {
    pub fn new(res: &GorensteinResult, verified: Option<bool>) -> Self {
        PointDocument {
            h_vector: res.h.entries().to_vec(),
            config: ConfigDoc::new(
                res.stick.config(),
                res.stick.row_indices(),
                res.stick.col_indices(),
            ),
            points: res.points.iter().map(point_strings).collect(),
            labels: res.labels.iter().map(ToString::to_string).collect(),
            verified,
        }
    }
}

pub fn cmd_gorenstein(
    args: &GorensteinArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let h = parse_h(&args.h)?;
    let profile = make_profile(&h)?;
    let cfg = build_config(&args.config, profile.rows(), profile.cols())?;
    let res = gorenstein_points(&profile, &cfg)?;
    let measured = if args.verify {
        let ps = PointSet::new(res.points.clone())?;
        let report = h_vector_of(&ps)?;
        Some(
            report
                .h_vector
                .iter()
                .map(|&x| x as u64)
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let verified = measured.as_ref().map(|m| m.as_slice() == h.entries());
    let text = match args.format {
        PointFormat::Json => to_json(&PointDocument::new(&res, verified)),
        PointFormat::Csv => {
            let labels: Vec<String> = res.labels.iter().map(ToString::to_string).collect();
            points_to_csv(&res.points, &labels)?
        }
    };
    emit(out, args.output.as_deref(), &text)?;
    note(
        err,
        &format!("{} points with h-vector {h}", res.points.len()),
    );
    if let Some(m) = measured {
        if verified == Some(true) {
            note(err, &format!("verified: h-vector {}", tuple(&m)));
        } else {
            return Err(CliError::Verification(format!(
                "computed h-vector {} differs from {h}",
                tuple(&m)
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct LineDoc {
    cell: [usize; 2],
    index: [u64; 2],
    forms: [Vec<String>; 2],
}

#[derive(Debug, Serialize)]
struct MeetDoc {
    cells: [[usize; 2]; 2],
    point: Vec<String>,
}

#[derive(Debug, Serialize)]
struct CheckDoc {
    passed: bool,
    pairs_checked: usize,
    meeting_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<String>,
}

#[derive(Debug, Serialize)]
struct StickDocument {
    rows: usize,
    cols: usize,
    config: ConfigDoc,
    lines: Vec<LineDoc>,
    intersections: Vec<MeetDoc>,
    row_planes: Vec<Vec<String>>,
    col_planes: Vec<Vec<String>>,
    check: CheckDoc,
}

fn form_strings(f: &LinearForm) -> Vec<String> {
    f.coeffs().iter().map(ToString::to_string).collect()
}

fn describe(v: &StickViolation) -> String {
    match v {
        StickViolation::SameLine(a, b) => format!("lines {a:?} and {b:?} coincide"),
        StickViolation::MissingMeet(a, b) => format!("lines {a:?} and {b:?} do not meet"),
        StickViolation::ExtraMeet(a, b, p) => format!("lines {a:?} and {b:?} meet at {p}"),
        StickViolation::TriplePoint(cells, p) => format!("lines {cells:?} all pass through {p}"),
    }
}

pub fn cmd_stick(
    args: &StickArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let cfg = build_config(&args.config, args.a, args.b)?;
    let sf = stick_figure(&cfg, args.a, args.b)?;
    let cells: Vec<(usize, usize)> = sf.cells().collect();
    let mut intersections = Vec::new();
    for (x, &first) in cells.iter().enumerate() {
        for &second in &cells[x + 1..] {
            if let Some(p) = intersect_lines(&sf, first, second)? {
                intersections.push((first, second, p));
            }
        }
    }
    let planes = ruling_planes(&sf)?;
    let check = check_stick_figure(&sf)?;
    let doc = StickDocument {
        rows: sf.nrows(),
        cols: sf.ncols(),
        config: ConfigDoc::new(&cfg, sf.row_indices(), sf.col_indices()),
        lines: cells
            .iter()
            .map(|&(r, c)| {
                let l = sf.line(r, c);
                LineDoc {
                    cell: [r, c],
                    index: [sf.row_indices()[r], sf.col_indices()[c]],
                    forms: [form_strings(l.form_a()), form_strings(l.form_b())],
                }
            })
            .collect(),
        intersections: intersections
            .iter()
            .map(|(a, b, p)| MeetDoc {
                cells: [[a.0, a.1], [b.0, b.1]],
                point: point_strings(p),
            })
            .collect(),
        row_planes: planes.row_planes.iter().map(form_strings).collect(),
        col_planes: planes.col_planes.iter().map(form_strings).collect(),
        check: CheckDoc {
            passed: check.passed(),
            pairs_checked: check.pairs_checked,
            meeting_points: check.meeting_points,
            violation: check.violation.as_ref().map(describe),
        },
    };
    let text = match args.format {
        ReportFormat::Json => to_json(&doc),
        ReportFormat::Text => stick_text(&doc),
    };
    emit(out, args.output.as_deref(), &text)?;
    note(err, &format!("{} lines", doc.lines.len()));
    match &doc.check.violation {
        Some(v) => Err(CliError::Verification(format!("stick figure check: {v}"))),
        None => Ok(()),
    }
}

fn stick_text(doc: &StickDocument) -> String {
    let mut s = String::new();
    let mut line = |t: String| {
        s.push_str(&t);
        s.push('\n');
    };
    line(format!(
        "stick figure {}x{}  A = {}  Ia = {}  Ib = {}",
        doc.rows,
        doc.cols,
        doc.config.a.join(","),
        tuple(&doc.config.ia),
        tuple(&doc.config.ib)
    ));
    line("lines:".into());
    for l in &doc.lines {
        line(format!(
            "  ({},{}) [u={} v={}]  {} / {}",
            l.cell[0],
            l.cell[1],
            l.index[0],
            l.index[1],
            l.forms[0].join(","),
            l.forms[1].join(",")
        ));
    }
    line("intersections:".into());
    for m in &doc.intersections {
        line(format!(
            "  ({},{}) x ({},{})  [{}]",
            m.cells[0][0],
            m.cells[0][1],
            m.cells[1][0],
            m.cells[1][1],
            m.point.join(":")
        ));
    }
    line("row planes:".into());
    for (r, p) in doc.row_planes.iter().enumerate() {
        line(format!("  {r}: {}", p.join(",")));
    }
    line("column planes:".into());
    for (c, p) in doc.col_planes.iter().enumerate() {
        line(format!("  {c}: {}", p.join(",")));
    }
    line(match &doc.check.violation {
        None => format!(
            "check: passed ({} pairs, {} meeting points, no triple points)",
            doc.check.pairs_checked, doc.check.meeting_points
        ),
        Some(v) => format!("check: FAILED: {v}"),
    });
    s
}

pub fn cmd_hf(args: &HfArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Result<(), CliError> {
    let text = read_file(&args.input)?;
    let format = args
        .format
        .unwrap_or_else(|| detect_format(&args.input, &text));
    let points = parse_points(&text, format)?;
    let ps = PointSet::new(points).map_err(|e| CliError::Input(e.to_string()))?;
    let report = hilbert_report(&ps, args.max_degree)?;
    let mut s = format!("{} points in P^{}\n d  HF(d)\n", ps.len(), ps.ambient_dim());
    for (d, v) in &report.values {
        s.push_str(&format!("{d:>2}  {v}\n"));
    }
    s.push_str(&format!("h-vector: {}\n", tuple(&report.h_vector)));
    emit(out, None, &s)
}

pub fn cmd_check_si(
    args: &CheckSiArgs,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<(), CliError> {
    let h = parse_h(&args.h)?;
    let profile = match make_profile(&h) {
        Ok(p) => p,
        Err(e) => {
            emit(out, None, &format!("h = {h}: not accepted\n"))?;
            return Err(e.into());
        }
    };
    let residual = residual_b(&profile)?;
    let text = format!(
        "h = {h}: SI-sequence\ns = {}\nt = {}\na = {}\ng = {}\nb = {}\n",
        profile.s(),
        profile.t(),
        tuple(profile.a()),
        tuple(profile.g()),
        tuple(&residual.b)
    );
    emit(out, None, &text)
}

fn parse_point(text: &str) -> Result<ProjPoint, CliError> {
    let coords = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProjPoint::new(&coords)?)
}

pub fn cmd_hadamard(
    args: &HadamardArgs,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<(), CliError> {
    let p = parse_point(&args.p)?;
    let q = parse_point(&args.q)?;
    let r = hadamard_point(&p, &q)?;
    let coords: Vec<String> = r.to_rationals().iter().map(format_rational).collect();
    emit(out, None, &format!("{p} * {q} = [{}]\n", coords.join(":")))
}
