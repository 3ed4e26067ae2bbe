//! Graph readers and the CSV writers for every command.
//!
//! Two graph formats are accepted and told apart by content: a file whose
//! first line starts with `#n=` is an edge list, anything else is an
//! adjacency matrix.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use netdist_core::analysis::{Embedding, ScatterRow};
use netdist_core::generators::{FamilyScan, ProcessTrace};
use netdist_core::{DistanceMatrix, Graph, GramMatrix, Measure, SquareMatrix};

use crate::error::{AppError, Result};

/// Reads one graph, choosing the format from the first line.
pub fn read_graph(path: &Path, directed: bool) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_graph(&text, path, directed)
}

/// Parses graph text. `directed` applies to adjacency matrices only; an
/// edge list carries its own flag, and a conflicting request is an error.
pub fn parse_graph(text: &str, path: &Path, directed: bool) -> Result<Graph> {
    if text.trim_start().starts_with("#n=") {
        let g = parse_edge_list(text, path)?;
        if directed && !g.is_directed() {
            return Err(AppError::parse(path, 1, "file header declares an undirected graph"));
        }
        Ok(g)
    } else {
        parse_adjacency(text, path, directed)
    }
}

fn parse_adjacency(text: &str, path: &Path, directed: bool) -> Result<Graph> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            AppError::parse(path, line, e.to_string())
        })?;
        let line = record.position().map_or(rows.len() + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .map(|field| {
                field
                    .parse::<f64>()
                    .map_err(|_| AppError::parse(path, line, format!("not a number: {field:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(AppError::parse(path, 1, "no adjacency rows"));
    }
    Graph::from_rows(&rows, directed).map_err(|e| AppError::parse(path, 0, e.to_string()))
}

fn parse_header(line: &str, path: &Path) -> Result<(usize, bool)> {
    let mut n = None;
    let mut directed = None;
    for token in line.trim_start_matches('#').split_whitespace() {
        let bad = || AppError::parse(path, 1, format!("bad header token {token:?}"));
        match token.split_once('=') {
            Some(("n", v)) => n = Some(v.parse::<usize>().map_err(|_| bad())?),
            Some(("directed", "0")) => directed = Some(false),
            Some(("directed", "1")) => directed = Some(true),
            _ => return Err(bad()),
        }
    }
    match (n, directed) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(AppError::parse(path, 1, "header must be \"#n=<N> directed=<0|1>\"")),
    }
}

fn parse_edge_list(text: &str, path: &Path) -> Result<Graph> {
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| l.trim().is_empty());
    let (_, header) = lines.next().unwrap_or((0, ""));
    let (n, directed) = parse_header(header.trim(), path)?;
    let mut m = SquareMatrix::zeros(n);
    for (idx, raw) in lines {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split('\t').map(str::trim).collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(AppError::parse(path, line, "expected \"i<TAB>j[<TAB>w]\""));
        }
        let index = |s: &str| -> Result<usize> {
            let v: usize = s.parse().map_err(|_| AppError::parse(path, line, format!("bad vertex {s:?}")))?;
            if v >= n {
                return Err(AppError::parse(path, line, format!("vertex {v} out of range for n={n}")));
            }
            Ok(v)
        };
        let (i, j) = (index(fields[0])?, index(fields[1])?);
        let w = match fields.get(2) {
            Some(s) => s.parse::<f64>().map_err(|_| AppError::parse(path, line, format!("bad weight {s:?}")))?,
            None => 1.0,
        };
        // Directed edge i -> j lives in column i, row j.
        let (r, c) = if directed { (j, i) } else { (i, j) };
        if m.get(r, c) != 0.0 || (!directed && m.get(c, r) != 0.0) {
            return Err(AppError::parse(path, line, format!("edge ({i}, {j}) listed twice")));
        }
        m.set(r, c, w);
        if !directed {
            m.set(c, r, w);
        }
    }
    Graph::from_matrix(m, directed).map_err(|e| AppError::parse(path, 0, e.to_string()))
}

/// Expands the `--input` arguments: a single directory becomes its regular
/// files in lexicographic order, anything else is taken as a list of files.
pub fn input_files(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    if let [dir] = inputs {
        if dir.is_dir() {
            let mut files = Vec::new();
            for entry in fs::read_dir(dir).map_err(|e| AppError::io(dir, e))? {
                let p = entry.map_err(|e| AppError::io(dir, e))?.path();
                if p.is_file() {
                    files.push(p);
                }
            }
            files.sort();
            if files.is_empty() {
                return Err(AppError::Input(format!("{}: directory holds no graph files", dir.display())));
            }
            return Ok(files);
        }
    }
    if inputs.is_empty() {
        return Err(AppError::Input("no input files".into()));
    }
    Ok(inputs.to_vec())
}

/// Label for a graph file: its stem.
pub fn label_of(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// C-style `%.{sig}g`.
pub fn format_g(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp) = sci.split_once('e').unwrap_or((&sci, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    if exp < -4 || exp >= sig as i32 {
        let m = strip_zeros(mantissa);
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `sig` significant digits with trailing zeros kept; exact zero prints as `0`.
pub fn format_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let sig = sig.max(1);
    let exp = format!("{:.*e}", sig - 1, v).split_once('e').and_then(|(_, e)| e.parse::<i32>().ok()).unwrap_or(0);
    if exp < -4 || exp >= sig as i32 {
        format!("{:.*e}", sig - 1, v)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(false).from_writer(out)
}

fn csv_err(e: csv::Error) -> AppError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => AppError::Output(io),
        other => AppError::Output(std::io::Error::other(format!("{other:?}"))),
    }
}

fn write_square<W: Write>(out: &mut W, labels: &[String], row: impl Fn(usize) -> Vec<f64>) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(labels).map_err(csv_err)?;
    for i in 0..labels.len() {
        w.write_record(row(i).iter().map(|&v| format_g(v, 9))).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_distance_matrix<W: Write>(mut out: W, d: &DistanceMatrix) -> Result<()> {
    write_square(&mut out, d.labels(), |i| d.row(i).to_vec())
}

/// Reads a matrix written by [`write_distance_matrix`].
pub fn read_distance_matrix(path: &Path) -> Result<DistanceMatrix> {
    let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let labels: Vec<String> = reader
        .headers()
        .map_err(|e| AppError::parse(path, 1, e.to_string()))?
        .iter()
        .map(str::to_owned)
        .collect();
    let n = labels.len();
    let mut values = Vec::with_capacity(n * n);
    let mut rows = 0;
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            AppError::parse(path, line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        for field in record.iter() {
            values.push(field.parse::<f64>().map_err(|_| AppError::parse(path, line, format!("not a number: {field:?}")))?);
        }
        rows += 1;
    }
    if rows != n || n == 0 {
        return Err(AppError::parse(path, 0, format!("expected {n} rows under the label header, found {rows}")));
    }
    DistanceMatrix::from_full(labels, values, Measure::Him, 1.0).map_err(|e| AppError::parse(path, 0, e.to_string()))
}

pub fn write_gram<W: Write>(mut out: W, g: &GramMatrix, labels: &[String]) -> Result<()> {
    writeln!(
        out,
        "#kernel_gamma={} xi={} min_eig={} psd={}",
        format_g(g.kernel_gamma, 9),
        format_g(g.xi, 9),
        format_g(g.min_eigenvalue, 9),
        g.psd
    )?;
    write_square(&mut out, labels, |i| g.values.row(i).to_vec())
}

pub fn write_trace<W: Write>(out: W, t: &ProcessTrace) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["step", "h", "im", "him"]).map_err(csv_err)?;
    for s in &t.steps {
        w.write_record([s.step.to_string(), format_g(s.h, 9), format_g(s.im, 9), format_g(s.him, 9)])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_family<W: Write>(mut out: W, scan: &FamilyScan) -> Result<()> {
    {
        let mut w = csv_writer(&mut out);
        w.write_record(["sample", "h", "im", "him"]).map_err(csv_err)?;
        for (k, r) in scan.reports.iter().enumerate() {
            w.write_record([k.to_string(), format_g(r.h, 9), format_g(r.im, 9), format_g(r.him, 9)])
                .map_err(csv_err)?;
        }
        w.flush()?;
    }
    writeln!(out, "#model={} n={} count={} seed={}", scan.model, scan.n, scan.reports.len(), scan.seed)?;
    for (name, (mean, sd)) in ["h", "im", "him"].iter().zip(scan.summary()) {
        writeln!(out, "#{name} mean={} sd={}", format_g(mean, 9), format_g(sd, 9))?;
    }
    Ok(())
}

fn axis_names(dim: usize) -> Vec<String> {
    match dim {
        1..=3 => ["x", "y", "z"][..dim].iter().map(|s| s.to_string()).collect(),
        _ => (1..=dim).map(|k| format!("x{k}")).collect(),
    }
}

pub fn write_embedding<W: Write>(mut out: W, e: &Embedding, labels: &[String]) -> Result<()> {
    let dim = e.points.first().map_or(0, Vec::len);
    {
        let mut w = csv_writer(&mut out);
        let mut header = vec!["label".to_string()];
        header.extend(axis_names(dim));
        w.write_record(&header).map_err(csv_err)?;
        for (label, p) in labels.iter().zip(&e.points) {
            let mut rec = vec![label.clone()];
            rec.extend(p.iter().map(|&v| format_g(v, 9)));
            w.write_record(&rec).map_err(csv_err)?;
        }
        w.flush()?;
    }
    writeln!(out, "#stress={}", format_g(e.stress, 9))?;
    Ok(())
}

pub fn write_scatter<W: Write>(out: W, rows: &[ScatterRow]) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["mcc_dissim", "h", "im", "him"]).map_err(csv_err)?;
    for r in rows {
        w.write_record([format_g(r.mcc_dissim, 9), format_g(r.h, 9), format_g(r.im, 9), format_g(r.him, 9)])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Adjacency CSV of an unweighted or weighted graph.
pub fn write_adjacency<W: Write>(out: W, g: &Graph) -> Result<()> {
    let mut w = csv_writer(out);
    for i in 0..g.n() {
        w.write_record(g.weights().row(i).iter().map(|&v| format_g(v, 9))).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Opens `path` for writing, or stdout when absent.
pub fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = fs::File::create(p).map_err(|e| AppError::io(p, e))?;
            Ok(Box::new(std::io::BufWriter::new(f)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout().lock()))),
    }
}
