//! Textual syntax for rings, polynomials and matrices.
//!
//! A matrix document looks like
//!
//! ```text
//! # comments run to the end of the line
//! ring differential
//! rows 2 cols 2
//! (z+1)*D + 1; z
//! 0; D^2
//! ```
//!
//! The ring header is one of `differential`, `shift`, `qshift q=<rat>` or
//! `custom sigma=<ratfun> delta=<ratfun>`. Several `rows/cols` blocks may
//! follow one header. Lines outside a block are read as single
//! polynomials.

mod expr;

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{RatFun, RingSpec};
use crate::matrix::OreMatrix;
use crate::ore::OrePoly;

pub use expr::{parse_orepoly_at, parse_ratfun_at, parse_rational_at};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: String) -> Self {
        ParseError { line, col, message }
    }
}

pub fn parse_ratfun(src: &str) -> Result<RatFun, ParseError> {
    parse_ratfun_at(src, 1, 1)
}

pub fn parse_orepoly(src: &str, ring: &Arc<RingSpec>) -> Result<OrePoly, ParseError> {
    parse_orepoly_at(src, ring, 1, 1)
}

/// Parses `ring <kind> ...` (the leading keyword is optional).
pub fn parse_ring(src: &str) -> Result<RingSpec, ParseError> {
    parse_ring_at(src, 1, 1)
}

fn parse_ring_at(src: &str, line: usize, col0: usize) -> Result<RingSpec, ParseError> {
    let lead = src.len() - src.trim_start().len();
    let mut rest = &src[lead..];
    let mut col = col0 + lead;
    if let Some(r) = rest.strip_prefix("ring") {
        if r.is_empty() || r.starts_with(char::is_whitespace) {
            let skip = 4 + (r.len() - r.trim_start().len());
            rest = &rest[skip..];
            col += skip;
        }
    }
    let rest = rest.trim_end();
    let kind_len = rest.find(char::is_whitespace).unwrap_or(rest.len());
    let (kind, args) = rest.split_at(kind_len);
    let args_col = col + kind_len;
    let spec_err = |e: crate::Error| ParseError::new(line, col, e.to_string());
    let expect_empty = |args: &str| {
        if args.trim().is_empty() {
            Ok(())
        } else {
            let off = args.len() - args.trim_start().len();
            Err(ParseError::new(
                line,
                args_col + off,
                format!("unexpected `{}` after ring kind `{kind}`", args.trim()),
            ))
        }
    };
    match kind {
        "differential" => {
            expect_empty(args)?;
            Ok(RingSpec::differential())
        }
        "shift" => {
            expect_empty(args)?;
            Ok(RingSpec::shift())
        }
        "qshift" => {
            let (q, qcol) = key_value(args, "q", line, args_col)?;
            let q = parse_rational_at(q, line, qcol)?;
            RingSpec::q_shift(q).map_err(spec_err)
        }
        "custom" => {
            let sigma_at = args.find("sigma=");
            let delta_at = args.find("delta=");
            let (Some(s), Some(d)) = (sigma_at, delta_at) else {
                return Err(ParseError::new(
                    line,
                    args_col,
                    "custom ring needs `sigma=` and `delta=`".into(),
                ));
            };
            let sigma_src = if s < d { &args[s + 6..d] } else { &args[s + 6..] };
            let delta_src = if d < s { &args[d + 6..s] } else { &args[d + 6..] };
            let sigma = parse_ratfun_at(sigma_src, line, args_col + s + 6)?;
            let delta = parse_ratfun_at(delta_src, line, args_col + d + 6)?;
            RingSpec::custom(&sigma, delta).map_err(spec_err)
        }
        "" => Err(ParseError::new(line, col, "missing ring kind".into())),
        other => Err(ParseError::new(line, col, format!("unknown ring kind `{other}`"))),
    }
}

/// Finds `key=value` in `args` and returns the value with its column.
fn key_value<'a>(
    args: &'a str,
    key: &str,
    line: usize,
    col0: usize,
) -> Result<(&'a str, usize), ParseError> {
    let lead = args.len() - args.trim_start().len();
    let body = args.trim();
    match body.split_once('=') {
        Some((k, v)) if k.trim() == key => {
            let vcol = col0 + lead + k.len() + 1;
            Ok((v, vcol))
        }
        _ => Err(ParseError::new(line, col0 + lead, format!("expected `{key}=<value>`"))),
    }
}

/// A parsed document: one ring, its matrices and any loose polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub ring: Arc<RingSpec>,
    pub matrices: Vec<OreMatrix>,
    pub polys: Vec<OrePoly>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_dims(body: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let words: Vec<&str> = body.split_whitespace().collect();
    let bad = || ParseError::new(line, 1, format!("expected `rows <m> cols <n>`, found `{}`", body.trim()));
    if words.len() != 4 || words[0] != "rows" || words[2] != "cols" {
        return Err(bad());
    }
    let m = words[1].parse().map_err(|_| bad())?;
    let n = words[3].parse().map_err(|_| bad())?;
    Ok((m, n))
}

fn parse_row(
    body: &str,
    ring: &Arc<RingSpec>,
    line: usize,
    cols: usize,
) -> Result<Vec<OrePoly>, ParseError> {
    let mut out = Vec::with_capacity(cols);
    let mut col = 1;
    for piece in body.split(';') {
        out.push(parse_orepoly_at(piece, ring, line, col)?);
        col += piece.chars().count() + 1;
    }
    if out.len() != cols {
        return Err(ParseError::new(
            line,
            1,
            format!("expected {cols} entries separated by `;`, found {}", out.len()),
        ));
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut ring: Option<Arc<RingSpec>> = None;
    let mut matrices = Vec::new();
    let mut polys = Vec::new();
    // (rows, cols, entries so far)
    let mut block: Option<(usize, usize, Vec<OrePoly>)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let first = body.split_whitespace().next().unwrap_or("");
        if first == "ring" {
            if block.is_some() {
                return Err(ParseError::new(line, 1, "ring header inside a matrix block".into()));
            }
            let spec = parse_ring_at(body, line, 1)?;
            match &ring {
                Some(r) if **r != spec => {
                    return Err(ParseError::new(line, 1, "conflicting ring headers".into()))
                }
                Some(_) => {}
                None => ring = Some(Arc::new(spec)),
            }
            continue;
        }
        let Some(r) = ring.as_ref() else {
            return Err(ParseError::new(line, 1, "expected `ring` header".into()));
        };
        if first == "rows" {
            if block.is_some() {
                return Err(ParseError::new(line, 1, "previous matrix block is incomplete".into()));
            }
            let (m, n) = parse_dims(body, line)?;
            block = Some((m, n, Vec::with_capacity(m * n)));
        } else if let Some((_, n, entries)) = block.as_mut() {
            entries.extend(parse_row(body, r, line, *n)?);
        } else {
            polys.push(parse_orepoly_at(body, r, line, 1)?);
        }
        if let Some((m, n, entries)) = &block {
            if entries.len() == m * n {
                let (m, n, entries) = block.take().expect("block is open");
                let mat = OreMatrix::new(r.clone(), m, n, entries)
                    .map_err(|e| ParseError::new(line, 1, e.to_string()))?;
                matrices.push(mat);
            }
        }
    }
    if let Some((m, _, entries)) = &block {
        let n = entries.len();
        return Err(ParseError::new(
            last_line + 1,
            1,
            format!("matrix block ended early: {m} rows expected, {} complete", n / m.max(&1)),
        ));
    }
    let Some(ring) = ring else {
        return Err(ParseError::new(last_line.max(1), 1, "expected `ring` header".into()));
    };
    Ok(Document {
        ring,
        matrices,
        polys,
    })
}

/// Parses a document holding exactly one matrix.
pub fn parse_matrix(text: &str) -> Result<OreMatrix, ParseError> {
    let doc = parse_document(text)?;
    match doc.matrices.len() {
        1 if doc.polys.is_empty() => Ok(doc.matrices.into_iter().next().expect("one matrix")),
        k => Err(ParseError::new(1, 1, format!("expected one matrix, found {k}"))),
    }
}

/// Matrix block without the ring header.
pub fn format_block(m: &OreMatrix) -> String {
    let mut out = format!("rows {} cols {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join("; "));
        out.push('\n');
    }
    out
}

pub fn format_matrix(m: &OreMatrix) -> String {
    format!("ring {}\n{}", m.ring(), format_block(m))
}

/// `name.rows`, `name.cols` and one `name[i,j]` line per entry (1-based).
pub fn format_matrix_kv(name: &str, m: &OreMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{name}.rows={}", m.rows());
    let _ = writeln!(out, "{name}.cols={}", m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let _ = writeln!(out, "{name}[{},{}]={}", i + 1, j + 1, m[(i, j)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Degree;
    use crate::field::{Rational, UPoly};

    #[test]
    fn ratfun_syntax() {
        let x = parse_ratfun("(z^2-1)/(z-1)").unwrap();
        assert_eq!(x, RatFun::from_poly(UPoly::from_i64(&[1, 1])));
        let y = parse_ratfun("7/2*z+1").unwrap();
        assert_eq!(y.to_string(), "7/2*z+1");
        assert_eq!(parse_ratfun("-1/(2*z)").unwrap().to_string(), "(-1/2)/(z)");
        assert!(parse_ratfun("D").is_err());
        assert!(parse_ratfun("1/0").is_err());
    }

    #[test]
    fn orepoly_syntax() {
        let r = Arc::new(RingSpec::differential());
        let p = parse_orepoly("(z+2)*D + D^2 + 1", &r).unwrap();
        assert_eq!(p.degree(), Degree::Finite(2));
        assert_eq!(p.to_string(), "(1) + (z+2)*D + D^2");
        // D z = z D + 1
        let q = parse_orepoly("D*z", &r).unwrap();
        assert_eq!(q.to_string(), "(1) + (z)*D");
        assert_eq!(parse_orepoly("D/2", &r).unwrap().to_string(), "(1/2)*D");
    }

    #[test]
    fn syntax_error_names_token() {
        let r = Arc::new(RingSpec::differential());
        let e = parse_orepoly("(z+1)*D + garbage", &r).unwrap_err();
        assert!(e.message.contains("garbage"), "{e}");
        assert_eq!((e.line, e.col), (1, 11));
        let e = parse_orepoly("z/D", &r).unwrap_err();
        assert!(e.message.contains("division"));
    }

    #[test]
    fn ring_headers() {
        assert_eq!(parse_ring("ring differential").unwrap(), RingSpec::differential());
        assert_eq!(parse_ring("ring shift").unwrap(), RingSpec::shift());
        let q = parse_ring("ring qshift q=1/2").unwrap();
        assert_eq!(q, RingSpec::q_shift(Rational::new(1.into(), 2.into())).unwrap());
        assert_eq!(q.to_string(), "qshift q=1/2");
        let c = parse_ring("ring custom sigma=z delta=1").unwrap();
        assert_eq!(parse_ring(&format!("ring {c}")).unwrap(), c);
        let e = parse_ring("ring weyl").unwrap_err();
        assert!(e.message.contains("weyl"));
    }

    #[test]
    fn document_round_trip() {
        let text = "# sample\nring shift\nrows 2 cols 2\nD; z\n0; (z+1)/z*D^2 # trailing\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        let e = parse_matrix("ring shift\nrows 1 cols 2\nD\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_matrix("rows 1 cols 1\nD\n").is_err());
    }

    #[test]
    fn loose_polynomials() {
        let doc = parse_document("ring differential\nD^2\nD\n").unwrap();
        assert_eq!(doc.polys.len(), 2);
        assert!(doc.matrices.is_empty());
    }
}
