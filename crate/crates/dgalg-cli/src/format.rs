//! The structured-text file formats: algebras, bimodules and quivers.
//! One canonical human-writable format each; the exact grammars are
//! documented in docs/file-formats.md. Serialization is canonical, so
//! parse(serialize(A)) reproduces A with identical structure constants.

use dgalg::builders::{Arrow, PathComb, QuiverPresentation};
use dgalg::dga::{Bimodule, DGAlgebra, LinComb};
use dgalg::exactlin::{FieldSpec, Mat, Scalar};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("algebra fails validation: {0}")]
    Validation(String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Splits a file into (line number, trimmed content), skipping comments.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_field(token: &str, rest: &[&str], line: usize) -> Result<FieldSpec, ParseError> {
    match token {
        "Q" => Ok(FieldSpec::Rationals),
        "Fp" => {
            let p = rest
                .first()
                .ok_or_else(|| syntax(line, "expected `field Fp <prime>`"))?
                .parse::<u64>()
                .map_err(|_| syntax(line, "prime must be an integer"))?;
            FieldSpec::prime_field(p).map_err(|e| syntax(line, e.to_string()))
        }
        other => Err(syntax(line, format!("unknown field `{other}` (use Q or Fp <p>)"))),
    }
}

pub fn field_to_string(field: FieldSpec) -> String {
    match field {
        FieldSpec::Rationals => "Q".to_string(),
        FieldSpec::PrimeField(p) => format!("Fp {p}"),
    }
}

/// Parses a linear combination `c*label + c*label + ...`; bare labels mean
/// coefficient one and `0` is the empty combination.
fn parse_lincomb(
    field: FieldSpec,
    labels: &BTreeMap<String, usize>,
    text: &str,
    line: usize,
) -> Result<LinComb, ParseError> {
    let text = text.trim();
    if text == "0" {
        return Ok(LinComb::new());
    }
    let mut out = LinComb::new();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(syntax(line, "empty term in linear combination"));
        }
        let (coef, label) = match term.split_once('*') {
            Some((c, l)) if field.parse(c.trim()).is_ok() => {
                (field.parse(c.trim()).unwrap(), l.trim())
            }
            _ => (field.one(), term),
        };
        let idx = *labels
            .get(label)
            .ok_or_else(|| syntax(line, format!("unknown basis label `{label}`")))?;
        if !coef.is_zero() {
            out.push((idx, coef));
        }
    }
    // merge duplicate labels
    out.sort_by_key(|(i, _)| *i);
    let mut merged = LinComb::new();
    for (i, c) in out {
        match merged.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &c,
            _ => merged.push((i, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    Ok(merged)
}

fn lincomb_to_string(alg_labels: &[String], comb: &[(usize, Scalar)]) -> String {
    if comb.is_empty() {
        return "0".to_string();
    }
    comb.iter()
        .map(|(i, c)| format!("{c}*{}", alg_labels[*i]))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn check_label(label: &str, line: usize) -> Result<(), ParseError> {
    if label.is_empty() || label.contains(char::is_whitespace) || label.contains('+') {
        return Err(syntax(line, format!("invalid label `{label}`")));
    }
    Ok(())
}

/// Parses an algebra file and validates the result.
pub fn parse_algebra(text: &str) -> Result<DGAlgebra, ParseError> {
    let lines = content_lines(text);
    let mut iter = lines.iter();
    let Some(&(l0, header)) = iter.next() else {
        return Err(syntax(0, "empty file"));
    };
    if header != "dgalgebra v1" {
        return Err(syntax(l0, "expected header `dgalgebra v1`"));
    }
    let mut field: Option<FieldSpec> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut degrees: Vec<i64> = Vec::new();
    let mut label_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut unit_line: Option<(usize, String)> = None;
    let mut mult_lines: Vec<(usize, String, String, String)> = Vec::new();
    let mut diff_lines: Vec<(usize, String, String)> = Vec::new();

    for &(ln, line) in iter {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "field" => {
                field = Some(parse_field(
                    tokens.get(1).ok_or_else(|| syntax(ln, "missing field kind"))?,
                    &tokens[2..],
                    ln,
                )?);
            }
            "basis" => {
                let label = tokens
                    .get(1)
                    .ok_or_else(|| syntax(ln, "expected `basis <label> <degree>`"))?;
                check_label(label, ln)?;
                let degree = tokens
                    .get(2)
                    .ok_or_else(|| syntax(ln, "missing degree"))?
                    .parse::<i64>()
                    .map_err(|_| syntax(ln, "degree must be an integer"))?;
                if label_index.contains_key(*label) {
                    return Err(syntax(ln, format!("duplicate basis label `{label}`")));
                }
                label_index.insert(label.to_string(), labels.len());
                labels.push(label.to_string());
                degrees.push(degree);
            }
            "unit" => {
                let rest = line["unit".len()..].trim().to_string();
                unit_line = Some((ln, rest));
            }
            "mult" => {
                let (head, comb) = line
                    .split_once('=')
                    .ok_or_else(|| syntax(ln, "expected `mult <l> <r> = <lincomb>`"))?;
                let parts: Vec<&str> = head.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(syntax(ln, "expected `mult <l> <r> = <lincomb>`"));
                }
                mult_lines.push((ln, parts[1].into(), parts[2].into(), comb.trim().into()));
            }
            "diff" => {
                let (head, comb) = line
                    .split_once('=')
                    .ok_or_else(|| syntax(ln, "expected `diff <label> = <lincomb>`"))?;
                let parts: Vec<&str> = head.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(syntax(ln, "expected `diff <label> = <lincomb>`"));
                }
                diff_lines.push((ln, parts[1].into(), comb.trim().into()));
            }
            other => return Err(syntax(ln, format!("unknown directive `{other}`"))),
        }
    }

    let field = field.ok_or_else(|| syntax(l0, "missing `field` line"))?;
    let dim = labels.len();
    let (ul, utext) = unit_line.ok_or_else(|| syntax(l0, "missing `unit` line"))?;
    let unit_comb = parse_lincomb(field, &label_index, &utext, ul)?;
    let mut unit = vec![field.zero(); dim];
    for (i, c) in unit_comb {
        unit[i] = c;
    }
    let mut mult = vec![vec![LinComb::new(); dim]; dim];
    for (ln, l, r, comb) in mult_lines {
        let li = *label_index
            .get(&l)
            .ok_or_else(|| syntax(ln, format!("unknown basis label `{l}`")))?;
        let ri = *label_index
            .get(&r)
            .ok_or_else(|| syntax(ln, format!("unknown basis label `{r}`")))?;
        mult[li][ri] = parse_lincomb(field, &label_index, &comb, ln)?;
    }
    let mut diff = Mat::zeros(field, dim, dim);
    for (ln, l, comb) in diff_lines {
        let li = *label_index
            .get(&l)
            .ok_or_else(|| syntax(ln, format!("unknown basis label `{l}`")))?;
        for (i, c) in parse_lincomb(field, &label_index, &comb, ln)? {
            diff.set(i, li, c);
        }
    }
    let algebra = DGAlgebra::new(field, labels, degrees, unit, mult, diff);
    let report = algebra.validate();
    if !report.is_empty() {
        let codes: Vec<String> = report.iter().map(|v| v.to_string()).collect();
        return Err(ParseError::Validation(codes.join("; ")));
    }
    Ok(algebra)
}

/// Canonical serialization; stable under round trips.
pub fn serialize_algebra(alg: &DGAlgebra) -> String {
    let mut out = String::new();
    out.push_str("dgalgebra v1\n");
    let _ = writeln!(out, "field {}", field_to_string(alg.field()));
    for i in 0..alg.dim() {
        let _ = writeln!(out, "basis {} {}", alg.label(i), alg.degrees()[i]);
    }
    let unit = dgalg::dga::sparse_from_dense(alg.unit());
    let _ = writeln!(out, "unit {}", lincomb_to_string(alg.labels(), &unit));
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let comb = alg.mult_basis(i, j);
            if comb.is_empty() {
                continue;
            }
            let _ = writeln!(
                out,
                "mult {} {} = {}",
                alg.label(i),
                alg.label(j),
                lincomb_to_string(alg.labels(), comb)
            );
        }
    }
    for j in 0..alg.dim() {
        let col = alg.diff().col_vec(j);
        let comb = dgalg::dga::sparse_from_dense(&col);
        if comb.is_empty() {
            continue;
        }
        let _ = writeln!(out, "diff {} = {}", alg.label(j), lincomb_to_string(alg.labels(), &comb));
    }
    out
}

/// Parses a bimodule file against the two algebras it acts between.
pub fn parse_bimodule(
    text: &str,
    r: &DGAlgebra,
    s: &DGAlgebra,
) -> Result<Bimodule, ParseError> {
    let lines = content_lines(text);
    let mut iter = lines.iter();
    let Some(&(l0, header)) = iter.next() else {
        return Err(syntax(0, "empty file"));
    };
    if header != "dgbimodule v1" {
        return Err(syntax(l0, "expected header `dgbimodule v1`"));
    }
    let field = r.field();
    let mut labels: Vec<String> = Vec::new();
    let mut degrees: Vec<i64> = Vec::new();
    let mut t_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut left_lines = Vec::new();
    let mut right_lines = Vec::new();
    let mut diff_lines = Vec::new();
    for &(ln, line) in iter {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "basis" => {
                let label = tokens
                    .get(1)
                    .ok_or_else(|| syntax(ln, "expected `basis <label> <degree>`"))?;
                check_label(label, ln)?;
                let degree = tokens
                    .get(2)
                    .ok_or_else(|| syntax(ln, "missing degree"))?
                    .parse::<i64>()
                    .map_err(|_| syntax(ln, "degree must be an integer"))?;
                if t_index.contains_key(*label) {
                    return Err(syntax(ln, format!("duplicate label `{label}`")));
                }
                t_index.insert(label.to_string(), labels.len());
                labels.push(label.to_string());
                degrees.push(degree);
            }
            "left" | "right" => {
                let (head, comb) = line
                    .split_once('=')
                    .ok_or_else(|| syntax(ln, "expected `<side> <x> <y> = <lincomb>`"))?;
                let parts: Vec<&str> = head.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(syntax(ln, "expected `<side> <x> <y> = <lincomb>`"));
                }
                if tokens[0] == "left" {
                    left_lines.push((ln, parts[1].to_string(), parts[2].to_string(), comb.trim().to_string()));
                } else {
                    right_lines.push((ln, parts[1].to_string(), parts[2].to_string(), comb.trim().to_string()));
                }
            }
            "diff" => {
                let (head, comb) = line
                    .split_once('=')
                    .ok_or_else(|| syntax(ln, "expected `diff <label> = <lincomb>`"))?;
                let parts: Vec<&str> = head.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(syntax(ln, "expected `diff <label> = <lincomb>`"));
                }
                diff_lines.push((ln, parts[1].to_string(), comb.trim().to_string()));
            }
            other => return Err(syntax(ln, format!("unknown directive `{other}`"))),
        }
    }
    let dim = labels.len();
    let s_index: BTreeMap<String, usize> =
        s.labels().iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let r_index: BTreeMap<String, usize> =
        r.labels().iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let mut left = vec![Mat::zeros(field, dim, dim); s.dim()];
    for (ln, s_label, t_label, comb) in left_lines {
        let si = *s_index
            .get(&s_label)
            .ok_or_else(|| syntax(ln, format!("unknown S basis label `{s_label}`")))?;
        let ti = *t_index
            .get(&t_label)
            .ok_or_else(|| syntax(ln, format!("unknown bimodule label `{t_label}`")))?;
        for (i, c) in parse_lincomb(field, &t_index, &comb, ln)? {
            left[si].set(i, ti, c);
        }
    }
    let mut right = vec![Mat::zeros(field, dim, dim); r.dim()];
    for (ln, t_label, r_label, comb) in right_lines {
        let ti = *t_index
            .get(&t_label)
            .ok_or_else(|| syntax(ln, format!("unknown bimodule label `{t_label}`")))?;
        let ri = *r_index
            .get(&r_label)
            .ok_or_else(|| syntax(ln, format!("unknown R basis label `{r_label}`")))?;
        for (i, c) in parse_lincomb(field, &t_index, &comb, ln)? {
            right[ri].set(i, ti, c);
        }
    }
    let mut diff = Mat::zeros(field, dim, dim);
    for (ln, t_label, comb) in diff_lines {
        let ti = *t_index
            .get(&t_label)
            .ok_or_else(|| syntax(ln, format!("unknown bimodule label `{t_label}`")))?;
        for (i, c) in parse_lincomb(field, &t_index, &comb, ln)? {
            diff.set(i, ti, c);
        }
    }
    Ok(Bimodule { labels, degrees, left, right, diff })
}

/// Parses a quiver presentation file; relation and differential
/// coefficients are read in the given field.
pub fn parse_quiver(text: &str, field: FieldSpec) -> Result<QuiverPresentation, ParseError> {
    let lines = content_lines(text);
    let mut iter = lines.iter();
    let Some(&(l0, header)) = iter.next() else {
        return Err(syntax(0, "empty file"));
    };
    if header != "dgquiver v1" {
        return Err(syntax(l0, "expected header `dgquiver v1`"));
    }
    let mut vertices: Vec<String> = Vec::new();
    let mut vertex_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut arrow_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut relations: Vec<PathComb> = Vec::new();
    let mut differential: Vec<(usize, PathComb)> = Vec::new();
    let mut max_path_length = 24usize;

    let parse_path = |text: &str, ln: usize, arrow_index: &BTreeMap<String, usize>| -> Result<Vec<usize>, ParseError> {
        text.split('*')
            .map(|a| {
                arrow_index
                    .get(a.trim())
                    .copied()
                    .ok_or_else(|| syntax(ln, format!("unknown arrow `{}`", a.trim())))
            })
            .collect()
    };
    let parse_path_comb = |text: &str, ln: usize, arrow_index: &BTreeMap<String, usize>| -> Result<PathComb, ParseError> {
        let text = text.trim();
        if text == "0" {
            return Ok(PathComb::new());
        }
        let mut out = PathComb::new();
        for term in text.split('+') {
            let term = term.trim();
            // coefficient prefix `c:` keeps `*` free for path concatenation
            let (coef, path_text) = match term.split_once(':') {
                Some((c, p)) if field.parse(c.trim()).is_ok() => {
                    (field.parse(c.trim()).unwrap(), p.trim())
                }
                _ => (field.one(), term),
            };
            out.push((parse_path(path_text, ln, arrow_index)?, coef));
        }
        Ok(out)
    };

    for &(ln, line) in iter {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                let label = tokens.get(1).ok_or_else(|| syntax(ln, "expected `vertex <label>`"))?;
                check_label(label, ln)?;
                vertex_index.insert(label.to_string(), vertices.len());
                vertices.push(label.to_string());
            }
            "arrow" => {
                if tokens.len() != 5 {
                    return Err(syntax(ln, "expected `arrow <label> <src> <tgt> <degree>`"));
                }
                check_label(tokens[1], ln)?;
                let source = *vertex_index
                    .get(tokens[2])
                    .ok_or_else(|| syntax(ln, format!("unknown vertex `{}`", tokens[2])))?;
                let target = *vertex_index
                    .get(tokens[3])
                    .ok_or_else(|| syntax(ln, format!("unknown vertex `{}`", tokens[3])))?;
                let degree = tokens[4]
                    .parse::<i64>()
                    .map_err(|_| syntax(ln, "degree must be an integer"))?;
                arrow_index.insert(tokens[1].to_string(), arrows.len());
                arrows.push(Arrow { label: tokens[1].to_string(), source, target, degree });
            }
            "relation" => {
                let rest = line["relation".len()..].trim();
                relations.push(parse_path_comb(rest, ln, &arrow_index)?);
            }
            "diff" => {
                let (head, comb) = line
                    .split_once('=')
                    .ok_or_else(|| syntax(ln, "expected `diff <arrow> = <path comb>`"))?;
                let parts: Vec<&str> = head.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(syntax(ln, "expected `diff <arrow> = <path comb>`"));
                }
                let ai = *arrow_index
                    .get(parts[1])
                    .ok_or_else(|| syntax(ln, format!("unknown arrow `{}`", parts[1])))?;
                differential.push((ai, parse_path_comb(comb, ln, &arrow_index)?));
            }
            "maxlen" => {
                max_path_length = tokens
                    .get(1)
                    .ok_or_else(|| syntax(ln, "expected `maxlen <n>`"))?
                    .parse()
                    .map_err(|_| syntax(ln, "maxlen must be an integer"))?;
            }
            other => return Err(syntax(ln, format!("unknown directive `{other}`"))),
        }
    }
    let mut q = QuiverPresentation::new(vertices, arrows);
    q.relations = relations;
    q.differential = differential;
    q.max_path_length = max_path_length;
    Ok(q)
}
