//! Instance file formats.
//!
//! The native format is line oriented, all integers space separated:
//!
//! ```text
//! BPPC 1
//! n m B has_model
//! id weight [l r]     (n lines; endpoints present iff has_model = 1)
//! u v                 (m lines; u < v, each edge once)
//! ```
//!
//! The literature reader accepts the conflict-library convention: a header
//! line `n B`, then for every item a line `i w_i j1 j2 ...` listing the
//! 1-based indices of its conflict partners. Edges may be listed in one or
//! both directions; the union is taken. No interval model is attached.

use bppc::{ConflictGraph, Instance, IntervalModel};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    InvalidInstance {
        path: String,
        source: bppc::Error,
    },
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

fn parse_token<T: std::str::FromStr>(
    path: &Path,
    line: usize,
    token: &str,
    what: &str,
) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| parse_err(path, line, format!("invalid {what}: {token:?}")))
}

/// Serializes an instance in the native format.
pub fn instance_to_string(instance: &Instance) -> String {
    let n = instance.len();
    let edges = instance.graph().edges();
    let has_model = instance.model().is_some();
    let mut out = String::new();
    out.push_str("BPPC 1\n");
    let _ = writeln!(
        out,
        "{n} {} {} {}",
        edges.len(),
        instance.capacity(),
        u8::from(has_model)
    );
    for item in 0..n {
        match instance.model() {
            Some(model) => {
                let iv = model.interval(item);
                let _ = writeln!(out, "{item} {} {} {}", instance.weight(item), iv.l, iv.r);
            }
            None => {
                let _ = writeln!(out, "{item} {}", instance.weight(item));
            }
        }
    }
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_instance(instance: &Instance, path: &Path) -> Result<(), FormatError> {
    fs::write(path, instance_to_string(instance)).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses the native format; `path` is used for error messages only.
pub fn instance_from_str(text: &str, path: &Path) -> Result<Instance, FormatError> {
    let mut lines = text.lines().enumerate();
    let (_, magic) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))?;
    if magic.trim_end() != "BPPC 1" {
        return Err(parse_err(path, 1, format!("bad header {magic:?}, expected \"BPPC 1\"")));
    }
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 2, "missing size header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(parse_err(path, 2, "size header must be: n m B has_model"));
    }
    let n: usize = parse_token(path, 2, fields[0], "item count")?;
    let m: usize = parse_token(path, 2, fields[1], "edge count")?;
    let capacity: u32 = parse_token(path, 2, fields[2], "capacity")?;
    let has_model = match fields[3] {
        "0" => false,
        "1" => true,
        other => return Err(parse_err(path, 2, format!("has_model must be 0 or 1, got {other:?}"))),
    };

    let mut weights = Vec::with_capacity(n);
    let mut endpoints = Vec::with_capacity(if has_model { n } else { 0 });
    for item in 0..n {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, 2 + item + 1, "unexpected end of item lines"))?;
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let expected = if has_model { 4 } else { 2 };
        if fields.len() != expected {
            return Err(parse_err(
                path,
                lineno,
                format!("item line needs {expected} fields, got {}", fields.len()),
            ));
        }
        let id: usize = parse_token(path, lineno, fields[0], "item id")?;
        if id != item {
            return Err(parse_err(path, lineno, format!("expected item id {item}, got {id}")));
        }
        weights.push(parse_token::<u32>(path, lineno, fields[1], "weight")?);
        if has_model {
            let l: u32 = parse_token(path, lineno, fields[2], "left endpoint")?;
            let r: u32 = parse_token(path, lineno, fields[3], "right endpoint")?;
            if l >= r {
                return Err(parse_err(path, lineno, format!("interval has l={l} >= r={r}")));
            }
            endpoints.push((l, r));
        }
    }

    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, 2 + n + k + 1, "unexpected end of edge lines"))?;
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(path, lineno, "edge line needs exactly: u v"));
        }
        let u: usize = parse_token(path, lineno, fields[0], "edge endpoint")?;
        let v: usize = parse_token(path, lineno, fields[1], "edge endpoint")?;
        if u >= v {
            return Err(parse_err(path, lineno, format!("edge ({u}, {v}) must satisfy u < v")));
        }
        if v >= n {
            return Err(parse_err(path, lineno, format!("edge endpoint {v} out of range")));
        }
        if edges.contains(&(u, v)) {
            return Err(parse_err(path, lineno, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if let Some((idx, line)) = lines.next() {
        if !line.trim().is_empty() {
            return Err(parse_err(path, idx + 1, "trailing content after edge list"));
        }
    }

    let graph = ConflictGraph::from_edges(n, &edges);
    let model = has_model.then(|| IntervalModel::new(endpoints));
    Instance::new(weights, capacity, graph, model).map_err(|source| FormatError::InvalidInstance {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_instance(path: &Path) -> Result<Instance, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    instance_from_str(&text, path)
}

/// Parses the conflict-library convention (1-based indices, adjacency lists).
pub fn literature_instance_from_str(text: &str, path: &Path) -> Result<Instance, FormatError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(path, 1, "header must be: n B"));
    }
    let n: usize = parse_token(path, 1, fields[0], "item count")?;
    let capacity: u32 = parse_token(path, 1, fields[1], "capacity")?;

    let mut weights = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for item in 1..=n {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, item + 1, "unexpected end of item lines"))?;
        let lineno = idx + 1;
        let mut tokens = line.split_whitespace();
        let id: usize = parse_token(
            path,
            lineno,
            tokens.next().ok_or_else(|| parse_err(path, lineno, "blank item line"))?,
            "item id",
        )?;
        if id != item {
            return Err(parse_err(path, lineno, format!("expected item id {item}, got {id}")));
        }
        let weight: u32 = parse_token(
            path,
            lineno,
            tokens
                .next()
                .ok_or_else(|| parse_err(path, lineno, "missing weight"))?,
            "weight",
        )?;
        weights.push(weight);
        for token in tokens {
            let partner: usize = parse_token(path, lineno, token, "conflict partner")?;
            if partner < 1 || partner > n {
                return Err(parse_err(path, lineno, format!("partner {partner} out of range 1..={n}")));
            }
            if partner == item {
                return Err(parse_err(path, lineno, format!("item {item} conflicts with itself")));
            }
            let (u, v) = (item.min(partner) - 1, item.max(partner) - 1);
            edges.push((u, v));
        }
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(parse_err(path, idx + 1, "trailing content after item lines"));
        }
    }

    edges.sort_unstable();
    edges.dedup();
    let graph = ConflictGraph::from_edges(n, &edges);
    Instance::new(weights, capacity, graph, None).map_err(|source| FormatError::InvalidInstance {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_literature_instance(path: &Path) -> Result<Instance, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    literature_instance_from_str(&text, path)
}

/// Reads a file in either supported format, keyed on the native magic line.
pub fn read_any_instance(path: &Path) -> Result<Instance, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    if text.starts_with("BPPC") {
        instance_from_str(&text, path)
    } else {
        literature_instance_from_str(&text, path)
    }
}
