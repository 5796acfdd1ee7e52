//! Text formats.
//!
//! Representation files hold one order per line, listed from minimum to
//! maximum as whitespace-separated names. Blank lines and lines starting with
//! `#` are ignored. The first order line declares the ground set.
//!
//! Complex files are JSON objects with a sorted `vertices` name list and a
//! lexicographically sorted `facets` list of sorted name lists.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_ELEMENTS};
use crate::order::{Ground, LinearOrder, Representation};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &line[b..]));
    }
    out
}

pub fn parse_representation(text: &str) -> Result<Representation> {
    let mut ground: Option<Ground> = None;
    let mut orders = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        let ground = match &ground {
            Some(g) => g,
            None => {
                if toks.len() > MAX_ELEMENTS {
                    return Err(parse_error(
                        line_no,
                        toks[MAX_ELEMENTS].0,
                        format!(
                            "ground set has {} elements, at most {MAX_ELEMENTS} are supported",
                            toks.len()
                        ),
                    ));
                }
                for (i, &(col, name)) in toks.iter().enumerate() {
                    if toks[..i].iter().any(|&(_, other)| other == name) {
                        return Err(parse_error(line_no, col, format!("repeated element `{name}`")));
                    }
                }
                ground.insert(
                    Ground::new(toks.iter().map(|&(_, name)| name))
                        .map_err(|e| parse_error(line_no, 1, e.to_string()))?,
                )
            }
        };
        let mut seen = Face::EMPTY;
        let mut sequence = Vec::with_capacity(ground.len());
        for &(col, name) in &toks {
            let e = ground
                .element(name)
                .ok_or_else(|| parse_error(line_no, col, format!("unknown element `{name}`")))?;
            if seen.contains(e) {
                return Err(parse_error(line_no, col, format!("repeated element `{name}`")));
            }
            seen = seen.with(e);
            sequence.push(e);
        }
        if sequence.len() != ground.len() {
            let missing: Vec<&str> = ground
                .all()
                .difference(seen)
                .iter()
                .map(|e| ground.name(e))
                .collect();
            let column = raw.chars().count() + 1;
            return Err(parse_error(
                line_no,
                column,
                format!("not a permutation, missing {}", missing.join(" ")),
            ));
        }
        orders.push(LinearOrder::from_sequence(sequence)?);
    }
    let ground = ground.ok_or_else(|| parse_error(1, 1, "no permutation lines"))?;
    Representation::new(ground, orders)
}

pub fn write_representation(rep: &Representation) -> String {
    let mut out = String::new();
    for line in rep.order_names() {
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct ComplexFile {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<Vec<String>>>,
}

/// Parses a complex file. Vertex ids follow the order of `vertices`.
pub fn parse_complex(text: &str) -> Result<(Ground, SimplicialComplex)> {
    let file: ComplexFile = serde_json::from_str(text)
        .map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let ground = Ground::new(file.vertices)?;
    let facets = file
        .facets
        .iter()
        .map(|names| ground.canonical_face(names))
        .collect::<Result<Vec<Face>>>()?;
    for (i, &f) in facets.iter().enumerate() {
        if let Some(&g) = facets[..i]
            .iter()
            .find(|&&g| f.is_subset(g) || g.is_subset(f))
        {
            return Err(Error::InvalidComplex(format!(
                "facets {} and {} are comparable",
                ground.display_face(g),
                ground.display_face(f)
            )));
        }
    }
    let complex = SimplicialComplex::from_facets(facets);
    if let Some(v) = ground.all().difference(complex.vertices()).iter().next() {
        return Err(Error::InvalidComplex(format!(
            "vertex `{}` lies in no facet",
            ground.name(v)
        )));
    }
    Ok((ground, complex))
}

fn name_list(ground: &Ground, face: Face) -> Vec<String> {
    ground.face_names(face).into_iter().map(String::from).collect()
}

/// Renders `complex` as a complex file. With `all_faces`, a `faces` key lists
/// every face in canonical order.
pub fn write_complex(ground: &Ground, complex: &SimplicialComplex, all_faces: bool) -> String {
    let vertices = name_list(ground, complex.vertices());
    let mut facets: Vec<Vec<String>> = complex
        .facets()
        .into_iter()
        .map(|f| name_list(ground, f))
        .collect();
    facets.sort();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"vertices\": {},\n", json(&vertices)));
    out.push_str(&format!("  \"facets\": {}", json(&facets)));
    if all_faces {
        let faces: Vec<Vec<String>> = complex.faces().map(|f| name_list(ground, f)).collect();
        out.push_str(&format!(",\n  \"faces\": {}", json(&faces)));
    }
    out.push_str("\n}\n");
    out
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("string lists serialize")
}
