//! Reading and writing complexes.
//!
//! The text format has one facet per line as whitespace-separated positive
//! integers. `#` starts a comment and blank lines are ignored. The JSON
//! format is an object `{"facets": [[1, 2], [2, 3]]}`. [`parse_complex`]
//! tells them apart by the first non-blank character.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct FacetsJson {
    facets: Vec<Vec<i64>>,
}

fn to_label(x: i64) -> Result<u32> {
    u32::try_from(x).ok().filter(|&l| l > 0).ok_or(Error::InvalidLabel(x))
}

fn build(facets: Vec<Vec<i64>>, cap: usize) -> Result<SimplicialComplex> {
    let facets = facets
        .into_iter()
        .map(|f| f.into_iter().map(to_label).collect::<Result<Vec<u32>>>())
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets_with_cap(facets, cap)
}

/// Parses the line-oriented text format.
pub fn parse_scx(text: &str, cap: usize) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let facet = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("{tok:?} is not an integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    build(facets, cap)
}

/// Parses `{"facets": [[...], ...]}`.
pub fn parse_json(text: &str, cap: usize) -> Result<SimplicialComplex> {
    let parsed: FacetsJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    build(parsed.facets, cap)
}

/// Parses either format.
pub fn parse_complex(text: &str, cap: usize) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_json(text, cap)
    } else {
        parse_scx(text, cap)
    }
}

/// Text format with optional comment lines first. Facets are written by
/// external labels in canonical order.
pub fn write_scx(complex: &SimplicialComplex, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    for f in complex.facet_labels() {
        let line: Vec<String> = f.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// JSON format, facets by external labels.
pub fn write_json(complex: &SimplicialComplex) -> String {
    let facets = complex
        .facet_labels()
        .into_iter()
        .map(|f| f.into_iter().map(i64::from).collect())
        .collect();
    serde_json::to_string(&FacetsJson { facets }).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_VERTEX_CAP;

    #[test]
    fn text_format() {
        let c = parse_scx("# a square\n1 2\n\n2 3   # edge\n3 4\n4 1\n", DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(c.facet_labels(), vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn text_errors() {
        assert_eq!(
            parse_scx("1 2\n2 x\n", 20),
            Err(Error::Parse {
                line: 2,
                message: "\"x\" is not an integer".into()
            })
        );
        assert_eq!(parse_scx("1 -2\n", 20), Err(Error::InvalidLabel(-2)));
        assert_eq!(parse_scx("0 1\n", 20), Err(Error::InvalidLabel(0)));
        assert_eq!(parse_scx("# nothing\n\n", 20), Err(Error::EmptyInput));
        assert_eq!(parse_scx("1 2 3 4\n", 3), Err(Error::TooManyVertices { found: 4, limit: 3 }));
    }

    #[test]
    fn json_format() {
        let c = parse_complex("  {\"facets\": [[1,2,3],[2,3]]}", 20).unwrap();
        assert_eq!(c.facet_labels(), vec![vec![1, 2, 3]]);
        assert!(matches!(parse_complex("{\"facets\": 3}", 20), Err(Error::Parse { .. })));
        assert_eq!(parse_json("{\"facets\": []}", 20), Err(Error::EmptyInput));
    }

    #[test]
    fn round_trips() {
        let c = parse_scx("5 9 11\n9 11 20\n", 20).unwrap();
        let text = write_scx(&c, &["family: test".into()]);
        assert!(text.starts_with("# family: test\n"));
        assert_eq!(parse_complex(&text, 20).unwrap(), c);
        assert_eq!(parse_complex(&write_json(&c), 20).unwrap(), c);
    }
}
