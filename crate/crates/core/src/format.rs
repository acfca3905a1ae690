//! Text formats (`.chg` for one hypergraph, `.chf` for a family, plus the
//! witness listing) and the JSON interchange form.
//!
//! `.chg`:
//!
//! ```text
//! # optional comments
//! n k m
//! v_1 ... v_k c      (m lines)
//! ```
//!
//! `.chf` starts with `family s` followed by `s` `.chg` blocks separated by
//! lines containing only `---`.

use std::fmt::Write as _;

use crate::error::FormatError;
use crate::hypergraph::{validate, Color, ColoredEdge, ColoredHypergraph, HypergraphFamily};
use crate::matching::RainbowMatching;

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
        }
    }

    /// Next line that is neither blank nor a comment, with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), FormatError> {
        self.next_content().ok_or_else(|| FormatError::Syntax {
            line: 0,
            msg: format!("unexpected end of input, expected {what}"),
        })
    }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<u64>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| FormatError::Syntax {
                line: line_no,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

fn parse_block(lines: &mut Lines<'_>) -> Result<ColoredHypergraph, FormatError> {
    let (no, header) = lines.expect("header `n k m`")?;
    let head = numbers(no, header)?;
    let [n, k, m] = head[..] else {
        return Err(FormatError::Syntax {
            line: no,
            msg: "header must be `n k m`".into(),
        });
    };
    let (n, k) = (n as usize, k as usize);
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (no, line) = lines.expect("an edge line")?;
        let nums = numbers(no, line)?;
        if nums.len() != k + 1 {
            return Err(FormatError::Syntax {
                line: no,
                msg: format!("edge line needs {k} vertices and a color, found {} fields", nums.len()),
            });
        }
        let (color, vs) = nums.split_last().expect("non-empty");
        edges.push(ColoredEdge::new(
            vs.iter().map(|&v| v as usize).collect(),
            Color(*color),
        ));
    }
    Ok(ColoredHypergraph::new_unchecked(n, k, edges))
}

fn structurally_valid(h: ColoredHypergraph) -> Result<ColoredHypergraph, FormatError> {
    let report = validate(&h);
    match report.violations.iter().find(|v| v.is_structural()) {
        Some(v) => Err(crate::error::HypergraphError::Invalid(v.to_string()).into()),
        None => Ok(h),
    }
}

/// Parses `.chg` text without structural checks, so that [`validate`] can
/// report on malformed edges.
pub fn parse_chg_unchecked(text: &str) -> Result<ColoredHypergraph, FormatError> {
    let mut lines = Lines::new(text);
    let h = parse_block(&mut lines)?;
    if let Some((no, _)) = lines.next_content() {
        return Err(FormatError::Syntax {
            line: no,
            msg: "trailing content after the last edge".into(),
        });
    }
    Ok(h)
}

pub fn parse_chg(text: &str) -> Result<ColoredHypergraph, FormatError> {
    structurally_valid(parse_chg_unchecked(text)?)
}

pub fn parse_chf(text: &str) -> Result<HypergraphFamily, FormatError> {
    let mut lines = Lines::new(text);
    let (no, header) = lines.expect("`family s`")?;
    let s = header
        .strip_prefix("family")
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or_else(|| FormatError::Syntax {
            line: no,
            msg: "expected `family s`".into(),
        })?;
    let mut members = Vec::with_capacity(s);
    for i in 0..s {
        if i > 0 {
            let (no, sep) = lines.expect("`---`")?;
            if sep != "---" {
                return Err(FormatError::Syntax {
                    line: no,
                    msg: "expected `---` between members".into(),
                });
            }
        }
        members.push(structurally_valid(parse_block(&mut lines)?)?);
    }
    if let Some((no, _)) = lines.next_content() {
        return Err(FormatError::Syntax {
            line: no,
            msg: "trailing content after the last member".into(),
        });
    }
    Ok(HypergraphFamily::new(members)?)
}

fn write_block(out: &mut String, h: &ColoredHypergraph) {
    writeln!(out, "{} {} {}", h.n(), h.k(), h.edge_count()).unwrap();
    for e in h.edges() {
        for v in &e.vertices {
            write!(out, "{v} ").unwrap();
        }
        writeln!(out, "{}", e.color).unwrap();
    }
}

fn write_comments(out: &mut String, comments: &[String]) {
    for c in comments {
        for line in c.lines() {
            writeln!(out, "# {line}").unwrap();
        }
    }
}

pub fn write_chg(h: &ColoredHypergraph) -> String {
    write_chg_with_comments(h, &[])
}

/// Like [`write_chg`], prefixed with `#` comment lines.
pub fn write_chg_with_comments(h: &ColoredHypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    write_block(&mut out, h);
    out
}

pub fn write_chf(f: &HypergraphFamily) -> String {
    write_chf_with_comments(f, &[])
}

pub fn write_chf_with_comments(f: &HypergraphFamily, comments: &[String]) -> String {
    let mut out = String::new();
    write_comments(&mut out, comments);
    writeln!(out, "family {}", f.size()).unwrap();
    for (i, m) in f.members().iter().enumerate() {
        if i > 0 {
            out.push_str("---\n");
        }
        write_block(&mut out, m);
    }
    out
}

/// True if the text looks like a family file.
pub fn is_family_text(text: &str) -> bool {
    Lines::new(text)
        .next_content()
        .is_some_and(|(_, l)| l.starts_with("family"))
}

/// Witness listing: `picks s`, then `i edge_index` lines, then `---` and
/// the chosen edges echoed as `v_1 ... v_k c` in the same order.
pub fn write_picks(family: &HypergraphFamily, m: &RainbowMatching) -> String {
    let mut out = String::new();
    writeln!(out, "picks {}", m.picks.len()).unwrap();
    for (i, e) in &m.picks {
        writeln!(out, "{i} {e}").unwrap();
    }
    out.push_str("---\n");
    for e in m.edges(family) {
        for v in &e.vertices {
            write!(out, "{v} ").unwrap();
        }
        writeln!(out, "{}", e.color).unwrap();
    }
    out
}

/// Reads the pick lines of a witness listing; the echoed edges are skipped.
pub fn parse_picks(text: &str) -> Result<RainbowMatching, FormatError> {
    let mut lines = Lines::new(text);
    let (no, header) = lines.expect("`picks s`")?;
    let s = header
        .strip_prefix("picks")
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .ok_or_else(|| FormatError::Syntax {
            line: no,
            msg: "expected `picks s`".into(),
        })?;
    let mut picks = Vec::with_capacity(s);
    for _ in 0..s {
        let (no, line) = lines.expect("a pick line")?;
        match numbers(no, line)?[..] {
            [i, e] => picks.push((i as usize, e as usize)),
            _ => {
                return Err(FormatError::Syntax {
                    line: no,
                    msg: "pick line must be `i edge_index`".into(),
                })
            }
        }
    }
    Ok(RainbowMatching { picks })
}

pub fn hypergraph_to_json(h: &ColoredHypergraph) -> String {
    serde_json::to_string_pretty(h).expect("hypergraphs serialize")
}

pub fn hypergraph_from_json(text: &str) -> Result<ColoredHypergraph, FormatError> {
    let raw: ColoredHypergraph = serde_json::from_str(text)?;
    // Re-sort vertices in case the producer did not.
    let edges = raw
        .edges()
        .iter()
        .map(|e| ColoredEdge::new(e.vertices.clone(), e.color))
        .collect();
    structurally_valid(ColoredHypergraph::new_unchecked(raw.n(), raw.k(), edges))
}

pub fn family_to_json(f: &HypergraphFamily) -> String {
    serde_json::to_string_pretty(f).expect("families serialize")
}

pub fn family_from_json(text: &str) -> Result<HypergraphFamily, FormatError> {
    let raw: HypergraphFamily = serde_json::from_str(text)?;
    let members = raw
        .into_members()
        .into_iter()
        .map(|m| {
            let edges = m
                .edges()
                .iter()
                .map(|e| ColoredEdge::new(e.vertices.clone(), e.color))
                .collect();
            structurally_valid(ColoredHypergraph::new_unchecked(m.n(), m.k(), edges))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HypergraphFamily::new(members)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SAMPLE: &str = "# a path\n4 2 3\n0 1 7\n1 2 8\n2 3 7\n";

    #[test]
    fn parses_and_writes_chg() {
        let h = parse_chg(SAMPLE).unwrap();
        assert_eq!((h.n(), h.k(), h.edge_count()), (4, 2, 3));
        assert_eq!(h.edges()[1], ColoredEdge::new(vec![1, 2], Color(8)));
        assert_eq!(write_chg(&h), "4 2 3\n0 1 7\n1 2 8\n2 3 7\n");
    }

    #[test]
    fn reports_syntax_errors_with_lines() {
        let err = parse_chg("4 2 2\n0 1 7\n1 x 8\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }), "{err}");
        assert!(parse_chg("4 2 2\n0 1 7\n").is_err());
        assert!(parse_chg("4 2 1\n0 1 2 7\n").is_err());
        assert!(parse_chg("4 2 1\n0 1 7\n5 6 1\n").is_err());
    }

    #[test]
    fn unchecked_parse_keeps_repeated_vertices() {
        let h = parse_chg_unchecked("3 3 1\n0 0 1 4\n").unwrap();
        assert!(!validate(&h).is_structurally_valid());
        assert!(parse_chg("3 3 1\n0 0 1 4\n").is_err());
    }

    #[test]
    fn family_round_trip() {
        let text = "family 2\n4 2 1\n0 1 0\n---\n# second\n4 2 2\n2 3 1\n0 2 4\n";
        let f = parse_chf(text).unwrap();
        assert_eq!(f.size(), 2);
        assert_eq!(parse_chf(&write_chf(&f)).unwrap(), f);
        assert!(is_family_text(text));
        assert!(!is_family_text(SAMPLE));
        assert!(parse_chf("family 2\n4 2 1\n0 1 0\n").is_err());
        assert!(parse_chf("family 2\n4 2 0\n---\n5 2 0\n").is_err());
    }

    #[test]
    fn picks_round_trip() {
        let f = parse_chf("family 2\n4 2 1\n0 1 0\n---\n4 2 1\n2 3 1\n").unwrap();
        let m = RainbowMatching { picks: vec![(0, 0), (1, 0)] };
        let text = write_picks(&f, &m);
        assert_eq!(text, "picks 2\n0 0\n1 0\n---\n0 1 0\n2 3 1\n");
        assert_eq!(parse_picks(&text).unwrap(), m);
    }

    #[test]
    fn json_uses_type_field_names() {
        let f = parse_chf("family 1\n4 2 1\n1 0 3\n").unwrap();
        let v: serde_json::Value = serde_json::from_str(&family_to_json(&f)).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["k"], 2);
        assert_eq!(v["members"][0]["edges"][0]["vertices"], serde_json::json!([0, 1]));
        assert_eq!(v["members"][0]["edges"][0]["color"], 3);
        assert_eq!(family_from_json(&family_to_json(&f)).unwrap(), f);
    }

    fn arb_hypergraph() -> impl Strategy<Value = ColoredHypergraph> {
        (2usize..10, 1usize..4).prop_flat_map(|(n, k)| {
            let k = k.min(n);
            proptest::collection::btree_map(
                proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k),
                0u64..6,
                0..12,
            )
            .prop_map(move |map| {
                let edges = map.into_iter().map(|(vs, c)| ColoredEdge::new(vs, Color(c))).collect();
                ColoredHypergraph::new(n, k, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn chg_round_trip(h in arb_hypergraph()) {
            prop_assert_eq!(parse_chg(&write_chg(&h)).unwrap(), h.clone());
            prop_assert_eq!(hypergraph_from_json(&hypergraph_to_json(&h)).unwrap(), h);
        }
    }
}
