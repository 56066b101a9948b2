//! Vertex-set files: one 0/1 word per line, all of the same length. Blank
//! lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::bitword::Word;
use crate::error::{Error, Result};
use crate::family::{DaisyCube, VertexSet};

pub fn parse_vertex_file(text: &str) -> Result<VertexSet> {
    let mut n = None;
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word: Word = line
            .parse()
            .map_err(|e: Error| Error::Parse { line: i + 1, reason: e.to_string() })?;
        match n {
            None => n = Some(word.len()),
            Some(len) if len != word.len() => {
                return Err(Error::Parse {
                    line: i + 1,
                    reason: format!("word of length {} after words of length {len}", word.len()),
                })
            }
            _ => {}
        }
        words.push(word);
    }
    let n = n.ok_or(Error::Parse { line: 0, reason: "no words in file".into() })?;
    VertexSet::new(n, words)
}

/// Plain vertex-set file, canonical order.
pub fn write_vertex_set(v: &VertexSet) -> String {
    let mut out = String::new();
    for w in v.iter() {
        writeln!(out, "{w}").unwrap();
    }
    out
}

/// Closure file: a comment header with the counts and the maximal
/// antichain, followed by every vertex. Re-reading it as a generator file
/// gives back the same daisy cube.
pub fn write_daisy_file(g: &DaisyCube, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "# {title}").unwrap();
    writeln!(
        out,
        "# n={} vertices={} edges={} maximal={}",
        g.n(),
        g.vertices().len(),
        g.vertices().edge_count(),
        g.maximal().len()
    )
    .unwrap();
    for m in g.maximal().iter() {
        writeln!(out, "# max {m}").unwrap();
    }
    out.push_str(&write_vertex_set(g.vertices()));
    out
}
