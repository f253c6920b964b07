//! Line-oriented checkpoint for [`super::exhaustive_gamma`].
//!
//! ```text
//! # chordgirth exhaustive search checkpoint
//! version 0.1.0
//! n 10
//! k 1
//! prune first-chord
//! unit 0 5 96 6 0-5,1-6,2-7,3-8,4-9
//! unit 1 3 12 - -
//! ```
//!
//! Each `unit` line records one completed work unit: cycle-type index,
//! chord partner of vertex 0, decompositions examined, best value found (or
//! `-` if every decomposition was disconnected) and the chords attaining it.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::{PruneMode, SearchError};
use crate::graph::Edge;

pub(crate) const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UnitRecord {
    pub examined: u64,
    pub best: Option<(usize, Vec<Edge>)>,
}

pub(crate) type Units = BTreeMap<(usize, usize), UnitRecord>;

fn header(n: usize, k: usize, prune: PruneMode) -> String {
    format!(
        "# chordgirth exhaustive search checkpoint\nversion {VERSION}\nn {n}\nk {k}\nprune {}\n",
        prune.name()
    )
}

pub(crate) fn unit_line(key: (usize, usize), rec: &UnitRecord) -> String {
    let (value, chords) = match &rec.best {
        Some((g, chords)) => (
            g.to_string(),
            chords
                .iter()
                .map(|e| format!("{}-{}", e.0, e.1))
                .collect::<Vec<_>>()
                .join(","),
        ),
        None => ("-".into(), "-".into()),
    };
    format!(
        "unit {} {} {} {value} {chords}\n",
        key.0, key.1, rec.examined
    )
}

fn corrupt(line: usize, message: impl Into<String>) -> SearchError {
    SearchError::Checkpoint {
        line,
        message: message.into(),
    }
}

fn parse_unit(line: usize, fields: &[&str]) -> Result<((usize, usize), UnitRecord), SearchError> {
    let [t, w, examined, value, chords] = fields else {
        return Err(corrupt(line, "a unit line has five fields"));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| corrupt(line, format!("`{s}` is not a number")))
    };
    let best = match (*value, *chords) {
        ("-", "-") => None,
        (v, c) => {
            let edges = c
                .split(',')
                .map(|pair| {
                    let (a, b) = pair
                        .split_once('-')
                        .ok_or_else(|| corrupt(line, "chords are written a-b"))?;
                    Ok(Edge::new(num(a)?, num(b)?))
                })
                .collect::<Result<Vec<_>, SearchError>>()?;
            Some((num(v)?, edges))
        }
    };
    let examined = examined
        .parse()
        .map_err(|_| corrupt(line, format!("`{examined}` is not a count")))?;
    Ok(((num(t)?, num(w)?), UnitRecord { examined, best }))
}

/// Reads completed units, checking the header against this search.
pub(crate) fn load(
    path: &Path,
    n: usize,
    k: usize,
    prune: PruneMode,
) -> Result<Units, SearchError> {
    let file = File::open(path)?;
    let mut units = Units::new();
    let expected = [
        ("version", VERSION.to_string()),
        ("n", n.to_string()),
        ("k", k.to_string()),
        ("prune", prune.name().to_string()),
    ];
    let mut header_seen = 0;
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [first, ..] if first.starts_with('#') => {}
            ["unit", rest @ ..] => {
                if header_seen < expected.len() {
                    return Err(corrupt(line_no, "unit line before the header"));
                }
                let (key, rec) = parse_unit(line_no, rest)?;
                units.insert(key, rec);
            }
            [key, value] if header_seen < expected.len() => {
                let (want_key, want_value) = &expected[header_seen];
                if key != want_key {
                    return Err(corrupt(line_no, format!("expected `{want_key}`")));
                }
                if value != want_value {
                    return Err(SearchError::CheckpointMismatch {
                        field: want_key,
                        found: value.to_string(),
                        expected: want_value.clone(),
                    });
                }
                header_seen += 1;
            }
            _ => return Err(corrupt(line_no, "unrecognised line")),
        }
    }
    if header_seen < expected.len() {
        return Err(corrupt(0, "incomplete header"));
    }
    Ok(units)
}

/// Opens the checkpoint for appending, writing the header if it is new.
pub(crate) fn open(path: &Path, n: usize, k: usize, prune: PruneMode) -> Result<File, SearchError> {
    let fresh = !path.exists() || std::fs::metadata(path)?.len() == 0;
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    if fresh {
        file.write_all(header(n, k, prune).as_bytes())?;
        file.flush()?;
    }
    Ok(file)
}
