//! Reference graphs shipped with the crate (see `data/README.md`).
//!
//! The directory named by `CHORDGIRTH_DATA_DIR`, when set, takes precedence
//! over the embedded copies in [`lookup`].

use std::path::PathBuf;

use crate::graph::graph6::parse_graph6;
use crate::graph::Graph;

pub const DATA_DIR_ENV: &str = "CHORDGIRTH_DATA_DIR";

const FILES: &[(&str, &str)] = &[
    ("heawood.g6", include_str!("../data/heawood.g6")),
    ("petersen.g6", include_str!("../data/petersen.g6")),
    ("tutte_coxeter.g6", include_str!("../data/tutte_coxeter.g6")),
    (
        "tutte_coxeter.decomp",
        include_str!("../data/tutte_coxeter.decomp"),
    ),
];

/// The embedded contents of a bundled file.
pub fn bundled(name: &str) -> Option<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

/// Contents of a data file by bare name: the override directory first, then
/// the embedded copy.
pub fn lookup(name: &str) -> Option<String> {
    if let Some(dir) = std::env::var_os(DATA_DIR_ENV) {
        if let Ok(text) = std::fs::read_to_string(PathBuf::from(dir).join(name)) {
            return Some(text);
        }
    }
    bundled(name).map(str::to_owned)
}

fn embedded_graph(name: &str) -> Graph {
    let text = bundled(name).expect("bundled file exists");
    parse_graph6(text.as_bytes()).expect("bundled graph6 is well formed")
}

pub fn heawood() -> Graph {
    embedded_graph("heawood.g6")
}

pub fn petersen() -> Graph {
    embedded_graph("petersen.g6")
}

pub fn tutte_coxeter() -> Graph {
    embedded_graph("tutte_coxeter.g6")
}
