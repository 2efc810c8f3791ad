use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use berge_core::io::{parse_bg, parse_hg};
use berge_core::{incidence_graph, BipartiteGraph};

/// `a` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span { lo, hi })
    }
}

fn is_hg(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "hg")
}

/// A `.bg` graph, or the incidence graph of a `.hg` hypergraph.
pub fn load_graph(path: &Path) -> Result<BipartiteGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if is_hg(path) {
        Ok(incidence_graph(&parse_hg(&text)?))
    } else {
        Ok(parse_bg(&text)?)
    }
}

pub fn check_extension(path: &Path) -> Result<bool> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("hg") => Ok(true),
        Some("bg") => Ok(false),
        _ => bail!("{} must end in .bg or .hg", path.display()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("5".parse::<Span>().unwrap(), Span { lo: 5, hi: 5 });
        assert_eq!("4..6".parse::<Span>().unwrap(), Span { lo: 4, hi: 6 });
        assert_eq!("4..=6".parse::<Span>().unwrap(), Span { lo: 4, hi: 6 });
        assert!("6..4".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }
}
