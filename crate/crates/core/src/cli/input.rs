//! Instance files: a `d alpha` header line, then one extra generator per line.
//! Blank lines and `#` comments are ignored; coordinates may be separated by
//! spaces or commas. `--json` reads `{"d": .., "alpha": .., "generators": [..]}`.

use std::fs;
use std::io::Read;
use std::path::Path;

use crate::lattice::{LatticePoint, SemigroupPresentation};

pub fn read_source(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

pub fn parse_instance(text: &str, json: bool) -> Result<SemigroupPresentation, String> {
    if json {
        return serde_json::from_str(text).map_err(|e| format!("bad JSON instance: {e}"));
    }
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());

    let (_, header) = lines.next().ok_or("empty instance file")?;
    let head = parse_integers(header).map_err(|e| format!("line 1: {e}"))?;
    let [d, alpha] = head[..] else {
        return Err(format!("header must be `d alpha`, got `{header}`"));
    };
    let d = usize::try_from(d).map_err(|_| format!("d must be nonnegative, got {d}"))?;

    let mut extras = Vec::new();
    for (n, line) in lines {
        let coords = parse_integers(line).map_err(|e| format!("line {}: {e}", n + 1))?;
        extras.push(LatticePoint::new(coords));
    }
    Ok(SemigroupPresentation::new(d, alpha, extras))
}

/// Accepts `3,27`, `(3,27)`, `3 27` and `[3, 27]`.
pub fn parse_point(s: &str) -> Result<LatticePoint, String> {
    let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let coords = parse_integers(inner)?;
    if coords.is_empty() {
        return Err(format!("empty point `{s}`"));
    }
    Ok(LatticePoint::new(coords))
}

fn parse_integers(s: &str) -> Result<Vec<i64>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect()
}

pub fn format_instance(p: &SemigroupPresentation) -> String {
    let mut out = format!("{} {}\n", p.d, p.alpha);
    for a in &p.extras {
        let coords: Vec<String> = a.coords().iter().map(|c| c.to_string()).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}
