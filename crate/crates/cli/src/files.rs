//! Line-oriented text formats.
//!
//! `.gd`: Gauss diagrams:
//! ```text
//! gauss v1
//! strands 2
//! arrow t=1.1 h=2.1 s=+
//! ```
//!
//! `.targets`: realization targets:
//! ```text
//! strands 3
//! lambda 1: e
//! lambda 2: e
//! lambda 3: x1^-1 x2^-1 x1 x2
//! ```
//!
//! `.sd`: spun surface data:
//! ```text
//! spun v1
//! component 1 rank 2
//! circle over=1 under=3 class=11
//! ```
//!
//! `#` starts a comment; blank lines are skipped. Positions in `.gd` files
//! may be any positive integers and are canonicalized on load. Serialized
//! diagrams are always canonical, so output is byte-stable.

use std::path::Path;

use linkhom_core::gauss::{Arrow, Endpoint, GaussDiagram};
use linkhom_core::spun::{ComponentSurface, DoubleCircle, SpunSurfaceData, Z2Class};
use linkhom_core::word::{Sign, Word};

use crate::CliError;

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_string(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|e| CliError::io(path, e))
}

/// Content lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((k + 1, line))
        }
    })
}

fn parse_strands(line: &str, lineno: usize) -> Result<usize, CliError> {
    let rest = line
        .strip_prefix("strands")
        .ok_or_else(|| CliError::parse(format!("line {lineno}: expected `strands <n>`")))?;
    let n: usize = rest
        .trim()
        .parse()
        .map_err(|_| CliError::parse(format!("line {lineno}: bad strand count")))?;
    if n == 0 {
        return Err(CliError::parse(format!(
            "line {lineno}: strand count must be positive"
        )));
    }
    Ok(n)
}

fn parse_endpoint(tok: &str, lineno: usize) -> Result<Endpoint, CliError> {
    let err = || CliError::parse(format!("line {lineno}: bad endpoint `{tok}`"));
    let (s, p) = tok.split_once('.').ok_or_else(err)?;
    let strand: usize = s.parse().map_err(|_| err())?;
    let pos: usize = p.parse().map_err(|_| err())?;
    if strand == 0 || pos == 0 {
        return Err(err());
    }
    Ok(Endpoint::new(strand, pos))
}

pub fn parse_sign(tok: &str) -> Option<Sign> {
    match tok {
        "+" => Some(Sign::Plus),
        "-" => Some(Sign::Minus),
        _ => None,
    }
}

pub fn parse_gd(text: &str) -> Result<GaussDiagram, CliError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "gauss v1")) => {}
        other => {
            let at = other.map_or_else(|| "end of file".to_string(), |(k, _)| format!("line {k}"));
            return Err(CliError::parse(format!("{at}: expected header `gauss v1`")));
        }
    }
    let (lineno, strands_line) = lines
        .next()
        .ok_or_else(|| CliError::parse("missing `strands <n>` line"))?;
    let n = parse_strands(strands_line, lineno)?;
    let mut arrows = Vec::new();
    for (lineno, line) in lines {
        let mut toks = line.split_whitespace();
        let err = |what: &str| CliError::parse(format!("line {lineno}: {what}"));
        if toks.next() != Some("arrow") {
            return Err(err("expected `arrow t=<s>.<p> h=<s>.<p> s=<+|->`"));
        }
        let tail = toks
            .next()
            .and_then(|t| t.strip_prefix("t="))
            .ok_or_else(|| err("missing `t=` field"))?;
        let head = toks
            .next()
            .and_then(|t| t.strip_prefix("h="))
            .ok_or_else(|| err("missing `h=` field"))?;
        let sign = toks
            .next()
            .and_then(|t| t.strip_prefix("s="))
            .and_then(parse_sign)
            .ok_or_else(|| err("missing or bad `s=` field"))?;
        if toks.next().is_some() {
            return Err(err("trailing tokens"));
        }
        arrows.push(Arrow::new(
            parse_endpoint(tail, lineno)?,
            parse_endpoint(head, lineno)?,
            sign,
        ));
    }
    Ok(GaussDiagram::new(n, arrows)?)
}

pub fn write_gd(d: &GaussDiagram) -> String {
    d.to_string()
}

pub fn parse_targets(text: &str) -> Result<Vec<Word>, CliError> {
    let mut lines = content_lines(text);
    let (lineno, strands_line) = lines
        .next()
        .ok_or_else(|| CliError::parse("missing `strands <n>` line"))?;
    let n = parse_strands(strands_line, lineno)?;
    let mut targets: Vec<Option<Word>> = vec![None; n];
    for (lineno, line) in lines {
        let err = |what: &str| CliError::parse(format!("line {lineno}: {what}"));
        let rest = line
            .strip_prefix("lambda")
            .ok_or_else(|| err("expected `lambda <i>: <word>`"))?;
        let (idx, word_text) = rest
            .split_once(':')
            .ok_or_else(|| err("expected `:` after the strand index"))?;
        let i: usize = idx.trim().parse().map_err(|_| err("bad strand index"))?;
        if i == 0 || i > n {
            return Err(err(&format!("strand index {i} out of range 1..={n}")));
        }
        if targets[i - 1].is_some() {
            return Err(err(&format!("duplicate `lambda {i}` line")));
        }
        targets[i - 1] = Some(Word::parse(word_text, n)?);
    }
    targets
        .into_iter()
        .enumerate()
        .map(|(k, t)| t.ok_or_else(|| CliError::parse(format!("missing `lambda {}` line", k + 1))))
        .collect()
}

pub fn parse_sd(text: &str) -> Result<SpunSurfaceData, CliError> {
    let mut lines = content_lines(text).peekable();
    match lines.next() {
        Some((_, "spun v1")) => {}
        other => {
            let at = other.map_or_else(|| "end of file".to_string(), |(k, _)| format!("line {k}"));
            return Err(CliError::parse(format!("{at}: expected header `spun v1`")));
        }
    }
    let mut components = Vec::new();
    let mut circles = Vec::new();
    for (lineno, line) in lines {
        let err = |what: &str| CliError::parse(format!("line {lineno}: {what}"));
        if let Some(rest) = line.strip_prefix("component") {
            let mut toks = rest.split_whitespace();
            let id: usize = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err("expected `component <id> rank <d>`"))?;
            if toks.next() != Some("rank") {
                return Err(err("expected `rank` keyword"));
            }
            let h1_rank: usize = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err("bad rank"))?;
            if toks.next().is_some() {
                return Err(err("trailing tokens"));
            }
            components.push(ComponentSurface { id, h1_rank });
        } else if let Some(rest) = line.strip_prefix("circle") {
            let mut over = None;
            let mut under = None;
            let mut class = None;
            for tok in rest.split_whitespace() {
                if let Some(v) = tok.strip_prefix("over=") {
                    over = v.parse::<usize>().ok();
                    if over.is_none() {
                        return Err(err("bad `over=` field"));
                    }
                } else if let Some(v) = tok.strip_prefix("under=") {
                    under = v.parse::<usize>().ok();
                    if under.is_none() {
                        return Err(err("bad `under=` field"));
                    }
                } else if let Some(v) = tok.strip_prefix("class=") {
                    let mut bits = Vec::new();
                    for c in v.chars() {
                        match c {
                            '0' => bits.push(false),
                            '1' => bits.push(true),
                            _ => return Err(err("class bits must be 0 or 1")),
                        }
                    }
                    class = Some(Z2Class::from_bits(bits));
                } else {
                    return Err(err(&format!("unknown field `{tok}`")));
                }
            }
            let over = over.ok_or_else(|| err("missing `over=`"))?;
            let under = under.ok_or_else(|| err("missing `under=`"))?;
            let class = class.ok_or_else(|| err("missing `class=`"))?;
            circles.push(DoubleCircle { over, under, class });
        } else {
            return Err(err("expected `component` or `circle`"));
        }
    }
    Ok(SpunSurfaceData::new(components, circles)?)
}
