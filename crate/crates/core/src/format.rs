//! Plain-text formats.
//!
//! ```text
//! # a triangle
//! graph 3
//! e 0 1
//! e 1 2
//! e 0 2
//! ```
//!
//! Digraph files use a `digraph <n>` header and `a <u> <v>` lines. A set of
//! digraphs is a sequence of digraph blocks separated by blank lines. Factor
//! set files hold one word over `>`/`<` per line. Everything after `#` on a
//! line is ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::words::{FactorSet, Word};

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

struct Block {
    header_line: usize,
    n: usize,
    pairs: Vec<(usize, usize, usize)>,
}

fn blocks(text: &str, header: &str, tag: &str) -> Result<Vec<Block>> {
    let mut out: Vec<Block> = Vec::new();
    let mut open = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let blank_raw = raw.trim().is_empty();
        let content = strip(raw);
        if content.is_empty() {
            if blank_raw {
                open = false;
            }
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().expect("non-empty line has a token");
        if head == header {
            let n = number(tokens.next(), line, "vertex count")?;
            out.push(Block {
                header_line: line,
                n,
                pairs: Vec::new(),
            });
            open = true;
        } else if head == tag {
            if !open {
                return Err(Error::parse(line, format!("`{tag}` line outside a `{header}` block")));
            }
            let u = number(tokens.next(), line, "vertex")?;
            let v = number(tokens.next(), line, "vertex")?;
            out.last_mut().expect("open block").pairs.push((line, u, v));
        } else {
            return Err(Error::parse(line, format!("unexpected token {head:?}")));
        }
        if let Some(extra) = tokens.next() {
            return Err(Error::parse(line, format!("trailing token {extra:?}")));
        }
    }
    Ok(out)
}

fn located<T>(result: Result<T>, line: usize) -> Result<T> {
    result.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

fn build_digraph(block: &Block) -> Result<Digraph> {
    // validate pair by pair so errors point at the offending line
    let mut arcs = Vec::new();
    for &(line, u, v) in &block.pairs {
        arcs.push((u, v));
        located(Digraph::new(block.n, arcs.iter().copied()), line)?;
    }
    located(Digraph::new(block.n, arcs), block.header_line)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let blocks = blocks(text, "graph", "e")?;
    let [block] = blocks.as_slice() else {
        return Err(Error::parse(1, format!("expected one graph block, found {}", blocks.len())));
    };
    let mut edges = Vec::new();
    for &(line, u, v) in &block.pairs {
        edges.push((u, v));
        located(Graph::new(block.n, edges.iter().copied()), line)?;
    }
    located(Graph::new(block.n, edges), block.header_line)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let blocks = blocks(text, "digraph", "a")?;
    let [block] = blocks.as_slice() else {
        return Err(Error::parse(1, format!("expected one digraph block, found {}", blocks.len())));
    };
    build_digraph(block)
}

pub fn parse_digraph_set(text: &str) -> Result<Vec<Digraph>> {
    blocks(text, "digraph", "a")?.iter().map(build_digraph).collect()
}

pub fn parse_factor_set(text: &str) -> Result<FactorSet> {
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = strip(raw);
        if content.is_empty() {
            continue;
        }
        let word: Word = located(content.parse(), idx + 1)?;
        if word.is_empty() {
            return Err(Error::parse(idx + 1, "empty word"));
        }
        words.push(word);
    }
    FactorSet::new(words)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a String");
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {}\n", d.n());
    for &(u, v) in d.arcs() {
        writeln!(out, "a {u} {v}").expect("writing to a String");
    }
    out
}

pub fn write_digraph_set<'a>(set: impl IntoIterator<Item = &'a Digraph>) -> String {
    set.into_iter()
        .map(write_digraph)
        .collect::<Vec<_>>()
        .join("\n")
}
