use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context as _};
use pcflab_core::generators::{connected_graphs_up_to, plane, FamilySpec};
use pcflab_core::graph::{parse_graph6, write_graph6};
use pcflab_core::{Graph, GraphRef, PlaneGraph};

use crate::{SourceArgs, VerifyArgs};

/// A loaded graph, with or without an embedding.
#[derive(Debug, Clone)]
pub enum Input {
    Plain(Graph),
    Plane(PlaneGraph),
}

impl Input {
    pub fn graph(&self) -> &Graph {
        match self {
            Input::Plain(g) => g,
            Input::Plane(pg) => pg.graph(),
        }
    }

    pub fn as_ref(&self) -> GraphRef<'_> {
        match self {
            Input::Plain(g) => g.into(),
            Input::Plane(pg) => pg.into(),
        }
    }
}

/// One corpus member and where it came from.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub label: String,
    pub input: Input,
}

fn read_plane(path: &Path) -> anyhow::Result<PlaneGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    PlaneGraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn family(spec: &str) -> anyhow::Result<Graph> {
    let f: FamilySpec = spec.parse()?;
    Ok(f.generate()?)
}

fn graph6(s: &str) -> anyhow::Result<Graph> {
    parse_graph6(s.trim()).with_context(|| format!("parsing graph6 {s:?}"))
}

fn stdin_lines() -> anyhow::Result<Vec<String>> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text)?;
    Ok(text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect())
}

impl SourceArgs {
    /// Loads exactly one graph.
    pub fn load(&self) -> anyhow::Result<CorpusItem> {
        let given = [self.graph6.is_some(), self.family.is_some(), self.plane.is_some(), self.plane_family.is_some(), self.stdin];
        if given.iter().filter(|&&b| b).count() != 1 {
            bail!("give exactly one of --graph6, --family, --plane, --plane-family, --stdin");
        }
        Ok(if let Some(s) = &self.graph6 {
            CorpusItem { label: s.clone(), input: Input::Plain(graph6(s)?) }
        } else if let Some(s) = &self.family {
            CorpusItem { label: s.clone(), input: Input::Plain(family(s)?) }
        } else if let Some(p) = &self.plane {
            CorpusItem { label: p.display().to_string(), input: Input::Plane(read_plane(p)?) }
        } else if let Some(s) = &self.plane_family {
            CorpusItem { label: s.clone(), input: Input::Plane(plane::named(s)?) }
        } else {
            let lines = stdin_lines()?;
            let [line] = lines.as_slice() else { bail!("expected one graph6 line on stdin, got {}", lines.len()) };
            CorpusItem { label: line.clone(), input: Input::Plain(graph6(line)?) }
        })
    }
}

/// Default cap on exhaustive enumeration.
pub const EXHAUSTIVE_CAP: usize = 7;

impl VerifyArgs {
    /// Collects the corpus in the order the sources were given.
    pub fn corpus(&self) -> anyhow::Result<Vec<CorpusItem>> {
        let mut out = Vec::new();
        if let Some(n) = self.exhaustive {
            if n > EXHAUSTIVE_CAP && !self.allow_large {
                bail!("exhaustive enumeration above {EXHAUSTIVE_CAP} vertices needs --allow-large");
            }
            for g in connected_graphs_up_to(n) {
                out.push(CorpusItem { label: write_graph6(&g), input: Input::Plain(g) });
            }
        }
        for s in &self.family {
            out.push(CorpusItem { label: s.clone(), input: Input::Plain(family(s)?) });
        }
        for s in &self.graph6 {
            out.push(CorpusItem { label: s.clone(), input: Input::Plain(graph6(s)?) });
        }
        for p in &self.plane {
            out.push(CorpusItem { label: p.display().to_string(), input: Input::Plane(read_plane(p)?) });
        }
        for s in &self.plane_family {
            out.push(CorpusItem { label: s.clone(), input: Input::Plane(plane::named(s)?) });
        }
        if self.stdin {
            for line in stdin_lines()? {
                out.push(CorpusItem { input: Input::Plain(graph6(&line)?), label: line });
            }
        }
        if out.is_empty() {
            bail!("empty corpus: give --exhaustive, --family, --graph6, --plane, --plane-family or --stdin");
        }
        Ok(out)
    }
}
