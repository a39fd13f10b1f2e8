use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{Graph, GraphError, Vertex};

/// A graph with a fixed embedding given by its face boundary walks.
///
/// Each face is a closed walk listed as a cyclic vertex sequence; the walk
/// edge from the last vertex back to the first is implied. Every edge occurs
/// exactly twice over all walks (twice in one walk for a bridge), and a
/// connected input satisfies Euler's relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneGraph {
    graph: Graph,
    faces: Vec<Vec<Vertex>>,
}

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Plane(msg.into())
}

impl PlaneGraph {
    pub fn new(graph: Graph, faces: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let mut seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        for (i, walk) in faces.iter().enumerate() {
            if walk.is_empty() {
                if graph.m() > 0 {
                    return Err(err(format!("face {i} has an empty boundary walk")));
                }
                continue;
            }
            if walk.len() == 1 {
                return Err(err(format!("face {i}: a one-vertex walk is not closed")));
            }
            for k in 0..walk.len() {
                let (a, b) = (walk[k], walk[(k + 1) % walk.len()]);
                if a >= graph.n() || b >= graph.n() {
                    return Err(err(format!("face {i} mentions a vertex out of range")));
                }
                if !graph.has_edge(a, b) {
                    return Err(err(format!("face {i}: walk step {a}-{b} is not an edge")));
                }
                *seen.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        for (u, v) in graph.edges() {
            let count = seen.get(&(u, v)).copied().unwrap_or(0);
            if count != 2 {
                return Err(err(format!("edge {u}-{v} occurs {count} times on face boundaries, expected 2")));
            }
        }
        if graph.n() > 0 && graph.is_connected() {
            let euler = graph.n() as i64 - graph.m() as i64 + faces.len() as i64;
            if euler != 2 {
                return Err(err(format!("Euler characteristic is {euler}, expected 2")));
            }
        }
        Ok(PlaneGraph { graph, faces })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    /// Boundary walk length of face `f`.
    pub fn face_degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Corners of face `f` as `(prev, vertex, next)` triples, one per walk position.
    pub fn angles(&self, f: usize) -> impl Iterator<Item = (Vertex, Vertex, Vertex)> + '_ {
        let walk = &self.faces[f];
        let k = walk.len();
        (0..k).map(move |i| (walk[(i + k - 1) % k], walk[i], walk[(i + 1) % k]))
    }

    /// Walk edges of face `f`, one per step.
    pub fn boundary_edges(&self, f: usize) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let walk = &self.faces[f];
        let k = walk.len();
        (0..k).map(move |i| (walk[i], walk[(i + 1) % k]))
    }

    /// Parses the `planegraph` text format:
    ///
    /// ```text
    /// planegraph <n> <m> <f>
    /// e <u> <v>        (m lines)
    /// f <k> <v1> .. <vk>   (f lines)
    /// ```
    ///
    /// Tokens are whitespace-separated; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header: Vec<_> = lines.next().ok_or_else(|| err("empty input"))?.split_whitespace().collect();
        if header.len() != 4 || header[0] != "planegraph" {
            return Err(err("expected header `planegraph <n> <m> <f>`"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("not a number: {s:?}")));
        let (n, m, f) = (num(header[1])?, num(header[2])?, num(header[3])?);
        let mut edges = Vec::with_capacity(m);
        let mut faces = Vec::with_capacity(f);
        for line in lines {
            let tokens: Vec<_> = line.split_whitespace().collect();
            match tokens[0] {
                "e" if tokens.len() == 3 => edges.push((num(tokens[1])?, num(tokens[2])?)),
                "f" if tokens.len() >= 2 => {
                    let k = num(tokens[1])?;
                    if tokens.len() != k + 2 {
                        return Err(err(format!("face line declares {k} vertices but lists {}", tokens.len() - 2)));
                    }
                    faces.push(tokens[2..].iter().map(|t| num(t)).collect::<Result<Vec<_>, _>>()?);
                }
                _ => return Err(err(format!("unrecognized line: {line:?}"))),
            }
        }
        if edges.len() != m || faces.len() != f {
            return Err(err(format!(
                "header promises {m} edges and {f} faces, found {} and {}",
                edges.len(),
                faces.len()
            )));
        }
        PlaneGraph::new(Graph::from_edges(n, &edges)?, faces)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("planegraph {} {} {}\n", self.graph.n(), self.graph.m(), self.faces.len());
        for (u, v) in self.graph.edges() {
            let _ = writeln!(s, "e {u} {v}");
        }
        for walk in &self.faces {
            let _ = write!(s, "f {}", walk.len());
            for v in walk {
                let _ = write!(s, " {v}");
            }
            s.push('\n');
        }
        s
    }
}
