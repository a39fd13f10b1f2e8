//! Plane graphs with explicit face walks.

use super::GenError;
use crate::graph::{Graph, PlaneGraph, Vertex};

fn build(n: usize, edges: &[(Vertex, Vertex)], faces: Vec<Vec<Vertex>>) -> PlaneGraph {
    PlaneGraph::new(Graph::from_edges(n, edges).expect("valid edges"), faces).expect("valid embedding")
}

pub fn plane_cycle(n: usize) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(GenError::Parameter(format!("a cycle needs n >= 3, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &e, vec![(0..n).collect(), (0..n).rev().collect()]))
}

/// C_k × K₂: outer cycle `0..k`, inner cycle `k..2k`, spokes `(i, k + i)`.
pub fn prism(k: usize) -> Result<PlaneGraph, GenError> {
    if k < 3 {
        return Err(GenError::Parameter(format!("a prism needs k >= 3, got {k}")));
    }
    let mut e = Vec::new();
    let mut faces = vec![(0..k).rev().collect(), (k..2 * k).collect()];
    for i in 0..k {
        let j = (i + 1) % k;
        e.extend([(i, j), (k + i, k + j), (i, k + i)]);
        faces.push(vec![i, j, k + j, k + i]);
    }
    Ok(build(2 * k, &e, faces))
}

pub fn cube() -> PlaneGraph {
    prism(4).expect("k = 4")
}

/// Hub 0 and rim `1..=k`.
pub fn wheel(k: usize) -> Result<PlaneGraph, GenError> {
    if k < 3 {
        return Err(GenError::Parameter(format!("a wheel needs k >= 3, got {k}")));
    }
    let mut e = Vec::new();
    let mut faces = vec![(1..=k).rev().collect()];
    for i in 1..=k {
        let j = i % k + 1;
        e.extend([(0, i), (i, j)]);
        faces.push(vec![0, i, j]);
    }
    Ok(build(k + 1, &e, faces))
}

/// Outer pentagon `0..5`, a 10-cycle `5..15`, inner pentagon `15..20`.
pub fn dodecahedron() -> PlaneGraph {
    let ring = |k: usize| 5 + k % 10;
    let mut e = Vec::new();
    let mut faces = vec![(0..5).rev().collect(), (15..20).collect()];
    for i in 0..5 {
        e.extend([(i, (i + 1) % 5), (i, ring(2 * i)), (ring(2 * i + 1), 15 + i), (15 + i, 15 + (i + 1) % 5)]);
        faces.push(vec![i, (i + 1) % 5, ring(2 * i + 2), ring(2 * i + 1), ring(2 * i)]);
        faces.push(vec![15 + i, ring(2 * i + 1), ring(2 * i + 2), ring(2 * i + 3), 15 + (i + 1) % 5]);
    }
    for k in 0..10 {
        e.push((ring(k), ring(k + 1)));
    }
    build(20, &e, faces)
}

/// Two poles joined by three internally disjoint paths with `a`, `b`, `c`
/// internal vertices.
pub fn theta(a: usize, b: usize, c: usize) -> Result<PlaneGraph, GenError> {
    if [a, b, c].iter().filter(|&&x| x == 0).count() > 1 {
        return Err(GenError::Parameter("at most one path may be a direct edge".into()));
    }
    let mut n = 2;
    let mut e = Vec::new();
    let mut paths = Vec::new();
    for len in [a, b, c] {
        let inner: Vec<Vertex> = (n..n + len).collect();
        n += len;
        let mut walk = vec![0];
        walk.extend(&inner);
        walk.push(1);
        e.extend(walk.windows(2).map(|w| (w[0], w[1])));
        paths.push(walk);
    }
    // face between path i and path i+1: out along i, back along i+1
    let faces = (0..3)
        .map(|i| {
            let mut f = paths[i].clone();
            f.pop();
            let back: Vec<Vertex> = paths[(i + 1) % 3].iter().rev().copied().collect();
            f.extend(&back[..back.len() - 1]);
            f
        })
        .collect();
    Ok(build(n, &e, faces))
}

/// K_{1,k} drawn with a single face.
pub fn star(k: usize) -> Result<PlaneGraph, GenError> {
    if k == 0 {
        return Err(GenError::Parameter("a star needs k >= 1".into()));
    }
    let e: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    let walk = (1..=k).flat_map(|i| [0, i]).collect();
    Ok(build(k + 1, &e, vec![walk]))
}

/// Subdivides every edge `k` times, splicing the new vertices into the
/// face walks.
pub fn subdivide(pg: &PlaneGraph, k: usize) -> PlaneGraph {
    let g = pg.graph();
    let mut n = g.n();
    let mut e = Vec::new();
    let mut inner = std::collections::HashMap::new();
    for (u, v) in g.edges() {
        let path: Vec<Vertex> = (n..n + k).collect();
        n += k;
        let mut full = vec![u];
        full.extend(&path);
        full.push(v);
        e.extend(full.windows(2).map(|w| (w[0], w[1])));
        inner.insert((u, v), path);
    }
    let faces = pg
        .faces()
        .iter()
        .map(|walk| {
            let mut f = Vec::new();
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                f.push(a);
                let p = &inner[&(a.min(b), a.max(b))];
                if a < b {
                    f.extend(p);
                } else {
                    f.extend(p.iter().rev());
                }
            }
            f
        })
        .collect();
    build(n, &e, faces)
}

/// Named fixtures used by the test suites and the command line.
pub fn named(name: &str) -> Result<PlaneGraph, GenError> {
    let num = |s: &str| s.parse::<usize>().map_err(|_| GenError::Spec(name.to_string()));
    let (head, arg) = name.split_once(':').unwrap_or((name, ""));
    Ok(match head {
        "dodecahedron" => dodecahedron(),
        "cube" => cube(),
        "cycle" => plane_cycle(num(arg)?)?,
        "prism" => prism(num(arg)?)?,
        "wheel" => wheel(num(arg)?)?,
        "star" => star(num(arg)?)?,
        "theta" => {
            let p: Vec<usize> = arg.split(',').map(num).collect::<Result<_, _>>()?;
            let [a, b, c] = p[..] else { return Err(GenError::Spec(name.to_string())) };
            theta(a, b, c)?
        }
        "subdiv" => {
            let (k, base) = arg.split_once(':').ok_or_else(|| GenError::Spec(name.to_string()))?;
            subdivide(&named(base)?, num(k)?)
        }
        _ => return Err(GenError::Spec(name.to_string())),
    })
}
