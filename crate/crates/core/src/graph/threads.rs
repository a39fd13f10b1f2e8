use serde::Serialize;

use super::{Graph, Vertex};

/// How a thread attaches to the rest of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThreadEnds {
    /// `first` is adjacent to the first thread vertex, `last` to the last
    /// one. Anchors have degree other than 2; they coincide when the thread
    /// closes a cycle through a single anchor.
    Anchored { first: Vertex, last: Vertex },
    /// The thread is a whole cycle component of 2-vertices.
    Cyclic,
}

/// A maximal path of degree-2 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thread {
    pub vertices: Vec<Vertex>,
    pub ends: ThreadEnds,
}

impl Thread {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Anchor vertices, one per end (an anchor closing a loop appears twice).
    pub fn anchors(&self) -> Vec<Vertex> {
        match self.ends {
            ThreadEnds::Anchored { first, last } => vec![first, last],
            ThreadEnds::Cyclic => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreadDecomposition {
    pub threads: Vec<Thread>,
    #[serde(skip)]
    owner: Vec<Option<usize>>,
    #[serde(skip)]
    degree_two: Vec<bool>,
}

impl ThreadDecomposition {
    /// The thread containing `v`, if `v` is a 2-vertex.
    pub fn thread_of(&self, v: Vertex) -> Option<&Thread> {
        self.owner[v].map(|i| &self.threads[i])
    }

    /// Thread ends anchored at `v`, one entry per end; `None` when `v` is a
    /// 2-vertex and anchoring is not applicable.
    pub fn anchored_at(&self, v: Vertex) -> Option<Vec<&Thread>> {
        if self.degree_two[v] {
            return None;
        }
        let mut out = Vec::new();
        for t in &self.threads {
            if let ThreadEnds::Anchored { first, last } = t.ends {
                if first == v {
                    out.push(t);
                }
                if last == v {
                    out.push(t);
                }
            }
        }
        Some(out)
    }

    /// Number of thread ends at `v` whose thread has at least `l` vertices.
    pub fn adjacent_thread_count(&self, v: Vertex, l: usize) -> usize {
        self.anchored_at(v).map_or(0, |ts| ts.iter().filter(|t| t.len() >= l).count())
    }

    /// 2-vertices lying on threads anchored at `v`, ascending.
    pub fn close_vertices(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .anchored_at(v)
            .unwrap_or_default()
            .into_iter()
            .flat_map(|t| t.vertices.iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Decomposes the 2-vertices of `g` into maximal threads, ordered by their
/// least vertex.
pub fn threads(g: &Graph) -> ThreadDecomposition {
    let n = g.n();
    let degree_two: Vec<bool> = g.vertices().map(|v| g.degree(v) == 2).collect();
    let mut owner = vec![None; n];
    let mut out = Vec::new();
    for s in g.vertices() {
        if !degree_two[s] || owner[s].is_some() {
            continue;
        }
        let id = out.len();
        owner[s] = Some(id);
        // walk away from s in both directions
        let [a, b] = [g.neighbors(s)[0], g.neighbors(s)[1]];
        let (left, left_end) = walk(g, &degree_two, s, a);
        if left_end.is_none() {
            // came back around to s: a cycle component
            let mut cyc = vec![s];
            cyc.extend(left.iter().copied().filter(|&v| v != s));
            for &v in &cyc {
                owner[v] = Some(id);
            }
            out.push(Thread { vertices: cyc, ends: ThreadEnds::Cyclic });
            continue;
        }
        let (right, right_end) = walk(g, &degree_two, s, b);
        let mut verts: Vec<Vertex> = left.into_iter().rev().collect();
        verts.push(s);
        verts.extend(right);
        for &v in &verts {
            owner[v] = Some(id);
        }
        let (first, last) = (left_end.unwrap(), right_end.expect("path thread ends on both sides"));
        out.push(Thread { vertices: verts, ends: ThreadEnds::Anchored { first, last } });
    }
    ThreadDecomposition { threads: out, owner, degree_two }
}

// Follows 2-vertices from `from` through `next`; returns the visited
// 2-vertices and the anchor reached, or `None` if the walk returned to `from`.
fn walk(g: &Graph, degree_two: &[bool], from: Vertex, mut next: Vertex) -> (Vec<Vertex>, Option<Vertex>) {
    let mut prev = from;
    let mut seen = Vec::new();
    loop {
        if next == from {
            return (seen, None);
        }
        if !degree_two[next] {
            return (seen, Some(next));
        }
        seen.push(next);
        let nb = g.neighbors(next);
        let step = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = next;
        next = step;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivided_k4_has_six_one_threads() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut e = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            e.push((a, 4 + i));
            e.push((b, 4 + i));
        }
        let g = Graph::from_edges(10, &e).unwrap();
        let t = threads(&g);
        assert_eq!(t.threads.len(), 6);
        assert!(t.threads.iter().all(|th| th.len() == 1));
        assert_eq!(t.threads[0].ends, ThreadEnds::Anchored { first: 0, last: 1 });
        assert_eq!(t.close_vertices(0), vec![4, 5, 6]);
        assert_eq!(t.anchored_at(4), None);
    }

    #[test]
    fn two_thread_between_branch_vertices() {
        // a=0 and b=3 are 3-vertices joined by the path 0-1-2-3 plus a K4-ish core
        let e = [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 4), (3, 5), (4, 5)];
        let g = Graph::from_edges(6, &e).unwrap();
        let t = threads(&g);
        assert_eq!(t.threads.len(), 1);
        assert_eq!(t.threads[0].vertices, vec![1, 2]);
        assert_eq!(t.threads[0].ends, ThreadEnds::Anchored { first: 0, last: 3 });
        assert_eq!(t.adjacent_thread_count(0, 2), 1);
        assert_eq!(t.adjacent_thread_count(0, 3), 0);
    }

    #[test]
    fn cycle_component_is_one_cyclic_thread() {
        let e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let t = threads(&Graph::from_edges(5, &e).unwrap());
        assert_eq!(t.threads.len(), 1);
        assert_eq!(t.threads[0].ends, ThreadEnds::Cyclic);
        let mut vs = t.threads[0].vertices.clone();
        vs.sort_unstable();
        assert_eq!(vs, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn loop_thread_through_one_anchor() {
        // triangle 0-1-2 hanging off vertex 0, plus pendant edges keeping d(0)=3
        let e = [(0, 1), (1, 2), (2, 0), (0, 3)];
        let t = threads(&Graph::from_edges(4, &e).unwrap());
        assert_eq!(t.threads.len(), 1);
        assert_eq!(t.threads[0].ends, ThreadEnds::Anchored { first: 0, last: 0 });
        assert_eq!(t.anchored_at(0).unwrap().len(), 2);
        assert_eq!(t.close_vertices(0), vec![1, 2]);
    }

    #[test]
    fn every_two_vertex_in_exactly_one_thread() {
        let e = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (6, 7), (7, 5)];
        let g = Graph::from_edges(8, &e).unwrap();
        let t = threads(&g);
        for v in g.vertices() {
            let holders = t.threads.iter().filter(|th| th.vertices.contains(&v)).count();
            assert_eq!(holders, (g.degree(v) == 2) as usize, "vertex {v}");
        }
    }
}
