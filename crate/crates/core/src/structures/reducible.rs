use serde::{Deserialize, Serialize};

use super::{is_easy, lemma_bound, BoundKind, DegStats, StructureError};
use crate::graph::{blocks, threads, Graph, GraphRef, PlaneGraph, ThreadDecomposition, ThreadEnds, Vertex};

/// The setting a configuration is reducible in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Context {
    /// PCF c-coloring of graphs with mad ≤ 4c/(c+2).
    Pcf(usize),
    /// Odd c-coloring of graphs with mad ≤ 4c/(c+2).
    OddMad(usize),
    /// Odd 4-coloring of graphs with mad ≤ 22/9.
    Odd4,
    /// Odd 6-coloring of plane graphs without 4⁻-cycles adjacent to 7⁻-cycles.
    PlanarOdd6,
}

/// Configuration kinds, named by their structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    IsolatedVertex,
    OneVertex,
    /// End-block that is a cycle of length 3, 4 or 5.
    ShortCycleEndBlock,
    FourThread,
    TwoThread,
    OddVertexOnTwoThread,
    ThreeVertexAllTwoNeighbors,
    /// 4⁺-vertex with only 2-neighbors on more than d − 2 2-threads.
    ThreadsAroundLowVertex,
    /// 4⁺-vertex on a 3-thread with too many further 2-threads.
    ThreadsBesideThreeThread,
    TooManyCloseVertices,
    ThreeVertexLowOrEasyNeighbor,
    FourVertexThreeTwoNeighbors,
    TwoVertexInTriangle,
    AdjacentEasyVertices,
    /// 4- or 5-face with a 2-vertex and another 3⁻-vertex.
    SmallFaceWithTwoVertex,
    AdjacentTwoVertices,
    /// 3-vertex with a 2-neighbor outside the c = 5, n₂ = 1 case.
    ThreeVertexTwoNeighbor,
    /// 3-vertex without the required non-easy 4⁺-neighbors.
    ThreeVertexWeakNeighbors,
    /// Adjacent 3⁺-vertices satisfying the joint recoloring inequalities.
    CombinedPair,
    SemiPcfBound,
    SemiPcfBoundDeg3,
    SemiOddBound,
}

/// One occurrence of a reducible configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationFinding {
    pub rule: Rule,
    pub context: Context,
    pub vertices: Vec<Vertex>,
    /// Face indices, for face configurations.
    pub faces: Vec<usize>,
}

impl ConfigurationFinding {
    fn at(rule: Rule, context: Context, vertices: Vec<Vertex>) -> Self {
        ConfigurationFinding { rule, context, vertices, faces: Vec::new() }
    }

    /// Checks the witness against the rule's predicate from scratch.
    pub fn revalidate(&self, input: GraphRef<'_>) -> bool {
        let g = input.graph();
        let w = &self.vertices;
        if w.is_empty() || w.iter().any(|&v| v >= g.n()) {
            return false;
        }
        match self.rule {
            Rule::OneVertex => w.len() == 2 && g.neighbors(w[0]) == [w[1]],
            Rule::ShortCycleEndBlock => short_cycle_end_block(g, w),
            Rule::FourThread => is_thread_path(g, w, 4),
            Rule::TwoThread => is_thread_path(g, w, 2),
            Rule::OddVertexOnTwoThread => {
                g.degree(w[0]) % 2 == 1 && g.has_edge(w[0], w[1]) && is_thread_path(g, &w[1..], 2)
            }
            Rule::TwoVertexInTriangle => {
                w.len() == 3 && g.degree(w[0]) == 2 && g.has_edge(w[0], w[1]) && g.has_edge(w[0], w[2]) && g.has_edge(w[1], w[2])
            }
            Rule::AdjacentEasyVertices => w.len() == 2 && g.has_edge(w[0], w[1]) && is_easy(g, w[0]) && is_easy(g, w[1]),
            Rule::AdjacentTwoVertices => w.len() == 2 && g.has_edge(w[0], w[1]) && g.degree(w[0]) == 2 && g.degree(w[1]) == 2,
            Rule::CombinedPair => w.len() == 2 && g.has_edge(w[0], w[1]) && combined_pair(g, self.context, w[0], w[1]),
            Rule::SmallFaceWithTwoVertex => match (input.plane(), self.faces.as_slice()) {
                (Some(pg), &[f]) if f < pg.faces().len() => small_face(pg, f).as_deref() == Some(w.as_slice()),
                _ => false,
            },
            rule => w.len() == 1 && vertex_rule(rule, self.context, g, &threads(g), w[0]),
        }
    }
}

fn is_thread_path(g: &Graph, path: &[Vertex], min: usize) -> bool {
    path.len() >= min && path.iter().all(|&v| g.degree(v) == 2) && path.windows(2).all(|p| g.has_edge(p[0], p[1])) && {
        let mut s = path.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == path.len()
    }
}

fn short_cycle_end_block(g: &Graph, set: &[Vertex]) -> bool {
    let k = set.len();
    // 2-regular on at most 5 vertices means a single cycle
    (3..=5).contains(&k)
        && g.induced_edge_count(set) == k
        && set.iter().all(|&v| g.neighbors(v).iter().filter(|u| set.contains(u)).count() == 2)
        && set.iter().filter(|&&v| g.degree(v) > 2).count() <= 1
}

// The 3⁻-vertices of a 4- or 5-face holding a 2-vertex, when there are
// at least two of them.
fn small_face(pg: &PlaneGraph, f: usize) -> Option<Vec<Vertex>> {
    let g = pg.graph();
    if !(4..=5).contains(&pg.face_degree(f)) {
        return None;
    }
    let walk = &pg.faces()[f];
    if !walk.iter().any(|&v| g.degree(v) == 2) {
        return None;
    }
    let mut low: Vec<Vertex> = walk.iter().copied().filter(|&v| g.degree(v) <= 3).collect();
    low.sort_unstable();
    low.dedup();
    (low.len() > 1).then_some(low)
}

fn long_ends(td: &ThreadDecomposition, v: Vertex, l: usize) -> i64 {
    td.adjacent_thread_count(v, l) as i64
}

fn combined_pair(g: &Graph, ctx: Context, v1: Vertex, v2: Vertex) -> bool {
    let Context::Pcf(c) = ctx else { return false };
    let (s1, s2) = (DegStats::of(g, v1), DegStats::of(g, v2));
    if s1.degree < 3 || s2.degree < 3 {
        return false;
    }
    let lhs = |s: &DegStats| 2 * s.degree as i64 - s.n2 as i64 - 2;
    let c = c as i64;
    lhs(&s1) <= c - 1 && lhs(&s2) <= c - 2 && (s1.degree == 3 || (s1.n2 >= 1 && s2.n2 >= 1))
}

// Predicates whose witness is a single vertex.
fn vertex_rule(rule: Rule, ctx: Context, g: &Graph, td: &ThreadDecomposition, v: Vertex) -> bool {
    let s = DegStats::of(g, v);
    let d = s.degree as i64;
    let low = s.n1 + s.n2 > 0;
    match rule {
        Rule::IsolatedVertex => s.degree == 0,
        Rule::ThreeVertexAllTwoNeighbors => s.degree == 3 && s.n2 == 3,
        Rule::ThreadsAroundLowVertex => s.degree >= 4 && s.n2 == s.degree && long_ends(td, v, 2) > d - 2,
        Rule::ThreadsBesideThreeThread => {
            s.degree >= 4 && long_ends(td, v, 3) >= 1 && {
                let n3p = s.n_at_least(3).min(1) as i64;
                long_ends(td, v, 2) - 1 > d - 4 + n3p
            }
        }
        Rule::TooManyCloseVertices => {
            let close = td.close_vertices(v).len() as i64;
            s.degree >= 4 && if s.degree % 2 == 1 { close > d } else { close > 3 * d - 5 }
        }
        Rule::ThreeVertexLowOrEasyNeighbor => {
            s.degree == 3 && (s.n2 > 0 || g.neighbors(v).iter().any(|&u| is_easy(g, u)))
        }
        Rule::FourVertexThreeTwoNeighbors => s.degree == 4 && s.n2 >= 3,
        Rule::ThreeVertexTwoNeighbor => {
            s.degree == 3 && s.n2 > 0 && !(ctx == Context::Pcf(5) && s.n2 == 1)
        }
        Rule::ThreeVertexWeakNeighbors => {
            let Context::OddMad(c) = ctx else { return false };
            let strong = g.neighbors(v).iter().filter(|&&u| g.degree(u) >= 4 && !is_easy(g, u)).count();
            s.degree == 3 && !((5..=6).contains(&c) && strong >= 2 && (s.n2 + s.ne == 0 || c == 5))
        }
        Rule::SemiPcfBound => {
            let Context::Pcf(c) = ctx else { return false };
            s.n2 > 0 && lemma_bound(g, v, BoundKind::Pcf) <= c as i64 - 1
        }
        Rule::SemiPcfBoundDeg3 => {
            let Context::Pcf(c) = ctx else { return false };
            c >= 7 && s.n2 + s.n3 > 0 && lemma_bound(g, v, BoundKind::Pcf3) <= c as i64 - 1
        }
        Rule::SemiOddBound => {
            let c = match ctx {
                Context::OddMad(c) => c,
                Context::PlanarOdd6 => 6,
                _ => return false,
            };
            (s.degree % 2 == 1 || low) && lemma_bound(g, v, BoundKind::Odd) <= c as i64 - 1
        }
        _ => false,
    }
}

fn vertex_rules(ctx: Context) -> &'static [Rule] {
    match ctx {
        Context::Odd4 => &[
            Rule::IsolatedVertex,
            Rule::ThreeVertexAllTwoNeighbors,
            Rule::ThreadsAroundLowVertex,
            Rule::ThreadsBesideThreeThread,
            Rule::TooManyCloseVertices,
        ],
        Context::PlanarOdd6 => &[
            Rule::IsolatedVertex,
            Rule::ThreeVertexLowOrEasyNeighbor,
            Rule::FourVertexThreeTwoNeighbors,
            Rule::SemiOddBound,
        ],
        Context::Pcf(_) => {
            &[Rule::IsolatedVertex, Rule::ThreeVertexTwoNeighbor, Rule::SemiPcfBound, Rule::SemiPcfBoundDeg3]
        }
        Context::OddMad(_) => &[Rule::IsolatedVertex, Rule::ThreeVertexWeakNeighbors, Rule::SemiOddBound],
    }
}

/// Every occurrence of every configuration shown reducible in `ctx`.
///
/// `PlanarOdd6` needs a plane graph; the other contexts accept either kind
/// and ignore the embedding. Findings are grouped by rule in a fixed order.
pub fn detect_reducible(input: GraphRef<'_>, ctx: Context) -> Result<Vec<ConfigurationFinding>, StructureError> {
    match ctx {
        Context::PlanarOdd6 if input.plane().is_none() => {
            return Err(StructureError::WrongInput("the planar context needs a plane graph".into()))
        }
        Context::Pcf(c) | Context::OddMad(c) if c < 5 => {
            return Err(StructureError::Precondition(format!("context needs c >= 5, got {c}")))
        }
        _ => {}
    }
    let g = input.graph();
    let td = threads(g);
    let mut out = Vec::new();
    let push = |out: &mut Vec<ConfigurationFinding>, rule, vs| out.push(ConfigurationFinding::at(rule, ctx, vs));

    for v in g.vertices() {
        if g.degree(v) == 1 {
            push(&mut out, Rule::OneVertex, vec![v, g.neighbors(v)[0]]);
        }
    }
    match ctx {
        Context::Odd4 => {
            let bd = blocks(g);
            for i in bd.end_blocks() {
                if short_cycle_end_block(g, &bd.blocks[i]) {
                    push(&mut out, Rule::ShortCycleEndBlock, bd.blocks[i].clone());
                }
            }
            for t in td.threads.iter().filter(|t| t.len() >= 4) {
                push(&mut out, Rule::FourThread, t.vertices.clone());
            }
            for t in &td.threads {
                if let ThreadEnds::Anchored { first, last } = t.ends {
                    if t.len() < 2 {
                        continue;
                    }
                    if g.degree(first) % 2 == 1 {
                        push(&mut out, Rule::OddVertexOnTwoThread, [vec![first], t.vertices.clone()].concat());
                    }
                    if g.degree(last) % 2 == 1 && (last != first) {
                        let rev: Vec<Vertex> = t.vertices.iter().rev().copied().collect();
                        push(&mut out, Rule::OddVertexOnTwoThread, [vec![last], rev].concat());
                    }
                }
            }
        }
        Context::PlanarOdd6 => {
            for t in td.threads.iter().filter(|t| t.len() >= 2) {
                push(&mut out, Rule::TwoThread, t.vertices.clone());
            }
            two_vertex_triangles(g, ctx, &mut out);
            for (u, v) in g.edges() {
                if is_easy(g, u) && is_easy(g, v) {
                    push(&mut out, Rule::AdjacentEasyVertices, vec![u, v]);
                }
            }
            let pg = input.plane().expect("checked above");
            for f in 0..pg.faces().len() {
                if let Some(low) = small_face(pg, f) {
                    out.push(ConfigurationFinding { rule: Rule::SmallFaceWithTwoVertex, context: ctx, vertices: low, faces: vec![f] });
                }
            }
        }
        Context::Pcf(_) | Context::OddMad(_) => {
            for (u, v) in g.edges() {
                if g.degree(u) == 2 && g.degree(v) == 2 {
                    push(&mut out, Rule::AdjacentTwoVertices, vec![u, v]);
                }
            }
            if matches!(ctx, Context::Pcf(_)) {
                two_vertex_triangles(g, ctx, &mut out);
                for (u, v) in g.edges() {
                    for (a, b) in [(u, v), (v, u)] {
                        if combined_pair(g, ctx, a, b) {
                            push(&mut out, Rule::CombinedPair, vec![a, b]);
                        }
                    }
                }
            }
        }
    }
    for &rule in vertex_rules(ctx) {
        for v in g.vertices() {
            if vertex_rule(rule, ctx, g, &td, v) {
                push(&mut out, rule, vec![v]);
            }
        }
    }
    Ok(out)
}

fn two_vertex_triangles(g: &Graph, ctx: Context, out: &mut Vec<ConfigurationFinding>) {
    for x in g.vertices() {
        if let &[y, z] = g.neighbors(x) {
            if g.has_edge(y, z) {
                out.push(ConfigurationFinding::at(Rule::TwoVertexInTriangle, ctx, vec![x, y, z]));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(fs: &[ConfigurationFinding]) -> Vec<Rule> {
        let mut r: Vec<Rule> = fs.iter().map(|f| f.rule).collect();
        r.dedup();
        r
    }

    fn sk(n: usize) -> Graph {
        let mut e = Vec::new();
        let mut next = n;
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, next));
                e.push((j, next));
                next += 1;
            }
        }
        Graph::from_edges(next, &e).unwrap()
    }

    #[test]
    fn pendant_five_cycle_in_odd4() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let fs = detect_reducible((&g).into(), Context::Odd4).unwrap();
        assert_eq!(fs[0].rule, Rule::OneVertex);
        assert_eq!(fs[0].vertices, vec![5, 0]);
        assert!(fs.iter().any(|f| f.rule == Rule::ShortCycleEndBlock));
        assert!(fs.iter().all(|f| f.revalidate((&g).into())));
    }

    #[test]
    fn sk6_is_quiet_for_local_pcf_rules() {
        let g = sk(6);
        let fs = detect_reducible((&g).into(), Context::Pcf(5)).unwrap();
        let r = rules(&fs);
        for bad in [Rule::OneVertex, Rule::AdjacentTwoVertices, Rule::TwoVertexInTriangle] {
            assert!(!r.contains(&bad));
        }
    }

    #[test]
    fn planar_context_needs_embedding() {
        let g = sk(4);
        assert!(matches!(detect_reducible((&g).into(), Context::PlanarOdd6), Err(StructureError::WrongInput(_))));
        assert!(matches!(detect_reducible((&g).into(), Context::Pcf(4)), Err(StructureError::Precondition(_))));
    }

    #[test]
    fn combined_pair_on_adjacent_three_vertices() {
        // K4: adjacent 3-vertices, c = 6
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let fs = detect_reducible((&k4).into(), Context::Pcf(6)).unwrap();
        assert!(fs.iter().any(|f| f.rule == Rule::CombinedPair));
        for f in &fs {
            assert!(f.revalidate((&k4).into()));
        }
    }

    #[test]
    fn threads_and_close_counts() {
        // vertex 0 of degree 4 with four 2-threads to a far K5
        let mut e = Vec::new();
        let mut next = 1;
        for i in 0..4 {
            e.push((0, next));
            e.push((next, next + 1));
            e.push((next + 1, 9 + i));
            next += 2;
        }
        for i in 9..14 {
            for j in i + 1..14 {
                e.push((i, j));
            }
        }
        let g = Graph::from_edges(14, &e).unwrap();
        let fs = detect_reducible((&g).into(), Context::Odd4).unwrap();
        let hits: Vec<_> = fs.iter().filter(|f| f.vertices == vec![0]).map(|f| f.rule).collect();
        // eight close 2-vertices also exceed 3d − 5 = 7
        assert_eq!(hits, vec![Rule::ThreadsAroundLowVertex, Rule::TooManyCloseVertices]);
        // K5 vertices holding a thread end have degree 5
        assert!(fs.iter().any(|f| f.rule == Rule::OddVertexOnTwoThread));
        assert!(fs.iter().all(|f| f.revalidate((&g).into())));
    }
}
