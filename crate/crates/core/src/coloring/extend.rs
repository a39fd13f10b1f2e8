use serde::Serialize;

use super::{
    odd_color_of, pcf_color_of, verify, verify_semi_odd, verify_semi_pcf, Color, ColoringError, Mode, PartialColoring,
};
use crate::graph::{Graph, Multigraph, Vertex};
use crate::structures::{is_easy, lemma_bound, neighbors_with_degree, BoundKind};

/// Which extension procedure a set Y belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaKind {
    /// Y = {v} ∪ N₁(v) ∪ N₂(v), PCF.
    SemiPcf,
    /// Y = {v} ∪ N₁(v) ∪ N₂(v) ∪ N₃(v), PCF, c ≥ 7.
    SemiPcfDeg3,
    /// Y = {v} ∪ N₁(v) ∪ N₂(v), odd.
    SemiOdd,
}

/// The deleted set Y for the procedure `kind` at `v`, ascending.
pub fn lemma_y(g: &Graph, v: Vertex, kind: LemmaKind) -> Vec<Vertex> {
    let hi = if kind == LemmaKind::SemiPcfDeg3 { 3 } else { 2 };
    let mut y = neighbors_with_degree(g, v, 1, hi);
    y.push(v);
    y.sort_unstable();
    y
}

/// Output of an extension procedure together with the forbidden-set sizes
/// it observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub coloring: Vec<Color>,
    /// |C| when coloring v.
    pub forbidden_at_v: usize,
    /// |C₀| when u₀ had to avoid φ(N(v)) as well.
    pub forbidden_at_u0: Option<usize>,
    /// Largest forbidden set met by any other vertex of Y.
    pub forbidden_rest: usize,
    /// Easy neighbors repaired by recoloring one of their 2⁻-neighbors.
    pub repairs: Vec<(Vertex, Vertex)>,
}

// φ_* under the current coloring. A vertex with no PCF color but one or two
// colored neighbors reports a neighbor's color instead, so that avoiding it
// gives the vertex a PCF color once the next neighbor is colored.
fn star(g: &Graph, phi: &PartialColoring, w: Vertex) -> Option<Color> {
    pcf_color_of(g, phi, w).or_else(|| {
        let cols: Vec<Color> = g.neighbors(w).iter().filter_map(|&u| phi.get(u)).collect();
        (1..=2).contains(&cols.len()).then(|| cols.into_iter().min().unwrap())
    })
}

fn odd_unique(g: &Graph, phi: &PartialColoring, w: Vertex) -> Option<Color> {
    odd_color_of(g, phi, w).filter(|o| o.unique).map(|o| o.color)
}

// φ(N(u)) ∪ φ_*(N(u)) or φ(N(u)) ∪ φ_o(N(u)).
fn around(g: &Graph, phi: &PartialColoring, u: Vertex, mode: Mode) -> Vec<Color> {
    let mut out = Vec::new();
    for &w in g.neighbors(u) {
        out.extend(phi.get(w));
        match mode {
            Mode::Pcf => out.extend(star(g, phi, w)),
            Mode::Odd => out.extend(odd_unique(g, phi, w)),
            Mode::Proper => {}
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn least_free(c: usize, forbidden: &[Color]) -> Option<Color> {
    (1..=c as Color).find(|k| !forbidden.contains(k))
}

fn pick(c: usize, forbidden: &[Color], who: &str) -> Result<Color, ColoringError> {
    least_free(c, forbidden).ok_or_else(|| ColoringError::Alarm(format!("palette exhausted at {who}")))
}

fn alarm_if(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ColoringError> {
    if cond {
        Err(ColoringError::Alarm(msg()))
    } else {
        Ok(())
    }
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<(), ColoringError> {
    if v >= g.n() {
        return Err(ColoringError::Precondition(format!("vertex {v} not in graph")));
    }
    Ok(())
}

fn check_palette(phi: &PartialColoring, c: usize, g: &Graph) -> Result<(), ColoringError> {
    if phi.n() != g.n() {
        return Err(ColoringError::SizeMismatch { got: phi.n(), n: g.n() });
    }
    if phi.palette() as usize != c {
        return Err(ColoringError::Precondition(format!("palette {} differs from c = {c}", phi.palette())));
    }
    Ok(())
}

fn finish(g: &Graph, phi: PartialColoring, mode: Mode) -> Result<Vec<Color>, ColoringError> {
    let verdict = verify(g, &phi, mode)?;
    alarm_if(!verdict.ok, || format!("extended coloring fails: {:?}", verdict.violations))?;
    Ok(phi.to_total().expect("verified total"))
}

// The shared body of the two PCF procedures. `low` is N₁ ∪ N₂ (∪ N₃), `x`
// the set X, `high` the neighbors of v outside `low`, and `c0_cap` the
// bound on |C₀| claimed by the argument.
fn extend_pcf(
    g: &Graph,
    v: Vertex,
    mut phi: PartialColoring,
    c: usize,
    x: &[Vertex],
    low: &[Vertex],
    high: &[Vertex],
    c0_cap: usize,
    rest_cap: usize,
) -> Result<ExtensionReport, ColoringError> {
    let mut forbidden = phi.colors_of(x.iter().chain(high).copied());
    forbidden.extend(high.iter().filter_map(|&w| star(g, &phi, w)));
    forbidden.sort_unstable();
    forbidden.dedup();
    let forbidden_at_v = forbidden.len();
    alarm_if(forbidden_at_v > c - 1, || format!("|C| = {forbidden_at_v} exceeds c−1 = {}", c - 1))?;
    phi.set(v, pick(c, &forbidden, "v")?);

    let mut forbidden_at_u0 = None;
    let mut forbidden_rest = 0;
    for (i, &u) in low.iter().enumerate() {
        let mut f = around(g, &phi, u, Mode::Pcf);
        if i == 0 && pcf_color_of(g, &phi, v).is_none() {
            f.extend(phi.colors_of(high.iter().copied()));
            f.sort_unstable();
            f.dedup();
            forbidden_at_u0 = Some(f.len());
            alarm_if(f.len() > c0_cap.min(c - 1), || format!("|C₀| = {} exceeds {}", f.len(), c0_cap.min(c - 1)))?;
        } else {
            forbidden_rest = forbidden_rest.max(f.len());
            alarm_if(f.len() > rest_cap.min(c - 1), || format!("forbidden set of {u} has {} colors", f.len()))?;
        }
        phi.set(u, pick(c, &f, "a low-degree neighbor")?);
    }
    Ok(ExtensionReport {
        coloring: finish(g, phi, Mode::Pcf)?,
        forbidden_at_v,
        forbidden_at_u0,
        forbidden_rest,
        repairs: Vec::new(),
    })
}

/// Extends a semi-PCF `c`-coloring of (G, {v} ∪ N₁(v) ∪ N₂(v)) to a PCF
/// `c`-coloring of G, provided 2d(v) − 2n₁(v) − n₂(v) ≤ c − 1.
///
/// v gets the least color outside φ(X ∪ N₃⁺(v)) ∪ φ_*(N₃⁺(v)), where X is
/// the set of outer neighbors of N₂(v); then the 2⁻-neighbors in ascending
/// order, the first one also avoiding φ(N₃⁺(v)) when v lacks a PCF color.
pub fn extend_lemma_semi_pcf(
    g: &Graph,
    v: Vertex,
    phi: &PartialColoring,
    c: usize,
) -> Result<ExtensionReport, ColoringError> {
    check_vertex(g, v)?;
    check_palette(phi, c, g)?;
    if c < 5 {
        return Err(ColoringError::Precondition(format!("c = {c} < 5")));
    }
    let n2 = neighbors_with_degree(g, v, 2, 2);
    if n2.is_empty() {
        return Err(ColoringError::Precondition(format!("vertex {v} has no 2-neighbor")));
    }
    let bound = lemma_bound(g, v, BoundKind::Pcf);
    if bound > c as i64 - 1 {
        return Err(ColoringError::Precondition(format!("2d − 2n₁ − n₂ = {bound} > c − 1")));
    }
    let y = lemma_y(g, v, LemmaKind::SemiPcf);
    if !verify_semi_pcf(g, &y, phi)?.ok {
        return Err(ColoringError::Precondition("input is not semi-PCF for Y".into()));
    }
    let mut x: Vec<Vertex> =
        n2.iter().flat_map(|&u| g.neighbors(u).iter().copied()).filter(|&w| w != v && !n2.contains(&w)).collect();
    x.sort_unstable();
    x.dedup();
    let low = neighbors_with_degree(g, v, 1, 2);
    let high = neighbors_with_degree(g, v, 3, usize::MAX);
    let cap = 3 + high.len() / 2;
    extend_pcf(g, v, phi.clone(), c, &x, &low, &high, cap, 4)
}

/// The c ≥ 7 variant: Y also contains N₃(v), X takes the least-index
/// neighbor outside Y of each vertex in N₂(v) ∪ N₃(v), and the requirement
/// is 2d(v) − 2n₁(v) − n₂(v) − n₃(v) ≤ c − 1.
pub fn extend_lemma_semi_pcf_deg3(
    g: &Graph,
    v: Vertex,
    phi: &PartialColoring,
    c: usize,
) -> Result<ExtensionReport, ColoringError> {
    check_vertex(g, v)?;
    check_palette(phi, c, g)?;
    if c < 7 {
        return Err(ColoringError::Precondition(format!("c = {c} < 7")));
    }
    let mid = neighbors_with_degree(g, v, 2, 3);
    if mid.is_empty() {
        return Err(ColoringError::Precondition(format!("vertex {v} has no 2- or 3-neighbor")));
    }
    let bound = lemma_bound(g, v, BoundKind::Pcf3);
    if bound > c as i64 - 1 {
        return Err(ColoringError::Precondition(format!("2d − 2n₁ − n₂ − n₃ = {bound} > c − 1")));
    }
    let y = lemma_y(g, v, LemmaKind::SemiPcfDeg3);
    if !verify_semi_pcf(g, &y, phi)?.ok {
        return Err(ColoringError::Precondition("input is not semi-PCF for Y".into()));
    }
    let mut x: Vec<Vertex> =
        mid.iter().filter_map(|&u| g.neighbors(u).iter().copied().find(|w| y.binary_search(w).is_err())).collect();
    x.sort_unstable();
    x.dedup();
    let low = neighbors_with_degree(g, v, 1, 3);
    let high = neighbors_with_degree(g, v, 4, usize::MAX);
    let cap = 5 + (c - 1 - mid.len()) / 4;
    extend_pcf(g, v, phi.clone(), c, &x, &low, &high, cap, 6)
}

/// Extends a semi-odd `c`-coloring of (G, {v} ∪ N₁(v) ∪ N₂(v)) to an odd
/// `c`-coloring of G, provided v has odd degree or a 2⁻-neighbor and
/// 2d(v) − 2n₁(v) − n₂(v) − n_e(v) ≤ c − 1.
///
/// After v, N₂(v) and N₁(v) are colored, every easy neighbor of v still
/// lacking an odd color is repaired by recoloring its least 2⁻-neighbor.
pub fn extend_lemma_semi_odd(
    g: &Graph,
    v: Vertex,
    phi: &PartialColoring,
    c: usize,
) -> Result<ExtensionReport, ColoringError> {
    check_vertex(g, v)?;
    check_palette(phi, c, g)?;
    if c < 5 {
        return Err(ColoringError::Precondition(format!("c = {c} < 5")));
    }
    let n1 = neighbors_with_degree(g, v, 1, 1);
    let n2 = neighbors_with_degree(g, v, 2, 2);
    if g.degree(v) % 2 == 0 && n1.is_empty() && n2.is_empty() {
        return Err(ColoringError::Precondition(format!("vertex {v} has even degree and no 2⁻-neighbor")));
    }
    let bound = lemma_bound(g, v, BoundKind::Odd);
    if bound > c as i64 - 1 {
        return Err(ColoringError::Precondition(format!("2d − 2n₁ − n₂ − n_e = {bound} > c − 1")));
    }
    let y = lemma_y(g, v, LemmaKind::SemiOdd);
    if !verify_semi_odd(g, &y, phi)?.ok {
        return Err(ColoringError::Precondition("input is not semi-odd for Y".into()));
    }
    let mut phi = phi.clone();
    let mut x: Vec<Vertex> =
        n2.iter().flat_map(|&u| g.neighbors(u).iter().copied()).filter(|&w| w != v && !n2.contains(&w)).collect();
    x.sort_unstable();
    x.dedup();
    let high = neighbors_with_degree(g, v, 3, usize::MAX);
    let mut forbidden = phi.colors_of(x.iter().chain(&high).copied());
    forbidden.extend(high.iter().filter(|&&w| !is_easy(g, w)).filter_map(|&w| odd_unique(g, &phi, w)));
    forbidden.sort_unstable();
    forbidden.dedup();
    let forbidden_at_v = forbidden.len();
    alarm_if(forbidden_at_v > c - 1, || format!("|C| = {forbidden_at_v} exceeds c−1 = {}", c - 1))?;
    phi.set(v, pick(c, &forbidden, "v")?);

    let mut forbidden_rest = 0;
    for &u in &n2 {
        let f = around(g, &phi, u, Mode::Odd);
        forbidden_rest = forbidden_rest.max(f.len());
        alarm_if(f.len() > 4, || format!("forbidden set of {u} has {} colors", f.len()))?;
        phi.set(u, pick(c, &f, "a 2-neighbor")?);
    }
    for &u in &n1 {
        let f = around(g, &phi, u, Mode::Odd);
        forbidden_rest = forbidden_rest.max(f.len());
        phi.set(u, pick(c, &f, "a 1-neighbor")?);
    }

    let mut repairs = Vec::new();
    for &u in g.neighbors(v) {
        if !is_easy(g, u) || odd_color_of(g, &phi, u).is_some() {
            continue;
        }
        alarm_if(g.degree(u) % 2 == 1, || format!("easy neighbor {u} of odd degree has no odd color"))?;
        let xr = *g
            .neighbors(u)
            .iter()
            .find(|&&w| g.degree(w) <= 2)
            .ok_or_else(|| ColoringError::Alarm(format!("easy neighbor {u} has no 2⁻-neighbor")))?;
        phi.unset(xr);
        let f = around(g, &phi, xr, Mode::Odd);
        alarm_if(f.len() > 4, || format!("forbidden set of {xr} has {} colors", f.len()))?;
        phi.set(xr, pick(c, &f, "a recolored 2⁻-vertex")?);
        alarm_if(odd_color_of(g, &phi, u).is_none(), || format!("repair of {u} failed"))?;
        repairs.push((u, xr));
    }
    Ok(ExtensionReport { coloring: finish(g, phi, Mode::Odd)?, forbidden_at_v, forbidden_at_u0: None, forbidden_rest, repairs })
}

/// Colors the subdivision of a connected `c`-regular multigraph G₀ (vertex
/// `n₀ + i` subdivides edge `i`): a proper coloring of G₀ on the branch
/// vertices, then each subdivision vertex greedily avoiding φ(N) ∪ φ_*(N)
/// (PCF) or φ(N) ∪ φ_o(N) (odd).
pub fn color_subdivided(g0: &Multigraph, c: usize, mode: Mode) -> Result<Vec<Color>, ColoringError> {
    if c < 5 {
        return Err(ColoringError::Precondition(format!("c = {c} < 5")));
    }
    if g0.regularity() != Some(c) {
        return Err(ColoringError::Precondition(format!("multigraph is not {c}-regular")));
    }
    if !g0.is_connected() {
        return Err(ColoringError::Precondition("multigraph is disconnected".into()));
    }
    if g0.n() == c + 1 && g0.is_simple_complete() {
        return Err(ColoringError::Precondition(format!("multigraph is K_{}", c + 1)));
    }
    let base = super::solve(&g0.simple(), c, Mode::Proper)
        .ok_or_else(|| ColoringError::Alarm(format!("no proper {c}-coloring of the branch graph")))?;
    let g = g0.subdivided();
    let mut phi = PartialColoring::empty(g.n(), c as Color);
    for (v, &col) in base.iter().enumerate() {
        phi.set(v, col);
    }
    for s in g0.n()..g.n() {
        let f = around(&g, &phi, s, mode);
        alarm_if(f.len() > 4, || format!("forbidden set of {s} has {} colors", f.len()))?;
        phi.set(s, pick(c, &f, "a subdivision vertex")?);
    }
    finish(&g, phi, mode)
}
