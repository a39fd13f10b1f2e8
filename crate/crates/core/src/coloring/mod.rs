//! Proper, odd and PCF colorings: verdicts, exact solvers, a brute-force
//! oracle, and the constructive extension procedures.

mod brute;
mod extend;
mod solver;

pub use brute::{brute_oracle, BRUTE_LIMIT};
pub use extend::{
    color_subdivided, extend_lemma_semi_odd, extend_lemma_semi_pcf, extend_lemma_semi_pcf_deg3, lemma_y,
    ExtensionReport, LemmaKind,
};
pub use solver::{chi, chi_with, find_semi_coloring, solve, solve_with, ChiOutcome, SolveOptions, SolveOutcome};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Colors are `1..=palette`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries, graph has {n} vertices")]
    SizeMismatch { got: usize, n: usize },
    #[error("vertex {vertex} has color {color} outside 1..={palette}")]
    ColorOutOfRange { vertex: Vertex, color: Color, palette: Color },
    #[error("vertex {0} is uncolored but the check needs a total coloring")]
    Partial(Vertex),
    #[error("vertex {0} lies in Y and must stay uncolored")]
    ColoredInY(Vertex),
    #[error("instance too large for exhaustive enumeration: {c}^{n} colorings")]
    TooLarge { n: usize, c: Color },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A step the construction guarantees went wrong; indicates a bug or a
    /// gap in the argument being executed.
    #[error("internal inconsistency: {0}")]
    Alarm(String),
}

/// The coloring notions a verdict can be about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Proper,
    Odd,
    Pcf,
    SemiPcf,
    SemiOdd,
}

/// The total-coloring notions the solvers search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Proper,
    Odd,
    Pcf,
}

impl From<Mode> for Kind {
    fn from(m: Mode) -> Kind {
        match m {
            Mode::Proper => Kind::Proper,
            Mode::Odd => Kind::Odd,
            Mode::Pcf => Kind::Pcf,
        }
    }
}

/// Vertex → optional color, with palette size `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
    palette: Color,
}

impl PartialColoring {
    pub fn empty(n: usize, palette: Color) -> Self {
        PartialColoring { colors: vec![None; n], palette }
    }

    pub fn new(colors: Vec<Option<Color>>, palette: Color) -> Result<Self, ColoringError> {
        for (v, c) in colors.iter().enumerate() {
            if let Some(c) = *c {
                if c == 0 || c > palette {
                    return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, palette });
                }
            }
        }
        Ok(PartialColoring { colors, palette })
    }

    pub fn from_total(colors: &[Color], palette: Color) -> Result<Self, ColoringError> {
        Self::new(colors.iter().map(|&c| Some(c)).collect(), palette)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors[v]
    }

    /// Panics when `color` is outside the palette.
    pub fn set(&mut self, v: Vertex, color: Color) {
        assert!((1..=self.palette).contains(&color), "color {color} outside 1..={}", self.palette);
        self.colors[v] = Some(color);
    }

    pub fn unset(&mut self, v: Vertex) {
        self.colors[v] = None;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn to_total(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    /// Multiplicity of each color (index = color) among colored neighbors.
    pub fn neighbor_counts(&self, g: &Graph, v: Vertex) -> Vec<u32> {
        let mut counts = vec![0u32; self.palette as usize + 1];
        for &u in g.neighbors(v) {
            if let Some(c) = self.colors[u] {
                counts[c as usize] += 1;
            }
        }
        counts
    }

    /// Colors appearing on the given vertices (uncolored ones skipped),
    /// ascending and deduplicated.
    pub fn colors_of(&self, vs: impl IntoIterator<Item = Vertex>) -> Vec<Color> {
        let mut out: Vec<Color> = vs.into_iter().filter_map(|v| self.colors[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The least color with multiplicity exactly one among the colored
/// neighbors of `v`.
pub fn pcf_color_of(g: &Graph, phi: &PartialColoring, v: Vertex) -> Option<Color> {
    let counts = phi.neighbor_counts(g, v);
    (1..counts.len()).find(|&c| counts[c] == 1).map(|c| c as Color)
}

/// An odd-multiplicity color of `v`: the least one, flagged `unique` when it
/// is the only one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OddColor {
    pub color: Color,
    pub unique: bool,
}

pub fn odd_color_of(g: &Graph, phi: &PartialColoring, v: Vertex) -> Option<OddColor> {
    let counts = phi.neighbor_counts(g, v);
    let mut odd = (1..counts.len()).filter(|&c| counts[c] % 2 == 1);
    let first = odd.next()?;
    Some(OddColor { color: first as Color, unique: odd.next().is_none() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    /// Shares its color with this neighbor.
    Improper(Vertex),
    NoOddColor,
    NoPcfColor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorVerdict {
    pub kind: Kind,
    pub ok: bool,
    pub violations: Vec<(Vertex, Reason)>,
}

impl ColorVerdict {
    fn from_violations(kind: Kind, violations: Vec<(Vertex, Reason)>) -> Self {
        ColorVerdict { kind, ok: violations.is_empty(), violations }
    }
}

fn check_size(g: &Graph, phi: &PartialColoring) -> Result<(), ColoringError> {
    if phi.n() != g.n() {
        return Err(ColoringError::SizeMismatch { got: phi.n(), n: g.n() });
    }
    Ok(())
}

fn improper(g: &Graph, phi: &PartialColoring, out: &mut Vec<(Vertex, Reason)>) {
    for (u, v) in g.edges() {
        if phi.get(u).is_some() && phi.get(u) == phi.get(v) {
            out.push((u, Reason::Improper(v)));
        }
    }
}

// The parity/uniqueness condition for every vertex with a colored neighbor
// and not `exempt`.
fn condition(g: &Graph, phi: &PartialColoring, odd: bool, exempt: impl Fn(Vertex) -> bool, out: &mut Vec<(Vertex, Reason)>) {
    for v in g.vertices() {
        if exempt(v) || phi.get(v).is_none() {
            continue;
        }
        let counts = phi.neighbor_counts(g, v);
        if counts.iter().all(|&k| k == 0) {
            // no colored neighbor: isolated for the purpose of this check
            continue;
        }
        if odd && !counts.iter().any(|&k| k % 2 == 1) {
            out.push((v, Reason::NoOddColor));
        }
        if !odd && !counts.contains(&1) {
            out.push((v, Reason::NoPcfColor));
        }
    }
}

/// Checks a total coloring against `mode`. Isolated vertices are exempt
/// from the odd and PCF conditions.
pub fn verify(g: &Graph, phi: &PartialColoring, mode: Mode) -> Result<ColorVerdict, ColoringError> {
    check_size(g, phi)?;
    if let Some(v) = (0..phi.n()).find(|&v| phi.get(v).is_none()) {
        return Err(ColoringError::Partial(v));
    }
    let mut out = Vec::new();
    improper(g, phi, &mut out);
    match mode {
        Mode::Proper => {}
        Mode::Odd => condition(g, phi, true, |_| false, &mut out),
        Mode::Pcf => condition(g, phi, false, |_| false, &mut out),
    }
    Ok(ColorVerdict::from_violations(mode.into(), out))
}

fn check_semi_input(g: &Graph, y: &[bool], phi: &PartialColoring) -> Result<(), ColoringError> {
    check_size(g, phi)?;
    for v in g.vertices() {
        match (y[v], phi.get(v)) {
            (true, Some(_)) => return Err(ColoringError::ColoredInY(v)),
            (false, None) => return Err(ColoringError::Partial(v)),
            _ => {}
        }
    }
    Ok(())
}

/// Membership mask of `y`.
pub fn mask(n: usize, y: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in y {
        m[v] = true;
    }
    m
}

/// Vertices of G−Y excused from the PCF condition in a semi-PCF coloring of
/// (G, Y): neighbors of Y with degree exactly 2 in G−Y, and vertices with no
/// neighbor in G−Y.
pub fn semi_pcf_exempt(g: &Graph, y: &[Vertex]) -> Vec<bool> {
    let in_y = mask(g.n(), y);
    g.vertices()
        .map(|v| {
            if in_y[v] {
                return false;
            }
            let inside = g.neighbors(v).iter().filter(|&&u| !in_y[u]).count();
            let touches_y = inside < g.degree(v);
            inside == 0 || (touches_y && inside == 2)
        })
        .collect()
}

/// Vertices of G−Y excused from the odd condition: all of N(Y).
pub fn semi_odd_exempt(g: &Graph, y: &[Vertex]) -> Vec<bool> {
    let in_y = mask(g.n(), y);
    g.vertices().map(|v| !in_y[v] && g.neighbors(v).iter().any(|&u| in_y[u])).collect()
}

/// Checks that `phi` is a semi-PCF coloring of (G, Y).
pub fn verify_semi_pcf(g: &Graph, y: &[Vertex], phi: &PartialColoring) -> Result<ColorVerdict, ColoringError> {
    let in_y = mask(g.n(), y);
    check_semi_input(g, &in_y, phi)?;
    let exempt = semi_pcf_exempt(g, y);
    let mut out = Vec::new();
    improper(g, phi, &mut out);
    condition(g, phi, false, |v| exempt[v], &mut out);
    Ok(ColorVerdict::from_violations(Kind::SemiPcf, out))
}

/// Checks that `phi` is a semi-odd coloring of (G, Y).
pub fn verify_semi_odd(g: &Graph, y: &[Vertex], phi: &PartialColoring) -> Result<ColorVerdict, ColoringError> {
    let in_y = mask(g.n(), y);
    check_semi_input(g, &in_y, phi)?;
    let exempt = semi_odd_exempt(g, y);
    let mut out = Vec::new();
    improper(g, phi, &mut out);
    condition(g, phi, true, |v| exempt[v], &mut out);
    Ok(ColorVerdict::from_violations(Kind::SemiOdd, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn star_with(colors: &[Color]) -> (Graph, PartialColoring) {
        let e: Vec<_> = (1..=colors.len()).map(|i| (0, i)).collect();
        let g = Graph::from_edges(colors.len() + 1, &e).unwrap();
        let mut phi = PartialColoring::empty(g.n(), 5);
        for (i, &c) in colors.iter().enumerate() {
            phi.set(i + 1, c);
        }
        (g, phi)
    }

    #[test]
    fn pcf_color_queries() {
        let (g, phi) = star_with(&[1, 1, 2]);
        assert_eq!(pcf_color_of(&g, &phi, 0), Some(2));
        let (g, phi) = star_with(&[1, 1, 2, 2]);
        assert_eq!(pcf_color_of(&g, &phi, 0), None);
        let (g, phi) = star_with(&[]);
        assert_eq!(pcf_color_of(&g, &phi, 0), None);
    }

    #[test]
    fn odd_color_queries() {
        let (g, phi) = star_with(&[1, 1, 2]);
        assert_eq!(odd_color_of(&g, &phi, 0), Some(OddColor { color: 2, unique: true }));
        let (g, phi) = star_with(&[1, 2, 3]);
        assert_eq!(odd_color_of(&g, &phi, 0), Some(OddColor { color: 1, unique: false }));
        let (g, phi) = star_with(&[1, 1]);
        assert_eq!(odd_color_of(&g, &phi, 0), None);
    }

    #[test]
    fn five_cycle_verdicts() {
        let g = cycle(5);
        let phi = PartialColoring::from_total(&[1, 2, 1, 2, 3], 3).unwrap();
        assert!(verify(&g, &phi, Mode::Proper).unwrap().ok);
        // vertex 1 sees {1,1} and vertex 2 sees {2,2}; 0, 3, 4 see two colors
        let odd = verify(&g, &phi, Mode::Odd).unwrap();
        assert_eq!(odd.violations, vec![(1, Reason::NoOddColor), (2, Reason::NoOddColor)]);
        let rainbow = PartialColoring::from_total(&[1, 2, 3, 4, 5], 5).unwrap();
        assert!(verify(&g, &rainbow, Mode::Pcf).unwrap().ok);
        let mono = PartialColoring::from_total(&[1; 5], 1).unwrap();
        assert!(!verify(&g, &mono, Mode::Proper).unwrap().ok);
        assert!(verify(&g, &PartialColoring::empty(5, 3), Mode::Proper).is_err());
    }

    #[test]
    fn isolated_vertices_are_exempt() {
        let g = Graph::empty(2);
        let phi = PartialColoring::from_total(&[1, 1], 1).unwrap();
        assert!(verify(&g, &phi, Mode::Pcf).unwrap().ok);
    }

    #[test]
    fn semi_pcf_examples() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        // Y = V: the null coloring is fine
        let empty = PartialColoring::empty(5, 5);
        assert!(verify_semi_pcf(&g, &[0, 1, 2, 3, 4], &empty).unwrap().ok);
        // Y = {0}: vertex 1 has degree 1 in G−Y so it needs a PCF color
        let phi = PartialColoring::new(vec![None, Some(1), Some(2), Some(3), Some(1)], 5).unwrap();
        assert!(verify_semi_pcf(&g, &[0], &phi).unwrap().ok);
        let bad = PartialColoring::new(vec![None, Some(1), Some(2), Some(1), Some(2)], 5).unwrap();
        let v = verify_semi_pcf(&g, &[0], &bad).unwrap();
        assert_eq!(v.violations, vec![(2, Reason::NoPcfColor), (3, Reason::NoPcfColor)]);
        // exempt: vertex 2 of degree 2 in G−Y, adjacent to Y={5}, same colors around
        let g2 = Graph::from_edges(6, &[(1, 2), (2, 3), (2, 5), (0, 1), (3, 4)]).unwrap();
        let phi2 = PartialColoring::new(vec![Some(3), Some(1), Some(2), Some(1), Some(3), None], 5).unwrap();
        assert!(semi_pcf_exempt(&g2, &[5])[2]);
        assert!(verify_semi_pcf(&g2, &[5], &phi2).unwrap().ok);
        assert!(matches!(verify_semi_pcf(&g, &[0], &PartialColoring::from_total(&[1, 2, 1, 2, 1], 5).unwrap()), Err(ColoringError::ColoredInY(0))));
    }

    #[test]
    fn semi_odd_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let phi = PartialColoring::new(vec![None, Some(1), Some(1), Some(1)], 5).unwrap();
        assert!(verify_semi_odd(&star, &[0], &phi).unwrap().ok);
        let g = cycle(5);
        assert_eq!(semi_odd_exempt(&g, &[0]), vec![false, true, false, false, true]);
        // 2 sees {1,1}: not exempt, must fail
        let phi = PartialColoring::new(vec![None, Some(1), Some(2), Some(1), Some(3)], 5).unwrap();
        assert_eq!(verify_semi_odd(&g, &[0], &phi).unwrap().violations, vec![(2, Reason::NoOddColor)]);
        let all = PartialColoring::empty(5, 5);
        assert!(verify_semi_odd(&g, &[0, 1, 2, 3, 4], &all).unwrap().ok);
    }

    #[test]
    fn palette_is_enforced() {
        assert!(PartialColoring::from_total(&[0], 3).is_err());
        assert!(PartialColoring::from_total(&[4], 3).is_err());
    }
}
