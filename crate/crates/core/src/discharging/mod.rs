//! Charge bookkeeping: initial charges, named rule sets and bound audits.
//!
//! Vertex rule sets start every vertex at its degree. The plane rule set
//! starts a vertex at d(v) − 6 and a face at 2d(f) − 6, so a connected plane
//! graph starts with total −12.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{threads, Graph, GraphRef, PlaneGraph, ThreadEnds, Vertex};
use crate::rational::Rational;
use crate::structures::{is_easy, DegStats};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DischargeError {
    #[error("wrong input: {0}")]
    WrongInput(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// The named rule sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleSet {
    /// 3⁺-vertices pay 2/9 to each close 2-vertex; target 22/9.
    Odd4TwoNinths,
    /// 3/7 to 2-neighbors and 4/21 to loaded 3- and 4-neighbors; target 20/7.
    PcfC5,
    /// (c−2)/(c+2) to 2-neighbors and (c−6)/(3(c+2)) to 3-neighbors; c ≥ 6.
    PcfC6Plus(usize),
    /// Odd c-coloring rules with a small positive slack ε.
    OddAppB { c: usize, eps: Rational },
    /// Vertex and face charges on a plane graph; target 0.
    PlanarOdd6,
}

impl RuleSet {
    /// The odd c-coloring rules with ε = 1/(100(c+2)).
    pub fn odd_with_default_eps(c: usize) -> Self {
        RuleSet::OddAppB { c, eps: Rational::new(1, 100 * (c as i64 + 2)) }
    }

    /// The final-charge lower bound the rule set is designed to reach.
    pub fn target(&self) -> Rational {
        let q = |c: usize| Rational::new(4 * c as i64, c as i64 + 2);
        match *self {
            RuleSet::Odd4TwoNinths => Rational::new(22, 9),
            RuleSet::PcfC5 => Rational::new(20, 7),
            RuleSet::PcfC6Plus(c) | RuleSet::OddAppB { c, .. } => q(c),
            RuleSet::PlanarOdd6 => Rational::ZERO,
        }
    }

    fn check(&self) -> Result<(), DischargeError> {
        match *self {
            RuleSet::PcfC6Plus(c) if c < 6 => Err(DischargeError::Precondition(format!("needs c >= 6, got {c}"))),
            RuleSet::OddAppB { c, .. } if c < 5 => Err(DischargeError::Precondition(format!("needs c >= 5, got {c}"))),
            RuleSet::OddAppB { eps, .. } if eps <= Rational::ZERO => {
                Err(DischargeError::Precondition("epsilon must be positive".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSet::Odd4TwoNinths => write!(f, "odd4"),
            RuleSet::PcfC5 => write!(f, "pcf5"),
            RuleSet::PcfC6Plus(c) => write!(f, "pcf:{c}"),
            RuleSet::OddAppB { c, eps } => write!(f, "odd:{c}:{eps}"),
            RuleSet::PlanarOdd6 => write!(f, "planar6"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown rule set {0:?}: expected odd4, pcf5, pcf:<c>, odd:<c>[:<eps>] or planar6")]
pub struct ParseRuleSetError(String);

impl FromStr for RuleSet {
    type Err = ParseRuleSetError;

    /// `odd4`, `pcf5`, `pcf:<c>` (c ≥ 6), `odd:<c>` or `odd:<c>:<eps>`, `planar6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRuleSetError(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["odd4"] => Ok(RuleSet::Odd4TwoNinths),
            ["pcf5"] => Ok(RuleSet::PcfC5),
            ["planar6"] => Ok(RuleSet::PlanarOdd6),
            ["pcf", c] => Ok(RuleSet::PcfC6Plus(c.parse().map_err(|_| bad())?)),
            ["odd", c] => Ok(RuleSet::odd_with_default_eps(c.parse().map_err(|_| bad())?)),
            ["odd", c, e] => Ok(RuleSet::OddAppB { c: c.parse().map_err(|_| bad())?, eps: e.parse().map_err(|_| bad())? }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Entity {
    Vertex(Vertex),
    Face(usize),
}

/// What a transfer pays for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransferKind {
    CloseTwoVertex,
    TwoNeighbor,
    /// A 3-neighbor with a 2-neighbor, or a 4-neighbor with three.
    LoadedNeighbor,
    ThreeNeighbor,
    HighNeighbor,
    FaceTwoVertex,
    FaceThreeVertex,
    BadFaceHighVertex,
    GoodFaceHighVertex,
    LongFaceAngle,
    TriangleThreeVertex,
    SmallFaceEasyVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: Entity,
    pub to: Entity,
    pub amount: Rational,
    pub kind: TransferKind,
    /// 1 for vertex and face rules, 2 for the vertex-to-vertex rules near
    /// small faces applied afterwards.
    pub phase: u8,
}

/// Per-entity charges before and after a rule set, with every transfer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub ruleset: RuleSet,
    pub initial_vertex: Vec<Rational>,
    pub initial_face: Vec<Rational>,
    pub final_vertex: Vec<Rational>,
    pub final_face: Vec<Rational>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    fn new(ruleset: RuleSet, vertex: Vec<Rational>, face: Vec<Rational>) -> Self {
        ChargeLedger {
            ruleset,
            final_vertex: vertex.clone(),
            final_face: face.clone(),
            initial_vertex: vertex,
            initial_face: face,
            transfers: Vec::new(),
        }
    }

    fn slot(&mut self, e: Entity) -> &mut Rational {
        match e {
            Entity::Vertex(v) => &mut self.final_vertex[v],
            Entity::Face(f) => &mut self.final_face[f],
        }
    }

    fn pay(&mut self, from: Entity, to: Entity, amount: Rational, kind: TransferKind, phase: u8) {
        if amount == Rational::ZERO {
            return;
        }
        *self.slot(from) -= amount;
        *self.slot(to) += amount;
        self.transfers.push(Transfer { from, to, amount, kind, phase });
    }

    pub fn entities(&self) -> impl Iterator<Item = (Entity, Rational, Rational)> + '_ {
        let vs = (0..self.initial_vertex.len()).map(|v| (Entity::Vertex(v), self.initial_vertex[v], self.final_vertex[v]));
        let fs = (0..self.initial_face.len()).map(|f| (Entity::Face(f), self.initial_face[f], self.final_face[f]));
        vs.chain(fs)
    }

    pub fn total_initial(&self) -> Rational {
        self.initial_vertex.iter().chain(&self.initial_face).copied().sum()
    }

    pub fn total_final(&self) -> Rational {
        self.final_vertex.iter().chain(&self.final_face).copied().sum()
    }

    /// Recomputes every final charge from the transfer log and checks the
    /// totals agree.
    pub fn is_conserved(&self) -> bool {
        let mut v = self.initial_vertex.clone();
        let mut f = self.initial_face.clone();
        for t in &self.transfers {
            for (e, sign) in [(t.from, -1), (t.to, 1)] {
                let slot = match e {
                    Entity::Vertex(i) => v.get_mut(i),
                    Entity::Face(i) => f.get_mut(i),
                };
                let Some(slot) = slot else { return false };
                *slot += Rational::from_integer(sign) * t.amount;
            }
        }
        v == self.final_vertex && f == self.final_face && self.total_initial() == self.total_final()
    }
}

/// Which entities an audit looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Vertices,
    Faces,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub entity: Entity,
    pub charge: Rational,
}

/// Entities in scope whose final charge is below `bound`.
pub fn audit(ledger: &ChargeLedger, bound: Rational, scope: Scope) -> Vec<Violation> {
    ledger
        .entities()
        .filter(|(e, _, _)| match (scope, e) {
            (Scope::All, _) => true,
            (Scope::Vertices, Entity::Vertex(_)) | (Scope::Faces, Entity::Face(_)) => true,
            _ => false,
        })
        .filter(|&(_, _, fin)| fin < bound)
        .map(|(entity, _, charge)| Violation { entity, charge })
        .collect()
}

/// Charges before any transfer.
pub fn initial_charges(input: GraphRef<'_>, ruleset: RuleSet) -> Result<ChargeLedger, DischargeError> {
    ruleset.check()?;
    let g = input.graph();
    let deg = |v: Vertex| Rational::from_integer(g.degree(v) as i64);
    match (ruleset, input.plane()) {
        (RuleSet::PlanarOdd6, Some(pg)) => {
            let vs = g.vertices().map(|v| deg(v) - Rational::from_integer(6)).collect();
            let fs = (0..pg.faces().len()).map(|f| Rational::from_integer(2 * pg.face_degree(f) as i64 - 6)).collect();
            Ok(ChargeLedger::new(ruleset, vs, fs))
        }
        (RuleSet::PlanarOdd6, None) => Err(DischargeError::WrongInput("planar rules need a plane graph".into())),
        _ => Ok(ChargeLedger::new(ruleset, g.vertices().map(deg).collect(), Vec::new())),
    }
}

/// Applies `ruleset` to `input` and returns the full ledger.
pub fn run_rules(input: GraphRef<'_>, ruleset: RuleSet) -> Result<ChargeLedger, DischargeError> {
    let mut led = initial_charges(input, ruleset)?;
    let g = input.graph();
    match ruleset {
        RuleSet::Odd4TwoNinths => odd4(g, &mut led),
        RuleSet::PcfC5 => pcf5(g, &mut led),
        RuleSet::PcfC6Plus(c) => pcf6(g, c, &mut led),
        RuleSet::OddAppB { c, eps } => odd_mad(g, c, eps, &mut led),
        RuleSet::PlanarOdd6 => planar(input.plane().expect("checked by initial_charges"), &mut led),
    }
    Ok(led)
}

use Entity::{Face as F, Vertex as V};

fn odd4(g: &Graph, led: &mut ChargeLedger) {
    let amount = Rational::new(2, 9);
    // one payment per thread end, so a thread with both ends at v is paid twice
    for t in &threads(g).threads {
        if let ThreadEnds::Anchored { first, last } = t.ends {
            for a in [first, last] {
                if g.degree(a) >= 3 {
                    for &x in &t.vertices {
                        led.pay(V(a), V(x), amount, TransferKind::CloseTwoVertex, 1);
                    }
                }
            }
        }
    }
}

fn pcf5(g: &Graph, led: &mut ChargeLedger) {
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 3 {
            continue;
        }
        for &u in g.neighbors(v) {
            let du = g.degree(u);
            if du == 2 {
                led.pay(V(v), V(u), Rational::new(3, 7), TransferKind::TwoNeighbor, 1);
            } else if d >= 4 {
                let n2 = DegStats::of(g, u).n2;
                if (du == 3 && n2 >= 1) || (du == 4 && n2 >= 3) {
                    led.pay(V(v), V(u), Rational::new(4, 21), TransferKind::LoadedNeighbor, 1);
                }
            }
        }
    }
}

fn pcf6(g: &Graph, c: usize, led: &mut ChargeLedger) {
    let c = c as i64;
    for v in g.vertices().filter(|&v| g.degree(v) >= 4) {
        for &u in g.neighbors(v) {
            match g.degree(u) {
                2 => led.pay(V(v), V(u), Rational::new(c - 2, c + 2), TransferKind::TwoNeighbor, 1),
                3 => led.pay(V(v), V(u), Rational::new(c - 6, 3 * (c + 2)), TransferKind::ThreeNeighbor, 1),
                _ => {}
            }
        }
    }
}

fn odd_mad(g: &Graph, c: usize, eps: Rational, led: &mut ChargeLedger) {
    let ci = Rational::from_integer(c as i64);
    let two = Rational::from_integer(2);
    let strong = |u: Vertex| g.degree(u) >= 4 && !is_easy(g, u);
    for v in g.vertices() {
        match g.degree(v) {
            2 => {
                for &u in g.neighbors(v) {
                    if g.degree(u) >= 3 {
                        led.pay(V(u), V(v), (ci - two) / (ci + two), TransferKind::TwoNeighbor, 1);
                    }
                }
            }
            3 => {
                let t = g.neighbors(v).iter().filter(|&&u| strong(u)).count() as i64;
                for &u in g.neighbors(v).iter().filter(|&&u| strong(u)) {
                    let amount = (two * ci - Rational::from_integer(8) + two * eps) / ((ci + two) * Rational::from_integer(t));
                    led.pay(V(u), V(v), amount, TransferKind::ThreeNeighbor, 1);
                }
            }
            d if d >= 4 => {
                for &u in g.neighbors(v).iter().filter(|&&u| strong(u)) {
                    led.pay(V(u), V(v), (Rational::ONE + eps) / (ci + two), TransferKind::HighNeighbor, 1);
                }
            }
            _ => {}
        }
    }
}

/// Size class of a face as the plane rules see it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceClass {
    /// Degree at most 4.
    Small,
    /// 5-face with a 2-vertex.
    Bad,
    /// 5-face without a 2-vertex.
    Good,
    /// Degree at least 6.
    Large,
}

pub fn classify_face(pg: &PlaneGraph, f: usize) -> FaceClass {
    let g = pg.graph();
    match pg.face_degree(f) {
        0..=4 => FaceClass::Small,
        5 if pg.faces()[f].iter().any(|&v| g.degree(v) == 2) => FaceClass::Bad,
        5 => FaceClass::Good,
        _ => FaceClass::Large,
    }
}

fn planar(pg: &PlaneGraph, led: &mut ChargeLedger) {
    let g = pg.graph();
    let r = Rational::new;
    for f in 0..pg.faces().len() {
        let df = pg.face_degree(f);
        let class = classify_face(pg, f);
        // each occurrence on the walk is its own incidence
        for &v in &pg.faces()[f] {
            let d = g.degree(v);
            if d == 2 {
                led.pay(F(f), V(v), r(2, 1), TransferKind::FaceTwoVertex, 1);
            } else if d == 3 && (4..=5).contains(&df) {
                led.pay(F(f), V(v), r(1, 1), TransferKind::FaceThreeVertex, 1);
            } else if d >= 4 {
                match class {
                    FaceClass::Bad => led.pay(F(f), V(v), r(1, 2), TransferKind::BadFaceHighVertex, 1),
                    FaceClass::Good => {
                        let amount = if is_easy(g, v) { r(1, 1) } else { r(1, 2) };
                        led.pay(F(f), V(v), amount, TransferKind::GoodFaceHighVertex, 1)
                    }
                    _ => {}
                }
            }
        }
        if df >= 6 {
            let dfi = df as i64;
            let to_two = r(2 * dfi - 6, dfi) - Rational::ONE;
            let other = r(dfi - 3, dfi);
            for (x, v, z) in pg.angles(f) {
                if g.degree(v) < 3 {
                    continue;
                }
                let amount = [x, z].iter().map(|&y| if g.degree(y) == 2 { to_two } else { other }).sum();
                led.pay(F(f), V(v), amount, TransferKind::LongFaceAngle, 1);
            }
        }
    }
    for f in 0..pg.faces().len() {
        let df = pg.face_degree(f);
        if df > 4 {
            continue;
        }
        let edges: Vec<(Vertex, Vertex)> = pg.boundary_edges(f).collect();
        for (a, b) in edges {
            for (v, w) in [(a, b), (b, a)] {
                if g.degree(v) < 4 || is_easy(g, v) {
                    continue;
                }
                if df == 3 && g.degree(w) == 3 {
                    led.pay(V(v), V(w), r(1, 4), TransferKind::TriangleThreeVertex, 2);
                }
                if g.degree(w) == 4 && is_easy(g, w) {
                    led.pay(V(v), V(w), r(1, 8), TransferKind::SmallFaceEasyVertex, 2);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn c5_pendant() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap()
    }

    #[test]
    fn parse_rule_sets() {
        for s in ["odd4", "pcf5", "pcf:7", "planar6", "odd:5:1/700"] {
            assert_eq!(s.parse::<RuleSet>().unwrap().to_string(), s);
        }
        assert_eq!("odd:5".parse::<RuleSet>().unwrap(), RuleSet::OddAppB { c: 5, eps: Rational::new(1, 700) });
        assert!("pcf".parse::<RuleSet>().is_err());
    }

    #[test]
    fn pendant_vertex_violates_odd4() {
        let g = c5_pendant();
        let led = run_rules((&g).into(), RuleSet::Odd4TwoNinths).unwrap();
        assert!(led.is_conserved());
        let v = audit(&led, Rational::new(22, 9), Scope::All);
        assert!(v.iter().any(|x| x.entity == Entity::Vertex(5)));
    }

    #[test]
    fn two_vertex_with_two_sponsors() {
        // 2-vertex 3 joining two K4s
        let mut e = vec![(0, 3), (3, 4)];
        for k in [[0, 1, 2, 8], [4, 5, 6, 7]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    e.push((k[i], k[j]));
                }
            }
        }
        let g = Graph::from_edges(9, &e).unwrap();
        let led = run_rules((&g).into(), RuleSet::Odd4TwoNinths).unwrap();
        assert_eq!(led.final_vertex[3], Rational::new(22, 9));
        assert_eq!(led.final_vertex[0], Rational::from_integer(4) - Rational::new(2, 9));
    }

    #[test]
    fn subdivided_regular_multigraphs_balance() {
        let m = Multigraph::new(2, vec![(0, 1); 5]).unwrap();
        let g = m.subdivided();
        let led = run_rules((&g).into(), RuleSet::PcfC5).unwrap();
        assert!(led.final_vertex.iter().all(|&x| x == Rational::new(20, 7)));
        let m = Multigraph::new(2, vec![(0, 1); 6]).unwrap();
        let g = m.subdivided();
        let led = run_rules((&g).into(), RuleSet::PcfC6Plus(6)).unwrap();
        assert!(led.final_vertex.iter().all(|&x| x == Rational::from_integer(3)));
        assert!(led.is_conserved());
    }

    #[test]
    fn odd_rules_on_subdivided_regular() {
        let m = Multigraph::new(2, vec![(0, 1); 5]).unwrap();
        let g = m.subdivided();
        let led = run_rules((&g).into(), RuleSet::odd_with_default_eps(5)).unwrap();
        assert!(led.final_vertex.iter().all(|&x| x == Rational::new(20, 7)));
        assert!(run_rules((&g).into(), RuleSet::odd_with_default_eps(4)).is_err());
    }

    #[test]
    fn long_face_angle_between_two_vertices() {
        // 8-cycle with chords making vertex 0 a 3-vertex between 2-vertices
        let mut e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        e.push((0, 4));
        let g = Graph::from_edges(8, &e).unwrap();
        let faces = vec![(0..8).collect(), vec![0, 4, 3, 2, 1], vec![0, 7, 6, 5, 4]];
        let pg = PlaneGraph::new(g, faces).unwrap();
        let led = run_rules((&pg).into(), RuleSet::PlanarOdd6).unwrap();
        let from_outer: Rational = led
            .transfers
            .iter()
            .filter(|t| t.from == Entity::Face(0) && t.to == Entity::Vertex(0))
            .map(|t| t.amount)
            .sum();
        assert_eq!(from_outer, Rational::new(1, 2));
        assert_eq!(led.total_initial(), Rational::from_integer(-12));
        assert!(led.is_conserved());
    }

    #[test]
    fn planar_needs_plane_input() {
        let g = c5_pendant();
        assert!(matches!(initial_charges((&g).into(), RuleSet::PlanarOdd6), Err(DischargeError::WrongInput(_))));
    }
}
