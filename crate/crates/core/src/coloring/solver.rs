use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{semi_odd_exempt, semi_pcf_exempt, Color, Mode, PartialColoring};
use crate::graph::{Graph, Vertex};

/// Knobs for [`solve_with`].
#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Vertices whose odd/PCF condition is not required (properness still is).
    pub exempt: Option<Vec<bool>>,
    /// Wall-clock budget; `None` searches to completion.
    pub budget: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SolveOutcome {
    Found(Vec<Color>),
    Absent,
    Timeout,
}

impl SolveOutcome {
    pub fn witness(&self) -> Option<&[Color]> {
        match self {
            SolveOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    c: usize,
    mode: Mode,
    order: Vec<Vertex>,
    colors: Vec<u32>,
    // counts[v * (c + 1) + col]: neighbors of v colored col
    counts: Vec<u32>,
    remaining: Vec<usize>,
    exempt: Vec<bool>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    fn satisfied(&self, w: Vertex) -> bool {
        if self.exempt[w] || self.g.degree(w) == 0 {
            return true;
        }
        let row = &self.counts[w * (self.c + 1) + 1..(w + 1) * (self.c + 1)];
        match self.mode {
            Mode::Proper => true,
            Mode::Odd => row.iter().any(|&k| k % 2 == 1),
            Mode::Pcf => row.contains(&1),
        }
    }

    fn assign(&mut self, u: Vertex, col: usize) {
        self.colors[u] = col as u32;
        for &w in self.g.neighbors(u) {
            self.counts[w * (self.c + 1) + col] += 1;
            self.remaining[w] -= 1;
        }
    }

    fn unassign(&mut self, u: Vertex, col: usize) {
        self.colors[u] = 0;
        for &w in self.g.neighbors(u) {
            self.counts[w * (self.c + 1) + col] -= 1;
            self.remaining[w] += 1;
        }
    }

    fn run(&mut self, k: usize, max_used: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let u = self.order[k];
        if self.remaining[u] == 0 && !self.satisfied(u) {
            return false;
        }
        // first-use symmetry breaking: color max_used + 1 opens a new class
        for col in 1..=self.c.min(max_used + 1) {
            if self.counts[u * (self.c + 1) + col] > 0 {
                continue;
            }
            self.assign(u, col);
            let ok = self.g.neighbors(u).iter().all(|&w| self.remaining[w] != 0 || self.satisfied(w));
            if ok && self.run(k + 1, max_used.max(col)) {
                return true;
            }
            self.unassign(u, col);
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

// Descending degree; ties broken by breadth-first discovery so neighboring
// vertices are colored close together.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let mut bfs = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let mut starts: Vec<Vertex> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            bfs.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut rank = vec![0; g.n()];
    for (i, &v) in bfs.iter().enumerate() {
        rank[v] = i;
    }
    bfs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), rank[v]));
    bfs
}

/// Exhaustive backtracking search for a `c`-coloring of kind `mode`.
///
/// Vertices are taken in descending-degree order, a new color may only be
/// opened after all smaller ones are in use, properness is pruned on
/// assignment, and a vertex's odd/PCF condition is checked as soon as its
/// last neighbor is colored.
pub fn solve_with(g: &Graph, c: usize, mode: Mode, opts: &SolveOptions) -> SolveOutcome {
    let n = g.n();
    if n == 0 {
        return SolveOutcome::Found(Vec::new());
    }
    if c == 0 {
        return SolveOutcome::Absent;
    }
    let exempt = opts.exempt.clone().unwrap_or_else(|| vec![false; n]);
    assert_eq!(exempt.len(), n, "exemption mask length");
    let mut s = Search {
        g,
        c,
        mode,
        order: search_order(g),
        colors: vec![0; n],
        counts: vec![0; n * (c + 1)],
        remaining: g.vertices().map(|v| g.degree(v)).collect(),
        exempt,
        nodes: 0,
        deadline: opts.budget.map(|b| Instant::now() + b),
        timed_out: false,
    };
    if s.run(0, 0) {
        SolveOutcome::Found(s.colors)
    } else if s.timed_out {
        SolveOutcome::Timeout
    } else {
        SolveOutcome::Absent
    }
}

/// A witness `c`-coloring of kind `mode`, or `None` when none exists.
pub fn solve(g: &Graph, c: usize, mode: Mode) -> Option<Vec<Color>> {
    match solve_with(g, c, mode, &SolveOptions::default()) {
        SolveOutcome::Found(w) => Some(w),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChiOutcome {
    Exact(usize),
    /// Search gave up; the chromatic number is at least `lower`.
    Timeout { lower: usize },
}

/// Least `c` admitting a coloring of kind `mode`. Edgeless graphs need one
/// color (zero for the null graph).
pub fn chi(g: &Graph, mode: Mode) -> usize {
    match chi_with(g, mode, None) {
        ChiOutcome::Exact(c) => c,
        ChiOutcome::Timeout { .. } => unreachable!("no budget"),
    }
}

/// [`chi`] with a per-call budget shared by all the colorability queries.
pub fn chi_with(g: &Graph, mode: Mode, budget: Option<Duration>) -> ChiOutcome {
    if g.n() == 0 {
        return ChiOutcome::Exact(0);
    }
    let deadline = budget.map(|b| Instant::now() + b);
    // n distinct colors always work, so the loop terminates
    for c in 1..=g.n() {
        let left = deadline.map(|d| d.saturating_duration_since(Instant::now()));
        match solve_with(g, c, mode, &SolveOptions { exempt: None, budget: left }) {
            SolveOutcome::Found(_) => return ChiOutcome::Exact(c),
            SolveOutcome::Absent => {}
            SolveOutcome::Timeout => return ChiOutcome::Timeout { lower: c },
        }
    }
    unreachable!("a rainbow coloring is PCF")
}

/// A semi-PCF (`mode == Pcf`) or semi-odd (`mode == Odd`) `c`-coloring of
/// (G, Y), found by solving G−Y with the exempt set relaxed.
pub fn find_semi_coloring(g: &Graph, y: &[Vertex], c: usize, mode: Mode) -> Option<PartialColoring> {
    let exempt = match mode {
        Mode::Pcf => semi_pcf_exempt(g, y),
        Mode::Odd => semi_odd_exempt(g, y),
        Mode::Proper => vec![false; g.n()],
    };
    let in_y = super::mask(g.n(), y);
    let keep: Vec<Vertex> = g.vertices().filter(|&v| !in_y[v]).collect();
    let (h, map) = g.induced_subgraph(&keep);
    let opts = SolveOptions { exempt: Some(map.iter().map(|&v| exempt[v]).collect()), budget: None };
    let witness = solve_with(&h, c, mode, &opts);
    let w = witness.witness()?;
    let mut phi = PartialColoring::empty(g.n(), c as Color);
    for (i, &v) in map.iter().enumerate() {
        phi.set(v, w[i]);
    }
    Some(phi)
}
