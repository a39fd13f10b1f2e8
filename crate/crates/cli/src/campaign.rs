use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use pcflab_core::coloring::{solve_with, verify, Color, Mode, PartialColoring, SolveOptions, SolveOutcome};
use pcflab_core::density::{mad_at_most, mad_exact};
use pcflab_core::discharging::{audit, run_rules, RuleSet, Scope};
use pcflab_core::graph::{cycle_adjacency_counts, hypothesis_planar_odd6, write_graph6};
use pcflab_core::structures::{detect_reducible, find_bad_structure, in_class_h, Context};
use pcflab_core::Rational;

use crate::source::{CorpusItem, Input};

/// A statement checked graph by graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "id", rename_all = "kebab-case")]
pub enum Theorem {
    /// mad ≤ 4c/(c+2) ⇒ (PCF c-colorable ⇔ no bad structure), c ≥ 5.
    PcfMad { c: usize },
    /// mad ≤ 22/9 ⇒ (odd 4-colorable ⇔ no 5-cycle-block component).
    Odd4Mad,
    /// mad ≤ 4c/(c+2) ⇒ (odd c-colorable ⇔ no bad structure), c ≥ 5.
    OddMad { c: usize },
    /// Plane, no 4⁻-cycle sharing an edge with a 7⁻-cycle ⇒ odd 6-colorable.
    PlanarOdd6,
}

impl Theorem {
    pub fn new(arg: crate::TheoremArg, c: Option<usize>) -> anyhow::Result<Self> {
        use crate::TheoremArg as T;
        let need = |c: Option<usize>| match c {
            Some(c) if c >= 5 => Ok(c),
            Some(c) => anyhow::bail!("this theorem needs c >= 5, got {c}"),
            None => anyhow::bail!("this theorem needs --c"),
        };
        Ok(match arg {
            T::PcfMad => Theorem::PcfMad { c: need(c)? },
            T::OddMad => Theorem::OddMad { c: need(c)? },
            T::Odd4Mad => Theorem::Odd4Mad,
            T::PlanarOdd6 => Theorem::PlanarOdd6,
        })
    }

    fn colors(&self) -> usize {
        match *self {
            Theorem::PcfMad { c } | Theorem::OddMad { c } => c,
            Theorem::Odd4Mad => 4,
            Theorem::PlanarOdd6 => 6,
        }
    }

    fn mode(&self) -> Mode {
        match self {
            Theorem::PcfMad { .. } => Mode::Pcf,
            _ => Mode::Odd,
        }
    }

    fn mad_bound(&self) -> Option<Rational> {
        match *self {
            Theorem::PcfMad { c } | Theorem::OddMad { c } => Some(Rational::new(4 * c as i64, c as i64 + 2)),
            Theorem::Odd4Mad => Some(Rational::new(22, 9)),
            Theorem::PlanarOdd6 => None,
        }
    }

    fn context(&self) -> Context {
        match *self {
            Theorem::PcfMad { c } => Context::Pcf(c),
            Theorem::OddMad { c } => Context::OddMad(c),
            Theorem::Odd4Mad => Context::Odd4,
            Theorem::PlanarOdd6 => Context::PlanarOdd6,
        }
    }

    fn rules(&self) -> RuleSet {
        match *self {
            Theorem::PcfMad { c: 5 } => RuleSet::PcfC5,
            Theorem::PcfMad { c } => RuleSet::PcfC6Plus(c),
            Theorem::OddMad { c } => RuleSet::odd_with_default_eps(c),
            Theorem::Odd4Mad => RuleSet::Odd4TwoNinths,
            Theorem::PlanarOdd6 => RuleSet::PlanarOdd6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Colorable,
    NotColorable,
    /// The exceptional structure decided the answer; the solver was skipped.
    Shortcut,
    Timeout,
    /// Outside the theorem's hypothesis; nothing checked.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignRecord {
    pub index: usize,
    pub label: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub mad: Option<Rational>,
    pub in_scope: bool,
    pub outcome: Outcome,
    pub witness: Option<Vec<Color>>,
    pub witness_verified: Option<bool>,
    /// Bad structure or 5-cycle-block component, as found.
    pub exception: Option<serde_json::Value>,
    pub findings: usize,
    pub violations: usize,
    /// Plane inputs: total initial charge.
    pub charge_total: Option<Rational>,
    /// Plane inputs: (4⁻-cycle, 7⁻-cycle) pairs sharing an edge / a vertex.
    pub cycle_pairs: Option<(usize, usize)>,
    pub consistent: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub in_scope: usize,
    pub consistent: usize,
    pub timeouts: usize,
    pub shortcuts: usize,
    /// Labels of graphs contradicting the statement. Expected empty.
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub theorem: Theorem,
    pub records: Vec<CampaignRecord>,
    pub summary: Summary,
}

pub struct CampaignOptions {
    pub budget: Option<Duration>,
    pub shortcut: bool,
}

fn check(index: usize, item: &CorpusItem, th: Theorem, opts: &CampaignOptions) -> CampaignRecord {
    let g = item.input.graph();
    let mut rec = CampaignRecord {
        index,
        label: item.label.clone(),
        graph6: write_graph6(g),
        n: g.n(),
        m: g.m(),
        mad: mad_exact(g).ok(),
        in_scope: false,
        outcome: Outcome::Skipped,
        witness: None,
        witness_verified: None,
        exception: None,
        findings: 0,
        violations: 0,
        charge_total: None,
        cycle_pairs: None,
        consistent: None,
        note: None,
    };
    rec.in_scope = match (th, &item.input) {
        (Theorem::PlanarOdd6, Input::Plane(pg)) => {
            let counts = cycle_adjacency_counts(g);
            rec.cycle_pairs = Some((counts.edge_sharing, counts.vertex_sharing));
            hypothesis_planar_odd6(pg)
        }
        (Theorem::PlanarOdd6, Input::Plain(_)) => {
            rec.note = Some("needs a plane graph".into());
            false
        }
        _ => g.n() > 0 && mad_at_most(g, th.mad_bound().expect("mad theorem")),
    };
    if !rec.in_scope {
        return rec;
    }
    let input = item.input.as_ref();
    rec.findings = detect_reducible(input, th.context()).map_or(0, |f| f.len());
    if let Ok(led) = run_rules(input, th.rules()) {
        rec.violations = audit(&led, th.rules().target(), Scope::All).len();
        if th == Theorem::PlanarOdd6 {
            rec.charge_total = Some(led.total_initial());
        }
    }

    let c = th.colors();
    let exception = match th {
        Theorem::Odd4Mad => in_class_h(g).map(|w| (serde_json::to_value(&w).expect("serializable"), true)),
        Theorem::PcfMad { .. } | Theorem::OddMad { .. } => {
            find_bad_structure(g, c).map(|w| (serde_json::to_value(&w).expect("serializable"), w.is_valid_for(g, c)))
        }
        Theorem::PlanarOdd6 => None,
    };
    let exceptional = exception.is_some();
    let exception_valid = exception.as_ref().is_none_or(|e| e.1);
    rec.exception = exception.map(|e| e.0);

    if exceptional && opts.shortcut && th != Theorem::Odd4Mad {
        rec.outcome = Outcome::Shortcut;
        rec.consistent = Some(exception_valid);
        return rec;
    }
    let so = SolveOptions { exempt: None, budget: opts.budget };
    let colorable = match solve_with(g, c, th.mode(), &so) {
        SolveOutcome::Found(w) => {
            let ok = PartialColoring::from_total(&w, c as Color)
                .ok()
                .and_then(|phi| verify(g, &phi, th.mode()).ok())
                .is_some_and(|v| v.ok);
            rec.witness = Some(w);
            rec.witness_verified = Some(ok);
            rec.outcome = Outcome::Colorable;
            true
        }
        SolveOutcome::Absent => {
            rec.outcome = Outcome::NotColorable;
            false
        }
        SolveOutcome::Timeout => {
            rec.outcome = Outcome::Timeout;
            return rec;
        }
    };
    let statement = match th {
        Theorem::PlanarOdd6 => colorable && (rec.findings > 0 || rec.violations == 0),
        _ => colorable != exceptional && exception_valid,
    };
    rec.consistent = Some(statement && rec.witness_verified != Some(false));
    rec
}

/// Checks `th` on every corpus item in parallel; records keep corpus order.
pub fn run_campaign(th: Theorem, corpus: &[CorpusItem], opts: &CampaignOptions) -> CampaignReport {
    let records: Vec<CampaignRecord> = corpus.par_iter().enumerate().map(|(i, item)| check(i, item, th, opts)).collect();
    let mut summary = Summary { total: records.len(), ..Summary::default() };
    for r in &records {
        summary.in_scope += r.in_scope as usize;
        summary.timeouts += (r.outcome == Outcome::Timeout) as usize;
        summary.shortcuts += (r.outcome == Outcome::Shortcut) as usize;
        match r.consistent {
            Some(true) => summary.consistent += 1,
            Some(false) => summary.counterexamples.push(r.label.clone()),
            None => {}
        }
    }
    let campaign = match th {
        Theorem::PcfMad { c } => format!("pcf-mad-c{c}"),
        Theorem::OddMad { c } => format!("odd-mad-c{c}"),
        Theorem::Odd4Mad => "odd4-mad".into(),
        Theorem::PlanarOdd6 => "planar-odd6".into(),
    };
    CampaignReport { campaign, theorem: th, records, summary }
}

impl CampaignReport {
    pub fn write_csv<W: std::io::Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["index", "label", "graph6", "n", "m", "mad", "in_scope", "outcome", "findings", "consistent"])?;
        for r in &self.records {
            let outcome = serde_json::to_value(r.outcome).expect("serializable");
            out.write_record([
                r.index.to_string(),
                r.label.clone(),
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.mad.map(|m| m.to_string()).unwrap_or_default(),
                r.in_scope.to_string(),
                outcome.as_str().unwrap_or_default().to_string(),
                r.findings.to_string(),
                r.consistent.map(|b| b.to_string()).unwrap_or_default(),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}
