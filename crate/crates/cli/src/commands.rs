use std::io::Write;
use std::time::Duration;

use anyhow::Context as _;
use serde::Serialize;
use serde_json::{json, Map, Value};

use pcflab_core::coloring::{chi_with, ChiOutcome, Mode};
use pcflab_core::density::{densest_subgraph, mad_at_most};
use pcflab_core::discharging::{audit, run_rules, ChargeLedger, RuleSet, Scope, Violation};
use pcflab_core::generators::{connected_graphs_up_to, plane, FamilySpec};
use pcflab_core::graph::write_graph6;
use pcflab_core::structures::{detect_reducible, find_bad_structure, in_class_h, ConfigurationFinding, Context};
use pcflab_core::Rational;

use crate::campaign::{run_campaign, CampaignOptions, Theorem};
use crate::source::CorpusItem;
use crate::{Cli, Command, GenArgs};

/// What `query` should compute.
#[derive(Debug, Clone, Default)]
pub struct QueryRequest {
    pub mad: bool,
    pub chi_odd: bool,
    pub chi_pcf: bool,
    pub chi_proper: bool,
    pub classes: bool,
    pub detect: Option<Context>,
    pub discharge: Option<RuleSet>,
    pub budget: Option<Duration>,
}

/// `odd4`, `pcf:<c>`, `odd:<c>` or `planar6`.
pub fn parse_context(s: &str) -> anyhow::Result<Context> {
    let num = |x: &str| x.parse::<usize>().with_context(|| format!("bad color count in {s:?}"));
    Ok(match s.split_once(':') {
        None if s == "odd4" => Context::Odd4,
        None if s == "planar6" => Context::PlanarOdd6,
        Some(("pcf", c)) => Context::Pcf(num(c)?),
        Some(("odd", c)) => Context::OddMad(num(c)?),
        _ => anyhow::bail!("unknown context {s:?}: expected odd4, pcf:<c>, odd:<c> or planar6"),
    })
}

fn chi_json(out: ChiOutcome) -> Value {
    match out {
        ChiOutcome::Exact(c) => json!(c),
        ChiOutcome::Timeout { lower } => json!({ "timeout": true, "lower": lower }),
    }
}

fn context_of(rules: RuleSet) -> Context {
    match rules {
        RuleSet::Odd4TwoNinths => Context::Odd4,
        RuleSet::PcfC5 => Context::Pcf(5),
        RuleSet::PcfC6Plus(c) => Context::Pcf(c),
        RuleSet::OddAppB { c, .. } => Context::OddMad(c),
        RuleSet::PlanarOdd6 => Context::PlanarOdd6,
    }
}

/// Quantities of one graph as a single JSON object.
pub fn cmd_query(item: &CorpusItem, req: &QueryRequest) -> anyhow::Result<Value> {
    let g = item.input.graph();
    let mut out = Map::new();
    out.insert("label".into(), json!(item.label));
    out.insert("graph6".into(), json!(write_graph6(g)));
    out.insert("n".into(), json!(g.n()));
    out.insert("m".into(), json!(g.m()));
    if req.mad {
        let cert = densest_subgraph(g)?;
        out.insert("mad".into(), json!(cert.density * Rational::from_integer(2)));
        out.insert("densest".into(), json!(cert.subgraph));
    }
    for (flag, key, mode) in [
        (req.chi_odd, "chi_odd", Mode::Odd),
        (req.chi_pcf, "chi_pcf", Mode::Pcf),
        (req.chi_proper, "chi_proper", Mode::Proper),
    ] {
        if flag {
            out.insert(key.into(), chi_json(chi_with(g, mode, req.budget)));
        }
    }
    if req.classes {
        let bad: Map<String, Value> = (4..=g.max_degree())
            .filter_map(|c| find_bad_structure(g, c).map(|w| (c.to_string(), json!(w))))
            .collect();
        out.insert("bad_structures".into(), Value::Object(bad));
        out.insert("five_cycle_blocks".into(), json!(in_class_h(g)));
    }
    if let Some(ctx) = req.detect {
        out.insert("findings".into(), json!(detect_reducible(item.input.as_ref(), ctx)?));
    }
    if let Some(rules) = req.discharge {
        out.insert("discharge".into(), json!(cmd_discharge(item, rules, None)?));
    }
    Ok(Value::Object(out))
}

#[derive(Debug, Clone, Serialize)]
pub struct DischargeReport {
    pub label: String,
    pub ruleset: String,
    pub bound: Rational,
    pub total_initial: Rational,
    pub total_final: Rational,
    pub conserved: bool,
    /// The common final vertex charge, when all vertices agree.
    pub all_vertices_equal: Option<Rational>,
    pub violations: Vec<Violation>,
    pub findings: Vec<ConfigurationFinding>,
    /// Violations only occur when some reducible configuration is present.
    pub paired: bool,
    pub ledger: ChargeLedger,
}

/// Runs `rules`, audits against `bound` (default: the rule set's target)
/// and cross-references the matching detectors.
pub fn cmd_discharge(item: &CorpusItem, rules: RuleSet, bound: Option<Rational>) -> anyhow::Result<DischargeReport> {
    let input = item.input.as_ref();
    let ledger = run_rules(input, rules)?;
    let bound = bound.unwrap_or(rules.target());
    let violations = audit(&ledger, bound, Scope::All);
    let findings = detect_reducible(input, context_of(rules)).unwrap_or_default();
    let first = ledger.final_vertex.first().copied();
    let all_vertices_equal = first.filter(|&x| ledger.final_vertex.iter().all(|&y| y == x));
    Ok(DischargeReport {
        label: item.label.clone(),
        ruleset: rules.to_string(),
        bound,
        total_initial: ledger.total_initial(),
        total_final: ledger.total_final(),
        conserved: ledger.is_conserved(),
        all_vertices_equal,
        paired: violations.is_empty() || !findings.is_empty(),
        violations,
        findings,
        ledger,
    })
}

/// Text for `gen`: graph6 lines, planegraph text or JSON.
pub fn cmd_gen(args: &GenArgs) -> anyhow::Result<String> {
    let mad_max = args.mad_max.as_deref().map(str::parse::<Rational>).transpose()?;
    let keep = |g: &pcflab_core::Graph| mad_max.is_none_or(|b| mad_at_most(g, b));
    let mut text = String::new();
    if let Some(spec) = &args.family {
        let g = spec.parse::<FamilySpec>()?.generate()?;
        text = if args.json { serde_json::to_string(&g)? } else { write_graph6(&g) };
        text.push('\n');
    } else if let Some(name) = &args.plane_family {
        let pg = plane::named(name)?;
        text = if args.json { serde_json::to_string(&pg)? + "\n" } else { pg.to_text() };
    } else if let Some(n) = args.enumerate {
        anyhow::ensure!(n <= 9, "enumeration is limited to 9 vertices");
        for g in connected_graphs_up_to(n).into_iter().filter(keep) {
            text.push_str(&write_graph6(&g));
            text.push('\n');
        }
    } else {
        anyhow::bail!("give --family, --plane-family or --enumerate");
    }
    Ok(text)
}

fn emit(cli: &Cli, value: &impl Serialize) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match &cli.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub(crate) fn dispatch(cli: &Cli) -> anyhow::Result<i32> {
    let budget = Some(Duration::from_millis(cli.budget_ms));
    match &cli.command {
        Command::Query(a) => {
            let item = a.source.load()?;
            let req = QueryRequest {
                mad: a.mad,
                chi_odd: a.chi_odd,
                chi_pcf: a.chi_pcf,
                chi_proper: a.chi_proper,
                classes: a.classes,
                detect: a.detect.as_deref().map(parse_context).transpose()?,
                discharge: a.discharge.as_deref().map(str::parse).transpose()?,
                budget,
            };
            emit(cli, &cmd_query(&item, &req)?)?;
            Ok(0)
        }
        Command::Verify(a) => {
            let th = Theorem::new(a.theorem, a.c)?;
            let corpus = a.corpus()?;
            let report = run_campaign(th, &corpus, &CampaignOptions { budget, shortcut: !a.no_shortcut });
            if let Some(p) = &a.csv {
                let f = std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?;
                report.write_csv(f)?;
            }
            emit(cli, &report)?;
            Ok(if report.summary.counterexamples.is_empty() { 0 } else { 1 })
        }
        Command::Discharge(a) => {
            let item = a.source.load()?;
            let rules: RuleSet = a.rules.parse()?;
            let bound = a.bound.as_deref().map(str::parse::<Rational>).transpose()?;
            emit(cli, &cmd_discharge(&item, rules, bound)?)?;
            Ok(0)
        }
        Command::Gen(a) => {
            let text = cmd_gen(a)?;
            match &cli.out {
                Some(p) => std::fs::write(p, text)?,
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
            Ok(0)
        }
    }
}
