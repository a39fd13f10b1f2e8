//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

use std::path::Path;
use std::time::{Duration, Instant};

use pcflab_cli::campaign::{run_campaign, CampaignOptions, Outcome, Theorem};
use pcflab_cli::source::{CorpusItem, Input};
use pcflab_core::coloring::{
    brute_oracle, chi, extend_lemma_semi_odd, extend_lemma_semi_pcf, extend_lemma_semi_pcf_deg3, solve, verify,
    ExtensionReport, LemmaKind, Mode, PartialColoring,
};
use pcflab_core::density::{mad_brute, mad_exact};
use pcflab_core::discharging::{initial_charges, run_rules, ChargeLedger, RuleSet};
use pcflab_core::generators::{
    all_graphs, connected_graphs_up_to, gen_cycle, gen_gnp, gen_ht_chain, gen_odd4_tight, gen_sk, gen_subdivided,
    lemma_instance, random_regular_multigraph,
};
use pcflab_core::graph::{hypothesis_planar_odd6, write_graph6};
use pcflab_core::structures::{detect_reducible, find_bad_structure, Context};
use pcflab_core::{Graph, PlaneGraph, Rational};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn mad_exactness() -> Check {
    let start = Instant::now();
    for c in 4..=8i64 {
        let g = gen_sk(c as usize + 1).unwrap();
        let m = mad_exact(&g).map_err(|e| e.to_string())?;
        ensure(m == r(4 * c, c + 2), || format!("mad(SK_{}) = {m}", c + 1))?;
    }
    for seed in 0..200u64 {
        let n = 1 + (seed % 14) as usize;
        let p = r(1 + (seed % 7) as i64, 8);
        let g = gen_gnp(n, p, seed).unwrap();
        let (a, b) = (mad_exact(&g), mad_brute(&g));
        ensure(a == b, || format!("seed {seed}: flow {a:?} vs brute {b:?}"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("5 SK values exact, 200 random graphs agree, {:.2?}", t))
}

fn pivot_values() -> Check {
    let timed = |g: &Graph| {
        let t = Instant::now();
        let v = chi(g, Mode::Odd);
        (v, t.elapsed())
    };
    let c5 = gen_cycle(5).unwrap();
    let mut worst = Duration::ZERO;
    for (name, g, want) in [("C5", c5.clone(), 5), ("SK5", gen_sk(5).unwrap(), 5), ("SK6", gen_sk(6).unwrap(), 6)] {
        let (got, t) = timed(&g);
        worst = worst.max(t);
        ensure(got == want, || format!("odd chromatic number of {name} = {got}, expected {want}"))?;
    }
    ensure(mad_exact(&c5) == Ok(r(2, 1)), || "mad(C5) != 2".into())?;
    ensure(worst < Duration::from_secs(120), || format!("slowest call {worst:?}"))?;
    Ok(format!("odd chromatic numbers 5, 5, 6 and mad(C5) = 2; slowest {worst:.2?}"))
}

fn exhaustive(bound_theorem: Theorem) -> (Vec<CorpusItem>, pcflab_cli::CampaignReport) {
    let corpus: Vec<CorpusItem> = connected_graphs_up_to(7)
        .into_iter()
        .map(|g| CorpusItem { label: write_graph6(&g), input: Input::Plain(g) })
        .collect();
    let report = run_campaign(bound_theorem, &corpus, &CampaignOptions { budget: None, shortcut: true });
    (corpus, report)
}

fn odd4_exhaustive() -> Check {
    let (corpus, report) = exhaustive(Theorem::Odd4Mad);
    let s = &report.summary;
    ensure(s.counterexamples.is_empty(), || format!("counterexamples {:?}", s.counterexamples))?;
    ensure(s.timeouts == 0 && s.consistent == s.in_scope, || format!("{s:?}"))?;
    let members = report.records.iter().filter(|r| r.exception.is_some()).count();
    for t in 1..=4 {
        let g = gen_ht_chain(t).unwrap();
        ensure(solve(&g, 4, Mode::Odd).is_none(), || format!("H_{t} odd 4-colorable"))?;
        ensure(solve(&g, 5, Mode::Odd).is_some(), || format!("H_{t} not odd 5-colorable"))?;
        ensure(solve(&g, 5, Mode::Pcf).is_some(), || format!("H_{t} not PCF 5-colorable"))?;
    }
    Ok(format!(
        "{} connected graphs, {} with mad <= 22/9 ({} with 5-cycle blocks), 0 counterexamples; H_1..H_4 ok",
        corpus.len(),
        s.in_scope,
        members
    ))
}

fn pcf5_exhaustive() -> Check {
    let (_, report) = exhaustive(Theorem::PcfMad { c: 5 });
    let s = &report.summary;
    ensure(s.counterexamples.is_empty(), || format!("counterexamples {:?}", s.counterexamples))?;
    let all_colorable = report.records.iter().filter(|r| r.in_scope).all(|r| r.outcome == Outcome::Colorable);
    ensure(all_colorable && s.timeouts == 0, || format!("{s:?}"))?;
    let sk6 = gen_sk(6).unwrap();
    let w = find_bad_structure(&sk6, 5).ok_or("no bad structure in SK6")?;
    ensure(w.is_valid_for(&sk6, 5), || "invalid SK6 witness".into())?;
    let item = CorpusItem { label: "sk:6".into(), input: Input::Plain(sk6) };
    let rep = run_campaign(Theorem::PcfMad { c: 5 }, &[item], &CampaignOptions { budget: None, shortcut: true });
    ensure(rep.records[0].outcome == Outcome::Shortcut && rep.summary.counterexamples.is_empty(), || {
        format!("{:?}", rep.records[0].outcome)
    })?;
    Ok(format!("{} graphs with mad <= 20/7 all PCF 5-colorable; SK6 witness valid", s.in_scope))
}

fn lemma_runs() -> Check {
    type Extend = fn(&Graph, usize, &PartialColoring, usize) -> Result<ExtensionReport, pcflab_core::coloring::ColoringError>;
    let plans: [(LemmaKind, &[usize], Extend, Mode); 3] = [
        (LemmaKind::SemiPcf, &[5, 6, 7, 8], extend_lemma_semi_pcf, Mode::Pcf),
        (LemmaKind::SemiPcfDeg3, &[7, 8], extend_lemma_semi_pcf_deg3, Mode::Pcf),
        (LemmaKind::SemiOdd, &[5, 6, 7, 8], extend_lemma_semi_odd, Mode::Odd),
    ];
    let mut counts = Vec::new();
    for (kind, cs, extend, mode) in plans {
        let mut done = 0;
        for seed in 0..120u64 {
            let c = cs[seed as usize % cs.len()];
            let inst = lemma_instance(kind, c, seed).ok_or_else(|| format!("{kind:?}: no instance for seed {seed}"))?;
            let rep = extend(&inst.graph, inst.v, &inst.phi, c).map_err(|e| format!("{kind:?} seed {seed}: {e}"))?;
            let phi = PartialColoring::from_total(&rep.coloring, c as u32).map_err(|e| e.to_string())?;
            let verdict = verify(&inst.graph, &phi, mode).map_err(|e| e.to_string())?;
            ensure(verdict.ok, || format!("{kind:?} seed {seed}: output fails verification"))?;
            ensure(rep.forbidden_at_v < c, || format!("{kind:?} seed {seed}: |C| = {}", rep.forbidden_at_v))?;
            done += 1;
        }
        counts.push(format!("{kind:?} {done}"));
    }
    Ok(format!("zero alarms: {}", counts.join(", ")))
}

fn all_equal(led: &ChargeLedger, want: Rational) -> bool {
    led.final_vertex.iter().all(|&x| x == want)
}

fn ledgers() -> Check {
    let mut count = 0;
    let mut run = |g: &Graph, rules: RuleSet, want: Rational| -> Result<(), String> {
        let led = run_rules(g.into(), rules).map_err(|e| e.to_string())?;
        ensure(led.is_conserved(), || format!("{rules}: charge not conserved"))?;
        ensure(all_equal(&led, want), || format!("{rules}: final charges differ from {want}"))?;
        count += 1;
        Ok(())
    };
    for (i, n) in [2usize, 4, 6].into_iter().enumerate() {
        let g = gen_subdivided(&random_regular_multigraph(5, n, i as u64).unwrap());
        run(&g, RuleSet::PcfC5, r(20, 7))?;
        let g = gen_subdivided(&random_regular_multigraph(6, n + 1, i as u64).unwrap());
        run(&g, RuleSet::PcfC6Plus(6), r(3, 1))?;
        run(&gen_odd4_tight(i + 1).unwrap(), RuleSet::Odd4TwoNinths, r(22, 9))?;
    }
    Ok(format!("{count} ledgers balanced exactly and conserved"))
}

fn plane_fixtures() -> Check {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/plane");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pg"))
        .collect();
    paths.sort();
    ensure(paths.len() >= 10, || format!("only {} fixtures", paths.len()))?;
    let (mut hyp, mut solved) = (0, 0);
    for p in &paths {
        let name = p.file_name().unwrap().to_string_lossy().to_string();
        let pg = PlaneGraph::parse(&std::fs::read_to_string(p).unwrap()).map_err(|e| format!("{name}: {e}"))?;
        let led = initial_charges((&pg).into(), RuleSet::PlanarOdd6).map_err(|e| e.to_string())?;
        if pg.graph().is_connected() {
            ensure(led.total_initial() == r(-12, 1), || format!("{name}: initial total {}", led.total_initial()))?;
        }
        if !hypothesis_planar_odd6(&pg) {
            continue;
        }
        hyp += 1;
        let found = detect_reducible((&pg).into(), Context::PlanarOdd6).map_err(|e| e.to_string())?;
        ensure(!found.is_empty(), || format!("{name}: no reducible configuration"))?;
        if pg.graph().n() <= 30 {
            ensure(solve(pg.graph(), 6, Mode::Odd).is_some(), || format!("{name}: not odd 6-colorable"))?;
            solved += 1;
        }
    }
    Ok(format!("{} fixtures at total -12; {hyp} satisfy the hypothesis, all with findings; {solved} odd 6-colored", paths.len()))
}

fn oracle_equivalence() -> Check {
    let mut compared = 0;
    for n in 0..=6 {
        for g in all_graphs(n) {
            for c in 1..=4 {
                for mode in [Mode::Odd, Mode::Pcf] {
                    let fast = solve(&g, c, mode);
                    let slow = brute_oracle(&g, c, mode).map_err(|e| e.to_string())?;
                    ensure(fast.is_some() == slow.is_some(), || {
                        format!("{} c={c} {mode:?}: solver {fast:?}, oracle {slow:?}", write_graph6(&g))
                    })?;
                    for w in [fast, slow].into_iter().flatten() {
                        let phi = PartialColoring::from_total(&w, c as u32).map_err(|e| e.to_string())?;
                        ensure(verify(&g, &phi, mode).is_ok_and(|v| v.ok), || {
                            format!("{} c={c} {mode:?}: witness fails", write_graph6(&g))
                        })?;
                    }
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} (graph, c, mode) cases agree"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("mad exactness", mad_exactness),
        ("pivot values", pivot_values),
        ("odd 4-coloring below 22/9", odd4_exhaustive),
        ("PCF 5-coloring below 20/7", pcf5_exhaustive),
        ("extension procedures", lemma_runs),
        ("discharging identities", ledgers),
        ("plane-graph engine", plane_fixtures),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail} [{:.2?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
