use pcflab_core::coloring::{brute_oracle, chi, solve, verify, Mode, PartialColoring};
use pcflab_core::density::{mad_at_most, mad_exact};
use pcflab_core::discharging::{run_rules, RuleSet};
use pcflab_core::generators::{complete_multigraph, gen_gnp, gen_sk, gen_subdivided, random_regular_multigraph, FamilySpec};
use pcflab_core::graph::{canonical_form, parse_graph6, write_graph6};
use pcflab_core::structures::{detect_reducible, Context};
use pcflab_core::{Graph, Rational};
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()).prop_map(move |e| Graph::from_edges(n, &e).unwrap())
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let e: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &e).unwrap()
}

#[test]
fn subdivided_complete_graph_is_sk() {
    for n in 2..=7 {
        let a = gen_subdivided(&complete_multigraph(n));
        assert_eq!(canonical_form(&a), canonical_form(&gen_sk(n).unwrap()), "n = {n}");
    }
}

#[test]
fn sk_density() {
    for n in 3..=9i64 {
        let g = gen_sk(n as usize).unwrap();
        assert_eq!(mad_exact(&g).unwrap(), Rational::new(4 * (n - 1), n + 1));
    }
}

#[test]
fn family_strings_generate() {
    for s in ["sk:5", "ht:2", "ht:1,1,3", "cycle:7", "subdiv:k4", "subdiv:reg5x4:3", "rand:12:22/9:1", "odd4x:2"] {
        let spec: FamilySpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
        spec.generate().unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in small_graph(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn solver_matches_oracle(g in small_graph(6), c in 1usize..=4, pcf in any::<bool>()) {
        let mode = if pcf { Mode::Pcf } else { Mode::Odd };
        let fast = solve(&g, c, mode);
        let slow = brute_oracle(&g, c, mode).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(w) = fast {
            let phi = PartialColoring::from_total(&w, c as u32).unwrap();
            prop_assert!(verify(&g, &phi, mode).unwrap().ok);
        }
    }

    #[test]
    fn chromatic_numbers_ordered(g in small_graph(7)) {
        let (proper, odd, pcf) = (chi(&g, Mode::Proper), chi(&g, Mode::Odd), chi(&g, Mode::Pcf));
        prop_assert!(proper <= odd && odd <= pcf);
    }

    #[test]
    fn chi_invariant_under_relabeling(g in small_graph(7), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert_eq!(chi(&g, Mode::Odd), chi(&h, Mode::Odd));
        prop_assert_eq!(chi(&g, Mode::Pcf), chi(&h, Mode::Pcf));
    }

    #[test]
    fn mad_threshold_consistent(n in 2usize..14, p in 1i64..8, seed in any::<u64>(), a in 1i64..40, b in 1i64..10) {
        let g = gen_gnp(n, Rational::new(p, 8), seed).unwrap();
        let bound = Rational::new(a, b);
        prop_assert_eq!(mad_at_most(&g, bound), mad_exact(&g).unwrap() <= bound);
    }

    #[test]
    fn ledgers_conserve(n in 2usize..14, p in 1i64..8, seed in any::<u64>()) {
        let g = gen_gnp(n, Rational::new(p, 8), seed).unwrap();
        for rules in [RuleSet::Odd4TwoNinths, RuleSet::PcfC5, RuleSet::PcfC6Plus(7), RuleSet::odd_with_default_eps(6)] {
            let led = run_rules((&g).into(), rules).unwrap();
            prop_assert!(led.is_conserved(), "{}", rules);
        }
    }

    #[test]
    fn findings_revalidate(n in 2usize..14, p in 1i64..6, seed in any::<u64>()) {
        let g = gen_gnp(n, Rational::new(p, 10), seed).unwrap();
        for ctx in [Context::Odd4, Context::Pcf(5), Context::Pcf(7), Context::OddMad(6)] {
            for f in detect_reducible((&g).into(), ctx).unwrap() {
                prop_assert!(f.revalidate((&g).into()), "{:?}", f);
            }
        }
    }

    #[test]
    fn subdivided_regular_is_tight(r in 5usize..8, half in 1usize..4, seed in 0u64..50) {
        let g = gen_subdivided(&random_regular_multigraph(r, 2 * half, seed).unwrap());
        let c = r as i64;
        prop_assert_eq!(mad_exact(&g).unwrap(), Rational::new(4 * c, c + 2));
    }
}
