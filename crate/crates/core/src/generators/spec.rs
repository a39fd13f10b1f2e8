use std::fmt;
use std::str::FromStr;

use super::*;
use crate::structures::{find_bad_structure, in_class_h};

/// A named family member, written as a short string:
///
/// | spec                 | graph                                            |
/// |----------------------|--------------------------------------------------|
/// | `sk:<n>`             | K_n with every edge subdivided                   |
/// | `ht:<t>`             | t 5-cycle blocks in a chain                      |
/// | `ht:<a>,<b>,..`      | 5-cycle blocks attached at the listed vertices   |
/// | `subdiv:k<n>`        | subdivided K_n                                   |
/// | `subdiv:reg<r>x<n>[:<seed>]` | subdivided random r-regular multigraph   |
/// | `subdiv:bip<r>x<n>[:<seed>]` | subdivided random bipartite r-regular one |
/// | `cycle:<n>`          | C_n                                              |
/// | `rand:<n>:<bound>:<seed>` | random graph with mad ≤ bound               |
/// | `gnp:<n>:<p>:<seed>` | G(n, p)                                          |
/// | `odd4x:<k>`          | 2k degree-4 vertices with seven close 2-vertices each |
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Sk(usize),
    HtChain(usize),
    Ht(Vec<usize>),
    SubdividedComplete(usize),
    SubdividedRegular { r: usize, n: usize, seed: u64 },
    SubdividedBipartite { r: usize, n: usize, seed: u64 },
    Cycle(usize),
    RandomMadBounded { n: usize, bound: Rational, seed: u64 },
    Gnp { n: usize, p: Rational, seed: u64 },
    Odd4Tight(usize),
}

impl FamilySpec {
    /// Builds the graph and re-checks the family's defining predicate.
    pub fn generate(&self) -> Result<Graph, GenError> {
        let post = |ok: bool, what: &str| if ok { Ok(()) } else { Err(GenError::Postcondition(what.to_string())) };
        let subdivided_ok = |g: &Graph, base: usize| (base..g.n()).all(|v| g.degree(v) == 2);
        Ok(match *self {
            FamilySpec::Sk(n) => {
                let g = gen_sk(n)?;
                if n >= 5 {
                    post(find_bad_structure(&g, n - 1).is_some(), "SK_n is its own bad structure")?;
                }
                g
            }
            FamilySpec::HtChain(t) => {
                let g = gen_ht_chain(t)?;
                post(in_class_h(&g).is_some_and(|w| w.t() == t), "blocks are 5-cycles")?;
                g
            }
            FamilySpec::Ht(ref att) => {
                let g = gen_ht(att)?;
                post(in_class_h(&g).is_some_and(|w| w.t() == att.len() + 1), "blocks are 5-cycles")?;
                g
            }
            FamilySpec::SubdividedComplete(n) => {
                let g = gen_subdivided(&complete_multigraph(n));
                post(subdivided_ok(&g, n), "subdivision vertices have degree 2")?;
                g
            }
            FamilySpec::SubdividedRegular { r, n, seed } => {
                let m = random_regular_multigraph(r, n, seed)?;
                let g = gen_subdivided(&m);
                post(subdivided_ok(&g, n) && (0..n).all(|v| g.degree(v) == r), "branch degrees are r")?;
                g
            }
            FamilySpec::SubdividedBipartite { r, n, seed } => {
                let m = random_bipartite_regular_multigraph(r, n, seed)?;
                let g = gen_subdivided(&m);
                post(subdivided_ok(&g, 2 * n) && (0..2 * n).all(|v| g.degree(v) == r), "branch degrees are r")?;
                g
            }
            FamilySpec::Cycle(n) => gen_cycle(n)?,
            FamilySpec::RandomMadBounded { n, bound, seed } => {
                let g = gen_random_mad_bounded(n, bound, seed)?;
                post(mad_at_most(&g, bound), "mad within bound")?;
                g
            }
            FamilySpec::Gnp { n, p, seed } => gen_gnp(n, p, seed)?,
            FamilySpec::Odd4Tight(k) => {
                let g = gen_odd4_tight(k)?;
                let td = crate::graph::threads(&g);
                post((0..2 * k).all(|v| td.close_vertices(v).len() == 7), "seven close 2-vertices")?;
                g
            }
        })
    }
}

fn list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

// `reg5x2` or `reg5x2:7`
fn rxn(s: &str, prefix: &str) -> Option<(usize, usize, u64)> {
    let (body, seed) = match s.split_once(':') {
        Some((b, sd)) => (b, sd.parse().ok()?),
        None => (s, 0),
    };
    let (r, n) = body.strip_prefix(prefix)?.split_once('x')?;
    Some((r.parse().ok()?, n.parse().ok()?, seed))
}

impl FromStr for FamilySpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::Spec(s.to_string());
        let (head, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = rest.split(':').collect();
        Ok(match head {
            "sk" => FamilySpec::Sk(num(rest)?),
            "cycle" => FamilySpec::Cycle(num(rest)?),
            "odd4x" => FamilySpec::Odd4Tight(num(rest)?),
            "ht" if !rest.contains(',') => FamilySpec::HtChain(num(rest)?),
            "ht" => FamilySpec::Ht(list(rest).ok_or_else(bad)?),
            "subdiv" => {
                if let Some(n) = rest.strip_prefix('k') {
                    FamilySpec::SubdividedComplete(num(n)?)
                } else if let Some((r, n, seed)) = rxn(rest, "reg") {
                    FamilySpec::SubdividedRegular { r, n, seed }
                } else if let Some((r, n, seed)) = rxn(rest, "bip") {
                    FamilySpec::SubdividedBipartite { r, n, seed }
                } else {
                    return Err(bad());
                }
            }
            "rand" | "gnp" => {
                let [n, q, seed] = parts[..] else { return Err(bad()) };
                let (n, q) = (num(n)?, q.parse::<Rational>().map_err(|_| bad())?);
                let seed = seed.parse().map_err(|_| bad())?;
                if head == "rand" {
                    FamilySpec::RandomMadBounded { n, bound: q, seed }
                } else {
                    FamilySpec::Gnp { n, p: q, seed }
                }
            }
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Sk(n) => write!(f, "sk:{n}"),
            FamilySpec::HtChain(t) => write!(f, "ht:{t}"),
            FamilySpec::Ht(a) => {
                let s: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                write!(f, "ht:{}", s.join(","))
            }
            FamilySpec::SubdividedComplete(n) => write!(f, "subdiv:k{n}"),
            FamilySpec::SubdividedRegular { r, n, seed } => write!(f, "subdiv:reg{r}x{n}:{seed}"),
            FamilySpec::SubdividedBipartite { r, n, seed } => write!(f, "subdiv:bip{r}x{n}:{seed}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::RandomMadBounded { n, bound, seed } => write!(f, "rand:{n}:{bound}:{seed}"),
            FamilySpec::Gnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
            FamilySpec::Odd4Tight(k) => write!(f, "odd4x:{k}"),
        }
    }
}
