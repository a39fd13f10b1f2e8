use super::{Color, ColoringError, Mode};
use crate::graph::Graph;

/// Largest number of candidate colorings [`brute_oracle`] will enumerate.
pub const BRUTE_LIMIT: f64 = 1e8;

// Straight from the definitions, with no pruning or ordering tricks.
fn passes(g: &Graph, colors: &[Color], c: usize, mode: Mode, counts: &mut [u32]) -> bool {
    if g.edges().any(|(u, v)| colors[u] == colors[v]) {
        return false;
    }
    if mode == Mode::Proper {
        return true;
    }
    g.vertices().filter(|&v| g.degree(v) > 0).all(|v| {
        counts.iter_mut().for_each(|k| *k = 0);
        for &u in g.neighbors(v) {
            counts[colors[u] as usize] += 1;
        }
        let counts = &counts[1..=c];
        match mode {
            Mode::Odd => counts.iter().any(|&k| k % 2 == 1),
            _ => counts.contains(&1),
        }
    })
}

/// Enumerates every assignment `V → 1..=c` in lexicographic order (vertex 0
/// most significant) and returns the first valid one.
pub fn brute_oracle(g: &Graph, c: usize, mode: Mode) -> Result<Option<Vec<Color>>, ColoringError> {
    let n = g.n();
    if (c as f64).powi(n as i32) > BRUTE_LIMIT {
        return Err(ColoringError::TooLarge { n, c: c as Color });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if c == 0 {
        return Ok(None);
    }
    let mut colors = vec![1 as Color; n];
    let mut counts = vec![0u32; c + 1];
    loop {
        if passes(g, &colors, c, mode, &mut counts) {
            return Ok(Some(colors));
        }
        // odometer step from the least significant position
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if (colors[i] as usize) < c {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(brute_oracle(&k2, 2, Mode::Pcf).unwrap(), Some(vec![1, 2]));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(brute_oracle(&c5, 4, Mode::Pcf).unwrap(), None);
        assert_eq!(brute_oracle(&c5, 4, Mode::Odd).unwrap(), None);
        assert!(brute_oracle(&c5, 5, Mode::Pcf).unwrap().is_some());
        assert_eq!(brute_oracle(&c5, 3, Mode::Proper).unwrap(), Some(vec![1, 2, 1, 2, 3]));
    }

    #[test]
    fn refuses_large_instances() {
        assert!(matches!(brute_oracle(&Graph::empty(30), 2, Mode::Odd), Err(ColoringError::TooLarge { .. })));
    }
}
