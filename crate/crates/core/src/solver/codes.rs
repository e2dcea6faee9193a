use crate::bitset::{bit, popcount, Ones, Word};
use crate::error::Result;
use crate::graph::Graph;

use super::Counter;

/// Exact cover of the vertex set by closed neighborhoods.
fn cover(
    closed: &[Word],
    all: Word,
    covered: Word,
    chosen: Word,
    out: &mut Vec<Word>,
    counter: &mut Counter,
) -> Result<()> {
    counter.tick()?;
    if covered == all {
        out.push(chosen);
        return Ok(());
    }
    // Uncovered vertex with the fewest usable closed neighborhoods.
    let mut pick: Option<(usize, Word)> = None;
    for v in Ones::new(all & !covered) {
        let usable = Ones::new(closed[v])
            .filter(|&u| closed[u] & covered == 0)
            .fold(0, |acc, u| acc | bit(u));
        if usable == 0 {
            return Ok(());
        }
        if pick.is_none_or(|(_, best)| popcount(usable) < popcount(best)) {
            pick = Some((v, usable));
        }
    }
    let (_, usable) = pick.expect("an uncovered vertex exists");
    for u in Ones::new(usable) {
        cover(closed, all, covered | closed[u], chosen | bit(u), out, counter)?;
    }
    Ok(())
}

pub(super) fn perfect_codes(g: &Graph, counter: &mut Counter) -> Result<Vec<Word>> {
    let closed = g.closed_neighborhoods();
    let mut out = Vec::new();
    cover(&closed, g.all(), 0, 0, &mut out, counter)?;
    Ok(out)
}
