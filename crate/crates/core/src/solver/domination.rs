use crate::bitset::{bit, popcount, Ones, Word, WORD_BITS};
use crate::error::Result;
use crate::graph::Graph;

use super::Counter;

/// Fixed-point unit for the fractional charge bounds.
const UNIT: u64 = 1 << 40;

pub(super) struct NodeBound {
    /// Sum of per-vertex charges in units of `UNIT`.
    pub charge: u64,
    pub branch_vertex: usize,
    pub branch_candidates: Word,
}

impl NodeBound {
    /// Smallest integer not below the charge sum.
    #[inline]
    pub fn ceil(&self) -> usize {
        self.charge.div_ceil(UNIT) as usize
    }
}

/// Charges every vertex of `undominated` (see the module docs of `solver`)
/// and picks the branching vertex. Returns `None` if some vertex has no
/// remaining candidate. `roman` selects the `min(1, 2/c)` charge.
pub(super) fn bound_node(
    closed: &[Word],
    undominated: Word,
    allowed: Word,
    roman: bool,
) -> Option<NodeBound> {
    let mut cover = [0u32; WORD_BITS];
    let reach = Ones::new(undominated).fold(0, |acc, v| acc | closed[v]) & allowed;
    for u in Ones::new(reach) {
        cover[u] = popcount(closed[u] & undominated) as u32;
    }
    let mut charge = 0u64;
    let mut best: Option<(usize, usize, Word)> = None;
    for v in Ones::new(undominated) {
        let cand = closed[v] & allowed;
        if cand == 0 {
            return None;
        }
        let c = Ones::new(cand).map(|u| cover[u]).max().unwrap_or(1) as u64;
        charge += if roman {
            if c <= 2 {
                UNIT
            } else {
                2 * UNIT / c
            }
        } else {
            UNIT / c
        };
        let k = popcount(cand);
        if best.is_none_or(|(bk, _, _)| k < bk) {
            best = Some((k, v, cand));
        }
    }
    let (_, branch_vertex, branch_candidates) = best?;
    Some(NodeBound {
        charge,
        branch_vertex,
        branch_candidates,
    })
}

/// Repeatedly takes the vertex covering the most undominated vertices
/// (smallest index on ties).
pub fn greedy_dominating_set(g: &Graph) -> Word {
    let mut dominated: Word = 0;
    let mut set: Word = 0;
    while dominated != g.all() {
        let u = (0..g.n())
            .max_by_key(|&u| (popcount(g.closed_word(u) & !dominated), std::cmp::Reverse(u)))
            .expect("graph has vertices");
        set |= bit(u);
        dominated |= g.closed_word(u);
    }
    set
}

struct Search<'a> {
    closed: &'a [Word],
    all: Word,
    best: usize,
    best_set: Word,
    floor: usize,
    counter: &'a mut Counter,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.best <= self.floor
    }

    fn run(&mut self, chosen: Word, size: usize, dominated: Word, allowed: Word) -> Result<()> {
        self.counter.tick()?;
        let undominated = self.all & !dominated;
        if undominated == 0 {
            if size < self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return Ok(());
        }
        if size + 1 >= self.best {
            return Ok(());
        }
        let Some(nb) = bound_node(self.closed, undominated, allowed, false) else {
            return Ok(());
        };
        if size + nb.ceil() >= self.best {
            return Ok(());
        }
        let mut allowed = allowed;
        for u in Ones::new(nb.branch_candidates) {
            self.run(chosen | bit(u), size + 1, dominated | self.closed[u], allowed)?;
            if self.done() {
                return Ok(());
            }
            allowed &= !bit(u);
        }
        Ok(())
    }
}

pub(super) fn minimum_dominating_set(g: &Graph, counter: &mut Counter) -> Result<Word> {
    let closed = g.closed_neighborhoods();
    let upper = popcount(greedy_dominating_set(g));
    let floor = bound_node(&closed, g.all(), g.all(), false)
        .expect("every vertex dominates itself")
        .ceil();
    let mut search = Search {
        closed: &closed,
        all: g.all(),
        best: upper + 1,
        best_set: 0,
        floor,
        counter,
    };
    search.run(0, 0, 0, g.all())?;
    debug_assert!(search.best <= upper);
    Ok(search.best_set)
}
