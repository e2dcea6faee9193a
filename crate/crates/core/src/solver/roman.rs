use crate::bitset::{bit, popcount, Ones, Word};
use crate::error::Result;
use crate::graph::Graph;

use super::domination::{bound_node, greedy_dominating_set};
use super::Counter;

enum Mode {
    /// Find the cheapest `S`; `best` is an exclusive upper bound.
    Minimize { best: usize, best_set: Word, floor: usize },
    /// Collect every `S` whose completion weighs exactly `target`.
    Collect { target: usize, found: Vec<Word> },
}

struct Search<'a> {
    closed: &'a [Word],
    all: Word,
    mode: Mode,
    counter: &'a mut Counter,
}

impl Search<'_> {
    fn done(&self) -> bool {
        matches!(self.mode, Mode::Minimize { best, floor, .. } if best <= floor)
    }

    /// Prune when no completion can beat (or, collecting, reach) the goal.
    fn hopeless(&self, lower: usize) -> bool {
        match self.mode {
            Mode::Minimize { best, .. } => lower >= best,
            Mode::Collect { target, .. } => lower > target,
        }
    }

    /// `chosen` is `B_2`, `ones` the vertices already fixed to 1 (none of their
    /// closed neighbors may enter `B_2`), `allowed` the vertices still eligible for `B_2`.
    fn run(
        &mut self,
        chosen: Word,
        chosen_len: usize,
        dominated: Word,
        mut ones: Word,
        allowed: Word,
    ) -> Result<()> {
        self.counter.tick()?;
        let mut open = self.all & !dominated & !ones;
        for v in Ones::new(open) {
            if self.closed[v] & allowed == 0 {
                ones |= bit(v);
            }
        }
        open &= !ones;
        let base = 2 * chosen_len + popcount(ones);
        if open == 0 {
            match &mut self.mode {
                Mode::Minimize { best, best_set, .. } => {
                    if base < *best {
                        *best = base;
                        *best_set = chosen;
                    }
                }
                Mode::Collect { target, found } => {
                    if base == *target {
                        found.push(chosen);
                    }
                }
            }
            return Ok(());
        }
        if self.hopeless(base + 1) {
            return Ok(());
        }
        let nb = bound_node(self.closed, open, allowed, true)
            .expect("vertices without candidates were fixed to 1");
        if self.hopeless(base + nb.ceil()) {
            return Ok(());
        }
        let mut allowed = allowed;
        for u in Ones::new(nb.branch_candidates) {
            self.run(
                chosen | bit(u),
                chosen_len + 1,
                dominated | self.closed[u],
                ones,
                allowed,
            )?;
            if self.done() {
                return Ok(());
            }
            allowed &= !bit(u);
        }
        // No closed neighbor of the branch vertex is in B_2: it takes label 1.
        self.run(chosen, chosen_len, dominated, ones | bit(nb.branch_vertex), allowed)
    }
}

/// Returns `(γ_R, B_2)` for the first optimum in search order.
pub(super) fn minimum_roman(g: &Graph, counter: &mut Counter) -> Result<(usize, Word)> {
    let closed = g.closed_neighborhoods();
    let upper = (2 * popcount(greedy_dominating_set(g))).min(g.n());
    let floor = bound_node(&closed, g.all(), g.all(), true)
        .expect("every vertex dominates itself")
        .ceil();
    let mut search = Search {
        closed: &closed,
        all: g.all(),
        mode: Mode::Minimize {
            best: upper + 1,
            best_set: 0,
            floor,
        },
        counter,
    };
    search.run(0, 0, 0, 0, g.all())?;
    match search.mode {
        Mode::Minimize { best, best_set, .. } => Ok((best, best_set)),
        Mode::Collect { .. } => unreachable!(),
    }
}

/// Every `B_2` whose completion has weight `target`, in discovery order.
pub(super) fn enumerate_roman(g: &Graph, target: usize, counter: &mut Counter) -> Result<Vec<Word>> {
    let closed = g.closed_neighborhoods();
    let mut search = Search {
        closed: &closed,
        all: g.all(),
        mode: Mode::Collect {
            target,
            found: Vec::new(),
        },
        counter,
    };
    search.run(0, 0, 0, 0, g.all())?;
    match search.mode {
        Mode::Collect { found, .. } => Ok(found),
        Mode::Minimize { .. } => unreachable!(),
    }
}
