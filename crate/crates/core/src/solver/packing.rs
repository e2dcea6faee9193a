use crate::bitset::{bit, popcount, Ones, Word};
use crate::error::Result;
use crate::graph::Graph;

use super::Counter;

/// Number of cliques in a greedy clique cover of `pool`; bounds any
/// independent set inside `pool` from above.
fn clique_cover_bound(adj: &[Word], pool: Word) -> usize {
    let mut rest = pool;
    let mut cliques = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut clique = bit(v);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            clique |= bit(u);
            cand &= adj[u];
        }
        rest &= !clique;
        cliques += 1;
    }
    cliques
}

struct Search<'a> {
    adj: &'a [Word],
    best: usize,
    best_set: Word,
    counter: &'a mut Counter,
}

impl Search<'_> {
    fn run(&mut self, pool: Word, chosen: Word, size: usize) -> Result<()> {
        self.counter.tick()?;
        if pool == 0 {
            if size > self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return Ok(());
        }
        if size + clique_cover_bound(self.adj, pool) <= self.best {
            return Ok(());
        }
        // A maximum independent set of the pool meets N[v] for every v in it.
        let v = Ones::new(pool)
            .min_by_key(|&v| popcount(self.adj[v] & pool))
            .expect("pool is nonempty");
        let mut pool = pool;
        for u in Ones::new((self.adj[v] | bit(v)) & pool) {
            let next = pool & !(self.adj[u] | bit(u));
            self.run(next, chosen | bit(u), size + 1)?;
            pool &= !bit(u);
        }
        Ok(())
    }
}

pub(super) fn maximum_independent_set(g: &Graph, counter: &mut Counter) -> Result<Word> {
    let mut search = Search {
        adj: g.adjacency(),
        best: 0,
        best_set: 0,
        counter,
    };
    search.run(g.all(), 0, 0)?;
    Ok(search.best_set)
}
