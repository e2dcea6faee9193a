//! Exact solvers for the domination number, the Roman domination number,
//! the 2-packing number and perfect codes.
//!
//! # Roman domination as a search over `B_2`
//!
//! For a fixed `B_2 = S` the cheapest Roman function labels exactly the
//! vertices outside `N[S]` with 1: such a vertex has no 2-labeled neighbor,
//! so it cannot be 0, and a 1 on a vertex of `N[S]` could be lowered to 0.
//! Hence
//!
//! ```text
//! gamma_R(G) = min over S of  2|S| + n - |N[S]|
//! ```
//!
//! and the optimal Roman functions are exactly the completions of the sets
//! `S` attaining the minimum. Both the optimizer and the enumerator search
//! over `S` only.
//!
//! # Search order
//!
//! Every search branches on an undominated vertex `v` with the fewest
//! remaining candidates (ties to the smallest index) and tries the
//! candidates `u` in `N[v]` in ascending index, excluding each one from the
//! later siblings. The first optimum met in this order is the reported
//! witness, so results are reproducible.
//!
//! # Lower bounds
//!
//! Each undominated vertex `v` is charged `1 / c(v)` (domination) or
//! `min(1, 2 / c(v))` (Roman), where `c(v)` is the largest number of
//! undominated vertices a single remaining candidate in `N[v]` can cover.
//! Any completion pays at least the sum of the charges. This dominates the
//! `ceil(uncovered / (Delta + 1))` bound.

mod codes;
mod domination;
mod packing;
mod roman;

use serde::Serialize;

use crate::bitset::{popcount, VertexSet, WORD_BITS};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rdf::RomanFunction;

pub use domination::greedy_dominating_set;

/// Size guards and node budget for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolverConfig {
    /// Largest graph the optimizers accept.
    pub max_solve_n: usize,
    /// Largest graph whose optimal Roman functions may be enumerated.
    pub max_enumerate_n: usize,
    /// Maximum search nodes per invocation; `None` is unlimited.
    pub node_budget: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_solve_n: WORD_BITS,
            max_enumerate_n: 26,
            node_budget: None,
        }
    }
}

/// An invariant value with a certificate and the number of search nodes used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult<W> {
    pub value: usize,
    pub witness: W,
    pub node_count: u64,
}

/// Search node counter shared by the individual searches.
#[derive(Debug)]
pub(crate) struct Counter {
    nodes: u64,
    budget: Option<u64>,
}

impl Counter {
    pub(crate) fn new(budget: Option<u64>) -> Self {
        Counter { nodes: 0, budget }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(limit) if self.nodes > limit => Err(Error::Budget { limit }),
            _ => Ok(()),
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Solver {
    config: SolverConfig,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Solver { config }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if g.n() > self.config.max_solve_n {
            return Err(Error::Capacity {
                n: g.n(),
                capacity: self.config.max_solve_n,
            });
        }
        Ok(())
    }

    /// γ(G) with a minimum dominating set.
    pub fn domination_number(&self, g: &Graph) -> Result<InvariantResult<VertexSet>> {
        self.check_size(g)?;
        let mut counter = Counter::new(self.config.node_budget);
        let set = domination::minimum_dominating_set(g, &mut counter)?;
        Ok(InvariantResult {
            value: popcount(set),
            witness: VertexSet::from_bits(g.n(), set),
            node_count: counter.nodes(),
        })
    }

    /// γ_R(G) with an optimal Roman function.
    pub fn roman_domination_number(&self, g: &Graph) -> Result<InvariantResult<RomanFunction>> {
        self.check_size(g)?;
        let mut counter = Counter::new(self.config.node_budget);
        let (value, s) = roman::minimum_roman(g, &mut counter)?;
        let witness = RomanFunction::completion(g, s);
        debug_assert_eq!(witness.weight(), value);
        Ok(InvariantResult {
            value,
            witness,
            node_count: counter.nodes(),
        })
    }

    /// All γ_R-functions of `g`, ordered by the bit pattern of `B_2`.
    pub fn enumerate_optimal_rdfs(&self, g: &Graph) -> Result<Vec<RomanFunction>> {
        if g.n() > self.config.max_enumerate_n {
            return Err(Error::EnumerationGuard {
                n: g.n(),
                limit: self.config.max_enumerate_n,
            });
        }
        let value = self.roman_domination_number(g)?.value;
        self.enumerate_rdfs_of_weight(g, value)
    }

    /// All Roman functions of weight `target` that are minimal for their `B_2`.
    /// With `target = γ_R(g)` these are exactly the γ_R-functions.
    pub fn enumerate_rdfs_of_weight(&self, g: &Graph, target: usize) -> Result<Vec<RomanFunction>> {
        if g.n() > self.config.max_enumerate_n {
            return Err(Error::EnumerationGuard {
                n: g.n(),
                limit: self.config.max_enumerate_n,
            });
        }
        let mut counter = Counter::new(self.config.node_budget);
        let mut sets = roman::enumerate_roman(g, target, &mut counter)?;
        sets.sort_unstable();
        Ok(sets
            .into_iter()
            .map(|s| RomanFunction::completion(g, s))
            .collect())
    }

    /// P₂(G): a maximum independent set of the square of `g`.
    pub fn two_packing_number(&self, g: &Graph) -> Result<InvariantResult<VertexSet>> {
        self.check_size(g)?;
        let mut counter = Counter::new(self.config.node_budget);
        let set = packing::maximum_independent_set(&g.square(), &mut counter)?;
        Ok(InvariantResult {
            value: popcount(set),
            witness: VertexSet::from_bits(g.n(), set),
            node_count: counter.nodes(),
        })
    }

    /// Every perfect code of `g`, ascending by bit pattern. Empty iff `g` has none.
    pub fn efficient_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        self.check_size(g)?;
        let mut counter = Counter::new(self.config.node_budget);
        let mut codes = codes::perfect_codes(g, &mut counter)?;
        codes.sort_unstable();
        // All perfect codes are minimum dominating sets, hence equal in size.
        if let Some(first) = codes.first() {
            assert!(codes.iter().all(|c| popcount(*c) == popcount(*first)));
        }
        Ok(codes
            .into_iter()
            .map(|c| VertexSet::from_bits(g.n(), c))
            .collect())
    }

    /// γ_R(G) = 2γ(G). When `g` is small enough to enumerate, also checks that
    /// this agrees with the existence of a γ_R-function without 1-labels.
    pub fn is_roman(&self, g: &Graph) -> Result<bool> {
        let gamma = self.domination_number(g)?.value;
        let gamma_r = self.roman_domination_number(g)?.value;
        let roman = gamma_r == 2 * gamma;
        if g.n() <= self.config.max_enumerate_n {
            let no_ones = self
                .enumerate_rdfs_of_weight(g, gamma_r)?
                .iter()
                .any(|f| f.b1().is_empty());
            assert_eq!(roman, no_ones, "Roman status disagrees with optimal-function scan");
        }
        Ok(roman)
    }

    /// Some vertex has degree `n - γ(G)`.
    pub fn has_full_degree_vertex(&self, g: &Graph) -> Result<bool> {
        let gamma = self.domination_number(g)?.value;
        Ok((0..g.n()).any(|v| g.degree(v) + gamma == g.n()))
    }
}

pub fn domination_number(g: &Graph) -> Result<InvariantResult<VertexSet>> {
    Solver::default().domination_number(g)
}

pub fn roman_domination_number(g: &Graph) -> Result<InvariantResult<RomanFunction>> {
    Solver::default().roman_domination_number(g)
}

pub fn enumerate_optimal_rdfs(g: &Graph) -> Result<Vec<RomanFunction>> {
    Solver::default().enumerate_optimal_rdfs(g)
}

pub fn two_packing_number(g: &Graph) -> Result<InvariantResult<VertexSet>> {
    Solver::default().two_packing_number(g)
}

pub fn efficient_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Solver::default().efficient_dominating_sets(g)
}

pub fn is_roman(g: &Graph) -> Result<bool> {
    Solver::default().is_roman(g)
}

pub fn has_full_degree_vertex(g: &Graph) -> Result<bool> {
    Solver::default().has_full_degree_vertex(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&fam("path:4")).unwrap().value, 2);
        for n in 1..=6 {
            assert_eq!(domination_number(&fam(&format!("complete:{n}"))).unwrap().value, 1);
        }
        assert_eq!(domination_number(&fam("spider:3:1")).unwrap().value, 2);
    }

    #[test]
    fn roman_examples() {
        assert_eq!(roman_domination_number(&fam("path:4")).unwrap().value, 3);
        assert_eq!(roman_domination_number(&fam("path:6")).unwrap().value, 4);
        for r in 2..=6 {
            assert_eq!(roman_domination_number(&fam(&format!("star:{r}"))).unwrap().value, 2);
        }
        assert_eq!(roman_domination_number(&Graph::empty(1).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::empty(4).unwrap();
        assert_eq!(domination_number(&g).unwrap().value, 4);
        assert_eq!(roman_domination_number(&g).unwrap().value, 4);
    }

    #[test]
    fn witnesses_certify_values() {
        let g = fam("cycle:7");
        let d = domination_number(&g).unwrap();
        assert!(g.is_dominating(&d.witness));
        assert_eq!(d.witness.len(), d.value);
        let r = roman_domination_number(&g).unwrap();
        assert!(r.witness.is_valid_on(&g));
        assert_eq!(r.witness.weight(), r.value);
    }

    #[test]
    fn enumerate_p4() {
        let fs = enumerate_optimal_rdfs(&fam("path:4")).unwrap();
        let labels: Vec<&[u8]> = fs.iter().map(|f| f.labels()).collect();
        assert_eq!(labels, vec![&[0, 2, 0, 1][..], &[1, 0, 2, 0][..]]);
    }

    #[test]
    fn enumerate_k2_includes_all_ones() {
        let fs = enumerate_optimal_rdfs(&fam("complete:2")).unwrap();
        let labels: Vec<&[u8]> = fs.iter().map(|f| f.labels()).collect();
        assert_eq!(labels, vec![&[1, 1][..], &[2, 0][..], &[0, 2][..]]);
    }

    #[test]
    fn enumerate_k1() {
        let fs = enumerate_optimal_rdfs(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].labels(), &[1]);
    }

    #[test]
    fn enumeration_guard() {
        let solver = Solver::new(SolverConfig {
            max_enumerate_n: 4,
            ..SolverConfig::default()
        });
        assert!(matches!(
            solver.enumerate_optimal_rdfs(&fam("path:5")),
            Err(Error::EnumerationGuard { n: 5, limit: 4 })
        ));
    }

    #[test]
    fn budget_exceeded() {
        let solver = Solver::new(SolverConfig {
            node_budget: Some(3),
            ..SolverConfig::default()
        });
        assert!(matches!(
            solver.domination_number(&fam("hypercube:4")),
            Err(Error::Budget { limit: 3 })
        ));
    }

    #[test]
    fn packing_examples() {
        assert_eq!(two_packing_number(&fam("cycle:6")).unwrap().value, 2);
        assert_eq!(two_packing_number(&fam("complete:5")).unwrap().value, 1);
        assert_eq!(two_packing_number(&fam("path:7")).unwrap().value, 3);
    }

    #[test]
    fn code_examples() {
        let p3 = efficient_dominating_sets(&fam("path:3")).unwrap();
        assert_eq!(p3, vec![VertexSet::from_vertices(3, [1])]);
        assert!(efficient_dominating_sets(&fam("cycle:4")).unwrap().is_empty());
        let q3 = efficient_dominating_sets(&fam("hypercube:3")).unwrap();
        assert!(!q3.is_empty());
        assert!(q3.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn roman_status() {
        assert!(is_roman(&fam("cycle:5")).unwrap());
        assert!(!is_roman(&fam("path:4")).unwrap());
        assert!(is_roman(&fam("star:3")).unwrap());
    }

    #[test]
    fn full_degree_vertex() {
        assert!(has_full_degree_vertex(&fam("star:3")).unwrap());
        assert!(!has_full_degree_vertex(&fam("cycle:6")).unwrap());
        // gamma = 2, n = 5: the center has degree 3.
        assert!(has_full_degree_vertex(&fam("spider:3:1")).unwrap());
    }
}
