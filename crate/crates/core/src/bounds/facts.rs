use std::sync::OnceLock;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{product, Graph, ProductKind};
use crate::rdf::RomanFunction;
use crate::solver::{InvariantResult, Solver};

/// Lazily computed invariants of one graph. Every solver call happens at
/// most once; errors (budget, guard) are cached alongside values.
pub struct GraphFacts<'a> {
    graph: Graph,
    solver: &'a Solver,
    gamma: OnceLock<Result<InvariantResult<VertexSet>>>,
    gamma_r: OnceLock<Result<InvariantResult<RomanFunction>>>,
    p2: OnceLock<Result<InvariantResult<VertexSet>>>,
    codes: OnceLock<Result<Vec<VertexSet>>>,
    optimal: OnceLock<Result<Vec<RomanFunction>>>,
}

impl<'a> GraphFacts<'a> {
    pub fn new(graph: Graph, solver: &'a Solver) -> Self {
        GraphFacts {
            graph,
            solver,
            gamma: OnceLock::new(),
            gamma_r: OnceLock::new(),
            p2: OnceLock::new(),
            codes: OnceLock::new(),
            optimal: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> i64 {
        self.graph.n() as i64
    }

    pub fn gamma_result(&self) -> Result<&InvariantResult<VertexSet>> {
        self.gamma
            .get_or_init(|| self.solver.domination_number(&self.graph))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn gamma_r_result(&self) -> Result<&InvariantResult<RomanFunction>> {
        self.gamma_r
            .get_or_init(|| self.solver.roman_domination_number(&self.graph))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn gamma(&self) -> Result<i64> {
        Ok(self.gamma_result()?.value as i64)
    }

    pub fn gamma_r(&self) -> Result<i64> {
        Ok(self.gamma_r_result()?.value as i64)
    }

    pub fn p2_result(&self) -> Result<&InvariantResult<VertexSet>> {
        self.p2
            .get_or_init(|| self.solver.two_packing_number(&self.graph))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn p2(&self) -> Result<i64> {
        Ok(self.p2_result()?.value as i64)
    }

    pub fn codes(&self) -> Result<&[VertexSet]> {
        self.codes
            .get_or_init(|| self.solver.efficient_dominating_sets(&self.graph))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Membership in the class of graphs with a perfect code.
    pub fn in_f(&self) -> Result<bool> {
        Ok(!self.codes()?.is_empty())
    }

    pub fn is_roman(&self) -> Result<bool> {
        Ok(self.gamma_r()? == 2 * self.gamma()?)
    }

    pub fn optimal_rdfs(&self) -> Result<&[RomanFunction]> {
        self.optimal
            .get_or_init(|| self.solver.enumerate_optimal_rdfs(&self.graph))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Largest `|B_2|` over all γ_R-functions, with a function attaining it.
    pub fn max_b2(&self) -> Result<(i64, &RomanFunction)> {
        let f = self
            .optimal_rdfs()?
            .iter()
            .max_by_key(|f| (f.b2().len(), std::cmp::Reverse(f.labels().to_vec())))
            .expect("every graph has a γ_R-function");
        Ok((f.b2().len() as i64, f))
    }

    /// Smallest `|B_1|` over all γ_R-functions, with a function attaining it.
    pub fn min_b1(&self) -> Result<(i64, &RomanFunction)> {
        let f = self
            .optimal_rdfs()?
            .iter()
            .min_by_key(|f| f.b1().len())
            .expect("every graph has a γ_R-function");
        Ok((f.b1().len() as i64, f))
    }

    pub fn has_large_component(&self) -> bool {
        self.graph.components().iter().any(|c| c.len() > 2)
    }

    /// Some vertex of degree `n - γ`.
    pub fn has_full_degree_vertex(&self) -> Result<bool> {
        let target = self.n() - self.gamma()?;
        Ok((0..self.graph.n()).any(|v| self.graph.degree(v) as i64 == target))
    }
}

/// Facts about an ordered pair and its two products.
pub struct PairFacts<'a, 'b> {
    pub g: &'b GraphFacts<'a>,
    pub h: &'b GraphFacts<'a>,
    solver: &'a Solver,
    cartesian: OnceLock<Result<GraphFacts<'a>>>,
    strong: OnceLock<Result<GraphFacts<'a>>>,
}

impl<'a, 'b> PairFacts<'a, 'b> {
    pub fn new(g: &'b GraphFacts<'a>, h: &'b GraphFacts<'a>, solver: &'a Solver) -> Self {
        PairFacts {
            g,
            h,
            solver,
            cartesian: OnceLock::new(),
            strong: OnceLock::new(),
        }
    }

    pub fn product(&self, kind: ProductKind) -> Result<&GraphFacts<'a>> {
        let cell = match kind {
            ProductKind::Cartesian => &self.cartesian,
            ProductKind::Strong => &self.strong,
        };
        cell.get_or_init(|| {
            product(self.g.graph(), self.h.graph(), kind).map(|p| GraphFacts::new(p, self.solver))
        })
        .as_ref()
        .map_err(Clone::clone)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};

    #[test]
    fn path_facts() {
        let solver = Solver::default();
        let f = GraphFacts::new(make_family(&FamilySpec::Path(4)).unwrap(), &solver);
        assert_eq!(f.gamma().unwrap(), 2);
        assert_eq!(f.gamma_r().unwrap(), 3);
        assert!(f.in_f().unwrap());
        assert!(!f.is_roman().unwrap());
        assert_eq!(f.max_b2().unwrap().0, 1);
        assert_eq!(f.min_b1().unwrap().0, 1);
        assert!(f.has_full_degree_vertex().unwrap());
    }

    #[test]
    fn c4_not_in_f() {
        let solver = Solver::default();
        let f = GraphFacts::new(make_family(&FamilySpec::Cycle(4)).unwrap(), &solver);
        assert!(!f.in_f().unwrap());
    }
}
