//! Explicit Roman dominating functions on product graphs.
//!
//! Each `*_construction` picks its input functions deterministically (the
//! best choice among all enumerated γ_R-functions of the factors, falling
//! back to the solver witness when a factor is too large to enumerate) and
//! delegates to a `*_from` builder that works with any given inputs.
//!
//! Product vertex `(u, v)` has index `u * n2 + v`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::bitset::{Ones, VertexSet, Word};
use crate::error::{Error, Result};
use crate::graph::{product, Graph, ProductKind};
use crate::graph6::write_graph6;
use crate::rdf::RomanFunction;
use crate::solver::Solver;

/// How the factor functions of a construction were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelectionMode {
    /// Optimized over all enumerated γ_R-functions of the factors.
    Enumerated,
    /// The solver's witness functions or sets were used as they are, either
    /// because the construction has no free choice or because a factor
    /// exceeded the enumeration guard.
    SolverWitness,
}

impl SelectionMode {
    fn combine(self, other: SelectionMode) -> SelectionMode {
        if self == SelectionMode::Enumerated && other == SelectionMode::Enumerated {
            SelectionMode::Enumerated
        } else {
            SelectionMode::SolverWitness
        }
    }
}

fn serialize_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&write_graph6(g))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionOutcome {
    #[serde(rename = "labels")]
    pub rdf: RomanFunction,
    pub weight: usize,
    pub claimed_bound: usize,
    pub selection_mode: SelectionMode,
    /// Sizes of the factor-function classes the weight identity depends on.
    pub parameters: BTreeMap<&'static str, usize>,
    #[serde(serialize_with = "serialize_graph6")]
    pub product: Graph,
}

impl ConstructionOutcome {
    fn new(
        product: Graph,
        rdf: RomanFunction,
        claimed_bound: usize,
        selection_mode: SelectionMode,
        parameters: BTreeMap<&'static str, usize>,
    ) -> Self {
        ConstructionOutcome {
            weight: rdf.weight(),
            rdf,
            claimed_bound,
            selection_mode,
            parameters,
            product,
        }
    }
}

/// All γ_R-functions of `g`, or just the solver witness above the enumeration guard.
pub fn optimal_rdfs_or_witness(solver: &Solver, g: &Graph) -> Result<(Vec<RomanFunction>, SelectionMode)> {
    match solver.enumerate_optimal_rdfs(g) {
        Ok(all) => Ok((all, SelectionMode::Enumerated)),
        Err(Error::EnumerationGuard { .. }) => Ok((
            vec![solver.roman_domination_number(g)?.witness],
            SelectionMode::SolverWitness,
        )),
        Err(e) => Err(e),
    }
}

/// First element maximizing `key`.
fn first_max_by<T, K: Ord>(items: &[T], key: impl Fn(&T) -> K) -> &T {
    let mut best = &items[0];
    let mut best_key = key(best);
    for item in &items[1..] {
        let k = key(item);
        if k > best_key {
            best = item;
            best_key = k;
        }
    }
    best
}

fn labels_on_product(n1: usize, n2: usize, label: impl Fn(usize, usize) -> u8) -> RomanFunction {
    let mut labels = Vec::with_capacity(n1 * n2);
    for u in 0..n1 {
        for v in 0..n2 {
            labels.push(label(u, v));
        }
    }
    RomanFunction::new(labels).expect("labels are in {0,1,2}")
}

fn check_len(f: &RomanFunction, g: &Graph, name: &str) -> Result<()> {
    if f.n() != g.n() {
        return Err(Error::Input(format!(
            "{name} has {} labels but its graph has {} vertices",
            f.n(),
            g.n()
        )));
    }
    Ok(())
}

/// `f(u, v) = f1(u)` on G□H.
pub fn replicate_first(g: &Graph, h: &Graph, f1: &RomanFunction) -> Result<RomanFunction> {
    check_len(f1, g, "f1")?;
    Ok(labels_on_product(g.n(), h.n(), |u, _| f1.label(u)))
}

/// `f(u, v) = f2(v)` on G□H.
pub fn replicate_second(g: &Graph, h: &Graph, f2: &RomanFunction) -> Result<RomanFunction> {
    check_len(f2, h, "f2")?;
    Ok(labels_on_product(g.n(), h.n(), |_, v| f2.label(v)))
}

/// Copies a γ_R-function of one factor across the other factor and keeps the
/// lighter of the two results. Bound: `min(n1 γ_R(H), n2 γ_R(G))`.
pub fn replicate_construction(solver: &Solver, g: &Graph, h: &Graph) -> Result<ConstructionOutcome> {
    let prod = product(g, h, ProductKind::Cartesian)?;
    let f1 = solver.roman_domination_number(g)?.witness;
    let f2 = solver.roman_domination_number(h)?.witness;
    let along_g = replicate_first(g, h, &f1)?;
    let along_h = replicate_second(g, h, &f2)?;
    let claimed = (g.n() * f2.weight()).min(h.n() * f1.weight());
    let mut params = BTreeMap::new();
    params.insert("gamma_r_g", f1.weight());
    params.insert("gamma_r_h", f2.weight());
    let rdf = if along_g.weight() <= along_h.weight() {
        along_g
    } else {
        along_h
    };
    Ok(ConstructionOutcome::new(prod, rdf, claimed, SelectionMode::SolverWitness, params))
}

/// On G□H: `f = f2(v)` except `A0 x B1 -> 0` and `A2 x B1 -> 2`, where
/// `f1 = (A0, A1, A2)` and `f2 = (B0, B1, B2)`.
///
/// Weight: `n1 w(f2) - |B1| (|A0| - |A2|)`. Valid whenever `f1` and `f2` are:
/// every vertex of `A0 x B1` has a neighbor in `A2 x B1`.
pub fn swap_from(g: &Graph, h: &Graph, f1: &RomanFunction, f2: &RomanFunction) -> Result<RomanFunction> {
    check_len(f1, g, "f1")?;
    check_len(f2, h, "f2")?;
    Ok(labels_on_product(g.n(), h.n(), |u, v| {
        match (f1.label(u), f2.label(v)) {
            (0, 1) => 0,
            (2, 1) => 2,
            (_, b) => b,
        }
    }))
}

/// `swap_from` with `f1` maximizing `|A0| - |A2|` and `f2` maximizing `|B1|`.
///
/// `claimed_bound` is `(n1 + 1) γ_R(H) - 2γ(H)` when `g` has a component of
/// order at least 3, and the construction's own weight otherwise.
pub fn swap_construction(solver: &Solver, g: &Graph, h: &Graph) -> Result<ConstructionOutcome> {
    let prod = product(g, h, ProductKind::Cartesian)?;
    let (g_rdfs, mode_g) = optimal_rdfs_or_witness(solver, g)?;
    let (h_rdfs, mode_h) = optimal_rdfs_or_witness(solver, h)?;
    let f1 = first_max_by(&g_rdfs, |f| f.b0().len() as i64 - f.b2().len() as i64);
    let f2 = first_max_by(&h_rdfs, |f| f.b1().len());
    let rdf = swap_from(g, h, f1, f2)?;
    let a0 = f1.b0().len();
    let a2 = f1.b2().len();
    let b1 = f2.b1().len();
    let gamma_r_h = f2.weight();
    let has_large_component = g.components().iter().any(|c| c.len() > 2);
    let claimed = if has_large_component {
        let gamma_h = solver.domination_number(h)?.value;
        (g.n() + 1) * gamma_r_h - 2 * gamma_h
    } else {
        rdf.weight()
    };
    let mut params = BTreeMap::new();
    params.insert("a0", a0);
    params.insert("a2", a2);
    params.insert("b1", b1);
    params.insert("gamma_r_h", gamma_r_h);
    Ok(ConstructionOutcome::new(prod, rdf, claimed, mode_g.combine(mode_h), params))
}

/// On G□H: `B2 = S1 x S2`, `B1 = (V1 - S1) x (V2 - S2)` for dominating sets `S1`, `S2`.
pub fn cross_from(g: &Graph, h: &Graph, s1: &VertexSet, s2: &VertexSet) -> Result<RomanFunction> {
    if s1.universe() != g.n() || s2.universe() != h.n() {
        return Err(Error::Input("dominating sets do not match the factor orders".into()));
    }
    Ok(labels_on_product(g.n(), h.n(), |u, v| {
        match (s1.contains(u), s2.contains(v)) {
            (true, true) => 2,
            (false, false) => 1,
            _ => 0,
        }
    }))
}

/// `cross_from` with the solver's minimum dominating sets.
/// Weight: `2γ(G)γ(H) + (n1 - γ(G))(n2 - γ(H))`.
pub fn cross_construction(solver: &Solver, g: &Graph, h: &Graph) -> Result<ConstructionOutcome> {
    let prod = product(g, h, ProductKind::Cartesian)?;
    let s1 = solver.domination_number(g)?.witness;
    let s2 = solver.domination_number(h)?.witness;
    let rdf = cross_from(g, h, &s1, &s2)?;
    let (g1, g2) = (s1.len(), s2.len());
    let claimed = 2 * g1 * g2 + (g.n() - g1) * (h.n() - g2);
    let mut params = BTreeMap::new();
    params.insert("gamma_g", g1);
    params.insert("gamma_h", g2);
    Ok(ConstructionOutcome::new(prod, rdf, claimed, SelectionMode::SolverWitness, params))
}

/// On G⊠H: label 2 on `(A1 x B2) ∪ (A2 x B1) ∪ (A2 x B2)`, 1 on `A1 x B1`, 0 elsewhere.
/// Weight: `w(f1) w(f2) - 2|A2||B2|`.
pub fn strong_from(g: &Graph, h: &Graph, f1: &RomanFunction, f2: &RomanFunction) -> Result<RomanFunction> {
    check_len(f1, g, "f1")?;
    check_len(f2, h, "f2")?;
    Ok(labels_on_product(g.n(), h.n(), |u, v| {
        match (f1.label(u), f2.label(v)) {
            (1, 2) | (2, 1) | (2, 2) => 2,
            (1, 1) => 1,
            _ => 0,
        }
    }))
}

/// `strong_from` with `f1`, `f2` maximizing `|A2|` and `|B2|`, hence `|A2||B2|`.
pub fn strong_case_construction(solver: &Solver, g: &Graph, h: &Graph) -> Result<ConstructionOutcome> {
    let prod = product(g, h, ProductKind::Strong)?;
    let (g_rdfs, mode_g) = optimal_rdfs_or_witness(solver, g)?;
    let (h_rdfs, mode_h) = optimal_rdfs_or_witness(solver, h)?;
    let f1 = first_max_by(&g_rdfs, |f| f.b2().len());
    let f2 = first_max_by(&h_rdfs, |f| f.b2().len());
    let rdf = strong_from(g, h, f1, f2)?;
    let (a2, b2) = (f1.b2().len(), f2.b2().len());
    let claimed = f1.weight() * f2.weight() - 2 * a2 * b2;
    let mut params = BTreeMap::new();
    params.insert("a2", a2);
    params.insert("b2", b2);
    params.insert("gamma_r_g", f1.weight());
    params.insert("gamma_r_h", f2.weight());
    Ok(ConstructionOutcome::new(prod, rdf, claimed, mode_g.combine(mode_h), params))
}

/// For each block `A` of a partition of the first factor, the labeling
/// `v -> max { f(u, v) : u in A }` of the second factor (order `h_size`).
///
/// No validity is claimed; whether the projections are Roman depends on the
/// product and the blocks.
pub fn project_max(f: &RomanFunction, blocks: &[VertexSet], h_size: usize) -> Result<Vec<RomanFunction>> {
    if h_size == 0 || !f.n().is_multiple_of(h_size) {
        return Err(Error::Input(format!(
            "{} labels do not form a product with a factor of order {h_size}",
            f.n()
        )));
    }
    let n1 = f.n() / h_size;
    let mut seen: Word = 0;
    for block in blocks {
        if block.universe() != n1 {
            return Err(Error::Input(format!(
                "block over {} vertices, first factor has {n1}",
                block.universe()
            )));
        }
        if block.bits() & seen != 0 {
            return Err(Error::Input("blocks overlap".into()));
        }
        seen |= block.bits();
    }
    if seen != VertexSet::full(n1).bits() {
        return Err(Error::Input("blocks do not cover the first factor".into()));
    }
    Ok(blocks
        .iter()
        .map(|block| {
            let labels = (0..h_size)
                .map(|v| {
                    Ones::new(block.bits())
                        .map(|u| f.label(u * h_size + v))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            RomanFunction::new(labels).expect("labels are in {0,1,2}")
        })
        .collect())
}

/// Blocks `N[u]` for the vertices `u` of a perfect code.
pub fn code_blocks(g: &Graph, code: &VertexSet) -> Vec<VertexSet> {
    code.iter().map(|u| g.closed_neighbors(u)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};
    use crate::solver::{efficient_dominating_sets, roman_domination_number};

    fn fam(s: &str) -> Graph {
        make_family(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn solver() -> Solver {
        Solver::default()
    }

    #[test]
    fn replicate_p3_star() {
        let out = replicate_construction(&solver(), &fam("path:3"), &fam("star:3")).unwrap();
        assert_eq!(out.claimed_bound, 6);
        assert!(out.weight <= 6);
        assert!(out.rdf.is_valid_on(&out.product));
    }

    #[test]
    fn replicate_k1_degenerates() {
        let h = fam("cycle:5");
        let out = replicate_construction(&solver(), &Graph::empty(1).unwrap(), &h).unwrap();
        assert_eq!(out.weight, roman_domination_number(&h).unwrap().value);
    }

    #[test]
    fn replicate_p4_grid_has_slack() {
        let out = replicate_construction(&solver(), &fam("path:4"), &fam("path:4")).unwrap();
        assert_eq!(out.claimed_bound, 12);
        assert_eq!(out.weight, 12);
        assert_eq!(roman_domination_number(&out.product).unwrap().value, 8);
    }

    #[test]
    fn swap_p3_p4() {
        let out = swap_construction(&solver(), &fam("path:3"), &fam("path:4")).unwrap();
        assert_eq!(out.parameters["a0"], 2);
        assert_eq!(out.parameters["a2"], 1);
        assert_eq!(out.parameters["b1"], 1);
        assert_eq!(out.weight, 3 * 3 - 1);
        assert!(out.rdf.is_valid_on(&out.product));
    }

    #[test]
    fn swap_k2_uses_raw_weight() {
        let out = swap_construction(&solver(), &fam("complete:2"), &fam("path:4")).unwrap();
        assert_eq!(out.claimed_bound, out.weight);
        assert!(out.rdf.is_valid_on(&out.product));
    }

    #[test]
    fn swap_c3_p4_meets_roman_bound() {
        let out = swap_construction(&solver(), &fam("cycle:3"), &fam("path:4")).unwrap();
        // 2n(γ_R(H) - γ(H)) + 2γ(G)(2γ(H) - γ_R(H)) with n = 3, γ(G) = 1, γ(H) = 2, γ_R(H) = 3
        assert_eq!(out.weight, 8);
    }

    #[test]
    fn cross_examples() {
        let out = cross_construction(&solver(), &fam("path:4"), &fam("path:5")).unwrap();
        assert_eq!(out.weight, 14);
        assert!(out.rdf.is_valid_on(&out.product));
        let out = cross_construction(&solver(), &fam("complete:2"), &fam("complete:2")).unwrap();
        assert_eq!(out.weight, 3);
    }

    #[test]
    fn strong_examples() {
        let out = strong_case_construction(&solver(), &fam("complete:3"), &fam("star:4")).unwrap();
        assert_eq!(out.weight, 2);
        let out = strong_case_construction(&solver(), &fam("cycle:6"), &fam("star:3")).unwrap();
        assert_eq!(out.parameters["a2"], 2);
        assert_eq!(out.weight, 4);
        assert!(out.rdf.is_valid_on(&out.product));
        let h = fam("path:5");
        let out = strong_case_construction(&solver(), &Graph::empty(1).unwrap(), &h).unwrap();
        assert_eq!(out.parameters["a2"], 0);
        assert_eq!(out.weight, roman_domination_number(&h).unwrap().value);
    }

    #[test]
    fn project_constant() {
        let f = RomanFunction::constant(9, 1);
        let blocks = vec![VertexSet::full(3)];
        let proj = project_max(&f, &blocks, 3).unwrap();
        assert_eq!(proj, vec![RomanFunction::constant(3, 1)]);
    }

    #[test]
    fn project_replicated_function_on_code_blocks() {
        let p3 = fam("path:3");
        let out = replicate_construction(&solver(), &p3, &p3).unwrap();
        let code = &efficient_dominating_sets(&p3).unwrap()[0];
        let proj = project_max(&out.rdf, &code_blocks(&p3, code), 3).unwrap();
        assert!(proj.iter().all(|f| f.is_valid_on(&p3)));
    }

    #[test]
    fn project_strong_optimum_on_code_block() {
        let (c3, p4) = (fam("cycle:3"), fam("path:4"));
        let prod = product(&c3, &p4, ProductKind::Strong).unwrap();
        let f = roman_domination_number(&prod).unwrap().witness;
        let proj = project_max(&f, &[c3.closed_neighbors(0)], 4).unwrap();
        assert!(proj[0].is_valid_on(&p4));
    }

    #[test]
    fn project_rejects_bad_blocks() {
        let f = RomanFunction::constant(9, 1);
        let overlap = vec![VertexSet::from_vertices(3, [0, 1]), VertexSet::from_vertices(3, [1, 2])];
        assert!(project_max(&f, &overlap, 3).is_err());
        let gap = vec![VertexSet::from_vertices(3, [0, 1])];
        assert!(project_max(&f, &gap, 3).is_err());
        assert!(project_max(&f, &[VertexSet::full(3)], 4).is_err());
    }
}
