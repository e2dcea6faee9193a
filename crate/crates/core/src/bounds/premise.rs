use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constructions::strong_from;
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec};
use crate::graph::{product, Graph, ProductKind};
use crate::graph6::write_graph6;
use crate::rdf::RomanFunction;
use crate::solver::Solver;

use super::evaluate::{evaluate, pncn_bound, BoundRecord};
use super::facts::GraphFacts;
use super::theorem::TheoremId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathOrCycle {
    Path,
    Cycle,
}

impl PathOrCycle {
    pub fn graph(self, n: usize) -> Result<Graph> {
        make_family(&match self {
            PathOrCycle::Path => FamilySpec::Path(n),
            PathOrCycle::Cycle => FamilySpec::Cycle(n),
        })
    }
}

impl fmt::Display for PathOrCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathOrCycle::Path => "path",
            PathOrCycle::Cycle => "cycle",
        })
    }
}

impl FromStr for PathOrCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(PathOrCycle::Path),
            "cycle" => Ok(PathOrCycle::Cycle),
            _ => Err(Error::InvalidParams(format!("expected 'path' or 'cycle', got '{s}'"))),
        }
    }
}

/// The strong-product construction with `|B2| = floor(n/3)` forced on the
/// path or cycle side, for one partner graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcedConstruction {
    pub partner: String,
    pub partner_graph6: String,
    /// γ_R-function of the partner with the most label-2 vertices.
    pub f1: RomanFunction,
    /// γ_R-function of the path or cycle with `|B2| = floor(n/3)`.
    pub f2: RomanFunction,
    pub weight: i64,
    pub bound: i64,
    pub valid: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PremiseReport {
    pub graph: String,
    pub graph6: String,
    pub kind: PathOrCycle,
    pub n: usize,
    pub gamma_r: usize,
    pub optimal_count: usize,
    /// Every `|B2|` seen over all γ_R-functions.
    pub b2_sizes: BTreeSet<usize>,
    pub expected_b2: usize,
    pub premise_holds: bool,
    /// A γ_R-function with `|B2| != floor(n/3)`, if any.
    pub counterexample: Option<RomanFunction>,
    /// Whether some γ_R-function has `|B2| = floor(n/3)`.
    pub forced_available: bool,
    pub inequality: Vec<BoundRecord>,
    pub forced: Vec<ForcedConstruction>,
}

/// Default partners: K2, P3, K1,3 and C4.
pub fn default_partners() -> Vec<Graph> {
    [
        FamilySpec::Complete(2),
        FamilySpec::Path(3),
        FamilySpec::Star(3),
        FamilySpec::Cycle(4),
    ]
    .iter()
    .map(|s| make_family(s).expect("small family"))
    .collect()
}

/// Checks whether every γ_R-function of `P_n` or `C_n` has `floor(n/3)`
/// vertices labeled 2, and separately checks the strong-product bound built
/// on that premise against each partner.
pub fn check_pncn_premise(n: usize, kind: PathOrCycle, partners: &[Graph], solver: &Solver) -> Result<PremiseReport> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("premise check needs n >= 3, got {n}")));
    }
    let h = kind.graph(n)?;
    let hf = GraphFacts::new(h.clone(), solver);
    let rdfs = hf.optimal_rdfs()?;
    let expected = n / 3;
    let b2_sizes: BTreeSet<usize> = rdfs.iter().map(|f| f.b2().len()).collect();
    let counterexample = rdfs.iter().find(|f| f.b2().len() != expected).cloned();
    let f2 = rdfs.iter().find(|f| f.b2().len() == expected);

    let mut inequality = Vec::new();
    let mut forced = Vec::new();
    for g in partners {
        inequality.push(evaluate(TheoremId::CStrongPncn, g, Some(&h), solver)?);
        let (Some(f2), true) = (f2, g.is_nonempty()) else {
            continue;
        };
        let gf = GraphFacts::new(g.clone(), solver);
        let (_, f1) = gf.max_b2()?;
        let f = strong_from(g, &h, f1, f2)?;
        let prod = product(g, &h, ProductKind::Strong)?;
        let valid = f.is_valid_on(&prod);
        let weight = f.weight() as i64;
        let bound = pncn_bound(n as i64, gf.gamma_r()?);
        forced.push(ForcedConstruction {
            partner: g.display_name(),
            partner_graph6: write_graph6(g),
            f1: f1.clone(),
            f2: f2.clone(),
            weight,
            bound,
            valid,
            holds: valid && weight <= bound,
        });
    }

    Ok(PremiseReport {
        graph: h.display_name(),
        graph6: write_graph6(&h),
        kind,
        n,
        gamma_r: hf.gamma_r()? as usize,
        optimal_count: rdfs.len(),
        premise_holds: counterexample.is_none(),
        b2_sizes,
        expected_b2: expected,
        counterexample,
        forced_available: f2.is_some(),
        inequality,
        forced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::evaluate::Status;

    fn check(n: usize, kind: PathOrCycle) -> PremiseReport {
        check_pncn_premise(n, kind, &default_partners(), &Solver::default()).unwrap()
    }

    #[test]
    fn p4_premise_holds() {
        let r = check(4, PathOrCycle::Path);
        assert_eq!(r.b2_sizes, BTreeSet::from([1]));
        assert!(r.premise_holds);
    }

    #[test]
    fn c5_premise_fails_but_bound_holds() {
        let r = check(5, PathOrCycle::Cycle);
        assert!(!r.premise_holds);
        assert!(r.b2_sizes.contains(&2));
        assert_eq!(r.counterexample.as_ref().unwrap().b2().len(), 2);
        assert!(r.inequality.iter().all(|rec| rec.status == Status::Held));
        assert!(r.forced.iter().all(|c| c.valid && c.holds));
    }

    #[test]
    fn c6_premise_holds() {
        let r = check(6, PathOrCycle::Cycle);
        assert_eq!(r.b2_sizes, BTreeSet::from([2]));
        assert_eq!(r.forced.len(), 4);
    }

    #[test]
    fn small_n_rejected() {
        assert!(check_pncn_premise(2, PathOrCycle::Path, &[], &Solver::default()).is_err());
    }
}
