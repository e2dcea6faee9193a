use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec};
use crate::graph::{Graph, ProductKind};
use crate::graph6::write_graph6;
use crate::rdf::RomanFunction;
use crate::solver::Solver;

use super::facts::{GraphFacts, PairFacts};
use super::theorem::{Arity, TheoremId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
    /// `lower <= lhs <= rhs`
    #[serde(rename = "within")]
    Within,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Within => "within",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Held,
    Violated,
    HypothesesNotMet,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Held => "held",
            Status::Violated => "violated",
            Status::HypothesesNotMet => "hypotheses-not-met",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub g: String,
    pub g_graph6: String,
    pub h: Option<String>,
    pub h_graph6: Option<String>,
    pub product: Option<ProductKind>,
}

/// A set (`set`) or a labeling (`labels`) backing one value of a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<RomanFunction>,
}

/// Outcome of one check on one instance.
///
/// Both sides are integers already multiplied by `scale`. `lower` is set
/// only for [`Relation::Within`]. Values are absent unless the hypotheses
/// were met and every invariant could be computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub theorem: TheoremId,
    pub instance: Instance,
    pub status: Status,
    pub hypotheses_met: bool,
    pub hypotheses: String,
    pub relation: Relation,
    pub scale: i64,
    pub lower: Option<i64>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub holds: Option<bool>,
    pub tight: Option<bool>,
    pub skip_reason: Option<String>,
    pub witnesses: Vec<Witness>,
}

struct Check {
    relation: Relation,
    scale: i64,
    lower: Option<i64>,
    lhs: i64,
    rhs: i64,
}

impl Check {
    fn new(relation: Relation, scale: i64, lhs: i64, rhs: i64) -> Self {
        Check {
            relation,
            scale,
            lower: None,
            lhs,
            rhs,
        }
    }

    fn within(scale: i64, lower: i64, lhs: i64, rhs: i64) -> Self {
        Check {
            relation: Relation::Within,
            scale,
            lower: Some(lower),
            lhs,
            rhs,
        }
    }

    fn holds(&self) -> bool {
        match self.relation {
            Relation::Le => self.lhs <= self.rhs,
            Relation::Ge => self.lhs >= self.rhs,
            Relation::Eq => self.lhs == self.rhs,
            Relation::Within => self.lower.is_some_and(|l| l <= self.lhs) && self.lhs <= self.rhs,
        }
    }

    fn tight(&self) -> bool {
        self.lhs == self.rhs || self.lower == Some(self.lhs)
    }
}

enum Outcome {
    NotMet(String),
    Checked(Check),
}

/// Relation a check uses when it is evaluated; also reported on skipped records.
fn nominal_relation(theorem: TheoremId) -> Relation {
    use TheoremId::*;
    match theorem {
        L1Sandwich | PFK2 | TStrongSandwich | CColoroco => Relation::Within,
        PGammaPlus1 | CStrongFEq | CStrongRomanClosed => Relation::Eq,
        L2B2 | TSuperior | CSuperior2g | TEldekI | TEldekII | CNonroman | PCorochulo | TFlojito
        | RFRegular | TStrongMinus | CStrongMinus2 | CStrongPncn => Relation::Le,
        _ => Relation::Ge,
    }
}

struct Eval {
    hypotheses: Vec<&'static str>,
    witnesses: Vec<Witness>,
}

impl Eval {
    fn set(&mut self, name: String, set: &VertexSet) {
        if !self.witnesses.iter().any(|w| w.name == name) {
            self.witnesses.push(Witness {
                name,
                set: Some(*set),
                labels: None,
            });
        }
    }

    fn labels(&mut self, name: String, f: &RomanFunction) {
        if !self.witnesses.iter().any(|w| w.name == name) {
            self.witnesses.push(Witness {
                name,
                set: None,
                labels: Some(f.clone()),
            });
        }
    }

    fn gamma(&mut self, f: &GraphFacts, who: &str) -> Result<i64> {
        let r = f.gamma_result()?;
        self.set(format!("gamma({who})"), &r.witness);
        Ok(r.value as i64)
    }

    fn gamma_r(&mut self, f: &GraphFacts, who: &str) -> Result<i64> {
        let r = f.gamma_r_result()?;
        self.labels(format!("gamma_R({who})"), &r.witness);
        Ok(r.value as i64)
    }

    fn p2(&mut self, f: &GraphFacts, who: &str) -> Result<i64> {
        let r = f.p2_result()?;
        self.set(format!("P2({who})"), &r.witness);
        Ok(r.value as i64)
    }

    fn in_f(&mut self, f: &GraphFacts, who: &str) -> Result<bool> {
        if let Some(code) = f.codes()?.first() {
            self.set(format!("perfect code({who})"), code);
            Ok(true)
        } else {
            Ok(false)
        }
    }
}

/// Returns early with a hypotheses-not-met outcome when `$cond` is false.
macro_rules! require {
    ($ev:ident, $cond:expr, $text:literal) => {
        if !$cond {
            return Ok(Outcome::NotMet(concat!("not met: ", $text).to_string()));
        }
        $ev.hypotheses.push($text);
    };
}

fn check(
    theorem: TheoremId,
    g: &GraphFacts,
    pair: Option<&PairFacts>,
    solver: &Solver,
    ev: &mut Eval,
) -> Result<Outcome> {
    use Relation::*;
    use TheoremId::*;

    if theorem.arity() == Arity::Unary {
        let c = match theorem {
            L1Sandwich => {
                let (gg, rg) = (ev.gamma(g, "G")?, ev.gamma_r(g, "G")?);
                Check::within(1, gg, rg, 2 * gg)
            }
            L2B2 => {
                let (gg, rg) = (ev.gamma(g, "G")?, ev.gamma_r(g, "G")?);
                let (b2, f) = g.max_b2()?;
                ev.labels("max |B2| function(G)".into(), f);
                Check::new(Le, 1, b2, rg - gg)
            }
            L2B1 => {
                let (gg, rg) = (ev.gamma(g, "G")?, ev.gamma_r(g, "G")?);
                let (b1, f) = g.min_b1()?;
                ev.labels("min |B1| function(G)".into(), f);
                Check::new(Ge, 1, b1, 2 * gg - rg)
            }
            PGammaPlus1 => {
                require!(ev, g.graph().is_connected(), "G connected");
                require!(ev, g.graph().n() >= 2, "G of order at least 2");
                let (gg, rg) = (ev.gamma(g, "G")?, ev.gamma_r(g, "G")?);
                let indicator = i64::from(rg == gg + 1);
                Check::new(Eq, 1, indicator, i64::from(g.has_full_degree_vertex()?))
            }
            RFRegular => {
                require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
                let delta = g.graph().min_degree() as i64;
                let gg = ev.gamma(g, "G")?;
                let rel = if g.graph().is_regular() { Eq } else { Le };
                Check::new(rel, delta + 1, (delta + 1) * gg, g.n())
            }
            PFK2 => {
                require!(ev, g.graph().is_regular(), "G regular");
                require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
                let k2 = make_family(&FamilySpec::Complete(2))?;
                let k2 = GraphFacts::new(k2, solver);
                let p = PairFacts::new(g, &k2, solver);
                let prod = p.product(ProductKind::Cartesian)?;
                let d1 = g.graph().min_degree() as i64 + 1;
                let r = ev.gamma_r(prod, "G□K2")?;
                Check::within(d1, 2 * g.n(), d1 * r, 4 * g.n())
            }
            _ => unreachable!("binary theorem"),
        };
        return Ok(Outcome::Checked(c));
    }

    let p = pair.expect("binary theorems get a pair");
    let h = p.h;
    let (n1, n2) = (g.n(), h.n());
    let cart = || p.product(ProductKind::Cartesian);
    let strong = || p.product(ProductKind::Strong);
    const C: &str = "G□H";
    const S: &str = "G⊠H";

    let c = match theorem {
        EqChino => {
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 1, r, ev.gamma(g, "G")? * ev.gamma(h, "H")?)
        }
        TLowerI => {
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 6, 6 * r, 4 * ev.gamma(g, "G")? * ev.gamma_r(h, "H")?)
        }
        TLowerII => {
            let prod = cart()?;
            let r = ev.gamma_r(prod, C)?;
            let gp = ev.gamma(prod, C)?;
            Check::new(Ge, 6, 6 * r, 3 * (ev.gamma(g, "G")? * ev.gamma_r(h, "H")? + gp))
        }
        CRR3 => {
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 6, 6 * r, 2 * ev.gamma_r(g, "G")? * ev.gamma_r(h, "H")?)
        }
        CGR3 => {
            let gp = ev.gamma(cart()?, C)?;
            Check::new(Ge, 6, 6 * gp, 2 * ev.gamma(g, "G")? * ev.gamma_r(h, "H")?)
        }
        EqCasiVizing => {
            let gp = ev.gamma(cart()?, C)?;
            Check::new(Ge, 6, 6 * gp, 3 * ev.gamma(g, "G")? * ev.gamma(h, "H")?)
        }
        RImprovedVizing => {
            let (gh, rh) = (ev.gamma(h, "H")?, ev.gamma_r(h, "H")?);
            require!(ev, 2 * rh > 3 * gh, "gamma_R(H) > 3 gamma(H) / 2");
            let gg = ev.gamma(g, "G")?;
            let gp = ev.gamma(cart()?, C)?;
            Check::new(Ge, 6, 6 * gp, 3 * gg * gh + 2 * gg)
        }
        CRomanI => {
            require!(ev, h.is_roman()?, "H Roman");
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 6, 6 * r, 8 * ev.gamma(g, "G")? * ev.gamma(h, "H")?)
        }
        CRomanII => {
            require!(ev, h.is_roman()?, "H Roman");
            let gp = ev.gamma(cart()?, C)?;
            Check::new(Ge, 6, 6 * gp, 4 * ev.gamma(g, "G")? * ev.gamma(h, "H")?)
        }
        CFHalfmax => {
            require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
            let (gg, rg) = (ev.gamma(g, "G")?, ev.gamma_r(g, "G")?);
            let (gh, rh) = (ev.gamma(h, "H")?, ev.gamma_r(h, "H")?);
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 6, 6 * r, 3 * (gg * (rh + gh)).max(gh * (rg + gg)))
        }
        TFLower => {
            require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 1, r, ev.gamma(g, "G")? * ev.gamma_r(h, "H")?)
        }
        CFRoman => {
            require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
            require!(ev, h.is_roman()?, "H Roman");
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Ge, 1, r, 2 * ev.gamma(g, "G")? * ev.gamma(h, "H")?)
        }
        TSuperior => {
            let r = ev.gamma_r(cart()?, C)?;
            let rhs = (n1 * ev.gamma_r(h, "H")?).min(n2 * ev.gamma_r(g, "G")?);
            Check::new(Le, 1, r, rhs)
        }
        CSuperior2g => {
            let r = ev.gamma_r(cart()?, C)?;
            let rhs = 2 * (n1 * ev.gamma(h, "H")?).min(n2 * ev.gamma(g, "G")?);
            Check::new(Le, 1, r, rhs)
        }
        TEldekI => {
            require!(ev, g.has_large_component(), "G has a component of order > 2");
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Le, 1, r, (n1 + 1) * ev.gamma_r(h, "H")? - 2 * ev.gamma(h, "H")?)
        }
        TEldekII => {
            require!(ev, g.is_roman()?, "G Roman");
            let gg = ev.gamma(g, "G")?;
            let (gh, rh) = (ev.gamma(h, "H")?, ev.gamma_r(h, "H")?);
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Le, 1, r, 2 * n1 * (rh - gh) + 2 * gg * (2 * gh - rh))
        }
        CNonroman => {
            require!(ev, g.has_large_component(), "G has a component of order > 2");
            require!(ev, !h.is_roman()?, "H not Roman");
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Le, 1, r, n1 * ev.gamma_r(h, "H")? - 1)
        }
        PCorochulo => {
            require!(ev, g.has_large_component(), "G has a component of order > 2");
            require!(ev, h.graph().is_connected(), "H connected");
            require!(ev, h.has_full_degree_vertex()?, "H has a vertex of degree n2 - gamma(H)");
            let gh = ev.gamma(h, "H")?;
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Le, 1, r, n1 * (gh + 1) - gh + 1)
        }
        TFlojito => {
            let (gg, gh) = (ev.gamma(g, "G")?, ev.gamma(h, "H")?);
            let r = ev.gamma_r(cart()?, C)?;
            Check::new(Le, 1, r, 2 * gg * gh + (n1 - gg) * (n2 - gh))
        }
        TStrongSandwich | CColoroco => {
            let (gg, gh) = (ev.gamma(g, "G")?, ev.gamma(h, "H")?);
            let lower = (ev.p2(g, "G")? * gh).max(gg * ev.p2(h, "H")?);
            let prod = strong()?;
            if theorem == TStrongSandwich {
                Check::within(1, lower, ev.gamma(prod, S)?, gg * gh)
            } else {
                Check::within(1, lower, ev.gamma_r(prod, S)?, 2 * gg * gh)
            }
        }
        CStrongFEq => {
            require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
            let s = ev.gamma(strong()?, S)?;
            Check::new(Eq, 1, s, ev.gamma(g, "G")? * ev.gamma(h, "H")?)
        }
        TStrongMinus => {
            let (rg, rh) = (ev.gamma_r(g, "G")?, ev.gamma_r(h, "H")?);
            let (a2, f1) = g.max_b2()?;
            let (b2, f2) = h.max_b2()?;
            ev.labels("max |A2| function(G)".into(), f1);
            ev.labels("max |B2| function(H)".into(), f2);
            let r = ev.gamma_r(strong()?, S)?;
            Check::new(Le, 1, r, rg * rh - 2 * a2 * b2)
        }
        CStrongMinus2 => {
            require!(ev, g.graph().is_nonempty(), "G non-empty");
            require!(ev, h.graph().is_nonempty(), "H non-empty");
            let rhs = ev.gamma_r(g, "G")? * ev.gamma_r(h, "H")? - 2;
            Check::new(Le, 1, ev.gamma_r(strong()?, S)?, rhs)
        }
        CStrongPncn => {
            require!(ev, g.graph().is_nonempty(), "G non-empty");
            require!(ev, h.graph().is_path() || h.graph().is_cycle(), "H a path or a cycle");
            let rg = ev.gamma_r(g, "G")?;
            let rhs = pncn_bound(n2, rg);
            Check::new(Le, 1, ev.gamma_r(strong()?, S)?, rhs)
        }
        TStrongFLower => {
            require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
            let r = ev.gamma_r(strong()?, S)?;
            Check::new(Ge, 1, r, ev.gamma(g, "G")? * ev.gamma_r(h, "H")?)
        }
        CStrongRomanClosed => {
            require!(ev, ev.in_f(g, "G")?, "G has a perfect code");
            require!(ev, h.is_roman()?, "H Roman");
            let prod = strong()?;
            Check::new(Eq, 1, ev.gamma_r(prod, S)?, 2 * ev.gamma(prod, S)?)
        }
        _ => unreachable!("unary theorem"),
    };
    Ok(Outcome::Checked(c))
}

/// Right-hand side of the path/cycle strong-product bound, in closed form
/// for a second factor of order `n`.
pub fn pncn_bound(n: i64, gamma_r_g: i64) -> i64 {
    let factor = if n % 3 == 1 { (2 * n + 1) / 3 } else { 2 * ((n + 2) / 3) };
    factor * gamma_r_g - 2 * (n / 3)
}

fn instance(theorem: TheoremId, g: &Graph, h: Option<&Graph>) -> Instance {
    let h = match (theorem, h) {
        (TheoremId::PFK2, _) => Some(make_family(&FamilySpec::Complete(2)).expect("K2")),
        (_, h) => h.cloned(),
    };
    Instance {
        g: g.display_name(),
        g_graph6: write_graph6(g),
        h: h.as_ref().map(Graph::display_name),
        h_graph6: h.as_ref().map(write_graph6),
        product: theorem.product_kind(),
    }
}

/// Evaluates `theorem` on facts that may be shared across many records.
pub fn evaluate_facts(theorem: TheoremId, g: &GraphFacts, pair: Option<&PairFacts>, solver: &Solver) -> BoundRecord {
    let mut record = BoundRecord {
        theorem,
        instance: instance(theorem, g.graph(), pair.map(|p| p.h.graph())),
        status: Status::Skipped,
        hypotheses_met: false,
        hypotheses: String::new(),
        relation: nominal_relation(theorem),
        scale: 1,
        lower: None,
        lhs: None,
        rhs: None,
        holds: None,
        tight: None,
        skip_reason: None,
        witnesses: Vec::new(),
    };
    let mut ev = Eval {
        hypotheses: Vec::new(),
        witnesses: Vec::new(),
    };
    match check(theorem, g, pair, solver, &mut ev) {
        Ok(Outcome::NotMet(reason)) => {
            record.status = Status::HypothesesNotMet;
            record.hypotheses = reason;
        }
        Ok(Outcome::Checked(c)) => {
            let holds = c.holds();
            record.status = if holds { Status::Held } else { Status::Violated };
            record.hypotheses_met = true;
            record.hypotheses = if ev.hypotheses.is_empty() {
                "none".into()
            } else {
                ev.hypotheses.join("; ")
            };
            record.relation = c.relation;
            record.scale = c.scale;
            record.lower = c.lower;
            record.lhs = Some(c.lhs);
            record.rhs = Some(c.rhs);
            record.holds = Some(holds);
            record.tight = Some(c.tight());
            record.witnesses = ev.witnesses;
        }
        Err(e) => {
            record.hypotheses = if ev.hypotheses.is_empty() {
                "undetermined".into()
            } else {
                format!("{}; rest undetermined", ev.hypotheses.join("; "))
            };
            record.skip_reason = Some(e.to_string());
        }
    }
    record
}

/// Evaluates one check on `g` (and `h` for binary checks).
pub fn evaluate(theorem: TheoremId, g: &Graph, h: Option<&Graph>, solver: &Solver) -> Result<BoundRecord> {
    match (theorem.arity(), h) {
        (Arity::Unary, Some(_)) => {
            return Err(Error::Input(format!("{theorem} takes a single graph")));
        }
        (Arity::Binary, None) => {
            return Err(Error::Input(format!("{theorem} takes two graphs")));
        }
        _ => {}
    }
    let gf = GraphFacts::new(g.clone(), solver);
    let hf = h.map(|h| GraphFacts::new(h.clone(), solver));
    let pair = hf.as_ref().map(|hf| PairFacts::new(&gf, hf, solver));
    Ok(evaluate_facts(theorem, &gf, pair.as_ref(), solver))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::SolverConfig;

    fn fam(s: &str) -> Graph {
        make_family(&s.parse().unwrap()).unwrap()
    }

    fn eval(t: TheoremId, g: &str, h: Option<&str>) -> BoundRecord {
        let h = h.map(fam);
        evaluate(t, &fam(g), h.as_ref(), &Solver::default()).unwrap()
    }

    #[test]
    fn f_lower_on_path_and_star() {
        let r = eval(TheoremId::TFLower, "path:3", Some("star:3"));
        assert_eq!(r.status, Status::Held);
        assert_eq!(r.rhs, Some(2));
        assert!(r.lhs.unwrap() >= 2);
    }

    #[test]
    fn corochulo_is_tight_on_path_and_spider() {
        let r = eval(TheoremId::PCorochulo, "path:3", Some("spider:3:1"));
        assert_eq!((r.lhs, r.rhs, r.tight), (Some(8), Some(8), Some(true)));
    }

    #[test]
    fn strong_f_eq_gated_on_c4() {
        let r = eval(TheoremId::CStrongFEq, "cycle:4", Some("path:3"));
        assert_eq!(r.status, Status::HypothesesNotMet);
        assert!(!r.hypotheses_met);
        assert_eq!((r.lhs, r.rhs), (None, None));
    }

    #[test]
    fn strong_sandwich_forced_on_c6() {
        let r = eval(TheoremId::TStrongSandwich, "cycle:6", Some("cycle:6"));
        assert_eq!((r.lower, r.lhs, r.rhs), (Some(4), Some(4), Some(4)));
        assert_eq!(r.holds, Some(true));
    }

    #[test]
    fn strong_minus_tight_on_universal_vertices() {
        let r = eval(TheoremId::TStrongMinus, "complete:3", Some("complete:3"));
        assert_eq!((r.lhs, r.rhs, r.tight), (Some(2), Some(2), Some(true)));
    }

    #[test]
    fn scaled_thirds() {
        // 6·γ_R(P3□P3) ≥ 4·γ(P3)·γ_R(P3)
        let r = eval(TheoremId::TLowerI, "path:3", Some("path:3"));
        assert_eq!(r.scale, 6);
        assert_eq!(r.rhs, Some(8));
        assert_eq!(r.status, Status::Held);
    }

    #[test]
    fn arity_is_checked() {
        let g = fam("path:3");
        let s = Solver::default();
        assert!(evaluate(TheoremId::L1Sandwich, &g, Some(&g), &s).is_err());
        assert!(evaluate(TheoremId::EqChino, &g, None, &s).is_err());
    }

    #[test]
    fn budget_gives_skip() {
        let s = Solver::new(SolverConfig {
            node_budget: Some(1),
            ..SolverConfig::default()
        });
        let g = fam("cycle:5");
        let r = evaluate(TheoremId::TSuperior, &g, Some(&g), &s).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.skip_reason.is_some());
        assert_eq!(r.lhs, None);
    }

    #[test]
    fn pncn_closed_form() {
        assert_eq!(pncn_bound(3, 2), 2);
        assert_eq!(pncn_bound(4, 2), 4);
        assert_eq!(pncn_bound(6, 2), 4);
        assert_eq!(pncn_bound(5, 3), 10);
    }

    #[test]
    fn f_k2_on_cycle_of_six() {
        let r = eval(TheoremId::PFK2, "cycle:6", None);
        assert_eq!(r.scale, 3);
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.instance.h.as_deref(), Some("K2"));
    }

    #[test]
    fn gamma_plus_one_on_small_graphs() {
        for g in ["path:4", "star:3", "cycle:5", "complete:2"] {
            let r = eval(TheoremId::PGammaPlus1, g, None);
            assert_eq!(r.status, Status::Held, "{g}");
        }
    }
}
