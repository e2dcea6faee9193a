use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::capacity;
use crate::error::{Error, Result};
use crate::family::{make_family, FamilySpec, SplitMix64};
use crate::graph::{Graph, ProductKind};
use crate::graph6::{parse_graph6, write_graph6};
use crate::solver::{Solver, SolverConfig};

use super::evaluate::{evaluate_facts, BoundRecord, Status};
use super::facts::{GraphFacts, PairFacts};
use super::theorem::{Arity, TheoremId};

/// Largest order accepted for exhaustive labeled corpora.
pub const MAX_EXHAUSTIVE_N: usize = 6;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_MAX_STRONG_ORDER: usize = 36;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusEntry {
    Family(FamilySpec),
    Graph6 { name: String, code: String },
}

impl CorpusEntry {
    fn build(&self) -> Result<Graph> {
        match self {
            CorpusEntry::Family(spec) => make_family(spec),
            CorpusEntry::Graph6 { name, code } => Ok(parse_graph6(code)?.with_label(name.clone())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corpus {
    /// Every labeled graph on `1..=max_n` vertices.
    ExhaustiveLabeled { max_n: usize },
    Families(Vec<CorpusEntry>),
    /// `count` graphs `G(n, 1/2)` with `n` drawn from `min_n..=max_n`.
    Random { count: usize, min_n: usize, max_n: usize, seed: u64 },
}

impl Corpus {
    /// P2..P5, C3..C5, K2..K4, K1,2, K1,3, spider(3,1), Q3 and K2∪K1.
    pub fn default_families() -> Corpus {
        use FamilySpec::*;
        let mut entries: Vec<CorpusEntry> = Vec::new();
        let specs = (2..=5)
            .map(Path)
            .chain((3..=5).map(Cycle))
            .chain((2..=4).map(Complete))
            .chain([Star(2), Star(3), Spider { legs: 3, subdivided: 1 }, Hypercube(3)]);
        entries.extend(specs.map(CorpusEntry::Family));
        entries.push(CorpusEntry::Graph6 {
            name: "K2∪K1".into(),
            code: "B_".into(),
        });
        Corpus::Families(entries)
    }

    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Corpus::ExhaustiveLabeled { max_n } => {
                if *max_n == 0 || *max_n > MAX_EXHAUSTIVE_N {
                    return Err(Error::InvalidParams(format!(
                        "exhaustive corpus order must be in 1..={MAX_EXHAUSTIVE_N}, got {max_n}"
                    )));
                }
                Ok((1..=*max_n).flat_map(all_labeled_graphs).collect())
            }
            Corpus::Families(entries) => entries.iter().map(CorpusEntry::build).collect(),
            Corpus::Random {
                count,
                min_n,
                max_n,
                seed,
            } => {
                if min_n > max_n || *min_n == 0 {
                    return Err(Error::InvalidParams(format!("bad order range {min_n}..={max_n}")));
                }
                let mut rng = SplitMix64::new(*seed);
                let span = (max_n - min_n + 1) as u64;
                (0..*count)
                    .map(|_| {
                        let n = min_n + (rng.next_u64() % span) as usize;
                        let seed = rng.next_u64();
                        make_family(&FamilySpec::Random {
                            n,
                            num: 1,
                            den: 2,
                            seed,
                        })
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::ExhaustiveLabeled { max_n } => write!(f, "exhaustive-labeled({max_n})"),
            Corpus::Families(entries) => {
                f.write_str("families(")?;
                for (i, e) in entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    match e {
                        CorpusEntry::Family(s) => write!(f, "{s}")?,
                        CorpusEntry::Graph6 { code, .. } => write!(f, "g6:{code}")?,
                    }
                }
                f.write_str(")")
            }
            Corpus::Random {
                count,
                min_n,
                max_n,
                seed,
            } => write!(f, "random({count},{min_n}..={max_n},{seed})"),
        }
    }
}

/// Labeled graphs on `n` vertices, edge sets counted up in graph6 bit order.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>();
            Graph::from_edges(n, &edges).expect("order fits")
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SuiteSpec {
    pub name: String,
    pub corpus: Corpus,
    pub theorems: Vec<TheoremId>,
    pub products: Vec<ProductKind>,
    pub solver: SolverConfig,
    /// Pairs whose Cartesian product is larger are excluded.
    pub max_cartesian_order: usize,
    /// Pairs whose strong product is larger are excluded.
    pub max_strong_order: usize,
    /// Worker threads; 0 lets the pool choose.
    pub jobs: usize,
}

impl SuiteSpec {
    pub fn new(name: impl Into<String>, corpus: Corpus, theorems: Vec<TheoremId>) -> Self {
        SuiteSpec {
            name: name.into(),
            corpus,
            theorems,
            products: vec![ProductKind::Cartesian, ProductKind::Strong],
            solver: SolverConfig {
                node_budget: Some(DEFAULT_NODE_BUDGET),
                ..SolverConfig::default()
            },
            max_cartesian_order: capacity(),
            max_strong_order: DEFAULT_MAX_STRONG_ORDER,
            jobs: 1,
        }
    }

    fn order_limit(&self, kind: ProductKind) -> usize {
        match kind {
            ProductKind::Cartesian => self.max_cartesian_order,
            ProductKind::Strong => self.max_strong_order,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub checked: usize,
    pub held: usize,
    pub violated: usize,
    pub tight: usize,
    pub hypothesis_skipped: usize,
    pub budget_skipped: usize,
    /// (pair, product kind) combinations dropped by the order limits.
    pub excluded_pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusGraph {
    pub name: String,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub spec: String,
    pub graphs: Vec<CorpusGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub corpus: CorpusReport,
    pub records: Vec<BoundRecord>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    theorem: &'a str,
    g: &'a str,
    g_graph6: &'a str,
    h: &'a str,
    h_graph6: &'a str,
    product: &'a str,
    status: &'a str,
    hypotheses_met: bool,
    hypotheses: &'a str,
    relation: &'a str,
    scale: i64,
    lower: Option<i64>,
    lhs: Option<i64>,
    rhs: Option<i64>,
    holds: Option<bool>,
    tight: Option<bool>,
    skip_reason: &'a str,
}

impl Report {
    pub fn has_violations(&self) -> bool {
        self.summary.violated > 0
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.records.iter().filter(|r| r.status == Status::Violated)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per record, without witnesses.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            let product = r.instance.product.map(|k| k.to_string()).unwrap_or_default();
            w.serialize(CsvRow {
                theorem: r.theorem.as_str(),
                g: &r.instance.g,
                g_graph6: &r.instance.g_graph6,
                h: r.instance.h.as_deref().unwrap_or(""),
                h_graph6: r.instance.h_graph6.as_deref().unwrap_or(""),
                product: &product,
                status: r.status.as_str(),
                hypotheses_met: r.hypotheses_met,
                hypotheses: &r.hypotheses,
                relation: r.relation.as_str(),
                scale: r.scale,
                lower: r.lower,
                lhs: r.lhs,
                rhs: r.rhs,
                holds: r.holds,
                tight: r.tight,
                skip_reason: r.skip_reason.as_deref().unwrap_or(""),
            })
            .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }
}

fn summarize(records: &[BoundRecord], excluded_pairs: usize) -> Summary {
    let mut s = Summary {
        records: records.len(),
        excluded_pairs,
        ..Summary::default()
    };
    for r in records {
        match r.status {
            Status::Held => s.held += 1,
            Status::Violated => s.violated += 1,
            Status::HypothesesNotMet => s.hypothesis_skipped += 1,
            Status::Skipped => s.budget_skipped += 1,
        }
        if r.tight == Some(true) {
            s.tight += 1;
        }
    }
    s.checked = s.held + s.violated;
    s
}

enum Item {
    Unary(usize),
    Pair(usize, usize, Vec<TheoremId>),
}

/// Evaluates every selected check on the corpus: unary checks per graph,
/// then binary checks per ordered pair. Record order does not depend on `jobs`.
pub fn run_suite(spec: &SuiteSpec) -> Result<Report> {
    let graphs = spec.corpus.graphs()?;
    let solver = Solver::new(spec.solver);
    let unary: Vec<TheoremId> = spec
        .theorems
        .iter()
        .copied()
        .filter(|t| t.arity() == Arity::Unary)
        .collect();
    let binary: Vec<TheoremId> = spec
        .theorems
        .iter()
        .copied()
        .filter(|t| t.arity() == Arity::Binary && t.product_kind().is_some_and(|k| spec.products.contains(&k)))
        .collect();

    let mut items: Vec<Item> = Vec::new();
    if !unary.is_empty() {
        items.extend((0..graphs.len()).map(Item::Unary));
    }
    let mut excluded = 0;
    if !binary.is_empty() {
        for i in 0..graphs.len() {
            for j in 0..graphs.len() {
                let order = graphs[i].n() * graphs[j].n();
                let mut kept = Vec::new();
                for kind in [ProductKind::Cartesian, ProductKind::Strong] {
                    let of_kind = binary.iter().filter(|t| t.product_kind() == Some(kind));
                    if order <= spec.order_limit(kind).min(capacity()) {
                        kept.extend(of_kind);
                    } else if of_kind.count() > 0 {
                        excluded += 1;
                    }
                }
                if !kept.is_empty() {
                    kept.sort();
                    items.push(Item::Pair(i, j, kept));
                }
            }
        }
    }

    let facts: Vec<GraphFacts> = graphs.iter().map(|g| GraphFacts::new(g.clone(), &solver)).collect();
    let work = |item: &Item| -> Vec<BoundRecord> {
        match item {
            Item::Unary(i) => unary.iter().map(|&t| evaluate_facts(t, &facts[*i], None, &solver)).collect(),
            Item::Pair(i, j, ts) => {
                let pair = PairFacts::new(&facts[*i], &facts[*j], &solver);
                ts.iter()
                    .map(|&t| evaluate_facts(t, &facts[*i], Some(&pair), &solver))
                    .collect()
            }
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let records: Vec<BoundRecord> = pool.install(|| items.par_iter().map(work).collect::<Vec<_>>().concat());

    let summary = summarize(&records, excluded);
    Ok(Report {
        suite: spec.name.clone(),
        corpus: CorpusReport {
            spec: spec.corpus.to_string(),
            graphs: graphs
                .iter()
                .map(|g| CorpusGraph {
                    name: g.display_name(),
                    graph6: write_graph6(g),
                })
                .collect(),
        },
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use TheoremId::*;

    #[test]
    fn labeled_graph_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| all_labeled_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 8, 64]);
    }

    #[test]
    fn exhaustive_four_unary() {
        let spec = SuiteSpec::new(
            "lemmas",
            Corpus::ExhaustiveLabeled { max_n: 4 },
            vec![L1Sandwich, L2B2, L2B1],
        );
        let report = run_suite(&spec).unwrap();
        assert_eq!(report.corpus.graphs.len(), 75);
        assert_eq!(report.summary.records, 225);
        assert_eq!(report.summary.held, 225);
    }

    #[test]
    fn default_families_has_fifteen_graphs() {
        let graphs = Corpus::default_families().graphs().unwrap();
        assert_eq!(graphs.len(), 15);
        assert_eq!(graphs[14].display_name(), "K2∪K1");
        assert_eq!(graphs[14].edge_count(), 1);
    }

    #[test]
    fn strong_order_limit_excludes_pairs() {
        let corpus = Corpus::Families(vec![
            CorpusEntry::Family(FamilySpec::Path(3)),
            CorpusEntry::Family(FamilySpec::Hypercube(3)),
        ]);
        let mut spec = SuiteSpec::new("s", corpus, vec![TStrongSandwich]);
        spec.max_strong_order = 20;
        let report = run_suite(&spec).unwrap();
        // Only P3⊠P3 fits.
        assert_eq!(report.summary.records, 1);
        assert_eq!(report.summary.excluded_pairs, 3);
    }

    #[test]
    fn parallel_order_matches_sequential() {
        let mut spec = SuiteSpec::new("p", Corpus::default_families(), vec![EqChino, TFlojito, CColoroco]);
        spec.max_strong_order = 16;
        let one = run_suite(&spec).unwrap();
        spec.jobs = 4;
        let four = run_suite(&spec).unwrap();
        assert_eq!(one.to_json(), four.to_json());
        assert!(!one.has_violations());
    }

    #[test]
    fn csv_has_one_row_per_record() {
        let spec = SuiteSpec::new(
            "c",
            Corpus::Families(vec![CorpusEntry::Family(FamilySpec::Cycle(4))]),
            vec![L1Sandwich, EqChino],
        );
        let report = run_suite(&spec).unwrap();
        let csv = report.to_csv();
        assert_eq!(csv.lines().count(), 1 + report.records.len());
        assert!(csv.starts_with("theorem,g,g_graph6"));
    }
}
