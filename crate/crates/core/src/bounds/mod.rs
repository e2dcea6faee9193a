//! Checks of the bounds on γ, γ_R and P₂ of graphs and their products.
//!
//! Every check computes both sides exactly with the solvers. Fractional
//! bounds are compared after multiplying both sides by the record's `scale`,
//! so verdicts never depend on floating point.

mod evaluate;
mod facts;
mod premise;
mod suite;
mod theorem;

pub use evaluate::{evaluate, evaluate_facts, pncn_bound, BoundRecord, Instance, Relation, Status, Witness};
pub use facts::{GraphFacts, PairFacts};
pub use premise::{check_pncn_premise, default_partners, ForcedConstruction, PathOrCycle, PremiseReport};
pub use suite::{
    all_labeled_graphs, run_suite, Corpus, CorpusEntry, CorpusGraph, CorpusReport, Report, SuiteSpec, Summary,
    DEFAULT_MAX_STRONG_ORDER, DEFAULT_NODE_BUDGET, MAX_EXHAUSTIVE_N,
};
pub use theorem::{Arity, TheoremId};
