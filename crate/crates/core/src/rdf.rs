//! Roman dominating functions.

use serde::{Serialize, Serializer};

use crate::bitset::{bit, Ones, VertexSet, Word};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A labeling `V -> {0, 1, 2}`, stored as one label per vertex.
///
/// `B_i` is the set of vertices labeled `i`; the weight is `2|B_2| + |B_1|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RomanFunction {
    labels: Vec<u8>,
}

impl RomanFunction {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l > 2) {
            return Err(Error::Input(format!("label {} at vertex {v} is not in {{0,1,2}}", labels[v])));
        }
        Ok(RomanFunction { labels })
    }

    /// Labels 2 on `b2`, 1 on `b1`, 0 elsewhere. The sets must be disjoint.
    pub fn from_sets(n: usize, b1: Word, b2: Word) -> Self {
        assert_eq!(b1 & b2, 0, "B1 and B2 overlap");
        let labels = (0..n)
            .map(|v| {
                if b2 & bit(v) != 0 {
                    2
                } else if b1 & bit(v) != 0 {
                    1
                } else {
                    0
                }
            })
            .collect();
        RomanFunction { labels }
    }

    /// The cheapest Roman function with `B_2 = s`: every vertex outside `N[s]`
    /// must carry label 1.
    pub fn completion(g: &Graph, s: Word) -> Self {
        let covered = g.closed_word_of_set(s);
        RomanFunction::from_sets(g.n(), g.all() & !covered, s)
    }

    pub fn constant(n: usize, label: u8) -> Self {
        assert!(label <= 2);
        RomanFunction {
            labels: vec![label; n],
        }
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn weight(&self) -> usize {
        self.labels.iter().map(|&l| l as usize).sum()
    }

    fn class_word(&self, label: u8) -> Word {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == label)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    pub fn b0(&self) -> VertexSet {
        VertexSet::from_bits(self.n(), self.class_word(0))
    }

    pub fn b1(&self) -> VertexSet {
        VertexSet::from_bits(self.n(), self.class_word(1))
    }

    pub fn b2(&self) -> VertexSet {
        VertexSet::from_bits(self.n(), self.class_word(2))
    }

    /// Every 0-labeled vertex has a 2-labeled neighbor. `g` must have `self.n()` vertices.
    pub fn is_valid_on(&self, g: &Graph) -> bool {
        debug_assert_eq!(g.n(), self.n());
        let twos = self.class_word(2);
        let served = Ones::new(twos).fold(0, |acc, v| acc | g.adj_word(v));
        self.class_word(0) & !served == 0
    }
}

impl std::fmt::Debug for RomanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RomanFunction({:?}, w={})", self.labels, self.weight())
    }
}

impl Serialize for RomanFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels.serialize(serializer)
    }
}

/// Checks the Roman condition for `f` on `g`.
pub fn validate_rdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::Input(format!(
            "labeling has {} entries but the graph has {} vertices",
            f.n(),
            g.n()
        )));
    }
    Ok(f.is_valid_on(g))
}
