//! Simple undirected graphs on `0..n` with one adjacency word per vertex,
//! plus the Cartesian and strong products.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::{bit, capacity, low_mask, popcount, Ones, VertexSet, Word};
use crate::error::{Error, Result};

/// A finite simple graph. `adj[v]` is the open neighborhood of `v`.
///
/// Equality compares structure only; labels are descriptive.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Word>,
    label: Option<String>,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParams("a graph needs at least one vertex".into()));
    }
    let cap = capacity();
    if n > cap {
        return Err(Error::Capacity { n, capacity: cap });
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            label: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency words, checking symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<Word>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Input(format!("vertex {v} has neighbors outside 0..{n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::Input(format!("loop at vertex {v}")));
            }
            for u in Ones::new(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::Input(format!("asymmetric adjacency at {v}-{u}")));
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// The label, or the graph6 encoding when the graph is unlabeled.
    pub fn display_name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => crate::graph6::write_graph6(self),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bit mask of all vertices.
    #[inline]
    pub fn all(&self) -> Word {
        low_mask(self.n)
    }

    #[inline]
    pub fn adj_word(&self, v: usize) -> Word {
        self.adj[v]
    }

    /// N[v] as a word.
    #[inline]
    pub fn closed_word(&self, v: usize) -> Word {
        self.adj[v] | bit(v)
    }

    pub fn adjacency(&self) -> &[Word] {
        &self.adj
    }

    pub fn closed_neighborhoods(&self) -> Vec<Word> {
        (0..self.n).map(|v| self.closed_word(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.adj[v])
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.closed_word(v))
    }

    /// N[S] for a set given as a word.
    pub fn closed_word_of_set(&self, set: Word) -> Word {
        Ones::new(set).fold(set, |acc, v| acc | self.adj[v])
    }

    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_bits(self.n, self.closed_word_of_set(set.bits()))
    }

    pub fn is_dominating(&self, set: &VertexSet) -> bool {
        self.closed_word_of_set(set.bits()) == self.all()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        popcount(self.adj[v])
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&w| popcount(w)).sum::<usize>() / 2
    }

    /// Has at least one edge.
    pub fn is_nonempty(&self) -> bool {
        self.adj.iter().any(|&w| w != 0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Ones::new(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// u ~ v in the result iff 1 <= dist(u, v) <= 2.
    pub fn square(&self) -> Graph {
        let mut adj = vec![0; self.n];
        for (v, row) in adj.iter_mut().enumerate() {
            *row = self.closed_word_of_set(self.adj[v]) & !bit(v);
        }
        Graph {
            n: self.n,
            adj,
            label: self.label.as_ref().map(|l| format!("({l})^2")),
        }
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: Word = 0;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let next = Ones::new(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(VertexSet::from_bits(self.n, comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertices of `self` come first, then those of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g.label = Some(format!("{} + {}", self.display_name(), other.display_name()));
        Ok(g)
    }

    /// True iff the graph is a path `P_n` (a single vertex counts as `P_1`).
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.max_degree() <= 2 && self.edge_count() + 1 == self.n
    }

    /// True iff the graph is a cycle `C_n`, `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.is_regular() && self.min_degree() == 2
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("label", &self.label)
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
}

impl ProductKind {
    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Strong => "⊠",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            other => Err(Error::InvalidParams(format!("unknown product kind '{other}'"))),
        }
    }
}

/// Row-major index of `(i, j)` in a product whose second factor has `n2` vertices.
#[inline]
pub fn product_index(i: usize, j: usize, n2: usize) -> usize {
    i * n2 + j
}

/// Cartesian or strong product of `g` and `h`.
///
/// Vertex `(i, j)` is numbered `i * h.n() + j`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph> {
    let (n1, n2) = (g.n, h.n);
    let n = n1
        .checked_mul(n2)
        .ok_or(Error::Capacity { n: usize::MAX, capacity: capacity() })?;
    check_order(n)?;
    let mut adj = vec![0 as Word; n];
    for i in 0..n1 {
        for j in 0..n2 {
            let mut row: Word = 0;
            // same first coordinate, adjacent second
            for l in Ones::new(h.adj[j]) {
                row |= bit(product_index(i, l, n2));
            }
            for k in Ones::new(g.adj[i]) {
                // adjacent first coordinate, same second
                row |= bit(product_index(k, j, n2));
                if kind == ProductKind::Strong {
                    for l in Ones::new(h.adj[j]) {
                        row |= bit(product_index(k, l, n2));
                    }
                }
            }
            adj[product_index(i, j, n2)] = row;
        }
    }
    Ok(Graph {
        n,
        adj,
        label: Some(format!(
            "{} {} {}",
            g.display_name(),
            kind.symbol(),
            h.display_name()
        )),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn zero_vertices_rejected() {
        assert!(matches!(Graph::empty(0), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn k2_products() {
        let c4 = product(&k(2), &k(2), ProductKind::Cartesian).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_cycle());
        let k4 = product(&k(2), &k(2), ProductKind::Strong).unwrap();
        assert_eq!(k4, k(4));
    }

    #[test]
    fn grid_3x3() {
        let g = product(&path(3), &path(3), ProductKind::Cartesian).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 12);
        assert!(g.has_edge(product_index(1, 1, 3), product_index(0, 1, 3)));
        assert!(!g.has_edge(product_index(1, 1, 3), product_index(0, 0, 3)));
    }

    #[test]
    fn product_over_capacity() {
        let big = Graph::empty(capacity()).unwrap();
        assert!(matches!(
            product(&big, &k(2), ProductKind::Cartesian),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn square_of_p4() {
        let sq = path(4).square();
        assert_eq!(sq.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k(5).square(), k(5));
    }

    #[test]
    fn components_cases() {
        assert_eq!(path(4).components(), vec![VertexSet::full(4)]);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            g.components(),
            vec![VertexSet::from_vertices(3, [0, 1]), VertexSet::from_vertices(3, [2])]
        );
        let e = Graph::empty(3).unwrap();
        let comps: Vec<Vec<usize>> = e.components().iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn path_and_cycle_detection() {
        assert!(path(1).is_path());
        assert!(path(5).is_path());
        assert!(!path(5).is_cycle());
        assert!(k(3).is_cycle());
        assert!(!k(4).is_cycle());
        let union = path(2).disjoint_union(&path(1)).unwrap();
        assert!(!union.is_path());
    }
}
