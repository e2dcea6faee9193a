//! Brute-force reference implementations. Nothing here calls the solvers.

#![allow(dead_code)]

use std::collections::VecDeque;

use romdom::bounds::all_labeled_graphs;
use romdom::{make_family, FamilySpec, Graph};

/// Every labeled graph on `1..=max_n` vertices.
pub fn labeled_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_labeled_graphs).collect()
}

/// 500 seeded `G(5, 1/2)` graphs.
pub fn random_five() -> Vec<Graph> {
    (0..500)
        .map(|seed| make_family(&FamilySpec::Random { n: 5, num: 1, den: 2, seed }).unwrap())
        .collect()
}

pub fn adj(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn dominates(a: &[Vec<bool>], mask: u32) -> bool {
    (0..a.len()).all(|v| mask >> v & 1 == 1 || (0..a.len()).any(|u| mask >> u & 1 == 1 && a[u][v]))
}

pub fn gamma(g: &Graph) -> usize {
    let a = adj(g);
    (0u32..1 << g.n())
        .filter(|&m| dominates(&a, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// All labelings in `{0,1,2}^n`, vertex 0 least significant.
pub fn labelings(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = (code % 3) as u8;
                code /= 3;
                d
            })
            .collect()
    })
}

pub fn is_rdf(a: &[Vec<bool>], f: &[u8]) -> bool {
    (0..f.len()).all(|v| f[v] != 0 || (0..f.len()).any(|u| a[u][v] && f[u] == 2))
}

/// All minimum-weight Roman dominating functions, sorted.
pub fn optimal_rdfs(g: &Graph) -> (usize, Vec<Vec<u8>>) {
    let a = adj(g);
    let valid: Vec<(usize, Vec<u8>)> = labelings(g.n())
        .filter(|f| is_rdf(&a, f))
        .map(|f| (f.iter().map(|&x| x as usize).sum(), f))
        .collect();
    let best = valid.iter().map(|(w, _)| *w).min().unwrap();
    let mut all: Vec<Vec<u8>> = valid.into_iter().filter(|(w, _)| *w == best).map(|(_, f)| f).collect();
    all.sort();
    (best, all)
}

pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let a = adj(g);
    (0..g.n())
        .map(|s| {
            let mut d = vec![None; g.n()];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for v in 0..g.n() {
                    if a[u][v] && d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Largest set with pairwise distance at least 3.
pub fn packing(g: &Graph) -> usize {
    let d = distances(g);
    (0u32..1 << g.n())
        .filter(|&m| {
            (0..g.n()).all(|u| {
                (u + 1..g.n()).all(|v| m >> u & 1 == 0 || m >> v & 1 == 0 || d[u][v].is_none_or(|x| x >= 3))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// Every set meeting each closed neighborhood exactly once, as sorted vertex lists.
pub fn perfect_codes(g: &Graph) -> Vec<Vec<usize>> {
    let a = adj(g);
    let n = g.n();
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|v| (0..n).filter(|&u| m >> u & 1 == 1 && (u == v || a[u][v])).count() == 1)
        })
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

pub fn fam(s: &str) -> Graph {
    make_family(&s.parse().unwrap()).unwrap()
}
