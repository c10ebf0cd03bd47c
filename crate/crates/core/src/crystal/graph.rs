use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Display, Write as _};
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;

use super::{Crystal, TableauCrystal};
use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::tableaux::Tableau;

/// An `i`-arrow `source —i→ target`, i.e. `f̃_i(source) = target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

/// A crystal graph with vertices indexed in breadth-first discovery order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph<V> {
    pub rank: usize,
    pub vertices: Vec<V>,
    pub weights: Vec<Weight>,
    pub edges: Vec<Edge>,
    /// Index of the generating vertex.
    pub source: usize,
}

impl<V> CrystalGraph<V> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `out[v][i - 1]`: the target of the `i`-arrow leaving `v`, if any.
    pub fn out_table(&self) -> Vec<Vec<Option<usize>>> {
        let mut out = vec![vec![None; self.rank]; self.len()];
        for e in &self.edges {
            out[e.source][e.label - 1] = Some(e.target);
        }
        out
    }

    /// Structural checks valid for any connected highest-weight crystal
    /// graph: at most one `i`-arrow in and out of each vertex, arrows lower
    /// the weight by `α_i`, and the source is the only vertex without an
    /// incoming arrow.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut outgoing = vec![vec![false; self.rank]; self.len()];
        let mut incoming = vec![vec![false; self.rank]; self.len()];
        for e in &self.edges {
            let i = e.label - 1;
            if std::mem::replace(&mut outgoing[e.source][i], true) {
                return Err(format!("vertex {} has two {}-arrows out", e.source, e.label));
            }
            if std::mem::replace(&mut incoming[e.target][i], true) {
                return Err(format!("vertex {} has two {}-arrows in", e.target, e.label));
            }
            let drop = &self.weights[e.source] - &self.weights[e.target];
            let alpha: Vec<i64> = (1..=self.rank)
                .map(|j| crate::cartan::cartan_entry(e.label, j))
                .collect();
            if drop.coeffs() != alpha.as_slice() {
                return Err(format!("arrow {e:?} does not lower the weight by α_{}", e.label));
            }
        }
        let roots: Vec<usize> = (0..self.len())
            .filter(|&v| incoming[v].iter().all(|&x| !x))
            .collect();
        if roots != [self.source] {
            return Err(format!("vertices without incoming arrows: {roots:?}"));
        }
        Ok(())
    }
}

/// Breadth-first generation of the connected component of `source` under
/// the `f̃_i`. Each layer is expanded in parallel and newly found vertices
/// are numbered in sorted order, so the result is deterministic.
/// `max_depth` truncates the search (needed for infinite crystals).
pub fn generate<C>(crystal: &C, source: C::Element, max_depth: Option<usize>) -> CrystalGraph<C::Element>
where
    C: Crystal + Sync,
    C::Element: Ord + Send + Sync,
{
    let n = crystal.rank();
    let mut index: HashMap<C::Element, usize> = HashMap::new();
    let mut vertices = vec![source.clone()];
    let mut weights = vec![crystal.weight(&source)];
    let mut edges = Vec::new();
    index.insert(source, 0);
    let mut layer = vec![0usize];
    let mut depth = 0;
    while !layer.is_empty() && max_depth.is_none_or(|d| depth < d) {
        let successors: Vec<Vec<(usize, C::Element)>> = layer
            .par_iter()
            .map(|&v| {
                (1..=n)
                    .filter_map(|i| crystal.f(&vertices[v], i).map(|w| (i, w)))
                    .collect()
            })
            .collect();
        let mut fresh: Vec<C::Element> = successors
            .iter()
            .flatten()
            .filter(|(_, w)| !index.contains_key(w))
            .map(|(_, w)| w.clone())
            .collect();
        fresh.sort();
        fresh.dedup();
        let mut next = Vec::with_capacity(fresh.len());
        for w in fresh {
            let k = vertices.len();
            weights.push(crystal.weight(&w));
            index.insert(w.clone(), k);
            vertices.push(w);
            next.push(k);
        }
        for (&v, succ) in layer.iter().zip(&successors) {
            for (i, w) in succ {
                edges.push(Edge {
                    source: v,
                    label: *i,
                    target: index[w],
                });
            }
        }
        layer = next;
        depth += 1;
    }
    edges.sort();
    CrystalGraph {
        rank: n,
        vertices,
        weights,
        edges,
        source: 0,
    }
}

/// The crystal graph of `B(λ)` generated from its highest weight tableau.
pub fn generate_crystal(highest: &Tableau, n: usize) -> Result<CrystalGraph<Tableau>> {
    if !highest.is_highest_weight() {
        return Err(Error::domain(format!("{highest} is not a highest weight tableau")));
    }
    if highest.num_rows() > n {
        return Err(Error::domain(format!(
            "shape {} has more than n = {n} rows",
            highest.shape()
        )));
    }
    Ok(generate(&TableauCrystal::new(n), highest.clone(), None))
}

/// Whether there is a weight-preserving bijection of vertices carrying the
/// `i`-arrows of `a` exactly onto those of `b`. Both graphs are assumed
/// connected from their sources.
pub fn crystal_isomorphic<V, W>(a: &CrystalGraph<V>, b: &CrystalGraph<W>) -> bool {
    if a.rank != b.rank || a.len() != b.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let (out_a, out_b) = (a.out_table(), b.out_table());
    let mut map: Vec<Option<usize>> = vec![None; a.len()];
    let mut used = vec![false; b.len()];
    map[a.source] = Some(b.source);
    used[b.source] = true;
    let mut queue = VecDeque::from([a.source]);
    while let Some(u) = queue.pop_front() {
        let v = map[u].expect("queued vertices are mapped");
        if a.weights[u] != b.weights[v] {
            return false;
        }
        for i in 0..a.rank {
            match (out_a[u][i], out_b[v][i]) {
                (None, None) => {}
                (Some(x), Some(y)) => match map[x] {
                    Some(m) if m == y => {}
                    Some(_) => return false,
                    None => {
                        if std::mem::replace(&mut used[y], true) {
                            return false;
                        }
                        map[x] = Some(y);
                        queue.push_back(x);
                    }
                },
                _ => return false,
            }
        }
    }
    map.iter().all(Option::is_some)
}

impl<V: Display> CrystalGraph<V> {
    /// Graphviz rendering; arrows are labelled by their colour `i`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
        for (k, (v, w)) in self.vertices.iter().zip(&self.weights).enumerate() {
            let _ = writeln!(s, "  v{k} [label=\"{v}\\n{w}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.source, e.target, e.label);
        }
        s.push_str("}\n");
        s
    }
}

impl<V: Display> Display for CrystalGraph<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} vertices, {} arrows", self.len(), self.edges.len())?;
        for (k, (v, w)) in self.vertices.iter().zip(&self.weights).enumerate() {
            writeln!(f, "v{k}\t{v}\twt {w}")?;
        }
        for e in &self.edges {
            writeln!(f, "v{} -{}-> v{}", e.source, e.label, e.target)?;
        }
        Ok(())
    }
}
