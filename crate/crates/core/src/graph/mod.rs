//! Cubic multigraphs: representation, deletion bookkeeping, I/O, a small
//! catalog of named graphs, enumeration and connectivity analysis.

mod canon;
mod catalog;
mod connectivity;
mod enumerate;
mod io;
mod marked;

pub use canon::{canonical_form, dedup_isomorphic};
pub use catalog::{catalog, mobius_ladder, petersen_label, CatalogName};
pub use connectivity::{connectivity_report, ConnectivityReport};
pub use enumerate::{enumerate_cubic, CubicEnumerator};
pub use io::{parse_graph, parse_sparse6, write_graph, write_sparse6, GraphFormat};
pub use marked::{remove_and_mark, Deletion, MarkedGraph, Stub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    Degree { vertex: usize, degree: usize },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("edge {0} listed twice in a deletion request")]
    DuplicateDeletion(usize),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// A loop-free 3-regular multigraph with stable edge ids.
///
/// Parallel edges are distinct entries of the edge list. The incidence list
/// of every vertex holds its three edge ids in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<[usize; 3]>,
}

impl CubicGraph {
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut lists: Vec<Vec<usize>> = vec![Vec::with_capacity(3); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: id, vertex: u });
            }
            lists[u].push(id);
            lists[v].push(id);
        }
        let mut incidence = Vec::with_capacity(n);
        for (vertex, list) in lists.into_iter().enumerate() {
            let star: [usize; 3] = list.as_slice().try_into().map_err(|_| GraphError::Degree {
                vertex,
                degree: list.len(),
            })?;
            incidence.push(star);
        }
        Ok(CubicGraph { n, edges, incidence })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The three edges at `v`, i.e. the star of `v`.
    pub fn incident(&self, v: usize) -> &[usize; 3] {
        &self.incidence[v]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Neighbours of `v` with multiplicity, in incidence order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Edges that share an endpoint with `e`, excluding `e` itself.
    pub fn adjacent_edges(&self, e: usize) -> Vec<usize> {
        let (u, v) = self.edges[e];
        let mut out: Vec<usize> = self.incidence[u]
            .iter()
            .chain(self.incidence[v].iter())
            .copied()
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Component label per vertex, labels numbered by first vertex.
    pub fn components(&self) -> Vec<usize> {
        component_labels(self.n, &self.edges, |_| false).0
    }

    pub fn component_count(&self) -> usize {
        component_labels(self.n, &self.edges, |_| false).1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle; parallel edges give girth 2.
    pub fn girth(&self) -> usize {
        if !self.is_simple() {
            return 2;
        }
        let mut best = usize::MAX;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut via = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    if e == via[v] {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }

    /// True when both graphs have the same vertex count and the same
    /// multiset of edges on the same vertex labels (edge ids may differ).
    pub fn same_labeled(&self, other: &CubicGraph) -> bool {
        self.n == other.n && self.sorted_edges() == other.sorted_edges()
    }

    pub(crate) fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es
    }
}

/// Connected components of the graph on `n` vertices with the given edges,
/// ignoring every edge id for which `removed` returns true.
pub(crate) fn component_labels(
    n: usize,
    edges: &[(usize, usize)],
    removed: impl Fn(usize) -> bool,
) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (id, &(u, v)) in edges.iter().enumerate() {
        if removed(id) {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut roots = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if roots[r] == usize::MAX {
            roots[r] = count;
            count += 1;
        }
        label[v] = roots[r];
    }
    (label, count)
}
