//! Composite cubic graphs built from copies of a smaller one, plus the
//! coloring extensions that carry a clean copy back to the original graph.

mod demo;
mod extend;
mod gadget;

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{remove_and_mark, Deletion, GraphError, MarkedGraph};

pub use crate::graph::CubicGraph;
pub use demo::{pigeonhole_demo, replacement_host, three_path_ends, DemoReport, Variant};
pub use extend::{extend_one_edge, extend_two_edges, extend_vertex_star, Extension};
pub use gadget::{k4_gadget_extend, k_abnormal_example, q3_base_coloring, GADGET_COLORS, Q3_BASE_COLORS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("copy count must be at least {min}, got {t}")]
    TooFewCopies { t: usize, min: usize },
    #[error("edges {0} and {1} are not independent")]
    NotIndependent(usize, usize),
    #[error("edges {0} and {1} are not the end-edges of a path of length three")]
    NotThreePath(usize, usize),
    #[error("edge {0} is not abnormal")]
    NotAbnormal(usize),
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("coloring does not fit: {0}")]
    BadColoring(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("edge {edge} became abnormal outside the edges the extension may touch")]
    Escaped { edge: usize },
    #[error("solver could not supply a coloring: {0}")]
    Solver(String),
}

/// A graph assembled from copies of one marked graph and some joining edges.
///
/// Copy `i` owns vertices `i*n..(i+1)*n` and edges `i*m..(i+1)*m`, where
/// `n` and `m` are the order and size of the marked graph; joining edges
/// come last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composite {
    pub graph: CubicGraph,
    pub copies: usize,
    pub piece: MarkedGraph,
    /// `stub_edges[i][s]`: the joining edge attached at stub `s` of copy `i`.
    pub stub_edges: Vec<Vec<usize>>,
}

impl Composite {
    pub fn copy_vertex(&self, copy: usize, v: usize) -> usize {
        copy * self.piece.order() + v
    }

    pub fn copy_edges(&self, copy: usize) -> std::ops::Range<usize> {
        let m = self.piece.size();
        copy * m..(copy + 1) * m
    }

    /// Colors of copy `copy`, indexed like the marked graph's edges.
    pub fn restrict(&self, c: &EdgeColoring, copy: usize) -> EdgeColoring {
        let colors = c.colors()[self.copy_edges(copy)].to_vec();
        EdgeColoring::new(c.k(), colors).expect("colors already in range")
    }

    /// The first copy none of whose edges lie in `abnormal`.
    pub fn clean_copy(&self, abnormal: &[usize]) -> Option<usize> {
        let m = self.piece.size();
        let mut dirty = vec![false; self.copies];
        for &e in abnormal {
            if e < self.copies * m {
                dirty[e / m] = true;
            }
        }
        dirty.iter().position(|d| !d)
    }
}

type Port = (usize, usize);

fn assemble(piece: MarkedGraph, copies: usize, joins: &[(Port, Port)]) -> Result<Composite, ConstructionError> {
    let (n, m) = (piece.order(), piece.size());
    let mut edges = Vec::with_capacity(copies * m + joins.len());
    for i in 0..copies {
        edges.extend(piece.edges().iter().map(|&(u, v)| (i * n + u, i * n + v)));
    }
    let mut stub_edges = vec![vec![usize::MAX; piece.stubs().len()]; copies];
    for (j, &((ci, si), (cj, sj))) in joins.iter().enumerate() {
        let (a, b) = (piece.stubs()[si], piece.stubs()[sj]);
        edges.push((ci * n + a.vertex, cj * n + b.vertex));
        stub_edges[ci][si] = copies * m + j;
        stub_edges[cj][sj] = copies * m + j;
    }
    let graph = CubicGraph::from_edges(copies * n, edges)?;
    Ok(Composite {
        graph,
        copies,
        piece,
        stub_edges,
    })
}

fn stub_index(piece: &MarkedGraph, edge: usize) -> (usize, usize) {
    let mut at = piece
        .stubs()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.edge == edge)
        .map(|(i, _)| i);
    (
        at.next().expect("two stubs per deleted edge"),
        at.next().expect("two stubs per deleted edge"),
    )
}

pub(crate) fn independent(g: &CubicGraph, e1: usize, e2: usize) -> bool {
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    e1 != e2 && ![c, d].contains(&a) && ![c, d].contains(&b)
}

pub fn disjoint_composite(g: &CubicGraph, t: usize) -> Result<Composite, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::TooFewCopies { t, min: 1 });
    }
    assemble(remove_and_mark(g, &Deletion::Edges(Vec::new()))?, t, &[])
}

/// `t` disjoint labeled copies of `g`.
pub fn disjoint_copies(g: &CubicGraph, t: usize) -> Result<CubicGraph, ConstructionError> {
    Ok(disjoint_composite(g, t)?.graph)
}

pub fn cyclic1_composite(g: &CubicGraph, e: usize, t: usize) -> Result<Composite, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::TooFewCopies { t, min: 1 });
    }
    let piece = remove_and_mark(g, &Deletion::Edges(vec![e]))?;
    let (x, y) = stub_index(&piece, e);
    let joins: Vec<(Port, Port)> = (0..t).map(|i| ((i, y), ((i + 1) % t, x))).collect();
    assemble(piece, t, &joins)
}

/// Copies of `g − e` in a ring: the y-stub of copy i meets the x-stub of
/// copy i+1 (mod t), where x is the smaller endpoint of `e`.
pub fn cyclic_join_one_edge(g: &CubicGraph, e: usize, t: usize) -> Result<CubicGraph, ConstructionError> {
    Ok(cyclic1_composite(g, e, t)?.graph)
}

pub fn cyclic2_composite(g: &CubicGraph, e1: usize, e2: usize, t: usize) -> Result<Composite, ConstructionError> {
    if t < 2 {
        return Err(ConstructionError::TooFewCopies { t, min: 2 });
    }
    if e1 >= g.size() || e2 >= g.size() {
        return Err(GraphError::UnknownEdge(e1.max(e2)).into());
    }
    if !independent(g, e1, e2) {
        return Err(ConstructionError::NotIndependent(e1, e2));
    }
    let piece = remove_and_mark(g, &Deletion::Edges(vec![e1, e2]))?;
    let (a, b) = stub_index(&piece, e1);
    let (c, d) = stub_index(&piece, e2);
    let mut joins = Vec::with_capacity(2 * t);
    for i in 0..t {
        let next = (i + 1) % t;
        joins.push(((i, d), (next, a)));
        joins.push(((i, c), (next, b)));
    }
    assemble(piece, t, &joins)
}

/// Copies of `g − e1 − e2` with `d_i a_{i+1}` and `c_i b_{i+1}` added, where
/// `e1 = ab` and `e2 = cd` with endpoints in increasing order.
pub fn cyclic_join_two_edges(g: &CubicGraph, e1: usize, e2: usize, t: usize) -> Result<CubicGraph, ConstructionError> {
    Ok(cyclic2_composite(g, e1, e2, t)?.graph)
}

pub fn replacement_composite(host: &CubicGraph, g: &CubicGraph, v: usize) -> Result<Composite, ConstructionError> {
    let piece = remove_and_mark(g, &Deletion::Vertex(v))?;
    let ports: Vec<[usize; 3]> = (0..host.order())
        .map(|u| {
            let mut inc = *host.incident(u);
            inc.sort_unstable();
            inc
        })
        .collect();
    let port = |x: usize, f: usize| ports[x].iter().position(|&g| g == f).expect("incident edge");
    let joins: Vec<(Port, Port)> = host
        .edges()
        .iter()
        .enumerate()
        .map(|(f, &(u, w))| ((u, port(u, f)), (w, port(w, f))))
        .collect();
    assemble(piece, host.order(), &joins)
}

/// Every vertex of `host` becomes a copy of `g − v`; host edges attach to
/// the copies' stubs by port, ports being the host's incident edges sorted
/// by id.
pub fn vertex_replacement(host: &CubicGraph, g: &CubicGraph, v: usize) -> Result<CubicGraph, ConstructionError> {
    Ok(replacement_composite(host, g, v)?.graph)
}

/// Splices `g1` and `g2` along `e1 = x1y1` and `e2 = x2y2`: both edges are
/// removed and `x1x2`, `y1y2` added, with x the smaller endpoint.
///
/// Edge order: `g1 − e1`, then `g2 − e2` shifted by `|V(g1)|`, then the two
/// new edges.
pub fn two_cut_connection(
    g1: &CubicGraph,
    e1: usize,
    g2: &CubicGraph,
    e2: usize,
) -> Result<CubicGraph, ConstructionError> {
    let m1 = remove_and_mark(g1, &Deletion::Edges(vec![e1]))?;
    let m2 = remove_and_mark(g2, &Deletion::Edges(vec![e2]))?;
    let n1 = g1.order();
    let mut edges = m1.edges().to_vec();
    edges.extend(m2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    let (s1, s2) = (m1.stubs(), m2.stubs());
    edges.push((s1[0].vertex, s2[0].vertex + n1));
    edges.push((s1[1].vertex, s2[1].vertex + n1));
    Ok(CubicGraph::from_edges(n1 + g2.order(), edges)?)
}

/// A construction request, as named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionRecipe {
    Disjoint { t: usize },
    Cyclic1 { e: usize, t: usize },
    Cyclic2 { e1: usize, e2: usize, t: usize },
    VertexReplacement { host: CubicGraph, v: usize },
    TwoCut { e1: usize, other: CubicGraph, e2: usize },
    K4Gadget { coloring: EdgeColoring, e: usize },
}

impl ConstructionRecipe {
    /// Applies the recipe to `g`; the gadget also returns its coloring.
    pub fn build(&self, g: &CubicGraph) -> Result<(CubicGraph, Option<EdgeColoring>), ConstructionError> {
        Ok(match self {
            ConstructionRecipe::Disjoint { t } => (disjoint_copies(g, *t)?, None),
            ConstructionRecipe::Cyclic1 { e, t } => (cyclic_join_one_edge(g, *e, *t)?, None),
            ConstructionRecipe::Cyclic2 { e1, e2, t } => (cyclic_join_two_edges(g, *e1, *e2, *t)?, None),
            ConstructionRecipe::VertexReplacement { host, v } => (vertex_replacement(host, g, *v)?, None),
            ConstructionRecipe::TwoCut { e1, other, e2 } => (two_cut_connection(g, *e1, other, *e2)?, None),
            ConstructionRecipe::K4Gadget { coloring, e } => {
                let (h, c) = k4_gadget_extend(g, coloring, *e)?;
                (h, Some(c))
            }
        })
    }
}
