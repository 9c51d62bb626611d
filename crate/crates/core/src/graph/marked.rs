use super::{CubicGraph, GraphError};

/// What to cut out of a cubic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Deletion {
    Edges(Vec<usize>),
    Vertex(usize),
}

/// One missing incidence of a [`MarkedGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stub {
    /// Vertex of the marked graph that lost the incidence.
    pub vertex: usize,
    /// Position the lost edge had in the original incidence list.
    pub slot: usize,
    /// Id of the lost edge in the original graph.
    pub edge: usize,
}

/// A cubic graph with some edges or one vertex deleted.
///
/// Every vertex satisfies `degree + stubs = 3`. Vertex ids are compacted
/// when a vertex is deleted; `vertex_origin` and `edge_origin` map back to
/// the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_origin: Vec<usize>,
    vertex_origin: Vec<usize>,
    stubs: Vec<Stub>,
}

impl MarkedGraph {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Stubs sorted by original edge id, then original endpoint id.
    pub fn stubs(&self) -> &[Stub] {
        &self.stubs
    }

    pub fn edge_origin(&self) -> &[usize] {
        &self.edge_origin
    }

    pub fn vertex_origin(&self) -> &[usize] {
        &self.vertex_origin
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn stub_count(&self, v: usize) -> usize {
        self.stubs.iter().filter(|s| s.vertex == v).count()
    }

    /// Stubs that came from deleting original edge `edge`, in stub order.
    pub fn stubs_of_edge(&self, edge: usize) -> Vec<Stub> {
        self.stubs.iter().filter(|s| s.edge == edge).copied().collect()
    }

    /// Joins stubs pairwise (indices into [`stubs`](Self::stubs)) and
    /// returns the resulting cubic graph. New edges come after the kept ones.
    pub fn close(&self, pairs: &[(usize, usize)]) -> Result<CubicGraph, GraphError> {
        let mut edges = self.edges.clone();
        for &(i, j) in pairs {
            let (a, b) = match (self.stubs.get(i), self.stubs.get(j)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(GraphError::InvalidParams(format!("no stub pair ({i}, {j})"))),
            };
            edges.push((a.vertex, b.vertex));
        }
        CubicGraph::from_edges(self.n, edges)
    }
}

/// Deletes edges or a vertex and records the open stubs.
pub fn remove_and_mark(g: &CubicGraph, deletion: &Deletion) -> Result<MarkedGraph, GraphError> {
    match deletion {
        Deletion::Edges(ids) => {
            let mut gone = vec![false; g.size()];
            for &e in ids {
                if e >= g.size() {
                    return Err(GraphError::UnknownEdge(e));
                }
                if gone[e] {
                    return Err(GraphError::DuplicateDeletion(e));
                }
                gone[e] = true;
            }
            let mut edges = Vec::new();
            let mut edge_origin = Vec::new();
            let mut stubs = Vec::new();
            for (id, &(u, v)) in g.edges().iter().enumerate() {
                if gone[id] {
                    let (lo, hi) = (u.min(v), u.max(v));
                    for w in [lo, hi] {
                        stubs.push(Stub {
                            vertex: w,
                            slot: slot_of(g, w, id),
                            edge: id,
                        });
                    }
                } else {
                    edges.push((u, v));
                    edge_origin.push(id);
                }
            }
            Ok(MarkedGraph {
                n: g.order(),
                edges,
                edge_origin,
                vertex_origin: (0..g.order()).collect(),
                stubs,
            })
        }
        &Deletion::Vertex(x) => {
            if x >= g.order() {
                return Err(GraphError::UnknownVertex(x));
            }
            let relabel = |w: usize| if w > x { w - 1 } else { w };
            let mut edges = Vec::new();
            let mut edge_origin = Vec::new();
            let mut stubs = Vec::new();
            for (id, &(u, v)) in g.edges().iter().enumerate() {
                if u == x || v == x {
                    let w = if u == x { v } else { u };
                    stubs.push(Stub {
                        vertex: relabel(w),
                        slot: slot_of(g, w, id),
                        edge: id,
                    });
                } else {
                    edges.push((relabel(u), relabel(v)));
                    edge_origin.push(id);
                }
            }
            Ok(MarkedGraph {
                n: g.order() - 1,
                edges,
                edge_origin,
                vertex_origin: (0..g.order()).filter(|&w| w != x).collect(),
                stubs,
            })
        }
    }
}

fn slot_of(g: &CubicGraph, v: usize, e: usize) -> usize {
    g.incident(v)
        .iter()
        .position(|&f| f == e)
        .expect("edge incident to vertex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, CatalogName};

    fn check_degrees(m: &MarkedGraph) {
        for v in 0..m.order() {
            assert_eq!(m.degree(v) + m.stub_count(v), 3, "vertex {v}");
        }
    }

    #[test]
    fn k4_minus_edge() {
        let k4 = catalog(&CatalogName::K4).unwrap();
        let m = remove_and_mark(&k4, &Deletion::Edges(vec![0])).unwrap();
        assert_eq!(m.stubs().len(), 2);
        assert_eq!(m.stubs()[0].vertex, 0);
        assert_eq!(m.stubs()[1].vertex, 1);
        check_degrees(&m);
    }

    #[test]
    fn petersen_minus_independent_edges() {
        let p = catalog(&CatalogName::Petersen).unwrap();
        let e1 = 0;
        let (a, b) = p.endpoints(e1);
        let e2 = (0..p.size())
            .find(|&f| {
                let (c, d) = p.endpoints(f);
                ![a, b].contains(&c) && ![a, b].contains(&d)
            })
            .unwrap();
        let (c, d) = p.endpoints(e2);
        assert!(![c, d].contains(&a) && ![c, d].contains(&b));
        let m = remove_and_mark(&p, &Deletion::Edges(vec![e2, e1])).unwrap();
        let mut vs: Vec<usize> = m.stubs().iter().map(|s| s.vertex).collect();
        assert_eq!(vs, vec![a.min(b), a.max(b), c.min(d), c.max(d)]);
        vs.sort_unstable();
        vs.dedup();
        assert_eq!(vs.len(), 4);
        check_degrees(&m);
    }

    #[test]
    fn petersen_minus_vertex() {
        let p = catalog(&CatalogName::Petersen).unwrap();
        let m = remove_and_mark(&p, &Deletion::Vertex(0)).unwrap();
        assert_eq!(m.order(), 9);
        assert_eq!(m.size(), 12);
        let stub_vs: Vec<usize> = m.stubs().iter().map(|s| m.vertex_origin()[s.vertex]).collect();
        let mut nbrs: Vec<usize> = p.neighbors(0).collect();
        nbrs.sort_unstable();
        assert_eq!(stub_vs, nbrs);
        check_degrees(&m);
    }

    #[test]
    fn unknown_ids_and_duplicates() {
        let k4 = catalog(&CatalogName::K4).unwrap();
        assert_eq!(
            remove_and_mark(&k4, &Deletion::Edges(vec![9])).unwrap_err(),
            GraphError::UnknownEdge(9)
        );
        assert_eq!(
            remove_and_mark(&k4, &Deletion::Edges(vec![1, 1])).unwrap_err(),
            GraphError::DuplicateDeletion(1)
        );
        assert_eq!(
            remove_and_mark(&k4, &Deletion::Vertex(4)).unwrap_err(),
            GraphError::UnknownVertex(4)
        );
    }

    #[test]
    fn closing_stubs_in_order_rebuilds_the_graph() {
        let q3 = catalog(&CatalogName::Q3).unwrap();
        let m = remove_and_mark(&q3, &Deletion::Edges(vec![2, 7, 11])).unwrap();
        let back = m.close(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(back.same_labeled(&q3));
    }
}
