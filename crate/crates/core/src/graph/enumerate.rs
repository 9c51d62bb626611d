use super::CubicGraph;

/// Pull-based stream of connected simple cubic graphs on `n` labelled
/// vertices.
///
/// Edges are added at the lowest vertex that still has a free incidence,
/// to neighbours in increasing order, and an untouched vertex may only be
/// entered through the smallest untouched label. Untouched vertices are
/// interchangeable, so every isomorphism class still appears (usually
/// several times); see [`dedup_isomorphic`](super::dedup_isomorphic).
pub struct CubicEnumerator {
    n: usize,
    degree: Vec<u8>,
    adjacent: Vec<u64>,
    edges: Vec<(usize, usize)>,
    stack: Vec<Frame>,
    expand: bool,
}

struct Frame {
    u: usize,
    next: usize,
    added: bool,
}

pub fn enumerate_cubic(n: usize) -> CubicEnumerator {
    let valid = n >= 4 && n % 2 == 0 && n <= 64;
    CubicEnumerator {
        n,
        degree: vec![0; n],
        adjacent: vec![0; n],
        edges: Vec::with_capacity(3 * n / 2),
        stack: Vec::new(),
        expand: valid,
    }
}

impl CubicEnumerator {
    fn touched(&self) -> usize {
        self.degree.iter().take_while(|&&d| d > 0).count()
    }

    fn connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adjacent[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == self.n
    }

    fn remove_last(&mut self) {
        let (u, w) = self.edges.pop().expect("edge to undo");
        self.degree[u] -= 1;
        self.degree[w] -= 1;
        self.adjacent[u] &= !(1 << w);
        self.adjacent[w] &= !(1 << u);
    }
}

impl Iterator for CubicEnumerator {
    type Item = CubicGraph;

    fn next(&mut self) -> Option<CubicGraph> {
        loop {
            if self.expand {
                self.expand = false;
                match (0..self.n).find(|&v| self.degree[v] < 3) {
                    None => {
                        if self.connected() {
                            let g = CubicGraph::from_edges(self.n, self.edges.clone())
                                .expect("enumerator keeps degrees at 3");
                            return Some(g);
                        }
                    }
                    Some(u) if self.degree[u] == 0 && u > 0 => {
                        // everything below u is saturated: a closed component
                    }
                    Some(u) => {
                        let next = match self.stack.last() {
                            Some(top) if top.u == u => top.next,
                            _ => u + 1,
                        };
                        self.stack.push(Frame { u, next, added: false });
                    }
                }
            }

            let top = self.stack.last_mut()?;
            let u = top.u;
            let start = top.next;
            if std::mem::replace(&mut top.added, false) {
                self.remove_last();
            }
            // vertices below `fresh` are touched; `fresh` itself is the one untouched candidate
            let fresh = self.touched().max(u + 1);
            let pick = (start..self.n.min(fresh + 1)).find(|&w| self.degree[w] < 3 && self.adjacent[u] >> w & 1 == 0);
            match pick {
                Some(w) => {
                    let top = self.stack.last_mut().expect("frame");
                    top.next = w + 1;
                    top.added = true;
                    self.edges.push((u, w));
                    self.degree[u] += 1;
                    self.degree[w] += 1;
                    self.adjacent[u] |= 1 << w;
                    self.adjacent[w] |= 1 << u;
                    self.expand = true;
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dedup_isomorphic;

    #[test]
    fn k4_is_the_only_quartic_order_graph() {
        let all: Vec<_> = enumerate_cubic(4).collect();
        assert!(!all.is_empty());
        assert!(all.iter().all(|g| g.is_simple() && g.is_connected()));
        assert_eq!(dedup_isomorphic(all).len(), 1);
    }

    #[test]
    fn class_counts_up_to_eight() {
        // connected cubic graphs: 1, 2, 5 classes on 4, 6, 8 vertices
        for (n, classes) in [(4, 1), (6, 2), (8, 5)] {
            let all: Vec<_> = enumerate_cubic(n).collect();
            assert!(all.iter().all(|g| g.order() == n && g.is_simple() && g.is_connected()));
            assert_eq!(dedup_isomorphic(all).len(), classes, "n = {n}");
        }
    }

    #[test]
    fn invalid_orders_are_empty() {
        assert_eq!(enumerate_cubic(5).count(), 0);
        assert_eq!(enumerate_cubic(2).count(), 0);
    }

    #[test]
    fn no_labelled_graph_repeats() {
        let all: Vec<_> = enumerate_cubic(8).map(|g| g.sorted_edges()).collect();
        let mut uniq = all.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), all.len());
    }
}
