use serde::Serialize;

use super::{component_labels, CubicGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub bridgeless: bool,
    /// Edge connectivity, reported as 4 when no cut of size <= 3 exists.
    pub edge_connectivity_capped_at_4: usize,
    pub cyclically_4_edge_connected: bool,
}

/// Decides every field by enumerating all edge subsets of size <= 3.
///
/// A bridge is an edge whose removal increases the number of components,
/// so a disjoint union of bridgeless graphs is bridgeless. Cubic graphs
/// never exceed edge connectivity 3.
pub fn connectivity_report(g: &CubicGraph) -> ConnectivityReport {
    let m = g.size();
    let base = g.component_count();
    let mut removed = vec![false; m];

    let splits = |removed: &[bool]| -> (bool, bool) {
        let (label, count) = component_labels(g.order(), g.edges(), |e| removed[e]);
        let mut vertices = vec![0usize; count];
        let mut edges = vec![0usize; count];
        for &c in &label {
            vertices[c] += 1;
        }
        for (id, &(u, _)) in g.edges().iter().enumerate() {
            if !removed[id] {
                edges[label[u]] += 1;
            }
        }
        let cyclic = (0..count).filter(|&c| edges[c] >= vertices[c]).count();
        (count > base, cyclic >= 2)
    };

    let (_, cyclic_split) = splits(&removed);
    let mut cyc4 = !cyclic_split;
    let mut connectivity = if base > 1 { 0 } else { 4 };
    let mut bridgeless = true;

    for a in 0..m {
        removed[a] = true;
        let (disconnects, cyc) = splits(&removed);
        if disconnects {
            bridgeless = false;
            connectivity = connectivity.min(1);
        }
        cyc4 &= !cyc;
        for b in a + 1..m {
            removed[b] = true;
            let (disconnects, cyc) = splits(&removed);
            if disconnects {
                connectivity = connectivity.min(2);
            }
            cyc4 &= !cyc;
            for c in b + 1..m {
                removed[c] = true;
                let (disconnects, cyc) = splits(&removed);
                if disconnects {
                    connectivity = connectivity.min(3);
                }
                cyc4 &= !cyc;
                removed[c] = false;
            }
            removed[b] = false;
        }
        removed[a] = false;
    }

    ConnectivityReport {
        bridgeless,
        edge_connectivity_capped_at_4: connectivity,
        cyclically_4_edge_connected: cyc4,
    }
}
