use std::collections::HashSet;

use super::CubicGraph;

/// Canonical edge list: equal for two graphs iff they are isomorphic.
///
/// Individualisation-refinement without automorphism pruning, intended for
/// graphs of at most a few dozen vertices. The certificate is the smallest
/// relabelled sorted edge list over all leaves of the search tree.
pub fn canonical_form(g: &CubicGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, start, &mut best);
    best.unwrap_or_default()
}

/// Keeps the first member of every isomorphism class, in input order.
pub fn dedup_isomorphic<I: IntoIterator<Item = CubicGraph>>(graphs: I) -> Vec<CubicGraph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert((g.order(), canonical_form(g))))
        .collect()
}

fn search(g: &CubicGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<(usize, usize)>>) {
    let target = match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label = vec![0; g.order()];
            for (i, cell) in cells.iter().enumerate() {
                label[cell[0]] = i;
            }
            let mut cert: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (label[u], label[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            cert.sort_unstable();
            if best.as_ref().map_or(true, |b| cert < *b) {
                *best = Some(cert);
            }
            return;
        }
        Some(t) => t,
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Splits cells by the multiset of neighbour cells until the ordered
/// partition is equitable. Sub-cells are ordered by their signature, so the
/// result depends only on structure and the incoming cell order.
fn refine(g: &CubicGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut out = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<([usize; 3], usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = [0; 3];
                    for (slot, w) in g.neighbors(v).enumerate() {
                        sig[slot] = cell_of[w];
                    }
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if out.len() == cells.len() {
            return out;
        }
        cells = out;
    }
}
