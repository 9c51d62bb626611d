use crate::coloring::{abnormal_set, bit, is_proper, EdgeColoring, Palette};
use crate::graph::{CubicGraph, MarkedGraph};

use super::{independent, ConstructionError};

/// A coloring of the original graph rebuilt from a clean piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub coloring: EdgeColoring,
    pub abnormal: Vec<usize>,
    /// Edges the argument allows to be abnormal; `abnormal` is a subset.
    pub affected: Vec<usize>,
}

/// Colors of `m` moved onto the edge ids of `g`; 0 marks a deleted edge.
fn lift(g: &CubicGraph, m: &MarkedGraph, c: &EdgeColoring) -> Result<Vec<u8>, ConstructionError> {
    if c.len() != m.size() {
        return Err(ConstructionError::BadColoring(format!(
            "{} colors for a piece with {} edges",
            c.len(),
            m.size()
        )));
    }
    if c.colors().iter().any(|&x| x > 5) {
        return Err(ConstructionError::BadColoring("colors must lie in 1..=5".into()));
    }
    let mut colors = vec![0; g.size()];
    for (j, &orig) in m.edge_origin().iter().enumerate() {
        colors[orig] = c.color(j);
    }
    for v in 0..g.order() {
        if seen_at(g, &colors, v).count_ones() as usize != g.incident(v).iter().filter(|&&e| colors[e] != 0).count() {
            return Err(ConstructionError::BadColoring(format!(
                "piece coloring is improper at vertex {v}"
            )));
        }
    }
    Ok(colors)
}

fn seen_at(g: &CubicGraph, colors: &[u8], v: usize) -> Palette {
    g.incident(v)
        .iter()
        .filter(|&&e| colors[e] != 0)
        .fold(0, |p, &e| p | bit(colors[e]))
}

fn smallest_free(forbidden: Palette) -> u8 {
    (1..=5)
        .find(|&c| forbidden & bit(c) == 0)
        .expect("at most four colors forbidden")
}

fn finish(g: &CubicGraph, colors: Vec<u8>, mut affected: Vec<usize>) -> Result<Extension, ConstructionError> {
    let coloring = EdgeColoring::new(5, colors)?;
    debug_assert!(is_proper(g, &coloring, 5));
    affected.sort_unstable();
    affected.dedup();
    let abnormal = abnormal_set(g, &coloring)?;
    if let Some(&edge) = abnormal.iter().find(|e| affected.binary_search(e).is_err()) {
        return Err(ConstructionError::Escaped { edge });
    }
    Ok(Extension {
        coloring,
        abnormal,
        affected,
    })
}

fn with_neighbors(g: &CubicGraph, edges: &[usize]) -> Vec<usize> {
    let mut out = edges.to_vec();
    for &e in edges {
        out.extend(g.adjacent_edges(e));
    }
    out
}

/// Colors the deleted edge `e` of `m = g − e` with the smallest color
/// missing at both ends.
///
/// `c` must have no abnormal edge inside the composite it was cut from;
/// otherwise the result may have an abnormal edge away from `e`, which is
/// reported as [`ConstructionError::Escaped`].
pub fn extend_one_edge(
    g: &CubicGraph,
    m: &MarkedGraph,
    c: &EdgeColoring,
    e: usize,
) -> Result<Extension, ConstructionError> {
    if m.stubs().len() != 2 || m.stubs().iter().any(|s| s.edge != e) || m.order() != g.order() {
        return Err(ConstructionError::Precondition(format!(
            "piece is not the graph minus edge {e}"
        )));
    }
    let mut colors = lift(g, m, c)?;
    let (x, y) = g.endpoints(e);
    colors[e] = smallest_free(seen_at(g, &colors, x) | seen_at(g, &colors, y));
    finish(g, colors, with_neighbors(g, &[e]))
}

/// Rebuilds the star of `v` from `m = g − v`. `external` is the color the
/// composite had on the edge leaving the first stub; `vv₁` copies it. `vv₂`
/// and `vv₃` take the smallest color not yet used at `v` or at their other
/// end.
pub fn extend_vertex_star(
    g: &CubicGraph,
    m: &MarkedGraph,
    c: &EdgeColoring,
    v: usize,
    external: u8,
) -> Result<Extension, ConstructionError> {
    if m.stubs().len() != 3 || m.order() + 1 != g.order() || m.stubs().iter().any(|s| !g.incident(v).contains(&s.edge))
    {
        return Err(ConstructionError::Precondition(format!(
            "piece is not the graph minus vertex {v}"
        )));
    }
    let mut colors = lift(g, m, c)?;
    let star: Vec<usize> = m.stubs().iter().map(|s| s.edge).collect();
    let first_end = g.other_end(star[0], v);
    if external == 0 || external > 5 || seen_at(g, &colors, first_end) & bit(external) != 0 {
        return Err(ConstructionError::BadColoring(format!(
            "external color {external} clashes at vertex {first_end}"
        )));
    }
    colors[star[0]] = external;
    for &e in &star[1..] {
        let w = g.other_end(e, v);
        colors[e] = smallest_free(seen_at(g, &colors, v) | seen_at(g, &colors, w));
    }
    // v₁ keeps its palette, so only the edges around vv₂ and vv₃ may change
    let mut affected = star.clone();
    affected.extend(with_neighbors(g, &star[1..]));
    finish(g, colors, affected)
}

/// Colors the deleted `e1` and `e2` of `m = g − e1 − e2`, each with the
/// smallest color missing at both of its ends. The two edges must be the
/// end-edges of a path of length three.
pub fn extend_two_edges(
    g: &CubicGraph,
    m: &MarkedGraph,
    c: &EdgeColoring,
    e1: usize,
    e2: usize,
) -> Result<Extension, ConstructionError> {
    if e1 >= g.size() || e2 >= g.size() || !three_path(g, e1, e2) {
        return Err(ConstructionError::NotThreePath(e1, e2));
    }
    if m.stubs().len() != 4 || m.stubs().iter().any(|s| s.edge != e1 && s.edge != e2) {
        return Err(ConstructionError::Precondition(format!(
            "piece is not the graph minus edges {e1} and {e2}"
        )));
    }
    let mut colors = lift(g, m, c)?;
    for e in [e1, e2] {
        let (x, y) = g.endpoints(e);
        colors[e] = smallest_free(seen_at(g, &colors, x) | seen_at(g, &colors, y));
    }
    finish(g, colors, with_neighbors(g, &[e1, e2]))
}

/// Whether `e1` and `e2` are independent and joined by a middle edge.
pub(crate) fn three_path(g: &CubicGraph, e1: usize, e2: usize) -> bool {
    independent(g, e1, e2) && g.adjacent_edges(e1).iter().any(|f| g.adjacent_edges(e2).contains(f))
}
