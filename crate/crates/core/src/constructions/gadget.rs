use crate::coloring::{abnormal_set, bit, classify_edge, is_proper, palette_mask, EdgeClass, EdgeColoring};
use crate::graph::{catalog, CatalogName, CubicGraph};

use super::{two_cut_connection, ConstructionError};

/// Lexicographically smallest proper 5-edge-coloring of the catalog Q3
/// with exactly two abnormal edges (edges 1 and 3).
pub const Q3_BASE_COLORS: [u8; 12] = [1, 2, 3, 2, 3, 1, 4, 4, 4, 5, 5, 3];

/// Gadget colors in normalized form: the spliced edge had color 1, its
/// smaller end saw {1,2,3} and its larger end {1,2,4}. Order: connector at
/// the smaller end, connector at the larger end, then the K4 edges
/// (0,2) (0,3) (1,2) (1,3) (2,3) after K4's edge (0,1) is cut.
pub const GADGET_COLORS: [u8; 7] = [1, 1, 2, 5, 5, 2, 1];

pub fn q3_base_coloring() -> (CubicGraph, EdgeColoring) {
    let q3 = catalog(&CatalogName::Q3).expect("catalog entry");
    let c = EdgeColoring::new(5, Q3_BASE_COLORS.to_vec()).expect("colors in range");
    (q3, c)
}

/// Splices a K4 into the abnormal edge `e` of `g` and colors it from the
/// gadget table, giving exactly one more abnormal edge.
///
/// The new graph is `two_cut_connection(g, e, K4, 0)`. The table is applied
/// through the color permutation that puts `c` into normalized form at `e`.
pub fn k4_gadget_extend(
    g: &CubicGraph,
    c: &EdgeColoring,
    e: usize,
) -> Result<(CubicGraph, EdgeColoring), ConstructionError> {
    if c.len() != g.size() || c.colors().iter().any(|&x| x > 5) || !is_proper(g, c, 5) {
        return Err(ConstructionError::BadColoring(
            "need a proper 5-edge-coloring of the graph".into(),
        ));
    }
    if e >= g.size() {
        return Err(crate::graph::GraphError::UnknownEdge(e).into());
    }
    if classify_edge(g, c, e)? != EdgeClass::Abnormal {
        return Err(ConstructionError::NotAbnormal(e));
    }
    let (u, v) = g.endpoints(e);
    let (x, y) = (u.min(v), u.max(v));
    let ce = bit(c.color(e));
    let ox = palette_mask(g, c, x) & !ce;
    let oy = palette_mask(g, c, y) & !ce;
    let shared = ox & oy;
    if shared.count_ones() != 1 {
        return Err(ConstructionError::Precondition(format!(
            "palettes around edge {e} have no normal form"
        )));
    }
    let rest = 0b11111 & !(ce | ox | oy);
    // original color of each normalized color 1..=5
    let mut back = [0u8; 6];
    for (slot, mask) in [ce, shared, ox & !shared, oy & !shared, rest].into_iter().enumerate() {
        back[slot + 1] = mask.trailing_zeros() as u8 + 1;
    }

    let k4 = catalog(&CatalogName::K4).expect("catalog entry");
    let h = two_cut_connection(g, e, &k4, 0)?;
    let mut colors: Vec<u8> = (0..g.size()).filter(|&f| f != e).map(|f| c.color(f)).collect();
    colors.extend(GADGET_COLORS[2..].iter().map(|&z| back[z as usize]));
    colors.extend(GADGET_COLORS[..2].iter().map(|&z| back[z as usize]));
    let coloring = EdgeColoring::new(5, colors)?;
    debug_assert!(is_proper(&h, &coloring, 5));
    Ok((h, coloring))
}

/// A cubic graph on `8 + 4(k−2)` vertices with a proper 5-edge-coloring
/// having exactly `k` abnormal edges: Q3 with the base coloring, then
/// `k − 2` gadgets, each at the lowest-numbered abnormal edge.
pub fn k_abnormal_example(k: usize) -> Result<(CubicGraph, EdgeColoring), ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::KTooSmall(k));
    }
    let (mut g, mut c) = q3_base_coloring();
    for _ in 2..k {
        let e = abnormal_set(&g, &c)?[0];
        (g, c) = k4_gadget_extend(&g, &c, e)?;
    }
    Ok((g, c))
}
