//! Petersen-colorings and their correspondence with normal 5-edge-colorings.
//!
//! The model is the Kneser graph K(5,2): vertices are the 2-subsets of
//! {1..5}, adjacent when disjoint, and edge {a,b}-{c,d} gets the fifth
//! color. The palette of vertex {a,b} is its complement, so every 3-subset
//! of colors is the palette of exactly one vertex and every edge is rich.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{bit, classify_all, is_proper, palette_mask, ColoringError, EdgeClass, EdgeColoring, Palette};
use crate::graph::{catalog, petersen_label, CatalogName, CubicGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("coloring uses {0} colors, a Petersen-coloring needs 5")]
    NotFiveColors(u8),
    #[error("edge {0} is abnormal")]
    AbnormalEdge(usize),
    #[error("map is undefined on edge {0}")]
    Partial(usize),
    #[error("map covers {got} edges, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("image edge {0} does not exist in the target graph")]
    UnknownImage(usize),
    #[error("the star of vertex {0} is not mapped onto a star")]
    NotHColoring(usize),
    #[error("pullback is not a normal coloring: {0}")]
    VerificationFailed(String),
    #[error("map file line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// The Petersen graph with the coloring c̃ and the palette lookup.
#[derive(Debug, Clone)]
pub struct PetersenModel {
    graph: CubicGraph,
    ctilde: EdgeColoring,
    by_palette: [Option<usize>; 32],
    palettes: [Palette; 10],
}

pub fn canonical_petersen() -> PetersenModel {
    PetersenModel::canonical()
}

impl PetersenModel {
    pub fn canonical() -> Self {
        let graph = catalog(&CatalogName::Petersen).expect("catalog entry");
        let colors = graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let used = [petersen_label(u), petersen_label(v)].concat();
                (1..=5)
                    .find(|c| !used.contains(c))
                    .expect("four labels leave one color")
            })
            .collect();
        let ctilde = EdgeColoring::new(5, colors).expect("colors in 1..=5");
        let mut palettes = [0; 10];
        let mut by_palette = [None; 32];
        for (v, p) in palettes.iter_mut().enumerate() {
            *p = palette_mask(&graph, &ctilde, v);
            by_palette[*p as usize] = Some(v);
        }
        let model = PetersenModel {
            graph,
            ctilde,
            by_palette,
            palettes,
        };
        if let Err(problem) = model.check_invariants() {
            panic!("canonical Petersen model broken: {problem}");
        }
        model
    }

    pub fn graph(&self) -> &CubicGraph {
        &self.graph
    }

    pub fn ctilde(&self) -> &EdgeColoring {
        &self.ctilde
    }

    pub fn palette(&self, v: usize) -> Palette {
        self.palettes[v]
    }

    /// The unique vertex whose palette is `p` (a 3-subset of {1..5}).
    pub fn vertex_with_palette(&self, p: Palette) -> Option<usize> {
        self.by_palette.get(p as usize).copied().flatten()
    }

    /// The unique edge at `v` colored `color` under c̃.
    pub fn edge_at(&self, v: usize, color: u8) -> Option<usize> {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .find(|&e| self.ctilde.color(e) == color)
    }

    pub fn edge_between(&self, x: usize, y: usize) -> Option<usize> {
        self.graph
            .incident(x)
            .iter()
            .copied()
            .find(|&e| self.graph.other_end(e, x) == y)
    }

    fn check_invariants(&self) -> Result<(), String> {
        if !is_proper(&self.graph, &self.ctilde, 5) {
            return Err("c~ is not proper".into());
        }
        let classes = classify_all(&self.graph, &self.ctilde).map_err(|e| e.to_string())?;
        if let Some(e) = classes.iter().position(|&c| c != EdgeClass::Rich) {
            return Err(format!("edge {e} is not rich"));
        }
        let mut seen = self.palettes.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != 10 || seen.iter().any(|p| p.count_ones() != 3) {
            return Err("palettes are not the ten 3-subsets".into());
        }
        for v in 0..10 {
            let label = petersen_label(v);
            if self.palettes[v] & (bit(label[0]) | bit(label[1])) != 0 {
                return Err(format!("palette of vertex {v} is not its complement"));
            }
            for color in 1..=5 {
                let hits = self
                    .graph
                    .incident(v)
                    .iter()
                    .filter(|&&e| self.ctilde.color(e) == color)
                    .count();
                let expect = usize::from(self.palettes[v] & bit(color) != 0);
                if hits != expect {
                    return Err(format!("vertex {v} has {hits} edges of color {color}"));
                }
            }
        }
        Ok(())
    }
}

/// A map from edges of G to edges of a target graph, possibly partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PColoring {
    images: Vec<Option<usize>>,
}

impl PColoring {
    pub fn new(images: Vec<Option<usize>>) -> Self {
        PColoring { images }
    }

    pub fn total(images: Vec<usize>) -> Self {
        PColoring {
            images: images.into_iter().map(Some).collect(),
        }
    }

    pub fn identity(m: usize) -> Self {
        PColoring::total((0..m).collect())
    }

    pub fn image(&self, e: usize) -> Option<usize> {
        self.images.get(e).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    /// Edges of G on which the map is defined.
    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter_map(|(e, i)| i.map(|_| e))
    }

    /// Map file: one `g_edge_id p_edge_id` line per defined edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, image) in self.images.iter().enumerate() {
            if let Some(p) = image {
                let _ = writeln!(out, "{e} {p}");
            }
        }
        out
    }

    pub fn from_text(text: &str, m: usize) -> Result<Self, HomError> {
        let mut images = vec![None; m];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| HomError::Parse { line: i + 1, message };
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err(format!("bad integer `{t}`"))))
                .collect::<Result<_, _>>()?;
            let [g_edge, p_edge] = nums[..] else {
                return Err(err("expected `g_edge_id p_edge_id`".into()));
            };
            let slot = images
                .get_mut(g_edge)
                .ok_or_else(|| err(format!("edge {g_edge} out of range")))?;
            if slot.replace(p_edge).is_some() {
                return Err(err(format!("edge {g_edge} mapped twice")));
            }
        }
        Ok(PColoring { images })
    }
}

/// φ_c: poor edges go to the c-colored edge at the vertex with their common
/// palette; rich edges go to the edge joining the vertices with the two
/// endpoint palettes. Abnormal edges are left undefined when
/// `allow_abnormal` holds and rejected otherwise.
pub fn build_p_coloring(
    model: &PetersenModel,
    g: &CubicGraph,
    c: &EdgeColoring,
    allow_abnormal: bool,
) -> Result<PColoring, HomError> {
    if c.k() > 5 {
        return Err(HomError::NotFiveColors(c.k()));
    }
    let classes = classify_all(g, c)?;
    let palettes: Vec<Palette> = (0..g.order()).map(|v| palette_mask(g, c, v)).collect();
    let mut images = Vec::with_capacity(g.size());
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        let image = match classes[e] {
            EdgeClass::Poor => {
                let w = model.vertex_with_palette(palettes[x]).expect("3-subset of 1..=5");
                model.edge_at(w, c.color(e))
            }
            EdgeClass::Rich => {
                let wx = model.vertex_with_palette(palettes[x]).expect("3-subset of 1..=5");
                let wy = model.vertex_with_palette(palettes[y]).expect("3-subset of 1..=5");
                model.edge_between(wx, wy)
            }
            EdgeClass::Abnormal if allow_abnormal => None,
            EdgeClass::Abnormal => return Err(HomError::AbnormalEdge(e)),
        };
        images.push(image);
    }
    Ok(PColoring { images })
}

/// The first vertex of G whose star is not sent onto a star of H.
pub fn h_coloring_violation(g: &CubicGraph, h: &CubicGraph, phi: &PColoring) -> Result<Option<usize>, HomError> {
    if phi.images.len() != g.size() {
        return Err(HomError::LengthMismatch {
            expected: g.size(),
            got: phi.images.len(),
        });
    }
    let mut images = Vec::with_capacity(g.size());
    for (e, image) in phi.images.iter().enumerate() {
        let p = image.ok_or(HomError::Partial(e))?;
        if p >= h.size() {
            return Err(HomError::UnknownImage(p));
        }
        images.push(p);
    }
    for v in 0..g.order() {
        let mut star: Vec<usize> = g.incident(v).iter().map(|&e| images[e]).collect();
        star.sort_unstable();
        star.dedup();
        let onto_star = star.len() == 3 && {
            let (a, b) = h.endpoints(star[0]);
            [a, b].iter().any(|&w| {
                let mut target = h.incident(w).to_vec();
                target.sort_unstable();
                target == star
            })
        };
        if !onto_star {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Whether `phi` is an H-coloring: every star of G maps onto a star of H.
pub fn verify_h_coloring(g: &CubicGraph, h: &CubicGraph, phi: &PColoring) -> Result<bool, HomError> {
    Ok(h_coloring_violation(g, h, phi)?.is_none())
}

/// c̃ ∘ φ, checked to be a normal 5-edge-coloring.
pub fn pullback(model: &PetersenModel, g: &CubicGraph, phi: &PColoring) -> Result<EdgeColoring, HomError> {
    if let Some(v) = h_coloring_violation(g, model.graph(), phi)? {
        return Err(HomError::NotHColoring(v));
    }
    let colors = phi
        .images
        .iter()
        .map(|p| model.ctilde().color(p.expect("total")))
        .collect();
    let c = EdgeColoring::new(5, colors)?;
    if !is_proper(g, &c, 5) {
        return Err(HomError::VerificationFailed("pullback is not proper".into()));
    }
    if let Some(e) = classify_all(g, &c)?.iter().position(|&x| x == EdgeClass::Abnormal) {
        return Err(HomError::VerificationFailed(format!("edge {e} is abnormal")));
    }
    Ok(c)
}

/// Degree of every vertex of G in the subgraph formed by the edges that φ_c
/// sends into `target` (a set of edge ids of the model). Abnormal edges
/// have no image and never count.
pub fn preimage_degrees(
    model: &PetersenModel,
    g: &CubicGraph,
    c: &EdgeColoring,
    target: &[usize],
) -> Result<Vec<usize>, HomError> {
    let phi = build_p_coloring(model, g, c, true)?;
    let mut inside = vec![false; model.graph().size()];
    for &p in target {
        *inside.get_mut(p).ok_or(HomError::UnknownImage(p))? = true;
    }
    let mut degree = vec![0; g.order()];
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        if phi.image(e).is_some_and(|p| inside[p]) {
            degree[x] += 1;
            degree[y] += 1;
        }
    }
    Ok(degree)
}

/// Every cycle of a simple graph as a sorted list of edge ids.
pub fn cycles(g: &CubicGraph) -> Vec<Vec<usize>> {
    fn extend(
        g: &CubicGraph,
        start: usize,
        path: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().expect("non-empty path");
        for &e in g.incident(v) {
            let w = g.other_end(e, v);
            if w == start && path.len() >= 3 && path[1] < v {
                let mut cycle = edges.clone();
                cycle.push(e);
                cycle.sort_unstable();
                out.push(cycle);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                edges.push(e);
                extend(g, start, path, edges, on_path, out);
                edges.pop();
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.order()];
    for s in 0..g.order() {
        on_path[s] = true;
        extend(g, s, &mut vec![s], &mut Vec::new(), &mut on_path, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}
