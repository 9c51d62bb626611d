//! Edge colorings and the poor / rich / abnormal classification.
//!
//! Colors are `1..=k`. A palette is the set of colors at a vertex, stored
//! as a bitmask with bit `c - 1` for color `c`, so union sizes are popcounts.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::CubicGraph;

pub type Palette = u32;

pub const MAX_COLORS: u8 = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} edges, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {edge} has color {color} outside 1..={k}")]
    ColorOutOfRange { edge: usize, color: u8, k: u8 },
    #[error("color count {0} outside 1..=32")]
    BadColorCount(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("coloring is not proper at vertex {0}")]
    Improper(usize),
    #[error("coloring file line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A total map from edge ids to colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeColoring {
    k: u8,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(k: u8, colors: Vec<u8>) -> Result<Self, ColoringError> {
        if k == 0 || k > MAX_COLORS {
            return Err(ColoringError::BadColorCount(k as usize));
        }
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { edge, color, k });
        }
        Ok(EdgeColoring { k, colors })
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> u8 {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Renames colors by `perm`, where `perm[c - 1]` is the new name of `c`.
    pub fn permuted(&self, perm: &[u8]) -> EdgeColoring {
        EdgeColoring {
            k: self.k,
            colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
        }
    }

    fn check_graph(&self, g: &CubicGraph) -> Result<(), ColoringError> {
        if self.colors.len() == g.size() {
            Ok(())
        } else {
            Err(ColoringError::LengthMismatch {
                expected: g.size(),
                got: self.colors.len(),
            })
        }
    }

    /// Coloring file: header `k`, then one `edge_id color` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.k);
        for (e, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "{e} {c}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ColoringError> {
        let err = |line: usize, message: String| ColoringError::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
        let k: u8 = header
            .parse()
            .map_err(|_| err(hl, format!("bad color count `{header}`")))?;
        let mut entries: Vec<Option<u8>> = Vec::new();
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(err(lineno, "expected `edge_id color`".into()));
            };
            let e: usize = a.parse().map_err(|_| err(lineno, format!("bad edge id `{a}`")))?;
            let c: u8 = b.parse().map_err(|_| err(lineno, format!("bad color `{b}`")))?;
            if e >= entries.len() {
                entries.resize(e + 1, None);
            }
            if entries[e].replace(c).is_some() {
                return Err(err(lineno, format!("edge {e} colored twice")));
            }
        }
        let colors = entries
            .into_iter()
            .enumerate()
            .map(|(e, c)| c.ok_or_else(|| err(0, format!("edge {e} has no color"))))
            .collect::<Result<Vec<_>, _>>()?;
        EdgeColoring::new(k, colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeClass {
    Poor,
    Rich,
    Abnormal,
}

impl EdgeClass {
    /// Class from the size of the union of the two endpoint palettes of a
    /// proper coloring (always 3, 4 or 5).
    pub fn from_union_size(size: u32) -> EdgeClass {
        match size {
            3 => EdgeClass::Poor,
            5 => EdgeClass::Rich,
            _ => EdgeClass::Abnormal,
        }
    }
}

impl std::fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeClass::Poor => "poor",
            EdgeClass::Rich => "rich",
            EdgeClass::Abnormal => "abnormal",
        })
    }
}

pub fn bit(color: u8) -> Palette {
    1 << (color - 1)
}

pub fn palette_colors(p: Palette) -> BTreeSet<u8> {
    (1..=MAX_COLORS).filter(|&c| p & bit(c) != 0).collect()
}

pub fn palette_mask(g: &CubicGraph, c: &EdgeColoring, v: usize) -> Palette {
    g.incident(v).iter().fold(0, |acc, &e| acc | bit(c.color(e)))
}

/// S(v): the set of colors on the edges at `v`.
pub fn palette(g: &CubicGraph, c: &EdgeColoring, v: usize) -> Result<BTreeSet<u8>, ColoringError> {
    c.check_graph(g)?;
    if v >= g.order() {
        return Err(ColoringError::UnknownVertex(v));
    }
    Ok(palette_colors(palette_mask(g, c, v)))
}

/// True iff every star carries three distinct colors, all at most `k`.
pub fn is_proper(g: &CubicGraph, c: &EdgeColoring, k: u8) -> bool {
    c.colors.len() == g.size()
        && c.colors.iter().all(|&x| x >= 1 && x <= k)
        && (0..g.order()).all(|v| palette_mask(g, c, v).count_ones() == 3)
}

fn require_proper(g: &CubicGraph, c: &EdgeColoring) -> Result<(), ColoringError> {
    c.check_graph(g)?;
    match (0..g.order()).find(|&v| palette_mask(g, c, v).count_ones() != 3) {
        Some(v) => Err(ColoringError::Improper(v)),
        None => Ok(()),
    }
}

pub fn classify_edge(g: &CubicGraph, c: &EdgeColoring, e: usize) -> Result<EdgeClass, ColoringError> {
    require_proper(g, c)?;
    if e >= g.size() {
        return Err(ColoringError::UnknownEdge(e));
    }
    Ok(class_unchecked(g, c, e))
}

fn class_unchecked(g: &CubicGraph, c: &EdgeColoring, e: usize) -> EdgeClass {
    let (u, v) = g.endpoints(e);
    EdgeClass::from_union_size((palette_mask(g, c, u) | palette_mask(g, c, v)).count_ones())
}

/// Class of every edge, indexed by edge id.
pub fn classify_all(g: &CubicGraph, c: &EdgeColoring) -> Result<Vec<EdgeClass>, ColoringError> {
    require_proper(g, c)?;
    let masks: Vec<Palette> = (0..g.order()).map(|v| palette_mask(g, c, v)).collect();
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| EdgeClass::from_union_size((masks[u] | masks[v]).count_ones()))
        .collect())
}

/// N_G(c), in increasing edge id order.
pub fn abnormal_set(g: &CubicGraph, c: &EdgeColoring) -> Result<Vec<usize>, ColoringError> {
    Ok(classify_all(g, c)?
        .into_iter()
        .enumerate()
        .filter(|&(_, class)| class == EdgeClass::Abnormal)
        .map(|(e, _)| e)
        .collect())
}

pub fn is_normal(g: &CubicGraph, c: &EdgeColoring) -> Result<bool, ColoringError> {
    Ok(abnormal_set(g, c)?.is_empty())
}
