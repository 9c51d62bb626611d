use super::{CubicGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogName {
    Petersen,
    K4,
    Q3,
    K33,
    /// Circular ladder on an even cycle of the given length.
    Prism(usize),
}

impl std::str::FromStr for CatalogName {
    type Err = GraphError;

    /// Accepts `petersen`, `k4`, `q3`, `k33` and `prism(L)` / `prism:L`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "petersen" => return Ok(CatalogName::Petersen),
            "k4" => return Ok(CatalogName::K4),
            "q3" | "cube" => return Ok(CatalogName::Q3),
            "k33" | "k3,3" => return Ok(CatalogName::K33),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("prism") {
            let digits = rest.trim_matches(|c| c == '(' || c == ')' || c == ':');
            let len = digits
                .parse()
                .map_err(|_| GraphError::InvalidParams(format!("bad prism length `{digits}`")))?;
            return Ok(CatalogName::Prism(len));
        }
        Err(GraphError::UnknownCatalog(s.to_string()))
    }
}

/// Kneser label of Petersen vertex `v`: the `v`-th 2-subset of {1..5} in
/// lexicographic order.
pub fn petersen_label(v: usize) -> [u8; 2] {
    const LABELS: [[u8; 2]; 10] = [
        [1, 2],
        [1, 3],
        [1, 4],
        [1, 5],
        [2, 3],
        [2, 4],
        [2, 5],
        [3, 4],
        [3, 5],
        [4, 5],
    ];
    LABELS[v]
}

pub fn catalog(name: &CatalogName) -> Result<CubicGraph, GraphError> {
    let (n, mut edges) = match *name {
        CatalogName::Petersen => {
            let disjoint = |a: [u8; 2], b: [u8; 2]| a.iter().all(|x| !b.contains(x));
            let edges = pairs(10)
                .filter(|&(i, j)| disjoint(petersen_label(i), petersen_label(j)))
                .collect();
            (10, edges)
        }
        CatalogName::K4 => (4, pairs(4).collect()),
        CatalogName::Q3 => (8, pairs(8).filter(|&(i, j)| (i ^ j).count_ones() == 1).collect()),
        CatalogName::K33 => (6, pairs(6).filter(|&(i, j)| i < 3 && j >= 3).collect()),
        CatalogName::Prism(len) => {
            if len < 4 || len % 2 == 1 {
                return Err(GraphError::InvalidParams(format!(
                    "prism needs an even cycle length >= 4, got {len}"
                )));
            }
            let mut edges = Vec::with_capacity(3 * len);
            for i in 0..len {
                edges.push((i, (i + 1) % len));
                edges.push((len + i, len + (i + 1) % len));
                edges.push((i, len + i));
            }
            (2 * len, edges)
        }
    };
    normalize(&mut edges);
    CubicGraph::from_edges(n, edges)
}

/// Möbius ladder: a `2r`-cycle plus the `r` long diagonals. Bipartite when
/// `r` is odd; `r = 3` gives K_{3,3}.
pub fn mobius_ladder(r: usize) -> Result<CubicGraph, GraphError> {
    if r < 2 {
        return Err(GraphError::InvalidParams(format!(
            "mobius ladder needs r >= 2, got {r}"
        )));
    }
    let n = 2 * r;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..r).map(|i| (i, i + r)));
    normalize(&mut edges);
    CubicGraph::from_edges(n, edges)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn normalize(edges: &mut [(usize, usize)]) {
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connectivity_report;

    #[test]
    fn petersen() {
        let p = catalog(&CatalogName::Petersen).unwrap();
        assert_eq!((p.order(), p.size(), p.girth()), (10, 15, 5));
        assert_eq!(p.edges()[0], (0, 7));
    }

    #[test]
    fn q3_and_k33_are_bipartite() {
        let q3 = catalog(&CatalogName::Q3).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert!(q3.is_bipartite());
        assert!(catalog(&CatalogName::K33).unwrap().is_bipartite());
        assert!(!catalog(&CatalogName::K4).unwrap().is_bipartite());
    }

    #[test]
    fn prism6() {
        let g = catalog(&CatalogName::Prism(6)).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.is_bipartite());
        assert_eq!(connectivity_report(&g).edge_connectivity_capped_at_4, 3);
    }

    #[test]
    fn prism4_is_the_cube_up_to_labels() {
        let g = catalog(&CatalogName::Prism(4)).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_bipartite());
    }

    #[test]
    fn rejects_odd_prism_and_unknown_names() {
        assert!(matches!(
            catalog(&CatalogName::Prism(5)),
            Err(GraphError::InvalidParams(_))
        ));
        assert!(matches!(
            "dodecahedron".parse::<CatalogName>(),
            Err(GraphError::UnknownCatalog(_))
        ));
        assert_eq!("prism(8)".parse::<CatalogName>().unwrap(), CatalogName::Prism(8));
        assert_eq!("Petersen".parse::<CatalogName>().unwrap(), CatalogName::Petersen);
    }

    #[test]
    fn mobius_three_is_k33() {
        let m = mobius_ladder(3).unwrap();
        assert!(m.is_bipartite());
        assert_eq!(m.girth(), 4);
        assert!(!mobius_ladder(4).unwrap().is_bipartite());
    }
}
