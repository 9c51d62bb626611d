use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{abnormal_set, is_proper, EdgeColoring};
use crate::graph::{catalog, connectivity_report, mobius_ladder, CatalogName, CubicGraph};
use crate::solver::{min_abnormal, SearchConfig};

use super::extend::three_path;
use super::{
    cyclic1_composite, cyclic2_composite, disjoint_composite, extend_one_edge, extend_two_edges, extend_vertex_star,
    replacement_composite, Composite, ConstructionError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Disjoint,
    Cyclic1,
    VertexReplacement,
    Cyclic2,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Disjoint,
        Variant::Cyclic1,
        Variant::VertexReplacement,
        Variant::Cyclic2,
    ];

    /// Most abnormal edges the extension can leave behind.
    pub fn bound(self) -> usize {
        match self {
            Variant::Disjoint => 0,
            Variant::Cyclic1 => 5,
            Variant::VertexReplacement => 7,
            Variant::Cyclic2 => 9,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Disjoint => "disjoint",
            Variant::Cyclic1 => "cyclic1",
            Variant::VertexReplacement => "vertex_replacement",
            Variant::Cyclic2 => "cyclic2",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "disjoint" => Ok(Variant::Disjoint),
            "cyclic1" => Ok(Variant::Cyclic1),
            "vertex_replacement" | "replacement" => Ok(Variant::VertexReplacement),
            "cyclic2" => Ok(Variant::Cyclic2),
            _ => Err(format!(
                "unknown variant `{s}` (disjoint, cyclic1, vertex_replacement, cyclic2)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    pub variant: Variant,
    pub t: usize,
    #[serde(rename = "nV_H")]
    pub n_v_h: usize,
    pub abnormal_h: usize,
    pub clean_copy_index: Option<usize>,
    pub abnormal_final: Option<usize>,
    pub bound: usize,
    pub pass: bool,
    /// Copies of the piece inside H; `2t` for vertex replacement.
    #[serde(skip)]
    pub copies: usize,
    #[serde(skip)]
    pub final_coloring: Option<EdgeColoring>,
}

/// Host with `2t` vertices for vertex replacement: the theta graph for
/// t = 1, K4 for t = 2 (no 3-connected bipartite cubic graph has four
/// vertices), the Möbius ladder for odd t and the prism for even t.
pub fn replacement_host(t: usize) -> Result<CubicGraph, ConstructionError> {
    Ok(match t {
        0 => return Err(ConstructionError::TooFewCopies { t, min: 1 }),
        1 => CubicGraph::from_edges(2, vec![(0, 1), (0, 1), (0, 1)])?,
        2 => catalog(&CatalogName::K4)?,
        t if t % 2 == 1 => mobius_ladder(t)?,
        t => catalog(&CatalogName::Prism(t))?,
    })
}

/// The first pair `(e1, e2)` of end-edges of a path of length three.
pub fn three_path_ends(g: &CubicGraph) -> Option<(usize, usize)> {
    (0..g.size()).find_map(|e1| (e1 + 1..g.size()).find(|&e2| three_path(g, e1, e2)).map(|e2| (e1, e2)))
}

struct Plan {
    composite: Composite,
    edge: usize,
    pair: (usize, usize),
}

fn plan(g: &CubicGraph, variant: Variant, t: usize) -> Result<Plan, ConstructionError> {
    let conn = connectivity_report(g);
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(ConstructionError::Precondition(format!(
                "{variant} needs a {what} graph"
            )))
        }
    };
    let connected = g.is_connected();
    Ok(match variant {
        Variant::Disjoint => {
            need(conn.bridgeless, "bridgeless")?;
            Plan {
                composite: disjoint_composite(g, t)?,
                edge: 0,
                pair: (0, 0),
            }
        }
        Variant::Cyclic1 => {
            need(connected && conn.bridgeless, "2-connected")?;
            Plan {
                composite: cyclic1_composite(g, 0, t)?,
                edge: 0,
                pair: (0, 0),
            }
        }
        Variant::VertexReplacement => {
            need(connected && conn.edge_connectivity_capped_at_4 >= 3, "3-connected")?;
            let host = replacement_host(t)?;
            Plan {
                composite: replacement_composite(&host, g, 0)?,
                edge: 0,
                pair: (0, 0),
            }
        }
        Variant::Cyclic2 => {
            need(
                connected && conn.cyclically_4_edge_connected,
                "cyclically 4-edge-connected",
            )?;
            let (e1, e2) =
                three_path_ends(g).ok_or(ConstructionError::Precondition("no path of length three".into()))?;
            Plan {
                composite: cyclic2_composite(g, e1, e2, t)?,
                edge: 0,
                pair: (e1, e2),
            }
        }
    })
}

/// Builds H for `variant`, takes a proper 5-edge-coloring of it (the
/// supplied one, or a solver coloring with fewer abnormal edges than
/// copies), finds a copy without abnormal edges and extends it to `g`.
///
/// Designated parts of `g`: edge 0 (cyclic1), vertex 0 (vertex
/// replacement) and the first end-edges of a path of length three
/// (cyclic2).
pub fn pigeonhole_demo(
    g: &CubicGraph,
    variant: Variant,
    t: usize,
    coloring: Option<&EdgeColoring>,
) -> Result<DemoReport, ConstructionError> {
    let Plan { composite, edge, pair } = plan(g, variant, t)?;
    let h = &composite.graph;
    let copies = composite.copies;
    let supplied;
    let c = match coloring {
        Some(c) => {
            if c.len() != h.size() || c.colors().iter().any(|&x| x > 5) || !is_proper(h, c, 5) {
                return Err(ConstructionError::BadColoring(format!(
                    "need a proper 5-edge-coloring of the {}-edge composite",
                    h.size()
                )));
            }
            c
        }
        None => {
            let cfg = SearchConfig {
                abnormal_budget: Some(copies - 1),
                first_solution: true,
                ..SearchConfig::default()
            };
            let result = min_abnormal(h, &cfg);
            supplied = result
                .witness
                .ok_or_else(|| ConstructionError::Solver(format!("status {}", result.status)))?;
            &supplied
        }
    };
    let abnormal = abnormal_set(h, c)?;
    let mut report = DemoReport {
        variant,
        t,
        n_v_h: h.order(),
        abnormal_h: abnormal.len(),
        clean_copy_index: composite.clean_copy(&abnormal),
        abnormal_final: None,
        bound: variant.bound(),
        pass: false,
        copies,
        final_coloring: None,
    };
    let Some(i) = report.clean_copy_index else {
        return Ok(report);
    };
    let piece = &composite.piece;
    let local = composite.restrict(c, i);
    let (final_coloring, count) = match variant {
        Variant::Disjoint => {
            let count = abnormal_set(g, &local)?.len();
            (local, count)
        }
        Variant::Cyclic1 => {
            let ext = extend_one_edge(g, piece, &local, edge)?;
            (ext.coloring, ext.abnormal.len())
        }
        Variant::VertexReplacement => {
            let external = c.color(composite.stub_edges[i][0]);
            let ext = extend_vertex_star(g, piece, &local, 0, external)?;
            (ext.coloring, ext.abnormal.len())
        }
        Variant::Cyclic2 => {
            let ext = extend_two_edges(g, piece, &local, pair.0, pair.1)?;
            (ext.coloring, ext.abnormal.len())
        }
    };
    report.abnormal_final = Some(count);
    report.pass = count <= report.bound && is_proper(g, &final_coloring, 5);
    report.final_coloring = Some(final_coloring);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::bit;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn petersen() -> CubicGraph {
        catalog(&CatalogName::Petersen).unwrap()
    }

    #[test]
    fn hosts() {
        for t in 1..=5 {
            let host = replacement_host(t).unwrap();
            assert_eq!(host.order(), 2 * t);
            assert!(connectivity_report(&host).edge_connectivity_capped_at_4 >= 3, "t = {t}");
            if t != 2 {
                assert!(host.is_bipartite(), "t = {t}");
            }
        }
    }

    #[test]
    fn variant_names() {
        for v in Variant::ALL {
            assert_eq!(v.to_string().parse::<Variant>(), Ok(v));
        }
        assert!("cyclic3".parse::<Variant>().is_err());
    }

    #[test]
    fn solver_backed_runs_on_petersen() {
        for variant in Variant::ALL {
            for t in [2, 3] {
                let r = pigeonhole_demo(&petersen(), variant, t, None).unwrap();
                assert!(r.abnormal_h < r.copies);
                assert!(r.clean_copy_index.is_some());
                assert!(r.pass, "{variant} t={t}: {r:?}");
                assert!(r.abnormal_final.unwrap() <= variant.bound());
            }
        }
    }

    #[test]
    fn json_fields() {
        let r = pigeonhole_demo(&petersen(), Variant::Cyclic2, 2, None).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec![
            "variant",
            "t",
            "nV_H",
            "abnormal_h",
            "clean_copy_index",
            "abnormal_final",
            "bound",
            "pass",
        ];
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
        assert_eq!(json["bound"], 9);
        assert_eq!(json["variant"], "cyclic2");
        assert_eq!(json["nV_H"], 20);
    }

    #[test]
    fn preconditions() {
        let k33 = catalog(&CatalogName::K33).unwrap();
        assert!(pigeonhole_demo(&k33, Variant::Cyclic1, 2, None).is_ok());
        // the three rungs separate two triangles
        let triangles = CubicGraph::from_edges(
            6,
            vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(pigeonhole_demo(&triangles, Variant::VertexReplacement, 2, None).is_ok());
        let err = pigeonhole_demo(&triangles, Variant::Cyclic2, 2, None);
        assert!(matches!(err, Err(ConstructionError::Precondition(_))), "{err:?}");
        let bad = EdgeColoring::new(5, vec![1; 30]).unwrap();
        assert!(matches!(
            pigeonhole_demo(&petersen(), Variant::Disjoint, 2, Some(&bad)),
            Err(ConstructionError::BadColoring(_))
        ));
    }

    /// Recolors random edges to random colors free at both ends.
    fn perturb(h: &CubicGraph, c: &EdgeColoring, steps: usize, rng: &mut ChaCha8Rng) -> EdgeColoring {
        let mut colors = c.colors().to_vec();
        for _ in 0..steps {
            let e = rng.gen_range(0..h.size());
            let used = h.adjacent_edges(e).iter().fold(0, |m, &f| m | bit(colors[f]));
            let free: Vec<u8> = (1..=5).filter(|&x| used & bit(x) == 0 && x != colors[e]).collect();
            if !free.is_empty() {
                colors[e] = free[rng.gen_range(0..free.len())];
            }
        }
        EdgeColoring::new(5, colors).unwrap()
    }

    #[test]
    fn pigeonhole_holds_for_perturbed_colorings() {
        let g = petersen();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut below = 0;
        for variant in Variant::ALL {
            for t in [2, 3] {
                let base = pigeonhole_demo(&g, variant, t, None).unwrap();
                let composite = plan(&g, variant, t).unwrap().composite;
                let h = &composite.graph;
                let start = min_abnormal(
                    h,
                    &SearchConfig {
                        abnormal_budget: Some(0),
                        first_solution: true,
                        ..SearchConfig::default()
                    },
                )
                .witness
                .unwrap();
                for steps in 0..12 {
                    let c = perturb(h, &start, steps, &mut rng);
                    let r = pigeonhole_demo(&g, variant, t, Some(&c)).unwrap();
                    if r.abnormal_h < r.copies {
                        below += 1;
                        assert!(r.clean_copy_index.is_some());
                        assert!(r.pass, "{variant} t={t}: {r:?}");
                    }
                }
                assert_eq!(base.copies, composite.copies);
            }
        }
        assert!(below > 20);
    }

    #[test]
    fn dirty_copies_are_reported() {
        // both copies of Q3 carry the two-abnormal base coloring
        let (q3, base) = crate::constructions::q3_base_coloring();
        let c = EdgeColoring::new(5, [base.colors(), base.colors()].concat()).unwrap();
        let r = pigeonhole_demo(&q3, Variant::Disjoint, 2, Some(&c)).unwrap();
        assert_eq!((r.abnormal_h, r.copies), (4, 2));
        assert_eq!(r.clean_copy_index, None);
        assert_eq!(r.abnormal_final, None);
        assert!(!r.pass);
    }
}
