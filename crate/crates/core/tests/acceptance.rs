//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use normcol::coloring::{abnormal_set, bit, is_normal, is_proper, EdgeColoring};
use normcol::constructions::{cyclic_join_two_edges, k_abnormal_example, pigeonhole_demo, Variant};
use normcol::graph::{catalog, connectivity_report, dedup_isomorphic, enumerate_cubic, CatalogName, CubicGraph};
use normcol::homomorphism::{
    build_p_coloring, canonical_petersen, cycles, preimage_degrees, pullback, verify_h_coloring,
};
use normcol::solver::{
    exhaustive_oracle, has_normal_k, min_abnormal, scan_no_single_abnormal, SearchConfig, SolveStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

struct Corpus {
    /// Isomorphism-class representatives for n = 4, 6, 8, 10.
    classes: Vec<(usize, Vec<CubicGraph>)>,
}

impl Corpus {
    fn build() -> Corpus {
        let classes = [4, 6, 8, 10]
            .into_iter()
            .map(|n| (n, dedup_isomorphic(enumerate_cubic(n))))
            .collect();
        Corpus { classes }
    }

    fn graphs(&self, max_n: usize) -> impl Iterator<Item = &CubicGraph> {
        self.classes
            .iter()
            .filter(move |(n, _)| *n <= max_n)
            .flat_map(|(_, gs)| gs)
    }
}

/// Normal 5-edge-colorings of every bridgeless corpus graph and Petersen.
fn normal_witnesses(corpus: &Corpus) -> Result<Vec<(CubicGraph, EdgeColoring)>, String> {
    let mut out = Vec::new();
    let petersen = catalog(&CatalogName::Petersen).unwrap();
    for g in corpus.graphs(10).chain(std::iter::once(&petersen)) {
        if !connectivity_report(g).bridgeless {
            continue;
        }
        let r = min_abnormal(g, &SearchConfig::default());
        match (r.status, r.best_count, r.witness) {
            (SolveStatus::Optimal, Some(0), Some(w)) => out.push((g.clone(), w)),
            (status, count, _) => return Err(format!("{:?}: status {status}, minimum {count:?}", g.edges())),
        }
    }
    Ok(out)
}

fn criterion_1(corpus: &Corpus) -> Outcome {
    let expected = [(4, 1), (6, 2), (8, 5), (10, 19)];
    let mut parts = Vec::new();
    for ((n, graphs), (_, want)) in corpus.classes.iter().zip(expected) {
        ensure(graphs.len() == want, || {
            format!("n = {n}: {} classes, expected {want}", graphs.len())
        })?;
        let report = scan_no_single_abnormal(graphs.iter().cloned(), &SearchConfig::default(), jobs());
        ensure(report.undecided.is_empty(), || {
            format!("n = {n}: undecided graphs {:?}", report.undecided)
        })?;
        ensure(report.single_abnormal.is_empty(), || {
            format!("n = {n}: minimum 1 for graphs {:?}", report.single_abnormal)
        })?;
        parts.push(format!(
            "n={n}: {} graphs, minima {:?}",
            graphs.len(),
            report.distribution
        ));
    }
    Ok(parts.join("; "))
}

fn criterion_2(witnesses: &Result<Vec<(CubicGraph, EdgeColoring)>, String>) -> Outcome {
    let w = witnesses.as_ref().map_err(Clone::clone)?;
    for (g, c) in w {
        ensure(is_proper(g, c, 5) && is_normal(g, c).unwrap(), || {
            format!("bad witness for {:?}", g.edges())
        })?;
    }
    Ok(format!(
        "{} bridgeless graphs (n <= 10 and Petersen) have a normal 5-edge-coloring",
        w.len()
    ))
}

fn criterion_3(corpus: &Corpus) -> Outcome {
    let mut graphs: Vec<CubicGraph> = corpus.graphs(10).cloned().collect();
    for name in [
        CatalogName::K4,
        CatalogName::K33,
        CatalogName::Q3,
        CatalogName::Petersen,
        CatalogName::Prism(6),
    ] {
        graphs.push(catalog(&name).unwrap());
    }
    let multigraphs = [
        (2, vec![(0, 1), (0, 1), (0, 1)]),
        (4, vec![(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)]),
        (
            6,
            vec![(0, 1), (0, 1), (0, 2), (1, 2), (2, 5), (3, 4), (3, 4), (3, 5), (4, 5)],
        ),
    ];
    for (n, edges) in multigraphs {
        graphs.push(CubicGraph::from_edges(n, edges).unwrap());
    }
    let mut checks = 0;
    for g in graphs.iter().filter(|g| g.size() <= 18) {
        for k in 3..=5 {
            let cfg = SearchConfig {
                colors: k,
                ..SearchConfig::default()
            };
            let fast = min_abnormal(g, &cfg);
            let slow = exhaustive_oracle(g, k).map_err(|e| e.to_string())?;
            let fast_count = match fast.status {
                SolveStatus::Optimal => fast.best_count,
                SolveStatus::OverBudget => None,
                other => return Err(format!("{:?} k={k}: solver status {other}", g.edges())),
            };
            ensure(fast_count == slow.best_count, || {
                format!(
                    "{:?} k={k}: solver {fast_count:?}, oracle {:?}",
                    g.edges(),
                    slow.best_count
                )
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} (graph, k) pairs agree, k in 3..=5"))
}

fn criterion_4(witnesses: &Result<Vec<(CubicGraph, EdgeColoring)>, String>) -> Outcome {
    let w = witnesses.as_ref().map_err(Clone::clone)?;
    let model = canonical_petersen();
    for (g, c) in w {
        let phi = build_p_coloring(&model, g, c, false).map_err(|e| e.to_string())?;
        ensure(phi.is_total(), || format!("partial map for {:?}", g.edges()))?;
        ensure(
            verify_h_coloring(g, model.graph(), &phi).map_err(|e| e.to_string())?,
            || format!("not a Petersen-coloring: {:?}", g.edges()),
        )?;
        let back = pullback(&model, g, &phi).map_err(|e| e.to_string())?;
        ensure(&back == c, || format!("pullback differs for {:?}", g.edges()))?;
    }
    Ok(format!("{} witnesses round-trip", w.len()))
}

fn criterion_5(witnesses: &Result<Vec<(CubicGraph, EdgeColoring)>, String>) -> Outcome {
    let w = witnesses.as_ref().map_err(Clone::clone)?;
    let model = canonical_petersen();
    let all = cycles(model.graph());
    ensure(all.len() == 57, || {
        format!("{} cycles in the Petersen graph", all.len())
    })?;
    for (g, c) in w {
        for f in &all {
            let deg = preimage_degrees(&model, g, c, f).map_err(|e| e.to_string())?;
            ensure(deg.iter().all(|&d| d == 0 || d == 2), || {
                format!("degrees {deg:?} for {:?}", g.edges())
            })?;
        }
    }
    Ok(format!(
        "{} witnesses x {} cycles, all preimage degrees in {{0, 2}}",
        w.len(),
        all.len()
    ))
}

fn criterion_6() -> Outcome {
    for k in 2..=8 {
        let (g, c) = k_abnormal_example(k).map_err(|e| e.to_string())?;
        ensure(g.order() == 8 + 4 * (k - 2), || {
            format!("k={k}: {} vertices", g.order())
        })?;
        ensure(is_proper(&g, &c, 5), || format!("k={k}: improper"))?;
        let count = abnormal_set(&g, &c).unwrap().len();
        ensure(count == k, || format!("k={k}: {count} abnormal edges"))?;
    }
    Ok("k = 2..8 exact".into())
}

fn criterion_7() -> Outcome {
    let p = catalog(&CatalogName::Petersen).unwrap();
    let mut checked = 0;
    for e1 in 0..p.size() {
        for e2 in e1 + 1..p.size() {
            let (a, b) = p.endpoints(e1);
            let (c, d) = p.endpoints(e2);
            if [c, d].contains(&a) || [c, d].contains(&b) {
                continue;
            }
            for t in [2, 3] {
                let h = cyclic_join_two_edges(&p, e1, e2, t).map_err(|e| e.to_string())?;
                ensure(connectivity_report(&h).cyclically_4_edge_connected, || {
                    format!("edges {e1}, {e2}, t={t}: not cyclically 4-edge-connected")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} joins (all independent pairs, t in {{2, 3}})"))
}

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

fn criterion_8() -> Outcome {
    let p = catalog(&CatalogName::Petersen).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut parts = Vec::new();
    let mut premise_runs = 0;
    for variant in Variant::ALL {
        let mut worst = 0;
        for t in [2, 3] {
            let r = pigeonhole_demo(&p, variant, t, None).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("{variant} t={t}: {r:?}"))?;
            worst = worst.max(r.abnormal_final.unwrap_or(0));
            // normal coloring of H from the solver, then random local recolorings
            let h = composite_graph(&p, variant, t)?;
            let start = has_normal_k(&h, 5).ok_or_else(|| format!("{variant} t={t}: H has no normal coloring"))?;
            for steps in 0..16 {
                let c = perturb(&h, &start, steps, &mut rng);
                let r = pigeonhole_demo(&p, variant, t, Some(&c)).map_err(|e| e.to_string())?;
                if r.abnormal_h < r.copies {
                    premise_runs += 1;
                    ensure(r.clean_copy_index.is_some() && r.pass, || {
                        format!("{variant} t={t}: {r:?}")
                    })?;
                    worst = worst.max(r.abnormal_final.unwrap_or(0));
                }
            }
        }
        parts.push(format!("{variant} max {worst} <= {}", variant.bound()));
    }
    Ok(format!(
        "{}; {premise_runs} perturbed colorings below the copy count",
        parts.join(", ")
    ))
}

fn composite_graph(p: &CubicGraph, variant: Variant, t: usize) -> Result<CubicGraph, String> {
    use normcol::constructions::{
        cyclic_join_one_edge, disjoint_copies, replacement_host, three_path_ends, vertex_replacement,
    };
    let built = match variant {
        Variant::Disjoint => disjoint_copies(p, t),
        Variant::Cyclic1 => cyclic_join_one_edge(p, 0, t),
        Variant::VertexReplacement => replacement_host(t).and_then(|host| vertex_replacement(&host, p, 0)),
        Variant::Cyclic2 => {
            let (e1, e2) = three_path_ends(p).ok_or("no path of length three")?;
            cyclic_join_two_edges(p, e1, e2, t)
        }
    };
    built.map_err(|e| e.to_string())
}

fn criterion_9(corpus: &Corpus) -> Outcome {
    let mut examined = 0;
    for g in corpus.graphs(8) {
        if !connectivity_report(g).bridgeless {
            continue;
        }
        let r = min_abnormal(g, &SearchConfig::default());
        if r.best_count.is_some_and(|m| m <= 2) {
            examined += 1;
            ensure(has_normal_k(g, 5).is_some(), || {
                format!("counterexample: {:?}", g.edges())
            })?;
        }
    }
    Ok(format!(
        "{examined} bridgeless graphs with minimum <= 2, all normal; no counterexample"
    ))
}

fn main() -> ExitCode {
    let corpus = Corpus::build();
    let witnesses = normal_witnesses(&corpus);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (
            "no graph has exactly one abnormal edge at the minimum",
            Box::new(|| criterion_1(&corpus)),
        ),
        (
            "bridgeless graphs admit normal 5-edge-colorings",
            Box::new(|| criterion_2(&witnesses)),
        ),
        (
            "solver agrees with the exhaustive oracle",
            Box::new(|| criterion_3(&corpus)),
        ),
        ("Petersen-coloring round trip", Box::new(|| criterion_4(&witnesses))),
        (
            "cycle preimages have degrees 0 and 2",
            Box::new(|| criterion_5(&witnesses)),
        ),
        ("k-abnormal family", Box::new(criterion_6)),
        (
            "two-edge cyclic joins are cyclically 4-edge-connected",
            Box::new(criterion_7),
        ),
        ("pigeonhole demo bounds 0/5/7/9", Box::new(criterion_8)),
        (
            "minimum <= 2 implies normal (n <= 8)",
            Box::new(|| criterion_9(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}) [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
