use std::path::Path;

use clap::ValueEnum;
use normcol::coloring::{abnormal_set, classify_all, is_normal, is_proper, EdgeClass, EdgeColoring};
use normcol::constructions::{pigeonhole_demo, ConstructionError, ConstructionRecipe};
use normcol::graph::{connectivity_report, dedup_isomorphic, enumerate_cubic, write_graph, CubicGraph};
use normcol::homomorphism::{build_p_coloring, pullback, verify_h_coloring, PColoring, PetersenModel};
use normcol::solver::{
    has_normal_k, min_abnormal, normal_chromatic_index, scan_no_single_abnormal, SearchConfig, SolveError, SolveStatus,
};
use serde_json::{json, Value};

use crate::input::{self, load_coloring, load_named_or_path, load_text, write_file, GraphArgs};
use crate::report::{OutFormat, Report, Source};
use crate::{CliError, Command, SolverArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Recipe {
    Disjoint,
    Cyclic1,
    Cyclic2,
    VertexReplacement,
    TwoCut,
    K4Gadget,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn construction(e: ConstructionError) -> CliError {
    match e {
        ConstructionError::Escaped { .. } | ConstructionError::Solver(_) => CliError::Verification(e.to_string()),
        other => usage(other),
    }
}

fn jobs_or_default(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn config(s: &SolverArgs, first_solution: bool) -> Result<SearchConfig, CliError> {
    if !(1..=32).contains(&s.k) {
        return Err(usage(SolveError::BadColorBudget(s.k)));
    }
    Ok(SearchConfig {
        colors: s.k,
        abnormal_budget: s.budget,
        node_limit: s.node_limit,
        first_solution,
    })
}

fn coloring_for(g: &CubicGraph, path: &Path) -> Result<(EdgeColoring, Source), CliError> {
    let (c, src) = load_coloring(path)?;
    if c.len() != g.size() {
        return Err(usage(format!("coloring has {} edges, graph has {}", c.len(), g.size())));
    }
    Ok((c, src))
}

/// Colors and classes per edge; classes only when the coloring is proper.
fn edge_rows(report: &mut Report, g: &CubicGraph, c: &EdgeColoring, classes: Option<&[EdgeClass]>) {
    report.columns(&["edge", "u", "v", "color", "class"]);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let class = classes.map_or(Value::Null, |cl| json!(cl[e].to_string()));
        report.row(vec![json!(e), json!(u), json!(v), json!(c.color(e)), class]);
    }
}

fn class_counts(report: &mut Report, classes: &[EdgeClass]) {
    let count = |k: EdgeClass| classes.iter().filter(|&&c| c == k).count();
    report.field("poor", count(EdgeClass::Poor));
    report.field("rich", count(EdgeClass::Rich));
    report.field("abnormal", count(EdgeClass::Abnormal));
}

pub fn run(command: Command) -> Result<(Report, OutFormat), CliError> {
    match command {
        Command::Classify { graph, coloring, out } => Ok((classify(&graph, &coloring)?, out.unwrap_or(OutFormat::Tsv))),
        Command::Solve {
            graph,
            solver,
            first,
            save,
            out,
        } => Ok((
            solve(&graph, &solver, first, save.as_deref())?,
            out.unwrap_or(OutFormat::Tsv),
        )),
        Command::ChiN { graph, save, out } => Ok((chi_n(&graph, save.as_deref())?, out.unwrap_or(OutFormat::Tsv))),
        Command::Scan {
            n,
            solver,
            jobs,
            timings,
            out,
        } => Ok((
            scan(n, &solver, jobs_or_default(jobs), timings)?,
            out.unwrap_or(OutFormat::Tsv),
        )),
        Command::Jaeger {
            graph,
            coloring,
            map,
            map_out,
            out,
        } => Ok((
            jaeger(&graph, coloring.as_deref(), map.as_deref(), map_out.as_deref())?,
            out.unwrap_or(OutFormat::Tsv),
        )),
        Command::Construct {
            graph,
            variant,
            t,
            edge,
            edge2,
            vertex,
            host,
            other,
            coloring,
            output,
            emit,
            coloring_out,
            out,
        } => {
            let (g, src) = graph.load()?;
            let mut inputs = vec![src];
            let need =
                |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--{flag} is required for this variant")));
            let recipe = match variant {
                Recipe::Disjoint => ConstructionRecipe::Disjoint { t: need(t, "t")? },
                Recipe::Cyclic1 => ConstructionRecipe::Cyclic1 {
                    e: edge.unwrap_or(0),
                    t: need(t, "t")?,
                },
                Recipe::Cyclic2 => ConstructionRecipe::Cyclic2 {
                    e1: need(edge, "edge")?,
                    e2: need(edge2, "edge2")?,
                    t: need(t, "t")?,
                },
                Recipe::VertexReplacement => {
                    let spec = host.ok_or_else(|| usage("--host is required for vertex_replacement"))?;
                    let (h, hsrc) = load_named_or_path("host", &spec)?;
                    inputs.push(hsrc);
                    ConstructionRecipe::VertexReplacement {
                        host: h,
                        v: vertex.unwrap_or(0),
                    }
                }
                Recipe::TwoCut => {
                    let spec = other.ok_or_else(|| usage("--other is required for two_cut"))?;
                    let (o, osrc) = load_named_or_path("other", &spec)?;
                    inputs.push(osrc);
                    ConstructionRecipe::TwoCut {
                        e1: edge.unwrap_or(0),
                        other: o,
                        e2: edge2.unwrap_or(0),
                    }
                }
                Recipe::K4Gadget => {
                    let path = coloring.ok_or_else(|| usage("--coloring is required for k4_gadget"))?;
                    let (c, csrc) = coloring_for(&g, &path)?;
                    inputs.push(csrc);
                    ConstructionRecipe::K4Gadget {
                        coloring: c,
                        e: need(edge, "edge")?,
                    }
                }
            };
            let args = ConstructArgs {
                variant,
                output: &output,
                emit,
                coloring_out: coloring_out.as_deref(),
            };
            Ok((construct(&g, inputs, &recipe, args)?, out.unwrap_or(OutFormat::Tsv)))
        }
        Command::Demo {
            graph,
            variant,
            t,
            coloring,
            out,
        } => {
            let (g, src) = graph.load()?;
            let mut inputs = vec![src];
            let supplied = match coloring {
                Some(path) => {
                    let (c, csrc) = load_coloring(&path)?;
                    inputs.push(csrc);
                    Some(c)
                }
                None => None,
            };
            let d = pigeonhole_demo(&g, variant, t, supplied.as_ref()).map_err(construction)?;
            let mut r = Report::new("demo", inputs);
            r.field("variant", d.variant)
                .field("t", d.t)
                .field("nV_H", d.n_v_h)
                .field("copies", d.copies)
                .field("abnormal_h", d.abnormal_h)
                .field("clean_copy_index", d.clean_copy_index)
                .field("abnormal_final", d.abnormal_final)
                .field("bound", d.bound)
                .field("pass", d.pass);
            // A clean copy is only promised when H has fewer abnormal edges than copies.
            r.check(
                "clean_copy_when_guaranteed",
                d.clean_copy_index.is_some() || d.abnormal_h >= d.copies,
            );
            r.check("within_bound", d.abnormal_final.is_none_or(|a| a <= d.bound));
            if let Some(c) = &d.final_coloring {
                r.check("final_coloring_proper", is_proper(&g, c, 5));
            }
            Ok((r, out.unwrap_or(OutFormat::Json)))
        }
        Command::Question31 { n, jobs, out } => {
            Ok((question31(n, jobs_or_default(jobs))?, out.unwrap_or(OutFormat::Tsv)))
        }
        Command::Plot {
            graph,
            coloring,
            output,
            out,
        } => Ok((
            plot(&graph, coloring.as_deref(), &output)?,
            out.unwrap_or(OutFormat::Tsv),
        )),
    }
}

fn classify(graph: &GraphArgs, coloring: &Path) -> Result<Report, CliError> {
    let (g, src) = graph.load()?;
    let (c, csrc) = coloring_for(&g, coloring)?;
    let mut r = Report::new("classify", vec![src, csrc]);
    r.field("n", g.order()).field("m", g.size()).field("k", c.k());
    let proper = is_proper(&g, &c, c.k());
    r.check("proper", proper);
    if !proper {
        edge_rows(&mut r, &g, &c, None);
        return Ok(r);
    }
    let classes = classify_all(&g, &c).map_err(usage)?;
    class_counts(&mut r, &classes);
    r.field("abnormal_edges", abnormal_set(&g, &c).map_err(usage)?);
    edge_rows(&mut r, &g, &c, Some(&classes));
    Ok(r)
}

fn solve(graph: &GraphArgs, solver: &SolverArgs, first: bool, save: Option<&Path>) -> Result<Report, CliError> {
    let (g, src) = graph.load()?;
    let cfg = config(solver, first)?;
    let res = min_abnormal(&g, &cfg);
    let mut r = Report::new("solve", vec![src]);
    r.field("n", g.order())
        .field("m", g.size())
        .field("k", cfg.colors)
        .field("budget", cfg.abnormal_budget)
        .field("status", res.status.to_string())
        .field("min_abnormal", res.best_count)
        .field("nodes", res.nodes_explored);
    if let Some(c) = &res.witness {
        let abnormal = abnormal_set(&g, c).map_err(usage)?;
        r.field("abnormal_edges", &abnormal);
        r.check("witness_proper", is_proper(&g, c, cfg.colors));
        r.check("witness_count_matches", res.best_count == Some(abnormal.len()));
        if let Some(path) = save {
            write_file(path, &c.to_text())?;
        }
        let classes = classify_all(&g, c).map_err(usage)?;
        edge_rows(&mut r, &g, c, Some(&classes));
    } else {
        r.check("no_witness_explained", res.status != SolveStatus::Optimal);
    }
    Ok(r)
}

fn chi_n(graph: &GraphArgs, save: Option<&Path>) -> Result<Report, CliError> {
    let (g, src) = graph.load()?;
    let conn = connectivity_report(&g);
    let mut r = Report::new("chi-n", vec![src]);
    r.field("n", g.order())
        .field("m", g.size())
        .field("bridgeless", conn.bridgeless);
    match normal_chromatic_index(&g) {
        Ok((k, c)) => {
            r.field("chi_n", k);
            r.check(
                "witness_normal",
                is_proper(&g, &c, k) && is_normal(&g, &c).map_err(usage)?,
            );
            if k > 3 {
                r.check("no_normal_below", has_normal_k(&g, k - 1).is_none());
            }
            if let Some(path) = save {
                write_file(path, &c.to_text())?;
            }
            let classes = classify_all(&g, &c).map_err(usage)?;
            edge_rows(&mut r, &g, &c, Some(&classes));
        }
        Err(SolveError::NoNormalColoringWithin { limit }) => {
            r.field("chi_n", Option::<u8>::None).field("searched_up_to", limit);
            // bridgeless graphs are expected to have a normal 5-edge-coloring
            r.check("bridgeless_graph_has_normal_coloring", !conn.bridgeless);
        }
        Err(e) => return Err(CliError::Verification(e.to_string())),
    }
    Ok(r)
}

fn corpus(n: usize) -> Result<Vec<CubicGraph>, CliError> {
    if n < 4 || n % 2 == 1 {
        return Err(usage(format!("--n must be an even number >= 4, got {n}")));
    }
    if n > 16 {
        return Err(usage(format!(
            "--n {n} is beyond the enumerator's practical range (<= 16)"
        )));
    }
    Ok(dedup_isomorphic(enumerate_cubic(n)))
}

fn scan(n: usize, solver: &SolverArgs, jobs: usize, timings: bool) -> Result<Report, CliError> {
    let graphs = corpus(n)?;
    let cfg = config(solver, false)?;
    let rep = scan_no_single_abnormal(graphs, &cfg, jobs);
    let mut r = Report::new("scan", vec![]);
    r.field("n", n)
        .field("k", cfg.colors)
        .field("graphs", rep.rows.len())
        .field("minima", &rep.distribution)
        .field("single_abnormal", rep.single_abnormal.len())
        .field("single_abnormal_ids", &rep.single_abnormal)
        .field("undecided", &rep.undecided);
    r.columns(&[
        "graph_id",
        "n",
        "m",
        "bridgeless",
        "cyc4",
        "status",
        "min_abnormal",
        "nodes",
        "millis",
    ]);
    for row in &rep.rows {
        let millis = if timings { json!(row.millis as u64) } else { Value::Null };
        r.row(vec![
            json!(row.graph_id),
            json!(row.n),
            json!(row.m),
            json!(row.bridgeless),
            json!(row.cyc4),
            json!(row.status.to_string()),
            json!(row.min_abnormal),
            json!(row.nodes),
            millis,
        ]);
    }
    r.check("no_single_abnormal", rep.single_abnormal.is_empty());
    Ok(r)
}

fn jaeger(
    graph: &GraphArgs,
    coloring: Option<&Path>,
    map: Option<&Path>,
    map_out: Option<&Path>,
) -> Result<Report, CliError> {
    let (g, src) = graph.load()?;
    let model = PetersenModel::canonical();
    let mut inputs = vec![src];
    if let Some(path) = map {
        let (text, msrc) = load_text("map", path)?;
        inputs.push(msrc);
        let phi = PColoring::from_text(&text, g.size()).map_err(usage)?;
        let mut r = Report::new("jaeger", inputs);
        r.field("direction", "map_to_coloring");
        let valid = verify_h_coloring(&g, model.graph(), &phi).map_err(usage)?;
        r.check("h_coloring", valid);
        if valid {
            let c = pullback(&model, &g, &phi).map_err(|e| CliError::Verification(e.to_string()))?;
            r.check("pullback_normal", is_normal(&g, &c).map_err(usage)?);
            edge_rows(&mut r, &g, &c, Some(&classify_all(&g, &c).map_err(usage)?));
        }
        return Ok(r);
    }
    let c = match coloring {
        Some(path) => {
            let (c, csrc) = coloring_for(&g, path)?;
            inputs.push(csrc);
            c
        }
        None => has_normal_k(&g, 5).ok_or_else(|| CliError::Verification("no normal 5-edge-coloring exists".into()))?,
    };
    let mut r = Report::new("jaeger", inputs);
    r.field("direction", "coloring_to_map");
    if !is_proper(&g, &c, 5) {
        return Err(usage("the coloring must be a proper 5-edge-coloring"));
    }
    let abnormal = abnormal_set(&g, &c).map_err(usage)?;
    r.field("abnormal_edges", &abnormal);
    r.check("coloring_normal", abnormal.is_empty());
    if !abnormal.is_empty() {
        return Ok(r);
    }
    let phi = build_p_coloring(&model, &g, &c, false).map_err(|e| CliError::Verification(e.to_string()))?;
    r.check("h_coloring", verify_h_coloring(&g, model.graph(), &phi).map_err(usage)?);
    let back = pullback(&model, &g, &phi).map_err(|e| CliError::Verification(e.to_string()))?;
    r.check("round_trip", back.colors() == c.colors());
    if let Some(path) = map_out {
        write_file(path, &phi.to_text())?;
    }
    r.columns(&["edge", "color", "petersen_edge"]);
    for e in 0..g.size() {
        r.row(vec![json!(e), json!(c.color(e)), json!(phi.image(e))]);
    }
    Ok(r)
}

struct ConstructArgs<'a> {
    variant: Recipe,
    output: &'a Path,
    emit: normcol::graph::GraphFormat,
    coloring_out: Option<&'a Path>,
}

fn construct(
    g: &CubicGraph,
    inputs: Vec<Source>,
    recipe: &ConstructionRecipe,
    args: ConstructArgs<'_>,
) -> Result<Report, CliError> {
    let (h, coloring) = recipe.build(g).map_err(construction)?;
    let mut r = Report::new("construct", inputs);
    let variant = args.variant.to_possible_value().expect("named variant");
    r.field("variant", variant.get_name())
        .field("n", h.order())
        .field("m", h.size())
        .field("connectivity", connectivity_report(&h));
    let n = g.order();
    let expected_order = match recipe {
        ConstructionRecipe::Disjoint { t }
        | ConstructionRecipe::Cyclic1 { t, .. }
        | ConstructionRecipe::Cyclic2 { t, .. } => t * n,
        ConstructionRecipe::VertexReplacement { host, .. } => host.order() * (n - 1),
        ConstructionRecipe::TwoCut { other, .. } => n + other.order(),
        ConstructionRecipe::K4Gadget { .. } => n + 4,
    };
    r.check("order_law", h.order() == expected_order);
    if let ConstructionRecipe::Cyclic2 { .. } = recipe {
        if connectivity_report(g).cyclically_4_edge_connected {
            r.check(
                "cyclically_4_edge_connected",
                connectivity_report(&h).cyclically_4_edge_connected,
            );
        }
    }
    if let (ConstructionRecipe::K4Gadget { coloring: before, .. }, Some(c)) = (recipe, &coloring) {
        let was = abnormal_set(g, before).map_err(usage)?.len();
        let now = abnormal_set(&h, c).map_err(usage)?.len();
        r.field("abnormal_before", was).field("abnormal_after", now);
        r.check("coloring_proper", is_proper(&h, c, 5));
        r.check("one_more_abnormal", now == was + 1);
        if let Some(path) = args.coloring_out {
            write_file(path, &c.to_text())?;
        }
    }
    let text = write_graph(&h, args.emit);
    write_file(args.output, &text)?;
    r.field("output", args.output.display().to_string())
        .field("output_sha256", input::sha256_hex(text.as_bytes()));
    Ok(r)
}

fn question31(n: usize, jobs: usize) -> Result<Report, CliError> {
    let graphs: Vec<CubicGraph> = corpus(n)?
        .into_iter()
        .filter(|g| connectivity_report(g).bridgeless)
        .collect();
    let rep = scan_no_single_abnormal(graphs.clone(), &SearchConfig::default(), jobs);
    let mut r = Report::new("question31", vec![]);
    r.columns(&["graph_id", "min_abnormal", "normal_5"]);
    let mut examined = 0;
    let mut counterexamples = Vec::new();
    for row in &rep.rows {
        let normal = match row.min_abnormal {
            Some(m) if m <= 2 => {
                examined += 1;
                let found = m == 0 || has_normal_k(&graphs[row.graph_id], 5).is_some();
                if !found {
                    counterexamples.push(row.graph_id);
                }
                json!(found)
            }
            _ => Value::Null,
        };
        r.row(vec![json!(row.graph_id), json!(row.min_abnormal), normal]);
    }
    r.field("n", n)
        .field("bridgeless_graphs", graphs.len())
        .field("min_at_most_2", examined)
        .field("counterexamples", &counterexamples)
        .field("undecided", &rep.undecided);
    r.check("no_counterexample", counterexamples.is_empty());
    r.check("all_decided", rep.undecided.is_empty());
    Ok(r)
}

fn plot(graph: &GraphArgs, coloring: Option<&Path>, output: &Path) -> Result<Report, CliError> {
    let (g, src) = graph.load()?;
    let mut inputs = vec![src];
    let c = match coloring {
        Some(path) => {
            let (c, csrc) = coloring_for(&g, path)?;
            inputs.push(csrc);
            Some(c)
        }
        None => min_abnormal(&g, &SearchConfig::default()).witness,
    };
    let mut r = Report::new("plot", inputs);
    let classes = match &c {
        Some(c) if is_proper(&g, c, c.k()) => Some(classify_all(&g, c).map_err(usage)?),
        Some(_) => return Err(usage("the coloring is not proper")),
        None => None,
    };
    if let Some(cl) = &classes {
        class_counts(&mut r, cl);
    }
    let svg = crate::plot::svg(&g, c.as_ref(), classes.as_deref());
    write_file(output, &svg)?;
    r.field("output", output.display().to_string())
        .field("output_sha256", input::sha256_hex(svg.as_bytes()));
    r.check("svg_written", svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    Ok(r)
}
