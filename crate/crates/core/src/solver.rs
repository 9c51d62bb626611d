//! Exact minimisation of abnormal edges over proper k-edge-colorings.
//!
//! The search colors one edge at a time. The next edge is the uncolored one
//! whose endpoints already see the most distinct colors, then the one with
//! the most colored neighbours, then the lowest id. Color names are
//! interchangeable, so the star of vertex 0 is fixed to 1, 2, 3 and a color
//! above the largest one in use may only be the next unused one. An edge is
//! classified once both endpoint stars are complete; the number of abnormal
//! edges classified so far is the lower bound.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{bit, EdgeColoring, Palette};
use crate::graph::{connectivity_report, CubicGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("exhaustive oracle limited to {limit} edges, graph has {edges}")]
    OracleTooLarge { edges: usize, limit: usize },
    #[error("no normal coloring with at most {limit} colors")]
    NoNormalColoringWithin { limit: u8 },
    #[error("search stopped at the node limit before deciding k = {k}")]
    Undecided { k: u8 },
    #[error("color budget {0} outside 1..=32")]
    BadColorBudget(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub colors: u8,
    /// Only colorings with at most this many abnormal edges are accepted.
    pub abnormal_budget: Option<usize>,
    pub node_limit: Option<u64>,
    /// Return the first coloring within the budget instead of proving
    /// optimality.
    pub first_solution: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            colors: 5,
            abnormal_budget: None,
            node_limit: None,
            first_solution: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SolveStatus {
    /// `best_count` is the exact minimum.
    Optimal,
    /// Fewer than three colors: a cubic star cannot be colored.
    Infeasible,
    /// Exhausted: every proper coloring exceeds the abnormal budget.
    OverBudget,
    /// Stopped early (node limit, or first solution above zero).
    Limit,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::OverBudget => "over-budget",
            SolveStatus::Limit => "limit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Abnormal edges of the witness, when there is one.
    pub best_count: Option<usize>,
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
}

struct Search<'a> {
    g: &'a CubicGraph,
    k: u8,
    colors: Vec<u8>,
    mask: Vec<Palette>,
    filled: Vec<u8>,
    uses: [u32; 33],
    top_color: u8,
    committed: usize,
    /// Colorings must have fewer than `bound` abnormal edges.
    bound: usize,
    best: Option<Vec<u8>>,
    nodes: u64,
    node_limit: u64,
    first_solution: bool,
    stopped: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a CubicGraph, cfg: &SearchConfig) -> Self {
        Search {
            g,
            k: cfg.colors,
            colors: vec![0; g.size()],
            mask: vec![0; g.order()],
            filled: vec![0; g.order()],
            uses: [0; 33],
            top_color: 0,
            committed: 0,
            bound: cfg.abnormal_budget.map_or(g.size() + 1, |b| b + 1),
            best: None,
            nodes: 0,
            node_limit: cfg.node_limit.unwrap_or(u64::MAX),
            first_solution: cfg.first_solution,
            stopped: false,
        }
    }

    fn abnormal(&self, e: usize) -> bool {
        let (u, v) = self.g.endpoints(e);
        (self.mask[u] | self.mask[v]).count_ones() == 4
    }

    /// Colors `e` and returns the number of abnormal edges it decides.
    fn assign(&mut self, e: usize, color: u8) -> usize {
        let (u, v) = self.g.endpoints(e);
        self.colors[e] = color;
        self.mask[u] |= bit(color);
        self.mask[v] |= bit(color);
        self.filled[u] += 1;
        self.filled[v] += 1;
        self.uses[color as usize] += 1;
        self.top_color = self.top_color.max(color);
        let delta = self.newly_decided(u, v);
        self.committed += delta;
        delta
    }

    fn unassign(&mut self, e: usize, delta: usize) {
        let (u, v) = self.g.endpoints(e);
        let color = self.colors[e];
        self.committed -= delta;
        self.colors[e] = 0;
        self.mask[u] &= !bit(color);
        self.mask[v] &= !bit(color);
        self.filled[u] -= 1;
        self.filled[v] -= 1;
        self.uses[color as usize] -= 1;
        while self.top_color > 0 && self.uses[self.top_color as usize] == 0 {
            self.top_color -= 1;
        }
    }

    /// Abnormal edges among those whose second endpoint star was just
    /// completed by coloring an edge between `u` and `v`.
    fn newly_decided(&self, u: usize, v: usize) -> usize {
        let mut seen = [usize::MAX; 6];
        let mut len = 0;
        let mut count = 0;
        for w in [u, v] {
            if self.filled[w] != 3 {
                continue;
            }
            for &f in self.g.incident(w) {
                let x = self.g.other_end(f, w);
                if self.filled[x] == 3 && !seen[..len].contains(&f) {
                    seen[len] = f;
                    len += 1;
                    count += usize::from(self.abnormal(f));
                }
            }
        }
        count
    }

    fn pick_edge(&self) -> Option<usize> {
        let mut best: Option<(u32, u8, usize)> = None;
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if self.colors[e] != 0 {
                continue;
            }
            let key = (
                (self.mask[u] | self.mask[v]).count_ones(),
                self.filled[u] + self.filled[v],
            );
            if best.map_or(true, |(s, f, _)| key > (s, f)) {
                best = Some((key.0, key.1, e));
            }
        }
        best.map(|(_, _, e)| e)
    }

    fn run(&mut self) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if self.nodes >= self.node_limit {
            self.stopped = true;
            return;
        }
        if self.committed >= self.bound {
            return;
        }
        let Some(e) = self.pick_edge() else {
            self.bound = self.committed;
            self.best = Some(self.colors.clone());
            if self.first_solution || self.bound == 0 {
                self.stopped = true;
            }
            return;
        };
        let (u, v) = self.g.endpoints(e);
        let forbidden = self.mask[u] | self.mask[v];
        let ceiling = self.k.min(self.top_color + 1);
        for color in 1..=ceiling {
            if forbidden & bit(color) != 0 {
                continue;
            }
            let delta = self.assign(e, color);
            self.run();
            self.unassign(e, delta);
            if self.stopped {
                return;
            }
        }
    }
}

/// Minimum of |N_G(c)| over proper `cfg.colors`-edge-colorings of `g`.
pub fn min_abnormal(g: &CubicGraph, cfg: &SearchConfig) -> SolveResult {
    if cfg.colors < 3 || cfg.colors > 32 {
        return SolveResult {
            status: SolveStatus::Infeasible,
            best_count: None,
            witness: None,
            nodes_explored: 0,
        };
    }
    let mut search = Search::new(g, cfg);
    let mut pre = Vec::new();
    if g.order() > 0 {
        for (i, &e) in g.incident(0).iter().enumerate() {
            pre.push((e, search.assign(e, i as u8 + 1)));
        }
    }
    search.run();
    let hit_limit = search.nodes >= search.node_limit;
    let witness = search
        .best
        .take()
        .map(|colors| EdgeColoring::new(cfg.colors, colors).expect("search colors in range"));
    let best_count = witness.as_ref().map(|_| search.bound);
    let status = match (&witness, hit_limit) {
        (Some(_), false) if !cfg.first_solution || search.bound == 0 => SolveStatus::Optimal,
        (Some(_), _) => SolveStatus::Limit,
        (None, true) => SolveStatus::Limit,
        (None, false) => SolveStatus::OverBudget,
    };
    SolveResult {
        status,
        best_count,
        witness,
        nodes_explored: search.nodes,
    }
}

/// A normal `k`-edge-coloring, or `None` when the exhaustive search finds none.
pub fn has_normal_k(g: &CubicGraph, k: u8) -> Option<EdgeColoring> {
    let cfg = SearchConfig {
        colors: k,
        abnormal_budget: Some(0),
        node_limit: None,
        first_solution: true,
    };
    min_abnormal(g, &cfg).witness
}

/// Largest color count tried for graphs with parallel edges.
pub const MULTIGRAPH_INDEX_LIMIT: u8 = 7;

/// Least `k` admitting a normal `k`-edge-coloring. Simple graphs always
/// have one (all colors distinct); multigraphs are scanned up to
/// [`MULTIGRAPH_INDEX_LIMIT`].
pub fn normal_chromatic_index(g: &CubicGraph) -> Result<(u8, EdgeColoring), SolveError> {
    let limit = if g.is_simple() {
        g.size().min(32) as u8
    } else {
        MULTIGRAPH_INDEX_LIMIT
    };
    for k in 3..=limit {
        if let Some(c) = has_normal_k(g, k) {
            return Ok((k, c));
        }
    }
    Err(SolveError::NoNormalColoringWithin { limit })
}

pub const ORACLE_EDGE_LIMIT: usize = 18;

/// Brute-force minimum over every proper coloring, enumerated in edge id
/// order with no bound. The only reduction is that colors are introduced in
/// increasing order of first use; the lexicographically first optimal
/// coloring always has that form, and it is the witness returned.
pub fn exhaustive_oracle(g: &CubicGraph, k: u8) -> Result<SolveResult, SolveError> {
    if g.size() > ORACLE_EDGE_LIMIT {
        return Err(SolveError::OracleTooLarge {
            edges: g.size(),
            limit: ORACLE_EDGE_LIMIT,
        });
    }
    if k == 0 || k > 32 {
        return Err(SolveError::BadColorBudget(k));
    }
    struct Walk<'a> {
        g: &'a CubicGraph,
        k: u8,
        colors: Vec<u8>,
        best: Option<(usize, Vec<u8>)>,
        leaves: u64,
    }
    impl Walk<'_> {
        fn count_abnormal(&self) -> usize {
            let star = |v: usize| -> u64 { self.g.incident(v).iter().fold(0, |m, &e| m | 1 << self.colors[e]) };
            self.g
                .edges()
                .iter()
                .filter(|&&(u, v)| (star(u) | star(v)).count_ones() == 4)
                .count()
        }

        fn go(&mut self, e: usize, used: u8) {
            if e == self.g.size() {
                self.leaves += 1;
                let count = self.count_abnormal();
                if self.best.as_ref().map_or(true, |(b, _)| count < *b) {
                    self.best = Some((count, self.colors.clone()));
                }
                return;
            }
            let (u, v) = self.g.endpoints(e);
            for color in 1..=self.k.min(used + 1) {
                let clash = self
                    .g
                    .incident(u)
                    .iter()
                    .chain(self.g.incident(v))
                    .any(|&f| f < e && self.colors[f] == color);
                if clash {
                    continue;
                }
                self.colors[e] = color;
                self.go(e + 1, used.max(color));
            }
            self.colors[e] = 0;
        }
    }
    let mut walk = Walk {
        g,
        k,
        colors: vec![0; g.size()],
        best: None,
        leaves: 0,
    };
    walk.go(0, 0);
    Ok(match walk.best {
        Some((count, colors)) => SolveResult {
            status: SolveStatus::Optimal,
            best_count: Some(count),
            witness: Some(EdgeColoring::new(k, colors).expect("colors in range")),
            nodes_explored: walk.leaves,
        },
        None => SolveResult {
            status: SolveStatus::Infeasible,
            best_count: None,
            witness: None,
            nodes_explored: 0,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub graph_id: usize,
    pub n: usize,
    pub m: usize,
    pub bridgeless: bool,
    pub cyc4: bool,
    pub status: SolveStatus,
    pub min_abnormal: Option<usize>,
    pub nodes: u64,
    /// Wall-clock time; excluded from equality-sensitive output by callers.
    pub millis: u128,
    pub witness: Option<EdgeColoring>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    /// Number of graphs per exact minimum.
    pub distribution: BTreeMap<usize, usize>,
    /// Graphs whose exact minimum is 1.
    pub single_abnormal: Vec<usize>,
    /// Graphs whose search stopped before optimality.
    pub undecided: Vec<usize>,
}

/// Solves every graph of the stream on `jobs` worker threads and reports
/// the distribution of minima, flagging any graph whose minimum is exactly 1.
pub fn scan_no_single_abnormal<I>(graphs: I, cfg: &SearchConfig, jobs: usize) -> ScanReport
where
    I: IntoIterator<Item = CubicGraph>,
    I::IntoIter: Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let stream = graphs.into_iter();
    let mut rows: Vec<ScanRow> = pool.install(move || {
        stream
            .enumerate()
            .par_bridge()
            .map(|(graph_id, g)| {
                let start = Instant::now();
                let result = min_abnormal(&g, cfg);
                let millis = start.elapsed().as_millis();
                let conn = connectivity_report(&g);
                ScanRow {
                    graph_id,
                    n: g.order(),
                    m: g.size(),
                    bridgeless: conn.bridgeless,
                    cyc4: conn.cyclically_4_edge_connected,
                    status: result.status,
                    min_abnormal: result.best_count,
                    nodes: result.nodes_explored,
                    millis,
                    witness: result.witness,
                }
            })
            .collect()
    });
    rows.sort_by_key(|r| r.graph_id);
    let mut distribution = BTreeMap::new();
    let mut single_abnormal = Vec::new();
    let mut undecided = Vec::new();
    for row in &rows {
        match (row.status, row.min_abnormal) {
            (SolveStatus::Optimal, Some(min)) => {
                *distribution.entry(min).or_insert(0) += 1;
                if min == 1 {
                    single_abnormal.push(row.graph_id);
                }
            }
            _ => undecided.push(row.graph_id),
        }
    }
    ScanReport {
        rows,
        distribution,
        single_abnormal,
        undecided,
    }
}
