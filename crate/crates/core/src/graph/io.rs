use super::{CubicGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    /// Header `n m` followed by `m` lines `u v`.
    EdgeList,
    /// nauty sparse6, `:`-prefixed, multigraph capable.
    Sparse6,
}

impl std::str::FromStr for GraphFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "sparse6" | "s6" => Ok(GraphFormat::Sparse6),
            other => Err(GraphError::InvalidParams(format!("unknown graph format `{other}`"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<CubicGraph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Sparse6 => parse_sparse6(text),
    }
}

pub fn write_graph(g: &CubicGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Sparse6 => write_sparse6(g) + "\n",
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_edge_list(text: &str) -> Result<CubicGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than the declared {m} edges")));
        }
        edges.push(parse_pair(lineno, line)?);
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count(),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    CubicGraph::from_edges(n, edges)
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| parse_err(lineno, "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(lineno, format!("bad integer `{tok}`")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(lineno, "trailing tokens"));
    }
    Ok(pair)
}

fn write_edge_list(g: &CubicGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Bits per vertex index: the smallest k >= 1 with 2^k >= n.
fn index_width(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// sparse6 encoding without trailing newline. Edges are emitted sorted by
/// (larger endpoint, smaller endpoint), which fixes the output bytes for a
/// given labelled multigraph.
pub fn write_sparse6(g: &CubicGraph) -> String {
    let n = g.order();
    let k = index_width(n);
    let mut bits: Vec<bool> = Vec::new();
    let push_index = |bits: &mut Vec<bool>, x: usize| {
        for i in (0..k).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.max(v), u.min(v))).collect();
    edges.sort_unstable();
    let mut cur = 0;
    for (v, u) in edges {
        if v == cur {
            bits.push(false);
            push_index(&mut bits, u);
        } else if v == cur + 1 {
            cur += 1;
            bits.push(true);
            push_index(&mut bits, u);
        } else {
            cur = v;
            bits.push(true);
            push_index(&mut bits, v);
            bits.push(false);
            push_index(&mut bits, u);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad >= k && cur < n - 1 {
        // a run of ones this long would decode as an edge to n-1
        bits.push(false);
        let pad = (6 - bits.len() % 6) % 6;
        bits.extend(std::iter::repeat(true).take(pad));
    } else {
        bits.extend(std::iter::repeat(true).take(pad));
    }
    let mut out = vec![b':'];
    encode_order(n, &mut out);
    for chunk in bits.chunks(6) {
        let byte = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("sparse6 is printable ascii")
}

pub fn parse_sparse6(text: &str) -> Result<CubicGraph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(">>sparse6<<").unwrap_or(line);
    let body = line
        .strip_prefix(':')
        .ok_or_else(|| parse_err(1, "sparse6 string must start with ':'"))?;
    let data: Vec<u8> = body
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(parse_err(1, format!("byte {b} outside sparse6 range")))
            }
        })
        .collect::<Result<_, _>>()?;
    let (n, rest) = decode_order(&data)?;
    let k = index_width(n);
    let bits: Vec<bool> = rest
        .iter()
        .flat_map(|&d| (0..6).rev().map(move |i| (d >> i) & 1 == 1))
        .collect();
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| (acc << 1) | bit as usize);
        pos += 1 + k;
        if b {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    CubicGraph::from_edges(n, edges)
}

fn decode_order(data: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let short = || parse_err(1, "truncated vertex count");
    match data.first() {
        None => Err(short()),
        Some(&d) if d < 63 => Ok((d as usize, &data[1..])),
        Some(_) => {
            if data.get(1) == Some(&63) {
                let digits = data.get(2..8).ok_or_else(short)?;
                Ok((fold6(digits), &data[8..]))
            } else {
                let digits = data.get(1..4).ok_or_else(short)?;
                Ok((fold6(digits), &data[4..]))
            }
        }
    }
}

fn fold6(digits: &[u8]) -> usize {
    digits.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize)
}
