use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use normcol::coloring::EdgeColoring;
use normcol::graph::{catalog, parse_graph, write_graph, CatalogName, CubicGraph, GraphFormat};
use sha2::{Digest, Sha256};

use crate::report::Source;
use crate::CliError;

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph file (edge list or sparse6)
    #[arg(
        long,
        value_name = "PATH",
        required_unless_present = "catalog",
        conflicts_with = "catalog"
    )]
    pub graph: Option<PathBuf>,
    /// Built-in graph: petersen, k4, q3, k33, prism(L)
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,
    /// Input format; guessed from the content when absent
    #[arg(long, value_parser = parse_format)]
    pub format: Option<GraphFormat>,
}

pub fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse::<GraphFormat>().map_err(|e| e.to_string())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn guess_format(text: &str) -> GraphFormat {
    let t = text.trim_start();
    if t.starts_with(':') || t.starts_with(">>sparse6<<") {
        GraphFormat::Sparse6
    } else {
        GraphFormat::EdgeList
    }
}

fn from_catalog(role: &'static str, name: &str) -> Result<(CubicGraph, Source), CliError> {
    let parsed: CatalogName = name
        .parse()
        .map_err(|e: normcol::graph::GraphError| CliError::Usage(e.to_string()))?;
    let g = catalog(&parsed).map_err(|e| CliError::Usage(e.to_string()))?;
    let text = write_graph(&g, GraphFormat::EdgeList);
    Ok((
        g,
        Source {
            role,
            origin: format!("catalog:{}", name.to_ascii_lowercase()),
            sha256: sha256_hex(text.as_bytes()),
        },
    ))
}

fn from_file(role: &'static str, path: &Path, format: Option<GraphFormat>) -> Result<(CubicGraph, Source), CliError> {
    let text = read(path)?;
    let format = format.unwrap_or_else(|| guess_format(&text));
    let g = parse_graph(&text, format).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok((
        g,
        Source {
            role,
            origin: path.display().to_string(),
            sha256: sha256_hex(text.as_bytes()),
        },
    ))
}

impl GraphArgs {
    pub fn load(&self) -> Result<(CubicGraph, Source), CliError> {
        match (&self.graph, &self.catalog) {
            (Some(path), _) => from_file("graph", path, self.format),
            (None, Some(name)) => from_catalog("graph", name),
            (None, None) => Err(CliError::Usage("one of --graph or --catalog is required".into())),
        }
    }
}

/// A secondary graph given as a catalog name or a file path.
pub fn load_named_or_path(role: &'static str, spec: &str) -> Result<(CubicGraph, Source), CliError> {
    if spec.parse::<CatalogName>().is_ok() && !Path::new(spec).exists() {
        from_catalog(role, spec)
    } else {
        from_file(role, Path::new(spec), None)
    }
}

pub fn load_coloring(path: &Path) -> Result<(EdgeColoring, Source), CliError> {
    let text = read(path)?;
    let c = EdgeColoring::from_text(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok((
        c,
        Source {
            role: "coloring",
            origin: path.display().to_string(),
            sha256: sha256_hex(text.as_bytes()),
        },
    ))
}

pub fn load_text(role: &'static str, path: &Path) -> Result<(String, Source), CliError> {
    let text = read(path)?;
    let sha256 = sha256_hex(text.as_bytes());
    Ok((
        text,
        Source {
            role,
            origin: path.display().to_string(),
            sha256,
        },
    ))
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}
