use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use normcol::coloring::{EdgeClass, EdgeColoring};
use normcol::graph::CubicGraph;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;

fn style(class: Option<EdgeClass>) -> (&'static str, f64, &'static str) {
    match class {
        None => ("#555555", 1.5, ""),
        Some(EdgeClass::Poor) => ("#4a7bd0", 1.5, ""),
        Some(EdgeClass::Rich) => ("#2e8b57", 2.5, ""),
        Some(EdgeClass::Abnormal) => ("#d62728", 3.5, " stroke-dasharray=\"8 4\""),
    }
}

/// Static SVG with vertices on a circle. Parallel edges bend apart; edge
/// labels show colors when a coloring is given.
pub fn svg(g: &CubicGraph, coloring: Option<&EdgeColoring>, classes: Option<&[EdgeClass]>) -> String {
    let n = g.order().max(1);
    let center = SIZE / 2.0;
    let pos: Vec<(f64, f64)> = (0..g.order())
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
            (center + RADIUS * a.cos(), center + RADIUS * a.sin())
        })
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let key = (u.min(v), u.max(v));
        let copy = *seen.entry(key).and_modify(|c| *c += 1).or_insert(0);
        let (x1, y1) = pos[key.0];
        let (x2, y2) = pos[key.1];
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1e-9);
        // offsets 0, +30, -30, +60, ...
        let shift = if copy == 0 {
            0.0
        } else {
            30.0 * copy.div_ceil(2) as f64 * if copy % 2 == 1 { 1.0 } else { -1.0 }
        };
        let (cx, cy) = (mx - shift * (y2 - y1) / len, my + shift * (x2 - x1) / len);
        let (stroke, width, dash) = style(classes.map(|c| c[e]));
        let _ = writeln!(
            out,
            "<path d=\"M {x1:.2} {y1:.2} Q {cx:.2} {cy:.2} {x2:.2} {y2:.2}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width}\"{dash}><title>edge {e}</title></path>"
        );
        if let Some(c) = coloring {
            // the curve's midpoint sits halfway to the control point
            let (lx, ly) = ((mx + cx) / 2.0, (my + cy) / 2.0);
            let _ = writeln!(
                out,
                "<text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"{stroke}\">{}</text>",
                c.color(e)
            );
        }
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"10\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>"
        );
        let _ = writeln!(
            out,
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"10\" font-family=\"sans-serif\" text-anchor=\"middle\">{v}</text>",
            y + 3.5
        );
    }
    out.push_str("</svg>\n");
    out
}
