//! Deterministic SVG rendering of a chain with its Soddy circles.

use porism::{Chain, Circle};

/// Fixed-precision coordinate formatting (6 decimals).
fn num(x: f64) -> String {
    format!("{x:.6}")
}

fn circle_element(c: &Circle, stroke_width: f64) -> String {
    format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n",
        num(c.cx),
        num(c.cy),
        num(c.radius),
        num(stroke_width)
    )
}

/// One `<circle>` per chain circle followed by the inner and outer Soddy
/// circles; the viewBox fits the outer circle with a 5% margin.
pub fn chain_svg(chain: &Chain) -> String {
    let g = chain.gauge();
    let half = 1.05 * g.outer_radius();
    let stroke_width = g.outer_radius() / 200.0;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        num(-half),
        num(-half),
        num(2.0 * half),
        num(2.0 * half)
    );
    for c in chain.circles() {
        out.push_str(&circle_element(c, stroke_width));
    }
    out.push_str(&circle_element(&g.inner_circle(), stroke_width));
    out.push_str(&circle_element(&g.outer_circle(), stroke_width));
    out.push_str("</svg>\n");
    out
}
