//! Minimal deterministic SVG output: one polyline per plot, axis labels, and
//! an auto-scaled viewport. Byte-identical output for identical input is part
//! of the interface, so everything is formatted with fixed precision and no
//! timestamps or randomness.

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 45.0;

pub struct RenderedPlot {
    pub svg: String,
    /// True when one of the projected extents collapsed to (numerically)
    /// nothing, e.g. a planar curve projected onto its trivial coordinate.
    pub degenerate: bool,
}

pub fn render_polyline(points: &[(f64, f64)], x_label: &str, y_label: &str) -> RenderedPlot {
    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x_min = x_min.min(x);
        x_max = x_max.max(x);
        y_min = y_min.min(y);
        y_max = y_max.max(y);
    }
    let degenerate_x = (x_max - x_min).abs() <= 1e-12 * x_max.abs().max(1.0);
    let degenerate_y = (y_max - y_min).abs() <= 1e-12 * y_max.abs().max(1.0);
    if degenerate_x {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if degenerate_y {
        y_min -= 0.5;
        y_max += 0.5;
    }
    let pad_x = 0.05 * (x_max - x_min);
    let pad_y = 0.05 * (y_max - y_min);
    x_min -= pad_x;
    x_max += pad_x;
    y_min -= pad_y;
    y_max += pad_y;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let map = |x: f64, y: f64| -> (f64, f64) {
        (
            MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w,
            MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h,
        )
    };

    let mut coords = String::with_capacity(points.len() * 16);
    for (i, &(x, y)) in points.iter().enumerate() {
        let (px, py) = map(x, y);
        if i > 0 {
            coords.push(' ');
        }
        coords.push_str(&format!("{px:.3},{py:.3}"));
    }

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w}\" height=\"{plot_h}\" \
         fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.3}\" y=\"{:.3}\" text-anchor=\"middle\" font-family=\"monospace\" \
         font-size=\"14\">{x_label} [{x_min:.6}, {x_max:.6}]</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
    ));
    svg.push_str(&format!(
        "  <text x=\"14\" y=\"{:.3}\" text-anchor=\"middle\" font-family=\"monospace\" \
         font-size=\"14\" transform=\"rotate(-90 14 {:.3})\">{y_label} [{y_min:.6}, {y_max:.6}]</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
    ));
    svg.push_str(&format!(
        "  <polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"{coords}\"/>\n"
    ));
    svg.push_str("</svg>\n");

    RenderedPlot {
        svg,
        degenerate: degenerate_x || degenerate_y,
    }
}
