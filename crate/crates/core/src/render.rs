//! Deterministic SVG rendering of shadow diagrams: the curve with
//! understrand breaks, and gleam/label annotations on internal regions.
//!
//! Shadows built from geometry carry crossing coordinates; abstract shadows
//! fall back to a barycentric layout pinned on the outer face and the
//! output is marked "schematic".

use std::collections::BTreeMap;

use crate::builders::Layout;
use crate::planar::{CrossingId, EdgeId};
use crate::shadow::{Label, ShadowedPolyhedron, SubSelection};

#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    /// Regions to highlight as a selection overlay.
    pub selection: Option<SubSelection>,
}

/// Renders the diagram as an SVG 1.1 document.
pub fn render_svg(
    shadow: &ShadowedPolyhedron,
    layout: Option<&Layout>,
    options: &RenderOptions,
) -> String {
    let map = shadow.map();
    let schematic = layout.is_none();
    let positions = match layout {
        Some(l) => l.crossings.clone(),
        None => barycentric_layout(map),
    };

    // Scale into a 640x640 viewport.
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &positions {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let span = ((max_x - min_x).max(max_y - min_y)).max(1e-6);
    let margin = 60.0;
    let scale = (640.0 - 2.0 * margin) / span;
    let tx = |x: f64| margin + (x - min_x) * scale;
    // SVG y grows downward; flip to keep counterclockwise on screen.
    let ty = |y: f64| 640.0 - margin - (y - min_y) * scale;
    let pos = |v: usize| (tx(positions[v].0), ty(positions[v].1));

    let mut svg = String::new();
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n",
    );
    svg.push_str("<rect width=\"640\" height=\"640\" fill=\"white\"/>\n");
    if schematic {
        svg.push_str("<text x=\"10\" y=\"20\" class=\"note\" fill=\"gray\">schematic</text>\n");
    }

    // Group parallel edges so their arcs bow apart.
    let mut multi: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
    for e in 0..map.edge_count() as u32 {
        let e = EdgeId(e);
        let [d, t] = map.edge_darts(e);
        let a = map.crossing_of(d).idx();
        let b = map.crossing_of(t).idx();
        multi.entry((a.min(b), a.max(b))).or_default().push(e);
    }

    for ((a, b), edges) in &multi {
        let n = edges.len();
        for (i, &e) in edges.iter().enumerate() {
            let [d, t] = map.edge_darts(e);
            let (x1, y1) = pos(map.crossing_of(d).idx());
            let (x2, y2) = pos(map.crossing_of(t).idx());
            let gap_start = !shadow.diagram.is_over(d);
            let gap_end = !shadow.diagram.is_over(t);
            let path = if a == b {
                // Loop edge: a small circle beside the crossing.
                let r = 40.0 + 26.0 * i as f64;
                format!(
                    "M {:.2} {:.2} c {:.2} {:.2}, {:.2} {:.2}, 0 0",
                    x1,
                    y1,
                    -r,
                    -r * 1.6,
                    r,
                    -r * 1.6
                )
            } else {
                // Bow perpendicular to the chord, spread by index.
                let offset = (i as f64 - (n as f64 - 1.0) / 2.0) * 40.0;
                let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
                let (dx, dy) = (x2 - x1, y2 - y1);
                let len = (dx * dx + dy * dy).sqrt().max(1e-6);
                let (nx, ny) = (-dy / len, dx / len);
                let (cx, cy) = (mx + nx * offset, my + ny * offset);
                // Trim the understrand ends.
                let trim = 0.14;
                let (sx, sy) = if gap_start {
                    (qbez(x1, cx, x2, trim), qbez(y1, cy, y2, trim))
                } else {
                    (x1, y1)
                };
                let (ex, ey) = if gap_end {
                    (qbez(x1, cx, x2, 1.0 - trim), qbez(y1, cy, y2, 1.0 - trim))
                } else {
                    (x2, y2)
                };
                format!(
                    "M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}",
                    sx, sy, cx, cy, ex, ey
                )
            };
            svg.push_str(&format!(
                "<path class=\"edge\" d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
            ));
        }
    }

    // Crossing glyphs.
    for v in 0..map.crossing_count() {
        let (x, y) = pos(v);
        svg.push_str(&format!(
            "<circle class=\"crossing\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.2\" fill=\"black\"/>\n"
        ));
    }

    // Region annotations: gleam (and label letter) at the barycenter of the
    // incident crossings.
    for region in map.regions() {
        if region.is_outer {
            continue;
        }
        let mut cx = 0.0;
        let mut cy = 0.0;
        for &d in &region.boundary {
            let (x, y) = pos(map.crossing_of(d).idx());
            cx += x;
            cy += y;
        }
        let n = region.boundary.len() as f64;
        let (cx, cy) = (cx / n, cy / n);
        let gl = shadow.gleams.twice_gleam(region.id).unwrap();
        let gleam_text = if gl % 2 == 0 {
            format!("{}", gl / 2)
        } else {
            format!("{gl}/2")
        };
        let letter = match shadow.label_of(region.id) {
            Some(Label::A) => "a ",
            Some(Label::B) => "b ",
            Some(Label::C) => "c ",
            Some(Label::Chamber) => "b ",
            _ => "",
        };
        let selected = options
            .selection
            .as_ref()
            .is_some_and(|s| s.contains(region.id));
        let fill = if selected { "crimson" } else { "dimgray" };
        let weight = if selected { " font-weight=\"bold\"" } else { "" };
        svg.push_str(&format!(
            "<text class=\"region-label\" x=\"{cx:.2}\" y=\"{cy:.2}\" fill=\"{fill}\"{weight} font-size=\"14\" text-anchor=\"middle\">{letter}{gleam_text}</text>\n"
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

/// One coordinate of a quadratic bezier at parameter t.
fn qbez(a: f64, c: f64, b: f64, t: f64) -> f64 {
    let u = 1.0 - t;
    u * u * a + 2.0 * u * t * c + t * t * b
}

/// Pins the crossings on the outer face boundary to a circle (first
/// occurrence order) and relaxes the rest to the average of their
/// neighbors. Deterministic: fixed iteration count, no randomness.
fn barycentric_layout(map: &crate::planar::DiskMap) -> Vec<(f64, f64)> {
    let n = map.crossing_count();
    let outer = &map.regions()[map.outer_region().idx()];
    let mut ring: Vec<usize> = Vec::new();
    for &d in &outer.boundary {
        let v = map.crossing_of(d).idx();
        if !ring.contains(&v) {
            ring.push(v);
        }
    }
    let mut pos = vec![(0.0f64, 0.0f64); n];
    let mut pinned = vec![false; n];
    let k = ring.len().max(1) as f64;
    for (i, &v) in ring.iter().enumerate() {
        let angle = std::f64::consts::TAU * (i as f64) / k;
        pos[v] = (angle.cos(), angle.sin());
        pinned[v] = true;
    }
    for _ in 0..200 {
        for v in 0..n {
            if pinned[v] {
                continue;
            }
            let mut ax = 0.0;
            let mut ay = 0.0;
            for d in map.crossing_darts(CrossingId(v as u32)) {
                let w = map.crossing_of(map.twin(d)).idx();
                ax += pos[w].0;
                ay += pos[w].1;
            }
            pos[v] = (ax / 4.0, ay / 4.0);
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::double_divide_with_layout;
    use crate::samples;
    use crate::shadow::{select_regions, SelectionPreset};

    #[test]
    fn x_shape_render_has_expected_glyphs_and_labels() {
        let divide = crate::builders::ingest_polyline_divide(&[
            crate::builders::PolylineComponent::open(&[(-2, 0), (2, 0)]),
            crate::builders::PolylineComponent::open(&[(0, -2), (0, 2)]),
        ])
        .unwrap();
        let (shadow, layout) = double_divide_with_layout(&divide).unwrap();
        let svg = render_svg(&shadow, Some(&layout), &RenderOptions::default());
        assert_eq!(svg.matches("class=\"crossing\"").count(), 4);
        assert_eq!(svg.matches("class=\"region-label\"").count(), 5);
        // Four gleam-0 digons and the gleam -1 square.
        assert_eq!(svg.matches(">c 0<").count(), 4);
        assert_eq!(svg.matches(">b -1<").count(), 1);
        // Exact coordinates provided, so not schematic.
        assert!(!svg.contains("schematic"));
    }

    #[test]
    fn schematic_fallback_and_selection_overlay() {
        let shadow = samples::fig15_shadow();
        let svg = render_svg(&shadow, None, &RenderOptions::default());
        assert!(svg.contains("schematic"));
        let (sel, _) = select_regions(&shadow, &SelectionPreset::Yac).unwrap();
        let svg_sel = render_svg(
            &shadow,
            None,
            &RenderOptions {
                selection: Some(sel),
            },
        );
        assert_eq!(svg_sel.matches("crimson").count(), 4);
        // Determinism.
        assert_eq!(svg, render_svg(&shadow, None, &RenderOptions::default()));
    }
}
