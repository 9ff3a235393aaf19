//! Arc-diagram rendering.
//!
//! The river is a horizontal line with crossing `i` at `x = i`. Each road arc
//! is a semicircle on its side; the two rays leave vertically, turn away from
//! each other with a quarter circle of radius `0.4` spacing above the tallest
//! arc on their side, and run out to the edge of the picture. Coordinates are
//! printed with two decimals, so the output is byte-identical across runs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{MeanderError, Result};
use crate::model::{Arc, ArchDiagram, OpenMeander, Permutation, Ray, Side};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderFormat {
    #[default]
    Svg,
    Tikz,
}

impl RenderFormat {
    pub fn extension(self) -> &'static str {
        match self {
            RenderFormat::Svg => "svg",
            RenderFormat::Tikz => "tex",
        }
    }
}

impl FromStr for RenderFormat {
    type Err = MeanderError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "tikz" | "tex" => Ok(RenderFormat::Tikz),
            other => Err(MeanderError::Precondition(format!(
                "unknown render format {other:?} (expected svg or tikz)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub perm: Permutation,
    /// Distance between neighbouring crossings (SVG user units).
    pub spacing: f64,
    pub stroke_width: f64,
    pub format: RenderFormat,
}

impl RenderSpec {
    pub fn new(perm: Permutation) -> RenderSpec {
        RenderSpec {
            perm,
            spacing: 40.0,
            stroke_width: 2.0,
            format: RenderFormat::Svg,
        }
    }

    pub fn with_format(mut self, format: RenderFormat) -> RenderSpec {
        self.format = format;
        self
    }
}

/// Geometry in spacing units, shared by both back ends.
struct Layout {
    n: f64,
    diagram: ArchDiagram,
    /// Height of each ray's bend above (or below) the river.
    bend_height: [f64; 2],
    /// Whether the entry / exit ray turns left.
    turns_left: [bool; 2],
    reach_up: f64,
    reach_down: f64,
}

const BEND: f64 = 0.4;
const MARGIN: f64 = 1.0;

impl Layout {
    fn new(diagram: ArchDiagram) -> Layout {
        let tallest = |side: Side| {
            diagram
                .arcs(side)
                .iter()
                .map(|a| f64::from(a.hi - a.lo) / 2.0)
                .fold(0.0, f64::max)
        };
        let height = |r: &Ray| tallest(r.side) + 0.5;
        let bend_height = [height(&diagram.entry), height(&diagram.exit)];
        // On a shared side the rays must not cross, so the left one turns left.
        let turns_left = if diagram.entry.side == diagram.exit.side {
            let left_is_entry = diagram.entry.point < diagram.exit.point;
            [left_is_entry, !left_is_entry]
        } else {
            [true, false]
        };
        let reach = |side: Side| {
            let mut r = tallest(side);
            for (ray, h) in [(&diagram.entry, bend_height[0]), (&diagram.exit, bend_height[1])] {
                if ray.side == side {
                    r = r.max(h + BEND);
                }
            }
            r
        };
        Layout {
            n: diagram.order as f64,
            reach_up: reach(Side::Upper),
            reach_down: reach(Side::Lower),
            bend_height,
            turns_left,
            diagram,
        }
    }

    fn rays(&self) -> [(&'static str, &Ray, f64, bool); 2] {
        [
            ("entry", &self.diagram.entry, self.bend_height[0], self.turns_left[0]),
            ("exit", &self.diagram.exit, self.bend_height[1], self.turns_left[1]),
        ]
    }

    fn arcs(&self) -> impl Iterator<Item = (Side, &Arc)> {
        let up = self.diagram.upper.iter().map(|a| (Side::Upper, a));
        up.chain(self.diagram.lower.iter().map(|a| (Side::Lower, a)))
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Upper => "upper",
        Side::Lower => "lower",
    }
}

pub fn render_arc_diagram(spec: &RenderSpec) -> Result<String> {
    if !(spec.spacing.is_finite() && spec.spacing > 0.0) {
        return Err(MeanderError::Precondition(format!(
            "spacing must be positive, got {}",
            spec.spacing
        )));
    }
    let meander = OpenMeander::new(spec.perm.clone())?;
    let layout = Layout::new(meander.perm().arch_diagram());
    Ok(match spec.format {
        RenderFormat::Svg => svg(spec, &layout),
        RenderFormat::Tikz => tikz(spec, &layout),
    })
}

fn svg(spec: &RenderSpec, l: &Layout) -> String {
    let s = spec.spacing;
    let width = (l.n - 1.0 + 2.0 * MARGIN) * s;
    let height = (l.reach_up + l.reach_down + 2.0 * MARGIN) * s;
    let base = (MARGIN + l.reach_up) * s;
    let x = |p: u32| (f64::from(p) - 1.0 + MARGIN) * s;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, "<title>meander {}</title>", spec.perm);
    let _ = writeln!(
        out,
        r##"<line class="river" x1="0.00" y1="{base:.2}" x2="{width:.2}" y2="{base:.2}" stroke="#3b6fb6" stroke-width="{:.2}"/>"##,
        spec.stroke_width
    );
    let _ = writeln!(
        out,
        r#"<g class="road" fill="none" stroke="black" stroke-width="{:.2}">"#,
        spec.stroke_width
    );
    for (side, a) in l.arcs() {
        let r = f64::from(a.hi - a.lo) / 2.0 * s;
        let sweep = u8::from(side == Side::Upper);
        let _ = writeln!(
            out,
            r#"<path class="arc {}" d="M {:.2} {base:.2} A {r:.2} {r:.2} 0 0 {sweep} {:.2} {base:.2}"/>"#,
            side_name(side),
            x(a.lo),
            x(a.hi)
        );
    }
    for (name, ray, h, left) in l.rays() {
        let dir = if ray.side == Side::Upper { -1.0 } else { 1.0 };
        let x0 = x(ray.point);
        let y1 = base + dir * h * s;
        let rho = BEND * s;
        let x2 = if left { x0 - rho } else { x0 + rho };
        let y2 = y1 + dir * rho;
        let sweep = u8::from(left != (ray.side == Side::Upper));
        let edge = if left { 0.0 } else { width };
        let _ = writeln!(
            out,
            r#"<path class="ray {name}" d="M {x0:.2} {base:.2} L {x0:.2} {y1:.2} A {rho:.2} {rho:.2} 0 0 {sweep} {x2:.2} {y2:.2} L {edge:.2} {y2:.2}"/>"#
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="crossings" fill="black">"#);
    for p in 1..=l.diagram.order as u32 {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{base:.2}" r="{:.2}"/>"#,
            x(p),
            1.5 * spec.stroke_width
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

fn tikz(spec: &RenderSpec, l: &Layout) -> String {
    let left_edge = 1.0 - MARGIN;
    let right_edge = l.n + MARGIN;
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    let _ = writeln!(out, "% meander {}", spec.perm);
    let _ = writeln!(
        out,
        "\\begin{{tikzpicture}}[x={:.2}pt,y={:.2}pt,line width={:.2}pt]",
        spec.spacing, spec.spacing, spec.stroke_width
    );
    let _ = writeln!(out, "\\draw[blue!60!black] ({left_edge:.2},0) -- ({right_edge:.2},0);");
    for (side, a) in l.arcs() {
        let r = f64::from(a.hi - a.lo) / 2.0;
        let end = if side == Side::Upper { 0 } else { 360 };
        let _ = writeln!(
            out,
            "\\draw ({}.00,0) arc[start angle=180, end angle={end}, radius={r:.2}]; % {}",
            a.lo,
            side_name(side)
        );
    }
    for (name, ray, h, left) in l.rays() {
        let dir = if ray.side == Side::Upper { 1.0 } else { -1.0 };
        let (start, end) = match (left, ray.side) {
            (true, Side::Upper) => (0, 90),
            (false, Side::Upper) => (180, 90),
            (true, Side::Lower) => (0, -90),
            (false, Side::Lower) => (180, 270),
        };
        let edge = if left { left_edge } else { right_edge };
        let _ = writeln!(
            out,
            "\\draw ({p}.00,0) -- ({p}.00,{:.2}) arc[start angle={start}, end angle={end}, radius={BEND:.2}] -- ({edge:.2},{:.2}); % {name}",
            dir * h,
            dir * (h + BEND),
            p = ray.point
        );
    }
    for p in 1..=l.diagram.order {
        let _ = writeln!(out, "\\fill ({p}.00,0) circle[radius=0.06];");
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}

/// `meander_<order>_<first 12 hex digits of sha256(document)>.<ext>`.
pub fn file_name(spec: &RenderSpec, document: &str) -> String {
    let digest = Sha256::digest(document.as_bytes());
    let hex: String = digest.iter().take(6).map(|b| format!("{b:02x}")).collect();
    format!("meander_{}_{hex}.{}", spec.perm.order(), spec.format.extension())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(s: &str, format: RenderFormat) -> String {
        render_arc_diagram(&RenderSpec::new(s.parse().unwrap()).with_format(format)).unwrap()
    }

    #[test]
    fn figure_one_arcs() {
        let doc = render("3,2,1,6,5,4", RenderFormat::Svg);
        assert_eq!(doc.matches(r#"class="arc upper""#).count(), 2);
        assert_eq!(doc.matches(r#"class="arc lower""#).count(), 3);
        // lower arc {1,6}: radius 2.5 spacings
        assert!(doc.contains(r#"<path class="arc lower" d="M 40.00 "#));
        assert!(doc.contains("A 100.00 100.00 0 0 0 240.00"));
        assert_eq!(doc.matches("class=\"ray ").count(), 2);
    }

    #[test]
    fn single_crossing() {
        let doc = render("1", RenderFormat::Svg);
        assert_eq!(doc.matches("class=\"arc").count(), 0);
        assert!(doc.contains("ray entry") && doc.contains("ray exit"));
        assert_eq!(doc.matches("<circle").count(), 1);
    }

    #[test]
    fn deterministic_and_named() {
        let spec = RenderSpec::new("1,2,3".parse().unwrap());
        let a = render_arc_diagram(&spec).unwrap();
        assert_eq!(a, render_arc_diagram(&spec).unwrap());
        let name = file_name(&spec, &a);
        assert!(name.starts_with("meander_3_") && name.ends_with(".svg"));
        assert_eq!(name.len(), "meander_3_".len() + 12 + 4);
    }

    #[test]
    fn tikz_is_standalone() {
        let doc = render("1,4,3,2", RenderFormat::Tikz);
        assert!(doc.starts_with("\\documentclass[tikz]{standalone}"));
        assert!(doc.trim_end().ends_with("\\end{document}"));
        assert_eq!(doc.matches("arc[start angle=180").count() + doc.matches("arc[start angle=0").count(), 5);
    }

    #[test]
    fn rejects_invalid() {
        let spec = RenderSpec::new("2,1,3".parse().unwrap());
        assert!(matches!(render_arc_diagram(&spec), Err(MeanderError::NotMeandric { .. })));
    }
}
