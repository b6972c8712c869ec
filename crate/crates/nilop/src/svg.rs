//! Deterministic SVG rendering of the triangle with overlays: grid lines,
//! central lines by slope, standard triangles, hexagons, and marked points.
//! Coordinates are formatted with exactly two decimals so output is
//! byte-stable across runs and platforms.

use crate::rat::Rat;
use crate::triangle::{PrPoint, Slope, TriangleError};
use serde::Deserialize;
use std::fmt::Write as _;

const SIDE: f64 = 60.0; // pixels per unit along the colevel axis
const MARGIN: f64 = 40.0;

/// Overlay description, deserialized from JSON by the command line.
#[derive(Debug, Default, Deserialize)]
pub struct Overlay {
    #[serde(default)]
    pub points: Vec<OverlayPoint>,
    #[serde(default)]
    pub lines: Vec<OverlayLine>,
    #[serde(default)]
    pub triangles: Vec<OverlayTriangle>,
    #[serde(default)]
    pub hexagons: Vec<OverlayPoint>,
}

#[derive(Debug, Deserialize)]
pub struct OverlayPoint {
    pub p: Rat,
    pub r: Rat,
    #[serde(default)]
    pub label: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct OverlayLine {
    /// Slope as "a/b", an integer, or "inf".
    pub phi: String,
}

#[derive(Debug, Deserialize)]
pub struct OverlayTriangle {
    /// Boundary distance of the standard triangle, and optionally the
    /// costandard one.
    pub d: Rat,
    #[serde(default)]
    pub costandard: bool,
}

struct Canvas {
    n: u32,
    out: String,
}

fn fmt2(x: f64) -> String {
    // round-half-away formatting with fixed two decimals
    format!("{:.2}", x + 0.0)
}

impl Canvas {
    fn new(n: u32) -> Canvas {
        let width = SIDE * n as f64 + 2.0 * MARGIN;
        let height = SIDE * n as f64 * 0.8660 + 2.0 * MARGIN;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
            fmt2(width),
            fmt2(height),
            fmt2(width),
            fmt2(height)
        );
        Canvas { n, out }
    }

    /// Triangle coordinates to pixels: the level axis runs up-left at 60
    /// degrees, the colevel axis runs right.
    fn xy(&self, p: f64, r: f64) -> (f64, f64) {
        let x = MARGIN + (r + p * 0.5) * SIDE;
        let y = MARGIN + (self.n as f64 - p) * SIDE * 0.8660;
        (x, y)
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), class: &str) {
        let _ = writeln!(
            self.out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" class=\"{}\"/>",
            fmt2(a.0),
            fmt2(a.1),
            fmt2(b.0),
            fmt2(b.1),
            class
        );
    }

    fn polygon(&mut self, pts: &[(f64, f64)], class: &str) {
        let mut coords = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            if i > 0 {
                coords.push(' ');
            }
            let _ = write!(coords, "{},{}", fmt2(*x), fmt2(*y));
        }
        let _ = writeln!(
            self.out,
            "<polygon points=\"{}\" class=\"{}\"/>",
            coords, class
        );
    }

    fn circle(&mut self, c: (f64, f64), radius: f64, class: &str) {
        let _ = writeln!(
            self.out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" class=\"{}\"/>",
            fmt2(c.0),
            fmt2(c.1),
            fmt2(radius),
            class
        );
    }

    fn text(&mut self, c: (f64, f64), content: &str) {
        let escaped = content
            .replace('&', "&amp;")
            .replace('<', "&lt;")
            .replace('>', "&gt;");
        let _ = writeln!(
            self.out,
            "<text x=\"{}\" y=\"{}\" class=\"label\">{}</text>",
            fmt2(c.0),
            fmt2(c.1),
            escaped
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Intersections of a central line of the given slope with the boundary.
fn central_line_endpoints(n: u32, phi: &Slope) -> ((f64, f64), (f64, f64)) {
    let c = n as f64 / 3.0;
    let (dp, dr) = match phi {
        Slope::Finite(a, b) => (*a as f64, *b as f64),
        Slope::Infinity => (1.0, 0.0),
        Slope::Central => (0.0, 0.0),
    };
    let exit = |dp: f64, dr: f64| -> f64 {
        let mut best = f64::INFINITY;
        if dp.abs() > 1e-12 {
            let s = -c / dp;
            if s > 0.0 {
                best = best.min(s);
            }
        }
        if dr.abs() > 1e-12 {
            let s = -c / dr;
            if s > 0.0 {
                best = best.min(s);
            }
        }
        let sum = dp + dr;
        if sum.abs() > 1e-12 {
            let s = (n as f64 - 2.0 * c) / sum;
            if s > 0.0 {
                best = best.min(s);
            }
        }
        best
    };
    let f = exit(dp, dr);
    let b = exit(-dp, -dr);
    ((c + f * dp, c + f * dr), (c - b * dp, c - b * dr))
}

/// Renders the triangle with the requested overlays. Fails when a point
/// falls outside.
pub fn render(n: u32, overlay: &Overlay) -> Result<String, TriangleError> {
    // Validate all overlay points first.
    for pt in overlay.points.iter().chain(overlay.hexagons.iter()) {
        PrPoint::new(pt.p, pt.r, n)?;
    }
    let mut c = Canvas::new(n);
    c.out.push_str(
        "<style>\n\
         .edge { stroke: #222222; stroke-width: 1.5; fill: none; }\n\
         .grid { stroke: #bbbbbb; stroke-width: 0.5; }\n\
         .central { stroke: #3366cc; stroke-width: 1.0; }\n\
         .delta { stroke: #cc6633; stroke-width: 1.0; fill: none; }\n\
         .nabla { stroke: #33aa66; stroke-width: 1.0; fill: none; }\n\
         .hexagon { stroke: #9933cc; stroke-width: 1.0; fill: none; }\n\
         .point { fill: #cc2222; }\n\
         .center { fill: #000000; }\n\
         .label { font-family: monospace; font-size: 10px; fill: #222222; }\n\
         </style>\n",
    );
    let nf = n as f64;
    // Grid: lines with p, r, q integral.
    for k in 1..n {
        let kf = k as f64;
        c.line(c.xy(kf, 0.0), c.xy(kf, nf - kf), "grid"); // p = k
        c.line(c.xy(0.0, kf), c.xy(nf - kf, kf), "grid"); // r = k
        c.line(c.xy(0.0, kf), c.xy(kf, 0.0), "grid"); // q = k
    }
    // Boundary.
    c.polygon(&[c.xy(0.0, 0.0), c.xy(0.0, nf), c.xy(nf, 0.0)], "edge");
    // Central lines.
    for l in &overlay.lines {
        let phi = match l.phi.as_str() {
            "inf" => Slope::Infinity,
            s => {
                let r = Rat::parse(s).ok_or(TriangleError::OutsideTriangle)?;
                Slope::finite(r.num(), r.den())
            }
        };
        let (a, b) = central_line_endpoints(n, &phi);
        c.line(c.xy(a.0, a.1), c.xy(b.0, b.1), "central");
    }
    // Standard and costandard triangles: both have sides on p = d, r = d
    // and q = n - d; for d beyond a third of n the same corners give the
    // inverted orientation.
    for t in &overlay.triangles {
        let d = t.d.to_f64();
        let third = n as f64 / 3.0;
        let pts = [c.xy(d, d), c.xy(d, nf - 2.0 * d), c.xy(nf - 2.0 * d, d)];
        let class = if t.costandard || d > third {
            "nabla"
        } else {
            "delta"
        };
        c.polygon(&pts, class);
    }
    // Hexagons: convex hull of the symmetry orbit of a seed point.
    for h in &overlay.hexagons {
        let seed = PrPoint::new(h.p, h.r, n)?;
        let mut orbit: Vec<(f64, f64)> = Vec::new();
        let mut x = seed;
        for _ in 0..3 {
            orbit.push((x.p.to_f64(), x.r.to_f64()));
            let refl = x.reflect();
            orbit.push((refl.p.to_f64(), refl.r.to_f64()));
            x = x.rho();
        }
        // order corners by angle about the center for a simple polygon
        let cx = n as f64 / 3.0;
        orbit.sort_by(|a, b| {
            let ang = |q: &(f64, f64)| (q.1 - cx).atan2(q.0 - cx);
            ang(a).partial_cmp(&ang(b)).unwrap()
        });
        orbit.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
        let pts: Vec<(f64, f64)> = orbit.iter().map(|&(p, r)| c.xy(p, r)).collect();
        c.polygon(&pts, "hexagon");
    }
    // Center.
    c.circle(c.xy(nf / 3.0, nf / 3.0), 3.0, "center");
    // Points with labels.
    for pt in &overlay.points {
        let pos = c.xy(pt.p.to_f64(), pt.r.to_f64());
        c.circle(pos, 2.5, "point");
        if let Some(label) = &pt.label {
            c.text((pos.0 + 4.0, pos.1 - 4.0), label);
        }
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_triangle_is_deterministic() {
        let a = render(3, &Overlay::default()).unwrap();
        let b = render(3, &Overlay::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        // grid lines for p, r, q in 1..n
        assert_eq!(a.matches("class=\"grid\"").count(), 6);
    }

    #[test]
    fn out_of_triangle_point_is_rejected() {
        let overlay: Overlay = serde_json::from_str(r#"{"points":[{"p":"5","r":"4"}]}"#).unwrap();
        assert!(render(6, &overlay).is_err());
    }

    #[test]
    fn standard_triangle_corners() {
        // the corners of the distance-5/4 triangle for n = 6 are (5/4, 5/4),
        // (5/4, 7/2), (7/2, 5/4); the rendered polygon contains the pixel
        // coordinates of (5/4, 7/2).
        let overlay: Overlay = serde_json::from_str(r#"{"triangles":[{"d":"5/4"}]}"#).unwrap();
        let svg = render(6, &overlay).unwrap();
        // (p, r) = (5/4, 2) lies on its lower edge: x = 40 + (2 + 0.625)*60
        assert!(svg.contains("class=\"delta\""));
        let corner_x = 40.0 + (3.5 + 0.625) * 60.0;
        assert!(svg.contains(&format!("{:.2}", corner_x)));
    }

    #[test]
    fn overlay_parses_all_sections() {
        let overlay: Overlay = serde_json::from_str(
            r#"{"points":[{"p":"1","r":"1","label":"x"}],
                "lines":[{"phi":"1/2"},{"phi":"inf"}],
                "triangles":[{"d":"1","costandard":true}],
                "hexagons":[{"p":"1","r":"2"}]}"#,
        )
        .unwrap();
        let svg = render(6, &overlay).unwrap();
        assert!(svg.contains("class=\"central\""));
        assert!(svg.contains("class=\"hexagon\""));
        assert!(svg.contains("class=\"nabla\""));
        assert!(svg.contains(">x</text>"));
    }
}
