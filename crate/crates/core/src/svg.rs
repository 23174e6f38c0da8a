//! Static SVG for 2D polytopes and fans. Coordinates are rounded `f64` for
//! drawing only; the exact data travels in a leading comment.

use std::fmt::Write;

use crate::fan::Fan;
use crate::polytope::SimplePolytope;
use crate::scalar::Scalar;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotPlanar(pub usize);

impl std::fmt::Display for NotPlanar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "only 2-dimensional objects can be drawn, got dimension {}", self.0)
    }
}

impl std::error::Error for NotPlanar {}

fn header(comment: &str) -> String {
    let safe = comment.replace("--", "- -");
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n<!-- {safe} -->\n"
    )
}

fn point_list(pts: &[Vec<Scalar>]) -> String {
    pts.iter()
        .map(|p| format!("({}, {})", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Affine map from a bounding box onto the viewport, `y` pointing up.
struct View {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl View {
    fn fit(pts: &[(f64, f64)]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        View {
            cx: (x0 + x1) / 2.0,
            cy: (y0 + y1) / 2.0,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            SIZE / 2.0 + (x - self.cx) * self.scale,
            SIZE / 2.0 - (y - self.cy) * self.scale,
        )
    }
}

fn xy(p: &[Scalar]) -> (f64, f64) {
    (p[0].to_f64(), p[1].to_f64())
}

fn fmt_pt((x, y): (f64, f64)) -> String {
    format!("{x:.3},{y:.3}")
}

pub fn polytope_svg(p: &SimplePolytope) -> Result<String, NotPlanar> {
    if p.dim() != 2 {
        return Err(NotPlanar(p.dim()));
    }
    let cycle = p.polygon_cycle().unwrap_or_else(|| p.vertex_points());
    let pts: Vec<(f64, f64)> = cycle.iter().map(|v| xy(v)).collect();
    let view = View::fit(&pts);
    let mut out = header(&format!("polygon vertices {}", point_list(&cycle)));
    let poly: Vec<String> = pts.iter().map(|&q| fmt_pt(view.map(q))).collect();
    writeln!(
        out,
        "<polygon points=\"{}\" fill=\"#dde6f0\" stroke=\"#1f3a5f\" stroke-width=\"2\"/>",
        poly.join(" ")
    )
    .unwrap();
    for (i, &q) in pts.iter().enumerate() {
        let (x, y) = view.map(q);
        writeln!(out, "<circle id=\"v{i}\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"#1f3a5f\"/>").unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Rays are drawn at unit Euclidean length; two-dimensional cones as wedges.
pub fn fan_svg(f: &Fan) -> Result<String, NotPlanar> {
    if f.dim() != 2 {
        return Err(NotPlanar(f.dim()));
    }
    let unit = |r: &[Scalar]| {
        let (x, y) = xy(r);
        let n = (x * x + y * y).sqrt();
        (x / n, y / n)
    };
    let view = View {
        cx: 0.0,
        cy: 0.0,
        scale: (SIZE - 2.0 * MARGIN) / 2.0,
    };
    let rays = f.rays();
    let mut out = header(&format!("fan rays {}", point_list(&rays)));
    for (k, cone) in f.cones_of_dim(2).into_iter().enumerate() {
        let r = cone.rays();
        let (a, b) = (view.map(unit(&r[0])), view.map(unit(&r[1])));
        let o = view.map((0.0, 0.0));
        writeln!(
            out,
            "<polygon id=\"c{k}\" points=\"{} {} {}\" fill=\"#eef3e2\" stroke=\"none\"/>",
            fmt_pt(o),
            fmt_pt(a),
            fmt_pt(b)
        )
        .unwrap();
    }
    for (k, r) in rays.iter().enumerate() {
        let o = view.map((0.0, 0.0));
        let e = view.map(unit(r));
        writeln!(
            out,
            "<line id=\"r{k}\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#3b5e1f\" stroke-width=\"2\"/>",
            o.0, o.1, e.0, e.1
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::normal_fan;

    #[test]
    fn deterministic_square() {
        let p = SimplePolytope::unit_square();
        let a = polytope_svg(&p).unwrap();
        assert_eq!(a, polytope_svg(&p).unwrap());
        assert_eq!(a.matches("<circle").count(), 4);
        let f = fan_svg(&normal_fan(&p).unwrap()).unwrap();
        assert_eq!(f.matches("<line").count(), 4);
        assert_eq!(f.matches("<polygon").count(), 4);
    }

    #[test]
    fn rejects_other_dimensions() {
        let c = SimplePolytope::cube(3, Scalar::zero(), Scalar::one()).unwrap();
        assert_eq!(polytope_svg(&c), Err(NotPlanar(3)));
    }
}
