//! SVG rendering of two-dimensional Newton polyhedra: axes and integer
//! grid, the shaded region clipped to the viewport, the staircase boundary,
//! and every vertex dotted and labeled with its exact coordinates.

use num_traits::ToPrimitive;
use singulens::arith::{rat_display, Rat};
use singulens::polyhedron::Polyhedron;
use singulens::Error;

const UNIT: f64 = 48.0;
const MARGIN: f64 = 1.2;

fn to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(0.0) / r.denom().to_f64().unwrap_or(1.0)
}

/// Clip a convex polygon against the half-plane `nx*x + ny*y >= c`.
fn clip_polygon(poly: &[(f64, f64)], nx: f64, ny: f64, c: f64) -> Vec<(f64, f64)> {
    let inside = |p: (f64, f64)| nx * p.0 + ny * p.1 >= c - 1e-9;
    let mut out = Vec::new();
    for (i, &p) in poly.iter().enumerate() {
        let q = poly[(i + 1) % poly.len()];
        let (pin, qin) = (inside(p), inside(q));
        if pin {
            out.push(p);
        }
        if pin != qin {
            let fp = nx * p.0 + ny * p.1 - c;
            let fq = nx * q.0 + ny * q.1 - c;
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

/// Render a two-dimensional Newton polyhedron as an SVG document.
pub fn newton_svg(p: &Polyhedron) -> Result<String, Error> {
    let ambient = p
        .vertices()
        .first()
        .map(Vec::len)
        .or_else(|| p.rays().first().map(Vec::len))
        .unwrap_or(0);
    if ambient != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: ambient });
    }

    let verts: Vec<(f64, f64)> = p
        .vertices()
        .iter()
        .map(|v| (to_f64(&v[0]), to_f64(&v[1])))
        .collect();
    let max_x = verts.iter().map(|v| v.0).fold(1.0, f64::max);
    let max_y = verts.iter().map(|v| v.1).fold(1.0, f64::max);
    let min_x = verts.iter().map(|v| v.0).fold(0.0, f64::min);
    let min_y = verts.iter().map(|v| v.1).fold(0.0, f64::min);
    // World window, generous enough to show the recession directions.
    let (x0, x1) = (min_x - MARGIN, max_x + 2.0 + MARGIN);
    let (y0, y1) = (min_y - MARGIN, max_y + 2.0 + MARGIN);

    let width = (x1 - x0) * UNIT;
    let height = (y1 - y0) * UNIT;
    let px = |x: f64| (x - x0) * UNIT;
    let py = |y: f64| (y1 - y) * UNIT;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Integer grid.
    let mut grid = String::new();
    let mut gx = x0.ceil();
    while gx <= x1 {
        grid.push_str(&format!(
            "M {:.1} {:.1} L {:.1} {:.1} ",
            px(gx),
            py(y0),
            px(gx),
            py(y1)
        ));
        gx += 1.0;
    }
    let mut gy = y0.ceil();
    while gy <= y1 {
        grid.push_str(&format!(
            "M {:.1} {:.1} L {:.1} {:.1} ",
            px(x0),
            py(gy),
            px(x1),
            py(gy)
        ));
        gy += 1.0;
    }
    svg.push_str(&format!(
        "  <path d=\"{}\" stroke=\"#e0e0e0\" stroke-width=\"1\" fill=\"none\"/>\n",
        grid.trim_end()
    ));

    // Shaded region: the window rectangle clipped by every facet.
    let mut region = vec![(x0, y0), (x1, y0), (x1, y1), (x0, y1)];
    for facet in p.facets() {
        let (nx, ny) = (facet.normal[0] as f64, facet.normal[1] as f64);
        region = clip_polygon(&region, nx, ny, to_f64(&facet.offset));
        if region.is_empty() {
            break;
        }
    }
    if !region.is_empty() {
        let points: Vec<String> = region
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", px(x), py(y)))
            .collect();
        svg.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"#cfe0f5\" fill-opacity=\"0.8\" stroke=\"none\"/>\n",
            points.join(" ")
        ));
    }

    // Axes on top of the shading.
    svg.push_str(&format!(
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#606060\" stroke-width=\"1.5\"/>\n",
        px(x0), py(0.0), px(x1), py(0.0)
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#606060\" stroke-width=\"1.5\"/>\n",
        px(0.0), py(y0), px(0.0), py(y1)
    ));

    // Staircase boundary: vertices in boundary order (x ascending), with the
    // two unbounded edges extended along the recession rays to the window.
    let mut order: Vec<usize> = (0..verts.len()).collect();
    order.sort_by(|&a, &b| {
        verts[a]
            .0
            .partial_cmp(&verts[b].0)
            .unwrap()
            .then(verts[b].1.partial_cmp(&verts[a].1).unwrap())
    });
    if !order.is_empty() {
        let rays = p.rays();
        let mut path = String::new();
        let first = verts[order[0]];
        let last = verts[*order.last().unwrap()];
        // Steepest ray leaves the leftmost vertex, shallowest the rightmost.
        let angle = |r: &Vec<i64>| (r[1] as f64).atan2(r[0] as f64);
        let up = rays
            .iter()
            .max_by(|a, b| angle(a).partial_cmp(&angle(b)).unwrap());
        let flat = rays
            .iter()
            .min_by(|a, b| angle(a).partial_cmp(&angle(b)).unwrap());
        if let Some(r) = up {
            let t = ray_reach(first, (r[0] as f64, r[1] as f64), x0, x1, y0, y1);
            path.push_str(&format!(
                "M {:.1} {:.1} ",
                px(first.0 + t * r[0] as f64),
                py(first.1 + t * r[1] as f64)
            ));
            path.push_str(&format!("L {:.1} {:.1} ", px(first.0), py(first.1)));
        } else {
            path.push_str(&format!("M {:.1} {:.1} ", px(first.0), py(first.1)));
        }
        for &i in order.iter().skip(1) {
            path.push_str(&format!("L {:.1} {:.1} ", px(verts[i].0), py(verts[i].1)));
        }
        if let Some(r) = flat {
            let t = ray_reach(last, (r[0] as f64, r[1] as f64), x0, x1, y0, y1);
            path.push_str(&format!(
                "L {:.1} {:.1}",
                px(last.0 + t * r[0] as f64),
                py(last.1 + t * r[1] as f64)
            ));
        }
        svg.push_str(&format!(
            "  <path d=\"{}\" stroke=\"#1f4e8c\" stroke-width=\"2.5\" fill=\"none\"/>\n",
            path.trim_end()
        ));
    }

    // Vertex dots and exact coordinate labels.
    for (i, v) in p.vertices().iter().enumerate() {
        let (x, y) = verts[i];
        svg.push_str(&format!(
            "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"4\" fill=\"#1f4e8c\"/>\n",
            px(x),
            py(y)
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"14\">({}, {})</text>\n",
            px(x) + 8.0,
            py(y) - 8.0,
            rat_display(&v[0]),
            rat_display(&v[1]),
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Largest parameter t with start + t*dir still inside the window.
fn ray_reach(
    start: (f64, f64),
    dir: (f64, f64),
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
) -> f64 {
    let mut t = f64::INFINITY;
    if dir.0 > 0.0 {
        t = t.min((x1 - start.0) / dir.0);
    } else if dir.0 < 0.0 {
        t = t.min((x0 - start.0) / dir.0);
    }
    if dir.1 > 0.0 {
        t = t.min((y1 - start.1) / dir.1);
    } else if dir.1 < 0.0 {
        t = t.min((y0 - start.1) / dir.1);
    }
    if t.is_finite() {
        t.max(0.0)
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use singulens::polyhedron::standard_orthant_rays;

    #[test]
    fn renders_a_simplex_with_labels() {
        let p = Polyhedron::hull_lattice(
            &[vec![2, 0], vec![0, 2]],
            &standard_orthant_rays(2),
        )
        .unwrap();
        let svg = newton_svg(&p).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("(2, 0)"));
        assert!(svg.contains("(0, 2)"));
        assert!(svg.contains("<polygon"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn refuses_other_dimensions() {
        let p = Polyhedron::hull_lattice(
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            &standard_orthant_rays(3),
        )
        .unwrap();
        assert_eq!(
            newton_svg(&p).unwrap_err(),
            Error::DimensionMismatch { expected: 2, got: 3 }
        );
    }
}
