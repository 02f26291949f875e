//! The lozenge in a sheared frame: lattice direction `x` points down-right at
//! 30° below horizontal, `y` points straight up, both 20 px long.

use std::collections::HashSet;
use std::fmt::Write;

use super::{PathTuple, RegionSpec};
use crate::error::Result;

const EDGE: f64 = 20.0;
const MARGIN: f64 = 10.0;

const WHITE: &str = "#ffffff";
const LIGHT: &str = "#d0d0d0";
const DARK: &str = "#606060";
const RED: &str = "#d03030";

struct Frame {
    height: i64,
}

impl Frame {
    fn point(&self, x: i64, y: i64) -> (f64, f64) {
        let px = MARGIN + x as f64 * EDGE * 3f64.sqrt() / 2.0;
        let py = MARGIN + (self.height - y) as f64 * EDGE + x as f64 * EDGE / 2.0;
        (px, py)
    }

    fn polygon(&self, class: &str, fill: &str, pts: &[(i64, i64)]) -> String {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| {
                let (px, py) = self.point(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        format!(
            "  <polygon class=\"{class}\" points=\"{}\" fill=\"{fill}\" stroke=\"#000\" stroke-width=\"0.8\"/>\n",
            coords.join(" ")
        )
    }
}

/// Lower triangle of cell `(x, y)`.
fn lower(x: i64, y: i64) -> [(i64, i64); 3] {
    [(x, y), (x + 1, y), (x + 1, y + 1)]
}

/// Upper triangle of cell `(x, y)`.
fn upper(x: i64, y: i64) -> [(i64, i64); 3] {
    [(x, y), (x + 1, y + 1), (x, y + 1)]
}

/// SVG of the lozenge, its `2n` black triangles and, given a path tuple,
/// the rhombi it induces.
pub fn render_region(region: &RegionSpec, tuple: Option<&PathTuple>) -> Result<String> {
    region.check_domain()?;
    let (w, h) = (region.width(), region.height());
    let frame = Frame { height: h.max(0) };
    let (far_x, far_y) = frame.point(w, 0);
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0}\" height=\"{:.0}\" data-width=\"{w}\" data-height=\"{h}\">",
        far_x + MARGIN,
        far_y + MARGIN
    )
    .unwrap();
    out.push_str(&frame.polygon("lozenge", "none", &[(0, 0), (w, 0), (w, h), (0, h)]));

    if let Some(tuple) = tuple {
        let visited: HashSet<(i64, i64)> = tuple.paths.iter().flatten().copied().collect();
        for x in 0..w {
            for y in 0..h {
                if !visited.contains(&(x, y)) {
                    out.push_str(&frame.polygon("rhombus other", DARK, &[(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]));
                }
            }
        }
        for path in &tuple.paths {
            for (k, pair) in path.windows(2).enumerate() {
                let (a, b) = (pair[0], pair[1]);
                let last = k + 2 == path.len();
                let left = b.0 < a.0;
                let (class, fill) = match (last, left) {
                    (true, _) => ("rhombus end", RED),
                    (false, true) => ("rhombus left", WHITE),
                    (false, false) => ("rhombus up", LIGHT),
                };
                let pts = outline(&upper(a.0, a.1), &lower(b.0, b.1));
                out.push_str(&frame.polygon(class, fill, &pts));
            }
        }
    }

    let base = region.lambda + region.s;
    for x in base..base + region.n as i64 {
        out.push_str(&frame.polygon("triangle", "#000", &lower(x, 0)));
    }
    for y in region.t..region.t + region.n as i64 {
        out.push_str(&frame.polygon("triangle", "#000", &upper(0, y)));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Four corners of two triangles sharing an edge, in cyclic order.
fn outline(a: &[(i64, i64); 3], b: &[(i64, i64); 3]) -> Vec<(i64, i64)> {
    let shared: Vec<(i64, i64)> = a.iter().filter(|p| b.contains(p)).copied().collect();
    let lone_a = *a.iter().find(|p| !shared.contains(p)).expect("triangles share an edge");
    let lone_b = *b.iter().find(|p| !shared.contains(p)).expect("triangles share an edge");
    vec![lone_a, shared[0], lone_b, shared[1]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::path_tuples;

    fn attr(svg: &str, name: &str) -> i64 {
        let key = format!("{name}=\"");
        let at = svg.find(&key).unwrap() + key.len();
        svg[at..].split('"').next().unwrap().parse().unwrap()
    }

    #[test]
    fn lozenge_dimensions() {
        let svg = render_region(&RegionSpec::new(3, 2, 4, 2), None).unwrap();
        assert_eq!((attr(&svg, "data-width"), attr(&svg, "data-height")), (9, 6));
        let svg = render_region(&RegionSpec::new(4, 2, 4, 2), None).unwrap();
        assert_eq!((attr(&svg, "data-width"), attr(&svg, "data-height")), (10, 6));
    }

    #[test]
    fn triangle_count() {
        for n in 1..=4 {
            let r = RegionSpec::new(1, 1, n, 1);
            let tuple = path_tuples(&r, &[], &[], 1).unwrap().pop();
            let svg = render_region(&r, tuple.as_ref()).unwrap();
            assert_eq!(svg.matches("class=\"triangle\"").count(), 2 * n);
        }
    }

    #[test]
    fn rhombi_tile_the_lozenge() {
        let r = RegionSpec::new(1, 1, 2, 1);
        let tuple = path_tuples(&r, &[], &[], 1).unwrap().pop().unwrap();
        let svg = render_region(&r, Some(&tuple)).unwrap();
        let rhombi = svg.matches("class=\"rhombus").count() as i64;
        // each rhombus covers two unit triangles, each triangle one
        assert_eq!(2 * rhombi + 2 * r.n as i64, 2 * r.width() * r.height());
        assert_eq!(svg.matches("rhombus end").count(), r.n);
    }

    #[test]
    fn well_formed() {
        let svg = render_region(&RegionSpec::new(0, 0, 2, 0), None).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), svg.matches("/>").count());
    }
}
