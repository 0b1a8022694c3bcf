//! SVG pictures of developments.
//!
//! Coordinates stay exact until this point; here they are converted to
//! floats, scaled by [`SCALE`] pixels per edge, flipped so that `y` points
//! up, and shifted so that the picture starts at [`MARGIN`]. All numbers
//! are printed with six decimals, so the output is a pure function of the
//! development.

use std::fmt::Write;

use crate::develop::Development;

pub const SCALE: f64 = 40.0;
pub const MARGIN: f64 = 20.0;

pub fn render_development(dev: &Development) -> String {
    let pts: Vec<(f64, f64)> = dev.coords.iter().map(|z| z.to_cartesian()).collect();
    let used = dev.faces.iter().flatten().copied();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for v in used {
        let (x, y) = pts[v];
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if x0 > x1 {
        (x0, x1, y0, y1) = (0.0, 0.0, 0.0, 0.0);
    }
    let map = |(x, y): (f64, f64)| (MARGIN + SCALE * (x - x0), MARGIN + SCALE * (y1 - y));
    let width = 2.0 * MARGIN + SCALE * (x1 - x0);
    let height = 2.0 * MARGIN + SCALE * (y1 - y0);

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.6}" height="{height:.6}" viewBox="0 0 {width:.6} {height:.6}">"#
    )
    .unwrap();
    writeln!(s, r##"<g fill="#eef2f7" stroke="#334455" stroke-width="1.000000">"##).unwrap();
    for f in &dev.faces {
        let p: Vec<String> = f
            .iter()
            .map(|&v| {
                let (x, y) = map(pts[v]);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        writeln!(s, r#"<polygon points="{}"/>"#, p.join(" ")).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    if let Some((p1, p2)) = dev.cut_points() {
        for p in [p1, p2] {
            let (x, y) = map(p.to_cartesian());
            writeln!(s, r##"<circle cx="{x:.6}" cy="{y:.6}" r="4.000000" fill="#2266cc"/>"##).unwrap();
        }
    }
    if let Some(c) = dev.cone_image() {
        let (x, y) = map(c.to_cartesian());
        writeln!(s, r##"<circle cx="{x:.6}" cy="{y:.6}" r="5.000000" fill="#cc2222"/>"##).unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}
