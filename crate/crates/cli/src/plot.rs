//! SVG drawings of two-dimensional mixed subdivisions.

use num_traits::ToPrimitive;
use sparse_resultant::error::{Error, Result};
use sparse_resultant::num::rat;
use sparse_resultant::subdivision::{CellType, MixedSubdivision};

use crate::render::cell_kind;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 30.0;
const PALETTE: [&str; 6] = ["#8ecae6", "#ffb703", "#90be6d", "#f28482", "#cdb4db", "#ffd6a5"];

/// One polygon per cell, filled by type and labelled with its index and type;
/// lattice points of `Δ` are drawn as dots.
pub fn subdivision_svg(sub: &MixedSubdivision) -> Result<String> {
    if sub.rank() != 2 {
        return Err(Error::Input("plotting needs a rank-2 family".into()));
    }
    let f = |r: &sparse_resultant::num::Rat| r.to_f64().unwrap_or(0.0);
    let all: Vec<(f64, f64)> = sub.cells.iter().flat_map(|c| c.polytope.vertices.iter().map(|v| (f(&v[0]), f(&v[1])))).collect();
    let (xmin, xmax) = all.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p.0), hi.max(p.0)));
    let (ymin, ymax) = all.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p.1), hi.max(p.1)));
    let scale = (SIZE - 2.0 * MARGIN) / (xmax - xmin).max(ymax - ymin).max(1.0);
    let px = |x: f64| MARGIN + (x - xmin) * scale;
    let py = |y: f64| SIZE - MARGIN - (y - ymin) * scale;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for (k, c) in sub.cells.iter().enumerate() {
        let mut pts: Vec<(f64, f64)> = c.polytope.vertices.iter().map(|v| (f(&v[0]), f(&v[1]))).collect();
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
        pts.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
        let color = match sub.classify_cell(c) {
            Ok(CellType::IMixed(i)) => PALETTE[i % PALETTE.len()],
            _ => "#dddddd",
        };
        let coords: Vec<String> = pts.iter().map(|p| format!("{:.2},{:.2}", px(p.0), py(p.1))).collect();
        out.push_str(&format!(
            "<polygon points=\"{}\" fill=\"{color}\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
            coords.join(" ")
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">C{k} {}</text>\n",
            px(cx),
            py(cy),
            cell_kind(sub, k)
        ));
    }
    for x in xmin.ceil() as i64..=xmax.floor() as i64 {
        for y in ymin.ceil() as i64..=ymax.floor() as i64 {
            let p = vec![rat(x), rat(y)];
            if sub.cells.iter().any(|c| c.polytope.contains(&p)) {
                out.push_str(&format!("<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"black\"/>\n", px(x as f64), py(y as f64)));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
