//! SVG pictures of umbrellas and triangulations for `d = 2`.

use super::{Triangulation, Umbrella};
use crate::error::{Error, Result};
use crate::lattice::GkzMatrix;
use crate::num::Rat;
use crate::plot::{pt, Canvas};
use num_traits::{Signed, Zero};

fn require_plane(g: &GkzMatrix) -> Result<()> {
    if g.d() == 2 {
        Ok(())
    } else {
        Err(Error::PreconditionViolation("plots need d = 2".into()))
    }
}

/// Columns in grey, the scaled points `a_j / L_j` (positive weights) in blue,
/// umbrella facets as red segments. Zero weights are drawn as rays along `a_j`.
pub fn umbrella_svg(g: &GkzMatrix, u: &Umbrella) -> Result<String> {
    require_plane(g)?;
    let cols = g.matrix().columns_rat();
    let scaled: Vec<Option<(f64, f64)>> = cols
        .iter()
        .zip(u.weight.iter())
        .map(|(a, l)| l.is_positive().then(|| pt(&(&a[0] / l), &(&a[1] / l))))
        .collect();
    let reach = cols.iter().map(|a| pt(&a[0], &a[1])).fold(1.0f64, |m, (x, y)| m.max(x.abs()).max(y.abs()));
    let mut c = Canvas::default();
    c.dot((0.0, 0.0), "black");
    c.label((0.0, 0.0), "0");
    for (j, a) in cols.iter().enumerate() {
        c.dot(pt(&a[0], &a[1]), "#999");
        c.label(pt(&a[0], &a[1]), format!("a{}", j + 1));
        if let Some(p) = scaled[j] {
            c.dot(p, "#1f5fbf");
        } else if u.weight[j].is_zero() {
            let (x, y) = pt(&a[0], &a[1]);
            let norm = (x * x + y * y).sqrt().max(1e-9);
            c.line((0.0, 0.0), (2.0 * reach * x / norm, 2.0 * reach * y / norm), "#1f5fbf");
        }
    }
    for f in u.facets() {
        let mut pts: Vec<(f64, f64)> = f.columns.iter().filter_map(|&j| scaled[j]).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        for w in pts.windows(2) {
            c.line(w[0], w[1], "#c0392b");
        }
    }
    let weight: Vec<String> = u.weight.iter().map(crate::num::fmt_rat).collect();
    Ok(c.render(&format!("umbrella for L = ({})", weight.join(", "))))
}

/// Cells `conv(0, a_i, a_j)` shaded alternately.
pub fn triangulation_svg(g: &GkzMatrix, t: &Triangulation) -> Result<String> {
    require_plane(g)?;
    let cols = g.matrix().columns_rat();
    let mut c = Canvas::default();
    let zero = Rat::zero();
    for (k, cell) in t.cells.iter().enumerate() {
        let mut pts = vec![pt(&zero, &zero)];
        pts.extend(cell.iter().map(|&j| pt(&cols[j][0], &cols[j][1])));
        c.polygon(pts, if k % 2 == 0 { "#1f5fbf" } else { "#27ae60" });
    }
    for (j, a) in cols.iter().enumerate() {
        c.dot(pt(&a[0], &a[1]), "black");
        c.label(pt(&a[0], &a[1]), format!("a{}", j + 1));
    }
    Ok(c.render("regular triangulation"))
}
