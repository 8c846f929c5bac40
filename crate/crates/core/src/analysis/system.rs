//! The GKZ system `H_A(beta)`: Euler operators and box operators.

use crate::error::{Error, Result};
use crate::lattice::GkzMatrix;
use crate::num::{Int, Rat, RatVector};
use crate::toric::{toric_ideal_generators, Binomial};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkzSystem {
    pub matrix: GkzMatrix,
    pub beta: RatVector,
    /// Row `i` holds the coefficients of `E_i = sum_j a_ij theta_j`.
    pub euler: Vec<Vec<Int>>,
    pub boxes: Vec<Binomial>,
}

pub fn assemble(g: &GkzMatrix, beta: &RatVector) -> Result<GkzSystem> {
    if beta.len() != g.d() {
        return Err(Error::DimensionMismatch { expected: g.d(), found: beta.len() });
    }
    Ok(GkzSystem {
        matrix: g.clone(),
        beta: beta.clone(),
        euler: g.matrix().data().to_vec(),
        boxes: toric_ideal_generators(g)?,
    })
}

#[derive(Clone, Copy)]
enum Style {
    Plain,
    Latex,
}

fn rat_text(r: &Rat, style: Style) -> String {
    match style {
        Style::Latex if !r.is_integer() => format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom()),
        _ => crate::num::fmt_rat(r),
    }
}

fn euler_text(row: &[Int], beta: &Rat, style: Style) -> String {
    let mut s = String::new();
    for (j, a) in row.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        let var = match style {
            Style::Plain => format!("θ{}", j + 1),
            Style::Latex => format!("\\theta_{{{}}}", j + 1),
        };
        let mag = a.abs();
        let coeff = if mag.is_one() { String::new() } else { mag.to_string() };
        if s.is_empty() {
            s.push_str(if a.is_negative() { "-" } else { "" });
        } else {
            s.push_str(if a.is_negative() { " - " } else { " + " });
        }
        s.push_str(&coeff);
        s.push_str(&var);
    }
    if s.is_empty() {
        s.push('0');
    }
    // E_i - beta_i
    if !beta.is_zero() {
        let c = -beta;
        s.push_str(if c.is_negative() { " - " } else { " + " });
        s.push_str(&rat_text(&c.abs(), style));
    }
    s
}

fn box_text(b: &Binomial, style: Style) -> String {
    let side = |e: &[u32]| -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(j, &x)| match (style, x) {
                (Style::Plain, 1) => format!("∂{}", j + 1),
                (Style::Plain, _) => format!("∂{}^{}", j + 1, x),
                (Style::Latex, 1) => format!("\\partial_{{{}}}", j + 1),
                (Style::Latex, _) => format!("\\partial_{{{}}}^{{{}}}", j + 1, x),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.concat()
        }
    };
    format!("{} - {}", side(&b.plus), side(&b.minus))
}

impl GkzSystem {
    /// Operators `E_i - beta_i`, then the box operators, one per line.
    pub fn to_text(&self) -> Vec<String> {
        self.render(Style::Plain)
    }

    pub fn to_latex(&self) -> Vec<String> {
        self.render(Style::Latex)
    }

    fn render(&self, style: Style) -> Vec<String> {
        self.euler
            .iter()
            .zip(self.beta.iter())
            .map(|(row, b)| euler_text(row, b, style))
            .chain(self.boxes.iter().map(|b| box_text(b, style)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn kummer_operators() {
        let g = GkzMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        let sys = assemble(&g, &RatVector::new(vec![rat(-1, 2), rat(0, 1)])).unwrap();
        assert_eq!(sys.to_text(), vec!["θ1 + θ3 + 1/2", "θ2 + θ3", "∂1∂2 - ∂3"]);
        assert_eq!(sys.to_latex()[0], "\\theta_{1} + \\theta_{3} + \\frac{1}{2}");
        assert_eq!(sys.to_latex()[2], "\\partial_{1}\\partial_{2} - \\partial_{3}");
    }

    #[test]
    fn identity_system() {
        let g = GkzMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let sys = assemble(&g, &RatVector::zeros(2)).unwrap();
        assert_eq!(sys.to_text(), vec!["θ1", "θ2"]);
        assert!(sys.boxes.is_empty());
    }

    #[test]
    fn wrong_beta_length() {
        let g = GkzMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            assemble(&g, &RatVector::zeros(3)),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }
}
