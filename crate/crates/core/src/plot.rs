//! Minimal SVG 1.1 writer for 2-d pictures. Exact rationals are converted to
//! floats only here, when scaling into the viewbox.

use crate::num::Rat;
use num_traits::ToPrimitive;
use std::fmt::Write;

enum Shape {
    Polygon(Vec<(f64, f64)>, &'static str),
    Line((f64, f64), (f64, f64), &'static str),
    Dot((f64, f64), &'static str),
    Label((f64, f64), String),
}

/// Collects shapes in world coordinates and renders them into a square viewbox.
#[derive(Default)]
pub struct Canvas {
    shapes: Vec<Shape>,
}

pub fn pt(x: &Rat, y: &Rat) -> (f64, f64) {
    (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0))
}

impl Canvas {
    pub fn polygon(&mut self, pts: Vec<(f64, f64)>, fill: &'static str) {
        self.shapes.push(Shape::Polygon(pts, fill));
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &'static str) {
        self.shapes.push(Shape::Line(a, b, stroke));
    }

    pub fn dot(&mut self, p: (f64, f64), fill: &'static str) {
        self.shapes.push(Shape::Dot(p, fill));
    }

    pub fn label(&mut self, p: (f64, f64), text: impl Into<String>) {
        self.shapes.push(Shape::Label(p, text.into()));
    }

    fn points(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for s in &self.shapes {
            match s {
                Shape::Polygon(p, _) => out.extend(p.iter().copied()),
                Shape::Line(a, b, _) => out.extend([*a, *b]),
                Shape::Dot(p, _) | Shape::Label(p, _) => out.push(*p),
            }
        }
        out
    }

    pub fn render(&self, title: &str) -> String {
        const SIZE: f64 = 400.0;
        const MARGIN: f64 = 30.0;
        let pts = self.points();
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let scale = (SIZE - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(1e-9);
        let tx = |x: f64| MARGIN + (x - x0) * scale;
        let ty = |y: f64| SIZE - MARGIN - (y - y0) * scale;
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(out, "<title>{}</title>", escape(title));
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbb"/>"##,
            tx(x0),
            ty(0.0),
            tx(x1),
            ty(0.0)
        );
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbb"/>"##,
            tx(0.0),
            ty(y0),
            tx(0.0),
            ty(y1)
        );
        for s in &self.shapes {
            match s {
                Shape::Polygon(p, fill) => {
                    let coords: Vec<String> = p.iter().map(|&(x, y)| format!("{:.2},{:.2}", tx(x), ty(y))).collect();
                    let _ = writeln!(
                        out,
                        r#"<polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="{fill}"/>"#,
                        coords.join(" ")
                    );
                }
                Shape::Line(a, b, stroke) => {
                    let _ = writeln!(
                        out,
                        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="2"/>"#,
                        tx(a.0),
                        ty(a.1),
                        tx(b.0),
                        ty(b.1)
                    );
                }
                Shape::Dot(p, fill) => {
                    let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}"/>"#, tx(p.0), ty(p.1));
                }
                Shape::Label(p, text) => {
                    let _ = writeln!(
                        out,
                        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"#,
                        tx(p.0) + 6.0,
                        ty(p.1) - 6.0,
                        escape(text)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
