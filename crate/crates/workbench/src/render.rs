//! Deterministic SVG pictures of boards, trajectories and crossings.

use std::fmt::Write;

use rider_core::{AugmentedTrajectory, Board, MoveType, Point2, Trajectory};

use crate::float_sim::{FloatPath, Pt};

#[derive(Debug, Clone, PartialEq)]
pub struct StrokeStyle {
    pub color: String,
    pub width: f64,
    /// SVG `stroke-dasharray`; `None` draws a solid line.
    pub dash: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub trajectories: Vec<Trajectory>,
    pub augmentations: Vec<AugmentedTrajectory>,
    pub float_paths: Vec<FloatPath>,
    pub crossings: Vec<Point2>,
    pub rigid_cycles: Vec<Vec<Point2>>,
    /// Styles for move types 1 and 2.
    pub styles: [StrokeStyle; 2],
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 480,
            height: 480,
            trajectories: Vec::new(),
            augmentations: Vec::new(),
            float_paths: Vec::new(),
            crossings: Vec::new(),
            rigid_cycles: Vec::new(),
            styles: [
                StrokeStyle { color: "#1f4e9c".into(), width: 1.5, dash: None },
                StrokeStyle { color: "#b8321f".into(), width: 1.5, dash: Some("6 4".into()) },
            ],
        }
    }
}

impl RenderSpec {
    pub fn style(&self, t: MoveType) -> &StrokeStyle {
        &self.styles[t.number() as usize - 1]
    }
}

struct Canvas {
    min: Pt,
    scale: f64,
    margin: f64,
    height: f64,
}

impl Canvas {
    fn new(board: &Board, spec: &RenderSpec) -> Canvas {
        let pts: Vec<Pt> = board.corners().iter().map(|p| p.to_f64()).collect();
        let min = pts.iter().fold((f64::INFINITY, f64::INFINITY), |m, p| (m.0.min(p.0), m.1.min(p.1)));
        let max = pts.iter().fold((f64::NEG_INFINITY, f64::NEG_INFINITY), |m, p| (m.0.max(p.0), m.1.max(p.1)));
        let margin = 40.0;
        let w = f64::from(spec.width) - 2.0 * margin;
        let h = f64::from(spec.height) - 2.0 * margin;
        let scale = (w / (max.0 - min.0)).min(h / (max.1 - min.1));
        Canvas { min, scale, margin, height: f64::from(spec.height) }
    }

    fn map(&self, p: Pt) -> (String, String) {
        let x = self.margin + (p.0 - self.min.0) * self.scale;
        let y = self.height - self.margin - (p.1 - self.min.1) * self.scale;
        (num(x), num(y))
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn stroke_attrs(s: &StrokeStyle) -> String {
    let mut a = format!(r#"stroke="{}" stroke-width="{}" fill="none""#, s.color, s.width);
    if let Some(d) = &s.dash {
        write!(a, r#" stroke-dasharray="{d}""#).unwrap();
    }
    a
}

fn line(out: &mut String, c: &Canvas, a: Pt, b: Pt, attrs: &str) {
    let (x1, y1) = c.map(a);
    let (x2, y2) = c.map(b);
    writeln!(out, r#"    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {attrs}/>"#).unwrap();
}

fn points_attr(c: &Canvas, pts: &[Pt]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = c.map(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Segments of `points` in order, closing the loop when `closed`, each
/// drawn in the style of its move type.
fn segments(out: &mut String, c: &Canvas, spec: &RenderSpec, points: &[Pt], first: MoveType, closed: bool, extra: &str) {
    let n = points.len();
    let count = if closed && n > 2 { n } else { n.saturating_sub(1) };
    for i in 0..count {
        let attrs = format!("{}{extra}", stroke_attrs(spec.style(first.after(i))));
        line(out, c, points[i], points[(i + 1) % n], &attrs);
    }
}

pub fn render_svg(board: &Board, spec: &RenderSpec) -> String {
    let c = Canvas::new(board, spec);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    )
    .unwrap();
    let corners: Vec<Pt> = board.corners().iter().map(|p| p.to_f64()).collect();
    writeln!(out, r##"  <polygon class="board" points="{}" fill="#fafafa" stroke="black" stroke-width="2"/>"##, points_attr(&c, &corners))
        .unwrap();
    for cycle in &spec.rigid_cycles {
        let pts: Vec<Pt> = cycle.iter().map(|p| p.to_f64()).collect();
        writeln!(
            out,
            r##"  <polygon class="rigid-cycle" points="{}" fill="none" stroke="#f2c94c" stroke-width="8" stroke-linejoin="round"/>"##,
            points_attr(&c, &pts)
        )
        .unwrap();
    }
    for a in &spec.augmentations {
        out.push_str("  <g class=\"augmentation\" opacity=\"0.45\">\n");
        let pts: Vec<Pt> = a.points.iter().map(|p| p.to_f64()).collect();
        segments(&mut out, &c, spec, &pts, a.first_move_type, false, "");
        out.push_str("  </g>\n");
    }
    for t in &spec.trajectories {
        out.push_str("  <g class=\"trajectory\">\n");
        let pts: Vec<Pt> = t.points.iter().map(|p| p.to_f64()).collect();
        segments(&mut out, &c, spec, &pts, t.first_move_type, t.is_cyclic(), "");
        out.push_str("  </g>\n");
    }
    for f in &spec.float_paths {
        out.push_str("  <g class=\"float-path\">\n");
        segments(&mut out, &c, spec, &f.points, f.first_move_type, false, r#" stroke-opacity="0.6""#);
        out.push_str("  </g>\n");
    }
    for p in &spec.crossings {
        let (x, y) = c.map(p.to_f64());
        writeln!(out, r#"  <circle class="crossing" cx="{x}" cy="{y}" r="4" fill="white" stroke="black" stroke-width="1.5"/>"#)
            .unwrap();
        writeln!(out, r#"  <text x="{x}" y="{y}" dx="6" dy="-6" font-family="monospace" font-size="11">({p})</text>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
