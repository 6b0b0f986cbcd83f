//! Point clouds of irreducible `(n, 2)` positions, one column per gap `s`,
//! with their overlay lines, emitted as CSV, JSON or standalone SVG.

use std::fmt::Write as _;

use serde::Serialize;

use crate::leamer::{all_columns, reducibility_ceiling};
use crate::par::Execution;
use crate::semigroup::{GenArithParams, NumericalSemigroup};
use crate::witness::params_describe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Point {
    pub s: i64,
    pub n: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Overlay {
    /// The line `n = intercept - s`.
    Diagonal { intercept: i64, label: String },
    /// The line `n = level`.
    Horizontal { level: i64, label: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub points: Vec<Point>,
    pub overlays: Vec<Overlay>,
    pub s_range: (i64, i64),
    pub n_range: (i64, i64),
}

impl PointSet {
    /// Distinct `s` values that carry at least one point.
    pub fn populated_columns(&self) -> Vec<i64> {
        let mut cols: Vec<i64> = self.points.iter().map(|p| p.s).collect();
        cols.dedup();
        cols
    }
}

pub fn build_pointset(
    sg: &NumericalSemigroup,
    params: Option<&GenArithParams>,
    n_max: Option<i64>,
) -> PointSet {
    build_pointset_with(sg, params, n_max, Execution::default())
}

/// Overlays are attached only for symmetric semigroups. Matching eligible
/// generalized arithmetic parameters give the two witness lines
/// `n = F + d - s` and `n = ah + d`; otherwise there is one diagonal
/// `n = F + n_j - s` per minimal generator.
pub fn build_pointset_with(
    sg: &NumericalSemigroup,
    params: Option<&GenArithParams>,
    n_max: Option<i64>,
    exec: Execution,
) -> PointSet {
    let bound = n_max.unwrap_or_else(|| reducibility_ceiling(sg));
    let points: Vec<Point> = all_columns(sg, Some(bound), exec)
        .into_iter()
        .flat_map(|c| c.points.into_iter().map(move |n| Point { s: c.s, n }))
        .collect();

    let f = sg.frobenius();
    let mut overlays = Vec::new();
    if sg.is_symmetric() && f > 0 {
        let genarith = params.filter(|p| {
            p.is_prop_eligible() && params_describe(p, sg).unwrap_or(false)
        });
        match genarith.and_then(|p| p.base().ok().map(|b| (p, b))) {
            Some((p, base)) => {
                overlays.push(Overlay::Diagonal {
                    intercept: f + p.d,
                    label: format!("n = {} - s", f + p.d),
                });
                overlays.push(Overlay::Horizontal { level: base, label: format!("n = {base}") });
            }
            None => {
                for &g in sg.generators() {
                    overlays.push(Overlay::Diagonal {
                        intercept: f + g,
                        label: format!("n = {} - s", f + g),
                    });
                }
            }
        }
    }

    PointSet {
        generators: sg.generators().to_vec(),
        frobenius: f,
        points,
        overlays,
        s_range: (0, f.max(1) + 1),
        n_range: (0, bound.max(1) + 1),
    }
}

/// Header `s,n`, rows sorted by `(s, n)`, LF line endings.
pub fn emit_csv(ps: &PointSet) -> String {
    let mut rows = ps.points.clone();
    rows.sort();
    let mut out = String::from("s,n\n");
    for p in rows {
        let _ = writeln!(out, "{},{}", p.s, p.n);
    }
    out
}

pub fn emit_json(ps: &PointSet) -> String {
    let mut out = serde_json::to_string_pretty(ps).expect("point set serializes");
    out.push('\n');
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub marker_radius: f64,
    pub point_color: String,
    pub overlay_color: String,
    pub axis_color: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            width: 480.0,
            height: 420.0,
            margin: 48.0,
            marker_radius: 3.0,
            point_color: "#1f3a93".into(),
            overlay_color: "#d62728".into(),
            axis_color: "#333333".into(),
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Tick spacing from 1, 2, 5, 10, 20, 50, ... with at most ten intervals.
fn tick_step(span: i64) -> i64 {
    let mut step = 1;
    loop {
        for mult in [1, 2, 5] {
            if span / (step * mult) <= 10 {
                return step * mult;
            }
        }
        step *= 10;
    }
}

struct Frame<'a> {
    style: &'a SvgStyle,
    s_range: (i64, i64),
    n_range: (i64, i64),
}

impl Frame<'_> {
    fn x(&self, s: i64) -> f64 {
        let (lo, hi) = self.s_range;
        let w = self.style.width - 2.0 * self.style.margin;
        self.style.margin + w * (s - lo) as f64 / (hi - lo).max(1) as f64
    }

    fn y(&self, n: i64) -> f64 {
        let (lo, hi) = self.n_range;
        let h = self.style.height - 2.0 * self.style.margin;
        self.style.height - self.style.margin - h * (n - lo) as f64 / (hi - lo).max(1) as f64
    }
}

/// Clip `n = c - s` to the window; `None` when it misses entirely.
fn clip_diagonal(c: i64, (s0, s1): (i64, i64), (n0, n1): (i64, i64)) -> Option<((i64, i64), (i64, i64))> {
    let lo = s0.max(c - n1);
    let hi = s1.min(c - n0);
    (lo <= hi).then_some(((lo, c - lo), (hi, c - hi)))
}

/// Standalone SVG 1.1 document. Output depends only on `ps` and `style`.
pub fn emit_svg(ps: &PointSet, style: &SvgStyle) -> String {
    let frame = Frame { style, s_range: ps.s_range, n_range: ps.n_range };
    let (s0, s1) = ps.s_range;
    let (n0, n1) = ps.n_range;
    let axis = escape(&style.axis_color);
    let mut out = String::new();

    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="yes"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#,
        w = style.width,
        h = style.height
    );
    let gens: Vec<String> = ps.generators.iter().map(i64::to_string).collect();
    let _ = writeln!(
        out,
        r#"<title>irreducible (n,2) for &lt;{}&gt;</title>"#,
        gens.join(", ")
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{:.0}" height="{:.0}" fill="white"/>"#, style.width, style.height);

    // axes and ticks
    let _ = writeln!(out, r#"<g id="axes" stroke="{axis}" stroke-width="1" fill="none">"#);
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
        frame.x(s0), frame.y(n0), frame.x(s1), frame.y(n0)
    );
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
        frame.x(s0), frame.y(n0), frame.x(s0), frame.y(n1)
    );
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g id="ticks" fill="{axis}" font-family="sans-serif" font-size="10">"#
    );
    let step = tick_step(s1 - s0);
    for s in (s0..=s1).filter(|s| s % step == 0) {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{s}</text>"#,
            frame.x(s),
            frame.y(n0) + 14.0
        );
    }
    let step = tick_step(n1 - n0);
    for n in (n0..=n1).filter(|n| n % step == 0) {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{n}</text>"#,
            frame.x(s0) - 6.0,
            frame.y(n) + 3.5
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">s</text>"#,
        style.width / 2.0,
        style.height - 10.0
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{:.2}" text-anchor="middle">n</text>"#,
        style.height / 2.0
    );
    let _ = writeln!(out, "</g>");

    // overlays
    let _ = writeln!(
        out,
        r#"<g id="overlays" stroke="{}" stroke-width="1.5" fill="none">"#,
        escape(&style.overlay_color)
    );
    for o in &ps.overlays {
        let seg = match o {
            Overlay::Diagonal { intercept, .. } => clip_diagonal(*intercept, ps.s_range, ps.n_range),
            Overlay::Horizontal { level, .. } => {
                (n0..=n1).contains(level).then_some(((s0, *level), (s1, *level)))
            }
        };
        let label = match o {
            Overlay::Diagonal { label, .. } | Overlay::Horizontal { label, .. } => escape(label),
        };
        if let Some(((xa, ya), (xb, yb))) = seg {
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"><title>{label}</title></line>"#,
                frame.x(xa), frame.y(ya), frame.x(xb), frame.y(yb)
            );
        }
    }
    let _ = writeln!(out, "</g>");

    // points
    let _ = writeln!(out, r#"<g id="points" fill="{}" stroke="none">"#, escape(&style.point_color));
    let mut pts = ps.points.clone();
    pts.sort();
    for p in pts {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}"/>"#,
            frame.x(p.s),
            frame.y(p.n),
            style.marker_radius
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

/// Parse CSV produced by [`emit_csv`].
pub fn parse_csv(text: &str) -> Option<Vec<Point>> {
    let mut lines = text.lines();
    if lines.next()? != "s,n" {
        return None;
    }
    lines
        .map(|line| {
            let (s, n) = line.split_once(',')?;
            Some(Point { s: s.parse().ok()?, n: n.parse().ok()? })
        })
        .collect()
}
