//! Deterministic SVG rendering of the model and overlays.
//!
//! Strings have no defined planar embedding, so they are drawn as synthetic
//! cubic curves whose end directions follow the projections of the
//! configured endpoint tangents; the output embeds a comment saying the
//! string shapes are schematic. All numbers are printed with fixed precision
//! so identical inputs produce identical bytes.

use crate::config::MdConfig;
use crate::metric::{CircleComponent, CircleDescription};
use crate::path::{Leg, PathRep};
use std::fmt::Write as _;

/// What to draw on top of the base model figure.
pub enum Overlay<'a> {
    None,
    Paths(&'a [PathRep]),
    Circle(&'a CircleDescription),
}

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
    scale: f64,
}

impl Frame {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        // Flip y so the model's +y points up on screen; clamp to the frame
        // so horizon rays stay finite.
        let x = x.clamp(self.x_min, self.x_max);
        let y = y.clamp(self.y_min, self.y_max);
        ((x - self.x_min) * self.scale, (self.y_max - y) * self.scale)
    }
}

fn f3(v: f64) -> String {
    // Avoid the negative-zero artifact so byte output is stable.
    let v = if v.abs() < 0.0005 { 0.0 } else { v };
    format!("{v:.3}")
}

/// Sampled points of the synthetic cubic used to draw string `id`, from
/// parameter `t0` to `t1` (arclength fractions of the curve).
fn string_curve_points(cfg: &MdConfig, id: u8, t0: f64, t1: f64, samples: usize) -> Vec<[f64; 2]> {
    let p = cfg.gate_p_xy();
    let q = cfg.gate_q_xy();
    let tp = cfg.string_tangent(id, true);
    let tq = cfg.string_tangent(id, false);
    let bulge = cfg.string_len(id) * 0.35;
    // In-plane projections of the endpoint tangents; fall back to a bulge
    // that separates the strings when a projection vanishes.
    let fallback = [0.0, bulge * (id as f64 - 2.0)];
    let proj = |t: [f64; 3]| {
        let n = (t[0] * t[0] + t[1] * t[1]).sqrt();
        if n < 1e-9 {
            fallback
        } else {
            [t[0] / n * bulge, t[1] / n * bulge + fallback[1] * 0.5]
        }
    };
    let c1v = proj(tp);
    let c2v = proj(tq);
    let c1 = [p[0] + c1v[0], p[1] + c1v[1]];
    let c2 = [q[0] + c2v[0], q[1] + c2v[1]];
    let li = cfg.string_len(id);
    let (u0, u1) = (t0 / li, t1 / li);
    (0..=samples)
        .map(|k| {
            let u = u0 + (u1 - u0) * (k as f64 / samples as f64);
            let w = 1.0 - u;
            [
                w * w * w * p[0] + 3.0 * w * w * u * c1[0] + 3.0 * w * u * u * c2[0] + u * u * u * q[0],
                w * w * w * p[1] + 3.0 * w * w * u * c1[1] + 3.0 * w * u * u * c2[1] + u * u * u * q[1],
            ]
        })
        .collect()
}

fn polyline(out: &mut String, frame: &Frame, pts: &[[f64; 2]], style: &str) {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p[0], p[1]);
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{} {} ", f3(x), f3(y));
    }
    let _ = writeln!(out, r##"  <path d="{}" {style}/>"##, d.trim_end());
}

fn draw_path(out: &mut String, frame: &Frame, cfg: &MdConfig, path: &PathRep, style: &str) {
    for leg in path.legs() {
        match leg {
            Leg::Planar { from, to, .. } => {
                polyline(out, frame, &[*from, *to], style);
            }
            Leg::Str { id, from_t, to_t } => {
                let pts = string_curve_points(cfg, *id, from_t.min(*to_t), from_t.max(*to_t), 24);
                polyline(out, frame, &pts, style);
            }
        }
    }
}

/// Renders the model with an optional overlay as a complete SVG document.
pub fn render(cfg: &MdConfig, overlay: Overlay<'_>) -> String {
    let g = cfg.gap_width;
    let span = (cfg.string_len(3) * 0.8).max(8.0);
    let frame = Frame {
        x_min: -span,
        x_max: g + span,
        y_min: -span * 0.75,
        y_max: span * 0.75,
        scale: 40.0,
    };
    let w = (frame.x_max - frame.x_min) * frame.scale;
    let h = (frame.y_max - frame.y_min) * frame.scale;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"##,
        f3(w),
        f3(h),
        f3(w),
        f3(h)
    );
    out.push_str("  <!-- String arcs are schematic: interiors have no planar embedding; only lengths and gate tangents are meaningful. -->\n");

    // Half-planes and the hole band.
    let (x0, y0) = frame.map(frame.x_min, frame.y_max);
    let (x1, _) = frame.map(0.0, 0.0);
    let (x2, _) = frame.map(g, 0.0);
    let (x3, y3) = frame.map(frame.x_max, frame.y_min);
    let _ = writeln!(
        out,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#dce9f5"/>"##,
        f3(x0),
        f3(y0),
        f3(x1 - x0),
        f3(y3 - y0)
    );
    let _ = writeln!(
        out,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#e7f5dc"/>"##,
        f3(x2),
        f3(y0),
        f3(x3 - x2),
        f3(y3 - y0)
    );
    let _ = writeln!(
        out,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#f7f7f7"/>"##,
        f3(x1),
        f3(y0),
        f3(x2 - x1),
        f3(y3 - y0)
    );
    // Frontiers: f1 belongs to the model, f2 does not (dashed).
    let _ = writeln!(
        out,
        r##"  <line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#33557f" stroke-width="2"/>"##,
        f3(y0),
        f3(y3),
        x = f3(x1)
    );
    let _ = writeln!(
        out,
        r##"  <line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#557f33" stroke-width="2" stroke-dasharray="6 4"/>"##,
        f3(y0),
        f3(y3),
        x = f3(x2)
    );

    // Strings.
    for id in 1..=3u8 {
        let pts = string_curve_points(cfg, id, 0.0, cfg.string_len(id), 32);
        polyline(
            &mut out,
            &frame,
            &pts,
            r##"fill="none" stroke="#aa6622" stroke-width="1.5""##,
        );
    }

    // Gates.
    for (xy, label) in [(cfg.gate_p_xy(), "P"), (cfg.gate_q_xy(), "Q")] {
        let (cx, cy) = frame.map(xy[0], xy[1]);
        let _ = writeln!(
            out,
            r##"  <circle cx="{}" cy="{}" r="4" fill="#222222"/>"##,
            f3(cx),
            f3(cy)
        );
        let _ = writeln!(
            out,
            r##"  <text x="{}" y="{}" font-size="14" font-family="monospace">{label}</text>"##,
            f3(cx + 6.0),
            f3(cy - 6.0)
        );
    }

    // Isolated points as crosses, drawn schematically inside the hole band.
    for (i, label) in ["I", "J", "K"].iter().enumerate() {
        let (cx, cy) = frame.map(g / 2.0, frame.y_max * (0.75 - 0.25 * i as f64));
        let s = 5.0;
        let _ = writeln!(
            out,
            r##"  <path d="M{} {} L{} {} M{} {} L{} {}" stroke="#aa2222" stroke-width="2"/>"##,
            f3(cx - s),
            f3(cy - s),
            f3(cx + s),
            f3(cy + s),
            f3(cx - s),
            f3(cy + s),
            f3(cx + s),
            f3(cy - s)
        );
        let _ = writeln!(
            out,
            r##"  <text x="{}" y="{}" font-size="12" font-family="monospace">{label}</text>"##,
            f3(cx + 7.0),
            f3(cy + 4.0)
        );
    }

    match overlay {
        Overlay::None => {}
        Overlay::Paths(paths) => {
            for p in paths {
                draw_path(
                    &mut out,
                    &frame,
                    cfg,
                    p,
                    r##"fill="none" stroke="#cc0077" stroke-width="2.5""##,
                );
            }
        }
        Overlay::Circle(desc) => {
            for comp in &desc.components {
                match comp {
                    CircleComponent::PlanarArc {
                        center,
                        radius,
                        start_deg,
                        end_deg,
                        ..
                    } => {
                        let n = 64;
                        let pts: Vec<[f64; 2]> = (0..=n)
                            .map(|k| {
                                let d = start_deg + (end_deg - start_deg) * k as f64 / n as f64;
                                let r = d.to_radians();
                                [center[0] + radius * r.cos(), center[1] + radius * r.sin()]
                            })
                            .collect();
                        polyline(
                            &mut out,
                            &frame,
                            &pts,
                            r##"fill="none" stroke="#cc0077" stroke-width="2""##,
                        );
                    }
                    CircleComponent::StringPoints { id, ts } => {
                        for t in ts {
                            let pts = string_curve_points(cfg, *id, *t, *t, 1);
                            let (cx, cy) = frame.map(pts[0][0], pts[0][1]);
                            let _ = writeln!(
                                out,
                                r##"  <circle cx="{}" cy="{}" r="4" fill="#cc0077"/>"##,
                                f3(cx),
                                f3(cy)
                            );
                        }
                    }
                    CircleComponent::Gate { point } => {
                        let xy = if *point == crate::point::PointRef::GateP {
                            cfg.gate_p_xy()
                        } else {
                            cfg.gate_q_xy()
                        };
                        let (cx, cy) = frame.map(xy[0], xy[1]);
                        let _ = writeln!(
                            out,
                            r##"  <circle cx="{}" cy="{}" r="5" fill="none" stroke="#cc0077" stroke-width="2"/>"##,
                            f3(cx),
                            f3(cy)
                        );
                    }
                }
            }
        }
    }

    out.push_str("</svg>\n");
    out
}
