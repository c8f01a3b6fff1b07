//! Exact distances and shortest-path enumeration by case analysis.
//!
//! Every shortest route between two points decomposes into at most one
//! planar approach per half-plane and at most two string traversals with one
//! full middle string; the finitely many gate-crossing patterns are
//! enumerated in closed form. A discretized-graph Dijkstra oracle lives in
//! [`crate::oracle`] for tests; nothing here searches numerically.

use crate::config::{MdConfig, TOL};
use crate::path::{dist2, Leg, PathRep, Region};
use crate::point::{connectable, PointRef};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Distance between two model points; isolated points are unreachable from
/// everything but themselves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Distance {
    Finite(f64),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<f64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn expect_finite(self) -> f64 {
        self.finite().expect("distance is unreachable")
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricError {
    #[error("no path joins {0} and {1}")]
    NoPath(String, String),
}

/// Where a point sits for routing purposes.
enum Site {
    /// In the closed left half-plane (gate P included), with coordinates.
    D1([f64; 2]),
    /// In the right half-plane with Q adjoined, with coordinates.
    D2([f64; 2]),
    /// Interior of string `id` at arclength `t` from P.
    Str(u8, f64),
    Iso,
}

fn site_of(p: &PointRef, cfg: &MdConfig) -> Site {
    match p {
        PointRef::Planar1 { x, y } => Site::D1([*x, *y]),
        PointRef::GateP => Site::D1([0.0, 0.0]),
        PointRef::Planar2 { x, y } => Site::D2([*x, *y]),
        PointRef::GateQ => Site::D2(cfg.gate_q_xy()),
        PointRef::OnString { id, t } => Site::Str(*id, *t),
        PointRef::Isolated(_) => Site::Iso,
    }
}

/// A candidate shortest route with its exact length and path realization.
struct Route {
    length: f64,
    /// String ids in traversal order, the sort key for canonical output.
    key: Vec<u8>,
    legs: Vec<Leg>,
}

fn planar_leg(region: Region, from: [f64; 2], to: [f64; 2]) -> Option<Leg> {
    if dist2(&from, &to) <= TOL {
        None
    } else {
        Some(Leg::Planar { region, from, to })
    }
}

fn string_leg(id: u8, from_t: f64, to_t: f64) -> Option<Leg> {
    if (from_t - to_t).abs() <= TOL {
        None
    } else {
        Some(Leg::Str { id, from_t, to_t })
    }
}

fn route(length: f64, key: Vec<u8>, legs: Vec<Option<Leg>>) -> Route {
    Route {
        length,
        key,
        legs: legs.into_iter().flatten().collect(),
    }
}

/// All candidate minimal routes between two connectable, distinct points.
fn candidate_routes(a: &PointRef, b: &PointRef, cfg: &MdConfig) -> Vec<Route> {
    let p_xy = cfg.gate_p_xy();
    let q_xy = cfg.gate_q_xy();
    let all = [1u8, 2, 3];
    let mut out = Vec::new();
    match (site_of(a, cfg), site_of(b, cfg)) {
        (Site::Iso, _) | (_, Site::Iso) => {}
        (Site::D1(u), Site::D1(v)) => {
            out.push(route(
                dist2(&u, &v),
                vec![],
                vec![planar_leg(Region::Delta1, u, v)],
            ));
        }
        (Site::D2(u), Site::D2(v)) => {
            out.push(route(
                dist2(&u, &v),
                vec![],
                vec![planar_leg(Region::Delta2, u, v)],
            ));
        }
        (Site::D1(u), Site::D2(v)) => {
            let (ap, qb) = (dist2(&u, &p_xy), dist2(&v, &q_xy));
            for k in all {
                let lk = cfg.string_len(k);
                out.push(route(
                    ap + lk + qb,
                    vec![k],
                    vec![
                        planar_leg(Region::Delta1, u, p_xy),
                        string_leg(k, 0.0, lk),
                        planar_leg(Region::Delta2, q_xy, v),
                    ],
                ));
            }
        }
        (Site::D2(u), Site::D1(v)) => {
            let (aq, pb) = (dist2(&u, &q_xy), dist2(&v, &p_xy));
            for k in all {
                let lk = cfg.string_len(k);
                out.push(route(
                    aq + lk + pb,
                    vec![k],
                    vec![
                        planar_leg(Region::Delta2, u, q_xy),
                        string_leg(k, lk, 0.0),
                        planar_leg(Region::Delta1, p_xy, v),
                    ],
                ));
            }
        }
        (Site::D1(u), Site::Str(i, t)) => {
            let ap = dist2(&u, &p_xy);
            let li = cfg.string_len(i);
            // Straight in through P.
            out.push(route(
                ap + t,
                vec![i],
                vec![planar_leg(Region::Delta1, u, p_xy), string_leg(i, 0.0, t)],
            ));
            // Around through a middle string and Q.
            for j in all.iter().filter(|j| **j != i) {
                let lj = cfg.string_len(*j);
                out.push(route(
                    ap + lj + (li - t),
                    vec![*j, i],
                    vec![
                        planar_leg(Region::Delta1, u, p_xy),
                        string_leg(*j, 0.0, lj),
                        string_leg(i, li, t),
                    ],
                ));
            }
        }
        (Site::Str(_, _), Site::D1(_)) => {
            return reversed_routes(b, a, cfg);
        }
        (Site::D2(u), Site::Str(i, t)) => {
            let aq = dist2(&u, &q_xy);
            let li = cfg.string_len(i);
            out.push(route(
                aq + (li - t),
                vec![i],
                vec![planar_leg(Region::Delta2, u, q_xy), string_leg(i, li, t)],
            ));
            for j in all.iter().filter(|j| **j != i) {
                let lj = cfg.string_len(*j);
                out.push(route(
                    aq + lj + t,
                    vec![*j, i],
                    vec![
                        planar_leg(Region::Delta2, u, q_xy),
                        string_leg(*j, lj, 0.0),
                        string_leg(i, 0.0, t),
                    ],
                ));
            }
        }
        (Site::Str(_, _), Site::D2(_)) => {
            return reversed_routes(b, a, cfg);
        }
        (Site::Str(i, ta), Site::Str(j, tb)) if i == j => {
            let li = cfg.string_len(i);
            out.push(route(
                (ta - tb).abs(),
                vec![i],
                vec![string_leg(i, ta, tb)],
            ));
            for k in all.iter().filter(|k| **k != i) {
                let lk = cfg.string_len(*k);
                // Out through P, back in through Q.
                out.push(route(
                    ta + lk + (li - tb),
                    vec![i, *k],
                    vec![
                        string_leg(i, ta, 0.0),
                        string_leg(*k, 0.0, lk),
                        string_leg(i, li, tb),
                    ],
                ));
                // Out through Q, back in through P.
                out.push(route(
                    (li - ta) + lk + tb,
                    vec![i, *k],
                    vec![
                        string_leg(i, ta, li),
                        string_leg(*k, lk, 0.0),
                        string_leg(i, 0.0, tb),
                    ],
                ));
            }
        }
        (Site::Str(i, ta), Site::Str(j, tb)) => {
            let (li, lj) = (cfg.string_len(i), cfg.string_len(j));
            out.push(route(
                ta + tb,
                vec![i, j],
                vec![string_leg(i, ta, 0.0), string_leg(j, 0.0, tb)],
            ));
            out.push(route(
                (li - ta) + (lj - tb),
                vec![i, j],
                vec![string_leg(i, ta, li), string_leg(j, lj, tb)],
            ));
            if let Some(k) = all.iter().find(|k| **k != i && **k != j) {
                let lk = cfg.string_len(*k);
                out.push(route(
                    ta + lk + (lj - tb),
                    vec![i, *k, j],
                    vec![
                        string_leg(i, ta, 0.0),
                        string_leg(*k, 0.0, lk),
                        string_leg(j, lj, tb),
                    ],
                ));
                out.push(route(
                    (li - ta) + lk + tb,
                    vec![i, *k, j],
                    vec![
                        string_leg(i, ta, li),
                        string_leg(*k, lk, 0.0),
                        string_leg(j, 0.0, tb),
                    ],
                ));
            }
        }
    }
    out
}

fn reversed_routes(a: &PointRef, b: &PointRef, cfg: &MdConfig) -> Vec<Route> {
    candidate_routes(a, b, cfg)
        .into_iter()
        .map(|r| {
            let path = PathRep::Chain {
                legs: r.legs,
                open_start: false,
                open_finish: false,
            };
            let rev = path.reverse();
            let mut key: Vec<u8> = rev.string_sequence();
            if key.is_empty() {
                key = r.key;
            }
            Route {
                length: r.length,
                key,
                legs: rev.legs().to_vec(),
            }
        })
        .collect()
}

/// Exact distance between two points.
pub fn distance(a: &PointRef, b: &PointRef, cfg: &MdConfig) -> Distance {
    if a.approx_eq(b) {
        return Distance::Finite(0.0);
    }
    if !connectable(a, b) {
        return Distance::Unreachable;
    }
    let best = candidate_routes(a, b, cfg)
        .iter()
        .map(|r| r.length)
        .fold(f64::INFINITY, f64::min);
    Distance::Finite(best)
}

/// All distinct minimal-length paths from `a` to `b`, ordered by their
/// string-id traversal sequence (ascending).
pub fn geodesics_between(a: &PointRef, b: &PointRef, cfg: &MdConfig) -> Result<Vec<PathRep>, MetricError> {
    if !connectable(a, b) {
        return Err(MetricError::NoPath(a.to_string(), b.to_string()));
    }
    if a.approx_eq(b) {
        return Ok(vec![PathRep::singleton(a.clone())]);
    }
    let mut routes = candidate_routes(a, b, cfg);
    let best = routes.iter().map(|r| r.length).fold(f64::INFINITY, f64::min);
    routes.retain(|r| r.length <= best + TOL);
    routes.sort_by(|x, y| x.key.cmp(&y.key));
    routes.dedup_by(|x, y| x.key == y.key && (x.length - y.length).abs() <= TOL && x.legs == y.legs);
    routes
        .into_iter()
        .map(|r| {
            PathRep::from_legs(r.legs, cfg)
                .map_err(|e| MetricError::NoPath(a.to_string(), e.to_string()))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Circles.
// ---------------------------------------------------------------------------

/// One component of a circle's exact description. Angles are degrees,
/// counterclockwise from the positive x axis; an arc spans `start_deg` to
/// `end_deg` (start < end; a full circle spans 0 to 360). `closed_*` tells
/// whether the extreme point itself belongs to the model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CircleComponent {
    PlanarArc {
        region: Region,
        center: [f64; 2],
        radius: f64,
        start_deg: f64,
        end_deg: f64,
        closed_start: bool,
        closed_end: bool,
    },
    StringPoints {
        id: u8,
        ts: Vec<f64>,
    },
    Gate {
        point: PointRef,
    },
}

/// The exact locus of points at a fixed distance from a center.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleDescription {
    pub center: PointRef,
    pub radius: f64,
    pub components: Vec<CircleComponent>,
}

impl CircleDescription {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Sampled points of every component, for verification.
    pub fn sample_points(&self, per_arc: usize, cfg: &MdConfig) -> Vec<PointRef> {
        let mut out = Vec::new();
        for c in &self.components {
            match c {
                CircleComponent::PlanarArc {
                    region,
                    center,
                    radius,
                    start_deg,
                    end_deg,
                    closed_start,
                    closed_end,
                } => {
                    let n = per_arc.max(2);
                    for k in 0..=n {
                        let f = k as f64 / n as f64;
                        // Nudge open ends inward.
                        let f = match (k, closed_start, closed_end) {
                            (0, false, _) => 1e-6,
                            (x, _, false) if x == n => 1.0 - 1e-6,
                            _ => f,
                        };
                        let deg = start_deg + (end_deg - start_deg) * f;
                        let rad = deg.to_radians();
                        let xy = [center[0] + radius * rad.cos(), center[1] + radius * rad.sin()];
                        if let Ok(p) = crate::path::planar_point(*region, xy, cfg) {
                            out.push(p);
                        }
                    }
                }
                CircleComponent::StringPoints { id, ts } => {
                    for t in ts {
                        if let Ok(p) = crate::point::make_point(crate::point::RawPoint::OnString(*id, *t), cfg) {
                            out.push(p);
                        }
                    }
                }
                CircleComponent::Gate { point } => out.push(point.clone()),
            }
        }
        out
    }
}

/// Clips the circle about `center` with `radius` to a half-plane region and
/// emits the surviving arc, if any.
fn clipped_arc(region: Region, center: [f64; 2], radius: f64, cfg: &MdConfig) -> Option<CircleComponent> {
    let g = cfg.gap_width;
    if radius <= TOL {
        return None;
    }
    match region {
        Region::Delta1 => {
            // Need x <= 0: cos(theta) <= -cx / r.
            let u = -center[0] / radius;
            if u >= 1.0 {
                Some(CircleComponent::PlanarArc {
                    region,
                    center,
                    radius,
                    start_deg: 0.0,
                    end_deg: 360.0,
                    closed_start: true,
                    closed_end: true,
                })
            } else if u <= -1.0 {
                None
            } else {
                let a = u.acos().to_degrees();
                Some(CircleComponent::PlanarArc {
                    region,
                    center,
                    radius,
                    start_deg: a,
                    end_deg: 360.0 - a,
                    closed_start: true,
                    closed_end: true,
                })
            }
        }
        Region::Delta2 => {
            // Need x > g: cos(theta) > (g - cx) / r, an open condition.
            let u = (g - center[0]) / radius;
            if u >= 1.0 {
                None
            } else if u <= -1.0 {
                Some(CircleComponent::PlanarArc {
                    region,
                    center,
                    radius,
                    start_deg: 0.0,
                    end_deg: 360.0,
                    closed_start: true,
                    closed_end: true,
                })
            } else {
                let a = u.acos().to_degrees();
                Some(CircleComponent::PlanarArc {
                    region,
                    center,
                    radius,
                    start_deg: -a,
                    end_deg: a,
                    closed_start: false,
                    closed_end: false,
                })
            }
        }
    }
}

/// The exact circle of the given radius about a center point.
///
/// Empty when the center is isolated. Planar components are circular arcs
/// about the center itself (same half-plane) or about the far gate; string
/// components are the finitely many arclength solutions of the piecewise
/// linear distance equations, each verified against the distance function.
pub fn circle(center: &PointRef, radius: f64, cfg: &MdConfig) -> CircleDescription {
    let mut components = Vec::new();
    if center.is_isolated() || radius <= TOL {
        return CircleDescription {
            center: center.clone(),
            radius,
            components,
        };
    }
    let p_xy = cfg.gate_p_xy();
    let q_xy = cfg.gate_q_xy();
    let d_p = distance(center, &PointRef::GateP, cfg).expect_finite();
    let d_q = distance(center, &PointRef::GateQ, cfg).expect_finite();

    // Planar arcs in delta1.
    match site_of(center, cfg) {
        Site::D1(c) => {
            if let Some(a) = clipped_arc(Region::Delta1, c, radius, cfg) {
                components.push(a);
            }
        }
        _ => {
            if radius - d_p > TOL {
                if let Some(a) = clipped_arc(Region::Delta1, p_xy, radius - d_p, cfg) {
                    components.push(a);
                }
            }
        }
    }
    // Planar arcs in delta2.
    match site_of(center, cfg) {
        Site::D2(c) => {
            if let Some(a) = clipped_arc(Region::Delta2, c, radius, cfg) {
                components.push(a);
            }
        }
        _ => {
            if radius - d_q > TOL {
                if let Some(a) = clipped_arc(Region::Delta2, q_xy, radius - d_q, cfg) {
                    components.push(a);
                }
            }
        }
    }

    // String points: solve each affine piece of the distance restricted to a
    // string and keep verified interior solutions.
    for id in 1..=3u8 {
        let li = cfg.string_len(id);
        let mut candidates: Vec<f64> = Vec::new();
        match site_of(center, cfg) {
            Site::Iso => {}
            Site::Str(ci, ct) if ci == id => {
                candidates.push(ct - radius);
                candidates.push(ct + radius);
                let m = cfg.min_other_len(id);
                // ct + m + (li - t) = r and (li - ct) + m + t = r.
                candidates.push(ct + m + li - radius);
                candidates.push(radius - (li - ct) - m);
            }
            _ => {
                // Routes through P: d_p + t = r; through the far side:
                // d_p + m_other + (li - t) = r, and the mirrored pair via Q.
                let m = cfg.min_other_len(id);
                candidates.push(radius - d_p);
                candidates.push(d_p + m + li - radius);
                candidates.push(li - (radius - d_q));
                candidates.push(radius - d_q - m);
            }
        }
        let mut ts: Vec<f64> = candidates
            .into_iter()
            .filter(|t| *t > TOL && *t < li - TOL)
            .filter(|t| {
                let p = PointRef::OnString { id, t: *t };
                match distance(center, &p, cfg) {
                    Distance::Finite(d) => (d - radius).abs() <= 1e-7,
                    Distance::Unreachable => false,
                }
            })
            .collect();
        ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ts.dedup_by(|a, b| (*a - *b).abs() <= TOL);
        if !ts.is_empty() {
            components.push(CircleComponent::StringPoints { id, ts });
        }
    }

    // Gates at exactly the radius.
    if (d_p - radius).abs() <= TOL && !center.approx_eq(&PointRef::GateP) {
        components.push(CircleComponent::Gate { point: PointRef::GateP });
    }
    if (d_q - radius).abs() <= TOL && !center.approx_eq(&PointRef::GateQ) {
        components.push(CircleComponent::Gate { point: PointRef::GateQ });
    }

    CircleDescription {
        center: center.clone(),
        radius,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{make_point, IsolatedId, RawPoint};

    fn cfg() -> MdConfig {
        MdConfig::default_config()
    }

    fn pt(raw: RawPoint) -> PointRef {
        make_point(raw, &cfg()).unwrap()
    }

    #[test]
    fn cross_hole_distance() {
        // |aP| + L1 + |Qb| = 3 + 4 + 4 = 11.
        let c = cfg();
        let a = pt(RawPoint::Planar1(-3.0, 0.0));
        let b = pt(RawPoint::Planar2(c.gap_width + 4.0, 0.0));
        assert!((distance(&a, &b, &c).expect_finite() - 11.0).abs() < 1e-12);
    }

    #[test]
    fn identity_and_unreachable() {
        let c = cfg();
        let a = pt(RawPoint::Planar1(-3.0, 2.0));
        assert_eq!(distance(&a, &a, &c), Distance::Finite(0.0));
        let j = PointRef::Isolated(IsolatedId::J);
        assert_eq!(distance(&j, &PointRef::GateP, &c), Distance::Unreachable);
        assert_eq!(distance(&j, &j, &c), Distance::Finite(0.0));
    }

    #[test]
    fn gate_to_gate_has_two_geodesics() {
        let c = cfg();
        let gs = geodesics_between(&PointRef::GateP, &PointRef::GateQ, &c).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].string_sequence(), vec![1]);
        assert_eq!(gs[1].string_sequence(), vec![2]);
        for g in &gs {
            assert!((g.length() - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn generic_cross_pair_has_two_geodesics() {
        let c = cfg();
        let a = pt(RawPoint::Planar1(-1.0, 0.0));
        let b = pt(RawPoint::Planar2(c.gap_width + 1.0, 0.0));
        let gs = geodesics_between(&a, &b, &c).unwrap();
        assert_eq!(gs.len(), 2);
        assert!((gs[0].length() - gs[1].length()).abs() < 1e-12);
        for g in &gs {
            assert!(crate::path::is_geodesic(g, &c).unwrap());
        }
    }

    #[test]
    fn within_half_plane_single_geodesic() {
        let c = cfg();
        let a = pt(RawPoint::Planar1(-1.0, 1.0));
        let b = pt(RawPoint::Planar1(-5.0, -2.0));
        let gs = geodesics_between(&a, &b, &c).unwrap();
        assert_eq!(gs.len(), 1);
        assert!((gs[0].length() - distance(&a, &b, &c).expect_finite()).abs() < 1e-12);
    }

    #[test]
    fn string_to_string_distance() {
        let c = cfg();
        let u = pt(RawPoint::OnString(1, 1.0));
        let v = pt(RawPoint::OnString(2, 1.0));
        // Via P: 1 + 1 = 2.
        assert!((distance(&u, &v, &c).expect_finite() - 2.0).abs() < 1e-12);
        let u = pt(RawPoint::OnString(1, 3.5));
        let v = pt(RawPoint::OnString(2, 3.5));
        // Via Q: 0.5 + 0.5 = 1.
        assert!((distance(&u, &v, &c).expect_finite() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn same_string_around_route() {
        // On s3, far apart: around through a short string beats the arc.
        let c = cfg();
        let u = pt(RawPoint::OnString(3, 0.5));
        let v = pt(RawPoint::OnString(3, 8.5));
        // Direct 8; around: 0.5 + 4 + 0.5 = 5, tied through either short string.
        assert!((distance(&u, &v, &c).expect_finite() - 5.0).abs() < 1e-12);
        let gs = geodesics_between(&u, &v, &c).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].string_sequence(), vec![3, 1]);
        assert_eq!(gs[1].string_sequence(), vec![3, 2]);
    }

    #[test]
    fn distance_symmetry_spot() {
        let c = cfg();
        let pts = [
            pt(RawPoint::Planar1(-2.0, 3.0)),
            pt(RawPoint::Planar2(c.gap_width + 0.5, -1.0)),
            pt(RawPoint::OnString(1, 1.5)),
            pt(RawPoint::OnString(3, 7.0)),
            PointRef::GateP,
            PointRef::GateQ,
        ];
        for a in &pts {
            for b in &pts {
                let d1 = distance(a, b, &c).expect_finite();
                let d2 = distance(b, a, &c).expect_finite();
                assert!((d1 - d2).abs() < 1e-12, "{a} {b}");
            }
        }
    }

    #[test]
    fn circle_about_gate_q() {
        // The worked circle: center Q, radius 6 with defaults. A delta2 arc
        // of radius 6 about Q, a delta1 arc of radius 2 about P, and the two
        // s3 points at t = 3 and t = 2 from P.
        let c = cfg();
        let desc = circle(&PointRef::GateQ, 6.0, &c);
        let mut d2_arcs = 0;
        let mut d1_arcs = 0;
        let mut s3: Vec<f64> = Vec::new();
        for comp in &desc.components {
            match comp {
                CircleComponent::PlanarArc { region: Region::Delta2, radius, .. } => {
                    d2_arcs += 1;
                    assert!((radius - 6.0).abs() < 1e-12);
                }
                CircleComponent::PlanarArc { region: Region::Delta1, radius, center, .. } => {
                    d1_arcs += 1;
                    assert!((radius - 2.0).abs() < 1e-12);
                    assert_eq!(*center, [0.0, 0.0]);
                }
                CircleComponent::StringPoints { id: 3, ts } => s3 = ts.clone(),
                other => panic!("unexpected component {other:?}"),
            }
        }
        assert_eq!((d1_arcs, d2_arcs), (1, 1));
        assert_eq!(s3.len(), 2);
        assert!((s3[0] - 2.0).abs() < 1e-9 && (s3[1] - 3.0).abs() < 1e-9);
        // Every sampled point is at distance 6 from Q.
        for p in desc.sample_points(16, &c) {
            let d = distance(&PointRef::GateQ, &p, &c).expect_finite();
            assert!((d - 6.0).abs() < 1e-6, "{p} at {d}");
        }
    }

    #[test]
    fn circle_about_isolated_point_is_empty() {
        let c = cfg();
        let desc = circle(&PointRef::Isolated(IsolatedId::I), 1.0, &c);
        assert!(desc.is_empty());
    }

    #[test]
    fn circle_far_in_delta1_is_full() {
        let c = cfg();
        let center = pt(RawPoint::Planar1(-5.0, 0.0));
        let desc = circle(&center, 1.0, &c);
        assert_eq!(desc.components.len(), 1);
        match &desc.components[0] {
            CircleComponent::PlanarArc { start_deg, end_deg, .. } => {
                assert_eq!((*start_deg, *end_deg), (0.0, 360.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
